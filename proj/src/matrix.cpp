#include "nilpair/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace nilpair {

JordanType::JordanType(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw ShapeError("Jordan type must have at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw ShapeError("Jordan type parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ShapeError("Jordan type parts must be non-increasing");
    }
}

std::size_t JordanType::order() const {
    std::size_t total = 0;
    for (std::size_t part : parts_) total += part;
    return total;
}

std::string JordanType::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

DenseMatrix::DenseMatrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(spec)) {}

DenseMatrix DenseMatrix::identity(const FieldSpec& spec, std::size_t n) {
    DenseMatrix m(spec, n, n);
    Scalar one = Scalar::one(spec);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, one);
    return m;
}

DenseMatrix DenseMatrix::jordan_block(const FieldSpec& spec, std::size_t k) {
    DenseMatrix m(spec, k, k);
    Scalar one = Scalar::one(spec);
    for (std::size_t i = 0; i + 1 < k; ++i) m.set(i, i + 1, one);
    return m;
}

DenseMatrix DenseMatrix::jordan_matrix(const FieldSpec& spec, const JordanType& type) {
    std::size_t n = type.order();
    DenseMatrix m(spec, n, n);
    Scalar one = Scalar::one(spec);
    std::size_t offset = 0;
    for (std::size_t part : type.parts()) {
        for (std::size_t i = 0; i + 1 < part; ++i) m.set(offset + i, offset + i + 1, one);
        offset += part;
    }
    return m;
}

const Scalar& DenseMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
    return entries_[i * cols_ + j];
}

void DenseMatrix::set(std::size_t i, std::size_t j, const Scalar& v) {
    if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
    if (v.field() != spec_)
        throw FieldMismatchError("entry over " + v.field().str() + " in a matrix over " + spec_.str());
    entries_[i * cols_ + j] = v;
}

void DenseMatrix::require_same_shape(const DenseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ShapeError("matrix shape mismatch");
}

void DenseMatrix::require_same_field(const DenseMatrix& rhs) const {
    if (spec_ != rhs.spec_)
        throw FieldMismatchError("matrices over " + spec_.str() + " and " + rhs.spec_.str() +
                                 " cannot be combined");
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
    require_same_field(rhs);
    if (cols_ != rhs.rows_) throw ShapeError("matrix product shape mismatch");
    DenseMatrix out(spec_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = entries_[i * cols_ + k];
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Scalar& bkj = rhs.entries_[k * rhs.cols_ + j];
                if (bkj.is_zero()) continue;
                out.entries_[i * rhs.cols_ + j] += aik * bkj;
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& rhs) const {
    require_same_field(rhs);
    require_same_shape(rhs);
    DenseMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& rhs) const {
    require_same_field(rhs);
    require_same_shape(rhs);
    DenseMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

bool DenseMatrix::operator==(const DenseMatrix& rhs) const {
    if (spec_ != rhs.spec_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    return entries_ == rhs.entries_;
}

DenseMatrix DenseMatrix::pow(std::size_t k) const {
    if (!is_square()) throw ShapeError("matrix power of a non-square matrix");
    DenseMatrix result = identity(spec_, rows_);
    DenseMatrix base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

bool DenseMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool DenseMatrix::is_identity() const {
    if (!is_square()) return false;
    return *this == identity(spec_, rows_);
}

namespace {

// --- rank / inverse over GF(p): plain Gauss-Jordan on residues ---

std::size_t rank_mod_p(const DenseMatrix& a) {
    std::size_t rows = a.rows(), cols = a.cols();
    std::uint64_t p = a.field().modulus();
    std::vector<std::uint64_t> m(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i * cols + j] = a.at(i, j).residue();

    std::size_t piv = 0;
    for (std::size_t col = 0; col < cols && piv < rows; ++col) {
        std::size_t sel = piv;
        while (sel < rows && m[sel * cols + col] == 0) ++sel;
        if (sel == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[sel * cols + j]);
        std::uint64_t inv =
            Scalar::of_int(static_cast<long>(m[piv * cols + col]), a.field()).inverse().residue();
        for (std::size_t j = col; j < cols; ++j) m[piv * cols + j] = (m[piv * cols + j] * inv) % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == piv) continue;
            std::uint64_t f = m[i * cols + col];
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                m[i * cols + j] = (m[i * cols + j] + (p - f) * m[piv * cols + j]) % p;
        }
        ++piv;
    }
    return piv;
}

// --- rank over Q: fraction-free (Bareiss) forward elimination on an
// integer-scaled copy, with exact pivoting and column skipping ---

std::vector<mpz_class> integer_scaled(const DenseMatrix& a, std::size_t row_len) {
    std::size_t rows = a.rows(), cols = a.cols();
    std::vector<mpz_class> m(rows * row_len);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class lcm_den(1);
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class den = a.at(i, j).rational().get_den();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const mpq_class& q = a.at(i, j).rational();
            m[i * row_len + j] = q.get_num() * (lcm_den / q.get_den());
        }
    }
    return m;
}

std::size_t rank_rational(const DenseMatrix& a) {
    std::size_t rows = a.rows(), cols = a.cols();
    std::vector<mpz_class> m = integer_scaled(a, cols);

    mpz_class prev(1);
    std::size_t piv = 0;
    for (std::size_t col = 0; col < cols && piv < rows; ++col) {
        std::size_t sel = piv;
        while (sel < rows && m[sel * cols + col] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != piv)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[sel * cols + j]);
        const mpz_class pivot = m[piv * cols + col];
        for (std::size_t i = piv + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = m[i * cols + j] * pivot - m[i * cols + col] * m[piv * cols + j];
                mpz_divexact(m[i * cols + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i * cols + col] = 0;
        }
        prev = pivot;
        ++piv;
    }
    return piv;
}

DenseMatrix inverse_mod_p(const DenseMatrix& a) {
    std::size_t n = a.rows();
    std::uint64_t p = a.field().modulus();
    std::size_t w = 2 * n;
    std::vector<std::uint64_t> m(n * w, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i * w + j] = a.at(i, j).residue();
        m[i * w + n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel * w + col] == 0) ++sel;
        if (sel == n) throw SingularMatrixError("matrix is singular over " + a.field().str());
        if (sel != col)
            for (std::size_t j = 0; j < w; ++j) std::swap(m[col * w + j], m[sel * w + j]);
        std::uint64_t inv =
            Scalar::of_int(static_cast<long>(m[col * w + col]), a.field()).inverse().residue();
        for (std::size_t j = 0; j < w; ++j) m[col * w + j] = (m[col * w + j] * inv) % p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            std::uint64_t f = m[i * w + col];
            if (f == 0) continue;
            for (std::size_t j = 0; j < w; ++j)
                m[i * w + j] = (m[i * w + j] + (p - f) * m[col * w + j]) % p;
        }
    }
    DenseMatrix out(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.set(i, j, Scalar::of_int(static_cast<long>(m[i * w + n + j]), a.field()));
    return out;
}

// Fraction-free Gauss-Jordan (Montante) on the integer-scaled [A | I];
// after full elimination the left block is diagonal and row i of the
// inverse is the right block row divided by that diagonal entry.
DenseMatrix inverse_rational(const DenseMatrix& a) {
    std::size_t n = a.rows();
    std::size_t w = 2 * n;
    std::vector<mpz_class> m = integer_scaled(a, w);
    for (std::size_t i = 0; i < n; ++i) {
        // the identity column scales with the same row multiplier
        mpz_class lcm_den(1);
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class den = a.at(i, j).rational().get_den();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        }
        m[i * w + n + i] = lcm_den;
    }

    mpz_class prev(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel * w + col] == 0) ++sel;
        if (sel == n) throw SingularMatrixError("matrix is singular over Q");
        if (sel != col)
            for (std::size_t j = 0; j < w; ++j) std::swap(m[col * w + j], m[sel * w + j]);
        const mpz_class pivot = m[col * w + col];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            for (std::size_t j = 0; j < w; ++j) {
                if (j == col) continue;
                mpz_class t = m[i * w + j] * pivot - m[i * w + col] * m[col * w + j];
                if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()))
                    throw VerificationError("fraction-free elimination lost exact divisibility");
                mpz_divexact(m[i * w + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i * w + col] = 0;
        }
        prev = pivot;
    }

    DenseMatrix out(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const mpz_class& diag = m[i * w + i];
        for (std::size_t j = 0; j < n; ++j)
            out.set(i, j, Scalar::of_rational(mpq_class(m[i * w + n + j], diag)));
    }
    return out;
}

} // namespace

std::size_t DenseMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return spec_.is_rationals() ? rank_rational(*this) : rank_mod_p(*this);
}

DenseMatrix DenseMatrix::inverse() const {
    if (!is_square()) throw ShapeError("inverse of a non-square matrix");
    if (rows_ == 0) return *this;
    return spec_.is_rationals() ? inverse_rational(*this) : inverse_mod_p(*this);
}

std::string DenseMatrix::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ") << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j > 0) out << ", ";
            out << at(i, j).str();
        }
        out << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return out.str();
}

JordanType jordan_type(const DenseMatrix& a) {
    if (!a.is_square()) throw ShapeError("Jordan type of a non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) throw ShapeError("Jordan type of an empty matrix");

    // ranks of successive powers until the power vanishes
    std::vector<std::size_t> ranks; // ranks[k] = rank(A^k), ranks[0] = n
    ranks.push_back(n);
    DenseMatrix power = a;
    while (!power.is_zero()) {
        ranks.push_back(power.rank());
        if (ranks.size() > n + 1)
            throw NotNilpotentError("matrix is not nilpotent");
        power = power * a;
    }
    ranks.push_back(0); // rank at the vanishing power
    std::size_t q = ranks.size() - 1; // A^q = 0

    std::vector<std::size_t> parts;
    // blocks of size >= k: rank(A^{k-1}) - rank(A^k)
    std::vector<std::size_t> at_least(q + 2, 0);
    for (std::size_t k = 1; k <= q; ++k) at_least[k] = ranks[k - 1] - ranks[k];
    for (std::size_t k = q; k >= 1; --k) {
        std::size_t exactly = at_least[k] - at_least[k + 1];
        for (std::size_t c = 0; c < exactly; ++c) parts.push_back(k);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    JordanType type(std::move(parts));
    if (type.order() != n)
        throw VerificationError("Jordan type does not sum to the matrix order");
    return type;
}

DenseMatrix nullspace(const DenseMatrix& a) {
    std::size_t rows = a.rows(), cols = a.cols();
    const FieldSpec& spec = a.field();

    // plain exact-division RREF; fine for both field kinds here
    std::vector<Scalar> m;
    m.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.push_back(a.at(i, j));

    std::vector<std::size_t> pivot_col;
    std::size_t piv = 0;
    for (std::size_t col = 0; col < cols && piv < rows; ++col) {
        std::size_t sel = piv;
        while (sel < rows && m[sel * cols + col].is_zero()) ++sel;
        if (sel == rows) continue;
        if (sel != piv)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[sel * cols + j]);
        Scalar inv = m[piv * cols + col].inverse();
        for (std::size_t j = col; j < cols; ++j) m[piv * cols + j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == piv) continue;
            Scalar f = m[i * cols + col];
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < cols; ++j)
                m[i * cols + j] -= f * m[piv * cols + j];
        }
        pivot_col.push_back(col);
        ++piv;
    }

    std::vector<std::size_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::size_t col = 0; col < cols; ++col) {
            if (pi < pivot_col.size() && pivot_col[pi] == col) { ++pi; continue; }
            free_cols.push_back(col);
        }
    }

    DenseMatrix basis(spec, cols, free_cols.size());
    for (std::size_t v = 0; v < free_cols.size(); ++v) {
        std::size_t fc = free_cols[v];
        basis.set(fc, v, Scalar::one(spec));
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            basis.set(pivot_col[r], v, -m[r * cols + fc]);
    }
    return basis;
}

namespace {

// Incremental span tracker for picking vectors independent of a seed
// subspace; vectors are columns of length n.
class SpanSketch {
public:
    explicit SpanSketch(const FieldSpec& spec, std::size_t n) : spec_(spec), n_(n) {}

    // Returns true (and absorbs the vector) iff v is not in the span.
    bool add(std::vector<Scalar> v) {
        for (const auto& [pivot, row] : rows_) {
            Scalar coeff = v[pivot]; // copy: the loop below overwrites v[pivot]
            if (coeff.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) v[j] -= coeff * row[j];
        }
        std::size_t pivot = n_;
        for (std::size_t j = 0; j < n_; ++j)
            if (!v[j].is_zero()) { pivot = j; break; }
        if (pivot == n_) return false;
        Scalar inv = v[pivot].inverse();
        for (std::size_t j = 0; j < n_; ++j) v[j] *= inv;
        rows_.emplace_back(pivot, std::move(v));
        return true;
    }

private:
    FieldSpec spec_;
    std::size_t n_;
    std::vector<std::pair<std::size_t, std::vector<Scalar>>> rows_;
};

std::vector<Scalar> column_of(const DenseMatrix& m, std::size_t j) {
    std::vector<Scalar> col;
    col.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(m.at(i, j));
    return col;
}

std::vector<Scalar> mat_vec(const DenseMatrix& m, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(m.rows(), Scalar::zero(m.field()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && !v[j].is_zero()) out[i] += m.at(i, j) * v[j];
    return out;
}

} // namespace

DenseMatrix jordan_basis(const DenseMatrix& a) {
    if (!a.is_square()) throw ShapeError("Jordan basis of a non-square matrix");
    std::size_t n = a.rows();
    const FieldSpec& spec = a.field();
    JordanType type = jordan_type(a); // also rejects non-nilpotent input
    std::size_t q = type.parts().front(); // nilpotency index

    // kernels of powers
    std::vector<DenseMatrix> powers; // A^0 .. A^q
    powers.push_back(DenseMatrix::identity(spec, n));
    for (std::size_t k = 1; k <= q; ++k) powers.push_back(powers.back() * a);
    std::vector<DenseMatrix> kernels; // ker A^0 .. ker A^q
    for (std::size_t k = 0; k <= q; ++k) kernels.push_back(nullspace(powers[k]));

    // chain tops at level k: a complement of ker A^{k-1} + A·ker A^{k+1}
    // inside ker A^k
    std::vector<std::vector<std::vector<Scalar>>> chains; // each: top, A top, ...
    for (std::size_t k = q; k >= 1; --k) {
        SpanSketch sketch(spec, n);
        for (std::size_t j = 0; j < kernels[k - 1].cols(); ++j)
            sketch.add(column_of(kernels[k - 1], j));
        if (k == q) {
            // ker A^{q+1} is everything, so A·ker A^{q+1} = col(A)
            for (std::size_t j = 0; j < n; ++j) sketch.add(column_of(a, j));
        } else {
            for (std::size_t j = 0; j < kernels[k + 1].cols(); ++j)
                sketch.add(mat_vec(a, column_of(kernels[k + 1], j)));
        }
        for (std::size_t j = 0; j < kernels[k].cols(); ++j) {
            std::vector<Scalar> candidate = column_of(kernels[k], j);
            if (!sketch.add(candidate)) continue;
            std::vector<std::vector<Scalar>> chain;
            chain.push_back(candidate);
            for (std::size_t step = 1; step < k; ++step) chain.push_back(mat_vec(a, chain.back()));
            chains.push_back(std::move(chain));
        }
        if (k == 1) break;
    }

    // chains were produced longest-first; columns per chain run from the
    // kernel end up to the top so that P⁻¹AP has 1s on the superdiagonal
    DenseMatrix p(spec, n, n);
    std::size_t col = 0;
    for (const auto& chain : chains) {
        for (std::size_t step = chain.size(); step-- > 0;) {
            for (std::size_t i = 0; i < n; ++i) p.set(i, col, chain[step][i]);
            ++col;
        }
    }
    if (col != n) throw VerificationError("Jordan chains do not fill the space");

    DenseMatrix j = DenseMatrix::jordan_matrix(spec, type);
    if (p.inverse() * a * p != j)
        throw VerificationError("Jordan basis self-check failed");
    return p;
}

DenseMatrix conjugate(const DenseMatrix& x, const DenseMatrix& b) {
    if (!x.is_square() || !b.is_square() || x.rows() != b.rows())
        throw ShapeError("conjugation shape mismatch");
    return x.inverse() * b * x;
}

} // namespace nilpair
