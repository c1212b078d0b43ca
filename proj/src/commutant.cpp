#include "nilpair/commutant.hpp"

#include <optional>
#include <sstream>

namespace nilpair {

long arm_length(std::size_t i, std::size_t j, std::size_t rows, std::size_t cols) {
    if (i < 1 || i > rows || j < 1 || j > cols)
        throw ShapeError("arm_length index out of range");
    long diag = static_cast<long>(j) - static_cast<long>(i);
    if (rows >= cols) return diag;
    return diag - static_cast<long>(cols - rows);
}

bool is_ta_matrix(const DenseMatrix& m) {
    // representative entry per arm length, first occurrence in row-major order
    std::vector<std::optional<Scalar>> reps(m.rows() + m.cols(), std::nullopt);
    long offset = static_cast<long>(m.rows()); // arm lengths range in (-rows, cols)
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        for (std::size_t j = 1; j <= m.cols(); ++j) {
            const Scalar& v = m.at(i - 1, j - 1);
            long arm = arm_length(i, j, m.rows(), m.cols());
            if (arm < 0) {
                if (!v.is_zero()) return false;
                continue;
            }
            auto& rep = reps[static_cast<std::size_t>(arm + offset)];
            if (!rep) {
                rep = v;
            } else if (*rep != v) {
                return false;
            }
        }
    }
    return true;
}

bool commutant_check(const DenseMatrix& a, const DenseMatrix& b, const JordanType& lambda) {
    if (a != DenseMatrix::jordan_matrix(a.field(), lambda))
        throw PreconditionError("A is not the exact Jordan matrix of " + lambda.str());
    if (!b.is_square() || b.rows() != a.rows())
        throw ShapeError("B must match the shape of A");
    if (b.field() != a.field())
        throw FieldMismatchError("A and B live over different fields");

    const auto& parts = lambda.parts();
    std::size_t row_off = 0;
    for (std::size_t bi = 0; bi < parts.size(); ++bi) {
        std::size_t col_off = 0;
        for (std::size_t bj = 0; bj < parts.size(); ++bj) {
            DenseMatrix block(b.field(), parts[bi], parts[bj]);
            for (std::size_t i = 0; i < parts[bi]; ++i)
                for (std::size_t j = 0; j < parts[bj]; ++j)
                    block.set(i, j, b.at(row_off + i, col_off + j));
            if (!is_ta_matrix(block)) return false;
            col_off += parts[bj];
        }
        row_off += parts[bi];
    }
    return true;
}

namespace {

void require_two_block_sizes(std::size_t m, std::size_t n) {
    if (!(m > n && n >= 1))
        throw ShapeError("short form needs block sizes m > n >= 1");
}

void require_lengths(const ShortForm& sf) {
    if (sf.a.size() != sf.m || sf.b.size() != sf.n || sf.c.size() != sf.n || sf.d.size() != sf.n)
        throw ShapeError("short form row lengths must be (m, n, n, n)");
}

void require_one_field(const std::vector<const std::vector<Scalar>*>& rows) {
    const FieldSpec& spec = rows.front()->front().field();
    for (const auto* row : rows)
        for (const Scalar& v : *row)
            if (v.field() != spec)
                throw FieldMismatchError("short form rows mix fields");
}

DenseMatrix expand_rows(const FieldSpec& spec, std::size_t m, std::size_t n,
                        const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                        const std::vector<Scalar>& c, const std::vector<Scalar>& d) {
    std::size_t order = m + n;
    DenseMatrix out(spec, order, order);
    const std::vector<Scalar>* rows[4] = {&a, &b, &c, &d};
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
            detail::EntrySource src = detail::entry_source(i, j, m, n);
            if (src.row < 0) continue;
            out.set(i, j, (*rows[src.row])[src.index]);
        }
    }
    return out;
}

} // namespace

namespace detail {

EntrySource entry_source(std::size_t i, std::size_t j, std::size_t m, std::size_t n) {
    std::size_t s = m - n;
    if (i < m && j < m) {
        if (j >= i) return {0, j - i};
        return {-1, 0};
    }
    if (i < m) {
        std::size_t jj = j - m;
        if (jj >= i) return {1, jj - i};
        return {-1, 0};
    }
    if (j < m) {
        std::size_t ii = i - m;
        if (j >= ii + s) return {2, j - ii - s};
        return {-1, 0};
    }
    std::size_t ii = i - m, jj = j - m;
    if (jj >= ii) return {3, jj - ii};
    return {-1, 0};
}

} // namespace detail

ShortForm::ShortForm(std::size_t m_, std::size_t n_, std::vector<Scalar> a_, std::vector<Scalar> b_,
                     std::vector<Scalar> c_, std::vector<Scalar> d_)
    : m(m_), n(n_), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    require_two_block_sizes(m, n);
    require_lengths(*this);
    require_one_field({&a, &b, &c, &d});
}

ShortForm ShortForm::zero(const FieldSpec& spec, std::size_t m, std::size_t n) {
    return ShortForm(m, n, std::vector<Scalar>(m, Scalar::zero(spec)),
                     std::vector<Scalar>(n, Scalar::zero(spec)),
                     std::vector<Scalar>(n, Scalar::zero(spec)),
                     std::vector<Scalar>(n, Scalar::zero(spec)));
}

bool ShortForm::operator==(const ShortForm& other) const {
    return m == other.m && n == other.n && a == other.a && b == other.b && c == other.c &&
           d == other.d;
}

std::string ShortForm::str() const {
    auto row = [](const std::vector<Scalar>& v) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) out += ",";
            out += v[i].str();
        }
        return out + "]";
    };
    std::ostringstream out;
    out << "{m=" << m << ", n=" << n << ", a=" << row(a) << ", b=" << row(b) << ", c=" << row(c)
        << ", d=" << row(d) << "}";
    return out.str();
}

bool is_nilpotent_short(const ShortForm& sf) {
    return sf.a.front().is_zero() && sf.d.front().is_zero();
}

StabShort::StabShort(std::size_t m_, std::size_t n_, std::vector<Scalar> x_, std::vector<Scalar> y_,
                     std::vector<Scalar> z_, std::vector<Scalar> w_)
    : m(m_), n(n_), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)), w(std::move(w_)) {
    require_two_block_sizes(m, n);
    if (x.size() != m || y.size() != n || z.size() != n || w.size() != n)
        throw ShapeError("stabilizer short form row lengths must be (m, n, n, n)");
    require_one_field({&x, &y, &z, &w});
    if (x.front().is_zero() || w.front().is_zero())
        throw PreconditionError("stabilizer requires x_0 != 0 and w_0 != 0");
}

StabShort StabShort::identity(const FieldSpec& spec, std::size_t m, std::size_t n) {
    std::vector<Scalar> x(m, Scalar::zero(spec));
    std::vector<Scalar> w(n, Scalar::zero(spec));
    x[0] = Scalar::one(spec);
    w[0] = Scalar::one(spec);
    return StabShort(m, n, std::move(x), std::vector<Scalar>(n, Scalar::zero(spec)),
                     std::vector<Scalar>(n, Scalar::zero(spec)), std::move(w));
}

DenseMatrix expand(const ShortForm& sf) {
    return expand_rows(sf.field(), sf.m, sf.n, sf.a, sf.b, sf.c, sf.d);
}

ShortForm compress(const DenseMatrix& b, std::size_t m, std::size_t n) {
    require_two_block_sizes(m, n);
    if (!b.is_square() || b.rows() != m + n)
        throw ShapeError("compress expects an (m+n) x (m+n) matrix");
    std::size_t s = m - n;

    std::vector<Scalar> ra, rb, rc, rd;
    for (std::size_t k = 0; k < m; ++k) ra.push_back(b.at(0, k));
    for (std::size_t k = 0; k < n; ++k) rb.push_back(b.at(0, m + k));
    for (std::size_t k = 0; k < n; ++k) rc.push_back(b.at(m, s + k));
    for (std::size_t k = 0; k < n; ++k) rd.push_back(b.at(m, m + k));

    ShortForm sf(m, n, std::move(ra), std::move(rb), std::move(rc), std::move(rd));
    if (expand(sf) != b)
        throw NotInCommutantError("matrix does not commute with J_m + J_n (not of TA shape)");
    return sf;
}

DenseMatrix stab_expand(const StabShort& xs) {
    if (xs.x.front().is_zero() || xs.w.front().is_zero())
        throw PreconditionError("stabilizer requires x_0 != 0 and w_0 != 0");
    return expand_rows(xs.field(), xs.m, xs.n, xs.x, xs.y, xs.z, xs.w);
}

ShortForm apply_stab(const StabShort& xs, const ShortForm& sf) {
    if (xs.m != sf.m || xs.n != sf.n)
        throw ShapeError("stabilizer and short form block sizes differ");
    DenseMatrix x = stab_expand(xs);
    return compress(x.inverse() * expand(sf) * x, sf.m, sf.n);
}

StabShort stab_compose(const StabShort& s, const StabShort& t) {
    if (s.m != t.m || s.n != t.n)
        throw ShapeError("stabilizer block sizes differ");
    DenseMatrix product = stab_expand(s) * stab_expand(t);
    std::size_t m = s.m, n = s.n, off = m - n;
    std::vector<Scalar> x, y, z, w;
    for (std::size_t k = 0; k < m; ++k) x.push_back(product.at(0, k));
    for (std::size_t k = 0; k < n; ++k) y.push_back(product.at(0, m + k));
    for (std::size_t k = 0; k < n; ++k) z.push_back(product.at(m, off + k));
    for (std::size_t k = 0; k < n; ++k) w.push_back(product.at(m, m + k));
    return StabShort(m, n, std::move(x), std::move(y), std::move(z), std::move(w));
}

} // namespace nilpair
