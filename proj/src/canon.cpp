#include "nilpair/canon.hpp"

namespace nilpair {

std::string to_string(CanonFormTag tag) {
    switch (tag) {
        case CanonFormTag::TypeB: return "TypeB";
        case CanonFormTag::TypeBPrime: return "TypeBPrime";
        case CanonFormTag::Decomposable: return "Decomposable";
    }
    return "?";
}

namespace {

void require_nilpotent_short(const ShortForm& sf) {
    if (!is_nilpotent_short(sf))
        throw NotNilpotentError("short form is not nilpotent (needs a_0 = 0 and d_0 = 0)");
}

// Smallest 1 <= i <= k with a_i != d_i, if any.
std::optional<std::size_t> first_mismatch(const ShortForm& sf, std::size_t k) {
    for (std::size_t i = 1; i <= k && i < sf.n; ++i)
        if (sf.a[i] != sf.d[i]) return i;
    return std::nullopt;
}

StabShort unipotent_b(const ShortForm& sf, std::size_t j, const Scalar& t) {
    const FieldSpec& spec = sf.field();
    std::vector<Scalar> x(sf.m, Scalar::zero(spec)), y(sf.n, Scalar::zero(spec)),
        z(sf.n, Scalar::zero(spec)), w(sf.n, Scalar::zero(spec));
    x[0] = Scalar::one(spec);
    w[0] = Scalar::one(spec);
    y[j] = t;
    return StabShort(sf.m, sf.n, std::move(x), std::move(y), std::move(z), std::move(w));
}

StabShort unipotent_c(const ShortForm& sf, std::size_t j, const Scalar& t) {
    const FieldSpec& spec = sf.field();
    std::vector<Scalar> x(sf.m, Scalar::zero(spec)), y(sf.n, Scalar::zero(spec)),
        z(sf.n, Scalar::zero(spec)), w(sf.n, Scalar::zero(spec));
    x[0] = Scalar::one(spec);
    w[0] = Scalar::one(spec);
    z[j] = t;
    return StabShort(sf.m, sf.n, std::move(x), std::move(y), std::move(z), std::move(w));
}

struct Step {
    ShortForm sf;
    DenseMatrix transform; // product of the stabilizers applied
};

// One reduction round at leading index k with mismatch index i:
// conjugations by I + t·Y_{k-i} and I + t'·Z_{k-i} zero b_k and c_k
// without touching (b, c) below k or the mismatch pattern up to k.
Step eliminate_round(const ShortForm& sf, std::size_t k, std::size_t i) {
    ShortForm cur = sf;
    DenseMatrix transform = DenseMatrix::identity(sf.field(), sf.m + sf.n);
    std::size_t j = k - i;

    if (!cur.b[k].is_zero()) {
        Scalar t = -(cur.b[k] / (cur.a[i] - cur.d[i]));
        StabShort xs = unipotent_b(cur, j, t);
        transform = transform * stab_expand(xs);
        cur = apply_stab(xs, cur);
    }
    if (!cur.c[k].is_zero()) {
        Scalar t = -(cur.c[k] / (cur.d[i] - cur.a[i]));
        StabShort xs = unipotent_c(cur, j, t);
        transform = transform * stab_expand(xs);
        cur = apply_stab(xs, cur);
    }

    auto next = leading_pair_index(cur);
    if (next && *next <= k)
        throw VerificationError("elimination did not advance the leading pair");
    return {std::move(cur), std::move(transform)};
}

struct Reduced {
    ShortForm sf;
    DenseMatrix transform;
    std::optional<std::size_t> leading; // absent when b = c = 0
};

Reduced stabilize_leading_pair(const ShortForm& sf) {
    require_nilpotent_short(sf);
    ShortForm cur = sf;
    DenseMatrix transform = DenseMatrix::identity(sf.field(), sf.m + sf.n);
    for (;;) {
        auto k = leading_pair_index(cur);
        if (!k) return {std::move(cur), std::move(transform), std::nullopt};
        auto i = first_mismatch(cur, *k);
        if (!i) return {std::move(cur), std::move(transform), k};
        Step step = eliminate_round(cur, *k, *i);
        cur = std::move(step.sf);
        transform = transform * step.transform;
    }
}

// Canonicalizing stabilizer for the branch c_{n-r} != 0: first
// short row (1, 0, ..., 0 | a_{m-r}, ..., a_{m-1}, 0, ..., 0), second
// (0, ..., 0 | c_{n-r}, ..., c_{n-1}, 0, ..., 0).
StabShort branch_c_transform(const ShortForm& sf, std::size_t r) {
    const FieldSpec& spec = sf.field();
    std::size_t k = sf.n - r;
    std::vector<Scalar> x(sf.m, Scalar::zero(spec)), y(sf.n, Scalar::zero(spec)),
        z(sf.n, Scalar::zero(spec)), w(sf.n, Scalar::zero(spec));
    x[0] = Scalar::one(spec);
    for (std::size_t l = 0; l < r; ++l) {
        y[l] = sf.a[sf.m - r + l];
        w[l] = sf.c[k + l];
    }
    return StabShort(sf.m, sf.n, std::move(x), std::move(y), std::move(z), std::move(w));
}

// Branch c_{n-r} = 0, b_{n-r} != 0: the a-tail moves to the z row and
// the w row carries b_{n-r}, ..., b_{n-1}.
StabShort branch_b_transform(const ShortForm& sf, std::size_t r) {
    const FieldSpec& spec = sf.field();
    std::size_t k = sf.n - r;
    std::vector<Scalar> x(sf.m, Scalar::zero(spec)), y(sf.n, Scalar::zero(spec)),
        z(sf.n, Scalar::zero(spec)), w(sf.n, Scalar::zero(spec));
    x[0] = Scalar::one(spec);
    for (std::size_t l = 0; l < r; ++l) {
        z[l] = sf.a[sf.m - r + l];
        w[l] = sf.b[k + l];
    }
    return StabShort(sf.m, sf.n, std::move(x), std::move(y), std::move(z), std::move(w));
}

void verify_canonical(const ShortForm& input, const CanonResult& result) {
    const ShortForm& canonical = *result.canonical;
    if (!matches_canonical_template(canonical, result.rank, result.form))
        throw VerificationError("canonical form does not match the rank-" +
                                std::to_string(result.rank) + " " + to_string(result.form) +
                                " template: " + canonical.str());
    const DenseMatrix& x = *result.witness;
    DenseMatrix j = DenseMatrix::jordan_matrix(
        input.field(), JordanType({input.m, input.n}));
    if (x * j != j * x)
        throw VerificationError("witness does not commute with J_m + J_n");
    if (x.inverse() * expand(input) * x != expand(canonical))
        throw VerificationError("witness conjugation does not reproduce the canonical form");
}

} // namespace

std::optional<std::size_t> leading_pair_index(const ShortForm& sf) {
    require_nilpotent_short(sf);
    for (std::size_t k = 0; k < sf.n; ++k)
        if (!sf.b[k].is_zero() || !sf.c[k].is_zero()) return k;
    return std::nullopt;
}

ShortForm try_eliminate(const ShortForm& sf) {
    auto k = leading_pair_index(sf); // also checks nilpotency
    if (!k)
        throw PreconditionError("no leading pair: b and c are already zero");
    auto i = first_mismatch(sf, *k);
    if (!i)
        throw PreconditionError("no eliminating move: d_i = a_i for all i <= " +
                                std::to_string(*k));
    return eliminate_round(sf, *k, *i).sf;
}

std::size_t canonical_rank(const ShortForm& sf) {
    Reduced reduced = stabilize_leading_pair(sf);
    if (!reduced.leading) return 0;
    return sf.n - *reduced.leading;
}

CanonResult canonical_form(const ShortForm& sf) {
    Reduced reduced = stabilize_leading_pair(sf);
    const FieldSpec& spec = sf.field();
    if (!reduced.leading) {
        return CanonResult{0, CanonFormTag::Decomposable, std::nullopt, std::nullopt,
                           DenseMatrix::identity(spec, sf.m + sf.n)};
    }

    std::size_t k = *reduced.leading;
    std::size_t r = sf.n - k;
    const ShortForm& shaped = reduced.sf;

    CanonResult result{r, CanonFormTag::TypeB, std::nullopt, std::nullopt,
                       DenseMatrix::identity(spec, sf.m + sf.n)};
    if (!shaped.c[k].is_zero()) {
        DenseMatrix x = stab_expand(branch_c_transform(shaped, r));
        result.form = CanonFormTag::TypeB;
        result.canonical = compress(x.inverse() * expand(shaped) * x, sf.m, sf.n);
        result.witness = reduced.transform * x;
    } else {
        DenseMatrix x = stab_expand(branch_b_transform(shaped, r));
        result.form = CanonFormTag::TypeBPrime;
        // this branch conjugates as X B X^{-1}, i.e. by X^{-1}; the
        // opposite orientation is kept as a guarded fallback
        ShortForm printed = compress(x * expand(shaped) * x.inverse(), sf.m, sf.n);
        if (matches_canonical_template(printed, r, CanonFormTag::TypeBPrime)) {
            result.canonical = std::move(printed);
            result.witness = reduced.transform * x.inverse();
        } else {
            result.canonical = compress(x.inverse() * expand(shaped) * x, sf.m, sf.n);
            result.witness = reduced.transform * x;
        }
    }

    verify_canonical(sf, result);
    return result;
}

ShortForm closed_form_m6n4(const ShortForm& sf) {
    if (sf.m != 6 || sf.n != 4)
        throw ShapeError("closed-form oracle requires m = 6, n = 4");
    auto k_opt = leading_pair_index(sf); // also checks nilpotency
    if (!k_opt)
        throw PreconditionError("closed-form oracle requires an indecomposable-shaped input");
    std::size_t k = *k_opt;
    if (first_mismatch(sf, k))
        throw PreconditionError("short form is not in reduced shape (d_i = a_i fails below the leading pair)");

    const FieldSpec& spec = sf.field();
    const Scalar zero = Scalar::zero(spec);
    const Scalar one = Scalar::one(spec);
    const auto& a = sf.a;
    const auto& b = sf.b;
    const auto& c = sf.c;
    const auto& d = sf.d;

    std::size_t r = 4 - k;
    std::vector<Scalar> na = a, nb(4, zero), nc(4, zero), nd = d;

    switch (r) {
        case 1: {
            na[5] = zero;
            if (!c[3].is_zero()) {
                nb[3] = b[3] * c[3];
                nc[3] = one;
            } else {
                nb[3] = one;
            }
            break;
        }
        case 2: {
            na[4] = zero;
            na[5] = zero;
            if (!c[2].is_zero()) {
                nb[2] = b[2] * c[2];
                nb[3] = b[2] * c[3] + b[3] * c[2] + (a[3] - d[3]) * a[4];
                nc[2] = one;
            } else {
                nb[2] = one;
                nc[3] = b[2] * c[3] + (a[3] - d[3]) * a[4];
            }
            break;
        }
        case 3: {
            na[3] = zero;
            na[4] = zero;
            na[5] = zero;
            nd[3] = a[3] + d[3];
            if (!c[1].is_zero()) {
                nb[1] = b[1] * c[1];
                nb[2] = b[1] * c[2] + b[2] * c[1] + (a[2] - d[2]) * a[3];
                nb[3] = b[1] * c[3] + b[2] * c[2] + b[3] * c[1] + (a[2] - d[2]) * a[4] - a[3] * d[3];
                nc[1] = one;
            } else {
                nb[1] = one;
                nc[2] = b[1] * c[2] + (a[2] - d[2]) * a[3];
                nc[3] = b[1] * c[3] + b[2] * c[2] + (a[2] - d[2]) * a[4] - a[3] * d[3];
            }
            break;
        }
        case 4: {
            na[2] = zero;
            na[3] = zero;
            na[4] = zero;
            na[5] = zero;
            nd[2] = a[2] + d[2];
            nd[3] = a[3] + d[3];
            if (!c[0].is_zero()) {
                nb[0] = b[0] * c[0];
                nb[1] = b[0] * c[1] + b[1] * c[0] + (a[1] - d[1]) * a[2];
                nb[2] = b[0] * c[2] + b[1] * c[1] + b[2] * c[0] + (a[1] - d[1]) * a[3] - a[2] * d[2];
                nb[3] = b[0] * c[3] + b[1] * c[2] + b[2] * c[1] + b[3] * c[0] +
                        (a[1] - d[1]) * a[4] - a[2] * d[3] - a[3] * d[2];
                nc[0] = one;
            } else {
                nb[0] = one;
                nc[1] = b[0] * c[1] + (a[1] - d[1]) * a[2];
                nc[2] = b[0] * c[2] + b[1] * c[1] + (a[1] - d[1]) * a[3] - a[2] * d[2];
                nc[3] = b[0] * c[3] + b[1] * c[2] + b[2] * c[1] + (a[1] - d[1]) * a[4] -
                        a[2] * d[3] - a[3] * d[2];
            }
            break;
        }
        default:
            throw PreconditionError("unreachable rank");
    }

    return ShortForm(6, 4, std::move(na), std::move(nb), std::move(nc), std::move(nd));
}

CanonResult canonicalize_pair(const DenseMatrix& a, const DenseMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw ShapeError("pair matrices must be square and of equal order");
    if (a.field() != b.field())
        throw FieldMismatchError("pair matrices live over different fields");
    if (a * b != b * a)
        throw PreconditionError("A and B do not commute");
    if (!b.pow(b.rows()).is_zero())
        throw NotNilpotentError("B is not nilpotent");

    JordanType type = jordan_type(a); // rejects non-nilpotent A
    if (type.parts().size() != 2)
        throw PreconditionError("A must have exactly two Jordan blocks; its type is " + type.str());
    std::size_t m = type.parts()[0], n = type.parts()[1];
    if (m == n)
        throw PreconditionError("equal Jordan block sizes are unsupported (A has type " +
                                type.str() + "; the classification needs m > n)");

    DenseMatrix p = jordan_basis(a);
    DenseMatrix b_jordan = p.inverse() * b * p;
    ShortForm sf = compress(b_jordan, m, n);

    CanonResult result = canonical_form(sf);
    result.jordanizer = p;
    if (result.canonical) {
        DenseMatrix total = p * *result.witness;
        DenseMatrix total_inv = total.inverse();
        DenseMatrix j = DenseMatrix::jordan_matrix(a.field(), type);
        if (total_inv * a * total != j || total_inv * b * total != expand(*result.canonical))
            throw VerificationError("pair canonicalization failed its exact conjugation check");
    }
    return result;
}

std::optional<DenseMatrix> pairs_similar(const DenseMatrix& a1, const DenseMatrix& b1,
                                         const DenseMatrix& a2, const DenseMatrix& b2) {
    if (a1.field() != a2.field())
        throw FieldMismatchError("the two pairs live over different fields");
    CanonResult r1 = canonicalize_pair(a1, b1);
    CanonResult r2 = canonicalize_pair(a2, b2);
    if (r1.form == CanonFormTag::Decomposable || r2.form == CanonFormTag::Decomposable)
        throw PreconditionError("similarity testing of decomposable pairs is out of scope");
    if (*r1.canonical != *r2.canonical) return std::nullopt;

    DenseMatrix t1 = r1.jordanizer * *r1.witness;
    DenseMatrix t2 = r2.jordanizer * *r2.witness;
    DenseMatrix y = t1 * t2.inverse();
    DenseMatrix y_inv = y.inverse();
    if (y_inv * a1 * y != a2 || y_inv * b1 * y != b2)
        throw VerificationError("similarity witness failed its exact conjugation check");
    return y;
}

bool matches_canonical_template(const ShortForm& sf, std::size_t r, CanonFormTag tag) {
    if (tag == CanonFormTag::Decomposable) return false;
    if (r < 1 || r > sf.n) return false;
    if (!is_nilpotent_short(sf)) return false;
    std::size_t k = sf.n - r;

    for (std::size_t i = 1; i <= k; ++i)
        if (sf.d[i] != sf.a[i]) return false;
    for (std::size_t i = sf.m - r; i < sf.m; ++i)
        if (!sf.a[i].is_zero()) return false;

    if (tag == CanonFormTag::TypeB) {
        for (std::size_t i = 0; i < sf.n; ++i) {
            if (i == k) {
                if (!sf.c[i].is_one()) return false;
            } else if (!sf.c[i].is_zero()) {
                return false;
            }
        }
        for (std::size_t i = 0; i < k; ++i)
            if (!sf.b[i].is_zero()) return false;
        return true;
    }

    for (std::size_t i = 0; i < sf.n; ++i) {
        if (i == k) {
            if (!sf.b[i].is_one()) return false;
        } else if (!sf.b[i].is_zero()) {
            return false;
        }
    }
    for (std::size_t i = 0; i <= k; ++i)
        if (!sf.c[i].is_zero()) return false;
    return true;
}

std::optional<std::pair<std::size_t, CanonFormTag>> canonical_template_info(const ShortForm& sf) {
    for (std::size_t r = 1; r <= sf.n; ++r) {
        if (matches_canonical_template(sf, r, CanonFormTag::TypeB))
            return std::make_pair(r, CanonFormTag::TypeB);
        if (matches_canonical_template(sf, r, CanonFormTag::TypeBPrime))
            return std::make_pair(r, CanonFormTag::TypeBPrime);
    }
    return std::nullopt;
}

} // namespace nilpair
