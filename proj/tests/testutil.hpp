#pragma once

#include <cstdint>

#include "nilpair/commutant.hpp"

namespace nilpair::testutil {

// splitmix64; reproducible regardless of platform or standard library.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

inline Scalar random_scalar(Rng& rng, const FieldSpec& spec) {
    if (spec.is_rationals())
        return Scalar::of_fraction(rng.range(-9, 9), rng.range(1, 9), spec);
    return Scalar::of_int(rng.range(0, static_cast<long>(spec.modulus() - 1)), spec);
}

inline Scalar random_nonzero_scalar(Rng& rng, const FieldSpec& spec) {
    for (;;) {
        Scalar v = random_scalar(rng, spec);
        if (!v.is_zero()) return v;
    }
}

inline DenseMatrix random_matrix(Rng& rng, const FieldSpec& spec, std::size_t rows,
                                 std::size_t cols) {
    DenseMatrix out(spec, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.set(i, j, random_scalar(rng, spec));
    return out;
}

inline DenseMatrix random_invertible(Rng& rng, const FieldSpec& spec, std::size_t n) {
    for (;;) {
        DenseMatrix candidate = random_matrix(rng, spec, n, n);
        if (candidate.rank() == n) return candidate;
    }
}

inline ShortForm random_short_form(Rng& rng, const FieldSpec& spec, std::size_t m, std::size_t n,
                                   bool nilpotent = true) {
    std::vector<Scalar> a, b, c, d;
    for (std::size_t i = 0; i < m; ++i) a.push_back(random_scalar(rng, spec));
    for (std::size_t i = 0; i < n; ++i) b.push_back(random_scalar(rng, spec));
    for (std::size_t i = 0; i < n; ++i) c.push_back(random_scalar(rng, spec));
    for (std::size_t i = 0; i < n; ++i) d.push_back(random_scalar(rng, spec));
    if (nilpotent) {
        a[0] = Scalar::zero(spec);
        d[0] = Scalar::zero(spec);
    }
    return ShortForm(m, n, std::move(a), std::move(b), std::move(c), std::move(d));
}

inline StabShort random_stab(Rng& rng, const FieldSpec& spec, std::size_t m, std::size_t n) {
    std::vector<Scalar> x, y, z, w;
    for (std::size_t i = 0; i < m; ++i) x.push_back(random_scalar(rng, spec));
    for (std::size_t i = 0; i < n; ++i) y.push_back(random_scalar(rng, spec));
    for (std::size_t i = 0; i < n; ++i) z.push_back(random_scalar(rng, spec));
    for (std::size_t i = 0; i < n; ++i) w.push_back(random_scalar(rng, spec));
    x[0] = random_nonzero_scalar(rng, spec);
    w[0] = random_nonzero_scalar(rng, spec);
    return StabShort(m, n, std::move(x), std::move(y), std::move(z), std::move(w));
}

// Random short form in reduced shape for the given rank; the
// branch picks whether c_{n-r} is forced nonzero or forced zero.
inline ShortForm random_reduced_short_form(Rng& rng, const FieldSpec& spec, std::size_t m,
                                           std::size_t n, std::size_t r, bool c_branch) {
    std::size_t k = n - r;
    std::vector<Scalar> a(m, Scalar::zero(spec)), b(n, Scalar::zero(spec)),
        c(n, Scalar::zero(spec)), d(n, Scalar::zero(spec));
    for (std::size_t i = 1; i < m; ++i) a[i] = random_scalar(rng, spec);
    for (std::size_t i = 1; i <= k; ++i) d[i] = a[i];
    for (std::size_t i = k + 1; i < n; ++i) d[i] = random_scalar(rng, spec);
    for (std::size_t i = k + 1; i < n; ++i) {
        b[i] = random_scalar(rng, spec);
        c[i] = random_scalar(rng, spec);
    }
    if (c_branch) {
        c[k] = random_nonzero_scalar(rng, spec);
        b[k] = random_scalar(rng, spec);
    } else {
        b[k] = random_nonzero_scalar(rng, spec);
    }
    return ShortForm(m, n, std::move(a), std::move(b), std::move(c), std::move(d));
}

// Shorthand for building a short form from integer rows.
inline ShortForm sf_of_ints(const FieldSpec& spec, std::size_t m, std::size_t n,
                            std::vector<long> a, std::vector<long> b, std::vector<long> c,
                            std::vector<long> d) {
    auto conv = [&](const std::vector<long>& v) {
        std::vector<Scalar> out;
        for (long x : v) out.push_back(Scalar::of_int(x, spec));
        return out;
    };
    return ShortForm(m, n, conv(a), conv(b), conv(c), conv(d));
}

inline DenseMatrix matrix_of_ints(const FieldSpec& spec,
                                  const std::vector<std::vector<long>>& rows) {
    DenseMatrix out(spec, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            out.set(i, j, Scalar::of_int(rows[i][j], spec));
    return out;
}

} // namespace nilpair::testutil
