#include "nilpair/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace nilpair {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t limit,
                          const std::string& what) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (result > limit / base)
            throw BudgetError(what + " exceeds the budget of " + std::to_string(limit));
        result *= base;
    }
    return result;
}

void require_two_blocks(std::size_t m, std::size_t n) {
    if (!(m > n && n >= 1)) throw ShapeError("enumeration needs block sizes m > n >= 1");
}

// Parameter slots of a commutant element, flattened (a | b | c | d)
// with lengths (m, n, n, n). The m+3n-2 free digits of a nilpotent
// element are everything except a_0 and d_0.
struct Layout {
    std::size_t m, n;
    std::uint64_t p;
    std::size_t params() const { return m + 3 * n; }
    std::size_t free_digits() const { return m + 3 * n - 2; }
    std::size_t slot_a(std::size_t i) const { return i; }
    std::size_t slot_b(std::size_t i) const { return m + i; }
    std::size_t slot_c(std::size_t i) const { return m + n + i; }
    std::size_t slot_d(std::size_t i) const { return m + 2 * n + i; }

    // free digit order: a_1..a_{m-1}, b, c, d_1..d_{n-1} — the
    // lexicographic order of the full parameter vector
    std::vector<std::size_t> free_slots() const {
        std::vector<std::size_t> slots;
        for (std::size_t i = 1; i < m; ++i) slots.push_back(slot_a(i));
        for (std::size_t i = 0; i < n; ++i) slots.push_back(slot_b(i));
        for (std::size_t i = 0; i < n; ++i) slots.push_back(slot_c(i));
        for (std::size_t i = 1; i < n; ++i) slots.push_back(slot_d(i));
        return slots;
    }

    void decode(std::uint64_t index, std::vector<std::uint64_t>& params,
                const std::vector<std::size_t>& slots) const {
        std::fill(params.begin(), params.end(), 0);
        for (std::size_t pos = slots.size(); pos-- > 0;) {
            params[slots[pos]] = index % p;
            index /= p;
        }
    }

    std::uint64_t encode(const std::vector<std::uint64_t>& params,
                         const std::vector<std::size_t>& slots) const {
        std::uint64_t index = 0;
        for (std::size_t slot : slots) index = index * p + params[slot];
        return index;
    }
};

// Square matrices over GF(p) as flat uint64 rows; fast path for the
// closure loop (the Scalar pipeline is identical but heap-heavy).
struct PMat {
    std::size_t order = 0;
    std::vector<std::uint64_t> e;

    static PMat zero(std::size_t order) { return {order, std::vector<std::uint64_t>(order * order, 0)}; }

    static PMat identity(std::size_t order) {
        PMat out = zero(order);
        for (std::size_t i = 0; i < order; ++i) out.e[i * order + i] = 1;
        return out;
    }

    bool operator==(const PMat& rhs) const = default;
};

PMat pmul(const PMat& a, const PMat& b, std::uint64_t p) {
    std::size_t n = a.order;
    PMat out = PMat::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::uint64_t aik = a.e[i * n + k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t v = out.e[i * n + j] + aik * b.e[k * n + j] % p;
                out.e[i * n + j] = v >= p ? v - p : v;
            }
        }
    return out;
}

std::uint64_t pinv_scalar(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
        std::int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw SingularMatrixError("residue has no inverse");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

PMat pinverse(const PMat& a, std::uint64_t p) {
    std::size_t n = a.order, w = 2 * n;
    std::vector<std::uint64_t> m(n * w, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i * w + j] = a.e[i * n + j];
        m[i * w + n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel * w + col] == 0) ++sel;
        if (sel == n) throw SingularMatrixError("matrix is singular mod p");
        if (sel != col)
            for (std::size_t j = 0; j < w; ++j) std::swap(m[col * w + j], m[sel * w + j]);
        std::uint64_t inv = pinv_scalar(m[col * w + col], p);
        for (std::size_t j = 0; j < w; ++j) m[col * w + j] = m[col * w + j] * inv % p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            std::uint64_t f = m[i * w + col];
            if (f == 0) continue;
            for (std::size_t j = 0; j < w; ++j)
                m[i * w + j] = (m[i * w + j] + (p - f) * m[col * w + j]) % p;
        }
    }
    PMat out = PMat::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.e[i * n + j] = m[i * w + n + j];
    return out;
}

// Expansion/compression against the shared two-block layout.
PMat expand_params(const Layout& lay, const std::vector<std::uint64_t>& params) {
    std::size_t order = lay.m + lay.n;
    PMat out = PMat::zero(order);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) {
            detail::EntrySource src = detail::entry_source(i, j, lay.m, lay.n);
            if (src.row < 0) continue;
            std::size_t slot = 0;
            switch (src.row) {
                case 0: slot = lay.slot_a(src.index); break;
                case 1: slot = lay.slot_b(src.index); break;
                case 2: slot = lay.slot_c(src.index); break;
                default: slot = lay.slot_d(src.index); break;
            }
            out.e[i * order + j] = params[slot];
        }
    return out;
}

// Reads the parameter rows back off a full matrix and verifies the
// matrix is exactly the TA expansion of what it read.
void compress_params(const Layout& lay, const PMat& mat, std::vector<std::uint64_t>& params) {
    std::size_t order = lay.m + lay.n, s = lay.m - lay.n;
    for (std::size_t k = 0; k < lay.m; ++k) params[lay.slot_a(k)] = mat.e[k];
    for (std::size_t k = 0; k < lay.n; ++k) params[lay.slot_b(k)] = mat.e[lay.m + k];
    for (std::size_t k = 0; k < lay.n; ++k) params[lay.slot_c(k)] = mat.e[lay.m * order + s + k];
    for (std::size_t k = 0; k < lay.n; ++k) params[lay.slot_d(k)] = mat.e[lay.m * order + lay.m + k];
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) {
            detail::EntrySource src = detail::entry_source(i, j, lay.m, lay.n);
            std::uint64_t expected = 0;
            if (src.row >= 0) {
                switch (src.row) {
                    case 0: expected = params[lay.slot_a(src.index)]; break;
                    case 1: expected = params[lay.slot_b(src.index)]; break;
                    case 2: expected = params[lay.slot_c(src.index)]; break;
                    default: expected = params[lay.slot_d(src.index)]; break;
                }
            }
            if (mat.e[i * order + j] != expected)
                throw VerificationError("conjugate left the commutant; closure is broken");
        }
}

struct Generator {
    PMat mat;
    PMat inv;
};

// One-parameter elements along every parameter direction plus the
// w_0-scalings; generates the full stabilizer.
std::vector<Generator> stabilizer_generators(const Layout& lay) {
    std::vector<Generator> gens;
    std::vector<std::uint64_t> params(lay.params(), 0);
    auto push = [&]() {
        PMat mat = expand_params(lay, params);
        gens.push_back({mat, pinverse(mat, lay.p)});
    };
    auto reset = [&]() {
        std::fill(params.begin(), params.end(), 0);
        params[lay.slot_a(0)] = 1;
        params[lay.slot_d(0)] = 1;
    };
    for (std::uint64_t t = 2; t < lay.p; ++t) {
        reset();
        params[lay.slot_d(0)] = t;
        push();
    }
    for (std::uint64_t t = 1; t < lay.p; ++t) {
        for (std::size_t i = 1; i < lay.m; ++i) {
            reset();
            params[lay.slot_a(i)] = t;
            push();
        }
        for (std::size_t i = 0; i < lay.n; ++i) {
            reset();
            params[lay.slot_b(i)] = t;
            push();
        }
        for (std::size_t i = 0; i < lay.n; ++i) {
            reset();
            params[lay.slot_c(i)] = t;
            push();
        }
        for (std::size_t i = 1; i < lay.n; ++i) {
            reset();
            params[lay.slot_d(i)] = t;
            push();
        }
    }
    return gens;
}

struct UnionFind {
    std::vector<std::uint64_t> parent;

    explicit UnionFind(std::uint64_t size) : parent(size) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    std::uint64_t find(std::uint64_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    void unite(std::uint64_t a, std::uint64_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) parent[b] = a;
        else parent[a] = b;
    }
};

ShortForm short_form_of(const Layout& lay, const std::vector<std::uint64_t>& params,
                        const FieldSpec& spec) {
    std::vector<Scalar> a, b, c, d;
    for (std::size_t i = 0; i < lay.m; ++i)
        a.push_back(Scalar::of_int(static_cast<long>(params[lay.slot_a(i)]), spec));
    for (std::size_t i = 0; i < lay.n; ++i)
        b.push_back(Scalar::of_int(static_cast<long>(params[lay.slot_b(i)]), spec));
    for (std::size_t i = 0; i < lay.n; ++i)
        c.push_back(Scalar::of_int(static_cast<long>(params[lay.slot_c(i)]), spec));
    for (std::size_t i = 0; i < lay.n; ++i)
        d.push_back(Scalar::of_int(static_cast<long>(params[lay.slot_d(i)]), spec));
    return ShortForm(lay.m, lay.n, std::move(a), std::move(b), std::move(c), std::move(d));
}

void params_of_short_form(const Layout& lay, const ShortForm& sf,
                          std::vector<std::uint64_t>& params) {
    for (std::size_t i = 0; i < lay.m; ++i) params[lay.slot_a(i)] = sf.a[i].residue();
    for (std::size_t i = 0; i < lay.n; ++i) params[lay.slot_b(i)] = sf.b[i].residue();
    for (std::size_t i = 0; i < lay.n; ++i) params[lay.slot_c(i)] = sf.c[i].residue();
    for (std::size_t i = 0; i < lay.n; ++i) params[lay.slot_d(i)] = sf.d[i].residue();
}

std::uint64_t conjectured_count(std::size_t m, std::size_t n, std::uint64_t p) {
    std::uint64_t total = 0;
    for (std::size_t r = 1; r <= n; ++r) {
        std::uint64_t type_b = 1, type_b_prime = 1;
        for (std::size_t i = 0; i < m + r - 2; ++i) type_b *= p;
        for (std::size_t i = 0; i < m + r - 3; ++i) type_b_prime *= p;
        total += type_b + type_b_prime;
    }
    return total;
}

} // namespace

NilcEnumeration::NilcEnumeration(std::size_t m, std::size_t n, std::uint64_t p,
                                 std::uint64_t budget)
    : m_(m), n_(n), p_(p) {
    require_two_blocks(m, n);
    FieldSpec::prime_field(p); // validates primality
    size_ = checked_pow(p, m + 3 * n - 2, budget,
                        "p^(m+3n-2) = " + std::to_string(p) + "^" + std::to_string(m + 3 * n - 2));
}

ShortForm NilcEnumeration::at(std::uint64_t index) const {
    if (index >= size_) throw ShapeError("enumeration index out of range");
    Layout lay{m_, n_, p_};
    std::vector<std::uint64_t> params(lay.params(), 0);
    lay.decode(index, params, lay.free_slots());
    return short_form_of(lay, params, FieldSpec::prime_field(p_));
}

std::uint64_t NilcEnumeration::index_of(const ShortForm& sf) const {
    if (sf.m != m_ || sf.n != n_) throw ShapeError("short form block sizes differ");
    if (sf.field() != FieldSpec::prime_field(p_))
        throw FieldMismatchError("short form is not over GF(" + std::to_string(p_) + ")");
    if (!is_nilpotent_short(sf))
        throw NotNilpotentError("only nilpotent short forms are enumerated");
    Layout lay{m_, n_, p_};
    std::vector<std::uint64_t> params(lay.params(), 0);
    params_of_short_form(lay, sf, params);
    return lay.encode(params, lay.free_slots());
}

StabEnumeration::StabEnumeration(std::size_t m, std::size_t n, std::uint64_t p,
                                 std::uint64_t budget)
    : m_(m), n_(n), p_(p) {
    require_two_blocks(m, n);
    FieldSpec::prime_field(p);
    std::uint64_t base = checked_pow(p, m + 3 * n - 2, budget,
                                     "p^(m+3n-2) = " + std::to_string(p) + "^" +
                                         std::to_string(m + 3 * n - 2));
    if (base > budget / ((p - 1) * (p - 1)))
        throw BudgetError("(p-1)^2 * p^(m+3n-2) exceeds the budget of " + std::to_string(budget));
    size_ = (p - 1) * (p - 1) * base;
}

StabShort StabEnumeration::at(std::uint64_t index) const {
    if (index >= size_) throw ShapeError("enumeration index out of range");
    FieldSpec spec = FieldSpec::prime_field(p_);
    // digit order: x_0-1, x_1.., y, z, w_0-1, w_1..
    std::vector<std::uint64_t> digits;
    std::vector<std::uint64_t> radix;
    radix.push_back(p_ - 1);
    for (std::size_t i = 1; i < m_; ++i) radix.push_back(p_);
    for (std::size_t i = 0; i < 2 * n_; ++i) radix.push_back(p_);
    radix.push_back(p_ - 1);
    for (std::size_t i = 1; i < n_; ++i) radix.push_back(p_);

    digits.resize(radix.size());
    for (std::size_t pos = radix.size(); pos-- > 0;) {
        digits[pos] = index % radix[pos];
        index /= radix[pos];
    }

    auto scal = [&](std::uint64_t v) { return Scalar::of_int(static_cast<long>(v), spec); };
    std::vector<Scalar> x, y, z, w;
    std::size_t pos = 0;
    x.push_back(scal(digits[pos++] + 1));
    for (std::size_t i = 1; i < m_; ++i) x.push_back(scal(digits[pos++]));
    for (std::size_t i = 0; i < n_; ++i) y.push_back(scal(digits[pos++]));
    for (std::size_t i = 0; i < n_; ++i) z.push_back(scal(digits[pos++]));
    w.push_back(scal(digits[pos++] + 1));
    for (std::size_t i = 1; i < n_; ++i) w.push_back(scal(digits[pos++]));
    return StabShort(m_, n_, std::move(x), std::move(y), std::move(z), std::move(w));
}

namespace {

struct OrbitPartition {
    std::vector<std::uint64_t> orbit_id;          // element -> minimal member
    std::vector<std::uint64_t> orbit_ids_sorted;  // ascending, one per orbit
};

OrbitPartition close_orbits(const Layout& lay, std::uint64_t count,
                            const std::vector<Generator>& gens, unsigned workers) {
    UnionFind uf(count);
    const std::size_t chunk = 8192;
    const unsigned worker_count = std::max(1u, workers);
    std::vector<std::size_t> slots = lay.free_slots();

    auto targets_for_range = [&](std::uint64_t lo, std::uint64_t hi,
                                 std::vector<std::uint64_t>& out) {
        std::vector<std::uint64_t> params(lay.params(), 0);
        std::size_t cursor = 0;
        for (std::uint64_t e = lo; e < hi; ++e) {
            lay.decode(e, params, slots);
            PMat mat = expand_params(lay, params);
            for (const Generator& gen : gens) {
                PMat conj = pmul(pmul(gen.inv, mat, lay.p), gen.mat, lay.p);
                compress_params(lay, conj, params);
                out[cursor++] = lay.encode(params, slots);
            }
        }
    };

    std::uint64_t wave = static_cast<std::uint64_t>(chunk) * worker_count;
    std::vector<std::vector<std::uint64_t>> buffers(worker_count);
    std::vector<std::exception_ptr> errors(worker_count);
    for (std::uint64_t base = 0; base < count; base += wave) {
        std::vector<std::thread> threads;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges(worker_count, {0, 0});
        for (unsigned w = 0; w < worker_count; ++w) {
            std::uint64_t lo = base + static_cast<std::uint64_t>(w) * chunk;
            std::uint64_t hi = std::min<std::uint64_t>(count, lo + chunk);
            if (lo >= hi) continue;
            ranges[w] = {lo, hi};
            buffers[w].assign((hi - lo) * gens.size(), 0);
            threads.emplace_back([&, w, lo, hi] {
                try {
                    targets_for_range(lo, hi, buffers[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (unsigned w = 0; w < worker_count; ++w)
            if (errors[w]) std::rethrow_exception(errors[w]);
        for (unsigned w = 0; w < worker_count; ++w) {
            auto [lo, hi] = ranges[w];
            std::size_t cursor = 0;
            for (std::uint64_t e = lo; e < hi; ++e)
                for (std::size_t g = 0; g < gens.size(); ++g) uf.unite(e, buffers[w][cursor++]);
        }
    }

    OrbitPartition part;
    part.orbit_id.assign(count, 0);
    std::vector<std::uint64_t> min_of_root(count, count);
    for (std::uint64_t e = 0; e < count; ++e) {
        std::uint64_t root = uf.find(e);
        if (min_of_root[root] == count) {
            min_of_root[root] = e; // ascending scan: first hit is minimal
            part.orbit_ids_sorted.push_back(e);
        }
        part.orbit_id[e] = min_of_root[root];
    }
    return part;
}

bool params_all_bc_zero(const Layout& lay, const std::vector<std::uint64_t>& params) {
    for (std::size_t i = 0; i < lay.n; ++i)
        if (params[lay.slot_b(i)] != 0 || params[lay.slot_c(i)] != 0) return false;
    return true;
}

OrbitReport build_report(std::size_t m, std::size_t n, std::uint64_t p,
                         const OrbitOptions& options, OrbitPartition& part_out) {
    NilcEnumeration nilc(m, n, p, options.budget);
    Layout lay{m, n, p};
    FieldSpec spec = FieldSpec::prime_field(p);
    std::uint64_t count = nilc.size();

    std::vector<Generator> gens = stabilizer_generators(lay);
    OrbitPartition part = close_orbits(lay, count, gens, options.workers);

    OrbitReport report;
    report.m = m;
    report.n = n;
    report.p = p;
    report.total_nilc = count;
    report.orbit_count = part.orbit_ids_sorted.size();
    report.conjectured_indecomposable = conjectured_count(m, n, p);

    // canonical-template census and decomposability flags per orbit
    std::vector<std::size_t> slots = lay.free_slots();
    std::vector<std::uint64_t> params(lay.params(), 0);
    std::map<std::uint64_t, bool> orbit_has_bczero;
    for (std::uint64_t e = 0; e < count; ++e) {
        lay.decode(e, params, slots);
        std::uint64_t orbit = part.orbit_id[e];
        if (params_all_bc_zero(lay, params)) orbit_has_bczero[orbit] = true;
        else orbit_has_bczero.emplace(orbit, false);
        ShortForm sf = short_form_of(lay, params, spec);
        if (canonical_template_info(sf)) {
            report.template_count += 1;
            report.canonical_hits[orbit].push_back(sf.str());
        }
    }
    for (std::uint64_t orbit : part.orbit_ids_sorted) {
        if (orbit_has_bczero[orbit]) report.decomposable_orbits += 1;
        else report.indecomposable_orbits += 1;
    }
    if (report.indecomposable_orbits != report.conjectured_indecomposable)
        report.findings.push_back(
            "indecomposable orbit count " + std::to_string(report.indecomposable_orbits) +
            " differs from the template-count conjecture " +
            std::to_string(report.conjectured_indecomposable));
    if (report.template_count != report.conjectured_indecomposable)
        report.findings.push_back("enumerated template members " +
                                  std::to_string(report.template_count) +
                                  " differ from the conjectured count " +
                                  std::to_string(report.conjectured_indecomposable));

    if (options.audit) {
        StabEnumeration stab(m, n, p, options.budget);
        for (std::uint64_t e = 0; e < count; ++e) {
            ShortForm sf = nilc.at(e);
            for (std::uint64_t s = 0; s < stab.size(); ++s) {
                ShortForm image = apply_stab(stab.at(s), sf);
                if (part.orbit_id[nilc.index_of(image)] != part.orbit_id[e]) {
                    report.violations.push_back(
                        "audit: orbit of element " + std::to_string(e) +
                        " is not closed under the full stabilizer group");
                    break;
                }
            }
        }
    }

    part_out = std::move(part);
    return report;
}

} // namespace

OrbitReport compute_orbits(std::size_t m, std::size_t n, std::uint64_t p,
                           const OrbitOptions& options) {
    OrbitPartition part;
    return build_report(m, n, p, options, part);
}

OrbitReport certify_classification(std::size_t m, std::size_t n, std::uint64_t p,
                                   const OrbitOptions& options) {
    OrbitPartition part;
    OrbitReport report = build_report(m, n, p, options, part);
    report.certified = true;

    NilcEnumeration nilc(m, n, p, options.budget);
    Layout lay{m, n, p};
    FieldSpec spec = FieldSpec::prime_field(p);
    std::uint64_t count = nilc.size();
    std::vector<std::size_t> slots = lay.free_slots();

    struct OrbitStats {
        bool has_bczero = false;
        std::vector<std::uint64_t> members;
        std::vector<std::uint64_t> templates; // encoded template members
        std::vector<std::size_t> ranks;
    };
    std::map<std::uint64_t, OrbitStats> orbits;

    std::vector<std::uint64_t> params(lay.params(), 0);
    for (std::uint64_t e = 0; e < count; ++e) {
        lay.decode(e, params, slots);
        OrbitStats& stats = orbits[part.orbit_id[e]];
        stats.members.push_back(e);
        if (params_all_bc_zero(lay, params)) stats.has_bczero = true;
        ShortForm sf = short_form_of(lay, params, spec);
        if (canonical_template_info(sf)) stats.templates.push_back(e);
        stats.ranks.push_back(canonical_rank(sf));
    }

    for (auto& [orbit, stats] : orbits) {
        bool rank_constant =
            std::all_of(stats.ranks.begin(), stats.ranks.end(),
                        [&](std::size_t r) { return r == stats.ranks.front(); });
        if (!rank_constant)
            report.violations.push_back("orbit " + std::to_string(orbit) +
                                        ": canonical rank is not constant");
        bool all_rank_zero =
            std::all_of(stats.ranks.begin(), stats.ranks.end(),
                        [](std::size_t r) { return r == 0; });
        if (stats.has_bczero != all_rank_zero) {
            report.violations.push_back(
                "orbit " + std::to_string(orbit) +
                ": decomposability flags disagree (b=c=0 member: " +
                (stats.has_bczero ? "yes" : "no") + ", all ranks zero: " +
                (all_rank_zero ? "yes" : "no") + ")");
            continue;
        }
        if (stats.has_bczero) {
            if (!stats.templates.empty())
                report.violations.push_back("orbit " + std::to_string(orbit) +
                                            ": decomposable orbit contains a canonical template");
            continue;
        }
        if (stats.templates.size() != 1) {
            report.violations.push_back(
                "orbit " + std::to_string(orbit) + ": expected exactly one canonical member, found " +
                std::to_string(stats.templates.size()));
            continue;
        }
        std::uint64_t canonical_member = stats.templates.front();
        for (std::uint64_t e : stats.members) {
            CanonResult res = canonical_form(nilc.at(e));
            if (res.form == CanonFormTag::Decomposable) {
                report.violations.push_back("orbit " + std::to_string(orbit) + ": element " +
                                            std::to_string(e) +
                                            " canonicalized to Decomposable inside an "
                                            "indecomposable orbit");
                continue;
            }
            if (nilc.index_of(*res.canonical) != canonical_member) {
                report.violations.push_back(
                    "orbit " + std::to_string(orbit) + ": element " + std::to_string(e) +
                    " canonicalizes to " + res.canonical->str() +
                    " instead of the orbit's canonical member");
            }
        }
    }

    return report;
}

std::string OrbitReport::to_text() const {
    std::ostringstream out;
    out << "orbit report m=" << m << " n=" << n << " p=" << p << "\n";
    out << "total_nilc=" << total_nilc << "\n";
    out << "orbit_count=" << orbit_count << "\n";
    out << "decomposable_orbits=" << decomposable_orbits << "\n";
    out << "indecomposable_orbits=" << indecomposable_orbits << "\n";
    out << "template_count=" << template_count << "\n";
    out << "conjectured_indecomposable=" << conjectured_indecomposable << "\n";
    out << "certified=" << (certified ? "yes" : "no") << "\n";
    out << "canonical_hits=" << canonical_hits.size() << "\n";
    for (const auto& [orbit, hits] : canonical_hits) {
        out << "  orbit " << orbit << ":";
        for (const std::string& hit : hits) out << " " << hit;
        out << "\n";
    }
    out << "findings=" << findings.size() << "\n";
    for (const std::string& finding : findings) out << "  " << finding << "\n";
    out << "violations=" << violations.size() << "\n";
    for (const std::string& violation : violations) out << "  " << violation << "\n";
    return out.str();
}

} // namespace nilpair
