#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilpair/canon.hpp"

namespace nilpair {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Exhaustive enumeration of the nilpotent commutant of J_m ⊕ J_n over
/// GF(p): exactly p^(m+3n-2) short forms, indexed so that numeric index
/// order equals lexicographic order on the (a, b, c, d) rows with
/// residues ordered 0..p-1.
class NilcEnumeration {
public:
    NilcEnumeration(std::size_t m, std::size_t n, std::uint64_t p,
                    std::uint64_t budget = kDefaultBudget);

    std::uint64_t size() const { return size_; }
    ShortForm at(std::uint64_t index) const;
    std::uint64_t index_of(const ShortForm& sf) const;

    std::size_t m() const { return m_; }
    std::size_t n() const { return n_; }
    std::uint64_t p() const { return p_; }

private:
    std::size_t m_, n_;
    std::uint64_t p_;
    std::uint64_t size_;
};

/// Exhaustive enumeration of the stabilizer of J_m ⊕ J_n over GF(p):
/// exactly (p-1)^2 · p^(m+3n-2) elements, all invertible.
class StabEnumeration {
public:
    StabEnumeration(std::size_t m, std::size_t n, std::uint64_t p,
                    std::uint64_t budget = kDefaultBudget);

    std::uint64_t size() const { return size_; }
    StabShort at(std::uint64_t index) const;

private:
    std::size_t m_, n_;
    std::uint64_t p_;
    std::uint64_t size_;
};

struct OrbitOptions {
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
    bool audit = false; // verify closure against the full stabilizer group
};

/// Exhaustive ground truth for one (m, n, p): orbit partition of the
/// nilpotent commutant under the stabilizer action, canonical-template
/// census, and (for certify_classification) the classification checks.
struct OrbitReport {
    std::size_t m = 0;
    std::size_t n = 0;
    std::uint64_t p = 0;
    std::uint64_t total_nilc = 0;
    std::uint64_t orbit_count = 0;
    std::uint64_t decomposable_orbits = 0;
    std::uint64_t indecomposable_orbits = 0;
    std::uint64_t template_count = 0;             // enumerated canonical templates
    std::uint64_t conjectured_indecomposable = 0; // Σ_r (p^{m+r-2} + p^{m+r-3})
    bool certified = false;                       // classification checks were run
    std::map<std::uint64_t, std::vector<std::string>> canonical_hits;
    std::vector<std::string> findings;   // informational, e.g. conjecture mismatch
    std::vector<std::string> violations; // certification failures

    std::string to_text() const; // deterministic, line-oriented
};

/// Orbit partition by breadth-first closure under a stabilizer
/// generating set (one-parameter elements plus scalings); orbit ids are
/// the lexicographically minimal members. Deterministic for any worker
/// count.
OrbitReport compute_orbits(std::size_t m, std::size_t n, std::uint64_t p,
                           const OrbitOptions& options = {});

/// compute_orbits plus the classification certificate: decomposable
/// orbits are exactly those containing a b = c = 0 member and carry
/// canonical rank 0 throughout; every other orbit contains exactly one
/// canonical-template member, canonical_rank is constant on it, and
/// canonical_form maps each member to that unique template member.
OrbitReport certify_classification(std::size_t m, std::size_t n, std::uint64_t p,
                                   const OrbitOptions& options = {});

} // namespace nilpair
