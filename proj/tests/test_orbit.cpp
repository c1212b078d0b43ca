#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "nilpair/orbit.hpp"
#include "testutil.hpp"

using namespace nilpair;
using testutil::Rng;

namespace {

// Ground-truth partition straight from the definition: the orbit of e
// is its image under every single stabilizer element.
std::map<std::uint64_t, std::set<std::uint64_t>> full_group_partition(std::size_t m, std::size_t n,
                                                                      std::uint64_t p) {
    NilcEnumeration nilc(m, n, p);
    StabEnumeration stab(m, n, p);
    std::map<std::uint64_t, std::set<std::uint64_t>> orbits; // min member -> members
    std::set<std::uint64_t> seen;
    for (std::uint64_t e = 0; e < nilc.size(); ++e) {
        if (seen.count(e)) continue;
        std::set<std::uint64_t> orbit;
        ShortForm sf = nilc.at(e);
        for (std::uint64_t s = 0; s < stab.size(); ++s)
            orbit.insert(nilc.index_of(apply_stab(stab.at(s), sf)));
        for (std::uint64_t member : orbit) seen.insert(member);
        orbits[*orbit.begin()] = std::move(orbit);
    }
    return orbits;
}

} // namespace

TEST_CASE("enumeration sizes") {
    CHECK(NilcEnumeration(3, 2, 2).size() == 128); // 2^(3+6-2)
    CHECK(NilcEnumeration(2, 1, 2).size() == 8);   // 2^(2+3-2)
    CHECK(NilcEnumeration(3, 1, 3).size() == 81);  // 3^(3+3-2)
    CHECK(StabEnumeration(3, 2, 2).size() == 128); // 1*1*2^7
    CHECK(StabEnumeration(2, 1, 3).size() == 108); // 4*3^3
}

TEST_CASE("enumeration budget") {
    CHECK_THROWS_AS(NilcEnumeration(6, 4, 2, 1000), BudgetError);
    CHECK_NOTHROW(NilcEnumeration(6, 4, 2)); // 2^16 fits the default budget
    CHECK_THROWS_AS(compute_orbits(6, 4, 3, OrbitOptions{.budget = 1 << 20}), BudgetError);
}

TEST_CASE("nilc enumeration is a bijection onto nilpotent short forms") {
    NilcEnumeration nilc(3, 2, 2);
    for (std::uint64_t i = 0; i < nilc.size(); ++i) {
        ShortForm sf = nilc.at(i);
        CHECK(is_nilpotent_short(sf));
        CHECK(nilc.index_of(sf) == i);
    }
    CHECK_THROWS_AS(nilc.at(nilc.size()), ShapeError);
}

TEST_CASE("every enumerated stabilizer element expands invertibly") {
    StabEnumeration stab(2, 1, 3);
    for (std::uint64_t s = 0; s < stab.size(); ++s) {
        DenseMatrix x = stab_expand(stab.at(s));
        CHECK(x.rank() == 3);
    }
}

TEST_CASE("orbit partition at (3,2,2): regression constants") {
    OrbitReport report = compute_orbits(3, 2, 2);
    CHECK(report.total_nilc == 128);
    // 18 canonical templates (6 at r=1, 12 at r=2) and one decomposable
    // orbit per b=c=0 element (unique summand decomposition)
    CHECK(report.orbit_count == 26);
    CHECK(report.indecomposable_orbits == 18);
    CHECK(report.decomposable_orbits == 8);
    CHECK(report.template_count == 18);
    CHECK(report.conjectured_indecomposable == 18);
    CHECK(report.findings.empty());
    CHECK(report.violations.empty());
    CHECK(report.canonical_hits.size() == 18);
    for (const auto& [orbit, hits] : report.canonical_hits) CHECK(hits.size() == 1);
}

TEST_CASE("generator closure equals the definition-level partition") {
    for (auto [m, n, p] : {std::tuple<std::size_t, std::size_t, std::uint64_t>{3, 2, 2},
                           std::tuple<std::size_t, std::size_t, std::uint64_t>{2, 1, 3}}) {
        auto truth = full_group_partition(m, n, p);
        OrbitReport report = compute_orbits(m, n, p);
        CHECK(report.orbit_count == truth.size());

        // the zero short form (index 0) is fixed by every conjugation
        REQUIRE(truth.count(0) == 1);
        CHECK(truth.at(0).size() == 1);

        // orbit sizes divide the stabilizer group order, and the
        // partition covers everything exactly once
        StabEnumeration stab(m, n, p);
        std::uint64_t covered = 0;
        for (const auto& [id, members] : truth) {
            CHECK(stab.size() % members.size() == 0);
            covered += members.size();
        }
        CHECK(covered == NilcEnumeration(m, n, p).size());
    }
}

TEST_CASE("canonical rank agrees with the orbit-level classification at (3,2,2)") {
    NilcEnumeration nilc(3, 2, 2);
    auto truth = full_group_partition(3, 2, 2);
    for (const auto& [id, members] : truth) {
        bool has_bczero = false;
        std::size_t max_leading = 0;
        for (std::uint64_t e : members) {
            ShortForm sf = nilc.at(e);
            auto k = leading_pair_index(sf);
            if (!k) has_bczero = true;
            else max_leading = std::max(max_leading, *k);
        }
        for (std::uint64_t e : members) {
            std::size_t expected = has_bczero ? 0 : 2 - max_leading;
            CHECK(canonical_rank(nilc.at(e)) == expected);
        }
    }
}

TEST_CASE("worker count does not change the report") {
    OrbitOptions one;
    one.workers = 1;
    OrbitOptions three;
    three.workers = 3;
    CHECK(certify_classification(3, 2, 2, one).to_text() ==
          certify_classification(3, 2, 2, three).to_text());
}

TEST_CASE("audit mode verifies closure against the full group") {
    OrbitOptions options;
    options.audit = true;
    OrbitReport report = compute_orbits(2, 1, 3, options);
    CHECK(report.violations.empty());
    OrbitReport report2 = compute_orbits(3, 2, 2, options);
    CHECK(report2.violations.empty());
}

TEST_CASE("certification passes at the smallest sizes") {
    OrbitReport r212 = certify_classification(2, 1, 2);
    CHECK(r212.certified);
    CHECK(r212.violations.empty());
    CHECK(r212.orbit_count == 5);
    CHECK(r212.indecomposable_orbits == 3);

    OrbitReport r322 = certify_classification(3, 2, 2);
    CHECK(r322.violations.empty());
}

TEST_CASE("certification also passes beyond the smallest sizes") {
    // wider gap between the block sizes
    OrbitReport r412 = certify_classification(4, 1, 2);
    CHECK(r412.violations.empty());
    CHECK(r412.findings.empty());

    OrbitReport r522 = certify_classification(5, 2, 2);
    CHECK(r522.violations.empty());
    CHECK(r522.findings.empty());
    // conjecture: sum over r of (2^(5+r-2) + 2^(5+r-3))
    CHECK(r522.conjectured_indecomposable == (16 + 8) + (32 + 16));
    CHECK(r522.indecomposable_orbits == 72);
}

TEST_CASE("fast closure path matches the Scalar-level group action") {
    Rng rng(31);
    NilcEnumeration nilc(3, 2, 2);
    StabEnumeration stab(3, 2, 2);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t e = rng.below(nilc.size());
        std::uint64_t s = rng.below(stab.size());
        ShortForm image = apply_stab(stab.at(s), nilc.at(e));
        // index_of + at round-trips through the fast encoding
        CHECK(nilc.at(nilc.index_of(image)) == image);
    }
}

TEST_CASE("orbit report text is deterministic") {
    OrbitReport a = certify_classification(2, 1, 3);
    OrbitReport b = certify_classification(2, 1, 3);
    CHECK(a.to_text() == b.to_text());
    CHECK(a.violations.empty());
    CHECK(a.orbit_count == 7);
    CHECK(a.indecomposable_orbits == 4);
    CHECK(a.decomposable_orbits == 3);
}
