#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "motdec/weights.hpp"
#include "support/random_descriptors.hpp"

using namespace motdec;

namespace {

MultiWeight mw(std::vector<std::vector<int>> tuples) {
    std::vector<WeightTuple> ps;
    for (auto& t : tuples) ps.emplace_back(std::move(t));
    return MultiWeight(std::move(ps));
}

SimpleFactorDescriptor quaternion_factor(long g) {
    SimpleFactorDescriptor f;
    f.n = 1;
    f.d = 2;
    f.g_factor = g;
    f.brauer = BrauerTag::quaternion_indefinite;
    return f;
}

SimpleFactorDescriptor totally_real_sn(int n, long g) {
    SimpleFactorDescriptor f;
    f.n = n;
    f.d = 1;
    f.g_factor = g;
    f.involution = InvolutionTag::totally_real;
    std::vector<int> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    f.galois_generators.push_back(rot);
    if (n > 2) {
        std::vector<int> sw(n);
        for (int i = 0; i < n; ++i) sw[i] = i;
        std::swap(sw[0], sw[1]);
        f.galois_generators.push_back(sw);
    }
    return f;
}

SimpleFactorDescriptor rational_factor(long g) {
    SimpleFactorDescriptor f;
    f.g_factor = g;
    return f;
}

} // namespace

TEST_CASE("weight function on the polynomial cone") {
    CHECK(weight_of(mw({{0, 0}})) == 0);
    CHECK(weight_of(mw({{2, 1}})) == 3);
    CHECK(weight_of(mw({{1}, {2}})) == 3);
    CHECK_THROWS_AS(weight_of(mw({{1, -1}})), DescriptorError);
}

TEST_CASE("duality involution on weights") {
    const auto q2 = quaternion_factor(2);
    CHECK(dual_wdual(mw({{1, 1}}), q2, 2) == mw({{1, 1}}));
    CHECK(dual_wdual(mw({{1, 0}}), q2, 2) == mw({{2, 1}}));

    const auto tr = totally_real_sn(2, 2);
    CHECK(dual_wdual(mw({{2}, {0}}), tr, 2) == mw({{0}, {2}}));

    SimpleFactorDescriptor bad = quaternion_factor(2);
    bad.n = 3; // nd = 6 does not divide 4
    CHECK_THROWS_AS(dual_wdual(mw({{1, 0}}), bad, 2), DescriptorError);
}

TEST_CASE("admissibility classification") {
    const auto q2 = quaternion_factor(2);
    CHECK(classify(mw({{2, 0}}), q2, 2) == AdmClass::adm);
    CHECK(classify(mw({{3, 0}}), q2, 2) == AdmClass::pol_not_adm);
    CHECK(classify(mw({{0, 0}}), q2, 2) == AdmClass::adm);
    CHECK(classify(mw({{1, -1}}), q2, 2) == AdmClass::not_pol);
}

TEST_CASE("lefschetz cone membership") {
    const auto q4 = quaternion_factor(4);
    CHECK(lefschetz_admissible(HalfWeightTuple::from_doubled({4, 2}), q4, 4));
    CHECK_FALSE(lefschetz_admissible(HalfWeightTuple::from_doubled({6, 0}), q4, 4));

    const auto q2 = quaternion_factor(2);
    CHECK(lefschetz_admissible(HalfWeightTuple::from_doubled({2, -2}), q2, 2));
    // entries must lie in g/nd + Z: doubled parity mismatch
    CHECK_THROWS_AS(lefschetz_admissible(HalfWeightTuple::from_doubled({1, 1}), q2, 2),
                    DescriptorError);
}

TEST_CASE("orbit computation") {
    const auto s2 = PermutationGroup::from_generators(2, {{1, 0}});
    const auto oc = orbit_of(mw({{1}, {0}}), s2);
    CHECK(oc.representative == mw({{0}, {1}}));
    CHECK(oc.orbit_size == 2);
    CHECK(oc.stabilizer_order == 1);

    const auto fixed = orbit_of(mw({{1}, {1}}), s2);
    CHECK(fixed.orbit_size == 1);
    CHECK(fixed.stabilizer_order == 2);

    const auto trivial = PermutationGroup::from_generators(2, {});
    CHECK(orbit_of(mw({{1}, {0}}), trivial).orbit_size == 1);
}

TEST_CASE("admissible orbit enumeration matches the paper tables") {
    const auto q2 = quaternion_factor(2);
    const auto orbits = enumerate_adm_orbits_factor(q2);
    REQUIRE(orbits.size() == 6);
    const std::vector<MultiWeight> expected = {
        mw({{0, 0}}), mw({{1, 0}}), mw({{1, 1}}), mw({{2, 0}}), mw({{2, 1}}), mw({{2, 2}})};
    for (size_t i = 0; i < expected.size(); ++i)
        CHECK(orbits[i].representative == expected[i]);

    // Burnside oracle for the totally real case: (fixed points summed over
    // the group) / order = (9 + 3) / 2 = 6.
    const auto tr = totally_real_sn(2, 2);
    const auto grp = galois_group(tr);
    long fixed_total = 0;
    for (const auto& elem : grp.elements()) {
        long fixed = 0;
        for (const auto& e : enumerate_adm_elements(tr)) {
            MultiWeight permuted;
            permuted.per_sigma.resize(e.per_sigma.size());
            for (size_t i = 0; i < e.per_sigma.size(); ++i)
                permuted.per_sigma[elem[i]] = e.per_sigma[i];
            if (permuted == e) ++fixed;
        }
        fixed_total += fixed;
    }
    CHECK(fixed_total / grp.order() == 6);
    CHECK(enumerate_adm_orbits_factor(tr).size() == 6);

    for (long g = 1; g <= 5; ++g)
        CHECK(enumerate_adm_orbits_factor(rational_factor(g)).size() == 2 * g + 1);
}

TEST_CASE("admissible generating function") {
    const auto q2 = quaternion_factor(2);
    CHECK(adm_generating_function(q2, 2) == std::vector<long long>{1, 1, 2, 1, 1});
    CHECK(adm_generating_function(rational_factor(3), 3) ==
          std::vector<long long>(7, 1));

    // brute-force enumeration against the q-Pascal recurrence, plus
    // palindromicity from the duality involution
    for (int d = 1; d <= 3; ++d)
        for (int N = 0; N <= 5; ++N) {
            SimpleFactorDescriptor f;
            f.n = 1;
            f.d = d;
            f.g_factor = static_cast<long>(d) * N; // 2g/nd = 2N
            if (f.g_factor == 0) continue;
            const auto gf = adm_generating_function(f, f.g_factor);
            CHECK(gf == gaussian_binomial_box(d, 2 * N));
            for (size_t i = 0; i < gf.size(); ++i)
                CHECK(gf[i] == gf[gf.size() - 1 - i]);
        }
}

TEST_CASE("duality suite over randomized descriptors") {
    const auto factors = motdec::testsupport::random_factors(20260810u, 40);
    for (const auto& f : factors) {
        const long g = f.g_factor;
        const auto orbits = enumerate_adm_orbits_factor(f);
        const auto grp = galois_group(f);

        std::map<long, long> weight_counts;
        std::set<MultiWeight> adm_reps;
        long long elements = 0;
        for (const auto& oc : orbits) {
            adm_reps.insert(oc.representative);
            elements += oc.orbit_size;
            ++weight_counts[weight_of(oc.representative)];
        }

        // element count agrees with the generating function
        const auto gf = adm_generating_function(f, g);
        long long per_sigma = 0;
        for (long long c : gf) per_sigma += c;
        long long expected = 1;
        for (int i = 0; i < f.n; ++i) expected *= per_sigma;
        CHECK(elements == expected);

        for (const auto& oc : orbits) {
            const auto dual = dual_wdual(oc.representative, f, g);
            CHECK(weight_of(dual) == 2 * g - weight_of(oc.representative));
            CHECK(dual_wdual(dual, f, g) == oc.representative);
            // duality is a bijection of the admissible orbit set
            CHECK(adm_reps.count(orbit_of(dual, grp).representative) == 1);
            // orbit records are constant on orbits
            for (const auto& elem : grp.elements()) {
                MultiWeight permuted;
                permuted.per_sigma.resize(oc.representative.per_sigma.size());
                for (size_t i = 0; i < permuted.per_sigma.size(); ++i)
                    permuted.per_sigma[elem[i]] = oc.representative.per_sigma[i];
                CHECK(orbit_of(permuted, grp) == oc);
            }
        }

        for (const auto& [w, count] : weight_counts)
            CHECK(count == weight_counts.at(2 * g - w));
    }
}

TEST_CASE("duality exits the polynomial cone beyond the admissible bound") {
    const auto q2 = quaternion_factor(2);
    const auto dual = dual_wdual(mw({{3, 0}}), q2, 2);
    CHECK(dual.per_sigma[0].entries.back() < 0);
}

TEST_CASE("coarse value map") {
    const auto q2 = quaternion_factor(2);
    const auto grp = galois_group(q2);
    const auto a = coarse_value(orbit_of(mw({{2, 0}}), grp), q2);
    const auto b = coarse_value(orbit_of(mw({{1, 1}}), grp), q2);
    CHECK(a.first == std::vector<long>{2});
    CHECK(a == b);

    const auto tr = totally_real_sn(2, 2);
    const auto tg = galois_group(tr);
    const auto c = coarse_value(orbit_of(mw({{2}, {0}}), tg), tr);
    CHECK(c.first == std::vector<long>{0, 2});
    CHECK(c.second == 2);
}

TEST_CASE("CM duality flag applies the conjugation permutation") {
    SimpleFactorDescriptor f = totally_real_sn(2, 2);
    f.involution = InvolutionTag::cm;
    f.conjugation = std::vector<int>{1, 0};
    const auto plain = dual_wdual(mw({{2}, {0}}), f, 2, false);
    const auto conj = dual_wdual(mw({{2}, {0}}), f, 2, true);
    CHECK(plain == mw({{0}, {2}}));
    CHECK(conj == mw({{2}, {0}}));
    // conjugation lies in the Galois image, so orbits are unchanged
    const auto grp = galois_group(f);
    CHECK(orbit_of(plain, grp) == orbit_of(conj, grp));
}

TEST_CASE("descriptor validation") {
    AbelianDescriptor desc;
    desc.g = 2;
    desc.factors.push_back(quaternion_factor(2));
    CHECK_NOTHROW(desc.validate());

    AbelianDescriptor bad = desc;
    bad.factors[0].galois_generators.push_back({0, 1, 2}); // wrong degree
    CHECK_THROWS_AS(bad.validate(), DescriptorError);

    AbelianDescriptor intransitive;
    intransitive.g = 2;
    intransitive.factors.push_back(totally_real_sn(2, 2));
    intransitive.factors[0].galois_generators = {{0, 1}};
    CHECK_THROWS_AS(intransitive.validate(), DescriptorError);

    AbelianDescriptor big;
    big.g = 9;
    big.factors.push_back(totally_real_sn(2, 9));
    big.factors[0].n = 9;
    CHECK_THROWS_AS(big.validate(), ResourceLimitError);

    AbelianDescriptor baddiv;
    baddiv.g = 2;
    baddiv.factors.push_back(totally_real_sn(3, 2)); // 3 does not divide 4
    CHECK_THROWS_AS(baddiv.validate(), DescriptorError);
}
