// Invariant suites over whole families of groups.  Exhaustive where the
// domain is small, deterministic sampling where it is not.

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "nonsep/canonical.hpp"
#include "nonsep/nonsep.hpp"
#include "nonsep/search.hpp"
#include "oracle.hpp"

using namespace nonsep;

namespace {

std::vector<GroupSpec> groups_up_to(long long max_order) {
    std::vector<GroupSpec> out;
    for (long long a = 1; a * a <= max_order; ++a)
        for (long long b = a; a * b <= max_order; b += a) out.push_back({a, b});
    return out;
}

/// Deterministic sample of H-sets of A (all of them when few enough).
std::vector<HSet> sample_hsets(const GroupSpec& A, std::size_t want, std::uint32_t seed) {
    const auto classes = pair_classes(A);
    const std::size_t p = classes.size();
    if (p < 4) return {};
    if (count_hsets(A) <= want) return enumerate_hsets(A);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, p - 1);
    std::set<std::array<GroupElement, 4>> seen;
    std::vector<HSet> out;
    while (out.size() < want) {
        std::set<std::size_t> idx;
        while (idx.size() < 4) idx.insert(pick(rng));
        std::array<GroupElement, 4> reps;
        std::size_t i = 0;
        for (const std::size_t j : idx) reps[i++] = classes[j].rep;
        if (seen.insert(reps).second) out.push_back(HSet{reps});
    }
    return out;
}

}  // namespace

TEST(Invariants, CyclicSubgroupsAreCyclicWithCyclicQuotient) {
    for (const GroupSpec& A : groups_up_to(400)) {
        for (const Subgroup& B : cyclic_subgroups_with_cyclic_quotient(A)) {
            ASSERT_TRUE(B.is_cyclic()) << A;
            ASSERT_EQ(Subgroup::cyclic(A, B.min_generator()), B) << A;
            ASSERT_EQ(quotient_invariants(A, B).first, 1) << A;
        }
    }
}

TEST(Invariants, CosetNumberWellDefined) {
    // exactly one c in [0, n/2] meets each pair class, for every context
    for (const GroupSpec& A : groups_up_to(400)) {
        for (const Context& ctx : decision_contexts(A)) {
            std::vector<long long> coset_of(static_cast<std::size_t>(A.order()), -1);
            std::vector<GroupElement> coset = ctx.B.elements();
            for (long long k = 0; k < ctx.n; ++k) {
                for (auto& e : coset) {
                    ASSERT_EQ(coset_of[element_index(A, e)], -1);
                    coset_of[element_index(A, e)] = k;
                    e = add(A, e, ctx.gen);
                }
            }
            for (const PairClass& cls : pair_classes(A)) {
                const long long kh = coset_of[element_index(A, cls.rep)];
                const long long kn = coset_of[element_index(A, neg(A, cls.rep))];
                int candidates = 0;
                if (2 * kh <= ctx.n) ++candidates;
                if (2 * kn <= ctx.n && kn != kh) ++candidates;
                ASSERT_EQ(candidates, 1) << A << " class " << cls.rep;
            }
        }
    }
}

TEST(Invariants, CosetNumbersIgnoreGeneratorSign) {
    std::uint32_t seed = 1;
    for (const GroupSpec& A : groups_up_to(144)) {
        const auto hs = sample_hsets(A, 12, seed++);
        if (hs.empty()) continue;
        for (const Context& ctx : decision_contexts(A)) {
            const Context flipped{ctx.B, neg(A, ctx.gen), ctx.n};
            for (const HSet& H : hs)
                ASSERT_EQ(coset_numbers(A, ctx, H).c, coset_numbers(A, flipped, H).c)
                    << A << " " << H;
        }
    }
}

TEST(Invariants, VerdictInvariantUnderSymmetries) {
    std::mt19937 rng(20230304);
    for (const GroupSpec& A : groups_up_to(100)) {
        const auto hs = sample_hsets(A, 25, rng());
        if (hs.empty()) continue;
        const auto T = detail::build_decision_table(A);
        const auto auts = automorphisms(A);
        const auto torsion = two_torsion(A);
        std::uniform_int_distribution<std::size_t> pick_aut(0, auts.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_t(0, torsion.size() - 1);
        for (const HSet& H : hs) {
            const bool verdict =
                T.first_failure(detail::class_ids(T, H)) == detail::DecisionTable::npos;
            for (int trial = 0; trial < 15; ++trial) {
                const Automorphism& phi = auts[pick_aut(rng)];
                const GroupElement t = torsion[pick_t(rng)];
                std::vector<GroupElement> mapped;
                for (const auto& r : H.reps) mapped.push_back(add(A, apply(A, phi, r), t));
                const HSet image = HSet::of(A, mapped);
                const bool image_verdict =
                    T.first_failure(detail::class_ids(T, image)) == detail::DecisionTable::npos;
                ASSERT_EQ(image_verdict, verdict) << A << " " << H << " -> " << image;
            }
        }
    }
}

TEST(Invariants, SubgroupTransfer) {
    std::mt19937 rng(424242);
    for (const GroupSpec& A : groups_up_to(144)) {
        const auto classes = pair_classes(A);
        for (const Subgroup& Ap : all_subgroups(A)) {
            std::vector<GroupElement> inside;
            for (const PairClass& c : classes)
                if (Ap.contains(c.rep)) inside.push_back(c.rep);
            if (inside.size() < 4) continue;
            std::uniform_int_distribution<std::size_t> pick(0, inside.size() - 1);
            for (int trial = 0; trial < 6; ++trial) {
                std::set<GroupElement> chosen;
                while (chosen.size() < 4) chosen.insert(inside[pick(rng)]);
                const HSet H =
                    HSet::of(A, std::vector<GroupElement>(chosen.begin(), chosen.end()));
                const auto r = check_inheritance(A, Ap, H);  // throws on mismatch
                ASSERT_EQ(r.in_sub, r.in_big);
            }
        }
    }
}

TEST(Invariants, OracleEquivalence) {
    std::uint32_t seed = 99;
    for (const GroupSpec& A : groups_up_to(64)) {
        const auto hs = sample_hsets(A, 120, seed++);
        if (hs.empty()) continue;
        const auto raw = oracle::raw_contexts(A);
        const auto T = detail::build_decision_table(A);
        for (const HSet& H : hs) {
            const bool fast =
                T.first_failure(detail::class_ids(T, H)) == detail::DecisionTable::npos;
            ASSERT_EQ(fast, oracle::is_nonseparating(A, H, raw)) << A << " " << H;
        }
    }
}

TEST(Invariants, PublicDecisionMatchesTablePath) {
    for (const GroupSpec A : {GroupSpec{2, 8}, GroupSpec{3, 9}, GroupSpec{4, 4}}) {
        const auto T = detail::build_decision_table(A);
        for (const HSet& H : enumerate_hsets(A)) {
            const bool fast =
                T.first_failure(detail::class_ids(T, H)) == detail::DecisionTable::npos;
            ASSERT_EQ(is_nonseparating(A, H).nonseparating, fast);
        }
    }
}

TEST(Invariants, CanonicalFormConstantOnOrbitsAndIdempotent) {
    std::mt19937 rng(5150);
    for (const GroupSpec& A : groups_up_to(64)) {
        const auto hs = sample_hsets(A, 10, rng());
        if (hs.empty()) continue;
        const SymmetryTable T = symmetry_table(A);
        std::uniform_int_distribution<std::size_t> pick(0, T.perms.size() - 1);
        for (const HSet& H : hs) {
            const auto ids = T.ids_of(H);
            const auto canon = T.canonical_ids(ids);
            ASSERT_EQ(T.canonical_ids(canon), canon) << A;
            for (int trial = 0; trial < 12; ++trial) {
                const auto image = T.image(T.perms[pick(rng)], ids);
                ASSERT_EQ(T.canonical_ids(image), canon) << A;
            }
            ASSERT_LE(canon, ids);
        }
    }
}

TEST(Invariants, OrbitSizesSumToUnreducedCount) {
    for (const GroupSpec A :
         {GroupSpec{2, 4}, GroupSpec{3, 3}, GroupSpec{4, 4}, GroupSpec{2, 8}, GroupSpec{2, 16},
          GroupSpec{6, 6}, GroupSpec{2, 32}}) {
        const auto T = detail::build_decision_table(A);
        std::uint64_t unreduced = 0;
        for_each_hset(A, [&](const HSet& H) {
            if (T.first_failure(detail::class_ids(T, H)) == detail::DecisionTable::npos)
                ++unreduced;
        });
        std::uint64_t total = 0;
        for (const auto& o : classify_nonseparating(A)) total += o.size;
        EXPECT_EQ(total, unreduced) << A;
    }
}

TEST(Invariants, AutomorphismsActFaithfullyUpTo100) {
    std::mt19937 rng(31337);
    for (const GroupSpec& A : groups_up_to(100)) {
        const auto auts = automorphisms(A);
        const auto elems = elements(A);
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
        std::set<std::pair<GroupElement, GroupElement>> keys;
        std::vector<char> hit(static_cast<std::size_t>(A.order()));
        for (const auto& phi : auts) {
            std::fill(hit.begin(), hit.end(), 0);
            for (const auto& g : elems) {
                auto& slot = hit[element_index(A, apply(A, phi, g))];
                ASSERT_EQ(slot, 0) << A;
                slot = 1;
            }
            for (int trial = 0; trial < 24; ++trial) {
                const GroupElement g = elems[pick(rng)], h = elems[pick(rng)];
                ASSERT_EQ(apply(A, phi, add(A, g, h)),
                          add(A, apply(A, phi, g), apply(A, phi, h)));
            }
            keys.insert({phi.image_e1, phi.image_e2});
        }
        for (int trial = 0; trial < 48 && !auts.empty(); ++trial) {
            const auto& f = auts[rng() % auts.size()];
            const auto& s = auts[rng() % auts.size()];
            const Automorphism c = compose(A, f, s);
            ASSERT_TRUE(keys.count({c.image_e1, c.image_e2})) << A;
        }
    }
}

TEST(Invariants, AvoidingCyclicSubgroupAlwaysExistsAtPrime13) {
    std::mt19937 rng(1313);
    for (const GroupSpec M : {GroupSpec{13, 13}, GroupSpec{1, 169}}) {
        const auto elems = elements(M);
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
        std::uniform_int_distribution<int> size_pick(0, 12);
        for (int trial = 0; trial < 1000; ++trial) {
            std::set<GroupElement> d;
            const int want = size_pick(rng);
            while (static_cast<int>(d.size()) < want) d.insert(elems[pick(rng)]);
            const std::vector<GroupElement> D(d.begin(), d.end());
            const auto G = find_avoiding_cyclic(M, D);
            ASSERT_TRUE(G.has_value()) << M;
            ASSERT_TRUE(G->is_cyclic());
            ASSERT_EQ(quotient_invariants(M, *G).first, 1);
            for (const auto& x : D)
                if (!is_zero(x)) ASSERT_FALSE(G->contains(x));
        }
    }
}
