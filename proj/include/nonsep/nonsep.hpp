#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nonsep/core.hpp"
#include "nonsep/hset.hpp"
#include "nonsep/subgroup.hpp"

namespace nonsep {

/// A subgroup B with cyclic quotient of order n, together with a coset
/// representative gen whose coset generates A/B.
struct Context {
    Subgroup B;
    GroupElement gen;
    long long n = 1;
};

/// The sorted quadruple c1 <= c2 <= c3 <= c4, each in [0, n/2].
struct CosetNumbers {
    std::array<long long, 4> c{};

    bool middle_equal() const { return c[1] == c[2]; }
    friend auto operator<=>(const CosetNumbers&, const CosetNumbers&) = default;
};

namespace detail {

/// Coset index of every element with respect to gen + B: the unique
/// k in [0, n) with e in k*gen + B.  Throws invalid_context_error when the
/// coset of gen fails to generate A/B.
inline std::vector<long long> coset_index_table(const GroupSpec& A, const Subgroup& B,
                                                GroupElement gen, long long n) {
    if (B.order() * n != A.order())
        throw invalid_context_error("quotient order does not match |A|/|B|");
    std::vector<long long> table(static_cast<std::size_t>(A.order()), -1);
    std::vector<GroupElement> coset = B.elements();
    for (long long k = 0; k < n; ++k) {
        for (auto& e : coset) {
            auto& slot = table[element_index(A, e)];
            if (slot != -1) throw invalid_context_error("generator coset does not generate A/B");
            slot = k;
            e = add(A, e, gen);
        }
    }
    for (const long long k : table)
        if (k == -1) throw invalid_context_error("generator coset does not generate A/B");
    return table;
}

inline void sort4(std::array<long long, 4>& c) {
    auto cswap = [&](int i, int j) {
        if (c[static_cast<std::size_t>(j)] < c[static_cast<std::size_t>(i)])
            std::swap(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
    };
    cswap(0, 1);
    cswap(2, 3);
    cswap(0, 2);
    cswap(1, 3);
    cswap(1, 2);
}

}  // namespace detail

/// Coset numbers for H relative to ctx: for each class the unique c in
/// [0, n/2] whose coset meets {h, -h}, sorted ascending.
inline CosetNumbers coset_numbers(const GroupSpec& A, const Context& ctx, const HSet& H) {
    const auto table = detail::coset_index_table(A, ctx.B, ctx.gen, ctx.n);
    CosetNumbers out;
    for (std::size_t i = 0; i < 4; ++i) {
        const GroupElement h = H.reps[i];
        require_element(A, h);
        const long long k = table[element_index(A, h)];
        const long long c = std::min(k, ctx.n - k);
        const long long kneg = table[element_index(A, neg(A, h))];
        if (std::min(kneg, ctx.n - kneg) != c)
            throw internal_error("coset number not unique for a pair class");
        out.c[i] = c;
    }
    detail::sort4(out.c);
    return out;
}

namespace detail {

/// Cyclic subgroups with cyclic quotient, smallest quotient first (ties by
/// minimum generator).  Cheap small-quotient failures then surface first in
/// the early-exit decision loop.
inline std::vector<Subgroup> decision_subgroups(const GroupSpec& A, long long bound) {
    std::vector<Subgroup> subs = cyclic_subgroups_with_cyclic_quotient(A, bound);
    std::sort(subs.begin(), subs.end(), [](const Subgroup& lhs, const Subgroup& rhs) {
        return std::pair(-lhs.order(), lhs.min_generator()) <
               std::pair(-rhs.order(), rhs.min_generator());
    });
    return subs;
}

}  // namespace detail

/// Every decision context in deterministic order: smallest quotient first,
/// subgroups tied by minimum generator, then one context per generating
/// coset in lexicographic order of representative.
inline std::vector<Context> decision_contexts(const GroupSpec& A,
                                              long long bound = kDefaultGroupOrderBound) {
    std::vector<Context> out;
    for (const Subgroup& B : detail::decision_subgroups(A, bound)) {
        const long long n = A.order() / B.order();
        for (const GroupElement& gen : quotient_generators(A, B, bound))
            out.push_back({B, gen, n});
    }
    return out;
}

namespace detail {

/// Precomputed per-group machinery for the nonseparating decision: pair
/// classes, and for each (sign-folded) decision context the coset number of
/// every class.  Read-only once built; safe to share across threads.
struct DecisionTable {
    GroupSpec group;
    std::vector<PairClass> classes;
    std::vector<std::uint32_t> class_id;  // element index -> class index

    struct Ctx {
        std::size_t subgroup;  // index into subgroups
        GroupElement gen;
        long long n;
        std::vector<std::uint32_t> c_of_class;
    };
    std::vector<Subgroup> subgroups;
    std::vector<Ctx> contexts;

    std::uint32_t class_of(const GroupElement& e) const {
        return class_id[element_index(group, e)];
    }

    Context context(std::size_t i) const {
        return {subgroups[contexts[i].subgroup], contexts[i].gen, contexts[i].n};
    }

    /// Index of the first context separating the classes (c2 != c3), or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t first_failure(const std::array<std::uint32_t, 4>& ids) const {
        for (std::size_t t = 0; t < contexts.size(); ++t) {
            const auto& c = contexts[t].c_of_class;
            std::array<long long, 4> v{c[ids[0]], c[ids[1]], c[ids[2]], c[ids[3]]};
            sort4(v);
            if (v[1] != v[2]) return t;
        }
        return npos;
    }
};

inline DecisionTable build_decision_table(const GroupSpec& A,
                                          long long bound = kDefaultGroupOrderBound) {
    DecisionTable T;
    T.group = A;
    T.classes = pair_classes(A, bound);
    T.class_id.assign(static_cast<std::size_t>(A.order()), 0);
    for (std::size_t i = 0; i < T.classes.size(); ++i) {
        const GroupElement r = T.classes[i].rep;
        T.class_id[element_index(A, r)] = static_cast<std::uint32_t>(i);
        T.class_id[element_index(A, neg(A, r))] = static_cast<std::uint32_t>(i);
    }
    T.subgroups = decision_subgroups(A, bound);
    for (std::size_t s = 0; s < T.subgroups.size(); ++s) {
        const Subgroup& B = T.subgroups[s];
        const long long n = A.order() / B.order();
        for (const GroupElement& gen : quotient_generators(A, B, bound)) {
            // gen and -gen produce identical coset numbers; keep the coset
            // whose representative is lexicographically smaller
            GroupElement negrep = neg(A, gen);
            for (const auto& b : B.elements()) negrep = std::min(negrep, add(A, neg(A, gen), b));
            if (negrep < gen) continue;
            const auto table = coset_index_table(A, B, gen, n);
            DecisionTable::Ctx ctx{s, gen, n, {}};
            ctx.c_of_class.resize(T.classes.size());
            for (std::size_t i = 0; i < T.classes.size(); ++i) {
                const long long k = table[element_index(A, T.classes[i].rep)];
                ctx.c_of_class[i] = static_cast<std::uint32_t>(std::min(k, n - k));
            }
            T.contexts.push_back(std::move(ctx));
        }
    }
    return T;
}

inline std::array<std::uint32_t, 4> class_ids(const DecisionTable& T, const HSet& H) {
    return {T.class_of(H.reps[0]), T.class_of(H.reps[1]), T.class_of(H.reps[2]),
            T.class_of(H.reps[3])};
}

}  // namespace detail

struct NonsepResult {
    bool nonseparating = false;
    std::optional<Context> witness;  // first failing context when separating
};

/// Decides whether H is nonseparating: c2 == c3 for every cyclic B with
/// cyclic quotient and every generator coset.  Contexts are scanned smallest
/// quotient first; the witness is the first failing context in that order.
inline NonsepResult is_nonseparating(const GroupSpec& A, const HSet& H,
                                     long long bound = kDefaultGroupOrderBound) {
    for (const auto& r : H.reps)
        if (PairClass::of(A, r).rep != r) throw invalid_hset_error("class rep not normalized");
    for (std::size_t i = 0; i + 1 < 4; ++i)
        if (!(H.reps[i] < H.reps[i + 1]))
            throw invalid_hset_error("class reps must be sorted and distinct");
    const auto T = detail::build_decision_table(A, bound);
    const std::size_t fail = T.first_failure(detail::class_ids(T, H));
    if (fail == detail::DecisionTable::npos) return {true, std::nullopt};
    return {false, T.context(fail)};
}

struct InheritanceResult {
    bool in_sub = false;
    bool in_big = false;
};

namespace detail {

/// Invariant-factor presentation of a subgroup: the group (d1, d2) plus the
/// coordinates of every element under an explicit isomorphism.
struct SubgroupPresentation {
    GroupSpec quotient_free_form;                 // (d1, d2) with d1 | d2
    std::map<GroupElement, GroupElement> coords;  // element of A' -> element of (d1,d2)
};

inline SubgroupPresentation present_subgroup(const GroupSpec& A, const Subgroup& S) {
    long long d2 = 1;
    for (const auto& e : S.elements()) d2 = std::lcm(d2, element_order(A, e));
    if (S.order() % d2 != 0)
        throw std::invalid_argument("subgroup is not generated by two elements");
    const long long d1 = S.order() / d2;
    if (d1 != 1 && d2 % d1 != 0)
        throw std::invalid_argument("subgroup is not generated by two elements");
    const GroupSpec Q{d1, d2};
    // basis search: u of order d1, v of order d2, coordinates bijective
    for (const auto& u : S.elements()) {
        if (element_order(A, u) != d1) continue;
        for (const auto& v : S.elements()) {
            if (element_order(A, v) != d2) continue;
            std::map<GroupElement, GroupElement> coords;
            bool bijective = true;
            for (long long i = 0; i < d1 && bijective; ++i) {
                for (long long j = 0; j < d2; ++j) {
                    const GroupElement e = add(A, scale(A, i, u), scale(A, j, v));
                    if (!coords.emplace(e, GroupElement{i, j}).second) {
                        bijective = false;
                        break;
                    }
                }
            }
            if (bijective && coords.size() == static_cast<std::size_t>(S.order()))
                return {Q, std::move(coords)};
        }
    }
    throw std::invalid_argument("subgroup is not generated by two elements");
}

}  // namespace detail

/// Evaluates the nonseparating property both inside the subgroup (through its
/// invariant-factor presentation) and in the ambient group.  The lemmas force
/// the answers to agree; disagreement is a library invariant failure.
inline InheritanceResult check_inheritance(const GroupSpec& A, const Subgroup& Aprime,
                                           const HSet& H,
                                           long long bound = kDefaultGroupOrderBound) {
    if (Aprime.group() != A) throw std::invalid_argument("subgroup belongs to a different group");
    for (const auto& e : H.elements(A))
        if (!Aprime.contains(e)) throw std::invalid_argument("H must lie inside the subgroup");
    const bool in_big = is_nonseparating(A, H, bound).nonseparating;

    const auto pres = detail::present_subgroup(A, Aprime);
    std::vector<GroupElement> mapped;
    mapped.reserve(4);
    for (const auto& r : H.reps) mapped.push_back(pres.coords.at(r));
    const bool in_sub =
        is_nonseparating(pres.quotient_free_form, HSet::of(pres.quotient_free_form, mapped), bound)
            .nonseparating;

    if (in_sub != in_big)
        throw internal_error("subgroup transfer mismatch: the two verdicts must be equal");
    return {in_sub, in_big};
}

/// First cyclic G (deterministic scan order) with M/G cyclic and
/// G ∩ D ⊆ {0}, or nothing when no such subgroup exists.
inline std::optional<Subgroup> find_avoiding_cyclic(const GroupSpec& M,
                                                    const std::vector<GroupElement>& D,
                                                    long long bound = kDefaultGroupOrderBound) {
    for (const auto& d : D) require_element(M, d);
    for (Subgroup& G : cyclic_subgroups_with_cyclic_quotient(M, bound)) {
        bool ok = true;
        for (const auto& d : D) {
            if (!is_zero(d) && G.contains(d)) {
                ok = false;
                break;
            }
        }
        if (ok) return std::move(G);
    }
    return std::nullopt;
}

}  // namespace nonsep
