#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nonsep/core.hpp"

namespace nonsep {

/// A subgroup stored as its sorted element set plus a minimal generating list
/// (empty for the trivial subgroup, otherwise one or two elements).
class Subgroup {
public:
    static Subgroup trivial(const GroupSpec& A) {
        return Subgroup(A, {{0, 0}}, {});
    }

    static Subgroup cyclic(const GroupSpec& A, GroupElement g) {
        require_element(A, g);
        std::vector<GroupElement> elems;
        GroupElement cur{0, 0};
        do {
            elems.push_back(cur);
            cur = add(A, cur, g);
        } while (!is_zero(cur));
        std::sort(elems.begin(), elems.end());
        std::vector<GroupElement> gens;
        if (!is_zero(g)) gens.push_back(g);
        Subgroup S(A, std::move(elems), std::move(gens));
        S.minimize_generators();
        return S;
    }

    static Subgroup from_generators(const GroupSpec& A, std::vector<GroupElement> gens) {
        for (const auto& g : gens) require_element(A, g);
        // closure of { i*g1 + j*g2 } over the generator orders
        std::vector<GroupElement> elems{{0, 0}};
        for (const auto& g : gens) {
            std::vector<GroupElement> next;
            const long long og = element_order(A, g);
            next.reserve(elems.size() * static_cast<std::size_t>(og));
            for (long long k = 0; k < og; ++k) {
                const GroupElement kg = scale(A, k, g);
                for (const auto& e : elems) next.push_back(add(A, e, kg));
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            elems = std::move(next);
        }
        Subgroup S(A, std::move(elems), {});
        S.minimize_generators();
        return S;
    }

    /// Validates closure; the element set must really be a subgroup.
    static Subgroup from_elements(const GroupSpec& A, std::vector<GroupElement> elems) {
        for (const auto& e : elems) require_element(A, e);
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        if (elems.empty() || !is_zero(elems.front()))
            throw invalid_subgroup_error("subgroup must contain the identity");
        std::vector<char> member(static_cast<std::size_t>(A.order()), 0);
        for (const auto& e : elems) member[element_index(A, e)] = 1;
        for (const auto& s : elems)
            for (const auto& t : elems)
                if (!member[element_index(A, add(A, s, t))])
                    throw invalid_subgroup_error("set is not closed under addition");
        Subgroup S(A, std::move(elems), {});
        S.minimize_generators();
        return S;
    }

    const GroupSpec& group() const { return group_; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<GroupElement>& generators() const { return generators_; }
    long long order() const { return static_cast<long long>(elements_.size()); }
    bool is_cyclic() const { return generators_.size() <= 1; }

    bool contains(const GroupElement& e) const {
        return std::binary_search(elements_.begin(), elements_.end(), e);
    }

    bool contains_subgroup(const Subgroup& other) const {
        return std::includes(elements_.begin(), elements_.end(),
                             other.elements().begin(), other.elements().end());
    }

    /// Lexicographically smallest generator; only defined for cyclic subgroups.
    GroupElement min_generator() const {
        if (!is_cyclic()) throw internal_error("min_generator on non-cyclic subgroup");
        return generators_.empty() ? GroupElement{0, 0} : generators_.front();
    }

    friend bool operator==(const Subgroup& lhs, const Subgroup& rhs) {
        return lhs.group_ == rhs.group_ && lhs.elements_ == rhs.elements_;
    }

private:
    Subgroup(const GroupSpec& A, std::vector<GroupElement> elems,
             std::vector<GroupElement> gens)
        : group_(A), elements_(std::move(elems)), generators_(std::move(gens)) {}

    void minimize_generators() {
        const long long n = order();
        if (n == 1) {
            generators_.clear();
            return;
        }
        for (const auto& e : elements_) {
            if (!is_zero(e) && element_order(group_, e) == n) {
                generators_ = {e};
                return;
            }
        }
        // not cyclic: first generating pair in lexicographic order
        for (const auto& u : elements_) {
            if (is_zero(u)) continue;
            const long long ou = element_order(group_, u);
            for (const auto& v : elements_) {
                if (is_zero(v) || v <= u) continue;
                const long long ov = element_order(group_, v);
                if (ou * ov < n || (ou * ov) % n != 0) continue;
                if (span_order(u, v) == n) {
                    generators_ = {u, v};
                    return;
                }
            }
        }
        throw internal_error("subgroup needs more than two generators");
    }

    long long span_order(GroupElement u, GroupElement v) const {
        std::vector<GroupElement> span;
        const long long ou = element_order(group_, u);
        const long long ov = element_order(group_, v);
        span.reserve(static_cast<std::size_t>(ou * ov));
        for (long long i = 0; i < ou; ++i) {
            const GroupElement iu = scale(group_, i, u);
            for (long long j = 0; j < ov; ++j) span.push_back(add(group_, iu, scale(group_, j, v)));
        }
        std::sort(span.begin(), span.end());
        span.erase(std::unique(span.begin(), span.end()), span.end());
        return static_cast<long long>(span.size());
    }

    GroupSpec group_;
    std::vector<GroupElement> elements_;
    std::vector<GroupElement> generators_;
};

namespace detail {

/// Order of the coset g + B in A/B: least k >= 1 with k*g in B.
inline long long coset_order(const GroupSpec& A, const Subgroup& B, GroupElement g) {
    GroupElement cur = g;
    long long k = 1;
    while (!B.contains(cur)) {
        cur = add(A, cur, g);
        ++k;
    }
    return k;
}

/// Exponent of A'/B' where both are given by element sets inside A.
inline long long quotient_exponent(const GroupSpec& A,
                                   const std::vector<GroupElement>& aprime,
                                   const Subgroup& Bprime) {
    long long exponent = 1;
    for (const auto& g : aprime) exponent = std::lcm(exponent, coset_order(A, Bprime, g));
    return exponent;
}

}  // namespace detail

/// Invariant factors (d1, d2) of A/B with d1 | d2 and d1*d2 = |A|/|B|;
/// d2 is the maximal coset order, found by enumeration.  A/B is cyclic iff d1 == 1.
inline std::pair<long long, long long> quotient_invariants(
    const GroupSpec& A, const Subgroup& B, long long bound = kDefaultGroupOrderBound) {
    check_group_order(A, bound);
    if (B.group() != A) throw invalid_subgroup_error("subgroup belongs to a different group");
    const long long q = A.order() / B.order();
    long long d2 = 1;
    for (long long x = 0; x < A.a && d2 < q; ++x)
        for (long long y = 0; y < A.b && d2 < q; ++y)
            d2 = std::max(d2, detail::coset_order(A, B, {x, y}));
    if (q % d2 != 0) throw internal_error("coset exponent does not divide quotient order");
    const long long d1 = q / d2;
    if (d2 % d1 != 0) throw internal_error("quotient invariant factors out of order");
    return {d1, d2};
}

/// One representative per generating coset of a cyclic quotient A/B, each the
/// lexicographic minimum of its coset, emitted in lexicographic order.
inline std::vector<GroupElement> quotient_generators(
    const GroupSpec& A, const Subgroup& B, long long bound = kDefaultGroupOrderBound) {
    const auto [d1, d2] = quotient_invariants(A, B, bound);
    if (d1 != 1) throw std::invalid_argument("quotient A/B is not cyclic");
    const long long n = d2;
    std::vector<char> seen(static_cast<std::size_t>(A.order()), 0);
    std::vector<GroupElement> out;
    for (long long x = 0; x < A.a; ++x) {
        for (long long y = 0; y < A.b; ++y) {
            const GroupElement g{x, y};
            if (seen[element_index(A, g)]) continue;
            for (const auto& b : B.elements()) seen[element_index(A, add(A, g, b))] = 1;
            if (detail::coset_order(A, B, g) == n) out.push_back(g);
        }
    }
    return out;
}

/// Every distinct cyclic subgroup B of A with A/B cyclic, sorted by
/// (|B|, lexicographically smallest generator).
inline std::vector<Subgroup> cyclic_subgroups_with_cyclic_quotient(
    const GroupSpec& A, long long bound = kDefaultGroupOrderBound) {
    check_group_order(A, bound);
    std::vector<char> taken(static_cast<std::size_t>(A.order()), 0);
    std::vector<Subgroup> out;
    for (long long x = 0; x < A.a; ++x) {
        for (long long y = 0; y < A.b; ++y) {
            const GroupElement g{x, y};
            if (taken[element_index(A, g)]) continue;
            Subgroup S = Subgroup::cyclic(A, g);
            // mark every generator of S so each subgroup is built once
            const long long n = S.order();
            for (const auto& e : S.elements())
                if (element_order(A, e) == n || n == 1) taken[element_index(A, e)] = 1;
            if (quotient_invariants(A, S, bound).first == 1) out.push_back(std::move(S));
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& lhs, const Subgroup& rhs) {
        return std::pair(lhs.order(), lhs.min_generator()) <
               std::pair(rhs.order(), rhs.min_generator());
    });
    return out;
}

/// Every subgroup of A (two-generated, so spans of element pairs suffice),
/// sorted by (order, element set).
inline std::vector<Subgroup> all_subgroups(const GroupSpec& A,
                                           long long bound = kDefaultGroupOrderBound) {
    check_group_order(A, bound);
    std::map<std::vector<GroupElement>, Subgroup> seen;
    const auto elems = elements(A, bound);
    for (const auto& u : elems) {
        Subgroup cu = Subgroup::cyclic(A, u);
        seen.emplace(cu.elements(), cu);
    }
    // spans of two cyclic subgroups; iterate over distinct cyclic ones only
    std::vector<Subgroup> cyclics;
    cyclics.reserve(seen.size());
    for (const auto& [key, S] : seen) cyclics.push_back(S);
    for (std::size_t i = 0; i < cyclics.size(); ++i) {
        for (std::size_t j = i + 1; j < cyclics.size(); ++j) {
            if (cyclics[i].contains_subgroup(cyclics[j]) ||
                cyclics[j].contains_subgroup(cyclics[i]))
                continue;
            Subgroup S = Subgroup::from_generators(
                A, {cyclics[i].min_generator(), cyclics[j].min_generator()});
            seen.emplace(S.elements(), S);
        }
    }
    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (const auto& [key, S] : seen) out.push_back(S);
    std::sort(out.begin(), out.end(), [](const Subgroup& lhs, const Subgroup& rhs) {
        return std::pair(lhs.order(), lhs.elements()) < std::pair(rhs.order(), rhs.elements());
    });
    return out;
}

/// Extends a cyclic B' <= A' (with A'/B' cyclic) to a cyclic B <= A with A/B
/// cyclic and A' ∩ B = B'.  Deterministic scan over the candidate list (the
/// output of cyclic_subgroups_with_cyclic_quotient), first match wins; a
/// match always exists for two-generated A.
inline Subgroup extend_cyclic_subgroup(const GroupSpec& A, const Subgroup& Aprime,
                                       const Subgroup& Bprime,
                                       const std::vector<Subgroup>& candidates) {
    if (Aprime.group() != A || Bprime.group() != A)
        throw std::invalid_argument("subgroups must live in the ambient group");
    if (!Bprime.is_cyclic()) throw std::invalid_argument("B' must be cyclic");
    if (!Aprime.contains_subgroup(Bprime)) throw std::invalid_argument("B' must lie in A'");
    if (detail::quotient_exponent(A, Aprime.elements(), Bprime) !=
        Aprime.order() / Bprime.order())
        throw std::invalid_argument("A'/B' must be cyclic");

    for (const Subgroup& B : candidates) {
        std::vector<GroupElement> meet;
        std::set_intersection(Aprime.elements().begin(), Aprime.elements().end(),
                              B.elements().begin(), B.elements().end(),
                              std::back_inserter(meet));
        if (meet == Bprime.elements()) return B;
    }
    throw internal_error("no cyclic extension found; impossible for two-generated groups");
}

inline Subgroup extend_cyclic_subgroup(const GroupSpec& A, const Subgroup& Aprime,
                                       const Subgroup& Bprime,
                                       long long bound = kDefaultGroupOrderBound) {
    return extend_cyclic_subgroup(A, Aprime, Bprime,
                                  cyclic_subgroups_with_cyclic_quotient(A, bound));
}

}  // namespace nonsep
