#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nonsep/core.hpp"

namespace nonsep {

/// The class {h, -h}, keyed by its lexicographically smaller member.
/// A singleton exactly when 2h = 0.
struct PairClass {
    GroupElement rep;

    static PairClass of(const GroupSpec& A, GroupElement h) {
        require_element(A, h);
        const GroupElement m = neg(A, h);
        return {m < h ? m : h};
    }

    bool self_paired(const GroupSpec& A) const { return neg(A, rep) == rep; }

    std::vector<GroupElement> members(const GroupSpec& A) const {
        if (self_paired(A)) return {rep};
        return {rep, neg(A, rep)};
    }

    friend auto operator<=>(const PairClass&, const PairClass&) = default;
};

/// A disjoint union of four pair classes, stored as the sorted class
/// representatives.  Between 4 and 8 elements in total.
struct HSet {
    std::array<GroupElement, 4> reps;

    static HSet of(const GroupSpec& A, const std::vector<GroupElement>& four) {
        if (four.size() != 4) throw invalid_hset_error("an H-set needs exactly four classes");
        std::array<GroupElement, 4> reps;
        for (int i = 0; i < 4; ++i) reps[static_cast<std::size_t>(i)] = PairClass::of(A, four[static_cast<std::size_t>(i)]).rep;
        std::sort(reps.begin(), reps.end());
        for (int i = 0; i < 3; ++i)
            if (reps[static_cast<std::size_t>(i)] == reps[static_cast<std::size_t>(i) + 1])
                throw invalid_hset_error("pair classes must be distinct");
        return {reps};
    }

    std::array<PairClass, 4> classes() const {
        return {PairClass{reps[0]}, PairClass{reps[1]}, PairClass{reps[2]}, PairClass{reps[3]}};
    }

    std::vector<GroupElement> elements(const GroupSpec& A) const {
        std::vector<GroupElement> out;
        for (const auto& r : reps)
            for (const auto& e : PairClass{r}.members(A)) out.push_back(e);
        std::sort(out.begin(), out.end());
        return out;
    }

    friend auto operator<=>(const HSet&, const HSet&) = default;

    friend std::ostream& operator<<(std::ostream& os, const HSet& H) {
        os << "{";
        for (std::size_t i = 0; i < 4; ++i) os << (i ? " " : "") << "±" << H.reps[i];
        return os << "}";
    }
};

/// The pair classes of A in lexicographic order of representative; they
/// partition A, so any four distinct classes are automatically disjoint.
inline std::vector<PairClass> pair_classes(const GroupSpec& A,
                                           long long bound = kDefaultGroupOrderBound) {
    check_group_order(A, bound);
    std::vector<PairClass> out;
    for (long long x = 0; x < A.a; ++x) {
        for (long long y = 0; y < A.b; ++y) {
            const GroupElement e{x, y};
            if (neg(A, e) < e) continue;  // seen already as the smaller member
            out.push_back({e});
        }
    }
    return out;
}

inline std::uint64_t count_hsets(const GroupSpec& A, long long bound = kDefaultGroupOrderBound) {
    check_group_order(A, bound);
    std::uint64_t p = 0;
    for (long long x = 0; x < A.a; ++x)
        for (long long y = 0; y < A.b; ++y)
            if (!(neg(A, GroupElement{x, y}) < GroupElement{x, y})) ++p;
    if (p < 4) return 0;
    return p * (p - 1) / 2 * (p - 2) / 3 * (p - 3) / 4;
}

/// Streams every 4-subset of pair classes in lexicographic order.
template <class Fn>
void for_each_hset(const GroupSpec& A, Fn&& fn, long long bound = kDefaultGroupOrderBound) {
    const auto classes = pair_classes(A, bound);
    const std::size_t p = classes.size();
    if (p < 4) return;
    for (std::size_t i = 0; i + 3 < p; ++i)
        for (std::size_t j = i + 1; j + 2 < p; ++j)
            for (std::size_t k = j + 1; k + 1 < p; ++k)
                for (std::size_t l = k + 1; l < p; ++l)
                    fn(HSet{{classes[i].rep, classes[j].rep, classes[k].rep, classes[l].rep}});
}

inline std::vector<HSet> enumerate_hsets(const GroupSpec& A,
                                         long long bound = kDefaultGroupOrderBound) {
    std::vector<HSet> out;
    out.reserve(static_cast<std::size_t>(count_hsets(A, bound)));
    for_each_hset(A, [&](const HSet& h) { out.push_back(h); }, bound);
    return out;
}

}  // namespace nonsep
