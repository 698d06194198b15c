#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "nonsep/automorphism.hpp"
#include "nonsep/core.hpp"
#include "nonsep/hset.hpp"

namespace nonsep {

/// The action of Aut(A) ⋉ A[2] on pair classes, tabulated as class
/// permutations.  Distinct group elements inducing the same permutation are
/// merged (negation composed with any map acts trivially on classes).
struct SymmetryTable {
    GroupSpec group;
    std::vector<PairClass> classes;
    std::vector<std::vector<std::uint32_t>> perms;  // sorted, deduplicated

    std::uint32_t class_of(const GroupSpec& A, const GroupElement& e) const {
        const PairClass c = PairClass::of(A, e);
        const auto it = std::lower_bound(classes.begin(), classes.end(), c);
        return static_cast<std::uint32_t>(it - classes.begin());
    }

    std::array<std::uint32_t, 4> ids_of(const HSet& H) const {
        return {class_of(group, H.reps[0]), class_of(group, H.reps[1]),
                class_of(group, H.reps[2]), class_of(group, H.reps[3])};
    }

    HSet hset_of(const std::array<std::uint32_t, 4>& ids) const {
        return HSet{{classes[ids[0]].rep, classes[ids[1]].rep, classes[ids[2]].rep,
                     classes[ids[3]].rep}};
    }

    std::array<std::uint32_t, 4> image(const std::vector<std::uint32_t>& perm,
                                       const std::array<std::uint32_t, 4>& ids) const {
        std::array<std::uint32_t, 4> out{perm[ids[0]], perm[ids[1]], perm[ids[2]], perm[ids[3]]};
        std::sort(out.begin(), out.end());
        return out;
    }

    std::array<std::uint32_t, 4> canonical_ids(const std::array<std::uint32_t, 4>& ids) const {
        std::array<std::uint32_t, 4> best = image(perms.front(), ids);
        for (const auto& p : perms) best = std::min(best, image(p, ids));
        return best;
    }

    /// Number of distinct H-sets in the orbit of ids.
    std::uint64_t orbit_size(const std::array<std::uint32_t, 4>& ids) const {
        std::vector<std::array<std::uint32_t, 4>> images;
        images.reserve(perms.size());
        for (const auto& p : perms) images.push_back(image(p, ids));
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        return images.size();
    }

    /// True when no symmetry image precedes ids lexicographically.
    bool is_orbit_minimum(const std::array<std::uint32_t, 4>& ids) const {
        for (const auto& p : perms)
            if (image(p, ids) < ids) return false;
        return true;
    }
};

inline SymmetryTable symmetry_table(const GroupSpec& A,
                                    long long bound = kDefaultGroupOrderBound) {
    SymmetryTable T;
    T.group = A;
    T.classes = pair_classes(A, bound);
    const auto auts = automorphisms(A, bound);
    const auto torsion = two_torsion(A);
    T.perms.reserve(auts.size() * torsion.size());
    std::vector<std::uint32_t> perm(T.classes.size());
    for (const auto& phi : auts) {
        for (const auto& t : torsion) {
            for (std::size_t i = 0; i < T.classes.size(); ++i)
                perm[i] = T.class_of(A, add(A, apply(A, phi, T.classes[i].rep), t));
            T.perms.push_back(perm);
        }
    }
    std::sort(T.perms.begin(), T.perms.end());
    T.perms.erase(std::unique(T.perms.begin(), T.perms.end()), T.perms.end());
    return T;
}

/// Lexicographic minimum of the orbit {phi(H) + t} under the sorted
/// representative encoding; constant on orbits and idempotent.
inline HSet canonical_form(const GroupSpec& A, const HSet& H,
                           long long bound = kDefaultGroupOrderBound) {
    const SymmetryTable T = symmetry_table(A, bound);
    return T.hset_of(T.canonical_ids(T.ids_of(H)));
}

/// All distinct H-sets in the orbit of H, sorted.
inline std::vector<HSet> hset_orbit(const GroupSpec& A, const HSet& H,
                                    long long bound = kDefaultGroupOrderBound) {
    const SymmetryTable T = symmetry_table(A, bound);
    const auto ids = T.ids_of(H);
    std::vector<std::array<std::uint32_t, 4>> images;
    for (const auto& p : T.perms) images.push_back(T.image(p, ids));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    std::vector<HSet> out;
    out.reserve(images.size());
    for (const auto& ids4 : images) out.push_back(T.hset_of(ids4));
    return out;
}

}  // namespace nonsep
