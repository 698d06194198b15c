#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "nonsep/core.hpp"

namespace nonsep {

/// An automorphism, stored as the images of the standard generators
/// e1 = (1,0) and e2 = (0,1).  Well-definedness needs a*image_e1 = 0.
struct Automorphism {
    GroupElement image_e1;
    GroupElement image_e2;

    friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

inline GroupElement apply(const GroupSpec& A, const Automorphism& phi, GroupElement e) {
    return add(A, scale(A, e.x, phi.image_e1), scale(A, e.y, phi.image_e2));
}

inline Automorphism compose(const GroupSpec& A, const Automorphism& f, const Automorphism& g) {
    return {apply(A, f, g.image_e1), apply(A, f, g.image_e2)};
}

/// The a-torsion subgroup {g : a*g = 0} in lexicographic order; the candidate
/// images of e1.
inline std::vector<GroupElement> torsion_subgroup(const GroupSpec& A, long long m) {
    std::vector<GroupElement> out;
    const long long ga = std::gcd(m, A.a), gb = std::gcd(m, A.b);
    out.reserve(static_cast<std::size_t>(ga * gb));
    for (long long x = 0; x < A.a; x += A.a / ga)
        for (long long y = 0; y < A.b; y += A.b / gb) out.push_back({x, y});
    std::sort(out.begin(), out.end());
    return out;
}

/// Complete automorphism list: image_e1 ranges over the a-torsion subgroup,
/// image_e2 over the whole group, keeping the pairs whose images generate A.
inline std::vector<Automorphism> automorphisms(const GroupSpec& A,
                                               long long bound = kDefaultGroupOrderBound) {
    check_group_order(A, bound);
    const std::size_t n = static_cast<std::size_t>(A.order());
    std::vector<Automorphism> out;
    std::vector<std::uint64_t> mark(n, 0);
    std::uint64_t epoch = 0;
    for (const GroupElement& u : torsion_subgroup(A, A.a)) {
        for (long long vx = 0; vx < A.a; ++vx) {
            for (long long vy = 0; vy < A.b; ++vy) {
                const GroupElement v{vx, vy};
                ++epoch;
                bool bijective = true;
                GroupElement row{0, 0};
                for (long long x = 0; x < A.a && bijective; ++x) {
                    GroupElement cur = row;
                    for (long long y = 0; y < A.b; ++y) {
                        auto& slot = mark[element_index(A, cur)];
                        if (slot == epoch) {
                            bijective = false;
                            break;
                        }
                        slot = epoch;
                        cur = add(A, cur, v);
                    }
                    row = add(A, row, u);
                }
                if (bijective) out.push_back({u, v});
            }
        }
    }
    return out;
}

}  // namespace nonsep
