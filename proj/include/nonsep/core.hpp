#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nonsep {

// Every enumeration over a whole group is guarded by a size bound on |A|.
// The default is generous for desk-scale work; callers may raise it, but the
// bound itself must keep |A|^2 inside 64 bits.
inline constexpr long long kDefaultGroupOrderBound = 20000;
inline constexpr long long kMaxGroupOrderBound = 3'000'000'000LL;

struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct invalid_subgroup_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct invalid_hset_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct invalid_context_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
// A mathematically impossible state; indicates a bug, never bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// A finite abelian group on two generators in invariant-factor form
/// Z/a + Z/b with a | b.  a == 1 encodes a cyclic group.
struct GroupSpec {
    long long a = 1;
    long long b = 1;

    long long order() const { return a * b; }
    friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;

    friend std::ostream& operator<<(std::ostream& os, const GroupSpec& A) {
        return os << "Z/" << A.a << "+Z/" << A.b;
    }
};

/// An element (x, y) with 0 <= x < a, 0 <= y < b.  Reduction is maintained by
/// every arithmetic helper below.
struct GroupElement {
    long long x = 0;
    long long y = 0;

    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

    friend std::ostream& operator<<(std::ostream& os, const GroupElement& e) {
        return os << "(" << e.x << "," << e.y << ")";
    }
};

inline long long checked_size_bound(long long bound) {
    if (bound < 1 || bound > kMaxGroupOrderBound)
        throw std::invalid_argument("size bound must be in [1, 3e9]");
    return bound;
}

inline void check_group_order(const GroupSpec& A, long long bound) {
    if (A.order() > checked_size_bound(bound))
        throw resource_limit_error("group order " + std::to_string(A.order()) +
                                   " exceeds size bound " + std::to_string(bound));
}

/// Normalizes Z/m + Z/n to invariant factors (gcd(m,n), lcm(m,n)).
inline GroupSpec make_group(long long m, long long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("group factors must be positive");
    const long long g = std::gcd(m, n);
    const long long l = m / g;
    if (l > std::numeric_limits<long long>::max() / n)
        throw std::invalid_argument("group order overflows 64-bit arithmetic");
    return GroupSpec{g, l * n};
}

inline bool element_valid(const GroupSpec& A, const GroupElement& e) {
    return e.x >= 0 && e.x < A.a && e.y >= 0 && e.y < A.b;
}

inline void require_element(const GroupSpec& A, const GroupElement& e) {
    if (!element_valid(A, e))
        throw std::invalid_argument("element (" + std::to_string(e.x) + "," +
                                    std::to_string(e.y) + ") not reduced in Z/" +
                                    std::to_string(A.a) + " + Z/" + std::to_string(A.b));
}

inline GroupElement add(const GroupSpec& A, GroupElement u, GroupElement v) {
    return {(u.x + v.x) % A.a, (u.y + v.y) % A.b};
}

inline GroupElement neg(const GroupSpec& A, GroupElement u) {
    return {(A.a - u.x) % A.a, (A.b - u.y) % A.b};
}

inline GroupElement sub(const GroupSpec& A, GroupElement u, GroupElement v) {
    return add(A, u, neg(A, v));
}

inline GroupElement scale(const GroupSpec& A, long long k, GroupElement u) {
    const long long ka = ((k % A.a) + A.a) % A.a;
    const long long kb = ((k % A.b) + A.b) % A.b;
    return {(ka * u.x) % A.a, (kb * u.y) % A.b};
}

inline bool is_zero(const GroupElement& e) { return e.x == 0 && e.y == 0; }

/// Least k >= 1 with k*g = 0; closed form lcm(a/gcd(x,a), b/gcd(y,b)).
inline long long element_order(const GroupSpec& A, GroupElement g) {
    require_element(A, g);
    const long long ox = A.a / std::gcd(g.x, A.a);
    const long long oy = A.b / std::gcd(g.y, A.b);
    return std::lcm(ox, oy);
}

/// Index of an element in the lexicographic enumeration: x*b + y.
inline std::size_t element_index(const GroupSpec& A, GroupElement e) {
    return static_cast<std::size_t>(e.x * A.b + e.y);
}

inline GroupElement element_at(const GroupSpec& A, std::size_t idx) {
    const long long i = static_cast<long long>(idx);
    return {i / A.b, i % A.b};
}

/// All elements in lexicographic (x, y) order.
inline std::vector<GroupElement> elements(const GroupSpec& A,
                                          long long bound = kDefaultGroupOrderBound) {
    check_group_order(A, bound);
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(A.order()));
    for (long long x = 0; x < A.a; ++x)
        for (long long y = 0; y < A.b; ++y) out.push_back({x, y});
    return out;
}

/// All h with 2h = 0, identity included (translations must form a group);
/// size gcd(2,a)*gcd(2,b).
inline std::vector<GroupElement> two_torsion(const GroupSpec& A) {
    std::vector<GroupElement> out{{0, 0}};
    if (A.b % 2 == 0) out.push_back({0, A.b / 2});
    if (A.a % 2 == 0) {
        out.push_back({A.a / 2, 0});
        if (A.b % 2 == 0) out.push_back({A.a / 2, A.b / 2});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nonsep
