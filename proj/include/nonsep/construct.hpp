#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "nonsep/core.hpp"

namespace nonsep {

namespace detail {

struct Egcd {
    long long g, s, t;  // s*a + t*b == g
};

inline Egcd extended_gcd(long long a, long long b) {
    long long old_r = a, r = b;
    long long old_s = 1, s = 0;
    long long old_t = 0, t = 1;
    while (r != 0) {
        const long long q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

inline long long mod_inverse(long long a, long long m) {
    if (m == 1) return 0;
    const Egcd e = extended_gcd(((a % m) + m) % m, m);
    if (e.g != 1) throw internal_error("inverse of non-unit requested");
    return ((e.s % m) + m) % m;
}

/// x with x == r1 (mod m1), x == r2 (mod m2); m1, m2 coprime.
inline long long crt(long long r1, long long m1, long long r2, long long m2) {
    const long long k = ((r2 - r1) % m2 + m2) % m2 * mod_inverse(m1, m2) % m2;
    return (r1 + m1 * k) % (m1 * m2);
}

inline std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

/// Lifts h in Z/n to a generator: returns g with gcd(g, n) = 1 and
/// (n/m)*g == h (mod n), where m is the order of h.  Chinese-remainder
/// construction: tau == r (mod m) and tau == 1 (mod q), q the product of the
/// primes dividing n/m but not m.
inline long long generator_lift(long long n, long long h) {
    if (n < 1) throw std::invalid_argument("modulus must be positive");
    h = ((h % n) + n) % n;
    if (n == 1) return 0;
    const long long step = std::gcd(h, n);  // n/m
    const long long m = n / step;           // order of h
    const long long r = (m == 1) ? 0 : (h / step) % m;
    long long q = 1;
    for (long long p : detail::prime_divisors(step))
        if (m % p != 0) q *= p;
    const long long tau = detail::crt(r, m, 1 % q, q);
    const long long g = ((tau % n) + n) % n;
    if (std::gcd(g, n) != 1 || (step % n) * g % n != h)
        throw internal_error("generator lift violated its postcondition");
    return g;
}

/// Writes g in Z/n + Z/n as d*v with v a basis element.  The basis property
/// is verified by scanning for a partner w with <v, w> the whole group rather
/// than trusting the gcd argument for composite n.
inline std::pair<GroupElement, long long> basis_multiple(
    long long n, GroupElement g, long long bound = kDefaultGroupOrderBound) {
    if (n < 1) throw std::invalid_argument("modulus must be positive");
    const GroupSpec A{n, n};
    check_group_order(A, bound);
    require_element(A, g);
    GroupElement v{1, 0};
    long long d = 0;
    if (is_zero(g)) {
        v = {1, 0};
        d = 0;
    } else if (g.x == 0) {
        v = {0, 1};
        d = g.y;
    } else if (g.y == 0) {
        v = {1, 0};
        d = g.x;
    } else {
        d = std::gcd(g.x, g.y);
        v = {g.x / d, g.y / d};
    }
    v = {v.x % n, v.y % n};  // n == 1 collapses everything to 0
    const long long full = n * n;
    const long long ov = element_order(A, v);
    std::vector<std::uint32_t> mark(static_cast<std::size_t>(full), 0);
    std::uint32_t epoch = 0;
    bool witnessed = false;
    for (long long wx = 0; wx < n && !witnessed; ++wx) {
        for (long long wy = 0; wy < n && !witnessed; ++wy) {
            const GroupElement w{wx, wy};
            const long long ow = element_order(A, w);
            if (ov * ow < full || (ov * ow) % full != 0) continue;
            ++epoch;
            long long count = 0;
            for (long long i = 0; i < ov && count >= i * ow; ++i) {
                const GroupElement iv = scale(A, i, v);
                GroupElement cur = iv;
                for (long long j = 0; j < ow; ++j) {
                    auto& slot = mark[element_index(A, cur)];
                    if (slot != epoch) {
                        slot = epoch;
                        ++count;
                    }
                    cur = add(A, cur, w);
                }
            }
            witnessed = (count == full);
        }
    }
    if (!witnessed)
        throw internal_error("no basis partner found for (" + std::to_string(v.x) + "," +
                             std::to_string(v.y) + ") mod " + std::to_string(n));
    if (scale(A, d, v) != g) throw internal_error("basis multiple does not reproduce input");
    return {v, d};
}

}  // namespace nonsep
