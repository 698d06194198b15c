#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nonsep/construct.hpp"
#include "nonsep/core.hpp"
#include "nonsep/search.hpp"

namespace nonsep {

struct Vec2 {
    long long x = 0;
    long long y = 0;
    friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

/// Row-major 2x2 integer matrix.
struct Mat2 {
    long long a11 = 1, a12 = 0, a21 = 0, a22 = 1;

    static Mat2 identity() { return {}; }
    static Mat2 diagonal(long long d1, long long d2) { return {d1, 0, 0, d2}; }

    long long det() const { return a11 * a22 - a12 * a21; }

    Mat2 operator*(const Mat2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    Vec2 operator*(const Vec2& v) const {
        return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y};
    }
    Mat2 scaled(long long k) const { return {k * a11, k * a12, k * a21, k * a22}; }

    friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

/// A finite-index sublattice of Z^2; the matrix columns generate it.
struct Sublattice {
    Mat2 basis;

    long long covolume() const {
        const long long d = basis.det();
        return d < 0 ? -d : d;
    }
};

struct SmithForm {
    Mat2 u;  // unimodular
    Mat2 d;  // diag(d1, d2), d1 >= 1, d1 | d2
    Mat2 v;  // unimodular
};

/// U*M*V = diag(d1, d2) with d1 | d2, d1 >= 1, d1*d2 = |det M|.
inline SmithForm smith_normal_form(Mat2 m) {
    if (m.det() == 0) throw std::invalid_argument("matrix must be nonsingular");
    const Mat2 original = m;
    Mat2 u = Mat2::identity(), v = Mat2::identity();

    const auto row_step = [&] {  // clear m.a21 with a unimodular left factor
        if (m.a21 == 0) return;
        const auto e = detail::extended_gcd(m.a11, m.a21);
        const long long p = m.a11 / e.g, q = m.a21 / e.g;
        const Mat2 left{e.s, e.t, -q, p};  // det = s*p + t*q = 1
        m = left * m;
        u = left * u;
    };
    const auto col_step = [&] {  // clear m.a12 with a unimodular right factor
        if (m.a12 == 0) return;
        const auto e = detail::extended_gcd(m.a11, m.a12);
        const long long p = m.a11 / e.g, q = m.a12 / e.g;
        const Mat2 right{e.s, -q, e.t, p};  // det = s*p + t*q = 1
        m = m * right;
        v = v * right;
    };

    for (int guard = 0; guard < 128; ++guard) {
        row_step();
        col_step();
        if (m.a21 != 0 || m.a12 != 0) continue;
        if (m.a11 < 0) {
            const Mat2 flip{-1, 0, 0, 1};
            m = flip * m;
            u = flip * u;
        }
        if (m.a22 < 0) {
            const Mat2 flip{1, 0, 0, -1};
            m = flip * m;
            u = flip * u;
        }
        if (m.a22 % m.a11 == 0) {
            SmithForm out{u, m, v};
            if (out.u.det() != 1 && out.u.det() != -1)
                throw internal_error("left transform not unimodular");
            if (out.v.det() != 1 && out.v.det() != -1)
                throw internal_error("right transform not unimodular");
            if (out.u * original * out.v != out.d)
                throw internal_error("transforms do not reproduce the input matrix");
            const long long det = original.det();
            if (out.d.a11 < 1 || out.d.a11 * out.d.a22 != (det < 0 ? -det : det))
                throw internal_error("diagonal does not multiply to |det|");
            return out;
        }
        // fold the second invariant into the pivot and restart
        const Mat2 right{1, 0, 1, 1};  // col1 += col2
        m = m * right;
        v = v * right;
    }
    throw internal_error("smith normal form failed to converge");
}

/// The quotient Z^2 / 2L presented in invariant-factor form, with the
/// projection map it came from.
struct LatticeQuotient {
    GroupSpec group;
    Mat2 transform;  // U with U*(2L)*V = diag(group.a, group.b)
    Mat2 companion;  // V
    Sublattice lattice;

    GroupElement project(const Vec2& v) const {
        const Vec2 w = transform * v;
        return {((w.x % group.a) + group.a) % group.a, ((w.y % group.b) + group.b) % group.b};
    }
};

inline LatticeQuotient lattice_quotient(const Sublattice& L) {
    if (L.basis.det() == 0) throw std::invalid_argument("lattice basis must be nonsingular");
    if (L.covolume() < 2) throw std::invalid_argument("covolume must exceed one");
    const SmithForm snf = smith_normal_form(L.basis.scaled(2));
    const GroupSpec A = make_group(snf.d.a11, snf.d.a22);
    if (A.order() != 4 * L.covolume())
        throw internal_error("quotient order must be four times the covolume");
    return {A, snf.u, snf.v, L};
}

struct PullbackCheck {
    bool constant = false;
    HSet hset;                       // the projected classes
    std::optional<Context> witness;  // failing context when not constant
};

/// Projects up to eight integer points through Z^2 / 2L; they must form
/// exactly four pair classes.  Constant pullback iff that H-set is
/// nonseparating.
inline PullbackCheck constant_pullback_from_lattice(const Sublattice& L,
                                                    const std::vector<Vec2>& points,
                                                    long long bound = kDefaultGroupOrderBound) {
    if (points.empty() || points.size() > 8)
        throw std::invalid_argument("between one and eight points expected");
    const LatticeQuotient q = lattice_quotient(L);
    check_group_order(q.group, bound);
    std::vector<PairClass> classes;
    for (const auto& pt : points) {
        const PairClass c = PairClass::of(q.group, q.project(pt));
        if (std::find(classes.begin(), classes.end(), c) == classes.end()) classes.push_back(c);
    }
    if (classes.size() != 4)
        throw invalid_hset_error("projected points form " + std::to_string(classes.size()) +
                                 " pair classes, need exactly 4");
    const HSet H = HSet::of(q.group, {classes[0].rep, classes[1].rep, classes[2].rep,
                                      classes[3].rep});
    const NonsepResult r = is_nonseparating(q.group, H, bound);
    return {r.nonseparating, H, r.witness};
}

/// All groups (2*s1, 2*s2) with s1 | s2 and s1*s2 = d, sorted by s1.  These
/// are exactly the quotients Z^2 / 2L over sublattices of covolume d.
inline std::vector<GroupSpec> groups_for_degree(long long d) {
    if (d < 2) throw std::invalid_argument("degree must be at least 2");
    std::vector<GroupSpec> out;
    for (long long s1 = 1; s1 * s1 <= d; ++s1)
        if (d % s1 == 0 && (d / s1) % s1 == 0) out.push_back({2 * s1, 2 * (d / s1)});
    return out;
}

struct DegreeGroupResult {
    GroupSpec group;
    SearchReport report;
};

struct DegreeReport {
    long long degree = 0;
    std::vector<DegreeGroupResult> per_group;
    bool possible = false;
    std::optional<Sublattice> witness;       // diag(s1, s2) realizing the first hit
    std::optional<GroupSpec> witness_group;  // its quotient group
    std::string note;                        // caveats, if any
};

/// Searches every candidate group of order 4d; possible iff some search finds
/// a nonseparating subset, with a diagonal witness lattice realizing it.
inline DegreeReport degree_report(long long d, const SearchOptions& opt = {}) {
    DegreeReport out;
    out.degree = d;
    for (const GroupSpec& A : groups_for_degree(d)) {
        if (make_group(A.a, A.b) != A)
            throw internal_error("candidate group not in canonical presentation");
        check_group_order(A, opt.size_bound);
        out.per_group.push_back({A, search_group(A, opt)});
        const auto& entry = out.per_group.back();
        if (!entry.report.found.empty() && !out.witness) {
            const Sublattice L{Mat2::diagonal(A.a / 2, A.b / 2)};
            if (lattice_quotient(L).group != A)
                throw internal_error("diagonal witness lattice has the wrong quotient");
            out.witness = L;
            out.witness_group = A;
            out.possible = true;
        }
    }
    if (d == 2 || d == 4)
        out.note =
            "group-level verdict: at degree 2 or 4 the torus factor map can have fewer "
            "critical values than marked points, so a hit here need not lift to a map "
            "with four postcritical points";
    return out;
}

/// Riemann-Hurwitz feasibility: can a degree-deg branched self-cover of the
/// sphere with all local degrees 2 have at most num_values critical values?
/// A cover has 2*deg - 2 critical points, each critical value absorbs at most
/// floor(deg/2) of them, and degree 3 is ruled out separately because its
/// four critical points map bijectively onto the critical values.
inline bool rh_branched_cover_feasible(long long deg, long long num_values) {
    if (deg < 2) throw std::invalid_argument("degree must be at least 2");
    if (num_values < 1) throw std::invalid_argument("need at least one critical value");
    if (deg == 3 && num_values <= 3) return false;
    return 2 * deg - 2 <= num_values * (deg / 2);
}

/// True when a factorization f = g∘s through a set of at most three marked
/// points is arithmetically impossible: deg(s) would be 2 or 4, neither of
/// which divides an odd deg_f.
inline bool mcmullen_parity_obstruction(long long deg_f) {
    if (deg_f < 2) throw std::invalid_argument("degree must be at least 2");
    return deg_f % 2 == 1;
}

}  // namespace nonsep
