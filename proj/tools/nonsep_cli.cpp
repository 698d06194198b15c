// Command-line front end: decide, search, and classify nonseparating subsets
// of two-generated finite abelian groups, report which branched-cover degrees
// admit a constant pullback map, and inspect lattice quotients.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nonsep/canonical.hpp"
#include "nonsep/construct.hpp"
#include "nonsep/json_io.hpp"
#include "nonsep/lattice.hpp"
#include "nonsep/nonsep.hpp"
#include "nonsep/search.hpp"
#include "nonsep/subgroup.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

struct NullBuffer : std::streambuf {
    int overflow(int c) override { return c; }
};

struct GlobalOptions {
    bool json = false;
    int jobs = 1;
    long long size_bound = nonsep::kDefaultGroupOrderBound;
    bool quiet = false;
    bool no_timing = false;

    NullBuffer null_buffer;
    std::ostream null_stream{&null_buffer};

    std::ostream& out() { return quiet ? null_stream : std::cout; }
    std::ostream& err() { return quiet ? null_stream : std::cerr; }
    nonsep::SearchOptions search() const { return {jobs, false, size_bound}; }
};

std::vector<long long> parse_ints(const std::string& text, char sep, std::size_t count,
                                  const std::string& what) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, sep)) {
        std::size_t pos = 0;
        const long long value = std::stoll(piece, &pos);
        while (pos < piece.size() && std::isspace(static_cast<unsigned char>(piece[pos]))) ++pos;
        if (pos != piece.size()) throw std::invalid_argument("malformed " + what + ": " + text);
        out.push_back(value);
    }
    if (out.size() != count)
        throw std::invalid_argument(what + " needs " + std::to_string(count) +
                                    " integers, got " + std::to_string(out.size()));
    return out;
}

nonsep::GroupSpec parse_group(const std::string& text) {
    const auto v = parse_ints(text, ',', 2, "group");
    return nonsep::make_group(v[0], v[1]);
}

std::vector<nonsep::GroupElement> parse_elements(const std::string& text, std::size_t count,
                                                 const std::string& what) {
    std::vector<nonsep::GroupElement> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ';')) {
        const auto v = parse_ints(piece, ',', 2, what);
        out.push_back({v[0], v[1]});
    }
    if (count != 0 && out.size() != count)
        throw std::invalid_argument(what + " needs " + std::to_string(count) + " entries");
    return out;
}

/// Classes arrive as representatives in the normalized group; each is folded
/// to the smaller of {h, -h} and duplicates are rejected.
nonsep::HSet parse_hset(const nonsep::GroupSpec& A, const std::string& text) {
    const auto raw = parse_elements(text, 4, "class list");
    for (const auto& e : raw) nonsep::require_element(A, e);
    return nonsep::HSet::of(A, raw);
}

void print_orbit_table(std::ostream& os, const nonsep::SearchReport& r, bool with_timing) {
    os << "group " << r.group << ": " << r.orbits.size() << " orbit(s), "
       << r.hsets_scanned << " candidate(s) scanned";
    if (with_timing) os << ", " << r.elapsed.count() << " ms";
    os << "\n";
    for (const auto& o : r.orbits) os << "  " << o.rep << "  orbit size " << o.size << "\n";
}

int cmd_check(GlobalOptions& g, const std::string& group_arg, const std::string& h_arg) {
    const nonsep::GroupSpec A = parse_group(group_arg);
    nonsep::check_group_order(A, g.size_bound);
    const nonsep::HSet H = parse_hset(A, h_arg);
    const nonsep::NonsepResult res = nonsep::is_nonseparating(A, H, g.size_bound);
    if (g.json) {
        nlohmann::json out{{"group", nonsep::to_json(A)},
                           {"hset", nonsep::to_json(H)},
                           {"nonseparating", res.nonseparating}};
        out["witness"] =
            res.witness ? nonsep::witness_json(A, *res.witness, H) : nlohmann::json(nullptr);
        g.out() << out.dump() << "\n";
    } else {
        g.out() << "group " << A << "  H = " << H << "\n";
        g.out() << "nonseparating: " << (res.nonseparating ? "yes" : "no") << "\n";
        if (res.witness) {
            const auto cs = nonsep::coset_numbers(A, *res.witness, H);
            g.out() << "witness: B = <" << res.witness->B.min_generator() << "> (order "
                    << res.witness->B.order() << "), quotient order " << res.witness->n
                    << ", generator " << res.witness->gen << ", coset numbers (" << cs.c[0]
                    << "," << cs.c[1] << "," << cs.c[2] << "," << cs.c[3] << ")\n";
        }
    }
    return res.nonseparating ? kExitYes : kExitNo;
}

int cmd_search(GlobalOptions& g, const std::string& group_arg) {
    const nonsep::GroupSpec A = parse_group(group_arg);
    const nonsep::SearchReport r = nonsep::search_group(A, g.search());
    if (g.json)
        g.out() << nonsep::report_json(r, !g.no_timing).dump() << "\n";
    else
        print_orbit_table(g.out(), r, !g.no_timing);
    return kExitYes;
}

int cmd_degree(GlobalOptions& g, long long d) {
    const nonsep::DegreeReport r = nonsep::degree_report(d, g.search());
    if (g.json) {
        nlohmann::json groups = nlohmann::json::array();
        for (const auto& pg : r.per_group)
            groups.push_back(nonsep::report_json(pg.report, !g.no_timing));
        nlohmann::json out{
            {"degree", r.degree}, {"possible", r.possible}, {"groups", groups}};
        if (r.witness) {
            const auto& b = r.witness->basis;
            out["witness"] = {{"lattice", {{b.a11, b.a12}, {b.a21, b.a22}}},
                              {"group", nonsep::to_json(*r.witness_group)}};
        }
        if (!r.note.empty()) out["note"] = r.note;
        g.out() << out.dump() << "\n";
    } else {
        g.out() << "degree " << r.degree << " (group order " << 4 * r.degree << ")\n";
        for (const auto& pg : r.per_group) print_orbit_table(g.out(), pg.report, !g.no_timing);
        g.out() << "constant pullback possible: " << (r.possible ? "yes" : "no") << "\n";
        if (r.witness) {
            const auto& b = r.witness->basis;
            g.out() << "witness lattice [[" << b.a11 << "," << b.a12 << "],[" << b.a21 << ","
                    << b.a22 << "]] with quotient " << *r.witness_group << "\n";
        }
        if (!r.note.empty()) g.out() << "note: " << r.note << "\n";
    }
    return r.possible ? kExitYes : kExitNo;
}

int cmd_lattice(GlobalOptions& g, const std::string& matrix_arg, const std::string& points_arg) {
    const auto m = parse_ints(matrix_arg, ',', 4, "matrix");
    const nonsep::Sublattice L{{m[0], m[1], m[2], m[3]}};
    const nonsep::LatticeQuotient q = nonsep::lattice_quotient(L);
    nlohmann::json out{{"lattice", {{m[0], m[1]}, {m[2], m[3]}}},
                       {"degree", L.covolume()},
                       {"group", nonsep::to_json(q.group)},
                       {"snf",
                        {{"d", {q.group.a, q.group.b}},
                         {"u", {{q.transform.a11, q.transform.a12},
                                {q.transform.a21, q.transform.a22}}},
                         {"v", {{q.companion.a11, q.companion.a12},
                                {q.companion.a21, q.companion.a22}}}}}};
    int exit_code = kExitYes;
    bool checked = false;
    nonsep::PullbackCheck check;
    if (!points_arg.empty()) {
        const auto raw = parse_elements(points_arg, 0, "point list");
        std::vector<nonsep::Vec2> pts;
        for (const auto& e : raw) pts.push_back({e.x, e.y});
        check = nonsep::constant_pullback_from_lattice(L, pts, g.size_bound);
        checked = true;
        out["hset"] = nonsep::to_json(check.hset);
        out["constant_pullback"] = check.constant;
        out["witness"] = check.witness
                             ? nonsep::witness_json(q.group, *check.witness, check.hset)
                             : nlohmann::json(nullptr);
        exit_code = check.constant ? kExitYes : kExitNo;
    }
    if (g.json) {
        g.out() << out.dump() << "\n";
    } else {
        g.out() << "lattice [[" << m[0] << "," << m[1] << "],[" << m[2] << "," << m[3]
                << "]]: degree " << L.covolume() << ", quotient " << q.group << "\n";
        g.out() << "snf: U=[[" << q.transform.a11 << "," << q.transform.a12 << "],["
                << q.transform.a21 << "," << q.transform.a22 << "]] D=diag(" << q.group.a << ","
                << q.group.b << ") V=[[" << q.companion.a11 << "," << q.companion.a12 << "],["
                << q.companion.a21 << "," << q.companion.a22 << "]]\n";
        if (checked) {
            g.out() << "projected H = " << check.hset << "\n";
            g.out() << "constant pullback: " << (check.constant ? "yes" : "no") << "\n";
        }
    }
    return exit_code;
}

int verify_examples(GlobalOptions& g, const std::string& fixture_arg) {
    std::string path = fixture_arg;
    if (path.empty()) {
        for (const char* candidate : {"data/examples.json", "examples.json"}) {
            if (std::ifstream(candidate).good()) {
                path = candidate;
                break;
            }
        }
        if (path.empty()) throw std::invalid_argument("fixture file examples.json not found");
    }
    bool all_ok = true;
    for (const auto& fc : nonsep::load_fixtures(path)) {
        const nonsep::HSet H = nonsep::HSet::of(fc.group, fc.classes);
        const bool got = nonsep::is_nonseparating(fc.group, H, g.size_bound).nonseparating;
        const bool ok = got == fc.expect;
        all_ok = all_ok && ok;
        g.out() << (ok ? "[ok]  " : "[FAIL] ") << fc.group << " " << H << " expect "
                << (fc.expect ? "nonseparating" : "separating") << ", got "
                << (got ? "nonseparating" : "separating") << "\n";
    }
    return all_ok ? kExitYes : kExitNo;
}

int verify_appendix(GlobalOptions& g) {
    bool all_ok = true;

    {  // generator lifts: gcd(g,n)=1 and (n/m)*g == h for all h mod n, n <= 200
        bool ok = true;
        long long checked = 0;
        for (long long n = 1; n <= 200 && ok; ++n) {
            for (long long h = 0; h < n; ++h) {
                const long long lifted = nonsep::generator_lift(n, h);
                const long long m = n / std::gcd(h, n);
                if (std::gcd(lifted, n) != 1 || (n / m) % n * lifted % n != h % n) {
                    ok = false;
                    break;
                }
                ++checked;
            }
        }
        all_ok = all_ok && ok;
        g.out() << (ok ? "[ok]  " : "[FAIL] ") << "generator lifts (n <= 200, " << checked
                << " cases)\n";
    }

    {  // basis multiples: d*v == g with v verified basis element, n <= 60
        bool ok = true;
        long long checked = 0;
        for (long long n = 1; n <= 60 && ok; ++n) {
            const nonsep::GroupSpec A{n, n};
            for (long long x = 0; x < n && ok; ++x) {
                for (long long y = 0; y < n; ++y) {
                    const auto [v, d] = nonsep::basis_multiple(n, {x, y});
                    if (nonsep::scale(A, d, v) != nonsep::GroupElement{x, y}) {
                        ok = false;
                        break;
                    }
                    ++checked;
                }
            }
        }
        all_ok = all_ok && ok;
        g.out() << (ok ? "[ok]  " : "[FAIL] ") << "basis multiples (n <= 60, " << checked
                << " cases)\n";
    }

    {  // cyclic extensions: A' ∩ B = B' with A/B cyclic, |A| <= 256
        bool ok = true;
        long long checked = 0;
        for (long long a = 1; a * a <= 256 && ok; ++a) {
            for (long long b = a; a * b <= 256 && ok; b += a) {
                const nonsep::GroupSpec A{a, b};
                const auto candidates = nonsep::cyclic_subgroups_with_cyclic_quotient(A);
                for (const auto& Ap : nonsep::all_subgroups(A)) {
                    for (const auto& e : Ap.elements()) {
                        const auto Bp = nonsep::Subgroup::cyclic(A, e);
                        if (Bp.min_generator() != e) continue;  // one scan per B'
                        if (!Ap.contains_subgroup(Bp)) continue;
                        if (nonsep::detail::quotient_exponent(A, Ap.elements(), Bp) !=
                            Ap.order() / Bp.order())
                            continue;  // A'/B' not cyclic
                        const auto B = nonsep::extend_cyclic_subgroup(A, Ap, Bp, candidates);
                        std::vector<nonsep::GroupElement> meet;
                        std::set_intersection(Ap.elements().begin(), Ap.elements().end(),
                                              B.elements().begin(), B.elements().end(),
                                              std::back_inserter(meet));
                        const bool good =
                            B.is_cyclic() && meet == Bp.elements() &&
                            nonsep::quotient_invariants(A, B).first == 1;
                        if (!good) {
                            ok = false;
                            break;
                        }
                        ++checked;
                    }
                    if (!ok) break;
                }
            }
        }
        all_ok = all_ok && ok;
        g.out() << (ok ? "[ok]  " : "[FAIL] ") << "cyclic extensions (|A| <= 256, " << checked
                << " cases)\n";
    }

    return all_ok ? kExitYes : kExitNo;
}

int verify_theorems(GlobalOptions& g) {
    // Desk-scale nonexistence table: each group is searched exhaustively and
    // must contain no nonseparating subset.
    std::vector<std::pair<nonsep::GroupSpec, std::string>> instances = {
        {{2, 4}, "degree 2"},
        {{2, 26}, "degree 13 (prime >= 13)"},
        {{2, 30}, "degree 15 (odd square-free)"},
        {{10, 10}, "degree 25 = 5^2"},
        {{2, 50}, "degree 25 = 5^2"},
        {{14, 14}, "degree 49 = 7^2"},
    };
    const char* long_flag = std::getenv("NONSEP_THEOREMS_LONG");
    if (long_flag && std::string(long_flag) == "1") {
        instances.push_back({{2, 686}, "degree 343 = 7^3 (long)"});
        instances.push_back({{14, 98}, "degree 343 = 7^3 (long)"});
    }
    bool all_ok = true;
    for (const auto& [A, label] : instances) {
        const nonsep::SearchReport r = nonsep::search_group(A, g.search());
        const bool ok = r.found.empty();
        all_ok = all_ok && ok;
        g.out() << (ok ? "[ok]  " : "[FAIL] ") << A << " [" << label << "]: expected 0, found "
                << r.found.size() << " orbit(s) among " << r.hsets_scanned << " candidates";
        if (!g.no_timing) g.out() << " (" << r.elapsed.count() << " ms)";
        g.out() << "\n";
    }
    if (!(long_flag && std::string(long_flag) == "1"))
        g.out() << "(set NONSEP_THEOREMS_LONG=1 to include the |A| = 1372 instances)\n";
    return all_ok ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOptions g;
    CLI::App app{"nonseparating subsets of two-generated finite abelian groups"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_flag("--help", "print help");  // frees -h; check owns --h

    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--jobs", g.jobs, "parallel workers")->check(CLI::PositiveNumber);
    app.add_option("--size-bound", g.size_bound, "largest |A| any enumeration may touch")
        ->envname("NONSEP_SIZE_BOUND")
        ->check(CLI::Range(4LL, nonsep::kMaxGroupOrderBound));
    app.add_flag("--quiet", g.quiet, "suppress output, keep exit codes");
    app.add_flag("--no-timing", g.no_timing, "omit elapsed times from reports");

    std::string group_arg, h_arg, matrix_arg, points_arg, suite_arg, fixture_arg;
    long long degree_arg = 0;

    auto* check = app.add_subcommand("check", "decide whether one H-set is nonseparating");
    check->set_help_flag("--help", "print help");
    check->add_option("--group", group_arg, "group as a,b")->required();
    check->add_option("--h", h_arg, "four class reps x,y;x,y;x,y;x,y")->required();

    auto* search = app.add_subcommand("search", "find all nonseparating H-sets of a group");
    search->add_option("--group", group_arg, "group as a,b")->required();

    auto* classify = app.add_subcommand("classify", "orbit classification of a group");
    classify->add_option("--group", group_arg, "group as a,b")->required();

    auto* degree = app.add_subcommand("degree", "can a given degree have constant pullback?");
    degree->add_option("degree", degree_arg, "covering degree")->required();

    auto* lattice = app.add_subcommand("lattice", "quotient of Z^2 by a doubled sublattice");
    lattice->add_option("matrix", matrix_arg, "row-major basis m11,m12,m21,m22")->required();
    lattice->add_option("--points", points_arg, "integer points x,y;... to project");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite_arg, "examples | appendix | theorems")->required();
    verify->add_option("--fixture", fixture_arg, "fixture file for the examples suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (!g.quiet) {
            if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
                std::cout << app.help();
                return kExitYes;
            }
            std::cerr << e.what() << "\n";
        }
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(g, group_arg, h_arg);
        if (search->parsed() || classify->parsed()) return cmd_search(g, group_arg);
        if (degree->parsed()) return cmd_degree(g, degree_arg);
        if (lattice->parsed()) return cmd_lattice(g, matrix_arg, points_arg);
        if (verify->parsed()) {
            if (suite_arg == "examples") return verify_examples(g, fixture_arg);
            if (suite_arg == "appendix") return verify_appendix(g);
            if (suite_arg == "theorems") return verify_theorems(g);
            throw std::invalid_argument("unknown suite: " + suite_arg);
        }
    } catch (const std::exception& e) {
        g.err() << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
