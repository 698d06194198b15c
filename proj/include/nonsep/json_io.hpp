#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nonsep/nonsep.hpp"
#include "nonsep/search.hpp"

namespace nonsep {

// Wire formats: group = [a,b], element = [x,y], hset = [[x,y] x4],
// orbit = {rep: hset, size: int}.

inline nlohmann::json to_json(const GroupSpec& A) { return {A.a, A.b}; }
inline nlohmann::json to_json(const GroupElement& e) { return {e.x, e.y}; }

inline nlohmann::json to_json(const HSet& H) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : H.reps) out.push_back(to_json(r));
    return out;
}

inline nlohmann::json to_json(const OrbitRecord& o) {
    return {{"rep", to_json(o.rep)}, {"size", o.size}};
}

inline nlohmann::json witness_json(const GroupSpec& A, const Context& ctx, const HSet& H) {
    const CosetNumbers cs = coset_numbers(A, ctx, H);
    return {{"subgroup_generator", to_json(ctx.B.min_generator())},
            {"subgroup_order", ctx.B.order()},
            {"quotient_order", ctx.n},
            {"generator", to_json(ctx.gen)},
            {"coset_numbers", {cs.c[0], cs.c[1], cs.c[2], cs.c[3]}}};
}

inline nlohmann::json report_json(const SearchReport& r, bool with_timing) {
    nlohmann::json orbits = nlohmann::json::array();
    for (const auto& o : r.orbits) orbits.push_back(to_json(o));
    nlohmann::json out{{"group", to_json(r.group)},
                       {"orbits", orbits},
                       {"hsets_scanned", r.hsets_scanned}};
    if (with_timing) out["elapsed_ms"] = r.elapsed.count();
    return out;
}

inline GroupSpec group_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("group must be [a, b]");
    return make_group(j[0].get<long long>(), j[1].get<long long>());
}

inline GroupElement element_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("element must be [x, y]");
    return {j[0].get<long long>(), j[1].get<long long>()};
}

struct FixtureCase {
    GroupSpec group;
    std::vector<GroupElement> classes;
    bool expect = true;
};

inline std::vector<FixtureCase> load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open fixture file: " + path);
    nlohmann::json doc;
    in >> doc;
    if (!doc.is_array()) throw std::invalid_argument("fixture file must hold a list");
    std::vector<FixtureCase> out;
    for (const auto& item : doc) {
        FixtureCase fc;
        fc.group = group_from_json(item.at("group"));
        for (const auto& cls : item.at("classes")) fc.classes.push_back(element_from_json(cls));
        fc.expect = item.at("expect").get<bool>();
        out.push_back(std::move(fc));
    }
    return out;
}

}  // namespace nonsep
