#pragma once

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <thread>
#include <vector>

#include "nonsep/canonical.hpp"
#include "nonsep/nonsep.hpp"

namespace nonsep {

struct SearchOptions {
    int jobs = 1;
    bool symmetry_reduction = false;  // scan only orbit minima
    long long size_bound = kDefaultGroupOrderBound;
};

struct OrbitRecord {
    HSet rep;            // canonical form
    std::uint64_t size;  // distinct H-sets in the orbit
};

struct SearchReport {
    GroupSpec group;
    std::vector<HSet> found;  // canonical representatives, sorted, one per orbit
    std::uint64_t hsets_scanned = 0;
    std::vector<OrbitRecord> orbits;
    std::chrono::milliseconds elapsed{0};
};

namespace detail {

using IdQuad = std::array<std::uint32_t, 4>;

struct StripeResult {
    std::uint64_t scanned = 0;
    std::vector<IdQuad> passed;
};

/// Scans all candidates whose first class index is i.
inline void scan_stripe(const DecisionTable& T, const SymmetryTable* sym, std::size_t i,
                        StripeResult& out) {
    const std::size_t p = T.classes.size();
    IdQuad q;
    q[0] = static_cast<std::uint32_t>(i);
    for (std::size_t j = i + 1; j + 2 < p; ++j) {
        q[1] = static_cast<std::uint32_t>(j);
        for (std::size_t k = j + 1; k + 1 < p; ++k) {
            q[2] = static_cast<std::uint32_t>(k);
            for (std::size_t l = k + 1; l < p; ++l) {
                q[3] = static_cast<std::uint32_t>(l);
                if (sym && !sym->is_orbit_minimum(q)) continue;
                ++out.scanned;
                if (T.first_failure(q) == DecisionTable::npos) out.passed.push_back(q);
            }
        }
    }
}

}  // namespace detail

/// Exhaustive scan of every H-set of A (optionally restricted to one
/// representative per orbit), reporting each nonseparating class as a
/// canonical representative with its orbit size.  The candidate stream is
/// partitioned by first class index; the merged report does not depend on
/// scheduling.
inline SearchReport search_group(const GroupSpec& A, const SearchOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchReport report;
    report.group = A;

    const auto T = detail::build_decision_table(A, opt.size_bound);
    const std::size_t p = T.classes.size();

    SymmetryTable sym;
    bool have_sym = false;
    if (opt.symmetry_reduction && p >= 4) {
        sym = symmetry_table(A, opt.size_bound);
        have_sym = true;
    }

    std::vector<detail::StripeResult> stripes(p >= 4 ? p - 3 : 0);
    if (!stripes.empty()) {
        const int jobs = std::max(1, opt.jobs);
        if (jobs == 1) {
            for (std::size_t i = 0; i < stripes.size(); ++i)
                detail::scan_stripe(T, have_sym ? &sym : nullptr, i, stripes[i]);
        } else {
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (std::size_t i = next.fetch_add(1); i < stripes.size();
                     i = next.fetch_add(1))
                    detail::scan_stripe(T, have_sym ? &sym : nullptr, i, stripes[i]);
            };
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(jobs));
            for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
    }

    std::vector<detail::IdQuad> passed;
    for (const auto& s : stripes) {
        report.hsets_scanned += s.scanned;
        passed.insert(passed.end(), s.passed.begin(), s.passed.end());
    }

    if (!passed.empty()) {
        if (!have_sym) {
            sym = symmetry_table(A, opt.size_bound);
            have_sym = true;
        }
        std::vector<std::pair<detail::IdQuad, std::uint64_t>> reps;  // canonical -> hit count
        for (const auto& q : passed) {
            const auto canon = sym.canonical_ids(q);
            auto it = std::find_if(reps.begin(), reps.end(),
                                   [&](const auto& r) { return r.first == canon; });
            if (it == reps.end())
                reps.push_back({canon, 1});
            else
                ++it->second;
        }
        std::sort(reps.begin(), reps.end());
        for (const auto& [canon, hits] : reps) {
            const std::uint64_t size = sym.orbit_size(canon);
            // in a full scan the whole orbit must have been seen
            if (!opt.symmetry_reduction && hits != size)
                throw internal_error("orbit size disagrees with exhaustive scan");
            report.found.push_back(sym.hset_of(canon));
            report.orbits.push_back({sym.hset_of(canon), size});
        }
    }

    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return report;
}

/// Orbit representatives (canonical forms) of all nonseparating H-sets with
/// orbit sizes; the sizes sum to the unreduced count of nonseparating H-sets.
inline std::vector<OrbitRecord> classify_nonseparating(const GroupSpec& A,
                                                       const SearchOptions& opt = {}) {
    return search_group(A, opt).orbits;
}

}  // namespace nonsep
