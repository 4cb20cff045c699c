#ifndef MGSEP_VALIDATE_HPP
#define MGSEP_VALIDATE_HPP

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mgsep/graph_text.hpp"
#include "mgsep/mixed_graph.hpp"
#include "mgsep/random_graph.hpp"
#include "mgsep/separation.hpp"

namespace mgsep {

struct SweepOptions {
    std::size_t n = 6;
    std::size_t n_min = 0;             // 0: every graph has exactly n vertices
    std::size_t graphs = 100;
    std::uint64_t seed = 0;
    double p_directed = 0.3;
    double p_bidirected = 0.2;
    std::size_t max_edges = 0;         // 0: unbounded; else redraw until within bound
    std::size_t c_samples = 64;        // 0: every subset of V \ {a, b}
    std::size_t oracle_max_edges = 0;  // 0: skip the exhaustive procedure
    bool check_witnesses = false;
};

struct SweepReport {
    std::size_t graphs_tested = 0;
    std::size_t queries_tested = 0;
    std::size_t oracle_queries = 0;
    std::size_t disagreements = 0;
    std::size_t witness_failures = 0;
    std::string first_failure;  // reproduction of the first failing query, empty when clean

    bool clean() const { return disagreements == 0 && witness_failures == 0; }
};

/// Graph number k of a sweep, regenerable in isolation. Sizes cycle through
/// [n_min, n] when n_min is set; when max_edges is set, denser draws are
/// rejected and redrawn under a derived seed.
inline MixedGraph sweep_graph(const SweepOptions& opts, std::size_t k) {
    std::size_t n = opts.n;
    if (opts.n_min > 0 && opts.n > opts.n_min) {
        n = opts.n_min + k % (opts.n - opts.n_min + 1);
    }
    for (std::uint64_t attempt = 0;; ++attempt) {
        RandomGraphOptions g_opts;
        g_opts.n = n;
        g_opts.p_directed = opts.p_directed;
        g_opts.p_bidirected = opts.p_bidirected;
        g_opts.seed = opts.seed + k * 100003 + attempt;
        MixedGraph g = random_graph(g_opts);
        if (opts.max_edges == 0 || g.edge_count() <= opts.max_edges) return g;
    }
}

namespace detail {

inline std::string describe_failure(const MixedGraph& g, const IndexQuery& q,
                                    const std::string& what) {
    std::ostringstream out;
    out << what << "\n  a =";
    for (int v : q.a) out << " " << g.name_of(v);
    out << "\n  b =";
    for (int v : q.b) out << " " << g.name_of(v);
    out << "\n  c =";
    for (int v : q.c) out << " " << g.name_of(v);
    out << "\n  graph:\n" << serialize_graph_file(g);
    return out.str();
}

}  // namespace detail

/// Runs the equivalence sweep: for each generated graph, every unordered
/// singleton pair (a, b) is tested against sampled (or, with c_samples 0,
/// all) conditioning sets drawn from the remaining vertices. Each query is
/// decided by the walk, augmentation and district procedures, optionally by
/// the exhaustive one, and optionally has its witnesses revalidated.
inline SweepReport run_sweep(const SweepOptions& opts) {
    SweepReport report;
    for (std::size_t k = 0; k < opts.graphs; ++k) {
        MixedGraph g = sweep_graph(opts, k);
        ++report.graphs_tested;
        std::size_t n = g.vertex_count();
        if (n < 2) continue;

        detail::WalkSpace ws(g);
        std::mt19937_64 qrng(opts.seed ^ (0x9e3779b97f4a7c15ull + k * 0xbf58476d1ce4e5b9ull));
        bool use_oracle = opts.oracle_max_edges > 0 && g.edge_count() <= opts.oracle_max_edges;

        auto run_query = [&](int a, int b, std::vector<int> c) {
            std::sort(c.begin(), c.end());
            detail::IndexQuery iq = detail::make_index_query(g, {a}, {b}, c);
            ++report.queries_tested;

            bool by_walk = detail::walk_separated_in(g, ws, iq);
            bool by_augmentation = detail::augmentation_separated(g, iq);
            bool by_district = detail::district_separated(g, iq);
            bool agree = by_walk == by_augmentation && by_walk == by_district;
            if (agree && use_oracle) {
                ++report.oracle_queries;
                agree = detail::oracle_separated_in(ws, iq) == by_walk;
            }
            if (!agree) {
                ++report.disagreements;
                if (report.first_failure.empty()) {
                    report.first_failure = detail::describe_failure(g, iq, "criteria disagree");
                }
                return;
            }

            if (opts.check_witnesses) {
                SeparationQuery q;
                q.a.insert(g.name_of(a));
                q.b.insert(g.name_of(b));
                for (int v : c) q.c.insert(g.name_of(v));
                bool ok;
                if (by_walk) {
                    detail::StarPartition star = detail::partition_star_indexed(g, iq);
                    ok = certificate_valid(g, q, detail::make_certificate(g, star));
                } else {
                    Walk walk;
                    detail::walk_separated_in(g, ws, iq, &walk);
                    ok = !walk.steps.empty() && q.a.count(walk.start) && q.b.count(walk.end()) &&
                         walk_is_m_connecting(g, walk, q.c);
                }
                if (!ok) {
                    ++report.witness_failures;
                    if (report.first_failure.empty()) {
                        report.first_failure = detail::describe_failure(g, iq, "witness invalid");
                    }
                }
            }
        };

        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                std::vector<int> others;
                for (std::size_t v = 0; v < n; ++v) {
                    if (v != i && v != j) others.push_back(static_cast<int>(v));
                }
                if (opts.c_samples == 0) {
                    std::uint64_t subsets = std::uint64_t{1} << others.size();
                    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
                        std::vector<int> c;
                        for (std::size_t t = 0; t < others.size(); ++t) {
                            if (mask >> t & 1) c.push_back(others[t]);
                        }
                        run_query(static_cast<int>(i), static_cast<int>(j), std::move(c));
                    }
                } else {
                    for (std::size_t s = 0; s < opts.c_samples; ++s) {
                        std::uint64_t word = qrng();
                        std::vector<int> c;
                        for (std::size_t t = 0; t < others.size(); ++t) {
                            if (word >> t & 1) c.push_back(others[t]);
                        }
                        run_query(static_cast<int>(i), static_cast<int>(j), std::move(c));
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace mgsep

#endif
