#ifndef MGSEP_RANDOM_GRAPH_HPP
#define MGSEP_RANDOM_GRAPH_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mgsep/mixed_graph.hpp"

namespace mgsep {

struct RandomGraphOptions {
    std::size_t n = 6;
    double p_directed = 0.3;
    double p_bidirected = 0.2;
    std::uint64_t seed = 0;
};

namespace detail {

/// Uniform double in [0, 1) from the generator's raw output. The standard
/// distributions are implementation-defined, so they cannot back a
/// cross-platform determinism guarantee; this mapping can.
inline double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::string padded_name(std::size_t i, std::size_t n) {
    std::size_t width = 1;
    for (std::size_t top = n > 0 ? n - 1 : 0; top >= 10; top /= 10) ++width;
    std::string digits = std::to_string(i);
    return "v" + std::string(width - digits.size(), '0') + digits;
}

}  // namespace detail

/// Seed-deterministic generator. Vertex names are zero-padded (v0..v9,
/// v00..v99, ...) so name order matches index order. Candidate edges are
/// visited in a fixed sequence: all ordered pairs (i, j) for directed
/// edges, then all unordered pairs i < j for bidirected ones, each kept
/// with its configured probability.
inline MixedGraph random_graph(const RandomGraphOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    std::vector<std::string> names;
    names.reserve(opts.n);
    for (std::size_t i = 0; i < opts.n; ++i) {
        names.push_back(detail::padded_name(i, opts.n));
    }

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < opts.n; ++i) {
        for (std::size_t j = 0; j < opts.n; ++j) {
            if (i == j) continue;
            if (detail::next_unit(rng) < opts.p_directed) {
                edges.push_back(Edge::directed(names[i], names[j]));
            }
        }
    }
    for (std::size_t i = 0; i < opts.n; ++i) {
        for (std::size_t j = i + 1; j < opts.n; ++j) {
            if (detail::next_unit(rng) < opts.p_bidirected) {
                edges.push_back(Edge::bidirected(names[i], names[j]));
            }
        }
    }
    return MixedGraph::build(names, edges);
}

}  // namespace mgsep

#endif
