// Breadth-first exploration of exchange graphs.
#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcl/cluster.hpp"

namespace gcl {

enum class ExploreStatus { Finite, CapReached, TimeLimit };

std::string to_string(ExploreStatus s);

struct ExchangeEdge {
    int from = 0;
    int mutation = 0;  // index mutated in the seed `from`
    int to = 0;
};

struct ExchangeGraph {
    std::vector<std::string> nodes;                  // canonical seed keys, in discovery order
    std::vector<std::vector<std::string>> clusters;  // sorted cluster of each node
    std::vector<ExchangeEdge> edges;
    std::map<std::string, LaurentPoly> variables;
    ExploreStatus status = ExploreStatus::Finite;
    std::size_t cap = 0;
};

struct ExploreOptions {
    std::size_t cap = 10000;
    std::optional<unsigned> shuffle_seed;  // randomizes the order mutations are tried
    std::optional<std::chrono::milliseconds> time_limit;
};

// Seeds are equal when they agree up to relabeling: cluster entries are sorted
// by their text form and the matrix or triangulation is relabeled to match.
std::string seed_key(const Seed& s);
std::string seed_key(const OrbifoldSeed& s);

ExchangeGraph enumerate(const Seed& initial, const ExploreOptions& opt = {});
ExchangeGraph enumerate(const OrbifoldSeed& initial, const ExploreOptions& opt = {});

std::vector<std::string> variable_census(const ExchangeGraph& g);
// Census of the variables pushed through an orbit map.
std::vector<std::string> specialized_census(const ExchangeGraph& g, const OrbitMap& f);

// "dot" or "json"; throws UnknownFormat otherwise.
std::string export_graph(const ExchangeGraph& g, const std::string& format);

}  // namespace gcl
