// Workspace files: a triangulation (inline, or "triangulation": "<path>"
// relative to the file), or a bare "exchange_matrix", plus an optional group
// "action" and optional "cluster" overrides in canonical polynomial text.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gcl/cluster.hpp"
#include "gcl/orbit.hpp"

namespace gcl::cli {

struct Workspace {
    std::optional<Triangulation> triangulation;
    std::optional<ExchangeMatrix> matrix;
    std::optional<std::vector<ActionGenerator>> action;
    std::optional<Cluster> cluster;
};

Workspace workspace_from_json(const nlohmann::json& j, const std::filesystem::path& base);
Workspace load_workspace(const std::filesystem::path& path);

// Surfaces and bare matrices give ordinary seeds; orbifolds give orbifold seeds.
using AnySeed = std::variant<Seed, OrbifoldSeed>;

AnySeed initial_seed_of(const Workspace& w);
int seed_size(const AnySeed& s);
const Cluster& cluster_of(const AnySeed& s);
const Triangulation* triangulation_of(const AnySeed& s);
AnySeed mutate_any(const AnySeed& s, int k);

// Exchange polynomial used by the next mutation at k, with its case tag.
ExchangePolynomial preview(const AnySeed& s, int k);

nlohmann::json cluster_json(const Cluster& x);
nlohmann::json seed_json(const AnySeed& s);

}  // namespace gcl::cli
