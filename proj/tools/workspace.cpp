#include "workspace.hpp"

#include <fstream>

#include "gcl/errors.hpp"
#include "gcl/surface_io.hpp"

namespace gcl::cli {

using nlohmann::json;

namespace {

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("ParseError", "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw validation_error("ParseError", path.string() + ": " + e.what());
    }
}

}  // namespace

Workspace workspace_from_json(const json& j, const std::filesystem::path& base) {
    Workspace w;
    try {
        if (j.contains("triangulation") && j.at("triangulation").is_string()) {
            w.triangulation = triangulation_from_json(read_json(base / j.at("triangulation").get<std::string>()));
        } else if (j.contains("triangulation")) {
            w.triangulation = triangulation_from_json(j.at("triangulation"));
        } else if (j.contains("triangles")) {
            w.triangulation = triangulation_from_json(j);
        }
        if (j.contains("exchange_matrix"))
            w.matrix = ExchangeMatrix(j.at("exchange_matrix").get<std::vector<std::vector<int>>>());
        if (j.contains("action")) w.action = action_from_json(j.at("action"));
    } catch (const json::exception& e) {
        throw validation_error("ParseError", e.what());
    }
    if (!w.triangulation && !w.matrix)
        throw validation_error("ParseError", "workspace needs a triangulation or an exchange_matrix");
    if (j.contains("cluster")) {
        const std::size_t n = static_cast<std::size_t>(w.triangulation ? w.triangulation->size() : w.matrix->size());
        if (!j.at("cluster").is_array() || j.at("cluster").size() != n)
            throw validation_error("ParseError", "cluster: expected " + std::to_string(n) + " entries");
        Cluster x;
        for (const auto& v : j.at("cluster")) x.push_back(LaurentPoly::parse(v.get<std::string>(), n));
        w.cluster = x;
    }
    return w;
}

Workspace load_workspace(const std::filesystem::path& path) {
    return workspace_from_json(read_json(path), path.parent_path());
}

AnySeed initial_seed_of(const Workspace& w) {
    if (w.triangulation) {
        ValidationReport r = validate(*w.triangulation);
        if (!r.ok()) throw validation_error("InvalidTriangulation", r.violations.front());
    }
    AnySeed s;
    if (w.triangulation && !w.triangulation->is_surface()) {
        s = initial_orbifold_seed(*w.triangulation);
    } else if (w.triangulation) {
        s = initial_seed(*w.triangulation);
    } else {
        s = initial_seed(*w.matrix);
    }
    if (w.cluster) std::visit([&](auto& seed) { seed.cluster = *w.cluster; }, s);
    return s;
}

int seed_size(const AnySeed& s) {
    return std::visit([](const auto& seed) { return seed.size(); }, s);
}

const Cluster& cluster_of(const AnySeed& s) {
    return std::visit([](const auto& seed) -> const Cluster& { return seed.cluster; }, s);
}

const Triangulation* triangulation_of(const AnySeed& s) {
    if (auto* o = std::get_if<OrbifoldSeed>(&s)) return &o->triangulation;
    const auto& seed = std::get<Seed>(s);
    return seed.triangulation ? &*seed.triangulation : nullptr;
}

AnySeed mutate_any(const AnySeed& s, int k) {
    if (k < 0 || k >= seed_size(s)) throw validation_error("UnknownArc", "index " + std::to_string(k) + " out of range");
    if (auto* o = std::get_if<OrbifoldSeed>(&s)) return mutate_orbifold_seed(*o, k);
    return mutate_seed(std::get<Seed>(s), k);
}

ExchangePolynomial preview(const AnySeed& s, int k) {
    if (auto* o = std::get_if<OrbifoldSeed>(&s)) return orbifold_exchange_poly(o->triangulation, k, o->cluster);
    const Seed& seed = std::get<Seed>(s);
    ExchangePolynomial p{exchange_binomial(seed.B, k, seed.cluster), "binomial"};
    if (seed.triangulation) p.case_tag = surface_exchange_poly(*seed.triangulation, k, seed.cluster).case_tag;
    return p;
}

json cluster_json(const Cluster& x) {
    json out = json::array();
    for (const auto& v : x) out.push_back(v.str());
    return out;
}

json seed_json(const AnySeed& s) {
    json j;
    j["kind"] = std::holds_alternative<OrbifoldSeed>(s) ? "orbifold" : "surface";
    j["cluster"] = cluster_json(cluster_of(s));
    if (const Triangulation* t = triangulation_of(s)) j["triangulation"] = to_json(*t);
    if (const auto* seed = std::get_if<Seed>(&s)) j["exchange_matrix"] = seed->B.rows();
    return j;
}

}  // namespace gcl::cli
