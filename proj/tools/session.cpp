#include "session.hpp"

#include "gcl/errors.hpp"
#include "gcl/surface_io.hpp"

namespace gcl::cli {

using nlohmann::json;

Session::Session(const Workspace& w) {
    Step first{initial_seed_of(w), std::nullopt, json{{"op", "start"}}};
    if (w.action) {
        const Triangulation* t = triangulation_of(first.seed);
        if (!t || !std::holds_alternative<Seed>(first.seed))
            throw unsupported_error("UnsupportedConfiguration", "group actions need a surface triangulation");
        first.action = validate_action(*t, *w.action);
        cover_map_ = quotient(*t, *first.action).arcs;
    }
    steps_.push_back(std::move(first));
}

json Session::state() const {
    const Step& cur = steps_.back();
    json j = seed_json(cur.seed);
    j["protocol"] = kProtocol;
    j["flippable"] = json::array();
    j["previews"] = json::array();
    for (int k = 0; k < seed_size(cur.seed); ++k) {
        json p{{"arc", k}};
        try {
            ExchangePolynomial e = preview(cur.seed, k);
            mutate_any(cur.seed, k);
            p["polynomial"] = e.value.str();
            p["case"] = e.case_tag;
            j["flippable"].push_back(k);
        } catch (const Error& e) {
            p["error"] = e.what();
        }
        j["previews"].push_back(p);
    }
    if (cur.action) {
        OrbitStructure o = orbit_structure(*triangulation_of(cur.seed), *cur.action);
        j["orbits"] = o.arc_orbits;
        json spec = json::array();
        for (const auto& x : cluster_of(cur.seed)) spec.push_back(specialize(x, *cover_map_).str());
        j["specialized"] = spec;
    }
    j["history_length"] = steps_.size() - 1;
    return j;
}

json Session::history() const {
    json h = json::array();
    for (std::size_t i = 1; i < steps_.size(); ++i) h.push_back(steps_[i].op);
    return json{{"protocol", kProtocol}, {"history", h}};
}

json Session::mutate(int arc) {
    const Step& cur = steps_.back();
    Step next{mutate_any(cur.seed, arc), std::nullopt, json{{"op", "mutate"}, {"arc", arc}}};
    if (cur.action) {
        // A single flip usually breaks G-stability; the action comes back
        // once the seed is stable again.
        const Triangulation& t = *triangulation_of(next.seed);
        std::vector<int> all(static_cast<std::size_t>(t.size()));
        for (int i = 0; i < t.size(); ++i) all[i] = i;
        std::vector<ActionGenerator> gens;
        for (const auto& g : cur.action->generators)
            if (auto arcs = induced_arc_perm(t, g.points, g.arcs, all)) gens.push_back({g.points, *arcs});
        if (gens.size() == cur.action->generators.size()) {
            try {
                next.action = validate_action(t, gens);
            } catch (const Error&) {
            }
        }
    }
    steps_.push_back(std::move(next));
    return state();
}

json Session::orbit_mutate(int arc) {
    const Step& cur = steps_.back();
    if (!cur.action)
        throw unsupported_error("UnsupportedConfiguration", "orbit mutation needs a G-stable seed with an action");
    const Seed& s = std::get<Seed>(cur.seed);
    if (arc < 0 || arc >= s.size()) throw validation_error("UnknownArc", "index " + std::to_string(arc) + " out of range");
    CoveringReport rep = covering_consistency(s, *cur.action, arc, cover_map_);
    OrbitMutation m = orbit_mutate_surface(s, *cur.action, arc);
    json op{{"op", "orbit-mutate"}, {"orbit", arc}, {"case", m.case_name}, {"sequence", m.sequence}};
    steps_.push_back(Step{m.seed, m.action, op});
    json j = state();
    j["covering"] = {{"ok", rep.ok()},
                     {"product", rep.product.str()},
                     {"expected", rep.expected.str()},
                     {"case", rep.case_tag},
                     {"equal_images", rep.equal_images},
                     {"polynomial", rep.polynomial}};
    return j;
}

bool Session::undo() {
    if (steps_.size() == 1) return false;
    steps_.pop_back();
    return true;
}

Protocol::Protocol(Workspace w) : workspace_(std::move(w)) {}

Session& Protocol::session(const std::string& name) {
    auto it = sessions_.find(name);
    if (it == sessions_.end()) it = sessions_.emplace(name, std::make_unique<Session>(workspace_)).first;
    return *it->second;
}

namespace {

Response error(int status, const std::string& kind, const std::string& message) {
    return {status, json{{"protocol", kProtocol}, {"error", {{"kind", kind}, {"message", message}}}}};
}

int arg(const json& body, const char* key) {
    if (!body.contains(key) || !body.at(key).is_number_integer())
        throw validation_error("BadRequest", std::string("expected an integer \"") + key + "\"");
    return body.at(key).get<int>();
}

}  // namespace

Response Protocol::handle(const std::string& method, const std::string& path, const std::string& body,
                          const std::string& name) {
    std::lock_guard<std::mutex> lock(mu_);
    try {
        json req = json::object();
        if (method == "POST" && !body.empty()) {
            req = json::parse(body, nullptr, false);
            if (req.is_discarded() || !req.is_object()) return error(400, "BadRequest", "body is not a JSON object");
            if (req.contains("protocol") && req.at("protocol") != kProtocol)
                return error(400, "ProtocolMismatch", "server speaks protocol 1");
        }
        Session& s = session(name);
        if (method == "GET" && path == "/state") return {200, s.state()};
        if (method == "GET" && path == "/history") return {200, s.history()};
        if (method == "POST" && path == "/mutate") return {200, s.mutate(arg(req, "arc"))};
        if (method == "POST" && path == "/orbit-mutate") return {200, s.orbit_mutate(arg(req, "orbit"))};
        if (method == "POST" && path == "/undo") {
            if (!s.undo()) return error(409, "NothingToUndo", "already at the initial seed");
            return {200, s.state()};
        }
        return error(404, "NotFound", method + " " + path);
    } catch (const Error& e) {
        switch (e.cls()) {
            case ErrorClass::Validation: return error(400, e.kind(), e.what());
            case ErrorClass::Unsupported: return error(422, e.kind(), e.what());
            case ErrorClass::Invariant: return error(500, e.kind(), e.what());
        }
        return error(500, e.kind(), e.what());
    }
}

}  // namespace gcl::cli
