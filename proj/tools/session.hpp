// The JSON protocol behind `gcl serve`.  Every payload carries "protocol": 1.
//   GET  /state     current seed, flippable arcs, exchange polynomial previews
//   POST /mutate    {"arc": k}
//   POST /orbit-mutate {"orbit": k}   any arc of the orbit; needs an action
//   POST /undo      409 when there is nothing to undo
//   GET  /history
// Sessions are named by the "session" query parameter ("default" if absent).
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "workspace.hpp"

namespace gcl::cli {

inline constexpr int kProtocol = 1;

struct Response {
    int status = 200;
    nlohmann::json body;
};

class Session {
public:
    explicit Session(const Workspace& w);

    nlohmann::json state() const;
    nlohmann::json history() const;
    nlohmann::json mutate(int arc);
    nlohmann::json orbit_mutate(int arc);
    // False when already at the start.
    bool undo();

private:
    struct Step {
        AnySeed seed;
        std::optional<SurfaceGroupAction> action;
        nlohmann::json op;
    };
    std::vector<Step> steps_;
    std::optional<OrbitMap> cover_map_;
};

class Protocol {
public:
    explicit Protocol(Workspace w);

    Response handle(const std::string& method, const std::string& path, const std::string& body,
                    const std::string& session = "default");

private:
    Session& session(const std::string& name);

    Workspace workspace_;
    std::mutex mu_;
    std::map<std::string, std::unique_ptr<Session>> sessions_;
};

}  // namespace gcl::cli
