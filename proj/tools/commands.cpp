#include "commands.hpp"

#include <fstream>
#include <iostream>

#include <httplib.h>

#include "gcl/errors.hpp"
#include "gcl/explore.hpp"
#include "gcl/surface_io.hpp"
#include "session.hpp"
#include "workspace.hpp"

namespace gcl::cli {

using nlohmann::json;

namespace {

int exit_code(ErrorClass c) {
    switch (c) {
        case ErrorClass::Validation: return 1;
        case ErrorClass::Unsupported: return 2;
        case ErrorClass::Invariant: return 3;
    }
    return 3;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw validation_error("IOError", "cannot write " + path);
    f << text;
}

}  // namespace

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.cls());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

int cmd_validate(const std::string& path, bool as_json, std::ostream& out) {
    json report{{"ok", true}, {"violations", json::array()}};
    int code = 0;
    try {
        Workspace w = load_workspace(path);
        if (w.triangulation) {
            ValidationReport r = validate(*w.triangulation);
            for (const auto& v : r.violations) report["violations"].push_back(v);
            if (!r.ok()) code = 1;
        }
        if (w.action && code == 0) {
            SurfaceGroupAction g = validate_action(*w.triangulation, *w.action);
            report["group_order"] = g.order();
        }
        if (w.triangulation) report["rank"] = w.triangulation->size();
    } catch (const Error& e) {
        report["error"] = {{"kind", e.kind()}, {"message", e.what()}};
        code = exit_code(e.cls());
    }
    report["ok"] = code == 0;
    if (as_json) {
        out << report.dump(2) << "\n";
    } else if (code == 0) {
        out << path << ": ok";
        if (report.contains("group_order")) out << ", group of order " << report["group_order"];
        out << "\n";
    } else {
        for (const auto& v : report["violations"]) out << path << ": " << v.get<std::string>() << "\n";
        if (report.contains("error")) out << path << ": " << report["error"]["message"].get<std::string>() << "\n";
    }
    return code;
}

int cmd_mutate(const std::string& path, const std::vector<int>& sequence, bool as_json, std::ostream& out) {
    AnySeed s = initial_seed_of(load_workspace(path));
    json steps = json::array();
    for (int k : sequence) {
        if (k < 0 || k >= seed_size(s))
            throw validation_error("UnknownArc", "index " + std::to_string(k) + " out of range 0.." +
                                                     std::to_string(seed_size(s) - 1));
        ExchangePolynomial p = preview(s, k);
        s = mutate_any(s, k);
        const std::string v = cluster_of(s)[k].str();
        steps.push_back({{"arc", k}, {"case", p.case_tag}, {"polynomial", p.value.str()}, {"variable", v}});
        if (!as_json) out << "mutate " << k << "  case " << p.case_tag << "  p = " << p.value.str() << "\n  x" << k
                          << " = " << v << "\n";
    }
    if (as_json) {
        out << json{{"steps", steps}, {"cluster", cluster_json(cluster_of(s))}}.dump(2) << "\n";
        return 0;
    }
    out << "cluster:\n";
    const Cluster& x = cluster_of(s);
    for (std::size_t i = 0; i < x.size(); ++i) out << "  x" << i << " = " << x[i].str() << "\n";
    return 0;
}

int cmd_quotient(const std::string& path, const std::string& output, std::ostream& out) {
    Workspace w = load_workspace(path);
    if (!w.triangulation || !w.action) throw validation_error("ParseError", "quotient needs a triangulation and an action");
    Quotient q = quotient(*w.triangulation, validate_action(*w.triangulation, *w.action));
    json j = to_json(q.triangulation);
    std::vector<std::size_t> image = q.arcs.image;
    j["orbit_map"] = image;
    const std::string text = j.dump(2) + "\n";
    if (output.empty()) {
        out << text;
    } else {
        write_file(output, text);
        out << q.descriptor.str() << ", " << q.triangulation.size() << " arcs -> " << output << "\n";
    }
    return 0;
}

int cmd_enumerate(const std::string& path, const EnumerateOptions& opt, std::ostream& out) {
    Workspace w = load_workspace(path);
    AnySeed s = initial_seed_of(w);
    ExploreOptions eo;
    eo.cap = opt.cap;
    eo.shuffle_seed = opt.shuffle_seed;
    if (opt.time_limit_ms) eo.time_limit = std::chrono::milliseconds(*opt.time_limit_ms);
    ExchangeGraph g = std::visit([&](const auto& seed) { return enumerate(seed, eo); }, s);
    out << to_string(g.status) << ": " << g.nodes.size() << " seeds, " << g.variables.size() << " variables\n";
    std::string census;
    for (const auto& v : variable_census(g)) census += v + "\n";
    if (!opt.census.empty()) write_file(opt.census, census);
    if (!opt.graph.empty()) write_file(opt.graph, export_graph(g, opt.format));
    if (opt.census.empty()) out << census;
    if (opt.specialize) {
        if (!w.action) throw validation_error("ParseError", "--specialize needs an action in the workspace");
        Quotient q = quotient(*w.triangulation, validate_action(*w.triangulation, *w.action));
        out << "specialized:\n";
        for (const auto& v : specialized_census(g, q.arcs)) out << "  " << v << "\n";
    }
    return 0;
}

void mount(httplib::Server& server, Protocol& protocol) {
    auto route = [&protocol](const std::string& method) {
        return [&protocol, method](const httplib::Request& req, httplib::Response& res) {
            const std::string session = req.has_param("session") ? req.get_param_value("session") : "default";
            Response r = protocol.handle(method, req.path, req.body, session);
            res.status = r.status;
            res.set_header("Access-Control-Allow-Origin", "*");
            res.set_content(r.body.dump(), "application/json");
        };
    };
    server.Get("/state", route("GET"));
    server.Get("/history", route("GET"));
    server.Post("/mutate", route("POST"));
    server.Post("/orbit-mutate", route("POST"));
    server.Post("/undo", route("POST"));
}

int cmd_serve(const std::string& path, const std::string& host, int port, std::ostream& out) {
    Workspace w = load_workspace(path);
    Session probe(w);  // fail early on a bad workspace
    Protocol protocol(std::move(w));
    httplib::Server server;
    mount(server, protocol);
    if (!server.bind_to_port(host, port)) throw validation_error("PortInUse", host + ":" + std::to_string(port));
    out << "serving " << path << " on http://" << host << ":" << port << "\n" << std::flush;
    server.listen_after_bind();
    return 0;
}

}  // namespace gcl::cli
