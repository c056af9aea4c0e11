#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace gcl::cli;
    CLI::App app{"Cluster algebras of surfaces and orbifolds"};
    app.require_subcommand(1);

    std::string path;
    bool as_json = false;

    auto* validate = app.add_subcommand("validate", "check a workspace file");
    validate->add_option("file", path, "workspace file")->required();
    validate->add_flag("--json", as_json, "machine-readable diagnostics");

    std::vector<int> sequence;
    auto* mutate = app.add_subcommand("mutate", "apply a mutation sequence");
    mutate->add_option("file", path, "workspace file")->required();
    mutate->add_option("sequence", sequence, "arc indices, in order");
    mutate->add_flag("--json", as_json, "JSON output");

    std::string output;
    auto* quotient = app.add_subcommand("quotient", "orbifold cut out by the group action");
    quotient->add_option("file", path, "workspace file with an action")->required();
    quotient->add_option("-o,--output", output, "write the orbifold triangulation here");

    EnumerateOptions eopt;
    long time_limit = 0;
    unsigned shuffle = 0;
    auto* enumerate = app.add_subcommand("enumerate", "exchange graph and variable census");
    enumerate->add_option("file", path, "workspace file")->required();
    enumerate->add_option("--cap", eopt.cap, "stop after this many seeds")->capture_default_str();
    enumerate->add_option("--time-limit", time_limit, "stop after this many milliseconds");
    enumerate->add_option("--shuffle", shuffle, "randomize mutation order with this seed");
    enumerate->add_option("--census", eopt.census, "write the census to this file");
    enumerate->add_option("--graph", eopt.graph, "write the exchange graph to this file");
    enumerate->add_option("--format", eopt.format, "graph format")->check(CLI::IsMember({"dot", "json"}));
    enumerate->add_flag("--specialize", eopt.specialize, "census pushed to the quotient");

    std::string host = "127.0.0.1";
    int port = 8080;
    auto* serve = app.add_subcommand("serve", "HTTP JSON session server");
    serve->add_option("file", path, "workspace file")->required();
    serve->add_option("--port", port, "port")->capture_default_str();
    serve->add_option("--host", host, "address to bind")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    if (validate->parsed()) return cmd_validate(path, as_json, std::cout);
    return guarded(std::cerr, [&] {
        if (mutate->parsed()) return cmd_mutate(path, sequence, as_json, std::cout);
        if (quotient->parsed()) return cmd_quotient(path, output, std::cout);
        if (enumerate->parsed()) {
            if (enumerate->count("--time-limit")) eopt.time_limit_ms = time_limit;
            if (enumerate->count("--shuffle")) eopt.shuffle_seed = shuffle;
            return cmd_enumerate(path, eopt, std::cout);
        }
        return cmd_serve(path, host, port, std::cout);
    });
}
