// Subcommands of the gcl tool.  Each returns the process exit code:
// 0 success, 1 validation failure, 2 unsupported configuration,
// 3 internal invariant violation.
#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace httplib {
class Server;
}

namespace gcl::cli {

class Protocol;

int cmd_validate(const std::string& path, bool as_json, std::ostream& out);
int cmd_mutate(const std::string& path, const std::vector<int>& sequence, bool as_json, std::ostream& out);
int cmd_quotient(const std::string& path, const std::string& output, std::ostream& out);

struct EnumerateOptions {
    std::size_t cap = 10000;
    std::optional<long> time_limit_ms;
    std::optional<unsigned> shuffle_seed;
    std::string census;  // file for the variable census, if any
    std::string graph;   // file for the exchange graph, if any
    std::string format = "dot";
    bool specialize = false;  // also print the census through the quotient map
};
int cmd_enumerate(const std::string& path, const EnumerateOptions& opt, std::ostream& out);

// Routes the protocol onto an HTTP server without starting it.
void mount(httplib::Server& server, Protocol& protocol);
int cmd_serve(const std::string& path, const std::string& host, int port, std::ostream& out);

// Runs a command body, turning library errors into messages and exit codes.
int guarded(std::ostream& err, const std::function<int()>& body);

}  // namespace gcl::cli
