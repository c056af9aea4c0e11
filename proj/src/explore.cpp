#include "gcl/explore.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "gcl/errors.hpp"

namespace gcl {

std::string to_string(ExploreStatus s) {
    switch (s) {
        case ExploreStatus::Finite: return "Finite";
        case ExploreStatus::CapReached: return "CapReached";
        case ExploreStatus::TimeLimit: return "TimeLimit";
    }
    return "?";
}

namespace {

constexpr std::size_t kTieLimit = 5040;

// Least rendering over all orders that sort the entries, permuting within ties.
template <class Render>
std::string least_key(const std::vector<std::string>& entries, Render render) {
    std::vector<int> order(entries.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return entries[a] < entries[b]; });
    std::vector<std::pair<std::size_t, std::size_t>> ties;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && entries[order[j]] == entries[order[i]]) ++j;
        if (j - i > 1) ties.emplace_back(i, j);
        i = j;
    }
    std::string body = render(order);
    if (ties.empty()) return body;
    for (auto& [b, e] : ties) std::sort(order.begin() + b, order.begin() + e);
    std::string best = render(order);
    for (std::size_t n = 0; n < kTieLimit; ++n) {
        // Odometer over the tie groups.
        std::size_t g = 0;
        for (; g < ties.size(); ++g)
            if (std::next_permutation(order.begin() + ties[g].first, order.begin() + ties[g].second)) break;
        if (g == ties.size()) break;
        best = std::min(best, render(order));
    }
    return best;
}

std::vector<std::string> texts(const Cluster& x) {
    std::vector<std::string> out;
    for (const auto& v : x) out.push_back(v.str());
    return out;
}

std::string key_of(const Seed& s, const std::vector<std::string>& xs) {
    return least_key(xs, [&](const std::vector<int>& order) {
        std::string k;
        for (int i : order) k += xs[i] + "\n";
        k += s.B.permuted(order).str();
        return k;
    });
}

std::string key_of(const OrbifoldSeed& s, const std::vector<std::string>& xs) {
    return least_key(xs, [&](const std::vector<int>& order) {
        std::vector<int> rename(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) rename[order[i]] = static_cast<int>(i);
        std::string k;
        for (int i : order) k += xs[i] + "\n";
        k += canonical_form(s.triangulation, rename);
        return k;
    });
}

Seed step(const Seed& s, int k) { return mutate_seed(s, k); }
OrbifoldSeed step(const OrbifoldSeed& s, int k) { return mutate_orbifold_seed(s, k); }

template <class S>
ExchangeGraph bfs(const S& initial, const ExploreOptions& opt) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    ExchangeGraph g;
    g.cap = opt.cap;
    std::unordered_map<std::string, int> index;
    std::deque<std::pair<S, int>> frontier;
    std::mt19937 rng(opt.shuffle_seed.value_or(0));

    auto visit = [&](const S& s) -> std::pair<int, bool> {
        auto xs = texts(s.cluster);
        std::string key = key_of(s, xs);
        auto it = index.find(key);
        if (it != index.end()) return {it->second, false};
        if (g.nodes.size() >= opt.cap) return {-1, false};
        const int id = static_cast<int>(g.nodes.size());
        index.emplace(key, id);
        g.nodes.push_back(key);
        for (std::size_t i = 0; i < xs.size(); ++i) g.variables.emplace(xs[i], s.cluster[i]);
        std::sort(xs.begin(), xs.end());
        g.clusters.push_back(std::move(xs));
        return {id, true};
    };

    frontier.emplace_back(initial, visit(initial).first);
    while (!frontier.empty()) {
        if (opt.time_limit && clock::now() - start > *opt.time_limit) {
            g.status = ExploreStatus::TimeLimit;
            return g;
        }
        auto [s, id] = std::move(frontier.front());
        frontier.pop_front();
        std::vector<int> ks(static_cast<std::size_t>(s.size()));
        std::iota(ks.begin(), ks.end(), 0);
        if (opt.shuffle_seed) std::shuffle(ks.begin(), ks.end(), rng);
        for (int k : ks) {
            S n = step(s, k);
            auto [to, fresh] = visit(n);
            if (to < 0) {
                g.status = ExploreStatus::CapReached;
                return g;
            }
            g.edges.push_back({id, k, to});
            if (fresh) frontier.emplace_back(std::move(n), to);
        }
    }
    return g;
}

}  // namespace

std::string seed_key(const Seed& s) { return key_of(s, texts(s.cluster)); }
std::string seed_key(const OrbifoldSeed& s) { return key_of(s, texts(s.cluster)); }

ExchangeGraph enumerate(const Seed& initial, const ExploreOptions& opt) { return bfs(initial, opt); }
ExchangeGraph enumerate(const OrbifoldSeed& initial, const ExploreOptions& opt) { return bfs(initial, opt); }

std::vector<std::string> variable_census(const ExchangeGraph& g) {
    std::vector<std::string> out;
    for (const auto& [k, v] : g.variables) out.push_back(k);
    return out;
}

std::vector<std::string> specialized_census(const ExchangeGraph& g, const OrbitMap& f) {
    std::set<std::string> out;
    for (const auto& [k, v] : g.variables) out.insert(specialize(v, f).str());
    return {out.begin(), out.end()};
}

std::string export_graph(const ExchangeGraph& g, const std::string& format) {
    std::set<std::pair<int, int>> undirected;
    for (const auto& e : g.edges) undirected.emplace(std::min(e.from, e.to), std::max(e.from, e.to));
    if (format == "dot") {
        std::ostringstream os;
        os << "graph exchange {\n";
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            std::string label;
            for (const auto& x : g.clusters[i]) label += (label.empty() ? "" : "\\n") + x;
            os << "  n" << i << " [label=\"" << label << "\"];\n";
        }
        for (auto [a, b] : undirected) os << "  n" << a << " -- n" << b << ";\n";
        os << "}\n";
        return os.str();
    }
    if (format == "json") {
        nlohmann::json j;
        j["status"] = to_string(g.status);
        j["nodes"] = nlohmann::json::array();
        for (std::size_t i = 0; i < g.nodes.size(); ++i) j["nodes"].push_back({{"id", i}, {"cluster", g.clusters[i]}});
        j["edges"] = nlohmann::json::array();
        for (auto [a, b] : undirected) j["edges"].push_back({a, b});
        j["variables"] = variable_census(g);
        return j.dump(2) + "\n";
    }
    throw validation_error("UnknownFormat", "graph format \"" + format + "\"; use dot or json");
}

}  // namespace gcl
