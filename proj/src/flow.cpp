#include "gid/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "gid/error.hpp"

namespace gid {

std::size_t FlowNetwork::add_arc(int from, int to, std::int64_t capacity)
{
    arcs.push_back(FlowArc{from, to, capacity});
    return arcs.size() - 1;
}

namespace {

void check_network(const FlowNetwork& net)
{
    auto bad = [&](const std::string& why) { throw Error(Errc::InvalidArgument, "flow network: " + why); };
    if (net.vertices < 2 || net.source == net.sink)
        bad("needs distinct source and sink");
    auto in_range = [&](int v) { return v >= 0 && v < net.vertices; };
    if (!in_range(net.source) || !in_range(net.sink))
        bad("terminal out of range");
    for (const FlowArc& a : net.arcs) {
        if (!in_range(a.from) || !in_range(a.to))
            bad("arc endpoint out of range");
        if (a.capacity < 0)
            bad("negative capacity");
        if (a.to == net.source || a.from == net.sink)
            bad("arc into the source or out of the sink");
    }
}

} // namespace

FlowResult max_flow(const FlowNetwork& net)
{
    check_network(net);
    const auto n = static_cast<std::size_t>(net.vertices);
    // Residual edges: 2k is arc k forward, 2k+1 its reverse.
    std::vector<std::vector<std::size_t>> adj(n);
    std::vector<std::int64_t> residual(net.arcs.size() * 2);
    for (std::size_t k = 0; k < net.arcs.size(); ++k) {
        adj[static_cast<std::size_t>(net.arcs[k].from)].push_back(2 * k);
        adj[static_cast<std::size_t>(net.arcs[k].to)].push_back(2 * k + 1);
        residual[2 * k] = net.arcs[k].capacity;
    }
    auto head = [&](std::size_t e) {
        const FlowArc& a = net.arcs[e / 2];
        return static_cast<std::size_t>(e % 2 == 0 ? a.to : a.from);
    };
    const auto s = static_cast<std::size_t>(net.source);
    const auto t = static_cast<std::size_t>(net.sink);
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    FlowResult out;
    std::vector<std::size_t> via(n);
    auto bfs = [&] {
        std::fill(via.begin(), via.end(), kNone);
        std::vector<bool> seen(n, false);
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            for (std::size_t e : adj[v]) {
                std::size_t w = head(e);
                if (residual[e] > 0 && !seen[w]) {
                    seen[w] = true;
                    via[w] = e;
                    q.push(w);
                }
            }
        }
        return seen;
    };

    std::vector<bool> reach;
    while (true) {
        reach = bfs();
        if (!reach[t])
            break;
        std::int64_t push = std::numeric_limits<std::int64_t>::max();
        for (std::size_t v = t; v != s; v = head(via[v] ^ 1U))
            push = std::min(push, residual[via[v]]);
        for (std::size_t v = t; v != s; v = head(via[v] ^ 1U)) {
            residual[via[v]] -= push;
            residual[via[v] ^ 1U] += push;
        }
        out.value += push;
    }

    out.flow.resize(net.arcs.size());
    for (std::size_t k = 0; k < net.arcs.size(); ++k) {
        out.flow[k] = residual[2 * k + 1];
        const FlowArc& a = net.arcs[k];
        if (reach[static_cast<std::size_t>(a.from)] && !reach[static_cast<std::size_t>(a.to)])
            out.min_cut.push_back(k);
    }
    return out;
}

} // namespace gid
