#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gid {

struct FlowArc {
    int from = 0;
    int to = 0;
    std::int64_t capacity = 0;
};

struct FlowNetwork {
    int vertices = 2;
    int source = 0;
    int sink = 1;
    std::vector<FlowArc> arcs;

    int add_vertex() { return vertices++; }
    std::size_t add_arc(int from, int to, std::int64_t capacity);
};

struct FlowResult {
    std::int64_t value = 0;
    std::vector<std::int64_t> flow;    // per arc
    std::vector<std::size_t> min_cut;  // arcs from the source side to the sink side, ascending
};

// Shortest augmenting paths with a fixed arc order. Throws InvalidArgument for
// malformed networks.
FlowResult max_flow(const FlowNetwork& network);

} // namespace gid
