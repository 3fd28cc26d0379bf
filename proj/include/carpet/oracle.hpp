// Ground-truth engine: the level-n graph built explicitly from the recursive
// gluing, exact distances by breadth-first search, and the all-pairs Wiener
// sum.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "carpet/words.hpp"

namespace carpet {

using uint128 = unsigned __int128;

std::string to_string(uint128 v);

// Undirected unit-distance graph in CSR form. Vertex ids follow (x, y)
// lattice order, so every derived artifact (exports, reports) is byte-stable.
struct AdjacencyGraph {
    int level = 0;
    std::vector<LatticePoint> points;        // id -> embedded point
    std::vector<std::uint32_t> offsets;      // CSR row starts, size count()+1
    std::vector<std::uint32_t> neighbors_;   // flattened sorted adjacency
    std::unordered_map<std::uint64_t, std::uint32_t> point_index;

    std::size_t vertex_count() const { return points.size(); }
    std::size_t edge_count() const { return neighbors_.size() / 2; }
    std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
        return {neighbors_.data() + offsets[v], neighbors_.data() + offsets[v + 1]};
    }
    std::optional<std::uint32_t> find(LatticePoint p) const {
        auto it = point_index.find(pack_point(p));
        if (it == point_index.end()) return std::nullopt;
        return it->second;
    }
};

// For each of the 8^(n-1) copy-index sequences, embeds the four corner words
// and adds the four unit-square edges; gluing happens by itself because
// shared boundary points coincide. Throws CapError beyond the cap.
AdjacencyGraph build_graph(int level, int level_cap = kDefaultOracleCap);

// Exact hop distances from source to every vertex. The graph is connected,
// so every entry is finite; diameters stay below 2*3^(n-1) < 2^16 for every
// buildable level.
std::vector<std::uint16_t> bfs_from(const AdjacencyGraph& g, std::uint32_t source);

// Buffer-reusing variant for distance sweeps. dist and queue are resized as
// needed.
void bfs_from(const AdjacencyGraph& g, std::uint32_t source, std::vector<std::uint16_t>& dist,
              std::vector<std::uint32_t>& queue);

// Half the sum of all-pairs BFS distances. Sources are swept in parallel
// over contiguous ranges; partial sums are combined in range order, so the
// result is bit-identical for every worker count.
uint128 oracle_wiener(const AdjacencyGraph& g, int workers = 1);

}  // namespace carpet
