#include "carpet/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <thread>

namespace carpet {

std::string to_string(uint128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

AdjacencyGraph build_graph(int level, int level_cap) {
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    if (level > level_cap || level > kMaxOracleLevel) {
        throw CapError("oracle graph for level " + std::to_string(level) + " exceeds the cap (" +
                       std::to_string(std::min(level_cap, kMaxOracleLevel)) +
                       "); raise the cap to proceed");
    }
    const int digits = level - 1;
    const std::uint64_t suffixes = 1ull << (3 * digits);

    std::vector<std::uint64_t> packed_edges;
    packed_edges.reserve(4 * suffixes);
    std::vector<std::uint64_t> packed_points;
    packed_points.reserve(4 * suffixes);

    std::unordered_map<std::uint64_t, std::uint32_t> ids;
    ids.reserve(suffixes * 2);
    std::vector<LatticePoint> points;

    auto intern = [&](LatticePoint p) -> std::uint32_t {
        auto [it, inserted] = ids.try_emplace(pack_point(p), static_cast<std::uint32_t>(points.size()));
        if (inserted) points.push_back(p);
        return it->second;
    };

    for (std::uint64_t s = 0; s < suffixes; ++s) {
        LatticePoint base{0, 0};
        std::int64_t scale = 1;
        for (int d = digits - 1; d >= 0; --d) {
            const XLetter x = static_cast<XLetter>((s >> (3 * d)) & 7);
            base.x += scale * kXVector[x].x;
            base.y += scale * kXVector[x].y;
            scale *= 3;
        }
        const std::uint32_t a = intern(base);
        const std::uint32_t b = intern({base.x + 1, base.y});
        const std::uint32_t c = intern({base.x + 1, base.y + 1});
        const std::uint32_t d = intern({base.x, base.y + 1});
        for (auto [u, v] : {std::pair{a, b}, {b, c}, {c, d}, {d, a}}) {
            if (u > v) std::swap(u, v);
            packed_edges.push_back((static_cast<std::uint64_t>(u) << 32) | v);
        }
    }
    std::sort(packed_edges.begin(), packed_edges.end());
    packed_edges.erase(std::unique(packed_edges.begin(), packed_edges.end()), packed_edges.end());

    // renumber ids into (x, y) lattice order
    std::vector<std::uint32_t> order(points.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t i, std::uint32_t j) {
        return points[i] < points[j];
    });
    std::vector<std::uint32_t> to_sorted(points.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) to_sorted[order[r]] = r;

    AdjacencyGraph g;
    g.level = level;
    g.points.resize(points.size());
    for (std::uint32_t i = 0; i < points.size(); ++i) g.points[to_sorted[i]] = points[i];
    g.point_index.reserve(points.size() * 2);
    for (std::uint32_t i = 0; i < g.points.size(); ++i) {
        g.point_index.emplace(pack_point(g.points[i]), i);
    }

    std::vector<std::uint32_t> degree(points.size(), 0);
    for (std::uint64_t e : packed_edges) {
        ++degree[to_sorted[static_cast<std::uint32_t>(e >> 32)]];
        ++degree[to_sorted[static_cast<std::uint32_t>(e & 0xffffffffu)]];
    }
    g.offsets.assign(points.size() + 1, 0);
    for (std::size_t i = 0; i < points.size(); ++i) g.offsets[i + 1] = g.offsets[i] + degree[i];
    g.neighbors_.resize(packed_edges.size() * 2);
    std::vector<std::uint32_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (std::uint64_t e : packed_edges) {
        const std::uint32_t u = to_sorted[static_cast<std::uint32_t>(e >> 32)];
        const std::uint32_t v = to_sorted[static_cast<std::uint32_t>(e & 0xffffffffu)];
        g.neighbors_[cursor[u]++] = v;
        g.neighbors_[cursor[v]++] = u;
    }
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        auto row = g.neighbors_.begin();
        std::sort(row + g.offsets[v], row + g.offsets[v + 1]);
    }
    return g;
}

void bfs_from(const AdjacencyGraph& g, std::uint32_t source, std::vector<std::uint16_t>& dist,
              std::vector<std::uint32_t>& queue) {
    constexpr std::uint16_t kUnseen = 0xffff;
    dist.assign(g.vertex_count(), kUnseen);
    queue.clear();
    queue.reserve(g.vertex_count());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t u = queue[head];
        const std::uint16_t du = dist[u];
        for (std::uint32_t v : g.neighbors(u)) {
            if (dist[v] == kUnseen) {
                dist[v] = static_cast<std::uint16_t>(du + 1);
                queue.push_back(v);
            }
        }
    }
    assert(queue.size() == g.vertex_count());
}

std::vector<std::uint16_t> bfs_from(const AdjacencyGraph& g, std::uint32_t source) {
    std::vector<std::uint16_t> dist;
    std::vector<std::uint32_t> queue;
    bfs_from(g, source, dist, queue);
    return dist;
}

uint128 oracle_wiener(const AdjacencyGraph& g, int workers) {
    const std::uint32_t n = static_cast<std::uint32_t>(g.vertex_count());
    workers = std::max(1, workers);
    const int parts = std::min<int>(workers, std::max<std::uint32_t>(n, 1));

    std::vector<uint128> partial(parts, 0);
    auto sweep = [&](int part) {
        const std::uint32_t lo = static_cast<std::uint32_t>(std::uint64_t(n) * part / parts);
        const std::uint32_t hi = static_cast<std::uint32_t>(std::uint64_t(n) * (part + 1) / parts);
        std::vector<std::uint16_t> dist;
        std::vector<std::uint32_t> queue;
        uint128 acc = 0;
        for (std::uint32_t s = lo; s < hi; ++s) {
            bfs_from(g, s, dist, queue);
            std::uint64_t row = 0;
            for (std::uint16_t d : dist) row += d;
            acc += row;
        }
        partial[part] = acc;
    };
    if (parts == 1) {
        sweep(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(parts);
        for (int p = 0; p < parts; ++p) pool.emplace_back(sweep, p);
        for (auto& t : pool) t.join();
    }
    uint128 total = 0;
    for (uint128 p : partial) total += p;  // ordered reduction
    assert(total % 2 == 0);
    return total / 2;
}

}  // namespace carpet
