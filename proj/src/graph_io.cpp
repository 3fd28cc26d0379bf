#include "carpet/graph_io.hpp"

#include <stdexcept>

namespace carpet {
namespace {

std::string label(const AdjacencyGraph& g, const VertexTable& table, std::uint32_t id) {
    const auto tid = table.find(g.points[id]);
    if (!tid) throw std::logic_error("graph vertex missing from vertex table");
    return to_string(table.canonical_word(*tid));
}

}  // namespace

void write_edge_list(std::ostream& out, const AdjacencyGraph& g, const VertexTable& table) {
    out << "# carpet graph level " << g.level << ": " << g.vertex_count() << " vertices, "
        << g.edge_count() << " edges\n";
    out << "# id x y word\n";
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        out << "# " << v << ' ' << g.points[v].x << ' ' << g.points[v].y << ' '
            << label(g, table, v) << '\n';
    }
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
        for (std::uint32_t v : g.neighbors(u)) {
            if (u < v) out << u << ' ' << v << '\n';
        }
    }
}

void write_dot(std::ostream& out, const AdjacencyGraph& g, const VertexTable& table) {
    out << "graph carpet_" << g.level << " {\n";
    out << "  node [shape=point];\n";
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        out << "  v" << v << " [label=\"" << label(g, table, v) << "\", pos=\"" << g.points[v].x
            << ',' << g.points[v].y << "!\"];\n";
    }
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
        for (std::uint32_t v : g.neighbors(u)) {
            if (u < v) out << "  v" << u << " -- v" << v << ";\n";
        }
    }
    out << "}\n";
}

void write_csv(std::ostream& out, const AdjacencyGraph& g, const VertexTable& table) {
    out << "id,x,y,word\n";
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        out << v << ',' << g.points[v].x << ',' << g.points[v].y << ',' << label(g, table, v)
            << '\n';
    }
}

}  // namespace carpet
