// Byte-stable text exports of a built graph: edge list, DOT, coordinate CSV.
// Node labels are the canonical words, looked up in a vertex table of the
// same level.
#pragma once

#include <ostream>

#include "carpet/oracle.hpp"
#include "carpet/words.hpp"

namespace carpet {

void write_edge_list(std::ostream& out, const AdjacencyGraph& g, const VertexTable& table);
void write_dot(std::ostream& out, const AdjacencyGraph& g, const VertexTable& table);
void write_csv(std::ostream& out, const AdjacencyGraph& g, const VertexTable& table);

}  // namespace carpet
