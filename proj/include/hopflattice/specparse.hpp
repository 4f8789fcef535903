#pragma once

#include <string>
#include <vector>

#include "hopflattice/hopf.hpp"
#include "hopflattice/surface.hpp"

namespace hopflattice {

/// Built-in names Z2, Z3 (any Z<k>), S3, or a Cayley-table file: first line
/// the order n, then n rows of n 0-based indices, identity = 0.
CayleyTable parse_group(const std::string& name_or_file);

/// group:<g>, function:<g>, dual:<spec>, double:<spec>, raw:<json file>;
/// dual: and double: compose over any inner spec.
HopfAlgebra parse_algebra(const std::string& spec);

/// A standard surface name, or file:<path> with JSON
/// {edge_pair, vertex_rot, positive_dart}.
CellDecomposition parse_surface(const std::string& spec);

/// Comma-separated anchor darts, one site per dart.
std::vector<Site> parse_sites(const std::string& spec, const CellDecomposition& c);

/// Comma-separated block indices; "all" yields an empty list (meaning: every
/// tuple).
std::vector<int> parse_labels(const std::string& spec);

}  // namespace hopflattice
