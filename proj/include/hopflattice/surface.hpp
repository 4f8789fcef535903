#pragma once

#include <string>
#include <vector>

#include "hopflattice/types.hpp"

namespace hopflattice {

/// A closed oriented surface with a cell decomposition, encoded as a
/// combinatorial map.  Edge e owns darts 2e and 2e+1; vertex_rot is the
/// counterclockwise rotation at each vertex; faces are the orbits of the
/// derived permutation face_next (counterclockwise boundary walk, face on
/// the left of each dart).
struct CellDecomposition {
  int darts = 0;
  std::vector<int> edge_pair;      // fixed-point-free involution
  std::vector<int> vertex_rot;     // sigma
  std::vector<int> positive_dart;  // one dart per edge (reference orientation)

  // Derived.
  std::vector<int> face_perm;   // face_next = sigma^{-1} after crossing the edge
  std::vector<int> dart_vertex;
  std::vector<int> dart_face;
  std::vector<std::vector<int>> vertices;  // sigma-cycles
  std::vector<std::vector<int>> faces;     // face_next-cycles
  int genus = 0;

  int num_edges() const { return darts / 2; }
  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }
  int edge_of(int dart) const { return dart / 2; }
  bool is_positive(int dart) const { return positive_dart[static_cast<size_t>(edge_of(dart))] == dart; }
};

/// Builds the derived data and validates the map (involution, connectivity,
/// non-negative integer genus).
CellDecomposition make_cells(std::vector<int> edge_pair, std::vector<int> vertex_rot,
                             std::vector<int> positive_dart);

/// A face list uses entries +(e+1) / -(e+1) for edge e traversed along /
/// against its reference orientation; each face is a counterclockwise
/// boundary cycle and every edge appears exactly twice with opposite signs.
CellDecomposition cells_from_faces(int num_edges, const std::vector<std::vector<int>>& face_lists);

/// sphere:tetrahedron, sphere:cube, sphere:bigon, torus:square-1v,
/// torus:grid-NxM, genus2:octagon-1v.
CellDecomposition build_standard(const std::string& name);

CellDecomposition dual_decomposition(const CellDecomposition& c);

struct Site {
  int vertex = -1;
  int face = -1;
  int anchor_dart = -1;
};

/// Site anchored at a dart: the dart's vertex and the face on its left.
Site make_site(const CellDecomposition& c, int anchor_dart);

void validate_site(const CellDecomposition& c, const Site& s);

bool vertex_incident_to_face(const CellDecomposition& c, int vertex, int face);

bool disjoint_sites(const CellDecomposition& c, const std::vector<Site>& sites);

}  // namespace hopflattice
