#include "hopflattice/surface.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>

namespace hopflattice {

namespace {

std::vector<std::vector<int>> orbits(const std::vector<int>& perm, std::vector<int>& index_of) {
  const int n = static_cast<int>(perm.size());
  index_of.assign(static_cast<size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (index_of[static_cast<size_t>(start)] != -1) continue;
    std::vector<int> cyc;
    int d = start;
    do {
      index_of[static_cast<size_t>(d)] = static_cast<int>(out.size());
      cyc.push_back(d);
      d = perm[static_cast<size_t>(d)];
    } while (d != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

bool is_permutation(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = 1;
  }
  return true;
}

}  // namespace

CellDecomposition make_cells(std::vector<int> edge_pair, std::vector<int> vertex_rot,
                             std::vector<int> positive_dart) {
  CellDecomposition c;
  c.darts = static_cast<int>(edge_pair.size());
  require(c.darts > 0 && c.darts % 2 == 0, errc::invalid_argument, "dart count must be even");
  require(vertex_rot.size() == edge_pair.size(), errc::invalid_argument,
          "vertex_rot size mismatch");
  require(is_permutation(edge_pair) && is_permutation(vertex_rot), errc::invalid_argument,
          "edge_pair and vertex_rot must be permutations of the darts");
  for (int d = 0; d < c.darts; ++d) {
    require(edge_pair[static_cast<size_t>(d)] != d, errc::invalid_argument,
            "edge_pair has a fixed point");
    require(edge_pair[static_cast<size_t>(edge_pair[static_cast<size_t>(d)])] == d,
            errc::invalid_argument, "edge_pair is not an involution");
  }
  const int E = c.darts / 2;
  require(static_cast<int>(positive_dart.size()) == E, errc::invalid_argument,
          "positive_dart needs one entry per edge");
  for (int e = 0; e < E; ++e) {
    int d = positive_dart[static_cast<size_t>(e)];
    require(d >= 0 && d < c.darts && d / 2 == e, errc::invalid_argument,
            "positive_dart entry outside its edge");
  }
  for (int d = 0; d < c.darts; ++d)
    require(edge_pair[static_cast<size_t>(d)] == (d ^ 1), errc::invalid_argument,
            "darts 2e, 2e+1 must pair within edge e");

  c.edge_pair = std::move(edge_pair);
  c.vertex_rot = std::move(vertex_rot);
  c.positive_dart = std::move(positive_dart);

  // Counterclockwise boundary walk: cross the edge, then rotate clockwise once.
  std::vector<int> sigma_inv(static_cast<size_t>(c.darts));
  for (int d = 0; d < c.darts; ++d) sigma_inv[static_cast<size_t>(c.vertex_rot[static_cast<size_t>(d)])] = d;
  c.face_perm.resize(static_cast<size_t>(c.darts));
  for (int d = 0; d < c.darts; ++d)
    c.face_perm[static_cast<size_t>(d)] = sigma_inv[static_cast<size_t>(c.edge_pair[static_cast<size_t>(d)])];

  c.vertices = orbits(c.vertex_rot, c.dart_vertex);
  c.faces = orbits(c.face_perm, c.dart_face);

  // Connectivity over the dart adjacency generated by both permutations.
  {
    std::vector<char> seen(static_cast<size_t>(c.darts), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      for (int nd : {c.edge_pair[static_cast<size_t>(d)], c.vertex_rot[static_cast<size_t>(d)]}) {
        if (!seen[static_cast<size_t>(nd)]) {
          seen[static_cast<size_t>(nd)] = 1;
          stack.push_back(nd);
        }
      }
    }
    require(std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; }),
            errc::invalid_argument, "cell decomposition is not connected");
  }

  const int chi = c.num_vertices() - c.num_edges() + c.num_faces();
  require(chi <= 2 && chi % 2 == 0, errc::invalid_argument,
          "Euler characteristic " + std::to_string(chi) + " is not 2-2g");
  c.genus = (2 - chi) / 2;
  return c;
}

CellDecomposition cells_from_faces(int num_edges, const std::vector<std::vector<int>>& face_lists) {
  const int darts = 2 * num_edges;
  std::vector<int> face_next(static_cast<size_t>(darts), -1);
  std::vector<char> used(static_cast<size_t>(darts), 0);
  for (const auto& face : face_lists) {
    require(!face.empty(), errc::invalid_argument, "empty face cycle");
    std::vector<int> cyc;
    for (int signed_edge : face) {
      require(signed_edge != 0 && std::abs(signed_edge) <= num_edges, errc::invalid_argument,
              "face entry out of range");
      const int e = std::abs(signed_edge) - 1;
      const int d = 2 * e + (signed_edge > 0 ? 0 : 1);
      require(!used[static_cast<size_t>(d)], errc::invalid_argument,
              "dart used twice across face cycles");
      used[static_cast<size_t>(d)] = 1;
      cyc.push_back(d);
    }
    for (size_t i = 0; i < cyc.size(); ++i)
      face_next[static_cast<size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
  }
  require(std::all_of(used.begin(), used.end(), [](char u) { return u != 0; }),
          errc::invalid_argument, "every edge must appear once in each direction");

  // face_next = sigma^{-1} o iota  =>  sigma = iota o face_next^{-1}.
  std::vector<int> face_prev(static_cast<size_t>(darts));
  for (int d = 0; d < darts; ++d) face_prev[static_cast<size_t>(face_next[static_cast<size_t>(d)])] = d;
  std::vector<int> edge_pair(static_cast<size_t>(darts)), sigma(static_cast<size_t>(darts));
  for (int d = 0; d < darts; ++d) edge_pair[static_cast<size_t>(d)] = d ^ 1;
  for (int d = 0; d < darts; ++d)
    sigma[static_cast<size_t>(d)] = edge_pair[static_cast<size_t>(face_prev[static_cast<size_t>(d)])];

  std::vector<int> positive(static_cast<size_t>(num_edges));
  for (int e = 0; e < num_edges; ++e) positive[static_cast<size_t>(e)] = 2 * e;
  return make_cells(std::move(edge_pair), std::move(sigma), std::move(positive));
}

CellDecomposition build_standard(const std::string& name) {
  if (name == "sphere:tetrahedron") {
    // vertices 0..3, edges: 1=(0,1) 2=(0,2) 3=(0,3) 4=(1,2) 5=(1,3) 6=(2,3)
    return cells_from_faces(6, {{1, 4, -2}, {2, 6, -3}, {3, -5, -1}, {5, -6, -4}});
  }
  if (name == "sphere:cube") {
    // bottom ring 1..4, top ring 5..8, verticals 9..12
    return cells_from_faces(12, {
        {-4, -3, -2, -1},          // bottom
        {5, 6, 7, 8},              // top
        {1, 10, -5, -9},           // sides
        {2, 11, -6, -10},
        {3, 12, -7, -11},
        {4, 9, -8, -12},
    });
  }
  if (name == "sphere:bigon") {
    return cells_from_faces(2, {{1, -2}, {2, -1}});
  }
  if (name == "torus:square-1v") {
    return cells_from_faces(2, {{1, 2, -1, -2}});
  }
  if (name == "genus2:octagon-1v") {
    return cells_from_faces(4, {{1, 2, -1, -2, 3, 4, -3, -4}});
  }
  int rows = 0, cols = 0;
  if (std::sscanf(name.c_str(), "torus:grid-%dx%d", &rows, &cols) == 2) {
    require(rows >= 2 && cols >= 2, errc::unknown_surface, "torus grid needs N,M >= 2");
    const int nv = rows * cols;
    auto hedge = [&](int i, int j) { return i * cols + j + 1; };            // v(i,j) -> v(i,j+1)
    auto vedge = [&](int i, int j) { return nv + i * cols + j + 1; };       // v(i,j) -> v(i+1,j)
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        faces.push_back({hedge(i, j), vedge(i, (j + 1) % cols), -hedge((i + 1) % rows, j),
                         -vedge(i, j)});
    return cells_from_faces(2 * nv, faces);
  }
  throw error(errc::unknown_surface, "unknown surface spec: " + name);
}

CellDecomposition dual_decomposition(const CellDecomposition& c) {
  // Dual vertices are primal faces; the rotation at a dual vertex is the
  // primal boundary walk.  The dual positive dart is the reverse of the
  // primal one (90-degree counterclockwise crossing rule).
  std::vector<int> positive(static_cast<size_t>(c.num_edges()));
  for (int e = 0; e < c.num_edges(); ++e)
    positive[static_cast<size_t>(e)] =
        c.edge_pair[static_cast<size_t>(c.positive_dart[static_cast<size_t>(e)])];
  return make_cells(c.edge_pair, c.face_perm, std::move(positive));
}

Site make_site(const CellDecomposition& c, int anchor_dart) {
  require(anchor_dart >= 0 && anchor_dart < c.darts, errc::invalid_site,
          "anchor dart out of range");
  Site s;
  s.anchor_dart = anchor_dart;
  s.vertex = c.dart_vertex[static_cast<size_t>(anchor_dart)];
  s.face = c.dart_face[static_cast<size_t>(anchor_dart)];
  return s;
}

void validate_site(const CellDecomposition& c, const Site& s) {
  require(s.anchor_dart >= 0 && s.anchor_dart < c.darts, errc::invalid_site,
          "anchor dart out of range");
  require(c.dart_vertex[static_cast<size_t>(s.anchor_dart)] == s.vertex &&
              c.dart_face[static_cast<size_t>(s.anchor_dart)] == s.face,
          errc::invalid_site, "anchor dart not incident to the site's vertex and face");
}

bool vertex_incident_to_face(const CellDecomposition& c, int vertex, int face) {
  for (int d : c.vertices[static_cast<size_t>(vertex)])
    if (c.dart_face[static_cast<size_t>(d)] == face) return true;
  return false;
}

bool disjoint_sites(const CellDecomposition& c, const std::vector<Site>& sites) {
  for (const Site& s : sites) validate_site(c, s);
  for (size_t i = 0; i < sites.size(); ++i)
    for (size_t j = i + 1; j < sites.size(); ++j) {
      const Site& a = sites[i];
      const Site& b = sites[j];
      if (a.vertex == b.vertex || a.face == b.face) return false;
      if (vertex_incident_to_face(c, a.vertex, b.face)) return false;
      if (vertex_incident_to_face(c, b.vertex, a.face)) return false;
    }
  return true;
}

}  // namespace hopflattice
