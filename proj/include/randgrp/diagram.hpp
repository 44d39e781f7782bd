#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "randgrp/presentation.hpp"
#include "randgrp/rational.hpp"

namespace randgrp {

// An edge traversed along (forward) or against its orientation.
struct Dart {
  std::size_t edge = 0;
  bool forward = true;

  Dart reversed() const noexcept { return {edge, !forward}; }
  friend auto operator<=>(Dart const&, Dart const&) = default;
};

struct DiagramEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Word label;  // read from `from` to `to`
};

// A finite planar 2-complex given declaratively.  Conventions:
//   * every face boundary is listed counter-clockwise (face on the left);
//   * `exterior` is the boundary of the whole disc, also counter-clockwise,
//     so a boundary edge is traversed in the same direction by its face and
//     by `exterior`, and an interior edge once in each direction by its two
//     faces.
struct VanKampenDiagram {
  std::size_t vertex_count = 0;
  std::vector<DiagramEdge> edges;
  std::vector<std::vector<Dart>> faces;
  std::vector<Dart> exterior;
  std::size_t base_point = 0;
  // Number of sides when the diagram fills a geodesic n-gon.
  std::optional<int> sides;
};

// JSON schema:
//   { "vertices": <count>,
//     "edges": [ {"from": u, "to": v, "label": "<word>"}, ... ],
//     "faces": [ [[edge, +1|-1], ...], ... ],
//     "exterior": [[edge, +1|-1], ...],
//     "base_point": v,
//     "sides": n   (optional) }
// Throws ParseError on schema violations.
VanKampenDiagram diagram_from_json(nlohmann::json const& j);
nlohmann::json diagram_to_json(VanKampenDiagram const& dg);

// Throws PreconditionError unless the faces and exterior describe a
// connected planar map on the sphere (each dart used once, one rotation
// cycle per vertex, V - E + F + 1 = 2) with the base point on the boundary.
void check_planar_map(VanKampenDiagram const& dg);

// Concatenated labels along a cycle of darts.
Word cycle_label(VanKampenDiagram const& dg, std::vector<Dart> const& cycle);

// Merges the two edges at every vertex of degree 2 (other than a vertex
// carrying a single loop), relabelling the merged edge by the word read
// along it.
VanKampenDiagram remove_degree_two_vertices(VanKampenDiagram const& dg);

// The integers entering the Euler-characteristic identity.
struct DiagramCounts {
  std::vector<int> vertex_degrees;
  struct Face {
    int exterior_edges = 0;
    int interior_edges = 0;
  };
  std::vector<Face> faces;
};

// Counts for a disc diagram after degree-2 vertices are removed.  Throws
// unless the diagram is a disc (simple exterior boundary).
DiagramCounts diagram_counts(VanKampenDiagram const& dg);

struct EulerIdentity {
  std::int64_t lhs = 6;
  std::int64_t rhs = 0;  // 2 sum_v (3 - d(v)) + sum_B (6 - 2 e(B) - i(B))
  bool holds = false;
};

EulerIdentity euler_identity(DiagramCounts const& counts);
EulerIdentity euler_identity(VanKampenDiagram const& dg);

// floor(1/lambda + 1) and floor(1/(2 lambda) + 1).
std::int64_t d_int(Rational const& lambda);
std::int64_t d_ext(Rational const& lambda);

// floor((3n - 6) / (d_int(lambda) - 6)); requires n >= 2, 0 < lambda <= 1/6.
std::int64_t interior_face_bound(int n, Rational const& lambda);

struct DiagramCheckReport {
  bool is_reduced = false;
  bool euler_identity_holds = false;
  std::int64_t euler_rhs = 0;
  int interior_face_count = 0;
  std::optional<std::int64_t> face_bound;  // when `sides` is known
  std::int64_t d_int = 0;
  std::int64_t d_ext = 0;
  Word boundary_word;  // read counter-clockwise from the base point
};

// Validates structure and face labels (each a cyclic conjugate of some
// relator^(+-1)), then reports reducedness and the identity.  `lambda` is
// the small cancellation constant the presentation is known to satisfy.
DiagramCheckReport verify_diagram(VanKampenDiagram const& dg,
                                  Presentation const& p,
                                  Rational const& lambda = Rational(1, 6));

}  // namespace randgrp
