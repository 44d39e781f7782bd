#include "randgrp/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "randgrp/error.hpp"

namespace randgrp {

namespace {

using json = nlohmann::json;

ParseError schema_error(std::string const& what) {
  return ParseError("diagram: " + what, 0, 0);
}

std::size_t get_index(json const& j, char const* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
    throw schema_error(std::string("missing or invalid '") + key + "'");
  }
  return j.at(key).get<std::size_t>();
}

std::vector<Dart> parse_cycle(json const& j, std::string const& what) {
  if (!j.is_array()) {
    throw schema_error(what + " must be an array of [edge, direction]");
  }
  std::vector<Dart> out;
  for (json const& d : j) {
    if (!d.is_array() || d.size() != 2 || !d[0].is_number_unsigned() ||
        !d[1].is_number_integer()) {
      throw schema_error(what + " entries must be [edge, +1|-1]");
    }
    int dir = d[1].get<int>();
    if (dir != 1 && dir != -1) {
      throw schema_error(what + " direction must be +1 or -1");
    }
    out.push_back({d[0].get<std::size_t>(), dir == 1});
  }
  return out;
}

json cycle_to_json(std::vector<Dart> const& cycle) {
  json out = json::array();
  for (Dart const& d : cycle) {
    out.push_back(json::array({d.edge, d.forward ? 1 : -1}));
  }
  return out;
}

std::size_t start_of(VanKampenDiagram const& dg, Dart d) {
  auto const& e = dg.edges[d.edge];
  return d.forward ? e.from : e.to;
}

std::size_t end_of(VanKampenDiagram const& dg, Dart d) {
  auto const& e = dg.edges[d.edge];
  return d.forward ? e.to : e.from;
}

std::size_t dart_id(Dart d) { return 2 * d.edge + (d.forward ? 0 : 1); }
Dart dart_of(std::size_t id) { return {id / 2, id % 2 == 0}; }

std::vector<Dart> reversed_cycle(std::vector<Dart> const& cycle) {
  std::vector<Dart> out;
  out.reserve(cycle.size());
  for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) {
    out.push_back(it->reversed());
  }
  return out;
}

// All boundary cycles of the map: the faces, then the outer face.
std::vector<std::vector<Dart>> map_cycles(VanKampenDiagram const& dg) {
  std::vector<std::vector<Dart>> cycles = dg.faces;
  if (!dg.exterior.empty()) {
    cycles.push_back(reversed_cycle(dg.exterior));
  }
  return cycles;
}

[[noreturn]] void malformed(std::string const& what) {
  throw PreconditionError("malformed diagram: " + what);
}

}  // namespace

VanKampenDiagram diagram_from_json(json const& j) {
  if (!j.is_object()) {
    throw schema_error("top level must be an object");
  }
  VanKampenDiagram dg;
  dg.vertex_count = get_index(j, "vertices");
  if (!j.contains("edges") || !j.at("edges").is_array()) {
    throw schema_error("missing 'edges' array");
  }
  for (json const& e : j.at("edges")) {
    if (!e.is_object() || !e.contains("label") || !e.at("label").is_string()) {
      throw schema_error("each edge needs from, to and a string label");
    }
    DiagramEdge edge;
    edge.from = get_index(e, "from");
    edge.to = get_index(e, "to");
    try {
      edge.label = Word::parse(e.at("label").get<std::string>());
    } catch (ParseError const& err) {
      throw schema_error(std::string("bad edge label: ") + err.what());
    }
    dg.edges.push_back(std::move(edge));
  }
  if (!j.contains("faces") || !j.at("faces").is_array()) {
    throw schema_error("missing 'faces' array");
  }
  for (json const& f : j.at("faces")) {
    dg.faces.push_back(parse_cycle(f, "face"));
  }
  if (j.contains("exterior")) {
    dg.exterior = parse_cycle(j.at("exterior"), "exterior");
  }
  dg.base_point = j.contains("base_point") ? get_index(j, "base_point") : 0;
  if (j.contains("sides")) {
    if (!j.at("sides").is_number_integer()) {
      throw schema_error("'sides' must be an integer");
    }
    dg.sides = j.at("sides").get<int>();
  }
  return dg;
}

json diagram_to_json(VanKampenDiagram const& dg) {
  json out;
  out["vertices"] = dg.vertex_count;
  out["edges"] = json::array();
  for (auto const& e : dg.edges) {
    out["edges"].push_back(
        {{"from", e.from}, {"to", e.to}, {"label", e.label.to_string()}});
  }
  out["faces"] = json::array();
  for (auto const& f : dg.faces) {
    out["faces"].push_back(cycle_to_json(f));
  }
  out["exterior"] = cycle_to_json(dg.exterior);
  out["base_point"] = dg.base_point;
  if (dg.sides) {
    out["sides"] = *dg.sides;
  }
  return out;
}

void check_planar_map(VanKampenDiagram const& dg) {
  std::size_t const V = dg.vertex_count;
  std::size_t const E = dg.edges.size();
  if (V == 0) {
    malformed("no vertices");
  }
  for (std::size_t i = 0; i < E; ++i) {
    auto const& e = dg.edges[i];
    if (e.from >= V || e.to >= V) {
      malformed("edge " + std::to_string(i) + " has an endpoint out of range");
    }
    if (e.label.empty()) {
      malformed("edge " + std::to_string(i) + " has an empty label");
    }
  }
  if (dg.base_point >= V) {
    malformed("base point out of range");
  }
  if (E == 0) {
    if (V != 1 || !dg.faces.empty() || !dg.exterior.empty()) {
      malformed("a diagram without edges must be a single vertex");
    }
    return;
  }
  if (dg.exterior.empty()) {
    malformed("missing exterior boundary");
  }

  auto const cycles = map_cycles(dg);
  std::vector<std::size_t> next(2 * E, SIZE_MAX);
  for (auto const& cycle : cycles) {
    if (cycle.empty()) {
      malformed("empty boundary cycle");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Dart const d = cycle[i];
      Dart const n = cycle[(i + 1) % cycle.size()];
      if (d.edge >= E || n.edge >= E) {
        malformed("boundary refers to a missing edge");
      }
      if (end_of(dg, d) != start_of(dg, n)) {
        malformed("boundary cycle is not closed at edge " +
                  std::to_string(d.edge));
      }
      if (next[dart_id(d)] != SIZE_MAX) {
        malformed("edge " + std::to_string(d.edge) +
                  " is traversed twice in the same direction");
      }
      next[dart_id(d)] = dart_id(n);
    }
  }
  for (std::size_t id = 0; id < 2 * E; ++id) {
    if (next[id] == SIZE_MAX) {
      malformed("edge " + std::to_string(id / 2) +
                " is missing a side (each edge needs a face or the exterior "
                "on both sides)");
    }
  }

  // Rotation at a vertex: the dart after the reverse of d.  Each vertex
  // must carry exactly one rotation cycle.
  std::vector<int> orbits_at(V, 0);
  std::vector<bool> seen(2 * E, false);
  for (std::size_t id = 0; id < 2 * E; ++id) {
    if (seen[id]) {
      continue;
    }
    ++orbits_at[start_of(dg, dart_of(id))];
    for (std::size_t cur = id; !seen[cur]; cur = next[cur ^ 1u]) {
      seen[cur] = true;
    }
  }
  for (std::size_t v = 0; v < V; ++v) {
    if (orbits_at[v] != 1) {
      malformed("vertex " + std::to_string(v) +
                (orbits_at[v] == 0 ? " is isolated" : " is not a manifold point"));
    }
  }

  // Connectivity.
  std::vector<std::size_t> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };
  for (auto const& e : dg.edges) {
    parent[find(e.from)] = find(e.to);
  }
  for (std::size_t v = 0; v < V; ++v) {
    if (find(v) != find(0)) {
      malformed("diagram is not connected");
    }
  }

  auto const chi = static_cast<std::int64_t>(V) - static_cast<std::int64_t>(E) +
                   static_cast<std::int64_t>(cycles.size());
  if (chi != 2) {
    malformed("V - E + F = " + std::to_string(chi) +
              " counting the outer face; a planar disc needs 2");
  }

  bool on_boundary = false;
  for (Dart d : dg.exterior) {
    on_boundary = on_boundary || start_of(dg, d) == dg.base_point;
  }
  if (!on_boundary) {
    malformed("base point is not on the boundary");
  }
}

Word cycle_label(VanKampenDiagram const& dg, std::vector<Dart> const& cycle) {
  std::vector<Letter> out;
  for (Dart d : cycle) {
    Word const& label = dg.edges[d.edge].label;
    if (d.forward) {
      out.insert(out.end(), label.begin(), label.end());
    } else {
      Word inv = inverse(label);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return Word(std::move(out));
}

VanKampenDiagram remove_degree_two_vertices(VanKampenDiagram const& input) {
  check_planar_map(input);
  VanKampenDiagram dg = input;
  for (;;) {
    std::size_t const E = dg.edges.size();
    std::vector<std::vector<Dart>> leaving(dg.vertex_count);
    for (std::size_t e = 0; e < E; ++e) {
      leaving[dg.edges[e].from].push_back({e, true});
      leaving[dg.edges[e].to].push_back({e, false});
    }
    std::optional<std::size_t> victim;
    for (std::size_t v = 0; v < dg.vertex_count && !victim; ++v) {
      if (leaving[v].size() == 2 && leaving[v][0].edge != leaving[v][1].edge) {
        victim = v;
      }
    }
    if (!victim) {
      return dg;
    }
    Dart const a = leaving[*victim][0];
    Dart const b = leaving[*victim][1];
    Dart const in = a.reversed();  // arrives at the victim
    Dart const out = b;            // leaves the victim
    DiagramEdge merged{start_of(dg, in), end_of(dg, out),
                       cycle_label(dg, {in, out})};

    // The merged edge takes the smaller id; the larger id is dropped.
    std::size_t const keep = std::min(a.edge, b.edge);
    std::size_t const drop = std::max(a.edge, b.edge);
    auto renumber = [&](std::size_t e) { return e > drop ? e - 1 : e; };
    auto rewrite = [&](std::vector<Dart> const& cycle) {
      std::vector<Dart> res;
      for (Dart d : cycle) {
        if (d == in) {
          res.push_back({keep, true});
        } else if (d == out.reversed()) {
          res.push_back({keep, false});
        } else if (d == out || d == in.reversed()) {
          continue;
        } else {
          res.push_back({renumber(d.edge), d.forward});
        }
      }
      return res;
    };
    for (auto& f : dg.faces) {
      f = rewrite(f);
    }
    dg.exterior = rewrite(dg.exterior);
    dg.edges[keep] = std::move(merged);
    dg.edges.erase(dg.edges.begin() + static_cast<std::ptrdiff_t>(drop));

    auto shift_vertex = [&](std::size_t v) { return v > *victim ? v - 1 : v; };
    for (auto& e : dg.edges) {
      e.from = shift_vertex(e.from);
      e.to = shift_vertex(e.to);
    }
    if (dg.base_point == *victim) {
      dg.base_point = dg.edges[keep].from;
    } else {
      dg.base_point = shift_vertex(dg.base_point);
    }
    --dg.vertex_count;
  }
}

DiagramCounts diagram_counts(VanKampenDiagram const& input) {
  VanKampenDiagram const dg = remove_degree_two_vertices(input);
  if (dg.edges.empty()) {
    throw PreconditionError("diagram is a single vertex, not a disc");
  }
  std::vector<int> visits(dg.vertex_count, 0);
  for (Dart d : dg.exterior) {
    if (++visits[start_of(dg, d)] > 1) {
      throw PreconditionError(
          "diagram is not a disc: its boundary passes a vertex twice");
    }
  }
  std::vector<bool> on_exterior(dg.edges.size(), false);
  for (Dart d : dg.exterior) {
    on_exterior[d.edge] = true;
  }
  DiagramCounts c;
  c.vertex_degrees.assign(dg.vertex_count, 0);
  for (auto const& e : dg.edges) {
    ++c.vertex_degrees[e.from];
    ++c.vertex_degrees[e.to];
  }
  for (auto const& f : dg.faces) {
    DiagramCounts::Face fc;
    for (Dart d : f) {
      if (on_exterior[d.edge]) {
        ++fc.exterior_edges;
      } else {
        ++fc.interior_edges;
      }
    }
    c.faces.push_back(fc);
  }
  return c;
}

EulerIdentity euler_identity(DiagramCounts const& counts) {
  EulerIdentity out;
  std::int64_t rhs = 0;
  for (int d : counts.vertex_degrees) {
    rhs += 2 * (3 - static_cast<std::int64_t>(d));
  }
  for (auto const& f : counts.faces) {
    rhs += 6 - 2 * static_cast<std::int64_t>(f.exterior_edges) -
           f.interior_edges;
  }
  out.rhs = rhs;
  out.holds = rhs == out.lhs;
  return out;
}

EulerIdentity euler_identity(VanKampenDiagram const& dg) {
  return euler_identity(diagram_counts(dg));
}

std::int64_t d_int(Rational const& lambda) {
  if (!(lambda > Rational(0))) {
    throw PreconditionError("lambda must be positive");
  }
  return (Rational(1) / lambda + Rational(1)).floor();
}

std::int64_t d_ext(Rational const& lambda) {
  if (!(lambda > Rational(0))) {
    throw PreconditionError("lambda must be positive");
  }
  return (Rational(1) / (Rational(2) * lambda) + Rational(1)).floor();
}

std::int64_t interior_face_bound(int n, Rational const& lambda) {
  if (n < 2) {
    throw PreconditionError("interior face bound needs n >= 2");
  }
  if (!(lambda > Rational(0)) || lambda > Rational(1, 6)) {
    throw PreconditionError("interior face bound needs 0 < lambda <= 1/6, got " +
                            lambda.to_string());
  }
  return (3 * static_cast<std::int64_t>(n) - 6) / (d_int(lambda) - 6);
}

namespace {

bool is_conjugate_of(Word const& w, Word const& r) {
  if (w.size() != r.size()) {
    return false;
  }
  Word const doubled = r * r;
  for (std::size_t s = 0; s < r.size(); ++s) {
    if (std::equal(w.begin(), w.end(), doubled.begin() + static_cast<std::ptrdiff_t>(s))) {
      return true;
    }
  }
  return false;
}

bool is_relator_conjugate(Word const& w, Presentation const& p) {
  for (Word const& r : p.relators) {
    if (is_conjugate_of(w, r) || is_conjugate_of(w, inverse(r))) {
      return true;
    }
  }
  return false;
}

// Label of `cycle` read from position i onwards.
Word label_from(VanKampenDiagram const& dg, std::vector<Dart> const& cycle,
                std::size_t i) {
  std::vector<Dart> rotated(cycle.begin() + static_cast<std::ptrdiff_t>(i),
                            cycle.end());
  rotated.insert(rotated.end(), cycle.begin(),
                 cycle.begin() + static_cast<std::ptrdiff_t>(i));
  return cycle_label(dg, rotated);
}

}  // namespace

DiagramCheckReport verify_diagram(VanKampenDiagram const& dg,
                                  Presentation const& p,
                                  Rational const& lambda) {
  check_planar_map(dg);
  for (std::size_t f = 0; f < dg.faces.size(); ++f) {
    Word const label = cycle_label(dg, dg.faces[f]);
    if (!is_relator_conjugate(label, p)) {
      throw PreconditionError("face " + std::to_string(f) + " reads " +
                              label.to_string() +
                              ", not a cyclic conjugate of a relator or its "
                              "inverse");
    }
  }

  DiagramCheckReport report;

  // Reduced: no two distinct faces across an edge whose labels, read from
  // that edge clockwise on one and counter-clockwise on the other, agree.
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> forward_use;
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> backward_use;
  for (std::size_t f = 0; f < dg.faces.size(); ++f) {
    for (std::size_t i = 0; i < dg.faces[f].size(); ++i) {
      Dart const d = dg.faces[f][i];
      (d.forward ? forward_use : backward_use)[d.edge] = {f, i};
    }
  }
  report.is_reduced = true;
  for (auto const& [edge, fwd] : forward_use) {
    auto it = backward_use.find(edge);
    if (it == backward_use.end() || it->second.first == fwd.first) {
      continue;
    }
    auto const& [f1, i1] = fwd;
    auto const& [f2, i2] = it->second;
    std::vector<Dart> const mirror = reversed_cycle(dg.faces[f2]);
    std::size_t const j = dg.faces[f2].size() - 1 - i2;
    if (label_from(dg, dg.faces[f1], i1) == label_from(dg, mirror, j)) {
      report.is_reduced = false;
      break;
    }
  }

  if (!dg.edges.empty()) {
    VanKampenDiagram const norm = remove_degree_two_vertices(dg);
    DiagramCounts const counts = diagram_counts(dg);
    EulerIdentity const id = euler_identity(counts);
    report.euler_identity_holds = id.holds;
    report.euler_rhs = id.rhs;
    for (auto const& f : counts.faces) {
      if (f.exterior_edges == 0) {
        ++report.interior_face_count;
      }
    }
    (void)norm;
  }

  report.d_int = d_int(lambda);
  report.d_ext = d_ext(lambda);
  if (dg.sides) {
    report.face_bound = interior_face_bound(*dg.sides, lambda);
  }

  // Boundary word from the base point.
  std::size_t start = 0;
  for (std::size_t i = 0; i < dg.exterior.size(); ++i) {
    if (start_of(dg, dg.exterior[i]) == dg.base_point) {
      start = i;
      break;
    }
  }
  report.boundary_word =
      dg.exterior.empty() ? Word() : label_from(dg, dg.exterior, start);
  return report;
}

}  // namespace randgrp
