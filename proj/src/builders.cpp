#include <algorithm>
#include <map>
#include <set>

#include "fkt/complex.hpp"

namespace fkt {

namespace {

// Circle skeleton of a disc whose boundary carries the diagram word:
// one vertex per endpoint position, circle edge p runs B_p -> B_{p+1} with
// darts (2p, 2p+1); the outer face (all backward darts) is the hole.
struct DiscSkeleton {
  int positions = 0;
  std::vector<std::pair<int, int>> alpha_pairs;
  std::vector<std::vector<int>> rotations;  // per boundary vertex, extendable
  std::vector<int> free_darts;
  int next_dart = 0;

  explicit DiscSkeleton(int npos) : positions(npos) {
    for (int p = 0; p < npos; ++p) {
      alpha_pairs.emplace_back(2 * p, 2 * p + 1);
      rotations.push_back({2 * p, 2 * ((p - 1 + npos) % npos) + 1});
      free_darts.push_back(2 * p + 1);
    }
    next_dart = 2 * npos;
  }
  // hole dart whose base vertex is position p
  int position_dart(int p) const { return 2 * ((p - 1 + positions) % positions) + 1; }
};

std::map<int, std::pair<int, int>> positions_by_label(const Diagram& d) {
  std::map<int, std::pair<int, int>> out;
  for (int lab : d.crossings()) {
    const auto& [o1, o2] = d.occurrences(lab);
    out[lab] = {o1.index, o2.index};
  }
  return out;
}

}  // namespace

StandardComplex build_elementary_complex(const Diagram& d, const SliceCertificate& cert) {
  validate_certificate(d, cert);
  for (const auto& [x, y] : cert.pairs)
    if (x == y)
      throw PreconditionError(
          "self-paired certificates have no two-sheet double line realization");

  StandardComplex k;
  k.boundary = d;
  const int n = d.crossing_count();
  if (n == 0) {
    k.surface = SurfaceMap::from_parts(2, {{0, 1}}, {{0, 1}}, {}, {1});
    validate_complex(k);
    return k;
  }

  DiscSkeleton disc(2 * n);
  // one chord edge per arc
  std::vector<int> arc_dart(cert.arcs.size());
  for (std::size_t a = 0; a < cert.arcs.size(); ++a) {
    int da = disc.next_dart++;
    int db = disc.next_dart++;
    disc.alpha_pairs.emplace_back(da, db);
    disc.rotations[cert.arcs[a].first].push_back(da);
    disc.rotations[cert.arcs[a].second].push_back(db);
    arc_dart[a] = da;
  }
  k.surface = SurfaceMap::from_parts(disc.next_dart, disc.alpha_pairs, disc.rotations, {},
                                     disc.free_darts);
  for (int lab : d.crossings()) {
    auto [p1, p2] = positions_by_label(d)[lab];
    k.crossing_positions[lab] = {disc.position_dart(p1), disc.position_dart(p2)};
  }
  for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
    DoubleLine l;
    l.id = "l" + std::to_string(i + 1);
    l.kind = LineKind::crossing_crossing;
    l.walks = {{arc_dart[2 * i]}, {arc_dart[2 * i + 1]}};
    l.end_crossings = {cert.pairs[i].first, cert.pairs[i].second};
    k.lines.push_back(std::move(l));
  }
  validate_complex(k);
  return k;
}

StandardComplex make_disc_with_paths(const Diagram& d, const std::vector<PathSpec>& paths,
                                     const std::vector<TripleSpec>& triples) {
  if (d.component_count() != 1)
    throw PreconditionError("fixture builder expects a 1-component boundary");
  const int n = d.crossing_count();
  StandardComplex k;
  k.boundary = d;
  DiscSkeleton disc(2 * n);

  struct NodeVisit {
    int back_dart;  // based at the node, pointing back along the arrival edge
    int out_dart;   // based at the node, continuing the path
  };
  std::map<std::string, std::vector<NodeVisit>> node_visits;
  std::map<std::string, int> node_order;  // first-visit order, for vertex layout

  // Lay a path from boundary position `from` through `via` to position `to`;
  // returns the dart walk.
  auto lay_path = [&](int from, const std::vector<std::string>& via, int to) {
    std::vector<int> walk;
    // endpoints and interior stops as abstract stop list
    struct Stop {
      bool boundary;
      int pos;
      std::string node;
    };
    std::vector<Stop> stops;
    stops.push_back({true, from, ""});
    for (const auto& v : via) stops.push_back({false, 0, v});
    stops.push_back({true, to, ""});
    int prev_fwd = -1;
    for (std::size_t s = 0; s + 1 < stops.size(); ++s) {
      int da = disc.next_dart++;
      int db = disc.next_dart++;
      disc.alpha_pairs.emplace_back(da, db);
      // attach da at stops[s], db at stops[s+1]
      if (stops[s].boundary) {
        disc.rotations[stops[s].pos].push_back(da);
      } else {
        auto& visits = node_visits[stops[s].node];
        visits.back().out_dart = da;
      }
      if (stops[s + 1].boundary) {
        disc.rotations[stops[s + 1].pos].push_back(db);
      } else {
        if (!node_order.count(stops[s + 1].node))
          node_order[stops[s + 1].node] = static_cast<int>(node_order.size());
        node_visits[stops[s + 1].node].push_back({db, -1});
      }
      walk.push_back(da);
      (void)prev_fwd;
      prev_fwd = da;
    }
    return walk;
  };

  for (const auto& p : paths) {
    DoubleLine l;
    l.id = p.line_id;
    l.kind = p.kind;
    l.walks.push_back(lay_path(p.arc1.first, p.via1, p.arc1.second));
    if (p.kind == LineKind::crossing_crossing) {
      l.walks.push_back(lay_path(p.arc2.first, p.via2, p.arc2.second));
      l.end_crossings = {d.words()[0][p.arc1.first], d.words()[0][p.arc1.second]};
    } else if (p.kind == LineKind::crossing_cusp) {
      l.end_crossings = {d.words()[0][p.arc1.first]};
    } else {
      throw PreconditionError("fixture paths must be boundary lines");
    }
    k.lines.push_back(std::move(l));
  }

  // node rotations: single visit -> degree 2; double visit -> transversal
  std::vector<std::pair<std::string, std::vector<NodeVisit>>> nodes(node_order.size());
  for (auto& [name, visits] : node_visits) nodes[node_order[name]] = {name, visits};
  std::map<std::string, int> node_dart;  // representative dart based at the node
  for (auto& [name, visits] : nodes) {
    std::vector<int> rot;
    if (visits.size() == 1) {
      rot = {visits[0].back_dart, visits[0].out_dart};
    } else if (visits.size() == 2) {
      rot = {visits[0].back_dart, visits[1].back_dart, visits[0].out_dart,
             visits[1].out_dart};
    } else {
      throw PreconditionError("fixture node visited more than twice: " + name);
    }
    if (rot.back() == -1)
      throw PreconditionError("fixture path ends at an interior node: " + name);
    node_dart[name] = rot[0];
    disc.rotations.push_back(std::move(rot));
  }

  k.surface = SurfaceMap::from_parts(disc.next_dart, disc.alpha_pairs, disc.rotations, {},
                                     disc.free_darts);
  auto posmap = positions_by_label(d);
  for (int lab : d.crossings())
    k.crossing_positions[lab] = {disc.position_dart(posmap[lab].first),
                                 disc.position_dart(posmap[lab].second)};
  for (const auto& p : paths) {
    if (p.kind != LineKind::crossing_cusp) continue;
    Cusp c;
    c.id = p.line_id + "_cusp";
    c.vertex_dart = node_dart.at(p.branch);
    c.line_id = p.line_id;
    k.cusps.push_back(std::move(c));
  }
  for (const auto& t : triples) {
    TriplePoint tp;
    tp.id = t.id;
    tp.line_ids = t.lines;
    for (int i = 0; i < 3; ++i) tp.point_darts[i] = node_dart.at(t.nodes[i]);
    k.triples.push_back(std::move(tp));
  }
  validate_complex(k);
  return k;
}

}  // namespace fkt
