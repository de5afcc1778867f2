#include "fkt/complex.hpp"

#include <algorithm>
#include <set>

namespace fkt {

LineSide line_side(LineKind kind) {
  return (kind == LineKind::cyclic || kind == LineKind::cusp_cusp) ? LineSide::interior
                                                                   : LineSide::boundary;
}

std::string to_string(LineKind kind) {
  switch (kind) {
    case LineKind::cyclic: return "cyclic";
    case LineKind::cusp_cusp: return "cusp_cusp";
    case LineKind::crossing_crossing: return "crossing_crossing";
    case LineKind::crossing_cusp: return "crossing_cusp";
  }
  return "?";
}

const DoubleLine& StandardComplex::line(const std::string& id) const {
  for (const auto& l : lines)
    if (l.id == id) return l;
  throw PreconditionError("no double line with id " + id);
}

bool StandardComplex::has_line(const std::string& id) const {
  for (const auto& l : lines)
    if (l.id == id) return true;
  return false;
}

namespace {

// walk vertices: base of every dart, plus the final head for open walks
std::vector<int> walk_vertices(const SurfaceMap& m, const std::vector<int>& w, bool closed) {
  std::vector<int> out;
  for (int d : w) out.push_back(m.vertex_of(d));
  if (!closed) out.push_back(m.head_vertex(w.back()));
  return out;
}

struct HoleData {
  SurfaceMap::FaceInfo faces;
  std::set<int> hole_darts;
  std::set<int> hole_vertices;
  std::vector<int> hole_classes;
};

HoleData hole_data(const SurfaceMap& m) {
  HoleData h;
  h.faces = m.faces();
  for (int c = 0; c < h.faces.face_count; ++c) {
    if (!h.faces.is_hole[c]) continue;
    h.hole_classes.push_back(c);
    for (int d : h.faces.walk[c]) {
      h.hole_darts.insert(d);
      h.hole_vertices.insert(m.vertex_of(d));
    }
  }
  return h;
}

int cusp_count_on(const StandardComplex& k, const std::string& line_id) {
  int n = 0;
  for (const auto& c : k.cusps)
    if (c.line_id == line_id) ++n;
  return n;
}

// positions of a vertex in a closed walk's base sequence; -1 if absent
int walk_position_of_vertex(const SurfaceMap& m, const std::vector<int>& w, int vertex) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (m.vertex_of(w[i]) == vertex) return static_cast<int>(i);
  return -1;
}

}  // namespace

void validate_complex(const StandardComplex& k) {
  const SurfaceMap& m = k.surface;
  m.validate_structure();
  HoleData holes = hole_data(m);

  // free darts are exactly the darts of the marked faces
  std::set<int> free_set(m.free_darts().begin(), m.free_darts().end());
  if (free_set != holes.hole_darts)
    throw ValidationError("free", "free darts must list every dart of each boundary face");

  const bool has_holes = !holes.hole_classes.empty();
  if (has_holes != k.boundary.has_value())
    throw ValidationError("boundary",
                          "boundary faces and a boundary diagram must come together");

  if (k.boundary) {
    const Diagram& b = *k.boundary;
    if (static_cast<int>(holes.hole_classes.size()) != b.component_count())
      throw ValidationError("boundary",
                            "boundary circle count differs from diagram component count");
    SurfaceMap::Analysis an = m.analyze();
    if (static_cast<int>(an.components.size()) != b.component_count())
      throw ValidationError("boundary",
                            "surface component count must equal the unicursal component count");
    // crossing positions
    std::set<int> seen_vertices;
    if (static_cast<int>(k.crossing_positions.size()) != b.crossing_count())
      throw ValidationError("crossing_map", "one entry per boundary crossing required");
    for (const auto& [label, pos] : k.crossing_positions) {
      if (!b.has_crossing(label))
        throw ValidationError("crossing_map", "unknown crossing " + std::to_string(label));
      for (int d : {pos.first, pos.second}) {
        if (!holes.hole_darts.count(d))
          throw ValidationError("crossing_map", "position dart is not on a boundary face");
        if (!seen_vertices.insert(m.vertex_of(d)).second)
          throw ValidationError("crossing_map", "two crossing positions share a vertex");
      }
    }
    // each hole spells one boundary component word, up to rotation/reversal
    std::map<int, std::pair<int, int>> vertex_label_pos;  // hole vertex -> (label, which)
    for (const auto& [label, pos] : k.crossing_positions) {
      vertex_label_pos[m.vertex_of(pos.first)] = {label, 0};
      vertex_label_pos[m.vertex_of(pos.second)] = {label, 1};
    }
    std::vector<int> unmatched_components(b.component_count());
    for (int c = 0; c < b.component_count(); ++c) unmatched_components[c] = c;
    for (int hc : holes.hole_classes) {
      std::vector<int> spelled;
      for (int d : holes.faces.walk[hc]) {
        auto it = vertex_label_pos.find(m.vertex_of(d));
        if (it != vertex_label_pos.end()) spelled.push_back(it->second.first);
      }
      bool matched = false;
      for (auto it = unmatched_components.begin(); it != unmatched_components.end(); ++it) {
        const auto& word = b.words()[*it];
        if (word.size() != spelled.size()) continue;
        const int len = static_cast<int>(word.size());
        auto rotation_match = [&](const std::vector<int>& seq) {
          if (len == 0) return true;
          for (int r = 0; r < len; ++r) {
            bool ok = true;
            for (int i = 0; i < len && ok; ++i) ok = seq[(r + i) % len] == word[i];
            if (ok) return true;
          }
          return false;
        };
        std::vector<int> rev(spelled.rbegin(), spelled.rend());
        if (rotation_match(spelled) || rotation_match(rev)) {
          unmatched_components.erase(it);
          matched = true;
          break;
        }
      }
      if (!matched)
        throw ValidationError("boundary",
                              "a boundary circle does not spell any diagram component");
    }
    // each crossing is an endpoint of exactly one boundary line
    std::map<int, int> lines_at_crossing;
    for (const auto& l : k.lines)
      for (int c : std::set<int>(l.end_crossings.begin(), l.end_crossings.end()))
        ++lines_at_crossing[c];
    for (int label : b.crossings()) {
      auto it = lines_at_crossing.find(label);
      int cnt = it == lines_at_crossing.end() ? 0 : it->second;
      if (cnt != 1)
        throw ValidationError("boundary_lines", "crossing " + std::to_string(label) +
                                                    " touches " + std::to_string(cnt) +
                                                    " double lines (expected 1)");
    }
  } else {
    if (!k.crossing_positions.empty())
      throw ValidationError("crossing_map", "crossing positions without a boundary");
  }

  // lines
  std::set<std::string> line_ids;
  std::map<int, std::vector<std::pair<std::string, int>>> passes;  // vertex -> (line, walk#)
  for (const auto& l : k.lines) {
    if (!line_ids.insert(l.id).second)
      throw ValidationError("lines", "duplicate line id " + l.id);
    const bool closed = line_side(l.kind) == LineSide::interior;
    const char* what = "line_walks";
    switch (l.kind) {
      case LineKind::cyclic: {
        if (l.walks.size() != 2) throw ValidationError(what, "cyclic line needs two walks");
        m.validate_walk(l.walks[0], true, what);
        m.validate_walk(l.walks[1], true, what);
        if (l.walks[0].size() != l.walks[1].size())
          throw ValidationError(what, "cyclic line walks differ in length");
        int L = static_cast<int>(l.walks[0].size());
        if (l.ident_offset < 0 || l.ident_offset >= L)
          throw ValidationError(what, "ident offset out of range");
        break;
      }
      case LineKind::cusp_cusp: {
        if (l.walks.size() != 1) throw ValidationError(what, "cusp line needs one walk");
        m.validate_walk(l.walks[0], true, what);
        if (l.walks[0].size() % 2 != 0)
          throw ValidationError(what, "cusp-to-cusp walk length must be even");
        if (cusp_count_on(k, l.id) != 2)
          throw ValidationError("cusps", "cusp_cusp line needs exactly two cusps");
        std::vector<int> branch;
        for (const auto& c : k.cusps)
          if (c.line_id == l.id) branch.push_back(m.vertex_of(c.vertex_dart));
        int p0 = walk_position_of_vertex(m, l.walks[0], branch[0]);
        int p1 = walk_position_of_vertex(m, l.walks[0], branch[1]);
        if (p0 < 0 || p1 < 0)
          throw ValidationError("cusps", "branch vertex not on the line walk");
        int L = static_cast<int>(l.walks[0].size());
        if ((p1 - p0 + L) % L != L / 2)
          throw ValidationError("cusps", "branch vertices must sit at antipodal walk positions");
        break;
      }
      case LineKind::crossing_crossing: {
        if (!k.boundary) throw ValidationError(what, "boundary line without a boundary");
        if (l.walks.size() != 2)
          throw ValidationError(what, "crossing-to-crossing line needs two walks");
        if (l.end_crossings.size() != 2)
          throw ValidationError(what, "crossing-to-crossing line needs two end crossings");
        if (l.end_crossings[0] == l.end_crossings[1])
          throw ValidationError(what, "self-paired boundary line is not representable");
        m.validate_walk(l.walks[0], false, what);
        m.validate_walk(l.walks[1], false, what);
        if (l.walks[0].size() != l.walks[1].size())
          throw ValidationError(what, "boundary line walks differ in length");
        auto pos_a = k.crossing_positions.at(l.end_crossings[0]);
        auto pos_b = k.crossing_positions.at(l.end_crossings[1]);
        std::set<int> start_pre{m.vertex_of(pos_a.first), m.vertex_of(pos_a.second)};
        std::set<int> end_pre{m.vertex_of(pos_b.first), m.vertex_of(pos_b.second)};
        std::set<int> starts, finishes;
        for (const auto& w : l.walks) {
          int s = m.vertex_of(w.front());
          int e = m.head_vertex(w.back());
          if (!start_pre.count(s) || !end_pre.count(e))
            throw ValidationError(what, "walk endpoints must be the end crossings' preimages");
          starts.insert(s);
          finishes.insert(e);
        }
        if (starts.size() != 2 || finishes.size() != 2)
          throw ValidationError(what, "the two walks must use distinct crossing preimages");
        break;
      }
      case LineKind::crossing_cusp: {
        if (!k.boundary) throw ValidationError(what, "boundary line without a boundary");
        if (l.walks.size() != 1)
          throw ValidationError(what, "crossing-to-cusp line needs one walk");
        if (l.end_crossings.size() != 1)
          throw ValidationError(what, "crossing-to-cusp line needs one end crossing");
        m.validate_walk(l.walks[0], false, what);
        if (cusp_count_on(k, l.id) != 1)
          throw ValidationError("cusps", "crossing_cusp line needs exactly one cusp");
        auto pos = k.crossing_positions.at(l.end_crossings[0]);
        std::set<int> pre{m.vertex_of(pos.first), m.vertex_of(pos.second)};
        int s = m.vertex_of(l.walks[0].front());
        int e = m.head_vertex(l.walks[0].back());
        if (!pre.count(s) || !pre.count(e) || s == e)
          throw ValidationError(what, "walk must join the crossing's two preimages");
        int branch = -1;
        for (const auto& c : k.cusps)
          if (c.line_id == l.id) branch = m.vertex_of(c.vertex_dart);
        int bp = walk_position_of_vertex(m, l.walks[0], branch);
        if (bp <= 0) throw ValidationError("cusps", "branch vertex must be interior to the walk");
        break;
      }
    }
    if (line_side(l.kind) == LineSide::interior && !l.end_crossings.empty())
      throw ValidationError("lines", "interior line with end crossings");
    // interior walk vertices stay away from the boundary faces
    for (std::size_t wi = 0; wi < l.walks.size(); ++wi) {
      auto verts = walk_vertices(m, l.walks[wi], closed);
      std::size_t first = 0, last = verts.size();
      if (!closed) {
        first = 1;
        last = verts.size() - 1;
      }
      for (std::size_t i = first; i < last; ++i)
        if (holes.hole_vertices.count(verts[i]))
          throw ValidationError("line_walks", "interior part of a walk touches the boundary");
      for (std::size_t i = 0; i < verts.size(); ++i) {
        bool endpoint = !closed && (i == 0 || i + 1 == verts.size());
        if (!endpoint)
          passes[verts[i]].emplace_back(l.id, static_cast<int>(wi));
      }
    }
  }

  // cusps
  std::set<std::string> cusp_ids;
  for (const auto& c : k.cusps) {
    if (!cusp_ids.insert(c.id).second)
      throw ValidationError("cusps", "duplicate cusp id " + c.id);
    if (!k.has_line(c.line_id))
      throw ValidationError("cusps", "cusp " + c.id + " references a missing line");
    LineKind kind = k.line(c.line_id).kind;
    if (kind != LineKind::cusp_cusp && kind != LineKind::crossing_cusp)
      throw ValidationError("cusps", "cusp on a line of kind " + to_string(kind));
    if (c.vertex_dart < 0 || c.vertex_dart >= m.dart_count())
      throw ValidationError("cusps", "cusp vertex dart out of range");
  }
  for (const auto& l : k.lines)
    if (line_side(l.kind) == LineSide::interior && l.kind == LineKind::cyclic &&
        cusp_count_on(k, l.id) != 0)
      throw ValidationError("cusps", "cyclic line cannot carry cusps");

  // triple points and walk sharing
  std::set<std::string> triple_ids;
  std::set<int> triple_vertices;
  for (const auto& t : k.triples) {
    if (!triple_ids.insert(t.id).second)
      throw ValidationError("triples", "duplicate triple point id " + t.id);
    for (const auto& lid : t.line_ids)
      if (!k.has_line(lid))
        throw ValidationError("triples", "triple " + t.id + " references a missing line");
    std::set<int> pts;
    for (int d : t.point_darts) {
      if (d < 0 || d >= m.dart_count())
        throw ValidationError("triples", "triple point dart out of range");
      if (!pts.insert(m.vertex_of(d)).second)
        throw ValidationError("triples", "triple point preimages must be distinct vertices");
    }
    for (int v : pts)
      if (!triple_vertices.insert(v).second)
        throw ValidationError("triples", "two triple points share a preimage vertex");
    // each preimage vertex carries exactly two passes, both by lines of this triple
    std::set<std::string> tlines(t.line_ids.begin(), t.line_ids.end());
    for (int d : t.point_darts) {
      int v = m.vertex_of(d);
      auto it = passes.find(v);
      if (it == passes.end() || it->second.size() != 2)
        throw ValidationError("triples",
                              "triple point preimage must be crossed by exactly two walks");
      for (const auto& [lid, wi] : it->second)
        if (!tlines.count(lid))
          throw ValidationError("triples", "foreign walk through a triple point preimage");
    }
  }
  for (const auto& [v, plist] : passes) {
    if (plist.size() == 1) continue;
    if (plist.size() == 2 && triple_vertices.count(v)) continue;
    throw ValidationError("line_walks",
                          "walks share a vertex that is not a triple point preimage");
  }
}

std::pair<LineKind, LineSide> classify_double_line(const StandardComplex& k,
                                                   const std::string& line_id) {
  const DoubleLine& l = k.line(line_id);
  return {l.kind, line_side(l.kind)};
}

TripleKind classify_triple_point(const StandardComplex& k, const std::string& triple_id) {
  for (const auto& t : k.triples) {
    if (t.id != triple_id) continue;
    int interior = 0;
    for (const auto& lid : t.line_ids)
      if (line_side(k.line(lid).kind) == LineSide::interior) ++interior;
    if (interior == 3) return TripleKind::interior;
    if (interior == 0) return TripleKind::exterior;
    return TripleKind::mixed;
  }
  throw PreconditionError("no triple point with id " + triple_id);
}

ComplexClass complex_class(const StandardComplex& k) {
  ComplexClass c;
  c.cusp_free = k.cusps.empty();
  c.triple_free = k.triples.empty();
  c.elementary = c.cusp_free && c.triple_free;
  c.purified = c.triple_free;
  for (const auto& cusp : k.cusps) {
    // a cusp is tolerable for purified complexes only on a line with a
    // boundary endpoint
    if (line_side(k.line(cusp.line_id).kind) != LineSide::boundary) c.purified = false;
  }
  return c;
}

std::vector<ParityViolation> check_parity_constraints(const StandardComplex& k) {
  if (!k.boundary || k.boundary->component_count() != 1)
    throw PreconditionError("parity constraints need a 1-component boundary diagram");
  const Diagram& b = *k.boundary;
  std::vector<ParityViolation> out;
  for (const auto& l : k.lines) {
    if (l.kind != LineKind::crossing_cusp) continue;
    int c = l.end_crossings[0];
    if (gaussian_parity(b, c) == Parity::odd)
      out.push_back({"cusp_line_even", l.id,
                     "crossing " + std::to_string(c) + " joined to a cusp must be even"});
  }
  for (const auto& t : k.triples) {
    int sum = 0;
    bool applicable = true;
    std::string ends;
    for (const auto& lid : t.line_ids) {
      const DoubleLine& l = k.line(lid);
      if (l.end_crossings.empty()) {
        applicable = false;
        break;
      }
      int c = l.end_crossings[0];
      sum += gaussian_parity(b, c) == Parity::odd ? 1 : 0;
      if (!ends.empty()) ends += ",";
      ends += std::to_string(c);
    }
    if (applicable && sum % 2 != 0)
      out.push_back({"triple_point_parity", t.id,
                     "end crossings " + ends + " have odd parity sum"});
  }
  return out;
}

namespace {

void remap_darts(StandardComplex& k, const std::vector<int>& remap) {
  auto fix = [&](int& d) {
    if (d < 0 || d >= static_cast<int>(remap.size()) || remap[d] < 0)
      throw InternalDefectError("surgery retired a dart still referenced by the complex");
    d = remap[d];
  };
  for (auto& l : k.lines)
    for (auto& w : l.walks)
      for (int& d : w) fix(d);
  for (auto& [label, pos] : k.crossing_positions) {
    fix(pos.first);
    fix(pos.second);
  }
  for (auto& c : k.cusps) fix(c.vertex_dart);
  for (auto& t : k.triples)
    for (int& d : t.point_darts) fix(d);
}

}  // namespace

StandardComplex smooth_interior_line(const StandardComplex& k, const std::string& line_id,
                                     LineSmoothingChoice choice) {
  const DoubleLine& l = k.line(line_id);
  if (line_side(l.kind) == LineSide::boundary)
    throw PreconditionError("line " + line_id + " is a boundary line; smoothing needs an interior one");
  for (const auto& t : k.triples)
    for (const auto& lid : t.line_ids)
      if (lid == line_id)
        throw PreconditionError("line " + line_id + " carries a triple point");

  StandardComplex out = k;
  const int chi_before = out.surface.euler_characteristic();

  std::vector<int> remap;
  if (l.kind == LineKind::cyclic) {
    const auto& w2 = l.walks[1];
    const int L = static_cast<int>(w2.size());
    std::vector<int> aligned(L);
    for (int j = 0; j < L; ++j) {
      if (!l.ident_reversed)
        aligned[j] = w2[((l.ident_offset + j) % L + L) % L];
      else
        aligned[j] = out.surface.alpha(w2[((l.ident_offset - j - 1) % L + L) % L]);
    }
    remap = out.surface.splice_parallel_walks(l.walks[0], aligned,
                                              choice == LineSmoothingChoice::b);
  } else {
    // rotate the walk so a branch vertex sits at position 0
    std::vector<int> branch;
    for (const auto& c : k.cusps)
      if (c.line_id == line_id) branch.push_back(k.surface.vertex_of(c.vertex_dart));
    const auto& w = l.walks[0];
    const int L = static_cast<int>(w.size());
    int p = -1;
    for (int i = 0; i < L && p < 0; ++i)
      if (k.surface.vertex_of(w[i]) == branch[0] || k.surface.vertex_of(w[i]) == branch[1])
        p = i;
    std::vector<int> rotated(L);
    for (int i = 0; i < L; ++i) rotated[i] = w[(p + i) % L];
    remap = out.surface.fold_walk(rotated, choice == LineSmoothingChoice::b);
  }

  // drop the line and its cusps, then renumber the survivors
  out.lines.erase(std::remove_if(out.lines.begin(), out.lines.end(),
                                 [&](const DoubleLine& x) { return x.id == line_id; }),
                  out.lines.end());
  out.cusps.erase(std::remove_if(out.cusps.begin(), out.cusps.end(),
                                 [&](const Cusp& c) { return c.line_id == line_id; }),
                  out.cusps.end());
  remap_darts(out, remap);

  const int chi_after = out.surface.euler_characteristic();
  if (chi_after < chi_before)
    throw InternalDefectError("smoothing lowered the Euler characteristic: " +
                              std::to_string(chi_before) + " -> " +
                              std::to_string(chi_after));
  return out;
}

int genus_bound(int g, int n, int n_prime) {
  if (n < 1 || n_prime < 1) throw PreconditionError("component counts must be positive");
  return g + (n_prime - n);
}

namespace {

std::vector<int> mirrored_walk(const std::vector<int>& w, int offset) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int d : w) out.push_back(d + offset);
  return out;
}

// closed walk w ++ rung(end) ++ mirror(w) reversed ++ rung(start) backwards
std::vector<int> walk_through_double(const SurfaceMap& dbl, const std::vector<int>& w,
                                     int dart_offset, int rung_start, int rung_end) {
  std::vector<int> out = w;
  out.push_back(rung_end);
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(dbl.alpha(*it + dart_offset));
  out.push_back(dbl.alpha(rung_start));
  return out;
}

int the_rung(const DoubledMap& dbl, int vertex) {
  auto it = dbl.rungs_by_vertex.find(vertex);
  if (it == dbl.rungs_by_vertex.end() || it->second.size() != 1)
    throw PreconditionError("doubling needs a boundary circle visiting each crossing preimage once");
  return it->second[0];
}

}  // namespace

StandardComplex double_complex(const StandardComplex& k) {
  if (!k.boundary) throw PreconditionError("doubling needs a complex with boundary");
  StandardComplex src = k;
  if (!src.surface.normalize_orientation())
    throw PreconditionError("doubling needs an orientable complex");
  {
    auto an = src.surface.analyze();
    for (const auto& comp : an.components)
      if (!comp.genus || *comp.genus != 0)
        throw PreconditionError("doubling needs genus 0 on every component");
  }

  DoubledMap dbl = src.surface.make_double();
  const int off = dbl.mirror_dart_offset;

  StandardComplex out;
  out.surface = dbl.map;
  for (int label : src.boundary->crossings())
    out.section_markers.push_back(std::to_string(label));

  for (const auto& l : src.lines) {
    if (line_side(l.kind) == LineSide::interior) {
      out.lines.push_back(l);
      DoubleLine mir = l;
      mir.id = l.id + "*";
      for (auto& w : mir.walks) w = mirrored_walk(w, off);
      out.lines.push_back(std::move(mir));
      continue;
    }
    if (l.kind == LineKind::crossing_crossing) {
      DoubleLine conv;
      conv.id = l.id;
      conv.kind = LineKind::cyclic;
      conv.ident_offset = 0;
      conv.ident_reversed = false;
      for (const auto& w : l.walks) {
        int vs = src.surface.vertex_of(w.front());
        int ve = src.surface.head_vertex(w.back());
        conv.walks.push_back(walk_through_double(out.surface, w, off, the_rung(dbl, vs),
                                                 the_rung(dbl, ve)));
      }
      out.lines.push_back(std::move(conv));
    } else {  // crossing_cusp -> cusp_cusp through the mirror
      DoubleLine conv;
      conv.id = l.id;
      conv.kind = LineKind::cusp_cusp;
      const auto& w = l.walks[0];
      int vs = src.surface.vertex_of(w.front());
      int ve = src.surface.head_vertex(w.back());
      std::vector<int> W = walk_through_double(out.surface, w, off, the_rung(dbl, vs),
                                               the_rung(dbl, ve));
      conv.walks.push_back(std::move(W));
      out.lines.push_back(std::move(conv));
    }
  }
  for (const auto& c : src.cusps) {
    out.cusps.push_back(c);
    if (line_side(src.line(c.line_id).kind) == LineSide::interior) {
      out.cusps.push_back({c.id + "*", c.vertex_dart + off, c.line_id + "*"});
    } else {
      out.cusps.push_back({c.id + "*", c.vertex_dart + off, c.line_id});
    }
  }
  for (const auto& t : src.triples) {
    out.triples.push_back(t);
    TriplePoint mir = t;
    mir.id = t.id + "*";
    for (auto& lid : mir.line_ids)
      if (line_side(src.line(lid).kind) == LineSide::interior) lid += "*";
    for (auto& d : mir.point_darts) d += off;
    out.triples.push_back(std::move(mir));
  }

  // rebalance converted cusp lines so the branch vertices are antipodal
  for (auto& l : out.lines) {
    if (l.kind != LineKind::cusp_cusp) continue;
    std::vector<int> branch;
    for (const auto& c : out.cusps)
      if (c.line_id == l.id) branch.push_back(out.surface.vertex_of(c.vertex_dart));
    if (branch.size() != 2) continue;
    auto& W = l.walks[0];
    for (;;) {
      int L = static_cast<int>(W.size());
      int p0 = walk_position_of_vertex(out.surface, W, branch[0]);
      int p1 = walk_position_of_vertex(out.surface, W, branch[1]);
      if (p0 < 0 || p1 < 0) throw InternalDefectError("lost a branch vertex while doubling");
      if (p0 > p1) std::swap(p0, p1);
      int arc1 = p1 - p0, arc2 = L - arc1;
      if (arc1 == arc2) break;
      // subdivide an edge in the shorter arc
      int at = arc1 < arc2 ? p0 : p1;
      auto [cont, other] = out.surface.subdivide_edge(W[at]);
      (void)other;
      W.insert(W.begin() + at + 1, cont);
      // subdividing appended darts only; existing references survive
    }
  }
  validate_complex(out);
  return out;
}

}  // namespace fkt
