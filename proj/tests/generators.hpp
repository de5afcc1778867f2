#pragma once

// Random valid complexes with interior double lines, used by the surgery
// property tests: parallel circle pairs and fold circles on spheres, tori
// and discs, with random chord decorations around the walk vertices.

#include <random>
#include <stdexcept>
#include <vector>

#include "fkt/complex.hpp"
#include "fkt/surface_map.hpp"

namespace fkt_test {

struct SurfaceWithWalks {
  fkt::SurfaceMap map;
  std::vector<std::vector<int>> walks;
};

// two parallel L-gons joined by rungs; sphere (caps) or torus (second rungs)
inline SurfaceWithWalks two_circle_surface(int L, bool torus) {
  using std::pair;
  std::vector<pair<int, int>> alpha;
  auto edge = [&](int) {
    int d = static_cast<int>(alpha.size()) * 2;
    alpha.push_back({d, d + 1});
    return d;
  };
  std::vector<int> a(L), b(L), r(L), s(L);
  for (int i = 0; i < L; ++i) a[i] = edge(0);
  for (int i = 0; i < L; ++i) b[i] = edge(0);
  for (int i = 0; i < L; ++i) r[i] = edge(0);
  if (torus)
    for (int i = 0; i < L; ++i) s[i] = edge(0);
  std::vector<std::vector<int>> rot;
  for (int i = 0; i < L; ++i) {
    int prev = (i + L - 1) % L;
    std::vector<int> ru{a[i], r[i], a[prev] + 1};
    if (torus) ru.push_back(s[i]);
    rot.push_back(ru);
  }
  for (int i = 0; i < L; ++i) {
    int prev = (i + L - 1) % L;
    std::vector<int> rw{b[prev] + 1, r[i] + 1, b[i]};
    if (torus) rw.push_back(s[i] + 1);
    rot.push_back(rw);
  }
  SurfaceWithWalks out;
  out.map = fkt::SurfaceMap::from_parts(static_cast<int>(alpha.size()) * 2, alpha, rot, {}, {});
  out.walks = {a, b};
  int chi = out.map.euler_characteristic();
  if (chi != (torus ? 0 : 2))
    throw std::logic_error("two_circle_surface: unexpected Euler characteristic");
  return out;
}

// one circle of even length through two designated branch positions
inline SurfaceWithWalks fold_circle_surface(int L, bool torus) {
  using std::pair;
  std::vector<pair<int, int>> alpha;
  auto edge = [&]() {
    int d = static_cast<int>(alpha.size()) * 2;
    alpha.push_back({d, d + 1});
    return d;
  };
  std::vector<int> c(L), v(L);
  for (int i = 0; i < L; ++i) c[i] = edge();
  if (torus)
    for (int i = 0; i < L; ++i) v[i] = edge();
  std::vector<std::vector<int>> rot;
  for (int i = 0; i < L; ++i) {
    int prev = (i + L - 1) % L;
    std::vector<int> ru{c[i], c[prev] + 1};
    if (torus) {
      ru = {c[i], v[i], c[prev] + 1, v[i] + 1};
    }
    rot.push_back(ru);
  }
  SurfaceWithWalks out;
  out.map = fkt::SurfaceMap::from_parts(static_cast<int>(alpha.size()) * 2, alpha, rot, {}, {});
  out.walks = {c};
  int chi = out.map.euler_characteristic();
  if (chi != (torus ? 0 : 2))
    throw std::logic_error("fold_circle_surface: unexpected Euler characteristic");
  return out;
}

// insert a chord between two corners of one interior face
inline void add_random_chord(fkt::SurfaceMap& m, std::mt19937& rng) {
  auto fi = m.faces();
  std::vector<int> candidates;
  for (int cl = 0; cl < fi.face_count; ++cl)
    if (!fi.is_hole[cl]) candidates.push_back(cl);
  if (candidates.empty()) return;
  int cl = candidates[rng() % candidates.size()];
  const auto& walk = fi.walk[cl];
  int d1 = walk[rng() % walk.size()];
  int d2 = walk[rng() % walk.size()];
  // rebuild the map with the chord inserted after alpha(d1) / alpha(d2)
  std::vector<std::pair<int, int>> alpha;
  for (int d = 0; d < m.dart_count(); ++d)
    if (d < m.alpha(d)) alpha.push_back({d, m.alpha(d)});
  int x = m.dart_count(), y = x + 1;
  alpha.push_back({x, y});
  std::vector<std::vector<int>> rot = m.rotations();
  auto insert_after = [&](int target, int fresh) {
    for (auto& r : rot)
      for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] == target) {
          r.insert(r.begin() + i + 1, fresh);
          return;
        }
    throw std::logic_error("corner dart not found");
  };
  insert_after(m.alpha(d1), x);
  insert_after(m.alpha(d2), y);
  std::vector<std::pair<int, int>> twists;
  for (int d = 0; d < m.dart_count(); ++d)
    if (d < m.alpha(d) && m.twisted(d)) twists.push_back({d, m.alpha(d)});
  std::vector<int> free = m.free_darts();
  m = fkt::SurfaceMap::from_parts(y + 1, alpha, rot, twists, free);
}

// hang a looped pocket off one interior face corner; the loop's inner face
// becomes a boundary circle with no crossings on it
inline int add_pocket(fkt::SurfaceMap& m, std::mt19937& rng) {
  auto fi = m.faces();
  std::vector<int> candidates;
  for (int cl = 0; cl < fi.face_count; ++cl)
    if (!fi.is_hole[cl]) candidates.push_back(cl);
  int cl = candidates[rng() % candidates.size()];
  int d1 = fi.walk[cl][rng() % fi.walk[cl].size()];
  std::vector<std::pair<int, int>> alpha;
  for (int d = 0; d < m.dart_count(); ++d)
    if (d < m.alpha(d)) alpha.push_back({d, m.alpha(d)});
  int stem = m.dart_count(), stem2 = stem + 1, l1 = stem + 2, l2 = stem + 3;
  alpha.push_back({stem, stem2});
  alpha.push_back({l1, l2});
  std::vector<std::vector<int>> rot = m.rotations();
  bool placed = false;
  for (auto& r : rot)
    for (std::size_t i = 0; i < r.size() && !placed; ++i)
      if (r[i] == m.alpha(d1)) {
        r.insert(r.begin() + i + 1, stem);
        placed = true;
      }
  if (!placed) throw std::logic_error("pocket corner not found");
  rot.push_back({stem2, l1, l2});
  std::vector<std::pair<int, int>> twists;
  for (int d = 0; d < m.dart_count(); ++d)
    if (d < m.alpha(d) && m.twisted(d)) twists.push_back({d, m.alpha(d)});
  std::vector<int> free = m.free_darts();
  free.push_back(l2);
  m = fkt::SurfaceMap::from_parts(l2 + 1, alpha, rot, twists, free);
  return l2;
}

// disjoint union, returning the dart offset of the second map
inline int append_map(fkt::SurfaceMap& m, const fkt::SurfaceMap& extra) {
  int off = m.dart_count();
  std::vector<std::pair<int, int>> alpha;
  for (int d = 0; d < m.dart_count(); ++d)
    if (d < m.alpha(d)) alpha.push_back({d, m.alpha(d)});
  for (int d = 0; d < extra.dart_count(); ++d)
    if (d < extra.alpha(d)) alpha.push_back({d + off, extra.alpha(d) + off});
  std::vector<std::vector<int>> rot = m.rotations();
  for (const auto& r : extra.rotations()) {
    std::vector<int> shifted;
    for (int d : r) shifted.push_back(d + off);
    rot.push_back(shifted);
  }
  std::vector<std::pair<int, int>> twists;
  for (int d = 0; d < m.dart_count(); ++d)
    if (d < m.alpha(d) && m.twisted(d)) twists.push_back({d, m.alpha(d)});
  for (int d = 0; d < extra.dart_count(); ++d)
    if (d < extra.alpha(d) && extra.twisted(d)) twists.push_back({d + off, extra.alpha(d) + off});
  std::vector<int> free = m.free_darts();
  for (int d : extra.free_darts()) free.push_back(d + off);
  m = fkt::SurfaceMap::from_parts(m.dart_count() + extra.dart_count(), alpha, rot, twists, free);
  return off;
}

struct FuzzInstance {
  fkt::StandardComplex complex;
  std::string line_id;
};

// one random smoothable instance: a cyclic or cusp-to-cusp interior line on
// a decorated sphere/torus/disc, possibly with extra components, possibly
// with the two circles on different components
inline FuzzInstance random_instance(unsigned seed) {
  std::mt19937 rng(seed);
  const int shape = rng() % 6;
  const int L = 1 + static_cast<int>(rng() % 4);
  fkt::StandardComplex k;
  fkt::DoubleLine line;
  line.id = "l";

  if (shape < 2 || shape == 5) {
    // cyclic line, both circles on one surface (sphere or torus)
    bool torus = shape == 1;
    auto sw = two_circle_surface(L, torus);
    k.surface = std::move(sw.map);
    line.kind = fkt::LineKind::cyclic;
    line.walks = sw.walks;
  } else if (shape == 2) {
    // cyclic line across two sphere components
    auto sphere_with_circle = [&](std::vector<int>& walk_out) {
      auto s = fold_circle_surface(std::max(2, L + (L % 2)), false);
      walk_out = s.walks[0];
      return s.map;
    };
    std::vector<int> w1, w2;
    fkt::SurfaceMap m1 = sphere_with_circle(w1);
    fkt::SurfaceMap m2 = sphere_with_circle(w2);
    int off = append_map(m1, m2);
    for (int& d : w2) d += off;
    k.surface = std::move(m1);
    line.kind = fkt::LineKind::cyclic;
    line.walks = {w1, w2};
  } else {
    // cusp-to-cusp fold circle on a sphere or torus
    bool torus = shape == 4;
    int Lc = 2 * L + 2;
    auto sw = fold_circle_surface(Lc, torus);
    k.surface = std::move(sw.map);
    line.kind = fkt::LineKind::cusp_cusp;
    line.walks = sw.walks;
    fkt::Cusp c1{"c1", sw.walks[0][0], "l"};
    fkt::Cusp c2{"c2", sw.walks[0][Lc / 2], "l"};
    k.cusps.push_back(c1);
    k.cusps.push_back(c2);
  }

  if (line.kind == fkt::LineKind::cyclic) {
    int Lw = static_cast<int>(line.walks[0].size());
    line.ident_offset = static_cast<int>(rng() % Lw);
    line.ident_reversed = rng() % 2 == 0;
  }

  // extra closed components (at most 3 components in total)
  int extras = static_cast<int>(rng() % (shape == 2 ? 2 : 3));
  for (int e = 0; e < extras; ++e)
    append_map(k.surface, fold_circle_surface(2, rng() % 2 == 0).map);

  // decorations around the surface
  int chords = static_cast<int>(rng() % 6);
  for (int c = 0; c < chords; ++c) add_random_chord(k.surface, rng);

  // sometimes a boundary pocket (disc-style instance); the boundary circle
  // count must match the surface component count, so single component only
  if (shape != 2 && extras == 0 && rng() % 3 == 0) {
    add_pocket(k.surface, rng);
    k.boundary = fkt::parse_gauss_code("()");
  }

  k.lines.push_back(line);
  fkt::validate_complex(k);
  return {std::move(k), "l"};
}

}  // namespace fkt_test
