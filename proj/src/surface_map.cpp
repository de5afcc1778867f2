#include "fkt/surface_map.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fkt {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SurfaceMap SurfaceMap::from_parts(int n_darts,
                                  const std::vector<std::pair<int, int>>& alpha_pairs,
                                  std::vector<std::vector<int>> rotations,
                                  const std::vector<std::pair<int, int>>& twisted_edges,
                                  std::vector<int> free_darts) {
  SurfaceMap m;
  m.alpha_.assign(n_darts, -1);
  m.twist_.assign(n_darts, 0);
  for (auto [a, b] : alpha_pairs) {
    if (a < 0 || a >= n_darts || b < 0 || b >= n_darts || a == b)
      throw ValidationError("alpha", "bad dart pair");
    if (m.alpha_[a] != -1 || m.alpha_[b] != -1)
      throw ValidationError("alpha", "dart paired twice");
    m.alpha_[a] = b;
    m.alpha_[b] = a;
  }
  for (int d = 0; d < n_darts; ++d)
    if (m.alpha_[d] == -1) throw ValidationError("alpha", "unpaired dart " + std::to_string(d));
  for (auto [a, b] : twisted_edges) {
    if (a < 0 || a >= n_darts || m.alpha_[a] != b)
      throw ValidationError("twists", "twist entry is not an edge");
    m.twist_[a] = m.twist_[b] = 1;
  }
  m.rot_ = std::move(rotations);
  std::sort(free_darts.begin(), free_darts.end());
  free_darts.erase(std::unique(free_darts.begin(), free_darts.end()), free_darts.end());
  for (int d : free_darts)
    if (d < 0 || d >= n_darts) throw ValidationError("free", "free dart out of range");
  m.free_ = std::move(free_darts);
  m.rebuild_derived();
  m.validate_structure();
  return m;
}

void SurfaceMap::rebuild_derived() {
  const int n = dart_count();
  vertex_of_.assign(n, -1);
  next_.assign(n, -1);
  prev_.assign(n, -1);
  // drop dead (empty) vertices
  std::vector<std::vector<int>> live;
  live.reserve(rot_.size());
  for (auto& r : rot_)
    if (!r.empty()) live.push_back(std::move(r));
  rot_ = std::move(live);
  for (int v = 0; v < static_cast<int>(rot_.size()); ++v) {
    const auto& r = rot_[v];
    const int k = static_cast<int>(r.size());
    for (int i = 0; i < k; ++i) {
      int d = r[i];
      if (d < 0 || d >= n) throw ValidationError("sigma", "dart out of range");
      if (vertex_of_[d] != -1) throw ValidationError("sigma", "dart listed twice");
      vertex_of_[d] = v;
      next_[d] = r[(i + 1) % k];
      prev_[d] = r[(i - 1 + k) % k];
    }
  }
  for (int d = 0; d < n; ++d)
    if (vertex_of_[d] == -1) throw ValidationError("sigma", "dart missing from rotations");
}

void SurfaceMap::validate_structure() const {
  const int n = dart_count();
  if (n % 2 != 0) throw ValidationError("darts", "odd dart count");
  for (int d = 0; d < n; ++d) {
    if (alpha_[d] < 0 || alpha_[d] >= n || alpha_[alpha_[d]] != d || alpha_[d] == d)
      throw ValidationError("alpha", "not a fixed-point-free involution");
    if (twist_[d] != twist_[alpha_[d]])
      throw ValidationError("twists", "twist bits disagree across an edge");
  }
}

bool SurfaceMap::has_twists() const {
  for (auto t : twist_)
    if (t) return true;
  return false;
}

SurfaceMap::FaceInfo SurfaceMap::faces() const {
  const int n = dart_count();
  const int nflags = 2 * n;
  std::vector<int> orbit_of(nflags, -1);
  std::vector<std::vector<int>> orbit_flags;
  auto next_flag = [&](int flag) {
    int d = flag >> 1, s = flag & 1;
    int s2 = s ^ twist_[d];
    int d2 = alpha_[d];
    int nd = s2 == 0 ? next_[d2] : prev_[d2];
    return nd * 2 + s2;
  };
  for (int f = 0; f < nflags; ++f) {
    if (orbit_of[f] != -1) continue;
    int id = static_cast<int>(orbit_flags.size());
    orbit_flags.emplace_back();
    int cur = f;
    do {
      orbit_of[cur] = id;
      orbit_flags[id].push_back(cur);
      cur = next_flag(cur);
    } while (cur != f);
  }
  // pair each orbit with its reversal (same face walked backwards: alpha'd
  // darts, flipped side); classes are the pairs
  FaceInfo info;
  const int norb = static_cast<int>(orbit_flags.size());
  std::vector<int> class_of_orbit(norb, -1);
  auto reversed_flag = [&](int flag) {
    int d = flag >> 1, s = flag & 1;
    return 2 * alpha_[d] + (1 - (s ^ twist_[d]));
  };
  for (int o = 0; o < norb; ++o) {
    if (class_of_orbit[o] != -1) continue;
    int partner = orbit_of[reversed_flag(orbit_flags[o][0])];
    int id = info.face_count++;
    class_of_orbit[o] = id;
    class_of_orbit[partner] = id;
  }
  // the face on the side of dart d is the class of flag (d, 0)
  info.face_of_dart.assign(n, -1);
  for (int d = 0; d < n; ++d) info.face_of_dart[d] = class_of_orbit[orbit_of[2 * d]];
  // representative walk per class: the orbit of its smallest side-0 flag
  info.walk.assign(info.face_count, {});
  std::vector<int> min_flag(info.face_count, nflags);
  for (int d = 0; d < n; ++d) {
    int c = info.face_of_dart[d];
    min_flag[c] = std::min(min_flag[c], 2 * d);
  }
  for (int c = 0; c < info.face_count; ++c) {
    if (min_flag[c] == nflags)
      throw InternalDefectError("face class without a side-0 flag");
    for (int flag : orbit_flags[orbit_of[min_flag[c]]])
      info.walk[c].push_back(flag >> 1);
  }
  info.is_hole.assign(info.face_count, 0);
  for (int d : free_) info.is_hole[info.face_of_dart[d]] = 1;
  return info;
}

SurfaceMap::Analysis SurfaceMap::analyze() const {
  const int n = dart_count();
  Analysis a;
  a.face_info = faces();
  UnionFind uf(n);
  for (int d = 0; d < n; ++d) {
    uf.unite(d, alpha_[d]);
    uf.unite(d, next_[d]);
  }
  std::map<int, int> comp_id;
  a.comp_of_dart.assign(n, -1);
  for (int d = 0; d < n; ++d) {
    int root = uf.find(d);
    auto it = comp_id.find(root);
    if (it == comp_id.end()) it = comp_id.emplace(root, static_cast<int>(comp_id.size())).first;
    a.comp_of_dart[d] = it->second;
  }
  const int ncomp = static_cast<int>(comp_id.size());
  a.components.assign(ncomp, {});
  for (const auto& r : rot_)
    if (!r.empty()) ++a.components[a.comp_of_dart[r[0]]].vertices;
  for (int d = 0; d < n; ++d)
    if (d < alpha_[d]) ++a.components[a.comp_of_dart[d]].edges;
  for (int c = 0; c < a.face_info.face_count; ++c) {
    int comp = a.comp_of_dart[a.face_info.walk[c][0]];
    ++a.components[comp].faces;
    if (a.face_info.is_hole[c]) ++a.components[comp].holes;
  }
  // orientability: vertex signs must satisfy o(u) xor o(w) == twist across edges
  const int nv = vertex_count();
  std::vector<int> sign(nv, -1);
  std::vector<std::uint8_t> comp_orientable(ncomp, 1);
  for (int v0 = 0; v0 < nv; ++v0) {
    if (sign[v0] != -1 || rot_[v0].empty()) continue;
    sign[v0] = 0;
    std::vector<int> stack{v0};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int d : rot_[v]) {
        int w = vertex_of_[alpha_[d]];
        int want = sign[v] ^ twist_[d];
        if (sign[w] == -1) {
          sign[w] = want;
          stack.push_back(w);
        } else if (sign[w] != want) {
          comp_orientable[a.comp_of_dart[d]] = 0;
        }
      }
    }
  }
  a.chi_total = 0;
  long long genus_sum = 0;
  for (int c = 0; c < ncomp; ++c) {
    auto& r = a.components[c];
    r.chi = r.vertices - r.edges + (r.faces - r.holes);
    r.orientable = comp_orientable[c] != 0;
    if (r.orientable) {
      int num = 2 - r.chi - r.holes;
      if (num < 0 || num % 2 != 0)
        throw InternalDefectError("orientable component with impossible genus data");
      r.genus = num / 2;
      genus_sum += r.genus.value();
    } else {
      a.all_orientable = false;
    }
    a.chi_total += r.chi;
  }
  if (a.all_orientable) a.total_genus = static_cast<int>(genus_sum);
  return a;
}

int SurfaceMap::euler_characteristic() const { return analyze().chi_total; }

void SurfaceMap::flip_vertex(int v) {
  std::reverse(rot_[v].begin(), rot_[v].end());
  for (int d : rot_[v]) toggle_edge(d);
  rebuild_derived();
}

bool SurfaceMap::normalize_orientation() {
  Analysis a = analyze();
  const int nv = vertex_count();
  std::vector<int> sign(nv, -1);
  std::vector<std::uint8_t> comp_ok(a.components.size(), 1);
  for (std::size_t c = 0; c < a.components.size(); ++c)
    comp_ok[c] = a.components[c].orientable ? 1 : 0;
  for (int v0 = 0; v0 < nv; ++v0) {
    if (sign[v0] != -1 || rot_[v0].empty()) continue;
    if (!comp_ok[a.comp_of_dart[rot_[v0][0]]]) continue;
    sign[v0] = 0;
    std::vector<int> stack{v0};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int d : rot_[v]) {
        int w = vertex_of_[alpha_[d]];
        int want = sign[v] ^ twist_[d];
        if (sign[w] == -1) {
          sign[w] = want;
          stack.push_back(w);
        }
      }
    }
  }
  bool changed = false;
  for (int v = 0; v < nv; ++v) {
    if (sign[v] == 1) {
      std::reverse(rot_[v].begin(), rot_[v].end());
      for (int d : rot_[v]) toggle_edge(d);
      changed = true;
    }
  }
  if (changed) rebuild_derived();
  return a.all_orientable;
}

void SurfaceMap::validate_walk(const std::vector<int>& walk, bool closed,
                               const std::string& what) const {
  if (walk.empty()) throw ValidationError(what, "empty walk");
  const int n = dart_count();
  std::set<int> edges, verts;
  int twist_sum = 0;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    int d = walk[i];
    if (d < 0 || d >= n) throw ValidationError(what, "walk dart out of range");
    if (!edges.insert(std::min(d, alpha_[d])).second)
      throw ValidationError(what, "walk repeats an edge");
    if (!verts.insert(vertex_of_[d]).second)
      throw ValidationError(what, "walk revisits a vertex");
    twist_sum += twist_[d];
    if (i + 1 < walk.size() && vertex_of_[walk[i + 1]] != head_vertex(d))
      throw ValidationError(what, "walk darts are not consecutive");
  }
  if (closed) {
    if (head_vertex(walk.back()) != vertex_of_[walk.front()])
      throw ValidationError(what, "walk does not close up");
    if (twist_sum % 2 != 0)
      throw ValidationError(what, "walk is one-sided (odd twist count)");
  }
}

std::pair<SurfaceMap::Bank, SurfaceMap::Bank> SurfaceMap::cut_closed_walk(
    const std::vector<int>& walk) {
  const int L = static_cast<int>(walk.size());
  // read everything first
  std::vector<int> vert(L), prev_back(L);
  std::vector<std::vector<int>> P(L), Q(L);
  for (int t = 0; t < L; ++t) {
    vert[t] = vertex_of_[walk[t]];
    prev_back[t] = alpha_[walk[(t - 1 + L) % L]];
    const auto& r = rot_[vert[t]];
    const int k = static_cast<int>(r.size());
    int at = static_cast<int>(std::find(r.begin(), r.end(), walk[t]) - r.begin());
    std::vector<int> rotated(k);
    for (int i = 0; i < k; ++i) rotated[i] = r[(at + i) % k];
    int pb = static_cast<int>(std::find(rotated.begin(), rotated.end(), prev_back[t]) -
                              rotated.begin());
    P[t].assign(rotated.begin() + 1, rotated.begin() + pb);
    Q[t].assign(rotated.begin() + pb + 1, rotated.end());
  }
  // fresh darts for the right-bank edge copies
  Bank bl, br;
  bl.fwd = walk;
  br.fwd.resize(L);
  std::vector<int> g(L), ag(L);
  for (int t = 0; t < L; ++t) {
    g[t] = dart_count();
    ag[t] = g[t] + 1;
    alpha_.push_back(ag[t]);
    alpha_.push_back(g[t]);
    twist_.push_back(twist_[walk[t]]);
    twist_.push_back(twist_[walk[t]]);
    br.fwd[t] = g[t];
  }
  for (int t = 0; t < L; ++t) {
    // left bank keeps the vertex slot, gap-linear rotation
    std::vector<int> lrot;
    lrot.push_back(walk[t]);
    lrot.insert(lrot.end(), P[t].begin(), P[t].end());
    lrot.push_back(prev_back[t]);
    rot_[vert[t]] = std::move(lrot);
    // right bank gets a fresh vertex, gap-linear: (ag[t-1], Q, g[t])
    std::vector<int> rrot;
    rrot.push_back(ag[(t - 1 + L) % L]);
    rrot.insert(rrot.end(), Q[t].begin(), Q[t].end());
    rrot.push_back(g[t]);
    rot_.push_back(std::move(rrot));
  }
  rebuild_derived();
  return {bl, br};
}

namespace {

// Concatenate two gap-linear rotation lists, fusing the doubly-listed
// seam darts (first occurrence wins).
std::vector<int> fuse_rotations(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> merged;
  merged.reserve(a.size() + b.size());
  std::set<int> seen;
  for (const auto* part : {&a, &b})
    for (int d : *part)
      if (seen.insert(d).second) merged.push_back(d);
  return merged;
}

}  // namespace

void SurfaceMap::glue_pair(const Bank& /*a*/, const Bank& b,
                           const std::vector<std::pair<int, int>>& vertex_pairs,
                           const std::vector<std::pair<int, int>>& fwd_renames,
                           bool flip_b) {
  if (flip_b) {
    std::set<int> bverts;
    for (int d : b.fwd) bverts.insert(vertex_of_[d]);
    for (int v : bverts) {
      std::reverse(rot_[v].begin(), rot_[v].end());
      for (int d : rot_[v]) toggle_edge(d);
    }
  }
  std::map<int, int> ren;
  for (auto [bd, target] : fwd_renames) {
    int t = twist_[bd] ^ twist_[target];
    twist_[target] = twist_[alpha_[target]] = static_cast<std::uint8_t>(t);
    ren[bd] = target;
    ren[alpha_[bd]] = alpha_[target];
  }
  std::set<int> bverts;
  for (int d : b.fwd) bverts.insert(vertex_of_[d]);
  for (int v : bverts)
    for (int& d : rot_[v]) {
      auto it = ren.find(d);
      if (it != ren.end()) d = it->second;
    }
  for (auto [va, vb] : vertex_pairs) {
    rot_[va] = fuse_rotations(rot_[va], rot_[vb]);
    rot_[vb].clear();
  }
}

void SurfaceMap::glue_self_reflect(const Bank& bank) {
  const int L = static_cast<int>(bank.fwd.size());
  std::vector<int> vert(L);
  for (int t = 0; t < L; ++t) vert[t] = vertex_of_[bank.fwd[t]];
  std::map<int, int> ren;
  for (int t = 0; t < L - 1 - t; ++t) {
    int src = bank.fwd[L - 1 - t], target = bank.fwd[t];
    int tw = twist_[src] ^ twist_[target];
    twist_[target] = twist_[alpha_[target]] = static_cast<std::uint8_t>(tw);
    ren[src] = alpha_[target];
    ren[alpha_[src]] = target;
  }
  for (int t = 0; t < L; ++t)
    for (int& d : rot_[vert[t]]) {
      auto it = ren.find(d);
      if (it != ren.end()) d = it->second;
    }
  for (int j = 1; 2 * j < L; ++j) {
    rot_[vert[j]] = fuse_rotations(rot_[vert[j]], rot_[vert[L - j]]);
    rot_[vert[L - j]].clear();
  }
  // fixed positions 0 and L/2: fuse their own doubled seam slot
  for (int j : {0, L / 2}) {
    rot_[vert[j]] = fuse_rotations(rot_[vert[j]], {});
  }
}

std::vector<int> SurfaceMap::compact(const std::vector<std::uint8_t>& dead_dart) {
  const int n = dart_count();
  std::vector<int> remap(n, -1);
  int next_id = 0;
  for (int d = 0; d < n; ++d)
    if (!dead_dart[d]) remap[d] = next_id++;
  std::vector<int> alpha2(next_id);
  std::vector<std::uint8_t> twist2(next_id);
  for (int d = 0; d < n; ++d) {
    if (remap[d] < 0) continue;
    alpha2[remap[d]] = remap[alpha_[d]];
    twist2[remap[d]] = twist_[d];
  }
  for (auto& r : rot_)
    for (int& d : r) {
      d = remap[d];
      if (d < 0) throw InternalDefectError("retired dart still referenced in a rotation");
    }
  for (int& d : free_) {
    d = remap[d];
    if (d < 0) throw InternalDefectError("retired dart still marked free");
  }
  alpha_ = std::move(alpha2);
  twist_ = std::move(twist2);
  rebuild_derived();
  validate_structure();
  return remap;
}

std::vector<int> SurfaceMap::splice_parallel_walks(const std::vector<int>& walk1,
                                                   const std::vector<int>& walk2,
                                                   bool same_side) {
  validate_walk(walk1, true, "walk");
  validate_walk(walk2, true, "walk");
  if (walk1.size() != walk2.size())
    throw ValidationError("walk", "aligned walks differ in length");
  std::set<int> v1;
  for (int d : walk1) v1.insert(vertex_of_[d]);
  for (int d : walk2)
    if (v1.count(vertex_of_[d]))
      throw ValidationError("walk", "the two walks share a vertex");
  const int n0 = dart_count();
  const int L = static_cast<int>(walk1.size());

  auto [l1, r1] = cut_closed_walk(walk1);
  auto [l2, r2] = cut_closed_walk(walk2);

  auto pairs = [&](const Bank& a, const Bank& b) {
    std::vector<std::pair<int, int>> vp;
    for (int j = 0; j < L; ++j) vp.emplace_back(vertex_of_[a.fwd[j]], vertex_of_[b.fwd[j]]);
    return vp;
  };
  auto renames = [&](const Bank& a, const Bank& b) {
    std::vector<std::pair<int, int>> rn;
    for (int j = 0; j < L; ++j) rn.emplace_back(b.fwd[j], a.fwd[j]);
    return rn;
  };
  if (!same_side) {
    glue_pair(l1, r2, pairs(l1, r2), renames(l1, r2), false);
    glue_pair(r1, l2, pairs(r1, l2), renames(r1, l2), false);
  } else {
    glue_pair(l1, l2, pairs(l1, l2), renames(l1, l2), true);
    glue_pair(r1, r2, pairs(r1, r2), renames(r1, r2), true);
  }
  std::vector<std::uint8_t> dead(dart_count(), 0);
  auto retire = [&](const Bank& b) {
    for (int d : b.fwd) {
      dead[d] = 1;
      dead[alpha_[d]] = 1;
    }
  };
  if (!same_side) {
    retire(r2);
    retire(l2);
  } else {
    retire(l2);
    retire(r2);
  }
  auto remap = compact(dead);
  remap.resize(n0);
  return remap;
}

std::vector<int> SurfaceMap::fold_walk(const std::vector<int>& walk, bool split) {
  validate_walk(walk, true, "walk");
  const int L = static_cast<int>(walk.size());
  if (L % 2 != 0) throw ValidationError("walk", "fold needs an even walk length");
  const int n0 = dart_count();

  auto [bl, br] = cut_closed_walk(walk);
  std::vector<std::uint8_t> dead_mark;
  if (split) {
    glue_self_reflect(bl);
    glue_self_reflect(br);
    dead_mark.assign(dart_count(), 0);
    for (int t = 0; t < L - 1 - t; ++t) {
      int d = bl.fwd[L - 1 - t];
      dead_mark[d] = 1;
      dead_mark[alpha_[d]] = 1;
      int e = br.fwd[L - 1 - t];
      dead_mark[e] = 1;
      dead_mark[alpha_[e]] = 1;
    }
  } else {
    // the reflection correspondence between opposite banks reverses the
    // traversal, so the right bank must be flipped to glue coherently
    std::vector<std::pair<int, int>> vp, rn;
    for (int j = 0; j < L; ++j)
      vp.emplace_back(vertex_of_[bl.fwd[j]], vertex_of_[br.fwd[(L - j) % L]]);
    for (int j = 0; j < L; ++j) rn.emplace_back(br.fwd[L - 1 - j], alpha_[bl.fwd[j]]);
    glue_pair(bl, br, vp, rn, true);
    dead_mark.assign(dart_count(), 0);
    for (int j = 0; j < L; ++j) {
      int d = br.fwd[j];
      dead_mark[d] = 1;
      dead_mark[alpha_[d]] = 1;
    }
  }
  auto remap = compact(dead_mark);
  remap.resize(n0);
  return remap;
}

std::pair<int, int> SurfaceMap::subdivide_edge(int d) {
  int dprime = alpha_[d];
  int p = dart_count(), q = p + 1;
  alpha_.push_back(d);       // alpha[p] = d
  alpha_.push_back(dprime);  // alpha[q] = dprime
  twist_.push_back(twist_[d]);
  twist_.push_back(0);
  alpha_[d] = p;
  alpha_[dprime] = q;
  twist_[dprime] = 0;
  rot_.push_back({p, q});
  rebuild_derived();
  validate_structure();
  return {q, p};
}

DoubledMap SurfaceMap::make_double() const {
  if (has_twists())
    throw PreconditionError("doubling needs an orientation-normalized map");
  const int n = dart_count();
  const int nv = vertex_count();
  DoubledMap out;
  out.mirror_dart_offset = n;
  out.mirror_vertex_offset = nv;

  SurfaceMap m;
  m.alpha_.assign(2 * n, -1);
  m.twist_.assign(2 * n, 0);
  for (int d = 0; d < n; ++d) {
    m.alpha_[d] = alpha_[d];
    m.alpha_[d + n] = alpha_[d] + n;
  }
  m.rot_.resize(2 * nv);
  for (int v = 0; v < nv; ++v) {
    m.rot_[v] = rot_[v];
    std::vector<int> mir;
    mir.reserve(rot_[v].size());
    for (auto it = rot_[v].rbegin(); it != rot_[v].rend(); ++it) mir.push_back(*it + n);
    m.rot_[v + nv] = std::move(mir);
  }

  FaceInfo fi = faces();
  for (int c = 0; c < fi.face_count; ++c) {
    if (!fi.is_hole[c]) continue;
    const auto& hw = fi.walk[c];
    const int L = static_cast<int>(hw.size());
    std::vector<int> rung(L);
    for (int i = 0; i < L; ++i) {
      int u = static_cast<int>(m.alpha_.size());
      int v = u + 1;
      m.alpha_.push_back(v);
      m.alpha_.push_back(u);
      m.twist_.push_back(0);
      m.twist_.push_back(0);
      rung[i] = u;
    }
    for (int i = 0; i < L; ++i) {
      int f = hw[i];
      int fnext = hw[(i + 1) % L];
      int head = vertex_of_[alpha_[f]];
      // original side: rung after alpha(f)
      auto& r0 = m.rot_[head];
      auto it0 = std::find(r0.begin(), r0.end(), alpha_[f]);
      r0.insert(it0 + 1, rung[i]);
      // mirror side: partner after mirror(fnext)
      auto& r1 = m.rot_[head + nv];
      auto it1 = std::find(r1.begin(), r1.end(), fnext + n);
      r1.insert(it1 + 1, m.alpha_[rung[i]]);
      out.rungs_by_vertex[head].push_back(rung[i]);
    }
  }
  m.rebuild_derived();
  m.validate_structure();
  out.map = std::move(m);
  return out;
}

}  // namespace fkt
