#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fkt/errors.hpp"

namespace fkt {

struct DoubledMap;

// Combinatorial surface: darts with an edge involution alpha, vertex
// rotations, and an edge twist bit.  With all twists zero this is an
// oriented rotation system; twists appear when a re-gluing reverses
// orientation, so non-orientable surgery results stay representable.
// Holes (boundary circles) are faces marked through `free` darts.
class SurfaceMap {
public:
  SurfaceMap() = default;
  // alpha_pairs must partition 0..n-1; rotations must list every dart once.
  static SurfaceMap from_parts(int n_darts,
                               const std::vector<std::pair<int, int>>& alpha_pairs,
                               std::vector<std::vector<int>> rotations,
                               const std::vector<std::pair<int, int>>& twisted_edges,
                               std::vector<int> free_darts);

  int dart_count() const { return static_cast<int>(alpha_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int vertex_count() const { return static_cast<int>(rot_.size()); }
  int alpha(int d) const { return alpha_[d]; }
  bool twisted(int d) const { return twist_[d] != 0; }
  int vertex_of(int d) const { return vertex_of_[d]; }
  int head_vertex(int d) const { return vertex_of_[alpha_[d]]; }
  int sigma_next(int d) const { return next_[d]; }
  int sigma_prev(int d) const { return prev_[d]; }
  const std::vector<std::vector<int>>& rotations() const { return rot_; }
  const std::vector<int>& free_darts() const { return free_; }
  bool has_twists() const;

  // face structure over flags (dart, side)
  struct FaceInfo {
    int face_count = 0;
    std::vector<int> face_of_dart;                // dart -> face class id
    std::vector<std::vector<int>> walk;           // class id -> dart sequence of one orbit
    std::vector<std::uint8_t> is_hole;            // class id -> marked as boundary
  };
  FaceInfo faces() const;

  struct ComponentReport {
    int vertices = 0, edges = 0, faces = 0, holes = 0;
    int chi = 0;
    bool orientable = true;
    std::optional<int> genus;  // present iff orientable
  };
  struct Analysis {
    FaceInfo face_info;
    std::vector<int> comp_of_dart;
    std::vector<ComponentReport> components;
    int chi_total = 0;
    bool all_orientable = true;
    std::optional<int> total_genus;
  };
  Analysis analyze() const;
  int euler_characteristic() const;

  void flip_vertex(int v);
  // Clears twists on every orientable component; returns true if the whole
  // map is orientable.
  bool normalize_orientation();

  // Checks alpha involution and rotation structure; throws ValidationError.
  void validate_structure() const;
  // Walk sanity: consecutive darts, distinct edges and base vertices,
  // two-sided (even twist sum); `closed` demands head of the last dart
  // equals base of the first.
  void validate_walk(const std::vector<int>& walk, bool closed,
                     const std::string& what) const;

  // Cut along two aligned vertex-disjoint closed walks of equal length and
  // cross-glue the banks.  same_side=false glues each left bank to the
  // other walk's right bank; same_side=true glues left to left and right
  // to right, flipping one side.  Returns the dart remap (old -> new,
  // -1 = retired) over the pre-call dart count.
  std::vector<int> splice_parallel_walks(const std::vector<int>& walk1,
                                         const std::vector<int>& walk2,
                                         bool same_side);

  // Cut along one closed walk of even length and re-glue across the
  // reflection pairing position j <-> L-j (fixed points 0 and L/2).
  // split=false re-joins the banks crosswise (chi preserved); split=true
  // folds each bank onto itself (chi rises by 2, fixed vertices split).
  std::vector<int> fold_walk(const std::vector<int>& walk, bool split);

  // Degree-2 subdivision of the edge of dart d. The new continuation dart
  // (to be inserted after d in any walk) is returned as .first; .second
  // continues alpha(d).
  std::pair<int, int> subdivide_edge(int d);

  // Mirror double glued along every hole with a collar of rung edges.
  DoubledMap make_double() const;

private:
  std::vector<int> alpha_;
  std::vector<std::uint8_t> twist_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> free_;

  // derived
  std::vector<int> vertex_of_, next_, prev_;

  void rebuild_derived();
  void toggle_edge(int d) { twist_[d] ^= 1; twist_[alpha_[d]] ^= 1; }

  struct Bank {
    std::vector<int> fwd;  // fwd[t]: forward dart of bank edge t, based at bank vertex t
  };
  // Opens the map along a closed walk; the left bank keeps the original
  // vertices and darts, the right bank gets fresh ones.  Rotation lists of
  // bank vertices are left in gap-linear order.
  std::pair<Bank, Bank> cut_closed_walk(const std::vector<int>& walk);
  void glue_pair(const Bank& a, const Bank& b,
                 const std::vector<std::pair<int, int>>& vertex_pairs,
                 const std::vector<std::pair<int, int>>& fwd_renames, bool flip_b);
  void glue_self_reflect(const Bank& bank);
  std::vector<int> compact(const std::vector<std::uint8_t>& dead_dart);

  friend class MapBuilder;
};

struct DoubledMap {
  SurfaceMap map;
  int mirror_dart_offset = 0;    // dart d -> mirror dart d + offset
  int mirror_vertex_offset = 0;  // vertex v -> mirror vertex v + offset
  std::map<int, std::vector<int>> rungs_by_vertex;  // base vertex -> rung darts
};

}  // namespace fkt
