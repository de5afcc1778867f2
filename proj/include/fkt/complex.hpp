#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fkt/diagram.hpp"
#include "fkt/slice.hpp"
#include "fkt/surface_map.hpp"

namespace fkt {

enum class LineKind { cyclic, cusp_cusp, crossing_crossing, crossing_cusp };
enum class LineSide { interior, boundary };

LineSide line_side(LineKind kind);
std::string to_string(LineKind kind);

// A double line of a standard complex, given by its preimage walks on the
// surface map.  cyclic: two closed walks, identified point for point via
// (ident_offset, ident_reversed).  cusp_cusp: one closed walk through the
// two branch vertices, which sit at antipodal walk positions.
// crossing_crossing: two index-aligned open walks from a preimage of
// ends[0] to a preimage of ends[1].  crossing_cusp: one open walk between
// the two preimages of ends[0], through the branch vertex.
struct DoubleLine {
  std::string id;
  LineKind kind = LineKind::cyclic;
  std::vector<std::vector<int>> walks;
  int ident_offset = 0;
  bool ident_reversed = false;
  std::vector<int> end_crossings;
};

struct Cusp {
  std::string id;
  int vertex_dart = 0;  // any dart based at the branch vertex
  std::string line_id;
};

struct TriplePoint {
  std::string id;
  std::array<std::string, 3> line_ids;
  std::array<int, 3> point_darts;  // one dart per preimage vertex
};

struct StandardComplex {
  SurfaceMap surface;
  std::optional<Diagram> boundary;
  std::map<int, std::pair<int, int>> crossing_positions;  // label -> two hole darts
  std::vector<DoubleLine> lines;
  std::vector<Cusp> cusps;
  std::vector<TriplePoint> triples;
  std::vector<std::string> section_markers;  // set by doubling, informational

  const DoubleLine& line(const std::string& id) const;
  bool has_line(const std::string& id) const;
};

// Full invariant check; throws ValidationError naming the violated clause.
void validate_complex(const StandardComplex& k);

std::pair<LineKind, LineSide> classify_double_line(const StandardComplex& k,
                                                   const std::string& line_id);

enum class TripleKind { interior, exterior, mixed };
TripleKind classify_triple_point(const StandardComplex& k, const std::string& triple_id);

struct ComplexClass {
  bool general = true;
  bool cusp_free = false;
  bool triple_free = false;
  bool elementary = false;
  bool purified = false;
};
ComplexClass complex_class(const StandardComplex& k);

struct ParityViolation {
  std::string rule;     // "cusp_line_even" or "triple_point_parity"
  std::string subject;  // line or triple id
  std::string detail;
};
// Gaussian-parity constraints for a complex over a 1-component boundary:
// a crossing joined to a cusp must be even, and the three end crossings of
// a triple point's lines must have even parity sum.
std::vector<ParityViolation> check_parity_constraints(const StandardComplex& k);

enum class LineSmoothingChoice { a, b };

// Surgery removing one interior double line.  For cyclic lines choice a
// re-glues each bank to the other walk's opposite bank and choice b glues
// like to like (with an orientation flip).  For cusp-to-cusp lines choice
// a re-joins the banks crosswise and choice b folds each bank onto itself,
// deleting both cusps either way.
StandardComplex smooth_interior_line(const StandardComplex& k, const std::string& line_id,
                                     LineSmoothingChoice choice);

// g' upper bound after a component count change n -> n'.
int genus_bound(int g, int n, int n_prime);

// Mirror double glued along the boundary.  Boundary lines become interior
// ones spanning both copies; interior lines are kept and mirrored.
StandardComplex double_complex(const StandardComplex& k);

// Genus-0 disc complex realizing a certificate: boundary d, one
// crossing-to-crossing line per matched pair, no cusps, no triple points.
StandardComplex build_elementary_complex(const Diagram& d, const SliceCertificate& cert);

// Disc complex with hand-placed boundary lines for fixtures: each path runs
// between boundary positions through named interior nodes; nodes shared by
// two paths become transversal crossings (triple-point preimages), nodes
// marked as branches become cusps.
struct PathSpec {
  std::string line_id;
  LineKind kind = LineKind::crossing_crossing;
  std::pair<int, int> arc1;  // boundary positions
  std::vector<std::string> via1;
  std::pair<int, int> arc2{-1, -1};
  std::vector<std::string> via2;
  std::string branch;  // crossing_cusp: node acting as the cusp
};
struct TripleSpec {
  std::string id;
  std::array<std::string, 3> lines;
  std::array<std::string, 3> nodes;
};
StandardComplex make_disc_with_paths(const Diagram& d, const std::vector<PathSpec>& paths,
                                     const std::vector<TripleSpec>& triples);

}  // namespace fkt
