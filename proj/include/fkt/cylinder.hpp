#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fkt/errors.hpp"

namespace fkt {

// Curve system on a cylinder: every curve end sits either at a position on
// one of the two boundary circles or at a named interior branch point; the
// pairing is a fixed-point-free involution on curves, and a branch point is
// shared by exactly the two ends of one paired couple.
struct CurveEnd {
  bool on_boundary = true;
  int circle = 0;  // 0 or 1
  int position = 0;
  std::string branch;
};

struct CylinderCurve {
  std::string id;
  std::array<CurveEnd, 2> ends;
};

struct CylinderDiagram {
  int positions0 = 0;
  int positions1 = 0;
  std::vector<CylinderCurve> curves;
  std::vector<std::pair<std::string, std::string>> pairing;
};

void validate_cylinder(const CylinderDiagram& c);

struct NormalityReport {
  bool normal = true;
  std::optional<int> violated_condition;  // 1, 2 or 3 (first hit)
  std::string detail;
  // alternate reading of condition 1: the partner's ends must lie on the
  // same circle as the curve's own
  bool normal_alternate_reading = true;
};

NormalityReport is_normal_cylinder(const CylinderDiagram& c);

// pass iff evenly many curves run from one boundary circle to the other
bool meridian_parity(const CylinderDiagram& c);

CylinderDiagram parse_cylinder_text(const std::string& json_text);
CylinderDiagram parse_cylinder_file(const std::string& path);
std::string serialize_cylinder(const CylinderDiagram& c);

}  // namespace fkt
