#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fkt/diagram.hpp"
#include "fkt/parity.hpp"

namespace fkt {

// Witness of elementary sliceness: a perfect matching of the chords together
// with a non-crossing arc system on the circle pairing their endpoint
// positions sheet by sheet.
struct SliceCertificate {
  // matched chord pairs {x, y}, x <= y; x == y only when self pairs are allowed
  std::vector<std::pair<int, int>> pairs;
  // arcs as endpoint position pairs on the single word, 0-based
  std::vector<std::pair<int, int>> arcs;
  bool self_pairs_allowed = false;
};

// Exhaustive search with pruning; returns the lexicographically first
// certificate, or nothing.  Crossing-free input gets the empty certificate;
// an odd chord count returns nothing immediately.
std::optional<SliceCertificate> elementary_certificate(const Diagram& d,
                                                       bool allow_self_pairs = false);

// Independent decision procedure over all perfect matchings of the 2n
// endpoint positions (chord-respecting filtering applied afterwards).
// Hard cap: 4 chords.
bool elementary_oracle(const Diagram& d, bool allow_self_pairs = false);

// Re-checks every certificate invariant against d; throws ValidationError.
void validate_certificate(const Diagram& d, const SliceCertificate& cert);

// Which theorem hypotheses hold for d.
struct TheoremPreconditions {
  bool odd_criterion = false;              // 1 component, all chords odd
  bool iteratively_odd = false;            // 1 component, tower ends crossing-free
  std::optional<int> iterative_order;
  bool two_component_all_mixed = false;    // exactly 2 components, all crossings mixed
};

TheoremPreconditions theorem_preconditions(const Diagram& d);

// true iff arcs (a1,b1) and (a2,b2) interleave on the circle of `size` positions
bool arcs_cross(std::pair<int, int> a, std::pair<int, int> b);

}  // namespace fkt
