#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "fkt/diagram.hpp"

namespace fkt {

enum class Parity { even, odd };

// Gaussian parity: odd iff the chord is linked with oddly many chords.
Parity gaussian_parity(const Diagram& d, int label);

// Two-valued parity for diagrams with several components: mixed -> odd,
// pure -> even.
Parity component_parity(const Diagram& d, int label);

// True iff every crossing is odd (vacuously true without crossings).
bool is_odd(const Diagram& d);

// Delete all odd crossings.
Diagram project(const Diagram& d);

// The sequence of iterated projections, with per-crossing orders.
struct ParityTower {
  enum class Terminal { crossing_free, fixpoint };

  std::vector<Diagram> levels;   // levels[0] is the input
  std::map<int, int> orders;     // crossing -> level at which it is deleted
  std::set<int> stably_even;     // crossings surviving a fixpoint
  Terminal terminal = Terminal::crossing_free;
};

ParityTower tower(const Diagram& d);

struct IterativeOddness {
  bool iteratively_odd = false;
  std::optional<int> order;  // minimal k with a crossing-free k-th projection
};

IterativeOddness is_iteratively_odd(const Diagram& d);

std::set<int> stably_even_set(const Diagram& d);

}  // namespace fkt
