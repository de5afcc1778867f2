#pragma once

#include <map>
#include <string>
#include <vector>

#include "fkt/diagram.hpp"

namespace fkt {

inline constexpr int kDefaultChordBound = 6;
inline constexpr int kHardChordCeiling = 8;

// All isomorphism classes with exactly `chords` crossings on `components`
// circles, one canonical representative each, in canonical-code order.
// `parallel` only changes how the candidate space is swept.
std::vector<Diagram> enumerate_diagrams(int chords, int components,
                                        int max_allowed = kDefaultChordBound,
                                        bool parallel = false);

// Union of enumerate_diagrams(0..max_chords).
std::vector<Diagram> enumerate_up_to(int max_chords, int components,
                                     int max_allowed = kDefaultChordBound);

struct CensusRow {
  int chords = 0;
  long long diagrams = 0;
  long long odd = 0;                      // 1-component censuses only
  std::map<int, long long> iteratively_odd_by_order;
  long long with_stably_even = 0;
  long long certificate_found = 0;
  long long all_mixed = 0;                // multi-component censuses only
};

struct Census {
  int components = 1;
  std::vector<CensusRow> rows;  // chord counts 0..max
};

// OpenMP kernel: candidate double-occurrence words are split across threads
// by matching rank, canonicalized locally and merged deterministically.
Census census(int max_chords, int components, int max_allowed = kDefaultChordBound);

// Straight-line serial implementation kept as the reference the parallel
// kernel is tested against.
Census census_reference(int max_chords, int components,
                        int max_allowed = kDefaultChordBound);

// (2n-1)!! candidate matchings for n chords
long long matching_count(int chords);

}  // namespace fkt
