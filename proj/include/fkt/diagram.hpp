#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fkt/errors.hpp"

namespace fkt {

// One of the two passes of a crossing through the diagram.
struct Occurrence {
  int component = 0;
  int index = 0;
  bool operator==(const Occurrence&) const = default;
};

// A framed 4-graph presented as a multi-component double-occurrence word.
// Each component is a cyclic word of crossing labels; an empty word is a
// circle without crossings.  Every label appears exactly twice across all
// components.
class Diagram {
public:
  Diagram() : words_{{}} {}  // single crossing-free circle
  static Diagram from_words(std::vector<std::vector<int>> words);

  const std::vector<std::vector<int>>& words() const { return words_; }
  int component_count() const { return static_cast<int>(words_.size()); }
  int crossing_count() const { return static_cast<int>(positions_.size()); }
  std::vector<int> crossings() const;
  bool has_crossing(int label) const { return positions_.count(label) != 0; }
  const std::pair<Occurrence, Occurrence>& occurrences(int label) const;

  bool operator==(const Diagram& other) const { return words_ == other.words_; }

private:
  std::vector<std::vector<int>> words_;
  std::map<int, std::pair<Occurrence, Occurrence>> positions_;
};

Diagram parse_gauss_code(const std::string& text);
// Variant exposing the token -> normalized label mapping.
Diagram parse_gauss_code(const std::string& text, std::map<std::string, int>& token_labels);
std::string serialize(const Diagram& d);

// Linking relation of the chord diagram of a 1-component diagram.
struct InterlacementMatrix {
  std::vector<int> labels;  // sorted crossing labels
  std::vector<std::vector<std::uint8_t>> linked;

  bool is_linked(int a, int b) const;
  int degree(int label) const;  // number of chords linked with `label`
  int index_of(int label) const;
};

InterlacementMatrix interlacement(const Diagram& d);

struct UnicursalReport {
  int count = 0;
  // crossing -> the one or two components it touches
  std::map<int, std::set<int>> incident;
};

UnicursalReport unicursal_components(const Diagram& d);

enum class CrossingKind { pure, mixed };

CrossingKind crossing_kind(const Diagram& d, int label);

// Minimal code over rotations, reversals, component reorderings and
// first-occurrence relabelings.  Equal codes <=> isomorphic diagrams.
std::string canonical_code(const Diagram& d);
Diagram canonical_form(const Diagram& d);

}  // namespace fkt
