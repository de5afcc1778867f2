#include "fkt/smoothing.hpp"

#include <algorithm>

namespace fkt {

namespace {

// Cyclic segment of w strictly between positions `from` and `to`.
std::vector<int> open_segment(const std::vector<int>& w, int from, int to) {
  const int len = static_cast<int>(w.size());
  std::vector<int> out;
  for (int i = (from + 1) % len; i != to; i = (i + 1) % len) out.push_back(w[i]);
  return out;
}

// The whole word read cyclically starting after position `at`, with the
// symbol at `at` removed.
std::vector<int> punctured(const std::vector<int>& w, int at) {
  return open_segment(w, at, at);
}

}  // namespace

Diagram smooth(const Diagram& d, int label, SmoothingChoice choice) {
  const auto& [o1, o2] = d.occurrences(label);
  std::vector<std::vector<int>> words;

  if (o1.component == o2.component) {
    const auto& w = d.words()[o1.component];
    std::vector<int> u = open_segment(w, o1.index, o2.index);
    std::vector<int> v = open_segment(w, o2.index, o1.index);
    for (int c = 0; c < d.component_count(); ++c) {
      if (c == o1.component) {
        if (choice == SmoothingChoice::split) {
          words.push_back(u);
          words.push_back(v);
        } else {
          std::reverse(v.begin(), v.end());
          std::vector<int> joined = u;
          joined.insert(joined.end(), v.begin(), v.end());
          words.push_back(std::move(joined));
        }
      } else {
        words.push_back(d.words()[c]);
      }
    }
  } else {
    std::vector<int> u = punctured(d.words()[o1.component], o1.index);
    std::vector<int> v = punctured(d.words()[o2.component], o2.index);
    if (choice == SmoothingChoice::reverse) std::reverse(v.begin(), v.end());
    std::vector<int> joined = u;
    joined.insert(joined.end(), v.begin(), v.end());
    bool placed = false;
    for (int c = 0; c < d.component_count(); ++c) {
      if (c == o1.component || c == o2.component) {
        if (!placed) {
          words.push_back(joined);
          placed = true;
        }
      } else {
        words.push_back(d.words()[c]);
      }
    }
  }
  return Diagram::from_words(std::move(words));
}

Diagram delete_chord(const Diagram& d, int label) {
  d.occurrences(label);  // existence check
  std::vector<std::vector<int>> words;
  for (const auto& w : d.words()) {
    std::vector<int> out;
    for (int lab : w)
      if (lab != label) out.push_back(lab);
    words.push_back(std::move(out));
  }
  return Diagram::from_words(std::move(words));
}

SmoothingQuality classify_smoothing(const Diagram& d, int label, SmoothingChoice choice) {
  Diagram s = smooth(d, label, choice);
  return s.component_count() <= d.component_count() ? SmoothingQuality::good
                                                    : SmoothingQuality::bad;
}

}  // namespace fkt
