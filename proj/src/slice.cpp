#include "fkt/slice.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace fkt {

bool arcs_cross(std::pair<int, int> a, std::pair<int, int> b) {
  auto inside = [&](int q) {
    if (a.first < a.second) return a.first < q && q < a.second;
    return q > a.first || q < a.second;
  };
  return inside(b.first) != inside(b.second);
}

namespace {

struct ChordPositions {
  std::vector<int> labels;                  // sorted
  std::map<int, std::pair<int, int>> pos;   // label -> its two positions
};

ChordPositions chord_positions(const Diagram& d) {
  ChordPositions cp;
  cp.labels = d.crossings();
  for (int lab : cp.labels) {
    const auto& [o1, o2] = d.occurrences(lab);
    cp.pos[lab] = {o1.index, o2.index};
  }
  return cp;
}

bool compatible(const std::vector<std::pair<int, int>>& arcs, std::pair<int, int> arc) {
  for (const auto& a : arcs)
    if (arcs_cross(a, arc)) return false;
  return true;
}

}  // namespace

std::optional<SliceCertificate> elementary_certificate(const Diagram& d,
                                                       bool allow_self_pairs) {
  if (d.component_count() != 1)
    throw PreconditionError("certificate search needs a 1-component diagram");
  SliceCertificate best;
  best.self_pairs_allowed = allow_self_pairs;
  const int n = d.crossing_count();
  if (n == 0) return best;
  if (n % 2 == 1 && !allow_self_pairs) return std::nullopt;

  ChordPositions cp = chord_positions(d);
  std::vector<int> unmatched = cp.labels;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::pair<int, int>> arcs;

  std::function<bool()> search = [&]() -> bool {
    if (unmatched.empty()) return true;
    int x = unmatched.front();
    auto [x1, x2] = cp.pos[x];
    // self pair: one arc joining the two positions of x
    if (allow_self_pairs) {
      std::pair<int, int> arc{x1, x2};
      if (compatible(arcs, arc)) {
        unmatched.erase(unmatched.begin());
        pairs.emplace_back(x, x);
        arcs.push_back(arc);
        if (search()) return true;
        arcs.pop_back();
        pairs.pop_back();
        unmatched.insert(unmatched.begin(), x);
      }
    }
    for (std::size_t i = 1; i < unmatched.size(); ++i) {
      int y = unmatched[i];
      auto [y1, y2] = cp.pos[y];
      for (int variant = 0; variant < 2; ++variant) {
        std::pair<int, int> a1{x1, variant == 0 ? y1 : y2};
        std::pair<int, int> a2{x2, variant == 0 ? y2 : y1};
        if (arcs_cross(a1, a2)) continue;
        if (!compatible(arcs, a1) || !compatible(arcs, a2)) continue;
        std::vector<int> rest = unmatched;
        rest.erase(rest.begin() + i);
        rest.erase(rest.begin());
        std::swap(rest, unmatched);
        pairs.emplace_back(x, y);
        arcs.push_back(a1);
        arcs.push_back(a2);
        if (search()) return true;
        arcs.pop_back();
        arcs.pop_back();
        pairs.pop_back();
        std::swap(rest, unmatched);
      }
    }
    return false;
  };

  if (!search()) return std::nullopt;
  best.pairs = pairs;
  best.arcs = arcs;
  return best;
}

bool elementary_oracle(const Diagram& d, bool allow_self_pairs) {
  if (d.component_count() != 1)
    throw PreconditionError("oracle needs a 1-component diagram");
  const int n = d.crossing_count();
  if (n > 4) throw PreconditionError("oracle cap is 4 chords");
  if (n == 0) return true;

  const auto& w = d.words()[0];
  const int len = static_cast<int>(w.size());
  std::vector<int> partner(len, -1);
  std::vector<std::pair<int, int>> arcs;
  bool found = false;

  std::function<void()> rec = [&]() {
    if (found) return;
    int p = 0;
    while (p < len && partner[p] >= 0) ++p;
    if (p == len) {
      // chord-respecting: each chord's two arcs go to one common partner chord
      for (int lab : d.crossings()) {
        const auto& [o1, o2] = d.occurrences(lab);
        int q1 = partner[o1.index], q2 = partner[o2.index];
        if (q1 == o2.index) {
          // direct self arc: the partner position is the chord's own other leg
          if (!allow_self_pairs) return;
          continue;
        }
        if (w[q1] != w[q2]) return;
        if (w[q1] == lab) return;  // would need a self pair through distinct arcs
      }
      found = true;
      return;
    }
    for (int q = p + 1; q < len; ++q) {
      if (partner[q] >= 0) continue;
      std::pair<int, int> arc{p, q};
      if (!compatible(arcs, arc)) continue;
      partner[p] = q;
      partner[q] = p;
      arcs.push_back(arc);
      rec();
      arcs.pop_back();
      partner[p] = partner[q] = -1;
      if (found) return;
    }
  };
  rec();
  return found;
}

void validate_certificate(const Diagram& d, const SliceCertificate& cert) {
  if (d.component_count() != 1)
    throw ValidationError("certificate", "diagram must have one component");
  std::set<int> matched;
  std::set<int> used_positions;
  const auto check_position = [&](int p) {
    if (p < 0 || p >= static_cast<int>(d.words()[0].size()))
      throw ValidationError("certificate", "arc endpoint out of range");
    if (!used_positions.insert(p).second)
      throw ValidationError("certificate", "endpoint position used twice");
  };
  std::size_t arc_idx = 0;
  for (const auto& [x, y] : cert.pairs) {
    if (!d.has_crossing(x) || !d.has_crossing(y))
      throw ValidationError("certificate", "matched label is not a crossing");
    if (x == y && !cert.self_pairs_allowed)
      throw ValidationError("certificate", "self pair present but not allowed");
    if (!matched.insert(x).second || (x != y && !matched.insert(y).second))
      throw ValidationError("certificate", "chord matched twice");
    const auto [x1, x2] = std::pair{d.occurrences(x).first.index, d.occurrences(x).second.index};
    const auto [y1, y2] = std::pair{d.occurrences(y).first.index, d.occurrences(y).second.index};
    int arcs_for_pair = x == y ? 1 : 2;
    for (int k = 0; k < arcs_for_pair; ++k) {
      if (arc_idx >= cert.arcs.size())
        throw ValidationError("certificate", "missing arcs for a matched pair");
      auto [a, b] = cert.arcs[arc_idx++];
      bool a_of_x = a == x1 || a == x2;
      bool b_of_y = b == y1 || b == y2;
      if (!a_of_x || !b_of_y)
        throw ValidationError("certificate", "arc does not join the matched chords");
      check_position(a);
      if (x == y && b == a)
        throw ValidationError("certificate", "degenerate self arc");
      check_position(b);
    }
  }
  if (arc_idx != cert.arcs.size())
    throw ValidationError("certificate", "extra arcs beyond the matching");
  if (static_cast<int>(matched.size()) != d.crossing_count())
    throw ValidationError("certificate", "matching is not perfect");
  for (std::size_t i = 0; i < cert.arcs.size(); ++i)
    for (std::size_t j = i + 1; j < cert.arcs.size(); ++j)
      if (arcs_cross(cert.arcs[i], cert.arcs[j]))
        throw ValidationError("certificate", "two arcs cross");
}

TheoremPreconditions theorem_preconditions(const Diagram& d) {
  TheoremPreconditions r;
  if (d.component_count() == 1) {
    r.odd_criterion = is_odd(d);
    auto it = is_iteratively_odd(d);
    r.iteratively_odd = it.iteratively_odd;
    r.iterative_order = it.order;
  } else if (d.component_count() == 2) {
    bool all_mixed = true;
    for (int lab : d.crossings())
      if (crossing_kind(d, lab) == CrossingKind::pure) all_mixed = false;
    r.two_component_all_mixed = all_mixed;
  }
  return r;
}

}  // namespace fkt
