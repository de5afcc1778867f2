#include "fkt/parity.hpp"

#include <algorithm>

namespace fkt {

Parity gaussian_parity(const Diagram& d, int label) {
  if (d.component_count() != 1)
    throw PreconditionError("Gaussian parity needs a 1-component diagram");
  if (!d.has_crossing(label))
    throw PreconditionError("unknown crossing " + std::to_string(label));
  return interlacement(d).degree(label) % 2 == 1 ? Parity::odd : Parity::even;
}

Parity component_parity(const Diagram& d, int label) {
  if (d.component_count() < 2)
    throw PreconditionError("component parity needs at least 2 components");
  return crossing_kind(d, label) == CrossingKind::mixed ? Parity::odd : Parity::even;
}

bool is_odd(const Diagram& d) {
  if (d.component_count() != 1)
    throw PreconditionError("oddness is defined for 1-component diagrams");
  auto m = interlacement(d);
  for (int label : m.labels)
    if (m.degree(label) % 2 == 0) return false;
  return true;
}

Diagram project(const Diagram& d) {
  if (d.component_count() != 1)
    throw PreconditionError("parity projection needs a 1-component diagram");
  auto m = interlacement(d);
  std::set<int> odd;
  for (int label : m.labels)
    if (m.degree(label) % 2 == 1) odd.insert(label);
  std::vector<int> w;
  for (int lab : d.words()[0])
    if (!odd.count(lab)) w.push_back(lab);
  return Diagram::from_words({std::move(w)});
}

ParityTower tower(const Diagram& d) {
  if (d.component_count() != 1)
    throw PreconditionError("parity tower needs a 1-component diagram");
  ParityTower t;
  t.levels.push_back(d);
  for (;;) {
    const Diagram& cur = t.levels.back();
    if (cur.crossing_count() == 0) {
      t.terminal = ParityTower::Terminal::crossing_free;
      break;
    }
    Diagram next = project(cur);
    if (next == cur) {
      t.terminal = ParityTower::Terminal::fixpoint;
      for (int lab : cur.crossings()) t.stably_even.insert(lab);
      break;
    }
    int level = static_cast<int>(t.levels.size()) - 1;
    for (int lab : cur.crossings())
      if (!next.has_crossing(lab)) t.orders[lab] = level;
    t.levels.push_back(std::move(next));
  }
  return t;
}

IterativeOddness is_iteratively_odd(const Diagram& d) {
  ParityTower t = tower(d);
  IterativeOddness r;
  if (t.terminal == ParityTower::Terminal::crossing_free) {
    r.iteratively_odd = true;
    r.order = static_cast<int>(t.levels.size()) - 1;
  }
  return r;
}

std::set<int> stably_even_set(const Diagram& d) { return tower(d).stably_even; }

}  // namespace fkt
