#include "fkt/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "fkt/parity.hpp"
#include "fkt/slice.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace fkt {

long long matching_count(int chords) {
  long long r = 1;
  for (int k = 2 * chords - 1; k > 1; k -= 2) r *= k;
  return r;
}

namespace {

void check_bounds(int chords, int components, int max_allowed) {
  if (components < 1) throw PreconditionError("need at least one component");
  if (max_allowed > kHardChordCeiling)
    throw PreconditionError("chord bound exceeds the hard ceiling of " +
                            std::to_string(kHardChordCeiling));
  if (chords < 0 || chords > max_allowed)
    throw PreconditionError("chord count " + std::to_string(chords) +
                            " exceeds the configured bound " + std::to_string(max_allowed));
}

// Decode the rank-th perfect matching of positions 0..2n-1: the smallest
// unmatched position pairs with the r-th remaining one.
std::vector<int> matching_from_rank(int n, long long rank) {
  const int len = 2 * n;
  std::vector<int> partner(len, -1);
  std::vector<long long> bases(n);
  long long total = 1;
  for (int k = 0; k < n; ++k) {
    bases[k] = 2 * (n - k) - 1;
    total *= bases[k];
  }
  (void)total;
  for (int k = 0; k < n; ++k) {
    int p = 0;
    while (partner[p] >= 0) ++p;
    long long r = rank % bases[k];
    rank /= bases[k];
    int q = p + 1;
    for (;;) {
      while (partner[q] >= 0) ++q;
      if (r == 0) break;
      --r;
      ++q;
    }
    partner[p] = q;
    partner[q] = p;
  }
  return partner;
}

// Size tuples (non-increasing) of the component words for n chords on k circles.
std::vector<std::vector<int>> size_tuples(int chords, int components) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(components, 0);
  std::function<void(int, int, int)> rec = [&](int idx, int left, int cap) {
    if (idx == components) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int s = std::min(cap, left); s >= 0; --s) {
      cur[idx] = s;
      rec(idx + 1, left - s, s);
    }
  };
  rec(0, 2 * chords, 2 * chords);
  return out;
}

// Build a diagram from a position matching and word sizes, labels in
// first-pairing order.
Diagram diagram_from_matching(const std::vector<int>& partner,
                              const std::vector<int>& sizes) {
  const int len = static_cast<int>(partner.size());
  std::vector<int> label(len, 0);
  int next = 1;
  for (int p = 0; p < len; ++p) {
    if (partner[p] > p) {
      label[p] = label[partner[p]] = next++;
    }
  }
  std::vector<std::vector<int>> words;
  int at = 0;
  for (int s : sizes) {
    words.emplace_back(label.begin() + at, label.begin() + at + s);
    at += s;
  }
  return Diagram::from_words(std::move(words));
}

std::vector<std::string> canonical_classes_exact(int chords, int components,
                                                 bool parallel) {
  if (chords == 0) {
    Diagram d = Diagram::from_words(std::vector<std::vector<int>>(components));
    return {canonical_code(d)};
  }
  const auto tuples = size_tuples(chords, components);
  const long long m = matching_count(chords);
  std::set<std::string> all;

#if defined(_OPENMP)
  if (parallel) {
    #pragma omp parallel
    {
      std::set<std::string> local;
      for (const auto& sizes : tuples) {
        #pragma omp for schedule(static) nowait
        for (long long rank = 0; rank < m; ++rank) {
          Diagram d = diagram_from_matching(matching_from_rank(chords, rank), sizes);
          local.insert(canonical_code(d));
        }
      }
      #pragma omp critical
      all.merge(local);
    }
  } else
#endif
  {
    (void)parallel;
    for (const auto& sizes : tuples)
      for (long long rank = 0; rank < m; ++rank) {
        Diagram d = diagram_from_matching(matching_from_rank(chords, rank), sizes);
        all.insert(canonical_code(d));
      }
  }
  return {all.begin(), all.end()};
}

CensusRow census_row(int chords, int components, const std::vector<Diagram>& classes,
                     bool parallel) {
  CensusRow row;
  row.chords = chords;
  row.diagrams = static_cast<long long>(classes.size());
  const int n = static_cast<int>(classes.size());

  std::vector<int> odd_flag(n, 0), stably_flag(n, 0), cert_flag(n, 0), mixed_flag(n, 0);
  std::vector<int> order_of(n, -1);

  auto eval = [&](int i) {
    const Diagram& d = classes[i];
    if (components == 1) {
      ParityTower t = tower(d);
      odd_flag[i] = is_odd(d) ? 1 : 0;
      if (t.terminal == ParityTower::Terminal::crossing_free)
        order_of[i] = static_cast<int>(t.levels.size()) - 1;
      stably_flag[i] = t.stably_even.empty() ? 0 : 1;
      cert_flag[i] = elementary_certificate(d).has_value() ? 1 : 0;
    } else {
      bool all_mixed = d.crossing_count() > 0;
      for (int lab : d.crossings())
        if (crossing_kind(d, lab) == CrossingKind::pure) all_mixed = false;
      mixed_flag[i] = all_mixed ? 1 : 0;
    }
  };

#if defined(_OPENMP)
  if (parallel) {
    #pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) eval(i);
  } else
#endif
  {
    for (int i = 0; i < n; ++i) eval(i);
  }

  for (int i = 0; i < n; ++i) {
    row.odd += odd_flag[i];
    row.with_stably_even += stably_flag[i];
    row.certificate_found += cert_flag[i];
    row.all_mixed += mixed_flag[i];
    if (order_of[i] >= 0) ++row.iteratively_odd_by_order[order_of[i]];
  }
  return row;
}

Census census_impl(int max_chords, int components, int max_allowed, bool parallel) {
  check_bounds(max_chords, components, max_allowed);
  Census c;
  c.components = components;
  for (int n = 0; n <= max_chords; ++n) {
    auto codes = canonical_classes_exact(n, components, parallel);
    std::vector<Diagram> classes;
    classes.reserve(codes.size());
    for (const auto& s : codes) classes.push_back(parse_gauss_code(s));
    c.rows.push_back(census_row(n, components, classes, parallel));
  }
  return c;
}

}  // namespace

std::vector<Diagram> enumerate_diagrams(int chords, int components, int max_allowed,
                                        bool parallel) {
  check_bounds(chords, components, max_allowed);
  auto codes = canonical_classes_exact(chords, components, parallel);
  std::vector<Diagram> out;
  out.reserve(codes.size());
  for (const auto& s : codes) out.push_back(parse_gauss_code(s));
  return out;
}

std::vector<Diagram> enumerate_up_to(int max_chords, int components, int max_allowed) {
  check_bounds(max_chords, components, max_allowed);
  std::vector<Diagram> out;
  for (int n = 0; n <= max_chords; ++n) {
    auto part = enumerate_diagrams(n, components, max_allowed);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Census census(int max_chords, int components, int max_allowed) {
  return census_impl(max_chords, components, max_allowed, true);
}

// Recursive generation and a std::set, no rank decoding, no threads.
Census census_reference(int max_chords, int components, int max_allowed) {
  check_bounds(max_chords, components, max_allowed);
  Census c;
  c.components = components;
  for (int n = 0; n <= max_chords; ++n) {
    std::set<std::string> codes;
    if (n == 0) {
      codes.insert(canonical_code(Diagram::from_words(std::vector<std::vector<int>>(components))));
    } else {
      for (const auto& sizes : size_tuples(n, components)) {
        std::vector<int> partner(2 * n, -1);
        std::function<void()> rec = [&]() {
          int p = 0;
          while (p < 2 * n && partner[p] >= 0) ++p;
          if (p == 2 * n) {
            codes.insert(canonical_code(diagram_from_matching(partner, sizes)));
            return;
          }
          for (int q = p + 1; q < 2 * n; ++q) {
            if (partner[q] >= 0) continue;
            partner[p] = q;
            partner[q] = p;
            rec();
            partner[p] = partner[q] = -1;
          }
        };
        rec();
      }
    }
    CensusRow row;
    row.chords = n;
    row.diagrams = static_cast<long long>(codes.size());
    for (const auto& code : codes) {
      Diagram d = parse_gauss_code(code);
      if (components == 1) {
        ParityTower t = tower(d);
        if (is_odd(d)) ++row.odd;
        if (t.terminal == ParityTower::Terminal::crossing_free)
          ++row.iteratively_odd_by_order[static_cast<int>(t.levels.size()) - 1];
        if (!t.stably_even.empty()) ++row.with_stably_even;
        if (elementary_certificate(d).has_value()) ++row.certificate_found;
      } else {
        bool all_mixed = d.crossing_count() > 0;
        for (int lab : d.crossings())
          if (crossing_kind(d, lab) == CrossingKind::pure) all_mixed = false;
        if (all_mixed) ++row.all_mixed;
      }
    }
    c.rows.push_back(row);
  }
  return c;
}

}  // namespace fkt
