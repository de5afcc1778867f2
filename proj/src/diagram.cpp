#include "fkt/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fkt {

Diagram Diagram::from_words(std::vector<std::vector<int>> words) {
  if (words.empty()) throw ParseError("a diagram needs at least one component");
  Diagram d;
  d.words_ = std::move(words);
  d.positions_.clear();
  std::map<int, std::vector<Occurrence>> seen;
  for (int c = 0; c < static_cast<int>(d.words_.size()); ++c) {
    const auto& w = d.words_[c];
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
      seen[w[i]].push_back(Occurrence{c, i});
  }
  for (const auto& [label, occ] : seen) {
    if (occ.size() != 2)
      throw ParseError("label " + std::to_string(label) + " occurs " +
                       std::to_string(occ.size()) + " times (expected exactly 2)");
    d.positions_[label] = {occ[0], occ[1]};
  }
  return d;
}

std::vector<int> Diagram::crossings() const {
  std::vector<int> out;
  out.reserve(positions_.size());
  for (const auto& [label, occ] : positions_) out.push_back(label);
  return out;
}

const std::pair<Occurrence, Occurrence>& Diagram::occurrences(int label) const {
  auto it = positions_.find(label);
  if (it == positions_.end())
    throw PreconditionError("unknown crossing " + std::to_string(label));
  return it->second;
}

Diagram parse_gauss_code(const std::string& text) {
  std::map<std::string, int> ids;
  return parse_gauss_code(text, ids);
}

Diagram parse_gauss_code(const std::string& text, std::map<std::string, int>& token_labels) {
  // '/' separates components; make it token-safe first
  std::string spaced;
  spaced.reserve(text.size() + 8);
  for (char ch : text) {
    if (ch == '/') {
      spaced += " / ";
    } else {
      spaced += ch;
    }
  }
  std::istringstream in(spaced);
  std::vector<std::vector<std::string>> comps(1);
  std::string tok;
  bool any = false;
  while (in >> tok) {
    any = true;
    if (tok == "/") {
      comps.emplace_back();
    } else {
      comps.back().push_back(tok);
    }
  }
  if (!any) throw ParseError("empty input; a crossing-free circle is written ()");

  std::map<std::string, int>& ids = token_labels;
  ids.clear();
  std::vector<std::vector<int>> words;
  for (const auto& comp : comps) {
    if (comp.empty())
      throw ParseError("empty component segment; a crossing-free circle is written ()");
    if (comp.size() == 1 && comp[0] == "()") {
      words.emplace_back();
      continue;
    }
    std::vector<int> w;
    for (const auto& t : comp) {
      if (t == "()")
        throw ParseError("() cannot be mixed with crossing labels in one component");
      auto it = ids.find(t);
      int id;
      if (it == ids.end()) {
        id = static_cast<int>(ids.size()) + 1;
        ids.emplace(t, id);
      } else {
        id = it->second;
      }
      w.push_back(id);
    }
    words.push_back(std::move(w));
  }
  return Diagram::from_words(std::move(words));
}

std::string serialize(const Diagram& d) {
  std::string out;
  for (int c = 0; c < d.component_count(); ++c) {
    if (c > 0) out += " / ";
    const auto& w = d.words()[c];
    if (w.empty()) {
      out += "()";
      continue;
    }
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(w[i]);
    }
  }
  return out;
}

bool InterlacementMatrix::is_linked(int a, int b) const {
  return linked[index_of(a)][index_of(b)] != 0;
}

int InterlacementMatrix::degree(int label) const {
  const auto& row = linked[index_of(label)];
  return std::accumulate(row.begin(), row.end(), 0);
}

int InterlacementMatrix::index_of(int label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label)
    throw PreconditionError("unknown crossing " + std::to_string(label));
  return static_cast<int>(it - labels.begin());
}

InterlacementMatrix interlacement(const Diagram& d) {
  if (d.component_count() != 1)
    throw PreconditionError("interlacement is defined for 1-component diagrams only");
  const auto& w = d.words()[0];
  const int len = static_cast<int>(w.size());
  InterlacementMatrix m;
  m.labels = d.crossings();
  const int n = static_cast<int>(m.labels.size());
  m.linked.assign(n, std::vector<std::uint8_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    const auto& [oi1, oi2] = d.occurrences(m.labels[i]);
    int p1 = oi1.index, p2 = oi2.index;
    for (int j = i + 1; j < n; ++j) {
      const auto& [oj1, oj2] = d.occurrences(m.labels[j]);
      // inside the open cyclic interval (p1, p2)?
      auto inside = [&](int q) {
        if (p1 < p2) return p1 < q && q < p2;
        return q > p1 || q < p2;
      };
      int c = (inside(oj1.index) ? 1 : 0) + (inside(oj2.index) ? 1 : 0);
      if (c == 1) m.linked[i][j] = m.linked[j][i] = 1;
    }
  }
  (void)len;
  return m;
}

UnicursalReport unicursal_components(const Diagram& d) {
  UnicursalReport r;
  r.count = d.component_count();
  for (int label : d.crossings()) {
    const auto& [o1, o2] = d.occurrences(label);
    r.incident[label] = {o1.component, o2.component};
  }
  return r;
}

CrossingKind crossing_kind(const Diagram& d, int label) {
  const auto& [o1, o2] = d.occurrences(label);
  return o1.component == o2.component ? CrossingKind::pure : CrossingKind::mixed;
}

std::string canonical_code(const Diagram& d) {
  return serialize(canonical_form(d));
}

Diagram canonical_form(const Diagram& d) {
  const int k = d.component_count();
  // dense labels 1..n so the first-occurrence relabeling is a flat array
  std::vector<int> labels = d.crossings();
  std::map<int, int> dense;
  for (std::size_t i = 0; i < labels.size(); ++i) dense[labels[i]] = static_cast<int>(i) + 1;
  std::vector<std::vector<int>> words = d.words();
  for (auto& w : words)
    for (int& lab : w) lab = dense[lab];
  const int n = static_cast<int>(labels.size());

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);

  std::vector<std::vector<int>> best;
  bool have_best = false;
  std::vector<int> relabel_buf(n + 1, 0);

  // builds the candidate for (perm, choice) with first-occurrence labels,
  // comparing element by element against `best` and aborting as soon as it
  // is strictly larger; on success `best` is replaced
  auto try_candidate = [&](const std::vector<int>& perm_now,
                           const std::vector<int>& choice) {
    std::vector<std::vector<int>> cand(k);
    std::fill(relabel_buf.begin(), relabel_buf.end(), 0);
    int next_id = 1;
    int state = have_best ? 0 : -1;  // 0: equal so far, -1: already smaller
    for (int c = 0; c < k; ++c) {
      const auto& w = words[perm_now[c]];
      const int len = static_cast<int>(w.size());
      auto& out = cand[c];
      out.reserve(len);
      const std::vector<int>* bw = state == 0 ? &best[c] : nullptr;
      int start = len == 0 ? 0 : choice[c] % len;
      int dir = len == 0 || choice[c] < len ? 1 : -1;
      for (int i = 0; i < len; ++i) {
        int idx = ((start + dir * i) % len + len) % len;
        int& slot = relabel_buf[w[idx]];
        if (slot == 0) slot = next_id++;
        out.push_back(slot);
        if (state == 0) {
          if (i >= static_cast<int>(bw->size()) || slot > (*bw)[i]) return;  // larger
          if (slot < (*bw)[i]) state = -1;
        }
      }
      if (state == 0 && out.size() < best[c].size()) state = -1;  // proper prefix
    }
    if (state == -1) {
      best = std::move(cand);
      have_best = true;
    }
  };

  std::sort(perm.begin(), perm.end());
  do {
    std::vector<int> choice(k, 0);
    std::vector<int> radix(k, 1);
    for (int c = 0; c < k; ++c) {
      int len = static_cast<int>(d.words()[perm[c]].size());
      radix[c] = len == 0 ? 1 : 2 * len;
    }
    while (true) {
      try_candidate(perm, choice);
      int c = 0;
      while (c < k && ++choice[c] == radix[c]) choice[c++] = 0;
      if (c == k) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return Diagram::from_words(std::move(best));
}

}  // namespace fkt
