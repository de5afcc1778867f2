#include "fkt/deduction.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fkt {

std::string Fact::key() const {
  std::string k = subject + "|" + predicate;
  if (predicate == "genus_bound") {
    k += "|" + text.value_or("") + "|" + text2.value_or("") + "|" +
         std::to_string(number.value_or(0));
  } else if (predicate == "cobordism") {
    k += "|" + text.value_or("") + "|" + text2.value_or("") + "|" +
         std::to_string(number.value_or(0));
  } else if (text) {
    k += "|" + *text;
  }
  return k;
}

namespace {

constexpr int kMaxRounds = 10000;

struct Engine {
  std::vector<Fact> facts;
  std::vector<Deduction> deductions;
  std::set<std::string> seen;

  int find(const std::string& subject, const std::string& predicate,
           const std::optional<std::string>& text = std::nullopt) const {
    for (int i = 0; i < static_cast<int>(facts.size()); ++i) {
      const Fact& f = facts[i];
      if (f.subject == subject && f.predicate == predicate && (!text || f.text == text))
        return i;
    }
    return -1;
  }

  void check_consistency(const Fact& f) const {
    for (const auto& g : facts) {
      if (g.subject != f.subject || g.predicate != f.predicate) continue;
      if (f.predicate == "components" && f.number != g.number)
        throw PreconditionError("contradictory facts: component counts for " + f.subject);
      if (f.flag && g.flag && f.text == g.text && f.flag != g.flag)
        throw PreconditionError("contradictory facts: " + f.predicate + " on " + f.subject);
      if (f.predicate == "genus_bound" && f.text == g.text) {
        int lo = -1, hi = -1;
        if (f.text2 == "ge" && g.text2 == "le") { lo = *f.number; hi = *g.number; }
        if (f.text2 == "le" && g.text2 == "ge") { lo = *g.number; hi = *f.number; }
        if (lo != -1 && lo > hi)
          throw PreconditionError("contradictory facts: genus bounds for " + f.subject);
      }
    }
  }

  bool add(Fact f, const std::string& rule, const std::string& citation,
           std::vector<int> premises) {
    f.provenance = rule.empty() ? f.provenance : "derived";
    check_consistency(f);
    const std::string k = f.key() + (f.flag ? (*f.flag ? "|T" : "|F") : "");
    if (seen.count(k)) return false;
    seen.insert(k);
    facts.push_back(f);
    if (!rule.empty())
      deductions.push_back(
          {static_cast<int>(facts.size()) - 1, rule, citation, std::move(premises)});
    return true;
  }
};

struct BiconditionalRule {
  std::string id;
  std::string citation;
  std::string gate1, gate2;  // boolean predicates that must hold (gate2 optional)
  std::string left, right;   // equivalent boolean predicates
};

const std::vector<BiconditionalRule> kBiconditionals = {
    {"odd-slice-criterion",
     "for an odd framed 4-graph, sliceness is equivalent to elementary sliceness",
     "odd", "", "slice", "elementary_slice"},
    {"iteratively-odd-exterior",
     "a slice iteratively odd framed 4-graph is slice with only exterior triple points",
     "iteratively_odd", "", "slice", "slice_exterior_only"},
    {"iteratively-odd-elementary",
     "an iteratively odd framed 4-graph is elementary slice iff slice with no exterior "
     "triple points",
     "iteratively_odd", "", "elementary_slice", "slice_no_exterior_triples"},
    {"two-component-mixed",
     "a 2-component framed 4-graph with all crossings mixed is slice iff elementary slice",
     "all_mixed", "components=2", "slice", "elementary_slice"},
};

// genus chain edges, larger kind first
const std::vector<std::pair<std::string, std::string>> kGenusChain = {
    {"g", "g0"}, {"g0", "gel"}, {"g", "gprime"}, {"gprime", "gel"}};

}  // namespace

DeductionResult deduce(std::vector<Fact> given) {
  Engine e;
  for (auto& f : given) {
    f.provenance = "given";
    e.add(std::move(f), "", "", {});
  }
  bool changed = true;
  int rounds = 0;
  while (changed) {
    if (++rounds > kMaxRounds)
      throw PreconditionError("deduction did not reach a fixpoint");
    changed = false;
    const int n = static_cast<int>(e.facts.size());
    for (int i = 0; i < n; ++i) {
      const Fact f = e.facts[i];

      if (f.predicate == "genus_bound") {
        for (const auto& [big, small] : kGenusChain) {
          if (f.text2 == "ge" && f.text == small) {
            Fact d{f.subject, "genus_bound", std::nullopt, f.number, big, std::string("ge")};
            changed |= e.add(d, "genus-chain",
                             "the spanning genera satisfy g >= g0 >= gel and g >= g' >= gel",
                             {i});
          }
          if (f.text2 == "le" && f.text == big) {
            Fact d{f.subject, "genus_bound", std::nullopt, f.number, small, std::string("le")};
            changed |= e.add(d, "genus-chain",
                             "the spanning genera satisfy g >= g0 >= gel and g >= g' >= gel",
                             {i});
          }
        }
      }

      for (const auto& rule : kBiconditionals) {
        if (f.predicate != rule.left && f.predicate != rule.right) continue;
        if (!f.flag) continue;
        int gate1 = e.find(f.subject, rule.gate1);
        if (gate1 < 0 || e.facts[gate1].flag != true) continue;
        std::vector<int> premises{gate1};
        if (!rule.gate2.empty()) {
          int gate2 = e.find(f.subject, "components");
          if (gate2 < 0 || e.facts[gate2].number != 2) continue;
          premises.push_back(gate2);
        }
        premises.push_back(i);
        const std::string& other = f.predicate == rule.left ? rule.right : rule.left;
        Fact d{f.subject, other, f.flag, std::nullopt, std::nullopt, std::nullopt};
        changed |= e.add(d, rule.id, rule.citation, premises);
      }

      if (f.predicate == "has_crossing_cusp_line") {
        int sl = e.find(f.subject, "slice");
        if (sl >= 0 && e.facts[sl].flag == true) {
          Fact d1{f.subject, "stably_even", std::nullopt, std::nullopt, f.text, std::nullopt};
          changed |= e.add(d1, "cusp-crossing-stably-even",
                           "in a slice graph, a crossing joined to a cusp is stably even",
                           {sl, i});
          Fact d2{f.subject, "good_smoothing_slice", std::nullopt, std::nullopt, f.text,
                  std::nullopt};
          changed |= e.add(d2, "good-smoothing-slice",
                           "the knot-preserving smoothing at a cusp-joined crossing of a "
                           "slice graph yields a slice knot",
                           {sl, i});
          Fact d3{f.subject, "bad_smoothing_component_slice", std::nullopt, std::nullopt,
                  f.text, std::nullopt};
          changed |= e.add(d3, "bad-smoothing-capped",
                           "the splitting smoothing at a cusp-joined crossing leaves a "
                           "component capped by a disc",
                           {sl, i});
        }
      }

      if (f.predicate == "smoothing_of" && f.text) {
        const std::string parent = *f.text;
        for (int p = 0; p < n; ++p) {
          const Fact fp = e.facts[p];  // copy: adds may reallocate
          if (fp.subject != parent || fp.predicate != "genus_bound" || fp.text != "g" ||
              fp.text2 != "le")
            continue;
          int co = e.find(f.subject, "connected_oriented");
          if (co >= 0 && e.facts[co].flag == true) {
            Fact d{f.subject, "genus_bound", std::nullopt, fp.number, std::string("g"),
                   std::string("le")};
            changed |= e.add(d, "smoothing-genus-monotone",
                             "a smoothing that stays a connected oriented surface knot "
                             "cannot raise the genus",
                             {i, p, co});
          }
          int cn = e.find(parent, "components");
          int cn2 = e.find(f.subject, "components");
          if (cn >= 0 && cn2 >= 0) {
            int bound = *fp.number + *e.facts[cn2].number - *e.facts[cn].number;
            if (bound > -1000000 && bound < 1000000) {
              Fact d{f.subject, "genus_bound", std::nullopt, bound, std::string("g"),
                     std::string("le")};
              changed |= e.add(d, "smoothing-genus-estimate",
                               "total genus after a smoothing rises by at most the "
                               "component count increase",
                               {i, p, cn, cn2});
            }
          }
        }
      }

      if (f.predicate == "cobordism" && f.text && f.text2) {
        if (*f.text2 == "no_triples_no_cusp_boundary") {
          Fact d{f.subject, "cobordism", std::nullopt, f.number, f.text,
                 std::string("elementary")};
          changed |= e.add(d, "cobordism-elementarization",
                           "a cobordism without triple points or cusp-to-boundary lines "
                           "yields an elementary cobordism of no larger genus",
                           {i});
        }
        if (*f.text2 == "general" && f.number == 0) {
          int oa = e.find(f.subject, "odd");
          int ob = e.find(*f.text, "odd");
          if (oa >= 0 && ob >= 0 && e.facts[oa].flag == true && e.facts[ob].flag == true) {
            Fact d{f.subject, "cobordism", std::nullopt, 0, f.text, std::string("elementary")};
            changed |= e.add(d, "odd-cobordism",
                             "two odd free knots are genus 0 cobordant iff they are "
                             "elementary genus 0 cobordant",
                             {oa, ob, i});
          }
        }
        if (*f.text2 == "elementary") {
          Fact d{f.subject, "cobordism", std::nullopt, f.number, f.text, std::string("general")};
          changed |= e.add(d, "cobordism-weakening", "an elementary cobordism is a cobordism",
                           {i});
        }
      }
    }
  }
  return {std::move(e.facts), std::move(e.deductions)};
}

using ordered_json = nlohmann::ordered_json;

namespace {

Fact fact_from_json(const ordered_json& j) {
  Fact f;
  f.subject = j.at("subject").get<std::string>();
  f.predicate = j.at("predicate").get<std::string>();
  if (j.contains("value")) {
    if (j["value"].is_boolean()) f.flag = j["value"].get<bool>();
    if (j["value"].is_number_integer()) f.number = j["value"].get<int>();
  }
  if (j.contains("order")) f.number = j["order"].get<int>();
  if (j.contains("genus")) f.number = j["genus"].get<int>();
  if (j.contains("crossing")) f.text = j["crossing"].get<std::string>();
  if (j.contains("other")) f.text = j["other"].get<std::string>();
  if (j.contains("parent")) f.text = j["parent"].get<std::string>();
  if (j.contains("kind")) {
    if (f.predicate == "genus_bound")
      f.text = j["kind"].get<std::string>();
    else
      f.text2 = j["kind"].get<std::string>();
  }
  if (j.contains("rel")) f.text2 = j["rel"].get<std::string>();
  if (j.contains("provenance")) f.provenance = j["provenance"].get<std::string>();
  return f;
}

ordered_json fact_to_json(const Fact& f) {
  ordered_json j;
  j["subject"] = f.subject;
  j["predicate"] = f.predicate;
  if (f.flag) j["value"] = *f.flag;
  if (f.predicate == "components" && f.number) j["value"] = *f.number;
  if (f.predicate == "iteratively_odd" && f.number) j["order"] = *f.number;
  if (f.predicate == "genus_bound") {
    j["kind"] = f.text.value_or("");
    j["rel"] = f.text2.value_or("");
    j["value"] = f.number.value_or(0);
  }
  if (f.predicate == "cobordism") {
    j["other"] = f.text.value_or("");
    j["kind"] = f.text2.value_or("");
    j["genus"] = f.number.value_or(0);
  }
  if (f.predicate == "smoothing_of") j["parent"] = f.text.value_or("");
  if (f.predicate == "has_crossing_cusp_line" || f.predicate == "stably_even" ||
      f.predicate == "good_smoothing_slice" || f.predicate == "bad_smoothing_component_slice")
    j["crossing"] = f.text.value_or("");
  j["provenance"] = f.provenance;
  return j;
}

}  // namespace

std::vector<Fact> parse_facts_text(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("facts file is not valid JSON: ") + e.what());
  }
  const ordered_json& arr = j.is_array() ? j : j.at("facts");
  std::vector<Fact> out;
  for (const auto& fj : arr) out.push_back(fact_from_json(fj));
  return out;
}

std::vector<Fact> parse_facts_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_facts_text(ss.str());
}

std::string serialize_deductions(const DeductionResult& r) {
  ordered_json j;
  ordered_json facts = ordered_json::array();
  for (const auto& f : r.facts) facts.push_back(fact_to_json(f));
  j["facts"] = std::move(facts);
  ordered_json ds = ordered_json::array();
  for (const auto& d : r.deductions) {
    ordered_json dj;
    dj["fact"] = d.fact_index;
    dj["rule"] = d.rule_id;
    dj["citation"] = d.citation;
    dj["premises"] = d.premises;
    ds.push_back(std::move(dj));
  }
  j["deductions"] = std::move(ds);
  return j.dump(2) + "\n";
}

}  // namespace fkt
