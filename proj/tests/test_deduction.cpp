#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fkt/deduction.hpp"
#include "json.hpp"

using namespace fkt;

namespace {

Fact flag_fact(const std::string& subject, const std::string& predicate, bool value) {
  Fact f;
  f.subject = subject;
  f.predicate = predicate;
  f.flag = value;
  return f;
}

Fact number_fact(const std::string& subject, const std::string& predicate, int value) {
  Fact f;
  f.subject = subject;
  f.predicate = predicate;
  f.number = value;
  return f;
}

Fact genus_fact(const std::string& subject, const std::string& kind, const std::string& rel,
                int value) {
  Fact f;
  f.subject = subject;
  f.predicate = "genus_bound";
  f.text = kind;
  f.text2 = rel;
  f.number = value;
  return f;
}

bool derived(const DeductionResult& r, const std::string& subject,
             const std::string& predicate, std::optional<bool> flag = std::nullopt,
             std::optional<std::string> text = std::nullopt,
             std::string* rule_out = nullptr) {
  for (const auto& d : r.deductions) {
    const Fact& f = r.facts[d.fact_index];
    if (f.subject != subject || f.predicate != predicate) continue;
    if (flag && f.flag != flag) continue;
    if (text && f.text != text) continue;
    if (rule_out) *rule_out = d.rule_id;
    return true;
  }
  return false;
}

}  // namespace

TEST_CASE("the four worked deductions") {
  {
    auto r = deduce({flag_fact("K", "odd", true), flag_fact("K", "elementary_slice", true)});
    std::string rule;
    CHECK(derived(r, "K", "slice", true, std::nullopt, &rule));
    CHECK(rule == "odd-slice-criterion");
  }
  {
    auto r = deduce({flag_fact("K", "odd", true), flag_fact("K", "elementary_slice", false)});
    std::string rule;
    CHECK(derived(r, "K", "slice", false, std::nullopt, &rule));
    CHECK(rule == "odd-slice-criterion");
  }
  {
    auto r = deduce({number_fact("L", "components", 2), flag_fact("L", "all_mixed", true),
                     flag_fact("L", "elementary_slice", false)});
    std::string rule;
    CHECK(derived(r, "L", "slice", false, std::nullopt, &rule));
    CHECK(rule == "two-component-mixed");
  }
  {
    Fact cusp;
    cusp.subject = "K";
    cusp.predicate = "has_crossing_cusp_line";
    cusp.text = "c";
    auto r = deduce({flag_fact("K", "slice", true), cusp});
    std::string rule;
    CHECK(derived(r, "K", "stably_even", std::nullopt, std::string("c"), &rule));
    CHECK(rule == "cusp-crossing-stably-even");
    CHECK(derived(r, "K", "good_smoothing_slice", std::nullopt, std::string("c")));
    CHECK(derived(r, "K", "bad_smoothing_component_slice", std::nullopt, std::string("c")));
  }
}

TEST_CASE("no gate, no deduction") {
  auto r = deduce({flag_fact("K", "elementary_slice", true)});
  CHECK_FALSE(derived(r, "K", "slice"));
  auto r2 = deduce({flag_fact("K", "odd", false), flag_fact("K", "elementary_slice", true)});
  CHECK_FALSE(derived(r2, "K", "slice"));
  // two-component rule needs exactly two components
  auto r3 = deduce({number_fact("L", "components", 3), flag_fact("L", "all_mixed", true),
                    flag_fact("L", "elementary_slice", false)});
  CHECK_FALSE(derived(r3, "L", "slice"));
}

TEST_CASE("genus chain goes only one way") {
  {
    auto r = deduce({genus_fact("K", "gel", "ge", 2)});
    CHECK(derived(r, "K", "genus_bound"));
    bool g_lower = false, g_upper = false;
    for (const auto& f : r.facts) {
      if (f.predicate != "genus_bound" || f.text != "g") continue;
      if (f.text2 == "ge" && f.number == 2) g_lower = true;
      if (f.text2 == "le") g_upper = true;
    }
    CHECK(g_lower);
    CHECK_FALSE(g_upper);
  }
  {
    // an upper bound on gel never lifts anywhere
    auto r = deduce({genus_fact("K", "gel", "le", 5)});
    CHECK(r.deductions.empty());
  }
  {
    // an upper bound on g descends to every restricted genus
    auto r = deduce({genus_fact("K", "g", "le", 1)});
    std::set<std::string> kinds;
    for (const auto& f : r.facts)
      if (f.predicate == "genus_bound" && f.text2 == "le") kinds.insert(*f.text);
    CHECK(kinds == std::set<std::string>{"g", "g0", "gel", "gprime"});
  }
}

TEST_CASE("iteratively odd rules") {
  auto r = deduce({flag_fact("K", "iteratively_odd", true), flag_fact("K", "slice", true)});
  CHECK(derived(r, "K", "slice_exterior_only", true));
  auto r2 =
      deduce({flag_fact("K", "iteratively_odd", true), flag_fact("K", "elementary_slice", false)});
  CHECK(derived(r2, "K", "slice_no_exterior_triples", false));
}

TEST_CASE("cobordism rules") {
  Fact cob;
  cob.subject = "A";
  cob.predicate = "cobordism";
  cob.text = "B";
  cob.text2 = "no_triples_no_cusp_boundary";
  cob.number = 3;
  auto r = deduce({cob});
  bool elementary = false, general = false;
  for (const auto& f : r.facts) {
    if (f.predicate != "cobordism") continue;
    if (f.text2 == "elementary" && f.number == 3) elementary = true;
    if (f.text2 == "general" && f.number == 3) general = true;
  }
  CHECK(elementary);
  CHECK(general);  // weakening

  Fact c0;
  c0.subject = "A";
  c0.predicate = "cobordism";
  c0.text = "B";
  c0.text2 = "general";
  c0.number = 0;
  auto r2 = deduce({flag_fact("A", "odd", true), flag_fact("B", "odd", true), c0});
  bool elem0 = false;
  for (const auto& f : r2.facts)
    if (f.predicate == "cobordism" && f.text2 == "elementary" && f.number == 0) elem0 = true;
  CHECK(elem0);
}

TEST_CASE("smoothing genus rules") {
  Fact sm;
  sm.subject = "S";
  sm.predicate = "smoothing_of";
  sm.text = "K";
  auto r = deduce({sm, genus_fact("K", "g", "le", 2), number_fact("K", "components", 1),
                   number_fact("S", "components", 2), flag_fact("S", "connected_oriented", true)});
  bool monotone = false, estimate = false;
  for (const auto& d : r.deductions) {
    const Fact& f = r.facts[d.fact_index];
    if (f.predicate != "genus_bound" || f.subject != "S") continue;
    if (d.rule_id == "smoothing-genus-monotone" && f.number == 2) monotone = true;
    if (d.rule_id == "smoothing-genus-estimate" && f.number == 3) estimate = true;
  }
  CHECK(monotone);
  CHECK(estimate);
}

TEST_CASE("closure is idempotent") {
  std::vector<Fact> base = {flag_fact("K", "odd", true),
                            flag_fact("K", "elementary_slice", true),
                            genus_fact("K", "gel", "ge", 1)};
  auto r1 = deduce(base);
  auto r2 = deduce(r1.facts);
  CHECK(r2.deductions.empty());
  CHECK(r2.facts.size() == r1.facts.size());
}

TEST_CASE("contradictions are rejected") {
  CHECK_THROWS_AS(deduce({flag_fact("K", "slice", true), flag_fact("K", "slice", false)}),
                  PreconditionError);
  CHECK_THROWS_AS(
      deduce({genus_fact("K", "g", "le", 0), genus_fact("K", "g", "ge", 2)}),
      PreconditionError);
  CHECK_THROWS_AS(deduce({number_fact("K", "components", 1), number_fact("K", "components", 2)}),
                  PreconditionError);
  // derived contradiction: odd + slice=true + elementary_slice=false
  CHECK_THROWS_AS(deduce({flag_fact("K", "odd", true), flag_fact("K", "slice", true),
                          flag_fact("K", "elementary_slice", false)}),
                  PreconditionError);
}

TEST_CASE("facts json round trip") {
  std::string text = R"([
    {"subject":"K","predicate":"odd","value":true},
    {"subject":"K","predicate":"elementary_slice","value":true},
    {"subject":"K","predicate":"genus_bound","kind":"gel","rel":"ge","value":1},
    {"subject":"K","predicate":"has_crossing_cusp_line","crossing":"3"},
    {"subject":"A","predicate":"cobordism","other":"B","kind":"general","genus":0}
  ])";
  auto facts = parse_facts_text(text);
  CHECK(facts.size() == 5);
  auto r = deduce(facts);
  std::string out = serialize_deductions(r);
  CHECK(out.find("genus_bound") != std::string::npos);
  auto again = parse_facts_text(
      std::string("{\"facts\":") +
      nlohmann::ordered_json::parse(out)["facts"].dump() + "}");
  CHECK(again.size() == r.facts.size());
}
