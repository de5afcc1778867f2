// End-to-end acceptance suite.  Each criterion prints one PASS/FAIL line;
// the exit code is the number of failed criteria.
//
// Usage: acceptance [fixtures_dir]

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fkt/cli.hpp"
#include "fkt/complex.hpp"
#include "fkt/complex_io.hpp"
#include "fkt/cylinder.hpp"
#include "fkt/deduction.hpp"
#include "fkt/diagram.hpp"
#include "fkt/enumerate.hpp"
#include "fkt/parity.hpp"
#include "fkt/slice.hpp"
#include "fkt/smoothing.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fkt;

namespace {

std::string g_fixtures = "tests/fixtures";
int g_failures = 0;

struct Checker {
  bool ok = true;
  std::string first_problem;
  long checks = 0;
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      first_problem = what;
    }
  }
};

using clock_type = std::chrono::steady_clock;

void criterion(int number, const std::string& title,
               const std::function<void(Checker&)>& body) {
  Checker c;
  auto t0 = clock_type::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
  std::ostringstream line;
  line << "criterion " << number << ": " << (c.ok ? "PASS" : "FAIL") << " — " << title
       << " (" << c.checks << " checks, " << secs << " s)";
  if (!c.ok) line << " — " << c.first_problem;
  std::cout << line.str() << std::endl;
  if (!c.ok) ++g_failures;
}

int run_cli_capture(const std::vector<std::string>& args, std::string* out = nullptr,
                    std::string* err = nullptr) {
  std::ostringstream o, e;
  int code = run_cli(args, o, e);
  if (out) *out = o.str();
  if (err) *err = e.str();
  return code;
}

}  // namespace

// 1. every tower level deletes exactly the odd crossings, over all canonical
//    one-component diagrams with at most 5 chords
static void criterion1(Checker& c) {
  auto all = enumerate_up_to(5, 1);
  c.expect(!all.empty(), "enumeration is empty");
  for (const Diagram& d : all) {
    ParityTower t = tower(d);
    c.expect(static_cast<int>(t.levels.size()) <= d.crossing_count() + 1,
             "tower too long for " + serialize(d));
    for (std::size_t i = 0; i + 1 < t.levels.size(); ++i) {
      std::set<int> deleted;
      for (int lab : t.levels[i].crossings())
        if (!t.levels[i + 1].has_crossing(lab)) deleted.insert(lab);
      c.expect(deleted == fkt_test::oracle_odd_set(t.levels[i]),
               "level " + std::to_string(i) + " of " + serialize(d) +
                   " deleted a non-odd set");
    }
    bool odd = is_odd(d);
    bool orders_all_zero = t.stably_even.empty() &&
                           t.orders.size() == static_cast<std::size_t>(d.crossing_count());
    for (const auto& [lab, ord] : t.orders)
      if (ord != 0) orders_all_zero = false;
    bool first_projection_empty = project(d).crossing_count() == 0;
    c.expect(odd == orders_all_zero, "oddness vs orders mismatch on " + serialize(d));
    c.expect(odd == first_projection_empty,
             "oddness vs first projection mismatch on " + serialize(d));
  }
}

// 2. worked fixtures, orders recomputed by the independent interlacement oracle
static void criterion2(Checker& c) {
  {
    Diagram d = parse_gauss_code("1 2 1 2");
    auto o = fkt_test::oracle_tower(d);
    c.expect(o.ends_crossing_free && o.levels.size() == 2, "oracle disagrees on 1 2 1 2");
    auto r = is_iteratively_odd(d);
    c.expect(r.iteratively_odd && r.order == 1, "1 2 1 2 should have order 1");
  }
  {
    Diagram d = parse_gauss_code("1 2 1 3 2 4 3 4");
    auto o = fkt_test::oracle_tower(d);
    std::map<int, int> expected{{1, 0}, {4, 0}, {2, 1}, {3, 1}};
    c.expect(o.orders == expected, "oracle orders disagree on 1 2 1 3 2 4 3 4");
    c.expect(tower(d).orders == expected, "library orders disagree on 1 2 1 3 2 4 3 4");
    auto r = is_iteratively_odd(d);
    c.expect(r.iteratively_odd && r.order == 2, "1 2 1 3 2 4 3 4 should have order 2");
  }
  {
    Diagram d = parse_gauss_code("1 2 3 1 2 3");
    auto o = fkt_test::oracle_tower(d);
    c.expect(o.stably_even == std::set<int>{1, 2, 3}, "oracle stably-even disagrees");
    c.expect(stably_even_set(d) == std::set<int>{1, 2, 3}, "1 2 3 1 2 3 not all stably even");
  }
  {
    Diagram d = parse_gauss_code("1 2 1 3 2 3");
    auto o = fkt_test::oracle_tower(d);
    c.expect(o.stably_even == std::set<int>{2}, "oracle stably-even disagrees on 1 2 1 3 2 3");
    c.expect(stably_even_set(d) == std::set<int>{2}, "stably-even set should be {2}");
  }
}

// 3. exactly one smoothing choice preserves the component count
static void criterion3(Checker& c) {
  for (const Diagram& d : enumerate_up_to(5, 1)) {
    for (int lab : d.crossings()) {
      int split_comps = smooth(d, lab, SmoothingChoice::split).component_count();
      int reverse_comps = smooth(d, lab, SmoothingChoice::reverse).component_count();
      bool dichotomy = (split_comps == 2 && reverse_comps == 1) ||
                       (split_comps == 1 && reverse_comps == 2);
      c.expect(dichotomy, "no dichotomy at crossing " + std::to_string(lab) + " of " +
                              serialize(d));
    }
  }
}

// 4. certificate search agrees with the full endpoint-matching oracle
static void criterion4(Checker& c) {
  for (int n = 0; n <= 4; ++n) {
    for (const Diagram& d : enumerate_diagrams(n, 1)) {
      bool found = elementary_certificate(d).has_value();
      c.expect(found == elementary_oracle(d), "oracle mismatch on " + serialize(d));
      if (n % 2 == 1)
        c.expect(!found, "odd chord count should never have a certificate: " + serialize(d));
    }
  }
  c.expect(!elementary_certificate(parse_gauss_code("1 1")).has_value(),
           "1 1 must not be elementary slice");
}

// 5. every found certificate builds a validated elementary genus-0 complex
static void criterion5(Checker& c) {
  for (int n = 0; n <= 4; ++n) {
    for (const Diagram& d : enumerate_diagrams(n, 1)) {
      auto cert = elementary_certificate(d);
      if (!cert) continue;
      StandardComplex k = build_elementary_complex(d, *cert);
      validate_complex(k);
      auto an = k.surface.analyze();
      c.expect(an.total_genus == 0, "built complex has genus != 0 for " + serialize(d));
      ComplexClass cls = complex_class(k);
      c.expect(cls.elementary && cls.cusp_free && cls.triple_free,
               "built complex not elementary for " + serialize(d));
      c.expect(check_parity_constraints(k).empty(),
               "parity constraints violated for " + serialize(d));
      c.expect(serialize(*k.boundary) == serialize(d), "boundary mismatch");
    }
  }
}

// 6. parity-constraint truth table, exact
static void criterion6(Checker& c) {
  StandardComplex even_ok = parse_complex_file(g_fixtures + "/cusp_even.json");
  c.expect(check_parity_constraints(even_ok).empty(), "even cusp fixture should pass");

  StandardComplex odd_bad = parse_complex_file(g_fixtures + "/cusp_odd.json");
  auto v1 = check_parity_constraints(odd_bad);
  c.expect(v1.size() == 2 && v1[0].rule == "cusp_line_even",
           "odd cusp fixture should be flagged");

  auto triple_fixture = [&](const std::string& code) {
    Diagram d = parse_gauss_code(code);
    std::vector<int> labs = d.crossings();
    auto pos = [&](int lab) {
      const auto& [o1, o2] = d.occurrences(lab);
      return std::pair{o1.index, o2.index};
    };
    std::vector<PathSpec> paths;
    const char* names[3] = {"a", "b", "c"};
    const char* vias[3][2] = {{"q12", "q13"}, {"q12", "q23"}, {"q13", "q23"}};
    for (int i = 0; i < 3; ++i) {
      PathSpec p;
      p.line_id = names[i];
      p.kind = LineKind::crossing_crossing;
      p.arc1 = {pos(labs[2 * i]).first, pos(labs[2 * i + 1]).first};
      p.via1 = {vias[i][0]};
      p.arc2 = {pos(labs[2 * i]).second, pos(labs[2 * i + 1]).second};
      p.via2 = {vias[i][1]};
      paths.push_back(p);
    }
    TripleSpec t{"t", {"a", "b", "c"}, {"q12", "q13", "q23"}};
    return make_disc_with_paths(d, paths, {t});
  };
  c.expect(check_parity_constraints(triple_fixture("1 1 2 2 3 3 4 4 5 5 6 6")).empty(),
           "(even, even, even) must pass");
  c.expect(check_parity_constraints(triple_fixture("1 1 2 2 3 4 3 4 5 6 5 6")).empty(),
           "(even, odd, odd) must pass");
  c.expect(check_parity_constraints(triple_fixture("1 2 1 2 3 4 3 4 5 6 5 6")).size() == 1,
           "(odd, odd, odd) must fail");
  c.expect(check_parity_constraints(triple_fixture("1 1 2 2 3 3 4 4 5 6 5 6")).size() == 1,
           "(odd, even, even) must fail");

  StandardComplex shipped = parse_complex_file(g_fixtures + "/bad_triple.json");
  auto v2 = check_parity_constraints(shipped);
  c.expect(v2.size() == 1 && v2[0].rule == "triple_point_parity",
           "shipped bad_triple fixture should be flagged");
}

// 7. chi monotonicity and the genus estimate over generated surgeries
static void criterion7(Checker& c) {
  const int kInstances = 250;
  int built = 0;
  for (unsigned seed = 0; built < kInstances; ++seed) {
    fkt_test::FuzzInstance inst = fkt_test::random_instance(seed);
    ++built;
    auto before = inst.complex.surface.analyze();
    for (auto choice : {LineSmoothingChoice::a, LineSmoothingChoice::b}) {
      StandardComplex r = smooth_interior_line(inst.complex, inst.line_id, choice);
      auto after = r.surface.analyze();
      c.expect(after.chi_total >= before.chi_total,
               "chi dropped for seed " + std::to_string(seed));
      r.surface.validate_structure();
      if (before.total_genus && after.total_genus && !inst.complex.boundary) {
        int bound = genus_bound(*before.total_genus,
                                static_cast<int>(before.components.size()),
                                static_cast<int>(after.components.size()));
        c.expect(*after.total_genus <= bound,
                 "genus estimate failed for seed " + std::to_string(seed));
      }
    }
  }
}

// 8. doubling the trivial disc and every certificate-built complex
static void criterion8(Checker& c) {
  {
    StandardComplex disc = parse_complex_file(g_fixtures + "/disc_trivial.json");
    StandardComplex dd = double_complex(disc);
    auto an = dd.surface.analyze();
    c.expect(an.chi_total == 2 && an.components.size() == 1 && an.components[0].holes == 0,
             "doubling the trivial disc should give a closed sphere");
  }
  for (int n = 0; n <= 4; ++n) {
    for (const Diagram& d : enumerate_diagrams(n, 1)) {
      auto cert = elementary_certificate(d);
      if (!cert) continue;
      StandardComplex k = build_elementary_complex(d, *cert);
      StandardComplex dd = double_complex(k);
      auto an = dd.surface.analyze();
      for (const auto& comp : an.components)
        c.expect(comp.holes == 0, "doubled complex not closed for " + serialize(d));
      c.expect(dd.lines.size() == cert->pairs.size(),
               "doubled line count != pair count for " + serialize(d));
      for (const auto& l : dd.lines)
        c.expect(line_side(l.kind) == LineSide::interior,
                 "doubled line not interior for " + serialize(d));
      c.expect(an.chi_total == 2 * k.surface.euler_characteristic(),
               "doubling should double chi for " + serialize(d));
    }
  }
}

// 9. exhaustive cylinder diagrams: normal => even meridian crossings
static void criterion9(Checker& c) {
  std::function<void(int, CylinderDiagram, int)> rec = [&](int pairs, CylinderDiagram acc,
                                                           int next_id) {
    if (pairs == 0) {
      auto r = is_normal_cylinder(acc);
      if (r.normal)
        c.expect(meridian_parity(acc), "normal cylinder diagram with odd meridian parity");
      else
        ++c.checks;
      return;
    }
    std::string a = "c" + std::to_string(next_id), b = "c" + std::to_string(next_id + 1);
    auto add_end = [](CylinderDiagram& d, int circle) {
      int& slot = circle == 0 ? d.positions0 : d.positions1;
      return CurveEnd{true, circle, slot++, ""};
    };
    for (int mask = 0; mask < 16; ++mask) {
      CylinderDiagram next = acc;
      CurveEnd e1 = add_end(next, mask & 1), e2 = add_end(next, (mask >> 1) & 1);
      CurveEnd e3 = add_end(next, (mask >> 2) & 1), e4 = add_end(next, (mask >> 3) & 1);
      next.curves.push_back({a, {e1, e2}});
      next.curves.push_back({b, {e3, e4}});
      next.pairing.emplace_back(a, b);
      rec(pairs - 1, next, next_id + 2);
    }
    for (int mask = 0; mask < 4; ++mask) {
      CylinderDiagram next = acc;
      CurveEnd e1 = add_end(next, mask & 1), e2 = add_end(next, (mask >> 1) & 1);
      std::string bp = "p" + std::to_string(next_id);
      next.curves.push_back({a, {e1, CurveEnd{false, 0, 0, bp}}});
      next.curves.push_back({b, {CurveEnd{false, 0, 0, bp}, e2}});
      next.pairing.emplace_back(a, b);
      rec(pairs - 1, next, next_id + 2);
    }
  };
  rec(1, {}, 0);
  rec(2, {}, 0);

  // one shipped non-normal fixture per violated condition
  for (int cond = 1; cond <= 3; ++cond) {
    CylinderDiagram d =
        parse_cylinder_file(g_fixtures + "/cylinder_bad_cond" + std::to_string(cond) + ".json");
    auto r = is_normal_cylinder(d);
    c.expect(!r.normal && r.violated_condition == cond,
             "fixture for condition " + std::to_string(cond) + " misclassified");
  }
  CylinderDiagram ok = parse_cylinder_file(g_fixtures + "/cylinder_normal.json");
  c.expect(is_normal_cylinder(ok).normal && meridian_parity(ok), "normal fixture rejected");
}

// 10. the deduction engine reproduces the four worked deductions
static void criterion10(Checker& c) {
  auto flag_fact = [](const std::string& s, const std::string& p, bool v) {
    Fact f;
    f.subject = s;
    f.predicate = p;
    f.flag = v;
    return f;
  };
  auto has = [](const DeductionResult& r, const std::string& subj, const std::string& pred,
                std::optional<bool> flag, const std::string& rule,
                std::optional<std::string> text = std::nullopt) {
    for (const auto& d : r.deductions) {
      const Fact& f = r.facts[d.fact_index];
      if (f.subject == subj && f.predicate == pred && (!flag || f.flag == flag) &&
          (!text || f.text == text) && d.rule_id == rule && !d.citation.empty())
        return true;
    }
    return false;
  };
  {
    auto r = deduce({flag_fact("K", "odd", true), flag_fact("K", "elementary_slice", true)});
    c.expect(has(r, "K", "slice", true, "odd-slice-criterion"),
             "odd + elementary_slice=true should give slice=true");
  }
  {
    auto r = deduce({flag_fact("K", "odd", true), flag_fact("K", "elementary_slice", false)});
    c.expect(has(r, "K", "slice", false, "odd-slice-criterion"),
             "odd + elementary_slice=false should give slice=false");
  }
  {
    Fact comps;
    comps.subject = "L";
    comps.predicate = "components";
    comps.number = 2;
    auto r = deduce({comps, flag_fact("L", "all_mixed", true),
                     flag_fact("L", "elementary_slice", false)});
    c.expect(has(r, "L", "slice", false, "two-component-mixed"),
             "two-component mixed rule failed");
  }
  {
    Fact cusp;
    cusp.subject = "K";
    cusp.predicate = "has_crossing_cusp_line";
    cusp.text = "c";
    auto r = deduce({flag_fact("K", "slice", true), cusp});
    c.expect(has(r, "K", "stably_even", std::nullopt, "cusp-crossing-stably-even",
                 std::string("c")),
             "cusp-joined crossing should be stably even");
  }
  // idempotence
  {
    std::vector<Fact> base = {flag_fact("K", "odd", true),
                              flag_fact("K", "elementary_slice", true)};
    auto r1 = deduce(base);
    auto r2 = deduce(r1.facts);
    c.expect(r2.deductions.empty() && r2.facts.size() == r1.facts.size(),
             "closure is not idempotent");
  }
  // the chain never produces an upper bound on g from a bound on gel
  {
    Fact gel;
    gel.subject = "K";
    gel.predicate = "genus_bound";
    gel.text = "gel";
    gel.text2 = "le";
    gel.number = 3;
    auto r = deduce({gel});
    c.expect(r.deductions.empty(), "an upper bound on gel should derive nothing");
    Fact gel2 = gel;
    gel2.text2 = "ge";
    gel2.number = 1;
    auto r2 = deduce({gel2});
    bool lifted = false;
    for (const auto& f : r2.facts) {
      c.expect(!(f.predicate == "genus_bound" && f.text2 == "le"),
               "engine inferred an upper bound from a lower one");
      if (f.predicate == "genus_bound" && f.text == "g" && f.text2 == "ge" && f.number == 1)
        lifted = true;
    }
    c.expect(lifted, "a lower bound on gel should lift to g");
  }
}

// 11. CLI round trips, deterministic JSON, documented exit codes
static void criterion11(Checker& c) {
  // round-trip every diagram fixture through parse/serialize
  {
    std::string out;
    int code = run_cli_capture(
        {"parse", "--file", g_fixtures + "/diagrams.txt", "--format", "json"}, &out);
    c.expect(code == 0, "parse --file failed");
    std::string out2;
    run_cli_capture({"parse", "--file", g_fixtures + "/diagrams.txt", "--format", "json"},
                    &out2);
    c.expect(out == out2, "parse output not deterministic");
  }
  // complex fixtures: validate + re-serialize stably
  for (const char* name : {"disc_trivial.json", "elementary_1122.json",
                           "elementary_1212.json", "cusp_even.json",
                           "sphere_cyclic_line.json", "triple_even_odd_odd.json"}) {
    StandardComplex k = parse_complex_file(g_fixtures + "/" + name);
    std::string text = serialize_complex(k);
    StandardComplex back = parse_complex_text(text);
    c.expect(serialize_complex(back) == text, std::string("unstable round trip: ") + name);
  }
  // deterministic JSON across repeated runs
  for (auto args : std::vector<std::vector<std::string>>{
           {"tower", "1 2 1 3 2 4 3 4", "--format", "json"},
           {"slice", "1 2 1 2", "--format", "json"},
           {"enumerate", "--max-chords", "4", "--stats", "--format", "json"},
           {"complex", "validate", g_fixtures + "/elementary_1122.json", "--format", "json"},
           {"cylinder", "check", g_fixtures + "/cylinder_normal.json", "--format", "json"}}) {
    std::string a, b;
    int ca = run_cli_capture(args, &a);
    int cb = run_cli_capture(args, &b);
    c.expect(ca == cb && a == b, "non-deterministic output for " + args[0]);
  }
  // exit codes: 0 success, 1 usage/parse, 2 validation/constraint
  c.expect(run_cli_capture({"parse", "1 1"}) == 0, "exit 0 path failed");
  c.expect(run_cli_capture({"parse", "1 2 1"}) == 1, "exit 1 path failed");
  c.expect(run_cli_capture({"nonsense"}) == 1, "usage error should exit 1");
  c.expect(run_cli_capture({"tower", "1 2 / 1 2"}) == 2, "exit 2 path failed");
  c.expect(run_cli_capture({"complex", "validate", g_fixtures + "/bad_triple.json"}) == 2,
           "bad_triple should exit 2");
  std::string out;
  run_cli_capture({"complex", "validate", g_fixtures + "/bad_triple.json"}, &out);
  c.expect(out.find("triple_point_parity") != std::string::npos,
           "violation not listed for bad_triple");
  c.expect(run_cli_capture({"slice", "1 1"}) == 0, "slice 1 1 should exit 0");
}

int main(int argc, char** argv) {
  if (argc > 1) g_fixtures = argv[1];
  criterion(1, "parity projection sweep over all 1-component diagrams with <= 5 chords",
            criterion1);
  criterion(2, "worked parity-tower fixtures against the independent oracle", criterion2);
  criterion(3, "smoothing dichotomy over all 1-component diagrams with <= 5 chords",
            criterion3);
  criterion(4, "certificate search agrees with the endpoint-matching oracle (<= 4 chords)",
            criterion4);
  criterion(5, "certificate soundness: built complexes validate as elementary genus 0",
            criterion5);
  criterion(6, "parity-constraint truth table for cusp lines and triple points", criterion6);
  criterion(7, "chi monotonicity and genus estimate over 250 generated surgeries x 2 choices",
            criterion7);
  criterion(8, "doubling: trivial disc and certificate complexes", criterion8);
  criterion(9, "exhaustive cylinder diagrams (<= 4 curves): normal => even meridian parity",
            criterion9);
  criterion(10, "deduction engine: worked deductions, idempotence, one-way genus chain",
            criterion10);
  criterion(11, "CLI round trips, deterministic JSON and exit codes", criterion11);
  if (g_failures == 0)
    std::cout << "acceptance: all criteria passed" << std::endl;
  else
    std::cout << "acceptance: " << g_failures << " criterion(s) FAILED" << std::endl;
  return g_failures;
}
