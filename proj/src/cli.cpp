#include "fkt/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fkt/complex.hpp"
#include "fkt/complex_io.hpp"
#include "fkt/cylinder.hpp"
#include "fkt/deduction.hpp"
#include "fkt/diagram.hpp"
#include "fkt/enumerate.hpp"
#include "fkt/parity.hpp"
#include "fkt/slice.hpp"
#include "fkt/smoothing.hpp"

namespace fkt {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void emit(std::ostream& out, const Options& opt, const ordered_json& j,
          const std::string& text) {
  if (opt.json()) {
    ordered_json wrapped;
    wrapped["version"] = 1;
    for (const auto& [k, v] : j.items()) wrapped[k] = v;
    out << wrapped.dump(2) << "\n";
  } else {
    out << text;
  }
}

std::string parity_name(Parity p) { return p == Parity::odd ? "odd" : "even"; }

std::vector<std::string> load_codes(const std::string& code, const std::string& file) {
  std::vector<std::string> codes;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open " + file);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      bool blank = line.find_first_not_of(" \t\r\n") == std::string::npos;
      if (!blank) codes.push_back(line);
    }
  }
  if (!code.empty()) codes.push_back(code);
  if (codes.empty()) throw ParseError("no diagram given (pass CODE or --file)");
  return codes;
}

int census_cap() {
  const char* env = std::getenv("FKT_MAX_CHORDS");
  if (!env) return kDefaultChordBound;
  int v = std::atoi(env);
  if (v < 0) v = 0;
  if (v > kHardChordCeiling) v = kHardChordCeiling;
  return v;
}

ordered_json census_to_json(const Census& c) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : c.rows) {
    ordered_json row;
    row["chords"] = r.chords;
    row["diagrams"] = r.diagrams;
    if (c.components == 1) {
      row["odd"] = r.odd;
      ordered_json by_order = ordered_json::object();
      for (const auto& [ord, cnt] : r.iteratively_odd_by_order)
        by_order[std::to_string(ord)] = cnt;
      row["iteratively_odd_by_order"] = std::move(by_order);
      row["with_stably_even"] = r.with_stably_even;
      row["certificate_found"] = r.certificate_found;
    } else {
      row["all_mixed"] = r.all_mixed;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"free-knot toolkit: Gauss codes, parity towers, smoothings, spanning "
               "complexes and slice certificates"};
  app.require_subcommand(1);

  Options opt;
  std::string code, file, choice, line_id, out_file, facts_file;
  int crossing = 0, max_chords = -1, components = 1;
  bool allow_self = false, stats = false, serial = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto* parse_cmd = app.add_subcommand("parse", "validate a Gauss code and print its canonical form");
  parse_cmd->add_option("code", code, "Gauss code, components separated by /");
  parse_cmd->add_option("--file", file, "read diagrams from a file, one per line");
  add_format(parse_cmd);

  auto* parity_cmd = app.add_subcommand("parity", "per-crossing parity and oddness");
  parity_cmd->add_option("code", code)->required();
  add_format(parity_cmd);

  auto* tower_cmd = app.add_subcommand("tower", "iterated parity projection");
  tower_cmd->add_option("code", code)->required();
  add_format(tower_cmd);

  auto* smooth_cmd = app.add_subcommand("smooth", "resolve one crossing");
  smooth_cmd->add_option("code", code)->required();
  smooth_cmd->add_option("--crossing", crossing, "crossing label")->required();
  smooth_cmd->add_option("--choice", choice, "split or reverse")
      ->check(CLI::IsMember({"split", "reverse"}))
      ->required();
  add_format(smooth_cmd);

  auto* slice_cmd = app.add_subcommand("slice", "elementary-sliceness certificate search");
  slice_cmd->add_option("code", code)->required();
  slice_cmd->add_flag("--allow-self-pairs", allow_self, "admit self-paired chords");
  add_format(slice_cmd);

  auto* complex_cmd = app.add_subcommand("complex", "spanning 2-complex operations");
  complex_cmd->require_subcommand(1);
  auto* cval = complex_cmd->add_subcommand("validate", "validate a complex file");
  cval->add_option("file", file)->required();
  add_format(cval);
  auto* csm = complex_cmd->add_subcommand("smooth", "smooth one interior double line");
  csm->add_option("file", file)->required();
  csm->add_option("--line", line_id, "double line id")->required();
  csm->add_option("--choice", choice, "a or b")->check(CLI::IsMember({"a", "b"}))->required();
  csm->add_option("--out", out_file, "write the resulting complex here");
  add_format(csm);
  auto* cdb = complex_cmd->add_subcommand("double", "mirror-double a bounded complex");
  cdb->add_option("file", file)->required();
  cdb->add_option("--out", out_file, "write the resulting complex here");
  add_format(cdb);

  auto* cyl_cmd = app.add_subcommand("cylinder", "cobordism cylinder diagrams");
  cyl_cmd->require_subcommand(1);
  auto* cyl_check = cyl_cmd->add_subcommand("check", "normality and meridian parity");
  cyl_check->add_option("file", file)->required();
  add_format(cyl_check);

  auto* enum_cmd = app.add_subcommand("enumerate", "canonical diagram census");
  enum_cmd->add_option("--max-chords", max_chords, "largest chord count")->required();
  enum_cmd->add_option("--components", components, "number of circles")->capture_default_str();
  enum_cmd->add_flag("--stats", stats, "add parity/certificate statistics");
  enum_cmd->add_flag("--serial", serial, "run the serial reference implementation");
  add_format(enum_cmd);

  auto* deduce_cmd = app.add_subcommand("deduce", "closure of recorded facts under the rule set");
  deduce_cmd->add_option("--facts", facts_file, "facts file (JSON)")->required();
  add_format(deduce_cmd);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*parse_cmd) {
      ordered_json diagrams = ordered_json::array();
      std::string text;
      for (const auto& c : load_codes(code, file)) {
        Diagram d = parse_gauss_code(c);
        ordered_json dj;
        dj["input"] = c;
        dj["canonical"] = canonical_code(d);
        dj["components"] = d.component_count();
        dj["crossings"] = d.crossing_count();
        diagrams.push_back(dj);
        text += "canonical: " + canonical_code(d) + "\ncomponents: " +
                std::to_string(d.component_count()) + "\ncrossings: " +
                std::to_string(d.crossing_count()) + "\n";
      }
      ordered_json j;
      j["command"] = "parse";
      j["diagrams"] = std::move(diagrams);
      emit(out, opt, j, text);
      return 0;
    }

    if (*parity_cmd) {
      Diagram d = parse_gauss_code(code);
      ordered_json j;
      j["command"] = "parity";
      std::string text;
      ordered_json per = ordered_json::object();
      bool multi = d.component_count() > 1;
      j["parity_kind"] = multi ? "component" : "gaussian";
      for (int lab : d.crossings()) {
        Parity p = multi ? component_parity(d, lab) : gaussian_parity(d, lab);
        per[std::to_string(lab)] = parity_name(p);
        text += "crossing " + std::to_string(lab) + ": " + parity_name(p) + "\n";
      }
      j["crossings"] = std::move(per);
      if (!multi) {
        bool odd = is_odd(d);
        j["odd_diagram"] = odd;
        text += std::string("odd diagram: ") + (odd ? "yes" : "no") + "\n";
      } else {
        j["odd_diagram"] = nullptr;
      }
      emit(out, opt, j, text);
      return 0;
    }

    if (*tower_cmd) {
      Diagram d = parse_gauss_code(code);
      ParityTower t = tower(d);
      ordered_json j;
      j["command"] = "tower";
      ordered_json levels = ordered_json::array();
      std::string text;
      for (const auto& lvl : t.levels) {
        levels.push_back(serialize(lvl));
        text += "level " + std::to_string(&lvl - &t.levels[0]) + ": " + serialize(lvl) + "\n";
      }
      j["levels"] = std::move(levels);
      ordered_json orders = ordered_json::object();
      for (const auto& [lab, ord] : t.orders) orders[std::to_string(lab)] = ord;
      j["orders"] = std::move(orders);
      ordered_json se = ordered_json::array();
      for (int lab : t.stably_even) se.push_back(lab);
      j["stably_even"] = std::move(se);
      auto it = is_iteratively_odd(d);
      j["iteratively_odd"] = it.iteratively_odd;
      if (it.order)
        j["order"] = *it.order;
      else
        j["order"] = nullptr;
      j["terminal"] =
          t.terminal == ParityTower::Terminal::crossing_free ? "crossing_free" : "fixpoint";
      for (const auto& [lab, ord] : t.orders)
        text += "order(" + std::to_string(lab) + ") = " + std::to_string(ord) + "\n";
      if (!t.stably_even.empty()) {
        text += "stably even:";
        for (int lab : t.stably_even) text += " " + std::to_string(lab);
        text += "\n";
      }
      text += it.iteratively_odd
                  ? "iteratively odd of order " + std::to_string(*it.order) + "\n"
                  : "not iteratively odd (fixpoint with crossings)\n";
      emit(out, opt, j, text);
      return 0;
    }

    if (*smooth_cmd) {
      Diagram d = parse_gauss_code(code);
      SmoothingChoice sc = choice == "split" ? SmoothingChoice::split : SmoothingChoice::reverse;
      Diagram s = smooth(d, crossing, sc);
      SmoothingQuality q = classify_smoothing(d, crossing, sc);
      ordered_json j;
      j["command"] = "smooth";
      j["result"] = serialize(s);
      j["components"] = s.component_count();
      j["quality"] = q == SmoothingQuality::good ? "good" : "bad";
      emit(out, opt, j,
           "result: " + serialize(s) + "\nquality: " +
               (q == SmoothingQuality::good ? "good" : "bad") + "\n");
      return 0;
    }

    if (*slice_cmd) {
      Diagram d = parse_gauss_code(code);
      auto cert = elementary_certificate(d, allow_self);
      bool odd = is_odd(d);
      ordered_json j;
      j["command"] = "slice";
      j["odd"] = odd;
      j["elementary_slice_predicate"] = cert.has_value();
      std::string verdict, scope;
      if (odd) {
        scope = "theorem-backed: for odd diagrams sliceness is equivalent to elementary "
                "sliceness; the certificate predicate decides the latter";
        verdict = cert ? "slice" : "not slice";
      } else {
        scope = "predicate-level: no covering theorem, result is about the certificate "
                "predicate only";
        verdict = cert ? "elementary slice" : "not elementary slice";
      }
      j["verdict"] = verdict;
      j["scope"] = scope;
      std::string text = "verdict: " + verdict + "\nscope: " + scope + "\n";
      if (cert) {
        ordered_json pairs = ordered_json::array();
        for (auto [x, y] : cert->pairs) pairs.push_back({x, y});
        ordered_json arcs = ordered_json::array();
        for (auto [a, b] : cert->arcs) arcs.push_back({a, b});
        j["certificate"] = {{"pairs", std::move(pairs)}, {"arcs", std::move(arcs)}};
        text += "certificate pairs:";
        for (auto [x, y] : cert->pairs)
          text += " {" + std::to_string(x) + "," + std::to_string(y) + "}";
        text += "\narcs:";
        for (auto [a, b] : cert->arcs)
          text += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
        text += "\n";
      } else {
        j["certificate"] = nullptr;
        text += "certificate: none\n";
      }
      emit(out, opt, j, text);
      return 0;
    }

    if (*cval) {
      StandardComplex k = parse_complex_file(file);
      ComplexClass cls = complex_class(k);
      auto an = k.surface.analyze();
      ordered_json j;
      j["command"] = "complex validate";
      j["valid"] = true;
      j["class"] = {{"general", cls.general},
                    {"cusp_free", cls.cusp_free},
                    {"triple_free", cls.triple_free},
                    {"elementary", cls.elementary},
                    {"purified", cls.purified}};
      j["chi"] = an.chi_total;
      ordered_json comps = ordered_json::array();
      for (const auto& c : an.components) {
        ordered_json cj;
        cj["chi"] = c.chi;
        cj["boundary_circles"] = c.holes;
        cj["orientable"] = c.orientable;
        if (c.genus)
          cj["genus"] = *c.genus;
        else
          cj["genus"] = nullptr;
        comps.push_back(std::move(cj));
      }
      j["components"] = std::move(comps);
      std::vector<ParityViolation> violations;
      if (k.boundary && k.boundary->component_count() == 1)
        violations = check_parity_constraints(k);
      ordered_json vj = ordered_json::array();
      std::string text = "valid complex\nchi: " + std::to_string(an.chi_total) + "\n";
      text += std::string("elementary: ") + (cls.elementary ? "yes" : "no") + "\n";
      for (const auto& v : violations) {
        vj.push_back({{"rule", v.rule}, {"subject", v.subject}, {"detail", v.detail}});
        text += "parity violation [" + v.rule + "] " + v.subject + ": " + v.detail + "\n";
      }
      j["parity_violations"] = std::move(vj);
      emit(out, opt, j, text);
      return violations.empty() ? 0 : 2;
    }

    if (*csm) {
      StandardComplex k = parse_complex_file(file);
      auto before = k.surface.analyze();
      StandardComplex r =
          smooth_interior_line(k, line_id, choice == "a" ? LineSmoothingChoice::a
                                                         : LineSmoothingChoice::b);
      auto after = r.surface.analyze();
      ordered_json j;
      j["command"] = "complex smooth";
      j["line"] = line_id;
      j["choice"] = choice;
      j["chi_before"] = before.chi_total;
      j["chi_after"] = after.chi_total;
      j["components_before"] = static_cast<int>(before.components.size());
      j["components_after"] = static_cast<int>(after.components.size());
      std::string text = "chi: " + std::to_string(before.chi_total) + " -> " +
                         std::to_string(after.chi_total) + "\n";
      bool bound_ok = true;
      if (before.total_genus && after.total_genus) {
        int bound = genus_bound(*before.total_genus, static_cast<int>(before.components.size()),
                                static_cast<int>(after.components.size()));
        bound_ok = *after.total_genus <= bound;
        j["genus_before"] = *before.total_genus;
        j["genus_after"] = *after.total_genus;
        j["genus_bound"] = bound;
        j["genus_bound_ok"] = bound_ok;
        text += "total genus: " + std::to_string(*before.total_genus) + " -> " +
                std::to_string(*after.total_genus) + " (bound " + std::to_string(bound) +
                ")\n";
      } else {
        j["genus_before"] = before.total_genus ? ordered_json(*before.total_genus)
                                               : ordered_json(nullptr);
        j["genus_after"] =
            after.total_genus ? ordered_json(*after.total_genus) : ordered_json(nullptr);
        text += "non-orientable outcome: chi only\n";
      }
      if (!out_file.empty()) {
        write_complex_file(r, out_file);
        j["out"] = out_file;
        text += "written: " + out_file + "\n";
      }
      emit(out, opt, j, text);
      return bound_ok ? 0 : 2;
    }

    if (*cdb) {
      StandardComplex k = parse_complex_file(file);
      StandardComplex dd = double_complex(k);
      auto an = dd.surface.analyze();
      ordered_json j;
      j["command"] = "complex double";
      j["chi"] = an.chi_total;
      j["closed"] = true;
      j["lines"] = static_cast<int>(dd.lines.size());
      j["cusps"] = static_cast<int>(dd.cusps.size());
      j["triples"] = static_cast<int>(dd.triples.size());
      std::string text = "doubled complex: chi " + std::to_string(an.chi_total) + ", " +
                         std::to_string(dd.lines.size()) + " lines\n";
      if (!out_file.empty()) {
        write_complex_file(dd, out_file);
        j["out"] = out_file;
        text += "written: " + out_file + "\n";
      }
      emit(out, opt, j, text);
      return 0;
    }

    if (*cyl_check) {
      CylinderDiagram c = parse_cylinder_file(file);
      NormalityReport r = is_normal_cylinder(c);
      bool parity_ok = meridian_parity(c);
      ordered_json j;
      j["command"] = "cylinder check";
      j["normal"] = r.normal;
      j["violated_condition"] =
          r.violated_condition ? ordered_json(*r.violated_condition) : ordered_json(nullptr);
      j["detail"] = r.detail;
      j["normal_alternate_reading"] = r.normal_alternate_reading;
      j["meridian_parity"] = parity_ok ? "pass" : "fail";
      std::string text = std::string("normal: ") + (r.normal ? "yes" : "no") + "\n";
      if (!r.normal)
        text += "violated condition: " + std::to_string(*r.violated_condition) + " (" +
                r.detail + ")\n";
      text += std::string("meridian parity: ") + (parity_ok ? "pass" : "fail") + "\n";
      emit(out, opt, j, text);
      return 0;
    }

    if (*enum_cmd) {
      int cap = census_cap();
      if (max_chords > cap)
        throw PreconditionError("--max-chords " + std::to_string(max_chords) +
                                " exceeds the cap " + std::to_string(cap) +
                                " (FKT_MAX_CHORDS raises it, hard ceiling " +
                                std::to_string(kHardChordCeiling) + ")");
      ordered_json j;
      j["command"] = "enumerate";
      j["components"] = components;
      std::string text;
      ordered_json rows = ordered_json::array();
      for (int n = 0; n <= max_chords; ++n) {
        auto classes = enumerate_diagrams(n, components, cap, !serial);
        ordered_json row;
        row["chords"] = n;
        ordered_json codes = ordered_json::array();
        for (const auto& d : classes) codes.push_back(serialize(d));
        row["codes"] = std::move(codes);
        text += "chords " + std::to_string(n) + ": " + std::to_string(classes.size()) +
                " classes\n";
        for (const auto& d : classes) text += "  " + serialize(d) + "\n";
        rows.push_back(std::move(row));
      }
      j["classes"] = std::move(rows);
      if (stats) {
        Census c = serial ? census_reference(max_chords, components, cap)
                          : census(max_chords, components, cap);
        j["stats"] = census_to_json(c);
        for (const auto& r : c.rows) {
          text += "stats chords " + std::to_string(r.chords) + ": diagrams " +
                  std::to_string(r.diagrams);
          if (components == 1) {
            text += ", odd " + std::to_string(r.odd) + ", stably-even " +
                    std::to_string(r.with_stably_even) + ", certificates " +
                    std::to_string(r.certificate_found) + ", iteratively odd by order {";
            bool first = true;
            for (const auto& [ord, cnt] : r.iteratively_odd_by_order) {
              if (!first) text += ", ";
              first = false;
              text += std::to_string(ord) + ": " + std::to_string(cnt);
            }
            text += "}";
          } else {
            text += ", all-mixed " + std::to_string(r.all_mixed);
          }
          text += "\n";
        }
      }
      emit(out, opt, j, text);
      return 0;
    }

    if (*deduce_cmd) {
      auto facts = parse_facts_file(facts_file);
      DeductionResult r = deduce(std::move(facts));
      if (opt.json()) {
        out << serialize_deductions(r);
      } else {
        for (const auto& d : r.deductions) {
          const Fact& f = r.facts[d.fact_index];
          out << f.subject << ": " << f.predicate;
          if (f.text) out << "(" << *f.text << ")";
          if (f.flag) out << " = " << (*f.flag ? "true" : "false");
          if (f.number) out << " [" << *f.number << "]";
          out << "  -- by " << d.rule_id << " (" << d.citation << ")\n";
        }
        if (r.deductions.empty()) out << "nothing new deducible\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "constraint error: " << e.what() << "\n";
    return 2;
  } catch (const InternalDefectError& e) {
    err << "internal rule defect: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand executed\n";
  return 1;
}

}  // namespace fkt
