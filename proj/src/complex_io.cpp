#include "fkt/complex_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fkt {

using ordered_json = nlohmann::ordered_json;

namespace {

// File darts are 1-based; internal darts 0-based.
int file_dart(const ordered_json& j, int n_darts, const char* where) {
  if (!j.is_number_integer())
    throw ParseError(std::string(where) + ": dart must be an integer");
  int d = j.get<int>() - 1;
  if (d < 0 || d >= n_darts)
    throw ParseError(std::string(where) + ": dart id out of range");
  return d;
}

LineKind kind_from_string(const std::string& s) {
  if (s == "cyclic") return LineKind::cyclic;
  if (s == "cusp_cusp") return LineKind::cusp_cusp;
  if (s == "crossing_crossing") return LineKind::crossing_crossing;
  if (s == "crossing_cusp") return LineKind::crossing_cusp;
  throw ParseError("unknown line kind: " + s);
}

}  // namespace

StandardComplex parse_complex_text(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("complex file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("complex file must be a JSON object");

  int n_darts = 0;
  if (!j.contains("darts")) throw ParseError("missing key: darts");
  if (j["darts"].is_number_integer()) {
    n_darts = j["darts"].get<int>();
  } else if (j["darts"].is_array()) {
    n_darts = static_cast<int>(j["darts"].size());
    int expect = 1;
    for (const auto& e : j["darts"])
      if (!e.is_number_integer() || e.get<int>() != expect++)
        throw ParseError("darts list must be 1..N in order");
  } else {
    throw ParseError("darts must be a count or a list of ids");
  }
  if (n_darts <= 0 || n_darts % 2 != 0)
    throw ParseError("dart count must be positive and even");

  if (!j.contains("alpha") || !j["alpha"].is_object())
    throw ParseError("missing key: alpha");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j["alpha"].value("pairs", ordered_json::array())) {
    if (!p.is_array() || p.size() != 2) throw ParseError("alpha pair must have two darts");
    pairs.emplace_back(file_dart(p[0], n_darts, "alpha"), file_dart(p[1], n_darts, "alpha"));
  }
  std::vector<int> free_darts;
  for (const auto& f : j["alpha"].value("free", ordered_json::array()))
    free_darts.push_back(file_dart(f, n_darts, "free"));

  if (!j.contains("sigma") || !j["sigma"].is_array())
    throw ParseError("missing key: sigma");
  std::vector<std::vector<int>> rotations;
  for (const auto& cyc : j["sigma"]) {
    if (!cyc.is_array() || cyc.empty()) throw ParseError("sigma cycles must be non-empty arrays");
    std::vector<int> r;
    for (const auto& d : cyc) r.push_back(file_dart(d, n_darts, "sigma"));
    rotations.push_back(std::move(r));
  }

  std::vector<std::pair<int, int>> twisted;
  for (const auto& t : j.value("twists", ordered_json::array())) {
    if (!t.is_array() || t.size() != 2) throw ParseError("twist entry must be a dart pair");
    twisted.emplace_back(file_dart(t[0], n_darts, "twists"), file_dart(t[1], n_darts, "twists"));
  }

  StandardComplex k;
  k.surface = SurfaceMap::from_parts(n_darts, pairs, std::move(rotations), twisted, free_darts);

  std::map<std::string, int> token_labels;
  if (j.contains("boundary") && !j["boundary"].is_null()) {
    const auto& b = j["boundary"];
    if (!b.is_object() || !b.contains("code"))
      throw ParseError("boundary needs a Gauss code string");
    k.boundary = parse_gauss_code(b["code"].get<std::string>(), token_labels);
    const ordered_json crossing_map = b.value("crossing_map", ordered_json::object());
    for (const auto& [tok, pos] : crossing_map.items()) {
      auto it = token_labels.find(tok);
      if (it == token_labels.end())
        throw ParseError("crossing_map key " + tok + " is not a crossing of the code");
      if (!pos.is_array() || pos.size() != 2)
        throw ParseError("crossing_map values must be two position darts");
      k.crossing_positions[it->second] = {file_dart(pos[0], n_darts, "crossing_map"),
                                          file_dart(pos[1], n_darts, "crossing_map")};
    }
  }

  for (const auto& lj : j.value("lines", ordered_json::array())) {
    DoubleLine l;
    l.id = lj.at("id").get<std::string>();
    l.kind = kind_from_string(lj.at("kind").get<std::string>());
    for (const auto& wj : lj.at("walks")) {
      std::vector<int> w;
      for (const auto& d : wj) w.push_back(file_dart(d, n_darts, "line walk"));
      l.walks.push_back(std::move(w));
    }
    if (lj.contains("ident") && !lj["ident"].is_null()) {
      l.ident_offset = lj["ident"].value("offset", 0);
      l.ident_reversed = lj["ident"].value("reversed", false);
    }
    for (const auto& e : lj.value("ends", ordered_json::array())) {
      std::string tok = e.is_string() ? e.get<std::string>() : e.dump();
      auto it = token_labels.find(tok);
      if (it == token_labels.end())
        throw ParseError("line end " + tok + " is not a crossing of the boundary code");
      l.end_crossings.push_back(it->second);
    }
    k.lines.push_back(std::move(l));
  }
  for (const auto& cj : j.value("cusps", ordered_json::array())) {
    Cusp c;
    c.id = cj.at("id").get<std::string>();
    c.vertex_dart = file_dart(cj.at("vertex"), n_darts, "cusp vertex");
    c.line_id = cj.at("line").get<std::string>();
    k.cusps.push_back(std::move(c));
  }
  for (const auto& tj : j.value("triples", ordered_json::array())) {
    TriplePoint t;
    t.id = tj.at("id").get<std::string>();
    const auto& ls = tj.at("lines");
    const auto& ps = tj.at("points");
    if (!ls.is_array() || ls.size() != 3 || !ps.is_array() || ps.size() != 3)
      throw ParseError("triple point needs 3 lines and 3 points");
    for (int i = 0; i < 3; ++i) {
      t.line_ids[i] = ls[i].get<std::string>();
      t.point_darts[i] = file_dart(ps[i], n_darts, "triple point");
    }
    k.triples.push_back(std::move(t));
  }
  for (const auto& s : j.value("section_markers", ordered_json::array()))
    k.section_markers.push_back(s.get<std::string>());

  validate_complex(k);
  return k;
}

StandardComplex parse_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_complex_text(ss.str());
}

std::string serialize_complex(const StandardComplex& k) {
  const SurfaceMap& m = k.surface;
  ordered_json j;
  j["version"] = 1;
  const int n = m.dart_count();
  {
    ordered_json darts = ordered_json::array();
    for (int d = 0; d < n; ++d) darts.push_back(d + 1);
    j["darts"] = std::move(darts);
  }
  {
    ordered_json pairs = ordered_json::array();
    for (int d = 0; d < n; ++d)
      if (d < m.alpha(d)) pairs.push_back({d + 1, m.alpha(d) + 1});
    ordered_json freej = ordered_json::array();
    for (int d : m.free_darts()) freej.push_back(d + 1);
    j["alpha"] = {{"pairs", std::move(pairs)}, {"free", std::move(freej)}};
  }
  {
    ordered_json sigma = ordered_json::array();
    for (const auto& r : m.rotations()) {
      if (r.empty()) continue;
      ordered_json cyc = ordered_json::array();
      for (int d : r) cyc.push_back(d + 1);
      sigma.push_back(std::move(cyc));
    }
    j["sigma"] = std::move(sigma);
  }
  {
    ordered_json tw = ordered_json::array();
    for (int d = 0; d < n; ++d)
      if (d < m.alpha(d) && m.twisted(d)) tw.push_back({d + 1, m.alpha(d) + 1});
    if (!tw.empty()) j["twists"] = std::move(tw);
  }
  if (k.boundary) {
    ordered_json b;
    b["code"] = serialize(*k.boundary);
    ordered_json cm = ordered_json::object();
    for (const auto& [label, pos] : k.crossing_positions)
      cm[std::to_string(label)] = {pos.first + 1, pos.second + 1};
    b["crossing_map"] = std::move(cm);
    j["boundary"] = std::move(b);
  }
  {
    ordered_json lines = ordered_json::array();
    for (const auto& l : k.lines) {
      ordered_json lj;
      lj["id"] = l.id;
      lj["kind"] = to_string(l.kind);
      ordered_json walks = ordered_json::array();
      for (const auto& w : l.walks) {
        ordered_json wj = ordered_json::array();
        for (int d : w) wj.push_back(d + 1);
        walks.push_back(std::move(wj));
      }
      lj["walks"] = std::move(walks);
      if (l.kind == LineKind::cyclic)
        lj["ident"] = {{"offset", l.ident_offset}, {"reversed", l.ident_reversed}};
      ordered_json ends = ordered_json::array();
      for (int c : l.end_crossings) ends.push_back(std::to_string(c));
      lj["ends"] = std::move(ends);
      lines.push_back(std::move(lj));
    }
    j["lines"] = std::move(lines);
  }
  {
    ordered_json cusps = ordered_json::array();
    for (const auto& c : k.cusps)
      cusps.push_back({{"id", c.id}, {"vertex", c.vertex_dart + 1}, {"line", c.line_id}});
    j["cusps"] = std::move(cusps);
  }
  {
    ordered_json triples = ordered_json::array();
    for (const auto& t : k.triples) {
      ordered_json tj;
      tj["id"] = t.id;
      tj["lines"] = {t.line_ids[0], t.line_ids[1], t.line_ids[2]};
      tj["points"] = {t.point_darts[0] + 1, t.point_darts[1] + 1, t.point_darts[2] + 1};
      triples.push_back(std::move(tj));
    }
    j["triples"] = std::move(triples);
  }
  if (!k.section_markers.empty()) j["section_markers"] = k.section_markers;
  return j.dump(2) + "\n";
}

void write_complex_file(const StandardComplex& k, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << serialize_complex(k);
}

}  // namespace fkt
