#include "fkt/cylinder.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fkt {

namespace {

const CylinderCurve& curve_by_id(const CylinderDiagram& c, const std::string& id) {
  for (const auto& cur : c.curves)
    if (cur.id == id) return cur;
  throw ValidationError("pairing", "unknown curve " + id);
}

std::map<std::string, std::string> partner_map(const CylinderDiagram& c) {
  std::map<std::string, std::string> partner;
  for (const auto& [a, b] : c.pairing) {
    partner[a] = b;
    partner[b] = a;
  }
  return partner;
}

}  // namespace

void validate_cylinder(const CylinderDiagram& c) {
  std::set<std::string> ids;
  std::set<std::pair<int, int>> used;
  std::map<std::string, int> branch_uses;
  for (const auto& cur : c.curves) {
    if (!ids.insert(cur.id).second)
      throw ValidationError("curves", "duplicate curve id " + cur.id);
    for (const auto& e : cur.ends) {
      if (e.on_boundary) {
        if (e.circle != 0 && e.circle != 1)
          throw ValidationError("curves", "boundary circle must be 0 or 1");
        int limit = e.circle == 0 ? c.positions0 : c.positions1;
        if (e.position < 0 || e.position >= limit)
          throw ValidationError("curves", "position out of range on curve " + cur.id);
        if (!used.insert({e.circle, e.position}).second)
          throw ValidationError("curves", "boundary position used twice");
      } else {
        if (e.branch.empty())
          throw ValidationError("curves", "interior end needs a branch name");
        ++branch_uses[e.branch];
      }
    }
  }
  std::map<std::string, std::string> partner;
  for (const auto& [a, b] : c.pairing) {
    if (a == b) throw ValidationError("pairing", "a curve cannot pair with itself");
    curve_by_id(c, a);
    curve_by_id(c, b);
    if (partner.count(a) || partner.count(b))
      throw ValidationError("pairing", "curve paired twice");
    partner[a] = b;
    partner[b] = a;
  }
  for (const auto& cur : c.curves)
    if (!partner.count(cur.id))
      throw ValidationError("pairing", "curve " + cur.id + " is unpaired");
  for (const auto& [branch, uses] : branch_uses) {
    if (uses != 2)
      throw ValidationError("curves", "branch point " + branch + " must join exactly two ends");
  }
  // a branch point is shared with the partner
  for (const auto& cur : c.curves)
    for (const auto& e : cur.ends) {
      if (e.on_boundary) continue;
      const CylinderCurve& p = curve_by_id(c, partner.at(cur.id));
      bool shared = false;
      for (const auto& pe : p.ends)
        if (!pe.on_boundary && pe.branch == e.branch) shared = true;
      if (!shared && !(cur.ends[0].on_boundary == false && cur.ends[1].on_boundary == false &&
                       cur.ends[0].branch == cur.ends[1].branch))
        throw ValidationError("curves",
                              "branch point " + e.branch + " is not shared with the partner");
    }
}

NormalityReport is_normal_cylinder(const CylinderDiagram& c) {
  validate_cylinder(c);
  auto partner = partner_map(c);
  NormalityReport r;
  auto boundary_circles = [&](const CylinderCurve& cur) {
    std::vector<int> out;
    for (const auto& e : cur.ends)
      if (e.on_boundary) out.push_back(e.circle);
    return out;
  };
  auto fail = [&](int cond, const std::string& detail) {
    if (r.normal) {
      r.normal = false;
      r.violated_condition = cond;
      r.detail = detail;
    }
  };
  for (const auto& cur : c.curves) {
    const CylinderCurve& p = curve_by_id(c, partner.at(cur.id));
    auto own = boundary_circles(cur);
    auto other = boundary_circles(p);
    // condition 1: both ends on one circle => partner's boundary ends on a
    // single circle
    if (own.size() == 2 && own[0] == own[1]) {
      if (other.size() == 2 && other[0] != other[1])
        fail(1, "curve " + cur.id + " is one-sided but its partner spans both circles");
      if (other.size() == 2 && other[0] == other[1] && other[0] != own[0])
        r.normal_alternate_reading = false;
    }
    // condition 2: shared branch end, other ends on the boundary => same circle
    for (const auto& e : cur.ends) {
      if (e.on_boundary) continue;
      bool shared = false;
      for (const auto& pe : p.ends)
        if (!pe.on_boundary && pe.branch == e.branch) shared = true;
      if (!shared) continue;
      if (own.size() == 1 && other.size() == 1 && own[0] != other[0])
        fail(2, "curves " + cur.id + " and " + p.id +
                    " share a branch point but end on different circles");
    }
    // condition 3: ends on different circles => partner likewise
    if (own.size() == 2 && own[0] != own[1]) {
      if (!(other.size() == 2 && other[0] != other[1]))
        fail(3, "curve " + cur.id + " spans both circles but its partner does not");
    }
  }
  if (!r.normal) r.normal_alternate_reading = false;
  return r;
}

bool meridian_parity(const CylinderDiagram& c) {
  int spanning = 0;
  for (const auto& cur : c.curves) {
    if (cur.ends[0].on_boundary && cur.ends[1].on_boundary &&
        cur.ends[0].circle != cur.ends[1].circle)
      ++spanning;
  }
  return spanning % 2 == 0;
}

using ordered_json = nlohmann::ordered_json;

CylinderDiagram parse_cylinder_text(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("cylinder file is not valid JSON: ") + e.what());
  }
  CylinderDiagram c;
  c.positions0 = j.value("b0_positions", 0);
  c.positions1 = j.value("b1_positions", 0);
  for (const auto& cj : j.value("curves", ordered_json::array())) {
    CylinderCurve cur;
    cur.id = cj.at("id").get<std::string>();
    const auto& ends = cj.at("ends");
    if (!ends.is_array() || ends.size() != 2)
      throw ParseError("curve " + cur.id + " needs exactly two ends");
    for (int i = 0; i < 2; ++i) {
      const auto& e = ends[i];
      if (e.contains("branch")) {
        cur.ends[i].on_boundary = false;
        cur.ends[i].branch = e["branch"].get<std::string>();
      } else {
        cur.ends[i].on_boundary = true;
        cur.ends[i].circle = e.at("circle").get<int>();
        cur.ends[i].position = e.at("pos").get<int>();
      }
    }
    c.curves.push_back(std::move(cur));
  }
  for (const auto& pj : j.value("pairing", ordered_json::array())) {
    if (!pj.is_array() || pj.size() != 2) throw ParseError("pairing entries are curve id pairs");
    c.pairing.emplace_back(pj[0].get<std::string>(), pj[1].get<std::string>());
  }
  validate_cylinder(c);
  return c;
}

CylinderDiagram parse_cylinder_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_cylinder_text(ss.str());
}

std::string serialize_cylinder(const CylinderDiagram& c) {
  ordered_json j;
  j["b0_positions"] = c.positions0;
  j["b1_positions"] = c.positions1;
  ordered_json curves = ordered_json::array();
  for (const auto& cur : c.curves) {
    ordered_json ends = ordered_json::array();
    for (const auto& e : cur.ends) {
      if (e.on_boundary)
        ends.push_back({{"circle", e.circle}, {"pos", e.position}});
      else
        ends.push_back({{"branch", e.branch}});
    }
    curves.push_back({{"id", cur.id}, {"ends", std::move(ends)}});
  }
  j["curves"] = std::move(curves);
  ordered_json pairing = ordered_json::array();
  for (const auto& [a, b] : c.pairing) pairing.push_back({a, b});
  j["pairing"] = std::move(pairing);
  return j.dump(2) + "\n";
}

}  // namespace fkt
