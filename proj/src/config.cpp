#include "ncb/config.hpp"

#include <fstream>
#include <sstream>

namespace ncb {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::defaults() {
  Config cfg;
  cfg.translation = CurvePoint(Q(0), Q(0));
  cfg.base = Divisor::point(CurvePoint::at_infinity(), 3);
  cfg.sample_g = cfg.translation;
  cfg.sample_h = CurvePoint::at_infinity();
  Curve c = cfg.curve();
  cfg.points["t"] = cfg.translation;
  cfg.points["p"] = c.multiple(-3, cfg.translation);
  cfg.points["q"] = c.multiple(-20, cfg.translation);
  return cfg;
}

CurvePoint Config::parse_point(const std::string& raw) const {
  std::string expr = trim(raw);
  if (expr == "infinity" || expr == "O") return CurvePoint::at_infinity();
  if (!expr.empty() && expr.front() == '(') {
    size_t comma = expr.find(',');
    if (comma == std::string::npos || expr.back() != ')')
      throw input_error("bad point literal: " + expr);
    Q x = q_parse(trim(expr.substr(1, comma - 1)));
    Q y = q_parse(trim(expr.substr(comma + 1, expr.size() - comma - 2)));
    CurvePoint p(x, y);
    curve().require_on_curve(p);
    return p;
  }
  size_t star = expr.find("*t");
  if (star != std::string::npos && star + 2 == expr.size()) {
    long k = std::stol(expr.substr(0, star));
    return curve().multiple(k, translation);
  }
  auto it = points.find(expr);
  if (it != points.end()) return it->second;
  throw input_error("unknown point expression: " + expr);
}

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open config file: " + path);
  Config cfg = defaults();
  bool base_seen = false;
  std::string section, line;
  std::vector<std::pair<std::string, std::string>> point_lines;
  std::vector<std::pair<std::string, std::string>> deferred;  // need curve first
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw input_error("bad config line: " + line);
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (section == "curve") {
      if (key == "a1") cfg.a1 = q_parse(val);
      else if (key == "a2") cfg.a2 = q_parse(val);
      else if (key == "a3") cfg.a3 = q_parse(val);
      else if (key == "a4") cfg.a4 = q_parse(val);
      else if (key == "a6") cfg.a6 = q_parse(val);
      else throw input_error("unknown curve key: " + key);
    } else if (section == "translation") {
      if (key == "point") deferred.emplace_back("t", val);
      else throw input_error("unknown translation key: " + key);
    } else if (section == "sheaf") {
      if (key == "base") {
        deferred.emplace_back("base", val);
        base_seen = true;
      } else throw input_error("unknown sheaf key: " + key);
    } else if (section == "points") {
      point_lines.emplace_back(key, val);
    } else if (section == "engine") {
      if (key == "max_degree") cfg.max_degree = std::stol(val);
      else if (key == "orbit_cap") cfg.orbit_cap = std::stoi(val);
      else if (key == "sample_g") deferred.emplace_back("sample_g", val);
      else if (key == "sample_h") deferred.emplace_back("sample_h", val);
      else if (key == "format") cfg.format = val;
      else if (key == "seed") cfg.seed = std::stoul(val);
      else if (key == "cache") cfg.cache_dir = val;
      else throw input_error("unknown engine key: " + key);
    } else {
      throw input_error("unknown config section: " + section);
    }
  }
  // defaults derived from the (possibly new) curve and translation
  cfg.points.clear();
  for (auto& [key, val] : deferred)
    if (key == "t") cfg.translation = cfg.parse_point(val);
  Curve c = cfg.curve();
  c.require_on_curve(cfg.translation);
  cfg.points["t"] = cfg.translation;
  cfg.sample_g = cfg.translation;
  cfg.sample_h = CurvePoint::at_infinity();
  if (!base_seen) cfg.base = Divisor::point(CurvePoint::at_infinity(), 3);
  for (auto& [key, val] : deferred) {
    if (key == "base") cfg.base = parse_divisor(cfg, val);
    else if (key == "sample_g") cfg.sample_g = cfg.parse_point(val);
    else if (key == "sample_h") cfg.sample_h = cfg.parse_point(val);
  }
  for (auto& [key, val] : point_lines) cfg.points[key] = cfg.parse_point(val);
  if (!cfg.points.count("p")) cfg.points["p"] = c.multiple(-3, cfg.translation);
  if (!cfg.points.count("q")) cfg.points["q"] = c.multiple(-20, cfg.translation);
  return cfg;
}

Geometry Config::geometry() const {
  return Geometry(curve(), Translation{translation}, orbit_cap);
}

Sampler Config::sampler() const { return Sampler(curve(), sample_g, sample_h); }

ThcrEngine Config::engine() const {
  validate(true);
  return ThcrEngine(geometry(), base, sampler());
}

void Config::validate(bool ambient) const {
  Geometry g = geometry();  // checks curve nonsingular and t on curve
  if (!g.is_infinite_order())
    throw input_error("translation point has finite order");
  for (const auto& [name, p] : points) g.curve().require_on_curve(p);
  if (ambient && base.degree() != 3)
    throw input_error("ambient runs need deg(base) = 3, got " +
                      std::to_string(base.degree()));
}

CurvePoint Config::named_point(const std::string& name) const {
  auto it = points.find(name);
  if (it == points.end()) throw input_error("unknown named point: " + name);
  return it->second;
}

Divisor parse_divisor(const Config& cfg, const std::string& text) {
  // split into signed terms at top-level + and -
  Divisor out;
  std::string cur;
  std::vector<std::pair<long, std::string>> terms;
  long sign = 1;
  int depth = 0;
  for (char ch : trim(text)) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (!trim(cur).empty()) terms.emplace_back(sign, trim(cur));
      sign = (ch == '-') ? -1 : 1;
      cur.clear();
      continue;
    }
    cur += ch;
  }
  if (!trim(cur).empty()) terms.emplace_back(sign, trim(cur));
  if (terms.empty()) return out;
  for (auto& [sgn, term] : terms) {
    long coeff = 1;
    std::string atom = term;
    size_t star = term.find('*');
    if (star != std::string::npos && term.compare(star, 2, "*t") != 0) {
      coeff = std::stol(term.substr(0, star));
      atom = trim(term.substr(star + 1));
    }
    long twist_j = 0;
    size_t caret = atom.rfind('^');
    if (caret != std::string::npos && atom.find(')') < caret) {
      twist_j = std::stol(atom.substr(caret + 1));
      atom = trim(atom.substr(0, caret));
    } else if (caret != std::string::npos && atom.front() != '(') {
      twist_j = std::stol(atom.substr(caret + 1));
      atom = trim(atom.substr(0, caret));
    }
    CurvePoint p = cfg.parse_point(atom);
    if (twist_j != 0) p = cfg.geometry().sigma_twist(p, twist_j);
    out.add_to(p, sgn * coeff);
  }
  return out;
}

}  // namespace ncb
