#include "nichols/session.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "nichols/presets.hpp"

namespace nichols {

using json = nlohmann::ordered_json;

namespace {

CycScalar parse_entry(const json& e) {
  if (e.is_number_integer()) return CycScalar(e.get<long>());
  if (e.is_string()) return CycScalar::parse(e.get<std::string>());
  throw ParseError("matrix entry must be an integer or a scalar string");
}

Matrix parse_matrix(const json& m, std::size_t d, const std::string& where) {
  if (!m.is_array() || m.size() != d) throw ParseError(where + ": expected a " + std::to_string(d) + "x" +
                                                       std::to_string(d) + " matrix");
  Matrix out(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    if (!m[r].is_array() || m[r].size() != d) throw ParseError(where + ": row " + std::to_string(r + 1) +
                                                               " has the wrong length");
    for (std::size_t c = 0; c < d; ++c) out(r, c) = parse_entry(m[r][c]);
  }
  return out;
}

GroupElement parse_element(const Group& g, const json& e, const std::string& where) {
  std::optional<GroupElement> x;
  if (e.is_string()) x = g.parse_element(e.get<std::string>());
  else if (e.is_number_integer() && e.get<int>() >= 0 && e.get<int>() < g.order()) x = GroupElement{e.get<int>()};
  if (!x) throw ParseError(where + ": unknown group element " + e.dump());
  return *x;
}

std::size_t parse_count(const json& j, const char* key, std::size_t fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j[key];
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(std::string("cutoff ") + key + " must be a non-negative integer");
  return v.get<std::size_t>();
}

std::shared_ptr<const Group> parse_group(const json& j) {
  if (!j.is_object()) throw ParseError("group stanza must be an object");
  try {
    if (j.contains("abelian")) {
      const std::string symbol = j.value("symbol", std::string("g"));
      return std::make_shared<const Group>(Group::abelian(j["abelian"].get<std::vector<int>>(), symbol));
    }
    if (j.contains("cayley"))
      return std::make_shared<const Group>(Group::from_cayley(j["cayley"].get<std::vector<std::vector<int>>>()));
  } catch (const json::exception& e) {
    throw ParseError(std::string("group stanza: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("group stanza: ") + e.what());
  }
  throw ParseError("group stanza needs \"abelian\" or \"cayley\"");
}

CocyclePtr parse_cocycle(const json& j, std::shared_ptr<const Group> g) {
  if (!j.is_object()) throw ParseError("cocycle stanza must be an object");
  try {
    if (j.value("sign3", false)) return std::make_shared<const Cocycle3>(Cocycle3::sign3(g));
    if (j.value("trivial", false)) return std::make_shared<const Cocycle3>(Cocycle3::trivial(g));
    if (j.contains("table")) {
      const auto& t = j["table"];
      const auto n = static_cast<std::size_t>(g->order());
      if (!t.is_array() || t.size() != n * n * n)
        throw ParseError("cocycle table must list |G|^3 = " + std::to_string(n * n * n) + " entries");
      std::vector<CycScalar> table;
      table.reserve(t.size());
      for (const auto& e : t) table.push_back(parse_entry(e));
      return std::make_shared<const Cocycle3>(Cocycle3::from_table(g, std::move(table)));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("cocycle stanza: ") + e.what());
  }
  throw ParseError("cocycle stanza needs \"sign3\", \"trivial\" or \"table\"");
}

YDModule parse_module(const std::string& name, const json& j, const CocyclePtr& phi) {
  if (!j.is_object()) throw ParseError("module " + name + " must be an object");
  if (j.contains("preset")) {
    const std::string p = j["preset"].get<std::string>();
    if (!is_preset_name(p)) throw ParseError("module " + name + ": unknown preset " + p);
    YDModule m = preset_module(p, phi);
    m.set_name(name);
    return m;
  }
  const Group& g = phi->group();
  if (!j.contains("degrees") || !j["degrees"].is_array()) throw ParseError("module " + name + " needs \"degrees\"");
  std::vector<GroupElement> degrees;
  for (const auto& e : j["degrees"]) degrees.push_back(parse_element(g, e, "module " + name));
  const std::size_t d = degrees.size();
  if (j.contains("dim") && j["dim"] != d) throw ParseError("module " + name + ": \"dim\" disagrees with \"degrees\"");
  std::vector<std::pair<GroupElement, Matrix>> gens;
  if (j.contains("action")) {
    if (!j["action"].is_object()) throw ParseError("module " + name + ": \"action\" must be an object");
    for (const auto& [key, m] : j["action"].items())
      gens.emplace_back(parse_element(g, json(key), "module " + name),
                        parse_matrix(m, d, "module " + name + " action of " + key));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = j["labels"].get<std::vector<std::string>>();
    if (labels.size() != d) throw ParseError("module " + name + ": wrong number of labels");
  }
  return YDModule::from_generators(phi, std::move(degrees), gens, std::move(labels), name);
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Session Session::parse(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("session is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("session must be a JSON object");
  for (const auto& [key, value] : root.items())
    if (key != "group" && key != "cocycle" && key != "modules" && key != "tuples" && key != "cutoffs")
      throw ParseError("unknown session key \"" + key + "\"");
  if (!root.contains("group")) throw ParseError("session needs a \"group\" stanza");

  Session s;
  auto g = parse_group(root["group"]);
  s.phi_ = root.contains("cocycle") ? parse_cocycle(root["cocycle"], g)
                                    : std::make_shared<const Cocycle3>(Cocycle3::trivial(g));
  try {
    if (root.contains("modules")) {
      if (!root["modules"].is_object()) throw ParseError("\"modules\" must be an object");
      for (const auto& [name, stanza] : root["modules"].items()) {
        try {
          s.modules_.emplace_back(name, parse_module(name, stanza, s.phi_));
        } catch (const ValidationError& e) {
          s.module_errors_.emplace_back(name, e.what());
        }
      }
    }
    if (root.contains("tuples")) {
      if (!root["tuples"].is_object()) throw ParseError("\"tuples\" must be an object");
      for (const auto& [name, list] : root["tuples"].items())
        s.tuples_.emplace_back(name, list.get<std::vector<std::string>>());
    }
    if (root.contains("cutoffs")) {
      const auto& c = root["cutoffs"];
      if (!c.is_object()) throw ParseError("\"cutoffs\" must be an object");
      s.cutoffs_.ad = parse_count(c, "ad", s.cutoffs_.ad);
      s.cutoffs_.truncation = parse_count(c, "truncation", s.cutoffs_.truncation);
      s.cutoffs_.vertices = parse_count(c, "vertices", s.cutoffs_.vertices);
      s.cutoffs_.roots = static_cast<int>(parse_count(c, "roots", static_cast<std::size_t>(s.cutoffs_.roots)));
      s.cutoffs_.words = parse_count(c, "words", s.cutoffs_.words);
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return s;
}

Session Session::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read session file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse(os.str());
}

YDModule Session::module(const std::string& name) const {
  for (const auto& [n, m] : modules_)
    if (n == name) return m;
  for (const auto& [n, why] : module_errors_)
    if (n == name) throw ValidationError("module " + name + " is invalid: " + why);
  if (is_preset_name(name)) {
    try {
      return preset_module(name, phi_);
    } catch (const ValidationError& e) {
      throw std::invalid_argument(e.what());
    }
  }
  throw std::invalid_argument("unknown module " + name);
}

ModuleTuple Session::tuple(const std::string& name) const {
  ModuleTuple t;
  t.name = name;
  std::vector<std::string> names;
  auto it = std::find_if(tuples_.begin(), tuples_.end(), [&](const auto& p) { return p.first == name; });
  names = it != tuples_.end() ? it->second : split_names(name);
  for (const auto& n : names) t.entries.push_back(module(n));
  return t;
}

Session::Validation Session::validate() const {
  Validation v;
  auto fail = [&](std::string line) {
    v.passed = false;
    v.lines.push_back(std::move(line));
  };
  const CocycleReport c = check_3cocycle(*phi_);
  if (c.passed) {
    v.lines.push_back("cocycle: ok (" + std::to_string(c.quadruples_checked) + " quadruples)");
  } else {
    fail("cocycle: FAIL: " + c.message);
  }
  for (const auto& [name, m] : modules_) {
    const ValidationReport r = yd_axiom_check(m);
    if (r.passed) v.lines.push_back("module " + name + ": ok");
    else fail("module " + name + ": FAIL: " + r.violations.front());
  }
  for (const auto& [name, why] : module_errors_) fail("module " + name + ": FAIL: " + why);
  for (const auto& [name, list] : tuples_) {
    std::string joined;
    for (const auto& n : list) joined += (joined.empty() ? "" : ", ") + n;
    try {
      if (list.empty()) throw std::invalid_argument("empty tuple");
      tuple(name);
      v.lines.push_back("tuple " + name + ": ok (" + joined + ")");
    } catch (const std::exception& e) {
      fail("tuple " + name + ": FAIL: " + e.what());
    }
  }
  return v;
}

void Session::require_valid() const {
  if (!validation_) validation_ = std::make_shared<Validation>(validate());
  if (!validation_->passed) {
    for (const auto& line : validation_->lines)
      if (line.find("FAIL") != std::string::npos) throw ValidationError("session does not validate: " + line);
  }
}

namespace {

std::string join_degrees(const YDModule& m) {
  std::string out;
  for (auto g : m.degrees()) out += (out.empty() ? "" : ",") + m.group().label(g);
  return out;
}

json scalar_json(const CycScalar& x) {
  if (x.is_rational()) {
    const mpq_class& q = x.coefficients()[0];
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  }
  return x.to_string();
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

/// Re-ingestible module stanza.
json module_stanza(const YDModule& m) {
  const Group& g = m.group();
  json s;
  s["dim"] = m.dim();
  json degrees = json::array();
  for (auto d : m.degrees()) degrees.push_back(g.label(d));
  s["degrees"] = std::move(degrees);
  json action = json::object();
  if (g.has_abelian_presentation()) {
    for (std::size_t i = 0; i < g.factor_orders().size(); ++i) {
      const GroupElement x = g.generator(i);
      action[g.label(x)] = matrix_json(m.action(x));
    }
  } else {
    for (auto x : g.elements())
      if (x.index != 0) action[g.label(x)] = matrix_json(m.action(x));
  }
  s["action"] = std::move(action);
  s["labels"] = m.labels();
  return s;
}

/// Declared modules first, then built-in presets; first isomorphic one wins.
class IsoNamer {
public:
  explicit IsoNamer(const Session& s) {
    for (const auto& [n, m] : s.modules()) known_.emplace_back(n, m);
    if (s.group().factor_orders().size() == 3) {
      for (const auto& p : preset_names()) {
        if (std::any_of(known_.begin(), known_.end(), [&](const auto& k) { return k.first == p; })) continue;
        try {
          known_.emplace_back(p, preset_module(p, s.cocycle()));
        } catch (const std::exception&) {
        }
      }
    }
  }

  std::string operator()(const YDModule& m) const {
    if (m.dim() == 0) return "0";
    for (const auto& [n, k] : known_)
      if (k.dim() == m.dim() && is_isomorphic(k, m)) return n;
    return "-";
  }

private:
  std::vector<std::pair<std::string, YDModule>> known_;
};

std::size_t to_index(std::size_t one_based, std::size_t theta, const char* what) {
  if (one_based < 1 || one_based > theta)
    throw std::invalid_argument(std::string(what) + " must be between 1 and " + std::to_string(theta));
  return one_based - 1;
}

GraphCutoffs graph_cutoffs(const Session& s) { return {s.cutoffs().ad, s.cutoffs().vertices}; }

std::string root_string(const std::vector<int>& r) {
  std::string out = "[";
  for (std::size_t k = 0; k < r.size(); ++k) out += (k ? "," : "") + std::to_string(r[k]);
  return out + "]";
}

std::string emit(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string command_validate(const Session& s, OutputFormat f, bool& passed) {
  const auto v = s.validate();
  passed = v.passed;
  if (f == OutputFormat::Json) {
    json j;
    j["passed"] = v.passed;
    j["group_order"] = s.group().order();
    j["checks"] = v.lines;
    return emit(j);
  }
  std::ostringstream os;
  os << "group order: " << s.group().order() << "\n";
  for (const auto& line : v.lines) os << line << "\n";
  os << "result: " << (v.passed ? "pass" : "fail") << "\n";
  return os.str();
}

std::string command_nichols(const Session& s, const std::string& target, std::size_t max_degree, OutputFormat f) {
  s.require_valid();
  const bool is_tuple =
      target.find(',') != std::string::npos ||
      std::any_of(s.tuples().begin(), s.tuples().end(), [&](const auto& p) { return p.first == target; });
  const NicholsTruncation t = is_tuple ? nichols_truncate(s.tuple(target), max_degree, s.cutoffs().words)
                                       : nichols_truncate(s.module(target), max_degree, s.cutoffs().words);
  std::optional<std::size_t> vanish;
  std::size_t total = 0;
  for (std::size_t n = 0; n < t.dims.size(); ++n) {
    if (t.dims[n] == 0) {
      vanish = n;
      break;
    }
    total += t.dims[n];
  }
  if (f == OutputFormat::Json) {
    json j;
    j["target"] = target;
    j["max_degree"] = max_degree;
    json rows = json::array();
    for (std::size_t n = 0; n < t.dims.size(); ++n)
      rows.push_back({{"degree", n}, {"dim", t.dims[n]}, {"words", t.word_counts[n]}, {"ideal", t.ideal_dims[n]}});
    j["degrees"] = std::move(rows);
    if (is_tuple) {
      json md = json::array();
      for (const auto& [beta, d] : t.multi_dims)
        if (d > 0) md.push_back({{"degree", beta}, {"dim", d}});
      j["multidegrees"] = std::move(md);
    }
    j["finite"] = vanish.has_value();
    if (vanish) j["dimension"] = total;
    return emit(j);
  }
  std::ostringstream os;
  os << "B(" << target << ") up to degree " << max_degree << "\n";
  os << std::left << std::setw(8) << "degree" << std::setw(10) << "dim" << std::setw(10) << "words" << "ideal\n";
  for (std::size_t n = 0; n < t.dims.size(); ++n)
    os << std::setw(8) << n << std::setw(10) << t.dims[n] << std::setw(10) << t.word_counts[n] << t.ideal_dims[n]
       << "\n";
  if (is_tuple) {
    os << "multidegree  dim\n";
    for (const auto& [beta, d] : t.multi_dims)
      if (d > 0) os << std::setw(13) << root_string(beta) << d << "\n";
  }
  if (vanish) os << "finite: yes, dim B = " << total << " (degree " << *vanish << " vanishes)\n";
  else os << "finite: undecided up to degree " << max_degree << "\n";
  return os.str();
}

std::string command_ad(const Session& s, const std::string& tuple, std::size_t i, std::size_t j, OutputFormat f) {
  s.require_valid();
  const ModuleTuple m = s.tuple(tuple);
  const std::size_t a = to_index(i, m.theta(), "i");
  const std::size_t b = to_index(j, m.theta(), "j");
  if (a == b) throw std::invalid_argument("i and j must differ");
  const AdModule ad = ad_power_module(m, a, b, s.cutoffs().ad);
  const IsoNamer iso(s);
  const std::string mi = m[a].name().empty() ? "M" + std::to_string(i) : m[a].name();
  const std::string mj = m[b].name().empty() ? "M" + std::to_string(j) : m[b].name();
  if (f == OutputFormat::Json) {
    json out;
    out["tuple"] = tuple;
    out["i"] = i;
    out["j"] = j;
    json levels = json::array();
    for (const auto& l : ad.levels)
      levels.push_back({{"n", l.n}, {"name", l.module.name()}, {"dim", l.module.dim()},
                        {"degrees", l.module.dim() ? json(join_degrees(l.module)) : json(nullptr)},
                        {"iso", iso(l.module)}});
    out["levels"] = std::move(levels);
    out["m"] = ad.top();
    out["a"] = -static_cast<int>(ad.top());
    return emit(out);
  }
  std::ostringstream os;
  os << "ad(" << mi << ")^n(" << mj << ") in B(" << mi << " (+) " << mj << ")\n";
  os << std::left << std::setw(7) << "level" << std::setw(6) << "dim" << std::setw(22) << "degrees" << "iso\n";
  for (const auto& l : ad.levels)
    os << std::setw(7) << l.n << std::setw(6) << l.module.dim() << std::setw(22)
       << (l.module.dim() ? join_degrees(l.module) : "-") << iso(l.module) << "\n";
  os << "m_" << i << j << " = " << ad.top() << "\n";
  os << "a_" << i << j << " = " << -static_cast<int>(ad.top()) << "\n";
  return os.str();
}

std::string command_cartan(const Session& s, const std::string& tuple, OutputFormat f) {
  s.require_valid();
  const ModuleTuple m = s.tuple(tuple);
  const CartanMatrix a = cartan_matrix(m, s.cutoffs().ad);
  const CartanType type = finite_cartan_type(a);
  if (f == OutputFormat::Json) {
    json j;
    j["tuple"] = tuple;
    j["cartan"] = a.rows();
    j["finite_type"] = type.finite;
    j["type"] = type.to_string();
    return emit(j);
  }
  std::ostringstream os;
  os << "cartan matrix of " << tuple << ": " << a.to_string() << "\n";
  for (const auto& row : a.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << std::right << std::setw(3) << row[c];
    os << "\n";
  }
  os << "type: " << type.to_string() << "\n";
  return os.str();
}

std::string command_reflect(const Session& s, const std::string& tuple, std::size_t i, OutputFormat f) {
  s.require_valid();
  const ModuleTuple m = s.tuple(tuple);
  const std::size_t k = to_index(i, m.theta(), "i");
  const ModuleTuple r = reflect(m, k, s.cutoffs().ad);
  const IsoNamer iso(s);
  if (f == OutputFormat::Json) {
    json j;
    j["tuple"] = r.name;
    json entries = json::array();
    json modules = json::object();
    json names = json::array();
    for (const auto& e : r.entries) {
      entries.push_back({{"name", e.name()}, {"dim", e.dim()}, {"degrees", join_degrees(e)}, {"iso", iso(e)}});
      modules[e.name()] = module_stanza(e);
      names.push_back(e.name());
    }
    j["entries"] = std::move(entries);
    j["modules"] = std::move(modules);
    j["tuples"] = json::object({{r.name, std::move(names)}});
    return emit(j);
  }
  std::ostringstream os;
  os << r.name << "\n";
  os << std::left << std::setw(7) << "entry" << std::setw(22) << "name" << std::setw(5) << "dim" << std::setw(22)
     << "degrees" << "iso\n";
  for (std::size_t e = 0; e < r.theta(); ++e)
    os << std::setw(7) << e + 1 << std::setw(22) << r[e].name() << std::setw(5) << r[e].dim() << std::setw(22)
       << join_degrees(r[e]) << iso(r[e]) << "\n";
  return os.str();
}

std::string command_graph(const Session& s, const std::string& tuple, OutputFormat f) {
  s.require_valid();
  const SemiCartanGraph g = build_cartan_graph(s.tuple(tuple), graph_cutoffs(s));
  const ValidationReport axioms = check_axioms(g);
  const bool standard = is_standard(g);
  if (f == OutputFormat::Json) {
    json j;
    j["tuple"] = tuple;
    json vertices = json::array();
    for (std::size_t x = 0; x < g.size(); ++x) {
      json degrees = json::array();
      for (const auto& e : g.vertices[x].tuple.entries) degrees.push_back(join_degrees(e));
      vertices.push_back({{"index", x}, {"degrees", std::move(degrees)}, {"cartan", g.vertices[x].cartan.rows()}});
    }
    j["vertices"] = std::move(vertices);
    j["reflections"] = g.r;
    j["axioms"] = {{"passed", axioms.passed}, {"violations", axioms.violations}};
    j["standard"] = standard;
    j["dot"] = to_dot(g);
    return emit(j);
  }
  std::ostringstream os;
  os << "// semi-Cartan graph of " << tuple << "\n";
  os << "// vertices: " << g.size() << "\n";
  os << "// axioms: " << (axioms.passed ? "pass" : "fail") << "\n";
  for (const auto& v : axioms.violations) os << "//   " << v << "\n";
  os << "// standard: " << (standard ? "yes" : "no") << "\n";
  os << to_dot(g);
  return os.str();
}

std::string command_roots(const Session& s, const std::string& tuple, int bound, OutputFormat f) {
  s.require_valid();
  const SemiCartanGraph g = build_cartan_graph(s.tuple(tuple), graph_cutoffs(s));
  const RootSet roots = real_roots(g, 0, bound);
  const Finiteness fin = is_finite(g, bound);
  if (f == OutputFormat::Json) {
    json j;
    j["tuple"] = tuple;
    j["bound"] = bound;
    json list = json::array();
    for (const auto& r : roots.roots) list.push_back(r);
    j["roots"] = std::move(list);
    j["count"] = roots.roots.size();
    j["truncated"] = roots.truncated;
    j["finite"] = fin.finite;
    return emit(j);
  }
  std::ostringstream os;
  os << "real roots at vertex 0 of " << tuple << " (bound " << bound << ")\n";
  for (const auto& r : roots.roots) os << root_string(r) << "\n";
  os << "count: " << roots.roots.size() << "\n";
  os << "truncated: " << (roots.truncated ? "yes" : "no") << "\n";
  os << "finite: " << (fin.finite ? "yes" : "no") << "\n";
  return os.str();
}

std::string command_certify(const Session& s, const std::string& tuple, OutputFormat f) {
  s.require_valid();
  const Certificate c = infinite_dim_certificate(s.tuple(tuple), graph_cutoffs(s));
  if (f == OutputFormat::Json) {
    json j;
    j["tuple"] = tuple;
    j["verdict"] = c.verdict == Certificate::Verdict::InfiniteDimensional ? "infinite-dimensional" : "no conclusion";
    j["vertices"] = c.graph.size();
    j["standard"] = c.standard;
    if (!c.graph.vertices.empty()) j["cartan"] = c.graph.vertices[0].cartan.rows();
    j["type"] = c.type.to_string();
    return emit(j);
  }
  return "certificate for " + tuple + "\n" + c.report();
}

}  // namespace nichols
