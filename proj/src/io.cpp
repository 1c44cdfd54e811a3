#include "smatrix/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace smatrix {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view context) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw Error(Errc::ParseError, "bad integer '" + std::string(text) + "' in " + std::string(context));
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

/// Splits "a,b,c" or "(1,0),(0,1)" at top-level commas.
std::vector<std::string_view> split_key(std::string_view key) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (key[i] == '(') ++depth;
    if (key[i] == ')') --depth;
    if (key[i] == ',' && depth == 0) {
      parts.push_back(trim(key.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(key.substr(start)));
  return parts;
}

std::vector<std::size_t> parse_key(const AbelianGroup& g, std::string_view key, std::size_t arity) {
  const auto parts = split_key(key);
  if (parts.size() != arity) {
    throw Error(Errc::ParseError, "key '" + std::string(key) + "' should list " + std::to_string(arity) + " elements");
  }
  std::vector<std::size_t> out;
  for (const auto part : parts) out.push_back(g.index_of(parse_element(g, part)));
  return out;
}

RootOfUnity root_from_json(const Json& j) {
  if (!j.is_string()) throw Error(Errc::ParseError, "root of unity must be a string like \"z4^1\", got " + j.dump());
  return RootOfUnity::parse(j.get<std::string>());
}

std::string read_all(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool is_preset_name(std::string_view s) {
  return s == "trivial" || s == "svect" || s == "semion" || s == "semion-bar" || s == "toric" ||
         s.starts_with("double:") || s.starts_with("vect:");
}

Json parse_document(const std::string& text, std::string_view source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string(source) + ": " + e.what());
  }
}

}  // namespace

Element parse_element(const AbelianGroup& g, std::string_view text) {
  text = trim(text);
  Element x;
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw Error(Errc::ParseError, "unbalanced element '" + std::string(text) + "'");
    for (const auto part : split_key(text.substr(1, text.size() - 2))) x.coords.push_back(parse_int(part, text));
  } else {
    x.coords.push_back(parse_int(text, "element"));
  }
  if (!g.contains(x)) {
    throw Error(Errc::ParseError, "'" + std::string(text) + "' is not a reduced element of " + g.to_string());
  }
  return x;
}

Json to_json(const CycloMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Subgroup& h) {
  Json out = Json::array();
  for (const auto& x : h.elements()) out.push_back(x.to_string());
  return out;
}

Json to_json(const QuadraticForm& q) {
  Json out = Json::object();
  for (std::size_t i = 0; i < q.group().order(); ++i) out[q.group().element_at(i).to_string()] = q[i].to_string();
  return out;
}

Json to_json(const AbelianCocycle& c) {
  const AbelianGroup& g = c.group();
  const std::size_t n = g.order();
  const auto el = elements(g);
  Json psi = Json::object();
  Json omega = Json::object();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!c.omega(a, b).is_one()) omega[el[a].to_string() + "," + el[b].to_string()] = c.omega(a, b).to_string();
      for (std::size_t x = 0; x < n; ++x) {
        if (c.psi(a, b, x).is_one()) continue;
        psi[el[a].to_string() + "," + el[b].to_string() + "," + el[x].to_string()] = c.psi(a, b, x).to_string();
      }
    }
  }
  return Json{{"psi", std::move(psi)}, {"omega", std::move(omega)}};
}

Json to_json(const PointedBFC& b) {
  Json out{{"label", b.label()}, {"group", b.group().to_string()}, {"q", to_json(b.form())}};
  if (b.has_cocycle()) out["cocycle"] = to_json(b.cocycle());
  return out;
}

Json to_json(const CheckResult& r) {
  Json out{{"pass", r.passed}};
  if (!r.passed) {
    out["condition"] = r.condition;
    Json w = Json::array();
    for (const auto& x : r.witness) w.push_back(x.to_string());
    out["witness"] = std::move(w);
  }
  return out;
}

QuadraticForm form_from_json(const AbelianGroup& g, const Json& j) {
  if (j.is_object() && j.contains("values")) {
    std::vector<RootOfUnity> values;
    for (const auto& v : j.at("values")) values.push_back(root_from_json(v));
    std::vector<std::vector<RootOfUnity>> pairings(g.rank(), std::vector<RootOfUnity>(g.rank()));
    if (j.contains("pairings")) {
      const Json& p = j.at("pairings");
      if (!p.is_array() || p.size() != g.rank()) throw Error(Errc::ParseError, "pairings must be a rank x rank array");
      for (std::size_t r = 0; r < g.rank(); ++r) {
        if (!p[r].is_array() || p[r].size() != g.rank()) {
          throw Error(Errc::ParseError, "pairings must be a rank x rank array");
        }
        for (std::size_t s = 0; s < g.rank(); ++s) pairings[r][s] = root_from_json(p[r][s]);
      }
    }
    if (values.size() != g.rank()) throw Error(Errc::ParseError, "q_gen needs one value per cyclic factor");
    return form_from_generators(g, values, pairings);
  }
  if (!j.is_object()) throw Error(Errc::ParseError, "q must be an object keyed by element");
  std::vector<RootOfUnity> values(g.order());
  std::vector<char> seen(g.order(), 0);
  for (const auto& [key, value] : j.items()) {
    const std::size_t i = g.index_of(parse_element(g, key));
    values[i] = root_from_json(value);
    seen[i] = 1;
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (!seen[i]) throw Error(Errc::ParseError, "q is missing a value at " + g.element_at(i).to_string());
  }
  QuadraticForm q(g, std::move(values));
  require_valid(q);
  return q;
}

AbelianCocycle cocycle_from_json(const AbelianGroup& g, const Json& j) {
  const std::size_t n = g.order();
  std::vector<RootOfUnity> psi(n * n * n);
  std::vector<RootOfUnity> omega(n * n);
  if (!j.is_object()) throw Error(Errc::ParseError, "cocycle must be an object with psi and omega tables");
  if (j.contains("psi")) {
    for (const auto& [key, value] : j.at("psi").items()) {
      const auto k = parse_key(g, key, 3);
      psi[(k[0] * n + k[1]) * n + k[2]] = root_from_json(value);
    }
  }
  if (j.contains("omega")) {
    for (const auto& [key, value] : j.at("omega").items()) {
      const auto k = parse_key(g, key, 2);
      omega[k[0] * n + k[1]] = root_from_json(value);
    }
  }
  AbelianCocycle c(g, std::move(psi), std::move(omega));
  if (auto r = check_abelian_cocycle(c); !r) throw Error(Errc::NotACocycle, r.to_string());
  return c;
}

PointedBFC category_from_json(const Json& doc) {
  const Json* j = &doc;
  if (doc.contains("results") && doc.at("results").contains("category") && doc.at("results").at("category").is_object()) {
    j = &doc.at("results").at("category");
  } else if (doc.contains("category") && doc.at("category").is_object()) {
    j = &doc.at("category");
  }
  if (!j->is_object() || !j->contains("group")) throw Error(Errc::ParseError, "category document needs a \"group\"");
  try {
    const AbelianGroup g = AbelianGroup::parse(j->at("group").get<std::string>());
    const std::string label = j->contains("label") ? j->at("label").get<std::string>() : std::string("custom");
    if (j->contains("cocycle")) {
      PointedBFC b = PointedBFC::from_cocycle(cocycle_from_json(g, j->at("cocycle")), label);
      for (const char* key : {"q", "q_gen"}) {
        if (j->contains(key) && !(form_from_json(g, j->at(key)) == b.form())) {
          throw Error(Errc::InvalidQuadraticForm, "q does not equal the trace of the given cocycle");
        }
      }
      return b;
    }
    QuadraticForm q = j->contains("q") ? form_from_json(g, j->at("q"))
                      : j->contains("q_gen") ? form_from_json(g, j->at("q_gen"))
                                             : throw Error(Errc::ParseError, "category needs q, q_gen or cocycle");
    if (g.order() <= kCocycleTableMaxOrder) return PointedBFC::with_standard_cocycle(std::move(q), label);
    return PointedBFC::from_form(std::move(q), label);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

PointedBFC load_category(std::string_view spec, std::istream& in) {
  if (spec == "-") return category_from_json(parse_document(read_all(in), "stdin"));
  if (is_preset_name(spec)) return PointedBFC::preset(spec);
  std::ifstream file{std::string(spec)};
  if (!file) throw Error(Errc::ParseError, "'" + std::string(spec) + "' is neither a preset nor a readable file");
  return category_from_json(parse_document(read_all(file), spec));
}

}  // namespace smatrix
