#include "khtight/json_io.hpp"

#include <sstream>

#include "json.hpp"

namespace khtight {

using json = nlohmann::ordered_json;

namespace {

std::string emit(const json& j, int indent) { return j.dump(indent); }

json table_json(const HomologyTable& h) {
  json entries = json::array();
  for (const auto& [k, v] : h.dims) entries.push_back({{"i", k.first}, {"q", k.second}, {"dim", v}});
  return {{"total_rank", h.total_rank()}, {"entries", entries}};
}

HomologyTable table_from(const json& j) {
  HomologyTable h;
  for (const auto& e : j.at("entries")) h.dims[{e.at("i").get<int>(), e.at("q").get<int>()}] = e.at("dim").get<int>();
  return h;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json node_json(const QANode& n) {
  json j{{"link", n.link}, {"det", n.det}};
  if (n.smoothing) j["smoothing"] = to_string(*n.smoothing);
  if (n.is_leaf()) {
    j["leaf"] = n.leaf;
  } else {
    j["witness_letter"] = *n.witness;
    j["children"] = json::array();
    for (const auto& c : n.children) j["children"].push_back(node_json(c));
  }
  return j;
}

json matrix_json(const IntMatrix& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(row);
  return a;
}

json vectors_json(const std::vector<std::vector<int>>& v) {
  json a = json::array();
  for (const auto& row : v) a.push_back(row);
  return a;
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw MathError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string to_json(const HomologyTable& h, int indent) { return emit(table_json(h), indent); }

std::string to_json(const VerdictReport& r, int indent) {
  json j;
  j["braid"] = to_string(r.braid);
  j["strands"] = r.braid.strands;
  j["components"] = r.components;
  j["crossings"] = r.crossings;
  j["sl"] = r.sl;
  j["s"] = optional_json(r.s);
  j["sigma"] = optional_json(r.sigma);
  j["det"] = optional_json(r.det);
  j["kh_rank"] = optional_json(r.kh_rank);
  j["kh"] = table_json(r.kh);
  j["thin"] = r.thin;
  j["collapse"] = r.collapse;
  j["psi_nonzero"] = r.psi_nonzero;
  if (r.psi_grading)
    j["psi_grading"] = {{"i", r.psi_grading->i}, {"q", r.psi_grading->q}, {"a", r.psi_grading->a}};
  else
    j["psi_grading"] = nullptr;
  j["verdict"] = to_string(r.verdict);
  j["notes"] = r.notes;
  j["timing_ms"] = r.timing_ms;
  j["generators"] = r.generators;
  j["reduced_generators"] = r.reduced_generators;
  return emit(j, indent);
}

VerdictReport verdict_from_json(std::string_view text) {
  return guarded("verdict json", [&] {
    auto j = json::parse(text);
    VerdictReport r;
    r.braid = parse_braid(j.at("braid").get<std::string>(), j.at("strands").get<int>());
    r.components = j.at("components").get<int>();
    r.crossings = j.at("crossings").get<int>();
    r.sl = j.at("sl").get<int>();
    r.s = optional_from<int>(j, "s");
    r.sigma = optional_from<int>(j, "sigma");
    r.det = optional_from<long long>(j, "det");
    r.kh_rank = optional_from<int>(j, "kh_rank");
    r.kh = table_from(j.at("kh"));
    r.thin = j.at("thin").get<bool>();
    r.collapse = j.at("collapse").get<bool>();
    r.psi_nonzero = j.at("psi_nonzero").get<bool>();
    if (!j.at("psi_grading").is_null()) {
      const auto& g = j.at("psi_grading");
      r.psi_grading = Grading{g.at("i").get<int>(), g.at("q").get<int>(), g.at("a").get<int>()};
    }
    auto v = j.at("verdict").get<std::string>();
    r.verdict = v == "TIGHT_CERTIFIED" ? Verdict::tight_certified
                : v == "PSI_ZERO"      ? Verdict::psi_zero
                                       : Verdict::inconclusive;
    r.notes = j.at("notes").get<std::map<std::string, std::string>>();
    r.timing_ms = j.at("timing_ms").get<std::map<std::string, double>>();
    r.generators = j.at("generators").get<std::size_t>();
    r.reduced_generators = j.at("reduced_generators").get<std::size_t>();
    return r;
  });
}

std::string to_json(const QACertificate& c, int indent) {
  json j{{"braid", to_string(c.word)},
         {"strands", c.word.strands},
         {"depth", c.root.depth()},
         {"consistent", certificate_consistent(c.root)},
         {"root", node_json(c.root)}};
  return emit(j, indent);
}

std::string to_json(const SurgeryDiagram& s, int indent) {
  json comps = json::array();
  for (const auto& c : s.components) comps.push_back({{"tb", c.tb}, {"rot", c.rot}, {"coeff", c.coeff}});
  return emit(json{{"components", comps}, {"linking", matrix_json(s.linking)}}, indent);
}

SurgeryDiagram surgery_from_json(std::string_view text) {
  return guarded("surgery json", [&] {
    auto j = json::parse(text);
    SurgeryDiagram s;
    for (const auto& c : j.at("components"))
      s.components.push_back({c.at("tb").get<int>(), c.at("rot").get<int>(), c.at("coeff").get<int>()});
    s.linking = j.at("linking").get<IntMatrix>();
    s.validate();
    return s;
  });
}

std::string to_json(const D3Result& d, int indent) {
  json j{{"d3", to_string(d.d3)},     {"c1_sq", to_string(d.c1_sq)}, {"chi", d.chi},
         {"sign", d.sign},            {"m", d.m},                    {"h1_order", d.h1_order}};
  return emit(j, indent);
}

std::string to_json(const PageReport& p, int indent) {
  json pages = json::array();
  for (const auto& page : p.pages) {
    json dims = json::array();
    for (const auto& [deg, dim] : page.dims) {
      json e{{"degree", deg}, {"dim", dim}, {"other_levels", page.other_levels.at(deg)}};
      auto it = page.differential_rank.find(deg);
      e["d_rank"] = it == page.differential_rank.end() ? 0 : it->second;
      dims.push_back(e);
    }
    pages.push_back({{"r", page.r}, {"total", page.total()}, {"degrees", dims}});
  }
  json j{{"filtration", to_string(p.which)},
         {"pages", pages},
         {"homology", {{"rank", p.homology_rank},
                       {"A_levels", p.homology_A_levels},
                       {"I_levels", p.homology_I_levels}}}};
  return emit(j, indent);
}

std::string to_json(const GramLattice& g, int indent) {
  return emit(json{{"labels", g.labels}, {"gram", matrix_json(g.gram)}}, indent);
}

std::string to_json(const std::vector<Embedding>& e, int indent) {
  json a = json::array();
  for (const auto& x : e) a.push_back({{"n", x.n}, {"vectors", vectors_json(x.vectors)}});
  return emit(a, indent);
}

std::string to_json(const Complement& c, int indent) {
  json j{{"basis", vectors_json(c.basis)},
         {"gram", matrix_json(c.lattice.gram)},
         {"diagonal", c.diagonal},
         {"diagonal_entries", c.diagonal_entries}};
  return emit(j, indent);
}

std::string to_json(const ParityResult& p, int indent) {
  json j{{"obstructed", p.obstructed}};
  j["witness"] = optional_json(p.witness);
  j["forced_b2"] = p.obstructed ? json(p.forced_b2) : json(nullptr);
  j["required_d3"] = p.required_d3 ? json(to_string(*p.required_d3)) : json(nullptr);
  return emit(j, indent);
}

GramLattice gram_from_text(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw MathError("gram: empty input");
  GramLattice g;
  if (text[first] == '[' || text[first] == '{') {
    guarded("gram json", [&] {
      auto j = json::parse(text);
      if (j.is_array()) {
        g.gram = j.get<IntMatrix>();
      } else {
        g.gram = j.at("gram").get<IntMatrix>();
        if (j.contains("labels")) g.labels = j.at("labels").get<std::vector<std::string>>();
      }
      return 0;
    });
  } else {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::vector<long long> row;
      std::istringstream cells(line);
      std::string cell;
      while (std::getline(cells, cell, ',')) {
        try {
          std::size_t used = 0;
          row.push_back(std::stoll(cell, &used));
        } catch (const std::exception&) {
          throw MathError("gram: bad CSV entry '" + cell + "'");
        }
      }
      g.gram.push_back(std::move(row));
    }
  }
  if (g.labels.empty())
    for (std::size_t i = 0; i < g.gram.size(); ++i) g.labels.push_back("v" + std::to_string(i + 1));
  g.validate();
  return g;
}

}  // namespace khtight
