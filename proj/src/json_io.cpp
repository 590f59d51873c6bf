/*
  json_io.cpp
*/

#include "tld/json_io.hpp"

#include <stdexcept>

namespace tld {

ojson diagram_to_json(const Diagram& d) {
  ojson j;
  j["k"] = d.k();
  ojson edges = ojson::array();
  for (const auto& e : d.edges()) {
    ojson je;
    je["a"] = Diagram::node_name(e.a, d.k());
    je["b"] = Diagram::node_name(e.b, d.k());
    je["dec"] = e.dec ? 1 : 0;
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  j["decorated_loop"] = d.decorated_loop();
  return j;
}

namespace {

int parse_node(const std::string& name, int k) {
  if (name.size() < 2 || (name[0] != 't' && name[0] != 'b'))
    throw std::invalid_argument("bad node name: " + name);
  int idx = 0;
  try {
    std::size_t pos = 0;
    idx = std::stoi(name.substr(1), &pos);
    if (pos + 1 != name.size()) throw std::invalid_argument(name);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad node name: " + name);
  }
  Face face = name[0] == 't' ? Face::North : Face::South;
  return Diagram::pos_of({face, idx}, k);
}

}  // namespace

Diagram diagram_from_json(const nlohmann::json& j, DiagramKind kind) {
  if (!j.is_object() || !j.contains("k") || !j.contains("edges"))
    throw std::invalid_argument("diagram JSON needs k and edges");
  int k = j.at("k").get<int>();
  std::vector<Diagram::Edge> edges;
  for (const auto& je : j.at("edges")) {
    Diagram::Edge e;
    e.a = parse_node(je.at("a").get<std::string>(), k);
    e.b = parse_node(je.at("b").get<std::string>(), k);
    e.dec = je.at("dec").get<int>() != 0;
    edges.push_back(e);
  }
  bool loop = j.value("decorated_loop", false);
  return Diagram::from_edges(k, kind, std::move(edges), loop);
}

std::string kind_name(const AlgebraKind& kind) {
  switch (kind.cls) {
    case AlgebraClass::DTL_A:
      return "dtl-a";
    case AlgebraClass::DTL_D:
      return "dtl-d";
    case AlgebraClass::LFD_D:
      return "lfd-d";
  }
  return {};
}

AlgebraKind kind_from_name(const std::string& name, int rank) {
  AlgebraKind kind{AlgebraClass::DTL_A, rank};
  if (name == "dtl-a")
    kind.cls = AlgebraClass::DTL_A;
  else if (name == "dtl-d")
    kind.cls = AlgebraClass::DTL_D;
  else if (name == "lfd-d")
    kind.cls = AlgebraClass::LFD_D;
  else
    throw std::invalid_argument("unknown algebra kind: " + name);
  kind.coxeter_graph();  // rank validation
  return kind;
}

ojson element_to_json(const AlgebraElement& x) {
  ojson j;
  j["kind"] = kind_name(x.kind());
  j["rank"] = x.kind().rank;
  ojson terms = ojson::array();
  for (const auto& [d, coeff] : x.terms()) {
    ojson jt;
    ojson jc;
    for (auto [e, c] : coeff.coeffs()) jc[std::to_string(e)] = c;
    jt["coeff"] = std::move(jc);
    jt["diagram"] = diagram_to_json(d);
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j;
}

AlgebraElement element_from_json(const nlohmann::json& j) {
  AlgebraKind kind =
      kind_from_name(j.at("kind").get<std::string>(), j.at("rank").get<int>());
  AlgebraElement x = AlgebraElement::zero(kind);
  for (const auto& jt : j.at("terms")) {
    PolyDelta coeff;
    for (const auto& [key, value] : jt.at("coeff").items()) {
      int exp = std::stoi(key);
      coeff = coeff + PolyDelta::monomial(exp, value.get<std::int64_t>());
    }
    Diagram d = diagram_from_json(jt.at("diagram"), kind.diagram_kind());
    x.add_term(d, coeff);
  }
  return x;
}

ojson relation_report_to_json(const RelationReport& r) {
  ojson j;
  j["kind"] = kind_name(r.kind);
  j["rank"] = r.kind.rank;
  j["checked"] = r.checked;
  j["result"] = r.passed() ? "pass" : "fail";
  if (!r.passed()) j["failures"] = r.failures;
  return j;
}

ojson cell_report_to_json(const CellReport& r) {
  ojson j;
  j["rank"] = r.rank;
  j["axiom1"] = r.axiom1 ? "pass" : "fail";
  j["axiom2"] = r.axiom2 ? "pass" : "fail";
  j["axiom3"] = r.axiom3 ? "pass" : "fail";
  ojson sizes;
  for (const auto& [label, size] : r.m_sizes) sizes[label] = size;
  j["m_sizes"] = std::move(sizes);
  j["dim"] = r.dim;
  if (!r.failures.empty()) j["failures"] = r.failures;
  return j;
}

}  // namespace tld
