/*
  algebra.cpp
*/

#include "tld/algebra.hpp"

#include <cstdlib>
#include <stdexcept>

namespace tld {

PolyDelta PolyDelta::monomial(int exponent, std::int64_t coeff) {
  if (exponent < 0) throw std::invalid_argument("negative delta exponent");
  PolyDelta p;
  if (coeff != 0) p.coeffs_[exponent] = coeff;
  return p;
}

std::string PolyDelta::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    auto [e, c] = *it;
    if (!out.empty()) out += c < 0 ? "-" : "+";
    std::int64_t a = std::abs(c);
    if (out.empty() && c < 0) out += "-";
    if (a != 1 || e == 0) out += std::to_string(a);
    if (e >= 1) out += "d";
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out;
}

PolyDelta operator+(const PolyDelta& x, const PolyDelta& y) {
  PolyDelta out = x;
  for (auto [e, c] : y.coeffs_) {
    auto it = out.coeffs_.find(e);
    if (it == out.coeffs_.end()) {
      out.coeffs_[e] = c;
    } else if ((it->second += c) == 0) {
      out.coeffs_.erase(it);
    }
  }
  return out;
}

PolyDelta operator-(const PolyDelta& x, const PolyDelta& y) {
  PolyDelta neg;
  for (auto [e, c] : y.coeffs_) neg.coeffs_[e] = -c;
  return x + neg;
}

PolyDelta operator*(const PolyDelta& x, const PolyDelta& y) {
  PolyDelta out;
  for (auto [ex, cx] : x.coeffs_)
    for (auto [ey, cy] : y.coeffs_) {
      auto it = out.coeffs_.find(ex + ey);
      if (it == out.coeffs_.end()) {
        out.coeffs_[ex + ey] = cx * cy;
      } else if ((it->second += cx * cy) == 0) {
        out.coeffs_.erase(it);
      }
    }
  return out;
}

namespace {

void check_diagram(const AlgebraKind& kind, const Diagram& d) {
  if (d.k() != kind.strands() || d.kind() != kind.diagram_kind())
    throw std::invalid_argument("diagram does not fit the algebra kind");
}

}  // namespace

AlgebraElement AlgebraElement::unit(AlgebraKind kind) {
  return basis(kind, Diagram::identity(kind.strands(), kind.diagram_kind()));
}

AlgebraElement AlgebraElement::basis(AlgebraKind kind, Diagram d) {
  check_diagram(kind, d);
  AlgebraElement x(kind);
  x.terms_.emplace(std::move(d), PolyDelta::one());
  return x;
}

AlgebraElement AlgebraElement::generator(AlgebraKind kind, Gen g) {
  return basis(kind, Diagram::simple(kind.coxeter_graph(), g));
}

void AlgebraElement::add_term(const Diagram& d, const PolyDelta& coeff) {
  check_diagram(kind_, d);
  if (coeff.is_zero()) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, coeff);
    return;
  }
  it->second = it->second + coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement elem_add(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.kind() != y.kind())
    throw std::invalid_argument("elem_add: kind mismatch");
  AlgebraElement out = x;
  for (const auto& [d, c] : y.terms()) out.add_term(d, c);
  return out;
}

AlgebraElement elem_scale(const PolyDelta& p, const AlgebraElement& x) {
  AlgebraElement out = AlgebraElement::zero(x.kind());
  for (const auto& [d, c] : x.terms()) out.add_term(d, p * c);
  return out;
}

AlgebraElement elem_mul(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.kind() != y.kind())
    throw std::invalid_argument("elem_mul: kind mismatch");
  AlgebraElement out = AlgebraElement::zero(x.kind());
  MulMode mode = x.kind().mode();
  for (const auto& [dx, cx] : x.terms())
    for (const auto& [dy, cy] : y.terms()) {
      ScaledDiagram sd = concat(dx, dy, mode);
      if (sd.is_zero) continue;
      out.add_term(*sd.diagram, cx * cy * PolyDelta::delta(sd.loop_power));
    }
  return out;
}

AlgebraElement star(const AlgebraElement& x) {
  AlgebraElement out = AlgebraElement::zero(x.kind());
  for (const auto& [d, c] : x.terms()) out.add_term(star(d), c);
  return out;
}

AlgebraElement word_to_element(const Word& w, AlgebraKind kind) {
  CoxeterGraph g = kind.coxeter_graph();
  AlgebraElement out = AlgebraElement::unit(kind);
  for (Gen s : w.letters) {
    if (!g.valid(s))
      throw std::invalid_argument("word_to_element: letter not in algebra");
    out = elem_mul(out, AlgebraElement::generator(kind, s));
  }
  return out;
}

RelationReport verify_presentation(AlgebraKind kind) {
  RelationReport report{kind, 0, {}};
  CoxeterGraph graph = kind.coxeter_graph();
  auto gens = graph.generators();
  auto E = [&](Gen s) { return AlgebraElement::generator(kind, s); };
  auto fail = [&](const std::string& what) { report.failures.push_back(what); };

  for (Gen s : gens) {
    ++report.checked;
    if (elem_mul(E(s), E(s)) != elem_scale(PolyDelta::delta(), E(s)))
      fail("b_" + to_string(s) + "^2 != delta b_" + to_string(s));
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Gen s = gens[i], t = gens[j];
      if (graph.commute(s, t)) {
        ++report.checked;
        if (elem_mul(E(s), E(t)) != elem_mul(E(t), E(s)))
          fail("b_" + to_string(s) + " b_" + to_string(t) + " not commuting");
      } else {
        ++report.checked;
        if (elem_mul(elem_mul(E(s), E(t)), E(s)) != E(s))
          fail("b_" + to_string(s) + " b_" + to_string(t) + " b_" +
               to_string(s) + " != b_" + to_string(s));
        ++report.checked;
        if (elem_mul(elem_mul(E(t), E(s)), E(t)) != E(t))
          fail("b_" + to_string(t) + " b_" + to_string(s) + " b_" +
               to_string(t) + " != b_" + to_string(t));
      }
    }
  if (kind.cls == AlgebraClass::LFD_D) {
    Gen one = Gen::index(1), one_bar = Gen::one_bar();
    ++report.checked;
    if (!elem_mul(E(one), E(one_bar)).is_zero())
      fail("b_1 b_1bar != 0");
    ++report.checked;
    if (!elem_mul(E(one_bar), E(one)).is_zero())
      fail("b_1bar b_1 != 0");
  }
  return report;
}

std::size_t dimension(AlgebraKind kind) {
  switch (kind.cls) {
    case AlgebraClass::DTL_A:
      return enumerate_plain(kind.strands()).size();
    case AlgebraClass::DTL_D:
      return enumerate_admissible(kind.rank, AdmissibleFilter::All).size();
    case AlgebraClass::LFD_D:
      return enumerate_admissible(kind.rank, AdmissibleFilter::TypeII).size();
  }
  throw std::logic_error("unreachable");
}

}  // namespace tld
