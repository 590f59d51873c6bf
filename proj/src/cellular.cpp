/*
  cellular.cpp
*/

#include "tld/cellular.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tld {

int HalfDiagram::decoration_count() const {
  int c = 0;
  for (const Cup& cup : cups)
    if (cup.dec) ++c;
  return c;
}

std::vector<int> HalfDiagram::propagating_nodes() const {
  std::vector<bool> matched(k + 1, false);
  for (const Cup& c : cups) matched[c.a] = matched[c.b] = true;
  std::vector<int> out;
  for (int i = 1; i <= k; ++i)
    if (!matched[i]) out.push_back(i);
  return out;
}

HalfDiagram make_half(int k, std::vector<HalfDiagram::Cup> cups) {
  if (k < 1) throw std::invalid_argument("half-diagram requires k >= 1");
  for (auto& c : cups)
    if (c.a > c.b) std::swap(c.a, c.b);
  std::sort(cups.begin(), cups.end());
  std::vector<int> incidence(k + 1, 0);
  for (const auto& c : cups) {
    if (c.a < 1 || c.b > k || c.a == c.b)
      throw std::invalid_argument("bad cup endpoints");
    ++incidence[c.a];
    ++incidence[c.b];
  }
  for (int i = 1; i <= k; ++i)
    if (incidence[i] > 1) throw std::invalid_argument("node in two cups");
  for (std::size_t i = 0; i < cups.size(); ++i)
    for (std::size_t j = i + 1; j < cups.size(); ++j)
      if (cups[i].a < cups[j].a && cups[j].a < cups[i].b &&
          cups[i].b < cups[j].b)
        throw std::invalid_argument("cups cross");
  // Propagating nodes may not sit under a cup, and a decorated cup must
  // have nothing at all to its left.
  for (int i = 1; i <= k; ++i) {
    if (incidence[i]) continue;
    for (const auto& c : cups)
      if (c.a < i && i < c.b)
        throw std::invalid_argument("propagating node nested under a cup");
  }
  for (const auto& c : cups) {
    if (!c.dec) continue;
    for (const auto& o : cups)
      if (o.a < c.a && c.b < o.b)
        throw std::invalid_argument("decorated cup is nested");
    for (int i = 1; i < c.a; ++i)
      if (!incidence[i])
        throw std::invalid_argument(
            "decorated cup has a propagating node to its left");
  }
  return HalfDiagram{k, std::move(cups)};
}

std::pair<HalfDiagram, HalfDiagram> split(const Diagram& d) {
  if (admissible_type(d) != AdmissibleType::TypeII)
    throw std::domain_error("split: diagram is not type II admissible");
  const int k = d.k();
  std::vector<HalfDiagram::Cup> top, bottom;
  for (const auto& e : d.edges()) {
    if (e.b < k) {
      top.push_back({e.a + 1, e.b + 1, e.dec});
    } else if (e.a >= k) {
      bottom.push_back({2 * k - e.b, 2 * k - e.a, e.dec});
    }
  }
  return {make_half(k, std::move(top)), make_half(k, std::move(bottom))};
}

Diagram join(const HalfDiagram& h1, const HalfDiagram& h2) {
  if (h1.k != h2.k) throw std::invalid_argument("join: strand mismatch");
  if (h1.cups.size() != h2.cups.size())
    throw std::invalid_argument("join: propagating counts differ");
  const int k = h1.k;
  int total_dec = h1.decoration_count() + h2.decoration_count();
  auto prop1 = h1.propagating_nodes();
  auto prop2 = h2.propagating_nodes();
  if (prop1.empty() && total_dec % 2 != 0)
    throw std::invalid_argument("join: odd decoration total with p = 0");
  std::vector<Diagram::Edge> edges;
  for (const auto& c : h1.cups) edges.push_back({c.a - 1, c.b - 1, c.dec});
  for (const auto& c : h2.cups)
    edges.push_back({2 * k - c.b, 2 * k - c.a, c.dec});
  for (std::size_t i = 0; i < prop1.size(); ++i) {
    bool dec = i == 0 && total_dec % 2 != 0;
    edges.push_back({prop1[i] - 1, 2 * k - prop2[i], dec});
  }
  return Diagram::from_edges(k, DiagramKind::DecoratedD, std::move(edges),
                             false);
}

bool half_leq(const HalfDiagram& h, const HalfDiagram& hp) {
  if (h.k != hp.k) return false;
  for (const auto& c : h.cups)
    if (!std::binary_search(hp.cups.begin(), hp.cups.end(), c)) return false;
  return true;
}

std::string CellLabel::str() const {
  switch (tag) {
    case Tag::ZeroPlus:
      return "0+";
    case Tag::ZeroMinus:
      return "0-";
    case Tag::Int:
      return std::to_string(m);
  }
  return {};
}

bool label_less(const CellLabel& a, const CellLabel& b) {
  return a.abs() < b.abs();
}

int CellDatum::label_index(const CellLabel& l) const {
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    if (labels[i] == l) return i;
  throw std::invalid_argument("label not in datum: " + l.str());
}

namespace {

CellLabel label_of_half(const HalfDiagram& h) {
  if (h.p() > 0) return CellLabel::integer(h.p());
  return h.decoration_count() % 2 == 0 ? CellLabel::zero_plus()
                                       : CellLabel::zero_minus();
}

}  // namespace

CellDatum build_cell_datum(int n) {
  CellDatum datum;
  datum.n = n;
  for (int m = n; m >= 1; m -= 2) datum.labels.push_back(CellLabel::integer(m));
  if (n % 2 == 0) {
    datum.labels.push_back(CellLabel::zero_plus());
    datum.labels.push_back(CellLabel::zero_minus());
  }
  std::vector<std::set<HalfDiagram>> sets(datum.labels.size());
  auto basis = enumerate_admissible(n, AdmissibleFilter::TypeII);
  std::vector<std::pair<HalfDiagram, HalfDiagram>> halves;
  halves.reserve(basis.size());
  for (const auto& d : basis) {
    auto [top, bottom] = split(d);
    sets[datum.label_index(label_of_half(top))].insert(top);
    sets[datum.label_index(label_of_half(bottom))].insert(bottom);
    halves.emplace_back(std::move(top), std::move(bottom));
  }
  datum.m_sets.reserve(sets.size());
  for (auto& s : sets) datum.m_sets.emplace_back(s.begin(), s.end());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& [top, bottom] = halves[i];
    int li = datum.label_index(label_of_half(top));
    const auto& ms = datum.m_sets[li];
    auto pos_of = [&](const HalfDiagram& h) {
      auto it = std::lower_bound(ms.begin(), ms.end(), h);
      return static_cast<int>(it - ms.begin());
    };
    datum.basis_index.emplace(
        basis[i], CellDatum::BasisTriple{li, pos_of(top), pos_of(bottom)});
  }
  return datum;
}

AlgebraElement cell_C(const CellDatum& datum, const CellLabel& label,
                      const HalfDiagram& S, const HalfDiagram& T) {
  const auto& ms = datum.m_of(label);
  if (!std::binary_search(ms.begin(), ms.end(), S) ||
      !std::binary_search(ms.begin(), ms.end(), T))
    throw std::invalid_argument("cell_C: half-diagram not in M(" +
                                label.str() + ")");
  AlgebraKind kind{AlgebraClass::LFD_D, datum.n};
  return AlgebraElement::basis(kind, join(S, T));
}

CellReport verify_cellularity(int n) {
  CellReport report;
  report.rank = n;
  CellDatum datum = build_cell_datum(n);
  AlgebraKind kind{AlgebraClass::LFD_D, n};
  auto basis = enumerate_admissible(n, AdmissibleFilter::TypeII);
  std::set<Diagram> basis_set(basis.begin(), basis.end());
  report.dim = basis.size();
  for (std::size_t i = 0; i < datum.labels.size(); ++i)
    report.m_sizes.emplace_back(datum.labels[i].str(),
                                static_cast<int>(datum.m_sets[i].size()));
  auto fail = [&](const std::string& what) { report.failures.push_back(what); };

  // Axiom 1: C is injective with image exactly the diagram basis.
  {
    std::set<Diagram> image;
    bool ok = true;
    std::size_t pairs = 0;
    for (std::size_t li = 0; li < datum.labels.size(); ++li)
      for (const auto& S : datum.m_sets[li])
        for (const auto& T : datum.m_sets[li]) {
          ++pairs;
          Diagram d = join(S, T);
          if (!image.insert(d).second) {
            fail("axiom1: join collision at lambda=" + datum.labels[li].str());
            ok = false;
          }
          if (!basis_set.count(d)) {
            fail("axiom1: join leaves the basis");
            ok = false;
          }
        }
    if (pairs != basis.size() || image.size() != basis.size()) {
      fail("axiom1: sum of |M(lambda)|^2 != dim");
      ok = false;
    }
    report.axiom1 = ok;
  }

  // Axiom 2: star is an involutive anti-automorphism swapping S and T.
  {
    bool ok = true;
    for (std::size_t li = 0; li < datum.labels.size() && ok; ++li)
      for (const auto& S : datum.m_sets[li])
        for (const auto& T : datum.m_sets[li])
          if (star(join(S, T)) != join(T, S)) {
            fail("axiom2: star(C(S,T)) != C(T,S)");
            ok = false;
          }
    for (std::size_t i = 0; i < basis.size() && ok; ++i) {
      const Diagram& x = basis[i];
      const Diagram& y = basis[(i * 7 + 3) % basis.size()];
      if (star(star(x)) != x) {
        fail("axiom2: star not involutive");
        ok = false;
      }
      AlgebraElement ex = AlgebraElement::basis(kind, x);
      AlgebraElement ey = AlgebraElement::basis(kind, y);
      if (star(elem_mul(ex, ey)) != elem_mul(star(ey), star(ex))) {
        fail("axiom2: star not an anti-automorphism");
        ok = false;
      }
    }
    report.axiom2 = ok;
  }

  // Axiom 3: a C(S,T) = sum_{S'} r_a(S',S) C(S',T) mod smaller p-values,
  // with r_a(S',S) independent of T and every coefficient in {0,1,delta}.
  {
    bool ok = true;
    auto gens = CoxeterGraph::type_d(n).generators();
    PolyDelta one = PolyDelta::one(), delta = PolyDelta::delta();
    for (Gen a : gens) {
      AlgebraElement ea = AlgebraElement::generator(kind, a);
      for (std::size_t li = 0; li < datum.labels.size(); ++li) {
        const auto& ms = datum.m_sets[li];
        int p_lambda = datum.labels[li].abs();
        for (const auto& S : ms) {
          bool have_base = false;
          std::vector<PolyDelta> base_r;
          for (const auto& T : ms) {
            AlgebraElement x = elem_mul(ea, cell_C(datum, datum.labels[li], S, T));
            std::vector<PolyDelta> r(ms.size());
            for (const auto& [d, coeff] : x.terms()) {
              if (d.p_value() < p_lambda) continue;  // in A(<lambda)
              if (d.p_value() > p_lambda) {
                fail("axiom3: p-value grew under multiplication");
                ok = false;
                continue;
              }
              auto [stop, sbot] = split(d);
              if (sbot != T) {
                fail("axiom3: surviving term does not end in T");
                ok = false;
                continue;
              }
              auto it = std::lower_bound(ms.begin(), ms.end(), stop);
              if (it == ms.end() || *it != stop) {
                fail("axiom3: surviving top half not in M(lambda)");
                ok = false;
                continue;
              }
              if (!(coeff == one || coeff == delta)) {
                fail("axiom3: coefficient outside {0,1,delta}: " + coeff.str());
                ok = false;
              }
              r[it - ms.begin()] = coeff;
            }
            if (!have_base) {
              base_r = r;
              have_base = true;
            } else if (r != base_r) {
              fail("axiom3: r_a(S',S) depends on T at lambda=" +
                   datum.labels[li].str());
              ok = false;
            }
          }
        }
      }
    }
    // Lemma-level check: a simple diagram times a basis diagram is
    // epsilon d' with epsilon in {0,1,delta} and bottom(d) <= bottom(d').
    for (Gen a : gens) {
      Diagram da = Diagram::simple(CoxeterGraph::type_d(n), a);
      for (const auto& d : basis) {
        ScaledDiagram sd = concat(da, d, MulMode::LFD);
        if (sd.is_zero) continue;
        if (sd.loop_power > 1) {
          fail("axiom3: epsilon outside {0,1,delta}");
          ok = false;
        }
        if (!half_leq(split(d).second, split(*sd.diagram).second)) {
          fail("axiom3: bottom half not preserved");
          ok = false;
        }
      }
    }
    report.axiom3 = ok;
  }
  return report;
}

}  // namespace tld
