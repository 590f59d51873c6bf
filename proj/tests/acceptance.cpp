/*
  acceptance.cpp

  End-to-end acceptance suite.  Each criterion prints a single PASS/FAIL
  line; the process exits nonzero if any criterion fails.
*/

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "tld/cellular.hpp"
#include "tld/heap.hpp"
#include "tld/json_io.hpp"

using namespace tld;

namespace {

struct Checker {
  bool ok = true;
  std::vector<std::string> notes;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
};

// Catalan numbers by the standard recurrence; the independent oracle for
// criterion 1 and the type split table.
std::vector<std::int64_t> catalan_table(int up_to) {
  std::vector<std::int64_t> c{1};
  for (int n = 1; n <= up_to; ++n) {
    std::int64_t v = 0;
    for (int i = 0; i < n; ++i) v += c[i] * c[n - 1 - i];
    c.push_back(v);
  }
  return c;
}

std::int64_t binomial(int n, int k) {
  std::int64_t v = 1;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) return {};
  std::stringstream ss;
  ss << is.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

void criterion_1(Checker& ck) {
  auto cat = catalan_table(9);
  const std::vector<std::int64_t> frozen{2, 5, 14, 42, 132, 429, 1430, 4862};
  for (int n = 2; n <= 9; ++n) {
    auto fc = enumerate_fc(CoxeterGraph::type_a(n - 1));
    ck.expect(static_cast<std::int64_t>(fc.size()) == cat[n],
              "FC(A_" + std::to_string(n - 1) + ") != C(n)");
    ck.expect(cat[n] == frozen[n - 2], "catalan table mismatch");
  }
}

void criterion_2(Checker& ck) {
  const std::map<int, std::int64_t> frozen{
      {4, 48}, {5, 167}, {6, 593}, {7, 2144}};
  auto cat = catalan_table(7);
  for (auto [n, expected] : frozen) {
    ck.expect((n + 3) * cat[n] / 2 - 1 == expected, "Fan formula mismatch");
    auto fc = enumerate_fc(CoxeterGraph::type_d(n));
    ck.expect(static_cast<std::int64_t>(fc.size()) == expected,
              "FC(D_" + std::to_string(n) + ") != (n+3)/2 C(n) - 1");
  }
}

void criterion_3(Checker& ck) {
  auto cat = catalan_table(7);
  for (int n = 4; n <= 7; ++n) {
    std::int64_t want_one = cat[n] - 1;
    std::int64_t want_two = binomial(2 * n, n) / 2;
    // heap classification of the fully commutative elements
    auto words = enumerate_fc(CoxeterGraph::type_d(n));
    std::int64_t heap_one = 0, heap_two = 0;
    std::map<Diagram, HeapType> image;
    bool injective = true, no_loops = true;
    for (const Word& w : words) {
      HeapType t = classify_type(w);
      (t == HeapType::TypeI ? heap_one : heap_two) += 1;
      ScaledDiagram sd = diagram_of_word(w, MulMode::DTL);
      no_loops = no_loops && !sd.is_zero && sd.loop_power == 0;
      if (!image.emplace(*sd.diagram, t).second) injective = false;
    }
    ck.expect(heap_one == want_one && heap_two == want_two,
              "heap type split off at n=" + std::to_string(n));
    // diagram enumeration gives the identical counts
    auto type1 = enumerate_admissible(n, AdmissibleFilter::TypeI);
    auto type2 = enumerate_admissible(n, AdmissibleFilter::TypeII);
    ck.expect(static_cast<std::int64_t>(type1.size()) == want_one,
              "diagram type I count off at n=" + std::to_string(n));
    ck.expect(static_cast<std::int64_t>(type2.size()) == want_two,
              "diagram type II count off at n=" + std::to_string(n));
    // the word -> diagram map is a type-preserving bijection
    ck.expect(injective && no_loops,
              "word->diagram not injective/loop-free at n=" + std::to_string(n));
    ck.expect(image.size() == type1.size() + type2.size(),
              "word->diagram not onto at n=" + std::to_string(n));
    bool types_match = true, onto = true;
    std::set<Diagram> basis(type1.begin(), type1.end());
    basis.insert(type2.begin(), type2.end());
    for (const auto& [d, t] : image) {
      if (!basis.count(d)) onto = false;
      AdmissibleType at = admissible_type(d);
      if ((t == HeapType::TypeI) != (at == AdmissibleType::TypeI))
        types_match = false;
    }
    ck.expect(onto && types_match,
              "word->diagram type mismatch at n=" + std::to_string(n));
  }
}

void criterion_4(Checker& ck) {
  for (int n = 4; n <= 6; ++n) {
    RelationReport dtl = verify_presentation({AlgebraClass::DTL_D, n});
    RelationReport lfd = verify_presentation({AlgebraClass::LFD_D, n});
    ck.expect(dtl.passed(), "DTL(D_" + std::to_string(n) + ") relations");
    ck.expect(lfd.passed(), "LFD(D_" + std::to_string(n) + ") relations");
  }
}

void criterion_5(Checker& ck) {
  // triple product collapsing three loops, as an element
  AlgebraKind kind{AlgebraClass::DTL_A, 4};
  Diagram bottom = Diagram::from_edges(
      5, DiagramKind::PlainA,
      {{0, 3, false}, {1, 2, false}, {8, 9, false}, {5, 6, false}, {4, 7, false}},
      false);
  Diagram middle = Diagram::from_edges(
      5, DiagramKind::PlainA,
      {{0, 1, false}, {3, 4, false}, {6, 9, false}, {7, 8, false}, {2, 5, false}},
      false);
  Diagram top = Diagram::simple(CoxeterGraph::type_a(4), Gen::index(1));
  AlgebraElement product =
      elem_mul(elem_mul(AlgebraElement::basis(kind, top),
                        AlgebraElement::basis(kind, middle)),
               AlgebraElement::basis(kind, bottom));
  std::string golden =
      read_file(std::string(TLD_GOLDEN_DIR) + "/triple_product.json");
  ck.expect(!golden.empty(), "missing golden triple_product.json");
  ck.expect(element_to_json(product).dump() == golden,
            "triple product does not match the golden file");

  // the worked h1 o h2 join
  HalfDiagram h1 = make_half(6, {{1, 2, false}, {4, 5, false}});
  HalfDiagram h2 = make_half(6, {{1, 4, true}, {2, 3, false}});
  std::string golden_join =
      read_file(std::string(TLD_GOLDEN_DIR) + "/join_example.json");
  ck.expect(!golden_join.empty(), "missing golden join_example.json");
  ck.expect(diagram_to_json(join(h1, h2)).dump() == golden_join,
            "h1 o h2 does not match the golden file");
}

void criterion_6(Checker& ck) {
  CellReport r4 = verify_cellularity(4);
  ck.expect(r4.passed(), "cellularity fails at n=4");
  ck.expect(r4.dim == 35, "dim LFD(D_4) != 35");
  std::vector<std::pair<std::string, int>> m4{
      {"4", 1}, {"2", 4}, {"0+", 3}, {"0-", 3}};
  ck.expect(r4.m_sizes == m4, "M sizes at n=4");
  std::size_t sum4 = 0;
  for (auto& [label, size] : r4.m_sizes)
    sum4 += static_cast<std::size_t>(size) * size;
  ck.expect(sum4 == 35, "sum of |M|^2 != 35");

  CellReport r5 = verify_cellularity(5);
  ck.expect(r5.passed(), "cellularity fails at n=5");
  ck.expect(r5.dim == 126, "dim LFD(D_5) != 126");
  std::size_t sum5 = 0;
  for (auto& [label, size] : r5.m_sizes)
    sum5 += static_cast<std::size_t>(size) * size;
  ck.expect(sum5 == 126, "sum of |M|^2 != 126");
  // r-coefficient range and T-independence are axiom 3 of the reports
  ck.expect(r4.axiom3 && r5.axiom3, "axiom 3 (r-coefficients) failed");
}

void criterion_7(Checker& ck) {
  // (a) concat associativity on random basis triples, in both modes
  std::mt19937 rng(20140516);
  auto assoc_holds = [](const Diagram& x, const Diagram& y, const Diagram& z,
                        MulMode mode) {
    auto times = [&](const ScaledDiagram& l, const Diagram& r) {
      if (l.is_zero) return l;
      ScaledDiagram s = concat(*l.diagram, r, mode);
      s.loop_power += l.loop_power;
      if (s.is_zero) s.loop_power = 0;
      return s;
    };
    ScaledDiagram lhs = times(concat(x, y, mode), z);
    ScaledDiagram rhs = concat(y, z, mode);
    if (!rhs.is_zero) {
      ScaledDiagram t = concat(x, *rhs.diagram, mode);
      t.loop_power += rhs.loop_power;
      if (t.is_zero) t.loop_power = 0;
      rhs = t;
    }
    if (lhs.is_zero != rhs.is_zero) return false;
    if (lhs.is_zero) return true;
    return lhs.loop_power == rhs.loop_power && *lhs.diagram == *rhs.diagram;
  };
  for (int n = 4; n <= 6; ++n) {
    auto basis = enumerate_admissible(n, AdmissibleFilter::All);
    auto type2 = enumerate_admissible(n, AdmissibleFilter::TypeII);
    int trials = n == 4 ? 4000 : 3500;
    for (int t = 0; t < trials; ++t) {
      const Diagram& x = basis[rng() % basis.size()];
      const Diagram& y = basis[rng() % basis.size()];
      const Diagram& z = basis[rng() % basis.size()];
      if (!assoc_holds(x, y, z, MulMode::DTL)) {
        ck.expect(false, "DTL associativity fails at n=" + std::to_string(n));
        return;
      }
      const Diagram& u = type2[rng() % type2.size()];
      const Diagram& v = type2[rng() % type2.size()];
      const Diagram& w = type2[rng() % type2.size()];
      if (!assoc_holds(u, v, w, MulMode::LFD)) {
        ck.expect(false, "LFD associativity fails at n=" + std::to_string(n));
        return;
      }
    }
  }
  // (b) star anti-automorphism with involution
  {
    auto basis = enumerate_admissible(5, AdmissibleFilter::All);
    for (int t = 0; t < 2000; ++t) {
      const Diagram& x = basis[rng() % basis.size()];
      const Diagram& y = basis[rng() % basis.size()];
      ScaledDiagram xy = concat(x, y, MulMode::DTL);
      ScaledDiagram yx = concat(star(y), star(x), MulMode::DTL);
      ck.expect(star(star(x)) == x, "star not involutive");
      if (!(xy.loop_power == yx.loop_power &&
            star(*xy.diagram) == *yx.diagram)) {
        ck.expect(false, "star not an anti-automorphism");
        return;
      }
    }
  }
  // (c) p-value monotonicity
  {
    auto basis = enumerate_admissible(5, AdmissibleFilter::All);
    for (int t = 0; t < 2000; ++t) {
      const Diagram& x = basis[rng() % basis.size()];
      const Diagram& y = basis[rng() % basis.size()];
      ScaledDiagram xy = concat(x, y, MulMode::DTL);
      ck.expect(xy.diagram->p_value() <= std::min(x.p_value(), y.p_value()),
                "p-value grew under concat");
    }
  }
  // (d) FC word-oracle vs heap-pattern oracle on all reduced words of
  // length <= 10 in A_5 and D_5, closure memoized per group element
  for (CoxeterGraph g : {CoxeterGraph::type_a(5), CoxeterGraph::type_d(5)}) {
    auto gens = g.generators();
    std::map<std::vector<int>, bool> fc_of_element;
    std::int64_t words = 0;
    bool agree = true;
    struct Frame {
      GroupElement el;
      std::vector<Gen> letters;
    };
    std::vector<Frame> stack{{GroupElement::identity(g), {}}};
    while (!stack.empty() && agree) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      Word w{g, f.letters};
      auto it = fc_of_element.find(f.el.images());
      if (it == fc_of_element.end())
        it = fc_of_element.emplace(f.el.images(), is_fully_commutative(w))
                 .first;
      ++words;
      if (fc_by_pattern(heap_of(w)) != it->second) agree = false;
      if (f.letters.size() == 10) continue;
      for (Gen s : gens) {
        GroupElement next = f.el.times_gen(s);
        if (length(next) != static_cast<int>(f.letters.size()) + 1) continue;
        auto letters = f.letters;
        letters.push_back(s);
        stack.push_back({std::move(next), std::move(letters)});
      }
    }
    ck.expect(agree, "FC oracles disagree");
    ck.expect(words > 1000, "reduced-word sweep unexpectedly small");
  }
  // (e) join/split round trip on all type II diagrams for n = 4, 5
  for (int n = 4; n <= 5; ++n) {
    for (const Diagram& d : enumerate_admissible(n, AdmissibleFilter::TypeII)) {
      auto [top, bot] = split(d);
      if (join(top, bot) != d) {
        ck.expect(false, "join(split(d)) != d at n=" + std::to_string(n));
        return;
      }
    }
  }
}

void criterion_8(Checker& ck) {
  for (int n = 4; n <= 6; ++n) {
    for (const Diagram& d : enumerate_admissible(n, AdmissibleFilter::All)) {
      auto dumped = diagram_to_json(d).dump();
      Diagram back =
          diagram_from_json(nlohmann::json::parse(dumped), d.kind());
      if (back != d || diagram_to_json(back).dump() != dumped) {
        ck.expect(false, "diagram round trip fails at n=" + std::to_string(n));
        return;
      }
    }
    // element round trip with nontrivial coefficients
    AlgebraKind kind{AlgebraClass::DTL_D, n};
    auto basis = enumerate_admissible(n, AdmissibleFilter::All);
    AlgebraElement x = AlgebraElement::zero(kind);
    std::mt19937 rng(n);
    for (int t = 0; t < 12; ++t)
      x.add_term(basis[rng() % basis.size()],
                 PolyDelta::monomial(static_cast<int>(rng() % 4),
                                     static_cast<int>(rng() % 9) - 4));
    AlgebraElement back =
        element_from_json(nlohmann::json::parse(element_to_json(x).dump()));
    ck.expect(back == x, "element round trip fails at n=" + std::to_string(n));
  }
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<void(Checker&)> run;
  };
  const std::vector<Criterion> criteria{
      {"1 Catalan counts |FC(A_{n-1})| = C(n), n=2..9", criterion_1},
      {"2 dimension |FC(D_n)| = (n+3)/2 C(n) - 1, n=4..7", criterion_2},
      {"3 type split (C(n)-1, binom(2n,n)/2) and word->diagram bijection",
       criterion_3},
      {"4 presentation relations in DTL and LFD modes, n=4..6", criterion_4},
      {"5 golden examples: delta^3 triple product and the h1 o h2 join",
       criterion_5},
      {"6 cellularity axioms 1-3 at n=4,5 with M sizes and r-coefficients",
       criterion_6},
      {"7 property suites: associativity, star, p-values, FC oracles, "
       "join/split",
       criterion_7},
      {"8 serialization round trip over the admissible basis, n=4..6",
       criterion_8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Checker ck;
    try {
      c.run(ck);
    } catch (const std::exception& e) {
      ck.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (ck.ok ? "[PASS] " : "[FAIL] ") << "criterion " << c.name
              << "\n";
    for (const auto& note : ck.notes) std::cout << "       - " << note << "\n";
    if (!ck.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
