/*
  algebra.hpp

  Exact Z[delta] coefficients, linear combinations of diagrams, and the
  algebras DTL(A_n), DTL(D_n) and LFD(D_n) with presentation checks.
*/

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tld/coxeter.hpp"
#include "tld/diagram.hpp"

namespace tld {

// Integer polynomial in delta, stored sparsely with no zero
// coefficients and exponents iterated in increasing order.
class PolyDelta {
 public:
  PolyDelta() = default;
  static PolyDelta zero() { return {}; }
  static PolyDelta one() { return monomial(0, 1); }
  static PolyDelta delta(int power = 1) { return monomial(power, 1); }
  static PolyDelta monomial(int exponent, std::int64_t coeff);

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, std::int64_t>& coeffs() const { return coeffs_; }
  std::string str() const;  // "d^2+3d+1"

  friend PolyDelta operator+(const PolyDelta&, const PolyDelta&);
  friend PolyDelta operator-(const PolyDelta&, const PolyDelta&);
  friend PolyDelta operator*(const PolyDelta&, const PolyDelta&);
  friend bool operator==(const PolyDelta&, const PolyDelta&) = default;

 private:
  std::map<int, std::int64_t> coeffs_;
};

enum class AlgebraClass : unsigned char { DTL_A, DTL_D, LFD_D };

struct AlgebraKind {
  AlgebraClass cls;
  int rank;

  int strands() const { return cls == AlgebraClass::DTL_A ? rank + 1 : rank; }
  DiagramKind diagram_kind() const {
    return cls == AlgebraClass::DTL_A ? DiagramKind::PlainA
                                      : DiagramKind::DecoratedD;
  }
  MulMode mode() const {
    return cls == AlgebraClass::LFD_D ? MulMode::LFD : MulMode::DTL;
  }
  CoxeterGraph coxeter_graph() const {
    return CoxeterGraph::make(
        cls == AlgebraClass::DTL_A ? Family::A : Family::D, rank);
  }
  friend bool operator==(const AlgebraKind&, const AlgebraKind&) = default;
};

// Finite diagram -> polynomial map with zero terms pruned; terms iterate
// in the canonical diagram order.
class AlgebraElement {
 public:
  static AlgebraElement zero(AlgebraKind kind) { return AlgebraElement(kind); }
  static AlgebraElement unit(AlgebraKind kind);
  static AlgebraElement basis(AlgebraKind kind, Diagram d);
  static AlgebraElement generator(AlgebraKind kind, Gen g);

  const AlgebraKind& kind() const { return kind_; }
  const std::map<Diagram, PolyDelta>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Diagram& d, const PolyDelta& coeff);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  explicit AlgebraElement(AlgebraKind kind) : kind_(kind) {}
  AlgebraKind kind_;
  std::map<Diagram, PolyDelta> terms_;
};

AlgebraElement elem_add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement elem_scale(const PolyDelta& p, const AlgebraElement& x);
AlgebraElement elem_mul(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement star(const AlgebraElement& x);

// Product of the generator elements of the letters.
AlgebraElement word_to_element(const Word& w, AlgebraKind kind);

struct RelationReport {
  AlgebraKind kind;
  int checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

// Checks every instance of the defining relations over the generator
// pairs: squares, commutations, bonded triples, and in LFD mode the
// pair-free relation b_1 b_1bar = 0.
RelationReport verify_presentation(AlgebraKind kind);

// Size of the admissible-diagram basis.
std::size_t dimension(AlgebraKind kind);

}  // namespace tld
