#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tld/algebra.hpp"
#include "tld/heap.hpp"

using namespace tld;

namespace {

const AlgebraKind kDtlD4{AlgebraClass::DTL_D, 4};
const AlgebraKind kLfdD4{AlgebraClass::LFD_D, 4};

AlgebraElement gen_el(AlgebraKind kind, int i) {
  return AlgebraElement::generator(kind,
                                   i == 0 ? Gen::one_bar() : Gen::index(i));
}

}  // namespace

TEST_CASE("polynomial ring") {
  PolyDelta d = PolyDelta::delta();
  CHECK(d * d == PolyDelta::delta(2));
  CHECK((d + PolyDelta::one()) * PolyDelta::zero() == PolyDelta::zero());
  CHECK((d - d).is_zero());
  PolyDelta p = d * d + PolyDelta::monomial(0, 3) * d + PolyDelta::one();
  CHECK(p.str() == "d^2+3d+1");
  CHECK(PolyDelta::zero().str() == "0");
  CHECK((PolyDelta::one() - d).str() == "-d+1");
  // ring laws on a few values
  PolyDelta q = PolyDelta::monomial(3, -2) + PolyDelta::one();
  CHECK(p * q == q * p);
  CHECK(p * (q + d) == p * q + p * d);
}

TEST_CASE("module operations") {
  AlgebraElement x = gen_el(kDtlD4, 2);
  CHECK(elem_add(x, AlgebraElement::zero(kDtlD4)) == x);
  CHECK(elem_add(x, elem_scale(PolyDelta::monomial(0, -1), x)).is_zero());
  AlgebraElement dx = elem_scale(PolyDelta::delta(), x);
  REQUIRE(dx.terms().size() == 1);
  CHECK(dx.terms().begin()->second == PolyDelta::delta());
  CHECK_THROWS_AS(elem_add(x, AlgebraElement::zero(kLfdD4)),
                  std::invalid_argument);
}

TEST_CASE("algebra relations") {
  AlgebraElement b2 = gen_el(kDtlD4, 2);
  AlgebraElement sq = elem_mul(b2, b2);
  REQUIRE(sq.terms().size() == 1);
  CHECK(sq == elem_scale(PolyDelta::delta(), b2));

  AlgebraElement b1 = gen_el(kDtlD4, 1);
  CHECK(elem_mul(elem_mul(b1, b2), b1) == b1);
  CHECK(elem_mul(elem_mul(b2, b1), b2) == b2);

  CHECK(elem_mul(gen_el(kLfdD4, 1), gen_el(kLfdD4, 0)).is_zero());
  CHECK_FALSE(elem_mul(gen_el(kDtlD4, 1), gen_el(kDtlD4, 0)).is_zero());
}

TEST_CASE("unit is two-sided") {
  AlgebraElement one = AlgebraElement::unit(kDtlD4);
  for (int i = 0; i <= 3; ++i) {
    AlgebraElement b = gen_el(kDtlD4, i);
    CHECK(elem_mul(one, b) == b);
    CHECK(elem_mul(b, one) == b);
  }
}

TEST_CASE("word_to_element") {
  CoxeterGraph d4 = CoxeterGraph::type_d(4);
  CHECK(word_to_element(parse_word(d4, ""), kDtlD4) ==
        AlgebraElement::unit(kDtlD4));
  CHECK(word_to_element(parse_word(d4, "1,2,1"), kDtlD4) ==
        word_to_element(parse_word(d4, "1"), kDtlD4));
  // FC reduced words give a single term with coefficient one
  for (const char* text : {"1bar", "1bar,1", "2,1bar,1,2", "3,2,1"}) {
    AlgebraElement x = word_to_element(parse_word(d4, text), kDtlD4);
    REQUIRE(x.terms().size() == 1);
    CHECK(x.terms().begin()->second == PolyDelta::one());
  }
  // words of the same FC element in one commutation class agree
  CHECK(word_to_element(parse_word(d4, "1,3"), kDtlD4) ==
        word_to_element(parse_word(d4, "3,1"), kDtlD4));
}

TEST_CASE("verify_presentation") {
  CHECK(verify_presentation({AlgebraClass::DTL_D, 4}).passed());
  CHECK(verify_presentation({AlgebraClass::LFD_D, 4}).passed());
  CHECK(verify_presentation({AlgebraClass::DTL_A, 4}).passed());
  CHECK(verify_presentation({AlgebraClass::DTL_D, 5}).passed());
}

TEST_CASE("dimension") {
  CHECK(dimension({AlgebraClass::DTL_D, 4}) == 48);
  CHECK(dimension({AlgebraClass::DTL_D, 5}) == 167);
  CHECK(dimension({AlgebraClass::LFD_D, 4}) == 35);
  CHECK(dimension({AlgebraClass::LFD_D, 5}) == 126);
  CHECK(dimension({AlgebraClass::DTL_A, 3}) == 14);
}

TEST_CASE("dimension matches the FC counts") {
  CHECK(dimension({AlgebraClass::DTL_A, 3}) ==
        enumerate_fc(CoxeterGraph::type_a(3)).size());
  CHECK(dimension({AlgebraClass::DTL_D, 4}) ==
        enumerate_fc(CoxeterGraph::type_d(4)).size());
}

TEST_CASE("LFD dimension equals the type II FC count") {
  for (int n = 4; n <= 5; ++n) {
    std::size_t type_two = 0;
    for (const Word& w : enumerate_fc(CoxeterGraph::type_d(n)))
      if (classify_type(w) == HeapType::TypeII) ++type_two;
    CHECK(dimension({AlgebraClass::LFD_D, n}) == type_two);
  }
}

TEST_CASE("the word-to-element map factors through the group") {
  // all reduced words of one commutation class of an FC element give the
  // same algebra element
  CoxeterGraph d4 = CoxeterGraph::type_d(4);
  for (const Word& w : enumerate_fc(d4)) {
    AlgebraElement expected = word_to_element(w, kDtlD4);
    for (const Word& u : commutation_class(w))
      CHECK(word_to_element(u, kDtlD4) == expected);
  }
}

TEST_CASE("multiplication is associative and bilinear") {
  auto basis = enumerate_admissible(4, AdmissibleFilter::All);
  std::mt19937 rng(4242);
  auto pick = [&] {
    return AlgebraElement::basis(kDtlD4, basis[rng() % basis.size()]);
  };
  for (int trial = 0; trial < 150; ++trial) {
    AlgebraElement x = pick(), y = pick(), z = pick();
    CHECK(elem_mul(elem_mul(x, y), z) == elem_mul(x, elem_mul(y, z)));
    AlgebraElement sum = elem_add(y, elem_scale(PolyDelta::delta(), z));
    CHECK(elem_mul(x, sum) ==
          elem_add(elem_mul(x, y),
                   elem_scale(PolyDelta::delta(), elem_mul(x, z))));
  }
}

TEST_CASE("simple times basis lands in {0,1,delta} times a basis diagram") {
  auto basis = enumerate_admissible(4, AdmissibleFilter::TypeII);
  CoxeterGraph d4 = CoxeterGraph::type_d(4);
  for (Gen g : d4.generators()) {
    AlgebraElement a = AlgebraElement::generator(kLfdD4, g);
    for (const Diagram& d : basis) {
      AlgebraElement prod = elem_mul(a, AlgebraElement::basis(kLfdD4, d));
      REQUIRE(prod.terms().size() <= 1);
      if (!prod.is_zero()) {
        const PolyDelta& c = prod.terms().begin()->second;
        CHECK((c == PolyDelta::one() || c == PolyDelta::delta()));
      }
    }
  }
}

TEST_CASE("star on elements") {
  AlgebraElement x = word_to_element(
      parse_word(CoxeterGraph::type_d(4), "1bar,2"), kDtlD4);
  AlgebraElement y = word_to_element(
      parse_word(CoxeterGraph::type_d(4), "2,1bar"), kDtlD4);
  CHECK(star(x) == y);
  CHECK(star(star(x)) == x);
  CHECK(star(elem_mul(x, y)) == elem_mul(star(y), star(x)));
}
