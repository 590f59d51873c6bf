/*
  coxeter.hpp

  Coxeter graphs of types A and D, words, reduced expressions,
  commutation classes and fully commutative elements.
*/

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tld {

enum class Family : unsigned char { A, D };

// A generator of a Coxeter group of type A or D.  Encoded as a small
// integer: 0 stands for s_1bar (type D only), i >= 1 for s_i.  The
// encoding realizes the canonical order 1bar < 1 < 2 < ...
class Gen {
 public:
  static constexpr Gen one_bar() { return Gen(0); }
  static Gen index(int i) {
    if (i < 1) throw std::invalid_argument("Gen::index: i must be >= 1");
    return Gen(i);
  }
  constexpr bool is_one_bar() const { return code_ == 0; }
  int index() const {
    if (is_one_bar()) throw std::logic_error("Gen::index on s_1bar");
    return code_;
  }
  constexpr int code() const { return code_; }
  friend constexpr auto operator<=>(Gen, Gen) = default;

 private:
  explicit constexpr Gen(int c) : code_(c) {}
  int code_;
};

std::string to_string(Gen g);  // "1bar", "1", "2", ...

// Coxeter graph of type A_n (n >= 1) or D_n (n >= 4).  The bond function
// m takes values in {1,2,3}: m(s,s) = 1, and m(s,t) = 3 exactly on the
// graph edges.
class CoxeterGraph {
 public:
  static CoxeterGraph make(Family f, int rank);
  static CoxeterGraph type_a(int rank) { return make(Family::A, rank); }
  static CoxeterGraph type_d(int rank) { return make(Family::D, rank); }

  Family family() const { return family_; }
  int rank() const { return rank_; }
  bool valid(Gen g) const;
  int m(Gen s, Gen t) const;
  bool commute(Gen s, Gen t) const { return m(s, t) == 2; }
  std::vector<Gen> generators() const;  // canonical order
  // Number of points of the permutation model: n+1 for A_n, n for D_n.
  int degree() const { return family_ == Family::A ? rank_ + 1 : rank_; }

  friend bool operator==(const CoxeterGraph&, const CoxeterGraph&) = default;

 private:
  CoxeterGraph(Family f, int r) : family_(f), rank_(r) {}
  Family family_;
  int rank_;
};

struct Word {
  CoxeterGraph graph;
  std::vector<Gen> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
};

bool operator==(const Word& a, const Word& b);
bool word_lex_less(const Word& a, const Word& b);  // by length, then letters

// Text syntax: comma- or space-separated tokens, each a decimal integer
// or "1bar" (case-insensitive).  The empty string is the empty word.
Word parse_word(const CoxeterGraph& graph, std::string_view text);
std::string to_string(const Word& w);

// Group element in the faithful permutation model: window notation
// [w(1),...,w(N)] with N = graph.degree().  Type D entries are signed,
// with an even number of negative entries.
class GroupElement {
 public:
  static GroupElement identity(const CoxeterGraph& g);

  const CoxeterGraph& graph() const { return graph_; }
  const std::vector<int>& images() const { return img_; }
  bool is_identity() const;

  GroupElement times_gen(Gen s) const;  // this * s
  GroupElement gen_times(Gen s) const;  // s * this
  GroupElement inverse() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  GroupElement(CoxeterGraph g, std::vector<int> img)
      : graph_(g), img_(std::move(img)) {}
  CoxeterGraph graph_;
  std::vector<int> img_;
};

GroupElement element_of(const Word& w);

// Coxeter length.  Closed formula: inversions in type A, inversions plus
// negative-sum pairs in type D.  length_bfs is the independent oracle:
// graph distance from the identity in the right Cayley graph, memoized
// per graph (desk-scale ranks only).
int length(const GroupElement& g);
int length_bfs(const GroupElement& g);

enum class Side : unsigned char { Left, Right };
std::vector<Gen> descents(const GroupElement& g, Side side);
std::vector<Gen> support(const GroupElement& g);

bool is_reduced(const Word& w);

// Closure of {w} under adjacent commuting swaps, sorted lexicographically.
// Precondition: w reduced.
std::vector<Word> commutation_class(const Word& w);

// Stembridge's criterion via the commutation-class scan: true iff no
// member of the class contains a factor s t s with m(s,t) = 3.
// Precondition: w reduced.
bool is_fully_commutative(const Word& w);

// Lexicographically least member of the commutation class (greedy
// minimal topological order of the letter dependence).  Precondition:
// w reduced.
Word canonical_word(const Word& w);

// One canonical reduced word per fully commutative element, identity
// included, sorted by (length, lex).
std::vector<Word> enumerate_fc(const CoxeterGraph& g);

}  // namespace tld
