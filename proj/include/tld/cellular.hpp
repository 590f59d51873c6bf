/*
  cellular.hpp

  Half-diagrams, the split/join decomposition of type II diagrams, the
  cell datum (Lambda, M, C, *) for LFD(D_n), and exhaustive verification
  of the three cellular-algebra axioms.
*/

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tld/algebra.hpp"
#include "tld/diagram.hpp"

namespace tld {

// North-style cup pattern on nodes 1..k; unmatched nodes propagate.
// Cups are non-crossing, never enclose a propagating node, and may be
// decorated only when nothing (cup or propagating node) lies to their
// left.
struct HalfDiagram {
  struct Cup {
    int a;  // 1-based nodes, a < b
    int b;
    bool dec;
    friend auto operator<=>(const Cup&, const Cup&) = default;
  };
  int k = 0;
  std::vector<Cup> cups;  // sorted by first node

  int p() const { return k - 2 * static_cast<int>(cups.size()); }
  int decoration_count() const;
  std::vector<int> propagating_nodes() const;  // ascending

  friend auto operator<=>(const HalfDiagram&, const HalfDiagram&) = default;
};

HalfDiagram make_half(int k, std::vector<HalfDiagram::Cup> cups);

// North and (inverted) south cup patterns of a type II diagram; the
// propagating-edge decoration is dropped, its parity being recoverable.
std::pair<HalfDiagram, HalfDiagram> split(const Diagram& d);

// Reconstitute a type II diagram: h1 as the north face, h2 inverted as
// the south face, propagating nodes joined in order, and the leftmost
// propagating edge decorated exactly when the total cup decoration
// count is odd.
Diagram join(const HalfDiagram& h1, const HalfDiagram& h2);

// Sub-half-diagram: every cup of h, with its decoration, is a cup of hp.
bool half_leq(const HalfDiagram& h, const HalfDiagram& hp);

// Poset label: the propagating count, with parity splitting 0 into two
// incomparable symbols when n is even.
struct CellLabel {
  enum class Tag : unsigned char { Int, ZeroPlus, ZeroMinus };
  Tag tag = Tag::Int;
  int m = 0;  // valid when tag == Int

  static CellLabel integer(int m) { return {Tag::Int, m}; }
  static CellLabel zero_plus() { return {Tag::ZeroPlus, 0}; }
  static CellLabel zero_minus() { return {Tag::ZeroMinus, 0}; }
  int abs() const { return tag == Tag::Int ? m : 0; }
  std::string str() const;

  friend bool operator==(const CellLabel&, const CellLabel&) = default;
};

// Strict poset order on labels: |a| < |b|; the two zeros are incomparable.
bool label_less(const CellLabel& a, const CellLabel& b);

struct CellDatum {
  int n = 0;
  std::vector<CellLabel> labels;                  // descending |lambda|
  std::vector<std::vector<HalfDiagram>> m_sets;   // parallel to labels
  struct BasisTriple {
    int label;  // index into labels
    int s;      // indices into m_sets[label]
    int t;
  };
  std::map<Diagram, BasisTriple> basis_index;  // inverse of join

  int label_index(const CellLabel& l) const;
  const std::vector<HalfDiagram>& m_of(const CellLabel& l) const {
    return m_sets[label_index(l)];
  }
};

CellDatum build_cell_datum(int n);

// C(lambda, S, T): the single-term element join(S, T) of LFD(D_n).
AlgebraElement cell_C(const CellDatum& datum, const CellLabel& label,
                      const HalfDiagram& S, const HalfDiagram& T);

struct CellReport {
  int rank = 0;
  bool axiom1 = false;  // C injective with image the whole basis
  bool axiom2 = false;  // star anti-automorphism, star C(S,T) = C(T,S)
  bool axiom3 = false;  // r_a(S',S) independent of T, entries in {0,1,delta}
  std::vector<std::pair<std::string, int>> m_sizes;
  std::size_t dim = 0;
  std::vector<std::string> failures;
  bool passed() const { return axiom1 && axiom2 && axiom3; }
};

CellReport verify_cellularity(int n);

}  // namespace tld
