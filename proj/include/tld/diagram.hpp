/*
  diagram.hpp

  Normal-form decorated planar diagrams on the standard k-box, the
  concatenation product with loop removal, simple diagrams, and the
  D-admissible basis diagrams of type I and II.

  Nodes are addressed in the left-wall linearization t1,...,tk,bk,...,b1
  (positions 0..2k-1).  Planarity is the non-crossing chord condition in
  that order, and an edge is left-exposed exactly when its nesting depth
  there is 0.  Decorations are parity bits; an undecorated closed
  component contributes a factor of delta, a decorated one either sets
  the decorated-loop flag (DTL) or kills the product (LFD).
*/

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tld/coxeter.hpp"

namespace tld {

enum class DiagramKind : unsigned char { PlainA, DecoratedD };
enum class MulMode : unsigned char { DTL, LFD };
enum class Face : unsigned char { North, South };

struct NodeRef {
  Face face;
  int index;  // 1..k
  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

class Diagram {
 public:
  struct Edge {
    int a;  // linearization positions, a < b
    int b;
    bool dec;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  static Diagram identity(int k, DiagramKind kind);
  // Simple diagram of a generator: the strand count is n+1 for A_n and
  // n for D_n; d_1bar is d_1 with decorated cup and cap.
  static Diagram simple(const CoxeterGraph& graph, Gen g);
  static Diagram from_edges(int k, DiagramKind kind, std::vector<Edge> edges,
                            bool decorated_loop);

  int k() const { return k_; }
  DiagramKind kind() const { return kind_; }
  bool decorated_loop() const { return decorated_loop_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int a_value() const;  // non-propagating north edges
  int p_value() const;  // propagating edges
  int decoration_count() const;

  static int pos_of(NodeRef node, int k);
  static NodeRef node_at(int pos, int k);
  static std::string node_name(int pos, int k);  // "t3", "b5"

  int depth(const Edge& e) const;  // nesting depth in the linearization

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  Diagram(int k, DiagramKind kind, std::vector<Edge> edges, bool loop)
      : k_(k), kind_(kind), decorated_loop_(loop), edges_(std::move(edges)) {}
  void validate() const;

  int k_;
  DiagramKind kind_;
  bool decorated_loop_;
  std::vector<Edge> edges_;  // sorted by first endpoint
};

// A diagram scaled by a power of delta, or zero (LFD mode only).
struct ScaledDiagram {
  int loop_power = 0;
  bool is_zero = false;
  std::optional<Diagram> diagram;
};

// Stack `top` over `bot`, trace the merged strands, and normalize:
// undecorated closed components become powers of delta; a component of
// odd decoration parity becomes the decorated loop (DTL) or zero (LFD).
ScaledDiagram concat(const Diagram& top, const Diagram& bot, MulMode mode);

enum class AdmissibleType : unsigned char { TypeI, TypeII, NotAdmissible };
AdmissibleType admissible_type(const Diagram& d);

enum class AdmissibleFilter : unsigned char { TypeI, TypeII, All };

// Exhaustive generation at k = n strands: every non-crossing perfect
// matching decorated on depth-0 edges in all even subsets (type II), and
// every matching with a cup carrying the decorated loop (type I).
std::vector<Diagram> enumerate_admissible(int n, AdmissibleFilter which);

// Loop-free undecorated diagrams on k strands (the type A basis).
std::vector<Diagram> enumerate_plain(int k);

// Top-bottom inversion; an involutive anti-automorphism of concat.
Diagram star(const Diagram& d);

// Left-to-right product of the simple diagrams of the letters.
ScaledDiagram diagram_of_word(const Word& w, MulMode mode);

}  // namespace tld
