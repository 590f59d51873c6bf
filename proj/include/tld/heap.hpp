/*
  heap.hpp

  Heap posets of reduced words: covers, forbidden-pattern full
  commutativity, type I/II classification in type D, and the canonical
  lattice layout used for rendering.
*/

#pragma once

#include <utility>
#include <vector>

#include "tld/coxeter.hpp"

namespace tld {

// Labeled poset on the letters of a reduced word.  Entry i carries the
// i-th letter; a pair (i, j) in covers means entry i covers entry j,
// so entries later in the word sit lower in the order.
struct Heap {
  CoxeterGraph graph;
  std::vector<Gen> labels;
  std::vector<std::pair<int, int>> covers;

  std::size_t size() const { return labels.size(); }
};

Heap heap_of(const Word& w);

// Strict order matrix: below[a][b] is true iff entry a lies strictly
// below entry b.  Recomputed from the covers on demand.
std::vector<std::vector<bool>> heap_below(const Heap& h);

// Label-preserving poset isomorphism respecting the vertical order of
// equal labels (which forces the matching occurrence by occurrence).
bool heaps_equal(const Heap& a, const Heap& b);

// Pattern criterion for full commutativity: between any two consecutive
// equal-label entries there must be at least two entries whose labels
// do not commute with that label.
bool fc_by_pattern(const Heap& h);

enum class HeapType : unsigned char { TypeI, TypeII };

// Type I iff some reduced expression in the commutation class has
// s_1bar and s_1 adjacent; decided by the equivalent word scan (an
// occurrence of each with no s_2 strictly between them).
// Precondition: w reduced, fully commutative, type D.
HeapType classify_type(const Word& w);

struct HeapLayout {
  struct Entry {
    int column;   // generator index; s_1bar shares column 1 with s_1
    int level;    // 0 = top row, increasing downward
    int channel;  // -1 for s_1bar, +1 for s_1 in type D, else 0
  };
  std::vector<Entry> entries;  // parallel to the heap's entries
};

// Canonical layout: maximal entries (the left descents) on level 0,
// every other entry as high as the covers allow.
HeapLayout layout(const Heap& h);

}  // namespace tld
