/*
  heap.cpp
*/

#include "tld/heap.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tld {

namespace {

std::vector<std::vector<bool>> close_relation(int n,
                                              std::vector<std::vector<bool>> r) {
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      if (r[a][k])
        for (int b = 0; b < n; ++b)
          if (r[k][b]) r[a][b] = true;
  return r;
}

}  // namespace

Heap heap_of(const Word& w) {
  if (!is_reduced(w)) throw std::domain_error("heap_of: word is not reduced");
  int n = static_cast<int>(w.letters.size());
  // below[a][b]: entry a strictly below entry b.  Generating relation:
  // for word positions p < q with noncommuting labels, q is below p.
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (!w.graph.commute(w.letters[p], w.letters[q])) below[q][p] = true;
  below = close_relation(n, std::move(below));
  Heap h{w.graph, w.letters, {}};
  for (int upper = 0; upper < n; ++upper)
    for (int lower = 0; lower < n; ++lower) {
      if (!below[lower][upper]) continue;
      bool covering = true;
      for (int mid = 0; mid < n; ++mid)
        if (below[lower][mid] && below[mid][upper]) {
          covering = false;
          break;
        }
      if (covering) h.covers.emplace_back(upper, lower);
    }
  return h;
}

std::vector<std::vector<bool>> heap_below(const Heap& h) {
  int n = static_cast<int>(h.size());
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (auto [upper, lower] : h.covers) below[lower][upper] = true;
  return close_relation(n, std::move(below));
}

namespace {

// Entries of each label sorted top first; the vertical order within a
// label chain is total.
std::map<Gen, std::vector<int>> label_chains(
    const Heap& h, const std::vector<std::vector<bool>>& below) {
  std::map<Gen, std::vector<int>> chains;
  for (int i = 0; i < static_cast<int>(h.size()); ++i)
    chains[h.labels[i]].push_back(i);
  for (auto& [label, chain] : chains)
    std::sort(chain.begin(), chain.end(),
              [&](int a, int b) { return below[b][a]; });
  return chains;
}

}  // namespace

bool heaps_equal(const Heap& a, const Heap& b) {
  if (a.size() != b.size()) return false;
  auto below_a = heap_below(a);
  auto below_b = heap_below(b);
  auto chains_a = label_chains(a, below_a);
  auto chains_b = label_chains(b, below_b);
  if (chains_a.size() != chains_b.size()) return false;
  // The isomorphism is forced: k-th occurrence of a label maps to the
  // k-th occurrence of the same label.
  std::vector<int> map_a(a.size()), map_b(b.size());
  int next = 0;
  auto it_b = chains_b.begin();
  for (auto it_a = chains_a.begin(); it_a != chains_a.end(); ++it_a, ++it_b) {
    if (it_a->first != it_b->first ||
        it_a->second.size() != it_b->second.size())
      return false;
    for (std::size_t k = 0; k < it_a->second.size(); ++k) {
      map_a[it_a->second[k]] = next;
      map_b[it_b->second[k]] = next;
      ++next;
    }
  }
  int n = static_cast<int>(a.size());
  std::vector<std::vector<bool>> rel_a(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> rel_b(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (below_a[x][y]) rel_a[map_a[x]][map_a[y]] = true;
      if (below_b[x][y]) rel_b[map_b[x]][map_b[y]] = true;
    }
  return rel_a == rel_b;
}

bool fc_by_pattern(const Heap& h) {
  auto below = heap_below(h);
  auto chains = label_chains(h, below);
  for (const auto& [label, chain] : chains) {
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      int upper = chain[k], lower = chain[k + 1];
      int noncommuting = 0;
      for (int c = 0; c < static_cast<int>(h.size()); ++c)
        if (below[c][upper] && below[lower][c] &&
            !h.graph.commute(h.labels[c], label))
          ++noncommuting;
      if (noncommuting < 2) return false;
    }
  }
  return true;
}

HeapType classify_type(const Word& w) {
  if (w.graph.family() != Family::D)
    throw std::invalid_argument("classify_type: type D words only");
  if (!fc_by_pattern(heap_of(w)))
    throw std::domain_error("classify_type: word is not fully commutative");
  const auto& u = w.letters;
  int n = static_cast<int>(u.size());
  Gen one_bar = Gen::one_bar(), one = Gen::index(1), two = Gen::index(2);
  for (int p = 0; p < n; ++p) {
    if (u[p] != one_bar && u[p] != one) continue;
    Gen want = u[p] == one_bar ? one : one_bar;
    for (int q = p + 1; q < n; ++q) {
      if (u[q] == two) break;  // an s_2 separates p from everything later
      if (u[q] == want) return HeapType::TypeI;
    }
  }
  return HeapType::TypeII;
}

HeapLayout layout(const Heap& h) {
  int n = static_cast<int>(h.size());
  std::vector<int> level(n, 0);
  // Covers point from earlier word positions down to later ones, so the
  // longest-chain-above levels settle in one pass over upper ascending.
  auto covers = h.covers;
  std::sort(covers.begin(), covers.end());
  for (auto [upper, lower] : covers)
    level[lower] = std::max(level[lower], level[upper] + 1);
  HeapLayout out;
  out.entries.resize(n);
  for (int i = 0; i < n; ++i) {
    Gen g = h.labels[i];
    int column = g.is_one_bar() ? 1 : g.index();
    int channel = 0;
    if (h.graph.family() == Family::D) {
      if (g.is_one_bar())
        channel = -1;
      else if (g.index() == 1)
        channel = 1;
    }
    out.entries[i] = {column, level[i], channel};
  }
  return out;
}

}  // namespace tld
