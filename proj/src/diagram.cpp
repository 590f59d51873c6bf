/*
  diagram.cpp
*/

#include "tld/diagram.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tld {

int Diagram::pos_of(NodeRef node, int k) {
  if (node.index < 1 || node.index > k)
    throw std::invalid_argument("node index out of range");
  return node.face == Face::North ? node.index - 1 : 2 * k - node.index;
}

NodeRef Diagram::node_at(int pos, int k) {
  if (pos < 0 || pos >= 2 * k) throw std::invalid_argument("bad position");
  if (pos < k) return {Face::North, pos + 1};
  return {Face::South, 2 * k - pos};
}

std::string Diagram::node_name(int pos, int k) {
  NodeRef n = node_at(pos, k);
  return (n.face == Face::North ? "t" : "b") + std::to_string(n.index);
}

int Diagram::depth(const Edge& e) const {
  int d = 0;
  for (const Edge& f : edges_)
    if (f.a < e.a && e.b < f.b) ++d;
  return d;
}

int Diagram::a_value() const {
  int a = 0;
  for (const Edge& e : edges_)
    if (e.b < k_) ++a;
  return a;
}

int Diagram::p_value() const {
  int p = 0;
  for (const Edge& e : edges_)
    if (e.a < k_ && e.b >= k_) ++p;
  return p;
}

int Diagram::decoration_count() const {
  int c = 0;
  for (const Edge& e : edges_)
    if (e.dec) ++c;
  return c;
}

void Diagram::validate() const {
  if (k_ < 1) throw std::invalid_argument("diagram requires k >= 1");
  std::vector<int> seen(2 * k_, 0);
  for (const Edge& e : edges_) {
    if (e.a < 0 || e.b >= 2 * k_ || e.a >= e.b)
      throw std::invalid_argument("bad edge endpoints");
    ++seen[e.a];
    ++seen[e.b];
  }
  for (int c : seen)
    if (c != 1) throw std::invalid_argument("edges are not a perfect matching");
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      const Edge &e = edges_[i], &f = edges_[j];
      if (e.a < f.a && f.a < e.b && e.b < f.b)
        throw std::invalid_argument("edges cross");
    }
  if (kind_ == DiagramKind::PlainA) {
    if (decorated_loop_ || decoration_count() > 0)
      throw std::invalid_argument("plain diagrams carry no decorations");
    return;
  }
  for (const Edge& e : edges_)
    if (e.dec && depth(e) != 0)
      throw std::invalid_argument("decorated edge is not left-exposed");
  if (decorated_loop_ && decoration_count() > 0)
    throw std::invalid_argument("decorated loop excludes edge decorations");
  if (a_value() == 0 && (decorated_loop_ || decoration_count() > 0))
    throw std::invalid_argument("a-value 0 diagrams are undecorated");
}

Diagram Diagram::from_edges(int k, DiagramKind kind, std::vector<Edge> edges,
                            bool decorated_loop) {
  for (Edge& e : edges)
    if (e.a > e.b) std::swap(e.a, e.b);
  std::sort(edges.begin(), edges.end());
  Diagram d(k, kind, std::move(edges), decorated_loop);
  d.validate();
  return d;
}

Diagram Diagram::identity(int k, DiagramKind kind) {
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.push_back({i - 1, 2 * k - i, false});
  return from_edges(k, kind, std::move(edges), false);
}

Diagram Diagram::simple(const CoxeterGraph& graph, Gen g) {
  if (!graph.valid(g)) throw std::invalid_argument("simple: bad generator");
  int k = graph.degree();
  DiagramKind kind = graph.family() == Family::A ? DiagramKind::PlainA
                                                 : DiagramKind::DecoratedD;
  int i = g.is_one_bar() ? 1 : g.index();
  bool dec = g.is_one_bar();
  std::vector<Edge> edges;
  edges.push_back({i - 1, i, dec});                  // cup t_i - t_{i+1}
  edges.push_back({2 * k - i - 1, 2 * k - i, dec});  // cap b_i - b_{i+1}
  for (int j = 1; j <= k; ++j)
    if (j != i && j != i + 1) edges.push_back({j - 1, 2 * k - j, false});
  return from_edges(k, kind, std::move(edges), false);
}

ScaledDiagram concat(const Diagram& top, const Diagram& bot, MulMode mode) {
  if (top.k() != bot.k() || top.kind() != bot.kind())
    throw std::invalid_argument("concat: strand count or kind mismatch");
  const int k = top.k();

  // Glue top's south face to bot's north face.  Every middle strand i
  // meets exactly one top edge and one bot edge, so a walk alternates
  // layers; outer endpoints are the result's own positions.
  struct Port {
    int node = -1;  // 0..2k-1 outer, 2k..3k-1 middle, -1 unset
    bool dec = false;
  };
  std::vector<Port> top_port(3 * k), bot_port(3 * k);
  auto top_node = [&](int pos) { return pos < k ? pos : 3 * k - 1 - pos + k; };
  auto bot_node = [&](int pos) { return pos < k ? 2 * k + pos : pos; };
  for (const auto& e : top.edges()) {
    int u = top_node(e.a), v = top_node(e.b);
    top_port[u] = {v, e.dec};
    top_port[v] = {u, e.dec};
  }
  for (const auto& e : bot.edges()) {
    int u = bot_node(e.a), v = bot_node(e.b);
    bot_port[u] = {v, e.dec};
    bot_port[v] = {u, e.dec};
  }

  std::vector<bool> visited(3 * k, false);
  std::vector<Diagram::Edge> edges;
  int even_loops = 0, odd_loops = 0;

  for (int start = 0; start < 2 * k; ++start) {
    if (visited[start]) continue;
    visited[start] = true;
    bool from_top = start < k;  // north outer nodes carry a top edge
    bool dec = false;
    int cur = start;
    while (true) {
      const Port& p = from_top ? top_port[cur] : bot_port[cur];
      dec ^= p.dec;
      cur = p.node;
      visited[cur] = true;
      if (cur < 2 * k) break;
      from_top = !from_top;
    }
    edges.push_back({start, cur, dec});
  }
  for (int start = 2 * k; start < 3 * k; ++start) {
    if (visited[start]) continue;
    visited[start] = true;
    bool from_top = true;
    bool dec = false;
    int cur = start;
    do {
      const Port& p = from_top ? top_port[cur] : bot_port[cur];
      dec ^= p.dec;
      cur = p.node;
      visited[cur] = true;
      from_top = !from_top;
    } while (cur != start);
    (dec ? odd_loops : even_loops) += 1;
  }
  odd_loops += (top.decorated_loop() ? 1 : 0) + (bot.decorated_loop() ? 1 : 0);

  ScaledDiagram out;
  out.loop_power = even_loops;
  bool loop = false;
  if (odd_loops > 0) {
    if (mode == MulMode::LFD) {
      out.is_zero = true;
      out.loop_power = 0;
      return out;
    }
    // One decorated loop survives; each extra pairs off into a factor of
    // delta, and the survivor strips every edge decoration.
    loop = true;
    out.loop_power += odd_loops - 1;
    for (auto& e : edges) e.dec = false;
  }
  out.diagram = Diagram::from_edges(k, top.kind(), std::move(edges), loop);
  return out;
}

AdmissibleType admissible_type(const Diagram& d) {
  if (d.decorated_loop()) return AdmissibleType::TypeI;
  return d.decoration_count() % 2 == 0 ? AdmissibleType::TypeII
                                       : AdmissibleType::NotAdmissible;
}

namespace {

// Non-crossing perfect matchings of 2k points via balanced parentheses.
void gen_matchings(int pos, int open, int n2, std::vector<int>& stack,
                   std::vector<std::pair<int, int>>& acc,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
  if (pos == n2) {
    out.push_back(acc);
    return;
  }
  if (n2 - pos > open) {
    stack.push_back(pos);
    gen_matchings(pos + 1, open + 1, n2, stack, acc, out);
    stack.pop_back();
  }
  if (open > 0) {
    int a = stack.back();
    stack.pop_back();
    acc.emplace_back(a, pos);
    gen_matchings(pos + 1, open - 1, n2, stack, acc, out);
    acc.pop_back();
    stack.push_back(a);
  }
}

std::vector<std::vector<std::pair<int, int>>> all_matchings(int k) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<int> stack;
  std::vector<std::pair<int, int>> acc;
  gen_matchings(0, 0, 2 * k, stack, acc, out);
  return out;
}

}  // namespace

std::vector<Diagram> enumerate_plain(int k) {
  if (k < 1 || k > 14) throw std::invalid_argument("enumerate_plain: bad k");
  std::vector<Diagram> out;
  for (const auto& m : all_matchings(k)) {
    std::vector<Diagram::Edge> edges;
    for (auto [a, b] : m) edges.push_back({a, b, false});
    out.push_back(
        Diagram::from_edges(k, DiagramKind::PlainA, std::move(edges), false));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Diagram> enumerate_admissible(int n, AdmissibleFilter which) {
  if (n < 4 || n > 12)
    throw std::invalid_argument("enumerate_admissible: rank out of range");
  const int k = n;
  std::vector<Diagram> out;
  for (const auto& m : all_matchings(k)) {
    std::vector<Diagram::Edge> edges;
    for (auto [a, b] : m) edges.push_back({a, b, false});
    Diagram base =
        Diagram::from_edges(k, DiagramKind::DecoratedD, edges, false);
    if (which != AdmissibleFilter::TypeII && base.a_value() > 0)
      out.push_back(
          Diagram::from_edges(k, DiagramKind::DecoratedD, edges, true));
    if (which == AdmissibleFilter::TypeI) continue;
    std::vector<int> exposed;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
      if (base.depth(edges[i]) == 0) exposed.push_back(i);
    unsigned t = static_cast<unsigned>(exposed.size());
    for (unsigned mask = 0; mask < (1u << t); ++mask) {
      if (std::popcount(mask) % 2 != 0) continue;
      auto decorated = edges;
      for (unsigned i = 0; i < t; ++i)
        if (mask & (1u << i)) decorated[exposed[i]].dec = true;
      out.push_back(Diagram::from_edges(k, DiagramKind::DecoratedD,
                                        std::move(decorated), false));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Diagram star(const Diagram& d) {
  const int n2 = 2 * d.k();
  std::vector<Diagram::Edge> edges;
  for (const auto& e : d.edges())
    edges.push_back({n2 - 1 - e.b, n2 - 1 - e.a, e.dec});
  return Diagram::from_edges(d.k(), d.kind(), std::move(edges),
                             d.decorated_loop());
}

ScaledDiagram diagram_of_word(const Word& w, MulMode mode) {
  DiagramKind kind = w.graph.family() == Family::A ? DiagramKind::PlainA
                                                   : DiagramKind::DecoratedD;
  int k = w.graph.degree();
  ScaledDiagram acc;
  acc.diagram = Diagram::identity(k, kind);
  for (Gen g : w.letters) {
    ScaledDiagram step =
        concat(*acc.diagram, Diagram::simple(w.graph, g), mode);
    if (step.is_zero) return ScaledDiagram{0, true, std::nullopt};
    acc.loop_power += step.loop_power;
    acc.diagram = std::move(step.diagram);
  }
  return acc;
}

}  // namespace tld
