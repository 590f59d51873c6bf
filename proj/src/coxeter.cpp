/*
  coxeter.cpp
*/

#include "tld/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

namespace tld {

std::string to_string(Gen g) {
  return g.is_one_bar() ? std::string("1bar") : std::to_string(g.index());
}

CoxeterGraph CoxeterGraph::make(Family f, int rank) {
  if (f == Family::A && rank < 1)
    throw std::invalid_argument("type A requires rank >= 1");
  if (f == Family::D && rank < 4)
    throw std::invalid_argument("type D requires rank >= 4");
  return CoxeterGraph(f, rank);
}

bool CoxeterGraph::valid(Gen g) const {
  if (family_ == Family::A) return !g.is_one_bar() && g.index() <= rank_;
  return g.is_one_bar() || g.index() <= rank_ - 1;
}

int CoxeterGraph::m(Gen s, Gen t) const {
  if (!valid(s) || !valid(t))
    throw std::invalid_argument("m: generator not in graph");
  if (s == t) return 1;
  if (s.is_one_bar() || t.is_one_bar()) {
    // s_1bar bonds only with s_2.
    Gen other = s.is_one_bar() ? t : s;
    return other.code() == 2 ? 3 : 2;
  }
  return std::abs(s.index() - t.index()) == 1 ? 3 : 2;
}

std::vector<Gen> CoxeterGraph::generators() const {
  std::vector<Gen> out;
  if (family_ == Family::D) out.push_back(Gen::one_bar());
  int top = family_ == Family::A ? rank_ : rank_ - 1;
  for (int i = 1; i <= top; ++i) out.push_back(Gen::index(i));
  return out;
}

bool operator==(const Word& a, const Word& b) {
  return a.graph == b.graph && a.letters == b.letters;
}

bool word_lex_less(const Word& a, const Word& b) {
  if (a.letters.size() != b.letters.size())
    return a.letters.size() < b.letters.size();
  return a.letters < b.letters;
}

Word parse_word(const CoxeterGraph& graph, std::string_view text) {
  Word w{graph, {}};
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::string lower;
    for (char c : token) lower.push_back(static_cast<char>(std::tolower(c)));
    Gen g = Gen::one_bar();
    if (lower == "1bar") {
      // keep one_bar
    } else {
      std::size_t pos = 0;
      int i = 0;
      try {
        i = std::stoi(lower, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad word token: " + token);
      }
      if (pos != lower.size() || i < 1)
        throw std::invalid_argument("bad word token: " + token);
      g = Gen::index(i);
    }
    if (!graph.valid(g))
      throw std::invalid_argument("generator out of range: " + token);
    w.letters.push_back(g);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      token.push_back(c);
  }
  flush();
  return w;
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ',';
    out += to_string(w.letters[i]);
  }
  return out;
}

GroupElement GroupElement::identity(const CoxeterGraph& g) {
  std::vector<int> img(g.degree());
  for (int p = 0; p < g.degree(); ++p) img[p] = p + 1;
  return GroupElement(g, std::move(img));
}

bool GroupElement::is_identity() const {
  for (int p = 0; p < static_cast<int>(img_.size()); ++p)
    if (img_[p] != p + 1) return false;
  return true;
}

GroupElement GroupElement::times_gen(Gen s) const {
  if (!graph_.valid(s)) throw std::invalid_argument("times_gen: bad generator");
  std::vector<int> img = img_;
  if (s.is_one_bar()) {
    // s_1bar sends 1 -> -2, 2 -> -1.
    img[0] = -img_[1];
    img[1] = -img_[0];
  } else {
    int i = s.index();
    std::swap(img[i - 1], img[i]);
  }
  return GroupElement(graph_, std::move(img));
}

GroupElement GroupElement::gen_times(Gen s) const {
  if (!graph_.valid(s)) throw std::invalid_argument("gen_times: bad generator");
  std::vector<int> img = img_;
  auto apply = [&](int v) -> int {
    int a = std::abs(v);
    int sign = v < 0 ? -1 : 1;
    if (s.is_one_bar()) {
      if (a == 1) return sign * -2;
      if (a == 2) return sign * -1;
      return v;
    }
    int i = s.index();
    if (a == i) return sign * (i + 1);
    if (a == i + 1) return sign * i;
    return v;
  };
  for (int& v : img) v = apply(v);
  return GroupElement(graph_, std::move(img));
}

GroupElement GroupElement::inverse() const {
  std::vector<int> inv(img_.size());
  for (int p = 0; p < static_cast<int>(img_.size()); ++p) {
    int q = img_[p];
    if (q > 0)
      inv[q - 1] = p + 1;
    else
      inv[-q - 1] = -(p + 1);
  }
  return GroupElement(graph_, std::move(inv));
}

GroupElement element_of(const Word& w) {
  GroupElement g = GroupElement::identity(w.graph);
  for (Gen s : w.letters) g = g.times_gen(s);
  return g;
}

int length(const GroupElement& g) {
  const auto& img = g.images();
  int n = static_cast<int>(img.size());
  int inv = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (img[p] > img[q]) ++inv;
  if (g.graph().family() == Family::A) return inv;
  int nsp = 0;  // pairs with negative sum
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (img[p] + img[q] < 0) ++nsp;
  return inv + nsp;
}

namespace {

struct GraphKey {
  Family f;
  int rank;
  auto operator<=>(const GraphKey&) const = default;
};

// Full-group BFS from the identity; cached per graph.
const std::map<std::vector<int>, int>& bfs_table(const CoxeterGraph& g) {
  static std::map<GraphKey, std::map<std::vector<int>, int>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  GraphKey key{g.family(), g.rank()};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if ((g.family() == Family::A && g.rank() > 8) ||
      (g.family() == Family::D && g.rank() > 7))
    throw std::invalid_argument("length_bfs: rank too large for full BFS");
  auto& table = cache[key];
  std::deque<GroupElement> frontier;
  GroupElement e = GroupElement::identity(g);
  table[e.images()] = 0;
  frontier.push_back(e);
  auto gens = g.generators();
  while (!frontier.empty()) {
    GroupElement w = frontier.front();
    frontier.pop_front();
    int d = table.at(w.images());
    for (Gen s : gens) {
      GroupElement ws = w.times_gen(s);
      if (table.emplace(ws.images(), d + 1).second) frontier.push_back(ws);
    }
  }
  return table;
}

}  // namespace

int length_bfs(const GroupElement& g) {
  return bfs_table(g.graph()).at(g.images());
}

std::vector<Gen> descents(const GroupElement& g, Side side) {
  std::vector<Gen> out;
  int len = length(g);
  for (Gen s : g.graph().generators()) {
    GroupElement h = side == Side::Left ? g.gen_times(s) : g.times_gen(s);
    if (length(h) < len) out.push_back(s);
  }
  return out;
}

std::vector<Gen> support(const GroupElement& g) {
  std::set<Gen> seen;
  GroupElement el = g;
  while (!el.is_identity()) {
    auto ds = descents(el, Side::Left);
    Gen s = ds.front();  // nonempty for non-identity
    seen.insert(s);
    el = el.gen_times(s);
  }
  return {seen.begin(), seen.end()};
}

bool is_reduced(const Word& w) {
  return length(element_of(w)) == static_cast<int>(w.letters.size());
}

namespace {

void require_reduced(const Word& w, const char* who) {
  if (!is_reduced(w))
    throw std::domain_error(std::string(who) + ": word is not reduced");
}

// Breadth-first closure under adjacent commuting swaps.  When braid_stop
// is set, returns early with found_braid = true as soon as some member
// contains a factor s t s with m(s,t) = 3.
std::set<std::vector<Gen>> commutation_closure(const Word& w, bool braid_stop,
                                               bool* found_braid) {
  const CoxeterGraph& g = w.graph;
  std::set<std::vector<Gen>> seen{w.letters};
  std::deque<std::vector<Gen>> queue{w.letters};
  auto has_braid = [&](const std::vector<Gen>& u) {
    for (std::size_t i = 0; i + 2 < u.size(); ++i)
      if (u[i] == u[i + 2] && g.m(u[i], u[i + 1]) == 3) return true;
    return false;
  };
  if (found_braid) *found_braid = false;
  while (!queue.empty()) {
    std::vector<Gen> u = queue.front();
    queue.pop_front();
    if (braid_stop && has_braid(u)) {
      *found_braid = true;
      return seen;
    }
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (!g.commute(u[i], u[i + 1])) continue;
      std::swap(u[i], u[i + 1]);
      if (seen.insert(u).second) queue.push_back(u);
      std::swap(u[i], u[i + 1]);
    }
  }
  return seen;
}

// Appending s to the reduced word w keeps it fully commutative iff w has
// no earlier occurrence of s, or at least two letters after the last one
// fail to commute with s.  The count is a commutation-class invariant.
bool fc_extension_ok(const CoxeterGraph& g, const std::vector<Gen>& w, Gen s) {
  int noncommuting = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it == s) return noncommuting >= 2;
    if (!g.commute(*it, s)) ++noncommuting;
  }
  return true;
}

}  // namespace

std::vector<Word> commutation_class(const Word& w) {
  require_reduced(w, "commutation_class");
  auto seen = commutation_closure(w, false, nullptr);
  std::vector<Word> out;
  out.reserve(seen.size());
  for (const auto& letters : seen) out.push_back(Word{w.graph, letters});
  return out;
}

bool is_fully_commutative(const Word& w) {
  require_reduced(w, "is_fully_commutative");
  bool found = false;
  commutation_closure(w, true, &found);
  return !found;
}

Word canonical_word(const Word& w) {
  require_reduced(w, "canonical_word");
  std::vector<Gen> rest = w.letters;
  std::vector<Gen> out;
  while (!rest.empty()) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(rest.size()); ++i) {
      bool movable = true;
      for (int q = 0; q < i; ++q)
        if (!w.graph.commute(rest[q], rest[i])) {
          movable = false;
          break;
        }
      if (movable && (best < 0 || rest[i] < rest[best])) best = i;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + best);
  }
  return Word{w.graph, std::move(out)};
}

std::vector<Word> enumerate_fc(const CoxeterGraph& g) {
  if ((g.family() == Family::A && g.rank() > 12) ||
      (g.family() == Family::D && g.rank() > 10))
    throw std::invalid_argument("enumerate_fc: rank too large");
  auto gens = g.generators();
  struct Node {
    GroupElement el;
    std::vector<Gen> word;
  };
  std::set<std::vector<int>> visited;
  std::deque<Node> queue;
  GroupElement e = GroupElement::identity(g);
  visited.insert(e.images());
  queue.push_back({e, {}});
  std::vector<Word> out;
  while (!queue.empty()) {
    Node node = queue.front();
    queue.pop_front();
    out.push_back(canonical_word(Word{g, node.word}));
    int len = static_cast<int>(node.word.size());
    for (Gen s : gens) {
      GroupElement next = node.el.times_gen(s);
      if (length(next) != len + 1) continue;
      if (!fc_extension_ok(g, node.word, s)) continue;
      if (!visited.insert(next.images()).second) continue;
      std::vector<Gen> word = node.word;
      word.push_back(s);
      queue.push_back({std::move(next), std::move(word)});
    }
  }
  std::sort(out.begin(), out.end(), word_lex_less);
  return out;
}

}  // namespace tld
