/*
  render.cpp
*/

#include "tld/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace tld {

namespace {

constexpr int kColStep = 4;
constexpr int kMargin = 4;  // room for the decorated-loop marker
constexpr int kBandRows = 3;

int col_of(int strand) { return kMargin + (strand - 1) * kColStep; }

struct Canvas {
  std::vector<std::string> rows;
  Canvas(int h, int w) : rows(h, std::string(w, ' ')) {}
  void put(int r, int c, char ch) {
    if (r >= 0 && r < static_cast<int>(rows.size()) && c >= 0 &&
        c < static_cast<int>(rows[r].size()))
      rows[r][c] = ch;
  }
  void text(int r, int c, const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      put(r, c + static_cast<int>(i), s[i]);
  }
  std::string str() const {
    std::string out;
    for (std::string row : rows) {
      while (!row.empty() && row.back() == ' ') row.pop_back();
      out += row;
      out += '\n';
    }
    return out;
  }
};

struct Arc {
  int a;  // strand numbers, a < b
  int b;
  bool dec;
  int height = 1;
};

// Nested arcs turn closer to their face: height = longest chain of arcs
// nested inside, plus one.
void assign_heights(std::vector<Arc>& arcs) {
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& x, const Arc& y) { return x.b - x.a < y.b - y.a; });
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (arcs[i].a < arcs[j].a && arcs[j].b < arcs[i].b)
        arcs[i].height = std::max(arcs[i].height, arcs[j].height + 1);
}

}  // namespace

std::string render_diagram_ascii(const Diagram& d) {
  const int k = d.k();
  std::vector<Arc> north, south;
  struct Prop {
    int i;  // north strand
    int j;  // south strand
    bool dec;
  };
  std::vector<Prop> props;
  for (const auto& e : d.edges()) {
    if (e.b < k)
      north.push_back({e.a + 1, e.b + 1, e.dec});
    else if (e.a >= k)
      south.push_back({2 * k - e.b, 2 * k - e.a, e.dec});
    else
      props.push_back({e.a + 1, 2 * k - e.b, e.dec});
  }
  assign_heights(north);
  assign_heights(south);
  int dn = 0, ds = 0;
  for (const auto& a : north) dn = std::max(dn, a.height);
  for (const auto& a : south) ds = std::max(ds, a.height);

  const int band_top = 1 + dn;            // first band row
  const int band_bot = band_top + kBandRows - 1;
  const int south_base = band_bot + ds;   // last south-arc row
  const int height = south_base + 2;      // + south label row
  const int width = kMargin + k * kColStep;
  Canvas cv(height, width);

  for (int i = 1; i <= k; ++i) {
    cv.text(0, col_of(i), std::to_string(i));
    cv.text(height - 1, col_of(i), std::to_string(i) + "'");
  }
  for (const auto& a : north) {
    int r = a.height;
    for (int row = 1; row < r; ++row) {
      cv.put(row, col_of(a.a), '|');
      cv.put(row, col_of(a.b), '|');
    }
    cv.put(r, col_of(a.a), '\\');
    cv.put(r, col_of(a.b), '/');
    for (int c = col_of(a.a) + 1; c < col_of(a.b); ++c) cv.put(r, c, '_');
    if (a.dec) cv.put(r, (col_of(a.a) + col_of(a.b)) / 2, '*');
  }
  for (const auto& a : south) {
    int r = south_base + 1 - a.height;
    for (int row = r + 1; row <= south_base; ++row) {
      cv.put(row, col_of(a.a), '|');
      cv.put(row, col_of(a.b), '|');
    }
    cv.put(r, col_of(a.a), '/');
    cv.put(r, col_of(a.b), '\\');
    for (int c = col_of(a.a) + 1; c < col_of(a.b); ++c) cv.put(r, c, '_');
    if (a.dec) cv.put(r, (col_of(a.a) + col_of(a.b)) / 2, '*');
  }
  for (const auto& p : props) {
    for (int row = 1; row < band_top; ++row) cv.put(row, col_of(p.i), '|');
    for (int row = band_bot + 1; row <= south_base; ++row)
      cv.put(row, col_of(p.j), '|');
    int x0 = col_of(p.i), x1 = col_of(p.j);
    int prev = x0;
    for (int t = 0; t < kBandRows; ++t) {
      int x = kBandRows == 1
                  ? x1
                  : x0 + (x1 - x0) * t / (kBandRows - 1);
      cv.put(band_top + t, x, x == prev ? '|' : (x > prev ? '\\' : '/'));
      prev = x;
    }
    if (p.dec) cv.put(band_top + kBandRows / 2, (x0 + x1) / 2, '*');
  }
  if (d.decorated_loop()) cv.text(band_top + kBandRows / 2, 0, "(*)");
  return cv.str();
}

std::string render_heap_ascii(const Heap& h) {
  HeapLayout lay = layout(h);
  auto slot = [&](int i) {
    const auto& e = lay.entries[i];
    if (h.graph.family() == Family::A) return e.column - 1;
    return e.column == 1 ? (e.channel < 0 ? 0 : 1) : e.column;
  };
  int rows = 0, cols = 1;
  for (std::size_t i = 0; i < lay.entries.size(); ++i) {
    rows = std::max(rows, lay.entries[i].level + 1);
    cols = std::max(cols, slot(static_cast<int>(i)) + 1);
  }
  const int cell = 4;
  Canvas cv(std::max(rows, 1), cols * cell);
  for (std::size_t i = 0; i < lay.entries.size(); ++i) {
    Gen g = h.labels[i];
    std::string label = g.is_one_bar() ? "1b" : std::to_string(g.index());
    cv.text(lay.entries[i].level, slot(static_cast<int>(i)) * cell, label);
  }
  return cv.str();
}

namespace {

std::string num(double v) {
  // one decimal, trailing ".0" trimmed, deterministic
  long long scaled = static_cast<long long>(v * 10 + (v >= 0 ? 0.5 : -0.5));
  std::string s = std::to_string(scaled / 10);
  if (scaled % 10 != 0) s += "." + std::to_string(std::abs(scaled % 10));
  return s;
}

void svg_open(std::string& out, int w, int h) {
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(w) + "\" height=\"" + std::to_string(h) +
         "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) +
         "\">\n";
}

}  // namespace

std::string render_diagram_svg(const Diagram& d) {
  const int k = d.k();
  const int step = 40, pad = 40, ytop = 30, ybot = 150;
  auto x_of = [&](int strand) { return pad + (strand - 1) * step; };
  int width = 2 * pad + (k - 1) * step, height = 180;
  std::string out;
  svg_open(out, width, height);
  out += "<rect x=\"" + num(pad - 20) + "\" y=\"" + num(ytop) + "\" width=\"" +
         num(width - 2 * pad + 40) + "\" height=\"" + num(ybot - ytop) +
         "\" fill=\"none\" stroke=\"#999\"/>\n";
  std::vector<std::pair<double, double>> dots;
  for (const auto& e : d.edges()) {
    bool north_cup = e.b < k, south_cup = e.a >= k;
    if (north_cup || south_cup) {
      int a = north_cup ? e.a + 1 : 2 * k - e.b;
      int b = north_cup ? e.b + 1 : 2 * k - e.a;
      double y = north_cup ? ytop : ybot;
      double dip = (north_cup ? 1 : -1) * (20.0 + 6.0 * (b - a));
      double cx = (x_of(a) + x_of(b)) / 2.0, cy = y + dip;
      out += "<path d=\"M " + num(x_of(a)) + " " + num(y) + " Q " + num(cx) +
             " " + num(cy) + " " + num(x_of(b)) + " " + num(y) +
             "\" fill=\"none\" stroke=\"black\"/>\n";
      if (e.dec) dots.emplace_back(cx, (y + y + 2 * cy) / 4.0);
    } else {
      int i = e.a + 1, j = 2 * k - e.b;
      out += "<line x1=\"" + num(x_of(i)) + "\" y1=\"" + num(ytop) +
             "\" x2=\"" + num(x_of(j)) + "\" y2=\"" + num(ybot) +
             "\" stroke=\"black\"/>\n";
      if (e.dec)
        dots.emplace_back((x_of(i) + x_of(j)) / 2.0, (ytop + ybot) / 2.0);
    }
  }
  if (d.decorated_loop()) {
    double cx = pad - 8, cy = (ytop + ybot) / 2.0;
    out += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) +
           "\" r=\"9\" fill=\"none\" stroke=\"black\"/>\n";
    dots.emplace_back(cx - 9, cy);
  }
  for (auto [x, y] : dots)
    out += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) +
           "\" r=\"3.5\" fill=\"black\"/>\n";
  for (int i = 1; i <= k; ++i) {
    out += "<text x=\"" + num(x_of(i)) + "\" y=\"" + num(ytop - 10) +
           "\" text-anchor=\"middle\" font-size=\"12\">" + std::to_string(i) +
           "</text>\n";
    out += "<text x=\"" + num(x_of(i)) + "\" y=\"" + num(ybot + 16) +
           "\" text-anchor=\"middle\" font-size=\"12\">" + std::to_string(i) +
           "&#8242;</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_heap_svg(const Heap& h) {
  HeapLayout lay = layout(h);
  auto slot = [&](int i) {
    const auto& e = lay.entries[i];
    if (h.graph.family() == Family::A) return e.column - 1;
    return e.column == 1 ? (e.channel < 0 ? 0 : 1) : e.column;
  };
  int rows = 1, cols = 1;
  for (std::size_t i = 0; i < lay.entries.size(); ++i) {
    rows = std::max(rows, lay.entries[i].level + 1);
    cols = std::max(cols, slot(static_cast<int>(i)) + 1);
  }
  const int cell = 44, pad = 6;
  std::string out;
  svg_open(out, cols * cell + 2 * pad, rows * cell + 2 * pad);
  for (std::size_t i = 0; i < lay.entries.size(); ++i) {
    int x = pad + slot(static_cast<int>(i)) * cell;
    int y = pad + lay.entries[i].level * cell;
    Gen g = h.labels[i];
    std::string label = g.is_one_bar() ? "1&#773;" : std::to_string(g.index());
    out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
           "\" width=\"" + std::to_string(cell - 4) + "\" height=\"" +
           std::to_string(cell - 4) + "\" fill=\"#eef\" stroke=\"black\"/>\n";
    out += "<text x=\"" + std::to_string(x + cell / 2 - 2) + "\" y=\"" +
           std::to_string(y + cell / 2 + 4) +
           "\" text-anchor=\"middle\" font-size=\"16\">" + label +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tld
