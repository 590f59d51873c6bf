/*
  tldiag.cpp

  Command-line front end: enumeration of fully commutative elements,
  algebra multiplication, relation/cellularity verification, and diagram
  or heap rendering.

  Exit codes: 0 success / verified, 1 verification failure, 2 invalid
  input.
*/

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tld/algebra.hpp"
#include "tld/cellular.hpp"
#include "tld/coxeter.hpp"
#include "tld/diagram.hpp"
#include "tld/heap.hpp"
#include "tld/json_io.hpp"
#include "tld/render.hpp"

namespace {

using tld::ojson;

// Output goes to --out atomically (write then rename) or to stdout.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path target(out_path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::invalid_argument("cannot write " + tmp.string());
    os << text;
  }
  std::filesystem::rename(tmp, target);
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot read " + path);
  nlohmann::json j;
  is >> j;
  return j;
}

tld::CoxeterGraph graph_of(const std::string& type, int rank) {
  if (type == "A" || type == "a") return tld::CoxeterGraph::type_a(rank);
  if (type == "D" || type == "d") return tld::CoxeterGraph::type_d(rank);
  throw std::invalid_argument("unknown Coxeter type: " + type);
}

void check_threads_env() {
  const char* env = std::getenv("TLD_THREADS");
  if (!env) return;
  // Accepted as a parallelism cap; all computations here are
  // single-threaded, so any valid cap is already honored.
  std::string v(env);
  std::size_t pos = 0;
  int n = -1;
  try {
    n = std::stoi(v, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("TLD_THREADS must be a nonnegative integer");
  }
  if (pos != v.size() || n < 0)
    throw std::invalid_argument("TLD_THREADS must be a nonnegative integer");
}

int cmd_fc_enum(const std::string& type, int rank, const std::string& heap_type,
                const std::string& format, const std::string& out_path) {
  tld::CoxeterGraph graph = graph_of(type, rank);
  if (heap_type != "all" && graph.family() != tld::Family::D)
    throw std::invalid_argument("--heap-type requires --type D");
  auto words = tld::enumerate_fc(graph);
  std::vector<std::pair<tld::Word, std::string>> rows;
  for (const auto& w : words) {
    std::string ht;
    if (graph.family() == tld::Family::D)
      ht = tld::classify_type(w) == tld::HeapType::TypeI ? "I" : "II";
    if (heap_type != "all" && ht != heap_type) continue;
    rows.emplace_back(w, ht);
  }
  if (format == "count") {
    emit(std::to_string(rows.size()) + "\n", out_path);
    return 0;
  }
  ojson j;
  j["type"] = graph.family() == tld::Family::A ? "A" : "D";
  j["rank"] = rank;
  if (graph.family() == tld::Family::D) j["heap_type"] = heap_type;
  j["count"] = rows.size();
  ojson elems = ojson::array();
  for (const auto& [w, ht] : rows) {
    ojson e;
    e["word"] = tld::to_string(w);
    e["length"] = w.size();
    if (!ht.empty()) e["heap_type"] = ht;
    elems.push_back(std::move(e));
  }
  j["elements"] = std::move(elems);
  emit(j.dump() + "\n", out_path);
  return 0;
}

tld::AlgebraElement load_operand(const tld::AlgebraKind& kind,
                                 const std::string& file,
                                 const std::optional<std::string>& word) {
  if (!file.empty()) return tld::element_from_json(load_json(file));
  tld::Word w = tld::parse_word(kind.coxeter_graph(), word.value());
  return tld::word_to_element(w, kind);
}

// Exit 2 for unparsable input, exit 1 when the operands parse but their
// algebra kind disagrees with --algebra.
int cmd_mul(const std::string& algebra, int rank, const std::string& lhs_file,
            const std::optional<std::string>& lword,
            const std::string& rhs_file,
            const std::optional<std::string>& rword,
            const std::string& out_path) {
  tld::AlgebraKind kind = tld::kind_from_name(algebra, rank);
  if (lhs_file.empty() == !lword.has_value())
    throw std::invalid_argument("need exactly one of --lhs / --lword");
  if (rhs_file.empty() == !rword.has_value())
    throw std::invalid_argument("need exactly one of --rhs / --rword");
  tld::AlgebraElement lhs = load_operand(kind, lhs_file, lword);
  tld::AlgebraElement rhs = load_operand(kind, rhs_file, rword);
  if (!(lhs.kind() == kind) || !(rhs.kind() == kind)) {
    std::cerr << "error: operand kind does not match --algebra\n";
    return 1;
  }
  tld::AlgebraElement prod = tld::elem_mul(lhs, rhs);
  emit(tld::element_to_json(prod).dump() + "\n", out_path);
  return 0;
}

int cmd_verify(const std::string& what, int rank, const std::string& out_path) {
  if (what == "relations") {
    ojson reports = ojson::array();
    bool ok = true;
    for (tld::AlgebraClass cls : {tld::AlgebraClass::DTL_D,
                                  tld::AlgebraClass::LFD_D,
                                  tld::AlgebraClass::DTL_A}) {
      tld::RelationReport r = tld::verify_presentation({cls, rank});
      ok = ok && r.passed();
      reports.push_back(tld::relation_report_to_json(r));
    }
    ojson j;
    j["rank"] = rank;
    j["result"] = ok ? "pass" : "fail";
    j["reports"] = std::move(reports);
    emit(j.dump() + "\n", out_path);
    return ok ? 0 : 1;
  }
  if (what == "cellular") {
    tld::CellReport r = tld::verify_cellularity(rank);
    emit(tld::cell_report_to_json(r).dump() + "\n", out_path);
    return r.passed() ? 0 : 1;
  }
  throw std::invalid_argument("--what must be relations or cellular");
}

int cmd_render(const std::string& in_file,
               const std::optional<std::string>& word, const std::string& type,
               int rank, const std::string& kind, const std::string& format,
               const std::string& out_path) {
  std::string drawing;
  if (!in_file.empty()) {
    nlohmann::json j = load_json(in_file);
    // Bare diagram files carry no algebra kind; decorations force type D.
    tld::Diagram d = tld::diagram_from_json(j, tld::DiagramKind::DecoratedD);
    drawing = format == "svg" ? tld::render_diagram_svg(d)
                              : tld::render_diagram_ascii(d);
  } else {
    tld::CoxeterGraph graph = graph_of(type, rank);
    tld::Word w = tld::parse_word(graph, *word);
    if (kind == "heap") {
      tld::Heap h = tld::heap_of(w);
      drawing =
          format == "svg" ? tld::render_heap_svg(h) : tld::render_heap_ascii(h);
    } else {
      tld::ScaledDiagram sd = tld::diagram_of_word(w, tld::MulMode::DTL);
      drawing = format == "svg" ? tld::render_diagram_svg(*sd.diagram)
                                : tld::render_diagram_ascii(*sd.diagram);
      if (sd.loop_power > 0)
        drawing = "delta^" + std::to_string(sd.loop_power) + " x\n" + drawing;
    }
  }
  emit(drawing, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Temperley-Lieb diagram algebra kernel (types A and D)"};
  app.require_subcommand(1);

  std::string type = "A", heap_type = "all", format = "count", out_path;
  int rank = 0;

  auto* fc = app.add_subcommand("fc-enum", "Enumerate fully commutative elements");
  fc->add_option("--type", type, "Coxeter type (A or D)")->required();
  fc->add_option("--rank", rank, "rank n")->required();
  fc->add_option("--heap-type", heap_type, "filter: I, II or all (type D)")
      ->check(CLI::IsMember({"I", "II", "all"}));
  fc->add_option("--format", format, "count or json")
      ->check(CLI::IsMember({"count", "json"}));
  fc->add_option("--out", out_path, "output file");

  std::string algebra, lhs_file, rhs_file;
  std::optional<std::string> lword, rword;
  auto* mul = app.add_subcommand("mul", "Multiply two algebra elements");
  mul->add_option("--algebra", algebra, "dtl-a, dtl-d or lfd-d")->required();
  mul->add_option("--rank", rank, "rank n")->required();
  mul->add_option("--lhs", lhs_file, "left operand JSON file");
  mul->add_option("--lword", lword, "left operand as a word");
  mul->add_option("--rhs", rhs_file, "right operand JSON file");
  mul->add_option("--rword", rword, "right operand as a word");
  mul->add_option("--out", out_path, "output file");

  std::string what;
  auto* verify = app.add_subcommand("verify", "Verify relations or cellularity");
  verify->add_option("--what", what, "relations or cellular")->required();
  verify->add_option("--rank", rank, "rank n")->required();
  verify->add_option("--out", out_path, "output file");

  std::string in_file, render_kind = "diagram";
  std::optional<std::string> word;
  std::string render_format = "ascii";
  auto* render = app.add_subcommand("render", "Render a diagram or a heap");
  render->add_option("--in", in_file, "diagram JSON file");
  render->add_option("--word", word, "word input");
  render->add_option("--type", type, "Coxeter type for --word");
  render->add_option("--rank", rank, "rank for --word");
  render->add_option("--kind", render_kind, "diagram or heap (word input)")
      ->check(CLI::IsMember({"diagram", "heap"}));
  render->add_option("--format", render_format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    check_threads_env();
    if (fc->parsed()) return cmd_fc_enum(type, rank, heap_type, format, out_path);
    if (mul->parsed())
      return cmd_mul(algebra, rank, lhs_file, lword, rhs_file, rword, out_path);
    if (verify->parsed()) return cmd_verify(what, rank, out_path);
    if (render->parsed()) {
      if (in_file.empty() && !word.has_value())
        throw std::invalid_argument("render needs --in or --word");
      if (!in_file.empty() && word.has_value())
        throw std::invalid_argument("render takes --in or --word, not both");
      return cmd_render(in_file, word, type, rank, render_kind, render_format,
                        out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
