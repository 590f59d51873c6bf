/*
  render.hpp

  Deterministic ASCII and SVG drawings of diagrams and heaps.
*/

#pragma once

#include <string>

#include "tld/diagram.hpp"
#include "tld/heap.hpp"

namespace tld {

std::string render_diagram_ascii(const Diagram& d);
std::string render_diagram_svg(const Diagram& d);
std::string render_heap_ascii(const Heap& h);
std::string render_heap_svg(const Heap& h);

}  // namespace tld
