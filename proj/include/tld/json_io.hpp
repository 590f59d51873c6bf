/*
  json_io.hpp

  Canonical JSON serialization for diagrams, algebra elements and
  verification reports.  Emission order is fixed so equal values always
  produce identical bytes.
*/

#pragma once

#include <string>

#include <json.hpp>

#include "tld/algebra.hpp"
#include "tld/cellular.hpp"
#include "tld/diagram.hpp"

namespace tld {

using ojson = nlohmann::ordered_json;

ojson diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j, DiagramKind kind);

std::string kind_name(const AlgebraKind& kind);  // "dtl-a", "dtl-d", "lfd-d"
AlgebraKind kind_from_name(const std::string& name, int rank);

ojson element_to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const nlohmann::json& j);

ojson relation_report_to_json(const RelationReport& r);
ojson cell_report_to_json(const CellReport& r);

}  // namespace tld
