#pragma once

#include <json.hpp>
#include <string>

#include "thyp/audit.hpp"
#include "thyp/cover.hpp"
#include "thyp/surface.hpp"

namespace thyp {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const ProjectiveMatrix& m);
/// Row-major 4-tuple; the determinant is checked and renormalised.
ProjectiveMatrix matrix_from_json(const Json& j);

Json cover_element_to_json(const CoverElement& x);
CoverElement cover_element_from_json(const Json& j);
Json cover_class_to_json(const CoverClass& c);
CoverClass cover_class_from_json(const Json& j);

/// Writes the free images and, redundantly, c_p. meta carries seed, origin and, when defined,
/// the euler class and signs.
Json rep_to_json(const Representation& rep);
/// c_p is optional; when present it must match the relator within 1e-8 (RelatorViolated).
Representation rep_from_json(const Json& j);

Json audit_to_json(const AuditReport& r);
std::string audit_csv_header();
std::string audit_csv_row(const std::string& name, const AuditReport& r);
Json restrictions_to_json(const RestrictionReport& r);

Json read_json_file(const std::string& path);
/// Writes to a temporary file in the same directory and renames it over path.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace thyp
