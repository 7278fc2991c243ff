#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qhb/qba.hpp"

/// Algebra files: JSON with exact scalar strings, arrays in the global index convention.
namespace qhb::io {

using json = nlohmann::ordered_json;

json field_to_json(qba::FieldSpec f);
/// Throws ParseError or UnsupportedField.
qba::FieldSpec field_from_json(const json& j);

json to_json(const qba::AlgebraData& d);
/// Shapes and scalars only; no axioms are checked. Throws ParseError or UnsupportedField.
qba::AlgebraData from_json(const json& j);

std::string emit(const qba::AlgebraData& d);

struct Parsed {
  qba::AlgebraData data;  ///< as read, phi_inv absent if the file omits it
  VerificationReport report;
};
/// With verify set, throws AxiomError naming the failed checks; otherwise the failing report
/// is returned alongside the raw data.
Parsed parse_text(std::string_view text, bool verify = true);
Parsed parse_file(const std::string& path, bool verify = true);
/// Verified algebra, phi_inv solved when the file omits it.
qba::QuasiBialgebra parse(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// 64-bit FNV-1a, as 16 hex digits.
std::uint64_t fnv1a(std::string_view bytes);
std::string digest(std::string_view bytes);

json matrix_to_json(const la::Mat& m);

/// Indented JSON with arrays of scalars kept on one line.
std::string pretty(const json& j);

}  // namespace qhb::io
