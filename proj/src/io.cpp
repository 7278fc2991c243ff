#include "qhb/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qhb/errors.hpp"

namespace qhb::io {

using qba::AlgebraData;
using qba::FieldSpec;
using la::Scalar;
using la::Vec;

namespace {

std::string where(const std::string& key) { return "algebra file: " + key; }

Scalar scalar(const json& j, FieldSpec f, const std::string& key) {
  if (j.is_string()) {
    try {
      return f.parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where(key) + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return f.parse(std::to_string(j.get<long long>()));
  throw ParseError(where(key) + ": scalar must be a string such as \"-3/4\"");
}

const json& member(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where(key) + " is missing");
  return *it;
}

void expect_array(const json& j, std::size_t len, const std::string& key) {
  if (!j.is_array() || j.size() != len)
    throw ParseError(where(key) + ": expected an array of length " + std::to_string(len));
}

Vec flat(const json& j, std::size_t len, FieldSpec f, const std::string& key) {
  expect_array(j, len, key);
  Vec out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(scalar(j[i], f, key));
  return out;
}

Vec cube(const json& j, int n, FieldSpec f, const std::string& key) {
  const std::size_t m = static_cast<std::size_t>(n);
  expect_array(j, m, key);
  Vec out;
  out.reserve(m * m * m);
  for (std::size_t i = 0; i < m; ++i) {
    expect_array(j[i], m, key + "[" + std::to_string(i) + "]");
    for (std::size_t k = 0; k < m; ++k) {
      std::string sub = key + "[" + std::to_string(i) + "][" + std::to_string(k) + "]";
      Vec row = flat(j[i][k], m, f, sub);
      out.insert(out.end(), row.begin(), row.end());
    }
  }
  return out;
}

json strings(const Vec& v, std::size_t from, std::size_t len) {
  json a = json::array();
  for (std::size_t i = from; i < from + len; ++i) a.push_back(v[i].str());
  return a;
}

json nested(const Vec& v, int n) {
  const std::size_t m = static_cast<std::size_t>(n);
  json out = json::array();
  for (std::size_t i = 0; i < m; ++i) {
    json mid = json::array();
    for (std::size_t k = 0; k < m; ++k) mid.push_back(strings(v, (i * m + k) * m, m));
    out.push_back(std::move(mid));
  }
  return out;
}

}  // namespace

json field_to_json(FieldSpec f) {
  if (f.is_rational()) return "Q";
  json j;
  j["Fp"] = f.characteristic();
  return j;
}

FieldSpec field_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return FieldSpec();
    throw UnsupportedField("unsupported field \"" + j.get<std::string>() + "\"");
  }
  if (j.is_object() && j.size() == 1 && j.contains("Fp")) {
    const json& p = j["Fp"];
    if (!p.is_number_integer() || p.get<long long>() < 0)
      throw UnsupportedField("field characteristic must be a positive prime");
    return FieldSpec::prime(p.get<std::uint64_t>());
  }
  throw ParseError(where("field") + ": expected \"Q\" or {\"Fp\": p}");
}

json to_json(const AlgebraData& d) {
  json j;
  j["field"] = field_to_json(d.field);
  j["n"] = d.n;
  j["basis"] = d.labels;
  const std::size_t n = static_cast<std::size_t>(d.n);
  j["mult"] = nested(d.mult, d.n);
  j["unit"] = strings(d.unit, 0, n);
  j["comul"] = nested(d.comul, d.n);
  j["counit"] = strings(d.counit, 0, n);
  j["phi"] = strings(d.phi, 0, n * n * n);
  if (d.phi_inv) j["phi_inv"] = strings(*d.phi_inv, 0, n * n * n);
  return j;
}

AlgebraData from_json(const json& j) {
  if (!j.is_object()) throw ParseError("algebra file: top level must be an object");
  AlgebraData d;
  d.field = field_from_json(member(j, "field"));
  const json& n = member(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1 || n.get<long long>() > 64)
    throw ParseError(where("n") + ": expected an integer between 1 and 64");
  d.n = n.get<int>();
  const std::size_t m = static_cast<std::size_t>(d.n);
  if (auto it = j.find("basis"); it != j.end()) {
    expect_array(*it, m, "basis");
    for (const auto& l : *it) {
      if (!l.is_string()) throw ParseError(where("basis") + ": labels must be strings");
      d.labels.push_back(l.get<std::string>());
    }
  }
  d.mult = cube(member(j, "mult"), d.n, d.field, "mult");
  d.unit = flat(member(j, "unit"), m, d.field, "unit");
  d.comul = cube(member(j, "comul"), d.n, d.field, "comul");
  d.counit = flat(member(j, "counit"), m, d.field, "counit");
  d.phi = flat(member(j, "phi"), m * m * m, d.field, "phi");
  if (auto it = j.find("phi_inv"); it != j.end() && !it->is_null())
    d.phi_inv = flat(*it, m * m * m, d.field, "phi_inv");
  return d;
}

std::string emit(const AlgebraData& d) { return pretty(to_json(d)); }

Parsed parse_text(std::string_view text, bool verify) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("algebra file: malformed JSON: ") + e.what());
  }
  Parsed p{from_json(j), {}};
  p.report = qba::verify_quasibialgebra(p.data);
  if (verify && !p.report.all_pass()) throw AxiomError(p.report.failed());
  return p;
}

Parsed parse_file(const std::string& path, bool verify) {
  return parse_text(read_file(path), verify);
}

qba::QuasiBialgebra parse(const std::string& path) {
  return qba::QuasiBialgebra(parse_file(path).data);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("cannot write " + path);
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

namespace {

bool flat_array(const json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void pretty_into(std::string& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + json(it.key()).dump() + ": ";
      pretty_into(out, it.value(), indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array() && !j.empty() && !flat_array(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      pretty_into(out, j[i], indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else {
    out += j.dump(-1, ' ', false);
  }
}

}  // namespace

std::string pretty(const json& j) {
  std::string out;
  pretty_into(out, j, 0);
  return out + "\n";
}

json matrix_to_json(const la::Mat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qhb::io
