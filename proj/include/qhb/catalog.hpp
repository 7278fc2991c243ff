#pragma once

#include <string>
#include <vector>

#include "qhb/qba.hpp"

/// Built-in example algebras.
namespace qhb::catalog {

struct Entry {
  std::string name;
  std::string family;
  qba::FieldSpec field;
  std::string description;
};

const std::vector<Entry>& entries();
std::vector<std::string> names();

/// Throws ParseError for unknown names.
qba::AlgebraData data(const std::string& name);
qba::QuasiBialgebra load(const std::string& name);

/// One family over an arbitrary field; the kz2 family rejects characteristic 2.
qba::AlgebraData build(const std::string& family, qba::FieldSpec f);

/// The one-dimensional algebra k.
qba::AlgebraData ground_field(qba::FieldSpec f);

/// Adds 1 to a single structure constant of mult.
qba::AlgebraData corrupt_mult(qba::AlgebraData d, int flat_index);

/// Standard antipode data for the Phi-trivial Hopf entries (s, alpha = beta = 1).
struct AntipodeData {
  qba::Mat s;
  qba::Vec alpha, beta;
};
AntipodeData standard_antipode(const std::string& family, qba::FieldSpec f);

}  // namespace qhb::catalog
