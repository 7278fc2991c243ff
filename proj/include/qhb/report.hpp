#pragma once

#include <string>

#include "qhb/io.hpp"
#include "qhb/monad.hpp"

/// Machine-readable reports for the command line tool. Every report carries the input digest,
/// a "result" flag and a list of checks with status pass, fail or skipped(reason).
namespace qhb::report {

using io::json;

struct Options {
  int witness_cap = mod::kHomCap;
  unsigned seed = 1;
};

json checks_to_json(const VerificationReport& r);

json verify_report(const std::string& digest, const io::Parsed& parsed);
/// Both solver paths; throws InconsistentPredicates if they disagree.
json preantipode_report(const std::string& digest, const qba::QuasiBialgebra& A);
json integrals_report(const std::string& digest, const qba::QuasiBialgebra& A);
/// The equivalence report, plus seeded naturality samples of nu on witness pairs.
json main_report(const std::string& digest, const qba::QuasiBialgebra& A, const Options& opt = {});

std::string to_text(const json& report);

}  // namespace qhb::report
