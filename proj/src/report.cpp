#include "qhb/report.hpp"

#include <random>
#include <sstream>

#include "qhb/errors.hpp"

namespace qhb::report {

using la::Mat;
using la::Vec;
using qba::QuasiBialgebra;

namespace {

json check(const std::string& name, const std::string& status, const std::string& detail) {
  json c;
  c["name"] = name;
  c["status"] = status;
  c["detail"] = detail;
  return c;
}

json header(const std::string& command, const std::string& digest, const qba::AlgebraData& d) {
  json j;
  j["command"] = command;
  j["input_digest"] = "fnv1a64:" + digest;
  j["field"] = d.field.name();
  j["n"] = d.n;
  j["basis"] = d.labels;
  return j;
}

json vectors(const la::Subspace& s) {
  json out = json::array();
  Mat b = s.basis();
  for (int c = 0; c < b.cols(); ++c) {
    json v = json::array();
    for (int r = 0; r < b.rows(); ++r) v.push_back(b(r, c).str());
    out.push_back(std::move(v));
  }
  return out;
}

std::string extraction_name(frob::Extraction::Status s) {
  switch (s) {
    case frob::Extraction::Status::Found:
      return "found";
    case frob::Extraction::Status::Partial:
      return "partial";
    default:
      return "none";
  }
}

/// T(F) nu_X = nu_Y F for a random F in Hom(X, Y).
void nu_samples(const QuasiBialgebra& A, const std::vector<frob::Witness>& W, unsigned seed,
                json& checks) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  const la::FieldSpec f = A.field();
  for (std::size_t i = 0; i < W.size(); ++i)
    for (std::size_t j = 0; j < W.size(); ++j) {
      const auto& X = W[i].module;
      const auto& Y = W[j].module;
      std::string name = "nu_natural[" + W[i].name + ", " + W[j].name + "]";
      if (X.dim() * Y.dim() > 32) {
        checks.push_back(check(name, "skipped(dim product above 32)", ""));
        continue;
      }
      mod::HomSpace h = mod::hom_space(A, X, Y);
      if (h.dim() == 0) {
        checks.push_back(check(name, "skipped(Hom is zero)", ""));
        continue;
      }
      Vec c;
      for (int k = 0; k < h.dim(); ++k) c.push_back(f.from_int(dist(rng)));
      Mat F = h.element(c);
      monad::TObject TX = monad::T(A, X), TY = monad::T(A, Y);
      bool ok = monad::T_map(A, F, TX, TY) * monad::nu(A, X, TX) == monad::nu(A, Y, TY) * F;
      checks.push_back(check(name, ok ? "pass" : "fail", "random morphism, seed " + std::to_string(seed)));
    }
}

void text_value(std::ostringstream& s, const json& v) {
  if (v.is_string())
    s << v.get<std::string>();
  else
    s << v.dump();
}

bool is_matrix(const json& v) {
  return v.is_array() && !v.empty() && v[0].is_array() && (v[0].empty() || v[0][0].is_string());
}

void text_matrix(std::ostringstream& s, const json& m, const std::string& indent) {
  for (const auto& row : m) {
    s << indent << "[";
    for (std::size_t c = 0; c < row.size(); ++c) s << (c ? " " : "") << row[c].get<std::string>();
    s << "]\n";
  }
}

void text_object(std::ostringstream& s, const json& j, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (it.key() == "checks" || it.key() == "predicates") {
      s << indent << it.key() << ":\n";
      for (const auto& c : v) {
        std::string mark = c.contains("status") ? c["status"].get<std::string>()
                                                 : (c["value"].get<bool>() ? "true" : "false");
        s << indent << "  " << mark << "  " << c["name"].get<std::string>();
        std::string detail = c.value("detail", "");
        if (!detail.empty()) s << "  (" << detail << ")";
        s << "\n";
      }
    } else if (is_matrix(v)) {
      s << indent << it.key() << ":\n";
      text_matrix(s, v, indent + "  ");
    } else if (v.is_object()) {
      s << indent << it.key() << ":\n";
      text_object(s, v, indent + "  ");
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
      s << indent << it.key() << ":\n";
      for (const auto& e : v) {
        text_object(s, e, indent + "  ");
        s << "\n";
      }
    } else {
      s << indent << it.key() << ": ";
      text_value(s, v);
      s << "\n";
    }
  }
}

}  // namespace

json checks_to_json(const VerificationReport& r) {
  json out = json::array();
  for (const auto& c : r.checks()) out.push_back(check(c.name, c.passed ? "pass" : "fail", c.detail));
  return out;
}

json verify_report(const std::string& digest, const io::Parsed& parsed) {
  json j = header("verify", digest, parsed.data);
  j["result"] = parsed.report.all_pass();
  j["checks"] = checks_to_json(parsed.report);
  return j;
}

json preantipode_report(const std::string& digest, const QuasiBialgebra& A) {
  json j = header("preantipode", digest, A.data());
  frob::Extraction ex = frob::extract_preantipode(A);
  auto solved = qba::solve_preantipode(A);
  const bool found = ex.status == frob::Extraction::Status::Found;

  json e;
  e["status"] = extraction_name(ex.status);
  if (ex.S) e["S"] = io::matrix_to_json(*ex.S);
  if (!ex.failed.empty()) e["failed"] = ex.failed;
  json s;
  s["exists"] = solved.has_value();
  if (solved) {
    s["particular"] = io::matrix_to_json(solved->particular);
    s["homogeneous_dim"] = solved->dim();
  }

  bool agree = found == solved.has_value();
  if (found && solved) agree = solved->homogeneous.contains((*ex.S - solved->particular).data());
  if (!agree)
    throw InconsistentPredicates("sigma extraction (" + extraction_name(ex.status) +
                                 ") and the linear solve (" +
                                 (solved ? "solution" : "no solution") + ") disagree");

  j["result"] = found;
  j["extraction"] = std::move(e);
  j["linear_solve"] = std::move(s);
  json checks = json::array();
  checks.push_back(check("solvers_agree", "pass", ""));
  if (found)
    for (auto& c : checks_to_json(qba::verify_preantipode(A, *ex.S))) checks.push_back(c);
  else
    checks.push_back(check("preantipode_axioms", "skipped(no preantipode)", ""));
  j["checks"] = std::move(checks);
  return j;
}

json integrals_report(const std::string& digest, const QuasiBialgebra& A) {
  json j = header("integrals", digest, A.data());
  frob::IntegralSpaces I = frob::integrals(A);
  j["result"] = true;
  j["left_dim"] = I.left.dim();
  j["right_dim"] = I.right.dim();
  j["unimodular"] = I.unimodular;
  j["left"] = vectors(I.left);
  j["right"] = vectors(I.right);
  return j;
}

json main_report(const std::string& digest, const QuasiBialgebra& A, const Options& opt) {
  json j = header("report", digest, A.data());
  monad::EquivalenceReport rep = monad::main2_report(A, opt.witness_cap);
  j["witness_cap"] = opt.witness_cap;
  j["seed"] = opt.seed;
  j["result"] = rep.value;
  j["witnesses"] = rep.witnesses;

  json preds = json::array();
  for (const auto& p : rep.predicates) {
    json q;
    q["name"] = p.name;
    q["value"] = p.value;
    q["detail"] = p.detail;
    preds.push_back(std::move(q));
  }
  j["predicates"] = std::move(preds);

  json checks = checks_to_json(rep.checks);
  if (!rep.value)
    for (const char* name : {"S.preantipode_axioms", "sigma_inverse_formula", "psi_inverse"})
      checks.push_back(check(name, "skipped(no preantipode)", ""));
  nu_samples(A, frob::witness_modules(A), opt.seed, checks);
  j["checks"] = std::move(checks);

  if (rep.S) {
    json found;
    found["S"] = io::matrix_to_json(*rep.S);
    json samples = json::array();
    for (const auto& s : rep.sigma_samples) {
      json e;
      e["witness"] = s.witness;
      e["sigma_inverse"] = io::matrix_to_json(s.inverse);
      samples.push_back(std::move(e));
    }
    found["sigma_inverse_samples"] = std::move(samples);
    j["found"] = std::move(found);
  }
  return j;
}

std::string to_text(const json& report) {
  std::ostringstream s;
  text_object(s, report, "");
  return s.str();
}

}  // namespace qhb::report
