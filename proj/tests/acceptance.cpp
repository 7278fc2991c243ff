// Acceptance criteria 1-9, one PASS/FAIL line each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>

#include "la_agreement.hpp"
#include "oracles.hpp"
#include "qhb/catalog.hpp"
#include "qhb/errors.hpp"
#include "qhb/monad.hpp"

using namespace qhb;
using la::FieldSpec;
using la::Mat;
using la::Scalar;
using la::Vec;
using qba::QuasiBialgebra;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Collects failures for one criterion.
struct Tally {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void expect_all(const VerificationReport& r, const std::string& where) {
    for (const auto& c : r.checks())
      if (!c.passed) failures.push_back(where + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
};

std::vector<mod::QuasiHopfBimodule> witness_list(const QuasiBialgebra& A) {
  std::vector<mod::QuasiHopfBimodule> out;
  for (const auto& w : frob::witness_modules(A)) out.push_back(w.module);
  return out;
}

const Mat kSwap = Mat::from_rows({{0, 1}, {1, 0}});

void criterion1(Tally& t, std::string& note) {
  auto t0 = Clock::now();
  QuasiBialgebra A = catalog::load("kz2_twisted");
  frob::Extraction ex = frob::extract_preantipode(A);
  auto sol = qba::solve_preantipode(A);
  double dt = seconds_since(t0);
  t.expect(ex.status == frob::Extraction::Status::Found && ex.S && *ex.S == kSwap,
           "extract_preantipode does not return [[0,1],[1,0]]");
  t.expect(sol && sol->particular == kSwap && sol->dim() == 0,
           "solve_preantipode does not return exactly [[0,1],[1,0]]");
  t.expect(A.labels() == std::vector<std::string>{"1", "g"}, "basis is not {1, g}");
  t.expect(dt < 1.0, "runtime " + std::to_string(dt) + " s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f s", dt);
  note = buf;
}

void criterion2(Tally& t, std::string& note) {
  const std::map<std::string, bool> expected{
      {"kz2_group", true},        {"kz2_twisted", true},         {"sweedler4", true},
      {"idempotent_monoid", false}, {"kz4_monoid", false},       {"kz2_twisted_f3", true},
      {"idempotent_monoid_f5", false}};
  const std::set<std::string> required{"(1)", "(3)", "(4)", "(a)", "(b)", "(c)", "(e)", "(f)"};
  auto t0 = Clock::now();
  for (const auto& name : catalog::names()) {
    QuasiBialgebra A = catalog::load(name);
    monad::EquivalenceReport r;
    try {
      r = monad::main2_report(A);
    } catch (const InconsistentPredicates& e) {
      t.expect(false, name + ": inconsistent predicates: " + e.what());
      continue;
    }
    std::set<std::string> seen;
    for (const auto& p : r.predicates) {
      t.expect(p.value == r.value, name + ": predicate " + p.name + " disagrees");
      seen.insert(p.name.substr(0, p.name.find(' ')));
    }
    for (const auto& tag : required) t.expect(seen.count(tag) == 1, name + ": predicate " + tag + " missing");
    auto it = expected.find(name);
    t.expect(it != expected.end() && it->second == r.value, name + ": unexpected value");
    t.expect_all(r.checks, name);
  }
  double dt = seconds_since(t0);
  t.expect(dt < 30.0, "runtime " + std::to_string(dt) + " s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%zu entries, %.1f s", catalog::names().size(), dt);
  note = buf;
}

void criterion3(Tally& t, std::string& note) {
  int count = 0;
  for (const auto& name : catalog::names()) {
    QuasiBialgebra A = catalog::load(name);
    std::vector<mod::QuasiHopfBimodule> W = witness_list(A);
    mod::LeftModule k = mod::trivial_left(A), R = mod::regular_left(A);
    // eps_V, gamma_V and sigma_{V (x) A} for V = k, A
    VerificationReport adj = frob::adjunction_check(A, {W[0]}, {k, R});
    for (const char* tag : {"counit_invertible", "gamma_invertible", "sigma_free_invertible"})
      for (int i = 0; i < 2; ++i) {
        std::string c = std::string(tag) + "[" + std::to_string(i) + "]";
        t.expect(adj.passed(c), name + ": " + c);
        ++count;
      }
    t.expect(frob::sigma(A, mod::regular(A)).invertible, name + ": sigma_A");
    for (const auto& [V, W2, tag] : {std::tuple{k, R, "xi(k, A)"}, std::tuple{R, R, "xi(A, A)"}}) {
      mod::XiData x = mod::xi(A, V, W2);
      t.expect(frob::invertible(x.xi), name + ": " + tag + " not invertible");
      t.expect_all(mod::verify_xi(A, x), name + " " + tag);
    }
    for (std::size_t i = 0; i < W.size(); ++i) {
      VerificationReport ck = monad::chi_kappa_check(A, W[i], W[2]);
      for (const char* c : {"chi_invertible", "kappa_invertible"})
        t.expect(ck.passed(c), name + ": " + c + " on witness " + std::to_string(i));
      monad::TObject TM = monad::T(A, W[i]);
      monad::TObject TTM = monad::T(A, TM.module);
      t.expect(frob::invertible(monad::mu(A, TM, TTM)), name + ": mu on witness " + std::to_string(i));
      count += 3;
    }
    monad::TObject TA = monad::T(A, mod::regular(A));
    t.expect(frob::invertible(monad::phi0(A, TA)), name + ": phi0");
    count += 4;
  }
  note = std::to_string(count) + " maps";
}

void criterion4(Tally& t, std::string& note) {
  int pairs = 0;
  for (const char* name : {"kz2_twisted", "kz2_group"}) {
    QuasiBialgebra A = catalog::load(name);
    Mat S = *frob::extract_preantipode(A).S;
    std::vector<mod::QuasiHopfBimodule> W = witness_list(A);
    for (std::size_t i = 0; i < W.size(); ++i)
      t.expect_all(frob::sigma_inverse_formula_check(A, S, W[i]), std::string(name) + " sigma^-1 on witness " + std::to_string(i));
    for (std::size_t i = 0; i < W.size(); ++i)
      for (std::size_t j = 0; j < W.size(); ++j) {
        t.expect_all(monad::psi_inverse_check(A, S, W[i], W[j]),
                     std::string(name) + " psi^-1 on (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        ++pairs;
      }
  }
  note = std::to_string(pairs) + " witness pairs";
}

/// S(ab) against S(phi1 b) phi2 S(a phi3), phi = Phi^-1, summed over basis triples.
void criterion5(Tally& t, std::string& note) {
  int checked = 0;
  for (const char* name : {"kz2_group", "kz2_twisted", "sweedler4", "kz2_twisted_f3"}) {
    QuasiBialgebra A = catalog::load(name);
    frob::Extraction ex = frob::extract_preantipode(A);
    if (!ex.S) {
      t.expect(false, std::string(name) + ": no S extracted");
      continue;
    }
    const Mat& S = *ex.S;
    const int n = A.n();
    const Vec& phi = A.phi_inv();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Vec lhs = S.apply(A.mul(A.e(a), A.e(b)));
        Vec rhs = A.zero();
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r) {
              const Scalar& c = phi[(static_cast<std::size_t>(p) * n + q) * n + r];
              if (c.is_zero()) continue;
              Vec term = A.mul(A.mul(S.apply(A.mul(A.e(p), A.e(b))), A.e(q)),
                               S.apply(A.mul(A.e(a), A.e(r))));
              for (int k = 0; k < n; ++k) rhs[k] += c * term[k];
            }
        t.expect(lhs == rhs, std::string(name) + ": fails at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        ++checked;
      }
    t.expect(qba::verify_preantipode(A, S).passed("corollary_identity"), std::string(name) + ": corollary_identity");
  }
  note = std::to_string(checked) + " basis pairs";
}

void criterion6(Tally& t, std::string&) {
  for (const char* name : {"kz2_group", "kz2_twisted", "sweedler4"}) {
    frob::IntegralSpaces I = frob::integrals(catalog::load(name));
    t.expect(I.left.dim() == 1 && I.right.dim() == 1, std::string(name) + ": integral dimensions");
  }
  t.expect(!frob::integrals(catalog::load("sweedler4")).unimodular, "sweedler4 reported unimodular");
  QuasiBialgebra G = catalog::load("kz2_group");
  frob::IntegralSpaces g = frob::integrals(G);
  la::Subspace want = la::Subspace::span(Mat::from_rows({{1}, {1}}));
  t.expect(g.unimodular, "kz2_group not unimodular");
  t.expect(g.left == want && g.right == want, "kz2_group integrals differ from span{1+g}");
}

void criterion7(Tally& t, std::string&) {
  const std::map<std::string, bool> expected{
      {"kz2_group", true}, {"sweedler4", true}, {"idempotent_monoid", false}, {"kz4_monoid", false}};
  for (const auto& [name, want] : expected) {
    QuasiBialgebra A = catalog::load(name);
    t.expect(A.phi_is_trivial(), name + ": phi not trivial");
    std::vector<frob::Witness> W = frob::witness_modules(A);
    frob::CanData c = frob::can_map_check(A, W);
    for (const auto& w : W)
      t.expect(c.report.passed("varsigma_lambda_is_sigma[" + w.name + "]"), name + ": varsigma lambda = sigma on " + w.name);
    t.expect(c.invertible == want, name + ": can invertibility");
    t.expect(qba::solve_preantipode(A).has_value() == want, name + ": preantipode predicate");
    t.expect_all(c.report, name);
  }
}

void criterion8(Tally& t, std::string& note) {
  QuasiBialgebra T2 = catalog::load("kz2_twisted");
  mod::Bimodule Re = mod::with_trivial_right(T2, mod::regular_left(T2));
  mod::Bimodule R = mod::regular_bimodule(T2);
  t.expect_all(mod::pentagon_triangle_check(T2, Re, Re, Re, Re), "kz2_twisted pentagon (A_eps)");
  t.expect_all(mod::pentagon_triangle_check(T2, R, R, R, R), "kz2_twisted pentagon (A)");
  int raised = 0;
  for (const auto& name : catalog::names()) {
    QuasiBialgebra A = catalog::load(name);
    t.expect_all(frob::tau_correspondence(A, 1, A.eps_family()).report, name + " tau(k)");
    t.expect_all(frob::tau_correspondence(A, A.n(), A.rreg()).report, name + " tau(A)");
    std::vector<mod::QuasiHopfBimodule> W = witness_list(A);
    try {
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) mod::tensor_over_A(A, W[i], W[j]);
    } catch (const IllDefined& e) {
      t.expect(false, name + ": IllDefined on valid input: " + e.what());
    }
    // m -> m (x) 1 is counital but not bilinear
    mod::QuasiHopfBimodule bad = mod::regular(A);
    bad.delta = la::kron(Mat::identity(A.n(), A.field()), Mat::column(A.one(), A.field()));
    try {
      mod::tensor_over_A(A, bad, mod::regular(A));
      t.expect(false, name + ": corrupted coaction accepted");
    } catch (const IllDefined&) {
      ++raised;
    }
  }
  note = std::to_string(raised) + " corrupted fixtures rejected";
}

oracle::ModAlgebra to_mod(const qba::AlgebraData& d) {
  long p = d.field.characteristic();
  auto ints = [&](const Vec& v) {
    std::vector<long> out;
    for (const auto& s : v) out.push_back(s.in_field(static_cast<std::uint32_t>(p)).value().get_num().get_si());
    return out;
  };
  return {d.n, p, ints(d.mult), ints(d.comul), ints(d.unit), ints(d.counit), ints(d.phi)};
}

void criterion9(Tally& t, std::string&) {
  FieldSpec f3 = FieldSpec::prime(3);
  for (const char* family : {"kz2_twisted", "kz2_group", "idempotent_monoid"}) {
    qba::AlgebraData d = catalog::build(family, f3);
    auto brute = oracle::preantipodes_by_enumeration(to_mod(d));
    std::set<std::vector<long>> want(brute.begin(), brute.end());
    QuasiBialgebra A(d);
    std::set<std::vector<long>> got;
    if (auto sol = qba::solve_preantipode(A)) {
      Vec flat;
      for (int i = 0; i < A.n(); ++i)
        for (int j = 0; j < A.n(); ++j) flat.push_back(sol->particular(i, j));
      got = agreement::affine_points(flat, sol->homogeneous.basis(), 3);
    }
    t.expect(got == want, std::string(family) + ": preantipode set differs from enumeration");
  }
  t.expect(agreement::count_disagreements(2, 101, 300) == 0, "nullspace/solve_affine over F2");
  t.expect(agreement::count_disagreements(3, 202, 200) == 0, "nullspace/solve_affine over F3");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&, std::string&)>>> criteria{
      {"worked example S = [[0,1],[1,0]] on kz2_twisted", criterion1},
      {"equivalent predicates agree on the catalog", criterion2},
      {"unconditional isomorphisms", criterion3},
      {"closed-form inverses of sigma and psi", criterion4},
      {"corollary identity for extracted S", criterion5},
      {"integrals", criterion6},
      {"bialgebra specialization", criterion7},
      {"structure-theory sanity", criterion8},
      {"oracle cross-checks over F2 and F3", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    std::string note;
    try {
      criteria[i].second(t, note);
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    bool ok = t.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!note.empty()) std::cout << " [" << note << "]";
    std::cout << "\n";
    for (const auto& f : t.failures) std::cout << "    " << f << "\n";
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
