#include <random>

#include "doctest.h"
#include "qhb/catalog.hpp"
#include "qhb/frob.hpp"

using namespace qhb;
using namespace qhb::frob;
using la::FieldSpec;
using la::Scalar;

namespace {

bool in_solution_set(const QuasiBialgebra& A, const Mat& S) {
  auto sol = qba::solve_preantipode(A);
  if (!sol) return false;
  Vec diff;
  for (int i = 0; i < A.n(); ++i)
    for (int j = 0; j < A.n(); ++j) diff.push_back(S(i, j) - sol->particular(i, j));
  return sol->homogeneous.contains(diff);
}

bool all_sigma_invertible(const QuasiBialgebra& A) {
  for (const auto& w : witness_modules(A))
    if (!sigma(A, w.module).invertible) return false;
  return true;
}

bool all_eta_invertible(const QuasiBialgebra& A) {
  for (const auto& w : witness_modules(A)) {
    auto bar = mod::quotient_module(A, w.module.bim);
    if (!invertible(eta(A, w.module, bar))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("sigma_A is invertible with inverse x (x) y -> eps(x) y") {
  for (const auto& name : catalog::names()) {
    CAPTURE(name);
    QuasiBialgebra A = catalog::load(name);
    SigmaData s = sigma(A, mod::regular(A));
    REQUIRE(s.invertible);
    CHECK(s.bar.dim() == 1);
    Vec coords = s.inverse->apply(s.bar.q.proj.apply(A.one()));
    CHECK(s.hom.element(coords) == la::kron(A.eps_matrix(), Mat::identity(A.n(), A.field())));
  }
}

TEST_CASE("sigma on the witnesses of a monoid algebra") {
  CHECK(sigma(catalog::load("kz2_twisted"), mod::hat_module(catalog::load("kz2_twisted"))).invertible);
  QuasiBialgebra I = catalog::load("idempotent_monoid");
  // Hom(A (x) A, A^) is spanned by x (x) y -> e (x) y, so sigma on A^ is invertible
  SigmaData h = sigma(I, mod::hat_module(I));
  CHECK(h.invertible);
  CHECK(h.hom.dim() == 1);
  SigmaData s = sigma(I, mod::tilde_module(I, mod::regular_bimodule(I)));
  CHECK_FALSE(s.invertible);
  CHECK(s.detail == "not invertible (dimension mismatch: 1 x 3)");
}

TEST_CASE("preantipode extraction") {
  QuasiBialgebra T = catalog::load("kz2_twisted");
  Extraction e = extract_preantipode(T);
  REQUIRE(e.status == Extraction::Status::Found);
  CHECK(*e.S == Mat::from_rows({{0, 1}, {1, 0}}));
  QuasiBialgebra G = catalog::load("kz2_group");
  Extraction g = extract_preantipode(G);
  REQUIRE(g.status == Extraction::Status::Found);
  CHECK(*g.S == Mat::identity(2));
  for (const char* name : {"idempotent_monoid", "kz4_monoid"}) {
    CAPTURE(name);
    Extraction p = extract_preantipode(catalog::load(name));
    CHECK(p.status == Extraction::Status::Partial);
    CHECK(p.failed == std::vector<std::string>{"phi_identity"});
  }
  Extraction i = extract_preantipode(catalog::load("idempotent_monoid"));
  CHECK(*i.S == Mat::from_rows({{0, 0}, {1, 1}}));
}

TEST_CASE("both preantipode paths and the sigma and eta predicates agree") {
  for (const auto& name : catalog::names()) {
    CAPTURE(name);
    QuasiBialgebra A = catalog::load(name);
    bool solved = qba::solve_preantipode(A).has_value();
    Extraction e = extract_preantipode(A);
    bool found = e.status == Extraction::Status::Found;
    CHECK(solved == found);
    CHECK(all_sigma_invertible(A) == solved);
    CHECK(all_eta_invertible(A) == solved);
    if (found) CHECK(in_solution_set(A, *e.S));
  }
}

TEST_CASE("sigma of a free module is always invertible") {
  for (const auto& name : catalog::names()) {
    CAPTURE(name);
    QuasiBialgebra A = catalog::load(name);
    CHECK(sigma(A, mod::free_module(A, mod::regular_left(A))).invertible);
    CHECK(sigma(A, mod::free_module(A, mod::trivial_left(A))).invertible);
  }
}

TEST_CASE("the explicit inverse of sigma") {
  QuasiBialgebra T = catalog::load("kz2_twisted");
  Mat S = *extract_preantipode(T).S;
  CHECK(sigma_inverse_formula_check(T, S, mod::hat_module(T)).all_pass());
  CHECK(sigma_inverse_formula_check(T, S, mod::free_module(T, mod::regular_left(T))).all_pass());
  QuasiBialgebra G = catalog::load("kz2_group");
  Mat SG = *extract_preantipode(G).S;
  CHECK(sigma_inverse_formula_check(G, SG, mod::tilde_module(G, mod::regular_bimodule(G))).all_pass());
  for (const char* name : {"sweedler4", "kz2_twisted_f3"}) {
    CAPTURE(name);
    QuasiBialgebra A = catalog::load(name);
    auto sol = qba::solve_preantipode(A);
    REQUIRE(sol);
    for (const auto& w : witness_modules(A))
      CHECK(sigma_inverse_formula_check(A, sol->particular, w.module).all_pass());
  }
}

TEST_CASE("adjunctions: units, counits and triangle identities") {
  for (const char* name : {"kz2_group", "kz2_twisted", "idempotent_monoid", "sweedler4"}) {
    CAPTURE(name);
    QuasiBialgebra A = catalog::load(name);
    std::vector<mod::QuasiHopfBimodule> ms;
    for (const auto& w : witness_modules(A)) ms.push_back(w.module);
    if (A.n() > 2) ms.resize(2);
    VerificationReport r =
        adjunction_check(A, ms, {mod::trivial_left(A), mod::regular_left(A)});
    for (const auto& c : r.checks()) {
      CAPTURE(c.name);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("tau correspondence") {
  for (const char* name : {"kz2_group", "kz2_twisted", "idempotent_monoid"}) {
    CAPTURE(name);
    QuasiBialgebra A = catalog::load(name);
    TauData k = tau_correspondence(A, 1, A.eps_family());
    CHECK(k.report.all_pass());
    TauData a = tau_correspondence(A, A.n(), A.rreg());
    CHECK(a.report.all_pass());
    CHECK(a.hom.dim() == a.hstar.dim());
  }
  QuasiBialgebra T = catalog::load("kz2_twisted");
  TauData t = tau_correspondence(T, 2, T.rreg());
  SigmaData s = sigma(T, mod::hat_module(T));
  Vec f = s.inverse->apply(s.bar.q.proj.apply(one_one(T)));
  Vec g = t.hstar.basis().apply(t.tau.apply(f));
  CHECK(g == Mat::from_rows({{0, 1}, {1, 0}}).data());
}

TEST_CASE("the canonical map of a bialgebra") {
  for (const char* name : {"kz2_group", "sweedler4", "idempotent_monoid", "kz4_monoid"}) {
    CAPTURE(name);
    QuasiBialgebra A = catalog::load(name);
    CanData c = can_map_check(A, witness_modules(A));
    CHECK(c.invertible == qba::solve_preantipode(A).has_value());
    CHECK(c.report.all_pass());
  }
  CHECK(can_map_check(catalog::load("kz2_group"), {}).invertible);
  CHECK_FALSE(can_map_check(catalog::load("idempotent_monoid"), {}).invertible);
  QuasiBialgebra T = catalog::load("kz2_twisted");
  CHECK_THROWS_AS(can_map_check(T, {}), NotABialgebra);
}

TEST_CASE("integrals") {
  QuasiBialgebra G = catalog::load("kz2_group");
  IntegralSpaces g = integrals(G);
  CHECK(g.left.dim() == 1);
  CHECK(g.unimodular);
  CHECK(g.left.contains(Vec{Scalar(1), Scalar(1)}));
  IntegralSpaces t = integrals(catalog::load("kz2_twisted"));
  CHECK(t.left.dim() == 1);
  CHECK(t.right.dim() == 1);
  IntegralSpaces s = integrals(catalog::load("sweedler4"));
  CHECK(s.left.dim() == 1);
  CHECK(s.right.dim() == 1);
  CHECK_FALSE(s.unimodular);
}

TEST_CASE("Frobenius data for the forgetful functor") {
  QuasiBialgebra K(catalog::ground_field(FieldSpec()));
  ForgetData trivial{Vec{Scalar(1)}, Mat::identity(1)};
  VerificationReport rk = verify_frobenius_forget_data(K, trivial);
  CHECK(rk.all_pass());
  CHECK(rk.checks().size() == 5);

  QuasiBialgebra G = catalog::load("kz2_group");
  Vec z = tensor::kron(tensor::kron(G.one(), G.one()), Vec{Scalar(1), Scalar(1)});
  VerificationReport rg = verify_frobenius_forget_data(G, {z, Mat::identity(4)});
  CHECK(rg.passed("eq1"));
  CHECK_FALSE(rg.passed("eq4"));

  QuasiBialgebra T = catalog::load("kz2_twisted");
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-2, 2);
  for (int trial = 0; trial < 3; ++trial) {
    ForgetData d{Vec(8), Mat(4, 4)};
    for (auto& x : d.z) x = Scalar(dist(rng));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) d.omega(i, j) = Scalar(dist(rng));
    CHECK_FALSE(verify_frobenius_forget_data(T, d).all_pass());
  }
}

TEST_CASE("bar commutes with tensoring by a left module") {
  for (const char* name : {"kz2_group", "kz2_twisted", "idempotent_monoid"}) {
    CAPTURE(name);
    QuasiBialgebra A = catalog::load(name);
    for (const auto& M : {mod::trivial_left(A), mod::regular_left(A)})
      for (const auto& N : {mod::regular_bimodule(A), mod::counit_left_regular_right(A),
                            mod::hat_module(A).bim})
        CHECK(cltensor_check(A, M, N).all_pass());
  }
}
