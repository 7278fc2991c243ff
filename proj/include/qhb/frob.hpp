#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhb/qhbmod.hpp"

/// The adjoint triple (-)bar -| - (x) A -| Hom(A (x) A, -), the canonical map sigma and what
/// can be read off from it.
namespace qhb::frob {

using la::Mat;
using la::Subspace;
using la::Vec;
using mod::HomSpace;
using mod::LeftModule;
using mod::QuasiHopfBimodule;
using mod::QuotientModule;
using qba::QuasiBialgebra;

struct Witness {
  std::string name;
  QuasiHopfBimodule module;
};

/// A, A^, A (x)~ A, A (x) A free, and one tensor product over A.
std::vector<Witness> witness_modules(const QuasiBialgebra& A);

/// Square and of full rank; otherwise `why` says what went wrong.
bool invertible(const Mat& m, std::string* why = nullptr);

/// 1 (x) 1 in A (x) A.
Vec one_one(const QuasiBialgebra& A);

/// sigma_M: Hom(A (x) A, M) -> Mbar, f -> f(1 (x) 1)bar, in the Hom basis and quotient basis.
struct SigmaData {
  HomSpace hom;
  QuotientModule bar;
  Mat sigma;
  bool invertible = false;
  std::string detail;
  std::optional<Mat> inverse;
};
SigmaData sigma(const QuasiBialgebra& A, const QuasiHopfBimodule& M);

struct Extraction {
  enum class Status { None, Found, Partial };
  Status status = Status::None;
  std::optional<Mat> S;
  std::vector<std::string> failed;  ///< preantipode axioms violated by a Partial candidate
};
/// S(a) = (A (x) eps)(f(a (x) 1)) for f = sigma_A^^-1(1 (x) 1 bar).
Extraction extract_preantipode(const QuasiBialgebra& A);

/// m -> [x (x) y -> Phi1 x1 m0 S(Phi2 x2 m1) Phi3 y], checked against sigma_M.
VerificationReport sigma_inverse_formula_check(const QuasiBialgebra& A, const Mat& S,
                                               const QuasiHopfBimodule& M);

/// eta_M: M -> Mbar (x) A.
Mat eta(const QuasiBialgebra& A, const QuasiHopfBimodule& M, const QuotientModule& bar);
/// eps_V: (V (x) A)bar -> V.
Mat counit_map(const QuasiBialgebra& A, const LeftModule& V, const QuotientModule& free_bar);
/// gamma_V(v) as a map A (x) A -> V (x) A.
Mat gamma_at(const QuasiBialgebra& A, const LeftModule& V, const Vec& v);
/// theta_M: Hom(A (x) A, M) (x) A -> M, f (x) a -> f(1 (x) 1) a.
Mat theta(const QuasiBialgebra& A, const QuasiHopfBimodule& M, const HomSpace& hom);
/// Left action (b.f)(x (x) y) = f(xb (x) y) on Hom(A (x) A, M).
LeftModule hom_module(const QuasiBialgebra& A, const HomSpace& hom);

/// Units, counits, triangle identities and the sigma factorizations on the given witnesses.
VerificationReport adjunction_check(const QuasiBialgebra& A,
                                    const std::vector<QuasiHopfBimodule>& modules,
                                    const std::vector<LeftModule>& left_modules);

/// Hom(A (x) A, N (x)^ A) = Hom*(A, N) for a right module N.
struct TauData {
  HomSpace hom;
  Subspace hstar;  ///< maps A -> N, row-major dim(N) x n
  Mat tau, tau_inv;
  VerificationReport report;
};
TauData tau_correspondence(const QuasiBialgebra& A, int dim, const tensor::Family& right);

/// Bialgebra case only; throws NotABialgebra.
struct CanData {
  Mat can;
  bool invertible = false;
  VerificationReport report;
};
CanData can_map_check(const QuasiBialgebra& A, const std::vector<Witness>& witnesses);

struct IntegralSpaces {
  Subspace left, right;
  bool unimodular = false;
};
IntegralSpaces integrals(const QuasiBialgebra& A);

struct ForgetData {
  Vec z;      ///< in A (x) A (x) A
  Mat omega;  ///< n^2 x n^2
};
/// The five identities characterizing a Frobenius forgetful functor, checked on all basis inputs.
VerificationReport verify_frobenius_forget_data(const QuasiBialgebra& A, const ForgetData& d);

/// (M (x) N)bar = M (x) Nbar for a left module M and a bimodule N.
VerificationReport cltensor_check(const QuasiBialgebra& A, const LeftModule& M,
                                  const mod::Bimodule& N);

}  // namespace qhb::frob
