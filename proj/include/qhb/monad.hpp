#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhb/frob.hpp"

/// The opmonoidal monad T = (-)bar (x) A on quasi-Hopf bimodules.
namespace qhb::monad {

using la::Mat;
using la::Vec;
using mod::LeftModule;
using mod::QuasiHopfBimodule;
using mod::QuotientModule;
using mod::TensorProduct;
using qba::QuasiBialgebra;

/// TM = Mbar (x) A together with the quotient M -> Mbar.
struct TObject {
  QuotientModule bar;
  QuasiHopfBimodule module;
  int dim() const { return module.dim(); }
};
TObject T(const QuasiBialgebra& A, const QuasiHopfBimodule& M);

/// nu_M: M -> TM, m -> m0bar (x) m1.
Mat nu(const QuasiBialgebra& A, const QuasiHopfBimodule& M, const TObject& TM);
/// mu_M: T(TM) -> TM, (mbar (x) a)bar (x) b -> mbar (x) eps(a) b.
Mat mu(const QuasiBialgebra& A, const TObject& TM, const TObject& TTM);
/// phi0: T(A) -> A, abar (x) b -> eps(a) b.
Mat phi0(const QuasiBialgebra& A, const TObject& TA);
/// T(f) for a morphism f: X -> Y.
Mat T_map(const QuasiBialgebra& A, const Mat& f, const TObject& TX, const TObject& TY);

/// psi_{M,N}: (M (x)_A N)bar -> Mbar (x) Nbar, (m (x) n)bar -> m0bar (x) (m1 n)bar.
struct PsiData {
  TensorProduct MN;
  QuotientModule bar_MN, bar_M, bar_N;
  Mat psi;
};
PsiData psi(const QuasiBialgebra& A, const QuasiHopfBimodule& M, const QuasiHopfBimodule& N);
/// Same, reusing an already computed M (x)_A N.
PsiData psi(const QuasiBialgebra& A, const QuasiHopfBimodule& M, const QuasiHopfBimodule& N,
            const TensorProduct& MN);

/// phi_{M,N} = xi^-1 (psi (x) A): T(M (x)_A N) -> TM (x)_A TN.
struct PhiData {
  PsiData psi;
  TObject T_MN;
  mod::XiData xi;  ///< xi.source is TM (x)_A TN
  Mat phi;
};
PhiData phi(const QuasiBialgebra& A, const QuasiHopfBimodule& M, const QuasiHopfBimodule& N);

/// chi, kappa and psi = kappa (eta_M (x)_A Nbar) chi.
VerificationReport chi_kappa_check(const QuasiBialgebra& A, const QuasiHopfBimodule& M,
                                   const QuasiHopfBimodule& N);

/// (Mbar (x) eps_A) psi_{M,A(x)A} against eta_M (M (x)_A eps_A) chi_{M,A(x)A}.
VerificationReport pre_lax_lax_check(const QuasiBialgebra& A, const QuasiHopfBimodule& M);

/// mbar (x) nbar -> (Phi1 m0 S(Phi2 m1) Phi3 (x)_A n)bar, checked as a two-sided inverse of psi.
VerificationReport psi_inverse_check(const QuasiBialgebra& A, const Mat& S,
                                     const QuasiHopfBimodule& M, const QuasiHopfBimodule& N);

struct Operator {
  Mat matrix;
  bool invertible = false;
  std::string detail;
};
Operator make_operator(Mat m);

/// H^l = (TX (x)_A mu_Y) phi_{X,TY} and H^r = (mu_X (x)_A TY) phi_{TX,Y}.
struct Fusion {
  Operator left, right;
};
Fusion fusion_operators(const QuasiBialgebra& A, const QuasiHopfBimodule& X,
                        const QuasiHopfBimodule& Y);

/// H^l = (Mbar (x) eps_V) psi_{M,V(x)A} and H^r = (eps_V (x) Mbar) psi_{V(x)A,M}.
struct HopfOps {
  Operator left, right;
};
HopfOps hopf_operators(const QuasiBialgebra& A, const LeftModule& V, const QuasiHopfBimodule& M);

/// Monad laws, colax coherence of (T, phi0, phi) and the colax squares for mu and nu.
/// Associativity is checked on the triples whose tensor products stay within `cap`.
VerificationReport opmonoidal_monad_laws(const QuasiBialgebra& A,
                                         const std::vector<QuasiHopfBimodule>& witnesses,
                                         int cap = mod::kHomCap);

struct Predicate {
  std::string name;
  bool value = false;
  std::string detail;
};

struct SigmaSample {
  std::string witness;
  Mat inverse;  ///< sigma_M^-1 in the quotient and Hom bases
};

struct EquivalenceReport {
  std::string witnesses;  ///< description of the witness sets used
  std::vector<Predicate> predicates;
  bool value = false;
  std::optional<Mat> S;
  std::vector<SigmaSample> sigma_samples;
  VerificationReport checks;  ///< identities that hold regardless of the predicates
};

/// Evaluates the equivalent conditions on the witness sets; throws InconsistentPredicates
/// when they disagree. Witness pairs are limited to dim(M) * dim(N) <= pair_cap.
EquivalenceReport main2_report(const QuasiBialgebra& A, int pair_cap = mod::kHomCap);

}  // namespace qhb::monad
