#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhb/qba.hpp"

/// Modules, bimodules and quasi-Hopf bimodules over a quasi-bialgebra, stored as
/// action matrices: left[i] is the matrix of v -> e_i . v, right[i] of v -> v . e_i.
/// A coaction is a (dim * n) x dim matrix, V (x) A flattened as v * n + a.
namespace qhb::mod {

using la::FieldSpec;
using la::Mat;
using la::QuotientData;
using la::Scalar;
using la::Subspace;
using la::Vec;
using qba::QuasiBialgebra;
using tensor::Family;

struct LeftModule {
  int dim = 0;
  Family left;
};

struct Bimodule {
  int dim = 0;
  Family left, right;
  LeftModule left_module() const { return {dim, left}; }
};

struct QuasiHopfBimodule {
  Bimodule bim;
  Mat delta;
  int dim() const { return bim.dim; }
  const Family& left() const { return bim.left; }
  const Family& right() const { return bim.right; }
};

/// Matrix of the action of an arbitrary element.
Mat action(const Family& fam, const Vec& x);

LeftModule trivial_left(const QuasiBialgebra& A);
LeftModule regular_left(const QuasiBialgebra& A);
Bimodule trivial_bimodule(const QuasiBialgebra& A);
Bimodule regular_bimodule(const QuasiBialgebra& A);
/// V with right action through the counit.
Bimodule with_trivial_right(const QuasiBialgebra& A, const LeftModule& V);
/// A with left action through the counit and the right regular action.
Bimodule counit_left_regular_right(const QuasiBialgebra& A);
/// A itself, coaction Delta.
QuasiHopfBimodule regular(const QuasiBialgebra& A);
/// V (x) W with the diagonal action.
LeftModule tensor_left(const QuasiBialgebra& A, const LeftModule& V, const LeftModule& W);

VerificationReport verify_left_module(const QuasiBialgebra& A, const LeftModule& V);
VerificationReport verify_bimodule(const QuasiBialgebra& A, const Bimodule& M);
/// Bimodule axioms plus counitality, bilinearity and quasi-coassociativity of the coaction.
VerificationReport verify_qhb(const QuasiBialgebra& A, const QuasiHopfBimodule& M);

/// V (x) A; throws IllDefined if the result fails verify_qhb.
QuasiHopfBimodule free_module(const QuasiBialgebra& A, const LeftModule& V);
/// N (x) A with diagonal actions on both sides.
QuasiHopfBimodule tilde_module(const QuasiBialgebra& A, const Bimodule& N);
/// The quasi-Hopf bimodule A^ = tilde of A with counit left action.
QuasiHopfBimodule hat_module(const QuasiBialgebra& A);

/// M / M A^+ with the induced left action.
struct QuotientModule {
  QuotientData q;
  LeftModule module;
  int dim() const { return module.dim; }
};
QuotientModule quotient_module(const QuasiBialgebra& A, const Bimodule& M);

/// M (x)_A N as a quotient of M (x) N.
struct TensorProduct {
  QuasiHopfBimodule module;
  QuotientData q;
  int d1 = 0, d2 = 0;
  int dim() const { return module.dim(); }
};
TensorProduct tensor_over_A(const QuasiBialgebra& A, const QuasiHopfBimodule& M,
                            const QuasiHopfBimodule& N);

/// M (x)_A V for a right action on M and a left module V.
struct LeftTensor {
  LeftModule module;
  QuotientData q;
  int d1 = 0, d2 = 0;
  int dim() const { return module.dim; }
};
LeftTensor tensor_over_A_left(const QuasiBialgebra& A, const Bimodule& M, const LeftModule& V);

/// raw * section after checking that raw vanishes on the killed subspace.
Mat descend(const Mat& raw, const QuotientData& src, const std::string& what);
/// F (x)_A G between tensor products over A.
Mat tensor_map(const Mat& F, const Mat& G, const QuotientData& src, const QuotientData& dst);
/// Unitors M (x)_A A -> M and A (x)_A N, with their inverses.
Mat right_unitor(const QuasiHopfBimodule& M, const TensorProduct& MA);
Mat right_unitor_inverse(const QuasiBialgebra& A, const TensorProduct& MA);
Mat left_unitor(const QuasiHopfBimodule& N, const TensorProduct& AN);
Mat left_unitor_inverse(const QuasiBialgebra& A, const TensorProduct& AN);
/// (M (x)_A N) (x)_A P -> M (x)_A (N (x)_A P) on representatives.
Mat reassociate(const TensorProduct& MN, const TensorProduct& MN_P, const TensorProduct& NP,
                const TensorProduct& M_NP);

bool is_left_linear(const Family& src, const Family& dst, const Mat& F);
bool is_morphism(const QuasiBialgebra& A, const QuasiHopfBimodule& src,
                 const QuasiHopfBimodule& dst, const Mat& F);

/// The isomorphism (V (x) A) (x)_A (W (x) A) -> (V (x) W) (x) A and its inverse.
struct XiData {
  TensorProduct source;
  QuasiHopfBimodule target;
  Mat xi, xi_inv;
};
XiData xi(const QuasiBialgebra& A, const LeftModule& V, const LeftModule& W);
VerificationReport verify_xi(const QuasiBialgebra& A, const XiData& x);

/// Basis of bilinear colinear maps, each a dst x src matrix.
struct HomSpace {
  int src_dim = 0, dst_dim = 0;
  Subspace space;  ///< in row-major flattened dst x src matrices
  std::vector<Mat> basis;
  int dim() const { return static_cast<int>(basis.size()); }
  std::optional<Vec> coordinates(const Mat& F) const;
  Mat element(const Vec& coords) const;
};

/// Largest dim(M) * dim(N) accepted by hom_space.
inline constexpr int kHomCap = 256;

/// Throws ModuleTooLarge beyond kHomCap unknowns.
HomSpace hom_space(const QuasiBialgebra& A, const QuasiHopfBimodule& M,
                   const QuasiHopfBimodule& N);
/// Left A-linear maps only.
HomSpace left_hom_space(const LeftModule& M, const LeftModule& N);

/// The bijection Hom(M (x) N, P) = Hom(M, Hom(A (x) N, P)) of left modules, checked both ways.
VerificationReport hom_adjunction_check(const QuasiBialgebra& A, const LeftModule& M,
                                        const LeftModule& N, const LeftModule& P);

/// Conjugation associator L(Phi) R(Phi^-1) on M (x) N (x) P.
Mat associator(const QuasiBialgebra& A, const Bimodule& M, const Bimodule& N, const Bimodule& P);
Bimodule tensor_bimodule(const QuasiBialgebra& A, const Bimodule& M, const Bimodule& N);
/// Pentagon on (M, N, P, Q) and triangle on (M, N).
VerificationReport pentagon_triangle_check(const QuasiBialgebra& A, const Bimodule& M,
                                           const Bimodule& N, const Bimodule& P,
                                           const Bimodule& Q);

}  // namespace qhb::mod
