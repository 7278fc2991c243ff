#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhb/exactla.hpp"
#include "qhb/tensor.hpp"

namespace qhb {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Ordered list of named pass/fail checks.
class VerificationReport {
 public:
  void add(std::string name, bool passed, std::string detail = {});
  void merge(const VerificationReport& other, const std::string& prefix = {});
  bool all_pass() const;
  bool passed(const std::string& name) const;
  std::vector<std::string> failed() const;
  const std::vector<Check>& checks() const { return checks_; }

 private:
  std::vector<Check> checks_;
};

}  // namespace qhb

namespace qhb::qba {

using la::FieldSpec;
using la::Mat;
using la::Scalar;
using la::Subspace;
using la::Vec;

/// Raw structure constants, all flat in the global index convention:
/// mult[(i*n+j)*n+k] is the e_k coefficient of e_i e_j, comul[(i*n+j)*n+k] the
/// e_j (x) e_k coefficient of Delta(e_i), phi and phi_inv have length n^3.
struct AlgebraData {
  FieldSpec field;
  int n = 0;
  std::vector<std::string> labels;
  Vec mult, unit, comul, counit, phi;
  std::optional<Vec> phi_inv;
};

void check_shapes(const AlgebraData& d);

class QuasiBialgebra {
 public:
  /// Throws ShapeMismatch; solves phi_inv when absent (left empty if Phi is singular).
  explicit QuasiBialgebra(AlgebraData d);

  const AlgebraData& data() const { return d_; }
  FieldSpec field() const { return d_.field; }
  int n() const { return d_.n; }
  const std::vector<std::string>& labels() const { return d_.labels; }
  const Vec& phi() const { return d_.phi; }
  const Vec& phi_inv() const { return *d_.phi_inv; }
  bool has_phi_inv() const { return d_.phi_inv.has_value(); }
  bool phi_is_trivial() const;

  Vec e(int i) const { return tensor::unit_vec(d_.n, i, d_.field); }
  Vec one() const { return d_.unit; }
  Vec one_k(int k) const;
  Vec zero(int k = 1) const;
  std::vector<int> dims(int k) const { return std::vector<int>(k, d_.n); }

  Vec mul(const Vec& x, const Vec& y) const;
  /// Product in the algebra A^{(x)k}.
  Vec mul_k(const Vec& x, const Vec& y, int k) const;
  Vec delta(const Vec& x) const;
  Scalar eps(const Vec& x) const;
  Vec delta_at(const Vec& x, int k, int pos) const;
  Vec eps_at(const Vec& x, int k, int pos) const;

  const tensor::Family& lreg() const { return lreg_; }
  const tensor::Family& rreg() const { return rreg_; }
  /// Action through the counit, for the one-dimensional module k.
  const tensor::Family& eps_family() const { return eps_fam_; }
  Mat lmul(const Vec& x) const;
  Mat rmul(const Vec& x) const;
  const Mat& delta_matrix() const { return delta_m_; }
  const Mat& eps_matrix() const { return eps_m_; }

 private:
  AlgebraData d_;
  tensor::Family lreg_, rreg_, eps_fam_;
  Mat delta_m_, eps_m_;
  std::vector<std::vector<std::pair<int, Scalar>>> prod_nz_;
};

VerificationReport verify_quasibialgebra(const AlgebraData& d);
std::optional<Vec> solve_phi_inverse(const AlgebraData& d);
/// Iterated coproduct, applying Delta to the first factor at each step.
Vec comul_k(const QuasiBialgebra& A, const Vec& x, int k);

/// S is stored as a matrix whose column j is S(e_j).
struct PreantipodeSet {
  Mat particular;
  Subspace homogeneous;  ///< in End(A) flattened row-major
  int dim() const { return homogeneous.dim(); }
  Mat member(int i) const;  ///< particular + i-th homogeneous basis vector
};

std::optional<PreantipodeSet> solve_preantipode(const QuasiBialgebra& A);
/// n x n matrix from a row-major flat vector.
Mat endomorphism(const Vec& flat, int n, FieldSpec f);
VerificationReport verify_preantipode(const QuasiBialgebra& A, const Mat& S);
VerificationReport verify_quasiantipode(const QuasiBialgebra& A, const Mat& s, const Vec& alpha,
                                        const Vec& beta);

}  // namespace qhb::qba
