#pragma once

#include <vector>

#include "qhb/exactla.hpp"

/// Index bookkeeping for tensor products of finite-dimensional spaces.
/// A vector of V_1 (x) ... (x) V_k with dims d_r stores e_{i1}(x)...(x)e_{ik}
/// at ((i1*d2 + i2)*d3 + ...)*dk + ik.
namespace qhb::tensor {

using la::FieldSpec;
using la::Mat;
using la::Vec;

/// Action matrices of the basis elements of A on one space.
using Family = std::vector<Mat>;

int product(const std::vector<int>& dims);
Vec unit_vec(int dim, int i, FieldSpec f);
Vec kron(const Vec& a, const Vec& b);

/// Applies m to tensor slot `slot`; the slot dimension may change to m.rows().
Vec apply_at(const Mat& m, const Vec& v, const std::vector<int>& dims, int slot);

/// sum_I x_I (F_1[i_1] (x) ... (x) F_k[i_k]) v
Vec act(const Vec& x, const std::vector<const Family*>& fams, const Vec& v);
/// The same operator as a matrix, assembled from the nonzero entries only.
Mat act_matrix(const Vec& x, const std::vector<const Family*>& fams, FieldSpec f);

/// Kronecker product of several maps.
Mat kron_all(const std::vector<Mat>& ms);

/// Matrix sending v_0 (x) ... (x) v_{k-1} to v_{perm[0]} (x) ... (x) v_{perm[k-1]}.
Mat permutation(const std::vector<int>& dims, const std::vector<int>& perm, FieldSpec f);

/// Matrix of a linear map given column by column on basis vectors.
template <class F>
Mat from_columns(int rows, int cols, FieldSpec f, F&& column) {
  Mat m(rows, cols, f);
  for (int j = 0; j < cols; ++j) m.set_col(j, column(j));
  return m;
}

}  // namespace qhb::tensor
