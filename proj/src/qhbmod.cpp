#include "qhb/qhbmod.hpp"

#include <string>

namespace qhb::mod {

namespace {

Mat eps_scaled_identity(const QuasiBialgebra& A, int i, int dim) {
  return Mat::identity(dim, A.field()).scaled(A.eps(A.e(i)));
}

/// n x n^2 matrix of the multiplication.
Mat mult_matrix(const QuasiBialgebra& A) {
  const int n = A.n();
  Mat mu(n, n * n, A.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) mu(k, i * n + j) = A.lreg()[i](k, j);
  return mu;
}

Mat unit_column(const QuasiBialgebra& A) { return Mat::column(A.one(), A.field()); }

/// Span of the columns of all the matrices.
Subspace span_all(const std::vector<Mat>& ms, int ambient, FieldSpec f) {
  if (ms.empty()) return Subspace(ambient, f);
  Mat acc = ms[0];
  for (std::size_t i = 1; i < ms.size(); ++i) acc = acc.hstack(ms[i]);
  return Subspace::span(acc);
}

/// proj * X * section after checking proj * X kills the subspace; checked again
/// with the alternative section.
Mat induce(const Mat& X, const QuotientData& src, const Mat& proj_dst, const std::string& what) {
  Mat px = proj_dst * X;
  Mat out = descend(px, src, what);
  if (src.killed.dim() > 0 && px * src.alternative_section() != out)
    throw IllDefined(what + ": depends on the choice of representatives");
  return out;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Same as induce for an operator given on vectors, already followed by the projection
/// onto the target; `alt` is src.alternative_section().
template <class Op>
Mat induce_op(Op&& op, const QuotientData& src, const Mat& alt, int rows, const std::string& what) {
  const Mat& K = src.killed.basis();
  for (int k = 0; k < src.killed.dim(); ++k)
    if (!is_zero_vec(op(K.col(k)))) throw IllDefined(what + ": map does not vanish on the relations");
  Mat out(rows, src.dim(), src.proj.field());
  for (int j = 0; j < src.dim(); ++j) {
    Vec c = op(src.section.col(j));
    if (src.killed.dim() > 0 && op(alt.col(j)) != c)
      throw IllDefined(what + ": depends on the choice of representatives");
    out.set_col(j, c);
  }
  return out;
}

Family induce_family(const Family& fam, const QuotientData& q, const std::string& what) {
  Family out;
  out.reserve(fam.size());
  for (const Mat& m : fam) out.push_back(induce(m, q, q.proj, what));
  return out;
}

Mat unflatten(const Vec& v, int rows, int cols, FieldSpec f) {
  Mat m(rows, cols, f);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = v[static_cast<std::size_t>(i) * cols + j];
  return m;
}

/// Maps F (dst x src) to the concatenation of residual matrices, one column per unknown.
template <class Residual>
Mat restrict_basis(const Mat& basis, int rows, int cols, FieldSpec f, Residual&& residual) {
  const int r = basis.cols();
  std::vector<Mat> res(r);
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < r; ++j) res[j] = residual(unflatten(basis.col(j), rows, cols, f));
  if (r == 0) return basis;
  const int len = res[0].rows() * res[0].cols();
  Mat C(len, r, f);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < len; ++i) C(i, j) = res[j].data()[i];
  Subspace k = la::nullspace(C);
  return basis * k.basis();
}

/// kron(F, I_n) * delta without building the Kronecker product.
Mat apply_coaction_side(const Mat& F, const Mat& delta, int n) {
  const int dst = F.rows(), src = F.cols(), cols = delta.cols();
  Mat out(dst * n, cols, F.field());
  for (int i = 0; i < dst; ++i)
    for (int j = 0; j < src; ++j) {
      const Scalar& fij = F(i, j);
      if (fij.is_zero()) continue;
      for (int c = 0; c < n; ++c)
        for (int k = 0; k < cols; ++k) {
          const Scalar& d = delta(j * n + c, k);
          if (!d.is_zero()) out(i * n + c, k).addmul(fij, d);
        }
    }
  return out;
}

HomSpace finish_hom(const Mat& basis, int dst, int src, FieldSpec f) {
  HomSpace h;
  h.src_dim = src;
  h.dst_dim = dst;
  h.space = basis.cols() == 0 ? Subspace(dst * src, f) : Subspace::span(basis);
  for (int j = 0; j < h.space.dim(); ++j)
    h.basis.push_back(unflatten(h.space.basis().col(j), dst, src, f));
  return h;
}

}  // namespace

Mat action(const Family& fam, const Vec& x) {
  Mat out(fam.at(0).rows(), fam.at(0).cols(), fam[0].field());
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (!x[i].is_zero()) out = out + fam[i].scaled(x[i]);
  return out;
}

LeftModule trivial_left(const QuasiBialgebra& A) { return {1, A.eps_family()}; }

LeftModule regular_left(const QuasiBialgebra& A) { return {A.n(), A.lreg()}; }

Bimodule trivial_bimodule(const QuasiBialgebra& A) {
  return {1, A.eps_family(), A.eps_family()};
}

Bimodule regular_bimodule(const QuasiBialgebra& A) { return {A.n(), A.lreg(), A.rreg()}; }

Bimodule with_trivial_right(const QuasiBialgebra& A, const LeftModule& V) {
  Family right;
  for (int i = 0; i < A.n(); ++i) right.push_back(eps_scaled_identity(A, i, V.dim));
  return {V.dim, V.left, right};
}

Bimodule counit_left_regular_right(const QuasiBialgebra& A) {
  Family left;
  for (int i = 0; i < A.n(); ++i) left.push_back(eps_scaled_identity(A, i, A.n()));
  return {A.n(), left, A.rreg()};
}

QuasiHopfBimodule regular(const QuasiBialgebra& A) {
  return {regular_bimodule(A), A.delta_matrix()};
}

LeftModule tensor_left(const QuasiBialgebra& A, const LeftModule& V, const LeftModule& W) {
  Family left;
  for (int i = 0; i < A.n(); ++i)
    left.push_back(tensor::act_matrix(A.delta(A.e(i)), {&V.left, &W.left}, A.field()));
  return {V.dim * W.dim, left};
}

VerificationReport verify_left_module(const QuasiBialgebra& A, const LeftModule& V) {
  VerificationReport r;
  const int n = A.n();
  bool shape = static_cast<int>(V.left.size()) == n;
  for (const Mat& m : V.left) shape = shape && m.rows() == V.dim && m.cols() == V.dim;
  r.add("left_shape", shape);
  if (!shape) return r;
  r.add("left_unital", action(V.left, A.one()).is_identity());
  bool assoc = true;
  for (int i = 0; i < n && assoc; ++i)
    for (int j = 0; j < n && assoc; ++j)
      assoc = V.left[i] * V.left[j] == action(V.left, A.mul(A.e(i), A.e(j)));
  r.add("left_associative", assoc);
  return r;
}

VerificationReport verify_bimodule(const QuasiBialgebra& A, const Bimodule& M) {
  VerificationReport r = verify_left_module(A, M.left_module());
  const int n = A.n();
  bool shape = static_cast<int>(M.right.size()) == n;
  for (const Mat& m : M.right) shape = shape && m.rows() == M.dim && m.cols() == M.dim;
  r.add("right_shape", shape);
  if (!shape || !r.all_pass()) return r;
  r.add("right_unital", action(M.right, A.one()).is_identity());
  bool assoc = true, commute = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (assoc) assoc = M.right[j] * M.right[i] == action(M.right, A.mul(A.e(i), A.e(j)));
      if (commute) commute = M.left[i] * M.right[j] == M.right[j] * M.left[i];
    }
  r.add("right_associative", assoc);
  r.add("actions_commute", commute);
  return r;
}

VerificationReport verify_qhb(const QuasiBialgebra& A, const QuasiHopfBimodule& M) {
  VerificationReport r = verify_bimodule(A, M.bim);
  const int n = A.n(), d = M.dim();
  const FieldSpec f = A.field();
  bool shape = M.delta.rows() == d * n && M.delta.cols() == d;
  r.add("coaction_shape", shape);
  if (!shape || !r.all_pass()) return r;
  const Mat& delta = M.delta;
  const std::vector<int> dims{d, n};
  std::vector<Vec> cols;
  for (int j = 0; j < d; ++j) cols.push_back(delta.col(j));
  bool counital = true;
  for (int j = 0; j < d && counital; ++j)
    counital = tensor::apply_at(A.eps_matrix(), cols[j], dims, 1) == tensor::unit_vec(d, j, f);
  r.add("counital", counital);
  bool lin = true;
  for (int i = 0; i < n && lin; ++i) {
    Vec di = A.delta(A.e(i));
    for (int j = 0; j < d && lin; ++j)
      lin = delta.apply(M.left()[i].col(j)) == tensor::act(di, {&M.left(), &A.lreg()}, cols[j]) &&
            delta.apply(M.right()[i].col(j)) == tensor::act(di, {&M.right(), &A.rreg()}, cols[j]);
  }
  r.add("coaction_bilinear", lin);
  if (!A.has_phi_inv()) {
    r.add("quasi_coassociative", false, "phi is not invertible");
    return r;
  }
  bool coassoc = true;
  for (int j = 0; j < d && coassoc; ++j) {
    Vec dd = tensor::apply_at(delta, cols[j], dims, 0);
    Vec lhs = tensor::act(A.phi(), {&M.left(), &A.lreg(), &A.lreg()},
                          tensor::act(A.phi_inv(), {&M.right(), &A.rreg(), &A.rreg()}, dd));
    coassoc = lhs == tensor::apply_at(A.delta_matrix(), cols[j], dims, 1);
  }
  r.add("quasi_coassociative", coassoc);
  return r;
}

namespace {

QuasiHopfBimodule checked(const QuasiBialgebra& A, QuasiHopfBimodule M, const char* what) {
  VerificationReport r = verify_qhb(A, M);
  if (!r.all_pass()) {
    std::string msg = std::string(what) + ": result is not a quasi-Hopf bimodule:";
    for (const auto& name : r.failed()) msg += " " + name;
    throw IllDefined(msg);
  }
  return M;
}

}  // namespace

QuasiHopfBimodule free_module(const QuasiBialgebra& A, const LeftModule& V) {
  if (!A.has_phi_inv()) throw IllDefined("free_module: phi is not invertible");
  const FieldSpec f = A.field();
  const int n = A.n();
  Bimodule b;
  b.dim = V.dim * n;
  for (int i = 0; i < n; ++i) {
    b.left.push_back(tensor::act_matrix(A.delta(A.e(i)), {&V.left, &A.lreg()}, f));
    b.right.push_back(la::kron(Mat::identity(V.dim, f), A.rreg()[i]));
  }
  Mat delta = tensor::act_matrix(A.phi_inv(), {&V.left, &A.lreg(), &A.lreg()}, f) *
              la::kron(Mat::identity(V.dim, f), A.delta_matrix());
  return checked(A, {std::move(b), std::move(delta)}, "free_module");
}

QuasiHopfBimodule tilde_module(const QuasiBialgebra& A, const Bimodule& N) {
  if (!A.has_phi_inv()) throw IllDefined("tilde_module: phi is not invertible");
  const FieldSpec f = A.field();
  const int n = A.n();
  Bimodule b;
  b.dim = N.dim * n;
  for (int i = 0; i < n; ++i) {
    Vec di = A.delta(A.e(i));
    b.left.push_back(tensor::act_matrix(di, {&N.left, &A.lreg()}, f));
    b.right.push_back(tensor::act_matrix(di, {&N.right, &A.rreg()}, f));
  }
  Mat delta = tensor::act_matrix(A.phi_inv(), {&N.left, &A.lreg(), &A.lreg()}, f) *
              (tensor::act_matrix(A.phi(), {&N.right, &A.rreg(), &A.rreg()}, f) *
               la::kron(Mat::identity(N.dim, f), A.delta_matrix()));
  return checked(A, {std::move(b), std::move(delta)}, "tilde_module");
}

QuasiHopfBimodule hat_module(const QuasiBialgebra& A) {
  return tilde_module(A, counit_left_regular_right(A));
}

QuotientModule quotient_module(const QuasiBialgebra& A, const Bimodule& M) {
  std::vector<Mat> gens;
  for (int i = 0; i < A.n(); ++i)
    gens.push_back(M.right[i] - eps_scaled_identity(A, i, M.dim));
  QuotientModule out;
  out.q = la::quotient(M.dim, span_all(gens, M.dim, A.field()));
  out.module.dim = out.q.dim();
  out.module.left = out.q.dim() == 0 ? Family(A.n(), Mat(0, 0, A.field()))
                                     : induce_family(M.left, out.q, "quotient_module");
  return out;
}

Mat descend(const Mat& raw, const QuotientData& src, const std::string& what) {
  if (src.killed.dim() > 0 && !(raw * src.killed.basis()).is_zero())
    throw IllDefined(what + ": map does not vanish on the relations");
  return raw * src.section;
}

TensorProduct tensor_over_A(const QuasiBialgebra& A, const QuasiHopfBimodule& M,
                            const QuasiHopfBimodule& N) {
  const FieldSpec f = A.field();
  const int n = A.n(), dM = M.dim(), dN = N.dim(), amb = dM * dN;
  const Mat IM = Mat::identity(dM, f), IN = Mat::identity(dN, f);
  std::vector<Mat> gens;
  for (int i = 0; i < n; ++i) gens.push_back(la::kron(M.right()[i], IN) - la::kron(IM, N.left()[i]));
  TensorProduct t;
  t.d1 = dM;
  t.d2 = dN;
  t.q = la::quotient(amb, span_all(gens, amb, f));
  gens.clear();
  const int q = t.q.dim();
  const Mat alt = t.q.alternative_section();
  const std::vector<int> dims{dM, dN};
  auto on_factor = [&](const Mat& m, int slot) {
    return [&, slot](const Vec& v) { return t.q.proj.apply(tensor::apply_at(m, v, dims, slot)); };
  };
  Bimodule b;
  b.dim = q;
  for (int i = 0; i < n; ++i) {
    b.left.push_back(induce_op(on_factor(M.left()[i], 0), t.q, alt, q, "tensor_over_A"));
    b.right.push_back(induce_op(on_factor(N.right()[i], 1), t.q, alt, q, "tensor_over_A"));
  }
  // m (x) n -> m0 (x) n0 (x) m1 n1, then the projection on the first factor
  const Mat mu = mult_matrix(A);
  auto coaction = [&](const Vec& v) {
    Vec raw = f.zeros(static_cast<std::size_t>(amb) * n);
    for (int m = 0; m < dM; ++m)
      for (int x = 0; x < dN; ++x) {
        const Scalar& c = v[m * dN + x];
        if (c.is_zero()) continue;
        for (int m0 = 0; m0 < dM; ++m0)
          for (int a = 0; a < n; ++a) {
            const Scalar& u = M.delta(m0 * n + a, m);
            if (u.is_zero()) continue;
            Scalar cu = c * u;
            for (int x0 = 0; x0 < dN; ++x0)
              for (int e = 0; e < n; ++e) {
                const Scalar& w = N.delta(x0 * n + e, x);
                if (w.is_zero()) continue;
                Scalar cuw = cu * w;
                for (int k = 0; k < n; ++k) {
                  const Scalar& z = mu(k, a * n + e);
                  if (!z.is_zero()) raw[(static_cast<std::size_t>(m0) * dN + x0) * n + k].addmul(cuw, z);
                }
              }
          }
      }
    Vec out = f.zeros(static_cast<std::size_t>(q) * n);
    for (int s = 0; s < amb; ++s)
      for (int k = 0; k < n; ++k) {
        const Scalar& r = raw[static_cast<std::size_t>(s) * n + k];
        if (r.is_zero()) continue;
        for (int i = 0; i < q; ++i)
          if (!t.q.proj(i, s).is_zero()) out[static_cast<std::size_t>(i) * n + k].addmul(t.q.proj(i, s), r);
      }
    return out;
  };
  Mat delta = induce_op(coaction, t.q, alt, q * n, "tensor_over_A coaction");
  t.module = checked(A, {std::move(b), std::move(delta)}, "tensor_over_A");
  return t;
}

LeftTensor tensor_over_A_left(const QuasiBialgebra& A, const Bimodule& M, const LeftModule& V) {
  const FieldSpec f = A.field();
  const int n = A.n(), amb = M.dim * V.dim;
  const Mat IM = Mat::identity(M.dim, f), IV = Mat::identity(V.dim, f);
  std::vector<Mat> gens;
  for (int i = 0; i < n; ++i) gens.push_back(la::kron(M.right[i], IV) - la::kron(IM, V.left[i]));
  LeftTensor t;
  t.d1 = M.dim;
  t.d2 = V.dim;
  t.q = la::quotient(amb, span_all(gens, amb, f));
  t.module.dim = t.q.dim();
  for (int i = 0; i < n; ++i)
    t.module.left.push_back(induce(la::kron(M.left[i], IV), t.q, t.q.proj, "tensor_over_A_left"));
  return t;
}

Mat tensor_map(const Mat& F, const Mat& G, const QuotientData& src, const QuotientData& dst) {
  return induce(la::kron(F, G), src, dst.proj, "tensor_map");
}

Mat right_unitor(const QuasiHopfBimodule& M, const TensorProduct& MA) {
  const int d = M.dim(), n = static_cast<int>(M.right().size());
  Mat raw(d, d * n, M.delta.field());
  for (int m = 0; m < d; ++m)
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < d; ++i) raw(i, m * n + a) = M.right()[a](i, m);
  return descend(raw, MA.q, "right_unitor");
}

Mat right_unitor_inverse(const QuasiBialgebra& A, const TensorProduct& MA) {
  return MA.q.proj * la::kron(Mat::identity(MA.d1, A.field()), unit_column(A));
}

Mat left_unitor(const QuasiHopfBimodule& N, const TensorProduct& AN) {
  const int d = N.dim(), n = static_cast<int>(N.left().size());
  Mat raw(d, n * d, N.delta.field());
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < d; ++x)
      for (int i = 0; i < d; ++i) raw(i, a * d + x) = N.left()[a](i, x);
  return descend(raw, AN.q, "left_unitor");
}

Mat left_unitor_inverse(const QuasiBialgebra& A, const TensorProduct& AN) {
  return AN.q.proj * la::kron(unit_column(A), Mat::identity(AN.d2, A.field()));
}

Mat reassociate(const TensorProduct& MN, const TensorProduct& MN_P, const TensorProduct& NP,
                const TensorProduct& M_NP) {
  const FieldSpec f = MN.q.proj.field();
  const int dM = MN.d1, dP = NP.d2;
  Mat raw = M_NP.q.proj * (la::kron(Mat::identity(dM, f), NP.q.proj) *
                           la::kron(MN.q.section, Mat::identity(dP, f)));
  return induce(raw, MN_P.q, Mat::identity(M_NP.dim(), f), "reassociate");
}

bool is_left_linear(const Family& src, const Family& dst, const Mat& F) {
  for (std::size_t i = 0; i < src.size(); ++i)
    if (F * src[i] != dst[i] * F) return false;
  return true;
}

bool is_morphism(const QuasiBialgebra& A, const QuasiHopfBimodule& src,
                 const QuasiHopfBimodule& dst, const Mat& F) {
  if (F.rows() != dst.dim() || F.cols() != src.dim()) return false;
  return is_left_linear(src.left(), dst.left(), F) && is_left_linear(src.right(), dst.right(), F) &&
         dst.delta * F == apply_coaction_side(F, src.delta, A.n());
}

XiData xi(const QuasiBialgebra& A, const LeftModule& V, const LeftModule& W) {
  const FieldSpec f = A.field();
  const int n = A.n(), dV = V.dim, dW = W.dim;
  XiData x;
  QuasiHopfBimodule FV = free_module(A, V), FW = free_module(A, W);
  x.source = tensor_over_A(A, FV, FW);
  LeftModule VW = tensor_left(A, V, W);
  x.target = free_module(A, VW);
  const int amb = dV * n * dW * n, tgt = dV * dW * n;
  // (v (x) a) (x) (w (x) b) -> v (x) a1 w (x) a2 b, then phi_inv on the left
  Mat pre(tgt, amb, f);
  const Mat mu = mult_matrix(A);
  for (int a = 0; a < n; ++a) {
    Vec da = A.delta(A.e(a));
    for (int a1 = 0; a1 < n; ++a1)
      for (int a2 = 0; a2 < n; ++a2) {
        const Scalar& c = da[a1 * n + a2];
        if (c.is_zero()) continue;
        for (int v = 0; v < dV; ++v)
          for (int w = 0; w < dW; ++w)
            for (int b = 0; b < n; ++b) {
              int col = ((v * n + a) * dW + w) * n + b;
              for (int w1 = 0; w1 < dW; ++w1) {
                const Scalar& lw = W.left[a1](w1, w);
                if (lw.is_zero()) continue;
                for (int k = 0; k < n; ++k) {
                  const Scalar& m = mu(k, a2 * n + b);
                  if (!m.is_zero()) pre((v * dW + w1) * n + k, col).addmul(c * lw, m);
                }
              }
            }
      }
  }
  Mat raw = tensor::act_matrix(A.phi_inv(), {&V.left, &W.left, &A.lreg()}, f) * pre;
  x.xi = descend(raw, x.source.q, "xi");
  // v (x) w (x) a -> (Phi1 v (x) 1) (x) (Phi2 w (x) Phi3 a)
  Mat inv_raw(amb, tgt, f);
  const Vec& phi = A.phi();
  const Vec one = A.one();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& p = phi[(i * n + j) * n + k];
        if (p.is_zero()) continue;
        for (int v = 0; v < dV; ++v)
          for (int w = 0; w < dW; ++w)
            for (int a = 0; a < n; ++a) {
              int col = (v * dW + w) * n + a;
              for (int v1 = 0; v1 < dV; ++v1) {
                const Scalar& lv = V.left[i](v1, v);
                if (lv.is_zero()) continue;
                for (int u = 0; u < n; ++u) {
                  if (one[u].is_zero()) continue;
                  Scalar s = p * lv * one[u];
                  for (int w1 = 0; w1 < dW; ++w1) {
                    const Scalar& lw = W.left[j](w1, w);
                    if (lw.is_zero()) continue;
                    for (int b = 0; b < n; ++b) {
                      const Scalar& ka = A.lreg()[k](b, a);
                      if (!ka.is_zero())
                        inv_raw(((v1 * n + u) * dW + w1) * n + b, col).addmul(s * lw, ka);
                    }
                  }
                }
              }
            }
      }
  x.xi_inv = x.source.q.proj * inv_raw;
  return x;
}

VerificationReport verify_xi(const QuasiBialgebra& A, const XiData& x) {
  VerificationReport r;
  r.add("xi_left_inverse", (x.xi_inv * x.xi).is_identity());
  r.add("xi_right_inverse", (x.xi * x.xi_inv).is_identity());
  r.add("xi_morphism", is_morphism(A, x.source.module, x.target, x.xi));
  r.add("xi_inverse_morphism", is_morphism(A, x.target, x.source.module, x.xi_inv));
  return r;
}

std::optional<Vec> HomSpace::coordinates(const Mat& F) const {
  if (F.rows() != dst_dim || F.cols() != src_dim) return std::nullopt;
  return space.coordinates(F.data());
}

Mat HomSpace::element(const Vec& coords) const {
  Mat out(dst_dim, src_dim, space.field());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!coords[k].is_zero()) out = out + basis[k].scaled(coords[k]);
  return out;
}

HomSpace hom_space(const QuasiBialgebra& A, const QuasiHopfBimodule& M,
                   const QuasiHopfBimodule& N) {
  const int dM = M.dim(), dN = N.dim(), n = A.n();
  const FieldSpec f = A.field();
  if (dM * dN > kHomCap)
    throw ModuleTooLarge("hom_space: " + std::to_string(dM) + " x " + std::to_string(dN) +
                         " exceeds " + std::to_string(kHomCap) + " unknowns");
  Mat basis = Mat::identity(dM * dN, f);
  for (int b = 0; b < n && basis.cols() > 0; ++b)
    basis = restrict_basis(basis, dN, dM, f, [&](const Mat& F) {
      return F * M.right()[b] - N.right()[b] * F;
    });
  for (int a = 0; a < n && basis.cols() > 0; ++a)
    basis = restrict_basis(basis, dN, dM, f, [&](const Mat& F) {
      return F * M.left()[a] - N.left()[a] * F;
    });
  if (basis.cols() > 0)
    basis = restrict_basis(basis, dN, dM, f, [&](const Mat& F) {
      return N.delta * F - apply_coaction_side(F, M.delta, n);
    });
  return finish_hom(basis, dN, dM, f);
}

HomSpace left_hom_space(const LeftModule& M, const LeftModule& N) {
  const FieldSpec f = M.left.at(0).field();
  if (M.dim * N.dim > kHomCap) throw ModuleTooLarge("left_hom_space: too many unknowns");
  Mat basis = Mat::identity(M.dim * N.dim, f);
  for (std::size_t a = 0; a < M.left.size() && basis.cols() > 0; ++a)
    basis = restrict_basis(basis, N.dim, M.dim, f, [&](const Mat& F) {
      return F * M.left[a] - N.left[a] * F;
    });
  return finish_hom(basis, N.dim, M.dim, f);
}

VerificationReport hom_adjunction_check(const QuasiBialgebra& A, const LeftModule& M,
                                        const LeftModule& N, const LeftModule& P) {
  const FieldSpec f = A.field();
  const int n = A.n(), dM = M.dim, dN = N.dim, dP = P.dim;
  VerificationReport r;
  HomSpace lhs = left_hom_space(tensor_left(A, M, N), P);
  LeftModule AN = tensor_left(A, regular_left(A), N);
  HomSpace inner = left_hom_space(AN, P);
  const int h = inner.dim();
  // (b.g)(a (x) n) = g(ab (x) n)
  LeftModule H{h, {}};
  bool closed = true;
  for (int b = 0; b < n; ++b) {
    Mat act(h, h, f);
    Mat shift = la::kron(A.rreg()[b], Mat::identity(dN, f));
    for (int k = 0; k < h; ++k) {
      auto c = inner.coordinates(inner.basis[k] * shift);
      if (!c) {
        closed = false;
        continue;
      }
      for (int l = 0; l < h; ++l) act(l, k) = (*c)[l];
    }
    H.left.push_back(act);
  }
  r.add("inner_hom_is_module", closed && (h == 0 || verify_left_module(A, H).all_pass()));
  if (!closed) return r;
  if (h == 0) {
    r.add("adjunction_dims", lhs.dim() == 0);
    return r;
  }
  HomSpace rhs = left_hom_space(M, H);
  // varpi(f)(m) = [a (x) n -> f(a.m (x) n)]
  Mat varpi(rhs.dim(), lhs.dim(), f);
  bool varpi_ok = true;
  for (int k = 0; k < lhs.dim(); ++k) {
    const Mat& F = lhs.basis[k];
    Mat G(h, dM, f);
    for (int m = 0; m < dM; ++m) {
      Mat Gm(dP, n * dN, f);
      for (int a = 0; a < n; ++a) {
        Vec am = M.left[a].col(m);
        for (int x = 0; x < dN; ++x)
          Gm.set_col(a * dN + x, F.apply(tensor::kron(am, tensor::unit_vec(dN, x, f))));
      }
      auto c = inner.coordinates(Gm);
      if (!c) {
        varpi_ok = false;
        break;
      }
      G.set_col(m, *c);
    }
    auto c = varpi_ok ? rhs.coordinates(G) : std::nullopt;
    if (!c) {
      varpi_ok = false;
      break;
    }
    varpi.set_col(k, *c);
  }
  r.add("varpi_lands_in_hom", varpi_ok);
  // kappa(g)(m (x) n) = g(m)(1 (x) n)
  Mat kappa(lhs.dim(), rhs.dim(), f);
  bool kappa_ok = true;
  Mat unit_slice = la::kron(unit_column(A), Mat::identity(dN, f));
  for (int k = 0; k < rhs.dim() && kappa_ok; ++k) {
    const Mat& G = rhs.basis[k];
    Mat F(dP, dM * dN, f);
    for (int m = 0; m < dM; ++m) {
      Mat gm = inner.element(G.col(m)) * unit_slice;
      for (int x = 0; x < dN; ++x) F.set_col(m * dN + x, gm.col(x));
    }
    auto c = lhs.coordinates(F);
    if (!c) kappa_ok = false;
    else kappa.set_col(k, *c);
  }
  r.add("kappa_lands_in_hom", kappa_ok);
  bool dims = lhs.dim() == rhs.dim();
  r.add("adjunction_dims", dims);
  if (varpi_ok && kappa_ok) {
    r.add("kappa_after_varpi", (kappa * varpi).is_identity());
    r.add("varpi_after_kappa", (varpi * kappa).is_identity());
  }
  return r;
}

Bimodule tensor_bimodule(const QuasiBialgebra& A, const Bimodule& M, const Bimodule& N) {
  Bimodule b;
  b.dim = M.dim * N.dim;
  for (int i = 0; i < A.n(); ++i) {
    Vec di = A.delta(A.e(i));
    b.left.push_back(tensor::act_matrix(di, {&M.left, &N.left}, A.field()));
    b.right.push_back(tensor::act_matrix(di, {&M.right, &N.right}, A.field()));
  }
  return b;
}

Mat associator(const QuasiBialgebra& A, const Bimodule& M, const Bimodule& N, const Bimodule& P) {
  if (!A.has_phi_inv()) throw IllDefined("associator: phi is not invertible");
  return tensor::act_matrix(A.phi(), {&M.left, &N.left, &P.left}, A.field()) *
         tensor::act_matrix(A.phi_inv(), {&M.right, &N.right, &P.right}, A.field());
}

VerificationReport pentagon_triangle_check(const QuasiBialgebra& A, const Bimodule& M,
                                           const Bimodule& N, const Bimodule& P,
                                           const Bimodule& Q) {
  VerificationReport r;
  const FieldSpec f = A.field();
  Bimodule MN = tensor_bimodule(A, M, N), NP = tensor_bimodule(A, N, P),
           PQ = tensor_bimodule(A, P, Q);
  Mat lhs = associator(A, M, N, PQ) * associator(A, MN, P, Q);
  Mat rhs = la::kron(Mat::identity(M.dim, f), associator(A, N, P, Q)) *
            (associator(A, M, NP, Q) * la::kron(associator(A, M, N, P), Mat::identity(Q.dim, f)));
  r.add("pentagon", lhs == rhs);
  r.add("triangle", associator(A, M, trivial_bimodule(A), N).is_identity());
  return r;
}

}  // namespace qhb::mod
