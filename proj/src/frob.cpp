#include "qhb/frob.hpp"

#include <string>

namespace qhb::frob {

using la::FieldSpec;
using la::Scalar;
using mod::Bimodule;
using tensor::Family;

namespace {

struct Term {
  Scalar c;
  std::vector<int> idx;
};

/// Nonzero coefficients of an element of A^{(x)k}.
std::vector<Term> terms(const Vec& x, int n, int k) {
  std::vector<Term> out;
  for (std::size_t flat = 0; flat < x.size(); ++flat) {
    if (x[flat].is_zero()) continue;
    std::vector<int> idx(k);
    std::size_t rest = flat;
    for (int r = k - 1; r >= 0; --r) {
      idx[r] = static_cast<int>(rest % n);
      rest /= n;
    }
    out.push_back({x[flat], std::move(idx)});
  }
  return out;
}

void add_scaled(Vec& out, const Scalar& c, const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[i].addmul(c, v[i]);
}

/// sum_i x_i fam[i] v
Vec act_vec(const Family& fam, const Vec& x, const Vec& v) {
  Vec out = fam.at(0).field().zeros(fam[0].rows());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) add_scaled(out, x[i], fam[i].apply(v));
  return out;
}

Mat eps_family_identity(const QuasiBialgebra& A, int i, int dim) {
  return Mat::identity(dim, A.field()).scaled(A.eps(A.e(i)));
}

bool fits(int n, int dim) { return n * n * dim <= mod::kHomCap; }

std::string tag(const std::string& name, std::size_t i) {
  return name + "[" + std::to_string(i) + "]";
}

}  // namespace

std::vector<Witness> witness_modules(const QuasiBialgebra& A) {
  std::vector<Witness> w;
  w.push_back({"A", mod::regular(A)});
  w.push_back({"A^", mod::hat_module(A)});
  w.push_back({"A(x)~A", mod::tilde_module(A, mod::regular_bimodule(A))});
  w.push_back({"A(x)A", mod::free_module(A, mod::regular_left(A))});
  if (A.n() <= 2)
    w.push_back({"A^(x)_A(A(x)~A)", mod::tensor_over_A(A, w[1].module, w[2].module).module});
  else
    w.push_back({"A(x)_A A^", mod::tensor_over_A(A, w[0].module, w[1].module).module});
  return w;
}

bool invertible(const Mat& m, std::string* why) {
  if (m.rows() != m.cols()) {
    if (why)
      *why = "not invertible (dimension mismatch: " + std::to_string(m.rows()) + " x " +
             std::to_string(m.cols()) + ")";
    return false;
  }
  int r = la::rank(m);
  if (r < m.rows()) {
    if (why) *why = "not invertible (rank " + std::to_string(r) + " < " + std::to_string(m.rows()) + ")";
    return false;
  }
  if (why) why->clear();
  return true;
}

Vec one_one(const QuasiBialgebra& A) { return tensor::kron(A.one(), A.one()); }

SigmaData sigma(const QuasiBialgebra& A, const QuasiHopfBimodule& M) {
  SigmaData s;
  s.hom = mod::hom_space(A, mod::free_module(A, mod::regular_left(A)), M);
  s.bar = mod::quotient_module(A, M.bim);
  s.sigma = Mat(s.bar.dim(), s.hom.dim(), A.field());
  Vec oo = one_one(A);
  for (int k = 0; k < s.hom.dim(); ++k)
    s.sigma.set_col(k, s.bar.q.proj.apply(s.hom.basis[k].apply(oo)));
  s.invertible = invertible(s.sigma, &s.detail);
  if (s.invertible) s.inverse = la::inverse(s.sigma);
  return s;
}

Extraction extract_preantipode(const QuasiBialgebra& A) {
  Extraction out;
  SigmaData s = sigma(A, mod::hat_module(A));
  if (!s.invertible) return out;
  const int n = A.n();
  const FieldSpec f = A.field();
  Vec coords = s.inverse->apply(s.bar.q.proj.apply(one_one(A)));
  Mat F = s.hom.element(coords);
  Mat drop = la::kron(Mat::identity(n, f), A.eps_matrix());
  Mat S(n, n, f);
  for (int a = 0; a < n; ++a) S.set_col(a, drop.apply(F.apply(tensor::kron(A.e(a), A.one()))));
  VerificationReport r = qba::verify_preantipode(A, S);
  out.S = S;
  out.failed = r.failed();
  out.status = out.failed.empty() ? Extraction::Status::Found : Extraction::Status::Partial;
  return out;
}

VerificationReport sigma_inverse_formula_check(const QuasiBialgebra& A, const Mat& S,
                                               const QuasiHopfBimodule& M) {
  VerificationReport r;
  const int n = A.n(), dM = M.dim();
  const FieldSpec f = A.field();
  SigmaData s = sigma(A, M);
  const int q = s.bar.dim(), h = s.hom.dim();
  auto Phi = terms(A.phi(), n, 3);
  Mat cand(h, q, f);
  bool lands = true;
  for (int j = 0; j < q && lands; ++j) {
    Vec m = s.bar.q.section.col(j);
    auto dm = terms(M.delta.apply(m), dM * n, 1);
    Mat G(dM, n * n, f);
    for (int x = 0; x < n; ++x) {
      auto dx = terms(A.delta(A.e(x)), n, 2);
      for (int y = 0; y < n; ++y) {
        Vec val = f.zeros(dM);
        for (const auto& p : Phi)
          for (const auto& t : dx)
            for (const auto& e : dm) {
              const int m0 = e.idx[0] / n, m1 = e.idx[0] % n;
              Vec left = A.mul(A.e(p.idx[0]), A.e(t.idx[0]));
              Vec inner = A.mul(A.mul(A.e(p.idx[1]), A.e(t.idx[1])), A.e(m1));
              Vec right = A.mul(A.mul(S.apply(inner), A.e(p.idx[2])), A.e(y));
              Vec v = act_vec(M.left(), left, act_vec(M.right(), right, tensor::unit_vec(dM, m0, f)));
              add_scaled(val, p.c * t.c * e.c, v);
            }
        G.set_col(x * n + y, val);
      }
    }
    auto c = s.hom.coordinates(G);
    if (!c) lands = false;
    else cand.set_col(j, *c);
  }
  r.add("candidate_in_hom", lands);
  if (!lands) return r;
  r.add("sigma_after_candidate", (s.sigma * cand).is_identity());
  r.add("candidate_after_sigma", (cand * s.sigma).is_identity());
  return r;
}

Mat eta(const QuasiBialgebra& A, const QuasiHopfBimodule& M, const QuotientModule& bar) {
  return la::kron(bar.q.proj, Mat::identity(A.n(), A.field())) * M.delta;
}

Mat counit_map(const QuasiBialgebra& A, const LeftModule& V, const QuotientModule& free_bar) {
  Mat raw = la::kron(Mat::identity(V.dim, A.field()), A.eps_matrix());
  return mod::descend(raw, free_bar.q, "counit_map");
}

Mat gamma_at(const QuasiBialgebra& A, const LeftModule& V, const Vec& v) {
  const int n = A.n();
  const FieldSpec f = A.field();
  Mat G(V.dim * n, n * n, f);
  for (int a = 0; a < n; ++a) {
    Vec av = V.left[a].apply(v);
    for (int b = 0; b < n; ++b) G.set_col(a * n + b, tensor::kron(av, tensor::unit_vec(n, b, f)));
  }
  return G;
}

Mat theta(const QuasiBialgebra& A, const QuasiHopfBimodule& M, const HomSpace& hom) {
  const int n = A.n();
  Mat T(M.dim(), hom.dim() * n, A.field());
  Vec oo = one_one(A);
  for (int k = 0; k < hom.dim(); ++k) {
    Vec v = hom.basis[k].apply(oo);
    for (int a = 0; a < n; ++a) T.set_col(k * n + a, M.right()[a].apply(v));
  }
  return T;
}

LeftModule hom_module(const QuasiBialgebra& A, const HomSpace& hom) {
  const int n = A.n(), h = hom.dim();
  LeftModule out{h, {}};
  for (int b = 0; b < n; ++b) {
    Mat shift = la::kron(A.rreg()[b], Mat::identity(n, A.field()));
    Mat act(h, h, A.field());
    for (int k = 0; k < h; ++k) {
      auto c = hom.coordinates(hom.basis[k] * shift);
      if (!c) throw IllDefined("hom_module: action leaves the Hom space");
      act.set_col(k, *c);
    }
    out.left.push_back(act);
  }
  return out;
}

VerificationReport adjunction_check(const QuasiBialgebra& A,
                                    const std::vector<QuasiHopfBimodule>& modules,
                                    const std::vector<LeftModule>& left_modules) {
  VerificationReport r;
  const int n = A.n();
  const FieldSpec f = A.field();
  const Mat In = Mat::identity(n, f);
  for (std::size_t i = 0; i < modules.size(); ++i) {
    const QuasiHopfBimodule& M = modules[i];
    QuotientModule bar = mod::quotient_module(A, M.bim);
    Mat e = eta(A, M, bar);
    QuasiHopfBimodule TM = mod::free_module(A, bar.module);
    r.add(tag("eta_morphism", i), mod::is_morphism(A, M, TM, e));
    QuotientModule free_bar = mod::quotient_module(A, TM.bim);
    Mat eta_bar = mod::descend(free_bar.q.proj * e, bar.q, "eta bar");
    r.add(tag("counit_after_eta_bar", i),
          (counit_map(A, bar.module, free_bar) * eta_bar).is_identity());
    if (!fits(n, M.dim())) continue;
    SigmaData s = sigma(A, M);
    Mat th = theta(A, M, s.hom);
    r.add(tag("sigma_base_change", i), la::kron(s.sigma, In) == e * th);
    if (s.hom.dim() == 0) continue;
    LeftModule H = hom_module(A, s.hom);
    QuasiHopfBimodule FH = mod::free_module(A, H);
    r.add(tag("theta_morphism", i), mod::is_morphism(A, FH, M, th));
    bool tri = true;
    QuasiHopfBimodule AA = mod::free_module(A, mod::regular_left(A));
    for (int k = 0; k < s.hom.dim() && tri; ++k) {
      Mat g = gamma_at(A, H, tensor::unit_vec(s.hom.dim(), k, f));
      tri = mod::is_morphism(A, AA, FH, g) && th * g == s.hom.basis[k];
    }
    r.add(tag("hom_theta_after_gamma", i), tri);
  }
  for (std::size_t i = 0; i < left_modules.size(); ++i) {
    const LeftModule& V = left_modules[i];
    QuasiHopfBimodule FV = mod::free_module(A, V);
    QuotientModule FVbar = mod::quotient_module(A, FV.bim);
    Mat ev = counit_map(A, V, FVbar);
    r.add(tag("counit_invertible", i), invertible(ev));
    r.add(tag("counit_free_after_eta", i), (la::kron(ev, In) * eta(A, FV, FVbar)).is_identity());
    if (!fits(n, FV.dim())) continue;
    SigmaData s = sigma(A, FV);
    Mat Gamma(s.hom.dim(), V.dim, f);
    bool lands = true;
    for (int v = 0; v < V.dim && lands; ++v) {
      auto c = s.hom.coordinates(gamma_at(A, V, tensor::unit_vec(V.dim, v, f)));
      if (!c) lands = false;
      else Gamma.set_col(v, *c);
    }
    r.add(tag("gamma_lands_in_hom", i), lands);
    if (!lands) continue;
    r.add(tag("gamma_invertible", i), invertible(Gamma));
    r.add(tag("theta_after_gamma", i), (theta(A, FV, s.hom) * la::kron(Gamma, In)).is_identity());
    r.add(tag("sigma_free_invertible", i), s.invertible);
    r.add(tag("sigma_free_factorization", i), (ev * s.sigma * Gamma).is_identity());
  }
  return r;
}

TauData tau_correspondence(const QuasiBialgebra& A, int dim, const Family& right) {
  TauData t;
  const int n = A.n();
  const FieldSpec f = A.field();
  Family left;
  for (int i = 0; i < n; ++i) left.push_back(eps_family_identity(A, i, dim));
  QuasiHopfBimodule target = mod::tilde_module(A, Bimodule{dim, left, right});
  t.hom = mod::hom_space(A, mod::free_module(A, mod::regular_left(A)), target);
  // g(a1 b) a2 - eps(a) g(b) = 0
  const int u = dim * n;
  Mat C(n * n * dim, u, f);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < n; ++c) {
      Mat g(dim, n, f);
      g(r, c) = f.one();
      for (int a = 0; a < n; ++a) {
        auto da = terms(A.delta(A.e(a)), n, 2);
        for (int b = 0; b < n; ++b) {
          Vec res = g.apply(A.e(b));
          for (auto& x : res) x = -(x * A.eps(A.e(a)));
          for (const auto& d : da)
            add_scaled(res, d.c, right[d.idx[1]].apply(g.apply(A.mul(A.e(d.idx[0]), A.e(b)))));
          for (int k = 0; k < dim; ++k) C((a * n + b) * dim + k, r * n + c) = res[k];
        }
      }
    }
  t.hstar = la::nullspace(C);
  const int h = t.hom.dim(), hs = t.hstar.dim();
  auto as_map = [&](const Vec& flat) {
    Mat g(dim, n, f);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < n; ++c) g(r, c) = flat[r * n + c];
    return g;
  };
  Mat drop = la::kron(Mat::identity(dim, f), A.eps_matrix());
  t.tau = Mat(hs, h, f);
  bool lands = true;
  for (int k = 0; k < h && lands; ++k) {
    Mat g(dim, n, f);
    for (int a = 0; a < n; ++a)
      g.set_col(a, drop.apply(t.hom.basis[k].apply(tensor::kron(A.e(a), A.one()))));
    auto c = t.hstar.coordinates(g.data());
    if (!c) lands = false;
    else t.tau.set_col(k, *c);
  }
  t.report.add("tau_lands", lands);
  // g -> [a (x) b -> g(phi1 a) phi2 b1 (x) phi3 b2]
  auto phi = terms(A.phi_inv(), n, 3);
  t.tau_inv = Mat(h, hs, f);
  bool back = true;
  for (int k = 0; k < hs && back; ++k) {
    Mat g = as_map(t.hstar.basis().col(k));
    Mat F(dim * n, n * n, f);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Vec val = f.zeros(dim * n);
        for (const auto& p : phi)
          for (const auto& d : terms(A.delta(A.e(b)), n, 2)) {
            Vec ga = g.apply(A.mul(A.e(p.idx[0]), A.e(a)));
            Vec first = act_vec(right, A.mul(A.e(p.idx[1]), A.e(d.idx[0])), ga);
            Vec second = A.mul(A.e(p.idx[2]), A.e(d.idx[1]));
            add_scaled(val, p.c * d.c, tensor::kron(first, second));
          }
        F.set_col(a * n + b, val);
      }
    auto c = t.hom.coordinates(F);
    if (!c) back = false;
    else t.tau_inv.set_col(k, *c);
  }
  t.report.add("tau_inverse_lands", back);
  if (!lands || !back) return t;
  t.report.add("tau_inverse_after_tau", (t.tau_inv * t.tau).is_identity());
  t.report.add("tau_after_tau_inverse", (t.tau * t.tau_inv).is_identity());
  bool linear = true;
  if (h > 0) {
    LeftModule H = hom_module(A, t.hom);
    for (int b = 0; b < n && linear; ++b) {
      Mat star(hs, hs, f);
      for (int k = 0; k < hs; ++k) {
        Mat g = as_map(t.hstar.basis().col(k)) * A.rreg()[b];
        auto c = t.hstar.coordinates(g.data());
        if (!c) {
          linear = false;
          break;
        }
        star.set_col(k, *c);
      }
      linear = linear && t.tau * H.left[b] == star * t.tau;
    }
  }
  t.report.add("tau_left_linear", linear);
  return t;
}

CanData can_map_check(const QuasiBialgebra& A, const std::vector<Witness>& witnesses) {
  if (!A.phi_is_trivial()) throw NotABialgebra("can_map_check: the associator is not trivial");
  CanData out;
  const int n = A.n();
  const FieldSpec f = A.field();
  out.can = Mat(n * n, n * n, f);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vec col = f.zeros(n * n);
      for (const auto& d : terms(A.delta(A.e(a)), n, 2))
        add_scaled(col, d.c, tensor::kron(A.e(d.idx[0]), A.mul(A.e(d.idx[1]), A.e(b))));
      out.can.set_col(a * n + b, col);
    }
  out.invertible = invertible(out.can);
  for (const auto& w : witnesses) {
    const QuasiHopfBimodule& M = w.module;
    if (!fits(n, M.dim())) continue;
    Subspace coinv = la::nullspace(M.delta - la::kron(Mat::identity(M.dim(), f),
                                                      Mat::column(A.one(), f)));
    SigmaData s = sigma(A, M);
    Mat varsigma = s.bar.q.proj * coinv.basis();
    Mat lambda(coinv.dim(), s.hom.dim(), f);
    bool lands = true;
    Vec oo = one_one(A);
    for (int k = 0; k < s.hom.dim() && lands; ++k) {
      auto c = coinv.coordinates(s.hom.basis[k].apply(oo));
      if (!c) lands = false;
      else lambda.set_col(k, *c);
    }
    out.report.add("lambda_lands[" + w.name + "]", lands);
    if (lands)
      out.report.add("varsigma_lambda_is_sigma[" + w.name + "]", varsigma * lambda == s.sigma);
    if (out.invertible) out.report.add("varsigma_iso[" + w.name + "]", invertible(varsigma));
  }
  return out;
}

IntegralSpaces integrals(const QuasiBialgebra& A) {
  const int n = A.n();
  const FieldSpec f = A.field();
  Mat L(0, n, f), R(0, n, f);
  for (int a = 0; a < n; ++a) {
    Mat e = eps_family_identity(A, a, n);
    L = L.vstack(A.lreg()[a] - e);
    R = R.vstack(A.rreg()[a] - e);
  }
  IntegralSpaces out;
  out.left = la::nullspace(L);
  out.right = la::nullspace(R);
  out.unimodular = out.left == out.right;
  return out;
}

VerificationReport verify_frobenius_forget_data(const QuasiBialgebra& A, const ForgetData& d) {
  const int n = A.n();
  const FieldSpec f = A.field();
  std::vector<std::vector<Vec>> prod(n, std::vector<Vec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prod[i][j] = A.mul(A.e(i), A.e(j));
  auto e = [&](int i) { return A.e(i); };
  auto mul3 = [&](const Vec& x, const Vec& y, const Vec& z) { return A.mul(A.mul(x, y), z); };
  auto delta_terms = [&](int i) { return terms(A.delta(A.e(i)), n, 2); };
  auto omega = [&](const Vec& u, const Vec& v) { return terms(d.omega.apply(tensor::kron(u, v)), n, 2); };
  const Vec one = A.one();
  const auto z = terms(d.z, n, 3);
  const auto Phi = terms(A.phi(), n, 3);
  const auto phi = terms(A.phi_inv(), n, 3);
  VerificationReport r;

  bool ok = true;
  for (int a = 0; a < n && ok; ++a)
    for (int b = 0; b < n && ok; ++b) {
      Vec lhs = f.zeros(n * n * n), rhs = f.zeros(n * n * n);
      for (const auto& t : z) {
        for (const auto& da : delta_terms(a))
          for (const auto& db : delta_terms(b))
            add_scaled(lhs, t.c * da.c * db.c,
                       tensor::kron(tensor::kron(prod[da.idx[0]][t.idx[0]], prod[t.idx[1]][db.idx[0]]),
                                    mul3(e(da.idx[1]), e(t.idx[2]), e(db.idx[1]))));
        add_scaled(rhs, t.c,
                   tensor::kron(tensor::kron(prod[t.idx[0]][a], prod[b][t.idx[1]]), e(t.idx[2])));
      }
      ok = lhs == rhs;
    }
  r.add("eq1", ok);

  ok = true;
  for (int x = 0; x < n && ok; ++x) {
    auto dx = terms(qba::comul_k(A, e(x), 3), n, 3);
    for (int y = 0; y < n && ok; ++y) {
      auto dy = terms(qba::comul_k(A, e(y), 3), n, 3);
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b) {
          Vec lhs = f.zeros(n * n), rhs = f.zeros(n * n);
          for (const auto& s : dx)
            for (const auto& t : dy)
              for (const auto& w : omega(mul3(e(s.idx[1]), e(a), e(t.idx[1])),
                                         mul3(e(s.idx[2]), e(b), e(t.idx[2]))))
                add_scaled(lhs, s.c * t.c * w.c,
                           tensor::kron(prod[w.idx[0]][s.idx[0]], prod[t.idx[0]][w.idx[1]]));
          for (const auto& w : omega(e(a), e(b)))
            add_scaled(rhs, w.c, tensor::kron(prod[x][w.idx[0]], prod[w.idx[1]][y]));
          ok = lhs == rhs;
        }
    }
  }
  r.add("eq2", ok);

  ok = true;
  for (int a = 0; a < n && ok; ++a)
    for (int b = 0; b < n && ok; ++b) {
      Vec lhs = f.zeros(n * n * n), rhs = f.zeros(n * n * n);
      for (const auto& p : phi)
        for (const auto& P : Phi) {
          for (const auto& da : delta_terms(a)) {
            Vec mid = mul3(e(p.idx[1]), e(da.idx[0]), e(P.idx[1]));
            for (const auto& w : omega(mul3(e(p.idx[2]), e(da.idx[1]), e(P.idx[2])), e(b)))
              for (const auto& u : delta_terms(w.idx[0]))
                for (const auto& v : delta_terms(w.idx[1]))
                  add_scaled(lhs, p.c * P.c * da.c * w.c * u.c * v.c,
                             tensor::kron(tensor::kron(prod[u.idx[0]][p.idx[0]], prod[P.idx[0]][v.idx[0]]),
                                          mul3(e(u.idx[1]), mid, e(v.idx[1]))));
          }
          for (const auto& f1 : delta_terms(p.idx[0]))
            for (const auto& g1 : delta_terms(P.idx[0]))
              for (const auto& db : delta_terms(b)) {
                Vec third = mul3(e(p.idx[2]), e(db.idx[1]), e(P.idx[2]));
                for (const auto& w : omega(mul3(e(f1.idx[1]), e(a), e(g1.idx[1])),
                                           mul3(e(p.idx[1]), e(db.idx[0]), e(P.idx[1]))))
                  add_scaled(rhs, p.c * P.c * f1.c * g1.c * db.c * w.c,
                             tensor::kron(tensor::kron(prod[w.idx[0]][f1.idx[0]], prod[g1.idx[0]][w.idx[1]]),
                                          third));
              }
        }
      ok = lhs == rhs;
    }
  r.add("eq3", ok);

  ok = true;
  for (int a = 0; a < n && ok; ++a) {
    Vec lhs = f.zeros(n * n);
    for (const auto& t : z)
      for (const auto& p : delta_terms(t.idx[0]))
        for (const auto& q : delta_terms(t.idx[1]))
          for (const auto& w : omega(mul3(e(p.idx[1]), e(a), e(q.idx[1])), e(t.idx[2])))
            add_scaled(lhs, t.c * p.c * q.c * w.c,
                       tensor::kron(prod[w.idx[0]][p.idx[0]], prod[q.idx[0]][w.idx[1]]));
    Vec rhs = tensor::kron(one, one);
    for (auto& s : rhs) s = s * A.eps(e(a));
    ok = lhs == rhs;
  }
  r.add("eq4", ok);

  ok = true;
  for (int a = 0; a < n && ok; ++a) {
    Vec lhs = f.zeros(n * n * n);
    for (const auto& p : phi)
      for (const auto& P : Phi)
        for (const auto& t : z)
          for (const auto& f1 : delta_terms(p.idx[0]))
            for (const auto& g1 : delta_terms(P.idx[0]))
              for (const auto& da : delta_terms(a)) {
                Vec third = mul3(e(p.idx[2]), e(da.idx[1]), e(P.idx[2]));
                for (const auto& w : omega(mul3(e(f1.idx[1]), e(t.idx[2]), e(g1.idx[1])),
                                           mul3(e(p.idx[1]), e(da.idx[0]), e(P.idx[1]))))
                  add_scaled(lhs, p.c * P.c * t.c * f1.c * g1.c * da.c * w.c,
                             tensor::kron(tensor::kron(mul3(e(w.idx[0]), e(f1.idx[0]), e(t.idx[0])),
                                                       mul3(e(t.idx[1]), e(g1.idx[0]), e(w.idx[1]))),
                                          third));
              }
    ok = lhs == tensor::kron(tensor::kron(one, one), e(a));
  }
  r.add("eq5", ok);
  return r;
}

VerificationReport cltensor_check(const QuasiBialgebra& A, const LeftModule& M, const Bimodule& N) {
  VerificationReport r;
  const int n = A.n();
  const FieldSpec f = A.field();
  const Mat IM = Mat::identity(M.dim, f);
  Mat killed = la::kron(IM, N.right[0] - eps_family_identity(A, 0, N.dim));
  for (int a = 1; a < n; ++a)
    killed = killed.hstack(la::kron(IM, N.right[a] - eps_family_identity(A, a, N.dim)));
  la::QuotientData q = la::quotient(M.dim * N.dim, Subspace::span(killed));
  QuotientModule Nbar = mod::quotient_module(A, N);
  Mat iso = mod::descend(la::kron(IM, Nbar.q.proj), q, "cltensor");
  r.add("cltensor_invertible", invertible(iso));
  LeftModule target = mod::tensor_left(A, M, Nbar.module);
  LeftModule source = mod::tensor_left(A, M, N.left_module());
  bool linear = true;
  for (int a = 0; a < n && linear; ++a) {
    Mat induced = mod::descend(q.proj * source.left[a], q, "cltensor action");
    linear = iso * induced == target.left[a] * iso;
  }
  r.add("cltensor_linear", linear);
  return r;
}

}  // namespace qhb::frob
