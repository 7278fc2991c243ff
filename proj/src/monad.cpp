#include "qhb/monad.hpp"

#include <string>

namespace qhb::monad {

using la::FieldSpec;
using la::QuotientData;
using la::Scalar;
using mod::Bimodule;

namespace {

Mat id(int d, FieldSpec f) { return Mat::identity(d, f); }

/// Checks that raw vanishes on the killed subspaces of both factors of M (x) N.
bool vanishes_on_factors(const Mat& raw, const QuotientData& qM, const QuotientData& qN) {
  const FieldSpec f = raw.field();
  const int dM = qM.proj.cols(), dN = qN.proj.cols();
  if (qM.killed.dim() > 0 && !(raw * la::kron(qM.killed.basis(), id(dN, f))).is_zero())
    return false;
  if (qN.killed.dim() > 0 && !(raw * la::kron(id(dM, f), qN.killed.basis())).is_zero())
    return false;
  return true;
}

/// chi_{M,N}: (M (x)_A N)bar -> M (x)_A Nbar.
Mat chi_matrix(const PsiData& p, const mod::LeftTensor& lt, int dM) {
  const FieldSpec f = p.psi.field();
  Mat raw = lt.q.proj * la::kron(id(dM, f), p.bar_N.q.proj);
  return mod::descend(mod::descend(raw, p.MN.q, "chi"), p.bar_MN.q, "chi");
}

/// kappa: (V (x) A) (x)_A W -> V (x) W, (v (x) a) (x) w -> v (x) a w.
Mat kappa_matrix(const QuasiBialgebra& A, int dV, const LeftModule& W, const mod::LeftTensor& lt) {
  const FieldSpec f = A.field();
  const int n = A.n();
  Mat raw(dV * W.dim, dV * n * W.dim, f);
  for (int v = 0; v < dV; ++v)
    for (int a = 0; a < n; ++a)
      for (int w = 0; w < W.dim; ++w)
        for (int u = 0; u < W.dim; ++u) raw(v * W.dim + u, (v * n + a) * W.dim + w) = W.left[a](u, w);
  return mod::descend(raw, lt.q, "kappa");
}

void add_invertible(VerificationReport& r, const std::string& name, const Mat& m) {
  std::string why;
  bool ok = frob::invertible(m, &why);
  r.add(name, ok, why);
}

}  // namespace

TObject T(const QuasiBialgebra& A, const QuasiHopfBimodule& M) {
  TObject t;
  t.bar = mod::quotient_module(A, M.bim);
  t.module = mod::free_module(A, t.bar.module);
  return t;
}

Mat nu(const QuasiBialgebra& A, const QuasiHopfBimodule& M, const TObject& TM) {
  return frob::eta(A, M, TM.bar);
}

Mat mu(const QuasiBialgebra& A, const TObject& TM, const TObject& TTM) {
  return la::kron(frob::counit_map(A, TM.bar.module, TTM.bar), id(A.n(), A.field()));
}

Mat phi0(const QuasiBialgebra& A, const TObject& TA) {
  return la::kron(mod::descend(A.eps_matrix(), TA.bar.q, "phi0"), id(A.n(), A.field()));
}

Mat T_map(const QuasiBialgebra& A, const Mat& f, const TObject& TX, const TObject& TY) {
  Mat fbar = mod::descend(TY.bar.q.proj * f, TX.bar.q, "T(f)");
  return la::kron(fbar, id(A.n(), A.field()));
}

PsiData psi(const QuasiBialgebra& A, const QuasiHopfBimodule& M, const QuasiHopfBimodule& N) {
  return psi(A, M, N, mod::tensor_over_A(A, M, N));
}

PsiData psi(const QuasiBialgebra& A, const QuasiHopfBimodule& M, const QuasiHopfBimodule& N,
            const TensorProduct& MN) {
  const FieldSpec f = A.field();
  const int n = A.n(), dM = M.dim(), dN = N.dim();
  PsiData p;
  p.MN = MN;
  p.bar_MN = mod::quotient_module(A, MN.module.bim);
  p.bar_M = mod::quotient_module(A, M.bim);
  p.bar_N = mod::quotient_module(A, N.bim);
  const int qM = p.bar_M.dim(), qN = p.bar_N.dim();
  std::vector<Mat> PN;
  for (int a = 0; a < n; ++a) PN.push_back(p.bar_N.q.proj * N.left()[a]);
  Mat raw(qM * qN, dM * dN, f);
  for (int m = 0; m < dM; ++m)
    for (int m0 = 0; m0 < dM; ++m0)
      for (int a = 0; a < n; ++a) {
        const Scalar& c = M.delta(m0 * n + a, m);
        if (c.is_zero()) continue;
        for (int i = 0; i < qM; ++i) {
          const Scalar& pm = p.bar_M.q.proj(i, m0);
          if (pm.is_zero()) continue;
          Scalar cp = c * pm;
          for (int x = 0; x < dN; ++x)
            for (int j = 0; j < qN; ++j) {
              const Scalar& pn = PN[a](j, x);
              if (!pn.is_zero()) raw(i * qN + j, m * dN + x).addmul(cp, pn);
            }
        }
      }
  p.psi = mod::descend(mod::descend(raw, MN.q, "psi"), p.bar_MN.q, "psi");
  return p;
}

PhiData phi(const QuasiBialgebra& A, const QuasiHopfBimodule& M, const QuasiHopfBimodule& N) {
  PhiData d;
  d.psi = psi(A, M, N);
  d.T_MN.bar = d.psi.bar_MN;
  d.T_MN.module = mod::free_module(A, d.psi.bar_MN.module);
  d.xi = mod::xi(A, d.psi.bar_M.module, d.psi.bar_N.module);
  d.phi = d.xi.xi_inv * la::kron(d.psi.psi, id(A.n(), A.field()));
  return d;
}

VerificationReport chi_kappa_check(const QuasiBialgebra& A, const QuasiHopfBimodule& M,
                                   const QuasiHopfBimodule& N) {
  VerificationReport r;
  PsiData p = psi(A, M, N);
  const LeftModule& Nbar = p.bar_N.module;
  mod::LeftTensor lt = mod::tensor_over_A_left(A, M.bim, Nbar);
  Mat chi = chi_matrix(p, lt, M.dim());
  TObject TM = T(A, M);
  mod::LeftTensor lt2 = mod::tensor_over_A_left(A, TM.module.bim, Nbar);
  Mat eta_N = mod::tensor_map(nu(A, M, TM), id(Nbar.dim, A.field()), lt.q, lt2.q);
  Mat kappa = kappa_matrix(A, TM.bar.dim(), Nbar, lt2);
  add_invertible(r, "chi_invertible", chi);
  r.add("chi_left_linear", mod::is_left_linear(p.bar_MN.module.left, lt.module.left, chi));
  add_invertible(r, "kappa_invertible", kappa);
  r.add("psi_factorization", kappa * eta_N * chi == p.psi);
  return r;
}

VerificationReport pre_lax_lax_check(const QuasiBialgebra& A, const QuasiHopfBimodule& M) {
  const FieldSpec f = A.field();
  const int n = A.n(), dM = M.dim();
  VerificationReport r;
  QuasiHopfBimodule AA = mod::free_module(A, mod::regular_left(A));
  PsiData p = psi(A, M, AA);
  Mat eps_A = frob::counit_map(A, mod::regular_left(A), p.bar_N);
  Mat rhs = la::kron(id(p.bar_M.dim(), f), eps_A) * p.psi;
  mod::LeftTensor lt = mod::tensor_over_A_left(A, M.bim, p.bar_N.module);
  Mat chi = chi_matrix(p, lt, dM);
  // m (x) w -> m . eps_A(w)
  const int q = p.bar_N.dim();
  Mat raw(dM, dM * q, f);
  for (int m = 0; m < dM; ++m)
    for (int w = 0; w < q; ++w)
      for (int a = 0; a < n; ++a) {
        const Scalar& c = eps_A(a, w);
        if (c.is_zero()) continue;
        for (int i = 0; i < dM; ++i) raw(i, m * q + w).addmul(c, M.right()[a](i, m));
      }
  Mat act = mod::descend(raw, lt.q, "pre_lax_lax");
  TObject TM = T(A, M);
  r.add("pre_lax_lax", nu(A, M, TM) * act * chi == rhs);
  return r;
}

VerificationReport psi_inverse_check(const QuasiBialgebra& A, const Mat& S,
                                     const QuasiHopfBimodule& M, const QuasiHopfBimodule& N) {
  const FieldSpec f = A.field();
  const int n = A.n(), dM = M.dim(), dN = N.dim();
  VerificationReport r;
  PsiData p = psi(A, M, N);
  // E(m) = Phi1 m0 S(Phi2 m1) Phi3
  Mat E(dM, dM, f);
  const Vec& Phi = A.phi();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& c = Phi[(i * n + j) * n + k];
        if (c.is_zero()) continue;
        for (int a = 0; a < n; ++a) {
          Vec y = A.mul(S.apply(A.mul(A.e(j), A.e(a))), A.e(k));
          Mat LR = M.left()[i] * mod::action(M.right(), y);
          for (int m = 0; m < dM; ++m)
            for (int m0 = 0; m0 < dM; ++m0) {
              const Scalar& d = M.delta(m0 * n + a, m);
              if (d.is_zero()) continue;
              Scalar cd = c * d;
              for (int u = 0; u < dM; ++u)
                if (!LR(u, m0).is_zero()) E(u, m).addmul(cd, LR(u, m0));
            }
        }
      }
  Mat raw = p.bar_MN.q.proj * (p.MN.q.proj * la::kron(E, id(dN, f)));
  bool defined = vanishes_on_factors(raw, p.bar_M.q, p.bar_N.q);
  r.add("psi_inverse_well_defined", defined);
  if (!defined) return r;
  Mat cand = raw * la::kron(p.bar_M.q.section, p.bar_N.q.section);
  r.add("psi_inverse_left", (cand * p.psi).is_identity());
  r.add("psi_inverse_right", (p.psi * cand).is_identity());
  return r;
}

Operator make_operator(Mat m) {
  Operator o;
  o.invertible = frob::invertible(m, &o.detail);
  o.matrix = std::move(m);
  return o;
}

Fusion fusion_operators(const QuasiBialgebra& A, const QuasiHopfBimodule& X,
                        const QuasiHopfBimodule& Y) {
  const FieldSpec f = A.field();
  TObject TX = T(A, X), TY = T(A, Y);
  TensorProduct dst = mod::tensor_over_A(A, TX.module, TY.module);
  Fusion out;
  {
    TObject TTY = T(A, TY.module);
    PhiData ph = phi(A, X, TY.module);
    Mat m = mod::tensor_map(id(TX.dim(), f), mu(A, TY, TTY), ph.xi.source.q, dst.q);
    out.left = make_operator(m * ph.phi);
  }
  {
    TObject TTX = T(A, TX.module);
    PhiData ph = phi(A, TX.module, Y);
    Mat m = mod::tensor_map(mu(A, TX, TTX), id(TY.dim(), f), ph.xi.source.q, dst.q);
    out.right = make_operator(m * ph.phi);
  }
  return out;
}

HopfOps hopf_operators(const QuasiBialgebra& A, const LeftModule& V, const QuasiHopfBimodule& M) {
  const FieldSpec f = A.field();
  QuasiHopfBimodule FV = mod::free_module(A, V);
  HopfOps out;
  PsiData l = psi(A, M, FV);
  Mat eps_l = frob::counit_map(A, V, l.bar_N);
  out.left = make_operator(la::kron(id(l.bar_M.dim(), f), eps_l) * l.psi);
  PsiData r = psi(A, FV, M);
  Mat eps_r = frob::counit_map(A, V, r.bar_M);
  out.right = make_operator(la::kron(eps_r, id(r.bar_N.dim(), f)) * r.psi);
  return out;
}

VerificationReport opmonoidal_monad_laws(const QuasiBialgebra& A,
                                         const std::vector<QuasiHopfBimodule>& witnesses,
                                         int cap) {
  const FieldSpec f = A.field();
  VerificationReport r;
  auto tag = [](const std::string& s, std::size_t i) { return s + "[" + std::to_string(i) + "]"; };
  auto tag2 = [](const std::string& s, std::size_t i, std::size_t j) {
    return s + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
  };

  std::vector<TObject> Ts;
  std::vector<Mat> nus, mus;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const QuasiHopfBimodule& M = witnesses[i];
    TObject TM = T(A, M), TTM = T(A, TM.module), TTTM = T(A, TTM.module);
    Mat muM = mu(A, TM, TTM), muTM = mu(A, TTM, TTTM);
    Mat nuM = nu(A, M, TM), nuTM = nu(A, TM.module, TTM);
    r.add(tag("nu_morphism", i), mod::is_morphism(A, M, TM.module, nuM));
    r.add(tag("mu_morphism", i), mod::is_morphism(A, TTM.module, TM.module, muM));
    add_invertible(r, tag("mu_invertible", i), muM);
    r.add(tag("mu_associative", i), muM * T_map(A, muM, TTTM, TTM) == muM * muTM);
    r.add(tag("mu_after_nu_T", i), (muM * nuTM).is_identity());
    r.add(tag("mu_after_T_nu", i), (muM * T_map(A, nuM, TM, TTM)).is_identity());
    Ts.push_back(std::move(TM));
    nus.push_back(std::move(nuM));
    mus.push_back(std::move(muM));
  }

  QuasiHopfBimodule Areg = mod::regular(A);
  TObject TA = T(A, Areg), TTA = T(A, TA.module);
  Mat p0 = phi0(A, TA);
  add_invertible(r, "phi0_invertible", p0);
  r.add("phi0_after_nu", (p0 * nu(A, Areg, TA)).is_identity());
  r.add("phi0_mu_square", p0 * mu(A, TA, TTA) == p0 * T_map(A, p0, TTA, TA));

  for (std::size_t j = 0; j < witnesses.size(); ++j) {
    const QuasiHopfBimodule& Y = witnesses[j];
    if (A.n() * Y.dim() > cap) continue;
    const TObject& TY = Ts[j];
    PhiData l = phi(A, Areg, Y);
    TensorProduct ATY = mod::tensor_over_A(A, TA.module, TY.module);
    TensorProduct A_TY = mod::tensor_over_A(A, Areg, TY.module);
    Mat lhs = mod::left_unitor(TY.module, A_TY) *
              mod::tensor_map(p0, id(TY.dim(), f), ATY.q, A_TY.q) * l.phi;
    r.add(tag("left_neutral", j), lhs == T_map(A, mod::left_unitor(Y, l.psi.MN), l.T_MN, TY));
    PhiData rt = phi(A, Y, Areg);
    TensorProduct TY_A = mod::tensor_over_A(A, TY.module, Areg);
    Mat rhs = mod::right_unitor(TY.module, TY_A) *
              mod::tensor_map(id(TY.dim(), f), p0, rt.xi.source.q, TY_A.q) * rt.phi;
    r.add(tag("right_neutral", j), rhs == T_map(A, mod::right_unitor(Y, rt.psi.MN), rt.T_MN, TY));
  }

  for (std::size_t i = 0; i < witnesses.size(); ++i)
    for (std::size_t j = 0; j < witnesses.size(); ++j) {
      const QuasiHopfBimodule &X = witnesses[i], &Y = witnesses[j];
      if (X.dim() * Y.dim() > cap || Ts[i].dim() * Ts[j].dim() > cap) continue;
      PhiData ph = phi(A, X, Y);
      const TensorProduct& TXTY = ph.xi.source;
      Mat nuXY = nu(A, ph.psi.MN.module, ph.T_MN);
      r.add(tag2("nu_square", i, j),
            ph.phi * nuXY == mod::tensor_map(nus[i], nus[j], ph.psi.MN.q, TXTY.q));
      TObject TTXY = T(A, ph.T_MN.module);
      PhiData ph2 = phi(A, Ts[i].module, Ts[j].module);
      Mat lhs = ph.phi * mu(A, ph.T_MN, TTXY);
      Mat rhs = mod::tensor_map(mus[i], mus[j], ph2.xi.source.q, TXTY.q) * ph2.phi *
                T_map(A, ph.phi, TTXY, ph2.T_MN);
      r.add(tag2("mu_square", i, j), lhs == rhs);
    }

  for (std::size_t i = 0; i < witnesses.size(); ++i)
    for (std::size_t j = 0; j < witnesses.size(); ++j)
      for (std::size_t k = 0; k < witnesses.size(); ++k) {
        const QuasiHopfBimodule &X = witnesses[i], &Y = witnesses[j], &Z = witnesses[k];
        if (X.dim() * Y.dim() * Z.dim() > cap / 4) continue;
        TensorProduct XY = mod::tensor_over_A(A, X, Y), YZ = mod::tensor_over_A(A, Y, Z);
        TensorProduct XY_Z = mod::tensor_over_A(A, XY.module, Z);
        TensorProduct X_YZ = mod::tensor_over_A(A, X, YZ.module);
        Mat a = mod::reassociate(XY, XY_Z, YZ, X_YZ);
        PhiData pXY = phi(A, X, Y), pYZ = phi(A, Y, Z);
        PhiData pXY_Z = phi(A, XY.module, Z), pX_YZ = phi(A, X, YZ.module);
        const TObject &TX = Ts[i], &TZ = Ts[k];
        TensorProduct TXTY_TZ = mod::tensor_over_A(A, pXY.xi.source.module, TZ.module);
        TensorProduct TX_TYTZ = mod::tensor_over_A(A, TX.module, pYZ.xi.source.module);
        Mat aT = mod::reassociate(pXY.xi.source, TXTY_TZ, pYZ.xi.source, TX_TYTZ);
        Mat lhs = aT * mod::tensor_map(pXY.phi, id(TZ.dim(), f), pXY_Z.xi.source.q, TXTY_TZ.q) *
                  pXY_Z.phi;
        Mat rhs = mod::tensor_map(id(TX.dim(), f), pYZ.phi, pX_YZ.xi.source.q, TX_TYTZ.q) *
                  pX_YZ.phi * T_map(A, a, pXY_Z.T_MN, pX_YZ.T_MN);
        r.add("colax_associative[" + std::to_string(i) + "," + std::to_string(j) + "," +
                  std::to_string(k) + "]",
              lhs == rhs);
      }
  return r;
}

namespace {

struct Tally {
  bool value = true;
  std::string detail;
  void note(bool ok, const std::string& what, const std::string& why) {
    if (ok || !value) {
      value = value && ok;
      return;
    }
    value = false;
    detail = what + ": " + why;
  }
};

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + ", " + b + ")"; }

}  // namespace

EquivalenceReport main2_report(const QuasiBialgebra& A, int pair_cap) {
  EquivalenceReport rep;
  std::vector<frob::Witness> W = frob::witness_modules(A);
  std::vector<QuasiHopfBimodule> mods;
  for (const auto& w : W) mods.push_back(w.module);

  rep.witnesses = "modules:";
  for (const auto& w : W) rep.witnesses += " " + w.name + " (dim " + std::to_string(w.module.dim()) + ")";
  rep.witnesses += "; pairs with dim(M)*dim(N) <= " + std::to_string(pair_cap) +
                   "; left modules for the Hopf operators: k, A; (d) is read through psi0 and psi";

  auto solved = qba::solve_preantipode(A);
  rep.predicates.push_back({"(1) preantipode exists (linear solve)", solved.has_value(), ""});

  frob::Extraction ex = frob::extract_preantipode(A);
  {
    std::string d;
    if (ex.status == frob::Extraction::Status::None) d = "sigma_A not invertible";
    if (ex.status == frob::Extraction::Status::Partial) {
      d = "candidate fails:";
      for (const auto& s : ex.failed) d += " " + s;
    }
    rep.predicates.push_back({"(a) preantipode from sigma_A^-1", ex.status == frob::Extraction::Status::Found, d});
  }

  Tally eta_t, sigma_t;
  std::string per_module;
  std::vector<frob::SigmaData> sigmas;
  for (const auto& w : W) {
    mod::QuotientModule bar = mod::quotient_module(A, w.module.bim);
    std::string why;
    eta_t.note(frob::invertible(frob::eta(A, w.module, bar), &why), w.name, why);
    sigmas.push_back(frob::sigma(A, w.module));
    const frob::SigmaData& s = sigmas.back();
    sigma_t.note(s.invertible, w.name, s.detail);
    if (!per_module.empty()) per_module += ", ";
    per_module += w.name + (s.invertible ? " yes" : " no");
  }
  rep.predicates.push_back({"(2) eta_M: M -> Mbar (x) A invertible on witnesses", eta_t.value, eta_t.detail});
  rep.predicates.push_back({"(3) -(x)A Frobenius: sigma invertible on witnesses", sigma_t.value, sigma_t.detail});
  rep.predicates.push_back({"(4) sigma_M invertible for each witness M", sigma_t.value, per_module});

  Tally psi_t;
  for (std::size_t i = 0; i < W.size(); ++i)
    for (std::size_t j = 0; j < W.size(); ++j) {
      if (W[i].module.dim() * W[j].module.dim() > pair_cap) continue;
      PsiData p = psi(A, mods[i], mods[j]);
      std::string why;
      psi_t.note(frob::invertible(p.psi, &why), pair_name(W[i].name, W[j].name), why);
    }
  rep.predicates.push_back({"(b) psi natural isomorphism on witness pairs", psi_t.value, psi_t.detail});
  {
    PsiData p = psi(A, mods[1], mods[3]);
    std::string why;
    bool ok = frob::invertible(p.psi, &why);
    rep.predicates.push_back({"(c) psi_{A^, A(x)A} invertible", ok, why});
  }
  {
    mod::QuotientModule abar = mod::quotient_module(A, mod::regular_bimodule(A));
    std::string why;
    bool psi0 = frob::invertible(mod::descend(A.eps_matrix(), abar.q, "psi0"), &why);
    rep.predicates.push_back({"(d) lax-lax adjunction: psi0 and psi invertible", psi0 && psi_t.value,
                              psi0 ? psi_t.detail : why});
  }

  Tally hopf_t;
  std::vector<std::pair<std::string, LeftModule>> lefts = {{"k", mod::trivial_left(A)},
                                                           {"A", mod::regular_left(A)}};
  for (std::size_t i = 0; i < W.size(); ++i)
    for (const auto& [vname, V] : lefts) {
      if (W[i].module.dim() * V.dim * A.n() > pair_cap) continue;
      HopfOps h = hopf_operators(A, V, mods[i]);
      hopf_t.note(h.left.invertible, "H^l" + pair_name(W[i].name, vname), h.left.detail);
      hopf_t.note(h.right.invertible, "H^r" + pair_name(vname, W[i].name), h.right.detail);
    }
  rep.predicates.push_back({"(e) Hopf operators invertible", hopf_t.value, hopf_t.detail});

  Tally fusion_t;
  for (std::size_t i = 0; i < W.size(); ++i)
    for (std::size_t j = 0; j < W.size(); ++j) {
      if (W[i].module.dim() * W[j].module.dim() > pair_cap) continue;
      Fusion fu = fusion_operators(A, mods[i], mods[j]);
      fusion_t.note(fu.left.invertible, "H^l" + pair_name(W[i].name, W[j].name), fu.left.detail);
      fusion_t.note(fu.right.invertible, "H^r" + pair_name(W[i].name, W[j].name), fu.right.detail);
    }
  rep.predicates.push_back({"(f) T is a Hopf monad: fusion operators invertible", fusion_t.value, fusion_t.detail});

  if (A.phi_is_trivial()) {
    frob::CanData c = frob::can_map_check(A, W);
    rep.predicates.push_back({"can: A (x) A -> A (x) A invertible", c.invertible, ""});
    rep.checks.merge(c.report, "can.");
  }

  rep.value = rep.predicates.front().value;
  std::string disagreement;
  for (const auto& p : rep.predicates)
    if (p.value != rep.value) disagreement += " " + p.name;
  if (!disagreement.empty())
    throw InconsistentPredicates("predicates disagree with (1):" + disagreement);

  for (std::size_t i = 0; i < W.size(); ++i) {
    if (A.n() * W[i].module.dim() > pair_cap) continue;
    rep.checks.merge(pre_lax_lax_check(A, mods[i]), W[i].name + ".");
  }
  for (std::size_t i = 0; i < 3; ++i)
    rep.checks.merge(chi_kappa_check(A, mods[i], mods[2]), pair_name(W[i].name, W[2].name) + ".");
  for (const auto& [vname, V] : lefts) {
    mod::XiData x = mod::xi(A, V, mod::regular_left(A));
    rep.checks.merge(mod::verify_xi(A, x), "xi(" + vname + ", A).");
  }

  if (rep.value) {
    rep.S = ex.S;
    rep.checks.merge(qba::verify_preantipode(A, *ex.S), "S.");
    for (std::size_t i = 0; i < W.size(); ++i) {
      rep.sigma_samples.push_back({W[i].name, *sigmas[i].inverse});
      if (A.n() * A.n() * W[i].module.dim() <= mod::kHomCap)
        rep.checks.merge(frob::sigma_inverse_formula_check(A, *ex.S, mods[i]), W[i].name + ".");
    }
    for (std::size_t i = 0; i < 3; ++i)
      rep.checks.merge(psi_inverse_check(A, *ex.S, mods[i], mods[2]),
                       pair_name(W[i].name, W[2].name) + ".");
  }
  return rep;
}

}  // namespace qhb::monad
