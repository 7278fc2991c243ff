#include "qhb/qba.hpp"

#include <sstream>

namespace qhb {

void VerificationReport::add(std::string name, bool passed, std::string detail) {
  checks_.push_back({std::move(name), passed, std::move(detail)});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.passed, c.detail});
}

bool VerificationReport::all_pass() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

bool VerificationReport::passed(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return c.passed;
  return false;
}

std::vector<std::string> VerificationReport::failed() const {
  std::vector<std::string> out;
  for (const auto& c : checks_)
    if (!c.passed) out.push_back(c.name);
  return out;
}

}  // namespace qhb

namespace qhb::qba {

void check_shapes(const AlgebraData& d) {
  if (d.n < 1) throw ShapeMismatch("dimension must be positive");
  const std::size_t n = d.n, n3 = n * n * n;
  auto want = [](const char* what, std::size_t got, std::size_t expect) {
    if (got != expect) {
      std::ostringstream os;
      os << what << " has " << got << " entries, expected " << expect;
      throw ShapeMismatch(os.str());
    }
  };
  want("mult", d.mult.size(), n3);
  want("comul", d.comul.size(), n3);
  want("unit", d.unit.size(), n);
  want("counit", d.counit.size(), n);
  want("phi", d.phi.size(), n3);
  if (d.phi_inv) want("phi_inv", d.phi_inv->size(), n3);
  if (!d.labels.empty()) want("basis", d.labels.size(), n);
}

QuasiBialgebra::QuasiBialgebra(AlgebraData d) : d_(std::move(d)) {
  check_shapes(d_);
  const int n = d_.n;
  FieldSpec f = d_.field;
  auto norm = [&](Vec& v) {
    for (auto& s : v) s = f.from(s);
  };
  norm(d_.mult), norm(d_.unit), norm(d_.comul), norm(d_.counit), norm(d_.phi);
  if (d_.phi_inv) norm(*d_.phi_inv);
  if (d_.labels.empty())
    for (int i = 0; i < n; ++i) d_.labels.push_back("e" + std::to_string(i));

  auto at = [&](const Vec& t, int i, int j, int k) -> const Scalar& {
    return t[(static_cast<std::size_t>(i) * n + j) * n + k];
  };
  lreg_.assign(n, Mat(n, n, f));
  rreg_.assign(n, Mat(n, n, f));
  eps_fam_.assign(n, Mat(1, 1, f));
  delta_m_ = Mat(n * n, n, f);
  eps_m_ = Mat(1, n, f);
  prod_nz_.assign(static_cast<std::size_t>(n) * n, {});
  for (int i = 0; i < n; ++i) {
    eps_fam_[i](0, 0) = d_.counit[i];
    eps_m_(0, i) = d_.counit[i];
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        lreg_[i](k, j) = at(d_.mult, i, j, k);
        rreg_[i](k, j) = at(d_.mult, j, i, k);
        delta_m_(j * n + k, i) = at(d_.comul, i, j, k);
        if (!at(d_.mult, i, j, k).is_zero()) prod_nz_[i * n + j].push_back({k, at(d_.mult, i, j, k)});
      }
  }
  if (!d_.phi_inv) d_.phi_inv = solve_phi_inverse(d_);
}

bool QuasiBialgebra::phi_is_trivial() const { return d_.phi == one_k(3); }

Vec QuasiBialgebra::one_k(int k) const {
  Vec v = d_.unit;
  for (int i = 1; i < k; ++i) v = tensor::kron(v, d_.unit);
  return v;
}

Vec QuasiBialgebra::zero(int k) const {
  std::size_t len = 1;
  for (int i = 0; i < k; ++i) len *= d_.n;
  return d_.field.zeros(len);
}

Vec QuasiBialgebra::mul(const Vec& x, const Vec& y) const { return mul_k(x, y, 1); }

Vec QuasiBialgebra::mul_k(const Vec& x, const Vec& y, int k) const {
  const int n = d_.n;
  Vec out = zero(k);
  if (x.size() != out.size() || y.size() != out.size())
    throw ShapeMismatch("mul_k: operand length");
  std::vector<int> xi, yi;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) xi.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!y[i].is_zero()) yi.push_back(static_cast<int>(i));
  std::vector<int> a(k), b(k);
  std::vector<std::pair<int, Scalar>> cur, next;
  for (int I : xi) {
    for (int r = k - 1, t = I; r >= 0; --r, t /= n) a[r] = t % n;
    for (int J : yi) {
      for (int r = k - 1, t = J; r >= 0; --r, t /= n) b[r] = t % n;
      cur.assign(1, {0, x[I] * y[J]});
      for (int r = 0; r < k && !cur.empty(); ++r) {
        next.clear();
        for (const auto& [flat, c] : cur)
          for (const auto& [kk, v] : prod_nz_[a[r] * n + b[r]]) next.push_back({flat * n + kk, c * v});
        std::swap(cur, next);
      }
      for (const auto& [flat, c] : cur) out[flat] += c;
    }
  }
  return out;
}

Vec QuasiBialgebra::delta(const Vec& x) const { return delta_m_.apply(x); }

Scalar QuasiBialgebra::eps(const Vec& x) const { return eps_m_.apply(x)[0]; }

Vec QuasiBialgebra::delta_at(const Vec& x, int k, int pos) const {
  return tensor::apply_at(delta_m_, x, dims(k), pos);
}

Vec QuasiBialgebra::eps_at(const Vec& x, int k, int pos) const {
  return tensor::apply_at(eps_m_, x, dims(k), pos);
}

Mat QuasiBialgebra::lmul(const Vec& x) const {
  Mat m(d_.n, d_.n, d_.field);
  for (int i = 0; i < d_.n; ++i)
    if (!x[i].is_zero()) m = m + lreg_[i].scaled(x[i]);
  return m;
}

Mat QuasiBialgebra::rmul(const Vec& x) const {
  Mat m(d_.n, d_.n, d_.field);
  for (int i = 0; i < d_.n; ++i)
    if (!x[i].is_zero()) m = m + rreg_[i].scaled(x[i]);
  return m;
}

std::optional<Vec> solve_phi_inverse(const AlgebraData& d) {
  AlgebraData probe = d;
  probe.phi_inv = d.phi;  // placeholder, only the product is used
  QuasiBialgebra A(std::move(probe));
  const int n3 = A.n() * A.n() * A.n();
  Mat right = tensor::from_columns(n3, n3, A.field(), [&](int j) {
    return A.mul_k(tensor::unit_vec(n3, j, A.field()), A.phi(), 3);
  });
  auto sol = la::solve_affine(right, A.one_k(3));
  if (!sol) return std::nullopt;
  if (A.mul_k(A.phi(), sol->x0, 3) != A.one_k(3)) return std::nullopt;
  return sol->x0;
}

Vec comul_k(const QuasiBialgebra& A, const Vec& x, int k) {
  if (k < 1) throw ShapeMismatch("comul_k needs k >= 1");
  Vec v = x;
  for (int j = 1; j < k; ++j) v = A.delta_at(v, j, 0);
  return v;
}

VerificationReport verify_quasibialgebra(const AlgebraData& d) {
  QuasiBialgebra A(d);
  VerificationReport rep;
  const int n = A.n();

  bool assoc = true, unital = true, dmult = true, emult = true, counital = true, quasi = true;
  for (int i = 0; i < n && assoc; ++i)
    for (int j = 0; j < n && assoc; ++j) {
      Vec ij = A.mul(A.e(i), A.e(j));
      for (int k = 0; k < n && assoc; ++k)
        assoc = A.mul(ij, A.e(k)) == A.mul(A.e(i), A.mul(A.e(j), A.e(k)));
    }
  rep.add("associativity", assoc);
  for (int i = 0; i < n; ++i)
    unital = unital && A.mul(A.one(), A.e(i)) == A.e(i) && A.mul(A.e(i), A.one()) == A.e(i);
  rep.add("unitality", unital);

  dmult = A.delta(A.one()) == A.one_k(2);
  emult = A.eps(A.one()).is_one();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec ij = A.mul(A.e(i), A.e(j));
      dmult = dmult && A.delta(ij) == A.mul_k(A.delta(A.e(i)), A.delta(A.e(j)), 2);
      emult = emult && A.eps(ij) == A.eps(A.e(i)) * A.eps(A.e(j));
    }
  rep.add("comultiplication_algebra_map", dmult);
  rep.add("counit_algebra_map", emult);
  for (int i = 0; i < n; ++i) {
    Vec di = A.delta(A.e(i));
    counital = counital && A.eps_at(di, 2, 0) == A.e(i) && A.eps_at(di, 2, 1) == A.e(i);
  }
  rep.add("counitality", counital);

  const Vec& phi = A.phi();
  const Vec one2 = A.one_k(2);
  if (!A.has_phi_inv()) {
    rep.add("phi_invertible", false, "phi has no inverse in A^3");
  } else {
    const Vec& inv = A.phi_inv();
    bool ok = A.mul_k(phi, inv, 3) == A.one_k(3) && A.mul_k(inv, phi, 3) == A.one_k(3);
    rep.add("phi_invertible", ok, ok ? "" : "supplied phi_inv is not a two-sided inverse");
  }

  Vec lhs = A.mul_k(A.delta_at(phi, 3, 2), A.delta_at(phi, 3, 0), 4);
  Vec rhs = A.mul_k(A.mul_k(tensor::kron(A.one(), phi), A.delta_at(phi, 3, 1), 4),
                    tensor::kron(phi, A.one()), 4);
  rep.add("phi_cocycle", lhs == rhs);
  rep.add("phi_counital", A.eps_at(phi, 3, 1) == one2);

  for (int i = 0; i < n && quasi; ++i) {
    Vec di = A.delta(A.e(i));
    quasi = A.mul_k(phi, A.delta_at(di, 2, 0), 3) == A.mul_k(A.delta_at(di, 2, 1), phi, 3);
  }
  rep.add("quasi_coassociativity", quasi);
  rep.add("phi_outer_counit", A.eps_at(phi, 3, 0) == one2 && A.eps_at(phi, 3, 2) == one2);
  if (A.has_phi_inv()) {
    const Vec& inv = A.phi_inv();
    bool ok = A.eps_at(inv, 3, 0) == one2 && A.eps_at(inv, 3, 1) == one2 &&
              A.eps_at(inv, 3, 2) == one2;
    rep.add("phi_inverse_counit", ok);
  } else {
    rep.add("phi_inverse_counit", false, "phi has no inverse");
  }
  return rep;
}

Mat endomorphism(const Vec& flat, int n, FieldSpec f) {
  Mat m(n, n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = f.from(flat[i * n + j]);
  return m;
}

Mat PreantipodeSet::member(int i) const {
  int n = particular.rows();
  Mat h = endomorphism(homogeneous.basis().col(i), n, particular.field());
  return particular + h;
}

namespace {

/// Residuals of the preantipode equations; zero exactly for a preantipode.
Vec preantipode_residual(const QuasiBialgebra& A, const Mat& S) {
  const int n = A.n();
  Vec out;
  auto Sx = [&](const Vec& x) { return S.apply(x); };
  for (int a = 0; a < n; ++a) {
    Vec da = A.delta(A.e(a));
    Scalar ea = A.eps(A.e(a));
    for (int b = 0; b < n; ++b) {
      Vec left = A.zero(), right = A.zero();
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Scalar& c = da[j * n + k];
          if (c.is_zero()) continue;
          Vec l = A.mul(Sx(A.mul(A.e(j), A.e(b))), A.e(k));
          Vec r = A.mul(A.e(j), Sx(A.mul(A.e(b), A.e(k))));
          for (int t = 0; t < n; ++t) {
            left[t].addmul(c, l[t]);
            right[t].addmul(c, r[t]);
          }
        }
      Vec sb = Sx(A.e(b));
      for (int t = 0; t < n; ++t) {
        left[t].submul(ea, sb[t]);
        right[t].submul(ea, sb[t]);
      }
      out.insert(out.end(), left.begin(), left.end());
      out.insert(out.end(), right.begin(), right.end());
    }
  }
  Vec phi_term = A.zero();
  const Vec& phi = A.phi();
  for (int I = 0; I < n * n * n; ++I) {
    if (phi[I].is_zero()) continue;
    int i1 = I / (n * n), i2 = (I / n) % n, i3 = I % n;
    Vec t = A.mul(A.mul(A.e(i1), Sx(A.e(i2))), A.e(i3));
    for (int r = 0; r < n; ++r) phi_term[r].addmul(phi[I], t[r]);
  }
  for (int r = 0; r < n; ++r) phi_term[r] -= A.one()[r];
  out.insert(out.end(), phi_term.begin(), phi_term.end());
  return out;
}

}  // namespace

std::optional<PreantipodeSet> solve_preantipode(const QuasiBialgebra& A) {
  const int n = A.n();
  FieldSpec f = A.field();
  Vec constant = preantipode_residual(A, Mat(n, n, f));
  Mat sys = tensor::from_columns(static_cast<int>(constant.size()), n * n, f, [&](int col) {
    Mat unit(n, n, f);
    unit(col / n, col % n) = f.one();
    Vec r = preantipode_residual(A, unit);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= constant[i];
    return r;
  });
  Vec rhs = constant;
  for (auto& s : rhs) s = -s;
  auto sol = la::solve_affine(sys, rhs);
  if (!sol) return std::nullopt;
  return PreantipodeSet{endomorphism(sol->x0, n, f), sol->homogeneous};
}

VerificationReport verify_preantipode(const QuasiBialgebra& A, const Mat& S) {
  const int n = A.n();
  VerificationReport rep;
  if (S.rows() != n || S.cols() != n) throw ShapeMismatch("preantipode must be n x n");
  Vec res = preantipode_residual(A, S);
  bool left = true, right = true;
  for (int pair = 0; pair < n * n; ++pair)
    for (int t = 0; t < n; ++t) {
      left = left && res[static_cast<std::size_t>(pair) * 2 * n + t].is_zero();
      right = right && res[static_cast<std::size_t>(pair) * 2 * n + n + t].is_zero();
    }
  bool phi_ok = true;
  for (int t = 0; t < n; ++t) phi_ok = phi_ok && res[res.size() - n + t].is_zero();
  rep.add("left_identity", left, "S(a1 b) a2 = eps(a) S(b)");
  rep.add("right_identity", right, "a1 S(b a2) = eps(a) S(b)");
  rep.add("phi_identity", phi_ok, "Phi1 S(Phi2) Phi3 = 1");

  bool cor = A.has_phi_inv();
  if (cor) {
    const Vec& inv = A.phi_inv();
    for (int a = 0; a < n && cor; ++a)
      for (int b = 0; b < n && cor; ++b) {
        Vec lhs = S.apply(A.mul(A.e(a), A.e(b)));
        Vec rhs = A.zero();
        for (int I = 0; I < n * n * n; ++I) {
          if (inv[I].is_zero()) continue;
          int i1 = I / (n * n), i2 = (I / n) % n, i3 = I % n;
          Vec t = A.mul(A.mul(S.apply(A.mul(A.e(i1), A.e(b))), A.e(i2)),
                        S.apply(A.mul(A.e(a), A.e(i3))));
          for (int r = 0; r < n; ++r) rhs[r].addmul(inv[I], t[r]);
        }
        cor = lhs == rhs;
      }
  }
  rep.add("corollary_identity", cor, "S(ab) = S(phi1 b) phi2 S(a phi3)");
  return rep;
}

VerificationReport verify_quasiantipode(const QuasiBialgebra& A, const Mat& s, const Vec& alpha,
                                        const Vec& beta) {
  const int n = A.n();
  VerificationReport rep;
  bool anti = s.apply(A.one()) == A.one();
  for (int a = 0; a < n && anti; ++a)
    for (int b = 0; b < n && anti; ++b)
      anti = s.apply(A.mul(A.e(a), A.e(b))) == A.mul(s.apply(A.e(b)), s.apply(A.e(a)));
  rep.add("anti_multiplicative", anti);

  bool ax_alpha = true, ax_beta = true;
  for (int a = 0; a < n; ++a) {
    Vec da = A.delta(A.e(a));
    Vec l = A.zero(), r = A.zero();
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& c = da[j * n + k];
        if (c.is_zero()) continue;
        Vec x = A.mul(A.mul(s.apply(A.e(j)), alpha), A.e(k));
        Vec y = A.mul(A.mul(A.e(j), beta), s.apply(A.e(k)));
        for (int t = 0; t < n; ++t) {
          l[t].addmul(c, x[t]);
          r[t].addmul(c, y[t]);
        }
      }
    Scalar ea = A.eps(A.e(a));
    Vec ea_alpha = alpha, ea_beta = beta;
    for (auto& v : ea_alpha) v *= ea;
    for (auto& v : ea_beta) v *= ea;
    ax_alpha = ax_alpha && l == ea_alpha;
    ax_beta = ax_beta && r == ea_beta;
  }
  rep.add("alpha_axiom", ax_alpha, "s(a1) alpha a2 = eps(a) alpha");
  rep.add("beta_axiom", ax_beta, "a1 beta s(a2) = eps(a) beta");

  auto contract = [&](const Vec& t3, auto&& term) {
    Vec acc = A.zero();
    for (int I = 0; I < n * n * n; ++I) {
      if (t3[I].is_zero()) continue;
      Vec v = term(I / (n * n), (I / n) % n, I % n);
      for (int r = 0; r < n; ++r) acc[r].addmul(t3[I], v[r]);
    }
    return acc;
  };
  Vec p1 = contract(A.phi(), [&](int i, int j, int k) {
    return A.mul(A.mul(A.mul(A.mul(A.e(i), beta), s.apply(A.e(j))), alpha), A.e(k));
  });
  rep.add("phi_beta_alpha", p1 == A.one(), "Phi1 beta s(Phi2) alpha Phi3 = 1");
  bool p2 = A.has_phi_inv();
  if (p2) {
    Vec v = contract(A.phi_inv(), [&](int i, int j, int k) {
      return A.mul(A.mul(A.mul(A.mul(s.apply(A.e(i)), alpha), A.e(j)), beta), s.apply(A.e(k)));
    });
    p2 = v == A.one();
  }
  rep.add("phi_inverse_alpha_beta", p2, "s(phi1) alpha phi2 beta s(phi3) = 1");
  return rep;
}

}  // namespace qhb::qba
