#include "qhb/exactla.hpp"

#include <cctype>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace qhb::la {

namespace {

void mod_reduce(mpq_class& v, std::uint32_t p) {
  mpz_class num = v.get_num();
  mpz_class den = v.get_den();
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), num.get_mpz_t(), p);
  if (den != 1) {
    mpz_class pd(p), inv;
    mpz_class dm;
    mpz_fdiv_r_ui(dm.get_mpz_t(), den.get_mpz_t(), p);
    if (mpz_invert(inv.get_mpz_t(), dm.get_mpz_t(), pd.get_mpz_t()) == 0)
      throw std::domain_error("denominator " + den.get_str() + " is not invertible mod " +
                              std::to_string(p));
    r *= inv;
    mpz_fdiv_r_ui(r.get_mpz_t(), r.get_mpz_t(), p);
  }
  v = mpq_class(r);
}

using i128 = __int128;

constexpr std::int64_t kMax = INT64_MAX;

bool fits(i128 x) { return x >= -kMax && x <= kMax; }

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) return gcd64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t abs64(std::int64_t x) { return x < 0 ? 0 - static_cast<std::uint64_t>(x) : x; }

mpz_class to_mpz(i128 x) {
  bool neg = x < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
  mpz_class hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod " + std::to_string(p));
  return t < 0 ? t + p : t;
}

std::int64_t residue(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

}  // namespace

Scalar::Scalar(long v, std::uint32_t p) : n_(v), p_(p) {
  if (p_ != 0) n_ = residue(v, p_);
}

Scalar::Scalar(mpq_class v, std::uint32_t p) : p_(p) {
  v.canonicalize();
  if (p_ != 0) {
    mod_reduce(v, p_);
    n_ = v.get_num().get_si();
  } else {
    assign(v);
  }
}

void Scalar::copy_big(const Scalar& o) {
  if (big_)
    *big_ = *o.big_;
  else
    big_ = std::make_unique<mpq_class>(*o.big_);
}

mpq_class Scalar::value() const {
  if (big_) return *big_;
  mpq_class v(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
  return v;
}

void Scalar::assign(const mpq_class& v) {
  const mpz_class& num = v.get_num();
  const mpz_class& den = v.get_den();
  if (num.fits_slong_p() && den.fits_slong_p() && num.get_si() != LONG_MIN) {
    big_.reset();
    n_ = num.get_si();
    d_ = den.get_si();
  } else {
    big_ = std::make_unique<mpq_class>(v);
    n_ = 0;
    d_ = 1;
  }
}

void Scalar::assign_fraction(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    big_.reset();
    n_ = 0;
    d_ = 1;
    return;
  }
  if (den != 1) {
    unsigned __int128 un = num < 0 ? -static_cast<unsigned __int128>(num) : static_cast<unsigned __int128>(num);
    auto g = static_cast<i128>(gcd128(un, static_cast<unsigned __int128>(den)));
    num /= g;
    den /= g;
  }
  if (fits(num) && fits(den)) {
    big_.reset();
    n_ = static_cast<std::int64_t>(num);
    d_ = static_cast<std::int64_t>(den);
  } else {
    mpq_class v(to_mpz(num), to_mpz(den));
    big_ = std::make_unique<mpq_class>(std::move(v));
  }
}

Scalar Scalar::in_field(std::uint32_t p) const {
  if (p == p_) return *this;
  if (p_ != 0) throw std::domain_error("mixed prime fields");
  if (big_) return Scalar(*big_, p);
  Scalar s;
  s.p_ = p;
  std::int64_t d = residue(d_, p);
  if (d == 0)
    throw std::domain_error("denominator " + std::to_string(d_) + " is not invertible mod " +
                            std::to_string(p));
  s.n_ = static_cast<std::int64_t>(static_cast<i128>(residue(n_, p)) * mod_inverse(d, p) % p);
  return s;
}

std::uint32_t Scalar::common(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_;
  if (a.p_ == 0) return b.p_;
  if (b.p_ == 0) return a.p_;
  throw std::domain_error("mixed prime fields");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar s;
  s.p_ = p_;
  if (p_ != 0) {
    s.n_ = mod_inverse(n_, p_);
  } else if (big_) {
    s.assign(1 / *big_);
  } else if (n_ < 0) {
    s.n_ = -d_;
    s.d_ = -n_;
  } else {
    s.n_ = d_;
    s.d_ = n_;
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ != 0)
    s.n_ = n_ == 0 ? 0 : p_ - n_;
  else if (big_)
    *s.big_ = -*big_;
  else
    s.n_ = -n_;
  return s;
}

void Scalar::add(const Scalar& b, bool negate) {
  if (p_ != 0) {
    n_ = negate ? n_ - b.n_ : n_ + b.n_;
    if (n_ < 0) n_ += p_;
    if (n_ >= p_) n_ -= p_;
    return;
  }
  if (big_ || b.big_) {
    mpq_class v = value();
    if (negate)
      v -= b.value();
    else
      v += b.value();
    assign(v);
    return;
  }
  i128 bn = negate ? -static_cast<i128>(b.n_) : static_cast<i128>(b.n_);
  if (d_ == 1 && b.d_ == 1) {
    i128 sum = n_ + bn;
    if (fits(sum)) {
      n_ = static_cast<std::int64_t>(sum);
      return;
    }
    assign_fraction(sum, 1);
    return;
  }
  assign_fraction(static_cast<i128>(n_) * b.d_ + bn * d_, static_cast<i128>(d_) * b.d_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::uint32_t p = common(*this, o);
  if (p_ != p) *this = in_field(p);
  if (o.p_ != p)
    add(o.in_field(p), false);
  else
    add(o, false);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  std::uint32_t p = common(*this, o);
  if (p_ != p) *this = in_field(p);
  if (o.p_ != p)
    add(o.in_field(p), true);
  else
    add(o, true);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  std::uint32_t p = common(*this, o);
  if (p_ != p) *this = in_field(p);
  if (o.p_ != p) return *this *= o.in_field(p);
  if (p_ != 0) {
    n_ = static_cast<std::int64_t>(static_cast<i128>(n_) * o.n_ % p_);
    return *this;
  }
  if (is_zero() || o.is_zero()) {
    big_.reset();
    n_ = 0;
    d_ = 1;
    return *this;
  }
  if (big_ || o.big_) {
    assign(value() * o.value());
    return *this;
  }
  std::int64_t g1 = static_cast<std::int64_t>(gcd64(abs64(n_), static_cast<std::uint64_t>(o.d_)));
  std::int64_t g2 = static_cast<std::int64_t>(gcd64(abs64(o.n_), static_cast<std::uint64_t>(d_)));
  i128 num = static_cast<i128>(n_ / g1) * (o.n_ / g2);
  i128 den = static_cast<i128>(d_ / g2) * (o.d_ / g1);
  if (fits(num) && fits(den)) {
    n_ = static_cast<std::int64_t>(num);
    d_ = static_cast<std::int64_t>(den);
  } else {
    assign_fraction(num, den);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  std::uint32_t p = common(*this, o);
  if (p_ != p) *this = in_field(p);
  return *this *= o.in_field(p).inverse();
}

void Scalar::add_product(const Scalar& a, const Scalar& b, bool negate) {
  if (a.is_zero() || b.is_zero()) return;
  if (p_ != 0 && p_ == a.p_ && p_ == b.p_) {
    std::int64_t t = static_cast<std::int64_t>(static_cast<i128>(a.n_) * b.n_ % p_);
    n_ = negate ? n_ - t : n_ + t;
    if (n_ < 0) n_ += p_;
    if (n_ >= p_) n_ -= p_;
    return;
  }
  if (p_ == 0 && a.p_ == 0 && b.p_ == 0 && !big_ && !a.big_ && !b.big_ && d_ == 1 && a.d_ == 1 &&
      b.d_ == 1) {
    i128 t = static_cast<i128>(a.n_) * b.n_;
    i128 sum = negate ? n_ - t : n_ + t;
    if (fits(sum)) {
      n_ = static_cast<std::int64_t>(sum);
      return;
    }
  }
  Scalar t = a;
  t *= b;
  if (negate)
    *this -= t;
  else
    *this += t;
}

void Scalar::submul(const Scalar& a, const Scalar& b) { add_product(a, b, true); }

void Scalar::addmul(const Scalar& a, const Scalar& b) { add_product(a, b, false); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) {
    std::uint32_t p = Scalar::common(a, b);
    return a.in_field(p) == b.in_field(p);
  }
  if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
  return a.n_ == b.n_ && a.d_ == b.d_;
}

std::string Scalar::str() const {
  if (big_) return big_->get_str();
  if (d_ == 1) return std::to_string(n_);
  return std::to_string(n_) + "/" + std::to_string(d_);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > 0x7fffffffULL || !is_prime(p))
    throw UnsupportedField("modulus " + std::to_string(p) + " is not a supported prime");
  FieldSpec f;
  f.p_ = static_cast<std::uint32_t>(p);
  return f;
}

std::string FieldSpec::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Scalar FieldSpec::parse(std::string_view text) const {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string body = s;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) body = body.substr(1);
  std::size_t slash = body.find('/');
  std::string num = body.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw ParseError("malformed scalar '" + s + "'");
  mpz_class dz(den);
  if (dz == 0) throw ParseError("zero denominator in scalar '" + s + "'");
  mpq_class q(mpz_class(num), dz);
  q.canonicalize();
  if (s[0] == '-') q = -q;
  try {
    return Scalar(q, p_);
  } catch (const std::domain_error& err) {
    throw ParseError(std::string("scalar '") + s + "': " + err.what());
  }
}

// ---------------------------------------------------------------- Mat

Mat::Mat(int rows, int cols, FieldSpec f)
    : rows_(rows), cols_(cols), field_(f),
      data_(static_cast<std::size_t>(rows) * cols, f.zero()) {
  if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix dimension");
}

Mat Mat::identity(int n, FieldSpec f) {
  Mat m(n, n, f);
  for (int i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<long>>& rows, FieldSpec f) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Mat m(r, c, f);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw ShapeMismatch("ragged rows");
    for (int j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

Mat Mat::column(const Vec& v, FieldSpec f) {
  Mat m(static_cast<int>(v.size()), 1, f);
  for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = f.from(v[i]);
  return m;
}

Vec Mat::col(int c) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

void Mat::set_col(int c, const Vec& v) {
  if (static_cast<int>(v.size()) != rows_) throw ShapeMismatch("set_col length");
  for (int i = 0; i < rows_; ++i) (*this)(i, c) = field_.from(v[i]);
}

Vec Mat::row(int r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
             data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw ShapeMismatch("apply: length mismatch");
  Vec out = field_.zeros(rows_);
  for (int j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < rows_; ++i)
      if (!(*this)(i, j).is_zero()) out[i].addmul((*this)(i, j), v[j]);
  }
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_) throw ShapeMismatch("block");
  Mat b(nr, nc, field_);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

Mat Mat::hstack(const Mat& o) const {
  if (o.rows_ != rows_) throw ShapeMismatch("hstack");
  Mat m(rows_, cols_ + o.cols_, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (int j = 0; j < o.cols_; ++j) m(i, cols_ + j) = o(i, j);
  }
  return m;
}

Mat Mat::vstack(const Mat& o) const {
  if (o.cols_ != cols_) throw ShapeMismatch("vstack");
  Mat m(rows_ + o.rows_, cols_, field_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return m;
}

bool Mat::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& s = (*this)(i, j);
      if (i == j ? !s.is_one() : !s.is_zero()) return false;
    }
  return true;
}

Mat Mat::operator+(const Mat& o) const {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw ShapeMismatch("matrix sum");
  Mat m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw ShapeMismatch("matrix difference");
  Mat m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
  return m;
}

Mat Mat::operator*(const Mat& o) const { return matmul(*this, o); }

Mat Mat::scaled(const Scalar& s) const {
  Mat m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (a.data_[i] != b.data_[i]) return false;
  return true;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

// ------------------------------------------------------- derived ops

int rank(const Mat& m) { return rref(m).rank; }

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Rref r = rref(m.hstack(Mat::identity(n, m.field())));
  if (n > 0 && (r.rank < n || r.pivots[n - 1] != n - 1)) return std::nullopt;
  return r.form.block(0, n, n, n);
}

Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) {
          if (b(r, c).is_zero()) continue;
          k(i * b.rows() + r, j * b.cols() + c) = x * b(r, c);
        }
    }
  return k;
}

// ------------------------------------------------------ Subspace

Subspace::Subspace(int ambient, FieldSpec f) : ambient_(ambient), basis_(ambient, 0, f) {}

Subspace Subspace::full(int ambient, FieldSpec f) { return span(Mat::identity(ambient, f)); }

Subspace Subspace::span(const Mat& columns) {
  Subspace s(columns.rows(), columns.field());
  if (columns.cols() == 0) return s;
  Rref r = rref(columns.transpose());
  s.basis_ = r.form.block(0, 0, r.rank, columns.rows()).transpose();
  s.pivots_ = r.pivots;
  return s;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw ShapeMismatch("coordinates: ambient mismatch");
  Vec c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = field().from(v[pivots_[i]]);
  Vec back = basis_.apply(c);
  for (int i = 0; i < ambient_; ++i)
    if (back[i] != v[i]) return std::nullopt;
  return c;
}

std::optional<Mat> Subspace::coordinates(const Mat& m) const {
  Mat out(dim(), m.cols(), field());
  for (int j = 0; j < m.cols(); ++j) {
    auto c = coordinates(m.col(j));
    if (!c) return std::nullopt;
    out.set_col(j, *c);
  }
  return out;
}

Subspace Subspace::sum(const Subspace& o) const { return span(basis_.hstack(o.basis_)); }

Subspace Subspace::intersect(const Subspace& o) const {
  if (dim() == 0 || o.dim() == 0) return Subspace(ambient_, field());
  Subspace k = nullspace(basis_.hstack(o.basis_.scaled(field().from_int(-1))));
  Mat top = k.basis().block(0, 0, dim(), k.dim());
  return span(basis_ * top);
}

Subspace nullspace(const Mat& m) {
  Rref r = rref(m);
  FieldSpec f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  int nfree = m.cols() - r.rank;
  if (nfree == 0) return Subspace(m.cols(), f);
  Mat vecs(m.cols(), nfree, f);
  int k = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    vecs(c, k) = f.one();
    for (int i = 0; i < r.rank; ++i) vecs(r.pivots[i], k) = -r.form(i, c);
    ++k;
  }
  return Subspace::span(vecs);
}

Subspace column_space(const Mat& m) { return Subspace::span(m); }

std::optional<AffineSolution> solve_affine(const Mat& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw ShapeMismatch("solve_affine: rhs length");
  FieldSpec f = m.field();
  Mat aug = m.hstack(Mat::column(b, f));
  Rref r = rref(aug);
  if (r.rank > 0 && r.pivots.back() == m.cols()) return std::nullopt;
  AffineSolution sol;
  sol.x0 = f.zeros(m.cols());
  for (int i = 0; i < r.rank; ++i) sol.x0[r.pivots[i]] = r.form(i, m.cols());
  sol.homogeneous = nullspace(m);
  return sol;
}

QuotientData quotient(int ambient, const Subspace& killed) {
  if (killed.ambient() != ambient) throw ShapeMismatch("quotient: ambient mismatch");
  FieldSpec f = killed.field();
  std::vector<bool> is_pivot(ambient, false);
  for (int p : killed.pivots()) is_pivot[p] = true;
  std::vector<int> rest;
  for (int j = 0; j < ambient; ++j)
    if (!is_pivot[j]) rest.push_back(j);
  int q = static_cast<int>(rest.size());
  QuotientData d;
  d.killed = killed;
  d.proj = Mat(q, ambient, f);
  d.section = Mat(ambient, q, f);
  const Mat& kb = killed.basis();
  for (int t = 0; t < q; ++t) {
    d.proj(t, rest[t]) = f.one();
    for (int i = 0; i < killed.dim(); ++i) d.proj(t, killed.pivots()[i]) = -kb(rest[t], i);
    d.section(rest[t], t) = f.one();
  }
  return d;
}

Mat QuotientData::alternative_section() const {
  if (killed.dim() == 0) return section;
  FieldSpec f = section.field();
  Mat ones(killed.dim(), section.cols(), f);
  for (int i = 0; i < ones.rows(); ++i)
    for (int j = 0; j < ones.cols(); ++j) ones(i, j) = f.from_int(i + j + 1);
  return section + killed.basis() * ones;
}

}  // namespace qhb::la
