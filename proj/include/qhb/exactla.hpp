#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhb/errors.hpp"

namespace qhb::la {

/// Exact field element: a rational number, or a residue mod p when `modulus() > 0`.
/// A rational value combined with a residue is first reduced mod p.
/// Rationals whose numerator and denominator fit in 64 bits are kept unboxed.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : n_(v) {}  // NOLINT: integer literals are rationals
  Scalar(long v, std::uint32_t p);
  explicit Scalar(mpq_class v, std::uint32_t p = 0);
  Scalar(const Scalar& o) : n_(o.n_), d_(o.d_), p_(o.p_) {
    if (o.big_) copy_big(o);
  }
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& o) {
    n_ = o.n_;
    d_ = o.d_;
    p_ = o.p_;
    if (o.big_)
      copy_big(o);
    else
      big_.reset();
    return *this;
  }
  Scalar& operator=(Scalar&&) noexcept = default;
  ~Scalar() = default;

  std::uint32_t modulus() const { return p_; }
  mpq_class value() const;

  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }

  /// Value seen in the field of characteristic p (p = 0 returns *this).
  Scalar in_field(std::uint32_t p) const;

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  /// this -= a * b
  void submul(const Scalar& a, const Scalar& b);
  void addmul(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "a" or "a/b" in lowest terms; residues print as 0..p-1.
  std::string str() const;

 private:
  static std::uint32_t common(const Scalar& a, const Scalar& b);
  void copy_big(const Scalar& o);
  void assign(const mpq_class& v);
  void assign_fraction(__int128 num, __int128 den);
  void add_product(const Scalar& a, const Scalar& b, bool negate);
  void add(const Scalar& b, bool negate);

  // n_/d_ in lowest terms with d_ > 0 unless big_ is set; residues have d_ = 1, 0 <= n_ < p_
  std::int64_t n_ = 0, d_ = 1;
  std::unique_ptr<mpq_class> big_;
  std::uint32_t p_ = 0;
};

using Vec = std::vector<Scalar>;

class FieldSpec {
 public:
  FieldSpec() = default;
  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws UnsupportedField unless p is prime.
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const { return Scalar(0, p_); }
  Scalar one() const { return Scalar(1, p_); }
  Scalar from_int(long v) const { return Scalar(v, p_); }
  Scalar from(const Scalar& s) const { return s.in_field(p_); }
  /// Parses "a" or "a/b" (optional sign); throws ParseError.
  Scalar parse(std::string_view text) const;
  Vec zeros(std::size_t len) const { return Vec(len, zero()); }

  std::string name() const;
  friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.p_ == b.p_; }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return a.p_ != b.p_; }

 private:
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t p);

/// Dense row-major matrix over a FieldSpec.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, FieldSpec f = {});
  static Mat identity(int n, FieldSpec f = {});
  static Mat from_rows(const std::vector<std::vector<long>>& rows, FieldSpec f = {});
  static Mat column(const Vec& v, FieldSpec f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldSpec field() const { return field_; }

  Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const std::vector<Scalar>& data() const { return data_; }

  Vec col(int c) const;
  void set_col(int c, const Vec& v);
  Vec row(int r) const;
  Vec apply(const Vec& v) const;

  Mat transpose() const;
  Mat block(int r0, int c0, int nr, int nc) const;
  Mat hstack(const Mat& o) const;
  Mat vstack(const Mat& o) const;
  bool is_zero() const;
  bool is_identity() const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(const Scalar& s) const;
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

struct Rref {
  Mat form;
  std::vector<int> pivots;
  int rank = 0;
};

/// Gauss-Jordan elimination; rows are eliminated in parallel.
Rref rref(const Mat& m);
/// Reference single-threaded elimination with the same output.
Rref rref_serial(const Mat& m);

/// Parallel product that skips zero entries of the left factor.
Mat matmul(const Mat& a, const Mat& b);
Mat matmul_serial(const Mat& a, const Mat& b);

int rank(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
Mat kron(const Mat& a, const Mat& b);

/// Subspace with a canonical basis: columns whose transpose is in reduced row-echelon form.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int ambient, FieldSpec f);  // zero subspace
  static Subspace span(const Mat& columns);
  static Subspace full(int ambient, FieldSpec f);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.cols(); }
  FieldSpec field() const { return basis_.field(); }
  const Mat& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const { return coordinates(v).has_value(); }
  /// Coordinates in the canonical basis, or nullopt when v lies outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  /// Coordinates of every column of m; nullopt if some column lies outside.
  std::optional<Mat> coordinates(const Mat& m) const;

  Subspace intersect(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  int ambient_ = 0;
  Mat basis_;
  std::vector<int> pivots_;
};

Subspace nullspace(const Mat& m);
Subspace column_space(const Mat& m);

struct AffineSolution {
  Vec x0;
  Subspace homogeneous;
};
/// Particular solution with free variables set to zero, plus the kernel; nullopt when infeasible.
std::optional<AffineSolution> solve_affine(const Mat& m, const Vec& b);

struct QuotientData {
  Mat proj;     ///< ambient -> quotient, kernel = killed
  Mat section;  ///< quotient -> ambient, proj * section = 1
  Subspace killed;
  int dim() const { return proj.rows(); }
  /// Another section differing from `section` by vectors of `killed`.
  Mat alternative_section() const;
};
QuotientData quotient(int ambient, const Subspace& killed);

}  // namespace qhb::la
