#include <random>

#include "doctest.h"
#include "la_agreement.hpp"
#include "qhb/exactla.hpp"

using namespace qhb::la;

namespace {

Mat random_mat(std::mt19937& rng, int r, int c, FieldSpec f, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat m(r, c, f);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = f.from_int(d(rng));
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic over Q and F_p") {
  FieldSpec q;
  Scalar a = q.parse("3/4"), b = q.parse("-1/6");
  CHECK((a + b).str() == "7/12");
  CHECK((a * b).str() == "-1/8");
  CHECK((a / b).str() == "-9/2");
  CHECK(q.parse("6/8") == a);
  CHECK(q.parse(" +2 ").str() == "2");
  CHECK_THROWS_AS(q.parse("1/0"), qhb::ParseError);
  CHECK_THROWS_AS(q.parse("x"), qhb::ParseError);
  CHECK_THROWS_AS(q.parse("1.5"), qhb::ParseError);

  FieldSpec f5 = FieldSpec::prime(5);
  CHECK(f5.parse("1/2").str() == "3");
  CHECK(f5.parse("-1").str() == "4");
  CHECK((f5.from_int(3) * f5.from_int(4)).str() == "2");
  CHECK(f5.from_int(2).inverse().str() == "3");
  CHECK(f5.from_int(7) == f5.from_int(2));
  // a rational literal meets a residue
  CHECK((f5.from_int(1) + Scalar(mpq_class(1, 2))).str() == "4");
  CHECK_THROWS_AS(f5.parse("1/5"), qhb::ParseError);
  CHECK_THROWS_AS(FieldSpec::prime(4), qhb::UnsupportedField);
  CHECK_THROWS_AS(FieldSpec::prime(1), qhb::UnsupportedField);
  CHECK_THROWS(FieldSpec::prime(3).one() + FieldSpec::prime(5).one());
  CHECK_THROWS(q.zero().inverse());
}

TEST_CASE("scalars past 64 bits agree with GMP") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> big(-(1L << 62), 1L << 62), small(1, 1L << 40);
  for (int trial = 0; trial < 200; ++trial) {
    long p = big(rng), q = small(rng), r = big(rng), s = small(rng);
    Scalar a(mpq_class(p, q)), b(mpq_class(r, s));
    mpq_class x(p, q), y(r, s);
    x.canonicalize();
    y.canonicalize();
    CHECK((a + b).value() == x + y);
    CHECK((a - b).value() == x - y);
    CHECK((a * b).value() == x * y);
    if (r != 0) CHECK((a / b).value() == x / y);
    Scalar c = a;
    c.addmul(a, b);
    c.submul(b, b);
    CHECK(c.value() == x + x * y - y * y);
    // products that fall back into 64 bits compare equal to freshly built values
    Scalar back = (a * b) / b;
    if (r != 0) CHECK(back == a);
  }
  Scalar huge(mpq_class("123456789012345678901234567890"));
  CHECK(huge.str() == "123456789012345678901234567890");
  CHECK((huge - huge).is_zero());
  CHECK((huge / huge).is_one());
  CHECK(huge.in_field(7).str() == std::to_string(mpz_class(mpz_class("123456789012345678901234567890") % 7).get_si()));
}

TEST_CASE("rref examples") {
  Rref id = rref(Mat::identity(3));
  CHECK(id.form == Mat::identity(3));
  CHECK(id.rank == 3);
  Rref z = rref(Mat(2, 4));
  CHECK(z.form == Mat(2, 4));
  CHECK(z.rank == 0);
  Rref r = rref(Mat::from_rows({{1, 2}, {2, 4}}));
  CHECK(r.form == Mat::from_rows({{1, 2}, {0, 0}}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<int>{0});
}

TEST_CASE("parallel and serial kernels agree") {
  std::mt19937 rng(7);
  for (FieldSpec f : {FieldSpec(), FieldSpec::prime(3), FieldSpec::prime(5)}) {
    for (int t = 0; t < 20; ++t) {
      int r = 1 + static_cast<int>(rng() % 40), c = 1 + static_cast<int>(rng() % 40);
      Mat m = random_mat(rng, r, c, f);
      if (t % 3 == 0) m = m.vstack(m);  // force dependent rows
      Rref a = rref(m), b = rref_serial(m);
      CHECK(a.form == b.form);
      CHECK(a.pivots == b.pivots);
      Mat n = random_mat(rng, c, 1 + static_cast<int>(rng() % 30), f);
      CHECK(matmul(m, n) == matmul_serial(m, n));
    }
  }
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(Mat::identity(4)).dim() == 0);
  Subspace full = nullspace(Mat(2, 3));
  CHECK(full.dim() == 3);
  CHECK(full == Subspace::full(3, FieldSpec()));
  FieldSpec f3 = FieldSpec::prime(3);
  Subspace s = nullspace(Mat::from_rows({{1, 1}}, f3));
  CHECK(s.dim() == 1);
  CHECK(s.basis() == Mat::from_rows({{1}, {2}}, f3));
}

TEST_CASE("nullspace and rank properties on random rational matrices") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    int r = 1 + static_cast<int>(rng() % 7), c = 1 + static_cast<int>(rng() % 7);
    Mat m = random_mat(rng, r, c, FieldSpec(), -2, 2);
    Subspace ns = nullspace(m);
    CHECK((m * ns.basis()).is_zero());
    CHECK(rank(m) + ns.dim() == c);
  }
}

TEST_CASE("solve_affine examples") {
  Vec b{Scalar(3), Scalar(-1)};
  auto s = solve_affine(Mat::identity(2), b);
  REQUIRE(s);
  CHECK(s->x0 == b);
  CHECK(s->homogeneous.dim() == 0);
  CHECK_FALSE(solve_affine(Mat(1, 2), Vec{Scalar(1)}));
  auto t = solve_affine(Mat::from_rows({{1, 1}}), Vec{Scalar(2)});
  REQUIRE(t);
  CHECK(t->x0 == Vec{Scalar(2), Scalar(0)});
  CHECK(t->homogeneous.basis() == Mat::from_rows({{1}, {-1}}));
}

TEST_CASE("solve_affine solutions satisfy the system") {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
    Mat m = random_mat(rng, r, c, FieldSpec(), -2, 2);
    Vec x = random_mat(rng, c, 1, FieldSpec()).col(0);
    Vec b = m.apply(x);
    auto s = solve_affine(m, b);
    REQUIRE(s);
    CHECK(m.apply(s->x0) == b);
    CHECK((m * s->homogeneous.basis()).is_zero());
  }
}

TEST_CASE("exhaustive agreement over F2 and F3") {
  CHECK(agreement::count_disagreements(2, 101, 300) == 0);
  CHECK(agreement::count_disagreements(3, 202, 200) == 0);
}

TEST_CASE("quotient examples and properties") {
  FieldSpec q;
  QuotientData none = quotient(3, Subspace(3, q));
  CHECK(none.proj == Mat::identity(3));
  QuotientData all = quotient(3, Subspace::full(3, q));
  CHECK(all.dim() == 0);
  QuotientData d = quotient(2, Subspace::span(Mat::from_rows({{1}, {1}})));
  CHECK(d.dim() == 1);
  CHECK(d.proj.apply(Vec{Scalar(1), Scalar(1)}) == Vec{Scalar(0)});

  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    int amb = 1 + static_cast<int>(rng() % 6);
    Mat gens = random_mat(rng, amb, static_cast<int>(rng() % 4), q, -2, 2);
    Subspace k = Subspace::span(gens);
    QuotientData qd = quotient(amb, k);
    CHECK((qd.proj * qd.section).is_identity());
    CHECK((qd.proj * qd.alternative_section()).is_identity());
    CHECK(nullspace(qd.proj) == k);
  }
}

TEST_CASE("kron examples and mixed product") {
  CHECK(kron(Mat::identity(2), Mat::identity(3)) == Mat::identity(6));
  CHECK(kron(Mat::from_rows({{1, 2}}), Mat(2, 2)).is_zero());
  CHECK(kron(Mat::from_rows({{2}}), Mat::from_rows({{1, 1}})) == Mat::from_rows({{2, 2}}));
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    Mat a = random_mat(rng, 2, 3, FieldSpec()), c = random_mat(rng, 3, 2, FieldSpec());
    Mat b = random_mat(rng, 2, 2, FieldSpec()), d = random_mat(rng, 2, 3, FieldSpec());
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  }
  // index convention: e_i (x) e_j sits at i*n + j
  Mat e1 = Mat::from_rows({{0}, {1}}), e0 = Mat::from_rows({{1}, {0}});
  Mat k = kron(e1, e0);
  CHECK(k(2, 0).is_one());
}

TEST_CASE("inverse and subspace operations") {
  auto inv = inverse(Mat::from_rows({{2, 1}, {1, 1}}));
  REQUIRE(inv);
  CHECK(*inv == Mat::from_rows({{1, -1}, {-1, 2}}));
  CHECK_FALSE(inverse(Mat::from_rows({{1, 2}, {2, 4}})));
  CHECK_FALSE(inverse(Mat(2, 3)));
  FieldSpec q;
  Subspace a = Subspace::span(Mat::from_rows({{1, 0}, {0, 1}, {0, 0}}));
  Subspace b = Subspace::span(Mat::from_rows({{0, 1}, {1, 0}, {0, 1}}));
  CHECK(a.intersect(b).dim() == 1);
  CHECK(a.sum(b) == Subspace::full(3, q));
  auto c = a.coordinates(Vec{Scalar(2), Scalar(5), Scalar(0)});
  REQUIRE(c);
  CHECK(*c == Vec{Scalar(2), Scalar(5)});
  CHECK_FALSE(a.contains(Vec{Scalar(0), Scalar(0), Scalar(1)}));
}
