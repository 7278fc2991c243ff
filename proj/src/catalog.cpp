#include "qhb/catalog.hpp"

#include <functional>

namespace qhb::catalog {

using qba::AlgebraData;
using qba::FieldSpec;
using qba::Scalar;
using qba::Vec;

namespace {

std::size_t idx3(int n, int i, int j, int k) {
  return (static_cast<std::size_t>(i) * n + j) * n + k;
}

AlgebraData blank(FieldSpec f, int n, std::vector<std::string> labels) {
  AlgebraData d;
  d.field = f;
  d.n = n;
  d.labels = std::move(labels);
  std::size_t n3 = static_cast<std::size_t>(n) * n * n;
  d.mult = f.zeros(n3);
  d.comul = f.zeros(n3);
  d.phi = f.zeros(n3);
  d.unit = f.zeros(n);
  d.counit = f.zeros(n);
  return d;
}

void trivial_phi(AlgebraData& d, int unit_index) {
  d.phi[idx3(d.n, unit_index, unit_index, unit_index)] = d.field.one();
}

/// Monoid algebra with group-like basis; op(i, j) is the product index.
AlgebraData monoid(FieldSpec f, std::vector<std::string> labels, int unit_index,
                   const std::function<int(int, int)>& op) {
  int n = static_cast<int>(labels.size());
  AlgebraData d = blank(f, n, std::move(labels));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) d.mult[idx3(n, i, j, op(i, j))] = f.one();
    d.comul[idx3(n, i, i, i)] = f.one();
    d.counit[i] = f.one();
  }
  d.unit[unit_index] = f.one();
  trivial_phi(d, unit_index);
  return d;
}

void require_odd(FieldSpec f, const std::string& family) {
  if (f.characteristic() == 2)
    throw UnsupportedField(family + " requires characteristic different from 2");
}

AlgebraData kz2(FieldSpec f, bool twisted) {
  require_odd(f, twisted ? "kz2_twisted" : "kz2_group");
  AlgebraData d = monoid(f, {"1", "g"}, 0, [](int i, int j) { return (i + j) % 2; });
  if (twisted) {
    // Phi = 1(x)1(x)1 - 2 p(x)p(x)p with p = (1 - g)/2
    Scalar quarter = f.one() / f.from_int(4);
    for (int I = 0; I < 8; ++I) {
      int parity = ((I >> 2) + (I >> 1) + I) & 1;
      Scalar c = parity ? quarter : -quarter;
      d.phi[I] = (I == 0 ? f.one() : f.zero()) + c;
    }
  }
  return d;
}

AlgebraData sweedler(FieldSpec f) {
  // basis g^a x^b at index 2b + a: 1, g, x, gx
  AlgebraData d = blank(f, 4, {"1", "g", "x", "gx"});
  auto index = [](int a, int b) { return 2 * b + a; };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int a = i % 2, b = i / 2, c = j % 2, e = j / 2;
      if (b + e >= 2) continue;
      int sign = (b * c) % 2 ? -1 : 1;
      d.mult[idx3(4, i, j, index((a + c) % 2, b + e))] = f.from_int(sign);
    }
  d.unit[0] = f.one();
  d.counit[0] = f.one();
  d.counit[1] = f.one();
  d.comul[idx3(4, 0, 0, 0)] = f.one();
  d.comul[idx3(4, 1, 1, 1)] = f.one();
  d.comul[idx3(4, 2, 2, 0)] = f.one();  // x (x) 1
  d.comul[idx3(4, 2, 1, 2)] = f.one();  // g (x) x
  d.comul[idx3(4, 3, 3, 1)] = f.one();  // gx (x) g
  d.comul[idx3(4, 3, 0, 3)] = f.one();  // 1 (x) gx
  trivial_phi(d, 0);
  return d;
}

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {"kz2_group", "kz2_group", FieldSpec(), "group algebra of Z2, trivial associator"},
      {"kz2_twisted", "kz2_twisted", FieldSpec(),
       "group algebra of Z2 with Phi = 1(x)1(x)1 - 2 p(x)p(x)p, p = (1 - g)/2"},
      {"idempotent_monoid", "idempotent_monoid", FieldSpec(),
       "k{1, e} with e^2 = e, group-like coproduct; bialgebra without antipode"},
      {"sweedler4", "sweedler4", FieldSpec(), "Sweedler's four-dimensional Hopf algebra"},
      {"kz4_monoid", "kz4_monoid", FieldSpec(),
       "monoid algebra of Z4 under multiplication; bialgebra without antipode"},
      {"kz2_twisted_f3", "kz2_twisted", FieldSpec::prime(3), "kz2_twisted over F3"},
      {"idempotent_monoid_f5", "idempotent_monoid", FieldSpec::prime(5),
       "idempotent_monoid over F5"},
  };
  return list;
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.push_back(e.name);
  return out;
}

AlgebraData build(const std::string& family, FieldSpec f) {
  if (family == "kz2_group") return kz2(f, false);
  if (family == "kz2_twisted") return kz2(f, true);
  if (family == "idempotent_monoid")
    return monoid(f, {"1", "e"}, 0, [](int i, int j) { return i | j; });
  if (family == "sweedler4") return sweedler(f);
  if (family == "kz4_monoid")
    return monoid(f, {"0", "1", "2", "3"}, 1, [](int i, int j) { return (i * j) % 4; });
  throw ParseError("unknown catalog family '" + family + "'");
}

AlgebraData data(const std::string& name) {
  for (const auto& e : entries())
    if (e.name == name) return build(e.family, e.field);
  throw ParseError("unknown catalog entry '" + name + "'");
}

qba::QuasiBialgebra load(const std::string& name) { return qba::QuasiBialgebra(data(name)); }

AlgebraData ground_field(FieldSpec f) {
  AlgebraData d = blank(f, 1, {"1"});
  d.mult[0] = d.comul[0] = d.phi[0] = d.unit[0] = d.counit[0] = f.one();
  return d;
}

AlgebraData corrupt_mult(AlgebraData d, int flat_index) {
  d.mult.at(flat_index) += d.field.one();
  return d;
}

AntipodeData standard_antipode(const std::string& family, FieldSpec f) {
  AntipodeData out;
  if (family == "kz2_group") {
    out.s = qba::Mat::identity(2, f);
    out.alpha = out.beta = Vec{f.one(), f.zero()};
  } else if (family == "sweedler4") {
    // S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x
    out.s = qba::Mat(4, 4, f);
    out.s(0, 0) = f.one();
    out.s(1, 1) = f.one();
    out.s(3, 2) = f.from_int(-1);
    out.s(2, 3) = f.one();
    out.alpha = out.beta = Vec{f.one(), f.zero(), f.zero(), f.zero()};
  } else {
    throw ParseError("no standard antipode recorded for '" + family + "'");
  }
  return out;
}

}  // namespace qhb::catalog
