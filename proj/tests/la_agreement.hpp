#pragma once
// Compares the exact solvers with exhaustive enumeration over small prime fields.

#include <random>
#include <set>

#include "oracles.hpp"
#include "qhb/exactla.hpp"

namespace agreement {

using qhb::la::FieldSpec;
using qhb::la::Mat;
using qhb::la::Vec;

inline Mat to_mat(const oracle::IntMat& m, int cols, FieldSpec f) {
  Mat out(static_cast<int>(m.size()), cols, f);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int j = 0; j < cols; ++j) out(static_cast<int>(i), j) = f.from_int(m[i][j]);
  return out;
}

inline std::vector<long> to_ints(const Vec& v) {
  std::vector<long> out;
  for (const auto& s : v) out.push_back(s.value().get_num().get_si());
  return out;
}

/// Every point x0 + span(H) enumerated over F_p.
inline std::set<std::vector<long>> affine_points(const Vec& x0, const Mat& h, long p) {
  std::set<std::vector<long>> pts;
  FieldSpec f = h.field();
  oracle::for_each_vector(h.cols(), p, [&](const std::vector<long>& c) {
    Vec x = x0;
    for (int j = 0; j < h.cols(); ++j)
      for (int i = 0; i < h.rows(); ++i) x[i] += h(i, j) * f.from_int(c[j]);
    pts.insert(to_ints(x));
  });
  return pts;
}

/// True if solve_affine and nullspace agree with enumeration on (m, b).
inline bool system_agrees(const oracle::IntMat& m, const std::vector<long>& b, int k, long p) {
  FieldSpec f = FieldSpec::prime(p);
  Mat lm = to_mat(m, k, f);
  Vec lb;
  for (long v : b) lb.push_back(f.from_int(v));
  auto brute = oracle::solutions(m, b, k, p);
  std::set<std::vector<long>> want(brute.begin(), brute.end());
  auto sol = qhb::la::solve_affine(lm, lb);
  if (!sol) {
    if (!want.empty()) return false;
  } else if (affine_points(sol->x0, sol->homogeneous.basis(), p) != want) {
    return false;
  }
  auto kernel = oracle::solutions(m, std::vector<long>(m.size(), 0), k, p);
  std::set<std::vector<long>> kwant(kernel.begin(), kernel.end());
  auto ns = qhb::la::nullspace(lm);
  return affine_points(f.zeros(k), ns.basis(), p) == kwant;
}

/// Exhaustive 2x2 systems plus seeded random systems with up to 4 unknowns.
inline int count_disagreements(long p, unsigned seed, int random_cases) {
  int bad = 0;
  oracle::for_each_vector(4, p, [&](const std::vector<long>& e) {
    oracle::IntMat m{{e[0], e[1]}, {e[2], e[3]}};
    oracle::for_each_vector(2, p, [&](const std::vector<long>& b) {
      if (!system_agrees(m, b, 2, p)) ++bad;
    });
  });
  std::mt19937 rng(seed);
  for (int t = 0; t < random_cases; ++t) {
    int k = 1 + static_cast<int>(rng() % 4);
    int r = 1 + static_cast<int>(rng() % 4);
    oracle::IntMat m(r, std::vector<long>(k));
    std::vector<long> b(r);
    for (auto& row : m)
      for (auto& x : row) x = static_cast<long>(rng() % p);
    for (auto& x : b) x = static_cast<long>(rng() % p);
    if (!system_agrees(m, b, k, p)) ++bad;
  }
  return bad;
}

}  // namespace agreement
