#include "qhb/tensor.hpp"

namespace qhb::tensor {

int product(const std::vector<int>& dims) {
  int p = 1;
  for (int d : dims) p *= d;
  return p;
}

Vec unit_vec(int dim, int i, FieldSpec f) {
  Vec v = f.zeros(dim);
  v[i] = f.one();
  return v;
}

Vec kron(const Vec& a, const Vec& b) {
  la::Scalar zero = a.empty() ? la::Scalar() : a[0] - a[0];
  Vec out(a.size() * b.size(), zero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

Vec apply_at(const Mat& m, const Vec& v, const std::vector<int>& dims, int slot) {
  int pre = 1, post = 1;
  for (int r = 0; r < slot; ++r) pre *= dims[r];
  for (std::size_t r = slot + 1; r < dims.size(); ++r) post *= dims[r];
  const int d = dims[slot], e = m.rows();
  if (m.cols() != d) throw ShapeMismatch("apply_at: slot dimension");
  if (static_cast<int>(v.size()) != pre * d * post) throw ShapeMismatch("apply_at: vector length");
  Vec out = m.field().zeros(static_cast<std::size_t>(pre) * e * post);
  for (int a = 0; a < pre; ++a)
    for (int j = 0; j < d; ++j)
      for (int c = 0; c < post; ++c) {
        const auto& x = v[(static_cast<std::size_t>(a) * d + j) * post + c];
        if (x.is_zero()) continue;
        for (int i = 0; i < e; ++i) {
          const auto& y = m(i, j);
          if (!y.is_zero()) out[(static_cast<std::size_t>(a) * e + i) * post + c].addmul(y, x);
        }
      }
  return out;
}

namespace {

std::vector<int> slot_dims(const std::vector<const Family*>& fams) {
  std::vector<int> dims;
  for (const auto* fam : fams) dims.push_back(fam->at(0).rows());
  return dims;
}

void check_length(const Vec& x, const std::vector<const Family*>& fams) {
  std::size_t want = 1;
  for (const auto* fam : fams) want *= fam->size();
  if (x.size() != want) throw ShapeMismatch("tensor element length does not match the factors");
}

}  // namespace

Vec act(const Vec& x, const std::vector<const Family*>& fams, const Vec& v) {
  check_length(x, fams);
  const int k = static_cast<int>(fams.size());
  std::vector<int> dims = slot_dims(fams);
  FieldSpec f = fams[0]->at(0).field();
  Vec out = f.zeros(v.size());
  std::vector<int> idx(k);
  for (std::size_t flat = 0; flat < x.size(); ++flat) {
    if (x[flat].is_zero()) continue;
    std::size_t rest = flat;
    for (int r = k - 1; r >= 0; --r) {
      int n = static_cast<int>(fams[r]->size());
      idx[r] = static_cast<int>(rest % n);
      rest /= n;
    }
    Vec w = v;
    for (int r = 0; r < k; ++r) w = apply_at((*fams[r])[idx[r]], w, dims, r);
    for (std::size_t i = 0; i < w.size(); ++i) out[i].addmul(x[flat], w[i]);
  }
  return out;
}

Mat act_matrix(const Vec& x, const std::vector<const Family*>& fams, FieldSpec f) {
  check_length(x, fams);
  const int k = static_cast<int>(fams.size());
  std::vector<int> dims = slot_dims(fams);
  int total = product(dims);
  Mat out(total, total, f);
  struct Entry {
    int r, c;
    la::Scalar v;
  };
  // nonzero entries of every action matrix, computed once
  std::vector<std::vector<std::vector<Entry>>> nz(k);
  for (int r = 0; r < k; ++r)
    for (const Mat& m : *fams[r]) {
      std::vector<Entry> es;
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
          if (!m(i, j).is_zero()) es.push_back({i, j, m(i, j)});
      nz[r].push_back(std::move(es));
    }
  std::vector<int> idx(k);
  std::vector<Entry> cur, next;
  for (std::size_t flat = 0; flat < x.size(); ++flat) {
    if (x[flat].is_zero()) continue;
    std::size_t rest = flat;
    for (int r = k - 1; r >= 0; --r) {
      int n = static_cast<int>(fams[r]->size());
      idx[r] = static_cast<int>(rest % n);
      rest /= n;
    }
    cur.assign(1, Entry{0, 0, x[flat]});
    for (int r = 0; r < k && !cur.empty(); ++r) {
      next.clear();
      for (const auto& a : cur)
        for (const auto& b : nz[r][idx[r]])
          next.push_back({a.r * dims[r] + b.r, a.c * dims[r] + b.c, a.v * b.v});
      std::swap(cur, next);
    }
    for (const auto& e : cur) out(e.r, e.c) += e.v;
  }
  return out;
}

Mat kron_all(const std::vector<Mat>& ms) {
  Mat acc = ms.at(0);
  for (std::size_t i = 1; i < ms.size(); ++i) acc = la::kron(acc, ms[i]);
  return acc;
}

Mat permutation(const std::vector<int>& dims, const std::vector<int>& perm, FieldSpec f) {
  const int k = static_cast<int>(dims.size());
  int total = product(dims);
  std::vector<int> out_dims(k);
  for (int r = 0; r < k; ++r) out_dims[r] = dims[perm[r]];
  Mat m(total, total, f);
  std::vector<int> idx(k);
  for (int flat = 0; flat < total; ++flat) {
    int rest = flat;
    for (int r = k - 1; r >= 0; --r) {
      idx[r] = rest % dims[r];
      rest /= dims[r];
    }
    int target = 0;
    for (int r = 0; r < k; ++r) target = target * out_dims[r] + idx[perm[r]];
    m(target, flat) = f.one();
  }
  return m;
}

}  // namespace qhb::tensor
