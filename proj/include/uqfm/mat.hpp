#pragma once
/// \file mat.hpp
/// Sparse matrices over an arbitrary ring R (sparse so that operator-valued
/// entries that are zero never enter products).  R must provide +, -, *,
/// default-construct to zero, == and a free is_zero(R).
///
/// Tensor-leg conventions: a space V_0 (x) V_1 (x) ... (x) V_{n-1} with
/// dimensions dims[i] is flattened row-major, i.e. leg 0 is the most
/// significant index.  tensor_place embeds an operator acting on a subset of
/// legs (in the listed order) as identity on the others.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uqfm {

template <class R>
class Mat {
 public:
  int rows = 0, cols = 0;
  std::map<std::pair<int, int>, R> t;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c) {}

  static Mat identity(int n, const R& one) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.t.emplace(std::make_pair(i, i), one);
    return m;
  }

  R get(int i, int j) const {
    auto it = t.find({i, j});
    return it == t.end() ? R{} : it->second;
  }
  void set(int i, int j, const R& v) {
    check_index(i, j);
    using uqfm::is_zero;
    if (is_zero(v))
      t.erase({i, j});
    else
      t.insert_or_assign(std::make_pair(i, j), v);
  }
  void add(int i, int j, const R& v) {
    check_index(i, j);
    using uqfm::is_zero;
    if (is_zero(v)) return;
    auto it = t.find({i, j});
    if (it == t.end()) {
      t.emplace(std::make_pair(i, j), v);
    } else {
      it->second += v;
      if (is_zero(it->second)) t.erase(it);
    }
  }

  bool is_zero() const { return t.empty(); }
  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && t == o.t;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  // A default-constructed (0x0) matrix acts as the additive identity so
  // generic accumulators can start from Mat{} without knowing the shape.
  Mat& operator+=(const Mat& o) {
    if (o.rows == 0 && o.cols == 0) return *this;
    if (rows == 0 && cols == 0) return *this = o;
    check_shape(o);
    for (const auto& [ij, v] : o.t) add(ij.first, ij.second, v);
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    if (o.rows == 0 && o.cols == 0) return *this;
    if (rows == 0 && cols == 0) return *this = -o;
    check_shape(o);
    for (const auto& [ij, v] : o.t) add(ij.first, ij.second, -v);
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(const Mat& a) {
    Mat r(a.rows, a.cols);
    for (const auto& [ij, v] : a.t) r.t.emplace(ij, -v);
    return r;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw std::logic_error("Mat: shape mismatch in *");
    Mat r(a.rows, b.cols);
    for (const auto& [ij, va] : a.t)
      for (const auto& [kl, vb] : b.t) {
        if (ij.second != kl.first) continue;
        r.add(ij.first, kl.second, va * vb);
      }
    return r;
  }

  /// Scalar multiple with the scalar on the left of every entry.
  Mat scaled(const R& s) const {
    Mat r(rows, cols);
    for (const auto& [ij, v] : t) r.add(ij.first, ij.second, s * v);
    return r;
  }

  /// Plain entry sum over the diagonal.
  R trace() const {
    if (rows != cols) throw std::logic_error("Mat::trace: not square");
    R s{};
    for (const auto& [ij, v] : t)
      if (ij.first == ij.second) s += v;
    return s;
  }

  /// Entry-wise image under f (R -> R2).
  template <class R2, class F>
  Mat<R2> map(F f) const {
    Mat<R2> r(rows, cols);
    for (const auto& [ij, v] : t) r.add(ij.first, ij.second, f(v));
    return r;
  }

 private:
  void check_index(int i, int j) const {
    if (i < 0 || i >= rows || j < 0 || j >= cols)
      throw std::out_of_range("Mat: index out of range");
  }
  void check_shape(const Mat& o) const {
    if (rows != o.rows || cols != o.cols)
      throw std::logic_error("Mat: shape mismatch");
  }
};

template <class R>
bool is_zero(const Mat<R>& a) {
  return a.is_zero();
}

/// Kronecker product (leg order: a is the more significant factor).
template <class R>
Mat<R> kron(const Mat<R>& a, const Mat<R>& b) {
  Mat<R> r(a.rows * b.rows, a.cols * b.cols);
  for (const auto& [ij, va] : a.t)
    for (const auto& [kl, vb] : b.t)
      r.add(ij.first * b.rows + kl.first, ij.second * b.cols + kl.second,
            va * vb);
  return r;
}

/// Embed m, acting on the listed legs of the product space with the given
/// dimensions, as the identity on all other legs.  legs must be strictly
/// increasing; m must be square of dimension prod(dims[leg]).
template <class R>
Mat<R> tensor_place(const Mat<R>& m, const std::vector<int>& legs,
                    const std::vector<int>& dims) {
  const int n = int(dims.size());
  long total = 1;
  for (int d : dims) total *= d;
  long msize = 1;
  for (int l : legs) {
    if (l < 0 || l >= n) throw std::logic_error("tensor_place: bad leg");
    msize *= dims[l];
  }
  for (std::size_t i = 1; i < legs.size(); ++i)
    if (legs[i] <= legs[i - 1])
      throw std::logic_error("tensor_place: legs must be increasing");
  if (m.rows != msize || m.cols != msize)
    throw std::logic_error("tensor_place: operator/leg dimension mismatch");

  // Strides of each leg in the flattened space.
  std::vector<long> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  // Enumerate the complementary (identity) legs.
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (std::find(legs.begin(), legs.end(), i) == legs.end()) rest.push_back(i);
  long rest_total = 1;
  for (int l : rest) rest_total *= dims[l];

  Mat<R> r{int(total), int(total)};
  for (const auto& [ij, v] : m.t) {
    // Decompose the operator's row/col indices along the placed legs.
    std::vector<int> ri(legs.size()), ci(legs.size());
    long rr = ij.first, cc = ij.second;
    for (int k = int(legs.size()) - 1; k >= 0; --k) {
      ri[k] = int(rr % dims[legs[k]]);
      rr /= dims[legs[k]];
      ci[k] = int(cc % dims[legs[k]]);
      cc /= dims[legs[k]];
    }
    long row_base = 0, col_base = 0;
    for (std::size_t k = 0; k < legs.size(); ++k) {
      row_base += ri[k] * stride[legs[k]];
      col_base += ci[k] * stride[legs[k]];
    }
    for (long e = 0; e < rest_total; ++e) {
      long off = 0;
      long ee = e;
      for (int k = int(rest.size()) - 1; k >= 0; --k) {
        off += (ee % dims[rest[k]]) * stride[rest[k]];
        ee /= dims[rest[k]];
      }
      r.add(int(row_base + off), int(col_base + off), v);
    }
  }
  return r;
}

template <class R>
std::string to_string(const Mat<R>& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows; ++i) {
    if (i) s += ",\n ";
    s += "[";
    for (int j = 0; j < m.cols; ++j) {
      if (j) s += ", ";
      s += to_string(m.get(i, j));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace uqfm
