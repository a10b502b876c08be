#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "stk/rootsys.hpp"

namespace stk {

template <class T>
struct Mat {
  int n = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int n_, const T& fill) : n(n_), a(static_cast<std::size_t>(n_) * n_, fill) {}
  static Mat identity(int n, const T& zero, const T& one) {
    Mat m(n, zero);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  T& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const T& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  Mat operator*(const Mat& o) const {
    Mat r(n, a[0] - a[0]);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const T& x = (*this)(i, k);
        if (is_zero_scalar(x)) continue;
        for (int j = 0; j < n; ++j)
          if (!is_zero_scalar(o(k, j))) r(i, j) = r(i, j) + x * o(k, j);
      }
    return r;
  }

  Mat transpose() const {
    Mat r = *this;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  bool operator==(const Mat& o) const {
    if (n != o.n) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a[i] == o.a[i])) return false;
    return true;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  template <class F>
  auto map(F f) const -> Mat<decltype(f(a[0]))> {
    Mat<decltype(f(a[0]))> r;
    r.n = n;
    r.a.reserve(a.size());
    for (const auto& x : a) r.a.push_back(f(x));
    return r;
  }

  static bool is_zero_scalar(const T& x) {
    if constexpr (std::is_arithmetic_v<T>)
      return x == 0;
    else
      return x.is_zero();
  }
};

template <class T>
std::string mat_str(const Mat<T>& m) {
  std::ostringstream os;
  for (int i = 0; i < m.n; ++i) {
    os << "[";
    for (int j = 0; j < m.n; ++j) {
      if (j) os << ", ";
      if constexpr (std::is_arithmetic_v<T>)
        os << m(i, j);
      else
        os << m(i, j).str();
    }
    os << "]\n";
  }
  return os.str();
}

struct PatternEntry {
  int row;
  int col;
  int sign;
};

// elementary vector representation: SL_{l+1} for A_l, split SO_{2l} for D_l
class MatrixRep {
 public:
  static std::shared_ptr<const MatrixRep> build(RootSystemPtr phi);

  const RootSystem& phi() const { return *phi_; }
  const RootSystemPtr& phi_ptr() const { return phi_; }
  int dim() const { return dim_; }
  // x_r(c) = I + c * sum(sign * E_{row,col})
  const std::vector<PatternEntry>& pattern(Root r) const { return pat_[r]; }
  // matrix index of the signed coordinate label (D: 1..l, -1..-l)
  int index(int label) const;
  // bilinear form preserved by the D family; identity for A
  Mat<int64_t> form() const;
  // position (row, col) -> root, or -1
  Root root_at(int row, int col) const { return at_[row * dim_ + col]; }

  // M <- M * x_r(c)
  template <class T>
  void apply_right(Mat<T>& m, Root r, const T& c) const {
    for (const auto& p : pat_[r]) {
      T s = p.sign > 0 ? c : -c;
      for (int i = 0; i < m.n; ++i)
        if (!Mat<T>::is_zero_scalar(m(i, p.row))) m(i, p.col) = m(i, p.col) + m(i, p.row) * s;
    }
  }

  // M <- x_r(c) * M
  template <class T>
  void apply_left(Mat<T>& m, Root r, const T& c) const {
    for (const auto& p : pat_[r]) {
      T s = p.sign > 0 ? c : -c;
      for (int j = 0; j < m.n; ++j)
        if (!Mat<T>::is_zero_scalar(m(p.col, j))) m(p.row, j) = m(p.row, j) + s * m(p.col, j);
    }
  }

  Mat<int64_t> int_gen(Root r, int64_t c) const;

 private:
  RootSystemPtr phi_;
  int dim_ = 0;
  std::vector<std::vector<PatternEntry>> pat_;
  std::vector<Root> at_;
};

using MatrixRepPtr = std::shared_ptr<const MatrixRep>;

}  // namespace stk
