#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact integer/rational linear algebra on the small dense matrices that
// arise from root data (ranks <= ~12, entries of Cartan size).

namespace schubert {

using Int = long long;
using Vec = std::vector<Int>;

struct Rat {
  Int num = 0;
  Int den = 1;  // always > 0

  Rat() = default;
  Rat(Int n) : num(n), den(1) {}
  Rat(Int n, Int d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    Int g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }

  friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(Rat a, Rat b) {
    if (b.num == 0) throw std::domain_error("Rat: division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
};

inline Int dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scale(Int c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero(const Vec& a) {
  for (Int x : a) if (x != 0) return false;
  return true;
}

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Mat from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat(0, 0);
    Mat m((int)rows.size(), (int)rows[0].size());
    for (int i = 0; i < m.rows_; ++i) {
      if ((int)rows[i].size() != m.cols_) throw std::invalid_argument("from_rows: ragged");
      for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Mat from_cols(const std::vector<Vec>& cols) {
    if (cols.empty()) return Mat(0, 0);
    Mat m((int)cols[0].size(), (int)cols.size());
    for (int j = 0; j < m.cols_; ++j) {
      if ((int)cols[j].size() != m.rows_) throw std::invalid_argument("from_cols: ragged");
      for (int i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  Int operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Vec row(int i) const {
    Vec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  Vec col(int j) const {
    Vec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec apply(const Vec& x) const {
    if ((int)x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    Vec y(rows_, 0);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("mat mul: size mismatch");
    Mat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        Int v = a(i, k);
        if (v == 0) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += v * b(k, j);
      }
    return c;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Smith normal form: U * A * V = S with U, V unimodular and S diagonal,
// diagonal entries nonnegative and each dividing the next.
struct SmithForm {
  Mat s, u, v;
  std::vector<Int> divisors;  // nonzero diagonal entries, in order
  int rank() const { return (int)divisors.size(); }
};

SmithForm smith_normal_form(Mat a);

// Inverse of a unimodular integer matrix.
Mat unimodular_inverse(const Mat& u);

// Exact solution of A x = b over the rationals. Returns nullopt when the
// system is inconsistent; when A does not have full column rank any one
// solution is returned.
std::optional<std::vector<Rat>> solve_rational(const Mat& a, const Vec& b);

// Integer solution of A x = b, when one exists and A has full column rank.
std::optional<Vec> solve_integer_unique(const Mat& a, const Vec& b);

// |det A| via the Smith form (A square).
Int abs_det(const Mat& a);

// Index of the column lattice of A inside its saturation: the product of
// the nonzero elementary divisors.
Int saturation_index(const Mat& a);

std::string to_string(const Mat& a);

}  // namespace schubert
