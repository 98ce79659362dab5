#include "schubert/intlin.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace schubert {

namespace {

void swap_rows(Mat& m, int i, int j) {
  for (int k = 0; k < m.cols(); ++k) std::swap(m(i, k), m(j, k));
}
void swap_cols(Mat& m, int i, int j) {
  for (int k = 0; k < m.rows(); ++k) std::swap(m(k, i), m(k, j));
}
// row i -= q * row j
void row_axpy(Mat& m, int i, int j, Int q) {
  for (int k = 0; k < m.cols(); ++k) m(i, k) -= q * m(j, k);
}
void col_axpy(Mat& m, int i, int j, Int q) {
  for (int k = 0; k < m.rows(); ++k) m(k, i) -= q * m(k, j);
}
void negate_row(Mat& m, int i) {
  for (int k = 0; k < m.cols(); ++k) m(i, k) = -m(i, k);
}

}  // namespace

SmithForm smith_normal_form(Mat a) {
  const int nr = a.rows(), nc = a.cols();
  Mat u = Mat::identity(nr), v = Mat::identity(nc);
  int t = 0;
  const int lim = std::min(nr, nc);
  while (t < lim) {
    // find a pivot
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < nr; ++i)
      for (int j = t; j < nc; ++j) {
        Int x = std::llabs(a(i, j));
        if (x != 0 && (best == 0 || x < best)) { best = x; pi = i; pj = j; }
      }
    if (pi < 0) break;  // all zero
    if (pi != t) { swap_rows(a, t, pi); swap_rows(u, t, pi); }
    if (pj != t) { swap_cols(a, t, pj); swap_cols(v, t, pj); }
    bool dirty = false;
    for (int i = t + 1; i < nr; ++i) {
      if (a(i, t) == 0) continue;
      Int q = a(i, t) / a(t, t);
      row_axpy(a, i, t, q);
      row_axpy(u, i, t, q);
      if (a(i, t) != 0) dirty = true;
    }
    for (int j = t + 1; j < nc; ++j) {
      if (a(t, j) == 0) continue;
      Int q = a(t, j) / a(t, t);
      col_axpy(a, j, t, q);
      col_axpy(v, j, t, q);
      if (a(t, j) != 0) dirty = true;
    }
    if (dirty) continue;  // remainders left; pick a smaller pivot next round
    // pivot must divide the rest of the block
    bool fixed = false;
    for (int i = t + 1; i < nr && !fixed; ++i)
      for (int j = t + 1; j < nc && !fixed; ++j)
        if (a(i, j) % a(t, t) != 0) {
          // add row i to row t, creating a non-multiple entry in row t
          row_axpy(a, t, i, -1);
          row_axpy(u, t, i, -1);
          fixed = true;
        }
    if (fixed) continue;
    if (a(t, t) < 0) { negate_row(a, t); negate_row(u, t); }
    ++t;
  }
  SmithForm f;
  f.s = a;
  f.u = u;
  f.v = v;
  for (int i = 0; i < lim; ++i)
    if (a(i, i) != 0) f.divisors.push_back(a(i, i));
  return f;
}

Mat unimodular_inverse(const Mat& u) {
  const int n = u.rows();
  if (u.cols() != n) throw std::invalid_argument("unimodular_inverse: not square");
  // Gauss-Jordan over Q; entries must come out integral.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(u(i, j));
    a[i][n + i] = Rat(1);
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!a[i][c].is_zero()) { p = i; break; }
    if (p < 0) throw std::invalid_argument("unimodular_inverse: singular");
    std::swap(a[c], a[p]);
    Rat inv = Rat(1) / a[c][c];
    for (int j = 0; j < 2 * n; ++j) a[c][j] = a[c][j] * inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      Rat f = a[i][c];
      for (int j = 0; j < 2 * n; ++j) a[i][j] = a[i][j] - f * a[c][j];
    }
  }
  Mat r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!a[i][n + j].is_integer())
        throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
      r(i, j) = a[i][n + j].num;
    }
  return r;
}

std::optional<std::vector<Rat>> solve_rational(const Mat& a, const Vec& b) {
  const int nr = a.rows(), nc = a.cols();
  if ((int)b.size() != nr) throw std::invalid_argument("solve_rational: size mismatch");
  std::vector<std::vector<Rat>> m(nr, std::vector<Rat>(nc + 1));
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nc; ++j) m[i][j] = Rat(a(i, j));
    m[i][nc] = Rat(b[i]);
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int p = -1;
    for (int i = r; i < nr; ++i)
      if (!m[i][c].is_zero()) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rat inv = Rat(1) / m[r][c];
    for (int j = c; j <= nc; ++j) m[r][j] = m[r][j] * inv;
    for (int i = 0; i < nr; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rat f = m[i][c];
      for (int j = c; j <= nc; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < nr; ++i)
    if (!m[i][nc].is_zero()) return std::nullopt;  // inconsistent
  std::vector<Rat> x(nc, Rat(0));
  for (int k = 0; k < r; ++k) x[pivot_col[k]] = m[k][nc];
  return x;
}

std::optional<Vec> solve_integer_unique(const Mat& a, const Vec& b) {
  auto x = solve_rational(a, b);
  if (!x) return std::nullopt;
  Vec r(x->size());
  for (size_t i = 0; i < x->size(); ++i) {
    if (!(*x)[i].is_integer()) return std::nullopt;
    r[i] = (*x)[i].num;
  }
  return r;
}

Int abs_det(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("abs_det: not square");
  auto f = smith_normal_form(a);
  if (f.rank() < a.rows()) return 0;
  Int d = 1;
  for (Int e : f.divisors) d *= e;
  return d;
}

Int saturation_index(const Mat& a) {
  auto f = smith_normal_form(a);
  Int d = 1;
  for (Int e : f.divisors) d *= e;
  return d;
}

std::string to_string(const Mat& a) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < a.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < a.cols(); ++j) os << (j ? "," : "") << a(i, j);
  }
  os << "]";
  return os.str();
}

}  // namespace schubert
