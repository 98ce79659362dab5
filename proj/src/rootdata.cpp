#include "schubert/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace schubert {

char letter_char(Letter l) {
  switch (l) {
    case Letter::A: return 'A';
    case Letter::B: return 'B';
    case Letter::C: return 'C';
    case Letter::D: return 'D';
    case Letter::E: return 'E';
    case Letter::F: return 'F';
    case Letter::G: return 'G';
  }
  return '?';
}

Letter letter_from_char(char c) {
  switch (c) {
    case 'A': return Letter::A;
    case 'B': return Letter::B;
    case 'C': return Letter::C;
    case 'D': return Letter::D;
    case 'E': return Letter::E;
    case 'F': return Letter::F;
    case 'G': return Letter::G;
  }
  throw InvalidType(std::string("unknown type letter '") + c + "'");
}

bool is_valid_type(const SimpleType& t) {
  switch (t.letter) {
    case Letter::A: return t.rank >= 1;
    case Letter::B: return t.rank >= 2;
    case Letter::C: return t.rank >= 2;
    case Letter::D: return t.rank >= 4 || t.rank == 2;
    case Letter::E: return t.rank >= 6 && t.rank <= 8;
    case Letter::F: return t.rank == 4;
    case Letter::G: return t.rank == 2;
  }
  return false;
}

void require_valid_type(const SimpleType& t) {
  if (!is_valid_type(t)) throw InvalidType("invalid simple type " + type_to_string(t));
}

std::string type_to_string(const SimpleType& t) {
  return std::string(1, letter_char(t.letter)) + std::to_string(t.rank);
}

Mat cartan_matrix(const SimpleType& t) {
  require_valid_type(t);
  const int n = t.rank;
  Mat c(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](int i, int j) { c(i - 1, j - 1) = -1; c(j - 1, i - 1) = -1; };
  switch (t.letter) {
    case Letter::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Letter::B:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      c(n - 1, n - 2) = -2;  // <alpha_{n-1}, alpha_n^vee> = -2
      break;
    case Letter::C:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      c(n - 2, n - 1) = -2;  // <alpha_n, alpha_{n-1}^vee> = -2
      break;
    case Letter::D:
      if (n == 2) break;  // A1 + A1
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Letter::E:
      link(1, 3);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      link(2, 4);
      break;
    case Letter::F:
      link(1, 2); link(2, 3); link(3, 4);
      c(2, 1) = -2;  // <alpha_2, alpha_3^vee> = -2
      break;
    case Letter::G:
      c(0, 1) = -3;  // <alpha_2, alpha_1^vee> = -3
      c(1, 0) = -1;
      break;
  }
  return c;
}

Int connection_index(const SimpleType& t) { return abs_det(cartan_matrix(t)); }

std::string lattice_to_string(const IsogenyLattice& lat) {
  switch (lat.kind) {
    case LatticeKind::SimplyConnected: return "sc";
    case LatticeKind::Adjoint: return "ad";
    case LatticeKind::SO: return "SO";
    case LatticeKind::HalfSpin: return "half_spin";
    case LatticeKind::HalfSpinPrime: return "half_spin_prime";
    case LatticeKind::Explicit: return "explicit";
  }
  return "?";
}

namespace {

Mat lattice_basis(const SimpleType& t, const IsogenyLattice& lat) {
  const int n = t.rank;
  const Mat c = cartan_matrix(t);
  switch (lat.kind) {
    case LatticeKind::SimplyConnected:
      return c.transposed();  // columns = simple coroots
    case LatticeKind::Adjoint:
      return Mat::identity(n);
    case LatticeKind::SO: {
      if (t.letter != Letter::D)
        throw InvalidLattice("SO lattice only defined in type D");
      // columns = weight coordinates of the epsilon basis e_1..e_n
      Mat b(n, n);
      for (int k = 0; k < n; ++k) {
        for (int j = 0; j + 1 < n; ++j) b(j, k) = (k == j ? 1 : 0) - (k == j + 1 ? 1 : 0);
        b(n - 1, k) = (k == n - 2 ? 1 : 0) + (k == n - 1 ? 1 : 0);
      }
      return b;
    }
    case LatticeKind::HalfSpin:
    case LatticeKind::HalfSpinPrime: {
      if (t.letter != Letter::D || t.rank % 2 != 0)
        throw InvalidLattice("half-spin lattices only defined in type D, even rank");
      const int drop = lat.kind == LatticeKind::HalfSpin ? n - 2 : n - 1;  // 0-based coroot left out
      const int keep_cw = lat.kind == LatticeKind::HalfSpin ? n - 1 : n - 2;
      Mat b(n, n);
      int col = 0;
      for (int i = 0; i < n; ++i) {
        if (i == drop) continue;
        for (int j = 0; j < n; ++j) b(j, col) = c(i, j);
        ++col;
      }
      for (int j = 0; j < n; ++j) b(j, col) = (j == keep_cw ? 1 : 0);
      return b;
    }
    case LatticeKind::Explicit: {
      if (lat.basis.rows() != n || lat.basis.cols() != n)
        throw InvalidLattice("explicit lattice basis must be " + std::to_string(n) + "x" +
                             std::to_string(n));
      return lat.basis;
    }
  }
  throw InvalidLattice("unknown lattice kind");
}

}  // namespace

RootDatumAbs build_root_datum(const SimpleType& t, const IsogenyLattice& lat, int central_rank) {
  require_valid_type(t);
  if (central_rank < 0) throw InvalidType("negative central rank");
  const int n = t.rank;
  const int N = n + central_rank;
  const Mat c = cartan_matrix(t);

  RootDatumAbs d;
  d.type = t;
  d.lattice_kind = lat.kind;
  d.central_rank = central_rank;
  d.basis = lattice_basis(t, lat);

  if (abs_det(d.basis) == 0) throw InvalidLattice("lattice basis is singular");

  // Q^vee <= X: each simple coroot must have integral internal coordinates.
  std::vector<Vec> coroot_cols, root_rows;
  for (int i = 0; i < n; ++i) {
    auto x = solve_integer_unique(d.basis, c.row(i));
    if (!x) throw InvalidLattice("lattice does not contain the coroot lattice");
    Vec cc = *x;
    cc.resize(N, 0);
    coroot_cols.push_back(cc);
    Vec rr = d.basis.row(i);
    rr.resize(N, 0);
    root_rows.push_back(rr);
  }
  d.simple_coroots = Mat::from_cols(coroot_cols);
  d.simple_roots = Mat::from_rows(root_rows);

  // Positive-root closure on coefficient vectors over the simple roots
  // (and, in parallel, over the simple coroots).
  std::set<Vec> seen;
  std::vector<std::pair<Vec, Vec>> pos;  // (root coeffs m, coroot coeffs mv)
  std::vector<std::pair<Vec, Vec>> frontier;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    pos.emplace_back(e, e);
    frontier.emplace_back(e, e);
  }
  while (!frontier.empty()) {
    std::vector<std::pair<Vec, Vec>> next;
    for (const auto& [m, mv] : frontier) {
      for (int i = 0; i < n; ++i) {
        Int pr = 0, pc = 0;
        for (int j = 0; j < n; ++j) { pr += m[j] * c(i, j); pc += mv[j] * c(j, i); }
        Vec m2 = m, mv2 = mv;
        m2[i] -= pr;
        mv2[i] -= pc;
        bool positive = true;
        for (Int v : m2)
          if (v < 0) { positive = false; break; }
        if (!positive) continue;
        if (seen.insert(m2).second) {
          pos.emplace_back(m2, mv2);
          next.emplace_back(m2, mv2);
        }
      }
    }
    frontier = std::move(next);
  }

  d.positive_roots.clear();
  d.positive_coroots.clear();
  d.two_rho.assign(N, 0);
  // keep the simple ones first, then by height and coefficient order
  std::stable_sort(pos.begin() + n, pos.end(), [](const auto& a, const auto& b) {
    Int ha = 0, hb = 0;
    for (Int v : a.first) ha += v;
    for (Int v : b.first) hb += v;
    if (ha != hb) return ha < hb;
    return a.first < b.first;
  });
  for (const auto& [m, mv] : pos) {
    Vec root(N, 0), coroot(N, 0);
    for (int j = 0; j < n; ++j) {
      if (m[j] != 0)
        for (int k = 0; k < N; ++k) root[k] += m[j] * d.simple_roots(j, k);
      if (mv[j] != 0)
        for (int k = 0; k < N; ++k) coroot[k] += mv[j] * d.simple_coroots(k, j);
    }
    d.positive_roots.push_back(root);
    d.positive_coroots.push_back(coroot);
    for (int k = 0; k < N; ++k) d.two_rho[k] += root[k];
  }
  return d;
}

std::vector<FundamentalCoweight> RootDatumAbs::fundamental_coweights() const {
  const int n = ss_rank();
  std::vector<FundamentalCoweight> res(n);
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    auto x = solve_rational(basis, e);
    if (!x) throw std::logic_error("fundamental coweight solve failed");
    FundamentalCoweight f;
    f.coords = *x;
    f.coords.resize(dim(), Rat(0));
    f.in_lattice = true;
    for (const Rat& r : f.coords)
      if (!r.is_integer()) { f.in_lattice = false; break; }
    res[i] = f;
  }
  return res;
}

std::optional<Vec> RootDatumAbs::from_weight_coords(const Vec& p) const {
  if ((int)p.size() != ss_rank()) throw DimensionMismatch("weight coords of wrong length");
  auto x = solve_integer_unique(basis, p);
  if (!x) return std::nullopt;
  x->resize(dim(), 0);
  return x;
}

Vec RootDatumAbs::weight_coords(const Vec& x) const {
  if ((int)x.size() != dim()) throw DimensionMismatch("internal vector of wrong length");
  Vec p(ss_rank());
  for (int j = 0; j < ss_rank(); ++j) p[j] = dot(simple_root(j), x);
  return p;
}

Int coroot_index(const RootDatumAbs& d) { return saturation_index(d.simple_coroots); }

Int two_rho_pairing(const RootDatumAbs& d, const Vec& x) { return dot(d.two_rho, x); }

std::vector<int> diagram_automorphism(const SimpleType& t, int twist_order) {
  require_valid_type(t);
  const int n = t.rank;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  if (twist_order == 1) return p;
  if (twist_order == 2) {
    if (t.letter == Letter::A && n >= 2) {
      for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
      return p;
    }
    if (t.letter == Letter::D && n >= 4) {
      std::swap(p[n - 2], p[n - 1]);
      return p;
    }
    if (t.letter == Letter::E && n == 6) {
      p[0] = 5; p[5] = 0; p[2] = 4; p[4] = 2;
      return p;
    }
    throw InvalidType("no order-2 diagram automorphism for " + type_to_string(t));
  }
  if (twist_order == 3) {
    if (t.letter == Letter::D && n == 4) {
      p[0] = 2; p[2] = 3; p[3] = 0;  // 1 -> 3 -> 4 -> 1
      return p;
    }
    throw InvalidType("no order-3 diagram automorphism for " + type_to_string(t));
  }
  throw InvalidType("twist order must be 1, 2 or 3");
}

Mat twist_action(const RootDatumAbs& d, const std::vector<int>& sigma0) {
  const int n = d.ss_rank(), N = d.dim();
  if ((int)sigma0.size() != n) throw DimensionMismatch("automorphism of wrong size");
  // sigma(omega_i) = omega_{sigma0(i)}
  Mat p(n, n);
  for (int i = 0; i < n; ++i) p(sigma0[i], i) = 1;
  Mat pb = p * d.basis;
  std::vector<Vec> cols;
  for (int j = 0; j < n; ++j) {
    auto x = solve_integer_unique(d.basis, pb.col(j));
    if (!x) throw InvalidLattice("lattice is not stable under the diagram automorphism");
    x->resize(N, 0);
    cols.push_back(*x);
  }
  for (int j = n; j < N; ++j) {
    Vec e(N, 0);
    e[j] = 1;
    cols.push_back(e);
  }
  return Mat::from_cols(cols);
}

std::optional<Vec> eps_to_internal(const RootDatumAbs& d, const Vec& eps) {
  const int n = d.ss_rank();
  int eps_len;
  switch (d.type.letter) {
    case Letter::A: eps_len = n + 1; break;
    case Letter::B:
    case Letter::C:
    case Letter::D: eps_len = n; break;
    default: throw WrongType("epsilon coordinates only defined for classical types");
  }
  if ((int)eps.size() != eps_len + d.central_rank)
    throw DimensionMismatch("epsilon vector of wrong length");
  Vec p(n, 0);
  switch (d.type.letter) {
    case Letter::A:
      for (int j = 0; j < n; ++j) p[j] = eps[j] - eps[j + 1];
      break;
    case Letter::B:
      for (int j = 0; j + 1 < n; ++j) p[j] = eps[j] - eps[j + 1];
      p[n - 1] = eps[n - 1];
      break;
    case Letter::C:
      for (int j = 0; j + 1 < n; ++j) p[j] = eps[j] - eps[j + 1];
      p[n - 1] = 2 * eps[n - 1];
      break;
    case Letter::D:
      for (int j = 0; j + 1 < n; ++j) p[j] = eps[j] - eps[j + 1];
      p[n - 1] = (n >= 2 ? eps[n - 2] + eps[n - 1] : 0);
      break;
    default: break;
  }
  auto x = d.from_weight_coords(p);
  if (!x) return std::nullopt;
  for (int k = 0; k < d.central_rank; ++k) (*x)[n + k] = eps[eps_len + k];
  return x;
}

}  // namespace schubert
