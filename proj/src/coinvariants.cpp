#include "schubert/coinvariants.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace schubert {

namespace {

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Int mod_reduce(Int v, Int m) {
  Int r = v % m;
  return r < 0 ? r + m : r;
}

// Expected echelonnage type of a twisted factor.
SimpleType folded_type(const SimpleType& t, int e) {
  if (e == 1) return t;
  if (t.letter == Letter::A && e == 2) {
    int n = t.rank;
    if (n % 2 == 1) return {Letter::B, (n + 1) / 2};  // A_{2m-1} -> B_m
    return {Letter::C, n / 2};                        // A_{2m} -> C_m
  }
  if (t.letter == Letter::D && e == 2) return {Letter::C, t.rank - 1};
  if (t.letter == Letter::D && t.rank == 4 && e == 3) return {Letter::G, 2};
  if (t.letter == Letter::E && t.rank == 6 && e == 2) return {Letter::F, 4};
  throw InvalidType("no folding for " + type_to_string(t) + " with twist order " +
                    std::to_string(e));
}

SimpleType normalize_small_rank(SimpleType t) {
  if (t.rank == 1) return {Letter::A, 1};
  return t;
}

// Find a relabeling p (Bourbaki position -> node) with
// computed(p[i], p[j]) == expected(i, j).
std::optional<std::vector<int>> match_cartan(const Mat& computed, const Mat& expected) {
  const int m = expected.rows();
  if (computed.rows() != m) return std::nullopt;
  std::vector<int> p(m, -1);
  std::vector<bool> used(m, false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == m) return true;
    for (int cand = 0; cand < m; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (computed(cand, p[j]) != expected(i, j)) ok = false;
        if (ok && computed(p[j], cand) != expected(j, i)) ok = false;
      }
      if (!ok) continue;
      p[i] = cand;
      used[cand] = true;
      if (self(self, i + 1)) return true;
      used[cand] = false;
      p[i] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return p;
}

std::vector<std::vector<int>> orbit_cycles(const std::vector<int>& sigma0) {
  const int n = (int)sigma0.size();
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> o;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      o.push_back(j);
      j = sigma0[j];
    }
    std::sort(o.begin(), o.end());
    orbits.push_back(o);
  }
  return orbits;
}

size_t expected_root_count(const SimpleType& t) {
  switch (t.letter) {
    case Letter::A: return size_t(t.rank) * (t.rank + 1);
    case Letter::B:
    case Letter::C: return 2 * size_t(t.rank) * t.rank;
    case Letter::D: return 2 * size_t(t.rank) * (t.rank - 1);
    case Letter::E:
      return t.rank == 6 ? 72 : (t.rank == 7 ? 126 : 240);
    case Letter::F: return 48;
    case Letter::G: return 12;
  }
  return 0;
}

// place a per-factor covector into the concatenated X coordinate space
Vec covector_global(const GroupDatum& g, int fi, const Vec& w) {
  Vec out;
  for (int f = 0; f < g.num_factors(); ++f) {
    if (f == fi)
      out.insert(out.end(), w.begin(), w.end());
    else
      out.insert(out.end(), g.factors[f].datum.dim(), 0);
  }
  return out;
}

}  // namespace

TwistedFactor make_factor(const SimpleType& t, const IsogenyLattice& lat, int central_rank,
                          int twist_order, int restriction_degree) {
  TwistedFactor f;
  f.datum = build_root_datum(t, lat, central_rank);
  f.twist_order = twist_order;
  f.sigma0 = diagram_automorphism(t, twist_order);
  f.restriction_degree = restriction_degree;
  if (restriction_degree < 1) throw InvalidType("restriction degree must be >= 1");
  return f;
}

void validate_group(const GroupDatum& g) {
  if (g.char_p != 0 && !is_prime(g.char_p))
    throw InvalidType("characteristic must be 0 or a prime");
  if (g.factors.empty()) throw InvalidType("group must have at least one factor");
  for (const auto& f : g.factors) {
    require_valid_type(f.datum.type);
    if ((int)f.sigma0.size() != f.datum.ss_rank())
      throw InvalidType("diagram automorphism of wrong size");
    if (f.restriction_degree < 1) throw InvalidType("restriction degree must be >= 1");
    if (g.char_p > 0 && f.twist_order % g.char_p == 0)
      throw WildRamification("twist order " + std::to_string(f.twist_order) +
                             " is divisible by the characteristic " + std::to_string(g.char_p));
    twist_action(f.datum, f.sigma0);  // throws when the lattice is unstable
  }
}

struct CoinvBuilder {
  static void build_factor(CoinvariantLattice& L, int fi) {
    auto& fd = L.fdata_[fi];
    const RootDatumAbs& d = fd.factor.datum;
    const int N = d.dim();

    fd.sigma = twist_action(d, fd.factor.sigma0);
    Mat r(N, N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r(i, j) = fd.sigma(i, j) - (i == j ? 1 : 0);
    auto sf = smith_normal_form(r);
    fd.u = sf.u;
    fd.u_inv = unimodular_inverse(sf.u);
    int rank = sf.rank();
    for (int i = 0; i < rank; ++i) {
      if (sf.s(i, i) == 1)
        fd.kill_rows.push_back(i);
      else {
        fd.torsion_rows.push_back(i);
        fd.torsion_mods.push_back(sf.s(i, i));
      }
    }
    for (int i = rank; i < N; ++i) fd.free_rows.push_back(i);

    // pi_1 data: quotient by (sigma-1)X and the simple coroots
    const int n = d.ss_rank();
    Mat m(N, N + n);
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) m(i, j) = r(i, j);
      for (int j = 0; j < n; ++j) m(i, N + j) = d.simple_coroots(i, j);
    }
    auto pf = smith_normal_form(m);
    fd.pi1_u = pf.u;
    for (int i = 0; i < pf.rank(); ++i)
      if (pf.s(i, i) > 1) {
        fd.pi1_torsion_rows.push_back(i);
        fd.pi1_torsion_mods.push_back(pf.s(i, i));
      }
    for (int i = pf.rank(); i < N; ++i) fd.pi1_free_rows.push_back(i);
  }
};

CoinvariantLattice CoinvariantLattice::build(const GroupDatum& g) {
  validate_group(g);
  CoinvariantLattice L;
  L.group_ = g;
  L.fdata_.resize(g.factors.size());

  L.is_adjoint_shape_ = true;
  for (size_t fi = 0; fi < g.factors.size(); ++fi) {
    auto& fd = L.fdata_[fi];
    fd.factor = g.factors[fi];
    if (fd.factor.datum.lattice_kind != LatticeKind::Adjoint ||
        fd.factor.datum.central_rank != 0)
      L.is_adjoint_shape_ = false;
    CoinvBuilder::build_factor(L, (int)fi);
    fd.free_offset = L.free_rank_;
    fd.torsion_offset = (int)L.torsion_divisors_.size();
    L.free_rank_ += (int)fd.free_rows.size();
    for (Int mmod : fd.torsion_mods) L.torsion_divisors_.push_back(mmod);
    for (Int mmod : fd.pi1_torsion_mods) L.pi1_divisors_.push_back(mmod);
    L.central_rank_ += fd.factor.datum.central_rank;
    L.two_rho_.push_back(fd.factor.datum.two_rho);
  }

  // echelonnage nodes, factor by factor
  for (size_t fi = 0; fi < g.factors.size(); ++fi) {
    const auto& fd = L.fdata_[fi];
    const RootDatumAbs& d = fd.factor.datum;
    auto orbits = orbit_cycles(fd.factor.sigma0);
    const int m = (int)orbits.size();

    std::vector<CoinvClass> cls(m);
    std::vector<Vec> cov(m);
    std::vector<Int> scale_c(m);
    for (int k = 0; k < m; ++k) {
      cls[k] = L.project_factor_sum((int)fi, {d.simple_coroot(orbits[k][0])});
      for (int j : orbits[k]) {
        if (!(L.project_factor_sum((int)fi, {d.simple_coroot(j)}) == cls[k]))
          throw TableMismatch("coroots in one orbit project to different classes");
      }
      Vec w(d.dim(), 0);
      for (int j : orbits[k]) w = schubert::add(w, d.simple_root(j));
      Int den = dot(d.simple_coroot(orbits[k][0]), w);
      if (den != 1 && den != 2)
        throw TableMismatch("orbit norm pairing " + std::to_string(den) + " out of range");
      scale_c[k] = 2 / den;
      cov[k] = covector_global(g, (int)fi, schubert::scale(scale_c[k], w));
    }

    // Cartan of the folded system, then Bourbaki relabeling
    Mat cc(m, m);
    for (int i = 0; i < m; ++i) {
      Vec x = L.lift(cls[i]);
      for (int j = 0; j < m; ++j) cc(i, j) = dot(x, cov[j]);
    }

    std::vector<std::vector<int>> comps;  // local node components
    {
      std::vector<int> col(m, -1);
      for (int i = 0; i < m; ++i) {
        if (col[i] >= 0) continue;
        std::vector<int> stack{i};
        col[i] = i;
        std::vector<int> comp;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          comp.push_back(v);
          for (int w2 = 0; w2 < m; ++w2)
            if (col[w2] < 0 && cc(v, w2) != 0) {
              col[w2] = i;
              stack.push_back(w2);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
      }
      std::sort(comps.begin(), comps.end());
    }

    if (fd.factor.twist_order > 1 && comps.size() != 1)
      throw TableMismatch("folded system of a twisted factor is not connected");

    std::vector<int> order;  // local node ids in Bourbaki order, comp by comp
    for (const auto& comp : comps) {
      SimpleType ct =
          fd.factor.twist_order > 1
              ? normalize_small_rank(folded_type(d.type, fd.factor.twist_order))
              : normalize_small_rank(SimpleType{d.type.letter, (int)comp.size()});
      if ((int)comp.size() != ct.rank)
        throw TableMismatch("component rank does not match the folding table");
      Mat sub((int)comp.size(), (int)comp.size());
      for (size_t i = 0; i < comp.size(); ++i)
        for (size_t j = 0; j < comp.size(); ++j) sub((int)i, (int)j) = cc(comp[i], comp[j]);
      auto perm = match_cartan(sub, cartan_matrix(ct));
      if (!perm)
        throw TableMismatch("echelonnage Cartan matrix does not match type " +
                            type_to_string(ct));
      SigmaComponent sc;
      sc.type = ct;
      sc.factor = (int)fi;
      for (int pos = 0; pos < ct.rank; ++pos)
        sc.nodes.push_back((int)L.node_coroot_.size() + (int)order.size() + pos);
      L.components_.push_back(sc);
      for (int pos = 0; pos < ct.rank; ++pos) order.push_back(comp[(*perm)[pos]]);
    }

    for (int local : order) {
      L.node_coroot_.push_back(cls[local]);
      L.node_root_cov_.push_back(cov[local]);
      L.node_scale_.push_back(scale_c[local]);
      L.node_orbit_.push_back(orbits[local]);
      L.node_factor_.push_back((int)fi);
    }
  }

  // global folded Cartan
  const int nn = L.num_nodes();
  L.sigma_cartan_ = Mat(nn, nn);
  for (int i = 0; i < nn; ++i) {
    Vec x = L.lift(L.node_coroot_[i]);
    for (int j = 0; j < nn; ++j) L.sigma_cartan_(i, j) = dot(x, L.node_root_cov_[j]);
  }

  // positive echelonnage roots via coefficient closure
  {
    std::set<Vec> seen;
    std::vector<std::pair<Vec, Vec>> pos, frontier;
    for (int i = 0; i < nn; ++i) {
      Vec e(nn, 0);
      e[i] = 1;
      seen.insert(e);
      pos.emplace_back(e, e);
      frontier.emplace_back(e, e);
    }
    while (!frontier.empty()) {
      std::vector<std::pair<Vec, Vec>> next;
      for (const auto& [mm, mv] : frontier) {
        for (int i = 0; i < nn; ++i) {
          Int pr = 0, pc = 0;
          for (int j = 0; j < nn; ++j) {
            pr += mm[j] * L.sigma_cartan_(i, j);
            pc += mv[j] * L.sigma_cartan_(j, i);
          }
          Vec m2 = mm, mv2 = mv;
          m2[i] -= pr;
          mv2[i] -= pc;
          bool positive = true;
          for (Int v : m2)
            if (v < 0) {
              positive = false;
              break;
            }
          if (!positive) continue;
          if (seen.insert(m2).second) {
            pos.emplace_back(m2, mv2);
            next.emplace_back(m2, mv2);
          }
        }
      }
      frontier = std::move(next);
    }
    std::stable_sort(pos.begin() + nn, pos.end(), [](const auto& a, const auto& b) {
      Int ha = 0, hb = 0;
      for (Int v : a.first) ha += v;
      for (Int v : b.first) hb += v;
      if (ha != hb) return ha < hb;
      return a.first < b.first;
    });
    size_t expected = 0;
    for (const auto& sc : L.components_) expected += expected_root_count(sc.type) / 2;
    if (pos.size() != expected)
      throw TableMismatch("echelonnage root count mismatch: got " + std::to_string(pos.size()) +
                          ", expected " + std::to_string(expected));
    for (const auto& [mm, mv] : pos) {
      EchRoot er;
      er.root_coeffs = mm;
      er.coroot_coeffs = mv;
      er.coroot = L.zero();
      for (int j = 0; j < nn; ++j)
        if (mv[j] != 0) er.coroot = L.add(er.coroot, L.mul(mv[j], L.node_coroot_[j]));
      L.pos_roots_.push_back(er);
    }
  }
  return L;
}

CoinvClass CoinvariantLattice::zero() const {
  CoinvClass c;
  c.free_part.assign(free_rank_, 0);
  c.torsion.assign(torsion_divisors_.size(), 0);
  return c;
}

CoinvClass CoinvariantLattice::add(const CoinvClass& a, const CoinvClass& b) const {
  CoinvClass c;
  c.free_part = schubert::add(a.free_part, b.free_part);
  c.torsion.resize(torsion_divisors_.size());
  for (size_t i = 0; i < torsion_divisors_.size(); ++i)
    c.torsion[i] = mod_reduce(a.torsion[i] + b.torsion[i], torsion_divisors_[i]);
  return c;
}

CoinvClass CoinvariantLattice::sub(const CoinvClass& a, const CoinvClass& b) const {
  return add(a, neg(b));
}

CoinvClass CoinvariantLattice::neg(const CoinvClass& a) const { return mul(-1, a); }

CoinvClass CoinvariantLattice::mul(Int k, const CoinvClass& a) const {
  CoinvClass c;
  c.free_part = schubert::scale(k, a.free_part);
  c.torsion.resize(torsion_divisors_.size());
  for (size_t i = 0; i < torsion_divisors_.size(); ++i)
    c.torsion[i] = mod_reduce(k * a.torsion[i], torsion_divisors_[i]);
  return c;
}

CoinvClass CoinvariantLattice::project_factor_sum(int f, const std::vector<Vec>& mus) const {
  const auto& fd = fdata_[f];
  const int N = fd.factor.datum.dim();
  Vec x(N, 0);
  for (const Vec& mu : mus) {
    if ((int)mu.size() != N) throw DimensionMismatch("coweight of wrong dimension");
    x = schubert::add(x, mu);
  }
  Vec y = fd.u.apply(x);
  CoinvClass c = zero();
  for (size_t i = 0; i < fd.free_rows.size(); ++i)
    c.free_part[fd.free_offset + i] = y[fd.free_rows[i]];
  for (size_t i = 0; i < fd.torsion_rows.size(); ++i)
    c.torsion[fd.torsion_offset + i] = mod_reduce(y[fd.torsion_rows[i]], fd.torsion_mods[i]);
  return c;
}

CoinvClass CoinvariantLattice::project(const GroupCoweight& mu) const {
  if ((int)mu.size() != (int)fdata_.size())
    throw DimensionMismatch("coweight tuple has wrong number of factors");
  CoinvClass c = zero();
  for (size_t f = 0; f < fdata_.size(); ++f) {
    if ((int)mu[f].size() != fdata_[f].factor.restriction_degree)
      throw DimensionMismatch("coweight tuple has wrong number of embeddings for factor " +
                              std::to_string(f));
    c = add(c, project_factor_sum((int)f, mu[f]));
  }
  return c;
}

CoinvClass CoinvariantLattice::project_single(const Vec& mu) const {
  if (fdata_.size() != 1 || fdata_[0].factor.restriction_degree != 1)
    throw DimensionMismatch("project_single needs a single factor of degree 1");
  return project({{mu}});
}

Vec CoinvariantLattice::lift_factor(const CoinvClass& c, int f) const {
  const auto& fd = fdata_[f];
  const int N = fd.factor.datum.dim();
  Vec y(N, 0);
  for (size_t i = 0; i < fd.free_rows.size(); ++i)
    y[fd.free_rows[i]] = c.free_part[fd.free_offset + i];
  for (size_t i = 0; i < fd.torsion_rows.size(); ++i)
    y[fd.torsion_rows[i]] = c.torsion[fd.torsion_offset + i];
  return fd.u_inv.apply(y);
}

Vec CoinvariantLattice::lift(const CoinvClass& c) const {
  Vec x;
  for (size_t f = 0; f < fdata_.size(); ++f) {
    Vec xf = lift_factor(c, (int)f);
    x.insert(x.end(), xf.begin(), xf.end());
  }
  return x;
}

Vec CoinvariantLattice::norm_map(const CoinvClass& c) const {
  Vec out;
  for (size_t f = 0; f < fdata_.size(); ++f) {
    const auto& fd = fdata_[f];
    Vec x = lift_factor(c, (int)f);
    Vec acc(x.size(), 0);
    Vec cur = x;
    for (int k = 0; k < fd.factor.twist_order; ++k) {
      acc = schubert::add(acc, cur);
      cur = fd.sigma.apply(cur);
    }
    out.insert(out.end(), acc.begin(), acc.end());
  }
  return out;
}

const CoinvariantLattice& CoinvariantLattice::adjoint_lattice() const {
  if (is_adjoint_shape_) return *this;
  if (!adjoint_) {
    GroupDatum ad;
    ad.char_p = group_.char_p;
    for (const auto& f : group_.factors)
      ad.factors.push_back(make_factor(f.datum.type, IsogenyLattice::adjoint(), 0,
                                       f.twist_order, f.restriction_degree));
    adjoint_ = std::make_shared<CoinvariantLattice>(build(ad));
  }
  return *adjoint_;
}

CoinvClass CoinvariantLattice::adjoint_image(const CoinvClass& c) const {
  const CoinvariantLattice& ad = adjoint_lattice();
  CoinvClass out = ad.zero();
  for (size_t f = 0; f < fdata_.size(); ++f) {
    Vec x = lift_factor(c, (int)f);
    Vec p = fdata_[f].factor.datum.weight_coords(x);
    // adjoint basis is the identity: weight coordinates are internal ones
    out = ad.add(out, ad.project_factor_sum((int)f, {p}));
  }
  return out;
}

Int CoinvariantLattice::pair_node(const CoinvClass& c, int node) const {
  return dot(lift(c), node_root_cov_[node]);
}

Int CoinvariantLattice::pair_root_coeffs(const CoinvClass& c, const Vec& m) const {
  Int s = 0;
  Vec x = lift(c);
  for (int j = 0; j < num_nodes(); ++j)
    if (m[j] != 0) s += m[j] * dot(x, node_root_cov_[j]);
  return s;
}

bool CoinvariantLattice::dominant(const CoinvClass& c) const {
  Vec x = lift(c);
  for (const Vec& a : node_root_cov_)
    if (dot(x, a) < 0) return false;
  return true;
}

Vec CoinvariantLattice::node_pairings(const CoinvClass& c) const {
  Vec x = lift(c);
  Vec p(num_nodes());
  for (int j = 0; j < num_nodes(); ++j) p[j] = dot(x, node_root_cov_[j]);
  return p;
}

Int CoinvariantLattice::two_rho_pair(const CoinvClass& c) const {
  Int s = 0;
  size_t off = 0;
  Vec x = lift(c);
  for (size_t f = 0; f < fdata_.size(); ++f) {
    const Vec& tr = two_rho_[f];
    for (size_t k = 0; k < tr.size(); ++k) s += tr[k] * x[off + k];
    off += tr.size();
  }
  return s;
}

Int CoinvariantLattice::pi1_torsion_order() const {
  Int o = 1;
  for (Int d : pi1_divisors_) o *= d;
  return o;
}

Vec CoinvariantLattice::component_of(const CoinvClass& c) const {
  Vec enc;
  for (size_t f = 0; f < fdata_.size(); ++f) {
    const auto& fd = fdata_[f];
    Vec y = fd.pi1_u.apply(lift_factor(c, (int)f));
    for (size_t i = 0; i < fd.pi1_torsion_rows.size(); ++i)
      enc.push_back(mod_reduce(y[fd.pi1_torsion_rows[i]], fd.pi1_torsion_mods[i]));
  }
  for (size_t f = 0; f < fdata_.size(); ++f) {
    const auto& fd = fdata_[f];
    Vec y = fd.pi1_u.apply(lift_factor(c, (int)f));
    for (int row : fd.pi1_free_rows) enc.push_back(y[row]);
  }
  return enc;
}

std::vector<Vec> CoinvariantLattice::torsion_components() const {
  size_t tcount = pi1_divisors_.size();
  size_t fcount = 0;
  for (const auto& fd : fdata_) fcount += fd.pi1_free_rows.size();
  std::vector<Vec> out;
  Vec cur(tcount + fcount, 0);
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == tcount) {
      out.push_back(cur);
      return;
    }
    for (Int v = 0; v < pi1_divisors_[i]; ++v) {
      cur[i] = v;
      self(self, i + 1);
    }
    cur[i] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

int CoinvariantLattice::component_index(const CoinvClass& c) const {
  Vec enc = component_of(c);
  Vec key(enc.begin(), enc.begin() + pi1_divisors_.size());
  key.resize(enc.size(), 0);
  auto comps = torsion_components();
  auto it = std::lower_bound(comps.begin(), comps.end(), key);
  if (it == comps.end() || *it != key) throw std::logic_error("component not enumerated");
  return (int)(it - comps.begin());
}

std::string CoinvariantLattice::display(const CoinvClass& c) const {
  Vec p = node_pairings(c);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < num_nodes(); ++i) {
    if (p[i] == 0) continue;
    if (!first) os << "+";
    if (p[i] != 1) os << p[i] << "*";
    os << "w" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  bool tors = false;
  for (Int t : c.torsion)
    if (t != 0) tors = true;
  if (tors) {
    os << " (tors";
    for (Int t : c.torsion) os << " " << t;
    os << ")";
  }
  return os.str();
}

CoinvClass class_from_eps(const CoinvariantLattice& L, const Vec& eps) {
  if (L.group().num_factors() != 1 || L.group().factors[0].restriction_degree != 1)
    throw DimensionMismatch("class_from_eps needs a single factor of degree 1");
  auto x = eps_to_internal(L.group().factors[0].datum, eps);
  if (!x) throw ValidationError("epsilon vector is not in the cocharacter lattice");
  return L.project_single(*x);
}

}  // namespace schubert
