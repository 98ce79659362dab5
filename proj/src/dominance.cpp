#include "schubert/dominance.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace schubert {

DominanceCaps caps_from_env() {
  DominanceCaps c;
  if (const char* e = std::getenv("SCHUBERT_CAP")) {
    Int v = std::atoll(e);
    if (v > 0) c.height_cap = v;
  }
  return c;
}

DominantClass make_dominant(const CoinvariantLattice& L, const CoinvClass& c) {
  if (!L.dominant(c)) throw NotDominant("class " + L.display(c) + " is not dominant");
  return DominantClass{c};
}

std::optional<Vec> leq_coeffs(const CoinvariantLattice& L, const CoinvClass& la,
                              const CoinvClass& mu) {
  CoinvClass delta = L.sub(mu, la);
  const int nn = L.num_nodes();
  std::vector<Vec> cols;
  for (int i = 0; i < nn; ++i) cols.push_back(L.simple_coroot_class(i).free_part);
  Mat a = Mat::from_cols(cols);
  auto c = solve_integer_unique(a, delta.free_part);
  if (!c) return std::nullopt;
  for (Int v : *c)
    if (v < 0) return std::nullopt;
  // verify the full class identity (catches torsion mismatches)
  CoinvClass sum = L.zero();
  for (int i = 0; i < nn; ++i)
    if ((*c)[i] != 0) sum = L.add(sum, L.mul((*c)[i], L.simple_coroot_class(i)));
  if (!(sum == delta)) return std::nullopt;
  return c;
}

bool leq(const CoinvariantLattice& L, const CoinvClass& la, const CoinvClass& mu) {
  return leq_coeffs(L, la, mu).has_value();
}

bool is_minuscule(const CoinvariantLattice& L, const CoinvClass& mu) {
  Vec p = L.node_pairings(mu);
  for (const EchRoot& r : L.positive_ech_roots()) {
    Int v = 0;
    for (int j = 0; j < L.num_nodes(); ++j) v += r.root_coeffs[j] * p[j];
    if (v < -1 || v > 1) return false;
  }
  return true;
}

CoinvClass dominantize(const CoinvariantLattice& L, const CoinvClass& c) {
  CoinvClass x = c;
  for (;;) {
    Vec p = L.node_pairings(x);
    int neg = -1;
    for (int i = 0; i < L.num_nodes(); ++i)
      if (p[i] < 0) { neg = i; break; }
    if (neg < 0) return x;
    x = L.sub(x, L.mul(p[neg], L.simple_coroot_class(neg)));
  }
}

namespace {

// highest root (as index into positive_ech_roots) of each sigma component
std::vector<int> component_highest_roots(const CoinvariantLattice& L) {
  const auto& comps = L.sigma_components();
  std::vector<int> best(comps.size(), -1);
  std::vector<Int> besth(comps.size(), -1);
  const auto& roots = L.positive_ech_roots();
  for (size_t r = 0; r < roots.size(); ++r) {
    int comp = -1;
    Int h = 0;
    for (int j = 0; j < L.num_nodes(); ++j) {
      if (roots[r].root_coeffs[j] == 0) continue;
      h += roots[r].root_coeffs[j];
      for (size_t ci = 0; ci < comps.size(); ++ci)
        if (std::find(comps[ci].nodes.begin(), comps[ci].nodes.end(), j) != comps[ci].nodes.end())
          comp = (int)ci;
    }
    if (comp >= 0 && h > besth[comp]) { besth[comp] = h; best[comp] = (int)r; }
  }
  return best;
}

}  // namespace

CoinvClass minuscule_below(const CoinvariantLattice& L, const CoinvClass& mu) {
  if (!L.dominant(mu)) throw NotDominant("minuscule_below needs a dominant class");
  auto theta = component_highest_roots(L);
  CoinvClass x = mu;
  for (int guard = 0; guard < 100000; ++guard) {
    Vec p = L.node_pairings(x);
    int comp = -1;
    for (size_t ci = 0; ci < theta.size(); ++ci) {
      if (theta[ci] < 0) continue;
      const auto& r = L.positive_ech_roots()[theta[ci]];
      Int v = 0;
      for (int j = 0; j < L.num_nodes(); ++j) v += r.root_coeffs[j] * p[j];
      if (v >= 2) { comp = (int)ci; break; }
    }
    if (comp < 0) return x;  // pairing with every highest root is <= 1
    x = dominantize(L, L.sub(x, L.positive_ech_roots()[theta[comp]].coroot));
  }
  throw std::logic_error("minuscule descent did not terminate");
}

std::vector<int> support(const CoinvariantLattice& L, const CoinvClass& mu) {
  CoinvClass la = minuscule_below(L, mu);
  auto c = leq_coeffs(L, la, mu);
  if (!c) throw std::logic_error("minuscule_below result is not below the input");
  std::vector<int> s;
  for (int i = 0; i < L.num_nodes(); ++i)
    if ((*c)[i] > 0) s.push_back(i);
  return s;
}

CoinvClass quasi_minuscule(const CoinvariantLattice& L, int component) {
  const auto& comp = L.sigma_components().at(component);
  std::vector<CoinvClass> dominants;
  for (const EchRoot& r : L.positive_ech_roots()) {
    bool inside = true;
    for (int j = 0; j < L.num_nodes(); ++j)
      if (r.root_coeffs[j] != 0 &&
          std::find(comp.nodes.begin(), comp.nodes.end(), j) == comp.nodes.end())
        inside = false;
    if (inside && L.dominant(r.coroot)) dominants.push_back(r.coroot);
  }
  if (dominants.empty()) throw std::logic_error("no dominant coroot in component");
  for (const auto& c : dominants) {
    bool minimal = true;
    for (const auto& o : dominants)
      if (!leq(L, c, o)) { minimal = false; break; }
    if (minimal) return c;
  }
  throw std::logic_error("no minimal dominant coroot in component");
}

CoinvClass factorwise_qm(const CoinvariantLattice& L) {
  CoinvClass s = L.zero();
  for (size_t ci = 0; ci < L.sigma_components().size(); ++ci)
    s = L.add(s, quasi_minuscule(L, (int)ci));
  return s;
}

std::vector<CoinvClass> minuscule_classes(const CoinvariantLattice& L) {
  if (L.central_rank() != 0)
    throw RankCap("minuscule enumeration requires a semisimple group");
  const int nn = L.num_nodes();
  // pairing matrix of the free coordinates: row per node
  std::vector<Vec> rows;
  for (int i = 0; i < nn; ++i) {
    Vec row(L.free_rank());
    for (int k = 0; k < L.free_rank(); ++k) {
      CoinvClass e = L.zero();
      e.free_part[k] = 1;
      row[k] = L.pair_node(e, i);
    }
    rows.push_back(row);
  }
  Mat pm = Mat::from_rows(rows);

  std::vector<Vec> torsion_tuples;
  {
    Vec cur(L.torsion_divisors().size(), 0);
    auto rec = [&](auto&& self, size_t i) -> void {
      if (i == cur.size()) { torsion_tuples.push_back(cur); return; }
      for (Int v = 0; v < L.torsion_divisors()[i]; ++v) { cur[i] = v; self(self, i + 1); }
      cur[i] = 0;
    };
    rec(rec, 0);
  }

  std::vector<CoinvClass> out;
  for (Int mask = 0; mask < (Int(1) << nn); ++mask) {
    Vec k(nn);
    for (int i = 0; i < nn; ++i) k[i] = (mask >> i) & 1;
    auto f = solve_integer_unique(pm, k);
    if (!f) continue;
    for (const Vec& t : torsion_tuples) {
      CoinvClass c;
      c.free_part = *f;
      c.torsion = t;
      if (is_minuscule(L, c)) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CoinvClass> down_set(const CoinvariantLattice& L, const CoinvClass& mu,
                                 const DominanceCaps& caps) {
  if (L.num_nodes() > 9) throw RankCap("down_set: rank capped at 9");
  if (!L.dominant(mu)) throw NotDominant("down_set needs a dominant class");
  std::set<CoinvClass> seen{mu};
  std::deque<CoinvClass> queue{mu};
  while (!queue.empty()) {
    CoinvClass cur = queue.front();
    queue.pop_front();
    for (const EchRoot& r : L.positive_ech_roots()) {
      CoinvClass nxt = L.sub(cur, r.coroot);
      if (!L.dominant(nxt)) continue;
      if (seen.insert(nxt).second) {
        if (seen.size() > caps.node_cap) throw CapExceeded("down_set exceeded node cap");
        queue.push_back(nxt);
      }
    }
  }
  return std::vector<CoinvClass>(seen.begin(), seen.end());
}

std::vector<CoverEdge> covers_below(const CoinvariantLattice& L, const CoinvClass& mu,
                                    const DominanceCaps& caps) {
  auto down = down_set(L, mu, caps);
  std::vector<Vec> coeffs;
  for (const auto& la : down) {
    auto c = leq_coeffs(L, la, mu);
    if (!c) throw std::logic_error("down_set member not below mu");
    coeffs.push_back(*c);
  }
  std::vector<CoverEdge> out;
  for (size_t i = 0; i < down.size(); ++i) {
    if (is_zero(coeffs[i])) continue;  // mu itself
    bool cover = true;
    for (size_t j = 0; j < down.size() && cover; ++j) {
      if (j == i || is_zero(coeffs[j])) continue;
      bool between = true;
      for (int k = 0; k < L.num_nodes(); ++k)
        if (coeffs[j][k] > coeffs[i][k]) { between = false; break; }
      if (between && coeffs[j] != coeffs[i]) cover = false;
    }
    if (!cover) continue;
    CoverEdge e;
    e.lower = down[i];
    e.upper = mu;
    for (int k = 0; k < L.num_nodes(); ++k)
      if (coeffs[i][k] > 0) e.label.push_back(k);
    out.push_back(e);
  }
  return out;
}

HasseSegment hasse_segment(const CoinvariantLattice& L, int component, Int dim_cap,
                           const DominanceCaps& caps) {
  if (L.num_nodes() > 9) throw RankCap("hasse_segment: rank capped at 9");
  // minuscule representative of the requested torsion component
  CoinvClass base = L.zero();
  bool found = false;
  for (const auto& m : minuscule_classes(L))
    if (L.component_index(m) == component) { base = m; found = true; break; }
  if (!found) throw ValidationError("component has no minuscule representative");

  std::map<CoinvClass, Int> dim;
  dim[base] = 0;
  std::deque<CoinvClass> queue{base};
  while (!queue.empty()) {
    CoinvClass cur = queue.front();
    queue.pop_front();
    for (const EchRoot& r : L.positive_ech_roots()) {
      CoinvClass nxt = L.add(cur, r.coroot);
      if (!L.dominant(nxt)) continue;
      Int dd = L.two_rho_pair(L.sub(nxt, base));
      if (dd > dim_cap) continue;
      if (dim.emplace(nxt, dd).second) {
        if (dim.size() > caps.node_cap) throw CapExceeded("hasse_segment exceeded node cap");
        queue.push_back(nxt);
      }
    }
  }

  HasseSegment seg;
  for (const auto& [cls, dd] : dim) seg.nodes.push_back(cls);
  std::sort(seg.nodes.begin(), seg.nodes.end(), [&](const CoinvClass& a, const CoinvClass& b) {
    Int da = dim.at(a), db = dim.at(b);
    if (da != db) return da < db;
    Vec pa = L.node_pairings(a), pb = L.node_pairings(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  for (const auto& n : seg.nodes) {
    seg.node_names.push_back(L.display(n));
    seg.node_dims.push_back(dim.at(n));
  }
  std::set<CoinvClass> inseg(seg.nodes.begin(), seg.nodes.end());
  for (const auto& n : seg.nodes) {
    for (auto& e : covers_below(L, n, caps)) {
      if (!inseg.count(e.lower))
        throw std::logic_error("cover of a segment node escapes the segment");
      seg.edges.push_back(e);
    }
  }
  return seg;
}

std::string hasse_to_dot(const CoinvariantLattice& L, const HasseSegment& seg,
                         const std::string& title) {
  std::ostringstream os;
  os << "digraph \"" << title << "\" {\n";
  os << "  rankdir=LR;\n  node [shape=plaintext];\n";
  std::map<CoinvClass, std::string> name;
  std::map<std::string, int> used;
  for (size_t i = 0; i < seg.nodes.size(); ++i) {
    std::string base = seg.node_names[i];
    int k = used[base]++;
    if (k > 0) base += "#" + std::to_string(k);
    name[seg.nodes[i]] = base;
    os << "  \"" << base << "\";\n";
  }
  std::vector<std::string> lines;
  for (const auto& e : seg.edges) {
    std::ostringstream l;
    l << "  \"" << name.at(e.lower) << "\" -> \"" << name.at(e.upper) << "\" [label=\"{";
    for (size_t k = 0; k < e.label.size(); ++k) l << (k ? "," : "") << (e.label[k] + 1);
    l << "}\"];\n";
    lines.push_back(l.str());
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) os << l;
  os << "}\n";
  return os.str();
}

bool besson_hong_leq(const CoinvariantLattice& L, const CoinvClass& la, const CoinvClass& mu,
                     const DominanceCaps& caps) {
  if (L.num_nodes() > 9) throw RankCap("besson_hong_leq: rank capped at 9");
  if (la == mu) return true;
  CoinvClass dmu = dominantize(L, mu);
  auto dominated = [&](const CoinvClass& x) { return leq(L, dominantize(L, x), dmu); };
  if (!dominated(la)) return false;
  std::set<CoinvClass> seen{mu};
  std::deque<CoinvClass> queue{mu};
  while (!queue.empty()) {
    CoinvClass cur = queue.front();
    queue.pop_front();
    for (const EchRoot& r : L.positive_ech_roots()) {
      Int pr = 0;
      Vec p = L.node_pairings(cur);
      for (int j = 0; j < L.num_nodes(); ++j) pr += r.root_coeffs[j] * p[j];
      Int kmax = pr >= 0 ? pr : -pr - 1;
      for (Int k = 1; k <= kmax; ++k) {
        CoinvClass nxt = L.sub(cur, L.mul(k, r.coroot));
        if (nxt == la) return true;
        if (!dominated(nxt)) continue;
        if (seen.insert(nxt).second) {
          if (seen.size() > caps.node_cap) throw CapExceeded("besson_hong exceeded node cap");
          queue.push_back(nxt);
        }
      }
    }
  }
  return false;
}

Int schubert_dimension(const CoinvariantLattice& L, const CoinvClass& mu, const CoinvClass& la) {
  if (!leq(L, la, mu))
    throw NotComparable("dimension of an empty stratum: classes are not comparable");
  return L.two_rho_pair(L.sub(mu, la));
}

}  // namespace schubert
