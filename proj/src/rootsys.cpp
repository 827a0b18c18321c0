#include "liefix/rootsys.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <cstdlib>
#include <numeric>
#include <set>

#include "liefix/cyc.hpp"

namespace liefix {

namespace {

std::vector<std::vector<int>> inner_matrix(char type, int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { m[i][j] = m[j][i] = v; };
  switch (type) {
    case 'A':
      for (int i = 0; i < n; ++i) m[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < n; ++i) m[i][i] = 2;
      m[n - 1][n - 1] = 1;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'C':
      for (int i = 0; i < n; ++i) m[i][i] = 2;
      m[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) m[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'G':
      m[0][0] = 2;
      m[1][1] = 6;
      link(0, 1, -3);
      break;
    default:
      break;
  }
  return m;
}

Root add(const Root& a, const Root& b, int scale = 1) {
  Root r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + scale * b[i];
  return r;
}

Root negate(const Root& a) {
  Root r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool is_positive(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
}

long exact_div(long num, long den) {
  if (den == 0 || num % den != 0) {
    throw std::logic_error("Chevalley constants: non-integral quotient in sign propagation");
  }
  return num / den;
}

}  // namespace

std::vector<Root> RootSystem::simple_roots() const {
  std::vector<Root> out;
  for (int i = 0; i < rank; ++i) {
    Root r(rank, 0);
    r[i] = 1;
    out.push_back(r);
  }
  return out;
}

std::vector<Root> RootSystem::all_roots() const {
  std::vector<Root> out = positive_roots;
  for (const auto& r : positive_roots) out.push_back(negate(r));
  return out;
}

int RootSystem::inner_product(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j) s += a[i] * inner[i][j] * b[j];
  }
  return s;
}

int RootSystem::pairing(const Root& beta, const Root& alpha) const {
  return 2 * inner_product(beta, alpha) / inner_product(alpha, alpha);
}

bool RootSystem::is_root(const Root& r) const {
  const Root p = is_positive(r) ? r : negate(r);
  return std::find(positive_roots.begin(), positive_roots.end(), p) != positive_roots.end();
}

int RootSystem::height(const Root& r) const { return std::accumulate(r.begin(), r.end(), 0); }

RootSystem build_root_system(char type, int rank) {
  const bool ok = (type == 'A' && rank >= 1) || (type == 'B' && rank >= 2) ||
                  (type == 'C' && rank >= 2) || (type == 'D' && rank >= 3) ||
                  (type == 'G' && rank == 2);
  if (!ok) {
    throw UnsupportedAlgebraError("unsupported root system " + std::string(1, type) +
                                  std::to_string(rank));
  }
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.inner = inner_matrix(type, rank);
  rs.cartan.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.cartan[i][j] = 2 * rs.inner[i][j] / rs.inner[i][i];

  // Root strings: beta + alpha_i is a root iff q = p - <beta, alpha_i^vee> > 0.
  std::set<Root> known;
  std::vector<Root> layer = rs.simple_roots();
  for (const auto& r : layer) known.insert(r);
  const auto simple = rs.simple_roots();
  while (!layer.empty()) {
    std::set<Root> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < rank; ++i) {
        int p = 0;
        while (known.count(add(beta, simple[i], -(p + 1)))) ++p;
        const int q = p - rs.pairing(beta, simple[i]);
        if (q > 0) next.insert(add(beta, simple[i]));
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) known.insert(r);
  }
  rs.positive_roots.assign(known.begin(), known.end());
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [&](const Root& a, const Root& b) {
    const int ha = rs.height(a), hb = rs.height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  return rs;
}

int ChevalleyData::root_index(const Root& r) const {
  auto it = index.find(r);
  return it == index.end() ? -1 : it->second;
}

int ChevalleyData::negative_of(int a) const {
  const int p = static_cast<int>(roots.size()) / 2;
  return a < p ? a + p : a - p;
}

std::vector<std::pair<int, long>> ChevalleyData::bracket(int x, int y) const {
  const int nr = root_count();
  std::vector<std::pair<int, long>> out;
  if (x >= nr && y >= nr) return out;
  if (x < nr && y < nr) {
    if (y == negative_of(x)) {
      for (int i = 0; i < rs.rank; ++i) {
        if (coroot[x][i] != 0) out.emplace_back(h_index(i), coroot[x][i]);
      }
      return out;
    }
    if (n[x][y] != 0) out.emplace_back(root_index(add(roots[x], roots[y])), n[x][y]);
    return out;
  }
  const bool h_first = x >= nr;
  const int h = (h_first ? x : y) - nr;
  const int r = h_first ? y : x;
  long c = 0;
  for (int k = 0; k < rs.rank; ++k) c += static_cast<long>(roots[r][k]) * rs.cartan[h][k];
  if (c != 0) out.emplace_back(r, h_first ? c : -c);
  return out;
}

ChevalleyData chevalley_constants(const RootSystem& rs) {
  ChevalleyData cd;
  cd.rs = rs;
  cd.roots = rs.all_roots();
  const int nr = cd.root_count();
  const int np = nr / 2;
  for (int a = 0; a < nr; ++a) cd.index[cd.roots[a]] = a;
  constexpr int kUnset = INT_MIN;
  cd.n.assign(nr, std::vector<int>(nr, 0));
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b)
      if (cd.root_index(add(cd.roots[a], cd.roots[b])) >= 0) cd.n[a][b] = kUnset;

  auto norm = [&](const Root& r) { return static_cast<long>(rs.inner_product(r, r)); };
  auto string_p = [&](int a, int b) {  // largest p with roots[b] - p roots[a] a root
    int p = 0;
    while (cd.root_index(add(cd.roots[b], cd.roots[a], -(p + 1))) >= 0) ++p;
    return p;
  };

  // General N_{r,s} reduced to same-sign pairs.
  std::function<long(int, int)> get = [&](int a, int b) -> long {
    const Root sum = add(cd.roots[a], cd.roots[b]);
    const int si = cd.root_index(sum);
    if (si < 0) return 0;
    const bool pa = a < np, pb = b < np;
    if (pa && pb) {
      if (cd.n[a][b] == kUnset) throw std::logic_error("Chevalley constants: order of evaluation");
      return cd.n[a][b];
    }
    if (!pa && !pb) return -get(cd.negative_of(a), cd.negative_of(b));
    const int t = cd.negative_of(si);
    const bool pt = t < np;
    if (pt == pa) return exact_div(get(t, a) * norm(cd.roots[t]), norm(cd.roots[b]));
    return exact_div(get(b, t) * norm(cd.roots[t]), norm(cd.roots[a]));
  };

  cd.extraspecial.assign(np, {-1, -1});
  for (int xi = 0; xi < np; ++xi) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < np; ++a) {
      const int b = cd.root_index(add(cd.roots[xi], cd.roots[a], -1));
      if (b >= 0 && b < np && a < b) pairs.emplace_back(a, b);
    }
    if (pairs.empty()) continue;
    const auto [a0, b0] = pairs.front();
    cd.extraspecial[xi] = {a0, b0};
    const int n0 = string_p(a0, b0) + 1;
    cd.n[a0][b0] = n0;
    cd.n[b0][a0] = -n0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto [a, b] = pairs[k];
      Rational acc(0);
      const int na0 = cd.negative_of(a0), nb0 = cd.negative_of(b0);
      const Root d1 = add(cd.roots[b], cd.roots[a0], -1);
      if (cd.root_index(d1) >= 0) acc += Rational(get(b, na0) * get(a, nb0), norm(d1));
      const Root d2 = add(cd.roots[a], cd.roots[a0], -1);
      if (cd.root_index(d2) >= 0) acc += Rational(get(na0, a) * get(b, nb0), norm(d2));
      acc *= Rational(norm(cd.roots[xi]), n0);
      acc.canonicalize();
      if (acc.get_den() != 1) throw std::logic_error("Chevalley constants: non-integral N");
      const int v = static_cast<int>(acc.get_num().get_si());
      cd.n[a][b] = v;
      cd.n[b][a] = -v;
    }
  }
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b)
      if (!(a < np && b < np)) cd.n[a][b] = static_cast<int>(get(a, b));

  for (int a = 0; a < nr; ++a) {
    for (int b = 0; b < nr; ++b) {
      if (cd.root_index(add(cd.roots[a], cd.roots[b])) < 0) continue;
      if (std::abs(cd.n[a][b]) != string_p(a, b) + 1) {
        throw std::logic_error("Chevalley constants: |N| differs from the root-string value");
      }
    }
  }

  cd.coroot.assign(nr, std::vector<int>(rs.rank, 0));
  for (int a = 0; a < nr; ++a) {
    const long rr = norm(cd.roots[a]);
    for (int i = 0; i < rs.rank; ++i) {
      cd.coroot[a][i] = static_cast<int>(exact_div(cd.roots[a][i] * rs.inner[i][i], rr));
    }
  }

  // Jacobi sweep over all basis triples.
  const int dim = cd.dim();
  auto bracket_vec = [&](int x, const std::vector<std::pair<int, long>>& v,
                         std::map<int, long>& acc, long scale) {
    for (const auto& [y, c] : v) {
      for (const auto& [z, d] : cd.bracket(x, y)) acc[z] += scale * c * d;
    }
  };
  for (int x = 0; x < dim; ++x) {
    for (int y = x + 1; y < dim; ++y) {
      const auto xy = cd.bracket(x, y);
      for (int z = y + 1; z < dim; ++z) {
        std::map<int, long> acc;
        bracket_vec(x, cd.bracket(y, z), acc, 1);
        bracket_vec(y, cd.bracket(z, x), acc, 1);
        bracket_vec(z, xy, acc, 1);
        for (const auto& [k, v] : acc) {
          if (v != 0) throw std::logic_error("Chevalley constants fail the Jacobi identity");
        }
      }
    }
  }
  return cd;
}

std::vector<Permutation> diagram_automorphism_group(const RootSystem& rs) {
  std::vector<Permutation> out;
  Permutation p(rs.rank);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < rs.rank && ok; ++i)
      for (int j = 0; j < rs.rank && ok; ++j) ok = rs.cartan[p[i]][p[j]] == rs.cartan[i][j];
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

int permutation_order(const Permutation& p) {
  Permutation q = p;
  int k = 1;
  while (!is_identity(q)) {
    q = compose(p, q);
    ++k;
  }
  return k;
}

long WeightLatticeQuotient::order() const {
  long o = 1;
  for (long d : factors) o *= d;
  return o;
}

WeightLatticeQuotient weight_lattice_quotient(const RootSystem& rs) {
  const int l = rs.rank;
  // Columns of a are the simple roots in fundamental-weight coordinates.
  std::vector<std::vector<long>> a(l, std::vector<long>(l)), u(l, std::vector<long>(l, 0)),
      uinv = u;
  for (int i = 0; i < l; ++i) {
    u[i][i] = uinv[i][i] = 1;
    for (int j = 0; j < l; ++j) a[i][j] = rs.cartan[i][j];
  }
  auto swap_rows = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
    for (int k = 0; k < l; ++k) std::swap(uinv[k][i], uinv[k][j]);
  };
  auto add_row = [&](int dst, int src, long q) {  // row dst += q row src
    for (int k = 0; k < l; ++k) {
      a[dst][k] += q * a[src][k];
      u[dst][k] += q * u[src][k];
      uinv[k][src] -= q * uinv[k][dst];
    }
  };
  auto add_col = [&](int dst, int src, long q) {
    for (int k = 0; k < l; ++k) a[k][dst] += q * a[k][src];
  };
  for (int t = 0; t < l; ++t) {
    while (true) {
      int bi = -1, bj = -1;
      for (int i = t; i < l; ++i)
        for (int j = t; j < l; ++j)
          if (a[i][j] != 0 && (bi < 0 || std::labs(a[i][j]) < std::labs(a[bi][bj]))) bi = i, bj = j;
      if (bi < 0) break;
      if (bi != t) swap_rows(t, bi);
      if (bj != t)
        for (int k = 0; k < l; ++k) std::swap(a[k][t], a[k][bj]);
      bool clean = true;
      for (int i = t + 1; i < l; ++i) {
        const long q = a[i][t] / a[t][t];
        if (q != 0) add_row(i, t, -q);
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < l; ++j) {
        const long q = a[t][j] / a[t][t];
        if (q != 0) add_col(j, t, -q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < l && bad < 0; ++i)
        for (int j = t + 1; j < l; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      add_row(t, bad, 1);
    }
    if (a[t][t] < 0) {
      for (int k = 0; k < l; ++k) {
        a[t][k] = -a[t][k];
        u[t][k] = -u[t][k];
        uinv[k][t] = -uinv[k][t];
      }
    }
  }
  WeightLatticeQuotient q;
  for (int t = 0; t < l; ++t) {
    if (a[t][t] == 1) continue;
    if (a[t][t] == 0) throw std::logic_error("degenerate Cartan matrix");
    q.factors.push_back(a[t][t]);
    std::vector<long> row(l);
    for (int k = 0; k < l; ++k) row[k] = ((u[t][k] % a[t][t]) + a[t][t]) % a[t][t];
    q.to_class.push_back(row);
  }
  q.lift.assign(l, std::vector<long>(q.factors.size()));
  for (int k = 0, c = 0; k < l; ++k) {
    if (a[k][k] == 1) continue;
    for (int i = 0; i < l; ++i) q.lift[i][c] = uinv[i][k];
    ++c;
  }
  return q;
}

std::vector<std::vector<long>> center_action(const WeightLatticeQuotient& q, const Permutation& pi) {
  const std::size_t m = q.factors.size();
  const std::size_t l = pi.size();
  std::vector<std::vector<long>> out(m, std::vector<long>(m));
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<long> w(l, 0);
    for (std::size_t i = 0; i < l; ++i) w[pi[i]] = q.lift[i][c];
    for (std::size_t r = 0; r < m; ++r) {
      long s = 0;
      for (std::size_t i = 0; i < l; ++i) s += q.to_class[r][i] * w[i];
      out[r][c] = ((s % q.factors[r]) + q.factors[r]) % q.factors[r];
    }
  }
  return out;
}

std::vector<long> table_center(char type, int rank) {
  switch (type) {
    case 'A':
      return {rank + 1};
    case 'B':
    case 'C':
      return {2};
    case 'D':
      return rank % 2 == 0 ? std::vector<long>{2, 2} : std::vector<long>{4};
    case 'G':
      return {};
    default:
      throw UnsupportedAlgebraError("no centre data for type " + std::string(1, type));
  }
}

int table_out_order(char type, int rank) {
  switch (type) {
    case 'A':
      return rank == 1 ? 1 : 2;
    case 'B':
    case 'C':
    case 'G':
      return 1;
    case 'D':
      return rank == 4 ? 6 : 2;
    default:
      throw UnsupportedAlgebraError("no outer automorphism data for type " + std::string(1, type));
  }
}

}  // namespace liefix
