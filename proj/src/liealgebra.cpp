#include "liefix/liealgebra.hpp"

#include <random>
#include <sstream>

namespace liefix {

namespace {

ExactMatrix unit(int n, int i, int j) {
  ExactMatrix m = ExactMatrix::Zero(n, n);
  m(i, j) = Cyc(1);
  return m;
}

void axpy(ExactVector& acc, const Cyc& a, const SparseVector& v) {
  for (const auto& t : v) acc(t.index) += a * t.coeff;
}

Cyc coeff_of(const SparseVector& v, int index) {
  for (const auto& t : v)
    if (t.index == index) return t.coeff;
  return Cyc(0);
}

SparseVector to_sparse(const ExactVector& v) {
  SparseVector out;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) out.push_back({static_cast<int>(i), v(i)});
  return out;
}

std::string root_label(char prefix, const Root& r) {
  std::ostringstream os;
  os << prefix << "(";
  for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << std::abs(r[i]);
  os << ")";
  return os.str();
}

// Split form of so(n) with respect to the antidiagonal form, moved to
// X^T = -X by P with P^T P = antidiag: coordinate pair (k, n-1-k) goes to
// (2k, 2k+1) via a = x_k + x_{n-1-k}/2, b = i x_k - i x_{n-1-k}/2.
ExactMatrix so_transform(int n) {
  const int m = n / 2;
  const Cyc half = Cyc::rational(1, 2);
  const Cyc i = Cyc::zeta(4);
  ExactMatrix p = ExactMatrix::Zero(n, n);
  for (int k = 0; k < m; ++k) {
    const int kb = n - 1 - k;
    p(2 * k, k) = Cyc(1);
    p(2 * k, kb) = half;
    p(2 * k + 1, k) = i;
    p(2 * k + 1, kb) = -(i * half);
  }
  if (n % 2 == 1) p(n - 1, m) = Cyc(1);
  return p;
}

std::optional<RootSystem> root_system_for(Family family, int n) {
  switch (family) {
    case Family::sl:
      return build_root_system('A', n - 1);
    case Family::so:
      if (n == 3) return build_root_system('A', 1);
      if (n == 4) return std::nullopt;
      return n % 2 ? build_root_system('B', n / 2) : build_root_system('D', n / 2);
    case Family::sp:
      return n == 2 ? build_root_system('A', 1) : build_root_system('C', n / 2);
    default:
      return std::nullopt;
  }
}

}  // namespace

const RootSystem* LieAlgebra::root_system() const {
  if (chevalley) return &chevalley->rs;
  if (model) return model->root_system();
  return nullptr;
}

ExactVector LieAlgebra::basis_vector(int i) const {
  ExactVector v = ExactVector::Zero(dim());
  v(i) = Cyc(1);
  return v;
}

ExactVector LieAlgebra::bracket(const ExactVector& x, const ExactVector& y) const {
  ExactVector out = ExactVector::Zero(dim());
  for (int i = 0; i < dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y(j).is_zero() || table[i][j].empty()) continue;
      axpy(out, x(i) * y(j), table[i][j]);
    }
  }
  return out;
}

ExactVector LieAlgebra::bracket_basis(int i, const ExactVector& y) const {
  ExactVector out = ExactVector::Zero(dim());
  for (int j = 0; j < dim(); ++j) {
    if (y(j).is_zero()) continue;
    axpy(out, y(j), table[i][j]);
  }
  return out;
}

ExactMatrix LieAlgebra::ad(const ExactVector& x) const {
  ExactMatrix out = ExactMatrix::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < dim(); ++j)
      for (const auto& t : table[i][j]) out(t.index, j) += x(i) * t.coeff;
  }
  return out;
}

ExactMatrix LieAlgebra::to_matrix(const ExactVector& coords) const {
  ExactMatrix out = ExactMatrix::Zero(matrix_size, matrix_size);
  for (int k = 0; k < dim(); ++k) {
    if (coords(k).is_zero()) continue;
    for (Eigen::Index e = 0; e < out.size(); ++e) {
      const Cyc& b = matrices[k].data()[e];
      if (!b.is_zero()) out.data()[e] += coords(k) * b;
    }
  }
  return out;
}

std::optional<ExactVector> LieAlgebra::coordinates(const ExactMatrix& m) const {
  if (m.rows() != matrix_size || m.cols() != matrix_size) return std::nullopt;
  ExactVector sample(dim());
  for (int k = 0; k < dim(); ++k) {
    const int e = coord_rows[k];
    sample(k) = m(e / matrix_size, e % matrix_size);
  }
  ExactVector coords = multiply<Cyc>(coord_map, sample);
  if (to_matrix(coords) != m) return std::nullopt;
  return coords;
}

bool LieAlgebra::jacobi_holds() const {
  const int d = dim();
  for (int i = 0; i < d; ++i) {
    if (!table[i][i].empty()) return false;
    for (int j = i + 1; j < d; ++j) {
      ExactVector s = ExactVector::Zero(d);
      axpy(s, Cyc(1), table[i][j]);
      axpy(s, Cyc(1), table[j][i]);
      if (!is_zero_vector<Cyc>(s)) return false;
    }
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        ExactVector s = ExactVector::Zero(d);
        for (const auto& t : table[j][k]) axpy(s, t.coeff, table[i][t.index]);
        for (const auto& t : table[k][i]) axpy(s, t.coeff, table[j][t.index]);
        for (const auto& t : table[i][j]) axpy(s, t.coeff, table[k][t.index]);
        if (!is_zero_vector<Cyc>(s)) return false;
      }
  return true;
}

ExactMatrix killing_matrix(const LieAlgebra& g) {
  const int d = g.dim();
  ExactMatrix k = ExactMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      // tr(ad x_i ad x_j) = sum_l sum_{(m,c) in [x_i, x_l]} c * coeff of x_l in [x_j, x_m]
      Cyc s;
      for (int l = 0; l < d; ++l)
        for (const auto& t : g.table[i][l]) {
          const Cyc c = coeff_of(g.table[j][t.index], l);
          if (!c.is_zero()) s += t.coeff * c;
        }
      k(i, j) = s;
      k(j, i) = s;
    }
  }
  return k;
}

void finalize_matrix_algebra(LieAlgebra& g) {
  const int d = g.dim();
  const int n = g.matrix_size;
  ExactMatrix flat(d, n * n);
  for (int k = 0; k < d; ++k)
    for (int e = 0; e < n * n; ++e) flat(k, e) = g.matrices[k](e / n, e % n);
  const auto r = rref<Cyc>(flat);
  if (r.rank != d) throw std::invalid_argument("matrix basis is linearly dependent");
  g.coord_rows = r.pivots;
  ExactMatrix sub(d, d);
  for (int k = 0; k < d; ++k)
    for (int c = 0; c < d; ++c) sub(k, c) = flat(c, r.pivots[k]);
  g.coord_map = *inverse<Cyc>(sub);

  g.table.assign(d, std::vector<SparseVector>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const ExactMatrix c =
          multiply<Cyc>(g.matrices[i], g.matrices[j]) - multiply<Cyc>(g.matrices[j], g.matrices[i]);
      if (is_zero_matrix<Cyc>(c)) continue;
      const auto coords = g.coordinates(c);
      if (!coords) throw std::logic_error("matrix basis of " + g.label + " is not closed under brackets");
      g.table[i][j] = to_sparse(*coords);
      g.table[j][i] = to_sparse(ExactVector(-*coords));
    }
  }
  g.killing = killing_matrix(g);
}

LieAlgebraPtr build_from_chevalley(const ChevalleyData& cd) {
  auto g = std::make_shared<LieAlgebra>();
  g->label = cd.rs.label();
  g->family = Family::chevalley;
  g->chevalley = std::make_shared<const ChevalleyData>(cd);
  const int np = cd.root_count() / 2;
  for (int a = 0; a < cd.root_count(); ++a) g->basis_labels.push_back(root_label(a < np ? 'e' : 'f', cd.roots[a]));
  for (int i = 0; i < cd.rs.rank; ++i) g->basis_labels.push_back("h" + std::to_string(i + 1));
  const int d = cd.dim();
  g->table.assign(d, std::vector<SparseVector>(d));
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (const auto& [k, c] : cd.bracket(x, y)) g->table[x][y].push_back({k, Cyc(c)});
  g->killing = killing_matrix(*g);
  return g;
}

std::pair<std::vector<ExactMatrix>, std::vector<ExactMatrix>> matrix_chevalley_generators(Family family,
                                                                                          int n) {
  std::vector<ExactMatrix> e, f;
  switch (family) {
    case Family::sl:
      for (int i = 0; i + 1 < n; ++i) {
        e.push_back(unit(n, i, i + 1));
        f.push_back(unit(n, i + 1, i));
      }
      break;
    case Family::sp: {
      const int m = n / 2;
      for (int i = 0; i + 1 < m; ++i) {
        e.push_back(unit(n, i, i + 1) - unit(n, m + i + 1, m + i));
        f.push_back(unit(n, i + 1, i) - unit(n, m + i, m + i + 1));
      }
      e.push_back(unit(n, m - 1, n - 1));
      f.push_back(unit(n, n - 1, m - 1));
      break;
    }
    case Family::so: {
      if (n == 4) throw UnsupportedAlgebraError("so(4) is not simple");
      const int m = n / 2;
      auto bar = [n](int k) { return n - 1 - k; };
      // split-form generators for e_k - e_{k+1}
      for (int i = 0; i + 1 < m; ++i) {
        e.push_back(unit(n, i, i + 1) - unit(n, bar(i + 1), bar(i)));
        f.push_back(unit(n, i + 1, i) - unit(n, bar(i), bar(i + 1)));
      }
      if (n % 2 == 1) {
        // short root e_m
        const int k = m - 1, mid = m;
        e.push_back(unit(n, k, mid) - unit(n, mid, bar(k)));
        f.push_back(Cyc(2) * (unit(n, mid, k) - unit(n, bar(k), mid)));
      } else {
        // e_{m-1} + e_m
        const int i = m - 2, j = m - 1;
        e.push_back(unit(n, i, bar(j)) - unit(n, j, bar(i)));
        f.push_back(unit(n, bar(j), i) - unit(n, bar(i), j));
      }
      const ExactMatrix p = so_transform(n);
      const ExactMatrix pinv = *inverse<Cyc>(p);
      for (auto& x : e) x = multiply<Cyc>(multiply<Cyc>(p, x), pinv);
      for (auto& x : f) x = multiply<Cyc>(multiply<Cyc>(p, x), pinv);
      break;
    }
    default:
      throw std::invalid_argument("matrix_chevalley_generators: abstract family");
  }
  return {e, f};
}

std::optional<ExactMatrix> homomorphism_from_generators(const LieAlgebra& source, const LieAlgebra& target,
                                                        const std::vector<ExactVector>& e_images,
                                                        const std::vector<ExactVector>& f_images) {
  const ChevalleyData& cd = *source.chevalley;
  const int l = cd.rs.rank;
  const int np = cd.root_count() / 2;
  std::vector<ExactVector> img(cd.dim());
  std::vector<int> simple(l);
  for (int i = 0; i < l; ++i) {
    Root r(l, 0);
    r[i] = 1;
    simple[i] = cd.root_index(r);
    img[simple[i]] = e_images[i];
    img[cd.negative_of(simple[i])] = f_images[i];
    img[cd.h_index(i)] = target.bracket(e_images[i], f_images[i]);
  }
  for (int xi = 0; xi < np; ++xi) {
    if (cd.rs.height(cd.roots[xi]) < 2) continue;
    for (int i = 0; i < l; ++i) {
      Root rest = cd.roots[xi];
      rest[i] -= 1;
      const int b = cd.root_index(rest);
      if (b < 0 || b >= np) continue;
      const Cyc np_ = Cyc(cd.n[simple[i]][b]);
      const Cyc nn_ = Cyc(cd.n[cd.negative_of(simple[i])][cd.negative_of(b)]);
      img[xi] = target.bracket(e_images[i], img[b]) / np_;
      img[cd.negative_of(xi)] = target.bracket(f_images[i], img[cd.negative_of(b)]) / nn_;
      break;
    }
  }
  for (int x = 0; x < cd.dim(); ++x)
    for (int y = x + 1; y < cd.dim(); ++y) {
      ExactVector expect = ExactVector::Zero(target.dim());
      for (const auto& t : source.table[x][y]) expect += img[t.index] * t.coeff;
      if (target.bracket(img[x], img[y]) != expect) return std::nullopt;
    }
  return columns<Cyc>(img, target.dim());
}

LieAlgebraPtr build_classical(Family family, int n) {
  auto g = std::make_shared<LieAlgebra>();
  g->family = family;
  g->matrix_size = n;
  switch (family) {
    case Family::sl:
      if (n < 2) throw UnsupportedAlgebraError("sl(n) needs n >= 2");
      g->label = "sl(" + std::to_string(n) + ")";
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          g->matrices.push_back(unit(n, i, j));
          g->basis_labels.push_back("E" + std::to_string(i + 1) + "," + std::to_string(j + 1));
        }
      for (int i = 0; i + 1 < n; ++i) {
        g->matrices.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
        g->basis_labels.push_back("H" + std::to_string(i + 1));
      }
      break;
    case Family::so:
      if (n < 3) throw UnsupportedAlgebraError("so(n) needs n >= 3");
      g->label = "so(" + std::to_string(n) + ")";
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          g->matrices.push_back(unit(n, i, j) - unit(n, j, i));
          g->basis_labels.push_back("A" + std::to_string(i + 1) + "," + std::to_string(j + 1));
        }
      break;
    case Family::sp: {
      if (n < 2 || n % 2) throw UnsupportedAlgebraError("sp(n) needs even n >= 2");
      g->label = "sp(" + std::to_string(n) + ")";
      const int m = n / 2;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          g->matrices.push_back(unit(n, i, j) - unit(n, m + j, m + i));
          g->basis_labels.push_back("A" + std::to_string(i + 1) + "," + std::to_string(j + 1));
        }
      for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
          ExactMatrix b = unit(n, i, m + j);
          if (i != j) b += unit(n, j, m + i);
          g->matrices.push_back(b);
          g->basis_labels.push_back("B" + std::to_string(i + 1) + "," + std::to_string(j + 1));
        }
      for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
          ExactMatrix c = unit(n, m + i, j);
          if (i != j) c += unit(n, m + j, i);
          g->matrices.push_back(c);
          g->basis_labels.push_back("C" + std::to_string(i + 1) + "," + std::to_string(j + 1));
        }
      break;
    }
    default:
      throw std::invalid_argument("build_classical: use build_from_chevalley for abstract algebras");
  }
  finalize_matrix_algebra(*g);

  if (auto rs = root_system_for(family, n)) {
    auto model = build_from_chevalley(chevalley_constants(*rs));
    const auto [e, f] = matrix_chevalley_generators(family, n);
    std::vector<ExactVector> ec, fc;
    for (const auto& x : e) ec.push_back(*g->coordinates(x));
    for (const auto& x : f) fc.push_back(*g->coordinates(x));
    auto phi = homomorphism_from_generators(*model, *g, ec, fc);
    if (!phi) throw std::logic_error("Chevalley generators of " + g->label + " fail the relations");
    auto inv = inverse<Cyc>(*phi);
    if (!inv) throw std::logic_error("Chevalley model of " + g->label + " is not an isomorphism");
    g->model = model;
    g->from_model = *phi;
    g->to_model = *inv;
  }
  return g;
}

InvariantProfile invariant_profile(const LieAlgebra& g, const std::vector<ExactVector>& basis,
                                   std::uint64_t seed) {
  InvariantProfile p;
  const int d = static_cast<int>(basis.size());
  const int n = g.dim();
  p.dim = d;
  if (d == 0) return p;
  EchelonBasis<Cyc> span(n);
  for (const auto& v : basis)
    if (!span.add(v)) throw std::invalid_argument("invariant_profile: basis is linearly dependent");

  // brackets of basis pairs
  std::vector<std::vector<ExactVector>> br(d, std::vector<ExactVector>(d));
  EchelonBasis<Cyc> derived(n);
  for (int i = 0; i < d; ++i) {
    br[i][i] = ExactVector::Zero(n);
    for (int j = i + 1; j < d; ++j) {
      br[i][j] = g.bracket(basis[i], basis[j]);
      br[j][i] = -br[i][j];
      if (!span.contains(br[i][j])) throw NotSubalgebraError("not a subalgebra: span is not closed under the bracket");
      derived.add(br[i][j]);
    }
  }
  p.derived_dim = derived.rank();

  // centre: kernel of c -> sum_i c_i [b_i, b_j] for every j, intersected one j at a time
  ExactMatrix kernel = ExactMatrix::Identity(d, d);
  for (int j = 0; j < d && kernel.cols() > 0; ++j) {
    ExactMatrix m(n, d);
    for (int i = 0; i < d; ++i) m.col(i) = br[i][j];
    const ExactMatrix restricted = multiply<Cyc>(m, kernel);
    const auto ns = nullspace<Cyc>(restricted);
    kernel = multiply<Cyc>(kernel, columns<Cyc>(ns, kernel.cols()));
  }
  p.center_dim = static_cast<int>(kernel.cols());

  // rank: minimal centralizer dimension of pseudo-random elements
  int best = d;
  for (int draw = 0; draw < kRankDraws; ++draw) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(draw));
    std::uniform_int_distribution<int> coef(-9, 9);
    std::vector<Cyc> c(d);
    for (auto& x : c) x = Cyc(coef(rng));
    ExactMatrix adx = ExactMatrix::Zero(n, d);
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i)
        if (!c[i].is_zero() && i != j) adx.col(j) += br[i][j] * c[i];
    best = std::min(best, d - rank<Cyc>(adx));
  }
  p.rank = best;
  return p;
}

std::string to_string(const InvariantProfile& p) {
  std::ostringstream os;
  os << "(dim " << p.dim << ", rank " << p.rank << ", centre " << p.center_dim << ", derived " << p.derived_dim
     << ")";
  return os.str();
}

}  // namespace liefix
