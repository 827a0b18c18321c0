#include "liefix/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace liefix {

namespace {

ExactVector apply_sparse(const ExactMatrix& map, const SparseVector& v) {
  ExactVector out = ExactVector::Zero(map.rows());
  for (const auto& t : v) out += map.col(t.index) * t.coeff;
  return out;
}

ExactMatrix identity(int d) { return ExactMatrix::Identity(d, d); }

std::string perm_string(const Permutation& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i] + 1;
  os << "]";
  return os.str();
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::inner_from_element:
      return "inner-from-element";
    case Provenance::diagram_lift:
      return "diagram-lift";
    case Provenance::torus_twist:
      return "torus-twist";
    case Provenance::composite:
      return "composite";
  }
  return "composite";
}

bool preserves_brackets(const LieAlgebra& g, const ExactMatrix& map) {
  const int d = g.dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const ExactVector lhs = apply_sparse(map, g.table[i][j]);
      const ExactVector rhs = g.bracket(map.col(i), map.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

bool preserves_killing(const LieAlgebra& g, const ExactMatrix& map) {
  const ExactMatrix mt = map.transpose();
  return multiply<Cyc>(multiply<Cyc>(mt, g.killing), map) == g.killing;
}

int matrix_order(const ExactMatrix& map, int cap) {
  const ExactMatrix id = identity(static_cast<int>(map.rows()));
  ExactMatrix p = map;
  for (int k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = multiply<Cyc>(map, p);
  }
  return 0;
}

Automorphism make_automorphism(LieAlgebraPtr g, ExactMatrix map, Provenance p, std::string description) {
  if (map.rows() != g->dim() || map.cols() != g->dim()) throw AutomorphismError("map has the wrong shape");
  if (!preserves_brackets(*g, map)) throw AutomorphismError(description + ": map does not preserve brackets");
  if (!preserves_killing(*g, map)) throw AutomorphismError(description + ": map does not preserve the Killing form");
  const int order = matrix_order(map);
  if (order == 0) {
    throw AutomorphismError(description + ": order exceeds the cap of " + std::to_string(kMaxAutomorphismOrder));
  }
  Automorphism a;
  a.algebra = std::move(g);
  a.map = std::move(map);
  a.order = order;
  a.provenance = p;
  a.description = std::move(description);
  return a;
}

Automorphism identity_automorphism(LieAlgebraPtr g) {
  const int d = g->dim();
  return make_automorphism(std::move(g), identity(d), Provenance::inner_from_element, "id");
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  if (a.algebra != b.algebra) throw AutomorphismError("compose: automorphisms of different algebras");
  return make_automorphism(a.algebra, multiply<Cyc>(a.map, b.map), Provenance::composite,
                           "(" + a.description + ")o(" + b.description + ")");
}

Automorphism inner_from_element(LieAlgebraPtr g, const ExactMatrix& s) {
  if (!g->has_matrices()) throw AutomorphismError("inner_from_element needs a matrix realization");
  const auto sinv = inverse<Cyc>(s);
  if (!sinv) throw AutomorphismError("inner_from_element: element is not invertible");
  ExactMatrix map(g->dim(), g->dim());
  for (int i = 0; i < g->dim(); ++i) {
    const auto c = g->coordinates(multiply<Cyc>(multiply<Cyc>(s, g->matrices[i]), *sinv));
    if (!c) throw AutomorphismError("inner_from_element: element does not normalize " + g->label);
    map.col(i) = *c;
  }
  return make_automorphism(std::move(g), std::move(map), Provenance::inner_from_element, "Int(s)");
}

Automorphism form_twisted_outer(LieAlgebraPtr g, const ExactMatrix& form) {
  if (!g->has_matrices()) throw AutomorphismError("form_twisted_outer needs a matrix realization");
  const auto finv = inverse<Cyc>(form);
  if (!finv) throw AutomorphismError("form_twisted_outer: form is singular");
  ExactMatrix map(g->dim(), g->dim());
  for (int i = 0; i < g->dim(); ++i) {
    const ExactMatrix img = -multiply<Cyc>(multiply<Cyc>(form, ExactMatrix(g->matrices[i].transpose())), *finv);
    const auto c = g->coordinates(img);
    if (!c) throw AutomorphismError("form_twisted_outer: image leaves " + g->label);
    map.col(i) = *c;
  }
  return make_automorphism(std::move(g), std::move(map), Provenance::composite, "X -> -F X^T F^-1");
}

Automorphism standard_outer(LieAlgebraPtr g) {
  if (g->family != Family::sl) throw AutomorphismError("standard_outer is defined on sl(n)");
  auto a = form_twisted_outer(g, identity(g->matrix_size));
  a.description = "X -> -X^T";
  return a;
}

ExactMatrix model_map(const Automorphism& theta) {
  const LieAlgebra& g = *theta.algebra;
  if (g.chevalley) return theta.map;
  if (!g.model) throw AutomorphismError(g.label + " has no Chevalley model");
  return multiply<Cyc>(multiply<Cyc>(g.to_model, theta.map), g.from_model);
}

ExactMatrix from_model_map(const LieAlgebra& g, const ExactMatrix& m) {
  if (g.chevalley) return m;
  if (!g.model) throw AutomorphismError(g.label + " has no Chevalley model");
  return multiply<Cyc>(multiply<Cyc>(g.from_model, m), g.to_model);
}

Automorphism lift_diagram_automorphism(LieAlgebraPtr g, const Permutation& pi) {
  const LieAlgebra& c = g->chevalley ? *g : *g->model;
  if (!c.chevalley) throw AutomorphismError(g->label + " has no Chevalley model");
  const ChevalleyData& cd = *c.chevalley;
  const auto group = diagram_automorphism_group(cd.rs);
  if (std::find(group.begin(), group.end(), pi) == group.end()) {
    throw AutomorphismError("permutation " + perm_string(pi) + " is not a diagram symmetry of " + cd.rs.label());
  }
  const int l = cd.rs.rank;
  std::vector<ExactVector> e(l), f(l);
  for (int i = 0; i < l; ++i) {
    Root r(l, 0);
    r[pi[i]] = 1;
    const int a = cd.root_index(r);
    e[i] = c.basis_vector(a);
    f[i] = c.basis_vector(cd.negative_of(a));
  }
  const auto phi = homomorphism_from_generators(c, c, e, f);
  if (!phi) throw std::logic_error("diagram lift fails the Chevalley relations");
  return make_automorphism(g, from_model_map(*g, *phi), Provenance::diagram_lift, "lift " + perm_string(pi));
}

Automorphism torus_twist(const Automorphism& base, const std::vector<int>& exponents, int m) {
  const LieAlgebra& g = *base.algebra;
  const LieAlgebra& c = g.chevalley ? g : *g.model;
  const ChevalleyData& cd = *c.chevalley;
  const int l = cd.rs.rank;
  if (static_cast<int>(exponents.size()) != l) throw AutomorphismError("torus_twist: one exponent per simple root");
  if (m < 1 || m > kMaxCyclotomicOrder) throw AutomorphismError("torus_twist: modulus out of range");
  const ExactMatrix b = model_map(base);
  const int nr = cd.root_count();
  for (int i = 0; i < l; ++i)
    for (int r = 0; r < nr; ++r)
      if (!b(r, cd.h_index(i)).is_zero()) throw AutomorphismError("torus_twist: base does not preserve the Cartan subalgebra");
  ExactMatrix twisted = b;
  for (int r = 0; r < nr; ++r) {
    long k = 0;
    for (int i = 0; i < l; ++i) k += static_cast<long>(exponents[i]) * cd.roots[r][i];
    const Cyc z = Cyc::zeta(m, ((k % m) + m) % m);
    if (!z.is_one()) twisted.row(r) *= z;
  }
  std::ostringstream desc;
  desc << "twist(";
  for (int i = 0; i < l; ++i) desc << (i ? "," : "") << exponents[i];
  desc << "; " << m << ")o" << base.description;
  return make_automorphism(base.algebra, from_model_map(g, twisted), Provenance::torus_twist, desc.str());
}

std::vector<int> EigenDecomposition::dims() const {
  std::vector<int> out;
  for (const auto& s : spaces) out.push_back(static_cast<int>(s.basis.size()));
  return out;
}

bool grading_holds(const Automorphism& theta, const EigenDecomposition& dec) {
  const LieAlgebra& g = *theta.algebra;
  const int n = dec.order;
  for (const auto& sl : dec.spaces)
    for (const auto& sk : dec.spaces) {
      if (sk.k < sl.k) continue;
      const Cyc z = Cyc::zeta(n, (sl.k + sk.k) % n);
      for (const auto& u : sl.basis)
        for (const auto& v : sk.basis) {
          const ExactVector w = g.bracket(u, v);
          if (is_zero_vector<Cyc>(w)) continue;
          if (multiply<Cyc>(theta.map, w) != ExactVector(w * z)) return false;
        }
    }
  return true;
}

EigenDecomposition eigendecomposition(const Automorphism& theta) {
  EigenDecomposition dec;
  dec.order = theta.order;
  const int d = theta.algebra->dim();
  int total = 0;
  for (int k = 0; k < theta.order; ++k) {
    Eigenspace s;
    s.k = k;
    s.eigenvalue = Cyc::zeta(theta.order, k);
    ExactMatrix m = theta.map;
    for (int i = 0; i < d; ++i) m(i, i) -= s.eigenvalue;
    s.basis = nullspace<Cyc>(m);
    total += static_cast<int>(s.basis.size());
    dec.spaces.push_back(std::move(s));
  }
  if (total != d) throw std::logic_error("eigenspace dimensions do not sum to dim g");
  dec.grading_ok = grading_holds(theta, dec);
  return dec;
}

Permutation clique_of(const Automorphism& theta) {
  const LieAlgebra& g = *theta.algebra;
  const LieAlgebra& c = g.chevalley ? g : *g.model;
  const ChevalleyData& cd = *c.chevalley;
  const RootSystem& rs = cd.rs;
  const int l = rs.rank, nr = cd.root_count();
  const ExactMatrix m = model_map(theta);
  for (int i = 0; i < l; ++i)
    for (int r = 0; r < nr; ++r)
      if (!m(r, cd.h_index(i)).is_zero()) {
        throw AutomorphismError("unsupported input: supply a CSA-preserving representative");
      }
  // induced root permutation
  std::vector<int> sigma(nr, -1);
  for (int a = 0; a < nr; ++a) {
    int target = -1;
    for (int r = 0; r < cd.dim(); ++r) {
      if (m(r, a).is_zero()) continue;
      if (r >= nr || target >= 0) throw AutomorphismError("unsupported input: root vectors are not mapped to root vectors");
      target = r;
    }
    if (target < 0) throw AutomorphismError("map is singular");
    sigma[a] = target;
  }
  // v = w^{-1} as columns v(alpha_k); descend until v maps positive simple roots to positive roots
  std::vector<int> sigma_inv(nr);
  for (int a = 0; a < nr; ++a) sigma_inv[sigma[a]] = a;
  std::vector<Root> v(l);
  for (int k = 0; k < l; ++k) {
    Root r(l, 0);
    r[k] = 1;
    v[k] = cd.roots[sigma_inv[cd.root_index(r)]];
  }
  auto negative = [](const Root& r) { return std::any_of(r.begin(), r.end(), [](int x) { return x < 0; }); };
  for (int guard = 0; guard < 10000; ++guard) {
    int k = -1;
    for (int i = 0; i < l && k < 0; ++i)
      if (negative(v[i])) k = i;
    if (k < 0) break;
    const Root vk = v[k];
    for (int j = 0; j < l; ++j) {
      const int a = rs.cartan[k][j];
      if (a == 0) continue;
      for (int t = 0; t < l; ++t) v[j][t] -= a * vk[t];
    }
  }
  Permutation pi(l, -1);
  for (int j = 0; j < l; ++j) {
    int i = -1;
    for (int t = 0; t < l; ++t) {
      if (v[j][t] == 1 && i < 0) i = t;
      else if (v[j][t] != 0) i = -2;
    }
    if (i < 0) throw std::logic_error("Weyl descent did not reach a diagram symmetry");
    pi[i] = j;
  }
  return pi;
}

EnumerationResult enumerate_classes(const Automorphism& base, int m, std::uint64_t seed) {
  if (m < 1 || m > 6) throw SearchGuardError("enumerate_classes supports moduli 1..6");
  const LieAlgebra& g = *base.algebra;
  const LieAlgebra& c = g.chevalley ? g : *g.model;
  const int l = c.chevalley->rs.rank;
  long size = 1;
  for (int i = 0; i < l; ++i) {
    size *= m;
    if (size > kMaxTwistSearch) {
      throw SearchGuardError("torus-twist search of size " + std::to_string(m) + "^" + std::to_string(l) +
                             " exceeds the limit of " + std::to_string(kMaxTwistSearch));
    }
  }
  if (m % base.order != 0) throw AutomorphismError("base order must divide the modulus");

  using Key = std::tuple<bool, InvariantProfile, std::vector<int>>;
  std::map<Key, ClassBucket> buckets;
  EnumerationResult result;
  result.modulus = m;
  std::vector<int> exps(l, 0);
  for (long idx = 0; idx < size; ++idx) {
    long rest = idx;
    for (int i = l - 1; i >= 0; --i) {
      exps[i] = static_cast<int>(rest % m);
      rest /= m;
    }
    Automorphism theta;
    try {
      theta = torus_twist(base, exps, m);
    } catch (const AutomorphismError&) {
      ++result.skipped;  // order above the cap
      continue;
    }
    if (m % theta.order != 0) {
      ++result.skipped;
      continue;
    }
    const auto dec = eigendecomposition(theta);
    if (!dec.grading_ok) throw std::logic_error("grading check failed for " + theta.description);
    const auto profile = invariant_profile(g, dec.spaces[0].basis, seed);
    std::vector<int> multiset = dec.dims();
    std::sort(multiset.begin(), multiset.end());
    const bool exact = theta.order == m;
    Key key{!exact, profile, multiset};
    auto it = buckets.find(key);
    if (it == buckets.end()) {
      ClassBucket bucket;
      bucket.profile = profile;
      bucket.eigendims = dec.dims();
      bucket.eigendim_multiset = multiset;
      bucket.order = theta.order;
      bucket.exact_order = exact;
      bucket.representative = theta;
      bucket.exponents = exps;
      bucket.members = 1;
      buckets.emplace(key, std::move(bucket));
    } else {
      ++it->second.members;
    }
  }
  for (auto& [key, bucket] : buckets) result.buckets.push_back(std::move(bucket));
  std::stable_sort(result.buckets.begin(), result.buckets.end(), [](const ClassBucket& a, const ClassBucket& b) {
    if (a.exact_order != b.exact_order) return a.exact_order;
    if (a.profile.dim != b.profile.dim) return a.profile.dim > b.profile.dim;
    if (a.profile != b.profile) return a.profile < b.profile;
    return a.eigendim_multiset < b.eigendim_multiset;
  });
  return result;
}

// ---------------------------------------------------------------------------

std::string MatrixGroup::label() const {
  switch (family) {
    case GroupFamily::SL:
      return "SL(" + std::to_string(n) + ")";
    case GroupFamily::SO:
      return "SO(" + std::to_string(n) + ")";
    case GroupFamily::Sp:
      return "Sp(" + std::to_string(n) + ")";
  }
  return "?";
}

ExactMatrix ipq(int p, int q) {
  ExactMatrix m = ExactMatrix::Identity(p + q, p + q);
  for (int i = p; i < p + q; ++i) m(i, i) = Cyc(-1);
  return m;
}

ExactMatrix j_form(int m) {
  ExactMatrix j = ExactMatrix::Zero(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    j(i, m + i) = Cyc(1);
    j(m + i, i) = Cyc(-1);
  }
  return j;
}

ExactMatrix MatrixGroup::form() const {
  if (family == GroupFamily::Sp) return j_form(n / 2);
  return ExactMatrix::Identity(n, n);
}

bool MatrixGroup::contains(const ExactMatrix& a) const {
  if (a.rows() != n || a.cols() != n) return false;
  switch (family) {
    case GroupFamily::SL:
      return determinant<Cyc>(a).is_one();
    case GroupFamily::SO:
      return multiply<Cyc>(ExactMatrix(a.transpose()), a) == ExactMatrix::Identity(n, n) &&
             determinant<Cyc>(a).is_one();
    case GroupFamily::Sp: {
      const ExactMatrix j = form();
      return multiply<Cyc>(multiply<Cyc>(ExactMatrix(a.transpose()), j), a) == j;
    }
  }
  return false;
}

std::vector<Cyc> MatrixGroup::center() const {
  std::vector<Cyc> out;
  const int big = 2 * n;
  if (big > kMaxCyclotomicOrder) throw CyclotomicOrderError("centre search needs zeta_" + std::to_string(big));
  for (int k = 0; k < big; ++k) {
    const Cyc z = Cyc::zeta(big, k);
    if (contains(ExactMatrix(ExactMatrix::Identity(n, n) * z))) out.push_back(z);
  }
  return out;
}

GroupAutomorphism GroupAutomorphism::identity(int n) { return conjugate_by(ExactMatrix::Identity(n, n)); }

GroupAutomorphism GroupAutomorphism::conjugate_by(const ExactMatrix& s) {
  GroupAutomorphism a;
  a.kind = Kind::conjugate_by;
  a.matrix = s;
  return a;
}

GroupAutomorphism GroupAutomorphism::inverse_transpose() {
  GroupAutomorphism a;
  a.kind = Kind::inverse_transpose;
  return a;
}

GroupAutomorphism GroupAutomorphism::form_twisted(const ExactMatrix& f) {
  GroupAutomorphism a;
  a.kind = Kind::form_twisted;
  a.matrix = f;
  return a;
}

GroupAutomorphism GroupAutomorphism::composite(std::vector<GroupAutomorphism> parts) {
  GroupAutomorphism a;
  a.kind = Kind::composite;
  a.parts = std::move(parts);
  return a;
}

ExactMatrix GroupAutomorphism::apply(const ExactMatrix& a) const {
  switch (kind) {
    case Kind::conjugate_by:
      return multiply<Cyc>(multiply<Cyc>(matrix, a), *inverse<Cyc>(matrix));
    case Kind::inverse_transpose:
      return *inverse<Cyc>(ExactMatrix(a.transpose()));
    case Kind::form_twisted:
      return multiply<Cyc>(multiply<Cyc>(matrix, *inverse<Cyc>(ExactMatrix(a.transpose()))), *inverse<Cyc>(matrix));
    case Kind::composite: {
      ExactMatrix out = a;
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) out = it->apply(out);
      return out;
    }
  }
  return a;
}

ExactMatrix GroupAutomorphism::differential(const ExactMatrix& x) const {
  switch (kind) {
    case Kind::conjugate_by:
      return multiply<Cyc>(multiply<Cyc>(matrix, x), *inverse<Cyc>(matrix));
    case Kind::inverse_transpose:
      return -x.transpose();
    case Kind::form_twisted:
      return -multiply<Cyc>(multiply<Cyc>(matrix, ExactMatrix(x.transpose())), *inverse<Cyc>(matrix));
    case Kind::composite: {
      ExactMatrix out = x;
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) out = it->differential(out);
      return out;
    }
  }
  return x;
}

std::string GroupAutomorphism::describe() const {
  switch (kind) {
    case Kind::conjugate_by:
      return "conjugate-by(s)";
    case Kind::inverse_transpose:
      return "inverse-transpose";
    case Kind::form_twisted:
      return "form-twisted inverse-transpose";
    case Kind::composite: {
      std::string s = "composite(";
      for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i].describe();
      return s + ")";
    }
  }
  return "?";
}

std::optional<Cyc> s_theta_membership(const MatrixGroup& group, const ExactMatrix& s, const GroupAutomorphism& theta,
                                      int n) {
  if (!group.contains(s)) throw std::invalid_argument("s_theta_membership: element is not in " + group.label());
  ExactMatrix product = s, cur = s;
  for (int k = 1; k < n; ++k) {
    cur = theta.apply(cur);
    product = multiply<Cyc>(product, cur);
  }
  const Cyc z = product(0, 0);
  for (Eigen::Index i = 0; i < product.rows(); ++i)
    for (Eigen::Index j = 0; j < product.cols(); ++j)
      if (product(i, j) != (i == j ? z : Cyc(0))) return std::nullopt;
  return z;
}

Automorphism differential_automorphism(LieAlgebraPtr g, const GroupAutomorphism& theta) {
  if (!g->has_matrices()) throw AutomorphismError("differential_automorphism needs a matrix realization");
  ExactMatrix map(g->dim(), g->dim());
  for (int i = 0; i < g->dim(); ++i) {
    const auto c = g->coordinates(theta.differential(g->matrices[i]));
    if (!c) throw AutomorphismError("differential of " + theta.describe() + " leaves " + g->label);
    map.col(i) = *c;
  }
  const Provenance p = theta.kind == GroupAutomorphism::Kind::conjugate_by ? Provenance::inner_from_element
                                                                            : Provenance::composite;
  return make_automorphism(std::move(g), std::move(map), p, "d(" + theta.describe() + ")");
}

}  // namespace liefix
