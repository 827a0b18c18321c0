#include "liefix/realforms.hpp"

#include <algorithm>
#include <map>

namespace liefix {

namespace {

void append_name(std::string& dst, const std::string& name) {
  if (name.empty()) return;
  dst += dst.empty() ? name : " = " + name;
}

std::string pq(const std::string& stem, int p, int q) {
  return stem + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

bool contains_scalar(const std::vector<Cyc>& v, const Cyc& z) { return std::find(v.begin(), v.end(), z) != v.end(); }

}  // namespace

ExactVector Conjugation::apply(const ExactVector& x) const {
  if (!antilinear) return multiply<Cyc>(linear, x);
  ExactVector cx(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) cx(i) = conj(x(i));
  return multiply<Cyc>(linear, cx);
}

Conjugation compose(const Conjugation& a, const Conjugation& b) {
  Conjugation out;
  out.algebra = a.algebra;
  // a(b(x)) = La conj^a(Lb conj^b(x)) = La conj^a(Lb) conj^{a+b}(x)
  out.linear = multiply<Cyc>(a.linear, a.antilinear ? conj(b.linear) : b.linear);
  out.antilinear = a.antilinear != b.antilinear;
  return out;
}

Conjugation as_conjugation(const Automorphism& theta) { return Conjugation{theta.algebra, theta.map, false}; }

bool is_involutive(const Conjugation& s) {
  const Conjugation sq = compose(s, s);
  return sq.linear == ExactMatrix::Identity(sq.linear.rows(), sq.linear.cols());
}

bool preserves_brackets(const Conjugation& s) {
  const LieAlgebra& g = *s.algebra;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      ExactVector bij = ExactVector::Zero(g.dim());
      for (const auto& t : g.table[i][j]) bij(t.index) += t.coeff;
      if (s.apply(bij) != g.bracket(s.linear.col(i), s.linear.col(j))) return false;
    }
  return true;
}

Conjugation compact_conjugation(LieAlgebraPtr g) {
  Conjugation tau;
  tau.algebra = g;
  tau.antilinear = true;
  const int d = g->dim();
  tau.linear = ExactMatrix::Zero(d, d);
  if (g->has_matrices()) {
    for (int i = 0; i < d; ++i) {
      const ExactMatrix img = -conj(g->matrices[i]).transpose();
      const auto c = g->coordinates(img);
      if (!c) throw RealFormError("compact conjugation leaves " + g->label);
      tau.linear.col(i) = *c;
    }
  } else {
    const ChevalleyData& cd = *g->chevalley;
    for (int a = 0; a < cd.root_count(); ++a) tau.linear(cd.negative_of(a), a) = Cyc(-1);
    for (int i = 0; i < cd.rs.rank; ++i) tau.linear(cd.h_index(i), cd.h_index(i)) = Cyc(-1);
  }
  return tau;
}

Signature hermitian_signature(const ExactMatrix& h0) {
  ExactMatrix h = h0;
  const int n = static_cast<int>(h.rows());
  std::vector<bool> active(n, true);
  Signature sig;
  for (int step = 0; step < n; ++step) {
    int piv = -1;
    for (int i = 0; i < n && piv < 0; ++i)
      if (active[i] && !h(i, i).is_zero()) piv = i;
    if (piv < 0) {
      // all active diagonal entries vanish: replace e_i by e_i + t e_j with t = h_ij
      int pi = -1, pj = -1;
      for (int i = 0; i < n && pi < 0; ++i)
        for (int j = 0; j < n; ++j)
          if (active[i] && active[j] && i != j && !h(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) break;
      const Cyc t = h(pi, pj);
      const Cyc hii = t * conj(h(pi, pj)) + conj(t) * h(pi, pj) + t * conj(t) * h(pj, pj);
      // row pi: h(w, e_l) = h_il + t h_jl, then restore Hermitian symmetry
      for (int l = 0; l < n; ++l) {
        if (!active[l] || l == pi) continue;
        h(pi, l) += t * h(pj, l);
        h(l, pi) = conj(h(pi, l));
      }
      h(pi, pi) = hii;
      piv = pi;
    }
    const Cyc d = h(piv, piv);
    const int s = d.real_sign();
    if (s < 0) ++sig.negatives;
    else ++sig.positives;
    active[piv] = false;
    const Cyc dinv = d.inverse();
    for (int k = 0; k < n; ++k) {
      if (!active[k] || h(k, piv).is_zero()) continue;
      const Cyc f = h(k, piv) * dinv;
      for (int l = 0; l < n; ++l) {
        if (!active[l] || h(piv, l).is_zero()) continue;
        h(k, l) -= f * h(piv, l);
      }
    }
  }
  sig.zeros = n - sig.negatives - sig.positives;
  return sig;
}

Signature killing_signature(const Conjugation& s) {
  if (!s.antilinear) throw RealFormError("killing_signature needs an antilinear involution");
  // h(x, y) = kappa(x, sigma y) is Hermitian and restricts to kappa on the real form
  const ExactMatrix h = multiply<Cyc>(s.algebra->killing, s.linear);
  return hermitian_signature(h);
}

Conjugation cartan_pair(const Automorphism& theta, const Conjugation& tau) {
  if (theta.order > 2) throw RealFormError("cartan_pair needs an automorphism of order at most 2");
  const Conjugation th = as_conjugation(theta);
  const Conjugation a = compose(th, tau), b = compose(tau, th);
  const ExactMatrix defect = a.linear - b.linear;
  if (!is_zero_matrix<Cyc>(defect)) {
    throw RealFormError("theta and tau do not commute (defect rank " + std::to_string(rank<Cyc>(defect)) + ")");
  }
  return a;
}

std::vector<CatalogEntry> real_form_catalog(char type, int rank) {
  std::vector<CatalogEntry> out;
  auto so_neg = [](int p, int q) { return p * (p - 1) / 2 + q * (q - 1) / 2; };
  switch (type) {
    case 'A': {
      const int n = rank + 1;
      for (int p = 0; 2 * p <= n; ++p) {
        const int q = n - p;
        out.push_back({p == 0 ? "su(" + std::to_string(n) + ")" : pq("su", p, q),
                       p == 0 ? "SU(" + std::to_string(n) + ")" : pq("SU", p, q), p * p + q * q - 1, p >= 1});
      }
      out.push_back({"sl(" + std::to_string(n) + ",R)", "SL(" + std::to_string(n) + ",R)", n * (n - 1) / 2, n == 2});
      if (n % 2 == 0 && n >= 4) {
        const int m = n / 2;
        out.push_back({"su*(" + std::to_string(n) + ")", "SU*(" + std::to_string(n) + ")", m * (2 * m + 1), false});
      }
      break;
    }
    case 'B':
    case 'D': {
      const int n = type == 'B' ? 2 * rank + 1 : 2 * rank;
      for (int p = 0; 2 * p <= n; ++p) {
        const int q = n - p;
        out.push_back({p == 0 ? "so(" + std::to_string(n) + ")" : pq("so", p, q),
                       p == 0 ? "Spin(" + std::to_string(n) + ")" : pq("Spin0", p, q), so_neg(p, q), p == 2});
      }
      if (type == 'D') {
        out.push_back({"so*(" + std::to_string(n) + ")", "SO*(" + std::to_string(n) + ")", rank * rank, true});
      }
      break;
    }
    case 'C': {
      const int m = rank;
      out.push_back({"sp(" + std::to_string(2 * m) + ",R)", "Sp(" + std::to_string(2 * m) + ",R)", m * m, true});
      for (int p = 0; 2 * p <= m; ++p) {
        const int q = m - p;
        out.push_back({p == 0 ? "sp(" + std::to_string(m) + ")" : pq("sp", p, q),
                       p == 0 ? "Sp(" + std::to_string(m) + ")" : pq("Sp", p, q), p * (2 * p + 1) + q * (2 * q + 1),
                       false});
      }
      break;
    }
    case 'G':
      out.push_back({"g2 (compact)", "G2 (compact)", 14, false});
      out.push_back({"g2(2) (split)", "G2(2)", 6, false});
      break;
    default:
      break;
  }
  return out;
}

RealFormID identify_real_form(const Conjugation& sigma, const Conjugation& tau) {
  const LieAlgebra& g = *sigma.algebra;
  RealFormID id;
  id.ambient = g.label;
  id.dim = g.dim();
  id.signature = killing_signature(sigma);
  id.compact_part_dim = id.signature.negatives;
  const Conjugation th = compose(sigma, tau);
  if (th.antilinear) throw RealFormError("sigma o tau must be linear");
  const LieAlgebraPtr gp = sigma.algebra;
  const Automorphism theta = make_automorphism(gp, th.linear, Provenance::composite, "sigma o tau");
  const auto dec = eigendecomposition(theta);
  const auto prof = invariant_profile(g, dec.spaces[0].basis);
  id.hermitian = prof.center_dim == 1;
  if (g.root_system()) {
    id.hodge_type = is_identity(clique_of(theta));
    for (const auto& e : real_form_catalog(g.root_system()->type, g.root_system()->rank)) {
      if (e.negatives == id.signature.negatives && e.hermitian == id.hermitian) {
        append_name(id.name, e.name);
        append_name(id.group_name, e.group_name);
      }
    }
  }
  return id;
}

bool is_hermitian_type(const Automorphism& theta) {
  if (theta.order > 2) throw AutomorphismError("is_hermitian_type needs an automorphism of order at most 2");
  const auto dec = eigendecomposition(theta);
  return invariant_profile(*theta.algebra, dec.spaces[0].basis).center_dim == 1;
}

std::vector<Cyc> generated_subgroup(const std::vector<Cyc>& gens) {
  std::vector<Cyc> out{Cyc(1)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      const Cyc p = out[i] * g;
      if (!contains_scalar(out, p)) out.push_back(p);
      if (out.size() > static_cast<std::size_t>(kMaxCyclotomicOrder)) {
        throw std::logic_error("generated subgroup is not a finite group of roots of unity");
      }
    }
  }
  return out;
}

CentralHom central_probe(const MatrixGroup& group, const GroupAutomorphism& theta, int n,
                         const std::vector<ExactMatrix>& probes) {
  CentralHom out;
  out.group = group.label();
  out.descriptor = theta.describe();
  out.order = n;
  const int dim = group.n;
  const ExactMatrix id = ExactMatrix::Identity(dim, dim);
  auto central_ratio = [&](const ExactMatrix& a) -> std::optional<Cyc> {
    const ExactMatrix r = multiply<Cyc>(theta.apply(a), *inverse<Cyc>(a));
    const Cyc c = r(0, 0);
    if (r != ExactMatrix(id * c)) return std::nullopt;
    return c;
  };
  for (const auto& a : probes) {
    if (!group.contains(a)) throw std::invalid_argument("central_probe: probe is not in " + group.label());
    out.observed.push_back(central_ratio(a));
  }
  for (std::size_t i = 0; i < probes.size(); ++i)
    for (std::size_t j = 0; j < probes.size(); ++j) {
      if (!out.observed[i] || !out.observed[j]) continue;
      const auto cij = central_ratio(multiply<Cyc>(probes[i], probes[j]));
      if (!cij || *cij != *out.observed[i] * *out.observed[j]) out.multiplicative = false;
    }
  out.center = group.center();
  std::vector<Cyc> gens;
  for (const auto& z : out.center) {
    const auto c = central_ratio(ExactMatrix(id * z));
    if (!c) throw std::logic_error("automorphism does not preserve the centre");
    out.central_values.emplace_back(z, *c);
    gens.push_back(*c);
    // z a(z) ... a^{n-1}(z)
    Cyc prod = z, cur = z;
    for (int k = 1; k < n; ++k) {
      cur = theta.apply(ExactMatrix(id * cur))(0, 0);
      prod *= cur;
    }
    if (prod.is_one()) out.z_a.push_back(z);
  }
  for (const auto& c : out.observed)
    if (c) gens.push_back(*c);
  out.generated = generated_subgroup(gens);
  for (const auto& c : out.generated)
    if (!contains_scalar(out.z_a, c)) out.within_z_a = false;
  out.exact = out.within_z_a && out.generated.size() == out.z_a.size();
  return out;
}

}  // namespace liefix
