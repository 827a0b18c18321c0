#include "liefix/fixedpoints.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <regex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <tuple>

namespace liefix {

namespace {

long mod(long x, long m) {
  const long r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteAbelianGroup

long FiniteAbelianGroup::order() const {
  long n = 1;
  for (long d : factors) n *= d;
  return n;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::reduce(Element x) const {
  if (x.size() != factors.size()) throw std::invalid_argument("element has the wrong number of coordinates");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod(x[i], factors[i]);
  return x;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::add(const Element& x, const Element& y) const {
  Element r(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) r[i] = mod(x[i] + y[i], factors[i]);
  return r;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::negate(const Element& x) const {
  Element r(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) r[i] = mod(-x[i], factors[i]);
  return r;
}

bool FiniteAbelianGroup::is_valid(const Element& x) const {
  if (x.size() != factors.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] >= factors[i]) return false;
  return true;
}

long FiniteAbelianGroup::index(const Element& x) const {
  long idx = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + x[i];
  return idx;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::element(long idx) const {
  Element x(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    x[i] = idx % factors[i];
    idx /= factors[i];
  }
  return x;
}

std::vector<FiniteAbelianGroup::Element> FiniteAbelianGroup::elements() const {
  std::vector<Element> out;
  const long n = order();
  out.reserve(n);
  for (long i = 0; i < n; ++i) out.push_back(element(i));
  return out;
}

std::string FiniteAbelianGroup::label() const {
  if (factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(factors[i]);
  }
  return s;
}

FiniteAbelianGroup::Element apply_endomorphism(const FiniteAbelianGroup& z, const IntMatrix& a,
                                               const FiniteAbelianGroup::Element& x) {
  FiniteAbelianGroup::Element r(z.factors.size(), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    long s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += a[i][j] * x[j];
    r[i] = mod(s, z.factors[i]);
  }
  return r;
}

bool is_homomorphism(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target, const IntMatrix& m) {
  if (m.size() != target.factors.size()) return false;
  for (const auto& row : m)
    if (row.size() != source.factors.size()) return false;
  // The image of d_j e_j must vanish.
  for (std::size_t j = 0; j < source.factors.size(); ++j)
    for (std::size_t i = 0; i < target.factors.size(); ++i)
      if (mod(source.factors[j] * m[i][j], target.factors[i]) != 0) return false;
  return true;
}

bool is_automorphism(const FiniteAbelianGroup& z, const IntMatrix& a) {
  if (!is_homomorphism(z, z, a)) return false;
  std::vector<char> hit(z.order(), 0);
  for (const auto& x : z.elements()) {
    const long idx = z.index(apply_endomorphism(z, a, x));
    if (hit[idx]) return false;
    hit[idx] = 1;
  }
  return true;
}

IntMatrix identity_action(const FiniteAbelianGroup& z) {
  const std::size_t r = z.factors.size();
  IntMatrix a(r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) a[i][i] = 1;
  return a;
}

std::vector<FiniteAbelianGroup::Element> norm_kernel(const FiniteAbelianGroup& z, const IntMatrix& a, int n) {
  std::vector<FiniteAbelianGroup::Element> out;
  for (const auto& x : z.elements()) {
    auto sum = x, cur = x;
    for (int k = 1; k < n; ++k) {
      cur = apply_endomorphism(z, a, cur);
      sum = z.add(sum, cur);
    }
    if (sum == z.zero()) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// SurfaceCohomology

namespace {

long checked_power(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > (1L << 62) / base) throw std::overflow_error("cohomology group too large to count");
    r *= base;
  }
  return r;
}

}  // namespace

long SurfaceCohomology::cardinality() const { return checked_power(z.order(), 2 * genus); }

bool SurfaceCohomology::is_valid(const Class& alpha) const {
  if (static_cast<int>(alpha.size()) != 2 * genus) return false;
  return std::all_of(alpha.begin(), alpha.end(), [&](const auto& x) { return z.is_valid(x); });
}

SurfaceCohomology::Class SurfaceCohomology::apply_action(const Class& alpha) const {
  Class out;
  for (const auto& x : alpha) out.push_back(apply_endomorphism(z, action, x));
  return out;
}

SurfaceCohomology::Class SurfaceCohomology::inverse(const Class& alpha) const {
  Class out;
  for (const auto& x : alpha) out.push_back(z.negate(x));
  return out;
}

bool SurfaceCohomology::is_compatible(const Class& alpha) const { return apply_action(alpha) == inverse(alpha); }

bool SurfaceCohomology::is_compatible(const Class& alpha, int n) const {
  Class sum = alpha, cur = alpha;
  for (int k = 1; k < n; ++k) {
    cur = apply_action(cur);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = z.add(sum[i], cur[i]);
  }
  return std::all_of(sum.begin(), sum.end(), [&](const auto& x) { return x == z.zero(); });
}

long SurfaceCohomology::compatible_count() const {
  return checked_power(static_cast<long>(norm_kernel(z, action, 2).size()), 2 * genus);
}

std::vector<SurfaceCohomology::Class> SurfaceCohomology::classes() const {
  const long total = cardinality();
  if (total > kMaxEnumeratedClasses) throw std::length_error("too many cohomology classes to enumerate");
  const long zo = z.order();
  std::vector<Class> out;
  out.reserve(total);
  for (long idx = 0; idx < total; ++idx) {
    Class c(2 * genus);
    long rest = idx;
    for (int i = 2 * genus; i-- > 0;) {
      c[i] = z.element(rest % zo);
      rest /= zo;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<SurfaceCohomology::Class> SurfaceCohomology::compatible_classes() const {
  std::vector<Class> out;
  for (auto& c : classes())
    if (is_compatible(c)) out.push_back(std::move(c));
  return out;
}

SurfaceCohomology surface_cohomology(int genus, const FiniteAbelianGroup& z, const IntMatrix& a) {
  if (genus < 0) throw std::invalid_argument("genus must be non-negative");
  for (long d : z.factors)
    if (d < 2) throw std::invalid_argument("invariant factors must be at least 2");
  if (!is_automorphism(z, a)) throw std::invalid_argument("the action is not an automorphism of " + z.label());
  return SurfaceCohomology{genus, z, a};
}

long class_index(const SurfaceCohomology& h, const SurfaceCohomology::Class& alpha) {
  long idx = 0;
  for (const auto& x : alpha) idx = idx * h.z.order() + h.z.index(x);
  return idx;
}

InducedImage induced_image(const SurfaceCohomology& h, const FiniteAbelianGroup& gamma, const IntMatrix& c) {
  if (!is_homomorphism(gamma, h.z, c)) throw std::invalid_argument("c is not a homomorphism into " + h.z.label());
  InducedImage out;
  out.domain_size = checked_power(gamma.order(), 2 * h.genus);
  if (out.domain_size > kMaxEnumeratedClasses) throw std::length_error("Hom(pi_1, Gamma) too large to enumerate");
  std::vector<long> cimage(gamma.order());
  for (long e = 0; e < gamma.order(); ++e) cimage[e] = h.z.index(apply_endomorphism(h.z, c, gamma.element(e)));
  const long go = gamma.order(), zo = h.z.order();
  out.image.reserve(out.domain_size);
  for (long idx = 0; idx < out.domain_size; ++idx) {
    long rest = idx, weight = 1, image = 0;
    for (int i = 0; i < 2 * h.genus; ++i) {
      image += cimage[rest % go] * weight;
      rest /= go;
      weight *= zo;
    }
    out.image.push_back(image);
  }
  std::sort(out.image.begin(), out.image.end());
  out.image.erase(std::unique(out.image.begin(), out.image.end()), out.image.end());
  out.injective = static_cast<long>(out.image.size()) == out.domain_size;
  return out;
}

bool image_contains(const SurfaceCohomology& h, const InducedImage& img, const SurfaceCohomology::Class& alpha) {
  if (!h.is_valid(alpha)) throw std::invalid_argument("alpha is not a class of H^1 with coefficients in " + h.z.label());
  return std::binary_search(img.image.begin(), img.image.end(), class_index(h, alpha));
}

Subgroup generated_subgroup(const FiniteAbelianGroup& z, const std::vector<FiniteAbelianGroup::Element>& gens) {
  using Element = FiniteAbelianGroup::Element;
  auto closure = [&](const std::vector<Element>& g) {
    std::set<long> seen{z.index(z.zero())};
    std::vector<Element> frontier{z.zero()};
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (const auto& x : frontier)
        for (const auto& s : g) {
          const Element y = z.add(x, s);
          if (seen.insert(z.index(y)).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    return seen;
  };
  for (const auto& g : gens)
    if (!z.is_valid(g)) throw std::invalid_argument("generator is not an element of " + z.label());
  const std::set<long> all = closure(gens);

  // Greedy cyclic decomposition: repeatedly take an element of maximal order
  // modulo the part built so far, then adjust it by that part so that its
  // order equals its order in the quotient.
  std::vector<Element> basis;
  std::vector<long> orders;
  std::set<long> built{z.index(z.zero())};
  auto order_mod = [&](const Element& x, const std::set<long>& h) {
    long t = 1;
    Element cur = x;
    while (!h.count(z.index(cur))) {
      cur = z.add(cur, x);
      ++t;
    }
    return t;
  };
  while (built.size() < all.size()) {
    long best = 0;
    Element pick;
    for (long idx : all) {
      const Element x = z.element(idx);
      const long t = order_mod(x, built);
      if (t > best) {
        best = t;
        pick = x;
      }
    }
    const std::set<long> zero_only{z.index(z.zero())};
    bool found = false;
    for (long h : built) {
      const Element y = z.add(pick, z.negate(z.element(h)));
      if (order_mod(y, zero_only) == best) {
        pick = y;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("cyclic decomposition failed");
    basis.push_back(pick);
    orders.push_back(best);
    auto g = basis;
    built = closure(g);
  }
  Subgroup out;
  // Invariant-factor order: divisors first.
  std::reverse(basis.begin(), basis.end());
  std::reverse(orders.begin(), orders.end());
  out.group.factors = orders;
  out.inclusion.assign(z.factors.size(), std::vector<long>(basis.size(), 0));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < z.factors.size(); ++i) out.inclusion[i][j] = basis[j][i];
  for (long idx : all) out.elements.push_back(z.element(idx));
  return out;
}

// ---------------------------------------------------------------------------
// Selectors

std::string AlgebraSpec::algebra_label() const {
  switch (family) {
    case Family::sl:
      return "sl(" + std::to_string(matrix_size) + ")";
    case Family::so:
      return "so(" + std::to_string(matrix_size) + ")";
    case Family::sp:
      return "sp(" + std::to_string(matrix_size) + ")";
    default:
      return type == 'G' ? "g2" : dynkin();
  }
}

std::string AlgebraSpec::group_label() const {
  switch (group) {
    case GroupKind::SL:
      return "SL(" + std::to_string(matrix_size) + ",C)";
    case GroupKind::Spin:
      return "Spin(" + std::to_string(matrix_size) + ",C)";
    case GroupKind::Sp:
      return "Sp(" + std::to_string(matrix_size) + ",C)";
    case GroupKind::G2:
      return "G2";
  }
  return "";
}

namespace {

AlgebraSpec matrix_spec(Family family, int n, bool require_matrix) {
  AlgebraSpec s;
  s.family = family;
  s.matrix_size = n;
  const int limit = 8;
  switch (family) {
    case Family::sl:
      if (n < 2) throw UnsupportedAlgebraError("sl(n) needs n >= 2");
      s.type = 'A';
      s.rank = n - 1;
      s.group = GroupKind::SL;
      break;
    case Family::so:
      if (n < 3) throw UnsupportedAlgebraError("so(n) needs n >= 3");
      if (n == 4) throw UnsupportedAlgebraError("so(4) is not simple");
      s.group = GroupKind::Spin;
      if (n == 3) {
        s.type = 'A';
        s.rank = 1;
      } else {
        s.type = n % 2 ? 'B' : 'D';
        s.rank = n / 2;
      }
      break;
    case Family::sp:
      if (n < 2 || n % 2) throw UnsupportedAlgebraError("sp(n) needs even n >= 2");
      s.group = GroupKind::Sp;
      s.type = n == 2 ? 'A' : 'C';
      s.rank = n / 2;
      break;
    default:
      throw std::logic_error("matrix_spec: not a matrix family");
  }
  if (require_matrix && n > limit)
    throw UnsupportedAlgebraError(s.algebra_label() + " is outside the supported range (matrix size <= 8)");
  build_root_system(s.type, s.rank);
  return s;
}

AlgebraSpec dynkin_spec(char type, int rank, bool require_matrix) {
  const RootSystem rs = build_root_system(type, rank);  // throws for unsupported pairs
  switch (type) {
    case 'A':
      return matrix_spec(Family::sl, rank + 1, require_matrix);
    case 'B':
      return matrix_spec(Family::so, 2 * rank + 1, require_matrix);
    case 'C':
      return matrix_spec(Family::sp, 2 * rank, require_matrix);
    case 'D':
      return matrix_spec(Family::so, 2 * rank, require_matrix);
    case 'G': {
      AlgebraSpec s;
      s.type = 'G';
      s.rank = 2;
      s.family = Family::chevalley;
      s.group = GroupKind::G2;
      return s;
    }
    default:
      throw UnsupportedAlgebraError("unsupported type " + rs.label());
  }
}

}  // namespace

AlgebraSpec parse_selector(const std::string& text, bool require_matrix) {
  std::string s;
  for (char c : text) {
    if (c == ' ' || c == '(' || c == ')' || c == ',' || c == '_' || c == '-') continue;
    s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  static const std::regex named(R"(^(sl|so|sp|spin)(\d+)c?$)");
  static const std::regex dynkin(R"(^([a-z])(\d+)$)");
  std::smatch m;
  if (std::regex_match(s, m, named)) {
    const int n = std::stoi(m[2]);
    const std::string head = m[1];
    if (head == "sl") return matrix_spec(Family::sl, n, require_matrix);
    if (head == "sp") return matrix_spec(Family::sp, n, require_matrix);
    return matrix_spec(Family::so, n, require_matrix);
  }
  if (std::regex_match(s, m, dynkin)) {
    const char type = static_cast<char>(std::toupper(static_cast<unsigned char>(m[1].str()[0])));
    const int rank = std::stoi(m[2]);
    if (std::string("ABCDEFG").find(type) == std::string::npos)
      throw std::invalid_argument("cannot parse algebra selector '" + text + "'");
    return dynkin_spec(type, rank, require_matrix);
  }
  throw std::invalid_argument("cannot parse algebra selector '" + text + "'");
}

namespace {

std::mutex& algebra_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

LieAlgebraPtr build_algebra(const AlgebraSpec& spec) {
  static std::map<std::string, LieAlgebraPtr> cache;
  const std::string key = spec.algebra_label();
  std::lock_guard lock(algebra_mutex());
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  LieAlgebraPtr g = spec.family == Family::chevalley ? build_from_chevalley(chevalley_constants(build_root_system('G', 2)))
                                                     : build_classical(spec.family, spec.matrix_size);
  cache.emplace(key, g);
  return g;
}

namespace {

LieAlgebraPtr chevalley_algebra(const AlgebraSpec& spec) {
  const auto g = build_algebra(spec);
  return g->model ? g->model : g;
}

}  // namespace

// ---------------------------------------------------------------------------
// Clique names

namespace {

bool is_d4(const RootSystem& rs) { return rs.type == 'D' && rs.rank == 4; }

Permutation d4_rot() { return {2, 1, 3, 0}; }

std::vector<Permutation> order_two_elements(const RootSystem& rs) {
  std::vector<Permutation> out;
  for (const auto& p : diagram_automorphism_group(rs))
    if (permutation_order(p) == 2) out.push_back(p);
  return out;
}

}  // namespace

std::string clique_name(const RootSystem& rs, const Permutation& p) {
  if (is_identity(p)) return "id";
  if (is_d4(rs)) {
    if (p == d4_rot()) return "rot";
    if (p == inverse(d4_rot())) return "rot2";
    std::vector<int> moved;
    for (int i = 0; i < 4; ++i)
      if (p[i] != i) moved.push_back(i + 1);
    if (moved.size() == 2) return "swap" + std::to_string(moved[0]) + std::to_string(moved[1]);
  }
  if (order_two_elements(rs).size() == 1 && permutation_order(p) == 2) return "flip";
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

Permutation parse_clique(const RootSystem& rs, const std::string& raw) {
  std::string name;
  for (char c : raw)
    if (c != ' ') name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const auto group = diagram_automorphism_group(rs);
  if (name == "id" || name == "trivial" || name == "identity" || name == "1") return group.front();
  if (!name.empty() && name.front() == '[') {
    Permutation p;
    std::stringstream ss(name.substr(1, name.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) p.push_back(std::stoi(item));
    if (std::find(group.begin(), group.end(), p) == group.end())
      throw std::invalid_argument("'" + raw + "' is not a diagram symmetry of " + rs.label());
    return p;
  }
  if (is_d4(rs)) {
    if (name == "rot" || name == "triality" || name == "b") return d4_rot();
    if (name == "rot2" || name == "b2" || name == "b^2" || name == "b^-1") return inverse(d4_rot());
    if (name == "flip") name = "swap34";
  }
  for (const auto& p : group)
    if (clique_name(rs, p) == name) return p;
  if (name == "outer" || name == "-1" || name == "flip") {
    const auto twos = order_two_elements(rs);
    if (twos.size() == 1) return twos.front();
    if (twos.empty()) throw std::invalid_argument(rs.label() + " has no outer diagram symmetry");
    throw std::invalid_argument("'" + raw + "' is ambiguous for " + rs.label() + "; name a transposition");
  }
  throw std::invalid_argument("unknown clique '" + raw + "' for " + rs.label());
}

// ---------------------------------------------------------------------------
// Names of fixed subalgebras from closed-form profiles

namespace {

struct Piece {
  int dim = 0, rank = 0, center = 0;
};

Piece sl_piece(int k) { return k >= 2 ? Piece{k * k - 1, k - 1, 0} : Piece{}; }
Piece so_piece(int k) {
  if (k <= 1) return {};
  if (k == 2) return {1, 1, 1};
  return {k * (k - 1) / 2, k / 2, 0};
}
Piece sp_piece(int twok) { return {(twok / 2) * (twok + 1), twok / 2, 0}; }

InvariantProfile sum_profile(std::initializer_list<Piece> pieces, int extra_center = 0) {
  InvariantProfile p;
  for (const auto& x : pieces) {
    p.dim += x.dim;
    p.rank += x.rank;
    p.center_dim += x.center;
  }
  p.dim += extra_center;
  p.rank += extra_center;
  p.center_dim += extra_center;
  p.derived_dim = p.dim - p.center_dim;
  return p;
}

struct Candidate {
  InvariantProfile profile;
  std::string algebra;
  std::string group;
};

std::string so_pair(int p, int q) {
  if (p <= 1) return "so(" + std::to_string(q) + ")";
  return "so(" + std::to_string(p) + ")+so(" + std::to_string(q) + ")";
}

std::vector<Candidate> candidates(const AlgebraSpec& spec, const RootSystem& rs, const Permutation& clique,
                                  int class_order) {
  std::vector<Candidate> out;
  const bool inner = is_identity(clique);
  const int n = spec.matrix_size;
  if (class_order == 1) {
    const auto g = chevalley_algebra(spec);
    InvariantProfile p{g->dim(), rs.rank, 0, g->dim()};
    std::string group = spec.group == GroupKind::G2 ? "G2" : spec.group_label();
    out.push_back({p, spec.algebra_label(), group});
    return out;
  }
  if (class_order == 3 && is_d4(rs) && permutation_order(clique) == 3) {
    out.push_back({InvariantProfile{14, 2, 0, 14}, "g2", "G2"});
    out.push_back({sum_profile({sl_piece(3)}), "sl(3)", "PSL(3,C)"});
    return out;
  }
  if (class_order != 2) return out;
  switch (spec.family) {
    case Family::sl:
      if (inner) {
        for (int p = 1; 2 * p <= n; ++p) {
          const int q = n - p;
          out.push_back({sum_profile({sl_piece(p), sl_piece(q)}, 1),
                         "s(gl(" + std::to_string(p) + ")+gl(" + std::to_string(q) + "))",
                         "S(GL(" + std::to_string(p) + ",C)xGL(" + std::to_string(q) + ",C))"});
        }
      } else {
        out.push_back({sum_profile({so_piece(n)}), "so(" + std::to_string(n) + ")", "SO(" + std::to_string(n) + ",C)"});
        if (n % 2 == 0)
          out.push_back({sum_profile({sp_piece(n)}), "sp(" + std::to_string(n) + ")", "Sp(" + std::to_string(n) + ",C)"});
      }
      break;
    case Family::so:
      for (int p = 1; 2 * p <= n; ++p) {
        const int q = n - p;
        const bool p_odd = p % 2 == 1;
        // For even n, inner classes have p even and outer classes p odd.
        if (n % 2 == 0 && p_odd == inner) continue;
        out.push_back({sum_profile({so_piece(p), so_piece(q)}), so_pair(p, q), ""});
      }
      if (n % 2 == 0 && inner) out.push_back({sum_profile({sl_piece(n / 2)}, 1), "gl(" + std::to_string(n / 2) + ")", ""});
      break;
    case Family::sp:
      for (int p = 2; 2 * p <= n; p += 2)
        out.push_back({sum_profile({sp_piece(p), sp_piece(n - p)}),
                       "sp(" + std::to_string(p) + ")+sp(" + std::to_string(n - p) + ")", ""});
      out.push_back({sum_profile({sl_piece(n / 2)}, 1), "gl(" + std::to_string(n / 2) + ")", ""});
      break;
    case Family::chevalley:
      out.push_back({sum_profile({sl_piece(2), sl_piece(2)}), "sl(2)+sl(2)", ""});
      break;
  }
  return out;
}

void assign_names(const AlgebraSpec& spec, const RootSystem& rs, const Permutation& clique, ClassEntry& e) {
  std::vector<std::string> algebras, groups;
  for (const auto& c : candidates(spec, rs, clique, e.order)) {
    if (c.profile != e.profile) continue;
    algebras.push_back(c.algebra);
    if (!c.group.empty()) groups.push_back(c.group);
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " = " : "") + v[i];
    return s;
  };
  e.fixed_subalgebra = join(algebras);
  e.fixed_subgroup = join(groups);
}

using CacheKey = std::tuple<std::string, Permutation, int, std::uint64_t>;

std::shared_mutex& cache_mutex() {
  static std::shared_mutex m;
  return m;
}

std::map<CacheKey, CliqueTable>& clique_cache() {
  static std::map<CacheKey, CliqueTable> cache;
  return cache;
}

}  // namespace

CliqueTable clique_classes(const AlgebraSpec& spec, const Permutation& clique, int n, std::uint64_t seed) {
  const CacheKey key{spec.algebra_label(), clique, n, seed};
  {
    std::shared_lock lock(cache_mutex());
    if (auto it = clique_cache().find(key); it != clique_cache().end()) return it->second;
  }
  const auto g = chevalley_algebra(spec);
  const RootSystem& rs = *g->root_system();
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (n % permutation_order(clique) != 0)
    throw std::invalid_argument("clique " + clique_name(rs, clique) + " has order not dividing " + std::to_string(n));

  CliqueTable table;
  table.clique = clique;
  table.name = clique_name(rs, clique);
  table.clique_order = permutation_order(clique);
  const auto base = lift_diagram_automorphism(g, clique);
  const auto result = enumerate_classes(base, n, seed);
  table.skipped = result.skipped;
  const auto tau = compact_conjugation(g);
  int id = 0;
  for (const auto& b : result.buckets) {
    ClassEntry e;
    e.id = id++;
    e.profile = b.profile;
    // Eigenvalue exp(2 pi i j / d) of an order-d representative is exp(2 pi i (j n/d) / n).
    const int d = static_cast<int>(b.eigendims.size());
    if (d < 1 || n % d != 0) throw std::logic_error("eigendims do not match a divisor of the order");
    e.eigendims.assign(n, 0);
    for (int j = 0; j < d; ++j) e.eigendims[j * (n / d)] = b.eigendims[j];
    e.eigendim_multiset = b.eigendim_multiset;
    e.order = b.order;
    e.exact_order = b.exact_order;
    e.members = b.members;
    e.exponents = b.exponents;
    e.representative = b.representative.description;
    e.automorphism = b.representative;
    e.hodge = is_identity(clique);
    if (e.order == 2) e.hermitian = is_hermitian_type(b.representative);
    if (e.order <= 2) e.real_form = identify_real_form(cartan_pair(b.representative, tau), tau);
    assign_names(spec, rs, clique, e);
    table.classes.push_back(std::move(e));
  }
  std::unique_lock lock(cache_mutex());
  clique_cache().emplace(key, table);
  return table;
}

ClassificationTable classification_table(const AlgebraSpec& spec, int n, std::uint64_t seed,
                                         const std::optional<Permutation>& only_clique) {
  ClassificationTable out;
  out.spec = spec;
  out.order = n;
  out.seed = seed;
  const auto g = chevalley_algebra(spec);
  for (const auto& p : diagram_automorphism_group(*g->root_system())) {
    if (only_clique && p != *only_clique) continue;
    if (n % permutation_order(p) != 0) continue;
    out.cliques.push_back(clique_classes(spec, p, n, seed));
    for (auto& w : label_checks(spec, out.cliques.back())) out.warnings.push_back(std::move(w));
  }
  if (only_clique && out.cliques.empty())
    throw std::invalid_argument("clique order does not divide " + std::to_string(n));
  return out;
}

// ---------------------------------------------------------------------------
// Stated eigenspace labels

namespace {

struct KnownLabel {
  std::string subalgebra;
  int k;
  std::string label;
  int stated_dim;
  int label_dim;  // dimension of the named representation
};

const std::vector<KnownLabel>& triality_labels() {
  static const std::vector<KnownLabel> labels = {
      {"g2", 1, "C^7", 7, 7},
      {"g2", 2, "C_7", 7, 7},
      {"sl(3)", 1, "S^2(C^3)", 10, 6},
      {"sl(3)", 2, "S^2(C^3)^*", 10, 6},
  };
  return labels;
}

std::vector<const KnownLabel*> labels_for(const AlgebraSpec& spec, const CliqueTable& clique, const ClassEntry& e) {
  std::vector<const KnownLabel*> out;
  if (!(spec.type == 'D' && spec.rank == 4 && clique.clique_order == 3)) return out;
  for (const auto& l : triality_labels())
    if (l.subalgebra == e.fixed_subalgebra) out.push_back(&l);
  return out;
}

}  // namespace

std::vector<Warning> label_checks(const AlgebraSpec& spec, const CliqueTable& clique) {
  std::vector<Warning> out;
  for (const auto& e : clique.classes)
    for (const KnownLabel* l : labels_for(spec, clique, e)) {
      const int computed = e.eigendims.at(l->k);
      if (computed == l->label_dim && computed == l->stated_dim) continue;
      out.push_back({"EIGENSPACE_LABEL_MISMATCH",
                     "class " + std::to_string(e.id) + " (" + e.fixed_subalgebra + ") of clique " + clique.name +
                         ": g^" + std::to_string(l->k) + " is labelled " + l->label + " with stated dimension " +
                         std::to_string(l->stated_dim) + ", but dim " + l->label + " = " +
                         std::to_string(l->label_dim) + " and the computed eigenspace has dimension " +
                         std::to_string(computed)});
    }
  return out;
}

// ---------------------------------------------------------------------------
// Centres

CenterData center_data(const AlgebraSpec& spec, const Permutation& clique) {
  CenterData out;
  if (spec.group == GroupKind::SL || spec.group == GroupKind::Sp) {
    const MatrixGroup group{spec.group == GroupKind::SL ? GroupFamily::SL : GroupFamily::Sp, spec.matrix_size};
    const auto center = group.center();
    const long order = static_cast<long>(center.size());
    out.source = "matrices";
    if (order > 1) out.group.factors = {order};
    // The centre of SL(n) and Sp(2m) is cyclic, generated by exp(2 pi i / order).
    for (long k = 0; k < order; ++k) {
      const Cyc z = Cyc::zeta(static_cast<int>(order), k);
      if (std::find(center.begin(), center.end(), z) == center.end())
        throw std::logic_error("centre of " + group.label() + " is not cyclic of order " + std::to_string(order));
      out.scalars.push_back(z);
    }
    out.action = identity_action(out.group);
    if (!is_identity(clique)) {
      if (spec.group != GroupKind::SL) throw std::logic_error("outer clique for a group without outer symmetries");
      const ExactMatrix id = ExactMatrix::Identity(spec.matrix_size, spec.matrix_size);
      const Cyc image = GroupAutomorphism::inverse_transpose().apply(ExactMatrix(id * out.scalars[1 % order]))(0, 0);
      const auto it = std::find(out.scalars.begin(), out.scalars.end(), image);
      if (it == out.scalars.end()) throw std::logic_error("inverse transpose does not preserve the centre");
      out.action[0][0] = it - out.scalars.begin();
    }
    return out;
  }
  // Spin and G2: the table centre, with the diagram action read off P/Q.
  const RootSystem rs = build_root_system(spec.type, spec.rank);
  const auto q = weight_lattice_quotient(rs);
  const auto table = table_center(spec.type, spec.rank);
  auto sorted_q = q.factors, sorted_t = table;
  std::sort(sorted_q.begin(), sorted_q.end());
  std::sort(sorted_t.begin(), sorted_t.end());
  if (sorted_q != sorted_t) throw std::logic_error("P/Q disagrees with the centre table for " + rs.label());
  out.group.factors = q.factors;
  out.action = center_action(q, clique);
  out.source = "table";
  return out;
}

// ---------------------------------------------------------------------------
// Fixed-point reports

const char* const kPolystableDisclaimer =
    "Components describe the fixed locus on the stable and simple part of the moduli space; strictly "
    "polystable points may lead to extra components, which are not listed.";

namespace {

// Rows of the linear system A X - X B = 0 in the entries of X (row-major).
void append_sylvester_rows(const ExactMatrix& a, const ExactMatrix& b, std::vector<std::vector<Cyc>>& rows) {
  const int n = static_cast<int>(a.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Cyc> row(n * n);
      for (int k = 0; k < n; ++k) {
        if (!a(i, k).is_zero()) row[k * n + j] += a(i, k);
        if (!b(k, j).is_zero()) row[i * n + k] -= b(k, j);
      }
      rows.push_back(std::move(row));
    }
}

std::vector<ExactMatrix> sylvester_kernel(const std::vector<std::vector<Cyc>>& rows, int n) {
  ExactMatrix m(static_cast<Eigen::Index>(rows.size()), n * n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < n * n; ++c) m(r, c) = rows[r][c];
  std::vector<ExactMatrix> out;
  for (const auto& v : nullspace<Cyc>(m)) {
    ExactMatrix x(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x(i, j) = v(i * n + j);
    out.push_back(x);
  }
  return out;
}

/// The matrix S with theta = Int(S) (inner) or X -> -S X^T S^{-1} (outer)
/// on sl(n), up to scale.
ExactMatrix realizing_matrix(const AlgebraSpec& spec, const Automorphism& model_theta, bool inner) {
  const auto g = build_algebra(spec);
  const ExactMatrix map = from_model_map(*g, model_theta.map);
  const auto [e, f] = matrix_chevalley_generators(spec.family, spec.matrix_size);
  std::vector<std::vector<Cyc>> rows;
  auto add = [&](const ExactMatrix& x) {
    const ExactMatrix y = g->to_matrix(multiply<Cyc>(map, ExactVector(*g->coordinates(x))));
    if (inner)
      append_sylvester_rows(y, x, rows);  // Y S - S X = 0
    else
      append_sylvester_rows(y, ExactMatrix(-x.transpose()), rows);  // Y S + S X^T = 0
  };
  for (const auto& x : e) add(x);
  for (const auto& x : f) add(x);
  const auto kernel = sylvester_kernel(rows, spec.matrix_size);
  if (kernel.size() != 1) throw std::logic_error("automorphism of sl(n) is not realized by a unique matrix");
  return kernel.front();
}

GammaBound gamma_bound(const AlgebraSpec& spec, const ClassEntry& e, const CenterData& center, bool inner,
                       const std::vector<FiniteAbelianGroup::Element>& z_a, int n) {
  GammaBound out;
  const auto& z = center.group;
  if (spec.group != GroupKind::SL) {
    out.lower = {z.zero()};
    out.upper = z_a;
    out.method = center.source == "table" ? "table centre, no probes" : "no probes";
    out.exact = out.lower.size() == out.upper.size();
    return out;
  }
  const int size = spec.matrix_size;
  const ExactMatrix s = realizing_matrix(spec, e.automorphism, inner);
  std::vector<FiniteAbelianGroup::Element> found;
  if (inner) {
    // S is diagonalizable, so V_z = {X : S X = z X S} is the sum of
    // Hom(E_lambda, E_{z lambda}) over eigenvalues lambda of S, and
    // dim V_z = sum m_lambda m_{z lambda} <= sum m_lambda^2 = dim V_1 by
    // Cauchy-Schwarz. Equality holds exactly when z permutes the eigenvalues
    // preserving multiplicities, which is when V_z contains an invertible
    // matrix, i.e. when z = c(g) for some g in G_theta.
    out.method = "dimension of {X : S X = z X S} against the centralizer of S";
    std::vector<int> dims;
    for (long idx = 0; idx < z.order(); ++idx) {
      std::vector<std::vector<Cyc>> rows;
      append_sylvester_rows(s, ExactMatrix(s * center.scalars[idx]), rows);
      dims.push_back(static_cast<int>(sylvester_kernel(rows, size).size()));
    }
    for (long idx = 0; idx < z.order(); ++idx)
      if (dims[idx] == dims[0]) found.push_back(z.element(idx));
    out.upper = found;
    for (const auto& x : found)
      if (std::find(z_a.begin(), z_a.end(), x) == z_a.end()) throw std::logic_error("image of c leaves Z_a");
  } else {
    out.method = "central probes";
    const MatrixGroup group{GroupFamily::SL, size};
    const auto theta = GroupAutomorphism::composite(
        {GroupAutomorphism::conjugate_by(s), GroupAutomorphism::inverse_transpose()});
    std::vector<ExactMatrix> probes;
    for (const auto& c : center.scalars) probes.push_back(ExactMatrix::Identity(size, size) * c);
    const auto probe = central_probe(group, theta, n, probes);
    if (!probe.multiplicative || !probe.within_z_a) throw std::logic_error("central probe is inconsistent");
    out.probe = probe;
    for (const auto& c : probe.generated) {
      const auto it = std::find(center.scalars.begin(), center.scalars.end(), c);
      if (it == center.scalars.end()) throw std::logic_error("probe value outside the centre");
      found.push_back(z.element(it - center.scalars.begin()));
    }
    out.upper = z_a;
  }
  const Subgroup sub = generated_subgroup(z, found);
  out.lower = sub.elements;
  auto by_index = [&](const auto& a, const auto& b) { return z.index(a) < z.index(b); };
  std::sort(out.upper.begin(), out.upper.end(), by_index);
  out.exact = out.lower == out.upper;
  return out;
}

bool contains(const std::vector<FiniteAbelianGroup::Element>& set, const FiniteAbelianGroup::Element& x) {
  return std::find(set.begin(), set.end(), x) != set.end();
}

std::string describe_fixed(const ClassEntry& e) {
  if (!e.fixed_subgroup.empty()) return e.fixed_subgroup;
  if (!e.fixed_subalgebra.empty()) return "G^θ with Lie algebra " + e.fixed_subalgebra;
  return "G^θ with profile " + to_string(e.profile);
}

}  // namespace

FixedPointReport fixed_point_report(const FixedPointQuery& q) {
  const auto g = chevalley_algebra(q.spec);
  const RootSystem& rs = *g->root_system();
  const auto group = diagram_automorphism_group(rs);
  if (std::find(group.begin(), group.end(), q.clique) == group.end())
    throw std::invalid_argument("clique is not a diagram symmetry of " + rs.label());
  if (q.order < 2) throw std::invalid_argument("order must be at least 2");
  if (q.order % permutation_order(q.clique) != 0)
    throw std::invalid_argument("clique " + clique_name(rs, q.clique) + " has order not dividing " +
                                std::to_string(q.order));
  if (q.k < 0 || q.k >= q.order) throw std::invalid_argument("k must lie in [0, n)");
  if (q.genus < 0) throw std::invalid_argument("genus must be non-negative");

  FixedPointReport r;
  r.group = q.spec.group_label();
  r.query = q;
  r.clique_name = clique_name(rs, q.clique);
  r.variant = q.order == 2 ? (q.k == 0 ? "+" : "-") : "zeta_" + std::to_string(q.k);
  r.center = center_data(q.spec, q.clique);
  r.z_a = norm_kernel(r.center.group, r.center.action, q.order);
  const auto h1 = surface_cohomology(q.genus, r.center.group, r.center.action);
  r.h1_order = h1.cardinality();
  r.compatible_alpha_count = checked_power(static_cast<long>(r.z_a.size()), 2 * q.genus);
  r.disclaimer = kPolystableDisclaimer;

  bool alpha_trivial = true;
  if (q.alpha) {
    if (!h1.is_valid(*q.alpha))
      throw std::invalid_argument("alpha must list " + std::to_string(2 * q.genus) + " elements of " +
                                  r.center.group.label());
    if (!h1.is_compatible(*q.alpha, q.order))
      throw IncompatibleQueryError("alpha is incompatible with clique " + r.clique_name + ": the product alpha a(alpha)" +
                                   (q.order > 2 ? " ... a^" + std::to_string(q.order - 1) + "(alpha)" : "") +
                                   " is not trivial");
    for (const auto& x : *q.alpha)
      if (x != r.center.group.zero()) alpha_trivial = false;
  }
  r.degenerate = is_identity(q.clique) && q.k == 0 && alpha_trivial;
  if (r.degenerate)
    r.warnings.push_back({"DEGENERATE_IDENTITY_QUERY",
                          "the involution is the identity of the moduli space, so every point is fixed; "
                          "the components below are the loci attached to the trivial clique"});

  const CliqueTable table = clique_classes(q.spec, q.clique, q.order, q.seed);
  for (auto& w : label_checks(q.spec, table)) r.warnings.push_back(std::move(w));
  const bool inner = is_identity(q.clique);
  bool unresolved = false;
  for (const auto& e : table.classes) {
    Component c;
    c.class_id = e.id;
    c.profile = e.profile;
    c.fixed_subalgebra = e.fixed_subalgebra;
    c.fixed_subgroup = e.fixed_subgroup;
    c.eigendims = e.eigendims;
    c.higgs_k = q.k;
    c.higgs_dim = e.eigendims.at(q.k);
    if (q.order == 2)
      c.higgs_space = q.k == 0 ? "g^+ = fixed subalgebra" : "g^- (eigenvalue -1)";
    else
      c.higgs_space = q.k == 0 ? "g^0 = fixed subalgebra"
                               : "g^" + std::to_string(q.k) + " (eigenvalue exp(2 pi i " + std::to_string(q.k) + "/" +
                                     std::to_string(q.order) + "))";
    for (const KnownLabel* l : labels_for(q.spec, table, e))
      if (l->k == q.k) {
        c.higgs_space += ", labelled " + l->label;
        if (l->label_dim != c.higgs_dim) c.higgs_space += " (dim " + l->label + " = " + std::to_string(l->label_dim) + ")";
      }
    c.real_form = e.real_form;
    c.gamma = gamma_bound(q.spec, e, r.center, inner, r.z_a, q.order);
    const std::string fixed = describe_fixed(e);
    if (q.k == 0) {
      c.geometry = "hyperkähler";
      c.representation = alpha_trivial ? "R(" + fixed + ")" : "R(G_θ), G^θ = " + fixed;
    } else if (q.order == 2) {
      c.geometry = "Lagrangian";
      std::string real = "G^σ";
      if (e.real_form && !e.real_form->group_name.empty()) real = e.real_form->group_name;
      c.representation = alpha_trivial ? "R(" + real + ")" : "R(G_σ), G^σ = " + real;
    } else {
      c.geometry = "none";
      c.representation = "no π₁ interpretation, k ≠ 0";
    }
    if (alpha_trivial) {
      c.alpha_status = "trivial";
    } else {
      bool all_lower = true, outside_upper = false;
      for (const auto& x : *q.alpha) {
        if (!contains(c.gamma.lower, x)) all_lower = false;
        if (!contains(c.gamma.upper, x)) outside_upper = true;
      }
      c.alpha_status = all_lower ? "admitted" : outside_upper ? "excluded" : "unresolved";
      if (c.alpha_status == "unresolved") unresolved = true;
    }
    if (!inner && c.gamma.lower.size() > 1)
      r.warnings.push_back({"GAMMA_PROBE_NONTRIVIAL", "class " + std::to_string(e.id) + " (" + fixed +
                                                          "): the probe subgroup of Gamma_theta has order " +
                                                          std::to_string(c.gamma.lower.size()) +
                                                          " although this clique is outer"});
    r.components.push_back(std::move(c));
  }
  if (unresolved)
    r.warnings.push_back({"GAMMA_UNRESOLVED",
                          "alpha lies between the probed lower bound and the upper bound of Gamma_theta for at least "
                          "one component; its membership in the image of c_theta is not decided"});
  return r;
}

}  // namespace liefix
