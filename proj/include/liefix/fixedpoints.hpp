#ifndef LIEFIX_FIXEDPOINTS_HPP
#define LIEFIX_FIXEDPOINTS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liefix/realforms.hpp"

namespace liefix {

/// Raised when a query is well formed but semantically inconsistent, such as
/// an alpha that is not compatible with the clique element.
class IncompatibleQueryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Finite abelian groups and surface cohomology

using IntMatrix = std::vector<std::vector<long>>;

/// Finite abelian group Z/d_1 x ... x Z/d_r, written additively. Elements are
/// coordinate vectors reduced into [0, d_i); the trivial group has no factors.
struct FiniteAbelianGroup {
  using Element = std::vector<long>;

  std::vector<long> factors;

  long order() const;
  Element zero() const { return Element(factors.size(), 0); }
  Element reduce(Element x) const;
  Element add(const Element& x, const Element& y) const;
  Element negate(const Element& x) const;
  bool is_valid(const Element& x) const;
  /// Mixed-radix index with the last coordinate varying fastest.
  long index(const Element& x) const;
  Element element(long index) const;
  std::vector<Element> elements() const;
  /// "1", "Z/4", "Z/2 x Z/2".
  std::string label() const;
};

/// Applies an integer matrix (factors x factors) to an element.
FiniteAbelianGroup::Element apply_endomorphism(const FiniteAbelianGroup& z, const IntMatrix& a,
                                               const FiniteAbelianGroup::Element& x);
/// Homomorphism from `source` to `target` given by an integer matrix
/// (target factors x source factors); checks well-definedness.
bool is_homomorphism(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target, const IntMatrix& m);
bool is_automorphism(const FiniteAbelianGroup& z, const IntMatrix& a);
IntMatrix identity_action(const FiniteAbelianGroup& z);

/// Elements x with x + a(x) + ... + a^{n-1}(x) = 0. For n = 2 this is the set
/// of x with a(x) = -x.
std::vector<FiniteAbelianGroup::Element> norm_kernel(const FiniteAbelianGroup& z, const IntMatrix& a, int n);

/// H^1 of a closed genus-g surface with coefficients in Z, modelled as
/// Hom(pi_1, Z) = Z^{2g}: a class is the tuple of images of the standard
/// generators.
struct SurfaceCohomology {
  using Class = std::vector<FiniteAbelianGroup::Element>;

  int genus = 0;
  FiniteAbelianGroup z;
  IntMatrix action;  // the a-action on Z

  /// |Z|^{2g}; throws std::overflow_error beyond 2^62.
  long cardinality() const;
  bool is_valid(const Class& alpha) const;
  Class apply_action(const Class& alpha) const;
  Class inverse(const Class& alpha) const;
  /// a(alpha) = alpha^{-1}.
  bool is_compatible(const Class& alpha) const;
  /// alpha a(alpha) ... a^{n-1}(alpha) = 1.
  bool is_compatible(const Class& alpha, int n) const;
  /// |{alpha : a(alpha) = alpha^{-1}}|, computed as |ker(1 + a)|^{2g}.
  long compatible_count() const;
  /// Enumerates all classes; throws std::length_error above kMaxEnumeratedClasses.
  std::vector<Class> classes() const;
  std::vector<Class> compatible_classes() const;
};

inline constexpr long kMaxEnumeratedClasses = 1L << 20;

/// Throws std::invalid_argument if `a` is not an automorphism of Z or genus < 0.
SurfaceCohomology surface_cohomology(int genus, const FiniteAbelianGroup& z, const IntMatrix& a);

/// Image of Hom(pi_1, Gamma) in Hom(pi_1, Z) under composition with c : Gamma -> Z.
struct InducedImage {
  long domain_size = 0;
  std::vector<long> image;  // sorted class indices in Z^{2g} (mixed radix, generator 1 most significant)
  bool injective = false;
};

long class_index(const SurfaceCohomology& h, const SurfaceCohomology::Class& alpha);
/// Enumerates Gamma^{2g}; throws std::invalid_argument if c is not a homomorphism.
InducedImage induced_image(const SurfaceCohomology& h, const FiniteAbelianGroup& gamma, const IntMatrix& c);
bool image_contains(const SurfaceCohomology& h, const InducedImage& img, const SurfaceCohomology::Class& alpha);

/// Subgroup of Z generated by `gens`, as an abstract group in invariant-factor
/// form with its inclusion map, found by a greedy cyclic decomposition.
struct Subgroup {
  FiniteAbelianGroup group;
  IntMatrix inclusion;  // Z factors x group factors
  std::vector<FiniteAbelianGroup::Element> elements;  // sorted by index in Z
};
Subgroup generated_subgroup(const FiniteAbelianGroup& z, const std::vector<FiniteAbelianGroup::Element>& gens);

// ---------------------------------------------------------------------------
// Algebra and group selectors

enum class GroupKind { SL, Spin, Sp, G2 };

/// A supported simple algebra with its simply connected group.
struct AlgebraSpec {
  char type = 'A';
  int rank = 1;
  Family family = Family::sl;  // chevalley for G2
  int matrix_size = 0;         // 0 for G2
  GroupKind group = GroupKind::SL;

  std::string dynkin() const { return std::string(1, type) + std::to_string(rank); }
  std::string algebra_label() const;  // "sl(4)", "so(8)", "sp(6)", "g2"
  std::string group_label() const;    // "SL(4,C)", "Spin(8,C)", "Sp(6,C)", "G2"
};

/// Parses Dynkin labels (A3, D4, G2), matrix algebras (sl4, so8, sp6) and
/// group names (SL4, Spin8, Sp6, G2). Case, spaces, brackets and commas are
/// ignored. Throws std::invalid_argument when the string does not parse and
/// UnsupportedAlgebraError for well-formed but unsupported input (E6, so4).
/// When require_matrix is false, any root system accepted by rootsys parses
/// (used by table lookups); otherwise the matrix size limits apply.
AlgebraSpec parse_selector(const std::string& text, bool require_matrix = true);

LieAlgebraPtr build_algebra(const AlgebraSpec& spec);

// ---------------------------------------------------------------------------
// Diagram-automorphism names

/// Stable clique names: "id"; "flip" for the order-2 symmetry of A_n and
/// D_n (n >= 5); for D4 "rot" (nodes 1 -> 3 -> 4 -> 1, 1-based), "rot2",
/// and transpositions "swap13", "swap14", "swap34".
std::string clique_name(const RootSystem& rs, const Permutation& p);
/// Accepts the names above plus "trivial", "outer", "-1" (the order-2
/// symmetry when unique), "triality"/"b" (= rot), "flip" (= swap34 on D4),
/// and explicit 0-based permutations such as "[0,2,3,1]".
Permutation parse_clique(const RootSystem& rs, const std::string& name);

// ---------------------------------------------------------------------------
// Classification tables

struct Warning {
  std::string code;
  std::string message;
  auto operator<=>(const Warning&) const = default;
};

struct ClassEntry {
  int id = 0;
  InvariantProfile profile;
  std::vector<int> eigendims;
  std::vector<int> eigendim_multiset;
  int order = 1;
  bool exact_order = true;
  int members = 0;
  std::vector<int> exponents;
  std::string representative;     // description of the representative automorphism
  Automorphism automorphism;      // on the Chevalley model
  std::string fixed_subalgebra;   // name matched from closed-form profiles; empty if none
  std::string fixed_subgroup;     // G^theta in the simply connected group, when known
  std::optional<bool> hermitian;  // order-2 classes
  bool hodge = false;             // trivial clique
  std::optional<RealFormID> real_form;  // classes of order <= 2
};

struct CliqueTable {
  Permutation clique;
  std::string name;
  int clique_order = 1;
  std::vector<ClassEntry> classes;
  int skipped = 0;
};

struct ClassificationTable {
  AlgebraSpec spec;
  int order = 2;
  std::uint64_t seed = kDefaultSeed;
  std::vector<CliqueTable> cliques;
  std::vector<Warning> warnings;
};

/// Classes of order dividing n in one clique, from enumerate_classes seeded
/// with the diagram lift on the Chevalley model. Results are memoized per
/// (algebra, clique, n, seed).
CliqueTable clique_classes(const AlgebraSpec& spec, const Permutation& clique, int n,
                           std::uint64_t seed = kDefaultSeed);

/// One entry per diagram element whose order divides n, identity first.
/// If only_clique is set, the table is restricted to that element.
ClassificationTable classification_table(const AlgebraSpec& spec, int n, std::uint64_t seed = kDefaultSeed,
                                         const std::optional<Permutation>& only_clique = std::nullopt);

/// Warnings about labels stated for known cases that disagree with computed
/// eigenspace dimensions.
std::vector<Warning> label_checks(const AlgebraSpec& spec, const CliqueTable& clique);

// ---------------------------------------------------------------------------
// Fixed-point reports

/// The centre of the simply connected group with the a-action of a clique.
struct CenterData {
  FiniteAbelianGroup group;
  IntMatrix action;
  std::string source;  // "matrices" or "table"
  /// For SL(n) and Sp(2m): the scalar realizing each element, by index.
  std::vector<Cyc> scalars;
};

CenterData center_data(const AlgebraSpec& spec, const Permutation& clique);

struct FixedPointQuery {
  AlgebraSpec spec;
  Permutation clique;
  int order = 2;  // n
  int k = 1;      // sign '-' is (n, k) = (2, 1), sign '+' is (2, 0)
  int genus = 2;
  std::optional<SurfaceCohomology::Class> alpha;
  std::uint64_t seed = kDefaultSeed;
};

struct GammaBound {
  std::vector<FiniteAbelianGroup::Element> lower;  // subgroup of observed c values
  std::vector<FiniteAbelianGroup::Element> upper;  // set containing the image of c
  bool exact = false;
  std::string method;
  std::optional<CentralHom> probe;  // outer classes of SL(n)
};

struct Component {
  int class_id = 0;
  InvariantProfile profile;
  std::string fixed_subalgebra;
  std::string fixed_subgroup;
  std::vector<int> eigendims;
  int higgs_k = 0;
  int higgs_dim = 0;
  std::string higgs_space;
  std::string representation;
  std::string geometry;  // "hyperkahler", "Lagrangian" or "none"
  std::optional<RealFormID> real_form;
  GammaBound gamma;
  std::string alpha_status;  // "trivial", "admitted", "excluded", "unresolved"
};

struct FixedPointReport {
  std::string group;
  FixedPointQuery query;
  std::string clique_name;
  std::string variant;  // "+", "-", or "zeta_k"
  CenterData center;
  std::vector<FiniteAbelianGroup::Element> z_a;
  long h1_order = 0;
  long compatible_alpha_count = 0;  // solutions of the order-n compatibility condition
  bool degenerate = false;
  std::vector<Component> components;
  std::string disclaimer;
  std::vector<Warning> warnings;
};

extern const char* const kPolystableDisclaimer;

/// Throws IncompatibleQueryError for an alpha violating the compatibility
/// condition, std::invalid_argument for malformed queries and
/// UnsupportedAlgebraError for unsupported groups.
FixedPointReport fixed_point_report(const FixedPointQuery& query);

}  // namespace liefix

#endif  // LIEFIX_FIXEDPOINTS_HPP
