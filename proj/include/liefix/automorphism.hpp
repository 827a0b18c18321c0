#ifndef LIEFIX_AUTOMORPHISM_HPP
#define LIEFIX_AUTOMORPHISM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liefix/liealgebra.hpp"

namespace liefix {

class AutomorphismError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive search would exceed the configured size limit.
class SearchGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxAutomorphismOrder = 24;
inline constexpr long kMaxTwistSearch = 1296;  // 6^4

enum class Provenance { inner_from_element, diagram_lift, torus_twist, composite };
std::string to_string(Provenance p);

/// Bracket-preserving linear map of finite order; column j is the image of
/// basis element j.
struct Automorphism {
  LieAlgebraPtr algebra;
  ExactMatrix map;
  int order = 1;
  Provenance provenance = Provenance::composite;
  std::string description;
};

bool preserves_brackets(const LieAlgebra& g, const ExactMatrix& map);
bool preserves_killing(const LieAlgebra& g, const ExactMatrix& map);
/// Smallest k <= cap with map^k = 1, or 0 if there is none.
int matrix_order(const ExactMatrix& map, int cap = kMaxAutomorphismOrder);

/// Verifies the map (brackets, Killing form, finite order <= 24) and wraps it.
Automorphism make_automorphism(LieAlgebraPtr g, ExactMatrix map, Provenance p, std::string description);

Automorphism identity_automorphism(LieAlgebraPtr g);
/// a o b
Automorphism compose(const Automorphism& a, const Automorphism& b);

/// X -> s X s^{-1} on a matrix algebra.
Automorphism inner_from_element(LieAlgebraPtr g, const ExactMatrix& s);
/// X -> -X^T on sl(n).
Automorphism standard_outer(LieAlgebraPtr g);
/// X -> -F X^T F^{-1}, the differential of A -> F (A^T)^{-1} F^{-1}.
Automorphism form_twisted_outer(LieAlgebraPtr g, const ExactMatrix& form);

/// e_i -> e_{pi(i)}, f_i -> f_{pi(i)} on the Chevalley basis (on a matrix
/// algebra, through its Chevalley model).
Automorphism lift_diagram_automorphism(LieAlgebraPtr g, const Permutation& pi);

/// Automorphism in Chevalley-model coordinates.
ExactMatrix model_map(const Automorphism& theta);
/// Automorphism of g from a map written in Chevalley-model coordinates.
ExactMatrix from_model_map(const LieAlgebra& g, const ExactMatrix& model_coords);

/// Root space g_alpha scaled by zeta_m^{<exponents, alpha>}, applied after base.
Automorphism torus_twist(const Automorphism& base, const std::vector<int>& exponents, int m);

struct Eigenspace {
  int k = 0;
  Cyc eigenvalue;
  std::vector<ExactVector> basis;
};

struct EigenDecomposition {
  int order = 1;
  std::vector<Eigenspace> spaces;
  bool grading_ok = false;
  std::vector<int> dims() const;
};

/// g^k = ker(map - zeta_n^k) for n = order; runs the grading check.
EigenDecomposition eigendecomposition(const Automorphism& theta);
bool grading_holds(const Automorphism& theta, const EigenDecomposition& dec);

/// Diagram symmetry representing the outer class of a CSA-preserving
/// automorphism; identity iff inner.
Permutation clique_of(const Automorphism& theta);

struct ClassBucket {
  InvariantProfile profile;        // of the fixed subalgebra g^0
  std::vector<int> eigendims;      // by k = 0..order-1 for the representative
  std::vector<int> eigendim_multiset;
  int order = 1;
  bool exact_order = true;         // order equals the search modulus
  Automorphism representative;
  std::vector<int> exponents;
  int members = 0;
};

struct EnumerationResult {
  int modulus = 1;
  std::vector<ClassBucket> buckets;
  int skipped = 0;                 // twists whose order does not divide the modulus
};

/// Torus-twist search over (Z/m)^rank seeded with base.
EnumerationResult enumerate_classes(const Automorphism& base, int m, std::uint64_t seed = kDefaultSeed);

// ---------------------------------------------------------------------------
// Group level

enum class GroupFamily { SL, SO, Sp };

struct MatrixGroup {
  GroupFamily family = GroupFamily::SL;
  int n = 2;
  std::string label() const;
  ExactMatrix form() const;  // identity for SO, J for Sp
  bool contains(const ExactMatrix& a) const;
  /// Scalars z with z I in the group.
  std::vector<Cyc> center() const;
};

/// Group-level automorphism in the grammar {conjugate-by(s), inverse-transpose,
/// form-twisted inverse-transpose, composite}.
struct GroupAutomorphism {
  enum class Kind { conjugate_by, inverse_transpose, form_twisted, composite };
  Kind kind = Kind::conjugate_by;
  ExactMatrix matrix;                    // s, or the form F
  std::vector<GroupAutomorphism> parts;  // composite: parts[0] o parts[1] o ...

  static GroupAutomorphism identity(int n);
  static GroupAutomorphism conjugate_by(const ExactMatrix& s);
  static GroupAutomorphism inverse_transpose();
  static GroupAutomorphism form_twisted(const ExactMatrix& f);
  static GroupAutomorphism composite(std::vector<GroupAutomorphism> parts);

  ExactMatrix apply(const ExactMatrix& a) const;
  ExactMatrix differential(const ExactMatrix& x) const;
  std::string describe() const;
};

/// z with s theta(s) ... theta^{n-1}(s) = z I, or nullopt if the product is
/// not a scalar matrix. Throws if s is not in the group.
std::optional<Cyc> s_theta_membership(const MatrixGroup& group, const ExactMatrix& s,
                                      const GroupAutomorphism& theta, int n);

/// The algebra automorphism induced by a group-level descriptor.
Automorphism differential_automorphism(LieAlgebraPtr g, const GroupAutomorphism& theta);

/// diag(1_p, -1_q)
ExactMatrix ipq(int p, int q);
/// [[0, I_m], [-I_m, 0]]
ExactMatrix j_form(int m);

}  // namespace liefix

#endif  // LIEFIX_AUTOMORPHISM_HPP
