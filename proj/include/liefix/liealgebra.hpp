#ifndef LIEFIX_LIEALGEBRA_HPP
#define LIEFIX_LIEALGEBRA_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liefix/linalg.hpp"
#include "liefix/rootsys.hpp"

namespace liefix {

class NotSubalgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Term {
  int index;
  Cyc coeff;
};
using SparseVector = std::vector<Term>;

enum class Family { sl, so, sp, chevalley };

class LieAlgebra;
using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Finite-dimensional Lie algebra over Q(zeta_N) given by a sparse structure
/// table on a fixed basis, optionally with a matrix realization.
class LieAlgebra {
 public:
  std::string label;          // "sl(4)", "so(8)", "sp(4)", "D4", ...
  Family family = Family::chevalley;
  int matrix_size = 0;        // n for sl(n)/so(n)/sp(n); 0 for abstract algebras
  std::vector<std::string> basis_labels;
  std::vector<std::vector<SparseVector>> table;  // table[i][j] = [x_i, x_j]
  std::vector<ExactMatrix> matrices;             // empty for abstract algebras
  ExactMatrix killing;

  // Abstract Chevalley data (abstract algebras only).
  std::shared_ptr<const ChevalleyData> chevalley;

  // For simple matrix algebras: the abstract Chevalley model and the
  // isomorphism sending model coordinates to coordinates in this basis.
  LieAlgebraPtr model;
  ExactMatrix from_model;
  ExactMatrix to_model;

  int dim() const { return static_cast<int>(basis_labels.size()); }
  bool has_matrices() const { return !matrices.empty(); }
  /// Root system of the simple algebra (abstract or via the model); null for so(4).
  const RootSystem* root_system() const;

  ExactVector basis_vector(int i) const;
  ExactVector bracket(const ExactVector& x, const ExactVector& y) const;
  ExactVector bracket_basis(int i, const ExactVector& y) const;
  /// Matrix of ad(x) on the basis: column j holds [x, x_j].
  ExactMatrix ad(const ExactVector& x) const;

  ExactMatrix to_matrix(const ExactVector& coords) const;
  /// Coordinates of a matrix in the basis, or nullopt if it is outside the span.
  std::optional<ExactVector> coordinates(const ExactMatrix& m) const;

  /// Antisymmetry and Jacobi identity on all basis triples.
  bool jacobi_holds() const;

  // coordinate extraction: coords = coord_map * (entries at coord_rows)
  std::vector<int> coord_rows;   // flattened row-major matrix entries
  ExactMatrix coord_map;
};

/// sl(n) (n >= 2), so(n) with X^T = -X (n >= 3), sp(n) w.r.t. J = [[0, I], [-I, 0]] (n even).
LieAlgebraPtr build_classical(Family family, int n);

LieAlgebraPtr build_from_chevalley(const ChevalleyData& cd);

/// Fills table from the matrices and computes the Killing matrix.
void finalize_matrix_algebra(LieAlgebra& g);
ExactMatrix killing_matrix(const LieAlgebra& g);

/// Linear map from the abstract Chevalley algebra `source` to `target`
/// determined by e_{alpha_i} -> e_images[i], e_{-alpha_i} -> f_images[i].
/// Returns the target-by-source coordinate matrix, or nullopt if the
/// extension fails to preserve brackets.
std::optional<ExactMatrix> homomorphism_from_generators(const LieAlgebra& source, const LieAlgebra& target,
                                                        const std::vector<ExactVector>& e_images,
                                                        const std::vector<ExactVector>& f_images);

/// Chevalley generators of a matrix algebra (E_i, F_i as matrices) matching
/// the Cartan matrix of its root system.
std::pair<std::vector<ExactMatrix>, std::vector<ExactMatrix>> matrix_chevalley_generators(Family family,
                                                                                          int n);

struct InvariantProfile {
  int dim = 0;
  int rank = 0;
  int center_dim = 0;
  int derived_dim = 0;
  auto operator<=>(const InvariantProfile&) const = default;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024ULL;
inline constexpr int kRankDraws = 5;

/// Profile of the subalgebra spanned by `basis` (coordinates in g). Throws
/// NotSubalgebraError if the span is not closed under the bracket.
InvariantProfile invariant_profile(const LieAlgebra& g, const std::vector<ExactVector>& basis,
                                   std::uint64_t seed = kDefaultSeed);

std::string to_string(const InvariantProfile& p);

}  // namespace liefix

#endif  // LIEFIX_LIEALGEBRA_HPP
