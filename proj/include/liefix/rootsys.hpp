#ifndef LIEFIX_ROOTSYS_HPP
#define LIEFIX_ROOTSYS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liefix {

/// Raised for (type, rank) pairs outside A(n>=1), B(n>=2), C(n>=2), D(n>=3), G(2).
class UnsupportedAlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Root in simple-root coordinates.
using Root = std::vector<int>;
using Permutation = std::vector<int>;

/// Root system of a simple Lie algebra of classical type or G2.
///
/// cartan[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i), so that
/// [h_i, e_j] = cartan[i][j] e_j in the Chevalley basis.
struct RootSystem {
  char type = 'A';
  int rank = 0;
  std::vector<std::vector<int>> inner;   // symmetric (alpha_i, alpha_j), short roots of G2/B have 2 or 1
  std::vector<std::vector<int>> cartan;
  std::vector<Root> positive_roots;      // height, then lex with larger leading entries first

  std::string label() const { return std::string(1, type) + std::to_string(rank); }
  int num_roots() const { return 2 * static_cast<int>(positive_roots.size()); }
  std::vector<Root> simple_roots() const;
  /// Positive roots followed by their negatives in the same order.
  std::vector<Root> all_roots() const;

  int inner_product(const Root& a, const Root& b) const;
  /// <beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha).
  int pairing(const Root& beta, const Root& alpha) const;
  bool is_root(const Root& r) const;
  int height(const Root& r) const;
};

RootSystem build_root_system(char type, int rank);

/// Structure constants of a Chevalley basis {e_r : r a root} + {h_i}.
///
/// Basis order: positive roots, negative roots (same order), then h_1..h_l.
/// Brackets: [h_i, e_r] = <r, alpha_i^vee> e_r; [e_r, e_-r] = h_r with h_r the
/// coroot written in the simple coroots; [e_r, e_s] = N_{r,s} e_{r+s}.
/// Signs: every extraspecial pair gets N = +(p+1); the extraspecial pair of a
/// positive root xi is (a, xi - a) with a the earliest root in the total order
/// such that xi - a is a root. Remaining signs follow from the standard
/// relations and are checked by a Jacobi sweep.
struct ChevalleyData {
  RootSystem rs;
  std::vector<Root> roots;
  std::map<Root, int> index;
  std::vector<std::vector<int>> n;          // n[a][b] = N_{roots[a], roots[b]}, 0 if not a root sum
  std::vector<std::vector<int>> coroot;     // coroot[a][i]: coefficient of h_i in h_{roots[a]}
  std::vector<std::pair<int, int>> extraspecial;  // positive non-simple root index -> pair

  int dim() const { return static_cast<int>(roots.size()) + rs.rank; }
  int root_count() const { return static_cast<int>(roots.size()); }
  int h_index(int i) const { return static_cast<int>(roots.size()) + i; }
  int root_index(const Root& r) const;  // -1 if not a root
  int negative_of(int a) const;

  /// Sparse bracket of two basis elements as (basis index, coefficient) pairs.
  std::vector<std::pair<int, long>> bracket(int x, int y) const;
};

/// Builds the Chevalley constants and runs the full Jacobi sweep; throws
/// std::logic_error if the sweep fails.
ChevalleyData chevalley_constants(const RootSystem& rs);

/// All permutations of simple-root indices preserving the Cartan matrix,
/// identity first.
std::vector<Permutation> diagram_automorphism_group(const RootSystem& rs);

Permutation compose(const Permutation& a, const Permutation& b);  // (a o b)(i) = a(b(i))
Permutation inverse(const Permutation& p);
int permutation_order(const Permutation& p);
bool is_identity(const Permutation& p);

/// Weight lattice modulo root lattice, P/Q, from the Cartan matrix by Smith
/// normal form. A weight with fundamental-weight coordinates x has class
/// (to_class * x) mod factors; lift maps class coordinates back to weights.
struct WeightLatticeQuotient {
  std::vector<long> factors;               // invariant factors > 1
  std::vector<std::vector<long>> to_class; // factors.size() x rank
  std::vector<std::vector<long>> lift;     // rank x factors.size()
  long order() const;
};

WeightLatticeQuotient weight_lattice_quotient(const RootSystem& rs);

/// Integer matrix M (factors x factors) with class(pi . w) = M class(w) mod factors,
/// where pi permutes fundamental weights.
std::vector<std::vector<long>> center_action(const WeightLatticeQuotient& q, const Permutation& pi);

/// Invariant factors of the centre of the simply connected group, from the
/// classical table (A_n: n+1; B, C: 2; D even: 2,2; D odd: 4; G2: trivial).
std::vector<long> table_center(char type, int rank);
/// |Out| from the classical table.
int table_out_order(char type, int rank);

}  // namespace liefix

#endif  // LIEFIX_ROOTSYS_HPP
