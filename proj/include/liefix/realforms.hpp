#ifndef LIEFIX_REALFORMS_HPP
#define LIEFIX_REALFORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "liefix/automorphism.hpp"

namespace liefix {

class RealFormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// x -> linear * conj(x) when antilinear, x -> linear * x otherwise.
struct Conjugation {
  LieAlgebraPtr algebra;
  ExactMatrix linear;
  bool antilinear = true;

  ExactVector apply(const ExactVector& x) const;
};

/// Composition a o b with the conjugation bookkeeping applied once here.
Conjugation compose(const Conjugation& a, const Conjugation& b);
Conjugation as_conjugation(const Automorphism& theta);

bool is_involutive(const Conjugation& s);
bool preserves_brackets(const Conjugation& s);

/// X -> -conj(X)^T on matrix algebras; e_r -> -e_{-r}, h -> -h on Chevalley algebras.
Conjugation compact_conjugation(LieAlgebraPtr g);

struct Signature {
  int negatives = 0;
  int positives = 0;
  int zeros = 0;
};

/// Signature of the Hermitian matrix h by Hermitian congruence.
Signature hermitian_signature(const ExactMatrix& h);

/// Killing signature of the real form fixed by the antilinear involution s.
Signature killing_signature(const Conjugation& s);

/// sigma = theta o tau. Throws RealFormError if theta and tau do not commute;
/// the message reports the rank of the commutator defect.
Conjugation cartan_pair(const Automorphism& theta, const Conjugation& tau);

struct RealFormID {
  std::string ambient;
  int dim = 0;
  Signature signature;
  int compact_part_dim = 0;
  bool hermitian = false;
  bool hodge_type = false;
  std::string name;        // empty when unmatched
  std::string group_name;  // e.g. SL(4,R); empty when unmatched
};

/// Identifies g^sigma given the compact conjugation tau commuting with sigma.
RealFormID identify_real_form(const Conjugation& sigma, const Conjugation& tau);

bool is_hermitian_type(const Automorphism& theta);

struct CatalogEntry {
  std::string name;
  std::string group_name;
  int negatives = 0;
  bool hermitian = false;
};
/// Real forms of the simple algebra with root system (type, rank).
std::vector<CatalogEntry> real_form_catalog(char type, int rank);

struct CentralHom {
  std::string group;
  std::string descriptor;
  int order = 2;
  std::vector<std::optional<Cyc>> observed;  // c(A) per probe; nullopt if theta(A) A^{-1} is not central
  std::vector<Cyc> center;
  std::vector<std::pair<Cyc, Cyc>> central_values;  // (z, c(z) = theta(z) z^{-1})
  std::vector<Cyc> z_a;                             // z with z a(z) ... a^{n-1}(z) = 1
  std::vector<Cyc> generated;                       // subgroup generated by observed values
  bool multiplicative = true;
  bool within_z_a = true;
  bool exact = false;  // generated subgroup equals Z_a
};

CentralHom central_probe(const MatrixGroup& group, const GroupAutomorphism& theta, int n,
                         const std::vector<ExactMatrix>& probes);

/// Subgroup of the scalar centre generated by a set of scalars.
std::vector<Cyc> generated_subgroup(const std::vector<Cyc>& gens);

}  // namespace liefix

#endif  // LIEFIX_REALFORMS_HPP
