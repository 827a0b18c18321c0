#include <algorithm>

#include "doctest.h"
#include "liefix/realforms.hpp"

using namespace liefix;

namespace {

ExactMatrix mat2(Cyc a, Cyc b, Cyc c, Cyc d) {
  ExactMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// Oracle: real basis of g^sigma from the rationalized real lattice, then the
// signature of the real symmetric Killing Gram matrix by counting sign
// changes of leading principal minors after a generic congruence is avoided:
// here simply diagonalize with Schur complements on a real basis.
Signature real_basis_signature(const Conjugation& sigma) {
  const LieAlgebra& g = *sigma.algebra;
  const int d = g.dim();
  // x + sigma(x) and i(x - sigma(x)) span g^sigma over R
  std::vector<ExactVector> real_vectors;
  EchelonBasis<Cyc> span(d);
  const Cyc i = Cyc::zeta(4);
  for (int k = 0; k < d && span.rank() < d; ++k) {
    const ExactVector e = g.basis_vector(k);
    const ExactVector s = sigma.apply(e);
    for (const ExactVector& v : {ExactVector(e + s), ExactVector((e - s) * i)}) {
      if (span.add(v)) real_vectors.push_back(v);
    }
  }
  REQUIRE(static_cast<int>(real_vectors.size()) == d);
  ExactMatrix gram(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) gram(a, b) = real_vectors[a].transpose() * g.killing * real_vectors[b];
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) REQUIRE(conj(gram(a, b)) == gram(a, b));
  return hermitian_signature(gram);
}

}  // namespace

TEST_CASE("compact conjugations") {
  const auto sl2 = build_classical(Family::sl, 2);
  const auto tau = compact_conjugation(sl2);
  CHECK(is_involutive(tau));
  CHECK(preserves_brackets(tau));
  const auto sig = killing_signature(tau);
  CHECK(sig.negatives == 3);
  CHECK(sig.positives == 0);
  CHECK(real_basis_signature(tau).negatives == 3);
  CHECK(killing_signature(compact_conjugation(build_classical(Family::so, 8))).negatives == 28);
  for (auto g : {build_classical(Family::sp, 4), build_classical(Family::so, 7),
                 build_from_chevalley(chevalley_constants(build_root_system('G', 2)))}) {
    const auto t = compact_conjugation(g);
    CHECK(is_involutive(t));
    CHECK(preserves_brackets(t));
    CHECK(killing_signature(t).negatives == g->dim());
  }
}

TEST_CASE("cartan pairs on sl(n)") {
  for (int n = 2; n <= 5; ++n) {
    const auto g = build_classical(Family::sl, n);
    const auto tau = compact_conjugation(g);
    for (int p = 1; 2 * p <= n; ++p) {
      const int q = n - p;
      const auto theta = inner_from_element(g, ipq(p, q));
      const auto sigma = cartan_pair(theta, tau);
      CHECK(is_involutive(sigma));
      CHECK(preserves_brackets(sigma));
      CHECK(killing_signature(sigma).negatives == p * p + q * q - 1);
      CHECK(is_hermitian_type(theta));
      CHECK(compose(sigma, tau).linear == theta.map);
    }
    if (n >= 3) {
      const auto outer = standard_outer(g);
      const auto sigma = cartan_pair(outer, tau);
      const auto id = identify_real_form(sigma, tau);
      CHECK(id.signature.negatives == n * (n - 1) / 2);
      CHECK(id.name == "sl(" + std::to_string(n) + ",R)");
      CHECK(!is_hermitian_type(outer));
      CHECK(!id.hodge_type);
    }
    const auto idt = identity_automorphism(g);
    const auto sigma = cartan_pair(idt, tau);
    CHECK(sigma.linear == tau.linear);
    CHECK(!is_hermitian_type(idt));
  }
}

TEST_CASE("identify_real_form examples") {
  const auto sl2 = build_classical(Family::sl, 2);
  const auto tau2 = compact_conjugation(sl2);
  const auto id = identify_real_form(cartan_pair(inner_from_element(sl2, ipq(1, 1)), tau2), tau2);
  CHECK(id.signature.negatives == 1);
  CHECK(id.signature.positives == 2);
  CHECK(id.name.find("su(1,1)") != std::string::npos);
  CHECK(real_basis_signature(cartan_pair(inner_from_element(sl2, ipq(1, 1)), tau2)).negatives == 1);

  const auto sp4 = build_classical(Family::sp, 4);
  const auto tau4 = compact_conjugation(sp4);
  const auto c = identify_real_form(tau4, tau4);
  CHECK(c.signature.negatives == 10);
  CHECK(c.signature.positives == 0);

  const auto sl3 = build_classical(Family::sl, 3);
  const auto tau3 = compact_conjugation(sl3);
  const auto split = identify_real_form(cartan_pair(standard_outer(sl3), tau3), tau3);
  CHECK(split.signature.negatives == 3);
  CHECK(split.signature.positives == 5);
  CHECK(split.name == "sl(3,R)");
  CHECK(real_basis_signature(cartan_pair(standard_outer(sl3), tau3)).positives == 5);
}

TEST_CASE("non-commuting pairs are rejected") {
  const auto sl3 = build_classical(Family::sl, 3);
  const auto tau = compact_conjugation(sl3);
  ExactMatrix s = ExactMatrix::Zero(3, 3);  // Int(s) has order 2 but s is not unitary up to scale
  s(0, 0) = Cyc(1);
  s(0, 1) = Cyc(2);
  s(1, 1) = Cyc(-1);
  s(2, 2) = Cyc(-1);
  const auto theta = inner_from_element(sl3, s);
  CHECK(theta.order == 2);
  CHECK_THROWS_AS(cartan_pair(theta, tau), RealFormError);
}

TEST_CASE("Cartan pairing over enumerated classes") {
  for (auto g : {build_classical(Family::sl, 4)->model, build_classical(Family::so, 8)->model,
                 build_classical(Family::sp, 6)->model}) {
    const auto tau = compact_conjugation(g);
    for (const auto& p : diagram_automorphism_group(*g->root_system())) {
      if (permutation_order(p) > 2) continue;
      const auto res = enumerate_classes(lift_diagram_automorphism(g, p), 2);
      for (const auto& b : res.buckets) {
        const auto sigma = cartan_pair(b.representative, tau);
        CHECK(is_involutive(sigma));
        CHECK(preserves_brackets(sigma));
        const auto id = identify_real_form(sigma, tau);
        CHECK(id.compact_part_dim == b.profile.dim);
        CHECK(!id.name.empty());
        CHECK(id.hodge_type == is_identity(p));
        CHECK(compose(sigma, tau).linear == b.representative.map);
      }
    }
  }
}

TEST_CASE("catalog") {
  const auto a3 = real_form_catalog('A', 3);
  CHECK(std::any_of(a3.begin(), a3.end(), [](const CatalogEntry& e) { return e.name == "su*(4)" && e.negatives == 10; }));
  const auto g2 = real_form_catalog('G', 2);
  CHECK(g2.size() == 2);
}

TEST_CASE("central probes") {
  const MatrixGroup sl2{GroupFamily::SL, 2};
  const auto i = Cyc::zeta(4);
  const auto j = mat2(0, i, i, 0);
  const auto ch = central_probe(sl2, GroupAutomorphism::inverse_transpose(), 2, {j});
  REQUIRE(ch.observed[0]);
  CHECK(*ch.observed[0] == Cyc(-1));
  CHECK(ch.generated.size() == 2);
  CHECK(ch.center.size() == 2);
  CHECK(ch.multiplicative);
  CHECK(ch.within_z_a);

  const MatrixGroup sl3{GroupFamily::SL, 3};
  std::vector<ExactMatrix> central;
  for (int k = 0; k < 3; ++k) central.push_back(ExactMatrix::Identity(3, 3) * Cyc::zeta(3, k));
  const auto c3 = central_probe(sl3, GroupAutomorphism::inverse_transpose(), 2, central);
  for (int k = 0; k < 3; ++k) {
    REQUIRE(c3.observed[k]);
    const Cyc z = Cyc::zeta(3, k);
    CHECK(*c3.observed[k] == (z * z).inverse());
    CHECK(*c3.observed[k] * conj(*c3.observed[k]) == Cyc(1));
  }
  CHECK(c3.generated.size() == 3);
  CHECK(c3.multiplicative);
  CHECK(c3.within_z_a);
  CHECK(c3.exact);

  const auto idp = central_probe(sl3, GroupAutomorphism::inverse_transpose(), 2, {ExactMatrix::Identity(3, 3)});
  CHECK(idp.observed[0]->is_one());

  // SL(4) under inverse-transpose: c(iI) = -1, so the probe subgroup is nontrivial
  const MatrixGroup sl4{GroupFamily::SL, 4};
  const auto c4 = central_probe(sl4, GroupAutomorphism::inverse_transpose(), 2, {ExactMatrix::Identity(4, 4) * i, j_form(2)});
  REQUIRE(c4.observed[0]);
  CHECK(*c4.observed[0] == Cyc(-1));
  CHECK(c4.generated.size() == 2);
  CHECK(c4.multiplicative);
  CHECK(c4.within_z_a);

  // probes outside the normalizer give no value; probes outside the group are rejected
  const auto cn = central_probe(sl2, GroupAutomorphism::inverse_transpose(), 2, {mat2(1, 1, 0, 1)});
  CHECK(!cn.observed[0]);
  CHECK_THROWS(central_probe(sl2, GroupAutomorphism::inverse_transpose(), 2, {mat2(2, 0, 0, 1)}));
}
