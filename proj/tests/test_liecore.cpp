#include <chrono>
#include <random>

#include "doctest.h"
#include "liefix/liealgebra.hpp"

using namespace liefix;

namespace {

// Killing form computed directly as tr(ad x ad y) from dense ad matrices.
Cyc killing_oracle(const LieAlgebra& g, int i, int j) {
  const ExactMatrix a = g.ad(g.basis_vector(i));
  const ExactMatrix b = g.ad(g.basis_vector(j));
  return multiply<Cyc>(a, b).trace();
}

std::vector<ExactVector> kernel_of(const ExactMatrix& m) { return nullspace<Cyc>(m); }

}  // namespace

TEST_CASE("classical dimensions") {
  CHECK(build_classical(Family::sl, 3)->dim() == 8);
  CHECK(build_classical(Family::so, 8)->dim() == 28);
  CHECK(build_classical(Family::sp, 4)->dim() == 10);
  CHECK_THROWS_AS(build_classical(Family::sl, 1), UnsupportedAlgebraError);
  CHECK_THROWS_AS(build_classical(Family::sp, 5), UnsupportedAlgebraError);
  CHECK_THROWS_AS(build_classical(Family::so, 2), UnsupportedAlgebraError);
}

TEST_CASE("Chevalley algebras") {
  const auto d4 = build_from_chevalley(chevalley_constants(build_root_system('D', 4)));
  CHECK(d4->dim() == 28);
  CHECK(d4->root_system()->rank == 4);
  CHECK(build_from_chevalley(chevalley_constants(build_root_system('G', 2)))->dim() == 14);
  const auto a1 = build_from_chevalley(chevalley_constants(build_root_system('A', 1)));
  const int h = 2;
  CHECK(a1->killing(h, h) == Cyc(8));
  CHECK(killing_oracle(*a1, h, h) == Cyc(8));
}

TEST_CASE("Jacobi identity and matrix brackets") {
  for (auto [fam, n] : std::vector<std::pair<Family, int>>{
           {Family::sl, 2}, {Family::sl, 3}, {Family::sl, 4}, {Family::so, 3}, {Family::so, 4},
           {Family::so, 5}, {Family::so, 6}, {Family::sp, 2}, {Family::sp, 4}, {Family::sp, 6}}) {
    const auto g = build_classical(fam, n);
    CAPTURE(g->label);
    CHECK(g->jacobi_holds());
    // bracket matches the matrix commutator
    for (int i = 0; i < g->dim(); ++i)
      for (int j = 0; j < g->dim(); ++j) {
        const ExactMatrix c = g->matrices[i] * g->matrices[j] - g->matrices[j] * g->matrices[i];
        CHECK(g->to_matrix(g->bracket(g->basis_vector(i), g->basis_vector(j))) == c);
      }
    // Killing matrix symmetric and nondegenerate
    CHECK(g->killing == g->killing.transpose());
    CHECK(rank<Cyc>(g->killing) == (fam == Family::so && n == 4 ? 6 : g->dim()));
  }
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'C', 3}, {'D', 4}, {'G', 2}}) {
    const auto g = build_from_chevalley(chevalley_constants(build_root_system(t, r)));
    CHECK(g->jacobi_holds());
    CHECK(rank<Cyc>(g->killing) == g->dim());
  }
}

TEST_CASE("Killing matrix transport between realizations") {
  for (auto [fam, n] : std::vector<std::pair<Family, int>>{{Family::sl, 3}, {Family::so, 8}}) {
    const auto g = build_classical(fam, n);
    REQUIRE(g->model);
    const ExactMatrix phi = g->from_model;
    CHECK(multiply<Cyc>(multiply<Cyc>(ExactMatrix(phi.transpose()), g->killing), phi) == g->model->killing);
    // direct trace oracle on a few entries
    CHECK(g->killing(0, 1) == killing_oracle(*g, 0, 1));
    CHECK(g->killing(g->dim() - 1, g->dim() - 1) == killing_oracle(*g, g->dim() - 1, g->dim() - 1));
  }
  // models exist for every simple family member exercised downstream
  for (int n : {2, 3, 5, 6, 7, 8}) CHECK(build_classical(Family::sl, n)->model != nullptr);
  for (int n : {3, 5, 6, 7, 8}) CHECK(build_classical(Family::so, n)->model != nullptr);
  for (int n : {2, 4, 6, 8}) CHECK(build_classical(Family::sp, n)->model != nullptr);
  CHECK(build_classical(Family::so, 4)->model == nullptr);
}

TEST_CASE("invariant profiles") {
  const auto sl3 = build_classical(Family::sl, 3);
  std::vector<ExactVector> all;
  for (int i = 0; i < sl3->dim(); ++i) all.push_back(sl3->basis_vector(i));
  CHECK(invariant_profile(*sl3, all) == InvariantProfile{8, 2, 0, 8});

  // fixed space of X -> -X^T: kernel of (map - id)
  ExactMatrix theta(sl3->dim(), sl3->dim());
  for (int i = 0; i < sl3->dim(); ++i) theta.col(i) = *sl3->coordinates(-sl3->matrices[i].transpose());
  const auto fixed = kernel_of(theta - ExactMatrix::Identity(sl3->dim(), sl3->dim()));
  CHECK(invariant_profile(*sl3, fixed) == InvariantProfile{3, 1, 0, 3});

  const auto sl4 = build_classical(Family::sl, 4);
  std::vector<ExactVector> torus;
  for (int i = 12; i < 15; ++i) torus.push_back(sl4->basis_vector(i));
  CHECK(invariant_profile(*sl4, torus) == InvariantProfile{3, 3, 3, 0});

  std::vector<ExactVector> bad = {sl4->basis_vector(0), sl4->basis_vector(3)};  // E12, E21
  CHECK_THROWS_AS(invariant_profile(*sl4, bad), NotSubalgebraError);
}

TEST_CASE("invariant profile is basis independent") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-3, 3);
  const auto sp4 = build_classical(Family::sp, 4);
  // gl(2) block: the A-part of sp(4)
  std::vector<ExactVector> gl2;
  for (int i = 0; i < 4; ++i) gl2.push_back(sp4->basis_vector(i));
  const InvariantProfile base = invariant_profile(*sp4, gl2);
  CHECK(base == InvariantProfile{4, 2, 1, 3});
  for (int trial = 0; trial < 5; ++trial) {
    ExactMatrix change(4, 4);
    do {
      for (int i = 0; i < 16; ++i) change.data()[i] = Cyc(coef(rng));
    } while (determinant<Cyc>(change).is_zero());
    std::vector<ExactVector> other;
    for (int c = 0; c < 4; ++c) {
      ExactVector v = ExactVector::Zero(sp4->dim());
      for (int r = 0; r < 4; ++r) v += gl2[r] * change(r, c);
      other.push_back(v);
    }
    CHECK(invariant_profile(*sp4, other) == base);
  }
}
