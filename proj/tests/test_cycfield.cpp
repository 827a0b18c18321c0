#include <random>

#include "doctest.h"
#include "liefix/linalg.hpp"

using namespace liefix;

namespace {

// Random element of Q(zeta_N) with small numerators and denominators.
Cyc random_cyc(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  Cyc out;
  for (int j = 0; j < euler_phi(order); ++j) {
    out += Cyc::rational(num(rng), den(rng)) * Cyc::zeta(order, j);
  }
  return out;
}

int random_order(std::mt19937_64& rng) {
  static const int orders[] = {1, 2, 3, 4, 6, 8, 12};
  return orders[std::uniform_int_distribution<int>(0, 6)(rng)];
}

ExactMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  ExactMatrix m(static_cast<Eigen::Index>(rows.size()),
                static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long x : r) m(i, j++) = Cyc(x);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("cyclotomic polynomials from the division recursion") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  for (int n = 1; n <= kMaxCyclotomicOrder; ++n) {
    CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) - 1 == euler_phi(n));
  }
}

TEST_CASE("field operation examples") {
  CHECK(Cyc::zeta(4) * Cyc::zeta(4) == Cyc(-1));
  CHECK((Cyc(1) + Cyc::zeta(3) + Cyc::zeta(3, 2)).is_zero());
  const Cyc a = Cyc(1) + Cyc::zeta(8);
  CHECK((a / a).is_one());
  CHECK_THROWS_AS(Cyc(1) / Cyc(0), ArithmeticError);
  CHECK_THROWS_AS(Cyc::zeta(25), CyclotomicOrderError);
  // zeta_8^2 = zeta_4 after embedding
  CHECK(Cyc::zeta(8, 2) == Cyc::zeta(4));
  CHECK(Cyc::zeta(4) + Cyc::zeta(3) - Cyc::zeta(3) == Cyc::zeta(4));
  CHECK((Cyc::zeta(12) * Cyc::zeta(12, 11)).is_one());
  CHECK((Cyc::zeta(4) * Cyc::zeta(6)).order() == 12);
}

TEST_CASE("canonical storage") {
  const Cyc r = Cyc::zeta(6) + Cyc::zeta(6, 5);  // 2 cos(pi/3) = 1
  CHECK(r.is_rational());
  CHECK(r.coeffs().size() == 1);
  CHECK(r == Cyc(1));
  CHECK(Cyc::zeta(2) == Cyc(-1));
  CHECK(Cyc::zeta(8).coeffs().size() == 4);
}

TEST_CASE("complex conjugation examples") {
  CHECK(conj(Cyc::zeta(4)) == -Cyc::zeta(4));
  CHECK(conj(Cyc::rational(3, 5)) == Cyc::rational(3, 5));
  CHECK(conj(conj(Cyc::zeta(12))) == Cyc::zeta(12));
}

TEST_CASE("real signs") {
  CHECK(Cyc(-3).real_sign() == -1);
  const Cyc sqrt2 = Cyc::zeta(8) + Cyc::zeta(8, 7);
  CHECK(sqrt2.real_sign() == 1);
  CHECK((sqrt2 * sqrt2) == Cyc(2));
  CHECK((Cyc(1) - sqrt2).real_sign() == -1);
  CHECK_THROWS_AS(Cyc::zeta(4).real_sign(), ArithmeticError);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const Cyc a = random_cyc(rng, random_order(rng));
    const Cyc b = random_cyc(rng, random_order(rng));
    const Cyc c = random_cyc(rng, random_order(rng));
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK(conj(a + b) == conj(a) + conj(b));
    CHECK(conj(conj(a)) == a);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("rref examples") {
  auto r = rref<Cyc>(from_ints({{1, 1}, {1, 1}}));
  CHECK(r.rank == 1);
  r = rref<Cyc>(ExactMatrix::Identity(5, 5));
  CHECK(r.rank == 5);
  CHECK(r.pivots == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(rref<Cyc>(from_ints({{0, 1}, {1, 0}})).rank == 2);
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace<Cyc>(ExactMatrix::Zero(3, 3)).size() == 3);
  CHECK(nullspace<Cyc>(ExactMatrix::Identity(4, 4)).empty());
  const auto ns = nullspace<Cyc>(from_ints({{1, 1}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0](0) == -ns[0](1));
  CHECK(!ns[0](0).is_zero());
}

TEST_CASE("rank-nullity and inverse on random cyclotomic matrices") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> dim(1, 6), sparse(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    const int order = random_order(rng);
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = sparse(rng) == 0 ? Cyc(0) : random_cyc(rng, order);
    const auto r = rref<Cyc>(m);
    const auto ns = nullspace<Cyc>(m);
    CHECK(r.rank + static_cast<int>(ns.size()) == cols);
    for (const auto& v : ns) CHECK(is_zero_vector<Cyc>(multiply<Cyc>(m, v)));
    if (rows == cols) {
      const auto inv = inverse<Cyc>(m);
      CHECK(inv.has_value() == (r.rank == rows));
      CHECK(determinant<Cyc>(m).is_zero() == !inv.has_value());
      if (inv) CHECK(multiply<Cyc>(m, *inv) == ExactMatrix::Identity(rows, rows));
    }
  }
}

TEST_CASE("echelon basis membership") {
  EchelonBasis<Cyc> eb(3);
  ExactVector v(3), w(3);
  v << Cyc(1), Cyc::zeta(3), Cyc(0);
  w << Cyc(0), Cyc(1), Cyc(1);
  CHECK(eb.add(v));
  CHECK(eb.add(w));
  CHECK(!eb.add(ExactVector(v * Cyc(2) - w * Cyc::zeta(4))));
  CHECK(eb.rank() == 2);
  ExactVector e2 = ExactVector::Zero(3);
  e2(2) = 1;
  CHECK(!eb.contains(e2));
}
