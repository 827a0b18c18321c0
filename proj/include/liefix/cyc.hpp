#ifndef LIEFIX_CYC_HPP
#define LIEFIX_CYC_HPP

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace liefix {

using Rational = mpq_class;

/// Largest cyclotomic order the field layer accepts.
inline constexpr int kMaxCyclotomicOrder = 24;

/// Raised for division by zero and other undefined field operations.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a computation would leave Q(zeta_N) for N <= kMaxCyclotomicOrder.
class CyclotomicOrderError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

namespace detail {

// Data for Q(zeta_N) = Q[x]/Phi_N(x): the cyclotomic polynomial and the
// reduced power basis expression of zeta^k for 0 <= k < N.
struct CyclotomicTable {
  int order = 1;
  int degree = 1;                              // Euler phi(order)
  std::vector<std::int64_t> poly;              // Phi_N, ascending, monic
  std::vector<std::vector<std::int64_t>> pow;  // pow[k][j]: coeff of zeta^j in zeta^k
};

const CyclotomicTable& cyclotomic_table(int order);

}  // namespace detail

/// Integer coefficients of the n-th cyclotomic polynomial (ascending degree),
/// computed from x^n - 1 = prod_{d | n} Phi_d(x).
std::vector<std::int64_t> cyclotomic_polynomial(int n);

int euler_phi(int n);

/// Exact element of Q(zeta_N), N <= 24, stored as a rational coefficient
/// vector of length phi(N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
///
/// Results whose value is rational are stored with order 1, so a given field
/// element has one representation per order. Mixed-order operands are
/// embedded in Q(zeta_lcm) first.
class Cyc {
 public:
  using Coeffs = boost::container::small_vector<Rational, 2>;

  Cyc() : coeffs_(1) {}
  Cyc(long value) : coeffs_(1, Rational(value)) {}  // NOLINT(google-explicit-constructor)
  Cyc(int value) : coeffs_(1, Rational(value)) {}   // NOLINT(google-explicit-constructor)
  Cyc(const Rational& value) : coeffs_(1, value) {}  // NOLINT(google-explicit-constructor)

  /// zeta_n^k with zeta_n = exp(2 pi i / n).
  static Cyc zeta(int n, long k = 1);
  static Cyc rational(long num, long den);
  static Cyc from_coeffs(int order, const std::vector<Rational>& coeffs);

  int order() const { return order_; }
  const Coeffs& coeffs() const { return coeffs_; }

  bool is_zero() const {
    if (order_ != 1) return false;
    return sgn(coeffs_[0]) == 0;
  }
  bool is_one() const { return order_ == 1 && coeffs_[0] == 1; }
  bool is_rational() const { return order_ == 1; }
  const Rational& rational_value() const;

  /// Same element written over Q(zeta_target); target must be a multiple of order().
  Cyc embed(int target) const;

  Cyc& operator+=(const Cyc& other);
  Cyc& operator-=(const Cyc& other);
  Cyc& operator*=(const Cyc& other);
  Cyc& operator/=(const Cyc& other);
  Cyc operator-() const;

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  /// Multiplicative inverse; throws ArithmeticError on zero.
  Cyc inverse() const;

  /// Approximate value under zeta_N -> exp(2 pi i / N).
  long double approx_real() const;
  long double approx_imag() const;

  /// Sign of a real field element, decided from an approximation with a
  /// rigorous rounding bound. Throws if the element is not real or the bound
  /// is too loose to decide.
  int real_sign() const;

  std::string str() const;

 private:
  Cyc(int order, Coeffs coeffs) : order_(order), coeffs_(std::move(coeffs)) {}
  void demote();

  int order_ = 1;
  Coeffs coeffs_;
};

/// Complex conjugation zeta_N -> zeta_N^{N-1}.
Cyc conj(const Cyc& a);

std::ostream& operator<<(std::ostream& os, const Cyc& a);

}  // namespace liefix

#endif  // LIEFIX_CYC_HPP
