#include "liefix/cyc.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace liefix {

namespace {

std::vector<std::int64_t> poly_divide_exact(std::vector<std::int64_t> num,
                                            const std::vector<std::int64_t>& den) {
  // den is monic
  const int dn = static_cast<int>(den.size()) - 1;
  const int nn = static_cast<int>(num.size()) - 1;
  std::vector<std::int64_t> quot(nn - dn + 1, 0);
  for (int k = nn - dn; k >= 0; --k) {
    const std::int64_t t = num[k + dn];
    quot[k] = t;
    if (t == 0) continue;
    for (int j = 0; j <= dn; ++j) num[k + j] -= t * den[j];
  }
  for (int j = 0; j < dn; ++j) {
    if (num[j] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

void check_order(int order) {
  if (order < 1 || order > kMaxCyclotomicOrder) {
    throw CyclotomicOrderError("cyclotomic order " + std::to_string(order) +
                               " outside supported range 1.." +
                               std::to_string(kMaxCyclotomicOrder));
  }
}

int lcm_order(int a, int b) {
  const int l = std::lcm(a, b);
  check_order(l);
  return l;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = poly_divide_exact(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2, m = n; p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  return result;
}

namespace detail {

const CyclotomicTable& cyclotomic_table(int order) {
  check_order(order);
  static std::array<CyclotomicTable, kMaxCyclotomicOrder + 1> tables;
  static std::once_flag once;
  std::call_once(once, [] {
    for (int n = 1; n <= kMaxCyclotomicOrder; ++n) {
      CyclotomicTable& t = tables[n];
      t.order = n;
      t.poly = cyclotomic_polynomial(n);
      t.degree = static_cast<int>(t.poly.size()) - 1;
      t.pow.assign(n, std::vector<std::int64_t>(t.degree, 0));
      std::vector<std::int64_t> cur(t.degree + 1, 0);
      cur[0] = 1;
      for (int k = 0; k < n; ++k) {
        std::copy(cur.begin(), cur.begin() + t.degree, t.pow[k].begin());
        // multiply by x and reduce modulo Phi_n
        std::vector<std::int64_t> next(t.degree + 1, 0);
        for (int j = 0; j < t.degree; ++j) next[j + 1] = cur[j];
        const std::int64_t top = next[t.degree];
        if (top != 0) {
          for (int j = 0; j <= t.degree; ++j) next[j] -= top * t.poly[j];
        }
        cur = next;
      }
    }
  });
  return tables[order];
}

}  // namespace detail

Cyc Cyc::zeta(int n, long k) {
  check_order(n);
  const auto& t = detail::cyclotomic_table(n);
  const long e = ((k % n) + n) % n;
  Coeffs c(t.degree);
  for (int j = 0; j < t.degree; ++j) c[j] = Rational(static_cast<long>(t.pow[e][j]));
  Cyc out(n, std::move(c));
  out.demote();
  return out;
}

Cyc Cyc::rational(long num, long den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Cyc(q);
}

Cyc Cyc::from_coeffs(int order, const std::vector<Rational>& coeffs) {
  check_order(order);
  const auto& t = detail::cyclotomic_table(order);
  if (static_cast<int>(coeffs.size()) != t.degree) {
    throw std::invalid_argument("Cyc::from_coeffs: expected " + std::to_string(t.degree) +
                                " coefficients for order " + std::to_string(order));
  }
  Coeffs c(coeffs.begin(), coeffs.end());
  for (auto& q : c) q.canonicalize();
  Cyc out(order, std::move(c));
  out.demote();
  return out;
}

const Rational& Cyc::rational_value() const {
  if (order_ != 1) throw ArithmeticError("Cyc::rational_value on irrational element " + str());
  return coeffs_[0];
}

void Cyc::demote() {
  if (order_ == 1) return;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) != 0) return;
  }
  coeffs_.resize(1);
  order_ = 1;
}

Cyc Cyc::embed(int target) const {
  check_order(target);
  if (target % order_ != 0) {
    throw std::invalid_argument("Cyc::embed: target order must be a multiple of the current order");
  }
  if (target == order_) return *this;
  const auto& t = detail::cyclotomic_table(target);
  const int step = target / order_;
  Coeffs c(t.degree);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    const auto& p = t.pow[(static_cast<int>(j) * step) % target];
    for (int i = 0; i < t.degree; ++i) {
      if (p[i] != 0) c[i] += coeffs_[j] * static_cast<long>(p[i]);
    }
  }
  return Cyc(target, std::move(c));
}

Cyc& Cyc::operator+=(const Cyc& other) {
  if (other.is_zero()) return *this;
  if (order_ == other.order_) {
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  } else if (other.order_ == 1) {
    coeffs_[0] += other.coeffs_[0];
  } else {
    const int l = lcm_order(order_, other.order_);
    Cyc a = embed(l);
    const Cyc b = other.embed(l);
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j) a.coeffs_[j] += b.coeffs_[j];
    *this = std::move(a);
  }
  demote();
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& other) {
  if (other.is_zero()) return *this;
  return *this += -other;
}

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto& q : out.coeffs_) q = -q;
  return out;
}

Cyc& Cyc::operator*=(const Cyc& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) {
    *this = Cyc();
    return *this;
  }
  if (other.order_ == 1) {
    for (auto& q : coeffs_) q *= other.coeffs_[0];
    return *this;
  }
  if (order_ == 1) {
    const Rational s = coeffs_[0];
    *this = other;
    for (auto& q : coeffs_) q *= s;
    return *this;
  }
  const int l = lcm_order(order_, other.order_);
  const Cyc a = embed(l);
  const Cyc b = other.embed(l);
  const auto& t = detail::cyclotomic_table(l);
  const int d = t.degree;
  std::vector<Rational> prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  for (int k = 2 * d - 2; k >= d; --k) {
    if (sgn(prod[k]) == 0) continue;
    const Rational top = prod[k];
    for (int j = 0; j <= d; ++j) {
      if (t.poly[j] != 0) prod[k - d + j] -= top * static_cast<long>(t.poly[j]);
    }
  }
  Coeffs c(prod.begin(), prod.begin() + d);
  *this = Cyc(l, std::move(c));
  demote();
  return *this;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in Q(zeta_N)");
  if (order_ == 1) return Cyc(Rational(1) / coeffs_[0]);
  const auto& t = detail::cyclotomic_table(order_);
  const int d = t.degree;
  // Solve (a * x) = 1 where column j of the system is a * zeta^j.
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  for (int j = 0; j < d; ++j) {
    Cyc col = *this * Cyc::zeta(order_, j);
    const Cyc full = col.embed(order_);
    for (int i = 0; i < d; ++i) m[i][j] = full.coeffs_[i];
  }
  m[0][d] = 1;
  for (int col = 0, row = 0; col < d; ++col) {
    int piv = row;
    while (piv < d && sgn(m[piv][col]) == 0) ++piv;
    if (piv == d) throw std::logic_error("singular multiplication matrix in Q(zeta_N)");
    std::swap(m[piv], m[row]);
    const Rational p = m[row][col];
    for (int k = col; k <= d; ++k) m[row][k] /= p;
    for (int i = 0; i < d; ++i) {
      if (i == row || sgn(m[i][col]) == 0) continue;
      const Rational f = m[i][col];
      for (int k = col; k <= d; ++k) m[i][k] -= f * m[row][k];
    }
    ++row;
  }
  Coeffs c(d);
  for (int i = 0; i < d; ++i) c[i] = m[i][d];
  Cyc out(order_, std::move(c));
  out.demote();
  return out;
}

Cyc& Cyc::operator/=(const Cyc& other) { return *this *= other.inverse(); }

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.order_ == b.order_) {
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j) {
      if (a.coeffs_[j] != b.coeffs_[j]) return false;
    }
    return true;
  }
  // rational values always carry order 1
  if (a.order_ == 1 || b.order_ == 1) return false;
  const int l = lcm_order(a.order_, b.order_);
  const Cyc x = a.embed(l);
  const Cyc y = b.embed(l);
  for (std::size_t j = 0; j < x.coeffs_.size(); ++j) {
    if (x.coeffs_[j] != y.coeffs_[j]) return false;
  }
  return true;
}

Cyc conj(const Cyc& a) {
  if (a.is_rational()) return a;
  const int n = a.order();
  Cyc out;
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
    if (sgn(a.coeffs()[j]) == 0) continue;
    out += Cyc(a.coeffs()[j]) * Cyc::zeta(n, n - static_cast<long>(j));
  }
  return out;
}

namespace {

long double to_ld(const Rational& q) {
  // mpq_get_d loses range for huge values; fine for sign decisions with the bound below
  return static_cast<long double>(q.get_d());
}

constexpr long double kTwoPi = 6.283185307179586476925286766559L;

}  // namespace

long double Cyc::approx_real() const {
  long double v = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    v += to_ld(coeffs_[j]) * std::cos(kTwoPi * static_cast<long double>(j) / order_);
  }
  return v;
}

long double Cyc::approx_imag() const {
  long double v = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    v += to_ld(coeffs_[j]) * std::sin(kTwoPi * static_cast<long double>(j) / order_);
  }
  return v;
}

int Cyc::real_sign() const {
  if (order_ == 1) return sgn(coeffs_[0]);
  if (conj(*this) != *this) throw ArithmeticError("real_sign of non-real element " + str());
  long double magnitude = 0;
  for (const auto& q : coeffs_) magnitude += std::fabs(to_ld(q));
  // double conversion of each coefficient plus trig rounding
  const long double bound = magnitude * 1e-13L;
  const long double v = approx_real();
  if (std::fabs(v) <= bound) {
    throw ArithmeticError("cannot certify the sign of " + str());
  }
  return v > 0 ? 1 : -1;
}

std::string Cyc::str() const {
  if (order_ == 1) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& q = coeffs_[j];
    if (sgn(q) == 0) continue;
    Rational mag = abs(q);
    if (!first) os << (sgn(q) < 0 ? " - " : " + ");
    else if (sgn(q) < 0) os << "-";
    first = false;
    if (j == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "E(" << order_ << ")";
    if (j > 1) os << "^" << j;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc& a) { return os << a.str(); }

}  // namespace liefix
