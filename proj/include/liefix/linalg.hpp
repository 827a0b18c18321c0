#ifndef LIEFIX_LINALG_HPP
#define LIEFIX_LINALG_HPP

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

#include "liefix/cyc.hpp"

namespace Eigen {

template <>
struct NumTraits<liefix::Cyc> : GenericNumTraits<liefix::Cyc> {
  using Real = liefix::Cyc;
  using NonInteger = liefix::Cyc;
  using Nested = liefix::Cyc;
  using Literal = liefix::Cyc;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 200
  };
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};

}  // namespace Eigen

namespace liefix {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using ExactMatrix = Mat<Cyc>;
using ExactVector = Vec<Cyc>;

inline bool scalar_is_zero(const Cyc& x) { return x.is_zero(); }
inline bool scalar_is_one(const Cyc& x) { return x.is_one(); }
template <class S>
bool scalar_is_zero(const S& x) {
  return x == S(0);
}
template <class S>
bool scalar_is_one(const S& x) {
  return x == S(1);
}

template <class S>
struct RrefResult {
  Mat<S> reduced;
  std::vector<int> pivots;
  int rank = 0;
};

/// Reduced row-echelon form by Gauss-Jordan elimination. The pivot is the
/// first nonzero entry in column order; the pivot row is normalized once when
/// selected and every other row is updated by a multiply-subtract, skipping
/// zero entries.
template <class S>
RrefResult<S> rref(Mat<S> m) {
  RrefResult<S> out;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = row;
    while (piv < rows && scalar_is_zero(m(piv, col))) ++piv;
    if (piv == rows) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    if (!scalar_is_one(m(row, col))) {
      const S inv = S(1) / m(row, col);
      for (Eigen::Index k = col; k < cols; ++k) {
        if (!scalar_is_zero(m(row, k))) m(row, k) *= inv;
      }
    }
    std::vector<Eigen::Index> support;
    for (Eigen::Index k = col + 1; k < cols; ++k) {
      if (!scalar_is_zero(m(row, k))) support.push_back(k);
    }
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || scalar_is_zero(m(r, col))) continue;
      const S f = m(r, col);
      for (Eigen::Index k : support) m(r, k) -= f * m(row, k);
      m(r, col) = S(0);
    }
    out.pivots.push_back(static_cast<int>(col));
    ++row;
  }
  out.rank = static_cast<int>(out.pivots.size());
  out.reduced = std::move(m);
  return out;
}

template <class S>
int rank(const Mat<S>& m) {
  return rref<S>(m).rank;
}

/// Basis of the right kernel, one vector per free column in ascending order,
/// with a 1 in that free column.
template <class S>
std::vector<Vec<S>> nullspace(const Mat<S>& m) {
  const auto r = rref<S>(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Vec<S>> basis;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<S> v = Vec<S>::Zero(cols);
    v(f) = S(1);
    for (int i = 0; i < r.rank; ++i) {
      const S& e = r.reduced(i, f);
      if (!scalar_is_zero(e)) v(r.pivots[i]) = -e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) return std::nullopt;
  Mat<S> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Mat<S>::Identity(n, n);
  auto r = rref<S>(std::move(aug));
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  return Mat<S>(r.reduced.rightCols(n));
}

template <class S>
S determinant(Mat<S> m) {
  const Eigen::Index n = m.rows();
  S det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && scalar_is_zero(m(piv, col))) ++piv;
    if (piv == n) return S(0);
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    const S inv = S(1) / m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (scalar_is_zero(m(r, col))) continue;
      const S f = m(r, col) * inv;
      for (Eigen::Index k = col; k < n; ++k) {
        if (!scalar_is_zero(m(col, k))) m(r, k) -= f * m(col, k);
      }
    }
  }
  return det;
}

/// Some solution x of a x = b, or nullopt if the system is inconsistent.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& a, const Vec<S>& b) {
  Mat<S> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto r = rref<S>(std::move(aug));
  if (r.rank > 0 && r.pivots.back() == a.cols()) return std::nullopt;
  Vec<S> x = Vec<S>::Zero(a.cols());
  for (int i = 0; i < r.rank; ++i) x(r.pivots[i]) = r.reduced(i, a.cols());
  return x;
}

/// Matrix product skipping zero entries of the left factor.
template <class S>
Mat<S> multiply(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> c = Mat<S>::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const S& x = a(i, k);
      if (scalar_is_zero(x)) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        if (!scalar_is_zero(b(k, j))) c(i, j) += x * b(k, j);
      }
    }
  }
  return c;
}

template <class S>
Vec<S> multiply(const Mat<S>& a, const Vec<S>& v) {
  Vec<S> out = Vec<S>::Zero(a.rows());
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    if (scalar_is_zero(v(k))) continue;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!scalar_is_zero(a(i, k))) out(i) += a(i, k) * v(k);
    }
  }
  return out;
}

template <class S>
bool is_zero_matrix(const Mat<S>& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (!scalar_is_zero(m.data()[i])) return false;
  }
  return true;
}

template <class S>
bool is_zero_vector(const Vec<S>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!scalar_is_zero(v(i))) return false;
  }
  return true;
}

/// Incrementally grown row-echelon basis of a subspace of S^n. Each stored
/// row has a 1 at its pivot and zeros at the pivots of earlier rows.
template <class S>
class EchelonBasis {
 public:
  explicit EchelonBasis(Eigen::Index ambient) : ambient_(ambient) {}

  Eigen::Index ambient() const { return ambient_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec<S>>& rows() const { return rows_; }

  /// Residual of v after subtracting its projection along the stored rows.
  Vec<S> reduce(Vec<S> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const S f = v(pivots_[i]);
      if (scalar_is_zero(f)) continue;
      const Vec<S>& row = rows_[i];
      for (Eigen::Index k = 0; k < ambient_; ++k) {
        if (!scalar_is_zero(row(k))) v(k) -= f * row(k);
      }
    }
    return v;
  }

  bool contains(const Vec<S>& v) const { return is_zero_vector<S>(reduce(v)); }

  /// Adds v; returns true when it enlarged the span.
  bool add(const Vec<S>& v) {
    Vec<S> r = reduce(v);
    Eigen::Index p = 0;
    while (p < ambient_ && scalar_is_zero(r(p))) ++p;
    if (p == ambient_) return false;
    if (!scalar_is_one(r(p))) {
      const S inv = S(1) / r(p);
      for (Eigen::Index k = p; k < ambient_; ++k) {
        if (!scalar_is_zero(r(k))) r(k) *= inv;
      }
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

 private:
  Eigen::Index ambient_;
  std::vector<Vec<S>> rows_;
  std::vector<Eigen::Index> pivots_;
};

/// Columns of a list of vectors as a matrix.
template <class S>
Mat<S> columns(const std::vector<Vec<S>>& vs, Eigen::Index rows) {
  Mat<S> m = Mat<S>::Zero(rows, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vs[j];
  return m;
}

/// Entrywise complex conjugate.
inline ExactMatrix conj(const ExactMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.size(); ++i) out.data()[i] = conj(m.data()[i]);
  return out;
}

}  // namespace liefix

#endif  // LIEFIX_LINALG_HPP
