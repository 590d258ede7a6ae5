#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "json.hpp"

#include "epg/errors.hpp"
#include "epg/graph.hpp"

namespace Eigen {
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};
}  // namespace Eigen

namespace epg {

using BigInt = mpz_class;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using LaplacianMatrix = DenseMatrix<long>;

/// L = D - A.
template <typename Scalar = long>
DenseMatrix<Scalar> laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  DenseMatrix<Scalar> l = DenseMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto v = static_cast<Vertex>(i);
    l(i, i) = static_cast<Scalar>(g.degree(v));
    const auto& row = g.neighbors(v);
    for (auto j = row.find_first(); j != VertexSet::npos; j = row.find_next(j))
      l(i, static_cast<Eigen::Index>(j)) = Scalar(-1);
  }
  return l;
}

namespace detail {

/// x <- (pivot * x - a * b) / prev, the division being exact.
template <typename Scalar>
inline void bareiss_update(Scalar& x, const Scalar& pivot, const Scalar& a, const Scalar& b,
                           const Scalar& prev) {
  x = (pivot * x - a * b) / prev;
}

inline void bareiss_update(BigInt& x, const BigInt& pivot, const BigInt& a, const BigInt& b,
                           const BigInt& prev) {
  mpz_mul(x.get_mpz_t(), x.get_mpz_t(), pivot.get_mpz_t());
  mpz_submul(x.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
}

}  // namespace detail

/// Rank over the rationals by fraction-free (Bareiss) elimination. Every
/// intermediate entry is a minor of the input, so divisions are exact; use an
/// arbitrary-precision Scalar unless the minors are known to fit.
template <typename Derived>
Eigen::Index bareiss_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> m = input;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Scalar prev(1);
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot_row = rank;
    while (pivot_row < rows && m(pivot_row, c) == Scalar(0)) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != rank) m.row(pivot_row).swap(m.row(rank));
    const Scalar pivot = m(rank, c);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      const Scalar a = m(i, c);
      for (Eigen::Index j = c + 1; j < cols; ++j) detail::bareiss_update(m(i, j), pivot, a, m(rank, j), prev);
      m(i, c) = Scalar(0);
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

template <typename Real>
struct JacobiResult {
  DenseVector<Real> eigenvalues;  // descending
  int sweeps = 0;
  Real off_norm = 0;
};

/// Cyclic Jacobi eigenvalues of a symmetric matrix. Rotations are applied in
/// fixed row-major (p, q) order each sweep until the off-diagonal Frobenius
/// norm drops below `tol`.
template <typename Derived>
JacobiResult<typename Derived::RealScalar> jacobi_eigenvalues(const Eigen::MatrixBase<Derived>& input,
                                                              typename Derived::RealScalar tol = 1e-9,
                                                              int max_sweeps = 100) {
  using Real = typename Derived::RealScalar;
  DenseMatrix<Real> a = input.template cast<Real>();
  const Eigen::Index n = a.rows();
  JacobiResult<Real> result;

  auto off_norm = [&] {
    Real sum = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      sum += a.col(j).head(j).squaredNorm() + a.col(j).tail(n - j - 1).squaredNorm();
    }
    return std::sqrt(sum);
  };

  result.off_norm = off_norm();
  while (result.off_norm >= tol) {
    if (result.sweeps == max_sweeps) throw NonConvergence(static_cast<double>(result.off_norm), max_sweeps);
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Real apq = a(p, q);
        if (apq == Real(0)) continue;
        const Real theta = (a(q, q) - a(p, p)) / (2 * apq);
        const Real t = (theta >= 0 ? Real(1) : Real(-1)) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const Real c = 1 / std::sqrt(t * t + 1);
        const Real s = t * c;
        DenseVector<Real> col_p = a.col(p);
        a.col(p) = c * col_p - s * a.col(q);
        a.col(q) = s * col_p + c * a.col(q);
        Eigen::Matrix<Real, 1, Eigen::Dynamic> row_p = a.row(p);
        a.row(p) = c * row_p - s * a.row(q);
        a.row(q) = s * row_p + c * a.row(q);
        a(p, q) = a(q, p) = 0;
      }
    }
    ++result.sweeps;
    result.off_norm = off_norm();
  }
  result.eigenvalues = a.diagonal();
  std::sort(result.eigenvalues.data(), result.eigenvalues.data() + n, std::greater<Real>());
  return result;
}

/// Number of entries of `values` within `tol` of `target`.
template <typename Derived>
std::size_t count_near(const Eigen::MatrixBase<Derived>& values, double target, double tol) {
  return static_cast<std::size_t>(((values.array() - target).abs() < tol).count());
}

struct SpectrumOptions {
  double tol = 1e-9;        // Jacobi off-diagonal threshold
  double group_tol = 1e-6;  // eigenvalue multiplicity grouping
  std::size_t max_n = 1500;
  int max_sweeps = 100;
};

/// Exact multiplicity of eigenvalue n of L: n - rank(L - nI) over Q.
std::size_t multiplicity_of_eigenvalue_n(const Graph& g);

/// Exact multiplicity of eigenvalue 0 of L: n - rank(L).
std::size_t multiplicity_of_eigenvalue_zero(const Graph& g);

/// All Laplacian eigenvalues, descending. Throws BoundExceededError, NonConvergence.
Eigen::VectorXd laplacian_spectrum(const Graph& g, const SpectrumOptions& options = {});

/// Multiplicity of the largest Laplacian eigenvalue. Exact when the graph has a
/// dominating vertex (lambda_1 = n), floating otherwise.
std::size_t spectral_radius_multiplicity(const Graph& g, const SpectrumOptions& options = {});

struct EtaCheck {
  bool applicable = false;  // n >= 3
  bool non_complete = false;
  bool complement_core_connected = false;  // complement minus isolated vertices
  bool has_dominating = false;
  bool hypotheses = false;
  std::size_t eta = 0;
  std::size_t dom_count = 0;
  bool eta_equals_dom = false;
  /// hypotheses <=> eta == |Dom| (vacuously true when not applicable).
  bool consistent = false;
};

EtaCheck check_eta_theorem(const Graph& g, const SpectrumOptions& options = {});

struct JoinCheck {
  std::size_t r = 0;
  bool top_equal_n = false;  // lambda_1..lambda_r == n
  double lambda_r_plus_1 = 0;
  double rest_lambda_1 = 0;  // lambda_1 of the graph without dominating vertices
  bool holds = false;
};

/// With r dominating vertices: lambda_i = n for i <= r and
/// lambda_{r+1} = lambda_1(rest) + r. Throws NotApplicableError when r = 0 or r = n.
JoinCheck check_join_relation(const Graph& g, const SpectrumOptions& options = {});

struct SpectrumReport {
  std::size_t n = 0;
  std::size_t mult_of_n = 0;
  Eigen::VectorXd eigenvalues;  // empty when above the floating bound
  std::size_t eta_lambda1 = 0;
  std::size_t dom_count = 0;
};

SpectrumReport spectrum_report(const Graph& g, const SpectrumOptions& options = {});

nlohmann::json to_json(const SpectrumReport& r);

}  // namespace epg
