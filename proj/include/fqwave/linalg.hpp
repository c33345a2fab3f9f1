// linalg.hpp - small dense Hermitian matrices and a cyclic Jacobi eigensolver.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fqwave {

/// Dense complex square matrix, row-major.
struct CMatrix {
  int n = 0;
  std::vector<std::complex<double>> a;

  explicit CMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size) {
    if (size < 1) throw std::invalid_argument("CMatrix: size must be >= 1");
  }

  std::complex<double>& operator()(int i, int j) {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  }
  const std::complex<double>& operator()(int i, int j) const {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  }

  static CMatrix identity(int size) {
    CMatrix m(size);
    for (int i = 0; i < size; ++i) m(i, i) = 1.0;
    return m;
  }

  double trace_real() const {
    double t = 0.0;
    for (int i = 0; i < n; ++i) t += (*this)(i, i).real();
    return t;
  }

  double frobenius() const {
    double s = 0.0;
    for (const auto& z : a) s += std::norm(z);
    return std::sqrt(s);
  }

  /// max_ij |A_ij - c * I_ij|; the distance from the nearest-in-trace scalar
  /// matrix when c = trace/n.
  double max_deviation_from_scalar(double c) const {
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double dev = std::abs((*this)(i, j) - (i == j ? std::complex<double>(c, 0.0)
                                                      : std::complex<double>(0.0, 0.0)));
        worst = std::max(worst, dev);
      }
    return worst;
  }
};

/**
 * Eigenvalues of a Hermitian matrix by cyclic Jacobi with complex Givens
 * rotations, returned in ascending order. Off-diagonal mass is annihilated
 * pairwise until the remaining off-diagonal Frobenius norm drops below
 * rel_tol times the matrix norm.
 */
inline std::vector<double> hermitian_eigenvalues(CMatrix m, double rel_tol = 1e-13,
                                                 int max_sweeps = 60) {
  const int n = m.n;
  if (n == 1) return {m(0, 0).real()};
  const double scale = std::max(m.frobenius(), 1e-300);

  auto off_norm = [&]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += 2.0 * std::norm(m(p, q));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < max_sweeps && off_norm() > rel_tol * scale; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const std::complex<double> beta = m(p, q);
        const double b = std::abs(beta);
        if (b <= 1e-300) continue;
        const std::complex<double> w = beta / b;  // phase of the pivot
        const double alpha = m(p, p).real();
        const double gamma = m(q, q).real();
        // Annihilate the (real, phase-stripped) pivot of [[alpha, b], [b, gamma]].
        const double theta = (gamma - alpha) / (2.0 * b);
        double t;
        if (theta == 0.0) {
          t = 1.0;
        } else {
          t = -((theta >= 0.0) ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(1.0, theta));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const std::complex<double> wc = w * c;
        const std::complex<double> ws = w * s;

        // A <- U* A U with U(p,p) = w c, U(p,q) = -w s, U(q,p) = s, U(q,q) = c.
        for (int k = 0; k < n; ++k) {
          const std::complex<double> akp = m(k, p), akq = m(k, q);
          m(k, p) = wc * akp + s * akq;
          m(k, q) = -ws * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const std::complex<double> apk = m(p, k), aqk = m(q, k);
          m(p, k) = std::conj(wc) * apk + s * aqk;
          m(q, k) = -std::conj(ws) * apk + c * aqk;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        m(p, p) = std::complex<double>(m(p, p).real(), 0.0);
        m(q, q) = std::complex<double>(m(q, q).real(), 0.0);
      }
    }
  }

  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = m(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace fqwave
