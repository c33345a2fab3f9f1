// fourier.hpp - characters, the discrete Fourier transform on F_q^d,
// dilation/translation operators, and Paley-Wiener projections.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "fqwave/geometry.hpp"

namespace fqwave {

using Complex = std::complex<double>;

/**
 * Normalization of the transform pair.
 *
 *   unitary: factor q^(-d/2) in both directions; forward and inverse are
 *            mutually inverse and norm-preserving (Plancherel holds).
 *   paper:   factor q^(-d) forward and 1 inverse; mutually inverse but not
 *            an isometry for the unweighted counting inner product.
 *
 * All frame certificates use the unitary convention, so "Parseval" means
 * bound exactly 1.
 */
enum class TransformConvention { unitary, paper };

inline const char* convention_name(TransformConvention c) {
  return c == TransformConvention::unitary ? "unitary" : "paper";
}

namespace detail {

/// Table of the q-th roots of unity, e^(2 pi i k / q) for k = 0..q-1.
/// Every character evaluation indexes this table, so a given root is
/// computed by the transcendental functions exactly once per q.
inline const std::vector<Complex>& unity_roots(std::int64_t q) {
  thread_local std::int64_t cached_q = 0;
  thread_local std::vector<Complex> table;
  if (cached_q != q) {
    table.resize(static_cast<std::size_t>(q));
    const double step = 2.0 * 3.14159265358979323846264338327950288 / static_cast<double>(q);
    for (std::int64_t k = 0; k < q; ++k)
      table[static_cast<std::size_t>(k)] =
          Complex(std::cos(step * static_cast<double>(k)), std::sin(step * static_cast<double>(k)));
    cached_q = q;
  }
  return table;
}

}  // namespace detail

/// chi_m(x) = e^(2 pi i (m . x) / q); always of modulus 1.
inline Complex character(const Point& m, const Point& x) {
  return detail::unity_roots(m.modulus().q())[static_cast<std::size_t>(m.dot(x).value())];
}

/**
 * A complex-valued function on F_q^d, stored densely over the canonical
 * point linearization. Values are immutable-by-convention inputs/outputs of
 * the transform and operator functions.
 */
class GridFunction {
 public:
  GridFunction(PrimeModulus m, int d)
      : m_(m), d_(d), v_(static_cast<std::size_t>(detail::checked_volume(
                            m.q(), d, std::int64_t{1} << 20)),
                        Complex(0.0, 0.0)) {}

  static GridFunction indicator(const PointSet& s) {
    GridFunction f(s.modulus(), s.dimension());
    for (std::int64_t i = 0; i < s.volume(); ++i)
      if (s.contains_index(i)) f.v_[static_cast<std::size_t>(i)] = Complex(1.0, 0.0);
    return f;
  }

  static GridFunction delta(PrimeModulus m, int d, const Point& at) {
    GridFunction f(m, d);
    f[at.index()] = Complex(1.0, 0.0);
    return f;
  }

  PrimeModulus modulus() const { return m_; }
  int dimension() const { return d_; }
  std::int64_t size() const { return static_cast<std::int64_t>(v_.size()); }

  Complex& operator[](std::int64_t i) { return v_[static_cast<std::size_t>(i)]; }
  const Complex& operator[](std::int64_t i) const { return v_[static_cast<std::size_t>(i)]; }
  Complex at(const Point& p) const { return v_[static_cast<std::size_t>(p.index())]; }

  /// <f, g> = sum_x f(x) conj(g(x)).
  Complex inner(const GridFunction& g) const {
    require_same_shape(*this, g);
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < v_.size(); ++i) acc += v_[i] * std::conj(g.v_[i]);
    return acc;
  }

  double norm2() const {
    double acc = 0.0;
    for (const Complex& z : v_) acc += std::norm(z);
    return acc;
  }
  double norm() const { return std::sqrt(norm2()); }

  friend GridFunction operator+(const GridFunction& a, const GridFunction& b) {
    require_same_shape(a, b);
    GridFunction out = a;
    for (std::size_t i = 0; i < out.v_.size(); ++i) out.v_[i] += b.v_[i];
    return out;
  }
  friend GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    require_same_shape(a, b);
    GridFunction out = a;
    for (std::size_t i = 0; i < out.v_.size(); ++i) out.v_[i] -= b.v_[i];
    return out;
  }
  friend GridFunction operator*(Complex s, const GridFunction& f) {
    GridFunction out = f;
    for (auto& z : out.v_) z *= s;
    return out;
  }

  static void require_same_shape(const GridFunction& a, const GridFunction& b) {
    if (a.m_ != b.m_ || a.d_ != b.d_)
      throw std::invalid_argument("GridFunction: modulus or dimension mismatch");
  }

 private:
  PrimeModulus m_;
  int d_;
  std::vector<Complex> v_;
};

namespace detail {

/// One length-q transform along every axis in turn. sign = -1 for the
/// forward direction (conjugated characters), +1 for the inverse;
/// axis_scale is applied once per axis.
inline GridFunction axis_transform(const GridFunction& f, int sign, double axis_scale) {
  const std::int64_t q = f.modulus().q();
  const std::int64_t n = f.size();
  const auto& roots = unity_roots(q);
  GridFunction cur = f;
  std::vector<Complex> line(static_cast<std::size_t>(q));
  std::int64_t stride = n / q;  // stride of axis 0; shrinks by q each axis
  for (int axis = 0; axis < f.dimension(); ++axis) {
    GridFunction next = cur;
    for (std::int64_t outer = 0; outer < n; outer += stride * q) {
      for (std::int64_t inner = 0; inner < stride; ++inner) {
        const std::int64_t base = outer + inner;
        for (std::int64_t j = 0; j < q; ++j)
          line[static_cast<std::size_t>(j)] = cur[base + j * stride];
        for (std::int64_t k = 0; k < q; ++k) {
          Complex acc(0.0, 0.0);
          for (std::int64_t j = 0; j < q; ++j) {
            std::int64_t e = j * k % q;
            if (sign < 0 && e != 0) e = q - e;
            acc += line[static_cast<std::size_t>(j)] * roots[static_cast<std::size_t>(e)];
          }
          next[base + k * stride] = axis_scale * acc;
        }
      }
    }
    cur = next;
    stride /= q;
  }
  return cur;
}

inline double forward_scale(TransformConvention c, std::int64_t q) {
  return c == TransformConvention::unitary ? 1.0 / std::sqrt(static_cast<double>(q))
                                           : 1.0 / static_cast<double>(q);
}
inline double inverse_scale(TransformConvention c, std::int64_t q) {
  return c == TransformConvention::unitary ? 1.0 / std::sqrt(static_cast<double>(q)) : 1.0;
}

}  // namespace detail

/// Forward transform f^(xi) = c^d sum_m f(m) conj(chi_m(xi)), factored into
/// d nested length-q transforms.
inline GridFunction dft(const GridFunction& f,
                        TransformConvention conv = TransformConvention::unitary) {
  return detail::axis_transform(f, -1, detail::forward_scale(conv, f.modulus().q()));
}

/// Inverse transform under the same convention; idft(dft(f)) = f.
inline GridFunction idft(const GridFunction& g,
                         TransformConvention conv = TransformConvention::unitary) {
  return detail::axis_transform(g, +1, detail::inverse_scale(conv, g.modulus().q()));
}

/// Reference O(q^(2d)) transform; agrees with the factored path to 1e-12.
inline GridFunction dft_naive(const GridFunction& f,
                              TransformConvention conv = TransformConvention::unitary) {
  const std::int64_t q = f.modulus().q();
  const std::int64_t n = f.size();
  const auto& roots = detail::unity_roots(q);
  const int d = f.dimension();
  double scale = 1.0;
  for (int i = 0; i < d; ++i) scale *= detail::forward_scale(conv, q);
  GridFunction out(f.modulus(), d);
  std::vector<std::int64_t> xc(static_cast<std::size_t>(d)), kc(static_cast<std::size_t>(d));
  for (std::int64_t k = 0; k < n; ++k) {
    std::int64_t t = k;
    for (int i = d - 1; i >= 0; --i) {
      kc[static_cast<std::size_t>(i)] = t % q;
      t /= q;
    }
    Complex acc(0.0, 0.0);
    for (std::int64_t x = 0; x < n; ++x) {
      std::int64_t s = x, dot = 0;
      for (int i = d - 1; i >= 0; --i) {
        xc[static_cast<std::size_t>(i)] = s % q;
        s /= q;
      }
      for (int i = 0; i < d; ++i)
        dot = (dot + xc[static_cast<std::size_t>(i)] * kc[static_cast<std::size_t>(i)]) % q;
      acc += f[x] * roots[static_cast<std::size_t>(dot == 0 ? 0 : q - dot)];
    }
    out[k] = scale * acc;
  }
  return out;
}

inline GridFunction idft_naive(const GridFunction& g,
                               TransformConvention conv = TransformConvention::unitary) {
  const std::int64_t q = g.modulus().q();
  const std::int64_t n = g.size();
  const auto& roots = detail::unity_roots(q);
  const int d = g.dimension();
  double scale = 1.0;
  for (int i = 0; i < d; ++i) scale *= detail::inverse_scale(conv, q);
  GridFunction out(g.modulus(), d);
  std::vector<std::int64_t> xc(static_cast<std::size_t>(d)), mc(static_cast<std::size_t>(d));
  for (std::int64_t x = 0; x < n; ++x) {
    std::int64_t t = x;
    for (int i = d - 1; i >= 0; --i) {
      xc[static_cast<std::size_t>(i)] = t % q;
      t /= q;
    }
    Complex acc(0.0, 0.0);
    for (std::int64_t m = 0; m < n; ++m) {
      std::int64_t s = m, dot = 0;
      for (int i = d - 1; i >= 0; --i) {
        mc[static_cast<std::size_t>(i)] = s % q;
        s /= q;
      }
      for (int i = 0; i < d; ++i)
        dot = (dot + mc[static_cast<std::size_t>(i)] * xc[static_cast<std::size_t>(i)]) % q;
      acc += g[m] * roots[static_cast<std::size_t>(dot)];
    }
    out[x] = scale * acc;
  }
  return out;
}

/// (tau_t f)(x) = f(x - t); unitary.
inline GridFunction translate(const GridFunction& f, const Point& t) {
  if (t.modulus() != f.modulus() || t.dimension() != f.dimension())
    throw std::invalid_argument("translate: dimension mismatch");
  GridFunction out(f.modulus(), f.dimension());
  const std::int64_t n = f.size();
  for (std::int64_t i = 0; i < n; ++i) {
    Point x = Point::from_index(f.modulus(), f.dimension(), i);
    out[i] = f[(x - t).index()];
  }
  return out;
}

/// (delta_a f)(x) = f(a x); unitary since a is a bijection of F_q^d.
inline GridFunction dilate(const GridFunction& f, const Automorphism& a) {
  if (a.modulus() != f.modulus() || a.dimension() != f.dimension())
    throw std::invalid_argument("dilate: dimension mismatch");
  GridFunction out(f.modulus(), f.dimension());
  const std::int64_t n = f.size();
  for (std::int64_t i = 0; i < n; ++i) {
    Point x = Point::from_index(f.modulus(), f.dimension(), i);
    out[i] = f[a.apply(x).index()];
  }
  return out;
}

/**
 * Orthogonal projection onto the Paley-Wiener space PW_F of functions whose
 * transform vanishes outside F: idft(dft(f) * 1_F). Idempotent and
 * self-adjoint; for F = F_q^d \ {0} the image consists of the functions with
 * zero mean.
 */
inline GridFunction paley_wiener_project(const GridFunction& f, const PointSet& F,
                                         TransformConvention conv = TransformConvention::unitary) {
  if (F.modulus() != f.modulus() || F.dimension() != f.dimension())
    throw std::invalid_argument("paley_wiener_project: dimension mismatch");
  GridFunction g = dft(f, conv);
  for (std::int64_t i = 0; i < g.size(); ++i)
    if (!F.contains_index(i)) g[i] = Complex(0.0, 0.0);
  return idft(g, conv);
}

}  // namespace fqwave
