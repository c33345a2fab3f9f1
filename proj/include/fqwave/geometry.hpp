// geometry.hpp - automorphisms of F_q^d, circles S_r, and the rotation group.
#pragma once

#include <cstdint>
#include <vector>

#include "fqwave/pointset.hpp"

namespace fqwave {

/**
 * An invertible d x d matrix over F_q. Invertibility is checked at
 * construction; transpose, inverse and the inverse-transpose a* = (a^t)^-1
 * are exact.
 */
class Automorphism {
 public:
  Automorphism(PrimeModulus m, int d, std::vector<std::int64_t> row_major)
      : m_(m), d_(d), a_(std::move(row_major)) {
    if (d < 1 || a_.size() != static_cast<std::size_t>(d) * static_cast<std::size_t>(d))
      throw std::invalid_argument("Automorphism: bad dimensions");
    for (auto& v : a_) v = detail::mod_reduce(v, m_.q());
    if (det().is_zero())
      throw std::invalid_argument("Automorphism: singular matrix");
  }

  static Automorphism identity(PrimeModulus m, int d) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i * d + i)] = 1;
    return Automorphism(m, d, std::move(e));
  }

  PrimeModulus modulus() const { return m_; }
  int dimension() const { return d_; }
  std::int64_t entry(int i, int j) const {
    return a_[static_cast<std::size_t>(i * d_ + j)];
  }

  FieldElement det() const {
    // Gaussian elimination over F_q.
    std::vector<std::int64_t> w = a_;
    const std::int64_t q = m_.q();
    std::int64_t det = 1;
    for (int col = 0; col < d_; ++col) {
      int pivot = -1;
      for (int r = col; r < d_; ++r)
        if (w[static_cast<std::size_t>(r * d_ + col)] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return FieldElement(0, m_);
      if (pivot != col) {
        for (int j = 0; j < d_; ++j)
          std::swap(w[static_cast<std::size_t>(pivot * d_ + j)],
                    w[static_cast<std::size_t>(col * d_ + j)]);
        det = q - det;
      }
      std::int64_t p = w[static_cast<std::size_t>(col * d_ + col)];
      det = det * p % q;
      std::int64_t pinv = FieldElement(p, m_).inverse().value();
      for (int r = col + 1; r < d_; ++r) {
        std::int64_t f = w[static_cast<std::size_t>(r * d_ + col)] * pinv % q;
        if (f == 0) continue;
        for (int j = col; j < d_; ++j) {
          auto& cell = w[static_cast<std::size_t>(r * d_ + j)];
          cell = detail::mod_reduce(cell - f * w[static_cast<std::size_t>(col * d_ + j)], q);
        }
      }
    }
    return FieldElement(det, m_);
  }

  Automorphism transpose() const {
    std::vector<std::int64_t> t(a_.size());
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j)
        t[static_cast<std::size_t>(j * d_ + i)] = entry(i, j);
    return Automorphism(m_, d_, std::move(t));
  }

  Automorphism inverse() const {
    // Gauss-Jordan on [A | I] over F_q.
    const std::int64_t q = m_.q();
    std::vector<std::int64_t> w = a_;
    std::vector<std::int64_t> inv(a_.size(), 0);
    for (int i = 0; i < d_; ++i) inv[static_cast<std::size_t>(i * d_ + i)] = 1;
    for (int col = 0; col < d_; ++col) {
      int pivot = -1;
      for (int r = col; r < d_; ++r)
        if (w[static_cast<std::size_t>(r * d_ + col)] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) throw std::logic_error("Automorphism::inverse: singular");
      for (int j = 0; j < d_; ++j) {
        std::swap(w[static_cast<std::size_t>(pivot * d_ + j)],
                  w[static_cast<std::size_t>(col * d_ + j)]);
        std::swap(inv[static_cast<std::size_t>(pivot * d_ + j)],
                  inv[static_cast<std::size_t>(col * d_ + j)]);
      }
      std::int64_t pinv =
          FieldElement(w[static_cast<std::size_t>(col * d_ + col)], m_).inverse().value();
      for (int j = 0; j < d_; ++j) {
        w[static_cast<std::size_t>(col * d_ + j)] =
            w[static_cast<std::size_t>(col * d_ + j)] * pinv % q;
        inv[static_cast<std::size_t>(col * d_ + j)] =
            inv[static_cast<std::size_t>(col * d_ + j)] * pinv % q;
      }
      for (int r = 0; r < d_; ++r) {
        if (r == col) continue;
        std::int64_t f = w[static_cast<std::size_t>(r * d_ + col)];
        if (f == 0) continue;
        for (int j = 0; j < d_; ++j) {
          auto& wc = w[static_cast<std::size_t>(r * d_ + j)];
          wc = detail::mod_reduce(wc - f * w[static_cast<std::size_t>(col * d_ + j)], q);
          auto& ic = inv[static_cast<std::size_t>(r * d_ + j)];
          ic = detail::mod_reduce(ic - f * inv[static_cast<std::size_t>(col * d_ + j)], q);
        }
      }
    }
    return Automorphism(m_, d_, std::move(inv));
  }

  /// a* = (a^t)^-1 = (a^-1)^t.
  Automorphism inverse_transpose() const { return transpose().inverse(); }

  Point apply(const Point& p) const {
    if (p.modulus() != m_ || p.dimension() != d_)
      throw std::invalid_argument("Automorphism::apply: dimension mismatch");
    std::vector<std::int64_t> out(static_cast<std::size_t>(d_), 0);
    for (int i = 0; i < d_; ++i) {
      std::int64_t acc = 0;
      for (int j = 0; j < d_; ++j) acc = (acc + entry(i, j) * p[j]) % m_.q();
      out[static_cast<std::size_t>(i)] = acc;
    }
    return Point(m_, std::move(out));
  }

  friend Automorphism operator*(const Automorphism& a, const Automorphism& b) {
    if (a.m_ != b.m_ || a.d_ != b.d_)
      throw std::invalid_argument("Automorphism: dimension mismatch in product");
    const std::int64_t q = a.m_.q();
    std::vector<std::int64_t> c(a.a_.size(), 0);
    for (int i = 0; i < a.d_; ++i)
      for (int k = 0; k < a.d_; ++k) {
        std::int64_t f = a.entry(i, k);
        if (f == 0) continue;
        for (int j = 0; j < a.d_; ++j) {
          auto& cell = c[static_cast<std::size_t>(i * a.d_ + j)];
          cell = (cell + f * b.entry(k, j)) % q;
        }
      }
    return Automorphism(a.m_, a.d_, std::move(c));
  }

  Automorphism pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Automorphism acc = identity(m_, d_);
    Automorphism base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.m_ == b.m_ && a.d_ == b.d_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Automorphism& a, const Automorphism& b) {
    return !(a == b);
  }

 private:
  PrimeModulus m_;
  int d_;
  std::vector<std::int64_t> a_;  // row-major
};

/// The circle S_r = {(x, y) in F_q^2 : x^2 + y^2 = r} together with its radius.
struct Circle {
  FieldElement radius;
  PointSet points;
  std::int64_t cardinality() const { return points.cardinality(); }
};

/**
 * Enumerates S_r by scanning x and solving y^2 = r - x^2 with the modular
 * square root. For q = 3 (mod 4) the counts are #S_0 = 1 and #S_r = q + 1
 * otherwise; for q = 1 (mod 4), #S_0 = 2q - 1.
 */
inline Circle circle(PrimeModulus m, FieldElement r) {
  if (r.modulus() != m) throw std::invalid_argument("circle: modulus mismatch");
  PointSet s(m, 2);
  for (std::int64_t x = 0; x < m.q(); ++x) {
    FieldElement rhs = r - FieldElement(x * x, m);
    if (auto y = sqrt_mod(rhs)) {
      s.insert(Point(m, {x, y->value()}));
      s.insert(Point(m, {x, m.q() - y->value()}));
    }
  }
  return Circle{r, std::move(s)};
}

/**
 * A generator of the unit circle S_1, viewed inside GF(q^2)^x where it is a
 * cyclic subgroup of order q + 1. Scans S_1 in lexicographic order and
 * returns the first element of full order.
 */
inline GaussianInt find_rotation_generator(PrimeModulus m) {
  m.require_mod4(3, "find_rotation_generator");
  const std::int64_t n = m.q() + 1;
  const auto factors = detail::prime_factors(n);
  for (const Point& p : circle(m, FieldElement(1, m)).points.points()) {
    GaussianInt u(p[0], p[1], m);
    // u in S_1 means u^(q+1) = u * conj(u) = 1, so the order divides q + 1.
    if (detail::order_in_group(u, n, factors) == n) return u;
  }
  throw std::logic_error("find_rotation_generator: S_1 has no generator; unreachable");
}

/**
 * The matrix [[a, -b], [b, a]] of multiplication by g = a + bi. Requires g
 * on the unit circle (a^2 + b^2 = 1), so the matrix preserves every S_r.
 */
inline Automorphism rotation_matrix(const GaussianInt& g) {
  if (g.norm().value() != 1)
    throw std::invalid_argument("rotation_matrix: a^2 + b^2 != 1 (not on the unit circle)");
  const std::int64_t a = g.re().value(), b = g.im().value();
  return Automorphism(g.modulus(), 2, {a, -b, b, a});
}

/// The q + 1 distinct powers R^0, ..., R^q of the generating rotation.
inline std::vector<Automorphism> rotation_group(PrimeModulus m) {
  Automorphism r = rotation_matrix(find_rotation_generator(m));
  std::vector<Automorphism> out;
  out.reserve(static_cast<std::size_t>(m.q() + 1));
  Automorphism acc = Automorphism::identity(m, 2);
  for (std::int64_t j = 0; j <= m.q(); ++j) {
    out.push_back(acc);
    acc = acc * r;
  }
  return out;
}

/**
 * Every matrix [[a, -b], [b, a]] with (a, b) on S_1. These are exactly the
 * norm-preserving rotations; valid in both residue classes of q. For
 * q = 3 (mod 4) the result coincides with rotation_group as a set.
 */
inline std::vector<Automorphism> norm_preserving_rotations(PrimeModulus m) {
  std::vector<Automorphism> out;
  for (const Point& p : circle(m, FieldElement(1, m)).points.points())
    out.push_back(Automorphism(m, 2, {p[0], -p[1], p[1], p[0]}));
  return out;
}

/**
 * All q^2 - 1 matrices [[a, -b], [b, a]] with (a, b) != (0, 0): left
 * multiplication by the nonzero elements of GF(q^2). For q = 3 (mod 4) every
 * such matrix is invertible (det = a^2 + b^2 vanishes only at the origin),
 * and the group acts simply transitively on F_q^2 \ {0}.
 */
inline std::vector<Automorphism> similarity_group(PrimeModulus m) {
  m.require_mod4(3, "similarity_group");
  std::vector<Automorphism> out;
  out.reserve(static_cast<std::size_t>(m.q() * m.q() - 1));
  for (std::int64_t a = 0; a < m.q(); ++a)
    for (std::int64_t b = 0; b < m.q(); ++b) {
      if (a == 0 && b == 0) continue;
      out.push_back(Automorphism(m, 2, {a, -b, b, a}));
    }
  return out;
}

/**
 * Embeds a 2x2 automorphism into dimension d > 2 as the top-left block, with
 * the (d-2) x (d-2) identity on the remaining diagonal.
 */
inline Automorphism block_lift(const Automorphism& a, int d) {
  if (a.dimension() != 2)
    throw std::invalid_argument("block_lift: base automorphism must be 2x2");
  if (d <= 2) throw std::invalid_argument("block_lift: requires d > 2");
  std::vector<std::int64_t> e(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) e[static_cast<std::size_t>(i * d + j)] = a.entry(i, j);
  for (int i = 2; i < d; ++i) e[static_cast<std::size_t>(i * d + i)] = 1;
  return Automorphism(a.modulus(), d, std::move(e));
}

/// {alpha(p) : alpha in a_set}, duplicates collapsed.
inline PointSet orbit(const std::vector<Automorphism>& a_set, const Point& p) {
  PointSet out(p.modulus(), p.dimension());
  for (const Automorphism& a : a_set) out.insert(a.apply(p));
  return out;
}

}  // namespace fqwave
