// ff.hpp - exact arithmetic in F_q and in GF(q^2) = F_q[i] for odd primes q.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fqwave {

/// Thrown when an operation requires q to lie in the other residue class
/// mod 4 (most constructions need q = 3 mod 4, the obstruction check needs
/// q = 1 mod 4).
class modulus_class_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

inline std::int64_t mod_reduce(std::int64_t v, std::int64_t q) {
  std::int64_t r = v % q;
  return r < 0 ? r + q : r;
}

/// Distinct prime factors of n by trial division.
inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

/**
 * A validated odd prime modulus q.
 *
 * Construction rejects 2, composites (deterministic trial division) and
 * anything above 2^20; the bound keeps every product of two reduced residues
 * inside int64, so all arithmetic is exact machine arithmetic.
 */
class PrimeModulus {
 public:
  static constexpr std::int64_t kMaxModulus = std::int64_t{1} << 20;

  explicit PrimeModulus(std::int64_t q) : q_(q) {
    if (q < 3 || q % 2 == 0)
      throw std::invalid_argument("PrimeModulus: q must be an odd prime, got " +
                                  std::to_string(q));
    if (q > kMaxModulus)
      throw std::invalid_argument("PrimeModulus: q exceeds the 2^20 bound");
    for (std::int64_t p = 3; p * p <= q; p += 2)
      if (q % p == 0)
        throw std::invalid_argument("PrimeModulus: " + std::to_string(q) +
                                    " is composite (divisible by " +
                                    std::to_string(p) + ")");
  }

  std::int64_t q() const { return q_; }

  /// Residue class of q mod 4; always 1 or 3 for an odd prime.
  int mod4() const { return static_cast<int>(q_ % 4); }

  void require_mod4(int cls, const char* what) const {
    if (mod4() != cls)
      throw modulus_class_error(std::string(what) + ": requires q = " +
                                std::to_string(cls) + " (mod 4), got q = " +
                                std::to_string(q_));
  }

  friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.q_ == b.q_; }
  friend bool operator!=(PrimeModulus a, PrimeModulus b) { return a.q_ != b.q_; }

 private:
  std::int64_t q_;
};

/// A residue in [0, q). Every operation reduces mod q; mixing moduli throws.
class FieldElement {
 public:
  FieldElement(std::int64_t value, PrimeModulus m)
      : v_(detail::mod_reduce(value, m.q())), m_(m) {}

  std::int64_t value() const { return v_; }
  PrimeModulus modulus() const { return m_; }
  bool is_zero() const { return v_ == 0; }

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    require_same(a, b);
    return FieldElement(a.v_ + b.v_, a.m_);
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    require_same(a, b);
    return FieldElement(a.v_ - b.v_, a.m_);
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    require_same(a, b);
    return FieldElement(a.v_ * b.v_, a.m_);
  }
  FieldElement operator-() const { return FieldElement(-v_, m_); }

  /// a^e for e >= 0 by binary exponentiation.
  FieldElement pow(std::int64_t e) const {
    if (e < 0) throw std::invalid_argument("FieldElement::pow: negative exponent");
    std::int64_t base = v_, acc = 1, q = m_.q();
    while (e > 0) {
      if (e & 1) acc = acc * base % q;
      base = base * base % q;
      e >>= 1;
    }
    return FieldElement(acc, m_);
  }

  /// Multiplicative inverse; q prime so a^(q-2) works for a != 0.
  FieldElement inverse() const {
    if (v_ == 0) throw std::invalid_argument("FieldElement::inverse: zero has no inverse");
    return pow(m_.q() - 2);
  }

  friend FieldElement operator/(FieldElement a, FieldElement b) {
    return a * b.inverse();
  }

  friend bool operator==(FieldElement a, FieldElement b) {
    return a.m_ == b.m_ && a.v_ == b.v_;
  }
  friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

 private:
  static void require_same(FieldElement a, FieldElement b) {
    if (a.m_ != b.m_)
      throw std::invalid_argument("FieldElement: modulus mismatch (" +
                                  std::to_string(a.m_.q()) + " vs " +
                                  std::to_string(b.m_.q()) + ")");
  }

  std::int64_t v_;
  PrimeModulus m_;
};

/**
 * Legendre symbol by Euler's criterion a^((q-1)/2), mapped {1, q-1} -> {+1, -1}.
 * Returns 0 exactly when a = 0.
 */
inline int legendre_symbol(FieldElement a) {
  if (a.is_zero()) return 0;
  std::int64_t e = a.pow((a.modulus().q() - 1) / 2).value();
  return e == 1 ? +1 : -1;
}

/**
 * A square root of a mod q, or nullopt when a is a non-residue. Returns the
 * smaller of the two roots. Uses the exponent shortcut a^((q+1)/4) when
 * q = 3 (mod 4) and Tonelli-Shanks otherwise.
 */
inline std::optional<FieldElement> sqrt_mod(FieldElement a) {
  const PrimeModulus m = a.modulus();
  const std::int64_t q = m.q();
  if (a.is_zero()) return FieldElement(0, m);
  if (legendre_symbol(a) != 1) return std::nullopt;

  FieldElement r(0, m);
  if (m.mod4() == 3) {
    r = a.pow((q + 1) / 4);
  } else {
    // Tonelli-Shanks: q - 1 = odd * 2^e.
    std::int64_t odd = q - 1, e = 0;
    while (odd % 2 == 0) {
      odd /= 2;
      ++e;
    }
    FieldElement z(2, m);
    while (legendre_symbol(z) != -1) z = FieldElement(z.value() + 1, m);
    FieldElement c = z.pow(odd);
    FieldElement t = a.pow(odd);
    r = a.pow((odd + 1) / 2);
    while (t.value() != 1) {
      std::int64_t i = 0;
      FieldElement probe = t;
      while (probe.value() != 1) {
        probe = probe * probe;
        ++i;
      }
      FieldElement b = c;
      for (std::int64_t j = 0; j < e - i - 1; ++j) b = b * b;
      r = r * b;
      c = b * b;
      t = t * c;
      e = i;
    }
  }
  std::int64_t lo = std::min(r.value(), q - r.value());
  return FieldElement(lo, m);
}

/**
 * The smallest k with 0 < k <= (q-1)/2 such that 1 + k^2 is a quadratic
 * non-residue. Such k exists for every odd prime: the values 1 + k^2 are
 * pairwise distinct residue classes containing 1 + 0, so they cannot all be
 * squares. Requires q = 3 (mod 4), where the guarantee is used downstream.
 *
 * Note: for q = 7 the answer is 2, not 1 (1 + 1 = 2 = 3^2 mod 7 is a
 * residue); some worked examples in circulation list 1.
 */
inline FieldElement find_k(PrimeModulus m) {
  m.require_mod4(3, "find_k");
  const std::int64_t q = m.q();
  for (std::int64_t k = 1; k <= (q - 1) / 2; ++k) {
    FieldElement cand(1 + k * k, m);
    if (legendre_symbol(cand) == -1) return FieldElement(k, m);
  }
  throw std::logic_error("find_k: no k found; unreachable for prime q = 3 (mod 4)");
}

/**
 * An element a + bi of GF(q^2) = F_q[i], i^2 = -1. Defined only for
 * q = 3 (mod 4), where -1 is a non-residue and x^2 + 1 is irreducible.
 */
class GaussianInt {
 public:
  GaussianInt(FieldElement re, FieldElement im) : re_(re), im_(im) {
    if (re.modulus() != im.modulus())
      throw std::invalid_argument("GaussianInt: modulus mismatch");
    re.modulus().require_mod4(3, "GaussianInt");
  }
  GaussianInt(std::int64_t re, std::int64_t im, PrimeModulus m)
      : GaussianInt(FieldElement(re, m), FieldElement(im, m)) {}

  static GaussianInt one(PrimeModulus m) { return GaussianInt(1, 0, m); }
  static GaussianInt zero(PrimeModulus m) { return GaussianInt(0, 0, m); }

  FieldElement re() const { return re_; }
  FieldElement im() const { return im_; }
  PrimeModulus modulus() const { return re_.modulus(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  GaussianInt conj() const { return GaussianInt(re_, -im_); }

  /// re^2 + im^2, the norm form whose level sets are the circles S_r.
  FieldElement norm() const { return re_ * re_ + im_ * im_; }

  friend GaussianInt operator+(const GaussianInt& u, const GaussianInt& v) {
    return GaussianInt(u.re_ + v.re_, u.im_ + v.im_);
  }
  friend bool operator==(const GaussianInt& u, const GaussianInt& v) {
    return u.re_ == v.re_ && u.im_ == v.im_;
  }
  friend bool operator!=(const GaussianInt& u, const GaussianInt& v) {
    return !(u == v);
  }

  GaussianInt pow(std::int64_t e) const;

 private:
  FieldElement re_, im_;
};

/// (a + bi)(c + di) = (ac - bd) + (ad + bc)i, all mod q.
inline GaussianInt gf2_mul(const GaussianInt& u, const GaussianInt& v) {
  if (u.modulus() != v.modulus())
    throw std::invalid_argument("gf2_mul: modulus mismatch");
  FieldElement a = u.re(), b = u.im(), c = v.re(), d = v.im();
  return GaussianInt(a * c - b * d, a * d + b * c);
}

inline GaussianInt operator*(const GaussianInt& u, const GaussianInt& v) {
  return gf2_mul(u, v);
}

inline GaussianInt GaussianInt::pow(std::int64_t e) const {
  if (e < 0) throw std::invalid_argument("GaussianInt::pow: negative exponent");
  GaussianInt acc = one(modulus());
  GaussianInt base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

namespace detail {

/// Order of u inside a group of known order n (requires u^n = 1).
inline std::int64_t order_in_group(const GaussianInt& u, std::int64_t n,
                                   const std::vector<std::int64_t>& factors) {
  std::int64_t ord = n;
  const GaussianInt one = GaussianInt::one(u.modulus());
  for (std::int64_t p : factors) {
    while (ord % p == 0 && u.pow(ord / p) == one) ord /= p;
  }
  return ord;
}

}  // namespace detail

/**
 * Multiplicative order of a nonzero u in GF(q^2)^x, the least n >= 1 with
 * u^n = 1. GF(q^2)^x is cyclic of order q^2 - 1, so the order divides it.
 */
inline std::int64_t element_order(const GaussianInt& u) {
  if (u.is_zero()) throw std::invalid_argument("element_order: zero input");
  const std::int64_t n = u.modulus().q() * u.modulus().q() - 1;
  return detail::order_in_group(u, n, detail::prime_factors(n));
}

}  // namespace fqwave
