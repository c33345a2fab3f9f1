// pointset.hpp - vectors in F_q^d and finite subsets kept as bitsets.
#pragma once

#include <cstdint>
#include <vector>

#include "fqwave/ff.hpp"

namespace fqwave {

namespace detail {

/// q^d with an explicit cap so bitsets and grids stay desk-sized.
inline std::int64_t checked_volume(std::int64_t q, int d,
                                   std::int64_t cap = std::int64_t{1} << 26) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  std::int64_t v = 1;
  for (int i = 0; i < d; ++i) {
    if (v > cap / q)
      throw std::length_error("q^d exceeds the supported size bound");
    v *= q;
  }
  return v;
}

}  // namespace detail

/**
 * A vector in F_q^d. Coordinates are stored reduced; the canonical linear
 * index is the mixed-radix value sum_i coords[i] * q^(d-1-i), so index order
 * equals lexicographic order on coordinate tuples.
 */
class Point {
 public:
  Point(PrimeModulus m, std::vector<std::int64_t> coords) : m_(m), c_(std::move(coords)) {
    if (c_.empty()) throw std::invalid_argument("Point: dimension must be >= 1");
    for (auto& v : c_) v = detail::mod_reduce(v, m_.q());
  }

  static Point origin(PrimeModulus m, int d) {
    return Point(m, std::vector<std::int64_t>(static_cast<std::size_t>(d), 0));
  }

  static Point from_index(PrimeModulus m, int d, std::int64_t index) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(d));
    for (int i = d - 1; i >= 0; --i) {
      c[static_cast<std::size_t>(i)] = index % m.q();
      index /= m.q();
    }
    return Point(m, std::move(c));
  }

  PrimeModulus modulus() const { return m_; }
  int dimension() const { return static_cast<int>(c_.size()); }
  std::int64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  FieldElement coord(int i) const { return FieldElement((*this)[i], m_); }
  const std::vector<std::int64_t>& coords() const { return c_; }

  bool is_origin() const {
    for (auto v : c_)
      if (v != 0) return false;
    return true;
  }

  std::int64_t index() const {
    std::int64_t idx = 0;
    for (auto v : c_) idx = idx * m_.q() + v;
    return idx;
  }

  friend Point operator+(const Point& a, const Point& b) {
    require_compatible(a, b);
    std::vector<std::int64_t> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return Point(a.m_, std::move(c));
  }
  friend Point operator-(const Point& a, const Point& b) {
    require_compatible(a, b);
    std::vector<std::int64_t> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
    return Point(a.m_, std::move(c));
  }
  Point operator-() const {
    std::vector<std::int64_t> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
    return Point(m_, std::move(c));
  }

  /// Scalar multiple s * p.
  friend Point operator*(FieldElement s, const Point& p) {
    if (s.modulus() != p.m_) throw std::invalid_argument("Point: modulus mismatch");
    std::vector<std::int64_t> c(p.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s.value() * p.c_[i];
    return Point(p.m_, std::move(c));
  }

  /// Inner product m . x reduced mod q.
  FieldElement dot(const Point& other) const {
    require_compatible(*this, other);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < c_.size(); ++i)
      acc = (acc + c_[i] * other.c_[i]) % m_.q();
    return FieldElement(acc, m_);
  }

  friend bool operator==(const Point& a, const Point& b) {
    return a.m_ == b.m_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) {
    require_compatible(a, b);
    return a.index() < b.index();
  }

  static void require_compatible(const Point& a, const Point& b) {
    if (a.m_ != b.m_ || a.c_.size() != b.c_.size())
      throw std::invalid_argument("Point: modulus or dimension mismatch");
  }

 private:
  PrimeModulus m_;
  std::vector<std::int64_t> c_;
};

/**
 * A subset of F_q^d held as a membership bitset over the q^d linear indices,
 * with cached cardinality. Iteration order is index order, i.e. lexicographic.
 */
class PointSet {
 public:
  PointSet(PrimeModulus m, int d)
      : m_(m), d_(d), volume_(detail::checked_volume(m.q(), d)),
        bits_(static_cast<std::size_t>((volume_ + 63) / 64), 0) {}

  static PointSet full(PrimeModulus m, int d) {
    PointSet s(m, d);
    for (std::int64_t i = 0; i < s.volume_; ++i) s.insert_index(i);
    return s;
  }

  PrimeModulus modulus() const { return m_; }
  int dimension() const { return d_; }
  std::int64_t volume() const { return volume_; }
  std::int64_t cardinality() const { return card_; }
  bool empty() const { return card_ == 0; }

  bool contains_index(std::int64_t i) const {
    return (bits_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
  }
  bool contains(const Point& p) const {
    require_member_shape(p);
    return contains_index(p.index());
  }
  bool contains_origin() const { return contains_index(0); }

  void insert_index(std::int64_t i) {
    if (i < 0 || i >= volume_) throw std::out_of_range("PointSet: index out of range");
    std::uint64_t& w = bits_[static_cast<std::size_t>(i >> 6)];
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (!(w & bit)) {
      w |= bit;
      ++card_;
    }
  }
  void insert(const Point& p) {
    require_member_shape(p);
    insert_index(p.index());
  }

  void erase_index(std::int64_t i) {
    if (i < 0 || i >= volume_) throw std::out_of_range("PointSet: index out of range");
    std::uint64_t& w = bits_[static_cast<std::size_t>(i >> 6)];
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (w & bit) {
      w &= ~bit;
      --card_;
    }
  }

  /// E^* = E \ {0}.
  PointSet star() const {
    PointSet s = *this;
    s.erase_index(0);
    return s;
  }

  std::vector<std::int64_t> indices() const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(card_));
    for (std::int64_t i = 0; i < volume_; ++i)
      if (contains_index(i)) out.push_back(i);
    return out;
  }

  std::vector<Point> points() const {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(card_));
    for (std::int64_t i = 0; i < volume_; ++i)
      if (contains_index(i)) out.push_back(Point::from_index(m_, d_, i));
    return out;
  }

  /// The product set E x F_q^extra inside F_q^(d+extra).
  PointSet product_with_full(int extra) const {
    if (extra < 0) throw std::invalid_argument("product_with_full: negative factor count");
    if (extra == 0) return *this;
    PointSet out(m_, d_ + extra);
    std::int64_t tail = detail::checked_volume(m_.q(), extra);
    for (std::int64_t i = 0; i < volume_; ++i)
      if (contains_index(i))
        for (std::int64_t w = 0; w < tail; ++w) out.insert_index(i * tail + w);
    return out;
  }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.m_ == b.m_ && a.d_ == b.d_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const PointSet& a, const PointSet& b) { return !(a == b); }

 private:
  void require_member_shape(const Point& p) const {
    if (p.modulus() != m_ || p.dimension() != d_)
      throw std::invalid_argument("PointSet: modulus or dimension mismatch");
  }

  PrimeModulus m_;
  int d_;
  std::int64_t volume_;
  std::vector<std::uint64_t> bits_;
  std::int64_t card_ = 0;
};

/// The set of nonzero quadratic residues {x^2 : 1 <= x <= (q-1)/2}; exactly
/// (q-1)/2 elements, as a subset of F_q.
inline PointSet quadratic_residues(PrimeModulus m) {
  PointSet s(m, 1);
  for (std::int64_t x = 1; x <= (m.q() - 1) / 2; ++x)
    s.insert_index(x * x % m.q());
  return s;
}

/**
 * The non-residues written as {(1+k^2) x^2 : (q+1)/2 <= x <= q-1}. Requires
 * 1 + k^2 to be a non-residue; the result is then the full set of (q-1)/2
 * quadratic non-residues.
 */
inline PointSet qnr_representation(PrimeModulus m, FieldElement k) {
  if (k.modulus() != m) throw std::invalid_argument("qnr_representation: modulus mismatch");
  FieldElement factor = FieldElement(1, m) + k * k;
  if (legendre_symbol(factor) != -1)
    throw std::invalid_argument("qnr_representation: 1 + k^2 is not a non-residue");
  PointSet s(m, 1);
  for (std::int64_t x = (m.q() + 1) / 2; x <= m.q() - 1; ++x)
    s.insert_index(factor.value() * ((x * x) % m.q()) % m.q());
  return s;
}

}  // namespace fqwave
