// tiling.hpp - multiplicative/translational tiling certificates, the
// rotational construction of wavelet frame sets, spectral pairs, and the
// q = 1 (mod 4) obstruction.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fqwave/fourier.hpp"
#include "fqwave/geometry.hpp"

namespace fqwave {

/**
 * Outcome of a tiling check. Valid means every point of the target carries
 * multiplicity exactly one; the witness is the first point (in index order)
 * violating that, and the histogram counts target points per multiplicity.
 */
struct TilingCertificate {
  std::string kind;  // "multiplicative" or "translational"
  bool covered = false;
  bool disjoint = false;
  std::optional<Point> witness;
  std::map<std::int64_t, std::int64_t> multiplicity_histogram;

  bool valid() const { return covered && disjoint; }
};

/**
 * A set with exactly one point on each circle S_r, r != 0 (the
 * lexicographically smallest), q - 1 points total. Its orbit under the
 * rotation group tiles F_q^2 \ {0}.
 */
inline PointSet construct_sector_set(PrimeModulus m) {
  m.require_mod4(3, "construct_sector_set");
  const std::int64_t q = m.q();
  PointSet out(m, 2);
  for (std::int64_t r = 1; r < q; ++r) {
    for (std::int64_t x = 0; x < q; ++x) {
      FieldElement rhs = FieldElement(r - x * x, m);
      if (auto y = sqrt_mod(rhs)) {
        out.insert(Point(m, {x, y->value()}));  // sqrt_mod returns the smaller root
        break;
      }
    }
  }
  return out;
}

/**
 * The graph set E = {(0,0)} u {(x,0) : 0 < x <= (q-1)/2}
 *                        u {(x,kx) : (q+1)/2 <= x <= q-1}
 * with k the smallest value making 1 + k^2 a non-residue. #E = q; E meets
 * every circle exactly once, tiles F_q^2 by the column {0} x F_q, and has
 * spectrum F_q x {0}. For d > 2 the product E x F_q^(d-2) is returned.
 */
inline PointSet construct_wavelet_frame_set(PrimeModulus m, int d = 2) {
  m.require_mod4(3, "construct_wavelet_frame_set");
  if (d < 2) throw std::invalid_argument("construct_wavelet_frame_set: requires d >= 2");
  const std::int64_t q = m.q();
  const std::int64_t k = find_k(m).value();
  PointSet e(m, 2);
  e.insert(Point(m, {0, 0}));
  for (std::int64_t x = 1; x <= (q - 1) / 2; ++x) e.insert(Point(m, {x, 0}));
  for (std::int64_t x = (q + 1) / 2; x <= q - 1; ++x)
    e.insert(Point(m, {x, k * x % q}));
  return d == 2 ? e : e.product_with_full(d - 2);
}

/**
 * Multiplicity count of Y = F_q^d \ {0} under the union of alpha(E) over the
 * automorphism family. E must not contain the origin (every automorphism
 * fixes it, so no family could cover it with multiplicity one).
 */
inline TilingCertificate verify_multiplicative_tiling(const PointSet& E,
                                                      const std::vector<Automorphism>& A) {
  if (E.contains_origin())
    throw std::invalid_argument("verify_multiplicative_tiling: set contains the origin");
  for (const Automorphism& a : A)
    if (a.modulus() != E.modulus() || a.dimension() != E.dimension())
      throw std::invalid_argument("verify_multiplicative_tiling: automorphism shape mismatch");

  std::vector<std::int32_t> mult(static_cast<std::size_t>(E.volume()), 0);
  const std::vector<Point> pts = E.points();
  for (const Automorphism& a : A)
    for (const Point& p : pts)
      ++mult[static_cast<std::size_t>(a.apply(p).index())];

  TilingCertificate cert;
  cert.kind = "multiplicative";
  cert.covered = true;
  cert.disjoint = true;
  for (std::int64_t i = 1; i < E.volume(); ++i) {
    const std::int64_t c = mult[static_cast<std::size_t>(i)];
    ++cert.multiplicity_histogram[c];
    if (c < 1) cert.covered = false;
    if (c > 1) cert.disjoint = false;
    if (c != 1 && !cert.witness)
      cert.witness = Point::from_index(E.modulus(), E.dimension(), i);
  }
  return cert;
}

/// Multiplicity count of F_q^d under the translates {E + lambda}.
inline TilingCertificate verify_translational_tiling(const PointSet& E,
                                                     const PointSet& lambda) {
  if (E.modulus() != lambda.modulus() || E.dimension() != lambda.dimension())
    throw std::invalid_argument("verify_translational_tiling: modulus or dimension mismatch");

  std::vector<std::int32_t> mult(static_cast<std::size_t>(E.volume()), 0);
  const std::vector<Point> pts = E.points();
  for (const Point& t : lambda.points())
    for (const Point& p : pts)
      ++mult[static_cast<std::size_t>((p + t).index())];

  TilingCertificate cert;
  cert.kind = "translational";
  cert.covered = true;
  cert.disjoint = true;
  for (std::int64_t i = 0; i < E.volume(); ++i) {
    const std::int64_t c = mult[static_cast<std::size_t>(i)];
    ++cert.multiplicity_histogram[c];
    if (c < 1) cert.covered = false;
    if (c > 1) cert.disjoint = false;
    if (c != 1 && !cert.witness)
      cert.witness = Point::from_index(E.modulus(), E.dimension(), i);
  }
  return cert;
}

/// A basis (e1, e2) and function table exhibiting E = {x e1 + f(x) e2}.
struct GraphForm {
  Point e1, e2;
  std::vector<std::int64_t> table;  // f(x) for x = 0..q-1
};

/**
 * Searches basis pairs in lexicographic order for a representation of E as
 * the graph of a function; requires #E = q. Returns the first basis found,
 * or nullopt when E is not a graph.
 */
inline std::optional<GraphForm> is_graph(const PointSet& E) {
  if (E.dimension() != 2)
    throw std::invalid_argument("is_graph: requires a subset of F_q^2");
  const std::int64_t q = E.modulus().q();
  if (E.cardinality() != q)
    throw std::invalid_argument("is_graph: cardinality must equal q, got " +
                                std::to_string(E.cardinality()));
  const PrimeModulus m = E.modulus();
  const std::vector<Point> pts = E.points();

  for (std::int64_t i1 = 1; i1 < E.volume(); ++i1) {
    const Point e1 = Point::from_index(m, 2, i1);
    for (std::int64_t i2 = 1; i2 < E.volume(); ++i2) {
      const Point e2 = Point::from_index(m, 2, i2);
      const FieldElement det =
          e1.coord(0) * e2.coord(1) - e1.coord(1) * e2.coord(0);
      if (det.is_zero()) continue;
      const FieldElement dinv = det.inverse();
      std::vector<std::int64_t> table(static_cast<std::size_t>(q), -1);
      bool ok = true;
      for (const Point& p : pts) {
        // Coordinates (u, v) of p in the basis: p = u e1 + v e2.
        const FieldElement u =
            (p.coord(0) * e2.coord(1) - p.coord(1) * e2.coord(0)) * dinv;
        const FieldElement v =
            (e1.coord(0) * p.coord(1) - e1.coord(1) * p.coord(0)) * dinv;
        auto& slot = table[static_cast<std::size_t>(u.value())];
        if (slot != -1) {
          ok = false;
          break;
        }
        slot = v.value();
      }
      if (ok) return GraphForm{e1, e2, std::move(table)};
    }
  }
  return std::nullopt;
}

/**
 * The spectrum L = {l e1* : l in F_q} attached to a graph set, where e1* is
 * the first dual basis vector; for the standard basis this is F_q x {0}.
 */
inline PointSet canonical_spectrum(const PointSet& E) {
  if (E.cardinality() == 1) {  // a single point always has spectrum {0}
    PointSet L(E.modulus(), E.dimension());
    L.insert_index(0);
    return L;
  }
  const auto g = is_graph(E);
  if (!g) throw std::invalid_argument("canonical_spectrum: set is not a graph");
  const PrimeModulus m = E.modulus();
  const FieldElement det =
      g->e1.coord(0) * g->e2.coord(1) - g->e1.coord(1) * g->e2.coord(0);
  const FieldElement dinv = det.inverse();
  const Point e1_dual(m, {(g->e2.coord(1) * dinv).value(), (-g->e2.coord(0) * dinv).value()});
  PointSet L(m, 2);
  for (std::int64_t l = 0; l < m.q(); ++l) L.insert(FieldElement(l, m) * e1_dual);
  return L;
}

/**
 * Spectral-pair certificate: the Gram matrix G[l, l'] = sum_{x in E}
 * chi_l(x) conj(chi_l'(x)) must equal #E * I. Since the entries depend only
 * on l - l', the residual is computed per difference. Valid iff #E = #L and
 * max |G - #E I| <= tol * #E.
 */
struct SpectralPair {
  PointSet set, spectrum;
  double gram_residual = 0.0;
  bool valid = false;
};

inline SpectralPair verify_spectral_pair(const PointSet& E, const PointSet& L,
                                         double tol = 1e-9) {
  if (E.modulus() != L.modulus() || E.dimension() != L.dimension())
    throw std::invalid_argument("verify_spectral_pair: modulus or dimension mismatch");
  const PrimeModulus m = E.modulus();
  const std::int64_t q = m.q();
  const auto& roots = detail::unity_roots(q);
  const std::vector<Point> epts = E.points();
  const std::vector<Point> lpts = L.points();

  // |sum_{x in E} chi_delta(x)| per difference delta = l - l', cached.
  std::vector<double> mag(static_cast<std::size_t>(E.volume()), -1.0);
  auto magnitude = [&](const Point& delta) {
    auto& slot = mag[static_cast<std::size_t>(delta.index())];
    if (slot < 0.0) {
      Complex acc(0.0, 0.0);
      for (const Point& x : epts)
        acc += roots[static_cast<std::size_t>(delta.dot(x).value())];
      slot = std::abs(acc);
    }
    return slot;
  };

  SpectralPair out{E, L, 0.0, false};
  for (std::size_t i = 0; i < lpts.size(); ++i)
    for (std::size_t j = i + 1; j < lpts.size(); ++j) {
      const double v = magnitude(lpts[i] - lpts[j]);
      if (v > out.gram_residual) out.gram_residual = v;
    }
  out.valid = E.cardinality() == L.cardinality() &&
              out.gram_residual <= tol * static_cast<double>(E.cardinality());
  return out;
}

/**
 * Exhaustive lexicographic clique search for a spectrum of size #E in the
 * orthogonality graph (l ~ l' iff sum_{x in E} chi_{l-l'}(x) = 0). Spectra
 * are translation-invariant, so the search fixes 0 as the first element;
 * returns the first clique found or nullopt. Throws when #E exceeds the
 * limit or the node budget runs out.
 */
inline std::optional<PointSet> spectrum_search(const PointSet& E, std::int64_t limit = 12) {
  if (E.empty()) throw std::invalid_argument("spectrum_search: empty set");
  if (E.cardinality() > limit)
    throw std::length_error("spectrum_search: #E exceeds the search budget limit");
  const PrimeModulus m = E.modulus();
  const int d = E.dimension();
  const std::int64_t vol = E.volume();
  const auto& roots = detail::unity_roots(m.q());
  const std::vector<Point> epts = E.points();

  // Orthogonality flag per difference index.
  std::vector<char> orth(static_cast<std::size_t>(vol), 0);
  for (std::int64_t i = 0; i < vol; ++i) {
    const Point delta = Point::from_index(m, d, i);
    Complex acc(0.0, 0.0);
    for (const Point& x : epts)
      acc += roots[static_cast<std::size_t>(delta.dot(x).value())];
    orth[static_cast<std::size_t>(i)] =
        std::abs(acc) <= 1e-9 * static_cast<double>(E.cardinality()) ? 1 : 0;
  }

  const std::size_t target = static_cast<std::size_t>(E.cardinality());
  std::vector<std::int64_t> chosen = {0};
  std::int64_t budget = 20'000'000;

  auto compatible = [&](std::int64_t cand) {
    const Point pc = Point::from_index(m, d, cand);
    for (std::int64_t c : chosen) {
      const Point diff = pc - Point::from_index(m, d, c);
      if (!orth[static_cast<std::size_t>(diff.index())]) return false;
    }
    return true;
  };

  std::optional<PointSet> found;
  auto extend = [&](auto&& self, std::int64_t start) -> bool {
    if (chosen.size() == target) {
      PointSet L(m, d);
      for (std::int64_t c : chosen) L.insert_index(c);
      found = std::move(L);
      return true;
    }
    for (std::int64_t v = start; v < vol; ++v) {
      if (vol - v < static_cast<std::int64_t>(target - chosen.size())) break;
      if (--budget < 0)
        throw std::length_error("spectrum_search: node budget exceeded");
      if (!compatible(v)) continue;
      chosen.push_back(v);
      if (self(self, v + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  extend(extend, 1);
  return found;
}

/**
 * The q = 1 (mod 4) obstruction: S_0 has 2q - 1 points, and since every
 * rotation preserves the norm form, the orbit of any set meeting only the
 * circles of nonzero radius never touches S_0 \ {0}. Reports the exact
 * uncovered count 2q - 2, computed against the full rotation group and the
 * lexicographic one-point-per-circle choice set.
 */
struct ObstructionReport {
  std::int64_t q = 0;
  std::int64_t s0_count = 0;
  std::int64_t uncovered = 0;
  std::int64_t rotation_count = 0;
  bool confirmed = false;
};

inline ObstructionReport verify_q1mod4_obstruction(PrimeModulus m) {
  m.require_mod4(1, "verify_q1mod4_obstruction");
  const std::int64_t q = m.q();
  ObstructionReport rep;
  rep.q = q;

  const Circle s0 = circle(m, FieldElement(0, m));
  rep.s0_count = s0.cardinality();

  // One point per nonzero-radius circle, lexicographically smallest.
  PointSet choice(m, 2);
  for (std::int64_t r = 1; r < q; ++r) {
    for (std::int64_t x = 0; x < q; ++x) {
      if (auto y = sqrt_mod(FieldElement(r - x * x, m))) {
        choice.insert(Point(m, {x, y->value()}));
        break;
      }
    }
  }

  const std::vector<Automorphism> rotations = norm_preserving_rotations(m);
  rep.rotation_count = static_cast<std::int64_t>(rotations.size());
  PointSet covered(m, 2);
  for (const Automorphism& a : rotations)
    for (const Point& p : choice.points()) covered.insert(a.apply(p));

  for (const Point& p : s0.points.points())
    if (!p.is_origin() && !covered.contains(p)) ++rep.uncovered;

  rep.confirmed = rep.s0_count == 2 * q - 1 && rep.uncovered == 2 * q - 2;
  return rep;
}

}  // namespace fqwave
