// frames.hpp - wavelet systems {delta_a tau_l psi}, frame bounds on
// Paley-Wiener subspaces, and the certification/falsification reports.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqwave/fourier.hpp"
#include "fqwave/linalg.hpp"
#include "fqwave/rng.hpp"
#include "fqwave/tiling.hpp"

namespace fqwave {

/**
 * The materialized family {delta_a tau_l psi : a in dilations, l in
 * translations}, row-major over dilations x translations (translations in
 * index order). Every vector has the norm of psi, both operators being
 * unitary.
 */
struct WaveletSystem {
  GridFunction mother;
  std::vector<Automorphism> dilations;
  PointSet translations;
  std::vector<GridFunction> vectors;
};

/**
 * psi = (#E)^(-1/2) * idft(1_{E*}). Under the unitary convention
 * ||psi||^2 = #E* / #E, which is 1 exactly when 0 is not in E.
 */
inline GridFunction mother_wavelet(const PointSet& E,
                                   TransformConvention conv = TransformConvention::unitary) {
  if (E.empty()) throw std::invalid_argument("mother_wavelet: empty set");
  const double scale = 1.0 / std::sqrt(static_cast<double>(E.cardinality()));
  return Complex(scale, 0.0) * idft(GridFunction::indicator(E.star()), conv);
}

/// (delta_a tau_l psi)(x) = psi(a x - l), computed in one pass.
inline GridFunction dilate_translate(const GridFunction& psi, const Automorphism& a,
                                     const Point& l) {
  GridFunction out(psi.modulus(), psi.dimension());
  for (std::int64_t i = 0; i < psi.size(); ++i) {
    const Point x = Point::from_index(psi.modulus(), psi.dimension(), i);
    out[i] = psi[(a.apply(x) - l).index()];
  }
  return out;
}

inline WaveletSystem build_system(const GridFunction& psi,
                                  const std::vector<Automorphism>& dilations,
                                  const PointSet& translations) {
  if (translations.modulus() != psi.modulus() ||
      translations.dimension() != psi.dimension())
    throw std::invalid_argument("build_system: translation set shape mismatch");
  for (const Automorphism& a : dilations)
    if (a.modulus() != psi.modulus() || a.dimension() != psi.dimension())
      throw std::invalid_argument("build_system: dilation shape mismatch");

  WaveletSystem w{psi, dilations, translations, {}};
  const std::vector<Point> ls = translations.points();
  w.vectors.reserve(dilations.size() * ls.size());
  for (const Automorphism& a : dilations)
    for (const Point& l : ls) w.vectors.push_back(dilate_translate(psi, a, l));
  return w;
}

/// The union system W u W: same mother, every dilation and vector twice.
inline WaveletSystem duplicated(const WaveletSystem& w) {
  WaveletSystem out = w;
  out.dilations.insert(out.dilations.end(), w.dilations.begin(), w.dilations.end());
  out.vectors.insert(out.vectors.end(), w.vectors.begin(), w.vectors.end());
  return out;
}

/**
 * Frame operator on PW_F in the Fourier-index basis:
 * S[u, v] = sum_k w^_k(u) conj(w^_k(v)) over the indices of F. Hermitian and
 * positive semidefinite by construction. Transforms are always unitary here,
 * so frame bounds are reported for the counting-measure inner product.
 */
inline CMatrix frame_operator(const WaveletSystem& w, const PointSet& F) {
  if (F.modulus() != w.mother.modulus() || F.dimension() != w.mother.dimension())
    throw std::invalid_argument("frame_operator: subspace shape mismatch");
  const std::vector<std::int64_t> idx = F.indices();
  const int n = static_cast<int>(idx.size());
  if (n == 0) throw std::invalid_argument("frame_operator: empty subspace");

  CMatrix s(n);
  std::vector<Complex> row(static_cast<std::size_t>(n));
  for (const GridFunction& vec : w.vectors) {
    const GridFunction hat = dft(vec, TransformConvention::unitary);
    for (int i = 0; i < n; ++i)
      row[static_cast<std::size_t>(i)] = hat[idx[static_cast<std::size_t>(i)]];
    for (int i = 0; i < n; ++i) {
      const Complex wi = row[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j)
        s(i, j) += wi * std::conj(row[static_cast<std::size_t>(j)]);
    }
  }
  return s;
}

/**
 * Certified frame data for the system restricted to PW_F.
 *
 * lower/upper are the extreme eigenvalues of the frame operator (cyclic
 * Jacobi); tightness_residual is max |S - (trace/dim) I|, the scalar-fit
 * test. parseval means both bounds within tol of 1; orthogonal means the
 * pairwise Gram of the system vectors is diagonal to tol.
 */
struct FrameReport {
  double lower = 0.0;
  double upper = 0.0;
  double tightness_residual = 0.0;
  bool parseval = false;
  bool orthogonal = false;
  std::int64_t dim = 0;
  std::int64_t vectors = 0;
  std::string convention = "unitary";
  std::uint64_t seed = 42;

  double redundancy() const {
    return dim > 0 ? static_cast<double>(vectors) / static_cast<double>(dim) : 0.0;
  }
};

inline FrameReport frame_bounds(const WaveletSystem& w, const PointSet& F,
                                double tol = 1e-9, std::uint64_t seed = 42) {
  const CMatrix s = frame_operator(w, F);
  const std::vector<double> eig = hermitian_eigenvalues(s);

  FrameReport rep;
  rep.lower = eig.front();
  rep.upper = eig.back();
  rep.tightness_residual = s.max_deviation_from_scalar(s.trace_real() / s.n);
  rep.parseval = std::abs(rep.lower - 1.0) <= tol && std::abs(rep.upper - 1.0) <= tol;
  rep.dim = s.n;
  rep.vectors = static_cast<std::int64_t>(w.vectors.size());
  rep.seed = seed;

  double max_diag = 0.0, max_off = 0.0;
  for (std::size_t i = 0; i < w.vectors.size(); ++i) {
    max_diag = std::max(max_diag, std::abs(w.vectors[i].inner(w.vectors[i])));
    for (std::size_t j = i + 1; j < w.vectors.size(); ++j)
      max_off = std::max(max_off, std::abs(w.vectors[i].inner(w.vectors[j])));
  }
  rep.orthogonal = max_off <= tol * std::max(1.0, max_diag);
  return rep;
}

/**
 * Extremes of the Rayleigh quotient sum_k |<f, w_k>|^2 / ||f||^2 over seeded
 * random f in PW_F, evaluated entirely on the function side. This is the
 * second certification path, independent of the frame-operator eigensolver.
 */
inline std::pair<double, double> rayleigh_extremes(const WaveletSystem& w, const PointSet& F,
                                                   int trials, std::uint64_t seed) {
  const std::vector<std::int64_t> idx = F.indices();
  if (idx.empty()) throw std::invalid_argument("rayleigh_extremes: empty subspace");
  SplitMix64 rng(seed);
  double lo = 0.0, hi = 0.0;
  for (int t = 0; t < trials; ++t) {
    GridFunction hat(w.mother.modulus(), w.mother.dimension());
    for (std::int64_t i : idx)
      hat[i] = Complex(rng.next_signed_unit(), rng.next_signed_unit());
    const GridFunction f = idft(hat, TransformConvention::unitary);
    double num = 0.0;
    for (const GridFunction& vec : w.vectors) num += std::norm(f.inner(vec));
    const double ratio = num / f.norm2();
    if (t == 0) {
      lo = hi = ratio;
    } else {
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  return {lo, hi};
}

/// One tight-frame instance check: scalar fit of the operator and residual.
struct TightFramePart {
  double bound_fit = 0.0;
  double residual = 0.0;
  bool certified = false;
};

/**
 * Instance certificate for the four-part tight-frame statement attached to a
 * spectral pair (E, L) whose punctured set E* tiles multiplicatively by A:
 *
 *   (1) {chi_l 1_{E*}} is a tight frame for functions on E* with bound #E;
 *   (2) each dilated family {chi_{(a^-1)^t l} 1_{a(E*)}} is tight with the
 *       same bound;
 *   (3) the union over a is a tight frame for L^2(Y) with bound #E;
 *   (4) when 0 is not in E, the normalized family is an orthonormal basis.
 */
struct PfCertificate {
  double expected_bound = 0.0;
  TightFramePart part1;
  TightFramePart part2_worst;
  double part2_bound_spread = 0.0;
  TightFramePart part3;
  bool part4_applicable = false;
  std::string part4_note;
  TightFramePart part4;

  bool parts123_certified() const {
    return part1.certified && part2_worst.certified && part3.certified;
  }
};

namespace detail {

/// max |M - c I| and trace/n for the Gram-type operator sum_l chi(l . (x_i - x_j)).
inline TightFramePart character_gram_part(const std::vector<Point>& pts,
                                          const std::vector<Point>& spectrum,
                                          double expected_bound, double tol) {
  const std::int64_t q = pts.front().modulus().q();
  const auto& roots = unity_roots(q);
  TightFramePart part;
  double trace = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      Complex acc(0.0, 0.0);
      for (const Point& l : spectrum)
        acc += roots[static_cast<std::size_t>(l.dot(pts[i] - pts[j]).value())];
      if (i == j) {
        trace += acc.real();
        part.residual = std::max(part.residual, std::abs(acc - Complex(expected_bound, 0.0)));
      } else {
        part.residual = std::max(part.residual, std::abs(acc));
      }
    }
  part.bound_fit = trace / static_cast<double>(pts.size());
  part.certified = part.residual <= tol * expected_bound &&
                   std::abs(part.bound_fit - expected_bound) <= tol * expected_bound;
  return part;
}

}  // namespace detail

inline PfCertificate certify_pf_theorem(const PointSet& E, const PointSet& L,
                                        const std::vector<Automorphism>& A,
                                        double tol = 1e-9) {
  const SpectralPair sp = verify_spectral_pair(E, L, tol);
  if (!sp.valid)
    throw std::invalid_argument("certify_pf_theorem: (E, L) is not a spectral pair");
  const TilingCertificate mt = verify_multiplicative_tiling(E.star(), A);
  if (!mt.valid())
    throw std::invalid_argument(
        "certify_pf_theorem: E* is not a multiplicative tiling set for the family");

  const PrimeModulus m = E.modulus();
  const double bound = static_cast<double>(E.cardinality());
  PfCertificate cert;
  cert.expected_bound = bound;

  const std::vector<Point> estar = E.star().points();
  const std::vector<Point> lpts = L.points();

  // (1) on E* with spectrum L.
  cert.part1 = detail::character_gram_part(estar, lpts, bound, tol);

  // (2) on a(E*) with spectrum (a^-1)^t(L), for every a.
  bool part2_all_ok = true;
  bool first = true;
  for (const Automorphism& a : A) {
    const Automorphism astar = a.inverse_transpose();
    std::vector<Point> apts, aspec;
    apts.reserve(estar.size());
    aspec.reserve(lpts.size());
    for (const Point& p : estar) apts.push_back(a.apply(p));
    for (const Point& l : lpts) aspec.push_back(astar.apply(l));
    const TightFramePart part = detail::character_gram_part(apts, aspec, bound, tol);
    part2_all_ok = part2_all_ok && part.certified;
    cert.part2_bound_spread =
        std::max(cert.part2_bound_spread, std::abs(part.bound_fit - cert.part1.bound_fit));
    if (first || part.residual > cert.part2_worst.residual) cert.part2_worst = part;
    first = false;
  }
  cert.part2_worst.certified = part2_all_ok && !first;

  // (3) the union family on Y.
  {
    const PointSet Y = PointSet::full(m, E.dimension()).star();
    const std::vector<std::int64_t> yidx = Y.indices();
    const int n = static_cast<int>(yidx.size());
    const auto& roots = detail::unity_roots(m.q());
    CMatrix s(n);
    std::vector<Complex> g(static_cast<std::size_t>(n));
    for (const Automorphism& a : A) {
      const Automorphism astar = a.inverse_transpose();
      PointSet aE(m, E.dimension());
      for (const Point& p : estar) aE.insert(a.apply(p));
      for (const Point& l : lpts) {
        const Point al = astar.apply(l);
        for (int i = 0; i < n; ++i) {
          const std::int64_t xi = yidx[static_cast<std::size_t>(i)];
          if (!aE.contains_index(xi)) {
            g[static_cast<std::size_t>(i)] = Complex(0.0, 0.0);
            continue;
          }
          const Point x = Point::from_index(m, E.dimension(), xi);
          g[static_cast<std::size_t>(i)] = roots[static_cast<std::size_t>(al.dot(x).value())];
        }
        for (int i = 0; i < n; ++i) {
          const Complex gi = g[static_cast<std::size_t>(i)];
          if (gi == Complex(0.0, 0.0)) continue;
          for (int j = 0; j < n; ++j) s(i, j) += gi * std::conj(g[static_cast<std::size_t>(j)]);
        }
      }
    }
    cert.part3.bound_fit = s.trace_real() / s.n;
    cert.part3.residual = s.max_deviation_from_scalar(bound);
    cert.part3.certified = cert.part3.residual <= tol * bound &&
                           std::abs(cert.part3.bound_fit - bound) <= tol * bound;
  }

  // (4) orthonormal basis when 0 is not in E.
  if (E.contains_origin()) {
    cert.part4_applicable = false;
    cert.part4_note = "0 in E: normalized-basis statement requires 0 not in E";
  } else {
    cert.part4_applicable = true;
    const std::int64_t n_vec =
        static_cast<std::int64_t>(A.size()) * static_cast<std::int64_t>(lpts.size());
    const auto& roots = detail::unity_roots(m.q());
    double residual = 0.0;
    // Gram of the normalized family; entry ((a,l),(a',l')).
    std::vector<std::pair<const Automorphism*, Point>> fam;
    fam.reserve(static_cast<std::size_t>(n_vec));
    std::vector<PointSet> supports;
    std::vector<Automorphism> stars;
    for (const Automorphism& a : A) {
      stars.push_back(a.inverse_transpose());
      PointSet aE(m, E.dimension());
      for (const Point& p : E.points()) aE.insert(a.apply(p));
      supports.push_back(std::move(aE));
    }
    const std::vector<Point> epts = E.points();
    for (std::size_t ai = 0; ai < A.size(); ++ai)
      for (std::size_t li = 0; li < lpts.size(); ++li)
        for (std::size_t aj = 0; aj < A.size(); ++aj)
          for (std::size_t lj = 0; lj < lpts.size(); ++lj) {
            Complex acc(0.0, 0.0);
            const Point la = stars[ai].apply(lpts[li]);
            const Point lb = stars[aj].apply(lpts[lj]);
            for (const Point& e : epts) {
              const Point x = A[ai].apply(e);
              if (!supports[aj].contains(x)) continue;
              const std::int64_t ph =
                  detail::mod_reduce(la.dot(x).value() - lb.dot(x).value(), m.q());
              acc += roots[static_cast<std::size_t>(ph)];
            }
            acc /= static_cast<double>(E.cardinality());
            const bool diag = ai == aj && li == lj;
            residual = std::max(residual,
                                std::abs(acc - (diag ? Complex(1.0, 0.0) : Complex(0.0, 0.0))));
          }
    cert.part4.residual = residual;
    cert.part4.bound_fit = 1.0;
    const std::int64_t dim_y = PointSet::full(m, E.dimension()).volume() - 1;
    cert.part4.certified = residual <= tol && n_vec == dim_y;
    cert.part4_note = cert.part4.certified
                          ? "normalized family is an orthonormal basis for L^2(Y)"
                          : "normalized family failed the orthonormal-basis check";
  }
  return cert;
}

/**
 * Converse direction: a tight wavelet system forces the Fourier supports
 * a^t(E*) to cover Y. Reports coverage, the (multiset) disjointness of the
 * supports, and, when disjoint, the tight-frame spectral-pair certificate
 * for (E*, L).
 */
struct ConverseReport {
  double measured_lower = 0.0;
  double measured_upper = 0.0;
  bool coverage_ok = false;
  std::int64_t missing_count = 0;
  bool disjoint = false;
  std::optional<Point> overlap_witness;
  bool pair_checked = false;
  bool pair_certified = false;
  double pair_bound = 0.0;
  double pair_residual = 0.0;
};

inline ConverseReport certify_converse(const WaveletSystem& w, const PointSet& E,
                                       const std::vector<Automorphism>& A,
                                       double tol = 1e-9) {
  const PrimeModulus m = E.modulus();
  const PointSet Y = PointSet::full(m, E.dimension()).star();
  const FrameReport fb = frame_bounds(w, Y, tol);
  if (fb.tightness_residual > tol * std::max(1.0, fb.upper))
    throw std::invalid_argument("certify_converse: system is not a tight frame on PW_Y");

  ConverseReport rep;
  rep.measured_lower = fb.lower;
  rep.measured_upper = fb.upper;

  const std::vector<Point> estar = E.star().points();
  std::vector<std::int32_t> mult(static_cast<std::size_t>(E.volume()), 0);
  for (const Automorphism& a : A) {
    const Automorphism at = a.transpose();
    for (const Point& p : estar) ++mult[static_cast<std::size_t>(at.apply(p).index())];
  }
  rep.coverage_ok = true;
  rep.disjoint = true;
  for (std::int64_t i = 1; i < E.volume(); ++i) {
    const std::int32_t c = mult[static_cast<std::size_t>(i)];
    if (c == 0) {
      rep.coverage_ok = false;
      ++rep.missing_count;
    }
    if (c > 1) {
      rep.disjoint = false;
      if (!rep.overlap_witness)
        rep.overlap_witness = Point::from_index(m, E.dimension(), i);
    }
  }

  if (rep.disjoint) {
    rep.pair_checked = true;
    const std::vector<Point> lpts = w.translations.points();
    const std::int64_t q = m.q();
    const auto& roots = detail::unity_roots(q);
    double trace = 0.0, residual = 0.0;
    std::vector<std::vector<Complex>> gram(estar.size(),
                                           std::vector<Complex>(estar.size()));
    for (std::size_t i = 0; i < estar.size(); ++i)
      for (std::size_t j = 0; j < estar.size(); ++j) {
        Complex acc(0.0, 0.0);
        for (const Point& l : lpts)
          acc += roots[static_cast<std::size_t>(l.dot(estar[i] - estar[j]).value())];
        gram[i][j] = acc;
        if (i == j) trace += acc.real();
      }
    rep.pair_bound = trace / static_cast<double>(estar.size());
    for (std::size_t i = 0; i < estar.size(); ++i)
      for (std::size_t j = 0; j < estar.size(); ++j) {
        const Complex want = i == j ? Complex(rep.pair_bound, 0.0) : Complex(0.0, 0.0);
        residual = std::max(residual, std::abs(gram[i][j] - want));
      }
    rep.pair_residual = residual;
    rep.pair_certified = residual <= tol * std::max(1.0, rep.pair_bound);
  }
  return rep;
}

/**
 * Falsification sweep: with psi = idft(1_E) for nonempty proper E, no choice
 * of dilations (rotations or diagonal maps) and translations makes the
 * system a Parseval frame for the FULL space L^2(F_q^d) -- the frame
 * operator is never a scalar multiple of the identity. Runs an exhaustive
 * pass when q^d <= 9 plus seeded random configurations, and reports the
 * minimum scalar-fit residual seen.
 */
struct FalsificationReport {
  std::int64_t q = 0;
  int d = 0;
  std::uint64_t seed = 0;
  std::int64_t trials = 0;
  std::int64_t configurations = 0;
  std::int64_t exhaustive_configurations = 0;
  double threshold = 1e-6;
  double min_residual = 0.0;
  bool impossibility_confirmed = false;
};

namespace detail {

inline std::vector<Automorphism> falsification_pool(PrimeModulus m, int d) {
  std::vector<Automorphism> pool;
  if (d == 1) {
    pool.push_back(Automorphism(m, 1, {1}));
    pool.push_back(Automorphism(m, 1, {m.q() - 1}));
    return pool;
  }
  pool = m.mod4() == 3 ? rotation_group(m) : norm_preserving_rotations(m);
  for (std::int64_t s = 1; s < m.q(); ++s)
    for (std::int64_t t = 1; t < m.q(); ++t) {
      Automorphism diag(m, 2, {s, 0, 0, t});
      bool dup = false;
      for (const Automorphism& a : pool)
        if (a == diag) {
          dup = true;
          break;
        }
      if (!dup) pool.push_back(diag);
    }
  return pool;
}

inline double full_space_scalar_residual(const PointSet& E,
                                         const std::vector<Automorphism>& A,
                                         const PointSet& lambda) {
  const GridFunction psi = idft(GridFunction::indicator(E));
  const WaveletSystem w = build_system(psi, A, lambda);
  const CMatrix s = frame_operator(w, PointSet::full(E.modulus(), E.dimension()));
  return s.max_deviation_from_scalar(s.trace_real() / s.n);
}

}  // namespace detail

inline FalsificationReport demo_no_full_space_parseval(PrimeModulus m, int d,
                                                       std::int64_t trials,
                                                       std::uint64_t seed,
                                                       double threshold = 1e-6) {
  if (d != 1 && d != 2)
    throw std::invalid_argument("demo_no_full_space_parseval: supports d = 1 or 2");
  const std::vector<Automorphism> pool = detail::falsification_pool(m, d);
  const std::int64_t vol = detail::checked_volume(m.q(), d);

  FalsificationReport rep;
  rep.q = m.q();
  rep.d = d;
  rep.seed = seed;
  rep.trials = trials;
  rep.threshold = threshold;

  bool have_min = false;
  auto record = [&](double r) {
    if (!have_min || r < rep.min_residual) {
      rep.min_residual = r;
      have_min = true;
    }
    ++rep.configurations;
  };

  auto set_from_mask = [&](std::uint64_t mask) {
    PointSet s(m, d);
    for (std::int64_t i = 0; i < vol; ++i)
      if ((mask >> i) & 1u) s.insert_index(i);
    return s;
  };
  auto subpool_from_mask = [&](std::uint64_t mask) {
    std::vector<Automorphism> a;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if ((mask >> i) & 1u) a.push_back(pool[i]);
    return a;
  };

  // Exhaustive pass over every nonempty proper E when the space is tiny.
  if (vol <= 9) {
    const std::uint64_t e_masks = (std::uint64_t{1} << vol) - 1;  // nonzero masks
    const std::uint64_t a_masks = (std::uint64_t{1} << pool.size()) - 1;
    const std::uint64_t l_masks = e_masks;
    const std::uint64_t cartesian =
        (e_masks - 1) * a_masks * l_masks;  // E proper excludes the full mask
    if (cartesian <= 20000) {
      for (std::uint64_t em = 1; em < e_masks; ++em) {
        const PointSet E = set_from_mask(em);
        for (std::uint64_t am = 1; am <= a_masks; ++am) {
          const std::vector<Automorphism> A = subpool_from_mask(am);
          for (std::uint64_t lm = 1; lm <= l_masks; ++lm)
            record(detail::full_space_scalar_residual(E, A, set_from_mask(lm)));
        }
      }
    } else {
      for (std::uint64_t em = 1; em < e_masks; ++em)
        record(detail::full_space_scalar_residual(set_from_mask(em), pool,
                                                  PointSet::full(m, d)));
    }
    rep.exhaustive_configurations = rep.configurations;
  }

  // Seeded random configurations.
  SplitMix64 rng(seed);
  auto random_mask = [&](std::int64_t bits, bool exclude_full) {
    const std::uint64_t all = bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    for (;;) {
      std::uint64_t mask = rng.next() & all;
      if (mask == 0) continue;
      if (exclude_full && mask == all) continue;
      return mask;
    }
  };
  for (std::int64_t t = 0; t < trials; ++t) {
    const PointSet E = set_from_mask(random_mask(vol, /*exclude_full=*/true));
    const std::vector<Automorphism> A =
        subpool_from_mask(random_mask(static_cast<std::int64_t>(pool.size()), false));
    const PointSet lambda = set_from_mask(random_mask(vol, false));
    record(detail::full_space_scalar_residual(E, A, lambda));
  }

  rep.impossibility_confirmed = have_min && rep.min_residual > threshold;
  return rep;
}

/**
 * The doubling experiment: starting from a certified Parseval system W on
 * PW_Y, the union W u W measures frame bounds 2, exactly additive; the
 * halved value A/2 is reported as not reproduced.
 */
struct DuplicationReport {
  double base_lower = 0.0, base_upper = 0.0;
  double doubled_lower = 0.0, doubled_upper = 0.0;
  double halved_claim = 0.0;
  bool halved_reproduced = false;
  bool additivity_confirmed = false;
};

inline DuplicationReport duplication_demo(PrimeModulus m, double tol = 1e-9) {
  const PointSet E = construct_wavelet_frame_set(m, 2);
  const PointSet L = canonical_spectrum(E);
  const std::vector<Automorphism> A = rotation_group(m);
  const WaveletSystem w = build_system(mother_wavelet(E), A, L);
  const PointSet Y = PointSet::full(m, 2).star();

  const FrameReport base = frame_bounds(w, Y, tol);
  if (!base.parseval)
    throw std::logic_error("duplication_demo: base system failed Parseval certification");
  const FrameReport twice = frame_bounds(duplicated(w), Y, tol);

  DuplicationReport rep;
  rep.base_lower = base.lower;
  rep.base_upper = base.upper;
  rep.doubled_lower = twice.lower;
  rep.doubled_upper = twice.upper;
  rep.halved_claim = base.lower / 2.0;
  rep.halved_reproduced = std::abs(twice.lower - rep.halved_claim) <= tol &&
                          std::abs(twice.upper - rep.halved_claim) <= tol;
  rep.additivity_confirmed =
      std::abs(twice.lower - 2.0 * base.lower) <= 2.0 * tol &&
      std::abs(twice.upper - 2.0 * base.upper) <= 2.0 * tol;
  return rep;
}

/**
 * The one genuine full-space system: E = F_q^d with translations by every
 * point is, after normalization, an orthonormal basis of L^2(F_q^d).
 */
struct FullSpaceOnbReport {
  std::int64_t q = 0;
  int d = 0;
  std::int64_t vector_count = 0;
  double gram_residual = 0.0;
  double tight_bound = 0.0;
  bool onb = false;
};

inline FullSpaceOnbReport full_space_translation_onb(PrimeModulus m, int d,
                                                     double tol = 1e-9) {
  const PointSet full = PointSet::full(m, d);
  const GridFunction psi = idft(GridFunction::indicator(full));
  const WaveletSystem w =
      build_system(psi, {Automorphism::identity(m, d)}, full);

  FullSpaceOnbReport rep;
  rep.q = m.q();
  rep.d = d;
  rep.vector_count = static_cast<std::int64_t>(w.vectors.size());

  const double n2 = psi.norm2();
  for (std::size_t i = 0; i < w.vectors.size(); ++i)
    for (std::size_t j = 0; j < w.vectors.size(); ++j) {
      const Complex g = w.vectors[i].inner(w.vectors[j]) / n2;
      const Complex want = i == j ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      rep.gram_residual = std::max(rep.gram_residual, std::abs(g - want));
    }

  const CMatrix s = frame_operator(w, full);
  rep.tight_bound = s.trace_real() / s.n;
  rep.onb = rep.gram_residual <= tol && rep.vector_count == full.volume();
  return rep;
}

/**
 * Experimental scan for the open question whether an orthogonal wavelet
 * basis of PW_Y forces 0 out of E. Scans the two-point sets E = {0, e} with
 * the full similarity group as dilations and L = {0}: the Fourier supports
 * are the singletons a^t(e), so the system is an orthogonal basis of PW_Y
 * while 0 lies in E. Reports every counterexample found.
 */
struct OriginQuestionReport {
  std::int64_t q = 0;
  std::int64_t configurations = 0;
  std::int64_t counterexamples = 0;
  double worst_gram_offdiag = 0.0;  // over counterexamples
  bool origin_membership_possible = false;
};

inline OriginQuestionReport origin_membership_scan(PrimeModulus m, double tol = 1e-9) {
  m.require_mod4(3, "origin_membership_scan");
  OriginQuestionReport rep;
  rep.q = m.q();
  const std::vector<Automorphism> sims = similarity_group(m);
  PointSet L(m, 2);
  L.insert_index(0);
  const std::int64_t dim_y = m.q() * m.q() - 1;

  for (std::int64_t e = 1; e < m.q() * m.q(); ++e) {
    PointSet E(m, 2);
    E.insert_index(0);
    E.insert_index(e);
    const WaveletSystem w = build_system(mother_wavelet(E), sims, L);
    ++rep.configurations;

    double max_off = 0.0;
    bool nonzero = true;
    for (std::size_t i = 0; i < w.vectors.size() && nonzero; ++i) {
      if (w.vectors[i].norm2() <= tol) nonzero = false;
      for (std::size_t j = i + 1; j < w.vectors.size(); ++j)
        max_off = std::max(max_off, std::abs(w.vectors[i].inner(w.vectors[j])));
    }
    const bool orthogonal_basis =
        nonzero && max_off <= tol &&
        static_cast<std::int64_t>(w.vectors.size()) == dim_y;
    if (orthogonal_basis) {
      ++rep.counterexamples;
      rep.worst_gram_offdiag = std::max(rep.worst_gram_offdiag, max_off);
    }
  }
  rep.origin_membership_possible = rep.counterexamples > 0;
  return rep;
}

}  // namespace fqwave
