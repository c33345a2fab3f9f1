#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "fqwave/rng.hpp"
#include "fqwave/tiling.hpp"
#include "oracles.hpp"

using namespace fqwave;

namespace {

std::set<std::pair<std::int64_t, std::int64_t>> as_pairs(const PointSet& s) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (const Point& p : s.points()) out.insert({p[0], p[1]});
  return out;
}

PointSet column_partner(PrimeModulus m, int d) {
  // {t * e2 : t in F_q}, the canonical translational partner of a graph set.
  PointSet s(m, d);
  for (std::int64_t t = 0; t < m.q(); ++t) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(d), 0);
    c[1] = t;
    s.insert(Point(m, std::move(c)));
  }
  return s;
}

}  // namespace

TEST_CASE("construct_sector_set picks one point per nonzero circle") {
  const PrimeModulus m3(3);
  CHECK(as_pairs(construct_sector_set(m3)) ==
        std::set<std::pair<std::int64_t, std::int64_t>>{{0, 1}, {1, 1}});
  CHECK(construct_sector_set(PrimeModulus(7)).cardinality() == 6);
  CHECK_THROWS_AS(construct_sector_set(PrimeModulus(5)), modulus_class_error);

  for (std::int64_t q : {3, 7, 11}) {
    const PrimeModulus m(q);
    const PointSet e = construct_sector_set(m);
    for (std::int64_t r = 1; r < q; ++r) {
      const PointSet sr = circle(m, FieldElement(r, m)).points;
      std::int64_t hits = 0;
      for (const Point& p : e.points())
        if (sr.contains(p)) ++hits;
      CHECK(hits == 1);
    }
    CHECK(verify_multiplicative_tiling(e, rotation_group(m)).valid());
  }
}

TEST_CASE("construct_wavelet_frame_set matches the explicit tables") {
  const PrimeModulus m3(3);
  CHECK(as_pairs(construct_wavelet_frame_set(m3)) ==
        std::set<std::pair<std::int64_t, std::int64_t>>{{0, 0}, {1, 0}, {2, 2}});

  const PrimeModulus m7(7);
  CHECK(as_pairs(construct_wavelet_frame_set(m7)) ==
        std::set<std::pair<std::int64_t, std::int64_t>>{
            {0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 1}, {5, 3}, {6, 5}});

  CHECK(construct_wavelet_frame_set(m3, 3).cardinality() == 9);
  CHECK(construct_wavelet_frame_set(m3, 3).dimension() == 3);
  CHECK_THROWS_AS(construct_wavelet_frame_set(PrimeModulus(5)), modulus_class_error);
  CHECK_THROWS_AS(construct_wavelet_frame_set(m3, 1), std::invalid_argument);

  // E meets every circle exactly once, the origin included in S_0.
  for (std::int64_t q : {3, 7, 11, 19, 23}) {
    const PrimeModulus m(q);
    const PointSet e = construct_wavelet_frame_set(m);
    CHECK(e.cardinality() == q);
    CHECK(e.contains_origin());
    for (std::int64_t r = 0; r < q; ++r) {
      const PointSet sr = circle(m, FieldElement(r, m)).points;
      std::int64_t hits = 0;
      for (const Point& p : e.points())
        if (sr.contains(p)) ++hits;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("verify_multiplicative_tiling certificates and witnesses") {
  const PrimeModulus m(3);
  const auto group = rotation_group(m);

  CHECK(verify_multiplicative_tiling(construct_sector_set(m), group).valid());

  // The unit circle itself is not a tiling set: its orbit is itself, covered
  // four times, while S_2 is never covered.
  const PointSet s1 = circle(m, FieldElement(1, m)).points;
  const TilingCertificate bad = verify_multiplicative_tiling(s1, group);
  CHECK(!bad.valid());
  CHECK(!bad.covered);
  CHECK(!bad.disjoint);
  CHECK(bad.multiplicity_histogram.at(0) == 4);
  CHECK(bad.multiplicity_histogram.at(4) == 4);
  REQUIRE(bad.witness.has_value());

  const PrimeModulus m7(7);
  CHECK(verify_multiplicative_tiling(construct_wavelet_frame_set(m7).star(),
                                     rotation_group(m7))
            .valid());

  PointSet with_origin(m, 2);
  with_origin.insert_index(0);
  CHECK_THROWS_AS(verify_multiplicative_tiling(with_origin, group), std::invalid_argument);
}

TEST_CASE("verify_translational_tiling certificates") {
  const PrimeModulus m(3);
  const PointSet e = construct_wavelet_frame_set(m);
  CHECK(verify_translational_tiling(e, column_partner(m, 2)).valid());

  PointSet origin_only(m, 2);
  origin_only.insert_index(0);
  CHECK(verify_translational_tiling(PointSet::full(m, 2), origin_only).valid());

  PointSet two(m, 2);
  two.insert(Point(m, {0, 0}));
  two.insert(Point(m, {1, 0}));
  const TilingCertificate bad = verify_translational_tiling(two, PointSet::full(m, 2));
  CHECK(!bad.valid());
  CHECK(bad.multiplicity_histogram.at(2) == 9);

  // Counting identity #E * #Lambda = q^d whenever the certificate is valid.
  for (std::int64_t q : {3, 7}) {
    const PrimeModulus mq(q);
    const PointSet eq = construct_wavelet_frame_set(mq);
    const PointSet partner = column_partner(mq, 2);
    CHECK(verify_translational_tiling(eq, partner).valid());
    CHECK(eq.cardinality() * partner.cardinality() == eq.volume());
  }
}

TEST_CASE("is_graph finds the right basis and rejects wrong cardinalities") {
  const PrimeModulus m7(7);
  const PointSet e7 = construct_wavelet_frame_set(m7);
  const auto g7 = is_graph(e7);
  REQUIRE(g7.has_value());
  CHECK(g7->e1 == Point(m7, {1, 0}));
  CHECK(g7->e2 == Point(m7, {0, 1}));
  CHECK(g7->table == std::vector<std::int64_t>{0, 0, 0, 0, 1, 3, 5});

  // A column is a graph over the swapped basis.
  PointSet column(m7, 2);
  for (std::int64_t y = 0; y < 7; ++y) column.insert(Point(m7, {0, y}));
  const auto gc = is_graph(column);
  REQUIRE(gc.has_value());
  CHECK(gc->e1 == Point(m7, {0, 1}));
  CHECK(gc->e2 == Point(m7, {1, 0}));
  CHECK(gc->table == std::vector<std::int64_t>(7, 0));

  const PrimeModulus m3(3);
  CHECK_THROWS_AS(is_graph(circle(m3, FieldElement(1, m3)).points), std::invalid_argument);

  // A 7-point set whose pairwise differences block all 8 line directions
  // mod 7 (slopes inf,0,1,6,2,3,4,5 in that order below) is not a graph.
  PointSet notg(m7, 2);
  for (auto [x, y] : {std::pair<std::int64_t, std::int64_t>{0, 0}, {0, 1}, {1, 0},
                      {1, 1}, {2, 3}, {3, 0}, {4, 5}})
    notg.insert(Point(m7, {x, y}));
  CHECK(!is_graph(notg).has_value());
}

TEST_CASE("canonical_spectrum certifies against the Gram oracle") {
  const PrimeModulus m3(3);
  const PointSet e3 = construct_wavelet_frame_set(m3);
  CHECK(as_pairs(canonical_spectrum(e3)) ==
        std::set<std::pair<std::int64_t, std::int64_t>>{{0, 0}, {1, 0}, {2, 0}});
  const SpectralPair sp3 = verify_spectral_pair(e3, canonical_spectrum(e3));
  CHECK(sp3.valid);
  CHECK(sp3.gram_residual < 1e-12);

  const PrimeModulus m7(7);
  const PointSet e7 = construct_wavelet_frame_set(m7);
  std::set<std::pair<std::int64_t, std::int64_t>> f7_axis;
  for (std::int64_t l = 0; l < 7; ++l) f7_axis.insert({l, 0});
  CHECK(as_pairs(canonical_spectrum(e7)) == f7_axis);
  CHECK(verify_spectral_pair(e7, canonical_spectrum(e7)).valid);

  // Singleton sets have spectrum {0}.
  PointSet single(m3, 2);
  single.insert(Point(m3, {2, 1}));
  const PointSet l0 = canonical_spectrum(single);
  CHECK(l0.cardinality() == 1);
  CHECK(l0.contains_origin());
  CHECK(verify_spectral_pair(single, l0).valid);
}

TEST_CASE("verify_spectral_pair rejects mismatched or skew pairs") {
  const PrimeModulus m(3);
  const PointSet e = construct_wavelet_frame_set(m);
  PointSet small(m, 2);
  small.insert_index(0);
  const SpectralPair bad = verify_spectral_pair(e, small);
  CHECK(!bad.valid);

  const PointSet full = PointSet::full(m, 2);
  CHECK(verify_spectral_pair(full, full).valid);

  // Shifting the canonical spectrum off its coset breaks orthogonality.
  PointSet skew(m, 2);
  skew.insert(Point(m, {0, 0}));
  skew.insert(Point(m, {1, 0}));
  skew.insert(Point(m, {1, 1}));
  CHECK(!verify_spectral_pair(e, skew).valid);
}

TEST_CASE("spectrum_search finds spectra exactly when they exist") {
  // Two points at distinct angles on the 5-cycle never sum to zero: no
  // spectrum for {1, 2} in F_5.
  const PrimeModulus m5(5);
  PointSet two(m5, 1);
  two.insert_index(1);
  two.insert_index(2);
  CHECK(!spectrum_search(two).has_value());

  const PrimeModulus m3(3);
  PointSet axis(m3, 2);
  for (std::int64_t x = 0; x < 3; ++x) axis.insert(Point(m3, {x, 0}));
  const auto found = spectrum_search(axis);
  REQUIRE(found.has_value());
  CHECK(found->cardinality() == 3);
  CHECK(verify_spectral_pair(axis, *found).valid);

  PointSet single(m3, 2);
  single.insert(Point(m3, {1, 2}));
  const auto l0 = spectrum_search(single);
  REQUIRE(l0.has_value());
  CHECK(l0->cardinality() == 1);
  CHECK(l0->contains_origin());

  CHECK_THROWS_AS(spectrum_search(PointSet::full(PrimeModulus(5), 2), 12),
                  std::length_error);
}

TEST_CASE("canonical_spectrum and spectrum_search agree on every q=3 graph") {
  const PrimeModulus m(3);
  for (std::int64_t f0 = 0; f0 < 3; ++f0)
    for (std::int64_t f1 = 0; f1 < 3; ++f1)
      for (std::int64_t f2 = 0; f2 < 3; ++f2) {
        PointSet e(m, 2);
        e.insert(Point(m, {0, f0}));
        e.insert(Point(m, {1, f1}));
        e.insert(Point(m, {2, f2}));
        const PointSet canon = canonical_spectrum(e);
        CHECK(verify_spectral_pair(e, canon).valid);
        const auto searched = spectrum_search(e);
        REQUIRE(searched.has_value());
        CHECK(verify_spectral_pair(e, *searched).valid);
      }
  // A handful of graphs at q = 7 (the construction plus shifted variants).
  const PrimeModulus m7(7);
  SplitMix64 rng(123);
  for (int t = 0; t < 10; ++t) {
    PointSet e(m7, 2);
    for (std::int64_t x = 0; x < 7; ++x)
      e.insert(Point(m7, {x, static_cast<std::int64_t>(rng.next_below(7))}));
    const PointSet canon = canonical_spectrum(e);
    CHECK(verify_spectral_pair(e, canon).valid);
    const auto searched = spectrum_search(e);
    REQUIRE(searched.has_value());
    CHECK(verify_spectral_pair(e, *searched).valid);
  }
}

TEST_CASE("exhaustive F_3^2 classification: tiles have size 1, 3 or 9") {
  const PrimeModulus m(3);
  std::int64_t tile3 = 0;
  for (std::uint64_t mask = 1; mask < 512; ++mask) {
    std::set<std::int64_t> idx;
    for (std::int64_t i = 0; i < 9; ++i)
      if ((mask >> i) & 1u) idx.insert(i);
    const bool tiles = oracles::brute_tiles_by_translation(3, idx);
    const auto n = static_cast<std::int64_t>(idx.size());
    if (n != 1 && n != 3 && n != 9) {
      CHECK(!tiles);
      continue;
    }
    if (n == 1 || n == 9) {
      CHECK(tiles);
      continue;
    }
    PointSet e(m, 2);
    for (std::int64_t i : idx) e.insert_index(i);
    const bool graph = is_graph(e).has_value();
    CHECK(tiles == graph);  // size-3 tiles are exactly the graphs
    if (tiles) ++tile3;
  }
  CHECK(tile3 > 0);
}

TEST_CASE("q = 1 (mod 4) obstruction report") {
  const ObstructionReport r5 = verify_q1mod4_obstruction(PrimeModulus(5));
  CHECK(r5.s0_count == 9);
  CHECK(r5.uncovered == 8);
  CHECK(r5.confirmed);

  const ObstructionReport r13 = verify_q1mod4_obstruction(PrimeModulus(13));
  CHECK(r13.s0_count == 25);
  CHECK(r13.uncovered == 24);
  CHECK(r13.rotation_count == 12);
  CHECK(r13.confirmed);

  CHECK_THROWS_AS(verify_q1mod4_obstruction(PrimeModulus(3)), modulus_class_error);
}
