#include <catch2/catch_amalgamated.hpp>

#include "fqwave/frames.hpp"
#include "oracles.hpp"

using namespace fqwave;

namespace {

WaveletSystem construction_system(PrimeModulus m) {
  const PointSet e = construct_wavelet_frame_set(m);
  return build_system(mother_wavelet(e), rotation_group(m), canonical_spectrum(e));
}

}  // namespace

TEST_CASE("mother_wavelet normalization") {
  const PrimeModulus m(3);

  PointSet origin_only(m, 2);
  origin_only.insert_index(0);
  CHECK(mother_wavelet(origin_only).norm() == 0.0);  // E* is empty

  const PointSet e = construct_wavelet_frame_set(m);
  const GridFunction psi = mother_wavelet(e);
  CHECK(psi.norm2() == Catch::Approx(2.0 / 3.0).epsilon(1e-12));

  // dft(psi) recovers (#E)^(-1/2) 1_{E*}.
  const GridFunction hat = dft(psi);
  const PointSet estar = e.star();
  for (std::int64_t i = 0; i < hat.size(); ++i) {
    const Complex expect =
        estar.contains_index(i) ? Complex(1.0 / std::sqrt(3.0), 0.0) : Complex(0.0, 0.0);
    CHECK(std::abs(hat[i] - expect) < 1e-12);
  }

  CHECK_THROWS_AS(mother_wavelet(PointSet(m, 2)), std::invalid_argument);
}

TEST_CASE("build_system materializes #A * #L unit-norm copies") {
  const PrimeModulus m(3);
  const PointSet e = construct_wavelet_frame_set(m);
  const GridFunction psi = mother_wavelet(e);

  PointSet l0(m, 2);
  l0.insert_index(0);
  const WaveletSystem tiny = build_system(psi, {Automorphism::identity(m, 2)}, l0);
  REQUIRE(tiny.vectors.size() == 1);
  for (std::int64_t i = 0; i < psi.size(); ++i)
    CHECK(std::abs(tiny.vectors[0][i] - psi[i]) == 0.0);

  const WaveletSystem w = construction_system(m);
  CHECK(w.vectors.size() == 12);  // (q + 1) * q = 4 * 3
  for (const GridFunction& v : w.vectors)
    CHECK(std::abs(v.norm() - psi.norm()) < 1e-12);

  const PrimeModulus m7(7);
  const WaveletSystem w7 = construction_system(m7);
  CHECK(w7.vectors.size() == 56);  // 8 * 7
}

TEST_CASE("frame_operator on a single unit vector is a rank-one projector") {
  const PrimeModulus m(3);
  PointSet single(m, 2);
  single.insert(Point(m, {1, 2}));
  const GridFunction psi = idft(GridFunction::indicator(single));  // unit norm
  PointSet l0(m, 2);
  l0.insert_index(0);
  const WaveletSystem w = build_system(psi, {Automorphism::identity(m, 2)}, l0);
  const CMatrix s = frame_operator(w, PointSet::full(m, 2));
  CHECK(s.trace_real() == Catch::Approx(1.0).margin(1e-12));
  const auto eig = hermitian_eigenvalues(s);
  CHECK(std::abs(eig.back() - 1.0) < 1e-12);
  for (std::size_t i = 0; i + 1 < eig.size(); ++i) CHECK(std::abs(eig[i]) < 1e-12);
}

TEST_CASE("the construction is Parseval on PW_Y and duplication doubles it") {
  const PrimeModulus m(3);
  const WaveletSystem w = construction_system(m);
  const PointSet y = PointSet::full(m, 2).star();

  const FrameReport rep = frame_bounds(w, y);
  CHECK(rep.parseval);
  CHECK(std::abs(rep.lower - 1.0) < 1e-9);
  CHECK(std::abs(rep.upper - 1.0) < 1e-9);
  CHECK(rep.tightness_residual < 1e-9);
  CHECK(rep.dim == 8);
  CHECK(rep.vectors == 12);
  CHECK(!rep.orthogonal);  // 12 nonzero vectors in dimension 8

  // frame operator entries double under W u W.
  const CMatrix s1 = frame_operator(w, y);
  const CMatrix s2 = frame_operator(duplicated(w), y);
  for (int i = 0; i < s1.n; ++i)
    for (int j = 0; j < s1.n; ++j) CHECK(std::abs(s2(i, j) - 2.0 * s1(i, j)) < 1e-12);

  const FrameReport rep2 = frame_bounds(duplicated(w), y);
  CHECK(std::abs(rep2.lower - 2.0) < 1e-9);
  CHECK(std::abs(rep2.upper - 2.0) < 1e-9);
  CHECK(!rep2.parseval);
}

TEST_CASE("dropping a rotation collapses the lower frame bound to zero") {
  const PrimeModulus m(3);
  const PointSet e = construct_wavelet_frame_set(m);
  auto group = rotation_group(m);
  group.erase(group.begin() + 1);
  const WaveletSystem w = build_system(mother_wavelet(e), group, canonical_spectrum(e));
  const FrameReport rep = frame_bounds(w, PointSet::full(m, 2).star());
  CHECK(std::abs(rep.lower) < 1e-12);
  CHECK(!rep.parseval);
}

TEST_CASE("full-space system of a punctured indicator has a zero direction") {
  // With 0 not in E the frame operator annihilates the zero-frequency line.
  const PrimeModulus m(3);
  const PointSet sector = construct_sector_set(m);
  const GridFunction psi = idft(GridFunction::indicator(sector));
  const WaveletSystem w =
      build_system(psi, rotation_group(m), PointSet::full(m, 2));
  const CMatrix s = frame_operator(w, PointSet::full(m, 2));
  for (int j = 0; j < s.n; ++j) CHECK(std::abs(s(0, j)) < 1e-12);
  const auto eig = hermitian_eigenvalues(s);
  CHECK(std::abs(eig.front()) < 1e-12);
}

TEST_CASE("Rayleigh sampling brackets the eigensolver bounds") {
  for (std::int64_t q : {3, 7}) {
    const PrimeModulus m(q);
    const WaveletSystem w = construction_system(m);
    const PointSet y = PointSet::full(m, 2).star();
    const FrameReport rep = frame_bounds(w, y);
    const auto [lo, hi] = rayleigh_extremes(w, y, 200, 20240601);
    CHECK(lo >= rep.lower - 1e-8);
    CHECK(hi <= rep.upper + 1e-8);
    // Parseval certificate matches the direct frame inequality.
    CHECK(std::abs(lo - 1.0) <= 1e-8);
    CHECK(std::abs(hi - 1.0) <= 1e-8);
  }
}

TEST_CASE("redundancy is exactly q/(q-1) for the construction") {
  for (std::int64_t q : {3, 7, 11}) {
    const PrimeModulus m(q);
    const WaveletSystem w = construction_system(m);
    const FrameReport rep = frame_bounds(w, PointSet::full(m, 2).star());
    CHECK(rep.vectors == q * (q + 1));
    CHECK(rep.dim == q * q - 1);
    CHECK(rep.vectors * (q - 1) == rep.dim * q);  // q(q+1)(q-1) = (q^2-1) q
  }
}

TEST_CASE("scaling the mother scales both bounds by |c|^2") {
  const PrimeModulus m(3);
  const PointSet e = construct_wavelet_frame_set(m);
  const Complex c(0.0, -1.5);  // |c|^2 = 2.25
  const WaveletSystem w =
      build_system(c * mother_wavelet(e), rotation_group(m), canonical_spectrum(e));
  const FrameReport rep = frame_bounds(w, PointSet::full(m, 2).star());
  CHECK(std::abs(rep.lower - 2.25) < 1e-9);
  CHECK(std::abs(rep.upper - 2.25) < 1e-9);
}

TEST_CASE("certify_pf_theorem on the construction: parts 1-3 at bound #E") {
  const PrimeModulus m(3);
  const PointSet e = construct_wavelet_frame_set(m);
  const PointSet l = canonical_spectrum(e);
  const auto group = rotation_group(m);

  const PfCertificate cert = certify_pf_theorem(e, l, group);
  CHECK(cert.expected_bound == 3.0);
  CHECK(cert.part1.certified);
  CHECK(cert.part1.bound_fit == Catch::Approx(3.0).margin(1e-9));
  CHECK(cert.part2_worst.certified);
  CHECK(cert.part2_bound_spread < 1e-9);  // every dilate shares the bound
  CHECK(cert.part3.certified);
  CHECK(cert.part3.bound_fit == Catch::Approx(3.0).margin(1e-9));
  CHECK(cert.parts123_certified());
  CHECK(!cert.part4_applicable);  // 0 in E
  CHECK(cert.part4_note.find("0 in E") != std::string::npos);

  // Preconditions are enforced.
  PointSet tiny(m, 2);
  tiny.insert_index(0);
  CHECK_THROWS_AS(certify_pf_theorem(e, tiny, group), std::invalid_argument);
}

TEST_CASE("certify_pf_theorem part 4: singleton set with the similarity group") {
  const PrimeModulus m(3);
  PointSet e(m, 2);
  e.insert(Point(m, {1, 0}));
  PointSet l(m, 2);
  l.insert_index(0);
  const auto sims = similarity_group(m);

  const PfCertificate cert = certify_pf_theorem(e, l, sims);
  CHECK(cert.parts123_certified());
  CHECK(cert.expected_bound == 1.0);
  CHECK(cert.part4_applicable);
  CHECK(cert.part4.certified);  // orthonormal basis of L^2(Y)
}

TEST_CASE("certify_converse on the construction and on W u W") {
  const PrimeModulus m(3);
  const PointSet e = construct_wavelet_frame_set(m);
  const auto group = rotation_group(m);
  const WaveletSystem w = construction_system(m);

  const ConverseReport good = certify_converse(w, e, group);
  CHECK(good.coverage_ok);
  CHECK(good.missing_count == 0);
  CHECK(good.disjoint);
  CHECK(good.pair_checked);
  CHECK(good.pair_certified);
  CHECK(good.pair_bound == Catch::Approx(3.0).margin(1e-9));

  // The doubled system is tight (bound 2) but its support multiset overlaps.
  std::vector<Automorphism> doubled_a = group;
  doubled_a.insert(doubled_a.end(), group.begin(), group.end());
  const ConverseReport dup = certify_converse(duplicated(w), e, doubled_a);
  CHECK(dup.coverage_ok);
  CHECK(!dup.disjoint);
  REQUIRE(dup.overlap_witness.has_value());
  CHECK(std::abs(dup.measured_lower - 2.0) < 1e-9);

  // A non-tight system is rejected outright.
  auto missing = group;
  missing.pop_back();
  const WaveletSystem bad = build_system(mother_wavelet(e), missing, canonical_spectrum(e));
  CHECK_THROWS_AS(certify_converse(bad, e, missing), std::invalid_argument);
}

TEST_CASE("no full-space Parseval system: exhaustive q=3 d=1") {
  const FalsificationReport rep =
      demo_no_full_space_parseval(PrimeModulus(3), 1, /*trials=*/50, /*seed=*/42);
  CHECK(rep.exhaustive_configurations == 126);  // 6 sets x 3 A-subsets x 7 lambdas
  CHECK(rep.configurations == 126 + 50);
  CHECK(rep.min_residual > 1e-6);
  CHECK(rep.impossibility_confirmed);
  CHECK_THROWS_AS(demo_no_full_space_parseval(PrimeModulus(3), 3, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("no full-space Parseval system: random q=3 d=2 configurations") {
  const FalsificationReport rep =
      demo_no_full_space_parseval(PrimeModulus(3), 2, /*trials=*/100, /*seed=*/42);
  CHECK(rep.exhaustive_configurations == 510);  // all nonempty proper subsets
  CHECK(rep.min_residual > 1e-6);
  CHECK(rep.impossibility_confirmed);

  // Reproducibility: identical (seed, trials) gives identical reports.
  const FalsificationReport again =
      demo_no_full_space_parseval(PrimeModulus(3), 2, 100, 42);
  CHECK(again.min_residual == rep.min_residual);
  CHECK(again.configurations == rep.configurations);
}

TEST_CASE("the full-space translation system is an orthonormal basis") {
  const FullSpaceOnbReport rep = full_space_translation_onb(PrimeModulus(3), 1);
  CHECK(rep.onb);
  CHECK(rep.vector_count == 3);
  CHECK(rep.gram_residual < 1e-12);
  CHECK(rep.tight_bound == Catch::Approx(3.0).margin(1e-9));

  const FullSpaceOnbReport rep2 = full_space_translation_onb(PrimeModulus(3), 2);
  CHECK(rep2.onb);
  CHECK(rep2.tight_bound == Catch::Approx(9.0).margin(1e-9));
}

TEST_CASE("duplication_demo measures additive bounds, not the halved value") {
  const DuplicationReport rep = duplication_demo(PrimeModulus(3));
  CHECK(rep.base_lower == Catch::Approx(1.0).margin(1e-9));
  CHECK(rep.base_upper == Catch::Approx(1.0).margin(1e-9));
  CHECK(rep.doubled_lower == Catch::Approx(2.0).margin(1e-9));
  CHECK(rep.doubled_upper == Catch::Approx(2.0).margin(1e-9));
  CHECK(rep.halved_claim == Catch::Approx(0.5).margin(1e-9));
  CHECK(!rep.halved_reproduced);
  CHECK(rep.additivity_confirmed);
}

TEST_CASE("orthogonal bases of PW_Y with 0 in E exist (two-point sets)") {
  const OriginQuestionReport rep = origin_membership_scan(PrimeModulus(3));
  CHECK(rep.configurations == 8);
  CHECK(rep.counterexamples == 8);
  CHECK(rep.origin_membership_possible);
}
