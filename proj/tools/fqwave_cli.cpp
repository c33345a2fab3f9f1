// fqwave_cli.cpp - command-line front end: construct wavelet frame sets, run
// tiling/spectral/frame certificates, and execute the demo experiments.
// Exit codes: 0 certified valid (or demo confirmed), 1 certified invalid,
// 2 usage or domain error, 3 I/O or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fqwave/json_io.hpp"

namespace {

using namespace fqwave;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    Json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
  if (!out) throw IoError("failed writing " + path);
}

void emit(const Json& report, const std::string& out_path, bool to_stdout) {
  if (!out_path.empty()) write_json_file(out_path, report);
  if (to_stdout) std::cout << report.dump(2) << "\n";
}

/// Rotation group for the set's home space; powers of the generator, block
/// lifted above dimension two, optionally restricted to selected powers.
std::vector<Automorphism> dilation_family(PrimeModulus m, int d,
                                          const std::vector<std::int64_t>& powers) {
  std::vector<Automorphism> group = rotation_group(m);
  if (d > 2)
    for (Automorphism& a : group) a = block_lift(a, d);
  if (powers.empty()) return group;
  std::vector<Automorphism> picked;
  for (std::int64_t p : powers) {
    if (p < 0 || p >= static_cast<std::int64_t>(group.size()))
      throw std::invalid_argument("--powers: index out of [0, q]");
    picked.push_back(group[static_cast<std::size_t>(p)]);
  }
  return picked;
}

/// {t e2 : t in F_q}, the canonical translational partner of a graph set.
PointSet column_partner(PrimeModulus m, int d) {
  PointSet s(m, d);
  for (std::int64_t t = 0; t < m.q(); ++t) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(d), 0);
    c[1] = t;
    s.insert(Point(m, std::move(c)));
  }
  return s;
}

/// Default spectrum: canonical for a planar graph set; for a lifted product
/// set B x F_q^(d-2) the product of the base spectrum with the full factor.
PointSet default_spectrum(const PointSet& e) {
  if (e.dimension() == 2) return canonical_spectrum(e);
  const PrimeModulus m = e.modulus();
  const int extra = e.dimension() - 2;
  PointSet base(m, 2);
  for (const Point& p : e.points()) base.insert(Point(m, {p[0], p[1]}));
  if (base.product_with_full(extra) != e)
    throw std::invalid_argument(
        "set is not a product B x F_q^(d-2); pass --spectrum explicitly");
  return canonical_spectrum(base).product_with_full(extra);
}

int cmd_construct(std::int64_t q, int d, const std::string& out,
                  const std::string& rotations_out, const std::string& spectrum_out,
                  bool json_stdout) {
  const PrimeModulus m(q);
  if (m.mod4() == 1) {
    const ObstructionReport obs = verify_q1mod4_obstruction(m);
    std::cerr << "error: q = " << q << " = 1 (mod 4) unsupported: S_0 has "
              << obs.s0_count << " points, so rotational orbits leave "
              << obs.uncovered
              << " of them uncovered and no rotational wavelet frame set exists\n";
    return kExitUsage;
  }
  const PointSet e = construct_wavelet_frame_set(m, d);
  const std::int64_t k = find_k(m).value();

  std::cout << "q = " << q << ", d = " << d << ", #E = " << e.cardinality()
            << ", k = " << k << "\n";
  if (d == 2) {
    std::cout << "circle intersections:";
    for (std::int64_t r = 0; r < q; ++r) {
      const PointSet sr = circle(m, FieldElement(r, m)).points;
      std::int64_t hits = 0;
      for (const Point& p : e.points())
        if (sr.contains(p)) ++hits;
      std::cout << " S_" << r << ":" << hits;
    }
    std::cout << "\n";
  }

  emit(to_json(e), out, json_stdout);
  if (!rotations_out.empty())
    write_json_file(rotations_out, to_json(dilation_family(m, d, {})));
  if (!spectrum_out.empty()) write_json_file(spectrum_out, to_json(default_spectrum(e)));
  return kExitValid;
}

int cmd_verify(const std::string& set_path, const std::string& check,
               const std::string& partner_path, const std::string& spectrum_path,
               const std::vector<std::int64_t>& powers, const std::string& out,
               double tol, bool json_stdout) {
  const PointSet e = point_set_from_json(read_json_file(set_path));
  const PrimeModulus m = e.modulus();

  Json report;
  bool all_valid = true;

  // "all" certifies the admissible-set property, whose multiplicative part
  // concerns E*; a lone multiplicative check applies to the set as given.
  auto run_multiplicative = [&](bool star) {
    const TilingCertificate cert = verify_multiplicative_tiling(
        star ? e.star() : e, dilation_family(m, e.dimension(), powers));
    report["multiplicative"] = to_json(cert);
    all_valid = all_valid && cert.valid();
    std::cout << "multiplicative" << (star ? " (of E*)" : "") << ": "
              << (cert.valid() ? "valid" : "INVALID") << "\n";
  };
  auto run_translational = [&]() {
    const PointSet partner = partner_path.empty()
                                 ? column_partner(m, e.dimension())
                                 : point_set_from_json(read_json_file(partner_path));
    const TilingCertificate cert = verify_translational_tiling(e, partner);
    report["translational"] = to_json(cert);
    all_valid = all_valid && cert.valid();
    std::cout << "translational: " << (cert.valid() ? "valid" : "INVALID") << "\n";
  };
  auto run_spectral = [&]() {
    const PointSet spectrum = spectrum_path.empty()
                                  ? default_spectrum(e)
                                  : point_set_from_json(read_json_file(spectrum_path));
    const SpectralPair sp = verify_spectral_pair(e, spectrum, tol);
    report["spectral"] = to_json(sp);
    all_valid = all_valid && sp.valid;
    std::cout << "spectral: " << (sp.valid ? "valid" : "INVALID") << " (gram residual "
              << sp.gram_residual << ")\n";
  };

  if (check == "multiplicative") {
    run_multiplicative(false);
  } else if (check == "translational") {
    run_translational();
  } else if (check == "spectral") {
    run_spectral();
  } else if (check == "all") {
    run_translational();
    run_multiplicative(true);
    run_spectral();
    report["all_valid"] = all_valid;
  } else {
    throw std::invalid_argument(
        "--check must be multiplicative, translational, spectral or all");
  }

  emit(check == "all" ? report : report.begin().value(), out, json_stdout);
  return all_valid ? kExitValid : kExitInvalid;
}

int cmd_analyze(const std::string& set_path, const std::vector<std::int64_t>& powers,
                const std::string& out, double tol, std::uint64_t seed,
                TransformConvention conv, bool json_stdout) {
  const PointSet e = point_set_from_json(read_json_file(set_path));
  const PrimeModulus m = e.modulus();
  const std::vector<Automorphism> a = dilation_family(m, e.dimension(), powers);
  const PointSet l = default_spectrum(e);
  const WaveletSystem w = build_system(mother_wavelet(e, conv), a, l);
  const PointSet y = PointSet::full(m, e.dimension()).star();

  FrameReport rep = frame_bounds(w, y, tol, seed);
  rep.convention = convention_name(conv);

  std::cout << "frame bounds on PW_Y: A = " << rep.lower << ", B = " << rep.upper
            << ", vectors = " << rep.vectors << ", dim = " << rep.dim
            << (rep.parseval ? " (Parseval)" : "") << "\n";
  emit(to_json(rep), out, json_stdout);
  return rep.parseval ? kExitValid : kExitInvalid;
}

int cmd_search_spectrum(const std::string& set_path, std::int64_t limit,
                        const std::string& out, bool json_stdout) {
  const PointSet e = point_set_from_json(read_json_file(set_path));
  const auto found = spectrum_search(e, limit);
  if (!found) {
    std::cout << "no spectrum of size " << e.cardinality() << " exists\n";
    emit(Json{{"found", false}, {"set_size", e.cardinality()}}, out, json_stdout);
    return kExitInvalid;
  }
  std::cout << "spectrum found (" << found->cardinality() << " points)\n";
  Json rep{{"found", true}};
  rep["spectrum"] = to_json(*found);
  emit(rep, out, json_stdout);
  return kExitValid;
}

int cmd_demo(const std::string& kind, std::int64_t q, int d, std::int64_t trials,
             std::uint64_t seed, double tol, const std::string& out, bool json_stdout) {
  const PrimeModulus m(q);
  if (kind == "no-parseval") {
    const FalsificationReport rep = demo_no_full_space_parseval(m, d, trials, seed);
    std::cout << "configurations: " << rep.configurations
              << ", min residual: " << rep.min_residual
              << (rep.impossibility_confirmed ? " (no Parseval system found)"
                                              : " (THRESHOLD CROSSED)")
              << "\n";
    emit(to_json(rep), out, json_stdout);
    return rep.impossibility_confirmed ? kExitValid : kExitInvalid;
  }
  if (kind == "duplicate") {
    const DuplicationReport rep = duplication_demo(m, tol);
    std::cout << "base bounds: [" << rep.base_lower << ", " << rep.base_upper
              << "], doubled bounds: [" << rep.doubled_lower << ", " << rep.doubled_upper
              << "]; halved value " << rep.halved_claim
              << (rep.halved_reproduced ? " reproduced" : " NOT reproduced") << "\n";
    emit(to_json(rep), out, json_stdout);
    return rep.additivity_confirmed && !rep.halved_reproduced ? kExitValid : kExitInvalid;
  }
  if (kind == "q1mod4") {
    const ObstructionReport rep = verify_q1mod4_obstruction(m);
    std::cout << "#S_0 = " << rep.s0_count << ", uncovered = " << rep.uncovered
              << " of the zero circle under " << rep.rotation_count << " rotations\n";
    emit(to_json(rep), out, json_stdout);
    return rep.confirmed ? kExitValid : kExitInvalid;
  }
  if (kind == "full-onb") {
    const FullSpaceOnbReport rep = full_space_translation_onb(m, d, tol);
    std::cout << "full-space translation system: " << rep.vector_count
              << " vectors, gram residual " << rep.gram_residual
              << (rep.onb ? " (orthonormal basis)" : " (NOT an ONB)") << "\n";
    emit(to_json(rep), out, json_stdout);
    return rep.onb ? kExitValid : kExitInvalid;
  }
  if (kind == "origin-question") {
    const OriginQuestionReport rep = origin_membership_scan(m, tol);
    std::cout << "scanned " << rep.configurations << " two-point sets; "
              << rep.counterexamples
              << " give an orthogonal basis of PW_Y with 0 in E\n";
    emit(to_json(rep), out, json_stdout);
    return rep.origin_membership_possible ? kExitValid : kExitInvalid;
  }
  throw std::invalid_argument(
      "demo kind must be no-parseval, duplicate, q1mod4, full-onb or origin-question");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wavelet frame sets over F_q^d: construction and certification"};
  app.require_subcommand(1);

  std::int64_t q = 3;
  int d = 2;
  std::uint64_t seed = 42;
  std::int64_t trials = 1000;
  double tol = 1e-9;
  std::string convention = "unitary";
  bool json_stdout = false;
  std::string out, set_path, partner_path, spectrum_path, rotations_out, spectrum_out;
  std::string check = "all", demo_kind;
  std::vector<std::int64_t> powers;
  std::int64_t limit = 12;

  auto* construct = app.add_subcommand("construct", "construct a wavelet frame set");
  construct->add_option("--q", q, "odd prime modulus, q = 3 (mod 4)")->required();
  construct->add_option("--d", d, "dimension (>= 2)");
  construct->add_option("--out", out, "write the set as JSON");
  construct->add_option("--rotations-out", rotations_out, "write the rotation group");
  construct->add_option("--spectrum-out", spectrum_out, "write the canonical spectrum");
  construct->add_flag("--json", json_stdout, "print the set JSON to stdout");

  auto* verify = app.add_subcommand("verify", "run tiling/spectral certificates");
  verify->add_option("--set", set_path, "point set JSON file")->required();
  verify->add_option("--check", check, "multiplicative | translational | spectral | all");
  verify->add_option("--partner", partner_path, "translation partner JSON");
  verify->add_option("--spectrum", spectrum_path, "spectrum JSON");
  verify->add_option("--powers", powers, "restrict rotation powers (indices 0..q)");
  verify->add_option("--out", out, "write the certificate JSON");
  verify->add_option("--tol", tol, "certificate tolerance");
  verify->add_flag("--json", json_stdout, "print the certificate JSON to stdout");

  auto* analyze = app.add_subcommand("analyze", "frame bounds of the wavelet system");
  analyze->add_option("--set", set_path, "point set JSON file")->required();
  analyze->add_option("--powers", powers, "restrict rotation powers (indices 0..q)");
  analyze->add_option("--out", out, "write the frame report JSON");
  analyze->add_option("--tol", tol, "certificate tolerance");
  analyze->add_option("--seed", seed, "seed recorded in the report");
  analyze->add_option("--convention", convention, "unitary | paper");
  analyze->add_flag("--json", json_stdout, "print the report JSON to stdout");

  auto* search = app.add_subcommand("search-spectrum", "brute-force spectrum search");
  search->add_option("--set", set_path, "point set JSON file")->required();
  search->add_option("--limit", limit, "largest #E accepted by the search");
  search->add_option("--out", out, "write the result JSON");
  search->add_flag("--json", json_stdout, "print the result JSON to stdout");

  auto* demo = app.add_subcommand("demo", "falsification and counterexample runs");
  demo->add_option("kind", demo_kind,
                   "no-parseval | duplicate | q1mod4 | full-onb | origin-question")
      ->required();
  demo->add_option("--q", q, "odd prime modulus")->required();
  demo->add_option("--d", d, "dimension");
  demo->add_option("--trials", trials, "random configurations");
  demo->add_option("--seed", seed, "random seed");
  demo->add_option("--tol", tol, "certificate tolerance");
  demo->add_option("--out", out, "write the report JSON");
  demo->add_flag("--json", json_stdout, "print the report JSON to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (construct->parsed())
      return cmd_construct(q, d, out, rotations_out, spectrum_out, json_stdout);
    if (verify->parsed())
      return cmd_verify(set_path, check, partner_path, spectrum_path, powers, out, tol,
                        json_stdout);
    if (analyze->parsed()) {
      if (convention != "unitary" && convention != "paper")
        throw std::invalid_argument("--convention must be unitary or paper");
      return cmd_analyze(set_path, powers, out, tol, seed,
                         convention == "paper" ? TransformConvention::paper
                                               : TransformConvention::unitary,
                         json_stdout);
    }
    if (search->parsed()) return cmd_search_spectrum(set_path, limit, out, json_stdout);
    if (demo->parsed()) return cmd_demo(demo_kind, q, d, trials, seed, tol, out, json_stdout);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
