// json_io.hpp - JSON serialization for point sets, certificates and reports.
// Uses ordered JSON so identical inputs produce byte-identical files.
#pragma once

#include <string>

#include <json.hpp>

#include "fqwave/frames.hpp"
#include "fqwave/tiling.hpp"

namespace fqwave {

using Json = nlohmann::ordered_json;

inline Json to_json(const Point& p) {
  Json arr = Json::array();
  for (int i = 0; i < p.dimension(); ++i) arr.push_back(p[i]);
  return arr;
}

inline Json to_json(const PointSet& s) {
  Json j;
  j["q"] = s.modulus().q();
  j["d"] = s.dimension();
  Json pts = Json::array();
  for (const Point& p : s.points()) pts.push_back(to_json(p));
  j["points"] = pts;
  return j;
}

inline PointSet point_set_from_json(const Json& j) {
  const PrimeModulus m(j.at("q").get<std::int64_t>());
  const int d = j.at("d").get<int>();
  PointSet s(m, d);
  for (const auto& pj : j.at("points")) {
    if (!pj.is_array() || static_cast<int>(pj.size()) != d)
      throw std::invalid_argument("point set JSON: point arity does not match d");
    std::vector<std::int64_t> c;
    for (const auto& v : pj) {
      const std::int64_t value = v.get<std::int64_t>();
      if (value < 0 || value >= m.q())
        throw std::invalid_argument("point set JSON: coordinate out of [0, q)");
      c.push_back(value);
    }
    s.insert(Point(m, std::move(c)));
  }
  return s;
}

inline Json to_json(const TilingCertificate& c) {
  Json j;
  j["kind"] = c.kind;
  j["valid"] = c.valid();
  j["covered"] = c.covered;
  j["disjoint"] = c.disjoint;
  j["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
  Json hist = Json::object();
  for (const auto& [mult, count] : c.multiplicity_histogram)
    hist[std::to_string(mult)] = count;
  j["multiplicity_histogram"] = hist;
  return j;
}

inline Json to_json(const SpectralPair& p) {
  Json j;
  j["valid"] = p.valid;
  j["set_size"] = p.set.cardinality();
  j["spectrum_size"] = p.spectrum.cardinality();
  j["gram_residual"] = p.gram_residual;
  return j;
}

inline Json to_json(const FrameReport& r) {
  Json j;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["tightness_residual"] = r.tightness_residual;
  j["parseval"] = r.parseval;
  j["orthogonal"] = r.orthogonal;
  j["dim"] = r.dim;
  j["vectors"] = r.vectors;
  j["convention"] = r.convention;
  j["seed"] = r.seed;
  return j;
}

inline Json to_json(const GridFunction& f) {
  Json j;
  j["q"] = f.modulus().q();
  j["d"] = f.dimension();
  Json vals = Json::array();
  for (std::int64_t i = 0; i < f.size(); ++i)
    vals.push_back(Json::array({f[i].real(), f[i].imag()}));
  j["values"] = vals;
  return j;
}

inline GridFunction grid_function_from_json(const Json& j) {
  const PrimeModulus m(j.at("q").get<std::int64_t>());
  const int d = j.at("d").get<int>();
  GridFunction f(m, d);
  const auto& vals = j.at("values");
  if (static_cast<std::int64_t>(vals.size()) != f.size())
    throw std::invalid_argument("grid function JSON: value count does not match q^d");
  for (std::int64_t i = 0; i < f.size(); ++i)
    f[i] = Complex(vals[static_cast<std::size_t>(i)].at(0).get<double>(),
                   vals[static_cast<std::size_t>(i)].at(1).get<double>());
  return f;
}

inline Json to_json(const std::vector<Automorphism>& as) {
  Json j;
  if (!as.empty()) {
    j["q"] = as.front().modulus().q();
    j["d"] = as.front().dimension();
  }
  Json mats = Json::array();
  for (const Automorphism& a : as) {
    Json rows = Json::array();
    for (int i = 0; i < a.dimension(); ++i) {
      Json row = Json::array();
      for (int k = 0; k < a.dimension(); ++k) row.push_back(a.entry(i, k));
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  j["matrices"] = mats;
  return j;
}

inline Json to_json(const ObstructionReport& r) {
  Json j;
  j["q"] = r.q;
  j["s0_count"] = r.s0_count;
  j["uncovered"] = r.uncovered;
  j["rotation_count"] = r.rotation_count;
  j["confirmed"] = r.confirmed;
  return j;
}

inline Json to_json(const TightFramePart& p) {
  Json j;
  j["bound_fit"] = p.bound_fit;
  j["residual"] = p.residual;
  j["certified"] = p.certified;
  return j;
}

inline Json to_json(const PfCertificate& c) {
  Json j;
  j["expected_bound"] = c.expected_bound;
  j["part1"] = to_json(c.part1);
  j["part2_worst"] = to_json(c.part2_worst);
  j["part2_bound_spread"] = c.part2_bound_spread;
  j["part3"] = to_json(c.part3);
  j["part4_applicable"] = c.part4_applicable;
  j["part4_note"] = c.part4_note;
  if (c.part4_applicable) j["part4"] = to_json(c.part4);
  j["parts123_certified"] = c.parts123_certified();
  return j;
}

inline Json to_json(const ConverseReport& r) {
  Json j;
  j["measured_lower"] = r.measured_lower;
  j["measured_upper"] = r.measured_upper;
  j["coverage_ok"] = r.coverage_ok;
  j["missing_count"] = r.missing_count;
  j["disjoint"] = r.disjoint;
  j["overlap_witness"] = r.overlap_witness ? to_json(*r.overlap_witness) : Json(nullptr);
  j["pair_checked"] = r.pair_checked;
  j["pair_certified"] = r.pair_certified;
  j["pair_bound"] = r.pair_bound;
  j["pair_residual"] = r.pair_residual;
  return j;
}

inline Json to_json(const FalsificationReport& r) {
  Json j;
  j["q"] = r.q;
  j["d"] = r.d;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["configurations"] = r.configurations;
  j["exhaustive_configurations"] = r.exhaustive_configurations;
  j["threshold"] = r.threshold;
  j["min_residual"] = r.min_residual;
  j["impossibility_confirmed"] = r.impossibility_confirmed;
  return j;
}

inline Json to_json(const DuplicationReport& r) {
  Json j;
  j["base_lower"] = r.base_lower;
  j["base_upper"] = r.base_upper;
  j["doubled_lower"] = r.doubled_lower;
  j["doubled_upper"] = r.doubled_upper;
  j["halved_claim"] = r.halved_claim;
  j["halved_reproduced"] = r.halved_reproduced;
  j["additivity_confirmed"] = r.additivity_confirmed;
  return j;
}

inline Json to_json(const FullSpaceOnbReport& r) {
  Json j;
  j["q"] = r.q;
  j["d"] = r.d;
  j["vector_count"] = r.vector_count;
  j["gram_residual"] = r.gram_residual;
  j["tight_bound"] = r.tight_bound;
  j["onb"] = r.onb;
  return j;
}

inline Json to_json(const OriginQuestionReport& r) {
  Json j;
  j["q"] = r.q;
  j["configurations"] = r.configurations;
  j["counterexamples"] = r.counterexamples;
  j["worst_gram_offdiag"] = r.worst_gram_offdiag;
  j["origin_membership_possible"] = r.origin_membership_possible;
  return j;
}

}  // namespace fqwave
