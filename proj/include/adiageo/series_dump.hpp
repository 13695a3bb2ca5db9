#pragma once

// Golden-file serialization of the quartic perturbation series. Every term
// becomes one record {order, harmonic, trig, num, den, e2_I, e2_m, e2_k}
// with the rational in canonical reduced form; emission order and key order
// are fixed, so repeated dumps are byte-identical.

#include "adiageo/trig_series.hpp"

#include <string>
#include <vector>

namespace adiageo::series_dump {

struct TermRecord {
  int order = 0;
  int harmonic = 0;
  bool is_sin = false;
  long long num = 0;
  long long den = 1;
  int e2_I = 0, e2_m = 0, e2_k = 0;
};

struct NamedSeries {
  std::string name;
  std::vector<TermRecord> terms;
};

std::vector<TermRecord> records_of(const series::TrigSeries& t, int order);
std::vector<TermRecord> records_of(const series::PerturbationSeries& s);
/// Scalar per-order coefficients (metric components): harmonic 0, cos.
std::vector<TermRecord> records_of(const std::vector<series::CoefficientPoly>& c);

/// target is one of "W", "G", "metric"; throws std::invalid_argument else.
std::vector<NamedSeries> collect(const std::string& target);

/// The byte-stable JSON document for a target.
std::string dump_json(const std::string& target);

}  // namespace adiageo::series_dump
