#include "adiageo/series_dump.hpp"

#include "adiageo/quartic.hpp"

#include <json.hpp>

#include <stdexcept>

namespace adiageo::series_dump {

using series::CoefficientPoly;
using series::PerturbationSeries;
using series::Rational;
using series::TrigSeries;

namespace {

long long to_ll(const boost::multiprecision::cpp_int& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw std::overflow_error("series coefficient exceeds 64 bits");
  return v.convert_to<long long>();
}

void append_poly(std::vector<TermRecord>& out, const CoefficientPoly& poly,
                 int order, int harmonic, bool is_sin) {
  for (const auto& [mono, c] : poly.terms()) {
    TermRecord r;
    r.order = order;
    r.harmonic = harmonic;
    r.is_sin = is_sin;
    r.num = to_ll(numerator(c));
    r.den = to_ll(denominator(c));
    r.e2_I = mono.ei2;
    r.e2_m = mono.em2;
    r.e2_k = mono.ek2;
    out.push_back(r);
  }
}

}  // namespace

std::vector<TermRecord> records_of(const TrigSeries& t, int order) {
  std::vector<TermRecord> out;
  for (const auto& [h, parts] : t.harmonics()) {
    append_poly(out, parts.first, order, h, false);
    append_poly(out, parts.second, order, h, true);
  }
  return out;
}

std::vector<TermRecord> records_of(const PerturbationSeries& s) {
  std::vector<TermRecord> out;
  for (int mu = 0; mu <= s.order(); ++mu) {
    auto part = records_of(s.at(mu), mu);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<TermRecord> records_of(const std::vector<CoefficientPoly>& c) {
  std::vector<TermRecord> out;
  for (size_t mu = 0; mu < c.size(); ++mu)
    append_poly(out, c[mu], static_cast<int>(mu), 0, false);
  return out;
}

std::vector<NamedSeries> collect(const std::string& target) {
  const auto& pr = quartic::pipeline();
  std::vector<NamedSeries> out;
  if (target == "W") {
    for (int mu = 1; mu <= 3; ++mu)
      out.push_back({"W" + std::to_string(mu), records_of(pr.w[mu - 1], mu)});
  } else if (target == "G") {
    const char* names[3] = {"G_m", "G_k", "G_lambda"};
    for (int i = 0; i < 3; ++i)
      out.push_back({names[i], records_of(pr.generators[i])});
  } else if (target == "metric") {
    const char* names[6] = {"g11", "g12", "g13", "g22", "g23", "g33"};
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        const int c = quartic::component_index(i, j);
        out.push_back({names[c], records_of(pr.metric[c])});
      }
  } else {
    throw std::invalid_argument("unknown series target: " + target);
  }
  return out;
}

std::string dump_json(const std::string& target) {
  nlohmann::json doc;
  doc["target"] = target;
  auto& arr = doc["series"] = nlohmann::json::array();
  for (const auto& s : collect(target)) {
    nlohmann::json js;
    js["name"] = s.name;
    auto& terms = js["terms"] = nlohmann::json::array();
    for (const auto& t : s.terms) {
      nlohmann::json jt;
      jt["order"] = t.order;
      jt["harmonic"] = t.harmonic;
      jt["trig"] = t.is_sin ? "sin" : "cos";
      jt["num"] = t.num;
      jt["den"] = t.den;
      jt["e2_I"] = t.e2_I;
      jt["e2_m"] = t.e2_m;
      jt["e2_k"] = t.e2_k;
      terms.push_back(jt);
    }
    arr.push_back(js);
  }
  // nlohmann::json orders object keys alphabetically; with the sorted keys
  // and fixed array order the byte stream is reproducible
  return doc.dump(2) + "\n";
}

}  // namespace adiageo::series_dump
