#pragma once

// JSON and TSV renderings of library values.

#include "ucm/selfdual.hpp"

#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

namespace ucm {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) { return Json(p.parts()); }

/// [[orbit-string, [parts...]], ...] in canonical orbit order.
inline Json to_json(const MultiPartition& mp) {
  Json out = Json::array();
  for (const auto& [orbit, part] : mp.entries()) out.push_back(Json::array({to_string(orbit), to_json(part)}));
  return out;
}

inline MultiPartition multipartition_from_json(const Json& j, Side side) {
  require(j.is_array(), "multipartition_from_json: expected an array");
  MultiPartition mp(side);
  for (const auto& entry : j) {
    require(entry.is_array() && entry.size() == 2, "multipartition_from_json: expected [orbit, parts]");
    const OrbitLabel orbit = parse_orbit(entry[0].get<std::string>());
    require(mp.at(orbit).empty(), "multipartition_from_json: repeated orbit");
    mp.set(orbit, Partition(entry[1].get<std::vector<int>>()));
  }
  return mp;
}

/// Integers that fit are JSON numbers, larger ones decimal strings.
inline Json to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(z));
  }
  return Json(z.str());
}

inline Json to_json(const ClassData& c) {
  return Json{{"label", to_json(c.label)}, {"centralizer", to_json(c.centralizer_order)}, {"size", to_json(c.class_size)}};
}

inline Json to_json(const Census& c) {
  return Json{{"q", c.q},
              {"n", c.n},
              {"symplectic", to_json(c.symplectic)},
              {"orthogonal", to_json(c.orthogonal)},
              {"real_total", to_json(c.real_total)},
              {"route_agreement", c.route_agreement}};
}

inline Json to_json(const SelfDualFactorization& f) {
  Json pairs = Json::array();
  for (const auto& [v, k] : f.pairs) {
    pairs.push_back(Json{{"v", to_string(v)}, {"dual", to_string(dual_poly(v))}, {"multiplicity", k}});
  }
  Json selfduals = Json::array();
  for (const auto& [r, k] : f.selfduals) selfduals.push_back(Json{{"r", to_string(r)}, {"multiplicity", k}});
  return Json{{"s", f.s}, {"t", f.t}, {"pairs", pairs}, {"selfduals", selfduals}};
}

/// Decimal approximation of a cyclotomic number; display only.
inline std::complex<double> approximate(const Cyclotomic& a) {
  std::complex<double> sum = 0;
  const double step = 2.0 * std::acos(-1.0) / static_cast<double>(a.modulus());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    sum += a.coeffs()[i].convert_to<double>() * std::polar(1.0, step * static_cast<double>(i));
  }
  return sum;
}

inline std::string approx_string(const Cyclotomic& a) {
  const auto z = approximate(a);
  auto clean = [](double v) { return std::abs(v) < 5e-10 ? 0.0 : v; };
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f%+.6fi", clean(z.real()), clean(z.imag()));
  return buf;
}

}  // namespace ucm
