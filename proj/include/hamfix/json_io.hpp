#ifndef HAMFIX_JSON_IO_HPP
#define HAMFIX_JSON_IO_HPP

#include <algorithm>
#include <fstream>
#include <string>

#include <json.hpp>

#include "hamfix/errors.hpp"
#include "hamfix/fixed_data.hpp"

namespace hamfix {

// Canonical interchange schema:
// {"dim_M": 8, "components": [{"name": "X", "dim": 4, "moment": "0",
//   "omega_class": 1, "summands": [{"weight": 1, "rank": 2,
//   "chern": [1, 2, 1]}]}, ...]}
// "chern" lists integer coefficients of powers of the component
// generator; "moment" is a decimal-free rational string.

inline nlohmann::json to_json(const FixedPointData& data) {
  nlohmann::json out;
  out["dim_M"] = data.dim_m;
  out["components"] = nlohmann::json::array();
  for (const auto& f : data.components) {
    nlohmann::json jf;
    jf["name"] = f.name;
    jf["dim"] = f.dim;
    jf["moment"] = rational_str(f.moment);
    jf["omega_class"] = f.omega_class;
    jf["summands"] = nlohmann::json::array();
    for (const auto& v : f.summands) {
      nlohmann::json jv;
      jv["weight"] = v.weight;
      jv["rank"] = v.rank;
      jv["chern"] = nlohmann::json::array();
      auto deg = v.chern.degree();
      int top = deg ? *deg / 2 : 0;
      for (int k = 0; k <= top; ++k) {
        Rational c = v.chern.coefficient(Monomial{k, 0});
        if (!is_integer(c) || !c.get_num().fits_slong_p())
          throw Error("chern coefficient does not serialize: " +
                      rational_str(c));
        jv["chern"].push_back(c.get_num().get_si());
      }
      jf["summands"].push_back(jv);
    }
    out["components"].push_back(jf);
  }
  return out;
}

namespace detail {
inline const nlohmann::json& field(const nlohmann::json& j,
                                   const std::string& key,
                                   const std::string& path) {
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError("missing field " + path + "." + key, 0);
  return *it;
}
inline int int_field(const nlohmann::json& j, const std::string& key,
                     const std::string& path) {
  const auto& v = field(j, key, path);
  if (!v.is_number_integer())
    throw ParseError("field " + path + "." + key + " must be an integer", 0);
  return v.get<int>();
}
}  // namespace detail

inline FixedPointData from_json(const nlohmann::json& j) {
  using detail::field;
  using detail::int_field;
  FixedPointData data;
  data.dim_m = int_field(j, "dim_M", "$");
  const auto& comps = field(j, "components", "$");
  if (!comps.is_array())
    throw ParseError("$.components must be an array", 0);
  int ci = 0;
  for (const auto& jf : comps) {
    std::string path = "$.components[" + std::to_string(ci++) + "]";
    FixedComponent f;
    const auto& jname = field(jf, "name", path);
    if (!jname.is_string())
      throw ParseError("field " + path + ".name must be a string", 0);
    f.name = jname.get<std::string>();
    f.dim = int_field(jf, "dim", path);
    const auto& jm = field(jf, "moment", path);
    if (!jm.is_string())
      throw ParseError("field " + path +
                           ".moment must be a decimal-free rational string",
                       0);
    try {
      f.moment = parse_rational(jm.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(std::string("field ") + path + ".moment: " + e.what(),
                       0);
    }
    if (jf.contains("omega_class"))
      f.omega_class = int_field(jf, "omega_class", path);
    const auto& jsums = field(jf, "summands", path);
    if (!jsums.is_array())
      throw ParseError("field " + path + ".summands must be an array", 0);
    int si = 0;
    for (const auto& jv : jsums) {
      std::string spath = path + ".summands[" + std::to_string(si++) + "]";
      WeightSummand v;
      v.weight = int_field(jv, "weight", spath);
      v.rank = int_field(jv, "rank", spath);
      const auto& jc = field(jv, "chern", spath);
      if (!jc.is_array())
        throw ParseError("field " + spath + ".chern must be an array", 0);
      GradedPoly chern(env_ut());
      int k = 0;
      for (const auto& cc : jc) {
        if (!cc.is_number_integer())
          throw ParseError("field " + spath + ".chern[" + std::to_string(k) +
                               "] must be an integer",
                           0);
        chern.add_term(Monomial{k, 0}, Rational(cc.get<long>()));
        ++k;
      }
      v.chern = chern;
      f.summands.push_back(std::move(v));
    }
    data.components.push_back(std::move(f));
  }
  std::stable_sort(data.components.begin(), data.components.end(),
                   [](const FixedComponent& a, const FixedComponent& b) {
                     return a.moment < b.moment;
                   });
  return data;
}

inline FixedPointData load_fixed_point_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
  return from_json(j);
}

inline void save_fixed_point_data(const FixedPointData& data,
                                  const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << to_json(data).dump(2) << "\n";
}

}  // namespace hamfix

#endif
