#ifndef PHFIBER_IO_HPP
#define PHFIBER_IO_HPP

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "phfiber/barcode.hpp"
#include "phfiber/error.hpp"
#include "phfiber/fiber_circle.hpp"
#include "phfiber/fiber_interval.hpp"
#include "phfiber/pl_function.hpp"
#include "phfiber/reparametrization.hpp"
#include "phfiber/surface_report.hpp"

namespace phfiber::io {

using json = nlohmann::json;

inline json parse_json(const std::string& text, const std::string& origin = "input") {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, origin + ": " + e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path);
}

/// Numbers or decimal / "p/q" strings.
template <class Scalar>
Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (j.is_number_float()) return from_double<Scalar>(j.get<double>());
  if (j.is_string()) return ScalarTraits<Scalar>::parse(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected a number, got " + j.dump());
}

/// Integers are written as integers, everything else as the shortest
/// round-trip double.
template <class Scalar>
json scalar_to_json(const Scalar& x) {
  if (ScalarTraits<Scalar>::is_integer(x, Tolerance{0.0})) {
    const double d = to_double(x);
    if (std::abs(d) < 9.0e15) return json(static_cast<long long>(d));
  }
  return json(to_double(x));
}

template <class Scalar>
std::vector<Scalar> scalars_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string("'") + what + "' must be an array");
  std::vector<Scalar> out;
  for (const auto& x : j) out.push_back(scalar_from_json<Scalar>(x));
  return out;
}

template <class Scalar>
json scalars_to_json(const std::vector<Scalar>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(scalar_to_json(x));
  return out;
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline DomainKind domain_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "circle") return DomainKind::Circle;
    if (s == "interval") return DomainKind::Interval;
  }
  throw Error(ErrorCode::ParseError, "domain must be \"circle\" or \"interval\", got " + j.dump());
}

template <class Scalar>
PLFunction<Scalar> function_from_json(const json& j) {
  return PLFunction<Scalar>(domain_from_json(field(j, "domain")),
                            scalars_from_json<Scalar>(field(j, "breakpoints"), "breakpoints"),
                            scalars_from_json<Scalar>(field(j, "values"), "values"));
}

template <class Scalar>
json to_json(const PLFunction<Scalar>& f) {
  return json{{"domain", to_string(f.domain())},
              {"breakpoints", scalars_to_json(f.breakpoints())},
              {"values", scalars_to_json(f.values())}};
}

/// {"domain", "s", "phi", "lift_offset"}: the lift is phi + lift_offset.
template <class Scalar>
Reparametrization<Scalar> reparametrization_from_json(const json& j) {
  auto lift = scalars_from_json<Scalar>(field(j, "phi"), "phi");
  if (j.contains("lift_offset")) {
    const auto& k = j.at("lift_offset");
    if (!k.is_number_integer()) throw Error(ErrorCode::ParseError, "lift_offset must be an integer");
    for (auto& x : lift) x += Scalar(k.get<long long>());
  }
  return Reparametrization<Scalar>(domain_from_json(field(j, "domain")), scalars_from_json<Scalar>(field(j, "s"), "s"),
                                   std::move(lift));
}

/// Writes phi with the lift offset split off so that phi(0) lies in [0,1).
template <class Scalar>
json to_json(const Reparametrization<Scalar>& phi) {
  Scalar offset(0);
  if (phi.domain() == DomainKind::Circle) offset = floor_of(phi.lift_values().front());
  std::vector<Scalar> values = phi.lift_values();
  for (auto& x : values) x -= offset;
  return json{{"domain", to_string(phi.domain())},
              {"s", scalars_to_json(phi.knots())},
              {"phi", scalars_to_json(values)},
              {"lift_offset", static_cast<long long>(to_double(offset))}};
}

inline bool is_infinity_token(const json& j) {
  if (j.is_null()) return true;
  if (!j.is_string()) return false;
  const auto s = j.get<std::string>();
  return s == "inf" || s == "+inf" || s == "Infinity" || s == "infinity";
}

template <class Scalar>
Barcode<Scalar> barcode_from_json(const json& j) {
  const auto& bars = field(j, "bars");
  if (!bars.is_array()) throw Error(ErrorCode::ParseError, "'bars' must be an array");
  std::vector<Bar<Scalar>> out;
  for (const auto& b : bars) {
    const auto& degree = field(b, "degree");
    if (!degree.is_number_integer()) throw Error(ErrorCode::ParseError, "bar degree must be an integer");
    Bar<Scalar> bar{degree.get<int>(), scalar_from_json<Scalar>(field(b, "birth")), std::nullopt};
    const auto& death = field(b, "death");
    if (!is_infinity_token(death)) bar.death = scalar_from_json<Scalar>(death);
    out.push_back(std::move(bar));
  }
  return Barcode<Scalar>(std::move(out));
}

template <class Scalar>
json to_json(const Barcode<Scalar>& d) {
  json bars = json::array();
  for (const auto& bar : d.bars()) {
    bars.push_back({{"degree", bar.degree},
                    {"birth", scalar_to_json(bar.birth)},
                    {"death", bar.death ? scalar_to_json(*bar.death) : json("inf")}});
  }
  return json{{"bars", bars}};
}

template <class Scalar>
json to_json(const ExtremaSequence<Scalar>& seq) {
  return scalars_to_json(seq.values);
}

template <class Scalar>
json to_json(const FiberComponentCircle<Scalar>& c) {
  return json{{"n", c.cls.n()},
              {"class", to_json(c.cls.normal_form)},
              {"constant", c.is_constant()},
              {"canonical", to_json(c.canonical)}};
}

template <class Scalar>
json to_json(const FiberComponentInterval<Scalar>& c) {
  json out{{"sequence", to_json(c.sequence)}, {"canonical", to_json(c.canonical)}};
  if (c.boundary) out["boundary"] = scalars_to_json(std::vector<Scalar>{c.boundary->start, c.boundary->end});
  return out;
}

SurfaceSpec surface_from_json(const json& j);
json to_json(const SurfaceSpec& s);
json to_json(const HomotopyType& h);
HomotopyType homotopy_type_from_json(const json& j);
json to_json(const FiberReport& r);
FiberReport report_from_json(const json& j);

}  // namespace phfiber::io

#endif  // PHFIBER_IO_HPP
