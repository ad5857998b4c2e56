#include "phfiber/io.hpp"

namespace phfiber::io {

namespace {

BoundaryTag tag_from_json(const json& j) {
  const auto& tag = j.is_object() ? field(j, "tag") : j;
  if (tag == "min") return BoundaryTag::Min;
  if (tag == "max") return BoundaryTag::Max;
  throw Error(ErrorCode::ParseError, "boundary tag must be \"min\" or \"max\", got " + tag.dump());
}

const char* kind_name(HomotopyType::Kind kind) {
  switch (kind) {
    case HomotopyType::Kind::Empty: return "empty";
    case HomotopyType::Kind::Point: return "point";
    case HomotopyType::Kind::Sphere2: return "sphere2";
    case HomotopyType::Kind::Product: return "product";
    case HomotopyType::Kind::BoundedTorus: return "bounded_torus";
  }
  return "point";
}

}  // namespace

SurfaceSpec surface_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "surface must be a JSON object");
  std::vector<BoundaryTag> tags;
  if (j.contains("boundary")) {
    if (!j.at("boundary").is_array()) throw Error(ErrorCode::ParseError, "'boundary' must be an array");
    for (const auto& b : j.at("boundary")) tags.push_back(tag_from_json(b));
  }
  SurfaceSpec spec;
  if (j.contains("name")) {
    const auto named = parse_named_surface(j.at("name").get<std::string>());
    if (!named) throw Error(ErrorCode::InvalidSurface, "unknown surface name " + j.at("name").dump());
    spec = SurfaceSpec::named(*named, tags);
    if ((j.contains("orientable") && j.at("orientable").get<bool>() != spec.orientable) ||
        (j.contains("genus") && j.at("genus").get<int>() != spec.genus)) {
      throw Error(ErrorCode::InvalidSurface, "surface name disagrees with orientable/genus fields");
    }
  } else {
    try {
      spec.orientable = field(j, "orientable").get<bool>();
      spec.genus = field(j, "genus").get<int>();
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("surface: ") + e.what());
    }
    spec.boundary = std::move(tags);
  }
  if (j.contains("beta2") && !j.at("beta2").is_null()) {
    if (!j.at("beta2").is_number_integer()) throw Error(ErrorCode::ParseError, "beta2 must be an integer");
    spec.beta2 = j.at("beta2").get<int>();
  }
  spec.validate();
  return spec;
}

json to_json(const SurfaceSpec& s) {
  json boundary = json::array();
  for (auto tag : s.boundary) boundary.push_back({{"tag", tag == BoundaryTag::Min ? "min" : "max"}});
  json out{{"orientable", s.orientable}, {"genus", s.genus}, {"boundary", boundary}};
  if (s.beta2) out["beta2"] = *s.beta2;
  return out;
}

json to_json(const HomotopyType& h) {
  return json{{"kind", kind_name(h.kind)},
              {"so3", h.so3},
              {"circles", h.circles},
              {"bound", h.bound},
              {"text", h.to_string()}};
}

HomotopyType homotopy_type_from_json(const json& j) {
  HomotopyType h;
  const auto kind = field(j, "kind").get<std::string>();
  if (kind == "empty") {
    h.kind = HomotopyType::Kind::Empty;
  } else if (kind == "point") {
    h.kind = HomotopyType::Kind::Point;
  } else if (kind == "sphere2") {
    h.kind = HomotopyType::Kind::Sphere2;
  } else if (kind == "product") {
    h.kind = HomotopyType::Kind::Product;
  } else if (kind == "bounded_torus") {
    h.kind = HomotopyType::Kind::BoundedTorus;
  } else {
    throw Error(ErrorCode::ParseError, "unknown homotopy type kind " + kind);
  }
  h.so3 = j.value("so3", false);
  h.circles = j.value("circles", 0);
  h.bound = j.value("bound", 0);
  return h;
}

json to_json(const FiberReport& r) {
  json pi = json::object();
  for (const auto& [n, group] : r.pi_n) pi[std::to_string(n)] = group;
  json out{{"surface", r.surface},
           {"homotopy_type", to_json(r.homotopy_type)},
           {"formula", r.formula},
           {"pi_n", pi},
           {"assumptions", {{"distinct_endpoints", r.distinct_endpoints}, {"c1_positive", r.c1_positive}}},
           {"guaranteed", r.guaranteed}};
  out["c1"] = r.c1 ? json(*r.c1) : json(nullptr);
  out["component_count"] = r.component_count ? json(*r.component_count) : json(nullptr);
  return out;
}

FiberReport report_from_json(const json& j) {
  try {
    FiberReport r;
    r.surface = field(j, "surface").get<std::string>();
    if (!field(j, "c1").is_null()) r.c1 = j.at("c1").get<int>();
    r.homotopy_type = homotopy_type_from_json(field(j, "homotopy_type"));
    r.formula = field(j, "formula").get<std::string>();
    for (const auto& [key, group] : field(j, "pi_n").items()) r.pi_n[std::stoi(key)] = group.get<std::string>();
    const auto& assumptions = field(j, "assumptions");
    r.distinct_endpoints = field(assumptions, "distinct_endpoints").get<bool>();
    r.c1_positive = field(assumptions, "c1_positive").get<bool>();
    r.guaranteed = field(j, "guaranteed").get<bool>();
    if (!field(j, "component_count").is_null()) r.component_count = j.at("component_count").get<std::size_t>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("report: ") + e.what());
  }
}

}  // namespace phfiber::io
