#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "phfiber/bottleneck.hpp"
#include "phfiber/io.hpp"
#include "phfiber/phfiber.hpp"
#include "phfiber/random.hpp"

namespace phfiber::cli {

namespace {

using json = nlohmann::json;

struct Options {
  std::string command;
  std::string arith;
  std::optional<double> epsilon;

  std::vector<std::string> files;
  std::string domain = "circle";
  std::string boundary;
  bool verify = false;
  std::size_t resolution = 0;
  std::size_t steps = 16;
  std::string output;
  std::string plot;
  std::size_t plot_samples = 1000;
  std::optional<std::size_t> shift;
  bool allow_repeated = false;
  bool force = false;

  std::string surface;
  std::string surface_file;
  std::string barcode_file;
  std::string boundary_tags;
  std::optional<int> beta2;

  std::size_t n = 3;
  std::uint64_t seed = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

DomainKind domain_option(const std::string& name) {
  if (name == "circle") return DomainKind::Circle;
  if (name == "interval") return DomainKind::Interval;
  throw Error(ErrorCode::ParseError, "--domain must be circle or interval");
}

template <class Scalar>
class Runner {
 public:
  Runner(const Options& options, Tolerance tol) : opt_(options), tol_(tol) {}

  json run() {
    const auto& c = opt_.command;
    if (c == "barcode") return barcode_command();
    if (c == "bottleneck") return bottleneck_command();
    if (c == "same-component") return same_component_command();
    if (c == "reparam") return reparam_command();
    if (c == "path") return path_command();
    if (c == "contract") return contract_command();
    if (c == "count-components") return count_command();
    if (c == "surface-report") return surface_command();
    if (c == "canonical") return canonical_command();
    throw Error(ErrorCode::ParseError, "unknown command " + c);
  }

 private:
  PLFunction<Scalar> function(std::size_t i) const { return io::function_from_json<Scalar>(io::read_json_file(opt_.files.at(i))); }
  Barcode<Scalar> barcode_file(const std::string& path) const { return io::barcode_from_json<Scalar>(io::read_json_file(path)); }

  std::optional<BoundaryValues<Scalar>> boundary() const {
    if (opt_.boundary.empty()) return std::nullopt;
    const auto parts = split(opt_.boundary, ',');
    if (parts.size() != 2) throw Error(ErrorCode::ParseError, "--boundary expects b0,b1");
    return BoundaryValues<Scalar>{ScalarTraits<Scalar>::parse(parts[0]), ScalarTraits<Scalar>::parse(parts[1])};
  }

  EnumerationOptions enumeration() const {
    EnumerationOptions e;
    e.allow_repeated_endpoints = opt_.allow_repeated;
    e.allow_large = opt_.force;
    return e;
  }

  void expect_domain(const PLFunction<Scalar>& f, DomainKind domain) const {
    if (f.domain() != domain) {
      throw Error(ErrorCode::DomainMismatch, std::string("expected a ") + to_string(domain) + " function, got " +
                                                 to_string(f.domain()));
    }
  }

  void write_plot(const std::vector<PLFunction<Scalar>>& functions) const {
    if (opt_.plot.empty()) return;
    std::ofstream csv(opt_.plot);
    if (!csv) throw Error(ErrorCode::ParseError, "cannot write " + opt_.plot);
    const bool many = functions.size() > 1;
    csv << (many ? "step,t,value\n" : "t,value\n");
    const std::size_t samples = std::max<std::size_t>(opt_.plot_samples, 1);
    for (std::size_t i = 0; i < functions.size(); ++i) {
      for (std::size_t k = 0; k <= samples; ++k) {
        const Scalar t = Scalar(static_cast<long>(k)) / Scalar(static_cast<long>(samples));
        if (many) csv << i << ',';
        csv << shortest_decimal(to_double(t)) << ',' << shortest_decimal(to_double(functions[i](t))) << '\n';
      }
    }
  }

  double max_bottleneck(const std::vector<PLFunction<Scalar>>& path, const Barcode<Scalar>& target) const {
    double worst = 0.0;
    for (const auto& f : path) worst = std::max(worst, bottleneck_distance(barcode(f, tol_), target).to_double());
    const double allowed = ScalarTraits<Scalar>::exact ? 0.0 : tol_.epsilon;
    if (worst > allowed) {
      throw Error(ErrorCode::VerificationFailed, "path leaves the fiber: bottleneck distance " + shortest_decimal(worst));
    }
    return worst;
  }

  json emit_path(const std::vector<PLFunction<Scalar>>& path, const Barcode<Scalar>& target) const {
    json functions = json::array();
    for (const auto& f : path) functions.push_back(io::to_json(f));
    json result{{"steps", path.size() - 1}};
    if (opt_.verify) result["max_bottleneck"] = max_bottleneck(path, target);
    write_plot(path);
    if (opt_.output.empty()) {
      result["path"] = std::move(functions);
    } else {
      std::ofstream file(opt_.output);
      if (!file) throw Error(ErrorCode::ParseError, "cannot write " + opt_.output);
      file << json{{"path", functions}}.dump(2) << '\n';
      result["output"] = opt_.output;
    }
    return result;
  }

  json barcode_command() {
    const auto f = function(0);
    const auto d = barcode(f, tol_);
    json result = io::to_json(d);
    if (opt_.verify) {
      const std::size_t r = opt_.resolution ? opt_.resolution : oracle_resolution(f);
      if (!same_barcode(d, barcode_bruteforce(f, r, tol_), tol_)) {
        throw Error(ErrorCode::VerificationFailed, "elder-rule barcode disagrees with the union-find oracle");
      }
      result["verified"] = true;
      result["resolution"] = r;
    }
    write_plot({f});
    return result;
  }

  json bottleneck_command() {
    const auto distance = bottleneck_distance(barcode_file(opt_.files.at(0)), barcode_file(opt_.files.at(1)));
    return json{{"distance", distance.infinite ? json("inf") : io::scalar_to_json(distance.value)}};
  }

  json same_component_command() {
    const auto domain = domain_option(opt_.domain);
    const auto f = function(0);
    const auto g = function(1);
    expect_domain(f, domain);
    expect_domain(g, domain);
    if (domain == DomainKind::Interval) return json{{"same", same_component_interval(f, g, boundary(), tol_)}};
    const auto result = same_component(f, g, tol_);
    json out{{"same", result.same}, {"shifts", result.shifts}};
    if (!result.same) out["reason"] = to_string(result.reason);
    return out;
  }

  json reparam_command() {
    const auto f = function(0);
    if (f.domain() == DomainKind::Interval) {
      const auto factor = factor_through_canonical(f, tol_);
      json out{{"sequence", io::to_json(interval_sequence(f, tol_))},
               {"canonical", io::to_json(factor.canonical)},
               {"phi", io::to_json(factor.phi)}};
      if (opt_.verify) out["residual"] = verify_residual(compose(factor.canonical, factor.phi), f);
      return out;
    }
    const auto component = component_of(f, tol_);
    if (component.is_constant()) throw Error(ErrorCode::ConstantFunction, "constant functions have no reparametrization");
    const auto shifts = cyclic_shifts(component.cls.normal_form, extrema(f, tol_).sequence, tol_);
    const std::size_t shift = opt_.shift.value_or(shifts.front());
    const auto phi = reparametrization(f, component, shift, tol_);
    json out{{"class", io::to_json(component.cls.normal_form)},
             {"canonical", io::to_json(component.canonical)},
             {"shift", shift},
             {"shifts", shifts},
             {"phi", io::to_json(phi)}};
    if (opt_.verify) out["residual"] = verify_residual(compose(component.canonical, phi), f);
    return out;
  }

  double verify_residual(const PLFunction<Scalar>& rebuilt, const PLFunction<Scalar>& f) const {
    const double residual = sampled_distance(rebuilt, f, 1000);
    if (residual > 1e-9) {
      throw Error(ErrorCode::VerificationFailed, "canonical o phi differs from f by " + shortest_decimal(residual));
    }
    return residual;
  }

  json path_command() {
    const auto f = function(0);
    const auto g = function(1);
    if (f.domain() != g.domain()) throw Error(ErrorCode::DomainMismatch, "functions live on different domains");
    if (f.domain() == DomainKind::Circle) return emit_path(fiber_path(f, g, opt_.steps, tol_), barcode(f, tol_));
    if (!sequences_equal(interval_sequence(f, tol_).values, interval_sequence(g, tol_).values, tol_)) {
      throw Error(ErrorCode::NotSameComponent, "interval functions with different extrema sequences");
    }
    auto path = contraction_path(f, opt_.steps, tol_);
    auto back = contraction_path(g, opt_.steps, tol_);
    path.insert(path.end(), back.rbegin() + 1, back.rend());
    return emit_path(path, barcode(f, tol_));
  }

  json contract_command() {
    const auto f = function(0);
    expect_domain(f, DomainKind::Interval);
    return emit_path(contraction_path(f, opt_.steps, tol_), barcode(f, tol_));
  }

  json count_command() {
    const auto domain = domain_option(opt_.domain);
    const auto d = barcode_file(opt_.files.at(0));
    json components = json::array();
    if (domain == DomainKind::Circle) {
      for (const auto& c : enumerate_components(d, enumeration(), tol_)) components.push_back(io::to_json(c));
    } else {
      for (const auto& c : enumerate_components_interval(d, boundary(), enumeration(), tol_)) {
        components.push_back(io::to_json(c));
      }
    }
    return json{{"domain", to_string(domain)}, {"count", components.size()}, {"components", components}};
  }

  json surface_command() {
    if (opt_.barcode_file.empty()) throw Error(ErrorCode::ParseError, "surface-report needs --barcode");
    const auto d = barcode_file(opt_.barcode_file);
    if (opt_.surface == "circle" || opt_.surface == "interval") {
      return io::to_json(circle_interval_report(domain_option(opt_.surface), d, boundary(), enumeration(), tol_));
    }
    SurfaceSpec spec;
    if (!opt_.surface_file.empty()) {
      spec = io::surface_from_json(io::read_json_file(opt_.surface_file));
    } else if (!opt_.surface.empty()) {
      const auto named = parse_named_surface(opt_.surface);
      if (!named) throw Error(ErrorCode::InvalidSurface, "unknown surface " + opt_.surface);
      std::vector<BoundaryTag> tags;
      for (const auto& t : split(opt_.boundary_tags, ',')) {
        if (t == "min") {
          tags.push_back(BoundaryTag::Min);
        } else if (t == "max") {
          tags.push_back(BoundaryTag::Max);
        } else if (!t.empty()) {
          throw Error(ErrorCode::ParseError, "boundary tags must be min or max");
        }
      }
      spec = SurfaceSpec::named(*named, tags);
    } else {
      throw Error(ErrorCode::ParseError, "surface-report needs --surface or --surface-file");
    }
    if (opt_.beta2) spec.beta2 = opt_.beta2;
    return io::to_json(fiber_homotopy_type(d, spec, tol_));
  }

  json canonical_command() {
    const auto f = function(0);
    json out;
    if (f.domain() == DomainKind::Circle) {
      const auto component = component_of(f, tol_);
      out = json{{"class", io::to_json(component.cls.normal_form)},
                 {"constant", component.is_constant()},
                 {"canonical", io::to_json(component.canonical)},
                 {"barcode", io::to_json(component.barcode)}};
      write_plot({component.canonical});
    } else {
      const auto canonical = canonical_representative_interval(interval_sequence(f, tol_).values, tol_);
      out = json{{"sequence", io::to_json(interval_sequence(f, tol_))},
                 {"reduced_sequence", io::to_json(reduced_sequence(f, tol_))},
                 {"canonical", io::to_json(canonical)},
                 {"barcode", io::to_json(barcode(canonical, tol_))}};
      write_plot({canonical});
    }
    return out;
  }

  const Options& opt_;
  Tolerance tol_;
};

json generate(const Options& opt) {
  random::Engine rng(opt.seed);
  const auto domain = domain_option(opt.domain);
  // Decimal grids keep the emitted numbers exact.
  random::ShapeOptions shape;
  shape.grid = 1000;
  shape.value_denominator = 10;
  if (domain == DomainKind::Circle) {
    return io::to_json(random::circle_function<Rational>(rng, std::max<std::size_t>(opt.n, 1), shape));
  }
  return io::to_json(random::interval_function<Rational>(rng, std::max<std::size_t>(opt.n, 2), shape));
}

void report_error(std::ostream& err, const std::string& code, const std::string& message) {
  err << json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Fibers of the persistence map for PL functions on the interval and the circle", "ph-fiber"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--arith", opt.arith, "exact (rational) or float arithmetic")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--epsilon", opt.epsilon, "tolerance for float arithmetic (implies --arith float)");

  auto add_verify = [&](CLI::App* sub) { sub->add_flag("--verify", opt.verify, "re-check the result with an oracle"); };
  auto add_plot = [&](CLI::App* sub) {
    sub->add_option("--emit-plot", opt.plot, "write sampled (t, f(t)) pairs as CSV");
    sub->add_option("--plot-samples", opt.plot_samples, "number of plot samples");
  };
  auto add_enumeration = [&](CLI::App* sub) {
    sub->add_flag("--allow-repeated", opt.allow_repeated, "enumerate barcodes with repeated endpoints");
    sub->add_flag("--force", opt.force, "lift the enumeration size guard");
  };

  auto* barcode_cmd = app.add_subcommand("barcode", "persistence barcode of a PL function");
  barcode_cmd->add_option("function", opt.files, "function JSON")->required()->expected(1);
  barcode_cmd->add_option("--resolution", opt.resolution, "grid resolution for --verify");
  add_verify(barcode_cmd);
  add_plot(barcode_cmd);

  auto* bottleneck_cmd = app.add_subcommand("bottleneck", "bottleneck distance between two barcodes");
  bottleneck_cmd->add_option("barcodes", opt.files, "two barcode JSON files")->required()->expected(2);

  auto* same_cmd = app.add_subcommand("same-component", "are two functions in the same fiber component");
  same_cmd->add_option("functions", opt.files, "two function JSON files")->required()->expected(2);
  same_cmd->add_option("--domain", opt.domain)->check(CLI::IsMember({"circle", "interval"}));
  same_cmd->add_option("--boundary", opt.boundary, "prescribed boundary values b0,b1 (interval)");

  auto* reparam_cmd = app.add_subcommand("reparam", "reparametrization onto the canonical representative");
  reparam_cmd->add_option("function", opt.files, "function JSON")->required()->expected(1);
  reparam_cmd->add_option("--shift", opt.shift, "cyclic shift of the extrema pairs");
  add_verify(reparam_cmd);

  auto* path_cmd = app.add_subcommand("path", "path between two functions inside the fiber");
  path_cmd->add_option("functions", opt.files, "two function JSON files")->required()->expected(2);
  path_cmd->add_option("--steps", opt.steps, "number of steps");
  path_cmd->add_option("-o,--output", opt.output, "write the path to this file");
  add_verify(path_cmd);
  add_plot(path_cmd);

  auto* contract_cmd = app.add_subcommand("contract", "contraction of an interval function to its canonical representative");
  contract_cmd->add_option("function", opt.files, "function JSON")->required()->expected(1);
  contract_cmd->add_option("--steps", opt.steps, "number of steps");
  contract_cmd->add_option("-o,--output", opt.output, "write the path to this file");
  add_verify(contract_cmd);
  add_plot(contract_cmd);

  auto* count_cmd = app.add_subcommand("count-components", "enumerate fiber components over a barcode");
  count_cmd->add_option("barcode", opt.files, "barcode JSON")->required()->expected(1);
  count_cmd->add_option("--domain", opt.domain)->check(CLI::IsMember({"circle", "interval"}));
  count_cmd->add_option("--boundary", opt.boundary, "prescribed boundary values b0,b1 (interval)");
  add_enumeration(count_cmd);

  auto* surface_cmd = app.add_subcommand("surface-report", "homotopy type of the fiber component for a surface");
  surface_cmd->add_option("--surface", opt.surface, "named surface, or circle / interval");
  surface_cmd->add_option("--surface-file", opt.surface_file, "surface JSON");
  surface_cmd->add_option("--barcode", opt.barcode_file, "full barcode JSON");
  surface_cmd->add_option("--boundary-tags", opt.boundary_tags, "min/max tag per boundary circle, comma separated");
  surface_cmd->add_option("--beta2", opt.beta2, "second Betti number over the coefficient field");
  surface_cmd->add_option("--boundary", opt.boundary, "prescribed boundary values b0,b1 (interval)");
  add_enumeration(surface_cmd);

  auto* canonical_cmd = app.add_subcommand("canonical", "canonical representative of a function's component");
  canonical_cmd->add_option("function", opt.files, "function JSON")->required()->expected(1);
  add_plot(canonical_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "random PL function for test data");
  gen_cmd->add_option("--domain", opt.domain)->check(CLI::IsMember({"circle", "interval"}));
  gen_cmd->add_option("--n", opt.n, "extrema pairs (circle) or extrema (interval)");
  gen_cmd->add_option("--seed", opt.seed, "random seed");

  for (auto* sub : app.get_subcommands({})) {
    sub->callback([&opt, sub] { opt.command = sub->get_name(); });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what());
    return kMalformedInput;
  }

  try {
    if (!opt.epsilon) {
      if (const char* env = std::getenv("PH_FIBER_EPSILON"); env && *env) opt.epsilon = ScalarTraits<double>::parse(env);
    }
    if (opt.epsilon && *opt.epsilon < 0) throw Error(ErrorCode::ParseError, "epsilon must be non-negative");
    Tolerance tol;
    if (opt.epsilon) tol.epsilon = *opt.epsilon;
    const bool use_float = opt.arith == "float" || (opt.arith.empty() && opt.epsilon);

    json result;
    if (opt.command == "gen") {
      result = generate(opt);
    } else if (use_float) {
      result = Runner<double>(opt, tol).run();
    } else {
      result = Runner<Rational>(opt, tol).run();
    }
    out << result.dump(2) << '\n';
    return kOk;
  } catch (const Error& e) {
    report_error(err, to_string(e.code()), e.what());
    return is_input_error(e.code()) ? kMalformedInput : kDomainError;
  } catch (const nlohmann::json::exception& e) {
    report_error(err, "ParseError", e.what());
    return kMalformedInput;
  } catch (const std::out_of_range& e) {
    report_error(err, "UsageError", e.what());
    return kMalformedInput;
  }
}

}  // namespace phfiber::cli
