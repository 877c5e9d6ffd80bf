// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "conedepth/cli.hpp"
#include "conedepth/errors.hpp"

namespace conedepth::cli {

namespace {

OutputFormat default_format(const std::string& command) {
  if (command == "grid") return OutputFormat::csv;
  if (command == "plot") return OutputFormat::svg;
  return OutputFormat::json;
}

std::string point_row(Point2 z) { return format_number(z.x) + "," + format_number(z.y); }

std::string polyhedron_csv(const nlohmann::json& j) {
  // One row per vertex: p,x,y
  std::string out = "p,x,y\n";
  const nlohmann::json items = j.is_array() ? j : nlohmann::json::array({j});
  for (const auto& item : items) {
    for (const auto& v : item["vrep"]["vertices"]) {
      out += format_number(item["p"].get<double>()) + "," + format_number(v[0].get<double>()) +
             "," + format_number(v[1].get<double>()) + "\n";
    }
  }
  return out;
}

void write_atomically(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw IoError("cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IoError("cannot rename " + tmp.string() + " to " + path.string());
  }
}

}  // namespace

std::string execute(const RunConfig& cfg) {
  const OutputFormat format = cfg.format.value_or(default_format(cfg.command));
  if (format == OutputFormat::svg && cfg.command != "plot") {
    throw std::invalid_argument("svg output is only available for plot");
  }
  if (cfg.command == "plot" && format != OutputFormat::svg) {
    throw std::invalid_argument("plot only produces svg");
  }
  const DataSet X = parse_csv(cfg.input);

  if (cfg.command == "quantile" || cfg.command == "tukey-region") {
    const nlohmann::json j =
        cfg.command == "quantile" ? cmd_quantile(cfg, X) : cmd_tukey_region(cfg, X);
    return format == OutputFormat::csv ? polyhedron_csv(j) : j.dump(2) + "\n";
  }
  if (cfg.command == "cdf") {
    const nlohmann::json j = cmd_cdf(cfg, X);
    if (format == OutputFormat::json) return j.dump(2) + "\n";
    return "x,y,K,F\n" + point_row(*cfg.z) + "," + std::to_string(j["K"].get<std::size_t>()) +
           "," + format_number(j["F"].get<double>()) + "\n";
  }
  if (cfg.command == "depth" || cfg.command == "tukey-depth") {
    const bool tukey = cfg.command == "tukey-depth";
    const nlohmann::json j = tukey ? cmd_tukey_depth(cfg, X) : cmd_depth(cfg, X);
    if (format == OutputFormat::json) return j.dump(2) + "\n";
    const char* key = tukey ? "depth" : "K";
    return std::string("x,y,") + key + "\n" + point_row(*cfg.z) + "," +
           std::to_string(j[key].get<std::size_t>()) + "\n";
  }
  if (cfg.command == "grid") {
    const std::vector<GridRow> rows = cmd_grid(cfg, X);
    if (format == OutputFormat::json) {
      nlohmann::json j = nlohmann::json::array();
      for (const GridRow& r : rows) j.push_back({{"x", r.x}, {"y", r.y}, {"F", r.F}});
      return j.dump(2) + "\n";
    }
    std::string out = "x,y,F\n";
    for (const GridRow& r : rows) {
      out += format_number(r.x) + "," + format_number(r.y) + "," + format_number(r.F) + "\n";
    }
    return out;
  }
  if (cfg.command == "plot") return cmd_plot(cfg, X);
  throw std::invalid_argument("unknown command " + cfg.command);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower cone distribution functions, cone quantiles and halfspace depth for "
               "bivariate data",
               "conedepth"};
  app.require_subcommand(1, 1);

  std::string input;
  std::string cone_spec = "orthant";
  std::vector<double> p_levels;
  std::string z_spec;
  std::vector<double> bounds;
  std::size_t nx = 50;
  std::size_t ny = 50;
  double eps = Tolerance{}.eps;
  std::string output;
  std::string format;

  auto common = [&](CLI::App* sub, bool with_cone) {
    sub->add_option("-i,--input", input, "CSV file with one x,y pair per row")->required();
    if (with_cone) {
      sub->add_option("--cone", cone_spec, "'orthant' or generators 'b1x,b1y;b2x,b2y'")
          ->capture_default_str();
    }
    sub->add_option("--eps", eps, "tolerance on scalar products")->capture_default_str();
    sub->add_option("-o,--output", output, "output file (default: stdout)");
    sub->add_option("--format", format, "json, csv or svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
  };
  auto levels = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-p", p_levels, "quantile level(s) in (0, 1]")->delimiter(',');
    if (required) opt->required();
  };
  auto query = [&](CLI::App* sub) {
    sub->add_option("-z", z_spec, "query point 'x,y'")->required();
  };

  auto* quantile = app.add_subcommand("quantile", "lower cone quantile(s) as polyhedra");
  common(quantile, true);
  levels(quantile, true);
  auto* cdf = app.add_subcommand("cdf", "lower cone distribution function at a point");
  common(cdf, true);
  query(cdf);
  auto* depth = app.add_subcommand("depth", "cone location depth at a point");
  common(depth, true);
  query(depth);
  auto* tdepth = app.add_subcommand("tukey-depth", "halfspace depth at a point");
  common(tdepth, false);
  query(tdepth);
  auto* tregion = app.add_subcommand("tukey-region", "halfspace depth region(s)");
  common(tregion, false);
  levels(tregion, true);
  auto* grid = app.add_subcommand("grid", "lower cone distribution function on a grid");
  common(grid, true);
  grid->add_option("--bounds", bounds, "xmin,xmax,ymin,ymax")->delimiter(',')->expected(4);
  grid->add_option("--nx", nx, "grid points along x")->capture_default_str();
  grid->add_option("--ny", ny, "grid points along y")->capture_default_str();
  auto* plot = app.add_subcommand("plot", "SVG of the data, depth labels and quantiles");
  common(plot, true);
  levels(plot, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  RunConfig cfg;
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.input = input;
    cfg.cone = parse_cone(cone_spec);
    cfg.p_levels = p_levels;
    if (!z_spec.empty()) cfg.z = parse_point(z_spec);
    if (!bounds.empty()) {
      if (bounds.size() != 4 || !(bounds[0] <= bounds[1]) || !(bounds[2] <= bounds[3])) {
        throw std::invalid_argument("--bounds needs xmin<=xmax and ymin<=ymax");
      }
      cfg.bounds = std::array<double, 4>{bounds[0], bounds[1], bounds[2], bounds[3]};
    }
    cfg.nx = nx;
    cfg.ny = ny;
    if (!(eps >= 0.0)) throw std::invalid_argument("--eps must be nonnegative");
    cfg.tol.eps = eps;
    if (!output.empty()) cfg.output = output;
    if (format == "json") cfg.format = OutputFormat::json;
    if (format == "csv") cfg.format = OutputFormat::csv;
    if (format == "svg") cfg.format = OutputFormat::svg;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const std::string text = execute(cfg);
    if (cfg.output) {
      write_atomically(*cfg.output, text);
    } else {
      out << text;
    }
    return kOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateCone& e) {
    err << "error: degenerate cone: " << e.what() << "\n";
    return kDegenerateCone;
  } catch (const UnsupportedCone& e) {
    err << "error: unsupported cone: " << e.what() << "\n";
    return kUnsupportedCone;
  } catch (const InvalidState& e) {
    err << "error: internal: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kData;
  }
}

}  // namespace conedepth::cli
