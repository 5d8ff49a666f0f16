#include "latgeo/generators.hpp"
#include "latgeo/json_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using latgeo::input_error;
using latgeo::internal_error;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<latgeo::LatticePolytope> load(const std::string& path) {
  return latgeo::polytopes_from_text(read_file(path));
}

// Single input -> single object, array input -> array of results.
template <typename Fn>
void emit_per_polytope(const std::string& path, Fn&& fn) {
  auto polys = load(path);
  if (polys.size() == 1) {
    std::cout << fn(polys.front()).dump() << "\n";
    return;
  }
  json arr = json::array();
  for (const auto& p : polys) arr.push_back(fn(p));
  std::cout << arr.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of lattice polytopes: h*-polynomials, box points, "
               "pyramid decompositions, circuits, and bound checks"};
  app.require_subcommand(1);

  std::string path;
  bool with_trace = false;
  bool no_circuits = false;

  auto* analyze = app.add_subcommand("analyze", "full analysis report");
  analyze->add_option("path", path, "polytope JSON file")->required();
  analyze->add_flag("--trace", with_trace, "include the greedy support trace (simplices)");
  analyze->add_flag("--no-circuits", no_circuits, "skip circuit enumeration");

  auto* hstar = app.add_subcommand("hstar", "h*-polynomial, degree, codegree, volume");
  hstar->add_option("path", path, "polytope JSON file")->required();

  auto* pyramid = app.add_subcommand("pyramid", "pyramid decomposition");
  pyramid->add_option("path", path, "polytope JSON file")->required();

  auto* circuits = app.add_subcommand("circuits", "circuit enumeration and size bound");
  circuits->add_option("path", path, "polytope JSON file")->required();

  auto* bounds = app.add_subcommand("check-bounds", "evaluate the theorem and identity checks");
  bounds->add_option("path", path, "polytope JSON file")->required();

  latgeo::CorpusSpec spec;
  std::string shape = "general";
  std::string output;
  unsigned dim = 0;
  auto* generate = app.add_subcommand("generate", "emit a reproducible random corpus");
  generate->add_option("--seed", spec.seed, "PRNG seed");
  generate->add_option("--dim", dim, "fixed dimension (overrides --dim-min/--dim-max)");
  generate->add_option("--dim-min", spec.dim_min, "smallest dimension");
  generate->add_option("--dim-max", spec.dim_max, "largest dimension");
  generate->add_option("--bound", spec.bound, "coordinate bound");
  generate->add_option("--count", spec.count, "number of polytopes");
  generate->add_option("--shape", shape, "simplex | general");
  generate->add_option("--output", output, "write to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      latgeo::ReportOptions opts;
      opts.with_trace = with_trace;
      opts.with_circuits = !no_circuits;
      emit_per_polytope(path, [&opts](const latgeo::LatticePolytope& p) {
        return latgeo::analysis_report(p, opts);
      });
    } else if (hstar->parsed()) {
      emit_per_polytope(path, latgeo::hstar_report);
    } else if (pyramid->parsed()) {
      emit_per_polytope(path, latgeo::pyramid_report);
    } else if (circuits->parsed()) {
      emit_per_polytope(path, latgeo::circuits_report);
    } else if (bounds->parsed()) {
      emit_per_polytope(path, latgeo::bounds_report);
    } else if (generate->parsed()) {
      if (dim != 0) spec.dim_min = spec.dim_max = dim;
      if (shape == "simplex")
        spec.shape = latgeo::CorpusShape::simplex;
      else if (shape == "general")
        spec.shape = latgeo::CorpusShape::general;
      else
        throw input_error("unknown shape: " + shape);
      json arr = json::array();
      for (const auto& p : latgeo::random_corpus(spec))
        arr.push_back(latgeo::polytope_to_json(p));
      if (output.empty()) {
        std::cout << arr.dump() << "\n";
      } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw input_error("cannot write file: " + output);
        out << arr.dump() << "\n";
      }
    }
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
