#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "psphere/desitter.hpp"
#include "psphere/jones.hpp"
#include "psphere/poincare.hpp"
#include "psphere/scene.hpp"
#include "psphere/stokes.hpp"
#include "psphere/suites.hpp"
#include "psphere/trajectory.hpp"

namespace {

using namespace psphere;

// Exit codes: 0 ok, 2 bad input, 3 invariant breach, 4 domain error
// (e.g. pure state not reducible), 5 verification failure.
int dispatch(const std::function<int()>& body) {
  try {
    return body();
  } catch (const SceneError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const PureStateNotReducible& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

int run_simulate(const std::string& scene_path, const std::string& output_path, bool degrees) {
  const Scene scene = parse_scene_file(scene_path, degrees);
  const std::vector<TrajectoryRow> rows = simulate_scene(scene);
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw SceneError("cannot open output file \"" + output_path + "\"");
  write_csv(out, rows);
  if (!out.flush()) throw SceneError("failed writing output file \"" + output_path + "\"");
  std::printf("wrote %zu rows to %s\n", rows.size(), output_path.c_str());
  return 0;
}

int run_canonicalize(const std::string& scene_path, bool degrees) {
  const Scene scene = parse_scene_file(scene_path, degrees);
  const BeamState state = scene.beam_at(scene.grid.start);
  const auto [form, transform] = canonicalize(state);
  const SphereGeometry geom = sphere_geometry(state);

  const std::array<double, 4> v = sphere_vector(geom);
  const std::array<double, 4> reduced = transform.apply(v);
  const std::array<double, 4> back = transform.minkowski_inverse().apply(reduced);
  double residual = 0.0;
  for (int i = 0; i < 4; ++i) residual = std::max(residual, std::abs(back[i] - v[i]));

  std::printf("s: %.12g\n", geom.outer_s);
  std::printf("r: %.12g\n", geom.inner_r);
  std::printf("eta: %.12g\n", form.boost_eta);
  std::printf("value: %.12g\n", form.value);
  std::printf("reduced: (%.12g, %.3g, %.3g, %.3g)\n", reduced[0], reduced[1], reduced[2],
              reduced[3]);
  std::printf("round-trip residual: %.3g\n", residual);
  return 0;
}

int run_verify(std::uint64_t seed, int trials, bool inject_fault) {
  const SuiteOptions opt{seed, trials, inject_fault};
  const std::vector<SuiteResult> results = run_all_suites(opt);
  bool ok = true;
  for (const SuiteResult& r : results) {
    std::printf("%-20s max deviation %.3e  tolerance %.0e  %s\n", r.name.c_str(),
                r.max_deviation, r.tolerance, r.passed() ? "ok" : "FAIL");
    ok = ok && r.passed();
  }
  if (!ok) {
    std::cerr << "failing suites:\n";
    for (const SuiteResult& r : results) {
      if (!r.passed()) std::cerr << "  " << r.name << " (worst case: " << r.worst_case << ")\n";
    }
    return 5;
  }
  return 0;
}

Mat2c squeeze_along(double eta, double alpha) {
  return rotator(alpha) * squeezer(eta) * rotator(-alpha);
}

int run_wigner(double eta, double axis_angle) {
  const Mat2c product = compose({squeeze_along(eta, 0.0), squeeze_along(eta, axis_angle),
                                 squeeze_along(eta, 2.0 * axis_angle)});
  const PolarFactors factors = polar_decompose(product);

  const Mat2c recomposed = factors.rotation_part * factors.boost_part;
  const Mat2c gram = factors.rotation_part.adjoint() * factors.rotation_part;

  std::printf("eta: %.12g\n", eta);
  std::printf("axis angle: %.12g\n", axis_angle);
  std::printf("squeeze axes: 0, %.12g, %.12g\n", axis_angle, 2.0 * axis_angle);
  std::printf("wigner angle: %.12g\n", factors.wigner_angle);
  std::printf("round-trip residual: %.3g\n", max_abs_diff(recomposed, product));
  std::printf("unitarity residual: %.3g\n", max_abs_diff(gram, Mat2c::identity()));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-beam polarization optics: SL(2,C) elements, Stokes four-vectors, "
               "Poincare-sphere reduction, and O(3,2) decoherence"};
  app.require_subcommand(1);

  std::string scene_path;
  std::string output_path;
  bool degrees = false;

  CLI::App* sim = app.add_subcommand("simulate", "Run a scene over its time grid, emit CSV");
  sim->add_option("scene", scene_path, "Scene JSON file")->required();
  sim->add_option("-o,--output", output_path, "Output CSV path")->required();
  sim->add_flag("--degrees", degrees, "Interpret scene angles as degrees");

  CLI::App* canon = app.add_subcommand("canonicalize", "Reduce the scene's state at the grid "
                                                       "start to its one-number form");
  canon->add_option("scene", scene_path, "Scene JSON file")->required();
  canon->add_flag("--degrees", degrees, "Interpret scene angles as degrees");

  std::uint64_t seed = 42;
  int trials = 1000;
  bool inject_fault = false;
  CLI::App* verify = app.add_subcommand("verify", "Run the cross-module property suites");
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->add_option("--trials", trials, "Trials per suite")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_flag("--inject-fault", inject_fault)->group("");  // harness self-test hook

  double eta = 0.0;
  double axis_angle = 2.0 * std::numbers::pi / 3.0;
  CLI::App* wigner = app.add_subcommand("wigner", "Rotation from three squeezes: compose and "
                                                  "polar-decompose");
  wigner->add_option("--eta", eta, "Squeeze magnitude")->required();
  wigner->add_option("--axis-angle", axis_angle, "Angle between successive squeeze axes")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (sim->parsed()) return dispatch([&] { return run_simulate(scene_path, output_path, degrees); });
  if (canon->parsed()) return dispatch([&] { return run_canonicalize(scene_path, degrees); });
  if (verify->parsed()) return dispatch([&] { return run_verify(seed, trials, inject_fault); });
  return dispatch([&] { return run_wigner(eta, axis_angle); });
}
