#include "psphere/trajectory.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "psphere/desitter.hpp"

namespace psphere {

std::vector<TrajectoryRow> simulate_scene(const Scene& scene) {
  const ElementPipeline pipe = scene.pipeline();
  const double ab = scene.amp_a * scene.amp_b;

  std::vector<TrajectoryRow> rows;
  rows.reserve(static_cast<std::size_t>(scene.grid.steps));
  for (int i = 0; i < scene.grid.steps; ++i) {
    const double t = scene.grid.at(i);
    const BeamState state = scene.beam_at(t);
    const CoherencyMatrix transformed = pipe.apply(density_matrix(state));
    const StokesVector sv = stokes_from_coherency(transformed);
    const SphereGeometry geom = sphere_geometry(state);
    const DecoherenceAngle chi = chi_from_time(state.lambda_rate, t);
    const double det_rho = rho_of_chi(state.amp_a, state.amp_b, state.phase, chi).det();
    const double det_sigma = sigma_of_chi(state.amp_a, state.amp_b, state.phase, chi).det();

    const double drift = std::abs(det_rho + det_sigma - ab * ab);
    if (drift > kComplementarityBudget) {
      throw InvariantViolation("complementarity breach at t = " + std::to_string(t) +
                               ": |det_rho + det_sigma - (AB)^2| = " + std::to_string(drift));
    }

    rows.push_back({t, sv.s0, sv.s1, sv.s2, sv.s3, transformed.det(), geom.outer_s,
                    geom.inner_r, chi.value(), det_rho, det_sigma});
  }
  return rows;
}

namespace {

void append_field(std::string& line, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  line += buf;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<TrajectoryRow>& rows) {
  out << kTrajectoryHeader << '\n';
  for (const TrajectoryRow& r : rows) {
    std::string line;
    const double fields[] = {r.t,       r.s0,       r.s1,  r.s2,      r.s3,       r.det,
                             r.sphere_s, r.sphere_r, r.chi, r.det_rho, r.det_sigma};
    for (double v : fields) {
      if (!line.empty()) line += ',';
      append_field(line, v);
    }
    out << line << '\n';
  }
}

}  // namespace psphere
