#pragma once

#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "psphere/scene.hpp"

namespace psphere {

/// One sample of a simulated run: Stokes components and determinant of the
/// pipeline-transformed coherency matrix, plus the state-level sphere radii,
/// decoherence angle, and the complementary determinant pair.
struct TrajectoryRow {
  double t;
  double s0, s1, s2, s3;
  double det;       // det of the transformed coherency matrix
  double sphere_s;  // outer radius of the untransformed state
  double sphere_r;  // inner radius of the untransformed state
  double chi;
  double det_rho;
  double det_sigma;
};

/// A numerical conservation law failed beyond its enforcement budget.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every row must satisfy det_rho + det_sigma = (AB)^2 within this budget;
/// a breach raises InvariantViolation.
inline constexpr double kComplementarityBudget = 1e-8;

std::vector<TrajectoryRow> simulate_scene(const Scene& scene);

inline constexpr const char* kTrajectoryHeader =
    "t,S0,S1,S2,S3,det,s,r,chi,det_rho,det_sigma";

/// CSV with the fixed header, 17-significant-digit doubles, LF endings.
void write_csv(std::ostream& out, const std::vector<TrajectoryRow>& rows);

}  // namespace psphere
