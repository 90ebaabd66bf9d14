#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "psphere/poincare.hpp"
#include "psphere/stokes.hpp"

namespace psphere {

/// Scene file failed to parse or validate. The message names the offending
/// field (or the byte position for malformed JSON).
class SceneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ElementKind { Rotator, PhaseShifter, Squeezer, Attenuator };

struct ElementSpec {
  ElementKind kind;
  double param1 = 0.0;  // theta | phi | eta | eta1
  double param2 = 0.0;  // eta2 (attenuator only)
};

/// Inclusive, evenly spaced time grid with `steps` sample points.
struct TimeGrid {
  double start = 0.0;
  double end = 0.0;
  int steps = 1;

  double at(int i) const {
    return steps > 1 ? start + (end - start) * i / (steps - 1) : start;
  }
};

/// Ordered element list collapsed into one overall amplitude factor (from
/// attenuators) and one unimodular matrix.
struct ElementPipeline {
  double scalar = 1.0;
  Mat2c op = Mat2c::identity();

  /// scalar^2 * (op C op^dagger): intensities scale with the square of the
  /// amplitude factor.
  CoherencyMatrix apply(const CoherencyMatrix& c) const;
};

struct Scene {
  double amp_a = 1.0;
  double amp_b = 1.0;
  double phase = 0.0;
  double lambda_rate = 0.0;
  std::vector<ElementSpec> elements;
  TimeGrid grid;

  BeamState beam_at(double t) const { return {amp_a, amp_b, phase, lambda_rate, t}; }
  ElementPipeline pipeline() const;
};

/// Parse a scene from JSON text:
///   {"beam": {"A":…, "B":…, "phi":…, "lambda":…},
///    "elements": [{"kind":"rotator","theta":…}, …],   // optional
///    "time_grid": {"start":…, "end":…, "steps":…}}
/// Element kinds: rotator{theta}, phase_shifter{phi}, squeezer{eta},
/// attenuator{eta1,eta2}. Angles are radians unless degrees=true, which
/// converts beam.phi, rotator.theta, and phase_shifter.phi at this boundary.
Scene parse_scene_text(const std::string& text, bool degrees = false);

Scene parse_scene_file(const std::string& path, bool degrees = false);

}  // namespace psphere
