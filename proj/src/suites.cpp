#include "psphere/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "psphere/desitter.hpp"
#include "psphere/jones.hpp"
#include "psphere/poincare.hpp"
#include "psphere/stokes.hpp"

namespace psphere {

namespace {

template <class... Args>
std::string format_params(const char* fmt, Args... args) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

BeamState random_mixed_state(RandomStream& rng) {
  return {rng.uniform(0.2, 2.0), rng.uniform(0.2, 2.0),
          rng.uniform(-std::numbers::pi, std::numbers::pi), rng.uniform(0.2, 2.0),
          rng.uniform(0.1, 3.0)};
}

struct Tracker {
  double max_deviation = 0.0;
  std::string worst_case = "none";

  void offer(double dev, std::string what) {
    if (dev > max_deviation) {
      max_deviation = dev;
      worst_case = std::move(what);
    }
  }
};

}  // namespace

Mat2c random_sl2c(RandomStream& rng) {
  Mat2c g = Mat2c::identity();
  for (int i = 0; i < 6; ++i) {
    const double p = rng.uniform(-1.2, 1.2);
    switch (rng.uniform_int(0, 2)) {
      case 0: g = rotator(p) * g; break;
      case 1: g = phase_shifter(p) * g; break;
      default: g = squeezer(p) * g; break;
    }
  }
  return g;
}

SuiteResult suite_homomorphism(const SuiteOptions& opt) {
  RandomStream rng(opt.seed);
  Tracker tr;
  for (int i = 0; i < opt.trials; ++i) {
    const Mat2c g1 = random_sl2c(rng);
    const Mat2c g2 = random_sl2c(rng);
    const double dev =
        max_abs_diff(mueller_from_sl2c(g1 * g2), mueller_from_sl2c(g1) * mueller_from_sl2c(g2));
    tr.offer(dev, "pair #" + std::to_string(i));
  }
  return {"homomorphism", tr.max_deviation, 1e-9, tr.worst_case};
}

SuiteResult suite_metric_preservation(const SuiteOptions& opt) {
  RandomStream rng(opt.seed + 1);
  Tracker tr;
  for (int i = 0; i < opt.trials; ++i) {
    // Four-space: Minkowski norm under a random induced transformation.
    const MuellerMatrix m = mueller_from_sl2c(random_sl2c(rng));
    const StokesVector v(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                         rng.uniform(-2.0, 2.0));
    tr.offer(std::abs(minkowski_norm(m.apply(v)) - minkowski_norm(v)),
             "4-vector trial #" + std::to_string(i));

    // Five-space: O(3,2) norm under a random product of rotations and lifts.
    O32Matrix big = O32Matrix::identity();
    for (int k = 0; k < 3; ++k) {
      switch (rng.uniform_int(0, 2)) {
        case 0:
          big = tu_rotation(DecoherenceAngle(rng.uniform(0.0, std::numbers::pi / 2.0))) * big;
          break;
        case 1: big = lift_first(mueller_from_sl2c(random_sl2c(rng))) * big; break;
        default: big = lift_second(mueller_from_sl2c(random_sl2c(rng))) * big; break;
      }
    }
    const FiveVector w(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                       rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    tr.offer(std::abs(o32_norm(big.apply(w)) - o32_norm(w)),
             "5-vector trial #" + std::to_string(i));
  }
  return {"metric_preservation", tr.max_deviation, 1e-9, tr.worst_case};
}

SuiteResult suite_determinant_bridge(const SuiteOptions& opt) {
  RandomStream rng(opt.seed + 2);
  Tracker tr;
  for (int i = 0; i < opt.trials; ++i) {
    const double d1 = rng.uniform(-2.0, 2.0);
    const double d2 = rng.uniform(-2.0, 2.0);
    const cplx off(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    const CoherencyMatrix c(Mat2c(cplx(d1), off, std::conj(off), cplx(d2)));
    const double dev = std::abs(minkowski_norm(stokes_from_coherency(c)) - 2.0 * c.det());
    tr.offer(dev, format_params("S11=%.6g S22=%.6g S12=%.6g%+.6gi", d1, d2, off.real(),
                                off.imag()));
  }
  return {"determinant_bridge", tr.max_deviation, 1e-10, tr.worst_case};
}

SuiteResult suite_complementarity(const SuiteOptions& opt) {
  RandomStream rng(opt.seed + 3);
  Tracker tr;
  for (int i = 0; i < opt.trials; ++i) {
    const double a = rng.uniform(0.2, 2.0);
    const double b = rng.uniform(0.2, 2.0);
    const double phase = rng.uniform(-std::numbers::pi, std::numbers::pi);
    const DecoherenceAngle chi(rng.uniform(0.0, std::numbers::pi / 2.0));
    const double dev = std::abs(rho_of_chi(a, b, phase, chi).det() +
                                sigma_of_chi(a, b, phase, chi).det() - a * a * b * b);
    tr.offer(dev, format_params("A=%.6g B=%.6g phi=%.6g chi=%.6g", a, b, phase, chi.value()));
  }
  return {"complementarity", tr.max_deviation, 1e-12, tr.worst_case};
}

SuiteResult suite_dual_path(const SuiteOptions& opt) {
  RandomStream rng(opt.seed + 4);
  Tracker tr;
  for (int i = 0; i < opt.trials; ++i) {
    const BeamState state = random_mixed_state(rng);
    const double dt = rng.uniform(0.05, 2.0);
    const DecohereResult direct = decohere_step(state, dt, DecoherencePath::Direct);
    const DecohereResult desitter = decohere_step(state, dt, DecoherencePath::DeSitter);
    const double dev = max_abs_diff(direct.rho.matrix(), desitter.rho.matrix());
    tr.offer(dev, format_params("A=%.6g B=%.6g lambda=%.6g t=%.6g dt=%.6g", state.amp_a,
                                state.amp_b, state.lambda_rate, state.time, dt));
  }
  return {"dual_path", tr.max_deviation, 1e-9, tr.worst_case};
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt) {
  if (opt.trials < 1) throw std::invalid_argument("run_all_suites: trials must be >= 1");
  std::vector<SuiteResult> results = {
      suite_homomorphism(opt), suite_metric_preservation(opt), suite_determinant_bridge(opt),
      suite_complementarity(opt), suite_dual_path(opt)};
  if (opt.inject_fault) {
    for (SuiteResult& r : results) {
      r.max_deviation = std::max(r.max_deviation, r.tolerance * 1e3);
      r.worst_case = "fault injection hook";
    }
  }
  return results;
}

}  // namespace psphere
