#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "psphere/mat2.hpp"

namespace psphere {

/// Deterministic uniform stream: identical output for identical seeds on
/// every platform (mt19937_64 is fully specified; the standard distributions
/// are not, so the mapping to doubles is done by hand).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double next01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next01(); }

  /// Uniform integer in [lo, hi], both inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next01() * (hi - lo + 1));
  }

 private:
  std::mt19937_64 gen_;
};

/// Random SL(2,C) element: product of six random rotator / phase-shifter /
/// squeezer factors with parameters in [-1.2, 1.2].
Mat2c random_sl2c(RandomStream& rng);

struct SuiteResult {
  std::string name;
  double max_deviation;
  double tolerance;
  std::string worst_case;  // inputs that produced max_deviation

  bool passed() const { return max_deviation <= tolerance; }
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  int trials = 1000;
  /// Fault-injection hook: inflates every reported deviation past its
  /// tolerance, proving the failure path (exit 5) is live. Never set outside
  /// harness self-tests.
  bool inject_fault = false;
};

SuiteResult suite_homomorphism(const SuiteOptions& opt);        // tol 1e-9
SuiteResult suite_metric_preservation(const SuiteOptions& opt); // tol 1e-9
SuiteResult suite_determinant_bridge(const SuiteOptions& opt);  // tol 1e-10
SuiteResult suite_complementarity(const SuiteOptions& opt);     // tol 1e-12
SuiteResult suite_dual_path(const SuiteOptions& opt);           // tol 1e-9

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt);

}  // namespace psphere
