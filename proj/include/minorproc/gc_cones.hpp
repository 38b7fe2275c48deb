#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minorproc/common.hpp"
#include "minorproc/minors.hpp"

namespace minorproc::gc {

// A cone configuration: levels[j] is the level-(j+1) vector x^{(j+1)}.
// Shapes per class (lengths of x^{(1)}, x^{(2)}, ...):
//   A: 1, 2, ..., n                       (n levels)
//   B: 1, 1, 2, 2, ..., n, n              (2n levels)
//   C: 1, 1, 2, 2, ..., n, n              (2n levels)
//   D: 1, 1, 2, 2, ..., n-1, n-1, n       (2n-1 levels)
// For B and D the last coordinate of each odd level is sign-free; all
// interlacing constraints apply to its absolute value.  The top level is
// the fixed row.
struct GCPattern {
  MatrixClass cls;
  std::vector<std::vector<double>> levels;
};

std::vector<int> level_lengths(const MatrixClass& cls);

// True when the (level, slot) coordinate is sign-free (odd levels' last slot
// for classes B and D); 1-based level, 0-based slot.
bool sign_free(const MatrixClass& cls, int level, int slot);

// x_1 >= y_1 >= x_2 >= ... >= x_r >= y_r, plus y_r >= x_{r+1} when x is one
// longer.  Throws std::domain_error on incompatible lengths.
bool interlaces(std::span<const double> x, std::span<const double> y,
                double slack = 0.0);

struct ValidationResult {
  bool ok = true;
  std::string violation;  // first violated constraint, empty when ok
  explicit operator bool() const { return ok; }
};

ValidationResult validate(const GCPattern& p, double slack = 1e-10);

// Admissible set of one coordinate with every other coordinate held fixed.
// Regular coordinates: the closed interval [lo, hi].  Sign-free coordinates:
// { t : lo <= |t| <= hi }, two intervals (or one symmetric interval when
// lo = 0).
struct CoordinateRange {
  double lo = 0.0;
  double hi = 0.0;
  bool sign_symmetric = false;
};

CoordinateRange coordinate_range(const GCPattern& p, int level, int slot);

// Pattern whose every level is the matching truncation of lambda.
GCPattern initial_pattern(const MatrixClass& cls,
                          const std::vector<double>& lambda);

// Systematic-scan Gibbs chain whose stationary law is uniform on the cone
// with fixed top row lambda.
class GibbsChain {
 public:
  GibbsChain(const MatrixClass& cls, const std::vector<double>& lambda);
  void sweep(Rng& rng);
  const GCPattern& state() const { return state_; }
  GCPattern& state() { return state_; }

 private:
  GCPattern state_;
};

// State after `sweeps` full sweeps from the truncation initial pattern.
GCPattern sample_uniform(const MatrixClass& cls,
                         const std::vector<double>& lambda, int sweeps,
                         Rng& rng);

// Even-index levels of a class-C pattern, in order.
std::vector<std::vector<double>> project_c(const GCPattern& p);

// Pattern built from a minor sequence (classes A, B, D: all levels).
GCPattern pattern_from_minor_sequence(const minors::MinorSequence& seq);

// Feasibility of a class-C even-level family: true when valid odd levels
// interleaving the given even levels exist.
ValidationResult validate_even_levels(
    const std::vector<std::vector<double>>& even_levels, double slack = 1e-10);

}  // namespace minorproc::gc
