#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

#include "minorproc/common.hpp"

namespace minorproc::num {

// ---------------------------------------------------------------------------
// Adaptive quadrature (Gauss-Kronrod 7-15 with interval bisection).
// ---------------------------------------------------------------------------

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-13;
  int max_intervals = 4000;
};

// Integral over a finite interval [a, b].  `splits` seeds subdivision points
// (indicator kinks and the like).  Throws NumericError when the error
// estimate cannot be brought under tolerance within the interval budget.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {},
                 std::span<const double> splits = {});

// Integral over [a, +inf); the half line is mapped onto (0, 1].
double integrate_tail(const std::function<double(double)>& f, double a,
                      const QuadratureOptions& opts = {});

// Integral over the whole real line, split at zero.
double integrate_line(const std::function<double(double)>& f,
                      const QuadratureOptions& opts = {});

// ---------------------------------------------------------------------------
// Weight functions psi.
// ---------------------------------------------------------------------------

struct Support {
  enum Kind { WholeLine, PositiveHalfLine, UnitInterval, Interval };
  Kind kind = WholeLine;
  double lo = 0.0;
  double hi = 0.0;  // used by Interval only

  static Support whole_line() { return {WholeLine, 0.0, 0.0}; }
  static Support positive_half_line() { return {PositiveHalfLine, 0.0, 0.0}; }
  static Support unit_interval() { return {UnitInterval, 0.0, 1.0}; }
  static Support interval(double a, double b) { return {Interval, a, b}; }

  bool bounded_above() const { return kind == UnitInterval || kind == Interval; }
  bool bounded_below() const { return kind != WholeLine; }
  double lower() const { return kind == PositiveHalfLine ? 0.0 : lo; }
  double upper() const { return kind == UnitInterval ? 1.0 : hi; }
  bool contains(double x) const {
    if (bounded_below() && x < lower()) return false;
    if (bounded_above() && x > upper()) return false;
    return true;
  }
};

struct WeightFunction {
  std::function<double(double)> evaluator;
  Support support = Support::whole_line();
  bool finite_moments = true;

  // Evaluation is masked to the support.
  double operator()(double x) const {
    return support.contains(x) ? evaluator(x) : 0.0;
  }
};

// Integral of g over the part of `support` at or above `from`.
double integrate_upper(const std::function<double(double)>& g,
                       const Support& support, double from,
                       const QuadratureOptions& opts = {});

// [psi]^{-i}(y): psi itself for i = 0, and for i > 0 the tail integral
// int_y^inf (x-y)^{i-1}/(i-1)! psi(x) dx.
double iterated_integral(const WeightFunction& psi, int order, double y,
                         const QuadratureOptions& opts = {});

// ---------------------------------------------------------------------------
// Orthonormal Hermite functions: int h_i h_j e^{-x^2} dx = delta_ij.
// ---------------------------------------------------------------------------

double hermite_normalized(int degree, double x);

// Exact derivative: h_m' = sqrt(2m) h_{m-1}; zero beyond the degree.
double hermite_normalized_derivative(int degree, int order, double x);

// ---------------------------------------------------------------------------
// Polynomials in a single distinguished variable.
// ---------------------------------------------------------------------------

class SlotPolynomial {
 public:
  SlotPolynomial() = default;  // the zero polynomial
  explicit SlotPolynomial(std::vector<double> coeffs);  // ascending powers

  static SlotPolynomial constant(double c);
  static SlotPolynomial linear(double c0, double c1);      // c0 + c1 x
  static SlotPolynomial quadratic(double c0, double c1, double c2);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  double eval(double x) const;
  SlotPolynomial derivative(int order = 1) const;
  SlotPolynomial& operator*=(const SlotPolynomial& rhs);
  const std::vector<double>& coefficients() const { return coeffs_; }

 private:
  void normalize();
  std::vector<double> coeffs_;
};

// ---------------------------------------------------------------------------
// Class polynomials Delta_nu and their partial derivatives.
//
//   Delta_A = prod_{i<j} (x_i - x_j)
//   Delta_B = Delta_C = prod_i x_i * prod_{i<j} (x_i^2 - x_j^2)
//   Delta_D = prod_{i<j} (x_i^2 - x_j^2)
// ---------------------------------------------------------------------------

double delta(const MatrixClass& cls, std::span<const double> x);

// Delta_nu as a polynomial in slot `k` (0-based), all other coordinates held
// at their values in x; x[k] itself is ignored.
SlotPolynomial delta_in_slot(const MatrixClass& cls, int k,
                             std::span<const double> x);

// order-fold partial derivative in slot k, evaluated at x.  Order 0 returns
// delta(cls, x) itself.
double delta_partial(const MatrixClass& cls, int k, int order,
                     std::span<const double> x);

// ---------------------------------------------------------------------------
// Linear-algebra helpers.
// ---------------------------------------------------------------------------

// Eigenvalues of a Hermitian matrix, sorted decreasing.  Throws
// StructuralError when H is not Hermitian within 1e-10 (max-norm, relative
// to max(1, |H|_max)).
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& H);

// Eigenvalues (decreasing) together with the matching unitary of column
// eigenvectors.
std::pair<std::vector<double>, Eigen::MatrixXcd> hermitian_eigensystem(
    const Eigen::MatrixXcd& H);

// Sign of the Pfaffian of an even-dimensional real antisymmetric matrix:
// +1, -1, or 0 when A is singular within tolerance.  Uses orthogonal
// reduction to skew tridiagonal form.
int pfaffian_sign(Eigen::MatrixXd A, double singular_tol = 1e-12);

double factorial(int n);

}  // namespace minorproc::num
