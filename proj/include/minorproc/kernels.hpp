#pragma once

#include <memory>
#include <vector>

#include "minorproc/common.hpp"
#include "minorproc/numerics.hpp"

namespace minorproc::kern {

// Levels carried by the interlaced configuration of each class:
// 1..n (A), 1..2n (B), 1..n (C), 1..2n-1 (D).
int level_max(const MatrixClass& cls);

// phi_A(r) = n - r, phi_C(r) = 2(n - r), phi_B(r) = 2n - r,
// phi_D(r) = 2n - r - 1.  Throws std::domain_error for r out of range.
int phi_level(const MatrixClass& cls, int r);

// -(z - y)^{m-1}/(m-1)! 1_{y <= z} for s > r with m = phi(r) - phi(s); zero
// for s <= r.  The m = 1, y = z value is -1.  m <= 0 with s > r cannot occur
// for valid level pairs and throws StructuralError.
double transition_term(const MatrixClass& cls, int r, int s, double y,
                       double z);

// Everything needed to evaluate a correlation kernel: the psi family driving
// the radial density (proportional to Delta_nu(x) det(psi_j(x_i))) and,
// when available, the dual chi family with int chi_i psi_j = delta_ij.  The
// chi_i live in the span of fixed Hermite functions and are represented by
// their coefficients; derivatives are exact.
class KernelSpec {
 public:
  KernelSpec(MatrixClass cls, std::vector<num::WeightFunction> psi);
  KernelSpec(MatrixClass cls, std::vector<num::WeightFunction> psi,
             std::vector<int> hermite_indices, Eigen::MatrixXd chi_coeffs);

  const MatrixClass& cls() const { return cls_; }
  int n() const { return cls_.rank; }
  const num::WeightFunction& psi(int k) const { return psi_[k]; }
  bool has_chi() const { return chi_coeffs_.size() > 0; }

  // [psi_k]^{-i}(y)
  double psi_iterated(int k, int i, double y) const;
  // d^order chi_k / dz^order
  double chi_derivative(int k, int order, double z) const;
  double chi(int k, double z) const { return chi_derivative(k, 0, z); }

  // alpha_nu with 1/alpha = int Delta(x) prod psi_i(x_i) dx; computed on
  // first use (n <= 3) and cached.
  double alpha() const;

  // max |int chi_i psi_j - delta_ij| over i, j
  double biorthogonality_residual() const;

 private:
  MatrixClass cls_;
  std::vector<num::WeightFunction> psi_;
  std::vector<int> hermite_indices_;
  Eigen::MatrixXd chi_coeffs_;  // chi_i = sum_m chi_coeffs(i,m) h_{indices[m]}
  struct AlphaCache;
  std::shared_ptr<AlphaCache> alpha_cache_;
};

// Kernel from the psi family alone: transition term plus
// alpha * sum_k [psi_k]^{-phi(r)}(y) * I_k(s, z), where I_k integrates the
// phi(s)-fold slot-k derivative of Delta against the other weights.
// Supported for n <= 3 (nested quadrature).
double kernel_generic(const KernelSpec& spec, int r, double y, int s, double z,
                      const num::QuadratureOptions& opts = {});

// Kernel from the biorthogonal pair: transition term plus
// sum_k [psi_k]^{-phi(r)}(y) chi_k^{(phi(s))}(z).
double kernel_biorthogonal(const KernelSpec& spec, int r, double y, int s,
                           double z);

// Gaussian families per class (weight e^{-x^2}):
//   A: psi_i = x^{i-1} e^{-x^2};  B, C: x^{2i-1} e^{-x^2} 1_{x>0};
//   D: x^{2i-2} e^{-x^2} 1_{x>0}.
// chi_i is the dual basis inside the span of the matching Hermite functions
// (h_{i-1} for A, h_{2i-1} for B/C, h_{2i-2} for D), so that
// int chi_i psi_j = delta_ij holds exactly; the coefficients are computed at
// construction, the leading term being the printed Hermite function.
KernelSpec gaussian_spec(const MatrixClass& cls);

// Laguerre and Jacobi families (class A, psi mode only):
//   psi_i = x^{i-1} x^alpha e^{-beta x} 1_{x>0}
//   psi_i = x^{i-1} x^alpha (1-x)^beta 1_{0<x<1}
KernelSpec laguerre_spec(int n, double alpha, double beta);
KernelSpec jacobi_spec(int n, double alpha, double beta);

// Kernel with a deterministic radial part: the weights psi_i(x) dx are
// replaced by unit atoms at |lambda_i|.  Levels with phi(r) = 0 are purely
// atomic; their atom weights are reported separately instead of evaluating a
// density there.
class DeterministicKernel {
 public:
  DeterministicKernel(MatrixClass cls, std::vector<double> lambda);

  const MatrixClass& cls() const { return cls_; }
  bool atomic_level(int r) const { return phi_level(cls_, r) == 0; }

  // Continuous kernel value; requires phi(r) > 0 for the first argument.
  double continuous_value(int r, double y, int s, double z) const;

  // Weight of the atom at |lambda_k| in the one-point measure of an atomic
  // level r (phi(r) = 0).
  double atom_weight(int r, int k) const;

  double atom_location(int k) const { return abs_lambda_[k]; }

 private:
  double collapsed_integral(int k, int s, double z) const;
  MatrixClass cls_;
  std::vector<double> abs_lambda_;
  double alpha_;
};

double kernel_deterministic(const MatrixClass& cls,
                            const std::vector<double>& lambda, int r, double y,
                            int s, double z);

// Kernel of the semi-infinite antisymmetric Gaussian minor process, exactly
// as printed in its source: summation from i = 0 and unit prefactors.
double kernel_corollary(int r, double y, int s, double z,
                        const num::QuadratureOptions& opts = {});

// Reconciled index convention: summation from i = 1 and an overall factor 2
// on the Hermite and tail sums.  This is the variant that matches both the
// exact level-1 density and the finite-rank kernels.
double kernel_corollary_adjusted(int r, double y, int s, double z,
                                 const num::QuadratureOptions& opts = {});

}  // namespace minorproc::kern
