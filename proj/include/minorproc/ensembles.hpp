#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "minorproc/common.hpp"

namespace minorproc::ens {

// A Hermitian matrix carrying its class tag.  Structure by class:
//   A:  any Hermitian n x n matrix;
//   B, D:  i times a real antisymmetric matrix (all entries purely imaginary);
//   C:  Hermitian 2n x 2n with H^t J + J H = 0, where J is block diagonal
//       with 2x2 blocks [[0, -1], [1, 0]].
struct StructuredHermitian {
  MatrixClass cls;
  Eigen::MatrixXcd mat;
};

// The J matrix of the symplectic relation, size 2n.
Eigen::MatrixXd symplectic_form(int n);

// Throws StructuralError if the matrix violates its class invariants.
void check_structure(const StructuredHermitian& M, double tol = 1e-10);

// Gaussian measure with density proportional to e^{-t Tr(H^2)} on the class
// structure space; t = 1 for A and 1/2 for B, C, D.
StructuredHermitian sample_gaussian(const MatrixClass& cls, Rng& rng);

enum class GroupFamily { Unitary, SpecialOrthogonal, Symplectic };

// size is the matrix dimension (2n for the symplectic group).
struct GroupDescriptor {
  GroupFamily family;
  int size;
};

GroupDescriptor group_of(const MatrixClass& cls);

// Haar-distributed group element.  Unitary via QR of a complex Ginibre
// matrix with diagonal phase correction; special orthogonal via real QR with
// sign correction and a final column flip when det = -1; symplectic via
// pair-respecting Gram-Schmidt of a complex Ginibre matrix.
Eigen::MatrixXcd haar_element(const GroupDescriptor& g, Rng& rng);

// Canonical chamber representative with radial part lambda:
//   A:  diag(lambda)
//   D:  2x2 blocks [[0, -i l_k], [i l_k, 0]] on the diagonal
//   B:  the D form bordered by a zero row and column
//   C:  2x2 blocks diag(l_k, -l_k)
Eigen::MatrixXcd chamber_representative(const MatrixClass& cls,
                                        const std::vector<double>& lambda);

// k Lambda(lambda) k^* with k Haar in the class group.  Throws
// std::domain_error when lambda is outside the closed chamber.
StructuredHermitian sample_fixed_orbit(const MatrixClass& cls,
                                       const std::vector<double>& lambda,
                                       Rng& rng);

// One summand S(x, y) R(x, y)^* of the symplectic Laguerre-type process,
// built from the 2x2 blocks
//   s(a,b) = [[a, -b], [conj(b), conj(a)]],
//   r(a,b) = [[a,  b], [conj(b), -conj(a)]].
Eigen::MatrixXcd sumC_term(const Eigen::VectorXcd& x,
                           const Eigen::VectorXcd& y);

// M_k = sum of k independent terms with standard complex Gaussian inputs,
// together with its decreasing positive eigenvalues.
std::pair<StructuredHermitian, std::vector<double>> sample_sumC(int n, int k,
                                                                Rng& rng);

}  // namespace minorproc::ens
