#include "minorproc/ensembles.hpp"

#include <cmath>

#include "minorproc/numerics.hpp"

namespace minorproc::ens {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};

Eigen::MatrixXcd complex_ginibre(int m, Rng& rng) {
  Eigen::MatrixXcd G(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) G(i, j) = rng.complex_normal();
  return G;
}

}  // namespace

Eigen::MatrixXd symplectic_form(int n) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    J(2 * i + 1, 2 * i) = 1.0;
    J(2 * i, 2 * i + 1) = -1.0;
  }
  return J;
}

void check_structure(const StructuredHermitian& M, double tol) {
  const int dim = M.cls.ambient_dim();
  if (M.mat.rows() != dim || M.mat.cols() != dim)
    throw StructuralError("structured matrix has wrong dimension");
  const double scale = std::max(1.0, M.mat.cwiseAbs().maxCoeff());
  if ((M.mat - M.mat.adjoint()).cwiseAbs().maxCoeff() > tol * scale)
    throw StructuralError("matrix is not Hermitian");
  switch (M.cls.tag) {
    case ClassTag::A:
      break;
    case ClassTag::B:
    case ClassTag::D: {
      // purely imaginary antisymmetric: real part zero
      if (M.mat.real().cwiseAbs().maxCoeff() > tol * scale)
        throw StructuralError("matrix of orthogonal type has real entries");
      if ((M.mat + M.mat.transpose()).cwiseAbs().maxCoeff() > tol * scale)
        throw StructuralError("matrix of orthogonal type is not antisymmetric");
      break;
    }
    case ClassTag::C: {
      const Eigen::MatrixXd J = symplectic_form(M.cls.rank);
      const Eigen::MatrixXcd rel = M.mat.transpose() * J + J * M.mat;
      if (rel.cwiseAbs().maxCoeff() > tol * scale)
        throw StructuralError("matrix violates the symplectic relation");
      break;
    }
  }
}

StructuredHermitian sample_gaussian(const MatrixClass& cls, Rng& rng) {
  const int dim = cls.ambient_dim();
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
  switch (cls.tag) {
    case ClassTag::A: {
      // t = 1: diagonal N(0, 1/2); off-diagonal real/imag parts N(0, 1/4).
      const double sd_diag = std::sqrt(0.5);
      for (int i = 0; i < dim; ++i) H(i, i) = sd_diag * rng.normal();
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
          const Complex z{0.5 * rng.normal(), 0.5 * rng.normal()};
          H(i, j) = z;
          H(j, i) = std::conj(z);
        }
      break;
    }
    case ClassTag::B:
    case ClassTag::D: {
      // t = 1/2: H = iA with A_{jk} ~ N(0, 1/2) for j < k.
      const double sd = std::sqrt(0.5);
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
          const double a = sd * rng.normal();
          H(i, j) = kI * a;
          H(j, i) = -kI * a;
        }
      break;
    }
    case ClassTag::C: {
      // t = 1/2 on the quaternion block coordinates.
      const int n = cls.rank;
      const double sd_diag = std::sqrt(0.5);
      for (int k = 0; k < n; ++k) {
        const double p = sd_diag * rng.normal();
        const Complex q{sd_diag * rng.normal(), sd_diag * rng.normal()};
        H(2 * k, 2 * k) = p;
        H(2 * k + 1, 2 * k + 1) = -p;
        H(2 * k, 2 * k + 1) = q;
        H(2 * k + 1, 2 * k) = std::conj(q);
      }
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const Complex p{0.5 * rng.normal(), 0.5 * rng.normal()};
          const Complex q{0.5 * rng.normal(), 0.5 * rng.normal()};
          H(2 * k, 2 * l) = p;
          H(2 * k, 2 * l + 1) = q;
          H(2 * k + 1, 2 * l) = std::conj(q);
          H(2 * k + 1, 2 * l + 1) = -std::conj(p);
          H.block<2, 2>(2 * l, 2 * k) =
              H.block<2, 2>(2 * k, 2 * l).adjoint();
        }
      break;
    }
  }
  return {cls, std::move(H)};
}

GroupDescriptor group_of(const MatrixClass& cls) {
  switch (cls.tag) {
    case ClassTag::A: return {GroupFamily::Unitary, cls.rank};
    case ClassTag::B: return {GroupFamily::SpecialOrthogonal, 2 * cls.rank + 1};
    case ClassTag::C: return {GroupFamily::Symplectic, 2 * cls.rank};
    case ClassTag::D: return {GroupFamily::SpecialOrthogonal, 2 * cls.rank};
  }
  throw std::logic_error("unreachable");
}

namespace {

Eigen::MatrixXcd haar_unitary(int m, Rng& rng) {
  Eigen::MatrixXcd G = complex_ginibre(m, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
  Eigen::MatrixXcd Q = qr.householderQ();
  const Eigen::MatrixXcd R = qr.matrixQR();
  for (int j = 0; j < m; ++j) {
    Complex d = R(j, j);
    const double a = std::abs(d);
    Q.col(j) *= (a > 0 ? d / a : Complex{1.0, 0.0});
  }
  return Q;
}

Eigen::MatrixXcd haar_special_orthogonal(int m, Rng& rng) {
  Eigen::MatrixXd G(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) G(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
  Eigen::MatrixXd Q = qr.householderQ();
  const Eigen::MatrixXd R = qr.matrixQR();
  for (int j = 0; j < m; ++j)
    if (R(j, j) < 0) Q.col(j) = -Q.col(j);
  // Haar on O(m); a fixed reflection maps the det = -1 component onto SO(m).
  if (Q.determinant() < 0) Q.col(m - 1) = -Q.col(m - 1);
  return Q.cast<Complex>();
}

// Columns come in pairs (u, J conj(u)); Gram-Schmidt over the pair leaders
// yields a unitary matrix satisfying M^t J M = J.
Eigen::MatrixXcd haar_symplectic(int dim, Rng& rng) {
  const int n = dim / 2;
  const Eigen::MatrixXd J = symplectic_form(n);
  Eigen::MatrixXcd U(dim, dim);
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = rng.complex_normal();
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j < 2 * k; ++j)
        v -= (U.col(j).adjoint() * v)(0) * U.col(j);
    v.normalize();
    U.col(2 * k) = v;
    U.col(2 * k + 1) = J * v.conjugate();
  }
  return U;
}

}  // namespace

Eigen::MatrixXcd haar_element(const GroupDescriptor& g, Rng& rng) {
  switch (g.family) {
    case GroupFamily::Unitary: return haar_unitary(g.size, rng);
    case GroupFamily::SpecialOrthogonal:
      return haar_special_orthogonal(g.size, rng);
    case GroupFamily::Symplectic: return haar_symplectic(g.size, rng);
  }
  throw std::logic_error("unreachable");
}

Eigen::MatrixXcd chamber_representative(const MatrixClass& cls,
                                        const std::vector<double>& lambda) {
  const int n = cls.rank;
  if (static_cast<int>(lambda.size()) != n)
    throw std::domain_error("chamber_representative: wrong lambda length");
  const int dim = cls.ambient_dim();
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim, dim);
  switch (cls.tag) {
    case ClassTag::A:
      for (int i = 0; i < n; ++i) M(i, i) = lambda[i];
      break;
    case ClassTag::B:
    case ClassTag::D:
      for (int k = 0; k < n; ++k) {
        M(2 * k + 1, 2 * k) = kI * lambda[k];
        M(2 * k, 2 * k + 1) = -kI * lambda[k];
      }
      break;
    case ClassTag::C:
      for (int k = 0; k < n; ++k) {
        M(2 * k, 2 * k) = lambda[k];
        M(2 * k + 1, 2 * k + 1) = -lambda[k];
      }
      break;
  }
  return M;
}

StructuredHermitian sample_fixed_orbit(const MatrixClass& cls,
                                       const std::vector<double>& lambda,
                                       Rng& rng) {
  if (!cls.in_closed_chamber(lambda, 1e-12))
    throw std::domain_error("sample_fixed_orbit: lambda outside closed chamber");
  const Eigen::MatrixXcd rep = chamber_representative(cls, lambda);
  const Eigen::MatrixXcd k = haar_element(group_of(cls), rng);
  return {cls, k * rep * k.adjoint()};
}

Eigen::MatrixXcd sumC_term(const Eigen::VectorXcd& x,
                           const Eigen::VectorXcd& y) {
  const int n = static_cast<int>(x.size());
  if (y.size() != n) throw std::domain_error("sumC_term: size mismatch");
  Eigen::MatrixXcd S(2 * n, 2), R(2 * n, 2);
  for (int k = 0; k < n; ++k) {
    const Complex a = x(k), b = y(k);
    S(2 * k, 0) = a;
    S(2 * k, 1) = -b;
    S(2 * k + 1, 0) = std::conj(b);
    S(2 * k + 1, 1) = std::conj(a);
    R(2 * k, 0) = a;
    R(2 * k, 1) = b;
    R(2 * k + 1, 0) = std::conj(b);
    R(2 * k + 1, 1) = -std::conj(a);
  }
  return S * R.adjoint();
}

std::pair<StructuredHermitian, std::vector<double>> sample_sumC(int n, int k,
                                                                Rng& rng) {
  if (n < 1 || k < 1) throw std::domain_error("sample_sumC: n, k must be >= 1");
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int i = 0; i < k; ++i) {
    Eigen::VectorXcd x(n), y(n);
    for (int j = 0; j < n; ++j) {
      x(j) = rng.complex_normal();
      y(j) = rng.complex_normal();
    }
    M += sumC_term(x, y);
  }
  StructuredHermitian out{class_c(n), std::move(M)};
  std::vector<double> eigs = num::hermitian_eigenvalues(out.mat);
  eigs.resize(n);  // decreasing positive half of the +/- paired spectrum
  return {std::move(out), std::move(eigs)};
}

}  // namespace minorproc::ens
