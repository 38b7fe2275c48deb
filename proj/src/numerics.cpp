#include "minorproc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace minorproc::num {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK qk15).
constexpr double kGK_X[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kGK_WK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kGK_WG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = kGK_WK[7] * fc;
  double gauss = kGK_WG[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double fp = f(c + h * kGK_X[i]);
    const double fm = f(c - h * kGK_X[i]);
    kron += kGK_WK[i] * (fp + fm);
    if (i % 2 == 1) gauss += kGK_WG[i / 2] * (fp + fm);
  }
  const double value = kron * h;
  const double err = std::abs((kron - gauss) * h);
  return {a, b, value, err};
}

double adaptive(const std::function<double(double)>& f, double a, double b,
                const QuadratureOptions& opts, std::span<const double> splits) {
  std::vector<double> edges{a};
  for (double s : splits)
    if (s > a && s < b) edges.push_back(s);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());

  std::priority_queue<Panel> panels;
  double total = 0.0, err = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = gk15(f, edges[i], edges[i + 1]);
    total += p.value;
    err += p.err;
    panels.push(p);
  }

  int count = static_cast<int>(panels.size());
  auto tolerance = [&] {
    return std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
  };
  while (err > tolerance() && count < opts.max_intervals) {
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval at floating-point resolution; cannot refine further
      panels.push({worst.a, worst.b, worst.value, 0.0});
      err -= worst.err;
      continue;
    }
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.err + right.err - worst.err;
    panels.push(left);
    panels.push(right);
    ++count;
  }
  if (err > tolerance())
    throw NumericError("quadrature failed to converge on [" +
                           std::to_string(a) + ", " + std::to_string(b) + "]",
                       err);
  return total;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts, std::span<const double> splits) {
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, opts, splits);
  return adaptive(f, a, b, opts, splits);
}

double integrate_tail(const std::function<double(double)>& f, double a,
                      const QuadratureOptions& opts) {
  // x = a + t/(1-t) maps (0,1) onto (a, inf); dx = dt/(1-t)^2.
  auto g = [&f, a](double t) {
    const double u = 1.0 - t;
    const double x = a + t / u;
    return f(x) / (u * u);
  };
  return adaptive(g, 0.0, 1.0, opts, {});
}

double integrate_line(const std::function<double(double)>& f,
                      const QuadratureOptions& opts) {
  auto reflected = [&f](double x) { return f(-x); };
  return integrate_tail(f, 0.0, opts) + integrate_tail(reflected, 0.0, opts);
}

double integrate_upper(const std::function<double(double)>& g,
                       const Support& support, double from,
                       const QuadratureOptions& opts) {
  const double lo = support.bounded_below() ? std::max(from, support.lower())
                                            : from;
  if (support.bounded_above()) {
    const double hi = support.upper();
    if (lo >= hi) return 0.0;
    return integrate(g, lo, hi, opts);
  }
  return integrate_tail(g, lo, opts);
}

double iterated_integral(const WeightFunction& psi, int order, double y,
                         const QuadratureOptions& opts) {
  if (order < 0) throw std::domain_error("iterated_integral: order < 0");
  if (order == 0) return psi(y);
  const double inv_fact = 1.0 / factorial(order - 1);
  auto g = [&psi, order, y, inv_fact](double x) {
    return std::pow(x - y, order - 1) * inv_fact * psi(x);
  };
  return integrate_upper(g, psi.support, y, opts);
}

double hermite_normalized(int degree, double x) {
  // h_{k+1} = sqrt(2/(k+1)) x h_k - sqrt(k/(k+1)) h_{k-1},  h_0 = pi^{-1/4}.
  constexpr double kPiQuarterInv = 0.75112554446494248286;  // pi^{-1/4}
  double prev = kPiQuarterInv;
  if (degree == 0) return prev;
  double cur = std::sqrt(2.0) * x * kPiQuarterInv;
  for (int k = 1; k < degree; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * x * cur -
                        std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_normalized_derivative(int degree, int order, double x) {
  if (order < 0) throw std::domain_error("hermite derivative: order < 0");
  if (order > degree) return 0.0;
  double factor = 1.0;
  for (int t = 0; t < order; ++t)
    factor *= std::sqrt(2.0 * (degree - t));
  return factor * hermite_normalized(degree - order, x);
}

SlotPolynomial::SlotPolynomial(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

SlotPolynomial SlotPolynomial::constant(double c) {
  return SlotPolynomial{{c}};
}

SlotPolynomial SlotPolynomial::linear(double c0, double c1) {
  return SlotPolynomial{{c0, c1}};
}

SlotPolynomial SlotPolynomial::quadratic(double c0, double c1, double c2) {
  return SlotPolynomial{{c0, c1, c2}};
}

void SlotPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double SlotPolynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

SlotPolynomial SlotPolynomial::derivative(int order) const {
  if (order < 0) throw std::domain_error("polynomial derivative: order < 0");
  std::vector<double> c = coeffs_;
  for (int t = 0; t < order; ++t) {
    if (c.empty()) break;
    std::vector<double> d(c.size() > 1 ? c.size() - 1 : 0);
    for (std::size_t i = 1; i < c.size(); ++i)
      d[i - 1] = c[i] * static_cast<double>(i);
    c = std::move(d);
  }
  return SlotPolynomial(std::move(c));
}

SlotPolynomial& SlotPolynomial::operator*=(const SlotPolynomial& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<double> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

namespace {

bool has_coordinate_product(ClassTag tag) {
  return tag == ClassTag::B || tag == ClassTag::C;
}

bool squared_differences(ClassTag tag) { return tag != ClassTag::A; }

}  // namespace

double delta(const MatrixClass& cls, std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  double acc = 1.0;
  if (has_coordinate_product(cls.tag))
    for (int i = 0; i < n; ++i) acc *= x[i];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      acc *= squared_differences(cls.tag) ? (x[i] * x[i] - x[j] * x[j])
                                          : (x[i] - x[j]);
  return acc;
}

SlotPolynomial delta_in_slot(const MatrixClass& cls, int k,
                             std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  if (k < 0 || k >= n) throw std::domain_error("delta_in_slot: bad slot");
  SlotPolynomial poly = SlotPolynomial::constant(1.0);
  if (has_coordinate_product(cls.tag)) {
    for (int i = 0; i < n; ++i) {
      if (i == k)
        poly *= SlotPolynomial::linear(0.0, 1.0);
      else
        poly *= SlotPolynomial::constant(x[i]);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (squared_differences(cls.tag)) {
        if (i == k)
          poly *= SlotPolynomial::quadratic(-x[j] * x[j], 0.0, 1.0);
        else if (j == k)
          poly *= SlotPolynomial::quadratic(x[i] * x[i], 0.0, -1.0);
        else
          poly *= SlotPolynomial::constant(x[i] * x[i] - x[j] * x[j]);
      } else {
        if (i == k)
          poly *= SlotPolynomial::linear(-x[j], 1.0);
        else if (j == k)
          poly *= SlotPolynomial::linear(x[i], -1.0);
        else
          poly *= SlotPolynomial::constant(x[i] - x[j]);
      }
    }
  }
  return poly;
}

double delta_partial(const MatrixClass& cls, int k, int order,
                     std::span<const double> x) {
  if (order < 0) throw std::domain_error("delta_partial: order < 0");
  if (order == 0) return delta(cls, x);
  return delta_in_slot(cls, k, x).derivative(order).eval(x[k]);
}

std::pair<std::vector<double>, Eigen::MatrixXcd> hermitian_eigensystem(
    const Eigen::MatrixXcd& H) {
  if (H.rows() != H.cols())
    throw StructuralError("hermitian_eigensystem: matrix not square");
  const auto m = H.rows();
  if (m == 0) return {{}, Eigen::MatrixXcd(0, 0)};
  const double scale = H.cwiseAbs().maxCoeff();
  const double residual = (H - H.adjoint()).cwiseAbs().maxCoeff();
  if (residual > 1e-10 * std::max(1.0, scale))
    throw StructuralError("hermitian_eigensystem: matrix not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      (H + H.adjoint()) * 0.5);
  if (solver.info() != Eigen::Success)
    throw NumericError("hermitian_eigensystem: eigensolver failed", 0.0);
  std::vector<double> values(m);
  Eigen::MatrixXcd vectors(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    values[i] = solver.eigenvalues()(m - 1 - i);
    vectors.col(i) = solver.eigenvectors().col(m - 1 - i);
  }
  return {std::move(values), std::move(vectors)};
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& H) {
  return hermitian_eigensystem(H).first;
}

int pfaffian_sign(Eigen::MatrixXd A, double singular_tol) {
  const auto m = A.rows();
  if (A.cols() != m) throw std::domain_error("pfaffian_sign: not square");
  if (m % 2 != 0) throw std::domain_error("pfaffian_sign: odd dimension");
  if (m == 0) return 1;
  const double scale = A.cwiseAbs().maxCoeff();
  if ((A + A.transpose()).cwiseAbs().maxCoeff() >
      1e-10 * std::max(1.0, scale))
    throw StructuralError("pfaffian_sign: matrix not antisymmetric");
  if (scale == 0.0) return 0;

  // Householder reduction to skew tridiagonal form T = Q A Q^t.  Each
  // reflection contributes det -1, and Pf(A) = det(Q) Pf(T).
  int reflections = 0;
  for (Eigen::Index k = 0; k + 2 < m; ++k) {
    Eigen::VectorXd col = A.col(k).segment(k + 1, m - k - 1);
    const double norm = col.norm();
    if (norm <= 1e-300) continue;
    const double alpha = col(0) >= 0 ? -norm : norm;
    Eigen::VectorXd v = col;
    v(0) -= alpha;
    const double vnorm = v.norm();
    if (vnorm <= 1e-14 * norm) continue;
    v /= vnorm;
    ++reflections;
    // A <- P A P with P = I - 2 v v^t acting on indices k+1..m-1.
    Eigen::MatrixXd rows = A.block(k + 1, 0, m - k - 1, m);
    rows -= 2.0 * v * (v.transpose() * rows);
    A.block(k + 1, 0, m - k - 1, m) = rows;
    Eigen::MatrixXd cols = A.block(0, k + 1, m, m - k - 1);
    cols -= 2.0 * (cols * v) * v.transpose();
    A.block(0, k + 1, m, m - k - 1) = cols;
  }

  // Pf of the skew tridiagonal: product of superdiagonal entries at even
  // 0-based positions.
  int sign = (reflections % 2 == 0) ? 1 : -1;
  for (Eigen::Index i = 0; i + 1 < m; i += 2) {
    const double b = A(i, i + 1);
    if (std::abs(b) <= singular_tol * std::max(1.0, scale)) return 0;
    if (b < 0) sign = -sign;
  }
  return sign;
}

double factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative argument");
  double acc = 1.0;
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

}  // namespace minorproc::num
