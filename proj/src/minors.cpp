#include "minorproc/minors.hpp"

#include <cmath>

#include "minorproc/numerics.hpp"

namespace minorproc::minors {

std::vector<int> minor_orders(const MatrixClass& cls) {
  std::vector<int> orders;
  const int n = cls.rank;
  switch (cls.tag) {
    case ClassTag::A:
      for (int m = 1; m <= n; ++m) orders.push_back(m);
      break;
    case ClassTag::B:
      for (int m = 2; m <= 2 * n + 1; ++m) orders.push_back(m);
      break;
    case ClassTag::C:
      for (int m = 2; m <= 2 * n; m += 2) orders.push_back(m);
      break;
    case ClassTag::D:
      for (int m = 2; m <= 2 * n; ++m) orders.push_back(m);
      break;
  }
  return orders;
}

int level_count(const MatrixClass& cls) {
  switch (cls.tag) {
    case ClassTag::A: return cls.rank;
    case ClassTag::B: return 2 * cls.rank;
    case ClassTag::C: return cls.rank;
    case ClassTag::D: return 2 * cls.rank - 1;
  }
  return 0;
}

int points_at_level(const MatrixClass& cls, int level) {
  if (level < 1 || level > level_count(cls))
    throw std::domain_error("points_at_level: level out of range");
  switch (cls.tag) {
    case ClassTag::A:
    case ClassTag::C:
      return level;
    case ClassTag::B:
    case ClassTag::D:
      return (level + 1) / 2;
  }
  return 0;
}

namespace {

MatrixClass minor_class(const MatrixClass& parent, int order) {
  switch (parent.tag) {
    case ClassTag::A:
      return class_a(order);
    case ClassTag::B:
    case ClassTag::D:
      return order % 2 == 1 ? class_b((order - 1) / 2) : class_d(order / 2);
    case ClassTag::C:
      if (order % 2 != 0)
        throw std::domain_error(
            "main_minor: odd orders of class C carry no class structure");
      return class_c(order / 2);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

ens::StructuredHermitian main_minor(const ens::StructuredHermitian& M,
                                    int order) {
  const int dim = M.cls.ambient_dim();
  if (order < 1 || order > dim)
    throw std::domain_error("main_minor: order out of range");
  return {minor_class(M.cls, order), M.mat.topLeftCorner(order, order)};
}

RadialPart radial_part(const ens::StructuredHermitian& M) {
  ens::check_structure(M);
  const int n = M.cls.rank;
  if (n == 0) return {M.cls, {}};
  std::vector<double> eigs = num::hermitian_eigenvalues(M.mat);
  switch (M.cls.tag) {
    case ClassTag::A:
      return {M.cls, std::move(eigs)};
    case ClassTag::B:
    case ClassTag::C: {
      // spectrum is +/- paired (B has one extra zero); keep the top n
      eigs.resize(n);
      return {M.cls, std::move(eigs)};
    }
    case ClassTag::D: {
      std::vector<double> v(eigs.begin(), eigs.begin() + n);
      // -iM is the underlying real antisymmetric matrix; its Pfaffian sign
      // is invariant under the group action and fixes sign(v_n).
      const Eigen::MatrixXd A = (std::complex<double>(0, -1) * M.mat).real();
      const int s = num::pfaffian_sign(A);
      const int parity = (n % 2 == 0) ? 1 : -1;
      v[n - 1] = std::abs(v[n - 1]) * parity * s;
      return {M.cls, std::move(v)};
    }
  }
  throw std::logic_error("unreachable");
}

MinorSequence minor_sequence(const ens::StructuredHermitian& M) {
  ens::check_structure(M);
  MinorSequence seq{M.cls, minor_orders(M.cls), {}};
  seq.parts.reserve(seq.orders.size());
  for (int order : seq.orders)
    seq.parts.push_back(radial_part(main_minor(M, order)));
  return seq;
}

PointConfiguration to_point_configuration(const MinorSequence& seq) {
  PointConfiguration cfg;
  for (std::size_t idx = 0; idx < seq.orders.size(); ++idx) {
    const int order = seq.orders[idx];
    const RadialPart& part = seq.parts[idx];
    int level = 0;
    bool absolute = false;
    switch (seq.cls.tag) {
      case ClassTag::A:
        level = order;
        break;
      case ClassTag::B:
      case ClassTag::D:
        level = order - 1;
        absolute = true;
        break;
      case ClassTag::C:
        level = order / 2;
        break;
    }
    for (double v : part.values)
      cfg.points.push_back({level, absolute ? std::abs(v) : v});
  }
  return cfg;
}

}  // namespace minorproc::minors
