#include "minorproc/gc_cones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace minorproc::gc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool has_sign_free_levels(ClassTag tag) {
  return tag == ClassTag::B || tag == ClassTag::D;
}

bool nonnegative_class(ClassTag tag) { return tag != ClassTag::A; }

// Level vector with the sign-free coordinate replaced by its absolute value.
std::vector<double> view_level(const GCPattern& p, int level) {
  std::vector<double> v = p.levels[level - 1];
  if (has_sign_free_levels(p.cls.tag) && level % 2 == 1 && !v.empty())
    v.back() = std::abs(v.back());
  return v;
}

}  // namespace

std::vector<int> level_lengths(const MatrixClass& cls) {
  std::vector<int> lens;
  const int n = cls.rank;
  switch (cls.tag) {
    case ClassTag::A:
      for (int i = 1; i <= n; ++i) lens.push_back(i);
      break;
    case ClassTag::B:
    case ClassTag::C:
      for (int i = 1; i <= n; ++i) {
        lens.push_back(i);
        lens.push_back(i);
      }
      break;
    case ClassTag::D:
      for (int i = 1; i < n; ++i) {
        lens.push_back(i);
        lens.push_back(i);
      }
      lens.push_back(n);
      break;
  }
  return lens;
}

bool sign_free(const MatrixClass& cls, int level, int slot) {
  if (!has_sign_free_levels(cls.tag)) return false;
  if (level % 2 == 0) return false;
  return slot == (level + 1) / 2 - 1;
}

bool interlaces(std::span<const double> x, std::span<const double> y,
                double slack) {
  const int r = static_cast<int>(y.size());
  const int lx = static_cast<int>(x.size());
  if (lx != r && lx != r + 1)
    throw std::domain_error("interlaces: incompatible lengths");
  for (int s = 0; s < r; ++s) {
    if (y[s] > x[s] + slack) return false;
    if (s + 1 < lx && y[s] < x[s + 1] - slack) return false;
  }
  return true;
}

ValidationResult validate(const GCPattern& p, double slack) {
  const std::vector<int> lens = level_lengths(p.cls);
  if (p.levels.size() != lens.size())
    throw std::domain_error("validate: wrong number of levels");
  for (std::size_t j = 0; j < lens.size(); ++j)
    if (static_cast<int>(p.levels[j].size()) != lens[j])
      throw std::domain_error("validate: level " + std::to_string(j + 1) +
                              " has wrong length");

  const int L = static_cast<int>(lens.size());
  if (nonnegative_class(p.cls.tag)) {
    for (int level = 1; level <= L; ++level)
      for (int s = 0; s < lens[level - 1]; ++s) {
        if (sign_free(p.cls, level, s)) continue;
        if (p.levels[level - 1][s] < -slack)
          return {false, "level " + std::to_string(level) + " slot " +
                             std::to_string(s) + ": negative coordinate"};
      }
  }
  for (int level = L; level >= 2; --level) {
    if (!interlaces(view_level(p, level), view_level(p, level - 1), slack))
      return {false, "levels " + std::to_string(level) + "/" +
                         std::to_string(level - 1) + ": interlacing violated"};
  }
  if (p.cls.tag == ClassTag::D) {
    // existence of a valid extension level above the top row
    const std::vector<double> top = view_level(p, L);
    for (std::size_t s = 0; s + 1 < top.size(); ++s)
      if (top[s] < top[s + 1] - slack)
        return {false, "top row: no valid extension level exists"};
  }
  return {};
}

CoordinateRange coordinate_range(const GCPattern& p, int level, int slot) {
  const std::vector<int> lens = level_lengths(p.cls);
  const int L = static_cast<int>(lens.size());
  if (level < 1 || level > L) throw std::domain_error("coordinate_range: level");
  if (level == L)
    throw std::domain_error("coordinate_range: top row is fixed");
  if (slot < 0 || slot >= lens[level - 1])
    throw std::domain_error("coordinate_range: slot");

  double lo = -kInf, hi = kInf;
  // constraints against the level above (always present)
  {
    const std::vector<double> a = view_level(p, level + 1);
    const int la = static_cast<int>(a.size());
    hi = std::min(hi, a[slot]);
    if (slot + 1 < la) lo = std::max(lo, a[slot + 1]);
  }
  // constraints against the level below
  if (level >= 2) {
    const std::vector<double> b = view_level(p, level - 1);
    const int lb = static_cast<int>(b.size());
    if (slot < lb) lo = std::max(lo, b[slot]);
    if (slot >= 1) hi = std::min(hi, b[slot - 1]);
  }
  const bool symmetric = sign_free(p.cls, level, slot);
  if (symmetric || nonnegative_class(p.cls.tag)) lo = std::max(lo, 0.0);
  if (hi < lo) hi = lo;  // numerically degenerate; collapse to a point
  return {lo, hi, symmetric};
}

GCPattern initial_pattern(const MatrixClass& cls,
                          const std::vector<double>& lambda) {
  const std::vector<int> lens = level_lengths(cls);
  GCPattern p{cls, {}};
  p.levels.reserve(lens.size());
  for (int len : lens)
    p.levels.emplace_back(lambda.begin(), lambda.begin() + len);
  return p;
}

GibbsChain::GibbsChain(const MatrixClass& cls,
                       const std::vector<double>& lambda)
    : state_(initial_pattern(cls, lambda)) {
  if (!cls.in_closed_chamber(lambda, 1e-12))
    throw std::domain_error("GibbsChain: lambda outside closed chamber");
}

void GibbsChain::sweep(Rng& rng) {
  const std::vector<int> lens = level_lengths(state_.cls);
  const int L = static_cast<int>(lens.size());
  for (int level = 1; level < L; ++level) {
    for (int slot = 0; slot < lens[level - 1]; ++slot) {
      const CoordinateRange r = coordinate_range(state_, level, slot);
      double t = r.lo + rng.uniform() * (r.hi - r.lo);
      if (r.sign_symmetric && rng.uniform() < 0.5) t = -t;
      state_.levels[level - 1][slot] = t;
    }
  }
}

GCPattern sample_uniform(const MatrixClass& cls,
                         const std::vector<double>& lambda, int sweeps,
                         Rng& rng) {
  if (sweeps < 1) throw std::domain_error("sample_uniform: sweeps < 1");
  GibbsChain chain(cls, lambda);
  for (int s = 0; s < sweeps; ++s) chain.sweep(rng);
  return chain.state();
}

std::vector<std::vector<double>> project_c(const GCPattern& p) {
  if (p.cls.tag != ClassTag::C)
    throw std::domain_error("project_c: pattern is not of class C");
  std::vector<std::vector<double>> out;
  for (std::size_t j = 1; j < p.levels.size(); j += 2)
    out.push_back(p.levels[j]);
  return out;
}

GCPattern pattern_from_minor_sequence(const minors::MinorSequence& seq) {
  if (seq.cls.tag == ClassTag::C)
    throw std::domain_error(
        "pattern_from_minor_sequence: class C sequences only carry even "
        "levels; use validate_even_levels");
  GCPattern p{seq.cls, {}};
  p.levels.reserve(seq.parts.size());
  for (const auto& part : seq.parts) p.levels.push_back(part.values);
  return p;
}

ValidationResult validate_even_levels(
    const std::vector<std::vector<double>>& even_levels, double slack) {
  for (std::size_t i = 0; i < even_levels.size(); ++i)
    if (even_levels[i].size() != i + 1)
      throw std::domain_error("validate_even_levels: wrong level length");
  for (std::size_t i = 0; i < even_levels.size(); ++i) {
    const auto& v = even_levels[i];
    for (std::size_t s = 0; s < v.size(); ++s) {
      if (v[s] < -slack)
        return {false, "even level " + std::to_string(i + 1) +
                           ": negative coordinate"};
      if (s + 1 < v.size() && v[s] < v[s + 1] - slack)
        return {false, "even level " + std::to_string(i + 1) +
                           ": coordinates not decreasing"};
    }
  }
  for (std::size_t i = 0; i + 1 < even_levels.size(); ++i) {
    const auto& u = even_levels[i];      // length i+1
    const auto& w = even_levels[i + 1];  // length i+2
    const int len = static_cast<int>(w.size());
    for (int s = 0; s < len; ++s) {
      double hi = w[s];
      if (s >= 1) hi = std::min(hi, u[s - 1]);
      double lo = 0.0;
      if (s + 1 < len) lo = std::max(lo, w[s + 1]);
      if (s < static_cast<int>(u.size())) lo = std::max(lo, u[s]);
      if (hi < lo - slack)
        return {false, "even levels " + std::to_string(i + 1) + "/" +
                           std::to_string(i + 2) +
                           ": no interleaving odd level exists"};
    }
  }
  return {};
}

}  // namespace minorproc::gc
