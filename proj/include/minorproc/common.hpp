#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace minorproc {

// An input matrix or pattern violates its declared structure.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A run configuration is malformed or inconsistent.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical routine failed to reach its target accuracy; carries the
// accuracy it did reach.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved error estimate " +
                           std::to_string(achieved) + ")"),
        achieved_(achieved) {}
  double achieved_error() const { return achieved_; }

 private:
  double achieved_;
};

enum class ClassTag { A, B, C, D };

inline char class_letter(ClassTag t) {
  switch (t) {
    case ClassTag::A: return 'A';
    case ClassTag::B: return 'B';
    case ClassTag::C: return 'C';
    case ClassTag::D: return 'D';
  }
  return '?';
}

// One of the four matrix families, with its rank n.  The ambient matrix size
// is n for A, 2n+1 for B, and 2n for C and D.
struct MatrixClass {
  ClassTag tag;
  int rank;

  int ambient_dim() const {
    switch (tag) {
      case ClassTag::A: return rank;
      case ClassTag::B: return 2 * rank + 1;
      case ClassTag::C: return 2 * rank;
      case ClassTag::D: return 2 * rank;
    }
    return 0;
  }

  // Closed chamber membership for a radial vector:
  //   A:     v1 >= ... >= vn
  //   B, C:  v1 >= ... >= vn >= 0
  //   D:     v1 >= ... >= v_{n-1} >= |vn|
  bool in_closed_chamber(std::span<const double> v, double slack = 0.0) const {
    if (static_cast<int>(v.size()) != rank) return false;
    const int n = rank;
    for (int i = 0; i + 1 < n - (tag == ClassTag::D ? 1 : 0); ++i)
      if (v[i] < v[i + 1] - slack) return false;
    switch (tag) {
      case ClassTag::A:
        break;
      case ClassTag::B:
      case ClassTag::C:
        if (n >= 1 && v[n - 1] < -slack) return false;
        break;
      case ClassTag::D:
        if (n >= 2 && v[n - 2] < std::abs(v[n - 1]) - slack) return false;
        break;
    }
    return true;
  }

  bool operator==(const MatrixClass&) const = default;
};

inline MatrixClass class_a(int n) { return {ClassTag::A, n}; }
inline MatrixClass class_b(int n) { return {ClassTag::B, n}; }
inline MatrixClass class_c(int n) { return {ClassTag::C, n}; }
inline MatrixClass class_d(int n) { return {ClassTag::D, n}; }

// Deterministic random stream.  Uniform and normal variates are produced by
// explicit transforms of the raw 64-bit engine output, so sequences do not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; caches the second variate.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  // Complex Gaussian with density proportional to e^{-|z|^2}; E|z|^2 = 1.
  std::complex<double> complex_normal() {
    const double s = 0.70710678118654752440;  // 1/sqrt(2)
    return {s * normal(), s * normal()};
  }

  // Independent stream for worker `index`; deterministic in (seed, index).
  Rng spawn(std::uint64_t index) const {
    std::uint64_t z = seed_ + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z = z ^ (z >> 31);
    return Rng(z);
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace minorproc
