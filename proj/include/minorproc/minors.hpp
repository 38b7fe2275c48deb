#pragma once

#include <vector>

#include "minorproc/common.hpp"
#include "minorproc/ensembles.hpp"

namespace minorproc::minors {

// A point of the closed chamber of some class, tagged with that class.
struct RadialPart {
  MatrixClass cls;
  std::vector<double> values;
};

// Radial parts of the main minors at the orders carried by the class:
// 1..n for A, 2..2n+1 for B, even orders 2..2n for C, 2..2n for D.
struct MinorSequence {
  MatrixClass cls;             // class of the parent matrix
  std::vector<int> orders;     // minor orders, increasing
  std::vector<RadialPart> parts;
};

struct PointConfiguration {
  struct Point {
    int level;
    double location;
  };
  std::vector<Point> points;
};

// Minor orders carried by Definition-style sequences, per class.
std::vector<int> minor_orders(const MatrixClass& cls);

// Number of levels of the interlaced point configuration:
// n for A, 2n for B, n for C, 2n-1 for D.
int level_count(const MatrixClass& cls);

// Points at a level: r for A and C, floor((r+1)/2) for B and D.
int points_at_level(const MatrixClass& cls, int level);

// Top-left submatrix of order m with its inherited class tag.  Parents of
// type B or D yield type B at odd orders and type D at even orders; type C
// parents only admit even orders.
ens::StructuredHermitian main_minor(const ens::StructuredHermitian& M,
                                    int order);

// Chamber representative of the matrix's orbit.  For type D the sign of the
// last coordinate is the Pfaffian sign of -iM times (-1)^n, which is the
// convention making radial_part(chamber_representative(lambda)) == lambda.
RadialPart radial_part(const ens::StructuredHermitian& M);

MinorSequence minor_sequence(const ens::StructuredHermitian& M);

// Interlaced points: level r holds the radial part of the minor of order r
// for A, order r+1 (absolute values) for B and D, order 2r for C.
PointConfiguration to_point_configuration(const MinorSequence& seq);

}  // namespace minorproc::minors
