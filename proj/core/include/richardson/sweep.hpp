#pragma once

#include <map>
#include <utility>

#include "richardson/charts.hpp"

namespace richardson {

class MalformedChart : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Upward sweep: for rows r = n, n-1, ..., 1 clear every entry above the 1 in
/// column u^-1(r) with row operations from B. The result stays in the
/// Schubert cell of x and is supported on the 1's and D_up.
ChartMatrix eta1(const ChartMatrix& x, const Permutation& u);
/// Downward sweep: rows r = 1, 2, ..., n clear below the 1 in column
/// u^-1(r) with row operations from B_-. Supported on the 1's and D_down.
ChartMatrix eta2(const ChartMatrix& x, const Permutation& u);

struct SweepImage {
    Permutation u;
    ChartMatrix eta1;
    ChartMatrix eta2;
};

SweepImage sweep(const Chart& chart);

/// Every D_up entry of eta1 has the form z_ij + f with f in variables z_ab,
/// b = j and a > i, or b > j; mirrored (a < i) for eta2 on D_down.
bool claim_structure_check(const Permutation& u);
/// eta1 vanishes off D_up and the 1's; eta2 off D_down and the 1's.
bool support_check(const SweepImage& image, const Chart& chart);

/// Context of the image coordinates: `y_ij` for every free position; the
/// coordinate is eta1(i,j) on D_up and eta2(i,j) on D_down.
ContextPtr image_context(const Chart& chart);

/// Expresses each chart variable z_ij as a polynomial in the image
/// coordinates, column by column from n down to 1: above the 1 of the column
/// top to bottom through eta2, below it bottom to top through eta1.
std::map<Position, Polynomial> recover(const SweepImage& image, const Chart& chart);

/// Substitutes the sweep images into the recovery map; true iff every z_ij
/// comes back unchanged.
bool recovery_round_trip(const Chart& chart);

/// Numeric images of a point in chart-u form.
std::pair<RationalMatrix, RationalMatrix> eta_on_point(const RationalMatrix& x, const Permutation& u);

}  // namespace richardson
