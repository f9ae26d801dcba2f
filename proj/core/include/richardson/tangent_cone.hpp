#pragma once

#include <vector>

#include "richardson/groebner.hpp"
#include "richardson/hilbert.hpp"

namespace richardson {

/// Ideal of lowest-degree forms of <I> at the origin.
///
/// Each generator is homogenized with a fresh variable t, a Groebner basis is
/// computed under deglex with t as the most significant variable (so the
/// leading term of a homogenized form comes from its lowest-degree part), the
/// basis is dehomogenized and its lowest-degree forms are returned.
IdealGens tangent_cone(const IdealGens& ideal);

/// dim_k k[x] / (I + m^(d+1)) for d = 0..max_degree, where m is the ideal of
/// all variables. First differences are the Hilbert function of the tangent
/// cone in degrees <= max_degree.
std::vector<Integer> local_hilbert_oracle(const IdealGens& ideal, unsigned max_degree);

/// First differences of an oracle sequence.
std::vector<Integer> first_differences(const std::vector<Integer>& cumulative);

}  // namespace richardson
