#ifndef SHIFTLAB_RANDOM_COMPLEX_HPP
#define SHIFTLAB_RANDOM_COMPLEX_HPP

#include <cstdint>

#include "shiftlab/complex.hpp"

namespace shiftlab {

/**
 * Seeded random strict-mode complex on [n], 1 <= n <= 20.
 *
 * Subsets are visited by decreasing cardinality (increasing mask within a
 * cardinality).  A subset not already below a chosen face becomes a face with
 * probability `density`; the result is the downward closure plus every
 * singleton.  The Bernoulli draws use the raw mt19937_64 stream, so the output
 * does not depend on the standard library.
 */
SimplicialComplex random_complex(int n, double density, std::uint64_t seed);

}  // namespace shiftlab

#endif  // SHIFTLAB_RANDOM_COMPLEX_HPP
