#ifndef SHIFTLAB_LEXSEGMENT_HPP
#define SHIFTLAB_LEXSEGMENT_HPP

#include "shiftlab/complex.hpp"

namespace shiftlab {

/**
 * The lexsegment complex with f-vector `f` on [n].  In every cardinality d the
 * non-faces are the C(n,d) - f_{d-1} lex-largest d-subsets (order induced by
 * 1 > 2 > ... > n).
 *
 * Throws std::invalid_argument if f has more than n entries or an entry
 * exceeds C(n, d), and std::logic_error if the segments fail to form a
 * shifted complex with f-vector f (f violates Kruskal-Katona).
 */
SimplicialComplex delta_lex(const FVector& f, int n);

/// delta_lex(f_vector(complex), complex.n()).
SimplicialComplex delta_lex(const SimplicialComplex& complex);

}  // namespace shiftlab

#endif  // SHIFTLAB_LEXSEGMENT_HPP
