#ifndef SHIFTLAB_GIN_HPP
#define SHIFTLAB_GIN_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "shiftlab/complex.hpp"
#include "shiftlab/field.hpp"

namespace shiftlab {

/// Largest ground set accepted by the exterior-algebra routines.
inline constexpr int kMaxGinVertices = 20;

/// An invertible n x n matrix over GF(p) and the seed that produced it.
/// Row j holds the coordinates of phi(e_j).
struct GenericMatrix {
  FieldMatrix matrix;
  std::uint64_t seed = 0;
};

/// Uniform entries from mt19937_64(seed), redrawn until invertible.
GenericMatrix random_gl(int n, const PrimeField& field, std::uint64_t seed);

/// Coefficients of phi(e_sigma) = phi(e_{s1}) ^ ... ^ phi(e_{sd}) on the
/// monomial basis of the degree-d exterior power.  Entry k belongs to
/// `columns[k]` and equals the minor det(phi[sigma rows, columns[k] cols]).
std::vector<FieldValue> wedge_image(Face sigma, const GenericMatrix& phi,
                                    std::span<const Face> columns);

/**
 * M(I_Delta, d): one row per degree-d non-face (sorted by mask), one column
 * per d-subset of [n] in rev-lex descending order (which is increasing mask
 * order).
 */
FieldMatrix phi_image_matrix(const SimplicialComplex& complex, int d, const GenericMatrix& phi);

/// Which side of the degree-d pairing is row-reduced.
enum class GinRoute {
  automatic,  ///< per degree, whichever side has fewer rows
  ideal,      ///< rows = non-faces; pivots read in rev-lex descending order
  dual,       ///< rows = faces; pivots read in rev-lex ascending order
};

struct GinOptions {
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 1;
  int retries = 3;
  GinRoute route = GinRoute::automatic;
};

struct GinDegreeReport {
  int degree = 0;
  GinRoute route = GinRoute::ideal;  ///< route actually used
  std::size_t rows = 0;
  std::size_t columns = 0;
  std::size_t rank = 0;
  /// Degree-d monomials of Gin(J_Delta), i.e. the non-faces of Delta^e.
  std::vector<Face> gin_monomials;
};

struct GinResult {
  SimplicialComplex complex;
  std::vector<GinDegreeReport> degrees;  ///< only degrees that needed elimination
  std::array<std::uint64_t, 2> seeds{};  ///< the agreeing pair
  int attempts = 0;
};

/// No pair of draws agreed (or passed the postconditions) within the retry budget.
class GinDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Exterior algebraic shifting Delta^e, with J_{Delta^e} = Gin(J_Delta) for the
 * rev-lex order e_1 > ... > e_n, computed degree by degree over GF(p).
 *
 * Each attempt draws two independent generic matrices; the attempt succeeds
 * when both give the same complex and that complex is shifted with the same
 * f-vector as the input.  Relaxed complexes are rejected.
 */
GinResult exterior_shift(const SimplicialComplex& complex, const GinOptions& options = {});

/// The complex part of exterior_shift.
SimplicialComplex gin(const SimplicialComplex& complex, std::uint32_t prime = PrimeField::kDefaultPrime,
                      std::uint64_t seed = 1);

/// Gin monomials of one degree from one generic matrix (no agreement check).
GinDegreeReport gin_degree(const SimplicialComplex& complex, int d, const GenericMatrix& phi,
                           GinRoute route);

/// rank of M(I_Delta, d) restricted to the columns tau with sigma_(i,d) <=_rev tau,
/// i.e. the d-subsets of [i]; 0 when i < d.
std::uint64_t m_leq_via_rank(const SimplicialComplex& complex, int i, int d,
                             const GenericMatrix& phi);
std::uint64_t m_leq_via_rank(const SimplicialComplex& complex, int i, int d, std::uint32_t prime,
                             std::uint64_t seed);

const char* to_string(GinRoute route);

}  // namespace shiftlab

#endif  // SHIFTLAB_GIN_HPP
