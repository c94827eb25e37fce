#ifndef SHIFTLAB_HOMOLOGY_HPP
#define SHIFTLAB_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "shiftlab/complex.hpp"
#include "shiftlab/field.hpp"

namespace shiftlab {

/**
 * Graded Betti numbers of a Stanley-Reisner ideal.  Entry (i, j) holds
 * beta_{i,i+j}(I_Delta); only nonzero entries are stored.
 */
class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (i, j)

  std::uint64_t at(int i, int j) const;
  /// Adds to (i, j); zero additions leave the support unchanged.
  void add(int i, int j, std::uint64_t value);
  void set(int i, int j, std::uint64_t value);

  const std::map<Key, std::uint64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<Key, std::uint64_t> entries_;
};

/// dims[k + 1] = dim H~_k for k = -1, 0, ..., dim Delta.
struct HomologyProfile {
  std::vector<std::uint64_t> dims;

  /// dim H~_k; 0 outside the stored range.
  std::uint64_t at(int k) const;
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/**
 * Matrix of the reduced boundary map C_k -> C_{k-1} over GF(p).  Rows are the
 * (k-1)-faces and columns the k-faces, both sorted by mask; for k = 0 the
 * single row is the augmentation onto the empty face.
 */
FieldMatrix boundary_matrix(const SimplicialComplex& complex, int k, const PrimeField& field);

HomologyProfile reduced_homology_dims(const SimplicialComplex& complex, const PrimeField& field);

/// Betti numbers by summing reduced homology of every induced subcomplex.
BettiTable hochster_betti(const SimplicialComplex& complex, const PrimeField& field);

/// Betti numbers of a shifted complex from m_<= counts alone (field free).
/// Throws std::invalid_argument unless the complex is shifted.
BettiTable shifted_betti(const SimplicialComplex& complex);

/// A[i,j] <= B[i,j] over the union of supports (missing entries count as 0).
bool betti_leq(const BettiTable& a, const BettiTable& b);

/// A cell where betti_leq fails.
struct BettiViolation {
  int i = 0;
  int j = 0;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
};
std::vector<BettiViolation> betti_violations(const BettiTable& a, const BettiTable& b);

}  // namespace shiftlab

#endif  // SHIFTLAB_HOMOLOGY_HPP
