#ifndef SHIFTLAB_SHIFTING_HPP
#define SHIFTLAB_SHIFTING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "shiftlab/complex.hpp"

namespace shiftlab {

/// A pair (i, j) with 1 <= i < j <= n.
struct ShiftPair {
  int i = 0;
  int j = 0;
  friend bool operator==(ShiftPair, ShiftPair) = default;
};

/// Order matters: pairs are applied first to last.
using ShiftSequence = std::vector<ShiftPair>;

/// All pairs 1 <= i < j <= n in lexicographic order of (i, j).
std::vector<ShiftPair> all_pairs(int n);

/**
 * Erdos-Ko-Rado shift: every face sigma with i in sigma, j not in sigma and
 * (sigma \ {i}) u {j} not a face is replaced by (sigma \ {i}) u {j}.
 * Preserves the f-vector.  Throws std::invalid_argument for relaxed complexes
 * or pairs outside 1 <= i < j <= n.
 */
SimplicialComplex shift_ij(const SimplicialComplex& complex, int i, int j);
inline SimplicialComplex shift_ij(const SimplicialComplex& complex, ShiftPair pair) {
  return shift_ij(complex, pair.i, pair.j);
}

/// True when shift_ij would change the complex.
bool shift_moves(const SimplicialComplex& complex, ShiftPair pair);

SimplicialComplex replay(const SimplicialComplex& complex, std::span<const ShiftPair> sequence);

struct ShiftStrategy {
  enum class Kind { sweep, random };
  Kind kind = Kind::sweep;
  std::uint64_t seed = 0;

  static ShiftStrategy sweep() { return {Kind::sweep, 0}; }
  static ShiftStrategy random(std::uint64_t seed) { return {Kind::random, seed}; }
};

struct ShiftResult {
  SimplicialComplex complex;
  ShiftSequence sequence;
};

/// Raised when iterated shifting or enumeration exceeds its budget.
class ShiftLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Applies nontrivial shifts until the complex is shifted.
 *
 * sweep: scan pairs in lexicographic order and restart after every change.
 * random: pick uniformly among the pairs that change the complex.
 * The iteration limit defaults to 10 * n^2 * |faces|.
 */
ShiftResult shift_to_shifted(const SimplicialComplex& complex, ShiftStrategy strategy,
                             std::optional<std::uint64_t> iteration_limit = std::nullopt);

/**
 * Every shifted complex reachable from `complex` through nontrivial shifts,
 * by breadth-first search over all intermediate states (memoized on the
 * canonical face list).  Candidate pairs default to all pairs.  The result is
 * sorted by canonical encoding.  Throws ShiftLimitExceeded once more than
 * state_limit states have been visited.
 */
std::vector<SimplicialComplex> enumerate_shifted(const SimplicialComplex& complex,
                                                 std::size_t state_limit,
                                                 std::span<const ShiftPair> candidate_pairs = {});

/// Canonical order on complexes of the same n: by face list, lexicographically.
bool canonical_less(const SimplicialComplex& a, const SimplicialComplex& b);

/**
 * The t = 0 specialization of the ideal-level map: each monomial e_sigma with
 * j in sigma, i not in sigma and e_{(sigma \ {j}) u {i}} outside the family
 * becomes e_{(sigma \ {j}) u {i}}; everything else is fixed.  Note the roles
 * of i and j are the reverse of shift_ij.  Slices are returned re-sorted.
 */
std::vector<DegreeSlice> s_ij_zero(std::span<const DegreeSlice> slices, int i, int j);

}  // namespace shiftlab

#endif  // SHIFTLAB_SHIFTING_HPP
