#ifndef SHIFTLAB_COUNTEREXAMPLE_HPP
#define SHIFTLAB_COUNTEREXAMPLE_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shiftlab/complex.hpp"
#include "shiftlab/gin.hpp"
#include "shiftlab/homology.hpp"
#include "shiftlab/verify.hpp"

// The 15-vertex complex whose combinatorial shiftings admit neither a largest
// nor a smallest Betti table, and whose exterior shifting is none of them.

namespace shiftlab::counterexample {

inline constexpr int kVertices = 15;
inline constexpr int kFirstDegree = 3;
inline constexpr int kLastDegree = 8;
inline constexpr int kTopDegree = 9;  // every 9-subset is a non-face

enum class Block { A, B };

/// (Q_3, ..., Q_8).
using QSequence = std::array<Block, 6>;

std::string to_string(const QSequence& q);
/// Parses "AABBAB" (case-insensitive); throws std::invalid_argument.
QSequence parse_qsequence(std::string_view text);

/// h_1, ..., h_6: h_k is the interval {k, ..., 2k - 1}.
Face h(int k);
/// H_3, ..., H_8.
std::vector<Face> H(int i);
std::vector<Face> block(Block b);

/// T_i: the i-subsets lex-greater than h_{i-2} u {12, 13}.
std::vector<Face> T(int i);
/// T_i(H) = { h_{i-2} u e : e in H }.
std::vector<Face> T(int i, const std::vector<Face>& pairs);

/// Complex on [15] whose face ideal is generated by the given monomials and
/// all 9-subsets.
SimplicialComplex complex_from_generators(const std::vector<Face>& generators);

/// The counterexample complex.  Throws std::logic_error unless the degree-d
/// slice of its face ideal is exactly T_d u T_d(H_d) for 3 <= d <= 8.
SimplicialComplex build();

/// Complex whose face ideal is I^Q.
SimplicialComplex ideal_complex(const QSequence& q);

/// The Q with J_complex = I^Q, if any.
std::optional<QSequence> classify(const SimplicialComplex& complex);

struct Classification {
  std::vector<SimplicialComplex> complexes;  ///< canonical order
  std::vector<QSequence> sequences;          ///< sequences[k] classifies complexes[k]
};

/**
 * Enumerates every shifted complex reachable from build() and classifies it.
 * With `only_tail_pairs` the BFS uses pairs inside {12, ..., 15} only.
 * Throws std::logic_error if some reachable shifted complex is not of the
 * form I^Q.
 */
Classification enumerate_and_classify(bool only_tail_pairs = false,
                                      std::size_t state_limit = 100000);

/// Delta_sharp has (Q_{d-1}, Q_d) = (B, A); the comparison has (B, B).
struct Witness {
  std::size_t sharp = 0;       ///< index into Classification
  std::size_t comparison = 0;  ///< index into Classification
  int degree = 0;              ///< d
  /// m_<=i at degrees d - 1 and d for i = 1..15 (index i - 1).
  std::array<std::vector<std::uint64_t>, 2> m_sharp;
  std::array<std::vector<std::uint64_t>, 2> m_comparison;
  /// m equal at d - 1 for all i, equal at d for i != 14, strictly smaller
  /// for the comparison at (14, d).
  bool pattern_holds = false;
  /// beta_{i,i+d} of the comparison minus that of Delta_sharp, i = 0..15-d.
  std::vector<std::int64_t> betti_gain;
};

struct NegativeResults {
  std::vector<BettiTable> tables;               ///< shifted_betti per complex
  std::vector<std::vector<bool>> dominated_by;  ///< [a][b]: tables[a] <= tables[b]
  std::vector<std::size_t> sharp_candidates;    ///< b with a <= b for all a
  std::vector<std::size_t> flat_candidates;     ///< a with a <= b for all b
  std::vector<Witness> witnesses;               ///< every (sharp, comparison, d) found
  std::optional<GinResult> exterior;
  bool exterior_in_set = false;
  std::string exterior_error;
};

/// Betti dominance and witness analysis, plus exterior shifting unless
/// `with_exterior` is false.
NegativeResults negative_results(const Classification& classification, const GinOptions& gin,
                                 bool with_exterior = true);

/// Failures: a sharp or flat candidate exists, no witness satisfies the
/// pattern, or Delta^e is among the enumerated complexes (or gin failed).
VerificationReport to_report(const NegativeResults& results);

}  // namespace shiftlab::counterexample

#endif  // SHIFTLAB_COUNTEREXAMPLE_HPP
