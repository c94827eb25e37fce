#ifndef SHIFTLAB_VERIFY_HPP
#define SHIFTLAB_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "shiftlab/complex.hpp"
#include "shiftlab/shifting.hpp"

namespace shiftlab {

/// One violated check.  `i`, `j` locate the table cell (Betti (i, j) or
/// m_<=i at degree j); both are -1 for checks without a cell.
struct VerificationFailure {
  std::string check;
  std::uint64_t seed = 0;
  int n = 0;
  std::vector<Face> facets;  ///< the offending complex
  ShiftSequence pairs;       ///< shift sequence involved, if any
  int i = -1;
  int j = -1;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::string detail;

  friend bool operator==(const VerificationFailure&, const VerificationFailure&) = default;
};

struct VerificationReport {
  std::uint64_t trials = 0;
  std::vector<VerificationFailure> failures;
  /// How many times each check was evaluated.
  std::map<std::string, std::uint64_t> checks;
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
  void merge(const VerificationReport& other);

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Names used in VerificationFailure::check and VerificationReport::checks.
namespace checks {
inline constexpr const char* kShifted = "S1-shifted";
inline constexpr const char* kFixesShifted = "S2-fixes-shifted";
inline constexpr const char* kGinIdempotent = "S2-gin-idempotent";
inline constexpr const char* kFVector = "S3-f-vector";
inline constexpr const char* kMonotone = "S4-monotone";
inline constexpr const char* kBettiComplexVsComb = "betti-complex-le-combinatorial";
inline constexpr const char* kBettiComplexVsLex = "betti-complex-le-lex";
inline constexpr const char* kBettiCombVsLex = "betti-combinatorial-le-lex";
inline constexpr const char* kBettiExtVsComb = "betti-exterior-le-combinatorial";
inline constexpr const char* kMleqExtVsComb = "mleq-exterior-ge-combinatorial";
inline constexpr const char* kSingleStep = "betti-single-shift";
inline constexpr const char* kHomologyInvariant = "homology-exterior-invariant";
inline constexpr const char* kShiftedFormula = "shifted-formula-matches-hochster";
inline constexpr const char* kGinAgreement = "gin-seed-agreement";
inline constexpr const char* kLexSegment = "lex-segment";
}  // namespace checks

struct VerifyOptions {
  int n_min = 3;
  int n_max = 6;  ///< trial t uses n = n_min + t mod (n_max - n_min + 1)
  std::uint64_t trials = 20;
  std::uint32_t prime = 32003;
  std::uint64_t seed = 1;
  bool combinatorial = true;  ///< sweep and random Delta^c, S1-S4, Betti of Delta vs Delta^c
  bool lex = true;            ///< Delta^lex comparisons
  bool exterior = true;       ///< Delta^e comparisons (gin)
  bool single_steps = true;   ///< Betti of Delta vs Shift_ij(Delta) for every pair
};

/// Densities cycled through by the trial corpus.
inline constexpr double kCorpusDensities[] = {0.05, 0.1, 0.2, 0.35};

/// Seed and complex of trial t; identical across runs and thread counts.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);
SimplicialComplex trial_complex(const VerifyOptions& options, std::uint64_t trial);

/// Runs every enabled check on one complex (trials = 1 in the result).
VerificationReport verify_complex(const SimplicialComplex& complex, const VerifyOptions& options,
                                  std::uint64_t seed);

/// Runs the enabled checks on options.trials random complexes in parallel.
/// Failures are collected in trial order; nothing is thrown for a violation.
VerificationReport verify_theorems(const VerifyOptions& options);
VerificationReport verify_theorems(int n, std::uint64_t trials, std::uint32_t prime,
                                   std::uint64_t seed);

}  // namespace shiftlab

#endif  // SHIFTLAB_VERIFY_HPP
