#include "shiftlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "shiftlab/gin.hpp"
#include "shiftlab/homology.hpp"
#include "shiftlab/lexsegment.hpp"
#include "shiftlab/parallel.hpp"
#include "shiftlab/random_complex.hpp"

namespace shiftlab {

void VerificationReport::merge(const VerificationReport& other) {
  trials += other.trials;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  for (const auto& [name, count] : other.checks) checks[name] += count;
  elapsed_ms += other.elapsed_ms;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ull * (trial + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

SimplicialComplex trial_complex(const VerifyOptions& options, std::uint64_t trial) {
  if (options.n_min < 1 || options.n_max < options.n_min) {
    throw std::invalid_argument("verify: need 1 <= n_min <= n_max");
  }
  const auto span = static_cast<std::uint64_t>(options.n_max - options.n_min + 1);
  const int n = options.n_min + static_cast<int>(trial % span);
  const std::size_t density_count = std::size(kCorpusDensities);
  const double density = kCorpusDensities[(trial / span) % density_count];
  return random_complex(n, density, trial_seed(options.seed, trial));
}

namespace {

class Checker {
 public:
  Checker(const SimplicialComplex& complex, std::uint64_t seed, VerificationReport& report)
      : complex_(complex), seed_(seed), report_(report) {}

  // Counts one evaluation of `check`; records a failure when `ok` is false.
  bool expect(bool ok, const char* check, const SimplicialComplex& subject,
              const ShiftSequence& pairs = {}, std::string detail = {}) {
    ++report_.checks[check];
    if (!ok) {
      VerificationFailure f = base(check, subject, pairs);
      f.detail = std::move(detail);
      report_.failures.push_back(std::move(f));
    }
    return ok;
  }

  // a <= b entrywise; one failure per offending cell.
  void betti_le(const BettiTable& a, const BettiTable& b, const char* check,
                const ShiftSequence& pairs = {}) {
    ++report_.checks[check];
    for (const BettiViolation& v : betti_violations(a, b)) {
      VerificationFailure f = base(check, complex_, pairs);
      f.i = v.i;
      f.j = v.j;
      f.lhs = static_cast<std::int64_t>(v.lhs);
      f.rhs = static_cast<std::int64_t>(v.rhs);
      report_.failures.push_back(std::move(f));
    }
  }

  void cell(const char* check, int i, int j, std::int64_t lhs, std::int64_t rhs,
            const ShiftSequence& pairs = {}) {
    VerificationFailure f = base(check, complex_, pairs);
    f.i = i;
    f.j = j;
    f.lhs = lhs;
    f.rhs = rhs;
    report_.failures.push_back(std::move(f));
  }

  void count(const char* check) { ++report_.checks[check]; }

 private:
  VerificationFailure base(const char* check, const SimplicialComplex& subject,
                           const ShiftSequence& pairs) const {
    VerificationFailure f;
    f.check = check;
    f.seed = seed_;
    f.n = subject.n();
    auto facets = subject.facets();
    f.facets.assign(facets.begin(), facets.end());
    f.pairs = pairs;
    return f;
  }

  const SimplicialComplex& complex_;
  std::uint64_t seed_;
  VerificationReport& report_;
};

SimplicialComplex random_subcomplex(const SimplicialComplex& complex, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Face> kept;
  for (Face f : complex.facets()) {
    if (rng() & 1u) kept.push_back(f);
  }
  for (int v = 1; v <= complex.n(); ++v) kept.push_back(Face{v});
  return SimplicialComplex::from_facets(complex.n(), kept, Mode::strict);
}

}  // namespace

VerificationReport verify_complex(const SimplicialComplex& complex, const VerifyOptions& options,
                                  std::uint64_t seed) {
  require_strict(complex, "verify_complex");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.trials = 1;
  Checker check(complex, seed, report);
  const PrimeField field(options.prime);
  const FVector f = f_vector(complex);
  const BettiTable beta = hochster_betti(complex, field);

  std::vector<ShiftResult> combinatorial;
  if (options.combinatorial || options.exterior) {
    combinatorial.push_back(shift_to_shifted(complex, ShiftStrategy::sweep()));
    combinatorial.push_back(shift_to_shifted(complex, ShiftStrategy::random(seed)));
  }
  std::vector<BettiTable> comb_beta;
  for (const ShiftResult& c : combinatorial) {
    comb_beta.push_back(hochster_betti(c.complex, field));
  }

  if (options.combinatorial) {
    for (std::size_t k = 0; k < combinatorial.size(); ++k) {
      const ShiftResult& c = combinatorial[k];
      check.expect(is_shifted(c.complex), checks::kShifted, c.complex, c.sequence);
      check.expect(f_vector(c.complex) == f, checks::kFVector, c.complex, c.sequence);
      check.expect(replay(complex, c.sequence) == c.complex, checks::kShifted, c.complex,
                   c.sequence, "replayed sequence does not reproduce the result");
      const ShiftResult again = shift_to_shifted(c.complex, ShiftStrategy::sweep());
      check.expect(again.sequence.empty() && again.complex == c.complex, checks::kFixesShifted,
                   c.complex, c.sequence);
      check.betti_le(beta, comb_beta[k], checks::kBettiComplexVsComb, c.sequence);
      check.expect(shifted_betti(c.complex) == comb_beta[k], checks::kShiftedFormula, c.complex,
                   c.sequence);
    }
    const SimplicialComplex sub = random_subcomplex(complex, seed ^ 0x5bd1e995u);
    const ShiftSequence& seq = combinatorial.front().sequence;
    check.expect(replay(sub, seq).is_subcomplex_of(combinatorial.front().complex),
                 checks::kMonotone, sub, seq);
  }

  if (options.lex) {
    const SimplicialComplex lex = delta_lex(complex);
    check.expect(is_shifted(lex) && f_vector(lex) == f, checks::kLexSegment, lex);
    const BettiTable lex_beta = hochster_betti(lex, field);
    check.betti_le(beta, lex_beta, checks::kBettiComplexVsLex);
    if (options.combinatorial) {
      for (std::size_t k = 0; k < combinatorial.size(); ++k) {
        check.betti_le(comb_beta[k], lex_beta, checks::kBettiCombVsLex,
                       combinatorial[k].sequence);
      }
    }
  }

  if (options.single_steps) {
    for (ShiftPair pair : all_pairs(complex.n())) {
      if (!shift_moves(complex, pair)) {
        check.count(checks::kSingleStep);
        continue;
      }
      const SimplicialComplex step = shift_ij(complex, pair);
      check.betti_le(beta, hochster_betti(step, field), checks::kSingleStep, {pair});
      check.expect(f_vector(step) == f, checks::kFVector, step, {pair});
    }
  }

  if (options.exterior) {
    GinOptions gin_options;
    gin_options.prime = options.prime;
    gin_options.seed = seed;
    std::optional<SimplicialComplex> ext;
    try {
      ext = exterior_shift(complex, gin_options).complex;
      check.count(checks::kGinAgreement);
    } catch (const GinDisagreement& e) {
      check.expect(false, checks::kGinAgreement, complex, {}, e.what());
    }
    if (ext) {
      check.expect(is_shifted(*ext), checks::kShifted, *ext);
      check.expect(f_vector(*ext) == f, checks::kFVector, *ext);
      check.expect(reduced_homology_dims(*ext, field) == reduced_homology_dims(complex, field),
                   checks::kHomologyInvariant, *ext);
      const BettiTable ext_beta = hochster_betti(*ext, field);
      for (std::size_t k = 0; k < combinatorial.size(); ++k) {
        const ShiftResult& c = combinatorial[k];
        check.betti_le(ext_beta, comb_beta[k], checks::kBettiExtVsComb, c.sequence);
        check.count(checks::kMleqExtVsComb);
        for (int d = 1; d <= complex.n(); ++d) {
          for (int i = 1; i <= complex.n(); ++i) {
            const auto e = static_cast<std::int64_t>(m_leq(*ext, i, d));
            const auto cm = static_cast<std::int64_t>(m_leq(c.complex, i, d));
            if (e < cm) check.cell(checks::kMleqExtVsComb, i, d, e, cm, c.sequence);
          }
        }
        try {
          check.expect(exterior_shift(c.complex, gin_options).complex == c.complex,
                       checks::kGinIdempotent, c.complex, c.sequence);
        } catch (const GinDisagreement& e) {
          check.expect(false, checks::kGinAgreement, c.complex, c.sequence, e.what());
        }
      }
    }
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify_theorems(const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<VerificationReport> parts(options.trials);
  parallel_for(options.trials, [&](std::size_t t) {
    const SimplicialComplex complex = trial_complex(options, t);
    parts[t] = verify_complex(complex, options, trial_seed(options.seed, t));
  });
  VerificationReport report;
  for (const VerificationReport& part : parts) report.merge(part);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify_theorems(int n, std::uint64_t trials, std::uint32_t prime,
                                   std::uint64_t seed) {
  VerifyOptions options;
  options.n_min = std::min(3, n);
  options.n_max = n;
  options.trials = trials;
  options.prime = prime;
  options.seed = seed;
  return verify_theorems(options);
}

}  // namespace shiftlab
