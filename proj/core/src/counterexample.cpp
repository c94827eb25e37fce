#include "shiftlab/counterexample.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "shiftlab/parallel.hpp"
#include "shiftlab/shifting.hpp"

namespace shiftlab::counterexample {

namespace {

Face pair(int a, int b) { return Face{a, b}; }

void check_degree(int i) {
  if (i < kFirstDegree || i > kLastDegree) {
    throw std::invalid_argument("degree " + std::to_string(i) + " outside 3..8");
  }
}

std::vector<Face> generators_for(const std::array<std::vector<Face>, 6>& tails) {
  std::vector<Face> gens;
  for (int i = kFirstDegree; i <= kLastDegree; ++i) {
    const auto t = T(i);
    const auto th = T(i, tails[static_cast<std::size_t>(i - kFirstDegree)]);
    gens.insert(gens.end(), t.begin(), t.end());
    gens.insert(gens.end(), th.begin(), th.end());
  }
  return gens;
}

}  // namespace

std::string to_string(const QSequence& q) {
  std::string s;
  for (Block b : q) s += b == Block::A ? 'A' : 'B';
  return s;
}

QSequence parse_qsequence(std::string_view text) {
  if (text.size() != 6) throw std::invalid_argument("Q-sequence needs 6 letters");
  QSequence q{};
  for (std::size_t k = 0; k < 6; ++k) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[k])));
    if (c != 'A' && c != 'B') throw std::invalid_argument("Q-sequence letters must be A or B");
    q[k] = c == 'A' ? Block::A : Block::B;
  }
  return q;
}

Face h(int k) {
  if (k < 1 || k > 6) throw std::invalid_argument("h_k needs 1 <= k <= 6");
  return Face::interval(k, 2 * k - 1);
}

std::vector<Face> H(int i) {
  check_degree(i);
  switch (i) {
    case 3: return {pair(12, 13), pair(12, 15), pair(13, 14)};
    case 4: return {pair(12, 13), pair(12, 14), pair(14, 15)};
    case 5: return {pair(12, 13), pair(12, 15), pair(14, 15)};
    case 6: return {pair(12, 13), pair(13, 14), pair(14, 15)};
    case 7: return {pair(12, 13), pair(13, 15), pair(14, 15)};
    default: return {pair(12, 14), pair(13, 15), pair(14, 15)};
  }
}

std::vector<Face> block(Block b) {
  if (b == Block::A) return {pair(12, 13), pair(12, 14), pair(13, 14)};
  return {pair(12, 13), pair(12, 14), pair(12, 15)};
}

std::vector<Face> T(int i) {
  check_degree(i);
  const Face threshold = h(i - 2) | pair(12, 13);
  std::vector<Face> out;
  for (Face s : subsets_of_size(Face::ground(kVertices), i)) {
    if (lex_compare(s, threshold) == std::strong_ordering::greater) out.push_back(s);
  }
  return out;
}

std::vector<Face> T(int i, const std::vector<Face>& pairs) {
  check_degree(i);
  std::vector<Face> out;
  for (Face e : pairs) out.push_back(h(i - 2) | e);
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex complex_from_generators(const std::vector<Face>& generators) {
  const std::size_t size = std::size_t{1} << kVertices;
  std::vector<char> nonface(size, 0);
  for (Face g : generators) nonface[g.bits()] = 1;
  for (Face g : subsets_of_size(Face::ground(kVertices), kTopDegree)) nonface[g.bits()] = 1;
  // Masks increase along every inclusion, so one ascending pass closes upward.
  std::vector<Face> faces;
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    if (!nonface[mask]) {
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        if (nonface[mask & ~(rest & -rest)]) {
          nonface[mask] = 1;
          break;
        }
      }
    }
    if (!nonface[mask]) faces.push_back(Face(mask));
  }
  return SimplicialComplex::from_faces(kVertices, std::move(faces), Mode::strict);
}

SimplicialComplex build() {
  std::array<std::vector<Face>, 6> tails;
  for (int i = kFirstDegree; i <= kLastDegree; ++i) tails[static_cast<std::size_t>(i - 3)] = H(i);
  SimplicialComplex complex = complex_from_generators(generators_for(tails));
  for (int d = kFirstDegree; d <= kLastDegree; ++d) {
    std::vector<Face> expected = T(d);
    const auto th = T(d, H(d));
    expected.insert(expected.end(), th.begin(), th.end());
    std::sort(expected.begin(), expected.end());
    if (ideal_degree_slice(complex, d).monomials != expected) {
      throw std::logic_error("degree " + std::to_string(d) +
                             " slice of the ideal is not T_d u T_d(H_d)");
    }
  }
  return complex;
}

SimplicialComplex ideal_complex(const QSequence& q) {
  std::array<std::vector<Face>, 6> tails;
  for (std::size_t k = 0; k < 6; ++k) tails[k] = block(q[k]);
  return complex_from_generators(generators_for(tails));
}

std::optional<QSequence> classify(const SimplicialComplex& complex) {
  if (complex.n() != kVertices) return std::nullopt;
  QSequence q{};
  for (int d = kFirstDegree; d <= kLastDegree; ++d) {
    const DegreeSlice slice = ideal_degree_slice(complex, d);
    std::optional<Block> found;
    for (Block b : {Block::A, Block::B}) {
      std::vector<Face> expected = T(d);
      const auto tail = T(d, block(b));
      expected.insert(expected.end(), tail.begin(), tail.end());
      std::sort(expected.begin(), expected.end());
      if (slice.monomials == expected) found = b;
    }
    if (!found) return std::nullopt;
    q[static_cast<std::size_t>(d - kFirstDegree)] = *found;
  }
  // The slices above pin Q; the other degrees must agree as well.
  if (!(ideal_complex(q) == complex)) return std::nullopt;
  return q;
}

Classification enumerate_and_classify(bool only_tail_pairs, std::size_t state_limit) {
  const SimplicialComplex start = build();
  std::vector<ShiftPair> pairs;
  if (only_tail_pairs) {
    for (int i = 12; i <= kVertices; ++i) {
      for (int j = i + 1; j <= kVertices; ++j) pairs.push_back({i, j});
    }
  }
  Classification out;
  out.complexes = enumerate_shifted(start, state_limit, pairs);
  for (const SimplicialComplex& c : out.complexes) {
    const auto q = classify(c);
    if (!q) throw std::logic_error("reachable shifted complex is not of the form I^Q");
    out.sequences.push_back(*q);
  }
  return out;
}

NegativeResults negative_results(const Classification& classification, const GinOptions& gin,
                                 bool with_exterior) {
  const auto& complexes = classification.complexes;
  const std::size_t count = complexes.size();
  NegativeResults out;
  out.tables.resize(count);
  parallel_for(count, [&](std::size_t k) { out.tables[k] = shifted_betti(complexes[k]); });

  out.dominated_by.assign(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      out.dominated_by[a][b] = betti_leq(out.tables[a], out.tables[b]);
    }
  }
  for (std::size_t x = 0; x < count; ++x) {
    bool top = true;
    bool bottom = true;
    for (std::size_t y = 0; y < count; ++y) {
      top = top && out.dominated_by[y][x];
      bottom = bottom && out.dominated_by[x][y];
    }
    if (top) out.sharp_candidates.push_back(x);
    if (bottom) out.flat_candidates.push_back(x);
  }

  const auto& seq = classification.sequences;
  for (std::size_t s = 0; s < count; ++s) {
    for (int d = kFirstDegree + 1; d <= kLastDegree; ++d) {
      const auto k = static_cast<std::size_t>(d - kFirstDegree);
      if (seq[s][k - 1] != Block::B || seq[s][k] != Block::A) continue;
      for (std::size_t c = 0; c < count; ++c) {
        if (seq[c][k - 1] != Block::B || seq[c][k] != Block::B) continue;
        Witness w;
        w.sharp = s;
        w.comparison = c;
        w.degree = d;
        bool ok = true;
        for (int row = 0; row < 2; ++row) {
          const int degree = d - 1 + row;
          for (int i = 1; i <= kVertices; ++i) {
            const std::uint64_t ms = m_leq(complexes[s], i, degree);
            const std::uint64_t mc = m_leq(complexes[c], i, degree);
            w.m_sharp[static_cast<std::size_t>(row)].push_back(ms);
            w.m_comparison[static_cast<std::size_t>(row)].push_back(mc);
            const bool strict_cell = row == 1 && i == 14;
            ok = ok && (strict_cell ? mc < ms : mc == ms);
          }
        }
        w.pattern_holds = ok;
        for (int i = 0; i + d <= kVertices; ++i) {
          w.betti_gain.push_back(static_cast<std::int64_t>(out.tables[c].at(i, d)) -
                                 static_cast<std::int64_t>(out.tables[s].at(i, d)));
        }
        out.witnesses.push_back(std::move(w));
      }
    }
  }

  if (with_exterior) {
    try {
      out.exterior = exterior_shift(build(), gin);
      out.exterior_in_set = std::find(complexes.begin(), complexes.end(),
                                      out.exterior->complex) != complexes.end();
    } catch (const std::exception& e) {
      out.exterior_error = e.what();
    }
  }
  return out;
}

VerificationReport to_report(const NegativeResults& results) {
  VerificationReport report;
  report.trials = 1;
  auto fail = [&](const char* check, std::string detail) {
    VerificationFailure f;
    f.check = check;
    f.n = kVertices;
    f.detail = std::move(detail);
    report.failures.push_back(std::move(f));
  };
  ++report.checks["no-largest-betti-table"];
  for (std::size_t x : results.sharp_candidates) {
    fail("no-largest-betti-table", "table " + std::to_string(x) + " dominates every table");
  }
  ++report.checks["no-smallest-betti-table"];
  for (std::size_t x : results.flat_candidates) {
    fail("no-smallest-betti-table", "table " + std::to_string(x) + " is dominated by every table");
  }
  ++report.checks["m14-witness"];
  const bool witness = std::any_of(results.witnesses.begin(), results.witnesses.end(),
                                   [](const Witness& w) { return w.pattern_holds; });
  if (!witness) fail("m14-witness", "no (B,A) versus (B,B) pair shows the m_<=14 pattern");
  if (results.exterior || !results.exterior_error.empty()) {
    ++report.checks["exterior-not-combinatorial"];
    if (!results.exterior) {
      fail("exterior-not-combinatorial", "exterior shifting failed: " + results.exterior_error);
    } else if (results.exterior_in_set) {
      VerificationFailure f;
      f.check = "exterior-not-combinatorial";
      f.n = kVertices;
      auto facets = results.exterior->complex.facets();
      f.facets.assign(facets.begin(), facets.end());
      f.seed = results.exterior->seeds[0];
      f.detail = "Delta^e equals an enumerated combinatorial shifting";
      report.failures.push_back(std::move(f));
    }
  }
  return report;
}

}  // namespace shiftlab::counterexample
