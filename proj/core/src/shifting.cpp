#include "shiftlab/shifting.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <string>
#include <unordered_set>

namespace shiftlab {

namespace {

void check_pair(const SimplicialComplex& complex, int i, int j) {
  if (i < 1 || j <= i || j > complex.n()) {
    throw std::invalid_argument("shift pair (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside 1 <= i < j <= " + std::to_string(complex.n()));
  }
}

// C_ij(sigma), evaluated against the unshifted complex.
Face shifted_face(const SimplicialComplex& complex, Face sigma, int i, int j) {
  if (!sigma.contains(i) || sigma.contains(j)) return sigma;
  const Face moved = sigma.exchange(i, j);
  return complex.contains(moved) ? sigma : moved;
}

}  // namespace

std::vector<ShiftPair> all_pairs(int n) {
  std::vector<ShiftPair> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  }
  return pairs;
}

bool shift_moves(const SimplicialComplex& complex, ShiftPair pair) {
  for (Face sigma : complex.faces()) {
    if (shifted_face(complex, sigma, pair.i, pair.j) != sigma) return true;
  }
  return false;
}

SimplicialComplex shift_ij(const SimplicialComplex& complex, int i, int j) {
  require_strict(complex, "shift_ij");
  check_pair(complex, i, j);
  if (!shift_moves(complex, {i, j})) return complex;
  std::vector<Face> faces;
  faces.reserve(complex.size());
  for (Face sigma : complex.faces()) faces.push_back(shifted_face(complex, sigma, i, j));
  // from_faces re-checks downward closure and strictness of the image.
  return SimplicialComplex::from_faces(complex.n(), std::move(faces), Mode::strict);
}

SimplicialComplex replay(const SimplicialComplex& complex, std::span<const ShiftPair> sequence) {
  SimplicialComplex current = complex;
  for (ShiftPair pair : sequence) current = shift_ij(current, pair);
  return current;
}

ShiftResult shift_to_shifted(const SimplicialComplex& complex, ShiftStrategy strategy,
                             std::optional<std::uint64_t> iteration_limit) {
  require_strict(complex, "shift_to_shifted");
  const auto n = static_cast<std::uint64_t>(complex.n());
  const std::uint64_t limit =
      iteration_limit.value_or(10 * n * n * static_cast<std::uint64_t>(complex.size()));
  const std::vector<ShiftPair> pairs = all_pairs(complex.n());

  ShiftResult result{complex, {}};
  auto apply = [&](ShiftPair pair) {
    if (result.sequence.size() >= limit) {
      throw ShiftLimitExceeded("shift_to_shifted exceeded " + std::to_string(limit) +
                               " iterations");
    }
    result.complex = shift_ij(result.complex, pair);
    result.sequence.push_back(pair);
  };

  if (strategy.kind == ShiftStrategy::Kind::sweep) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (ShiftPair pair : pairs) {
        if (shift_moves(result.complex, pair)) {
          apply(pair);
          changed = true;
          break;
        }
      }
    }
  } else {
    std::mt19937_64 rng(strategy.seed);
    while (true) {
      std::vector<ShiftPair> moving;
      for (ShiftPair pair : pairs) {
        if (shift_moves(result.complex, pair)) moving.push_back(pair);
      }
      if (moving.empty()) break;
      apply(moving[rng() % moving.size()]);
    }
  }
  if (!is_shifted(result.complex)) {
    throw std::logic_error("shift_to_shifted stopped at a complex that is not shifted");
  }
  return result;
}

bool canonical_less(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto fa = a.faces();
  auto fb = b.faces();
  return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
}

std::vector<SimplicialComplex> enumerate_shifted(const SimplicialComplex& complex,
                                                 std::size_t state_limit,
                                                 std::span<const ShiftPair> candidate_pairs) {
  require_strict(complex, "enumerate_shifted");
  std::vector<ShiftPair> pairs;
  if (candidate_pairs.empty()) {
    pairs = all_pairs(complex.n());
  } else {
    for (ShiftPair p : candidate_pairs) check_pair(complex, p.i, p.j);
    pairs.assign(candidate_pairs.begin(), candidate_pairs.end());
  }

  std::unordered_set<SimplicialComplex> visited;
  std::deque<const SimplicialComplex*> frontier;
  auto visit = [&](SimplicialComplex state) {
    auto [it, inserted] = visited.insert(std::move(state));
    if (!inserted) return;
    if (visited.size() > state_limit) {
      throw ShiftLimitExceeded("enumerate_shifted visited more than " +
                               std::to_string(state_limit) + " states");
    }
    frontier.push_back(&*it);  // node-based set: addresses are stable
  };

  visit(complex);
  std::vector<SimplicialComplex> shifted;
  while (!frontier.empty()) {
    const SimplicialComplex& state = *frontier.front();
    frontier.pop_front();
    bool terminal = true;
    for (ShiftPair pair : pairs) {
      if (!shift_moves(state, pair)) continue;
      terminal = false;
      visit(shift_ij(state, pair));
    }
    // Shifted states admit no nontrivial shift, so only terminal states qualify.
    if (terminal && is_shifted(state)) shifted.push_back(state);
  }
  std::sort(shifted.begin(), shifted.end(), canonical_less);
  return shifted;
}

std::vector<DegreeSlice> s_ij_zero(std::span<const DegreeSlice> slices, int i, int j) {
  if (i < 1 || j <= i || j > kMaxVertices) {
    throw std::invalid_argument("s_ij_zero: pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ") must satisfy 1 <= i < j");
  }
  std::vector<DegreeSlice> out;
  out.reserve(slices.size());
  for (const DegreeSlice& slice : slices) {
    DegreeSlice image{slice.degree, {}};
    image.monomials.reserve(slice.monomials.size());
    for (Face sigma : slice.monomials) {
      if (sigma.contains(j) && !sigma.contains(i)) {
        const Face lowered = sigma.exchange(j, i);
        if (!slice.contains(lowered)) {
          image.monomials.push_back(lowered);
          continue;
        }
      }
      image.monomials.push_back(sigma);
    }
    std::sort(image.monomials.begin(), image.monomials.end());
    out.push_back(std::move(image));
  }
  return out;
}

}  // namespace shiftlab
