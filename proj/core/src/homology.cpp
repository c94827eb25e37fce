#include "shiftlab/homology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "shiftlab/parallel.hpp"

namespace shiftlab {

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t value) {
  if (value != 0) entries_[{i, j}] += value;
}

void BettiTable::set(int i, int j, std::uint64_t value) {
  if (value == 0) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = value;
  }
}

std::uint64_t HomologyProfile::at(int k) const {
  const int idx = k + 1;
  if (idx < 0 || idx >= static_cast<int>(dims.size())) return 0;
  return dims[static_cast<std::size_t>(idx)];
}

namespace {

// faces_by_size[s] = faces of cardinality s, sorted by mask.
using Layers = std::vector<std::vector<Face>>;

Layers layer_faces(std::span<const Face> faces) {
  Layers layers;
  for (Face f : faces) {
    const auto s = static_cast<std::size_t>(f.degree());
    if (layers.size() <= s) layers.resize(s + 1);
    layers[s].push_back(f);
  }
  for (auto& layer : layers) std::sort(layer.begin(), layer.end());
  return layers;
}

FieldMatrix boundary_from_layers(const Layers& layers, int k, const PrimeField& field) {
  const auto size_of = [&](int s) -> const std::vector<Face>& {
    static const std::vector<Face> none;
    return (s >= 0 && s < static_cast<int>(layers.size())) ? layers[static_cast<std::size_t>(s)]
                                                           : none;
  };
  const std::vector<Face>& lower = size_of(k);
  const std::vector<Face>& upper = size_of(k + 1);
  FieldMatrix m(field, lower.size(), upper.size());
  const FieldValue minus_one = field.neg(1);
  for (std::size_t c = 0; c < upper.size(); ++c) {
    int position = 0;
    for (int v : upper[c].vertices()) {
      const Face facet = upper[c].without(v);
      const auto r = static_cast<std::size_t>(
          std::lower_bound(lower.begin(), lower.end(), facet) - lower.begin());
      m(r, c) = (position % 2 == 0) ? 1 : minus_one;
      ++position;
    }
  }
  return m;
}

HomologyProfile homology_from_faces(std::span<const Face> faces, const PrimeField& field) {
  const Layers layers = layer_faces(faces);
  const int top = static_cast<int>(layers.size()) - 1;  // largest face size
  // ranks[k] = rank of the boundary C_k -> C_{k-1}, k = 0..top-1
  std::vector<std::uint64_t> ranks(static_cast<std::size_t>(std::max(top, 0)) + 1, 0);
  for (int k = 0; k + 1 <= top; ++k) {
    ranks[static_cast<std::size_t>(k)] = rank(boundary_from_layers(layers, k, field));
  }
  auto rank_at = [&](int k) -> std::uint64_t {
    return (k < 0 || k >= static_cast<int>(ranks.size())) ? 0 : ranks[static_cast<std::size_t>(k)];
  };
  HomologyProfile profile;
  for (int k = -1; k <= top - 1; ++k) {
    const std::uint64_t chains = layers[static_cast<std::size_t>(k + 1)].size();
    profile.dims.push_back(chains - rank_at(k) - rank_at(k + 1));
  }
  return profile;
}

}  // namespace

FieldMatrix boundary_matrix(const SimplicialComplex& complex, int k, const PrimeField& field) {
  if (k < 0) throw std::invalid_argument("boundary_matrix: k must be >= 0");
  return boundary_from_layers(layer_faces(complex.faces()), k, field);
}

HomologyProfile reduced_homology_dims(const SimplicialComplex& complex, const PrimeField& field) {
  return homology_from_faces(complex.faces(), field);
}

BettiTable hochster_betti(const SimplicialComplex& complex, const PrimeField& field) {
  require_strict(complex, "hochster_betti");
  const std::vector<int> ground = complex.ground().vertices();
  if (ground.size() > 30) throw std::invalid_argument("hochster_betti: ground set too large");
  const std::size_t subsets = std::size_t{1} << ground.size();

  // One homology profile per W, reused for every (i, j) with i + j = |W|.
  std::vector<HomologyProfile> profiles(subsets);
  parallel_for(subsets, [&](std::size_t code) {
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < ground.size(); ++k) {
      if ((code >> k) & 1u) bits |= Face::bit(ground[k]);
    }
    const Face w(bits);
    std::vector<Face> faces;
    for (Face f : complex.faces()) {
      if (w.contains(f)) faces.push_back(f);
    }
    profiles[code] = homology_from_faces(faces, field);
  });

  BettiTable table;
  for (std::size_t code = 0; code < subsets; ++code) {
    const int size = std::popcount(code);
    const HomologyProfile& h = profiles[code];
    for (int k = -1; k + 1 < static_cast<int>(h.dims.size()); ++k) {
      const int j = k + 2;
      const int i = size - j;
      if (i >= 0) table.add(i, j, h.at(k));
    }
  }
  return table;
}

BettiTable shifted_betti(const SimplicialComplex& complex) {
  if (!is_shifted(complex)) {
    throw std::invalid_argument("shifted_betti requires a shifted complex");
  }
  const int n = complex.n();
  // m[k][j] = m_{<= k}(I_Delta, j) for 0 <= k, j <= n
  std::vector<std::vector<Int128>> m(static_cast<std::size_t>(n) + 1,
                                       std::vector<Int128>(static_cast<std::size_t>(n) + 1, 0));
  std::vector<std::vector<std::uint64_t>> faces_by(
      static_cast<std::size_t>(n) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  for (Face f : complex.faces()) {
    ++faces_by[static_cast<std::size_t>(f.max_vertex())][static_cast<std::size_t>(f.degree())];
  }
  for (int j = 0; j <= n; ++j) {
    std::uint64_t faces_below = 0;
    for (int k = 0; k <= n; ++k) {
      faces_below += faces_by[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
          static_cast<Int128>(binomial(k, j)) - static_cast<Int128>(faces_below);
    }
  }
  auto M = [&](int k, int j) -> Int128 {
    if (k < 0 || j < 0) return 0;
    return m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
  };
  auto C = [](int a, int b) { return static_cast<Int128>(binomial(a, b)); };

  BettiTable table;
  for (int j = 1; j <= n; ++j) {
    for (int i = 0; i + j <= n; ++i) {
      Int128 beta = M(n, j) * C(n - j, i);
      for (int k = j; k <= n - 1; ++k) beta -= M(k, j) * C(k - j, i - 1);
      for (int k = j; k <= n; ++k) beta -= M(k - 1, j - 1) * C(k - j, i);
      if (beta < 0) {
        throw std::logic_error("shifted_betti produced a negative entry at (" +
                               std::to_string(i) + "," + std::to_string(j) + ")");
      }
      table.set(i, j, static_cast<std::uint64_t>(beta));
    }
  }
  return table;
}

std::vector<BettiViolation> betti_violations(const BettiTable& a, const BettiTable& b) {
  std::vector<BettiViolation> out;
  for (const auto& [key, value] : a.entries()) {
    const std::uint64_t other = b.at(key.first, key.second);
    if (value > other) out.push_back({key.first, key.second, value, other});
  }
  return out;
}

bool betti_leq(const BettiTable& a, const BettiTable& b) { return betti_violations(a, b).empty(); }

}  // namespace shiftlab
