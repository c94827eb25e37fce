#include "shiftlab/gin.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <random>
#include <string>

#include "shiftlab/parallel.hpp"

namespace shiftlab {

namespace {

void check_gin_size(const SimplicialComplex& complex, const char* operation) {
  if (complex.n() > kMaxGinVertices) {
    throw std::invalid_argument(std::string(operation) + ": n = " + std::to_string(complex.n()) +
                                " exceeds " + std::to_string(kMaxGinVertices));
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Dense coefficient table indexed by mask; reused across rows on one thread.
class WedgeAccumulator {
 public:
  void reset(int n) {
    if (n_ == n) return;
    n_ = n;
    table_.assign(std::size_t{1} << n, 0);
    layers_.clear();
    for (int t = 0; t <= n; ++t) layers_.push_back(subsets_of_size(Face::ground(n), t));
  }

  // Fills the table with phi(e_sigma); only the layer |sigma| is meaningful.
  void expand(Face sigma, const FieldMatrix& phi) {
    const PrimeField& field = phi.field();
    table_[0] = 1;
    int t = 0;
    for (int vertex : sigma.vertices()) {
      const auto image = phi.row(static_cast<std::size_t>(vertex - 1));
      for (Face s : layers_[static_cast<std::size_t>(t + 1)]) table_[s.bits()] = 0;
      for (Face s : layers_[static_cast<std::size_t>(t)]) {
        const FieldValue c = table_[s.bits()];
        if (c == 0) continue;
        for (int k = 1; k <= n_; ++k) {
          if (s.contains(k) || image[static_cast<std::size_t>(k - 1)] == 0) continue;
          // e_S ^ e_k = (-1)^{#{s in S : s > k}} e_{S u {k}}
          const int above = std::popcount(s.bits() >> k);
          FieldValue term = field.mul(c, image[static_cast<std::size_t>(k - 1)]);
          if (above & 1) term = field.neg(term);
          FieldValue& slot = table_[s.with(k).bits()];
          slot = field.add(slot, term);
        }
      }
      ++t;
    }
  }

  FieldValue at(Face f) const { return table_[f.bits()]; }

 private:
  int n_ = -1;
  std::vector<FieldValue> table_;
  std::vector<std::vector<Face>> layers_;
};

FieldMatrix image_matrix(std::span<const Face> rows, std::span<const Face> columns,
                         const GenericMatrix& phi, int n) {
  FieldMatrix m(phi.matrix.field(), rows.size(), columns.size());
  parallel_for(rows.size(), [&](std::size_t r) {
    thread_local WedgeAccumulator acc;
    acc.reset(n);
    acc.expand(rows[r], phi.matrix);
    auto out = m.row(r);
    for (std::size_t c = 0; c < columns.size(); ++c) out[c] = acc.at(columns[c]);
  });
  return m;
}

}  // namespace

const char* to_string(GinRoute route) {
  switch (route) {
    case GinRoute::automatic: return "auto";
    case GinRoute::ideal: return "ideal";
    case GinRoute::dual: return "dual";
  }
  return "?";
}

GenericMatrix random_gl(int n, const PrimeField& field, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("random_gl: bad dimension");
  std::mt19937_64 rng(seed);
  const auto size = static_cast<std::size_t>(n);
  while (true) {
    FieldMatrix m(field, size, size);
    for (std::size_t r = 0; r < size; ++r) {
      for (std::size_t c = 0; c < size; ++c) m(r, c) = static_cast<FieldValue>(rng() % field.modulus());
    }
    if (rank(m) == size) return {std::move(m), seed};
  }
}

std::vector<FieldValue> wedge_image(Face sigma, const GenericMatrix& phi,
                                    std::span<const Face> columns) {
  const int n = static_cast<int>(phi.matrix.rows());
  if (n > kMaxGinVertices) throw std::invalid_argument("wedge_image: n too large");
  WedgeAccumulator acc;
  acc.reset(n);
  acc.expand(sigma, phi.matrix);
  std::vector<FieldValue> out;
  out.reserve(columns.size());
  for (Face c : columns) out.push_back(acc.at(c));
  return out;
}

FieldMatrix phi_image_matrix(const SimplicialComplex& complex, int d, const GenericMatrix& phi) {
  check_gin_size(complex, "phi_image_matrix");
  if (static_cast<int>(phi.matrix.rows()) != complex.n()) {
    throw std::invalid_argument("phi_image_matrix: generic matrix has the wrong size");
  }
  const DegreeSlice slice = ideal_degree_slice(complex, d);
  const std::vector<Face> columns = subsets_of_size(Face::ground(complex.n()), d);
  return image_matrix(slice.monomials, columns, phi, complex.n());
}

GinDegreeReport gin_degree(const SimplicialComplex& complex, int d, const GenericMatrix& phi,
                           GinRoute route) {
  check_gin_size(complex, "gin_degree");
  const int n = complex.n();
  const std::vector<Face> columns = subsets_of_size(Face::ground(n), d);
  const std::vector<Face> faces = complex.faces_of_size(d);
  std::vector<Face> nonfaces;
  std::set_difference(columns.begin(), columns.end(), faces.begin(), faces.end(),
                      std::back_inserter(nonfaces));

  if (route == GinRoute::automatic) {
    route = nonfaces.size() <= faces.size() ? GinRoute::ideal : GinRoute::dual;
  }
  GinDegreeReport report;
  report.degree = d;
  report.route = route;
  report.columns = columns.size();

  if (route == GinRoute::ideal) {
    // e_tau is in Gin exactly when column tau is a pivot
    // column while columns are visited from rev-lex largest to smallest.
    report.rows = nonfaces.size();
    const Echelon e = row_echelon(image_matrix(nonfaces, columns, phi, n));
    report.rank = e.rank;
    for (std::size_t c : e.pivot_columns) report.gin_monomials.push_back(columns[c]);
  } else {
    // The annihilator of phi(I_d) is the image of the face monomials under
    // another generic map; its initial terms for the opposite order are the
    // complement of Gin_d.
    report.rows = faces.size();
    std::vector<std::size_t> ascending(columns.size());
    for (std::size_t k = 0; k < columns.size(); ++k) ascending[k] = columns.size() - 1 - k;
    const Echelon e = row_echelon(image_matrix(faces, columns, phi, n), ascending);
    report.rank = e.rank;
    std::vector<char> is_face(columns.size(), 0);
    for (std::size_t c : e.pivot_columns) is_face[c] = 1;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (!is_face[c]) report.gin_monomials.push_back(columns[c]);
    }
  }
  std::sort(report.gin_monomials.begin(), report.gin_monomials.end());
  return report;
}

namespace {

struct Draw {
  std::optional<SimplicialComplex> complex;  // empty when the pivots are not an ideal
  std::vector<GinDegreeReport> degrees;
};

Draw single_draw(const SimplicialComplex& complex, const PrimeField& field, std::uint64_t seed,
                 GinRoute route) {
  const int n = complex.n();
  const GenericMatrix phi = random_gl(n, field, seed);
  Draw draw;
  std::vector<Face> faces{Face{}};
  for (int d = 1; d <= n; ++d) {
    const std::vector<Face> current = complex.faces_of_size(d);
    if (current.empty()) continue;  // I_d is everything
    if (current.size() == binomial(n, d)) {  // I_d = 0
      faces.insert(faces.end(), current.begin(), current.end());
      continue;
    }
    GinDegreeReport report = gin_degree(complex, d, phi, route);
    const std::vector<Face> columns = subsets_of_size(Face::ground(n), d);
    std::set_difference(columns.begin(), columns.end(), report.gin_monomials.begin(),
                        report.gin_monomials.end(), std::back_inserter(faces));
    draw.degrees.push_back(std::move(report));
  }
  try {
    draw.complex = SimplicialComplex::from_faces(n, std::move(faces), Mode::strict);
  } catch (const std::invalid_argument&) {
    // a non-generic draw can produce a pivot set that is not an order ideal
  }
  return draw;
}

}  // namespace

GinResult exterior_shift(const SimplicialComplex& complex, const GinOptions& options) {
  require_strict(complex, "exterior_shift");
  check_gin_size(complex, "exterior_shift");
  if (complex.n() == 0) return GinResult{complex, {}, {options.seed, options.seed}, 0};
  const PrimeField field(options.prime);
  const FVector f = f_vector(complex);
  const int attempts = std::max(1, options.retries);
  for (int a = 0; a < attempts; ++a) {
    const std::uint64_t s1 = a == 0 ? options.seed : splitmix64(options.seed + 2 * a);
    const std::uint64_t s2 = splitmix64(options.seed + 2 * a + 1);
    Draw first = single_draw(complex, field, s1, options.route);
    if (!first.complex || !is_shifted(*first.complex) || !(f_vector(*first.complex) == f)) continue;
    Draw second = single_draw(complex, field, s2, options.route);
    if (!second.complex || !(*second.complex == *first.complex)) continue;
    return GinResult{std::move(*first.complex), std::move(first.degrees), {s1, s2}, a + 1};
  }
  throw GinDisagreement("exterior_shift: no agreeing pair of generic draws in " +
                        std::to_string(attempts) + " attempts over GF(" +
                        std::to_string(options.prime) + ")");
}

SimplicialComplex gin(const SimplicialComplex& complex, std::uint32_t prime, std::uint64_t seed) {
  return exterior_shift(complex, GinOptions{prime, seed, 3, GinRoute::automatic}).complex;
}

std::uint64_t m_leq_via_rank(const SimplicialComplex& complex, int i, int d,
                             const GenericMatrix& phi) {
  if (d < 1 || i < d) return 0;
  const FieldMatrix m = phi_image_matrix(complex, d, phi);
  const std::vector<Face> columns = subsets_of_size(Face::ground(complex.n()), d);
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].max_vertex() <= i) kept.push_back(c);
  }
  return rank(m.select_columns(kept));
}

std::uint64_t m_leq_via_rank(const SimplicialComplex& complex, int i, int d, std::uint32_t prime,
                             std::uint64_t seed) {
  return m_leq_via_rank(complex, i, d, random_gl(complex.n(), PrimeField(prime), seed));
}

}  // namespace shiftlab
