#include "shiftlab/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace shiftlab {

namespace {

void check_ground_size(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("ground set size " + std::to_string(n) + " outside 0.." +
                                std::to_string(kMaxVertices));
  }
}

std::vector<Face> derive_facets(const std::vector<Face>& faces) {
  // A face is a facet unless it is a codimension-one face of something larger.
  std::vector<char> covered(faces.size(), 0);
  for (Face tau : faces) {
    for (int v : tau.vertices()) {
      auto it = std::lower_bound(faces.begin(), faces.end(), tau.without(v));
      covered[static_cast<std::size_t>(it - faces.begin())] = 1;
    }
  }
  std::vector<Face> facets;
  for (std::size_t k = 0; k < faces.size(); ++k) {
    if (!covered[k]) facets.push_back(faces[k]);
  }
  return facets;
}

}  // namespace

std::uint64_t FVector::at(int i) const {
  if (i < 0 || i >= static_cast<int>(entries.size())) return 0;
  return entries[static_cast<std::size_t>(i)];
}

bool DegreeSlice::contains(Face f) const {
  return std::binary_search(monomials.begin(), monomials.end(), f);
}

SimplicialComplex::SimplicialComplex(int n, Mode mode, Face ground, std::vector<Face> faces)
    : n_(n), mode_(mode), ground_(ground), faces_(std::move(faces)) {
  facets_ = derive_facets(faces_);
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::span<const Face> facets, Mode mode) {
  check_ground_size(n);
  const Face ground = Face::ground(n);
  std::unordered_set<Face> seen;
  std::vector<Face> stack;
  auto push = [&](Face f) {
    if (seen.insert(f).second) stack.push_back(f);
  };
  push(Face{});
  for (Face f : facets) {
    if (!ground.contains(f)) {
      throw std::invalid_argument("facet " + f.to_string() + " is not a subset of [" +
                                  std::to_string(n) + "]");
    }
    push(f);
  }
  while (!stack.empty()) {
    Face f = stack.back();
    stack.pop_back();
    for (int v : f.vertices()) push(f.without(v));
  }
  if (mode == Mode::strict) {
    for (int j = 1; j <= n; ++j) {
      if (!seen.contains(Face{j})) {
        throw std::invalid_argument("strict complex is missing the singleton {" +
                                    std::to_string(j) + "}");
      }
    }
  }
  std::vector<Face> faces(seen.begin(), seen.end());
  std::sort(faces.begin(), faces.end());
  return SimplicialComplex(n, mode, ground, std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(int n, std::vector<Face> faces, Mode mode) {
  check_ground_size(n);
  const Face ground = Face::ground(n);
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  if (faces.empty() || !faces.front().empty()) {
    throw std::invalid_argument("face list must contain the empty face");
  }
  for (Face f : faces) {
    if (!ground.contains(f)) {
      throw std::invalid_argument("face " + f.to_string() + " is not a subset of [" +
                                  std::to_string(n) + "]");
    }
    for (int v : f.vertices()) {
      if (!std::binary_search(faces.begin(), faces.end(), f.without(v))) {
        throw std::invalid_argument("face list is not downward closed: " + f.to_string() +
                                    " lacks " + f.without(v).to_string());
      }
    }
  }
  if (mode == Mode::strict) {
    for (int j = 1; j <= n; ++j) {
      if (!std::binary_search(faces.begin(), faces.end(), Face{j})) {
        throw std::invalid_argument("strict complex is missing the singleton {" +
                                    std::to_string(j) + "}");
      }
    }
  }
  return SimplicialComplex(n, mode, ground, std::move(faces));
}

int SimplicialComplex::dimension() const { return faces_.empty() ? -1 : max_degree() - 1; }

int SimplicialComplex::max_degree() const {
  int d = 0;
  for (Face f : facets_) d = std::max(d, f.degree());
  return d;
}

bool SimplicialComplex::contains(Face f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f);
}

std::vector<Face> SimplicialComplex::faces_of_size(int d) const {
  std::vector<Face> out;
  for (Face f : faces_) {
    if (f.degree() == d) out.push_back(f);
  }
  return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::includes(other.faces_.begin(), other.faces_.end(), faces_.begin(), faces_.end());
}

std::size_t SimplicialComplex::hash() const {
  // FNV-1a over the canonical (sorted) face list.
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(n_);
  for (Face f : faces_) {
    h ^= f.bits();
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ ground_.bits());
}

FVector f_vector(const SimplicialComplex& complex) {
  FVector f;
  for (Face face : complex.faces()) {
    const int d = face.degree();
    if (d == 0) continue;
    if (f.entries.size() < static_cast<std::size_t>(d)) f.entries.resize(d, 0);
    ++f.entries[static_cast<std::size_t>(d - 1)];
  }
  return f;
}

SimplicialComplex restriction(const SimplicialComplex& complex, Face w) {
  if (!complex.ground().contains(w)) {
    throw std::invalid_argument("restriction set " + w.to_string() +
                                " is not inside the ground set");
  }
  std::vector<Face> faces;
  for (Face f : complex.faces()) {
    if (w.contains(f)) faces.push_back(f);
  }
  return SimplicialComplex(complex.n(), Mode::relaxed, w, std::move(faces));
}

void require_strict(const SimplicialComplex& complex, const char* operation) {
  if (!complex.strict()) {
    throw std::invalid_argument(std::string(operation) + " requires a strict-mode complex");
  }
}

bool is_shifted(const SimplicialComplex& complex) {
  require_strict(complex, "is_shifted");
  const int n = complex.n();
  for (Face sigma : complex.faces()) {
    for (int i : sigma.vertices()) {
      for (int j = i + 1; j <= n; ++j) {
        if (!sigma.contains(j) && !complex.contains(sigma.exchange(i, j))) return false;
      }
    }
  }
  return true;
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex) {
  const std::vector<int> ground = complex.ground().vertices();
  std::vector<Face> out;
  for (Face tau : complex.faces()) {
    for (int v : ground) {
      if (tau.contains(v)) continue;
      const Face sigma = tau.with(v);
      if (complex.contains(sigma)) continue;
      bool minimal = true;
      for (int u : sigma.vertices()) {
        if (!complex.contains(sigma.without(u))) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(sigma);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DegreeSlice ideal_degree_slice(const SimplicialComplex& complex, int d) {
  DegreeSlice slice{d, {}};
  for (Face f : subsets_of_size(complex.ground(), d)) {
    if (!complex.contains(f)) slice.monomials.push_back(f);
  }
  return slice;
}

std::vector<DegreeSlice> face_ideal(const SimplicialComplex& complex) {
  std::vector<DegreeSlice> slices;
  slices.reserve(static_cast<std::size_t>(complex.n()) + 1);
  for (int d = 0; d <= complex.n(); ++d) slices.push_back(ideal_degree_slice(complex, d));
  return slices;
}

std::uint64_t m_leq(const DegreeSlice& slice, int i) {
  return static_cast<std::uint64_t>(std::count_if(
      slice.monomials.begin(), slice.monomials.end(),
      [i](Face f) { return f.max_vertex() <= i; }));
}

std::uint64_t m_leq(const SimplicialComplex& complex, int i, int d) {
  if (i < 1 || d < 0 || i < d) return 0;
  const Face below = complex.ground() & Face::ground(std::min(i, kMaxVertices));
  std::uint64_t faces = 0;
  for (Face f : complex.faces()) {
    if (f.degree() == d && below.contains(f)) ++faces;
  }
  return binomial(below.degree(), d) - faces;
}

}  // namespace shiftlab
