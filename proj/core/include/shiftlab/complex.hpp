#ifndef SHIFTLAB_COMPLEX_HPP
#define SHIFTLAB_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "shiftlab/face.hpp"

namespace shiftlab {

/// Strict complexes contain every singleton of their ground set; relaxed ones
/// may not (restrictions produce those).
enum class Mode { strict, relaxed };

/// f_i = number of faces of cardinality i + 1.  Trailing zeros are trimmed.
struct FVector {
  std::vector<std::uint64_t> entries;

  /// f_i, 0 beyond the stored range.
  std::uint64_t at(int i) const;
  /// Number of faces of cardinality d (d = 0 gives 1 for the empty face).
  std::uint64_t faces_of_size(int d) const { return d == 0 ? 1 : at(d - 1); }

  /// Trailing zeros are ignored.
  friend bool operator==(const FVector& a, const FVector& b) {
    const auto len = static_cast<int>(std::max(a.entries.size(), b.entries.size()));
    for (int i = 0; i < len; ++i) {
      if (a.at(i) != b.at(i)) return false;
    }
    return true;
  }
};

/// Every degree-d monomial of a squarefree monomial ideal.
struct DegreeSlice {
  int degree = 0;
  std::vector<Face> monomials;  // sorted by mask

  bool contains(Face f) const;
  friend bool operator==(const DegreeSlice&, const DegreeSlice&) = default;
};

/**
 * A finite simplicial complex on a labeled ground set inside [n].
 *
 * Immutable.  The full face set is kept sorted by mask, which doubles as the
 * canonical encoding used for equality and hashing; facets are derived once at
 * construction.  The ground set is [n] for strict complexes and an arbitrary
 * W (labels kept) for restrictions.
 */
class SimplicialComplex {
 public:
  /// Downward closure of `facets` plus the empty face.  Throws
  /// std::invalid_argument for out-of-range facets, and in strict mode when a
  /// singleton {j}, j in [n], is missing.
  static SimplicialComplex from_facets(int n, std::span<const Face> facets,
                                       Mode mode = Mode::strict);

  /// Builds from an explicit face list; throws std::invalid_argument unless it
  /// is downward closed and contains the empty face.
  static SimplicialComplex from_faces(int n, std::vector<Face> faces, Mode mode = Mode::strict);

  int n() const { return n_; }
  Mode mode() const { return mode_; }
  bool strict() const { return mode_ == Mode::strict; }
  Face ground() const { return ground_; }

  std::span<const Face> faces() const { return faces_; }
  std::span<const Face> facets() const { return facets_; }
  std::size_t size() const { return faces_.size(); }
  /// Largest face cardinality minus one; -1 for the complex {empty}.
  int dimension() const;
  /// Largest face cardinality; 0 for the complex {empty}.
  int max_degree() const;

  bool contains(Face f) const;
  /// Faces of cardinality d, sorted by mask.
  std::vector<Face> faces_of_size(int d) const;

  /// True when every face of *this is a face of other.
  bool is_subcomplex_of(const SimplicialComplex& other) const;

  std::size_t hash() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.ground_ == b.ground_ && a.faces_ == b.faces_;
  }

 private:
  SimplicialComplex(int n, Mode mode, Face ground, std::vector<Face> faces);

  friend SimplicialComplex restriction(const SimplicialComplex& complex, Face w);

  int n_ = 0;
  Mode mode_ = Mode::strict;
  Face ground_;
  std::vector<Face> faces_;
  std::vector<Face> facets_;
};

FVector f_vector(const SimplicialComplex& complex);

/// Delta_W: faces of Delta contained in W, ground set W, relaxed mode.
SimplicialComplex restriction(const SimplicialComplex& complex, Face w);

bool is_shifted(const SimplicialComplex& complex);

/// Inclusion-minimal subsets of the ground set that are not faces.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex);

/// d-subsets of the ground set that are not faces: the degree-d part of I_Delta.
DegreeSlice ideal_degree_slice(const SimplicialComplex& complex, int d);

/// Slices d = 0..n of the face ideal.
std::vector<DegreeSlice> face_ideal(const SimplicialComplex& complex);

/// Number of monomials in the slice whose largest index is <= i.
std::uint64_t m_leq(const DegreeSlice& slice, int i);
/// m_{<= i}(I_Delta, d); 0 when i < d or i < 1.
std::uint64_t m_leq(const SimplicialComplex& complex, int i, int d);

/// Throws std::invalid_argument unless the complex is strict mode.
void require_strict(const SimplicialComplex& complex, const char* operation);

}  // namespace shiftlab

template <>
struct std::hash<shiftlab::SimplicialComplex> {
  std::size_t operator()(const shiftlab::SimplicialComplex& c) const noexcept { return c.hash(); }
};

#endif  // SHIFTLAB_COMPLEX_HPP
