#ifndef SHIFTLAB_FACE_HPP
#define SHIFTLAB_FACE_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace shiftlab {

/// Largest supported ground set; faces are single machine words.
inline constexpr int kMaxVertices = 64;

/**
 * A subset of [n] = {1, ..., n}, stored as a bitmask (vertex v is bit v-1).
 *
 * The same value names a face of a complex, a squarefree monomial x_sigma of
 * the polynomial ring, and a monomial e_sigma of the exterior algebra.  The
 * built-in ordering compares raw masks; for faces of equal degree that is
 * exactly the reverse-lexicographic order read from largest to smallest
 * (see revlex_compare).
 */
class Face {
 public:
  constexpr Face() = default;
  constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}
  Face(std::initializer_list<int> vertices);
  explicit Face(std::span<const int> vertices);

  /// {lo, lo+1, ..., hi}; empty when hi < lo.
  static Face interval(int lo, int hi);
  /// [n]
  static Face ground(int n) { return interval(1, n); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int degree() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1u; }
  constexpr bool contains(Face other) const { return (other.bits_ & ~bits_) == 0; }

  /// Largest vertex, 0 for the empty face.
  constexpr int max_vertex() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }
  /// Smallest vertex, 0 for the empty face.
  constexpr int min_vertex() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  constexpr Face with(int v) const { return Face(bits_ | bit(v)); }
  constexpr Face without(int v) const { return Face(bits_ & ~bit(v)); }
  /// (this \ {out}) u {in}
  constexpr Face exchange(int out, int in) const { return without(out).with(in); }

  constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
  constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
  constexpr Face operator^(Face o) const { return Face(bits_ ^ o.bits_); }

  std::vector<int> vertices() const;
  std::string to_string() const;

  friend constexpr bool operator==(Face, Face) = default;
  friend constexpr std::strong_ordering operator<=>(Face, Face) = default;

  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

 private:
  std::uint64_t bits_ = 0;
};

/// sigma >_lex tau  iff  min(sigma xor tau) lies in sigma  (1 > 2 > ... > n).
/// Throws std::invalid_argument when the degrees differ.
std::strong_ordering lex_compare(Face sigma, Face tau);

/// sigma >_rev tau  iff  max(sigma xor tau) lies in tau  (1 > 2 > ... > n).
/// Throws std::invalid_argument when the degrees differ.
std::strong_ordering revlex_compare(Face sigma, Face tau);

/// sigma_(i,d) = {i-d+1, ..., i}, the rev-lex threshold for "max vertex <= i".
Face top_interval(int i, int d);

/// C(a, b) with C(a, b) = 0 for b < 0, b > a or a < 0.
std::uint64_t binomial(int a, int b);

/// All d-subsets of `within`, in increasing mask order (rev-lex descending).
std::vector<Face> subsets_of_size(Face within, int d);

/// Sort faces of one degree from lex-largest to lex-smallest.
void sort_lex_descending(std::span<Face> faces);

}  // namespace shiftlab

template <>
struct std::hash<shiftlab::Face> {
  std::size_t operator()(shiftlab::Face f) const noexcept {
    return std::hash<std::uint64_t>{}(f.bits());
  }
};

#endif  // SHIFTLAB_FACE_HPP
