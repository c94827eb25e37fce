#include "shiftlab/face.hpp"

#include <algorithm>
#include <stdexcept>

namespace shiftlab {

namespace {

void check_vertex(int v) {
  if (v < 1 || v > kMaxVertices) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." +
                                std::to_string(kMaxVertices));
  }
}

void check_same_degree(Face a, Face b, const char* what) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument(std::string(what) + ": faces " + a.to_string() + " and " +
                                b.to_string() + " have different degrees");
  }
}

}  // namespace

Face::Face(std::initializer_list<int> vertices)
    : Face(std::span<const int>(vertices.begin(), vertices.size())) {}

Face::Face(std::span<const int> vertices) {
  for (int v : vertices) {
    check_vertex(v);
    bits_ |= bit(v);
  }
}

Face Face::interval(int lo, int hi) {
  Face f;
  for (int v = std::max(lo, 1); v <= hi; ++v) {
    check_vertex(v);
    f = f.with(v);
  }
  return f;
}

std::vector<int> Face::vertices() const {
  std::vector<int> out;
  out.reserve(degree());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string Face::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

std::strong_ordering lex_compare(Face sigma, Face tau) {
  check_same_degree(sigma, tau, "lex_compare");
  Face diff = sigma ^ tau;
  if (diff.empty()) return std::strong_ordering::equal;
  return sigma.contains(diff.min_vertex()) ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
}

std::strong_ordering revlex_compare(Face sigma, Face tau) {
  check_same_degree(sigma, tau, "revlex_compare");
  Face diff = sigma ^ tau;
  if (diff.empty()) return std::strong_ordering::equal;
  return tau.contains(diff.max_vertex()) ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
}

Face top_interval(int i, int d) { return Face::interval(i - d + 1, i); }

std::uint64_t binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t r = 1;
  for (int k = 1; k <= b; ++k) {
    // exact at every step: r * (a-b+k) is divisible by k
    r = r * static_cast<std::uint64_t>(a - b + k) / static_cast<std::uint64_t>(k);
  }
  return r;
}

std::vector<Face> subsets_of_size(Face within, int d) {
  const std::vector<int> verts = within.vertices();
  const int m = static_cast<int>(verts.size());
  std::vector<Face> out;
  if (d < 0 || d > m) return out;
  out.reserve(binomial(m, d));
  if (d == 0) {
    out.emplace_back();
    return out;
  }
  // Gosper's hack over positions 0..m-1 yields increasing masks; the position ->
  // vertex map is monotone, so the face masks are increasing as well.
  std::uint64_t pos = (d == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << d) - 1);
  while (true) {
    std::uint64_t bits = 0;
    for (std::uint64_t rest = pos; rest != 0; rest &= rest - 1) {
      bits |= Face::bit(verts[std::countr_zero(rest)]);
    }
    out.emplace_back(bits);
    const std::uint64_t c = pos & (~pos + 1);
    const std::uint64_t r = pos + c;
    if (r == 0 || (m < 64 && (r >> m) != 0)) break;
    pos = (((r ^ pos) >> 2) / c) | r;
  }
  return out;
}

void sort_lex_descending(std::span<Face> faces) {
  std::sort(faces.begin(), faces.end(),
            [](Face a, Face b) { return lex_compare(a, b) == std::strong_ordering::greater; });
}

}  // namespace shiftlab
