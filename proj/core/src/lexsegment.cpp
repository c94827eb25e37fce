#include "shiftlab/lexsegment.hpp"

#include <stdexcept>
#include <string>

namespace shiftlab {

SimplicialComplex delta_lex(const FVector& f, int n) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("delta_lex: bad n");
  if (static_cast<int>(f.entries.size()) > n) {
    throw std::invalid_argument("delta_lex: f-vector longer than n");
  }
  std::vector<Face> faces{Face{}};
  for (int d = 1; d <= n; ++d) {
    const std::uint64_t wanted = f.at(d - 1);
    const std::uint64_t total = binomial(n, d);
    if (wanted > total) {
      throw std::invalid_argument("delta_lex: f_" + std::to_string(d - 1) + " exceeds C(n," +
                                  std::to_string(d) + ")");
    }
    std::vector<Face> layer = subsets_of_size(Face::ground(n), d);
    sort_lex_descending(layer);
    faces.insert(faces.end(), layer.begin() + static_cast<std::ptrdiff_t>(total - wanted), layer.end());
  }
  const Mode mode = f.at(0) == static_cast<std::uint64_t>(n) ? Mode::strict : Mode::relaxed;
  SimplicialComplex result = [&] {
    try {
      return SimplicialComplex::from_faces(n, std::move(faces), mode);
    } catch (const std::invalid_argument& e) {
      throw std::logic_error(std::string("delta_lex: segments are not a complex: ") + e.what());
    }
  }();
  if (!(f_vector(result) == f)) throw std::logic_error("delta_lex: f-vector mismatch");
  if (result.strict() && !is_shifted(result)) throw std::logic_error("delta_lex: result not shifted");
  return result;
}

SimplicialComplex delta_lex(const SimplicialComplex& complex) {
  return delta_lex(f_vector(complex), complex.n());
}

}  // namespace shiftlab
