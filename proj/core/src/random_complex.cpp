#include "shiftlab/random_complex.hpp"

#include <random>
#include <stdexcept>

namespace shiftlab {

SimplicialComplex random_complex(int n, double density, std::uint64_t seed) {
  if (n < 1 || n > 20) throw std::invalid_argument("random_complex: n must be in 1..20");
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("random_complex: density must be in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  auto draw = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < density; };

  const Face ground = Face::ground(n);
  std::vector<char> covered(std::size_t{1} << n, 0);
  std::vector<Face> faces{Face{}};
  for (int d = n; d >= 1; --d) {
    for (Face sigma : subsets_of_size(ground, d)) {
      bool below = false;
      for (int v = 1; v <= n && !below; ++v) {
        if (!sigma.contains(v) && covered[sigma.with(v).bits()]) below = true;
      }
      const bool chosen = below || d == 1 || draw();
      if (chosen) {
        covered[sigma.bits()] = 1;
        faces.push_back(sigma);
      }
    }
  }
  return SimplicialComplex::from_faces(n, std::move(faces), Mode::strict);
}

}  // namespace shiftlab
