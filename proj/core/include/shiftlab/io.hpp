#ifndef SHIFTLAB_IO_HPP
#define SHIFTLAB_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "shiftlab/complex.hpp"
#include "shiftlab/homology.hpp"
#include "shiftlab/shifting.hpp"
#include "shiftlab/verify.hpp"

namespace shiftlab {

/// Thrown for malformed input documents.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"n": n, "facets": [[...], ...], "mode": "strict"|"relaxed"}; facets are
/// ascending integer arrays, listed in lexicographic order of those arrays.
std::string complex_to_json(const SimplicialComplex& complex, int indent = -1);
SimplicialComplex complex_from_json(std::string_view text);
SimplicialComplex read_complex_file(const std::filesystem::path& path);

/// Face as an ascending vertex list, and back.
std::vector<int> face_to_list(Face face);
Face face_from_list(const std::vector<int>& vertices, int n);

/// One "i<TAB>j<TAB>beta" line per nonzero entry, sorted by (j, i).
std::string betti_to_tsv(const BettiTable& table);

/// {"trials", "failures": [{"check", "seed", "n", "facets", "pairs",
/// "cell": {"i", "j"} | null, "lhs", "rhs", "detail"}], "checks", "elapsed_ms"}
std::string report_to_json(const VerificationReport& report, int indent = -1);
VerificationReport report_from_json(std::string_view text);

/// "1,3 2,5" <-> {(1,3), (2,5)}.  Separators: whitespace or ';'.
ShiftSequence parse_pairs(std::string_view text);
std::string pairs_to_string(const ShiftSequence& pairs);

}  // namespace shiftlab

#endif  // SHIFTLAB_IO_HPP
