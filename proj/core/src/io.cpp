#include "shiftlab/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace shiftlab {

using nlohmann::json;

std::vector<int> face_to_list(Face face) { return face.vertices(); }

Face face_from_list(const std::vector<int>& vertices, int n) {
  std::uint64_t bits = 0;
  for (int v : vertices) {
    if (v < 1 || v > n) {
      throw ParseError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    bits |= Face::bit(v);
  }
  return Face(bits);
}

std::string complex_to_json(const SimplicialComplex& complex, int indent) {
  std::vector<std::vector<int>> facets;
  for (Face f : complex.facets()) facets.push_back(face_to_list(f));
  std::sort(facets.begin(), facets.end());
  json doc;
  doc["n"] = complex.n();
  doc["facets"] = facets;
  doc["mode"] = complex.strict() ? "strict" : "relaxed";
  return doc.dump(indent);
}

SimplicialComplex complex_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("complex JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("facets")) {
    throw ParseError("complex JSON needs \"n\" and \"facets\"");
  }
  try {
    const int n = doc.at("n").get<int>();
    if (n < 0 || n > kMaxVertices) throw ParseError("complex JSON: n out of range");
    Mode mode = Mode::strict;
    if (doc.contains("mode")) {
      const auto m = doc.at("mode").get<std::string>();
      if (m == "relaxed") {
        mode = Mode::relaxed;
      } else if (m != "strict") {
        throw ParseError("complex JSON: mode must be strict or relaxed");
      }
    }
    std::vector<Face> facets;
    for (const auto& facet : doc.at("facets")) {
      facets.push_back(face_from_list(facet.get<std::vector<int>>(), n));
    }
    return SimplicialComplex::from_facets(n, facets, mode);
  } catch (const json::exception& e) {
    throw ParseError(std::string("complex JSON: ") + e.what());
  }
}

SimplicialComplex read_complex_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return complex_from_json(buffer.str());
}

std::string betti_to_tsv(const BettiTable& table) {
  std::vector<std::pair<BettiTable::Key, std::uint64_t>> rows(table.entries().begin(),
                                                              table.entries().end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
  });
  std::string out;
  for (const auto& [key, value] : rows) {
    out += std::to_string(key.first) + '\t' + std::to_string(key.second) + '\t' +
           std::to_string(value) + '\n';
  }
  return out;
}

namespace {

json pairs_json(const ShiftSequence& pairs) {
  json out = json::array();
  for (ShiftPair p : pairs) out.push_back({p.i, p.j});
  return out;
}

}  // namespace

std::string report_to_json(const VerificationReport& report, int indent) {
  json failures = json::array();
  for (const VerificationFailure& f : report.failures) {
    json facets = json::array();
    for (Face face : f.facets) facets.push_back(face_to_list(face));
    json item;
    item["check"] = f.check;
    item["seed"] = f.seed;
    item["n"] = f.n;
    item["facets"] = facets;
    item["pairs"] = pairs_json(f.pairs);
    item["cell"] = f.i < 0 && f.j < 0 ? json(nullptr) : json{{"i", f.i}, {"j", f.j}};
    item["lhs"] = f.lhs;
    item["rhs"] = f.rhs;
    item["detail"] = f.detail;
    failures.push_back(std::move(item));
  }
  json doc;
  doc["trials"] = report.trials;
  doc["failures"] = failures;
  doc["checks"] = report.checks;
  doc["elapsed_ms"] = report.elapsed_ms;
  doc["passed"] = report.passed();
  return doc.dump(indent);
}

VerificationReport report_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    VerificationReport report;
    report.trials = doc.at("trials").get<std::uint64_t>();
    report.elapsed_ms = doc.at("elapsed_ms").get<double>();
    if (doc.contains("checks")) {
      report.checks = doc.at("checks").get<std::map<std::string, std::uint64_t>>();
    }
    for (const auto& item : doc.at("failures")) {
      VerificationFailure f;
      f.check = item.value("check", std::string{});
      f.seed = item.at("seed").get<std::uint64_t>();
      f.n = item.value("n", 0);
      for (const auto& facet : item.value("facets", json::array())) {
        f.facets.push_back(face_from_list(facet.get<std::vector<int>>(), kMaxVertices));
      }
      for (const auto& p : item.at("pairs")) f.pairs.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
      if (!item.at("cell").is_null()) {
        f.i = item.at("cell").at("i").get<int>();
        f.j = item.at("cell").at("j").get<int>();
      }
      f.lhs = item.at("lhs").get<std::int64_t>();
      f.rhs = item.at("rhs").get<std::int64_t>();
      f.detail = item.value("detail", std::string{});
      report.failures.push_back(std::move(f));
    }
    return report;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

ShiftSequence parse_pairs(std::string_view text) {
  ShiftSequence out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const auto comma = token.find(',');
    if (comma == std::string::npos) throw ParseError("pair \"" + token + "\" needs the form i,j");
    ShiftPair p;
    const char* first = token.data();
    const char* mid = token.data() + comma;
    const char* last = token.data() + token.size();
    if (std::from_chars(first, mid, p.i).ptr != mid ||
        std::from_chars(mid + 1, last, p.j).ptr != last) {
      throw ParseError("pair \"" + token + "\" is not two integers");
    }
    out.push_back(p);
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == ';') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

std::string pairs_to_string(const ShiftSequence& pairs) {
  std::string out;
  for (ShiftPair p : pairs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p.i) + ',' + std::to_string(p.j);
  }
  return out;
}

}  // namespace shiftlab
