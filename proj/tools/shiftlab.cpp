// shiftlab: command-line front end for the shifting library.
//
// Exit status: 0 when the command succeeded and reported no failures,
// 1 when a verification reported failures, 2 on usage or input errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "shiftlab/complex.hpp"
#include "shiftlab/counterexample.hpp"
#include "shiftlab/gin.hpp"
#include "shiftlab/homology.hpp"
#include "shiftlab/io.hpp"
#include "shiftlab/lexsegment.hpp"
#include "shiftlab/random_complex.hpp"
#include "shiftlab/shifting.hpp"
#include "shiftlab/verify.hpp"

namespace {

using nlohmann::json;
using namespace shiftlab;

SimplicialComplex load(const std::string& path) {
  if (path == "-") {
    const std::string text{std::istreambuf_iterator<char>(std::cin), {}};
    return complex_from_json(text);
  }
  return read_complex_file(path);
}

json complex_json(const SimplicialComplex& c) { return json::parse(complex_to_json(c)); }

json faces_json(const std::vector<Face>& faces) {
  json out = json::array();
  for (Face f : faces) out.push_back(face_to_list(f));
  return out;
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

GinRoute parse_route(const std::string& name) {
  if (name == "auto") return GinRoute::automatic;
  if (name == "ideal") return GinRoute::ideal;
  if (name == "dual") return GinRoute::dual;
  throw CLI::ValidationError("--route", "expected auto, ideal or dual");
}

json gin_json(const GinResult& result) {
  json degrees = json::array();
  for (const GinDegreeReport& d : result.degrees) {
    degrees.push_back({{"degree", d.degree},
                       {"route", to_string(d.route)},
                       {"rows", d.rows},
                       {"columns", d.columns},
                       {"rank", d.rank},
                       {"gin_monomials", faces_json(d.gin_monomials)}});
  }
  return {{"complex", complex_json(result.complex)},
          {"degrees", degrees},
          {"seeds", result.seeds},
          {"attempts", result.attempts}};
}

struct Options {
  std::string file;
  // betti
  std::string method = "hochster";
  std::uint32_t field = PrimeField::kDefaultPrime;
  // shift
  std::string pairs;
  std::string automatic;
  std::uint64_t seed = 1;
  std::uint64_t limit = 0;
  // enumerate
  std::size_t state_limit = 100000;
  // gin
  std::uint32_t prime = PrimeField::kDefaultPrime;
  int retries = 3;
  std::string route = "auto";
  // verify / random
  int n = 6;
  int n_min = 3;
  std::uint64_t trials = 20;
  bool no_exterior = false;
  bool no_lex = false;
  bool no_single = false;
  double density = 0.2;
  // section4
  std::string phase = "classify";
  bool tail_pairs = false;
};

int run_counterexample(const Options& o) {
  namespace cx = shiftlab::counterexample;
  if (o.phase == "build") {
    const SimplicialComplex c = cx::build();
    json doc = complex_json(c);
    json f = json::array();
    for (auto v : f_vector(c).entries) f.push_back(v);
    doc["f_vector"] = f;
    emit(doc);
    return 0;
  }
  const cx::Classification cls = cx::enumerate_and_classify(o.tail_pairs, o.state_limit);
  json seqs = json::array();
  for (const auto& q : cls.sequences) seqs.push_back(cx::to_string(q));
  if (o.phase == "classify") {
    emit({{"count", cls.complexes.size()}, {"sequences", seqs}});
    return 0;
  }
  if (o.phase != "negatives") throw CLI::ValidationError("--phase", "build, classify or negatives");
  GinOptions gin;
  gin.prime = o.prime;
  gin.seed = o.seed;
  gin.retries = o.retries;
  gin.route = parse_route(o.route);
  const cx::NegativeResults neg = cx::negative_results(cls, gin, !o.no_exterior);
  const VerificationReport report = cx::to_report(neg);
  json witnesses = json::array();
  for (const cx::Witness& w : neg.witnesses) {
    witnesses.push_back({{"sharp", cx::to_string(cls.sequences[w.sharp])},
                         {"comparison", cx::to_string(cls.sequences[w.comparison])},
                         {"degree", w.degree},
                         {"pattern_holds", w.pattern_holds},
                         {"betti_gain", w.betti_gain}});
  }
  json doc = json::parse(report_to_json(report));
  doc["sequences"] = seqs;
  doc["dominated_by"] = neg.dominated_by;
  doc["witnesses"] = witnesses;
  if (neg.exterior) {
    doc["exterior"] = gin_json(*neg.exterior);
    doc["exterior_in_set"] = neg.exterior_in_set;
  }
  emit(doc);
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shiftings of simplicial complexes and graded Betti numbers"};
  app.require_subcommand(1);
  Options o;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("complex", o.file, "complex JSON file ('-' for stdin)")->required();
  };

  auto* fvector = app.add_subcommand("fvector", "print the f-vector");
  add_file(fvector);

  auto* betti = app.add_subcommand("betti", "graded Betti numbers as TSV (i, j, beta)");
  add_file(betti);
  betti->add_option("--method", o.method, "hochster or shifted")
      ->check(CLI::IsMember({"hochster", "shifted"}));
  betti->add_option("--field", o.field, "prime for the homology computation");

  auto* shift = app.add_subcommand("shift", "combinatorial shifting");
  add_file(shift);
  auto* pairs_opt = shift->add_option("--pairs", o.pairs, "sequence such as \"1,3 2,5\"");
  auto* auto_opt = shift->add_option("--auto", o.automatic, "sweep or random")
                       ->check(CLI::IsMember({"sweep", "random"}));
  pairs_opt->excludes(auto_opt);
  shift->add_option("--seed", o.seed, "seed for --auto random");
  shift->add_option("--limit", o.limit, "iteration limit (0: default)");

  auto* enumerate = app.add_subcommand("enumerate", "all reachable shifted complexes");
  add_file(enumerate);
  enumerate->add_option("--limit", o.state_limit, "maximum number of visited states");

  auto* gin = app.add_subcommand("gin", "exterior algebraic shifting");
  add_file(gin);
  gin->add_option("--prime", o.prime);
  gin->add_option("--seed", o.seed);
  gin->add_option("--retries", o.retries);
  gin->add_option("--route", o.route, "auto, ideal or dual");

  auto* lex = app.add_subcommand("lex", "lexsegment complex with the same f-vector");
  add_file(lex);

  auto* random = app.add_subcommand("random", "seeded random complex");
  random->add_option("--n", o.n)->check(CLI::Range(1, 20));
  random->add_option("--density", o.density)->check(CLI::Range(0.0, 1.0));
  random->add_option("--seed", o.seed);

  auto* verify = app.add_subcommand("verify", "randomized inequality checks");
  verify->add_option("--n", o.n, "largest vertex count")->check(CLI::Range(1, 20));
  verify->add_option("--n-min", o.n_min, "smallest vertex count")->check(CLI::Range(1, 20));
  verify->add_option("--trials", o.trials);
  verify->add_option("--seed", o.seed);
  verify->add_option("--prime", o.prime);
  verify->add_flag("--no-exterior", o.no_exterior, "skip exterior shifting");
  verify->add_flag("--no-lex", o.no_lex, "skip lexsegment comparisons");
  verify->add_flag("--no-single-steps", o.no_single, "skip single-shift comparisons");

  auto* section4 = app.add_subcommand("section4", "the 15-vertex counterexample");
  section4->alias("counterexample");
  section4->add_option("--phase", o.phase, "build, classify or negatives")
      ->check(CLI::IsMember({"build", "classify", "negatives"}));
  section4->add_option("--prime", o.prime);
  section4->add_option("--seed", o.seed);
  section4->add_option("--retries", o.retries);
  section4->add_option("--route", o.route, "auto, ideal or dual");
  section4->add_option("--limit", o.state_limit, "maximum number of visited states");
  section4->add_flag("--tail-pairs", o.tail_pairs, "only shift pairs inside {12..15}");
  section4->add_flag("--no-exterior", o.no_exterior, "skip exterior shifting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (fvector->parsed()) {
      json f = json::array();
      for (auto v : f_vector(load(o.file)).entries) f.push_back(v);
      emit({{"f_vector", f}});
    } else if (betti->parsed()) {
      const SimplicialComplex c = load(o.file);
      const BettiTable t =
          o.method == "shifted" ? shifted_betti(c) : hochster_betti(c, PrimeField(o.field));
      std::cout << betti_to_tsv(t);
    } else if (shift->parsed()) {
      const SimplicialComplex c = load(o.file);
      ShiftResult result{c, {}};
      if (!o.pairs.empty()) {
        result.sequence = parse_pairs(o.pairs);
        result.complex = replay(c, result.sequence);
      } else {
        const ShiftStrategy strategy = o.automatic == "random" ? ShiftStrategy::random(o.seed)
                                                               : ShiftStrategy::sweep();
        result = shift_to_shifted(c, strategy,
                                  o.limit ? std::optional<std::uint64_t>(o.limit) : std::nullopt);
      }
      emit({{"complex", complex_json(result.complex)},
            {"pairs", pairs_to_string(result.sequence)},
            {"shifted", is_shifted(result.complex)}});
    } else if (enumerate->parsed()) {
      json list = json::array();
      for (const SimplicialComplex& c : enumerate_shifted(load(o.file), o.state_limit)) {
        list.push_back(complex_json(c));
      }
      emit({{"count", list.size()}, {"complexes", list}});
    } else if (gin->parsed()) {
      GinOptions options;
      options.prime = o.prime;
      options.seed = o.seed;
      options.retries = o.retries;
      options.route = parse_route(o.route);
      emit(gin_json(exterior_shift(load(o.file), options)));
    } else if (lex->parsed()) {
      emit(complex_json(delta_lex(load(o.file))));
    } else if (random->parsed()) {
      emit(complex_json(random_complex(o.n, o.density, o.seed)));
    } else if (verify->parsed()) {
      VerifyOptions options;
      options.n_max = o.n;
      options.n_min = std::min(o.n_min, o.n);
      options.trials = o.trials;
      options.seed = o.seed;
      options.prime = o.prime;
      options.exterior = !o.no_exterior;
      options.lex = !o.no_lex;
      options.single_steps = !o.no_single;
      const VerificationReport report = verify_theorems(options);
      std::cout << report_to_json(report, 2) << '\n';
      return report.passed() ? 0 : 1;
    } else if (section4->parsed()) {
      return run_counterexample(o);
    }
  } catch (const std::exception& e) {
    std::cerr << "shiftlab: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
