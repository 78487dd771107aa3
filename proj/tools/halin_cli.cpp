// halin: generate, color, verify and benchmark (1,1,2,2,2)-packing colorings
// of Halin graphs.
//
// Exit codes, uniform across subcommands:
//   0  success / verified / feasible
//   1  semantic negative (violations, infeasible, Δ > 5)
//   2  usage, parse or input errors

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "halin/bench.hpp"
#include "halin/colorer.hpp"
#include "halin/error.hpp"
#include "halin/generator.hpp"
#include "halin/graph_io.hpp"
#include "halin/oracle.hpp"
#include "halin/verifier.hpp"

namespace {

using namespace halin;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

struct GenerateArgs {
  std::size_t leaves = 16;
  unsigned max_degree = 5;
  std::uint64_t seed = 1;
  std::string family = "random";
  std::string output = "-";
};

int cmd_generate(const GenerateArgs& a) {
  HalinGraph g = [&] {
    if (a.family == "random") return gen_random_halin({a.leaves, a.max_degree, a.seed});
    if (a.family == "wheel") return gen_wheel(a.leaves);
    if (a.family == "cubic_caterpillar") {
      if (a.leaves < 4) throw UsageError("cubic_caterpillar needs --leaves >= 4");
      return gen_cubic_caterpillar(a.leaves - 2);
    }
    throw UsageError("unknown family '" + a.family + "' (random, wheel, cubic_caterpillar)");
  }();
  emit(a.output, format_graph(g));
  std::cerr << "n_total=" << g.vertex_count() << " max_degree=" << g.max_degree() << '\n';
  return kOk;
}

struct ColorArgs {
  std::string input;
  std::string output = "-";
  bool trace = false;
};

int cmd_color(const ColorArgs& a) {
  const HalinGraph g = parse_graph(slurp(a.input));
  PipelineResult result;
  try {
    result = packing_coloring_detailed(g);
  } catch (const HalinError& e) {
    if (e.code() != Errc::MaxDegreeExceeded) throw;
    std::cerr << "error: Δ = " << g.max_degree() << " exceeds 5; " << e.what() << '\n';
    return kNegative;
  }
  if (a.trace) {
    for (const auto& line : format_trace(result.trace)) std::cerr << line << '\n';
  }
  if (!result.lemmas.holds()) {
    throw HalinError(Errc::InvariantViolated, "structural check failed on this input");
  }
  emit(a.output, format_coloring(to_labels(result.coloring)));
  return kOk;
}

struct VerifyArgs {
  std::string graph;
  std::string coloring;
  std::string classes = "1:1,1p:1,2a:2,2b:2,2c:2";
};

int cmd_verify(const VerifyArgs& a) {
  const HalinGraph g = parse_graph(slurp(a.graph));
  const LabelColoring labels = parse_coloring(slurp(a.coloring), g.vertex_count());
  const ClassAssignment classes = ClassAssignment::parse(a.classes);
  const VerificationReport report = verify_packing(g, labels, classes);
  for (const auto& v : report.violations) {
    std::cout << "VIOLATION " << v.label << ' ' << v.u << ' ' << v.v << ' ' << v.distance << '\n';
  }
  std::cout << (report.ok ? "OK" : "FAILED") << " vertices=" << g.vertex_count()
            << " violations=" << report.violations.size() << '\n';
  return report.ok ? kOk : kNegative;
}

struct OracleArgs {
  std::string input;
  std::string sequence;
  std::string witness;
  std::size_t max_vertices = kDefaultOracleLimit;
};

int cmd_oracle(const OracleArgs& a) {
  const HalinGraph g = parse_graph(slurp(a.input));
  const PackingSequence seq = PackingSequence::parse(a.sequence);
  const OracleResult result = s_packing_colorable(g, seq, a.max_vertices);
  std::cout << (result.feasible ? "FEASIBLE" : "INFEASIBLE") << '\n';
  if (result.feasible && !a.witness.empty()) {
    emit(a.witness, format_coloring(witness_labels(*result.witness)));
  }
  return result.feasible ? kOk : kNegative;
}

struct BenchArgs {
  std::vector<std::size_t> sizes = kDefaultBenchSizes;
  std::size_t repeats = 5;
  std::uint64_t seed = 1;
  std::string output = "-";
  double min_sample_us = ScalingOptions{}.min_sample_us;
};

int cmd_bench(const BenchArgs& a) {
  if (a.repeats < 3) throw UsageError("--repeats must be at least 3");
  const auto records = run_scaling(a.sizes, a.repeats, a.seed, {a.min_sample_us});
  emit(a.output, emit_csv(records));
  std::cerr << "r2=" << linear_fit_r2(records) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Packing colorings of Halin graphs with maximum degree at most 5"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a Halin graph");
  generate->add_option("--leaves", gen.leaves, "Number of cycle vertices (wheel: k)");
  generate->add_option("--max-degree", gen.max_degree, "Degree cap for random graphs");
  generate->add_option("--seed", gen.seed, "Generator seed");
  generate->add_option("--family", gen.family, "random | wheel | cubic_caterpillar");
  generate->add_option("-o,--output", gen.output, "Output path ('-' for stdout)");

  ColorArgs col;
  auto* color = app.add_subcommand("color", "Compute a (1,1,2,2,2)-packing coloring");
  color->add_option("-i,--input", col.input, "Graph file ('-' for stdin)")->required();
  color->add_option("-o,--output", col.output, "Coloring path ('-' for stdout)");
  color->add_flag("--trace", col.trace, "Print pipeline stages to stderr");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check a coloring against packing radii");
  verify->add_option("-i,--input", ver.graph, "Graph file")->required();
  verify->add_option("-c,--coloring", ver.coloring, "Coloring file")->required();
  verify->add_option("--classes", ver.classes, "name:radius,... (default 1:1,1p:1,2a:2,2b:2,2c:2)");

  OracleArgs orc;
  auto* oracle = app.add_subcommand("oracle", "Decide S-packing colorability exactly");
  oracle->add_option("-i,--input", orc.input, "Graph file")->required();
  oracle->add_option("--sequence", orc.sequence, "Radii, e.g. 1,2,2,2")->required();
  oracle->add_option("--witness", orc.witness, "Write a witness coloring (classes c1..ck)");
  oracle->add_option("--max-vertices", orc.max_vertices, "Search size limit");

  BenchArgs ben;
  auto* bench = app.add_subcommand("bench", "Time the coloring pipeline across sizes");
  bench->add_option("--sizes", ben.sizes, "Vertex counts, ascending")->delimiter(',');
  bench->add_option("--repeats", ben.repeats, "Timed repeats per size (>= 3)");
  bench->add_option("--seed", ben.seed, "Seed for instance generation");
  bench->add_option("-o,--output", ben.output, "CSV path ('-' for stdout)");
  bench->add_option("--min-sample-us", ben.min_sample_us, "Minimum wall time per timed sample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*color) return cmd_color(col);
    if (*verify) return cmd_verify(ver);
    if (*oracle) return cmd_oracle(orc);
    if (*bench) return cmd_bench(ben);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const HalinError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::InvariantViolated ? kNegative : kUsage;
  }
  return kUsage;
}
