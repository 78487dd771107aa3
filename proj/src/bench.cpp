#include "halin/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <sstream>

#include "halin/colorer.hpp"
#include "halin/error.hpp"
#include "halin/generator.hpp"
#include "halin/rng.hpp"
#include "halin/verifier.hpp"
#include "text_lines.hpp"

namespace halin {

namespace {

using Clock = std::chrono::steady_clock;

double micros(Clock::duration d) { return std::chrono::duration<double, std::micro>(d).count(); }

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 == 1 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

struct StageSample {
  double total = 0, tree = 0, recolor = 0, conflicts = 0;
};

StageSample time_pipeline(const HalinGraph& g, double min_sample_us, Coloring& last) {
  StageSample sum;
  std::size_t runs = 0;
  const VertexId root = g.lowest_internal_vertex();
  const auto begin = Clock::now();
  do {
    const auto t0 = Clock::now();
    Coloring tree = two_color_tree(g, root);
    const auto t1 = Clock::now();
    auto [view, recolored] = recoloring_dispatch(g, tree);
    const auto t2 = Clock::now();
    last = conflicts_resolving(g, view, std::move(recolored));
    const auto t3 = Clock::now();
    sum.tree += micros(t1 - t0);
    sum.recolor += micros(t2 - t1);
    sum.conflicts += micros(t3 - t2);
    sum.total += micros(t3 - t0);
    ++runs;
  } while (micros(Clock::now() - begin) < min_sample_us);
  const double k = static_cast<double>(runs);
  return {sum.total / k, sum.tree / k, sum.recolor / k, sum.conflicts / k};
}

}  // namespace

std::vector<BenchRecord> run_scaling(const std::vector<std::size_t>& sizes, std::size_t repeats,
                                     std::uint64_t seed, const ScalingOptions& options) {
  if (repeats < 3) throw HalinError(Errc::InvalidArgument, "repeats must be at least 3");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 4) throw HalinError(Errc::InvalidArgument, "sizes must be at least 4");
    if (i > 0 && sizes[i] <= sizes[i - 1]) {
      throw HalinError(Errc::InvalidArgument, "sizes must be strictly ascending");
    }
  }

  SplitMix64 seeds(seed);
  std::vector<BenchRecord> records;
  for (std::size_t size : sizes) {
    GeneratorConfig cfg;
    cfg.seed = seeds.next();
    cfg.max_degree = 5;
    // Leaf expansion adds two leaves per internal vertex on average.
    cfg.target_leaves = std::max<std::size_t>(3, size * 2 / 3);
    const HalinGraph g = gen_random_halin(cfg);

    std::vector<double> total, tree, recolor, conflicts;
    Coloring coloring;
    time_pipeline(g, 0, coloring);  // warm-up: first-touch page faults, cold caches
    for (std::size_t r = 0; r < repeats; ++r) {
      StageSample s = time_pipeline(g, options.min_sample_us, coloring);
      total.push_back(s.total);
      tree.push_back(s.tree);
      recolor.push_back(s.recolor);
      conflicts.push_back(s.conflicts);
    }

    const auto v0 = Clock::now();
    const bool ok = verify_packing(g, coloring).ok;
    const double verify_us = micros(Clock::now() - v0);
    if (!ok) {
      throw HalinError(Errc::InvariantViolated,
                       "coloring failed verification for seed " + std::to_string(cfg.seed));
    }

    BenchRecord rec;
    rec.n_total = g.vertex_count();
    rec.seed = cfg.seed;
    rec.total_us = median(total);
    rec.tree_us = median(tree);
    rec.recolor_us = median(recolor);
    rec.conflicts_us = median(conflicts);
    rec.verify_us = verify_us;
    records.push_back(rec);
  }
  return records;
}

namespace {

void put_double(std::ostringstream& out, double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  out.write(buf, end - buf);
}

double get_double(std::string_view tok, std::size_t line) {
  double x = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc{} || end != tok.data() + tok.size() || tok.empty()) {
    detail::parse_fail(line, "bad number '" + std::string(tok) + "'");
  }
  return x;
}

constexpr std::string_view kCsvHeader = "n,seed,total_us,tree_us,recolor_us,conflicts_us,verify_us";

}  // namespace

std::string emit_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.n_total << ',' << r.seed;
    for (double x : {r.total_us, r.tree_us, r.recolor_us, r.conflicts_us, r.verify_us}) {
      out << ',';
      put_double(out, x);
    }
    out << '\n';
  }
  return out.str();
}

std::vector<BenchRecord> parse_csv(std::string_view text) {
  std::vector<BenchRecord> records;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    ++line_no;
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kCsvHeader) detail::parse_fail(line_no, "unexpected CSV header");
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> fields;
    while (true) {
      std::size_t comma = line.find(',');
      fields.push_back(line.substr(0, comma));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (fields.size() != 7) detail::parse_fail(line_no, "expected 7 fields");
    BenchRecord r;
    r.n_total = detail::parse_uint(fields[0], line_no);
    r.seed = detail::parse_uint(fields[1], line_no);
    r.total_us = get_double(fields[2], line_no);
    r.tree_us = get_double(fields[3], line_no);
    r.recolor_us = get_double(fields[4], line_no);
    r.conflicts_us = get_double(fields[5], line_no);
    r.verify_us = get_double(fields[6], line_no);
    records.push_back(r);
  }
  if (!header_seen) throw HalinError(Errc::ParseError, "missing CSV header");
  return records;
}

double linear_fit_r2(const std::vector<BenchRecord>& records) {
  const double k = static_cast<double>(records.size());
  if (records.size() < 2) return 0;
  double mx = 0, my = 0;
  for (const auto& r : records) {
    mx += static_cast<double>(r.n_total);
    my += r.total_us;
  }
  mx /= k;
  my /= k;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& r : records) {
    const double dx = static_cast<double>(r.n_total) - mx;
    const double dy = r.total_us - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) return 0;
  return sxy * sxy / (sxx * syy);
}

std::vector<double> successive_ratios(const std::vector<BenchRecord>& records) {
  std::vector<double> ratios;
  for (std::size_t i = 1; i < records.size(); ++i) {
    ratios.push_back(records[i].total_us / records[i - 1].total_us);
  }
  return ratios;
}

}  // namespace halin
