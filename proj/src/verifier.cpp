#include "halin/verifier.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "halin/error.hpp"

#ifdef HALIN_HAVE_OPENMP
#include <omp.h>
#endif

namespace halin {

PackingSequence::PackingSequence(std::vector<unsigned> radii) : radii_(std::move(radii)) {
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (radii_[i] == 0) throw HalinError(Errc::InvalidArgument, "radii must be positive");
    if (i > 0 && radii_[i] < radii_[i - 1]) {
      throw HalinError(Errc::InvalidArgument, "radii must be non-decreasing");
    }
  }
}

namespace {

unsigned parse_radius(std::string_view tok) {
  unsigned value = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || end != tok.data() + tok.size() || tok.empty()) {
    throw HalinError(Errc::InvalidArgument, "bad radius '" + std::string(tok) + "'");
  }
  return value;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  while (true) {
    std::size_t comma = text.find(',');
    parts.push_back(text.substr(0, comma));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return parts;
}

}  // namespace

PackingSequence PackingSequence::parse(std::string_view text) {
  std::vector<unsigned> radii;
  for (auto part : split_commas(text)) radii.push_back(parse_radius(part));
  return PackingSequence(std::move(radii));
}

ClassAssignment::ClassAssignment(std::vector<std::pair<std::string, unsigned>> classes)
    : classes_(std::move(classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].first.empty()) throw HalinError(Errc::InvalidArgument, "empty class name");
    if (classes_[i].second == 0) throw HalinError(Errc::InvalidArgument, "radius must be positive");
    for (std::size_t k = 0; k < i; ++k) {
      if (classes_[k].first == classes_[i].first) {
        throw HalinError(Errc::InvalidArgument, "duplicate class '" + classes_[i].first + "'");
      }
    }
  }
}

ClassAssignment ClassAssignment::standard() {
  return ClassAssignment({{"1", 1}, {"1p", 1}, {"2a", 2}, {"2b", 2}, {"2c", 2}});
}

ClassAssignment ClassAssignment::parse(std::string_view text) {
  std::vector<std::pair<std::string, unsigned>> classes;
  for (auto part : split_commas(text)) {
    std::size_t colon = part.find(':');
    if (colon == std::string_view::npos) {
      throw HalinError(Errc::InvalidArgument, "expected name:radius, got '" + std::string(part) + "'");
    }
    classes.emplace_back(std::string(part.substr(0, colon)), parse_radius(part.substr(colon + 1)));
  }
  return ClassAssignment(std::move(classes));
}

ClassAssignment ClassAssignment::indexed(const PackingSequence& seq) {
  std::vector<std::pair<std::string, unsigned>> classes;
  for (std::size_t i = 0; i < seq.size(); ++i) classes.emplace_back("c" + std::to_string(i + 1), seq[i]);
  return ClassAssignment(std::move(classes));
}

int ClassAssignment::find(std::string_view label) const noexcept {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].first == label) return static_cast<int>(i);
  }
  return -1;
}

namespace {

std::vector<int> resolve_classes(const HalinGraph& g, const LabelColoring& labels,
                                 const ClassAssignment& classes) {
  if (labels.size() != g.vertex_count()) {
    throw HalinError(Errc::PartialColoring, "coloring covers " + std::to_string(labels.size()) +
                                                " of " + std::to_string(g.vertex_count()) +
                                                " vertices");
  }
  std::vector<int> class_of(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (!labels[v]) {
      throw HalinError(Errc::PartialColoring, "vertex " + std::to_string(v) + " is uncolored");
    }
    class_of[v] = classes.find(*labels[v]);
    if (class_of[v] < 0) {
      throw HalinError(Errc::UnmappedColor, "color '" + *labels[v] + "' on vertex " +
                                                std::to_string(v) + " has no radius");
    }
  }
  return class_of;
}

// Scratch space for one bounded search; `stamp` avoids clearing `seen`.
struct Scratch {
  std::vector<std::uint32_t> seen;
  std::vector<std::uint32_t> dist;
  std::vector<VertexId> queue;
  std::uint32_t stamp = 0;

  explicit Scratch(std::size_t n) : seen(n, 0), dist(n, 0) {}
};

// Same-class vertices u > v within distance radius(v) of v.
void scan_from(const HalinGraph& g, const std::vector<int>& class_of,
               const ClassAssignment& classes, VertexId v, Scratch& s,
               std::vector<Violation>& out) {
  const int cls = class_of[v];
  const unsigned radius = classes.classes()[cls].second;
  ++s.stamp;
  s.queue.clear();
  s.queue.push_back(v);
  s.seen[v] = s.stamp;
  s.dist[v] = 0;
  for (std::size_t head = 0; head < s.queue.size(); ++head) {
    VertexId x = s.queue[head];
    if (s.dist[x] == radius) continue;
    g.for_each_neighbor(x, [&](VertexId y) {
      if (s.seen[y] == s.stamp) return;
      s.seen[y] = s.stamp;
      s.dist[y] = s.dist[x] + 1;
      s.queue.push_back(y);
      if (y > v && class_of[y] == cls) out.push_back({classes.classes()[cls].first, v, y, s.dist[y]});
    });
  }
}

VerificationReport finish(std::vector<Violation> violations) {
  std::sort(violations.begin(), violations.end(),
            [](const Violation& a, const Violation& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  VerificationReport report;
  report.ok = violations.empty();
  report.violations = std::move(violations);
  return report;
}

}  // namespace

VerificationReport verify_packing_serial(const HalinGraph& g, const LabelColoring& labels,
                                         const ClassAssignment& classes) {
  const std::vector<int> class_of = resolve_classes(g, labels, classes);
  Scratch scratch(g.vertex_count());
  std::vector<Violation> violations;
  for (VertexId v = 0; v < g.vertex_count(); ++v) scan_from(g, class_of, classes, v, scratch, violations);
  return finish(std::move(violations));
}

VerificationReport verify_packing(const HalinGraph& g, const LabelColoring& labels,
                                  const ClassAssignment& classes) {
#ifdef HALIN_HAVE_OPENMP
  const std::vector<int> class_of = resolve_classes(g, labels, classes);
  const auto n_total = static_cast<std::int64_t>(g.vertex_count());
  std::vector<Violation> violations;
#pragma omp parallel
  {
    Scratch scratch(g.vertex_count());
    std::vector<Violation> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t v = 0; v < n_total; ++v) {
      scan_from(g, class_of, classes, static_cast<VertexId>(v), scratch, local);
    }
#pragma omp critical
    violations.insert(violations.end(), local.begin(), local.end());
  }
  return finish(std::move(violations));
#else
  return verify_packing_serial(g, labels, classes);
#endif
}

VerificationReport verify_packing(const HalinGraph& g, const Coloring& coloring) {
  return verify_packing(g, to_labels(coloring), ClassAssignment::standard());
}

bool verify_sequence_form(const ClassAssignment& classes, const PackingSequence& expected) {
  std::vector<unsigned> radii;
  for (const auto& [name, r] : classes.classes()) radii.push_back(r);
  std::sort(radii.begin(), radii.end());
  return radii == expected.radii();
}

}  // namespace halin
