#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "halin/color.hpp"
#include "halin/graph.hpp"

namespace halin {

/// Non-decreasing radii s_1..s_k, all >= 1.
class PackingSequence {
 public:
  PackingSequence() = default;
  /// Throws InvalidArgument if the radii are not non-decreasing positive integers.
  explicit PackingSequence(std::vector<unsigned> radii);

  /// "1,2,2,2"
  static PackingSequence parse(std::string_view text);

  const std::vector<unsigned>& radii() const noexcept { return radii_; }
  std::size_t size() const noexcept { return radii_.size(); }
  unsigned operator[](std::size_t i) const { return radii_[i]; }
  bool operator==(const PackingSequence&) const = default;

 private:
  std::vector<unsigned> radii_;
};

/// Class label -> radius.
class ClassAssignment {
 public:
  ClassAssignment() = default;
  explicit ClassAssignment(std::vector<std::pair<std::string, unsigned>> classes);

  /// {1:1, 1p:1, 2a:2, 2b:2, 2c:2}
  static ClassAssignment standard();
  /// "name:radius,name:radius,..."
  static ClassAssignment parse(std::string_view text);
  /// c1..ck carrying the radii of `seq`.
  static ClassAssignment indexed(const PackingSequence& seq);

  const std::vector<std::pair<std::string, unsigned>>& classes() const noexcept { return classes_; }
  /// Index into classes(), or -1.
  int find(std::string_view label) const noexcept;

 private:
  std::vector<std::pair<std::string, unsigned>> classes_;
};

struct Violation {
  std::string label;
  VertexId u;  // u < v
  VertexId v;
  std::uint32_t distance;
  bool operator==(const Violation&) const = default;
};

struct VerificationReport {
  bool ok = true;
  std::vector<Violation> violations;  // sorted by (u, v)
};

/// Checks that every pair of distinct same-label vertices is at distance at
/// least radius + 1, using a breadth-first search bounded at the radius from
/// every vertex. Parallel over vertices (OpenMP when available).
/// Throws PartialColoring or UnmappedColor.
VerificationReport verify_packing(const HalinGraph& g, const LabelColoring& labels,
                                  const ClassAssignment& classes);

/// Single-threaded reference for verify_packing; same result.
VerificationReport verify_packing_serial(const HalinGraph& g, const LabelColoring& labels,
                                         const ClassAssignment& classes);

/// Convenience overload for algorithm output with the standard classes.
VerificationReport verify_packing(const HalinGraph& g, const Coloring& coloring);

/// True iff the multiset of radii equals `expected`.
bool verify_sequence_form(const ClassAssignment& classes, const PackingSequence& expected);

}  // namespace halin
