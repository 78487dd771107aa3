#include "halin/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "halin/colorer.hpp"
#include "halin/error.hpp"

namespace halin {

std::uint32_t DistanceMatrix::max_entry() const {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

namespace {

void bfs_row(const HalinGraph& g, VertexId source, DistanceMatrix& d, std::vector<VertexId>& queue,
             std::vector<char>& seen) {
  std::fill(seen.begin(), seen.end(), 0);
  queue.clear();
  queue.push_back(source);
  seen[source] = 1;
  d.at(source, source) = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId x = queue[head];
    g.for_each_neighbor(x, [&](VertexId y) {
      if (seen[y]) return;
      seen[y] = 1;
      d.at(source, y) = d(source, x) + 1;
      queue.push_back(y);
    });
  }
}

}  // namespace

DistanceMatrix all_pairs_distances_serial(const HalinGraph& g) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix d(n);
  std::vector<VertexId> queue;
  std::vector<char> seen(n);
  for (VertexId s = 0; s < n; ++s) bfs_row(g, s, d, queue, seen);
  return d;
}

DistanceMatrix all_pairs_distances(const HalinGraph& g) {
#ifdef HALIN_HAVE_OPENMP
  const std::size_t n = g.vertex_count();
  DistanceMatrix d(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel
  {
    std::vector<VertexId> queue;
    std::vector<char> seen(n);
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < count; ++s) bfs_row(g, static_cast<VertexId>(s), d, queue, seen);
  }
  return d;
#else
  return all_pairs_distances_serial(g);
#endif
}

namespace {

class Backtracker {
 public:
  Backtracker(const DistanceMatrix& d, const PackingSequence& seq) : d_(d), seq_(seq) {
    const std::size_t n = d.size();
    std::vector<std::size_t> degree(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) degree[u] += d(u, v) == 1;
    }
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    members_.resize(seq.size());
    assigned_.assign(n, 0);
  }

  bool run() { return place(0); }
  const std::vector<unsigned>& assignment() const { return assigned_; }

 private:
  bool fits(std::size_t v, std::size_t cls) const {
    const unsigned need = seq_[cls] + 1;
    for (std::size_t u : members_[cls]) {
      if (d_(u, v) < need) return false;
    }
    return true;
  }

  bool place(std::size_t pos) {
    if (pos == order_.size()) return true;
    const std::size_t v = order_[pos];
    for (std::size_t cls = 0; cls < seq_.size(); ++cls) {
      // Classes of equal radius are interchangeable: open them in order.
      if (cls > 0 && seq_[cls] == seq_[cls - 1] && members_[cls - 1].empty()) continue;
      if (!fits(v, cls)) continue;
      members_[cls].push_back(v);
      assigned_[v] = static_cast<unsigned>(cls + 1);
      if (place(pos + 1)) return true;
      members_[cls].pop_back();
      assigned_[v] = 0;
    }
    return false;
  }

  const DistanceMatrix& d_;
  const PackingSequence& seq_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<unsigned> assigned_;
};

void guard(std::size_t n, std::size_t max_vertices) {
  if (n > max_vertices) {
    throw HalinError(Errc::TooLarge, std::to_string(n) + " vertices exceeds the oracle limit of " +
                                         std::to_string(max_vertices));
  }
}

}  // namespace

OracleResult s_packing_colorable(const DistanceMatrix& d, const PackingSequence& seq,
                                 std::size_t max_vertices) {
  guard(d.size(), max_vertices);
  OracleResult result;
  if (d.size() == 0) {
    result.feasible = true;
    result.witness.emplace();
    return result;
  }
  Backtracker search(d, seq);
  result.feasible = search.run();
  if (result.feasible) result.witness = search.assignment();
  return result;
}

OracleResult s_packing_colorable(const HalinGraph& g, const PackingSequence& seq,
                                 std::size_t max_vertices) {
  guard(g.vertex_count(), max_vertices);
  return s_packing_colorable(all_pairs_distances(g), seq, max_vertices);
}

LabelColoring witness_labels(const std::vector<unsigned>& witness) {
  LabelColoring labels(witness.size());
  for (std::size_t v = 0; v < witness.size(); ++v) labels[v] = "c" + std::to_string(witness[v]);
  return labels;
}

LabelColoring witness_named(const std::vector<unsigned>& witness, const PackingSequence& seq) {
  if (seq != PackingSequence({1, 1, 2, 2, 2})) return witness_labels(witness);
  static constexpr Color kByIndex[] = {Color::C1, Color::C1P, Color::C2A, Color::C2B, Color::C2C};
  LabelColoring labels(witness.size());
  for (std::size_t v = 0; v < witness.size(); ++v) labels[v] = std::string(token(kByIndex[witness[v] - 1]));
  return labels;
}

bool cross_check(const HalinGraph& g, std::size_t max_vertices) {
  guard(g.vertex_count(), max_vertices);
  const bool algorithm_ok = verify_packing(g, packing_coloring(g)).ok;
  const bool oracle_ok = s_packing_colorable(g, PackingSequence({1, 1, 2, 2, 2}), max_vertices).feasible;
  return algorithm_ok && oracle_ok;
}

}  // namespace halin
