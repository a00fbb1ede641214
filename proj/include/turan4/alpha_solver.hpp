#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "turan4/four_graph.hpp"

namespace turan4 {

enum class SolveStatus { Exact, LowerBoundOnly };
std::string_view to_string(SolveStatus status) noexcept;

struct AlphaResult {
  std::size_t alpha = 0;
  /// A maximum independent set when Exact, the best one found otherwise.
  std::vector<Vertex> witness;
  SolveStatus status = SolveStatus::Exact;
  std::uint64_t nodes_explored = 0;
};

struct SolveBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> max_seconds;

  static SolveBudget unbounded() { return {}; }
  /// Unbounded up to 48 vertices, 10^8 nodes above; TURAN_BUDGET_NODES
  /// replaces either with a fixed node cap.
  static SolveBudget default_for(std::size_t vertex_count);
};

inline constexpr std::size_t kBruteForceLimit = 24;

/// True iff no edge of h lies inside `subset`. Throws IndexOutOfRange.
bool is_independent(const FourGraph& h, std::span<const Vertex> subset);

/// Exhaustive oracle for n <= 24: scans k-subsets for k = 1, 2, ... and stops
/// at the first k with no independent k-subset (independence is hereditary).
AlphaResult alpha_bruteforce(const FourGraph& h);

/// Branch and bound. Deterministic for a fixed graph under an unbounded
/// budget; budget exhaustion yields LowerBoundOnly with a valid witness.
AlphaResult alpha_exact(const FourGraph& h, const SolveBudget& budget);
inline AlphaResult alpha_exact(const FourGraph& h) {
  return alpha_exact(h, SolveBudget::default_for(h.vertex_count()));
}

struct TauResult {
  std::size_t tau = 0;
  SolveStatus status = SolveStatus::Exact;
};

/// Transversal number v(H) - alpha(H). Under LowerBoundOnly the value is an
/// upper bound on the true transversal number.
TauResult tau(const FourGraph& h, const SolveBudget& budget);

/// tau(H) <= (5 v(H) + 4 e(H)) / 21, checked for a given alpha.
bool satisfies_thomasse_yeo(const FourGraph& h, std::size_t alpha);

/// Greedy maximal independent set following `order`.
std::vector<Vertex> greedy_maximal_independent(const FourGraph& h, std::span<const Vertex> order);
std::vector<Vertex> greedy_maximal_independent(const FourGraph& h, const Incidence& incidence,
                                               std::span<const Vertex> order);

}  // namespace turan4
