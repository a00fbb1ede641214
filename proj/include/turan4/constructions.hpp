#pragma once

// Generators for the extremal 4-graph families. Every generator returns the
// labeled graph together with a per-family census; builds assert that the
// families they define as disjoint really are.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "turan4/alpha_solver.hpp"
#include "turan4/four_graph.hpp"
#include "turan4/rational.hpp"

namespace turan4 {

/// Named family sizes of one construction, in a fixed order.
struct Census {
  std::vector<std::pair<std::string, BigInt>> families;

  void add(std::string name, BigInt count) { families.emplace_back(std::move(name), std::move(count)); }
  BigInt get(std::string_view name) const;
  BigInt total() const;
  nlohmann::json to_json() const;
};

struct Construction {
  LabeledFourGraph graph;
  Census census;
};

// ---------------------------------------------------------------- parity --

/// Two parts X (n vertices) and Y (m vertices); a mixed 2+2 quadruple is an
/// edge when the 2x2 minor of `matrix` on its rows/columns has even sum.
struct ParitySpec {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::vector<std::uint8_t>> matrix;  // n rows of m entries

  static ParitySpec zero(std::size_t n, std::size_t m);
  static ParitySpec random(std::size_t n, std::size_t m, std::uint64_t seed);
};

Construction parity_construction(const ParitySpec& spec);
Census parity_counts(const ParitySpec& spec);

// ------------------------------------------------------ small T(n,6,4) --

/// Vertices are the 10 edges of K5; edges are 4-arm stars and 4-cycles.
Construction k5_line_construction();

/// Two copies of a 1-factorised K6 joined along equal colours, plus three
/// quadruples per copy covering each vertex twice. Each quadruple system is
/// the complement of a perfect matching; a variant is a pair of matchings
/// for which the graph has independence number 5.
struct TwoK6Variant {
  std::array<std::pair<int, int>, 3> matching_a;
  std::array<std::pair<int, int>, 3> matching_b;
};
const std::vector<TwoK6Variant>& two_k6_variants();
Construction two_k6_construction(std::size_t variant);
/// Just the 45 colour-matched cross edges.
FourGraph two_k6_cross_edges();

/// Vertices A ∪ B, each a copy of Z2^2 ⊕ Z2 labelled (side, x, a).
Construction z2cube_construction();

/// Complements of the Fano lines: 7 vertices, 7 edges, independence number 4.
Construction fano_complement();

// ------------------------------------------------------------- expansion --

struct ExpansionSpec {
  FourGraph host;
  std::vector<std::vector<Vertex>> crit0;
  std::vector<std::vector<Vertex>> crit1;
  std::vector<std::uint8_t> d;
  std::vector<std::size_t> sizes;
};

struct ExpansionValidation {
  std::size_t host_alpha = 0;
  /// Per host vertex: alpha(H - (I0 ∪ I1)).
  std::vector<std::size_t> union_alpha;
};

/// Solver-checks the critical sets and d flags. Throws InvalidCriticalSet or
/// DFlagUnjustified.
ExpansionValidation validate_expansion(const ExpansionSpec& spec);

/// Builds the expansion; `validate` runs validate_expansion first.
Construction expansion_build(const ExpansionSpec& spec, bool validate = true);
/// Closed-form family sizes (no materialisation).
Census expansion_counts(const ExpansionSpec& spec);

/// The 8-vertex, 14-edge host with independence number 4.
FourGraph example1_host();
/// The 8-vertex host, I0/I1 the two lexicographically first edges avoiding w,
/// all parts of size `part_size`, d ≡ 1.
ExpansionSpec example1_expansion(std::size_t part_size);
/// The asymmetric critical-set assignment on the 8-vertex host.
ExpansionSpec example2_expansion(std::size_t part_size);

// -------------------------------------------------------------- circular --

struct CircularPart {
  FourGraph graph;
  std::vector<Vertex> first_side;  // V', the rest is V''
  std::size_t alpha = 0;           // alpha(G_i) = alpha + 1
};

struct CircularSpec {
  std::vector<CircularPart> parts;
};

/// Throws PartitionMismatch / HypothesisViolated. The solver checks
/// alpha(G_i) = alpha_i + 1 and alpha(G_i ∩ V_i') <= alpha_i.
void validate_circular(const CircularSpec& spec);
Construction circular_build(const CircularSpec& spec, bool validate = true);
/// Per-index family sizes from the closed-form count.
Census circular_counts(const CircularSpec& spec);
/// Vertex indices of block W_i in circular_build's numbering.
std::vector<Vertex> circular_block(const CircularSpec& spec, std::size_t i);

/// Zero-sum quadruples of Z2^3 (vertex v encodes (v>>2, v>>1 & 1, v & 1)).
FourGraph zero_sum_cube();
/// m copies of zero_sum_cube split on the first coordinate, alpha_i = 3.
CircularSpec zero_sum_circular_spec(std::size_t m);

// --------------------------------------------------------------- rainbow --

inline constexpr unsigned kRainbowMaxBuildDepth = 3;

struct RainbowCounts {
  BigInt e0, e1, e2, e4;
  BigInt rainbow_triples;
  BigInt total() const { return e0 + e1 + e2 + e4; }
};

/// Exact family sizes for any depth; rainbow triples via the positional
/// recursion R_k = 4 * 64^(k-1) + 4 R_(k-1).
RainbowCounts rainbow_counts(unsigned k);
/// H_k on 4 + 4^k vertices. V' vertices are labelled (0, a), V^k vertices
/// (1, code) with code the base-4 digits, first coordinate most significant.
/// Pair map p(T) for a non-rainbow triple with apex x and y1 = z1.
/// Covering puts {y1, y1 + c(y,z)} on triples whose apex lies on the other
/// side of (X', Y') from y1 and the complementary pair otherwise; this is the
/// assignment the five-set case analysis needs. Swapped uses the opposite
/// assignment and leaves a 5-vertex independent set.
enum class RainbowPairRule { Covering, Swapped };
Construction rainbow_build(unsigned k, RainbowPairRule rule = RainbowPairRule::Covering);
/// C_m[H_k, ..., H_k] split as V' | V^k.
CircularSpec rainbow_circular_spec(unsigned k, std::size_t m);

// ------------------------------------------------------------------- H_m --

struct HmSpec {
  std::size_t m = 4;
  std::vector<int> b_set{0};  // λ distinct elements of Z2^2

  unsigned lambda() const { return static_cast<unsigned>(b_set.size()); }
  static HmSpec first_lambda(std::size_t m, unsigned lambda);
};

void validate_hm(const HmSpec& spec);
/// Vertices (i, x, y, z) with z ∈ B; families type1, type2, type3, type4a,
/// type4b, type4c.
Construction hm_build(const HmSpec& spec);
/// (m/3)(5168λ^4 − 1536λ^3 + 112λ^2 − 12λ).
BigInt hm_edge_formula(std::size_t m, unsigned lambda);
/// The six per-type multiplicities, times m.
Census hm_type_formula(std::size_t m, unsigned lambda);

struct HmInequalitySlack {
  long long per_level = 0;  // min over levels i of rhs - lhs
  long long summed = 0;     // the per-level inequality summed over i
  long long overall = 0;    // 2m + Σχ - |A|
};

/// Evaluates the three level-set inequalities for an independent set given
/// by vertex indices of hm_build(spec).
HmInequalitySlack hm_evaluate(const HmSpec& spec, std::span<const Vertex> independent_set);

struct HmInvariantReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  std::size_t max_set_size = 0;
  HmInequalitySlack min_slack;
  HmInequalitySlack max_slack;
  std::uint64_t seed = 0;
};

/// Random maximal independent sets (greedy over seeded random orders), each
/// checked against the three inequalities. Throws InvariantViolated when
/// `throw_on_violation` and any sample fails.
HmInvariantReport hm_invariant_suite(const HmSpec& spec, std::size_t samples, std::uint64_t seed,
                                     bool throw_on_violation = false);

// ----------------------------------------------------------- dispatching --

/// Generator names accepted by the command line.
const std::vector<std::string>& construction_names();

}  // namespace turan4
