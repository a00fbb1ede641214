#pragma once

// Exact Turán density bounds for 4-graphs. Finite graphs only ever feed the
// integer table of T(n,k,4) values; density bounds come from limit formulas.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "turan4/alpha_solver.hpp"
#include "turan4/rational.hpp"

namespace turan4 {

enum class BoundKind { Upper, Lower };
std::string_view to_string(BoundKind kind) noexcept;

struct Provenance {
  std::string source;  // construction or citation
  std::string params;
  bool reproduced = true;  // false for external constants
};

/// One row of a density report. `k` is the independence threshold alpha+1;
/// a record with `limit` set bounds t_*(4) itself and has no t value.
struct BoundRecord {
  unsigned k = 0;
  bool limit = false;
  BoundKind kind = BoundKind::Upper;
  std::optional<Rational> t_value;
  Rational t_star;
  Provenance provenance;

  /// t_star with 6 fractional digits, rounded outward.
  std::string decimal(int digits = 6) const;
  nlohmann::json to_json() const;
};

/// (k-1)^3 t / 24.
Rational rescale(unsigned k, const Rational& t);
BoundRecord record_from_t(unsigned k, BoundKind kind, Rational t, Provenance p);
BoundRecord record_from_t_star(unsigned k, BoundKind kind, Rational t_star, Provenance p);

// ------------------------------------------------------ T(n,k,4) values --

struct TableEntry {
  std::optional<BigInt> lower;
  std::optional<BigInt> upper;
  std::string lower_source;
  std::string upper_source;
};

class TuranValueTable {
public:
  /// Keeps the smaller upper bound. Throws TableConflict if it drops below
  /// the lower bound.
  void add_upper(std::size_t n, unsigned k, const BigInt& value, const std::string& source);
  /// Keeps the larger lower bound. Throws TableConflict.
  void add_lower(std::size_t n, unsigned k, const BigInt& value, const std::string& source);

  const TableEntry* find(std::size_t n, unsigned k) const;
  const std::map<std::pair<std::size_t, unsigned>, TableEntry>& entries() const { return entries_; }

  /// Exact entries (lower = upper) whose ratio T/C(n,4) decreases in n.
  std::vector<std::string> monotonicity_violations() const;
  nlohmann::json to_json() const;

private:
  std::map<std::pair<std::size_t, unsigned>, TableEntry> entries_;
};

/// Records T(v, alpha+1, 4) <= e(h) for a solver-certified alpha.
/// Throws UncertifiedAlpha unless the result is Exact and its witness is a
/// valid independent set of h of that size.
const TableEntry& density_from_graph(TuranValueTable& table, const FourGraph& h,
                                     const AlphaResult& certificate, const std::string& source);

/// Inserts the lower bound ceil(n T(n-1,k,4) / (n-4)) at (n, k). Throws
/// MissingBaseEntry.
BigInt lift_lower(TuranValueTable& table, std::size_t n, unsigned k);

/// t(k,4) >= T(n,k,4) / C(n,4), valid because the ratio increases with n.
BoundRecord density_lower_from_table(const TuranValueTable& table, std::size_t n, unsigned k);

// ---------------------------------------------------- external constants --

struct ExternalDensity {
  unsigned k = 0;
  Rational t_star_upper;
  std::string cite;
};

struct ExternalConstants {
  int version = 0;
  TuranValueTable table;
  std::vector<ExternalDensity> densities;
};

std::filesystem::path default_constants_path();
ExternalConstants load_external_constants(const std::filesystem::path& path = default_constants_path());
ExternalConstants parse_external_constants(const nlohmann::json& j);

// ------------------------------------------------------- density bounds --

/// t(5,4) <= 5/16 from the parity construction with a random matrix.
BoundRecord parity_limit_bound();

/// t(alpha+2, 4) <= (24 e + 3n(n-1) + 4c + n - (11/16) d) / n^4.
BoundRecord expansion_density_bound(std::size_t n, const BigInt& e, std::size_t alpha,
                                    const BigInt& c, const BigInt& d);

/// Expansion of the m-fold circular zero-sum construction, k = 3m+2, m >= 3.
BoundRecord circular_expansion_bound(std::size_t m);
/// The same bound assembled from the generic expansion formula.
BoundRecord circular_expansion_bound_via_expansion(std::size_t m);

/// t(3m+1, 4) <= (443/640) m^-3, m >= 2.
BoundRecord rainbow_limit_bound(std::size_t m);
/// e(H_k^m) / C(m 4^(k+1), 4) from exact family sizes.
Rational rainbow_finite_bound(unsigned k, std::size_t m);
/// e(H_k^m) = m [4(|E0| + |E1| 4^k + |E2| 4^2k) + 6 C(4^k,2)^2 + 4^4k].
BigInt rainbow_circular_edges(unsigned k, std::size_t m);

/// Expansion of H_{m,lambda}, k = 3m+2.
BoundRecord corollary74_bound(std::size_t m, unsigned lambda);

/// t_*(4) >= (4/7)^3.
BoundRecord thomasse_yeo_lower();
/// ceil(4n - 21 alpha / 4), a lower bound on T(n, alpha+1, 4).
std::int64_t thomasse_yeo_edges(std::size_t n, std::size_t alpha);

// -------------------------------------------------- small-ratio values --

/// T(n, alpha+1, 4) for n/alpha <= 7/4 outside the exceptional line
/// 4n = 7 alpha - 2; nullopt where no formula applies or n < 4.
std::optional<std::int64_t> section8_exact(std::size_t n, std::size_t alpha);

struct UnionBound {
  std::int64_t value = 0;
  /// Blocks (n_i, alpha_i) and multiplicities; empty when `via_ratio_three_halves`.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> blocks;
  /// n/alpha = 3/2 with alpha = 2 mod 4: no block pattern fits and the value
  /// is ceil(5n/2 - 3 alpha), the known exact value on that line.
  bool via_ratio_three_halves = false;
};

/// Base blocks used by union_upper: T(5,4,4) <= 5, T(6,5,4) <= 3,
/// T(7,5,4) <= 7, T(8,6,4) <= 6.
struct UnionBase {
  std::size_t n;
  std::size_t alpha;
  std::int64_t edges;
};
const std::vector<UnionBase>& union_bases();

/// Best disjoint-union upper bound on T(n, alpha+1, 4) over patterns
/// c·(7,4) + b·(6,4) + up to two (8,5) + up to two (5,3). Requires
/// 3/2 <= n/alpha <= 7/4, else RatioOutOfRange; n >= 4.
UnionBound union_upper(std::size_t n, std::size_t alpha);

// --------------------------------------------------------------- report --

struct ReportOptions {
  std::uint64_t seed = 1;
  std::size_t restarts = 32;
};

/// Rows k = 5, 6, 7, 8, 10, 14, 17, 20, 23, 32, 35, 38, 41, 44, 62, 65.
/// Rows 8, 10 and 14 are external constants.
std::vector<BoundRecord> table9_report(const ReportOptions& options = {});

std::string render_markdown(const std::vector<BoundRecord>& rows);
std::string render_csv(const std::vector<BoundRecord>& rows);
nlohmann::json render_json(const std::vector<BoundRecord>& rows);

std::string render_table_markdown(const TuranValueTable& table);

}  // namespace turan4
