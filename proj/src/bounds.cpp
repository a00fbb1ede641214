#include "turan4/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "turan4/constructions.hpp"
#include "turan4/error.hpp"
#include "turan4/simplex.hpp"

namespace turan4 {
namespace {

BigInt big(std::size_t v) { return BigInt(std::to_string(v)); }

Rational ratio(std::size_t n, std::size_t alpha) {
  return Rational(static_cast<long long>(n), static_cast<long long>(alpha));
}

std::string entry_key(std::size_t n, unsigned k) {
  return "T(" + std::to_string(n) + "," + std::to_string(k) + ",4)";
}

}  // namespace

std::string_view to_string(BoundKind kind) noexcept {
  return kind == BoundKind::Upper ? "upper" : "lower";
}

std::string BoundRecord::decimal(int digits) const {
  return t_star.to_decimal(digits, kind == BoundKind::Upper ? Rounding::Up : Rounding::Down);
}

nlohmann::json BoundRecord::to_json() const {
  nlohmann::json j;
  if (limit)
    j["k"] = "limit";
  else
    j["k"] = k;
  j["kind"] = std::string(to_string(kind));
  if (t_value) {
    j["t_num"] = turan4::to_string(t_value->num());
    j["t_den"] = turan4::to_string(t_value->den());
  }
  j["t_star_num"] = turan4::to_string(t_star.num());
  j["t_star_den"] = turan4::to_string(t_star.den());
  j["t_star_decimal"] = decimal();
  j["source"] = provenance.source;
  j["params"] = provenance.params;
  j["reproduced"] = provenance.reproduced;
  return j;
}

Rational rescale(unsigned k, const Rational& t) {
  const long long a = static_cast<long long>(k) - 1;
  return Rational(a * a * a, 24) * t;
}

BoundRecord record_from_t(unsigned k, BoundKind kind, Rational t, Provenance p) {
  BoundRecord r;
  r.k = k;
  r.kind = kind;
  r.t_star = rescale(k, t);
  r.t_value = std::move(t);
  r.provenance = std::move(p);
  return r;
}

BoundRecord record_from_t_star(unsigned k, BoundKind kind, Rational t_star, Provenance p) {
  const long long a = static_cast<long long>(k) - 1;
  return record_from_t(k, kind, t_star * Rational(24, a * a * a), std::move(p));
}

// ------------------------------------------------------------- table --

void TuranValueTable::add_upper(std::size_t n, unsigned k, const BigInt& value,
                                const std::string& source) {
  TableEntry& e = entries_[{n, k}];
  if (e.lower && value < *e.lower)
    throw Error(ErrorCode::TableConflict, entry_key(n, k) + " <= " + turan4::to_string(value) +
                                              " contradicts lower bound " +
                                              turan4::to_string(*e.lower));
  if (!e.upper || value < *e.upper) {
    e.upper = value;
    e.upper_source = source;
  }
}

void TuranValueTable::add_lower(std::size_t n, unsigned k, const BigInt& value,
                                const std::string& source) {
  TableEntry& e = entries_[{n, k}];
  if (e.upper && value > *e.upper)
    throw Error(ErrorCode::TableConflict, entry_key(n, k) + " >= " + turan4::to_string(value) +
                                              " contradicts upper bound " +
                                              turan4::to_string(*e.upper));
  if (!e.lower || value > *e.lower) {
    e.lower = value;
    e.lower_source = source;
  }
}

const TableEntry* TuranValueTable::find(std::size_t n, unsigned k) const {
  const auto it = entries_.find({n, k});
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> TuranValueTable::monotonicity_violations() const {
  std::vector<std::string> out;
  std::map<unsigned, std::pair<std::size_t, Rational>> last;
  for (const auto& [key, e] : entries_) {
    if (!e.lower || !e.upper || *e.lower != *e.upper) continue;
    const auto [n, k] = key;
    const Rational r(*e.lower, binomial(static_cast<std::uint64_t>(n), 4) == 0
                                   ? BigInt(1)
                                   : binomial(static_cast<std::uint64_t>(n), 4));
    if (auto it = last.find(k); it != last.end() && r < it->second.second)
      out.push_back(entry_key(n, k) + "/C(n,4) drops below " +
                    entry_key(it->second.first, k) + "/C(n,4)");
    last[k] = {n, r};
  }
  return out;
}

nlohmann::json TuranValueTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, e] : entries_) {
    nlohmann::json row{{"n", key.first}, {"k", key.second}};
    if (e.lower) row["lower"] = turan4::to_string(*e.lower), row["lower_source"] = e.lower_source;
    if (e.upper) row["upper"] = turan4::to_string(*e.upper), row["upper_source"] = e.upper_source;
    rows.push_back(row);
  }
  return rows;
}

const TableEntry& density_from_graph(TuranValueTable& table, const FourGraph& h,
                                     const AlphaResult& certificate, const std::string& source) {
  if (certificate.status != SolveStatus::Exact)
    throw Error(ErrorCode::UncertifiedAlpha, "independence number is only a lower bound");
  if (certificate.witness.size() != certificate.alpha || !is_independent(h, certificate.witness))
    throw Error(ErrorCode::UncertifiedAlpha, "witness does not certify the independence number");
  const std::size_t n = h.vertex_count();
  const unsigned k = static_cast<unsigned>(certificate.alpha + 1);
  table.add_upper(n, k, big(h.edge_count()), source);
  return *table.find(n, k);
}

BigInt lift_lower(TuranValueTable& table, std::size_t n, unsigned k) {
  const TableEntry* base = n >= 5 ? table.find(n - 1, k) : nullptr;
  if (!base || !base->lower)
    throw Error(ErrorCode::MissingBaseEntry, "no lower bound for " + entry_key(n - 1, k));
  const BigInt value = Rational(big(n) * *base->lower, big(n - 4)).ceil();
  table.add_lower(n, k, value, "lifted from " + entry_key(n - 1, k));
  return value;
}

BoundRecord density_lower_from_table(const TuranValueTable& table, std::size_t n, unsigned k) {
  const TableEntry* e = table.find(n, k);
  if (!e || !e->lower)
    throw Error(ErrorCode::MissingBaseEntry, "no lower bound for " + entry_key(n, k));
  return record_from_t(k, BoundKind::Lower,
                       Rational(*e->lower, binomial(static_cast<std::uint64_t>(n), 4)),
                       {entry_key(n, k) + " / C(n,4)", e->lower_source, true});
}

// --------------------------------------------------------- densities --

BoundRecord parity_limit_bound() {
  return record_from_t(5, BoundKind::Upper, Rational(5, 16),
                       {"parity construction", "random matrix, parts n/2", true});
}

BoundRecord expansion_density_bound(std::size_t n, const BigInt& e, std::size_t alpha,
                                    const BigInt& c, const BigInt& d) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "host must have vertices");
  const BigInt N = big(n);
  const Rational numerator = Rational(24 * e + 3 * N * (N - 1) + 4 * c + N) - Rational(11, 16) * Rational(d);
  const Rational t = numerator / Rational(N * N * N * N);
  std::ostringstream params;
  params << "n=" << n << ", e=" << e << ", alpha=" << alpha << ", c=" << c << ", d=" << d;
  return record_from_t(static_cast<unsigned>(alpha + 2), BoundKind::Upper, t,
                       {"expansion", params.str(), true});
}

BoundRecord circular_expansion_bound(std::size_t m) {
  if (m < 3) throw Error(ErrorCode::MTooSmall, "m = " + std::to_string(m) + " (need m >= 3)");
  const BigInt M = big(m);
  const Rational t(768 * M + 30837, 65536 * M * M * M);
  return record_from_t(static_cast<unsigned>(3 * m + 2), BoundKind::Upper, t,
                       {"expansion of circular zero-sum construction", "m=" + std::to_string(m), true});
}

BoundRecord circular_expansion_bound_via_expansion(std::size_t m) {
  if (m < 3) throw Error(ErrorCode::MTooSmall, "m = " + std::to_string(m) + " (need m >= 3)");
  const std::size_t n = 16 * m;
  BoundRecord r = expansion_density_bound(n, big(1244 * m), 3 * m, big(16 * n), big(n));
  r.provenance.source = "expansion of circular zero-sum construction";
  return r;
}

BigInt rainbow_circular_edges(unsigned k, std::size_t m) {
  const RainbowCounts c = rainbow_counts(k);
  const BigInt q = BigInt(1) << (2 * k);
  const BigInt pairs = binomial(q, 2);
  return big(m) * (4 * (c.e0 + c.e1 * q + c.e2 * q * q) + 6 * pairs * pairs + q * q * q * q);
}

Rational rainbow_finite_bound(unsigned k, std::size_t m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "m must be at least 2");
  const BigInt v = big(m) * (BigInt(1) << (2 * k + 2));
  return Rational(rainbow_circular_edges(k, m), binomial(v, 4));
}

BoundRecord rainbow_limit_bound(std::size_t m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "m must be at least 2");
  const BigInt M = big(m);
  return record_from_t(static_cast<unsigned>(3 * m + 1), BoundKind::Upper,
                       Rational(BigInt(443), 640 * M * M * M),
                       {"circular rainbow construction", "m=" + std::to_string(m) + ", k -> inf", true});
}

BoundRecord corollary74_bound(std::size_t m, unsigned lambda) {
  const BigInt e = hm_edge_formula(m, lambda);
  const std::size_t v = 16 * m * lambda;
  // c(w) = 16 lambda (one level of H_{m,lambda}) and d(w) = 1 for all w.
  BoundRecord r = expansion_density_bound(v, e, 3 * m, big(v) * big(16 * lambda), big(v));
  r.provenance.source = "expansion of H_{m,lambda}";
  r.provenance.params = "m=" + std::to_string(m) + ", lambda=" + std::to_string(lambda);
  return r;
}

BoundRecord thomasse_yeo_lower() {
  BoundRecord r;
  r.limit = true;
  r.kind = BoundKind::Lower;
  r.t_star = Rational(64, 343);
  r.provenance = {"transversal inequality tau <= (5v + 4e)/21", "T(7m,4m+1,4) >= 7m", true};
  return r;
}

std::int64_t thomasse_yeo_edges(std::size_t n, std::size_t alpha) {
  const Rational v = Rational(4 * static_cast<long long>(n)) -
                     Rational(21 * static_cast<long long>(alpha), 4);
  const BigInt c = v.ceil();
  return c.get_si();
}

// ------------------------------------------------------- exact values --

std::optional<std::int64_t> section8_exact(std::size_t n, std::size_t alpha) {
  if (n < 4 || alpha == 0 || n < alpha) return std::nullopt;
  const Rational r = ratio(n, alpha);
  const long long N = static_cast<long long>(n), A = static_cast<long long>(alpha);
  if (r <= Rational(4, 3)) return N - A;
  if (r <= Rational(3, 2)) return (Rational(5 * N, 2) - Rational(3 * A)).ceil().get_si();
  if (r <= Rational(7, 4) && 4 * N != 7 * A - 2) return thomasse_yeo_edges(n, alpha);
  return std::nullopt;
}

const std::vector<UnionBase>& union_bases() {
  static const std::vector<UnionBase> bases = {{5, 3, 5}, {6, 4, 3}, {7, 4, 7}, {8, 5, 6}};
  return bases;
}

UnionBound union_upper(std::size_t n, std::size_t alpha) {
  if (alpha == 0 || ratio(n, alpha) < Rational(3, 2) || ratio(n, alpha) > Rational(7, 4))
    throw Error(ErrorCode::RatioOutOfRange,
                "n/alpha = " + std::to_string(n) + "/" + std::to_string(alpha) +
                    " outside [3/2, 7/4]");
  if (n < 4) throw Error(ErrorCode::InvalidArgument, "no 4-graph on fewer than 4 vertices has alpha < n");
  std::optional<UnionBound> best;
  for (std::size_t a = 0; a <= 2; ++a)      // (5,3) blocks
    for (std::size_t d = 0; d <= 2; ++d) {  // (8,5) blocks
      if (5 * a + 8 * d > n || 3 * a + 5 * d > alpha) continue;
      const std::size_t rn = n - 5 * a - 8 * d, ra = alpha - 3 * a - 5 * d;
      if (ra % 4 != 0) continue;
      const std::size_t q = ra / 4;  // (6,4) and (7,4) blocks together
      if (rn < 6 * q || rn - 6 * q > q) continue;
      const std::size_t c = rn - 6 * q, b = q - c;
      UnionBound u;
      u.value = static_cast<std::int64_t>(5 * a + 6 * d + 7 * c + 3 * b);
      for (auto [base, count] : {std::pair{union_bases()[0], a}, std::pair{union_bases()[1], b},
                                 std::pair{union_bases()[2], c}, std::pair{union_bases()[3], d}})
        if (count > 0) u.blocks.push_back({{base.n, base.alpha}, count});
      if (!best || u.value < best->value) best = std::move(u);
    }
  if (best) return *best;
  if (2 * n == 3 * alpha) {
    UnionBound u;
    u.value = (Rational(5 * static_cast<long long>(n), 2) - Rational(3 * static_cast<long long>(alpha)))
                  .ceil()
                  .get_si();
    u.via_ratio_three_halves = true;
    return u;
  }
  throw Error(ErrorCode::RatioOutOfRange, "no union pattern for n=" + std::to_string(n) +
                                              ", alpha=" + std::to_string(alpha));
}

// ------------------------------------------------------------ report --

std::vector<BoundRecord> table9_report(const ReportOptions& options) {
  std::vector<BoundRecord> rows;
  rows.push_back(parity_limit_bound());

  {
    const ExpansionSpec spec = example2_expansion(1);
    const ExpansionObjective obj = ExpansionObjective::from_spec(spec);
    MinimizeOptions mo;
    mo.seed = options.seed;
    mo.restarts = options.restarts;
    const OptimizerResult opt = minimize(obj, mo);
    rows.push_back(record_from_t_star(
        6, BoundKind::Upper, opt.value_certified,
        {"expansion of the 8-vertex host, optimised part sizes",
         "seed=" + std::to_string(options.seed) + ", restarts=" + std::to_string(options.restarts),
         true}));
  }

  BoundRecord seven = rainbow_limit_bound(2);
  rows.push_back(seven);

  const ExternalConstants constants = load_external_constants();
  for (const ExternalDensity& d : constants.densities)
    rows.push_back(record_from_t_star(d.k, BoundKind::Upper, d.t_star_upper,
                                      {"external constant", d.cite, false}));

  for (std::size_t m : {5, 6, 7}) rows.push_back(circular_expansion_bound(m));
  for (auto [m, lambda] : {std::pair<std::size_t, unsigned>{10, 2}, {11, 2}, {12, 2}, {13, 2},
                           {14, 2}, {20, 3}, {21, 3}})
    rows.push_back(corollary74_bound(m, lambda));

  std::stable_sort(rows.begin(), rows.end(),
                   [](const BoundRecord& a, const BoundRecord& b) { return a.k < b.k; });
  return rows;
}

std::string render_markdown(const std::vector<BoundRecord>& rows) {
  std::ostringstream out;
  out << "| k | t_*(k,4) | exact | kind | source | params | status |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    out << "| " << (r.limit ? std::string("limit") : std::to_string(r.k)) << " | " << r.decimal()
        << " | " << r.t_star.to_string() << " | " << to_string(r.kind) << " | "
        << r.provenance.source << " | " << r.provenance.params << " | "
        << (r.provenance.reproduced ? "reproduced" : "external") << " |\n";
  }
  return out.str();
}

std::string render_csv(const std::vector<BoundRecord>& rows) {
  const auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream out;
  out << "k,kind,t_star_decimal,t_star_num,t_star_den,source,params,status\n";
  for (const auto& r : rows)
    out << (r.limit ? std::string("limit") : std::to_string(r.k)) << ',' << to_string(r.kind) << ','
        << r.decimal() << ',' << r.t_star.num() << ',' << r.t_star.den() << ','
        << quote(r.provenance.source) << ',' << quote(r.provenance.params) << ','
        << (r.provenance.reproduced ? "reproduced" : "external") << '\n';
  return out.str();
}

nlohmann::json render_json(const std::vector<BoundRecord>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) out.push_back(r.to_json());
  return out;
}

std::string render_table_markdown(const TuranValueTable& table) {
  std::ostringstream out;
  out << "| n | k | T(n,k,4) | lower source | upper source |\n|---|---|---|---|---|\n";
  for (const auto& [key, e] : table.entries()) {
    std::string value;
    if (e.lower && e.upper && *e.lower == *e.upper)
      value = turan4::to_string(*e.lower);
    else
      value = (e.lower ? turan4::to_string(*e.lower) : std::string("?")) + "--" +
              (e.upper ? turan4::to_string(*e.upper) : std::string("?"));
    out << "| " << key.first << " | " << key.second << " | " << value << " | " << e.lower_source
        << " | " << e.upper_source << " |\n";
  }
  return out.str();
}

}  // namespace turan4
