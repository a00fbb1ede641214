#include "common.hpp"
#include "turan4/rng.hpp"

namespace turan4 {

BigInt Census::get(std::string_view name) const {
  for (const auto& [n, c] : families)
    if (n == name) return c;
  throw Error(ErrorCode::InvalidArgument, "no family named " + std::string(name));
}

BigInt Census::total() const {
  BigInt t = 0;
  for (const auto& [n, c] : families) t += c;
  return t;
}

nlohmann::json Census::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  nlohmann::json fam = nlohmann::json::array();
  for (const auto& [n, c] : families) fam.push_back({{"family", n}, {"count", c.get_str()}});
  j["families"] = std::move(fam);
  j["total"] = total().get_str();
  return j;
}

ParitySpec ParitySpec::zero(std::size_t n, std::size_t m) {
  return ParitySpec{n, m, std::vector<std::vector<std::uint8_t>>(n, std::vector<std::uint8_t>(m, 0))};
}

ParitySpec ParitySpec::random(std::size_t n, std::size_t m, std::uint64_t seed) {
  ParitySpec spec = zero(n, m);
  Rng rng(derive_seed(seed, "parity-matrix"));
  for (auto& row : spec.matrix)
    for (auto& a : row) a = static_cast<std::uint8_t>(rng() >> 63);
  return spec;
}

namespace {

void check_spec(const ParitySpec& spec) {
  if (spec.matrix.size() != spec.n)
    throw Error(ErrorCode::InvalidArgument, "parity matrix row count does not match n");
  for (const auto& row : spec.matrix)
    if (row.size() != spec.m)
      throw Error(ErrorCode::InvalidArgument, "parity matrix column count does not match m");
}

bool even_minor(const ParitySpec& s, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  return ((s.matrix[i][k] + s.matrix[i][l] + s.matrix[j][k] + s.matrix[j][l]) & 1) == 0;
}

template <class F>
void for_each_quad(std::size_t size, F&& f) {
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = a + 1; b < size; ++b)
      for (std::size_t c = b + 1; c < size; ++c)
        for (std::size_t d = c + 1; d < size; ++d) f(a, b, c, d);
}

}  // namespace

Construction parity_construction(const ParitySpec& spec) {
  check_spec(spec);
  const auto x = [](std::size_t i) { return static_cast<Vertex>(i); };
  const auto y = [&](std::size_t k) { return static_cast<Vertex>(spec.n + k); };

  detail::FamilyCollector out;
  out.begin("E40");
  for_each_quad(spec.n, [&](auto a, auto b, auto c, auto d) { out.add(x(a), x(b), x(c), x(d)); });
  out.end();
  out.begin("E04");
  for_each_quad(spec.m, [&](auto a, auto b, auto c, auto d) { out.add(y(a), y(b), y(c), y(d)); });
  out.end();
  out.begin("E22");
  for (std::size_t i = 0; i < spec.n; ++i)
    for (std::size_t j = i + 1; j < spec.n; ++j)
      for (std::size_t k = 0; k < spec.m; ++k)
        for (std::size_t l = k + 1; l < spec.m; ++l)
          if (even_minor(spec, i, j, k, l)) out.add(x(i), x(j), y(k), y(l));
  out.end();

  std::vector<Label> labels;
  for (std::size_t i = 0; i < spec.n; ++i) labels.push_back({0, static_cast<int>(i)});
  for (std::size_t k = 0; k < spec.m; ++k) labels.push_back({1, static_cast<int>(k)});
  return std::move(out).finish(spec.n + spec.m, std::move(labels), "parity");
}

Census parity_counts(const ParitySpec& spec) {
  check_spec(spec);
  unsigned long long mixed = 0;
  for (std::size_t i = 0; i < spec.n; ++i)
    for (std::size_t j = i + 1; j < spec.n; ++j) {
      // Rows i and j agree on column k iff a_ik + a_jk is even; a minor is
      // even iff both columns agree or both disagree.
      unsigned long long agree = 0;
      for (std::size_t k = 0; k < spec.m; ++k) agree += spec.matrix[i][k] == spec.matrix[j][k];
      const unsigned long long disagree = spec.m - agree;
      mixed += agree * (agree - (agree ? 1 : 0)) / 2 + disagree * (disagree - (disagree ? 1 : 0)) / 2;
    }
  Census c;
  c.add("E40", binomial(spec.n, 4));
  c.add("E04", binomial(spec.m, 4));
  c.add("E22", detail::big(mixed));
  return c;
}

}  // namespace turan4
