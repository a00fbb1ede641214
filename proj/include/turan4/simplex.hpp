#pragma once

// Part-size optimisation for expansions: the asymptotic edge coefficient of
// an expansion as a function of the part fractions x_w.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "turan4/constructions.hpp"
#include "turan4/rational.hpp"

namespace turan4 {

struct ExpansionObjective {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> crit0;
  std::vector<std::vector<Vertex>> crit1;
  std::vector<std::uint8_t> d;
  std::size_t host_alpha = 0;

  /// Takes host, critical sets and d flags from the spec; the host
  /// independence number is solved when not supplied.
  static ExpansionObjective from_spec(const ExpansionSpec& spec,
                                      std::optional<std::size_t> host_alpha = std::nullopt);
};

/// g(x) = (alpha+1)^3 f(x) / (Σx)^4, the rescaled density of the expansion
/// with parts of relative size x. Throws NonPositiveWeight.
double objective_eval(const ExpansionObjective& obj, std::span<const double> x);
Rational objective_eval(const ExpansionObjective& obj, std::span<const Rational> x);
std::vector<double> objective_gradient(const ExpansionObjective& obj, std::span<const double> x);

/// max_w |analytic - central difference| / (1 + |analytic|).
double gradient_check(const ExpansionObjective& obj, std::span<const double> x, double h);

struct MinimizeOptions {
  std::uint64_t seed = 1;
  std::size_t restarts = 32;
  std::size_t max_iterations = 20000;
  /// Stop once the relative improvement over `window` iterations is below `tolerance`.
  double tolerance = 1e-10;
  std::size_t window = 50;
  /// Denominator used when snapping to a rational point.
  std::int64_t snap_denominator = 1000000;
};

struct OptimizerResult {
  std::vector<double> x;          // on the simplex
  std::vector<Rational> x_exact;  // the snapped point, each coordinate k / snap_denominator
  double value = 0.0;
  Rational value_certified;       // exact g at x_exact
  std::size_t iterations = 0;
  bool converged = false;
  std::size_t best_restart = 0;
  std::uint64_t seed = 0;
};

/// Projected gradient descent with Armijo backtracking and a pairwise
/// direct-search polish, restarted from the uniform point (restart 0) and
/// seeded Dirichlet samples. Deterministic for fixed options.
OptimizerResult minimize(const ExpansionObjective& obj, const MinimizeOptions& options = {});

/// Reference part fractions for the asymmetric expansion, five digits each;
/// they sum to 0.9964, not 1.
std::vector<Rational> example2_paper_point();

}  // namespace turan4
