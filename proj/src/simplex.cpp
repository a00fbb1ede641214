#include "turan4/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "turan4/error.hpp"
#include "turan4/rng.hpp"

namespace turan4 {
namespace {

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

template <class T>
void check_positive(const ExpansionObjective& obj, std::span<const T> x) {
  if (x.size() != obj.n)
    throw Error(ErrorCode::InvalidArgument, "weight vector has " + std::to_string(x.size()) +
                                                " entries, expected " + std::to_string(obj.n));
  for (std::size_t w = 0; w < x.size(); ++w)
    if (!(x[w] > T(0)))
      throw Error(ErrorCode::NonPositiveWeight, "weight " + std::to_string(w) + " is not positive");
}

template <class T>
T mass(std::span<const T> x, const std::vector<Vertex>& set) {
  T s(0);
  for (Vertex v : set) s += x[v];
  return s;
}

template <class T>
T f_value(const ExpansionObjective& obj, std::span<const T> x) {
  T edges(0);
  for (const Edge& e : obj.edges) edges += x[e[0]] * x[e[1]] * x[e[2]] * x[e[3]];
  T squares(0), fourth(0);
  for (std::size_t w = 0; w < obj.n; ++w) {
    const T sq = x[w] * x[w];
    squares += sq;
    fourth += sq * sq;
  }
  // Σ_{u<v} x_u² x_v² = ((Σ x²)² − Σ x⁴) / 2
  const T pairs = (squares * squares - fourth) / T(2);
  T triples(0), internal(0);
  for (std::size_t w = 0; w < obj.n; ++w) {
    const T cube = x[w] * x[w] * x[w];
    triples += cube * (mass(x, obj.crit0[w]) + mass(x, obj.crit1[w])) / T(12);
    const T density = obj.d[w] ? T(5) / T(16) : T(1);
    internal += density * cube * x[w] / T(24);
  }
  return edges + pairs / T(4) + triples + internal;
}

template <class T>
T g_value(const ExpansionObjective& obj, std::span<const T> x) {
  check_positive(obj, x);
  T total(0);
  for (const T& v : x) total += v;
  const T k1(static_cast<long long>(obj.host_alpha + 1));
  const T s2 = total * total;
  return k1 * k1 * k1 * f_value(obj, x) / (s2 * s2);
}

void project_to_simplex(std::vector<double>& x, double floor) {
  // Euclidean projection onto {x >= floor, Σx = 1}.
  const std::size_t n = x.size();
  const double budget = 1.0 - floor * static_cast<double>(n);
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = x[i] - floor;
  std::vector<double> s = u;
  std::sort(s.begin(), s.end(), std::greater<>());
  double cumulative = 0.0, theta = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cumulative += s[i];
    const double t = (cumulative - budget) / static_cast<double>(i + 1);
    if (s[i] - t > 0) theta = t;
  }
  for (std::size_t i = 0; i < n; ++i) x[i] = std::max(u[i] - theta, 0.0) + floor;
}

struct RunResult {
  std::vector<double> x;
  double value;
  std::size_t iterations;
  bool converged;
};

RunResult descend(const ExpansionObjective& obj, std::vector<double> x, const MinimizeOptions& opt) {
  constexpr double kFloor = 1e-9;
  project_to_simplex(x, kFloor);
  double value = objective_eval(obj, x);
  std::vector<double> history{value};
  double step = 1.0;
  RunResult r{x, value, 0, false};
  for (std::size_t it = 0; it < opt.max_iterations; ++it) {
    const auto grad = objective_gradient(obj, x);
    bool moved = false;
    for (int tries = 0; tries < 60; ++tries) {
      std::vector<double> trial(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] - step * grad[i];
      project_to_simplex(trial, kFloor);
      double decrease = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) decrease += grad[i] * (x[i] - trial[i]);
      const double tv = objective_eval(obj, trial);
      if (tv <= value - 1e-4 * decrease && tv < value) {
        x = std::move(trial);
        value = tv;
        moved = true;
        step *= 2.0;
        break;
      }
      step *= 0.5;
    }
    r.iterations = it + 1;
    history.push_back(value);
    if (!moved) {
      r.converged = true;
      break;
    }
    if (history.size() > opt.window) {
      const double old = history[history.size() - 1 - opt.window];
      if ((old - value) <= opt.tolerance * std::abs(old)) {
        r.converged = true;
        break;
      }
    }
  }

  // Direct search: move mass between pairs of coordinates.
  for (double delta = 1e-3; delta > 1e-13; delta *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) {
          if (i == j || x[j] - delta <= kFloor) continue;
          std::vector<double> trial = x;
          trial[i] += delta;
          trial[j] -= delta;
          const double tv = objective_eval(obj, trial);
          if (tv < value) {
            x = std::move(trial);
            value = tv;
            improved = true;
          }
        }
    }
  }
  r.x = std::move(x);
  r.value = value;
  return r;
}

std::vector<double> dirichlet_point(std::size_t n, Rng& rng) {
  std::vector<double> x(n);
  double total = 0.0;
  for (auto& v : x) {
    v = -std::log(uniform_open01(rng));
    total += v;
  }
  for (auto& v : x) v /= total;
  return x;
}

}  // namespace

ExpansionObjective ExpansionObjective::from_spec(const ExpansionSpec& spec,
                                                 std::optional<std::size_t> host_alpha) {
  ExpansionObjective obj;
  obj.n = spec.host.vertex_count();
  obj.edges.assign(spec.host.edges().begin(), spec.host.edges().end());
  if (spec.crit0.size() != obj.n || spec.crit1.size() != obj.n || spec.d.size() != obj.n)
    throw Error(ErrorCode::InvalidArgument, "objective: per-vertex arrays must match the host");
  for (std::size_t w = 0; w < obj.n; ++w) {
    obj.crit0.push_back(sorted_unique(spec.crit0[w]));
    obj.crit1.push_back(sorted_unique(spec.crit1[w]));
    for (const auto* set : {&obj.crit0.back(), &obj.crit1.back()})
      for (Vertex v : *set)
        if (v >= obj.n) throw Error(ErrorCode::IndexOutOfRange, "critical set vertex out of range");
  }
  obj.d = spec.d;
  obj.host_alpha =
      host_alpha ? *host_alpha : alpha_exact(spec.host, SolveBudget::unbounded()).alpha;
  return obj;
}

double objective_eval(const ExpansionObjective& obj, std::span<const double> x) {
  return g_value<double>(obj, x);
}

Rational objective_eval(const ExpansionObjective& obj, std::span<const Rational> x) {
  return g_value<Rational>(obj, x);
}

std::vector<double> objective_gradient(const ExpansionObjective& obj, std::span<const double> x) {
  check_positive(obj, x);
  const std::size_t n = obj.n;
  std::vector<double> df(n, 0.0);
  for (const Edge& e : obj.edges)
    for (int t = 0; t < 4; ++t) {
      double p = 1.0;
      for (int u = 0; u < 4; ++u)
        if (u != t) p *= x[e[u]];
      df[e[t]] += p;
    }
  double squares = 0.0;
  for (double v : x) squares += v * v;
  for (std::size_t w = 0; w < n; ++w) {
    df[w] += 0.5 * x[w] * (squares - x[w] * x[w]);
    const double cube = x[w] * x[w] * x[w];
    const double m = mass<double>(x, obj.crit0[w]) + mass<double>(x, obj.crit1[w]);
    df[w] += x[w] * x[w] * m / 4.0;
    for (const auto* set : {&obj.crit0[w], &obj.crit1[w]})
      for (Vertex v : *set) df[v] += cube / 12.0;
    const double density = obj.d[w] ? 5.0 / 16.0 : 1.0;
    df[w] += density * cube / 6.0;
  }
  double total = 0.0;
  for (double v : x) total += v;
  const double f = f_value<double>(obj, x);
  const double k1 = static_cast<double>(obj.host_alpha + 1);
  const double scale = k1 * k1 * k1;
  const double s4 = std::pow(total, 4);
  std::vector<double> grad(n);
  for (std::size_t w = 0; w < n; ++w) grad[w] = scale * (df[w] / s4 - 4.0 * f / (s4 * total));
  return grad;
}

double gradient_check(const ExpansionObjective& obj, std::span<const double> x, double h) {
  if (!(h >= 1e-8 && h <= 1e-4))
    throw Error(ErrorCode::InvalidArgument, "finite-difference step must lie in [1e-8, 1e-4]");
  const auto grad = objective_gradient(obj, x);
  double worst = 0.0;
  std::vector<double> probe(x.begin(), x.end());
  for (std::size_t w = 0; w < obj.n; ++w) {
    probe[w] = x[w] + h;
    const double up = objective_eval(obj, probe);
    probe[w] = x[w] - h;
    const double down = objective_eval(obj, probe);
    probe[w] = x[w];
    const double numeric = (up - down) / (2.0 * h);
    worst = std::max(worst, std::abs(grad[w] - numeric) / (1.0 + std::abs(grad[w])));
  }
  return worst;
}

OptimizerResult minimize(const ExpansionObjective& obj, const MinimizeOptions& options) {
  if (obj.n == 0) throw Error(ErrorCode::InvalidArgument, "objective has no variables");
  if (options.snap_denominator < 1)
    throw Error(ErrorCode::InvalidArgument, "snap denominator must be positive");
  const std::size_t restarts = std::max<std::size_t>(options.restarts, 1);
  OptimizerResult best;
  best.seed = options.seed;
  bool have = false;
  for (std::size_t r = 0; r < restarts; ++r) {
    std::vector<double> start;
    if (r == 0) {
      start.assign(obj.n, 1.0 / static_cast<double>(obj.n));
    } else {
      Rng rng(derive_seed(options.seed, "simplex-restart", r));
      start = dirichlet_point(obj.n, rng);
    }
    RunResult run = descend(obj, std::move(start), options);
    if (!have || run.value < best.value) {
      best.x = std::move(run.x);
      best.value = run.value;
      best.iterations = run.iterations;
      best.converged = run.converged;
      best.best_restart = r;
      have = true;
    }
  }

  const std::int64_t den = options.snap_denominator;
  best.x_exact.clear();
  for (double v : best.x) {
    const auto k = std::max<std::int64_t>(1, std::llround(v * static_cast<double>(den)));
    best.x_exact.emplace_back(static_cast<long long>(k), static_cast<long long>(den));
  }
  best.value_certified = objective_eval(obj, std::span<const Rational>(best.x_exact));
  return best;
}

std::vector<Rational> example2_paper_point() {
  const char* printed[] = {"0.13387", "0.13387", "0.13387", "0.13387",
                           "0.13639", "0.13085", "0.09684", "0.09684"};
  std::vector<Rational> x;
  for (const char* p : printed) x.push_back(Rational::parse(p));
  return x;
}

}  // namespace turan4
