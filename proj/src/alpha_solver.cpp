#include "turan4/alpha_solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <numeric>

#include "turan4/error.hpp"

namespace turan4 {

std::string_view to_string(SolveStatus status) noexcept {
  return status == SolveStatus::Exact ? "Exact" : "LowerBoundOnly";
}

SolveBudget SolveBudget::default_for(std::size_t vertex_count) {
  SolveBudget b;
  if (const char* env = std::getenv("TURAN_BUDGET_NODES"); env && *env) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(env, &end, 10);
    if (*end == '\0') {
      b.max_nodes = cap;
      return b;
    }
  }
  if (vertex_count > 48) b.max_nodes = 100'000'000;
  return b;
}

bool is_independent(const FourGraph& h, std::span<const Vertex> subset) {
  const VertexBits bits = to_bits(h.vertex_count(), subset);
  const EdgeMasks masks(h);
  return kernels::first_contained(masks.view(), bits.words()) < 0;
}

AlphaResult alpha_bruteforce(const FourGraph& h) {
  const std::size_t n = h.vertex_count();
  if (n > kBruteForceLimit)
    throw Error(ErrorCode::TooLargeForBruteForce,
                std::to_string(n) + " vertices exceeds " + std::to_string(kBruteForceLimit));
  std::vector<std::uint32_t> edge_masks;
  edge_masks.reserve(h.edge_count());
  for (const Edge& e : h.edges())
    edge_masks.push_back((1U << e[0]) | (1U << e[1]) | (1U << e[2]) | (1U << e[3]));

  auto independent = [&](std::uint32_t set) {
    for (std::uint32_t e : edge_masks)
      if ((e & set) == e) return false;
    return true;
  };

  AlphaResult result;
  std::uint32_t best = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    bool found = false;
    // Gosper's hack over all k-subsets of [0, n).
    std::uint64_t set = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (set < limit) {
      ++result.nodes_explored;
      if (independent(static_cast<std::uint32_t>(set))) {
        best = static_cast<std::uint32_t>(set);
        found = true;
        break;
      }
      const std::uint64_t c = set & (~set + 1);
      const std::uint64_t r = set + c;
      set = (((r ^ set) >> 2) / c) | r;
    }
    if (!found) break;
    result.alpha = k;
  }
  for (std::size_t v = 0; v < n; ++v)
    if ((best >> v) & 1U) result.witness.push_back(static_cast<Vertex>(v));
  result.status = SolveStatus::Exact;
  return result;
}

std::vector<Vertex> greedy_maximal_independent(const FourGraph& h, std::span<const Vertex> order) {
  return greedy_maximal_independent(h, Incidence(h), order);
}

std::vector<Vertex> greedy_maximal_independent(const FourGraph& h, const Incidence& inc,
                                               std::span<const Vertex> order) {
  VertexBits chosen(h.vertex_count());
  std::vector<Vertex> out;
  for (Vertex v : order) {
    if (v >= h.vertex_count()) throw Error(ErrorCode::IndexOutOfRange, "vertex in order");
    if (chosen.test(v)) continue;
    bool blocked = false;
    for (std::uint32_t id : inc.of(v)) {
      const Edge& e = h.edges()[id];
      int inside = 0;
      for (Vertex u : e) inside += u != v && chosen.test(u);
      if (inside == 3) {
        blocked = true;
        break;
      }
    }
    if (!blocked) {
      chosen.set(v);
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class BranchAndBound {
public:
  BranchAndBound(const FourGraph& h, const SolveBudget& budget)
      : h_(h),
        n_(h.vertex_count()),
        masks_(h),
        words_(masks_.word_count()),
        budget_(budget),
        residual_(h.edge_count()),
        degree_(n_),
        start_(std::chrono::steady_clock::now()) {
    bucket_.resize(3);
  }

  AlphaResult run() {
    // Warm start: greedy in order of increasing degree.
    const Incidence inc(h_);
    std::vector<Vertex> order(n_);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return inc.degree(a) < inc.degree(b); });
    best_ = greedy_maximal_independent(h_, order);

    VertexBits chosen(n_);
    VertexBits cand(n_);
    cand.set_all();
    search(chosen, 0, cand);

    AlphaResult r;
    r.alpha = best_.size();
    r.witness = best_;
    r.status = aborted_ ? SolveStatus::LowerBoundOnly : SolveStatus::Exact;
    r.nodes_explored = nodes_;
    return r;
  }

private:
  bool out_of_budget() {
    if (aborted_) return true;
    if (budget_.max_nodes && nodes_ >= *budget_.max_nodes) aborted_ = true;
    if (budget_.max_seconds && (nodes_ & 1023) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() >= *budget_.max_seconds) aborted_ = true;
    }
    return aborted_;
  }

  std::uint64_t edge_word(std::size_t j, std::size_t w) const { return masks_.view().word_row(w)[j]; }

  void record(const VertexBits& chosen) {
    best_ = chosen.to_vector();
  }

  void search(VertexBits chosen, std::size_t chosen_count, VertexBits cand) {
    ++nodes_;
    if (out_of_budget()) return;

    const std::size_t edges = h_.edge_count();
    VertexBits alive = chosen;
    alive |= cand;
    kernels::residual_sizes(masks_.view(), alive.words(), cand.words(), residual_);

    // Unit propagation: an edge with three chosen vertices forbids the fourth.
    // Excluding vertices only kills edges, so one pass reaches the fixpoint.
    VertexBits forced(n_);
    for (std::size_t j = 0; j < edges; ++j) {
      if (residual_[j] != 1) continue;
      for (std::size_t w = 0; w < words_; ++w) forced.words()[w] |= edge_word(j, w) & cand.words()[w];
    }
    cand.subtract(forced);

    // Live residual edges bucketed by their candidate count (2, 3, 4).
    for (auto& b : bucket_) b.clear();
    std::fill(degree_.begin(), degree_.end(), 0U);
    for (std::size_t j = 0; j < edges; ++j) {
      const std::uint8_t r = residual_[j];
      if (r < 2 || r > 4) continue;
      bool dead = false;
      for (std::size_t w = 0; w < words_ && !dead; ++w) dead = (edge_word(j, w) & forced.words()[w]) != 0;
      if (dead) continue;
      bucket_[r - 2].push_back(static_cast<std::uint32_t>(j));
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = edge_word(j, w) & cand.words()[w];
        while (bits) {
          ++degree_[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
          bits &= bits - 1;
        }
      }
    }

    // Candidates outside every live edge can always be taken.
    std::size_t free_count = 0;
    cand.for_each([&](std::size_t v) {
      if (degree_[v] == 0) {
        chosen.set(v);
        ++free_count;
      }
    });
    if (free_count) {
      chosen_count += free_count;
      cand.subtract(chosen);
    }
    if (chosen_count > best_.size()) record(chosen);

    const std::size_t cand_count = cand.count();
    if (cand_count == 0) return;

    // Disjoint residual edges each cost at least one candidate.
    std::size_t packing = 0;
    used_.assign(words_, 0);
    for (const auto& b : bucket_) {
      for (std::uint32_t j : b) {
        bool clash = false;
        for (std::size_t w = 0; w < words_ && !clash; ++w)
          clash = (edge_word(j, w) & cand.words()[w] & used_[w]) != 0;
        if (clash) continue;
        for (std::size_t w = 0; w < words_; ++w) used_[w] |= edge_word(j, w) & cand.words()[w];
        ++packing;
      }
    }
    if (chosen_count + cand_count - packing <= best_.size()) return;

    std::size_t pivot = n_;
    std::uint32_t pivot_degree = 0;
    cand.for_each([&](std::size_t v) {
      if (pivot == n_ || degree_[v] > pivot_degree) {
        pivot = v;
        pivot_degree = degree_[v];
      }
    });

    cand.reset(pivot);
    search(chosen, chosen_count, cand);
    if (aborted_) return;
    chosen.set(pivot);
    search(std::move(chosen), chosen_count + 1, std::move(cand));
  }

  const FourGraph& h_;
  std::size_t n_;
  EdgeMasks masks_;
  std::size_t words_;
  SolveBudget budget_;
  std::vector<std::uint8_t> residual_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::vector<std::uint32_t>> bucket_;
  std::vector<std::uint64_t> used_;
  std::vector<Vertex> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

AlphaResult alpha_exact(const FourGraph& h, const SolveBudget& budget) {
  if (h.vertex_count() == 0) return AlphaResult{};
  return BranchAndBound(h, budget).run();
}

TauResult tau(const FourGraph& h, const SolveBudget& budget) {
  const AlphaResult r = alpha_exact(h, budget);
  return {h.vertex_count() - r.alpha, r.status};
}

bool satisfies_thomasse_yeo(const FourGraph& h, std::size_t alpha) {
  const std::size_t t = h.vertex_count() - alpha;
  return 21 * t <= 5 * h.vertex_count() + 4 * h.edge_count();
}

}  // namespace turan4
