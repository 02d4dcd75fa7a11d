#ifndef NETMAINT_SRC_SEARCH_HPP_
#define NETMAINT_SRC_SEARCH_HPP_

// Depth-first branch and bound over a fixed sequence of positions, each with
// a list of choices. Shared by the exhaustive oracles.
//
// State must provide
//   void apply(std::size_t pos, std::size_t choice);
//   void undo(std::size_t pos, std::size_t choice);
//   Score bound();   // upper bound on every completion of the current prefix
//   Score leaf();    // exact score of a full assignment
// and be copyable for the parallel split. Higher scores are better; only a
// strictly better leaf replaces the incumbent, so the reported assignment is
// the first optimal leaf in depth-first order.

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "netmaint/solution.hpp"

namespace netmaint::detail {

template <class Score>
struct DfsOutcome {
  std::optional<std::vector<std::size_t>> best;
  Score best_score{};
  bool exceeded = false;
  std::uint64_t nodes = 0;
};

template <class State, class Score>
class Dfs {
 public:
  Dfs(State& state, const std::vector<std::size_t>& widths, std::uint64_t budget,
      std::optional<Score> ceiling)
      : state_(state), widths_(widths), budget_(budget), ceiling_(std::move(ceiling)) {}

  // Searches positions [from, end) on top of an already applied prefix.
  DfsOutcome<Score> run(std::size_t from, std::vector<std::size_t> prefix,
                        const std::atomic<bool>* stop = nullptr) {
    stop_ = stop;
    current_ = std::move(prefix);
    current_.resize(widths_.size(), 0);
    descend(from);
    return std::move(outcome_);
  }

 private:
  bool done() const {
    return outcome_.exceeded || reached_ceiling_ ||
           (stop_ != nullptr && stop_->load(std::memory_order_relaxed));
  }

  void descend(std::size_t pos) {
    if (pos == widths_.size()) {
      Score score = state_.leaf();
      if (!outcome_.best || score > outcome_.best_score) {
        outcome_.best = current_;
        outcome_.best_score = std::move(score);
        if (ceiling_ && !(outcome_.best_score < *ceiling_)) reached_ceiling_ = true;
      }
      return;
    }
    for (std::size_t c = 0; c < widths_[pos] && !done(); ++c) {
      if (++outcome_.nodes > budget_) {
        outcome_.exceeded = true;
        return;
      }
      state_.apply(pos, c);
      current_[pos] = c;
      if (!outcome_.best || state_.bound() > outcome_.best_score) descend(pos + 1);
      state_.undo(pos, c);
    }
  }

  State& state_;
  const std::vector<std::size_t>& widths_;
  std::uint64_t budget_;
  std::optional<Score> ceiling_;
  const std::atomic<bool>* stop_ = nullptr;
  std::vector<std::size_t> current_;
  DfsOutcome<Score> outcome_;
  bool reached_ceiling_ = false;
};

// Serial search from the root.
template <class Score, class State>
DfsOutcome<Score> search_serial(State& state, const std::vector<std::size_t>& widths,
                                std::uint64_t budget, std::optional<Score> ceiling) {
  for (std::size_t w : widths) {
    if (w == 0) return {};
  }
  Dfs<State, Score> dfs(state, widths, budget, std::move(ceiling));
  return dfs.run(0, {});
}

// Applies the forced prefix (positions with a single choice), then searches
// each choice of the first branching position in its own task with its own
// incumbent and budget ceil(budget / branches). Picks the best score, lowest
// branch on ties, which is the serial answer whenever no budget runs out.
// A branch that reaches the ceiling stops all later branches; their results
// cannot win and are not counted.
template <class Score, class State>
DfsOutcome<Score> search_parallel(const State& root, const std::vector<std::size_t>& widths,
                                  std::uint64_t budget, std::optional<Score> ceiling) {
  for (std::size_t w : widths) {
    if (w == 0) return {};
  }
  State base = root;
  std::size_t split = 0;
  while (split < widths.size() && widths[split] == 1) {
    base.apply(split, 0);
    ++split;
  }
  DfsOutcome<Score> out;
  out.nodes = split;
  if (split > budget) {
    out.exceeded = true;
    return out;
  }
  if (split == widths.size()) {
    out.best = std::vector<std::size_t>(widths.size(), 0);
    out.best_score = base.leaf();
    return out;
  }
  const std::size_t branches = widths[split];
  const std::uint64_t remaining = budget - split;
  const std::uint64_t share = (remaining + branches - 1) / branches;

  std::vector<DfsOutcome<Score>> results(branches);
  std::vector<std::atomic<bool>> stop(branches);
  for (auto& flag : stop) flag.store(false);

#pragma omp parallel for schedule(dynamic, 1)
  for (long long b = 0; b < static_cast<long long>(branches); ++b) {
    if (stop[b].load()) continue;
    State state = base;
    DfsOutcome<Score>& r = results[b];
    if (share == 0) {
      r.exceeded = true;
      continue;
    }
    state.apply(split, static_cast<std::size_t>(b));
    std::vector<std::size_t> prefix(split + 1, 0);
    prefix[split] = static_cast<std::size_t>(b);
    Dfs<State, Score> dfs(state, widths, share - 1, ceiling);
    r = dfs.run(split + 1, std::move(prefix), &stop[b]);
    r.nodes += 1;  // the branch node itself
    if (r.best && ceiling && !(r.best_score < *ceiling)) {
      for (std::size_t later = b + 1; later < branches; ++later) stop[later].store(true);
    }
  }

  // Lowest branch reaching the ceiling ends the scan: later ones were stopped.
  for (std::size_t b = 0; b < branches; ++b) {
    const DfsOutcome<Score>& r = results[b];
    out.nodes += r.nodes;
    if (r.exceeded) out.exceeded = true;
    if (r.best && (!out.best || r.best_score > out.best_score)) {
      out.best = r.best;
      out.best_score = r.best_score;
    }
    if (r.best && ceiling && !(r.best_score < *ceiling)) {
      out.exceeded = false;  // optimum proven
      break;
    }
  }
  if (out.exceeded) out.best.reset();
  return out;
}

template <class Score, class State>
DfsOutcome<Score> search(State& state, const std::vector<std::size_t>& widths,
                         std::uint64_t budget, std::optional<Score> ceiling,
                         Execution execution) {
  if (execution == Execution::Parallel) return search_parallel<Score>(state, widths, budget, ceiling);
  DfsOutcome<Score> out = search_serial<Score>(state, widths, budget, ceiling);
  if (out.exceeded) out.best.reset();
  return out;
}

}  // namespace netmaint::detail

#endif  // NETMAINT_SRC_SEARCH_HPP_
