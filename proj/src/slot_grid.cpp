#include "netmaint/slot_grid.hpp"

#include <limits>
#include <stdexcept>

#include "netmaint/errors.hpp"

namespace netmaint {

SlotGrid::SlotGrid(const Instance& instance, int resolution, bool path_mode)
    : graph_(instance), resolution_(resolution), path_mode_(path_mode) {
  if (resolution < 1) throw std::invalid_argument("resolution must be positive");
  slots_ = to_slot(instance.horizon);
  edges_ = graph_.edge_count();
  if (edges_ > std::numeric_limits<std::uint32_t>::max()) {
    throw std::length_error("too many edges for the slot grid");
  }
  bare_connected_ = terminals_connected(graph_, std::vector<bool>(edges_, true));
  blocks_.assign(static_cast<std::size_t>(slots_) * edges_, 0);
  blocked_edges_.assign(slots_, 0);
  connected_.assign(slots_, bare_connected_ ? 1 : 0);
  seen_.assign(graph_.node_count(), 0);
  via_.assign(graph_.node_count(), 0);
  witness_.assign(static_cast<std::size_t>(slots_) * edges_, 0);
  if (!path_mode_) {
    for (long long s = 0; s < slots_; ++s) {
      if (bare_connected_) reachable(s);
    }
  }
  set_counting_window(0, slots_);
}

long long SlotGrid::to_slot(const Rational& t) const {
  const Rational scaled = t * resolution_;
  if (!is_integer(scaled)) {
    throw ValidationError("time " + to_string(t) + " is not a multiple of 1/" +
                          std::to_string(resolution_));
  }
  return to_int64(scaled);
}

Rational SlotGrid::to_time(long long slot) const { return Rational(slot) / resolution_; }

void SlotGrid::set_counting_window(long long from, long long to) {
  if (from < 0 || to > slots_ || from > to) throw std::out_of_range("bad counting window");
  count_from_ = from;
  count_to_ = to;
  counted_connected_ = 0;
  for (long long s = from; s < to; ++s) counted_connected_ += connected_[s];
}

void SlotGrid::block(std::size_t edge, long long from, long long to) {
  for (long long s = from; s < to; ++s) {
    std::uint16_t& count = blocks_[static_cast<std::size_t>(s) * edges_ + edge];
    if (count == std::numeric_limits<std::uint16_t>::max()) {
      throw std::overflow_error("slot blocked too often");
    }
    if (count++ == 0) {
      ++blocked_edges_[s];
      if (connected_[s] && (path_mode_ || witness_[static_cast<std::size_t>(s) * edges_ + edge])) {
        refresh(s);
      }
    }
  }
}

void SlotGrid::unblock(std::size_t edge, long long from, long long to) {
  for (long long s = from; s < to; ++s) {
    std::uint16_t& count = blocks_[static_cast<std::size_t>(s) * edges_ + edge];
    if (count == 0) throw std::logic_error("unblocking a free slot");
    if (--count == 0) {
      --blocked_edges_[s];
      if (!connected_[s]) refresh(s);
    }
  }
}

void SlotGrid::release(std::size_t edge, long long from, long long to) {
  for (long long s = from; s < to; ++s) {
    std::uint16_t& count = blocks_[static_cast<std::size_t>(s) * edges_ + edge];
    if (count == 0) throw std::logic_error("releasing a free slot");
    if (--count == 0) --blocked_edges_[s];
  }
}

// A slot that lost connectivity kept its last witness, which is valid again
// once the blocking is released.
void SlotGrid::restore(std::size_t checkpoint) {
  while (journal_.size() > checkpoint) {
    const long long slot = journal_.back();
    journal_.pop_back();
    connected_[slot] = 1;
    if (slot >= count_from_ && slot < count_to_) ++counted_connected_;
  }
}

void SlotGrid::refresh(long long slot) {
  bool now;
  if (!bare_connected_) {
    now = false;
  } else if (blocked_edges_[slot] == 0) {
    now = true;
  } else if (path_mode_) {
    now = false;
  } else {
    now = reachable(slot);
  }
  if (now == (connected_[slot] != 0)) return;
  if (!now) journal_.push_back(slot);
  connected_[slot] = now ? 1 : 0;
  if (slot >= count_from_ && slot < count_to_) counted_connected_ += now ? 1 : -1;
}

// BFS over the unblocked edges of `slot`; on success the path found becomes
// the slot's witness.
bool SlotGrid::reachable(long long slot) {
  const std::size_t base = static_cast<std::size_t>(slot) * edges_;
  const std::uint16_t* row = &blocks_[base];
  std::fill(seen_.begin(), seen_.end(), 0);
  queue_.clear();
  queue_.push_back(graph_.source());
  seen_[graph_.source()] = 1;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const std::size_t at = queue_[head];
    if (at == graph_.sink()) {
      std::fill(witness_.begin() + base, witness_.begin() + base + edges_, 0);
      for (std::size_t v = at; v != graph_.source();) {
        const std::size_t e = via_[v];
        witness_[base + e] = 1;
        const auto& ends = graph_.ends(e);
        v = ends.u == v ? ends.v : ends.u;
      }
      return true;
    }
    for (const auto& [next, e] : graph_.neighbours(at)) {
      if (row[e] != 0 || seen_[next]) continue;
      seen_[next] = 1;
      via_[next] = e;
      queue_.push_back(next);
    }
  }
  return false;
}

Rational slot_connected_time(const Instance& instance, const Schedule& schedule,
                             int resolution) {
  SlotGrid grid(instance, resolution);
  for (std::size_t e = 0; e < instance.edges.size(); ++e) {
    const auto it = schedule.find(instance.edges[e].id);
    if (it == schedule.end()) continue;
    for (const Interval& piece : merge_union(it->second)) {
      grid.block(e, grid.to_slot(piece.start), grid.to_slot(piece.end));
    }
  }
  return Rational(grid.counted_connected()) / resolution;
}

std::vector<Placement> contiguous_placements(const Edge& edge, const SlotGrid& grid) {
  const long long length = grid.to_slot(edge.processing);
  if (length == 0) return {Placement{}};
  const long long first = grid.to_slot(edge.release);
  const long long last = grid.to_slot(edge.deadline) - length;
  std::vector<Placement> out;
  for (long long s = first; s <= last; ++s) out.push_back(Placement{{{s, s + length}}});
  return out;
}

std::vector<Placement> unit_slot_placements(const Edge& edge, const SlotGrid& grid) {
  if (!is_integer(edge.processing)) {
    throw ValidationError("edge " + edge.id + " has non-integral processing time");
  }
  const long long need = to_int64(edge.processing);
  if (need == 0) return {Placement{}};
  const long long lo = to_int64(Rational(ceil(edge.release)));
  const long long hi = to_int64(Rational(floor(edge.deadline)));
  const long long q = grid.resolution();
  std::vector<Placement> out;
  std::vector<long long> pick(need);
  for (long long k = 0; k < need; ++k) pick[k] = lo + k;
  if (lo + need > hi) return out;
  for (;;) {
    Placement placement;
    for (long long unit : pick) {
      if (!placement.runs.empty() && placement.runs.back().second == unit * q) {
        placement.runs.back().second += q;
      } else {
        placement.runs.emplace_back(unit * q, (unit + 1) * q);
      }
    }
    out.push_back(std::move(placement));
    long long k = need - 1;
    while (k >= 0 && pick[k] == hi - need + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (long long j = k + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

void apply(SlotGrid& grid, std::size_t edge, const Placement& placement) {
  for (const auto& [from, to] : placement.runs) grid.block(edge, from, to);
}

void revert(SlotGrid& grid, std::size_t edge, const Placement& placement) {
  for (const auto& [from, to] : placement.runs) grid.unblock(edge, from, to);
}

void rollback(SlotGrid& grid, std::size_t edge, const Placement& placement,
              std::size_t checkpoint) {
  for (const auto& [from, to] : placement.runs) grid.release(edge, from, to);
  grid.restore(checkpoint);
}

IntervalSet placement_intervals(const SlotGrid& grid, const Placement& placement) {
  IntervalSet out;
  for (const auto& [from, to] : placement.runs) out.push_back({grid.to_time(from), grid.to_time(to)});
  return out;
}

}  // namespace netmaint
