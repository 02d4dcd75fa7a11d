#ifndef NETMAINT_SLOT_GRID_HPP_
#define NETMAINT_SLOT_GRID_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "netmaint/instance.hpp"
#include "netmaint/schedule.hpp"

namespace netmaint {

// [0,T] cut into slots of width 1/resolution, tracking per slot how many
// placements block each edge and whether s⁺ and s⁻ are connected. Each
// connected slot keeps a witness path; blocking an edge off that path or
// unblocking inside a connected slot needs no search. In path mode a slot is
// connected iff no edge is blocked there.
class SlotGrid {
 public:
  // Requires T·resolution to be an integer.
  SlotGrid(const Instance& instance, int resolution = 1, bool path_mode = false);

  int resolution() const { return resolution_; }
  long long slot_count() const { return slots_; }

  // Grid index of time t. Throws ValidationError when t is off the grid.
  long long to_slot(const Rational& t) const;
  Rational to_time(long long slot) const;

  // Adds or removes one blocking of `edge` over slots [from, to).
  void block(std::size_t edge, long long from, long long to);
  void unblock(std::size_t edge, long long from, long long to);

  // LIFO undo for searches: note checkpoint() before a group of block()
  // calls, then release() the same runs and restore(checkpoint) to return to
  // the earlier state without any reachability search.
  std::size_t checkpoint() const { return journal_.size(); }
  void release(std::size_t edge, long long from, long long to);
  void restore(std::size_t checkpoint);

  bool connected(long long slot) const { return connected_[slot] != 0; }

  // Only slots in [from, to) are counted by counted_connected().
  void set_counting_window(long long from, long long to);
  long long counted_slots() const { return count_to_ - count_from_; }
  long long counted_connected() const { return counted_connected_; }

 private:
  void refresh(long long slot);
  bool reachable(long long slot);

  GraphIndex graph_;
  int resolution_;
  bool path_mode_;
  long long slots_;
  std::size_t edges_;
  bool bare_connected_;
  std::vector<std::uint16_t> blocks_;         // [slot * edges + edge]
  std::vector<std::uint32_t> blocked_edges_;  // per slot, edges with blocks > 0
  std::vector<char> connected_;
  std::vector<char> witness_;                 // [slot * edges + edge]
  std::vector<std::size_t> via_;
  std::vector<long long> journal_;  // slots that went from connected to not
  long long count_from_ = 0;
  long long count_to_ = 0;
  long long counted_connected_ = 0;
  std::vector<std::size_t> queue_;
  std::vector<char> seen_;
};

// Connected time of a feasible schedule measured on the grid: every interval
// endpoint must be a multiple of 1/resolution. Independent of the sweep
// evaluator and used to cross-check it.
Rational slot_connected_time(const Instance& instance, const Schedule& schedule,
                             int resolution = 1);

// One way to place a job: the slot runs [from, to) it blocks.
struct Placement {
  std::vector<std::pair<long long, long long>> runs;
};

// Contiguous placements with start on the grid, earliest first.
std::vector<Placement> contiguous_placements(const Edge& edge, const SlotGrid& grid);

// Placements built from whole unit slots inside the window (preemption only
// at integral times), in lexicographic order of the chosen units.
std::vector<Placement> unit_slot_placements(const Edge& edge, const SlotGrid& grid);

void apply(SlotGrid& grid, std::size_t edge, const Placement& placement);
void revert(SlotGrid& grid, std::size_t edge, const Placement& placement);
// Undo of the most recent apply() made after `checkpoint` was taken.
void rollback(SlotGrid& grid, std::size_t edge, const Placement& placement,
              std::size_t checkpoint);

IntervalSet placement_intervals(const SlotGrid& grid, const Placement& placement);

}  // namespace netmaint

#endif  // NETMAINT_SLOT_GRID_HPP_
