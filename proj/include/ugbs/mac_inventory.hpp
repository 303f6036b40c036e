#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "ugbs/errors.hpp"
#include "ugbs/rng.hpp"

namespace ugbs {

struct InventoryResult {
  std::vector<int> identified;  // tag ids, in order of identification
  long slots_used = 0;
  long collisions = 0;
  long idle_slots = 0;
  long rounds = 0;
  bool truncated = false;  // slot budget ran out with tags left

  long successes() const { return static_cast<long>(identified.size()); }
};

/// Q-protocol bookkeeping: floating Q value, current frame, round counter.
struct QState {
  double q = 4.0;
  long frame_size() const { return 1L << std::lround(q); }
  long round_index = 1;
};

// Q adjustment step per collision/idle slot (EPC C1G2 style).
inline constexpr double kQAdjustStep = 0.3;
inline constexpr double kQMin = 0.0;
inline constexpr double kQMax = 15.0;

enum class Scheme { Fsa, Q };

namespace detail {

// One FSA frame over `remaining`, truncated to `slot_budget` slots. Tags in
// singleton slots are appended to `result.identified` and erased.
inline void fsa_frame(std::vector<int>& remaining, int frame_size,
                      long slot_budget, Rng& rng, InventoryResult& result) {
  std::vector<int> occupancy(static_cast<std::size_t>(frame_size), 0);
  std::vector<int> winner(static_cast<std::size_t>(frame_size), -1);
  for (int tag : remaining) {
    const auto slot = static_cast<std::size_t>(
        bounded_uniform(rng, static_cast<std::uint64_t>(frame_size)));
    ++occupancy[slot];
    winner[slot] = tag;
  }
  const long slots = std::min<long>(frame_size, slot_budget);
  for (long s = 0; s < slots; ++s) {
    const auto idx = static_cast<std::size_t>(s);
    ++result.slots_used;
    if (occupancy[idx] == 0) {
      ++result.idle_slots;
    } else if (occupancy[idx] == 1) {
      result.identified.push_back(winner[idx]);
      std::erase(remaining, winner[idx]);
    } else {
      ++result.collisions;
    }
  }
  ++result.rounds;
}

// Slot-by-slot Q-protocol over `remaining` tag ids:
//   - every unidentified tag holds a slot counter drawn uniformly from
//     [0, 2^Q - 1] with Q = lround(q); counters are redrawn by all tags
//     whenever Q changes (a new round), and by the colliding tags right
//     after a collision;
//   - tags transmit at counter zero; a lone transmitter is identified and
//     leaves, everyone else decrements each slot;
//   - idle slots lower q by the adjustment step, collisions raise it,
//     successes leave it unchanged; q stays within [0, 15].
inline InventoryResult q_inventory(std::vector<int> remaining, double q_init,
                                   long max_slots, Rng& rng) {
  InventoryResult result;
  QState state;
  state.q = q_init;
  long q_int = std::lround(q_init);
  std::vector<long> counters(remaining.size(), 0);

  const auto redraw_all = [&] {
    const auto frame = static_cast<std::uint64_t>(1) << q_int;
    for (auto& counter : counters)
      counter = static_cast<long>(bounded_uniform(rng, frame));
  };
  redraw_all();
  result.rounds = 1;

  for (;;) {
    std::size_t transmitters = 0;
    std::size_t last_zero = 0;
    for (std::size_t i = 0; i < counters.size(); ++i) {
      if (counters[i] == 0) {
        ++transmitters;
        last_zero = i;
      }
    }
    ++result.slots_used;
    if (transmitters == 0) {
      ++result.idle_slots;
      state.q = std::max(kQMin, state.q - kQAdjustStep);
    } else if (transmitters == 1) {
      result.identified.push_back(remaining[last_zero]);
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(last_zero));
      counters.erase(counters.begin() + static_cast<std::ptrdiff_t>(last_zero));
    } else {
      ++result.collisions;
      state.q = std::min(kQMax, state.q + kQAdjustStep);
    }
    if (remaining.empty()) break;
    if (result.slots_used >= max_slots) {
      result.truncated = true;
      break;
    }
    const long new_q_int = std::lround(state.q);
    if (new_q_int != q_int) {
      q_int = new_q_int;
      redraw_all();
      ++result.rounds;
    } else {
      const auto frame = static_cast<std::uint64_t>(1) << q_int;
      for (auto& counter : counters) {
        if (counter == 0)
          counter = static_cast<long>(bounded_uniform(rng, frame));  // collided
        else
          --counter;
      }
    }
  }
  return result;
}

}  // namespace detail

/// One frame of framed slotted ALOHA: each tag picks a slot uniformly,
/// singleton slots succeed.
inline InventoryResult framed_slotted_aloha(int n_tags, int frame_size,
                                            std::uint64_t seed) {
  if (n_tags < 0) throw ConfigError("fsa: tag count must be >= 0");
  if (frame_size < 1) throw ConfigError("fsa: frame size must be >= 1");
  Rng rng(seed);
  std::vector<int> tags(static_cast<std::size_t>(n_tags));
  std::iota(tags.begin(), tags.end(), 0);
  InventoryResult result;
  detail::fsa_frame(tags, frame_size, frame_size, rng, result);
  return result;
}

/// Expected singleton count of one FSA frame: n * (1 - 1/F)^(n-1).
inline double expected_successes(int n_tags, int frame_size) {
  if (n_tags < 0) throw ConfigError("fsa: tag count must be >= 0");
  if (frame_size < 1) throw ConfigError("fsa: frame size must be >= 1");
  if (n_tags == 0) return 0.0;
  return n_tags * std::pow(1.0 - 1.0 / frame_size, n_tags - 1);
}

/// Multi-round Q-protocol inventory; runs until every tag is identified or
/// the slot budget is exhausted (truncation is reported, not thrown).
inline InventoryResult q_protocol_inventory(int n_tags, double q_init,
                                            long max_slots, std::uint64_t seed) {
  if (n_tags < 0) throw ConfigError("q-protocol: tag count must be >= 0");
  if (!(q_init >= kQMin && q_init <= kQMax))
    throw ConfigError("q-protocol: q_init must be in [0,15]");
  if (max_slots < 1) throw ConfigError("q-protocol: max_slots must be >= 1");
  Rng rng(seed);
  std::vector<int> tags(static_cast<std::size_t>(n_tags));
  std::iota(tags.begin(), tags.end(), 0);
  return detail::q_inventory(std::move(tags), q_init, max_slots, rng);
}

/// Scheme parameters for windowed inventories.
struct WindowOptions {
  Scheme scheme = Scheme::Q;
  int fsa_frame_size = 8;
  double q_init = 3.0;
};

/// Truncated inventory over explicit tag ids; the dwell-window primitive.
/// Identified ids are returned in identification order.
inline std::vector<int> inventory_window_ids(std::span<const int> participants,
                                             long window_slots,
                                             const WindowOptions& options,
                                             std::uint64_t seed) {
  if (window_slots < 0) throw ConfigError("inventory window must be >= 0 slots");
  if (window_slots == 0 || participants.empty()) return {};
  Rng rng(seed);
  std::vector<int> remaining(participants.begin(), participants.end());
  if (options.scheme == Scheme::Q) {
    return detail::q_inventory(std::move(remaining), options.q_init, window_slots,
                               rng)
        .identified;
  }
  InventoryResult result;
  long budget = window_slots;
  while (budget > 0 && !remaining.empty()) {
    detail::fsa_frame(remaining, options.fsa_frame_size, budget, rng, result);
    budget = window_slots - result.slots_used;
  }
  return result.identified;
}

/// Count of tags identified within a slot window.
inline int inventory_within_window(int participants, long window_slots,
                                   Scheme scheme, std::uint64_t seed,
                                   WindowOptions options = {}) {
  if (participants < 0) throw ConfigError("inventory: participants must be >= 0");
  options.scheme = scheme;
  std::vector<int> ids(static_cast<std::size_t>(participants));
  std::iota(ids.begin(), ids.end(), 0);
  return static_cast<int>(
      inventory_window_ids(ids, window_slots, options, seed).size());
}

}  // namespace ugbs
