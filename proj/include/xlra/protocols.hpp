#pragma once

#include <array>
#include <string>
#include <string_view>

#include "xlra/analytics.hpp"
#include "xlra/scheduler.hpp"

namespace xlra {

enum class Protocol { NovrXl, SucreXl, MSucreXl };

/// Accepts "novr-xl" | "sucre-xl" | "msucre-xl". Throws std::invalid_argument
/// otherwise.
Protocol parse_protocol(std::string_view name);
std::string_view protocol_name(Protocol p);

/// Channel uses spent per access attempt, independent of the attempt outcome.
int ra_overhead(Protocol p, int tau_ra, int subarrays);

/// Per-step channel-use composition behind ra_overhead. Steps a protocol does
/// not have are zero.
std::array<int, 4> overhead_steps(Protocol p, int tau_ra, int subarrays);

/// Field widths (bits) behind the overhead accounting, at unit MCS spectral
/// efficiency (1 bit per channel use).
struct OverheadFields {
  static constexpr int ra_rnti = 16;
  static constexpr int timing_advance = 8;
  static constexpr int c_rnti = 16;
  static constexpr int contention_resolution = 48;
  static constexpr int ue_id = 16;
};

/// Draws this block's transmitters: every Inactive UE attempts with
/// access_prob, every Backoff UE retransmits with backoff_retx_prob, each
/// picking a pilot uniformly. Increments the attempt counter of every
/// transmitter and stamps chosen_pilot.
RaBlockState form_contention(Population& pop, const ScenarioConfig& cfg, Rng& rng);

struct RoundOutcome {
  std::vector<int> admitted;  // ue ids, ascending; pool holds their pdp
  std::vector<int> rejected;  // transmitters whose attempt failed, ascending
};

/// Runs one protocol round over the formed contention sets. Admitted UEs hold
/// a pdp in `pool` when this returns; failed attempts leave the pool untouched.
RoundOutcome run_round(Protocol p, RaBlockState& block, const Population& pop,
                       PdpPool& pool, const ScenarioConfig& cfg);

}  // namespace xlra
