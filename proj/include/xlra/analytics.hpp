#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "xlra/scenario.hpp"

namespace xlra {

/// State of one random-access block: who transmitted which pilot, who was
/// decoded where, and the hardening constants the downlink response needs.
///
/// `contention[t]` holds the UE ids transmitting pilot t (ascending).
/// For the four-step protocols `retx[t]` holds the subset that retransmits;
/// decode and response stages then operate on `retx` instead of `contention`.
struct RaBlockState {
  std::vector<std::vector<int>> contention;
  std::vector<std::vector<int>> retx;
  std::vector<int> all_tx;  // every UE that transmitted a pilot this block (ascending)

  // Filled by the decode stage.
  std::vector<int> candidates;      // UEs decoded at one or more subarrays (ascending)
  std::vector<int> candidate_pilot;
  std::vector<std::vector<std::uint8_t>> decode;      // per candidate, per subarray
  std::vector<std::vector<std::uint8_t>> visibility;  // per candidate, per subarray
  std::vector<double> alpha_sq;   // [pilot * B + sa], hardening-limit estimate energy
  std::vector<int> precoded_count;  // per subarray: candidates precoded there

  const std::vector<std::vector<int>>& decode_sets() const {
    return retx.empty() ? contention : retx;
  }
  double alpha_squared_at(int pilot, int sa) const;
  /// Column of a UE in the candidate list, or -1.
  int candidate_col(int ue) const;
};

/// Probability that a subarray is visible to a tagged UE and to none of its
/// n-1 pilot contenders: P_b (1-P_b)^(n-1). Throws std::domain_error for n < 1.
double p_exclusive_sa(double p_b, int contenders);

/// Probability that at least one of B subarrays is exclusively visible:
/// 1 - (1 - p_exclusive_sa)^B.
double p_exclusive_any(double p_b, int contenders, int subarrays);

/// Uplink SINR of the step-1 message of UE `ue` at subarray `sa`, with
/// `copilot` the UEs sharing its pilot and `all_tx` every transmitter counted
/// in the wideband received power. Returns 0 when the subarray is blocked.
double ul_sinr_step1(const Population& pop, int ue, const std::vector<int>& copilot,
                     const std::vector<int>& all_tx, int sa, const ScenarioConfig& cfg);

/// Collapsed form of ul_sinr_step1 for a subarray visible to `ue` alone among
/// its contenders.
double ul_sinr_exclusive(const Population& pop, int ue, const std::vector<int>& all_tx,
                         int sa, const ScenarioConfig& cfg);

/// Hardening limit of the normalized pilot-estimate energy at one subarray:
/// sum over contenders of rho*tau*beta plus noise.
double alpha_squared(const Population& pop, const std::vector<int>& copilot, int sa,
                     const ScenarioConfig& cfg);

/// UEs whose downlink response from subarray `sa` is partially beamformed
/// toward `ue`: same pilot, both visible at `sa`, and decoded there.
std::vector<int> interference_set(const RaBlockState& block, const Population& pop,
                                  int ue, int sa);

/// Downlink SINR of the step-2 response received by candidate `ue`. Subarrays
/// precoding nobody contribute nothing. Throws std::domain_error if `ue` is
/// not a candidate.
double dl_sinr_step2(const RaBlockState& block, const Population& pop, int ue,
                     const ScenarioConfig& cfg);

/// Zero-forcing data SINR of an active UE against the rest of the active set.
/// Throws std::domain_error if any active UE has an all-zero gain profile.
double zf_data_sinr(const Population& pop, int ue, const std::vector<int>& active,
                    const ScenarioConfig& cfg);

/// Zero-forcing data SINRs for every UE in `active`, computed in O(|active|*B).
std::vector<double> zf_data_sinr_all(const Population& pop, const std::vector<int>& active,
                                     const ScenarioConfig& cfg);

/// Spectral efficiency of one session: access-overhead and training-overhead
/// prelog factors times log2(1+sinr). Throws std::domain_error when tau_pd
/// exceeds the coherence block or the attempt/interval counts are nonpositive.
double spectral_efficiency(int mu_ra, int mu_pd, int phi_ra, int tau_pd,
                           const ScenarioConfig& cfg, double sinr);

/// Bandwidth times the sum of per-UE spectral efficiencies.
double sum_rate_bps(const std::vector<double>& rates, double bandwidth_hz);

/// One tagged subarray of a small decode instance: per-UE powers and gains,
/// which UEs share the tagged pilot, and which UE the estimate serves.
struct TermPowerInstance {
  int m_b = 1;
  double tau = 1.0;
  double noise_power = 0.0;
  int tagged = 0;
  std::vector<double> rho;
  std::vector<double> beta;
  std::vector<std::uint8_t> copilot;  // 1 if the UE shares the tagged pilot
};

struct TermPower {
  double mean_sq = 0.0;
  double variance = 0.0;
};

/// Closed-form (squared coherent mean, variance) of the six terms of the
/// expanded step-1 decode expression.
std::array<TermPower, 6> expected_term_powers(const TermPowerInstance& inst);

}  // namespace xlra
