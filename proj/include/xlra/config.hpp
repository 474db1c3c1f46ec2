#pragma once

namespace xlra {

/// All physical, protocol, and simulation knobs for one cell scenario.
/// Powers and noise are linear watts; dB appears only at the config and
/// reporting boundary.
struct ScenarioConfig {
  double inner_radius_m = 20.0;
  double outer_radius_m = 200.0;
  int total_antennas = 400;      // must be a multiple of subarray_count
  int subarray_count = 10;
  double array_length_m = 40.0;
  double sa_visibility_prob = 0.5;
  double access_prob = 0.01;     // per-block attempt probability of an inactive UE
  int num_ra_pilots = 10;        // pilot count; pilot length equals the count
  double pathloss_exponent = 3.8;
  double ref_pathloss_db = -34.53;
  double shadowing_std_db = 10.0;
  double noise_power_w = 6.3e-13;  // 20 MHz thermal floor + 9 dB noise figure
  double ue_tx_power_w = 0.1;
  double bs_tx_power_w = 0.1;
  double data_tx_power_w = 0.1;
  double decode_threshold_db = 0.0;
  int coherence_block_len = 200;  // channel uses per coherence block
  double coherence_time_s = 1e-3;
  double bandwidth_hz = 2e7;
  int payload_intervals = 10;  // coherence blocks an admitted UE keeps its session
  int max_attempts = 10;
  double backoff_retx_prob = 0.5;
  double sucre_retx_bias = 0.0;  // additive bias in the strongest-user decision

  int antennas_per_subarray() const { return total_antennas / subarray_count; }
  double decode_threshold_linear() const;

  /// Throws std::invalid_argument naming the violated bound.
  void validate() const;
};

}  // namespace xlra
