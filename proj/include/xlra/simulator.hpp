#pragma once

#include <cstdint>
#include <vector>

#include "xlra/protocols.hpp"

namespace xlra {

struct BlockRecord {
  long block = 0;
  int active = 0;
  int pdps = 0;
  double ues_per_pdp = 0.0;  // 0 when the pool is empty
  double sum_rate_bps = 0.0;
  int admitted = 0;
  int rejected = 0;
};

/// Running averages over the recorded (post-warm-up) part of a campaign.
/// A UE is resolved when it either gets admitted or exhausts its attempts;
/// the failure statistic and the attempt average run over resolutions.
class MetricsAccumulator {
 public:
  explicit MetricsAccumulator(int max_attempts = 10) : max_attempts_(max_attempts) {}

  void record_resolution(int attempts, bool success);
  void record_block(int active, int pdps, double sum_rate);
  void record_outcome(long block, int ue, bool success);  // feeds the trace hash

  long resolved() const { return successes_ + failures_; }
  long successes() const { return successes_; }
  long failures() const { return failures_; }
  double avg_attempts() const;
  double failure_prob() const;
  double markov_bound() const;  // avg_attempts / max_attempts
  long blocks_recorded() const { return blocks_; }
  double mean_active() const;
  double mean_pdps() const;
  double mean_sum_rate() const;
  /// Active UEs per allocated pdp: ratio of sums over blocks with a nonempty
  /// pool, so a never-sharing protocol reports exactly 1.
  double ues_per_pdp() const;
  std::uint64_t trace_hash() const { return trace_hash_; }

 private:
  int max_attempts_;
  long successes_ = 0;
  long failures_ = 0;
  long attempts_sum_ = 0;
  long blocks_ = 0;
  long active_sum_ = 0;
  long pdp_sum_ = 0;
  long active_sum_nonempty_ = 0;
  long pdp_sum_nonempty_ = 0;
  double sum_rate_sum_ = 0.0;
  std::uint64_t trace_hash_ = 1469598103934665603ull;
};

struct SimulationState {
  Population population;
  PdpPool pool;
  long block = 0;
  Rng rng;
  MetricsAccumulator metrics;
};

/// Advances the simulation by one block: contention, protocol round, state
/// transitions, session countdowns, and (when `record`) metric snapshots.
void run_block(SimulationState& state, const ScenarioConfig& cfg, Protocol protocol,
               bool record, std::vector<BlockRecord>* records = nullptr);

/// Runs a fresh campaign of `n_blocks` blocks over `k` UEs; the first `warmup`
/// blocks are excluded from steady-state metrics. Deterministic given the seed.
MetricsAccumulator run_campaign(const ScenarioConfig& cfg, int k, long n_blocks,
                                long warmup, Protocol protocol, std::uint64_t seed,
                                std::vector<BlockRecord>* records = nullptr);

}  // namespace xlra
