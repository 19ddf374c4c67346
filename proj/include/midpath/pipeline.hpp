#pragma once

#include <optional>
#include <string>
#include <vector>

#include "midpath/gapped.hpp"
#include "midpath/middle_path.hpp"
#include "midpath/scoring.hpp"
#include "midpath/seeding.hpp"
#include "midpath/seqio.hpp"
#include "midpath/ungapped.hpp"

namespace midpath {

struct PipelineConfig {
  ScoringScheme scheme;
  SeedingParams seeding;
  ExtensionParams extension;
  EvalueParams evalue;
  // Engaged: HSPs are triaged through the restricted DP and only FullGapped
  // decisions reach the affine aligner.  Empty: classic mode, every HSP is
  // gapped.
  std::optional<MiddlePathParams> middle_path = MiddlePathParams{};
  long long window_margin = 10;
};

enum class Stage { UngappedOnly, MiddlePathDirect, FullGapped };

struct HitRecord {
  std::string query_id;
  std::string target_id;
  Hsp hsp;
  std::optional<long long> mp_score;          // absent in classic mode
  std::optional<TriageDecision> decision;     // absent in classic mode
  long long final_score = 0;
  double evalue = 0.0;
  Stage stage = Stage::FullGapped;
};

struct RunStats {
  std::uint64_t hsps_total = 0;
  std::uint64_t routed_direct = 0;
  std::uint64_t routed_gapped = 0;
  std::uint64_t routed_below = 0;
  OpCounters mp_counters;              // restricted-DP work actually done
  OpCounters gapped_counters;          // affine-DP work actually done
  OpCounters classic_gapped_counters;  // cost had every HSP been gapped

  double skip_fraction() const {
    return hsps_total == 0
               ? 0.0
               : static_cast<double>(routed_direct + routed_below) /
                     static_cast<double>(hsps_total);
  }

  RunStats& operator+=(const RunStats& other);
};

struct SearchResult {
  std::vector<HitRecord> records;
  RunStats stats;
};

// Seeds, extends, dedupes and scores every (query, target) pair, then
// filters by e-value, orders records (per query: ascending evalue, then
// descending final score, then target id and coordinates) and truncates to
// max_display per query.  Pairs are independent; threads > 1 runs them on
// an OpenMP loop with results merged in pair order, so output is identical
// to the serial path.
SearchResult search(const std::vector<Sequence>& queries,
                    const std::vector<Sequence>& targets,
                    const PipelineConfig& config, int threads = 1);

// The serial reference for the OpenMP path above.
SearchResult search_serial(const std::vector<Sequence>& queries,
                           const std::vector<Sequence>& targets,
                           const PipelineConfig& config);

struct ModeComparison {
  SearchResult mp;       // middle-path run
  SearchResult classic;  // all-gapped run
  std::uint64_t shared_hits = 0;
  std::uint64_t lost_vs_classic = 0;    // classic hits absent from mp output
  std::uint64_t gained_vs_classic = 0;  // mp hits absent from classic output
  std::uint64_t mp_total_ops = 0;       // restricted DP + conditional gapped
  std::uint64_t classic_total_ops = 0;
  std::optional<double> reduction_fraction;  // 1 - mp/classic; empty when 0/0
};

// Runs the same inputs in middle-path and classic mode and reports hit-set
// agreement plus counted-operation totals.
ModeComparison compare_modes(const std::vector<Sequence>& queries,
                             const std::vector<Sequence>& targets,
                             PipelineConfig config, int threads = 1);

}  // namespace midpath
