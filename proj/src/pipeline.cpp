#include "midpath/pipeline.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace midpath {

RunStats& RunStats::operator+=(const RunStats& other) {
  hsps_total += other.hsps_total;
  routed_direct += other.routed_direct;
  routed_gapped += other.routed_gapped;
  routed_below += other.routed_below;
  mp_counters += other.mp_counters;
  gapped_counters += other.gapped_counters;
  classic_gapped_counters += other.classic_gapped_counters;
  return *this;
}

namespace {

struct PairResult {
  std::vector<HitRecord> records;
  RunStats stats;
};

struct Window {
  long long q_start, q_end, t_start, t_end;
};

Window hsp_window(const Hsp& hsp, const Sequence& query, const Sequence& target,
                  long long margin) {
  return {std::max<long long>(1, hsp.q_start - margin),
          std::min<long long>(query.length(), hsp.q_end + margin),
          std::max<long long>(1, hsp.t_start - margin),
          std::min<long long>(target.length(), hsp.t_end + margin)};
}

// One (query, target) pair through seeding, extension and scoring.  Pure
// function of its inputs; safe to run pairs concurrently.
PairResult process_pair(const Sequence& query, const Sequence& target,
                        const PipelineConfig& config) {
  PairResult out;
  if (query.length() < config.seeding.word_length ||
      target.length() < config.seeding.word_length)
    return out;

  std::vector<SeedHit> hits = find_word_hits(query, target, config.seeding);
  std::vector<SeedPair> pairs = pair_two_hits(hits, config.seeding);

  std::vector<Hsp> hsps;
  for (const SeedPair& pair : pairs) {
    std::optional<Hsp> hsp = extend_ungapped(pair, config.seeding.word_length, query,
                                             target, config.scheme, config.extension);
    if (hsp) hsps.push_back(*hsp);
  }
  hsps = dedupe_hsps(std::move(hsps));

  out.stats.hsps_total = hsps.size();
  for (const Hsp& hsp : hsps) {
    Window w = hsp_window(hsp, query, target, config.window_margin);
    std::uint64_t window_cells =
        static_cast<std::uint64_t>(w.q_end - w.q_start + 1) *
        static_cast<std::uint64_t>(w.t_end - w.t_start + 1);
    out.stats.classic_gapped_counters += baseline_counters(window_cells);

    HitRecord record;
    record.query_id = query.id;
    record.target_id = target.id;
    record.hsp = hsp;

    if (config.middle_path) {
      MiddlePathOutcome outcome =
          run_middle_path(hsp, query, target, config.scheme, *config.middle_path,
                          config.extension.s1, config.window_margin);
      out.stats.mp_counters += outcome.counters;
      record.mp_score = outcome.score;
      record.decision = outcome.decision;
      switch (outcome.decision) {
        case TriageDecision::AcceptDirect: {
          ++out.stats.routed_direct;
          record.final_score = outcome.score;
          record.stage = Stage::MiddlePathDirect;
          break;
        }
        case TriageDecision::FullGapped: {
          ++out.stats.routed_gapped;
          Sequence qw = subsequence(query, w.q_start, w.q_end);
          Sequence tw = subsequence(target, w.t_start, w.t_end);
          ScoreResult gapped = full_affine_score(qw, tw, config.scheme);
          out.stats.gapped_counters += gapped.counters;
          record.final_score = gapped.score;
          record.stage = Stage::FullGapped;
          break;
        }
        case TriageDecision::BelowCutoff: {
          ++out.stats.routed_below;
          if (config.middle_path->below_cutoff_policy == BelowCutoffPolicy::Reject)
            continue;
          record.final_score = hsp.score;
          record.stage = Stage::UngappedOnly;
          break;
        }
      }
    } else {
      ++out.stats.routed_gapped;
      Sequence qw = subsequence(query, w.q_start, w.q_end);
      Sequence tw = subsequence(target, w.t_start, w.t_end);
      ScoreResult gapped = full_affine_score(qw, tw, config.scheme);
      out.stats.gapped_counters += gapped.counters;
      record.final_score = gapped.score;
      record.stage = Stage::FullGapped;
    }

    record.evalue =
        evalue(record.final_score, query.length(), target.length(), config.evalue)
            .evalue;
    out.records.push_back(std::move(record));
  }
  return out;
}

SearchResult assemble(const std::vector<Sequence>& queries,
                      std::vector<PairResult>& pair_results,
                      const PipelineConfig& config) {
  SearchResult result;
  for (PairResult& pr : pair_results) {
    result.stats += pr.stats;
    for (HitRecord& r : pr.records) result.records.push_back(std::move(r));
  }

  std::erase_if(result.records, [&](const HitRecord& r) {
    return r.evalue > config.evalue.e_max;
  });

  // Query blocks follow input order; within a block the best e-value wins.
  std::map<std::string, std::size_t> query_rank;
  for (std::size_t i = 0; i < queries.size(); ++i)
    query_rank.emplace(queries[i].id, i);
  std::sort(result.records.begin(), result.records.end(),
            [&](const HitRecord& x, const HitRecord& y) {
              std::size_t rx = query_rank.at(x.query_id), ry = query_rank.at(y.query_id);
              if (rx != ry) return rx < ry;
              if (x.evalue != y.evalue) return x.evalue < y.evalue;
              if (x.final_score != y.final_score) return x.final_score > y.final_score;
              return std::tie(x.target_id, x.hsp.q_start, x.hsp.t_start) <
                     std::tie(y.target_id, y.hsp.q_start, y.hsp.t_start);
            });

  if (config.evalue.max_display > 0) {
    std::vector<HitRecord> trimmed;
    trimmed.reserve(result.records.size());
    std::map<std::string, std::size_t> shown;
    for (HitRecord& r : result.records)
      if (shown[r.query_id]++ < config.evalue.max_display)
        trimmed.push_back(std::move(r));
    result.records = std::move(trimmed);
  }
  return result;
}

}  // namespace

SearchResult search_serial(const std::vector<Sequence>& queries,
                           const std::vector<Sequence>& targets,
                           const PipelineConfig& config) {
  std::vector<PairResult> pair_results(queries.size() * targets.size());
  for (std::size_t qi = 0; qi < queries.size(); ++qi)
    for (std::size_t ti = 0; ti < targets.size(); ++ti)
      pair_results[qi * targets.size() + ti] =
          process_pair(queries[qi], targets[ti], config);
  return assemble(queries, pair_results, config);
}

SearchResult search(const std::vector<Sequence>& queries,
                    const std::vector<Sequence>& targets,
                    const PipelineConfig& config, int threads) {
  if (threads < 1) throw InvalidParamsError("threads must be >= 1");
  if (threads == 1) return search_serial(queries, targets, config);

  const std::int64_t n_pairs =
      static_cast<std::int64_t>(queries.size()) * static_cast<std::int64_t>(targets.size());
  std::vector<PairResult> pair_results(n_pairs);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < n_pairs; ++i) {
    std::size_t qi = static_cast<std::size_t>(i) / targets.size();
    std::size_t ti = static_cast<std::size_t>(i) % targets.size();
    pair_results[i] = process_pair(queries[qi], targets[ti], config);
  }
  return assemble(queries, pair_results, config);
}

ModeComparison compare_modes(const std::vector<Sequence>& queries,
                             const std::vector<Sequence>& targets,
                             PipelineConfig config, int threads) {
  ModeComparison cmp;
  PipelineConfig mp_config = config;
  if (!mp_config.middle_path) mp_config.middle_path = MiddlePathParams{};
  PipelineConfig classic_config = config;
  classic_config.middle_path.reset();

  cmp.mp = search(queries, targets, mp_config, threads);
  cmp.classic = search(queries, targets, classic_config, threads);

  auto key = [](const HitRecord& r) {
    return std::tuple(r.query_id, r.target_id, r.hsp.q_start, r.hsp.q_end,
                      r.hsp.t_start, r.hsp.t_end);
  };
  std::set<std::tuple<std::string, std::string, long long, long long, long long,
                      long long>>
      mp_keys, classic_keys;
  for (const HitRecord& r : cmp.mp.records) mp_keys.insert(key(r));
  for (const HitRecord& r : cmp.classic.records) classic_keys.insert(key(r));
  for (const auto& k : classic_keys)
    mp_keys.count(k) ? ++cmp.shared_hits : ++cmp.lost_vs_classic;
  for (const auto& k : mp_keys)
    if (!classic_keys.count(k)) ++cmp.gained_vs_classic;

  cmp.mp_total_ops =
      cmp.mp.stats.mp_counters.total() + cmp.mp.stats.gapped_counters.total();
  cmp.classic_total_ops = cmp.classic.stats.gapped_counters.total();
  if (cmp.classic_total_ops > 0)
    cmp.reduction_fraction = 1.0 - static_cast<double>(cmp.mp_total_ops) /
                                       static_cast<double>(cmp.classic_total_ops);
  return cmp;
}

}  // namespace midpath
