#include "oracle.hpp"

#include <algorithm>

#include "midpath/gapped.hpp"

namespace oracle {

namespace {

// last_op: 0 none/match, 1 in a target-consuming gap, 2 in a query-consuming
// gap.  Gap costs depend on whether the previous op continues the run.
long long enumerate(const std::string& q, const std::string& t, std::size_t a,
                    std::size_t b, int last_op, const midpath::ScoringScheme& s) {
  if (a == q.size() && b == t.size()) return 0;
  long long best = midpath::kNegInf;
  if (a < q.size() && b < t.size()) {
    long long rest = enumerate(q, t, a + 1, b + 1, 0, s);
    best = std::max(best, rest + s.score(q[a], t[b]));
  }
  if (b < t.size()) {
    long long cost = last_op == 1 ? s.gap_extension : s.insertion_cost;
    best = std::max(best, enumerate(q, t, a, b + 1, 1, s) - cost);
  }
  if (a < q.size()) {
    long long cost = last_op == 2 ? s.gap_extension : s.insertion_cost;
    best = std::max(best, enumerate(q, t, a + 1, b, 2, s) - cost);
  }
  return best;
}

}  // namespace

long long enumerate_affine_best(const std::string& q, const std::string& t,
                                const midpath::ScoringScheme& scheme) {
  return enumerate(q, t, 0, 0, 0, scheme);
}

midpath::Hsp best_diagonal_segment(const std::string& q, const std::string& t,
                                   long long q_lo, long long q_hi, long long t_lo,
                                   const midpath::ScoringScheme& scheme) {
  long long diag = t_lo - q_lo;
  long long m = static_cast<long long>(q.size());
  long long n = static_cast<long long>(t.size());
  long long start_min = std::max<long long>(1, 1 - diag);
  long long end_max = std::min(m, n - diag);

  midpath::Hsp best;
  bool have = false;
  for (long long qs = start_min; qs <= q_lo; ++qs) {
    long long score = 0;
    for (long long pos = qs; pos < q_lo; ++pos)
      score += scheme.score(q[pos - 1], t[pos + diag - 1]);
    for (long long qe = q_lo; qe <= end_max; ++qe) {
      score += scheme.score(q[qe - 1], t[qe + diag - 1]);
      if (qe < q_hi) continue;
      bool better = !have || score > best.score ||
                    (score == best.score &&
                     (qe - qs) < (best.q_end - best.q_start));
      if (better) {
        best = {qs, qe, qs + diag, qe + diag, score};
        have = true;
      }
    }
  }
  return best;
}

std::vector<midpath::SeedHit> naive_word_hits(const std::string& q,
                                              const std::string& t, std::size_t w) {
  std::vector<midpath::SeedHit> hits;
  for (std::size_t i = 0; i + w <= q.size(); ++i)
    for (std::size_t j = 0; j + w <= t.size(); ++j)
      if (q.compare(i, w, t, j, w) == 0) {
        long long qp = static_cast<long long>(i) + 1;
        long long tp = static_cast<long long>(j) + 1;
        hits.push_back({qp, tp, tp - qp});
      }
  std::sort(hits.begin(), hits.end(),
            [](const midpath::SeedHit& a, const midpath::SeedHit& b) {
              if (a.diagonal != b.diagonal) return a.diagonal < b.diagonal;
              return a.q_pos < b.q_pos;
            });
  return hits;
}

long long replay_path_score(const std::string& q, const std::string& t,
                            const std::vector<int>& steps,
                            const midpath::ScoringScheme& scheme) {
  long long score = 0;
  std::size_t a = 0, b = 0;
  int prev = -1;
  for (int step : steps) {
    if (step == 0) {
      score += scheme.score(q[a], t[b]);
      ++a;
      ++b;
    } else if (step == 1) {
      score -= prev == 1 ? scheme.gap_extension : scheme.insertion_cost;
      ++b;
    } else {
      score -= prev == 2 ? scheme.gap_extension : scheme.insertion_cost;
      ++a;
    }
    prev = step;
  }
  if (a != q.size() || b != t.size()) return midpath::kNegInf;
  return score;
}

}  // namespace oracle
