#include "midpath/gapped.hpp"

#include <algorithm>

namespace midpath {

namespace {

void check_inputs(const Sequence& query, const Sequence& target) {
  if (query.length() == 0 || target.length() == 0)
    throw InvalidParamsError("alignment needs non-empty sequences");
}

}  // namespace

ScoreResult full_affine_score(const Sequence& query, const Sequence& target,
                              const ScoringScheme& scheme) {
  check_inputs(query, target);
  const std::string& q = query.residues;
  const std::string& t = target.residues;
  const std::size_t m = q.size(), n = t.size();
  const long long ins = scheme.insertion_cost;
  const long long ext = scheme.gap_extension;

  // Rolling rows; iq consumes query residues, it_lane consumes target.
  std::vector<long long> best_prev(n + 1), best_cur(n + 1);
  std::vector<long long> iq_prev(n + 1), iq_cur(n + 1);
  std::vector<long long> it_prev(n + 1), it_cur(n + 1);

  best_prev[0] = 0;
  iq_prev[0] = kNegInf;
  it_prev[0] = kNegInf;
  for (std::size_t b = 1; b <= n; ++b) {
    it_prev[b] = -ins - static_cast<long long>(b - 1) * ext;
    best_prev[b] = it_prev[b];
    iq_prev[b] = kNegInf;
  }

  for (std::size_t a = 1; a <= m; ++a) {
    iq_cur[0] = -ins - static_cast<long long>(a - 1) * ext;
    it_cur[0] = kNegInf;
    best_cur[0] = iq_cur[0];
    for (std::size_t b = 1; b <= n; ++b) {
      long long match = best_prev[b - 1] + scheme.score(q[a - 1], t[b - 1]);
      long long iq = std::max(sat_sub(best_prev[b], ins), sat_sub(iq_prev[b], ext));
      long long it_lane =
          std::max(sat_sub(best_cur[b - 1], ins), sat_sub(it_cur[b - 1], ext));
      best_cur[b] = std::max({match, iq, it_lane});
      iq_cur[b] = iq;
      it_cur[b] = it_lane;
    }
    std::swap(best_prev, best_cur);
    std::swap(iq_prev, iq_cur);
    std::swap(it_prev, it_cur);
  }

  ScoreResult result;
  result.score = best_prev[n];
  result.counters = baseline_counters(static_cast<std::uint64_t>(m) * n);
  return result;
}

namespace {

enum Lane : int { kMatch = 0, kIq = 1, kIt = 2 };

}  // namespace

GappedAlignment full_affine_align(const Sequence& query, const Sequence& target,
                                  const ScoringScheme& scheme) {
  check_inputs(query, target);
  const std::string& q = query.residues;
  const std::string& t = target.residues;
  const std::size_t m = q.size(), n = t.size();
  const long long ins = scheme.insertion_cost;
  const long long ext = scheme.gap_extension;

  const std::size_t stride = n + 1;
  auto at = [stride](std::size_t a, std::size_t b) { return a * stride + b; };
  std::vector<long long> M((m + 1) * stride, kNegInf);
  std::vector<long long> IQ((m + 1) * stride, kNegInf);
  std::vector<long long> IT((m + 1) * stride, kNegInf);

  M[at(0, 0)] = 0;
  for (std::size_t a = 1; a <= m; ++a)
    IQ[at(a, 0)] = -ins - static_cast<long long>(a - 1) * ext;
  for (std::size_t b = 1; b <= n; ++b)
    IT[at(0, b)] = -ins - static_cast<long long>(b - 1) * ext;

  for (std::size_t a = 1; a <= m; ++a) {
    for (std::size_t b = 1; b <= n; ++b) {
      std::size_t diag = at(a - 1, b - 1), up = at(a - 1, b), left = at(a, b - 1);
      long long v_diag = std::max({M[diag], IQ[diag], IT[diag]});
      M[at(a, b)] = v_diag == kNegInf
                        ? kNegInf
                        : v_diag + scheme.score(q[a - 1], t[b - 1]);
      IQ[at(a, b)] = std::max({sat_sub(M[up], ins), sat_sub(IT[up], ins),
                               sat_sub(IQ[up], ext)});
      IT[at(a, b)] = std::max({sat_sub(M[left], ins), sat_sub(IQ[left], ins),
                               sat_sub(IT[left], ext)});
    }
  }

  // Tie preference Match > InsertT > InsertQ at every choice point.
  auto pick = [](long long vm, long long vt, long long vq) {
    if (vm >= vt && vm >= vq) return kMatch;
    if (vt >= vq) return kIt;
    return kIq;
  };

  GappedAlignment out;
  std::size_t end = at(m, n);
  int lane = pick(M[end], IT[end], IQ[end]);
  out.score = std::max({M[end], IT[end], IQ[end]});
  out.q_start = 1;
  out.q_end = static_cast<long long>(m);
  out.t_start = 1;
  out.t_end = static_cast<long long>(n);

  std::size_t a = m, b = n;
  std::vector<Step> rev;
  while (a > 0 || b > 0) {
    if (a == 0) {
      rev.push_back(Step::InsertT);
      --b;
      continue;
    }
    if (b == 0) {
      rev.push_back(Step::InsertQ);
      --a;
      continue;
    }
    if (lane == kMatch) {
      rev.push_back(Step::Match);
      std::size_t diag = at(a - 1, b - 1);
      lane = pick(M[diag], IT[diag], IQ[diag]);
      --a;
      --b;
    } else if (lane == kIq) {
      rev.push_back(Step::InsertQ);
      std::size_t up = at(a - 1, b);
      long long here = IQ[at(a, b)];
      if (sat_sub(M[up], ins) == here) lane = kMatch;
      else if (sat_sub(IT[up], ins) == here) lane = kIt;
      else lane = kIq;
      --a;
    } else {
      rev.push_back(Step::InsertT);
      std::size_t left = at(a, b - 1);
      long long here = IT[at(a, b)];
      if (sat_sub(M[left], ins) == here) lane = kMatch;
      else if (sat_sub(IQ[left], ins) == here) lane = kIq;
      else lane = kIt;
      --b;
    }
  }
  out.edit_path.assign(rev.rbegin(), rev.rend());
  return out;
}

}  // namespace midpath
