#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "midpath/errors.hpp"
#include "midpath/op_counters.hpp"

namespace midpath {

// Closed-form per-cell operation averages for an m x n restricted DP at a
// given insertion step.  With R = floor(m/N), C = floor(n/N):
//   Case4 cells: R*C        Case3: R*(n-C)
//   Case2: (m-R)*C          Case1: (m-R)*(n-C)
struct OpCountReport {
  std::uint64_t m = 0, n = 0;
  int n_step = 1;
  double comparisons_per_cell = 0.0;
  double arithmetic_per_cell = 0.0;
  double total_per_cell = 0.0;       // comparisons + arithmetic + 1 overhead
  double improvement_percent = 0.0;  // over the flat 11-per-cell baseline
};

OpCountReport analytic_counts(std::uint64_t m, std::uint64_t n, int n_step);

// Exact integer case counts behind analytic_counts.
std::array<std::uint64_t, 4> analytic_case_counts(std::uint64_t m, std::uint64_t n,
                                                  int n_step);

std::vector<OpCountReport> sweep_matrix_sizes(const std::vector<std::uint64_t>& sizes,
                                              int n_step);
std::vector<OpCountReport> sweep_n_values(std::uint64_t size,
                                          const std::vector<int>& n_values);

// True iff the instrumented counters agree exactly with the closed form for
// the report's dimensions (integer comparison throughout).  Throws
// DimensionMismatchError when the counters cover a different cell count.
bool verify_counts(const OpCountReport& report, const OpCounters& counters);

// Previously reported per-cell averages for selected (m, n, n_step)
// combinations.  Rows where the closed form disagrees beyond 2% on any
// column get a deviation note in emitted CSVs instead of being adjusted.
struct ReferenceRow {
  double comparisons, arithmetic, total, improvement;
};
std::optional<ReferenceRow> reference_row(std::uint64_t m, std::uint64_t n, int n_step);
std::string deviation_note(const OpCountReport& report);

// CSV: m,n,N,comparisons_per_cell,arithmetic_per_cell,total_per_cell,
// improvement_percent,deviation_note -- reals with 4 decimal places.
void write_csv(const std::vector<OpCountReport>& reports, std::ostream& out);

// Share of total pipeline time saved when `skip_fraction` of the gapped
// stage is avoided at a relative triage overhead of mp_overhead_fraction:
// gapped_share * (skip_fraction - mp_overhead_fraction), clamped below at
// -gapped_share * mp_overhead_fraction.
struct SavingsModel {
  double gapped_share = 1.0 / 3.0;
  double skip_fraction = 0.5;
  double mp_overhead_fraction = 0.125;
};
double estimate_pipeline_saving(const SavingsModel& model);

}  // namespace midpath
