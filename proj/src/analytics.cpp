#include "midpath/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace midpath {

std::array<std::uint64_t, 4> analytic_case_counts(std::uint64_t m, std::uint64_t n,
                                                  int n_step) {
  if (n_step < 1) throw InvalidParamsError("n_step must be >= 1");
  if (m == 0 || n == 0) throw InvalidParamsError("matrix dimensions must be >= 1");
  std::uint64_t step = static_cast<std::uint64_t>(n_step);
  std::uint64_t r = m / step;  // insertion-eligible rows
  std::uint64_t c = n / step;  // insertion-eligible columns
  std::array<std::uint64_t, 4> cases = {};
  cases[static_cast<int>(CellCase::Case1)] = (m - r) * (n - c);
  cases[static_cast<int>(CellCase::Case2)] = (m - r) * c;
  cases[static_cast<int>(CellCase::Case3)] = r * (n - c);
  cases[static_cast<int>(CellCase::Case4)] = r * c;
  return cases;
}

OpCountReport analytic_counts(std::uint64_t m, std::uint64_t n, int n_step) {
  std::array<std::uint64_t, 4> cases = analytic_case_counts(m, n, n_step);
  OpCounters counters = counters_from_cases(cases);
  double cells = static_cast<double>(m) * static_cast<double>(n);
  OpCountReport report;
  report.m = m;
  report.n = n;
  report.n_step = n_step;
  report.comparisons_per_cell = static_cast<double>(counters.comparisons) / cells;
  report.arithmetic_per_cell = static_cast<double>(counters.arithmetic) / cells;
  report.total_per_cell =
      report.comparisons_per_cell + report.arithmetic_per_cell + 1.0;
  double baseline = static_cast<double>(kBaselineCharge.comparisons +
                                        kBaselineCharge.arithmetic + 1);
  report.improvement_percent =
      100.0 * (baseline - report.total_per_cell) / baseline;
  return report;
}

std::vector<OpCountReport> sweep_matrix_sizes(const std::vector<std::uint64_t>& sizes,
                                              int n_step) {
  std::vector<OpCountReport> out;
  out.reserve(sizes.size());
  for (std::uint64_t s : sizes) out.push_back(analytic_counts(s, s, n_step));
  return out;
}

std::vector<OpCountReport> sweep_n_values(std::uint64_t size,
                                          const std::vector<int>& n_values) {
  std::vector<OpCountReport> out;
  out.reserve(n_values.size());
  for (int n_step : n_values) out.push_back(analytic_counts(size, size, n_step));
  return out;
}

bool verify_counts(const OpCountReport& report, const OpCounters& counters) {
  std::uint64_t cells = report.m * report.n;
  if (counters.cells != cells)
    throw DimensionMismatchError(
        "counters cover " + std::to_string(counters.cells) + " cells, report expects " +
        std::to_string(cells));
  std::array<std::uint64_t, 4> expected =
      analytic_case_counts(report.m, report.n, report.n_step);
  if (counters.case_counts != expected) return false;
  OpCounters model = counters_from_cases(expected);
  return counters.comparisons == model.comparisons &&
         counters.arithmetic == model.arithmetic &&
         counters.overhead == model.overhead;
}

namespace {

struct AnchorRow {
  std::uint64_t size;
  int n_step;
  ReferenceRow values;
};

// Reference measurements for square matrices: a size sweep at step 10 and a
// step sweep at size 100.
constexpr AnchorRow kAnchors[] = {
    {10, 10, {0.21, 1.39, 2.6, 76.37}},
    {20, 10, {0.2, 1.37, 2.57, 76.64}},
    {30, 10, {0.197, 1.363, 2.56, 76.73}},
    {40, 10, {0.195, 1.36, 2.555, 76.78}},
    {50, 10, {0.194, 1.358, 2.552, 76.8}},
    {60, 10, {0.193, 1.355, 2.548, 76.84}},
    {70, 10, {0.1928, 1.353, 2.5458, 76.86}},
    {80, 10, {0.1925, 1.35, 2.5425, 76.89}},
    {90, 10, {0.1922, 1.349, 2.5412, 76.90}},
    {100, 10, {0.192, 1.349, 2.54, 76.91}},
    {1000, 10, {0.1901, 1.3479, 2.5380, 76.93}},
    {10000, 10, {0.1897, 1.3470, 2.5367, 76.94}},
    {100000, 10, {0.18903, 1.34612, 2.53515, 76.96}},
    {100, 1, {3.0, 4.0, 8.0, 27.28}},
    {100, 2, {1.24, 2.79, 5.03, 54.28}},
    {100, 5, {0.356, 1.632, 2.988, 72.84}},
    {100, 20, {0.0985, 1.189, 2.2875, 79.21}},
    {100, 50, {0.04, 1.08, 2.12, 80.73}},
    {100, 100, {0.02, 1.04, 2.06, 81.28}},
};

bool deviates(double model, double reference) {
  if (reference == 0.0) return model != 0.0;
  return std::fabs(model - reference) / std::fabs(reference) > 0.02;
}

std::string fmt4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::optional<ReferenceRow> reference_row(std::uint64_t m, std::uint64_t n, int n_step) {
  if (m != n) return std::nullopt;
  for (const AnchorRow& row : kAnchors)
    if (row.size == m && row.n_step == n_step) return row.values;
  return std::nullopt;
}

std::string deviation_note(const OpCountReport& report) {
  std::optional<ReferenceRow> ref = reference_row(report.m, report.n, report.n_step);
  if (!ref) return "";
  if (!deviates(report.comparisons_per_cell, ref->comparisons) &&
      !deviates(report.arithmetic_per_cell, ref->arithmetic) &&
      !deviates(report.total_per_cell, ref->total) &&
      !deviates(report.improvement_percent, ref->improvement))
    return "";
  return "differs_from_reference(cmp=" + fmt4(ref->comparisons) +
         ";arith=" + fmt4(ref->arithmetic) + ";total=" + fmt4(ref->total) +
         ";impr=" + fmt4(ref->improvement) + ")";
}

void write_csv(const std::vector<OpCountReport>& reports, std::ostream& out) {
  out << "m,n,N,comparisons_per_cell,arithmetic_per_cell,total_per_cell,"
         "improvement_percent,deviation_note\n";
  for (const OpCountReport& r : reports) {
    out << r.m << ',' << r.n << ',' << r.n_step << ',' << fmt4(r.comparisons_per_cell)
        << ',' << fmt4(r.arithmetic_per_cell) << ',' << fmt4(r.total_per_cell) << ','
        << fmt4(r.improvement_percent) << ',' << deviation_note(r) << '\n';
  }
}

double estimate_pipeline_saving(const SavingsModel& model) {
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(model.gapped_share) || !in_unit(model.skip_fraction) ||
      !in_unit(model.mp_overhead_fraction))
    throw InvalidParamsError("savings model fields must lie in [0, 1]");
  double saving =
      model.gapped_share * (model.skip_fraction - model.mp_overhead_fraction);
  return std::max(saving, -model.gapped_share * model.mp_overhead_fraction);
}

}  // namespace midpath
