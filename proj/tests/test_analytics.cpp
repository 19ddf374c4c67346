#include <doctest.h>

#include <sstream>

#include "midpath/analytics.hpp"
#include "midpath/middle_path.hpp"

using namespace midpath;

TEST_CASE("closed-form case counts partition the matrix") {
  auto cases = analytic_case_counts(10, 10, 10);
  CHECK(cases[static_cast<int>(CellCase::Case1)] == 81);
  CHECK(cases[static_cast<int>(CellCase::Case2)] == 9);
  CHECK(cases[static_cast<int>(CellCase::Case3)] == 9);
  CHECK(cases[static_cast<int>(CellCase::Case4)] == 1);

  // Rectangular, stride not dividing either length.
  auto rect = analytic_case_counts(7, 12, 5);
  // R = 1, C = 2.
  CHECK(rect[static_cast<int>(CellCase::Case4)] == 2);
  CHECK(rect[static_cast<int>(CellCase::Case3)] == 10);
  CHECK(rect[static_cast<int>(CellCase::Case2)] == 12);
  CHECK(rect[static_cast<int>(CellCase::Case1)] == 60);
  CHECK(rect[0] + rect[1] + rect[2] + rect[3] == 7 * 12);

  CHECK_THROWS_AS(analytic_case_counts(0, 10, 5), InvalidParamsError);
  CHECK_THROWS_AS(analytic_case_counts(10, 10, 0), InvalidParamsError);
}

TEST_CASE("per-cell averages at the reference points") {
  auto r = analytic_counts(10, 10, 10);
  CHECK(r.comparisons_per_cell == doctest::Approx(0.21).epsilon(1e-12));
  CHECK(r.arithmetic_per_cell == doctest::Approx(1.39).epsilon(1e-12));
  CHECK(r.total_per_cell == doctest::Approx(2.6).epsilon(1e-12));
  CHECK(r.improvement_percent == doctest::Approx(76.3636363636).epsilon(1e-9));

  auto full = analytic_counts(100, 100, 1);
  CHECK(full.comparisons_per_cell == doctest::Approx(3.0));
  CHECK(full.arithmetic_per_cell == doctest::Approx(4.0));
  CHECK(full.total_per_cell == doctest::Approx(8.0));
  CHECK(full.improvement_percent == doctest::Approx(100.0 * 3.0 / 11.0).epsilon(1e-9));

  auto n50 = analytic_counts(100, 100, 50);
  CHECK(n50.comparisons_per_cell == doctest::Approx(0.0404).epsilon(1e-12));
  CHECK(n50.arithmetic_per_cell == doctest::Approx(1.0796).epsilon(1e-12));
  CHECK(n50.total_per_cell == doctest::Approx(2.12).epsilon(1e-12));
  CHECK(n50.improvement_percent == doctest::Approx(80.7272727273).epsilon(1e-9));

  auto n100 = analytic_counts(100, 100, 100);
  CHECK(n100.comparisons_per_cell == doctest::Approx(0.0201).epsilon(1e-12));
  CHECK(n100.arithmetic_per_cell == doctest::Approx(1.0399).epsilon(1e-12));
  CHECK(n100.total_per_cell == doctest::Approx(2.06).epsilon(1e-12));
  CHECK(n100.improvement_percent == doctest::Approx(81.2727272727).epsilon(1e-9));
}

TEST_CASE("verify_counts accepts matching counters and flags mismatches") {
  auto report = analytic_counts(10, 10, 10);
  auto good = counters_from_cases(analytic_case_counts(10, 10, 10));
  CHECK(verify_counts(report, good));

  // Same cell total, different case split: rejected but not an error.
  auto other = counters_from_cases(analytic_case_counts(10, 10, 5));
  CHECK_FALSE(verify_counts(report, other));

  // Different cell total: dimension error.
  auto wrong_size = counters_from_cases(analytic_case_counts(10, 5, 10));
  CHECK_THROWS_AS(verify_counts(report, wrong_size), DimensionMismatchError);
}

TEST_CASE("reference rows and deviation notes") {
  // The smallest size-sweep row agrees with the closed form: no note.
  CHECK(deviation_note(analytic_counts(10, 10, 10)).empty());
  // Unlisted combinations have no reference at all.
  CHECK(deviation_note(analytic_counts(17, 17, 10)).empty());
  CHECK_FALSE(reference_row(17, 17, 10).has_value());
  CHECK_FALSE(reference_row(10, 20, 10).has_value());

  // The size-100 row at stride 10 differs from the reference by ~9%.
  auto flagged = deviation_note(analytic_counts(100, 100, 10));
  CHECK(flagged.rfind("differs_from_reference(", 0) == 0);
  CHECK(flagged.find("cmp=0.1920") != std::string::npos);

  auto ref = reference_row(100, 100, 50);
  REQUIRE(ref.has_value());
  CHECK(ref->total == doctest::Approx(2.12));
}

TEST_CASE("csv output is stable and 4-decimal") {
  std::ostringstream out;
  write_csv({analytic_counts(10, 10, 10)}, out);
  CHECK(out.str() ==
        "m,n,N,comparisons_per_cell,arithmetic_per_cell,total_per_cell,"
        "improvement_percent,deviation_note\n"
        "10,10,10,0.2100,1.3900,2.6000,76.3636,\n");
}

TEST_CASE("sweeps cover the requested grid") {
  auto sizes = sweep_matrix_sizes({10, 20, 30}, 10);
  REQUIRE(sizes.size() == 3);
  CHECK(sizes[1].m == 20);
  CHECK(sizes[1].n == 20);
  CHECK(sizes[1].n_step == 10);

  auto steps = sweep_n_values(100, {1, 2, 5});
  REQUIRE(steps.size() == 3);
  CHECK(steps[2].n_step == 5);
  CHECK(steps[2].m == 100);
}

TEST_CASE("pipeline saving estimate") {
  SavingsModel model;  // 1/3 share, 0.5 skipped, 0.125 overhead
  CHECK(estimate_pipeline_saving(model) == 0.125);

  model.skip_fraction = 0.0;
  CHECK(estimate_pipeline_saving(model) ==
        doctest::Approx(-model.gapped_share * 0.125));

  model.skip_fraction = 1.0;
  model.mp_overhead_fraction = 0.0;
  CHECK(estimate_pipeline_saving(model) == doctest::Approx(1.0 / 3.0));

  model.gapped_share = 1.5;
  CHECK_THROWS_AS(estimate_pipeline_saving(model), InvalidParamsError);
}
