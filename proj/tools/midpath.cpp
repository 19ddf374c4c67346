// midpath: seed-extend-triage sequence search with operation accounting.
//
// Subcommands:
//   search     query-vs-database alignment search, TSV on stdout
//   ops-table  closed-form per-cell operation tables, CSV on stdout
//   bench      middle-path vs classic mode comparison across n-step values

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "midpath/analytics.hpp"
#include "midpath/pipeline.hpp"

namespace {

using namespace midpath;

struct SearchFlags {
  std::string query_path;
  std::string db_path;
  std::string alphabet = "dna";
  std::string matrix_path;
  int match = 1;
  int mismatch = -3;
  int gap_open = 5;
  int gap_extend = 2;
  int word_size = -1;  // resolved per alphabet after parsing
  long long two_hit_window = 40;
  long long x_drop = 20;
  long long s1 = 20;
  long long s2 = 40;
  int n_step = 10;
  bool classic = false;
  std::string below_cutoff = "reject";
  double e_max = 10.0;
  std::size_t max_display = 500;
  double lambda = 0.693147;
  double k = 1.0;
  long long margin = 10;
  int threads = 1;
  std::uint64_t seed_rng = 0;  // reserved
};

void add_search_flags(CLI::App* cmd, SearchFlags* flags) {
  cmd->add_option("--query", flags->query_path, "Query FASTA file")->required();
  cmd->add_option("--db", flags->db_path, "Database FASTA file")->required();
  cmd->add_option("--alphabet", flags->alphabet, "Residue alphabet")
      ->check(CLI::IsMember({"dna", "protein"}));
  cmd->add_option("--matrix", flags->matrix_path, "Substitution matrix file");
  cmd->add_option("--match", flags->match, "Match score (without --matrix)");
  cmd->add_option("--mismatch", flags->mismatch, "Mismatch score (without --matrix)");
  cmd->add_option("--gap-open", flags->gap_open, "Gap open cost")
      ->check(CLI::Range(0, 1 << 20));
  cmd->add_option("--gap-extend", flags->gap_extend, "Gap extension cost")
      ->check(CLI::Range(1, 1 << 20));
  cmd->add_option("--word-size", flags->word_size,
                  "Seed word length W (default 11 dna, 3 protein)")
      ->check(CLI::Range(1, 32));
  cmd->add_option("--two-hit-window", flags->two_hit_window,
                  "Max q-distance A between paired hits")
      ->check(CLI::Range(1LL, 1LL << 40));
  cmd->add_option("--x-drop", flags->x_drop, "Ungapped extension drop-off")
      ->check(CLI::Range(1LL, 1LL << 40));
  cmd->add_option("--s1", flags->s1, "Ungapped score cutoff");
  cmd->add_option("--s2", flags->s2, "Display score cutoff");
  cmd->add_option("--n-step", flags->n_step, "Insertion stride N")
      ->check(CLI::Range(1, 1 << 20));
  cmd->add_flag("--classic", flags->classic, "Gap every HSP (no triage)");
  cmd->add_option("--below-cutoff", flags->below_cutoff,
                  "Below-cutoff policy: reject|display")
      ->check(CLI::IsMember({"reject", "display"}));
  cmd->add_option("--evalue", flags->e_max, "Max e-value to report")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-display", flags->max_display, "Max records per query")
      ->check(CLI::Range(1ULL, 1ULL << 40));
  cmd->add_option("--lambda", flags->lambda, "Score scale lambda")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--k", flags->k, "Search-space constant K")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--margin", flags->margin, "Window margin around an HSP")
      ->check(CLI::Range(0LL, 1LL << 40));
  cmd->add_option("--threads", flags->threads, "Worker threads")
      ->check(CLI::Range(1, 1 << 10));
  cmd->add_option("--seed-rng", flags->seed_rng, "Reserved");
}

// Throws midpath errors on bad files; returns exit 2 conditions directly.
int build_config(const SearchFlags& flags, PipelineConfig* config,
                 Alphabet* alphabet) {
  if (flags.s1 >= flags.s2) {
    std::cerr << "midpath: --s1 must be below --s2 (got s1=" << flags.s1
              << ", s2=" << flags.s2 << ")\n";
    return 2;
  }
  *alphabet = flags.alphabet == "dna" ? Alphabet::dna() : Alphabet::protein();

  if (!flags.matrix_path.empty()) {
    config->scheme = scheme_from_table(load_matrix_file(flags.matrix_path, *alphabet),
                                       flags.gap_open, flags.gap_extend);
  } else if (flags.alphabet == "dna") {
    config->scheme =
        make_dna_scheme(flags.match, flags.mismatch, flags.gap_open, flags.gap_extend);
  } else {
    config->scheme = make_uniform_scheme(*alphabet, flags.match, flags.mismatch,
                                         flags.gap_open, flags.gap_extend);
  }

  config->seeding.word_length = flags.word_size > 0
                                    ? static_cast<std::size_t>(flags.word_size)
                                    : (flags.alphabet == "dna" ? 11 : 3);
  config->seeding.two_hit_window = flags.two_hit_window;
  config->extension.x_drop_ungapped = flags.x_drop;
  config->extension.s1 = flags.s1;
  config->evalue.lambda = flags.lambda;
  config->evalue.k = flags.k;
  config->evalue.e_max = flags.e_max;
  config->evalue.max_display = flags.max_display;
  config->window_margin = flags.margin;

  if (flags.classic) {
    config->middle_path.reset();
  } else {
    MiddlePathParams mp;
    mp.n_step = flags.n_step;
    mp.s2 = flags.s2;
    mp.below_cutoff_policy = flags.below_cutoff == "display"
                                 ? BelowCutoffPolicy::DisplayUngapped
                                 : BelowCutoffPolicy::Reject;
    config->middle_path = mp;
  }
  return 0;
}

const char* decision_name(TriageDecision d) {
  switch (d) {
    case TriageDecision::AcceptDirect: return "AcceptDirect";
    case TriageDecision::FullGapped: return "FullGapped";
    case TriageDecision::BelowCutoff: return "BelowCutoff";
  }
  return "?";
}

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::UngappedOnly: return "UngappedOnly";
    case Stage::MiddlePathDirect: return "MiddlePathDirect";
    case Stage::FullGapped: return "FullGapped";
  }
  return "?";
}

std::string fmt_evalue(double e) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4e", e);
  return buf;
}

std::string fmt_fraction(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void print_stats(const RunStats& stats) {
  std::cout << "# stats: hsps_total=" << stats.hsps_total
            << " routed_direct=" << stats.routed_direct
            << " routed_gapped=" << stats.routed_gapped
            << " routed_below=" << stats.routed_below
            << " skip_fraction=" << fmt_fraction(stats.skip_fraction()) << "\n";
  std::cout << "# stats: mp_ops=" << stats.mp_counters.total()
            << " gapped_ops=" << stats.gapped_counters.total()
            << " classic_gapped_ops=" << stats.classic_gapped_counters.total()
            << "\n";
}

int cmd_search(const SearchFlags& flags) {
  PipelineConfig config;
  Alphabet alphabet = Alphabet::dna();
  if (int rc = build_config(flags, &config, &alphabet)) return rc;

  auto queries = read_fasta_file(flags.query_path, alphabet);
  auto targets = read_fasta_file(flags.db_path, alphabet);
  SearchResult result = search(queries, targets, config, flags.threads);

  std::cout << "query_id\ttarget_id\tq_start\tq_end\tt_start\tt_end\tmp_score\t"
               "decision\tfinal_score\tevalue\tstage\n";
  for (const HitRecord& r : result.records) {
    std::cout << r.query_id << '\t' << r.target_id << '\t' << r.hsp.q_start << '\t'
              << r.hsp.q_end << '\t' << r.hsp.t_start << '\t' << r.hsp.t_end << '\t';
    if (r.mp_score)
      std::cout << *r.mp_score;
    else
      std::cout << '-';
    std::cout << '\t';
    if (r.decision)
      std::cout << decision_name(*r.decision);
    else
      std::cout << '-';
    std::cout << '\t' << r.final_score << '\t' << fmt_evalue(r.evalue) << '\t'
              << stage_name(r.stage) << '\n';
  }
  print_stats(result.stats);
  return 0;
}

struct OpsTableFlags {
  std::string mode;
  int n_step = 10;
  std::vector<std::uint64_t> sizes = {10,  20,  30,  40,    50,    60,    70,
                                      80,  90,  100, 1000,  10000, 100000};
  std::uint64_t size = 100;
  std::vector<int> n_values = {1, 2, 5, 10, 20, 50, 100};
};

int cmd_ops_table(const OpsTableFlags& flags) {
  std::vector<OpCountReport> reports;
  if (flags.mode == "matrix-sweep") {
    for (std::uint64_t s : flags.sizes)
      if (s < 1) {
        std::cerr << "midpath: --sizes entries must be >= 1\n";
        return 2;
      }
    reports = sweep_matrix_sizes(flags.sizes, flags.n_step);
  } else {
    for (int n : flags.n_values)
      if (n < 1) {
        std::cerr << "midpath: --n-values entries must be >= 1\n";
        return 2;
      }
    reports = sweep_n_values(flags.size, flags.n_values);
  }
  write_csv(reports, std::cout);
  return 0;
}

int cmd_bench(const SearchFlags& flags, const std::vector<int>& n_values) {
  PipelineConfig config;
  Alphabet alphabet = Alphabet::dna();
  if (int rc = build_config(flags, &config, &alphabet)) return rc;
  for (int n : n_values)
    if (n < 1) {
      std::cerr << "midpath: --n-values entries must be >= 1\n";
      return 2;
    }

  auto queries = read_fasta_file(flags.query_path, alphabet);
  auto targets = read_fasta_file(flags.db_path, alphabet);

  std::cout << "# bench: queries=" << queries.size() << " targets=" << targets.size()
            << " pairs=" << queries.size() * targets.size() << "\n";
  std::cout << "n_step\trouted_direct\trouted_gapped\trouted_below\tskip_fraction\t"
               "mp_ops\tclassic_ops\treduction_percent\thits_lost\n";
  for (int n : n_values) {
    config.middle_path = config.middle_path.value_or(MiddlePathParams{});
    config.middle_path->n_step = n;
    ModeComparison cmp = compare_modes(queries, targets, config, flags.threads);
    const RunStats& stats = cmp.mp.stats;
    std::cout << n << '\t' << stats.routed_direct << '\t' << stats.routed_gapped
              << '\t' << stats.routed_below << '\t'
              << fmt_fraction(stats.skip_fraction()) << '\t' << cmp.mp_total_ops
              << '\t' << cmp.classic_total_ops << '\t';
    if (cmp.reduction_fraction)
      std::cout << fmt_fraction(100.0 * *cmp.reduction_fraction);
    else
      std::cout << '-';
    std::cout << '\t' << cmp.lost_vs_classic << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seed-extend sequence search with restricted-DP triage"};
  app.require_subcommand(1);

  SearchFlags search_flags;
  CLI::App* search_cmd = app.add_subcommand("search", "Query-vs-database search");
  add_search_flags(search_cmd, &search_flags);

  OpsTableFlags ops_flags;
  CLI::App* ops_cmd = app.add_subcommand("ops-table", "Per-cell operation tables");
  ops_cmd->add_option("--mode", ops_flags.mode, "matrix-sweep or n-sweep")
      ->required()
      ->check(CLI::IsMember({"matrix-sweep", "n-sweep"}));
  ops_cmd->add_option("--n-step", ops_flags.n_step, "Stride for matrix-sweep")
      ->check(CLI::Range(1, 1 << 20));
  ops_cmd->add_option("--sizes", ops_flags.sizes, "Square matrix sizes")
      ->delimiter(',');
  ops_cmd->add_option("--size", ops_flags.size, "Matrix size for n-sweep");
  ops_cmd->add_option("--n-values", ops_flags.n_values, "Strides for n-sweep")
      ->delimiter(',');

  SearchFlags bench_flags;
  std::vector<int> bench_n_values = {1, 2, 5, 10, 20, 50, 100};
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Middle-path vs classic comparison");
  add_search_flags(bench_cmd, &bench_flags);
  bench_cmd->add_option("--n-values", bench_n_values, "Strides to compare")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "midpath: " << e.what() << "\n";
    return 2;
  }

  try {
    if (search_cmd->parsed()) return cmd_search(search_flags);
    if (ops_cmd->parsed()) return cmd_ops_table(ops_flags);
    if (bench_cmd->parsed()) return cmd_bench(bench_flags, bench_n_values);
  } catch (const Error& e) {
    std::cerr << "midpath: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "midpath: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
