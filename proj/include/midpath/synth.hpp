#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "midpath/seqio.hpp"

namespace midpath {
namespace synth {

// Deterministic corpus generation for benchmarks and self-tests.  All
// functions draw from the caller's engine, so a fixed seed fixes the corpus.

std::string random_dna(std::size_t length, std::mt19937_64& rng);

// Point substitutions at the given per-residue rate.  Substituted residues
// always change.
std::string mutate(const std::string& base, double sub_rate, std::mt19937_64& rng);

// Substitutions plus `indels` random insertions or deletions of length
// 1..max_indel each.
std::string mutate_indels(const std::string& base, double sub_rate, int indels,
                          std::size_t max_indel, std::mt19937_64& rng);

struct Corpus {
  std::vector<Sequence> queries;
  std::vector<Sequence> targets;
};

// n_targets sequences derived from random queries at substitution rates
// drawn uniformly from [min_rate, max_rate]; the fraction in
// indel_target_fraction additionally receives 1..3 short indels.
Corpus mutated_corpus(std::size_t n_queries, std::size_t n_targets,
                      std::size_t length, double min_rate, double max_rate,
                      double indel_target_fraction, std::uint64_t seed);

}  // namespace synth
}  // namespace midpath
