#include "midpath/synth.hpp"

namespace midpath {
namespace synth {

namespace {
constexpr char kBases[] = "ACGT";
}

std::string random_dna(std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::string s(length, 'A');
  for (char& c : s) c = kBases[pick(rng)];
  return s;
}

std::string mutate(const std::string& base, double sub_rate, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> shift(1, 3);
  std::string s = base;
  for (char& c : s) {
    if (coin(rng) >= sub_rate) continue;
    const char* pos = std::char_traits<char>::find(kBases, 4, c);
    int idx = pos ? static_cast<int>(pos - kBases) : 0;
    c = kBases[(idx + shift(rng)) % 4];
  }
  return s;
}

std::string mutate_indels(const std::string& base, double sub_rate, int indels,
                          std::size_t max_indel, std::mt19937_64& rng) {
  std::string s = mutate(base, sub_rate, rng);
  std::uniform_int_distribution<std::size_t> len_pick(1, max_indel);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < indels && !s.empty(); ++i) {
    std::uniform_int_distribution<std::size_t> pos_pick(0, s.size() - 1);
    std::size_t pos = pos_pick(rng);
    std::size_t len = len_pick(rng);
    if (coin(rng)) {
      s.insert(pos, random_dna(len, rng));
    } else {
      s.erase(pos, std::min(len, s.size() - pos));
    }
  }
  return s;
}

Corpus mutated_corpus(std::size_t n_queries, std::size_t n_targets,
                      std::size_t length, double min_rate, double max_rate,
                      double indel_target_fraction, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> rate_pick(min_rate, max_rate);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> indel_count(1, 3);

  Corpus corpus;
  corpus.queries.reserve(n_queries);
  for (std::size_t i = 0; i < n_queries; ++i)
    corpus.queries.push_back(
        {"q" + std::to_string(i + 1), "", random_dna(length, rng)});

  std::uniform_int_distribution<std::size_t> query_pick(0, n_queries - 1);
  corpus.targets.reserve(n_targets);
  for (std::size_t i = 0; i < n_targets; ++i) {
    const std::string& base = corpus.queries[query_pick(rng)].residues;
    double rate = rate_pick(rng);
    std::string derived = coin(rng) < indel_target_fraction
                              ? mutate_indels(base, rate, indel_count(rng), 3, rng)
                              : mutate(base, rate, rng);
    corpus.targets.push_back({"t" + std::to_string(i + 1), "", std::move(derived)});
  }
  return corpus;
}

}  // namespace synth
}  // namespace midpath
