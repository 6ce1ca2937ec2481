#ifndef SCHOLARMATCH_SYNTH_HPP
#define SCHOLARMATCH_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "scholarmatch/types.hpp"

namespace scholarmatch::synth {

// Noise knobs for the generated corpus. All probabilities in [0,1];
// zeroing everything yields clean, fully recoverable links.
struct NoiseModel {
  double initials_only_prob = 0.2;   // author publishes without a first name
  double diacritic_prob = 0.1;       // account spells a name with diacritics
  double truncation_prob = 0.1;      // display name clipped to 20 chars
  double handle_scramble_prob = 0.05;  // handle unrelated to the name
  double drop_profile_prob = 0.3;    // no bio/url/location on the account

  static NoiseModel none() { return {0.0, 0.0, 0.0, 0.0, 0.0}; }
};

struct SynthSpec {
  std::size_t n_authors = 1000;
  std::size_t n_accounts = 500;
  double fraction_linked = 0.5;
  NoiseModel noise;
  std::uint64_t seed = 1;

  void validate() const;  // throws std::invalid_argument
};

struct SynthCorpus {
  std::vector<AuthorRecord> authors;
  std::vector<AccountRecord> accounts;
  std::vector<GoldPair> gold;  // exactly the constructed links
};

SynthCorpus generate(const SynthSpec& spec);

// Writes authors.jsonl, accounts.jsonl and gold.csv under out_dir.
void write_corpus(const SynthCorpus& corpus, const std::string& out_dir);

}  // namespace scholarmatch::synth

#endif  // SCHOLARMATCH_SYNTH_HPP
