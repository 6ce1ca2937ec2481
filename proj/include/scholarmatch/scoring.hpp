#ifndef SCHOLARMATCH_SCORING_HPP
#define SCHOLARMATCH_SCORING_HPP

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "scholarmatch/corpus.hpp"
#include "scholarmatch/linker.hpp"
#include "scholarmatch/types.hpp"

namespace scholarmatch::scoring {

// Frequency-bucketed rule: score s_hi above hi, s_mid for [lo, hi],
// s_lo below lo ("between" boundaries are inclusive).
struct FreqRule {
  std::uint32_t hi;
  std::uint32_t lo;
  int s_hi;
  int s_mid;
  int s_lo;
};

// Two-bucket rule with a single boundary; the boundary value itself falls
// in the frequent bucket.
struct SplitRule {
  std::uint32_t boundary;
  int s_hi;
  int s_lo;
};

// Count-bracket rule for the activity counts: zero scores 0.
struct BracketRule {
  std::uint32_t b1_max;  // 1..b1_max        -> s1
  std::uint32_t b2_max;  // b1_max+1..b2_max -> s2 (0 = no middle bracket)
  int s1;
  int s2;
  int s3;  // above b2_max (or b1_max when no middle bracket)
};

struct RuleConfig {
  int rule0_score = 1;
  FreqRule rule1_full_name{30, 5, 1, 2, 3};
  FreqRule rule2_first_name{145, 12, 1, 2, 3};
  SplitRule rule3_first_single{31, 1, 2};
  int rule4_penalty = -2;
  FreqRule rule5_email_domain{187, 18, 1, 2, 3};
  FreqRule rule6_organization{403, 20, 1, 2, 3};
  FreqRule rule7_city{5515, 210, 1, 2, 3};
  SplitRule rule8_country{76742, 1, 2};
  BracketRule rule9_self_tweets{2, 5, 3, 5, 7};
  BracketRule rule10_topics{3, 6, 1, 3, 5};
  int rule11_comention = 5;
  BracketRule rule12_journals{5, 0, 1, 2, 2};
  BracketRule rule13_commonness{2, 6, 2, 1, 0};
  int min_total_score = 4;
};

constexpr int kNumRules = 14;
using RuleScores = std::array<int, kNumRules>;

struct ScoredPair {
  std::string author_id;
  std::string handle;
  RuleScores rule_scores{};
  int total = 0;

  friend bool operator==(const ScoredPair&, const ScoredPair&) = default;
};

// Rules 1, 2, 3, 5, 6, 7, 8: bucket a corpus frequency into a score.
int freq_bucket(int rule, std::uint32_t count, const RuleConfig& config);

int bracket_score(const BracketRule& rule, std::uint32_t count);

// Rules 0-4 from name evidence.
std::array<int, 5> score_name_rules(const namekit::MatchEvidence& evidence,
                                    const corpus::AuthorFeatures& features,
                                    const corpus::FrequencyTables& tables,
                                    const RuleConfig& config);

// Rules 5-8 from URL/bio/location against the author's profile elements.
std::array<int, 4> score_profile_rules(const corpus::AuthorFeatures& features,
                                       const AccountRecord& account,
                                       const corpus::FrequencyTables& tables,
                                       const RuleConfig& config);

// Rules 9-12 from tweeting activity.
std::array<int, 4> score_activity_rules(const AuthorRecord& author,
                                        const AccountRecord& account,
                                        const corpus::PubCatalog& catalog,
                                        const RuleConfig& config);

// Rule 13: distinct candidate authors per handle, over the full
// pre-selection candidate set.
int score_commonness(const std::string& handle,
                     const std::unordered_map<std::string, std::uint32_t>& candidate_counts,
                     const RuleConfig& config);

ScoredPair score_pair(const AuthorRecord& author,
                      const corpus::AuthorFeatures& features,
                      const AccountRecord& account,
                      const namekit::MatchEvidence& evidence,
                      const corpus::FrequencyTables& tables,
                      const corpus::PubCatalog& catalog,
                      const std::unordered_map<std::string, std::uint32_t>& candidate_counts,
                      const RuleConfig& config);

// Scores every candidate pair; computes the rule-13 counts internally.
// Parallel over pairs, output order preserved from the candidate order.
std::vector<ScoredPair> score_candidates(const std::vector<linker::CandidatePair>& candidates,
                                         const std::vector<AuthorRecord>& authors,
                                         const std::vector<AccountRecord>& accounts,
                                         const corpus::FrequencyTables& tables,
                                         const corpus::PubCatalog& catalog,
                                         const RuleConfig& config,
                                         unsigned workers = 1);

// Per author, keep only the pairs attaining that author's maximum total;
// ties are all retained.
std::vector<ScoredPair> apply_preferred_rule(const std::vector<ScoredPair>& scored);

std::vector<ScoredPair> filter_threshold(const std::vector<ScoredPair>& selected,
                                         int min_total_score);

void write_pairs_tsv(const std::string& path, const std::vector<ScoredPair>& pairs);

}  // namespace scholarmatch::scoring

#endif  // SCHOLARMATCH_SCORING_HPP
