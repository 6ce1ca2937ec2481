#ifndef SCHOLARMATCH_EVALKIT_HPP
#define SCHOLARMATCH_EVALKIT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scholarmatch/scoring.hpp"
#include "scholarmatch/types.hpp"

namespace scholarmatch::evalkit {

struct PrSweepRow {
  int threshold;
  std::size_t matched_scholars;  // distinct authors retained at this threshold
  double precision;
  double recall;
};

// Pair-level precision/recall restricted to gold authors. An author tied
// across several retained accounts counts one prediction per pair.
std::pair<double, double> precision_recall(const std::vector<scoring::ScoredPair>& predicted,
                                           const std::vector<GoldPair>& gold);

// One row per threshold, each re-filtering the (preferred-rule-applied)
// scored pairs and re-evaluating against gold.
std::vector<PrSweepRow> threshold_sweep(const std::vector<scoring::ScoredPair>& selected,
                                        const std::vector<GoldPair>& gold,
                                        const std::vector<int>& thresholds);

// Drops gold pairs whose handle is absent from the account corpus or has
// never tweeted a tracked paper.
std::vector<GoldPair> restrict_gold_to_tweeting(const std::vector<GoldPair>& gold,
                                                const std::vector<AccountRecord>& accounts);

// Plurality domain over the author's publications; ties broken by a
// seeded draw that is deterministic per (author_id, seed) and invariant
// to publication order.
Domain assign_main_domain(const AuthorRecord& author, std::uint64_t seed);

struct ProductivityBin {
  std::uint32_t lo;
  std::uint32_t hi;  // inclusive; UINT32_MAX for open-ended
  std::string label;
};

std::vector<ProductivityBin> default_productivity_bins();
std::vector<ProductivityBin> make_productivity_bins(const std::vector<std::uint32_t>& lower_bounds);

struct ShareRow {
  std::string key;  // bin label or domain name
  std::size_t n_scholars;
  double share_on_twitter;
};

struct AgeRow {
  std::string bin;
  std::size_t n_matched;
  std::size_t n_unmatched;
  double mean_yfp_matched;    // NaN when the group is empty
  double mean_yfp_unmatched;
};

struct DemographicsReport {
  std::vector<ShareRow> productivity;
  std::vector<ShareRow> domain;
  std::vector<AgeRow> academic_age;
};

std::vector<ShareRow> productivity_share_report(const std::vector<AuthorRecord>& authors,
                                                const std::vector<scoring::ScoredPair>& matches,
                                                const std::vector<ProductivityBin>& bins);

std::vector<ShareRow> domain_share_report(const std::vector<AuthorRecord>& authors,
                                          const std::vector<scoring::ScoredPair>& matches,
                                          std::uint64_t seed);

std::vector<AgeRow> academic_age_report(const std::vector<AuthorRecord>& authors,
                                        const std::vector<scoring::ScoredPair>& matches,
                                        const std::vector<ProductivityBin>& bins);

void write_eval_tsv(const std::string& path, const std::vector<PrSweepRow>& rows);
void write_report_tsv(const std::string& path, const DemographicsReport& report);

}  // namespace scholarmatch::evalkit

#endif  // SCHOLARMATCH_EVALKIT_HPP
