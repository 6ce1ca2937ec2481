#ifndef SCHOLARMATCH_PIPELINE_HPP
#define SCHOLARMATCH_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scholarmatch/evalkit.hpp"
#include "scholarmatch/scoring.hpp"
#include "scholarmatch/types.hpp"

namespace scholarmatch::pipeline {

struct PipelineConfig {
  std::string authors_path;
  std::string accounts_path;
  std::string gold_path;
  std::string out_dir = ".";
  scoring::RuleConfig rules;
  std::vector<std::uint32_t> productivity_bin_bounds = {1, 2, 3, 5, 10, 20, 50};
  std::vector<int> eval_thresholds = {6, 5, 4, 3, 2};
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

// Flat key = value config file; every rule boundary and score of the
// default table is addressable by name. Unknown keys are an error.
void apply_config_file(PipelineConfig& config, const std::string& path);
void write_config_template(const std::string& path);

struct LinkResult {
  std::vector<scoring::ScoredPair> scored;    // all candidates, scored
  std::vector<scoring::ScoredPair> selected;  // after the preferred rule
  std::vector<scoring::ScoredPair> matches;   // after the threshold
};

// blocking -> scoring -> preferred rule -> threshold.
LinkResult run_link(const std::vector<AuthorRecord>& authors,
                    const std::vector<AccountRecord>& accounts,
                    const scoring::RuleConfig& rules, unsigned workers = 1);

// Full file-to-file pipeline stages backing the CLI subcommands.
// Each returns the path of the file it wrote.
std::string cmd_link(const PipelineConfig& config);
std::string cmd_eval(const PipelineConfig& config);
std::string cmd_report(const PipelineConfig& config);

}  // namespace scholarmatch::pipeline

#endif  // SCHOLARMATCH_PIPELINE_HPP
