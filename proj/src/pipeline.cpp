#include "scholarmatch/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "scholarmatch/corpus.hpp"
#include "scholarmatch/linker.hpp"

namespace scholarmatch::pipeline {

using scoring::RuleConfig;
using scoring::ScoredPair;

namespace {

struct KeyTable {
  std::unordered_map<std::string, int*> ints;
  std::unordered_map<std::string, std::uint32_t*> uints;
};

// Exposes every tunable number of the rule table under a stable key.
KeyTable rule_keys(RuleConfig& r) {
  KeyTable t;
  t.ints["rule0.score"] = &r.rule0_score;
  auto freq = [&](const std::string& name, scoring::FreqRule& fr) {
    t.uints[name + ".freq_hi"] = &fr.hi;
    t.uints[name + ".freq_lo"] = &fr.lo;
    t.ints[name + ".score_frequent"] = &fr.s_hi;
    t.ints[name + ".score_medium"] = &fr.s_mid;
    t.ints[name + ".score_infrequent"] = &fr.s_lo;
  };
  auto split = [&](const std::string& name, scoring::SplitRule& sr) {
    t.uints[name + ".boundary"] = &sr.boundary;
    t.ints[name + ".score_frequent"] = &sr.s_hi;
    t.ints[name + ".score_infrequent"] = &sr.s_lo;
  };
  auto bracket = [&](const std::string& name, scoring::BracketRule& br) {
    t.uints[name + ".bracket1_max"] = &br.b1_max;
    t.uints[name + ".bracket2_max"] = &br.b2_max;
    t.ints[name + ".score1"] = &br.s1;
    t.ints[name + ".score2"] = &br.s2;
    t.ints[name + ".score3"] = &br.s3;
  };
  freq("rule1_full_name", r.rule1_full_name);
  freq("rule2_first_name", r.rule2_first_name);
  split("rule3_first_single", r.rule3_first_single);
  t.ints["rule4.penalty"] = &r.rule4_penalty;
  freq("rule5_email_domain", r.rule5_email_domain);
  freq("rule6_organization", r.rule6_organization);
  freq("rule7_city", r.rule7_city);
  split("rule8_country", r.rule8_country);
  bracket("rule9_self_tweets", r.rule9_self_tweets);
  bracket("rule10_topics", r.rule10_topics);
  t.ints["rule11.score"] = &r.rule11_comention;
  bracket("rule12_journals", r.rule12_journals);
  bracket("rule13_commonness", r.rule13_commonness);
  t.ints["min_score"] = &r.min_total_score;
  return t;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

void apply_config_file(PipelineConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  KeyTable keys = rule_keys(config.rules);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected key = value");
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    try {
      if (auto it = keys.ints.find(key); it != keys.ints.end()) {
        *it->second = std::stoi(value);
      } else if (auto ut = keys.uints.find(key); ut != keys.uints.end()) {
        *ut->second = static_cast<std::uint32_t>(std::stoul(value));
      } else if (key == "seed") {
        config.seed = std::stoull(value);
      } else if (key == "workers") {
        config.workers = static_cast<unsigned>(std::stoul(value));
      } else if (key == "productivity_bins") {
        config.productivity_bin_bounds.clear();
        std::istringstream ss(value);
        std::string tok;
        while (std::getline(ss, tok, ','))
          config.productivity_bin_bounds.push_back(
              static_cast<std::uint32_t>(std::stoul(trim(tok))));
      } else {
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": unknown config key \"" + key + "\"");
      }
    } catch (const std::invalid_argument&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": bad value for \"" + key + "\"");
    }
  }
}

void write_config_template(const std::string& path) {
  PipelineConfig tmp;
  KeyTable keys = rule_keys(tmp.rules);
  std::map<std::string, std::string> sorted;
  for (const auto& [k, v] : keys.ints) sorted[k] = std::to_string(*v);
  for (const auto& [k, v] : keys.uints) sorted[k] = std::to_string(*v);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << "# scholarmatch scoring configuration (defaults shown)\n";
  for (const auto& [k, v] : sorted) out << k << " = " << v << "\n";
  out << "# seed = 1\n# workers = 1\n# productivity_bins = 1,2,3,5,10,20,50\n";
}

LinkResult run_link(const std::vector<AuthorRecord>& authors,
                    const std::vector<AccountRecord>& accounts,
                    const RuleConfig& rules, unsigned workers) {
  auto index = linker::SurnameIndex::build(authors);
  auto candidates = linker::generate_candidates(authors, accounts, index, workers);
  auto tables = corpus::build_frequency_tables(authors);
  auto catalog = corpus::build_pub_catalog(authors);
  LinkResult result;
  result.scored =
      scoring::score_candidates(candidates, authors, accounts, tables, catalog, rules, workers);
  result.selected = scoring::apply_preferred_rule(result.scored);
  result.matches = scoring::filter_threshold(result.selected, rules.min_total_score);
  return result;
}

namespace {

struct Inputs {
  std::vector<AuthorRecord> authors;
  std::vector<AccountRecord> accounts;
};

Inputs load_inputs(const PipelineConfig& config) {
  Inputs in;
  try {
    in.authors = corpus::load_authors(config.authors_path);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("stage load-authors: ") + e.what());
  }
  try {
    in.accounts = corpus::load_accounts(config.accounts_path);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("stage load-accounts: ") + e.what());
  }
  return in;
}

}  // namespace

std::string cmd_link(const PipelineConfig& config) {
  Inputs in = load_inputs(config);
  LinkResult result;
  try {
    result = run_link(in.authors, in.accounts, config.rules, config.workers);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("stage link: ") + e.what());
  }
  std::filesystem::create_directories(config.out_dir);
  std::string path = config.out_dir + "/pairs.tsv";
  scoring::write_pairs_tsv(path, result.matches);
  return path;
}

std::string cmd_eval(const PipelineConfig& config) {
  Inputs in = load_inputs(config);
  std::vector<GoldPair> gold;
  try {
    gold = corpus::load_gold(config.gold_path);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("stage load-gold: ") + e.what());
  }
  std::unordered_set<std::string> known;
  for (const auto& a : in.authors) known.insert(a.author_id);
  std::string unknown;
  for (const auto& g : gold) {
    if (!known.contains(g.author_id))
      unknown += (unknown.empty() ? "" : ", ") + g.author_id;
  }
  if (!unknown.empty())
    throw std::runtime_error("stage eval: gold references unknown author ids: " + unknown);

  gold = evalkit::restrict_gold_to_tweeting(gold, in.accounts);
  if (gold.empty())
    throw std::runtime_error("stage eval: no gold pair has a tweeting account");

  LinkResult result;
  try {
    result = run_link(in.authors, in.accounts, config.rules, config.workers);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("stage link: ") + e.what());
  }
  auto rows = evalkit::threshold_sweep(result.selected, gold, config.eval_thresholds);
  std::filesystem::create_directories(config.out_dir);
  std::string path = config.out_dir + "/eval.tsv";
  evalkit::write_eval_tsv(path, rows);
  return path;
}

std::string cmd_report(const PipelineConfig& config) {
  Inputs in = load_inputs(config);
  LinkResult result;
  try {
    result = run_link(in.authors, in.accounts, config.rules, config.workers);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("stage link: ") + e.what());
  }
  auto bins = evalkit::make_productivity_bins(config.productivity_bin_bounds);
  evalkit::DemographicsReport report;
  report.productivity = evalkit::productivity_share_report(in.authors, result.matches, bins);
  report.domain = evalkit::domain_share_report(in.authors, result.matches, config.seed);
  report.academic_age = evalkit::academic_age_report(in.authors, result.matches, bins);
  std::filesystem::create_directories(config.out_dir);
  std::string path = config.out_dir + "/report.tsv";
  evalkit::write_report_tsv(path, report);
  return path;
}

}  // namespace scholarmatch::pipeline
