#include "scholarmatch/scoring.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>
#include <thread>

namespace scholarmatch::scoring {

using corpus::AuthorFeatures;
using corpus::FrequencyTables;
using corpus::PubCatalog;
using namekit::MatchEvidence;
using namekit::Token;

namespace {

int freq_score(const FreqRule& rule, std::uint32_t count) {
  if (count > rule.hi) return rule.s_hi;
  if (count >= rule.lo) return rule.s_mid;
  return rule.s_lo;
}

int split_score(const SplitRule& rule, std::uint32_t count) {
  // the gap value (exactly the boundary) resolves to the frequent bucket
  return count >= rule.boundary ? rule.s_hi : rule.s_lo;
}

}  // namespace

int freq_bucket(int rule, std::uint32_t count, const RuleConfig& config) {
  switch (rule) {
    case 1: return freq_score(config.rule1_full_name, count);
    case 2: return freq_score(config.rule2_first_name, count);
    case 3: return split_score(config.rule3_first_single, count);
    case 5: return freq_score(config.rule5_email_domain, count);
    case 6: return freq_score(config.rule6_organization, count);
    case 7: return freq_score(config.rule7_city, count);
    case 8: return split_score(config.rule8_country, count);
    default:
      throw std::invalid_argument("freq_bucket: unknown rule id " + std::to_string(rule));
  }
}

int bracket_score(const BracketRule& rule, std::uint32_t count) {
  if (count == 0) return 0;
  if (count <= rule.b1_max) return rule.s1;
  if (rule.b2_max > 0 && count <= rule.b2_max) return rule.s2;
  return rule.s3;
}

std::array<int, 5> score_name_rules(const MatchEvidence& evidence,
                                    const AuthorFeatures& features,
                                    const FrequencyTables& tables,
                                    const RuleConfig& config) {
  std::array<int, 5> s{};
  s[0] = config.rule0_score;
  if (evidence.full_name_match)
    s[1] = freq_bucket(1, corpus::table_count(tables.full_name, features.full_name), config);
  if (evidence.first_name_match)
    s[2] = freq_bucket(2, corpus::table_count(tables.first_name, features.first_name), config);
  if (evidence.first_single_match && !evidence.first_name_match)
    s[3] = freq_bucket(3, corpus::table_count(tables.first_single_name, features.first_single_name), config);
  if (evidence.author_first_absent) s[4] = config.rule4_penalty;
  return s;
}

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool url_contains_domain(const std::string& url, const std::string& domain) {
  std::string u = lowercase(url);
  // the full domain or any registrable parent of it
  std::string d = domain;
  while (true) {
    if (!d.empty() && u.find(d) != std::string::npos) return true;
    auto dot = d.find('.');
    if (dot == std::string::npos) return false;
    d = d.substr(dot + 1);
    if (d.find('.') == std::string::npos) return false;  // bare TLD
  }
}

// Whole-token phrase occurrence of `phrase` inside `text` tokens.
bool phrase_in(const std::vector<Token>& phrase, const std::vector<Token>& text) {
  if (phrase.empty() || phrase.size() > text.size()) return false;
  for (std::size_t start = 0; start + phrase.size() <= text.size(); ++start) {
    bool ok = true;
    for (std::size_t i = 0; i < phrase.size(); ++i) {
      if (!namekit::tokens_match(phrase[i], text[start + i])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Best (rarest-element) score over the author's elements of one kind.
int best_element_score(const std::vector<std::string>& elements,
                       const std::vector<Token>& profile_tokens, int rule,
                       const std::unordered_map<std::string, std::uint32_t>& table,
                       const RuleConfig& config) {
  int best = 0;
  for (const auto& element : elements) {
    std::vector<Token> phrase = namekit::normalize(element).tokens;
    if (!phrase_in(phrase, profile_tokens)) continue;
    best = std::max(best, freq_bucket(rule, corpus::table_count(table, element), config));
  }
  return best;
}

}  // namespace

std::array<int, 4> score_profile_rules(const AuthorFeatures& features,
                                       const AccountRecord& account,
                                       const FrequencyTables& tables,
                                       const RuleConfig& config) {
  std::array<int, 4> s{};
  if (!features.email_domain.empty() && account.url &&
      url_contains_domain(*account.url, features.email_domain)) {
    s[0] = freq_bucket(5, corpus::table_count(tables.email_domain, features.email_domain), config);
  }
  std::vector<Token> text;
  if (account.bio)
    for (auto& t : namekit::normalize(*account.bio).tokens) text.push_back(std::move(t));
  if (account.location)
    for (auto& t : namekit::normalize(*account.location).tokens) text.push_back(std::move(t));
  if (!text.empty()) {
    s[1] = best_element_score(features.organizations, text, 6, tables.organization, config);
    s[2] = best_element_score(features.cities, text, 7, tables.city, config);
    s[3] = best_element_score(features.countries, text, 8, tables.country, config);
  }
  return s;
}

std::array<int, 4> score_activity_rules(const AuthorRecord& author,
                                        const AccountRecord& account,
                                        const PubCatalog& catalog,
                                        const RuleConfig& config) {
  std::array<int, 4> s{};
  std::set<std::string> author_pubs;
  std::set<std::string> author_journals;
  std::set<std::string> author_topics;
  for (const auto& p : author.publications) {
    author_pubs.insert(p.pub_id);
    if (!p.journal_id.empty()) author_journals.insert(p.journal_id);
    author_topics.insert(p.micro_topic_ids.begin(), p.micro_topic_ids.end());
  }

  std::uint32_t n_self = 0;
  std::set<std::string> shared_topics;
  std::set<std::string> shared_journals;
  for (const auto& pub_id : account.tweeted_pub_ids) {
    if (author_pubs.contains(pub_id)) {
      ++n_self;
      continue;  // rules 10 and 12 exclude self-tweeted papers
    }
    auto it = catalog.find(pub_id);
    if (it == catalog.end()) continue;
    for (const auto& topic : it->second.micro_topic_ids)
      if (author_topics.contains(topic)) shared_topics.insert(topic);
    if (!it->second.journal_id.empty() && author_journals.contains(it->second.journal_id))
      shared_journals.insert(it->second.journal_id);
  }

  s[0] = bracket_score(config.rule9_self_tweets, n_self);
  s[1] = bracket_score(config.rule10_topics, static_cast<std::uint32_t>(shared_topics.size()));
  bool comentioned = std::any_of(
      account.comention_pub_ids.begin(), account.comention_pub_ids.end(),
      [&](const std::string& id) { return author_pubs.contains(id); });
  if (comentioned) s[2] = config.rule11_comention;
  s[3] = bracket_score(config.rule12_journals, static_cast<std::uint32_t>(shared_journals.size()));
  return s;
}

int score_commonness(const std::string& handle,
                     const std::unordered_map<std::string, std::uint32_t>& candidate_counts,
                     const RuleConfig& config) {
  auto it = candidate_counts.find(handle);
  if (it == candidate_counts.end())
    throw std::invalid_argument("score_commonness: handle not in candidate counts: " + handle);
  return bracket_score(config.rule13_commonness, it->second);
}

ScoredPair score_pair(const AuthorRecord& author, const AuthorFeatures& features,
                      const AccountRecord& account, const MatchEvidence& evidence,
                      const FrequencyTables& tables, const PubCatalog& catalog,
                      const std::unordered_map<std::string, std::uint32_t>& candidate_counts,
                      const RuleConfig& config) {
  ScoredPair sp;
  sp.author_id = author.author_id;
  sp.handle = account.handle;
  auto name = score_name_rules(evidence, features, tables, config);
  auto profile = score_profile_rules(features, account, tables, config);
  auto activity = score_activity_rules(author, account, catalog, config);
  for (int i = 0; i < 5; ++i) sp.rule_scores[i] = name[i];
  for (int i = 0; i < 4; ++i) sp.rule_scores[5 + i] = profile[i];
  for (int i = 0; i < 4; ++i) sp.rule_scores[9 + i] = activity[i];
  sp.rule_scores[13] = score_commonness(account.handle, candidate_counts, config);
  sp.total = 0;
  for (int v : sp.rule_scores) sp.total += v;
  return sp;
}

std::vector<ScoredPair> score_candidates(const std::vector<linker::CandidatePair>& candidates,
                                         const std::vector<AuthorRecord>& authors,
                                         const std::vector<AccountRecord>& accounts,
                                         const FrequencyTables& tables,
                                         const PubCatalog& catalog,
                                         const RuleConfig& config,
                                         unsigned workers) {
  // rule 13 needs the handle -> distinct-author counts over the whole
  // candidate set before any selection
  std::unordered_map<std::string, std::uint32_t> counts;
  for (const auto& c : candidates) ++counts[accounts[c.account_idx].handle];

  std::unordered_map<std::size_t, AuthorFeatures> feature_cache;
  for (const auto& c : candidates) {
    if (!feature_cache.contains(c.author_idx))
      feature_cache.emplace(c.author_idx, corpus::author_features(authors[c.author_idx]));
  }

  std::vector<ScoredPair> out(candidates.size());
  if (workers < 1) workers = 1;
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < candidates.size(); i += workers) {
      const auto& c = candidates[i];
      out[i] = score_pair(authors[c.author_idx], feature_cache.at(c.author_idx),
                          accounts[c.account_idx], c.evidence, tables, catalog,
                          counts, config);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  return out;
}

std::vector<ScoredPair> apply_preferred_rule(const std::vector<ScoredPair>& scored) {
  std::unordered_map<std::string, int> max_total;
  for (const auto& sp : scored) {
    auto [it, inserted] = max_total.emplace(sp.author_id, sp.total);
    if (!inserted) it->second = std::max(it->second, sp.total);
  }
  std::vector<ScoredPair> out;
  for (const auto& sp : scored)
    if (sp.total == max_total.at(sp.author_id)) out.push_back(sp);
  return out;
}

std::vector<ScoredPair> filter_threshold(const std::vector<ScoredPair>& selected,
                                         int min_total_score) {
  std::vector<ScoredPair> out;
  for (const auto& sp : selected)
    if (sp.total >= min_total_score) out.push_back(sp);
  return out;
}

void write_pairs_tsv(const std::string& path, const std::vector<ScoredPair>& pairs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << "author_id\thandle";
  for (int i = 0; i < kNumRules; ++i) out << "\trule" << i;
  out << "\ttotal\n";
  for (const auto& sp : pairs) {
    out << sp.author_id << '\t' << sp.handle;
    for (int v : sp.rule_scores) out << '\t' << v;
    out << '\t' << sp.total << '\n';
  }
}

}  // namespace scholarmatch::scoring
