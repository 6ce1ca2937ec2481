#include "scholarmatch/linker.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace scholarmatch::linker {

using namekit::MatchEvidence;
using namekit::NameProfile;
using namekit::ParsedName;

SurnameIndex SurnameIndex::build(const std::vector<AuthorRecord>& authors) {
  SurnameIndex index;
  index.profiles_.reserve(authors.size());
  for (std::size_t i = 0; i < authors.size(); ++i) {
    NameProfile prof = namekit::make_name_profile(authors[i]);
    Entry entry{i, prof.first_initial};
    std::set<std::string> keys;
    for (auto& k : namekit::joined_variants(prof.surname, true)) keys.insert(std::move(k));
    for (auto& k : namekit::joined_variants(prof.surname, false)) keys.insert(std::move(k));
    for (const auto& k : keys) {
      if (k.empty()) continue;
      index.exact_[k].push_back(entry);
      index.ordered_[k].push_back(entry);
    }
    index.profiles_.push_back(std::move(prof));
  }
  return index;
}

const std::vector<SurnameIndex::Entry>* SurnameIndex::lookup(
    const std::string& key) const {
  auto it = exact_.find(key);
  return it == exact_.end() ? nullptr : &it->second;
}

std::vector<SurnameIndex::Entry> SurnameIndex::lookup_prefix(
    const std::string& prefix) const {
  std::vector<Entry> out;
  if (prefix.size() < 2) return out;
  for (auto it = ordered_.lower_bound(prefix);
       it != ordered_.end() && it->first.compare(0, prefix.size(), prefix) == 0;
       ++it) {
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

std::vector<ParsedName> account_hypotheses(const AccountRecord& account) {
  std::vector<ParsedName> hyps = namekit::parse_display_name(account.display_name);
  for (auto& h : namekit::parse_handle(account.handle)) hyps.push_back(std::move(h));
  return hyps;
}

MatchEvidence best_evidence(const NameProfile& profile,
                            const std::vector<ParsedName>& hypotheses) {
  MatchEvidence best;
  best.author_first_absent = !profile.first.empty();
  for (const auto& h : hypotheses)
    best = namekit::combine_evidence(best, namekit::name_compatible(profile, h));
  return best;
}

namespace {

void candidates_for_account(const std::vector<AccountRecord>& accounts,
                            std::size_t account_idx, const SurnameIndex& index,
                            std::vector<CandidatePair>& out) {
  std::vector<ParsedName> hyps = account_hypotheses(accounts[account_idx]);
  if (hyps.empty()) return;

  std::set<std::size_t> candidates;
  for (const auto& h : hyps) {
    if (h.surname_tokens.empty()) continue;
    std::set<std::string> keys;
    for (auto& k : namekit::joined_variants(h.surname_tokens, true)) keys.insert(std::move(k));
    for (auto& k : namekit::joined_variants(h.surname_tokens, false)) keys.insert(std::move(k));
    for (const auto& k : keys) {
      if (const auto* hit = index.lookup(k))
        for (const auto& e : *hit) candidates.insert(e.author_idx);
      if (h.truncated)
        for (const auto& e : index.lookup_prefix(k)) candidates.insert(e.author_idx);
    }
  }

  for (std::size_t author_idx : candidates) {
    MatchEvidence ev = best_evidence(index.profiles()[author_idx], hyps);
    if (ev.surname_match && ev.initial_match)
      out.push_back({author_idx, account_idx, ev});
  }
}

}  // namespace

std::vector<CandidatePair> generate_candidates(
    const std::vector<AuthorRecord>& authors,
    const std::vector<AccountRecord>& accounts, const SurnameIndex& index,
    unsigned workers) {
  if (workers < 1) workers = 1;
  std::vector<std::vector<CandidatePair>> partial(workers);

  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < accounts.size(); i += workers)
      candidates_for_account(accounts, i, index, partial[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  std::vector<CandidatePair> out;
  for (auto& p : partial)
    out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(), [&](const CandidatePair& a, const CandidatePair& b) {
    const std::string& aid = authors[a.author_idx].author_id;
    const std::string& bid = authors[b.author_idx].author_id;
    if (aid != bid) return aid < bid;
    return accounts[a.account_idx].handle < accounts[b.account_idx].handle;
  });
  return out;
}

}  // namespace scholarmatch::linker
