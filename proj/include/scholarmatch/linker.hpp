#ifndef SCHOLARMATCH_LINKER_HPP
#define SCHOLARMATCH_LINKER_HPP

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "scholarmatch/namekit.hpp"
#include "scholarmatch/types.hpp"

namespace scholarmatch::linker {

// Blocking index: every diacritic/hyphen variant of every surname, both
// space-joined and concatenated, maps to the authors carrying it.
class SurnameIndex {
 public:
  struct Entry {
    std::size_t author_idx;
    char first_initial;
  };

  static SurnameIndex build(const std::vector<AuthorRecord>& authors);

  const std::vector<Entry>* lookup(const std::string& key) const;
  // Authors whose key starts with `prefix` (truncated display names).
  std::vector<Entry> lookup_prefix(const std::string& prefix) const;

  const std::vector<namekit::NameProfile>& profiles() const { return profiles_; }
  std::size_t size() const { return exact_.size(); }

 private:
  std::unordered_map<std::string, std::vector<Entry>> exact_;
  std::map<std::string, std::vector<Entry>> ordered_;
  std::vector<namekit::NameProfile> profiles_;
};

// Candidate pair surviving the surname+initial blocking condition, with
// the strongest evidence over all name hypotheses from both fields.
struct CandidatePair {
  std::size_t author_idx;
  std::size_t account_idx;
  namekit::MatchEvidence evidence;
};

// Strongest combined evidence of `account` against one author profile,
// over every display-name and handle hypothesis.
namekit::MatchEvidence best_evidence(const namekit::NameProfile& profile,
                                     const std::vector<namekit::ParsedName>& hypotheses);

std::vector<namekit::ParsedName> account_hypotheses(const AccountRecord& account);

// Surname+initial blocked candidate generation; output sorted by
// (author_id, handle) regardless of worker count.
std::vector<CandidatePair> generate_candidates(
    const std::vector<AuthorRecord>& authors,
    const std::vector<AccountRecord>& accounts, const SurnameIndex& index,
    unsigned workers = 1);

}  // namespace scholarmatch::linker

#endif  // SCHOLARMATCH_LINKER_HPP
