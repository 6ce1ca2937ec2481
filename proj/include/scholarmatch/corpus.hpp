#ifndef SCHOLARMATCH_CORPUS_HPP
#define SCHOLARMATCH_CORPUS_HPP

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "scholarmatch/namekit.hpp"
#include "scholarmatch/types.hpp"

namespace scholarmatch::corpus {

// Input error carrying the file and line it was found on.
class LoadError : public std::runtime_error {
 public:
  LoadError(const std::string& path, std::size_t line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::vector<AuthorRecord> load_authors(const std::string& path);
std::vector<AccountRecord> load_accounts(const std::string& path);
std::vector<GoldPair> load_gold(const std::string& path);

void write_authors(const std::string& path, const std::vector<AuthorRecord>& authors);
void write_accounts(const std::string& path, const std::vector<AccountRecord>& accounts);
void write_gold(const std::string& path, const std::vector<GoldPair>& gold);

// Normalized feature keys for one author, as used by the frequency tables
// and the scoring rules.
struct AuthorFeatures {
  std::string full_name;          // "maria silva" or "mc silva" when initials-only
  std::string first_name;         // empty when absent
  std::string first_single_name;  // first token of the first name
  std::string email_domain;       // lowercase, empty when absent
  std::vector<std::string> organizations;  // distinct, normalized
  std::vector<std::string> cities;
  std::vector<std::string> countries;
};

AuthorFeatures author_features(const AuthorRecord& author);
AuthorFeatures author_features(const AuthorRecord& author,
                               const namekit::NameProfile& profile);

// Counts of distinct authors per normalized feature value.
struct FrequencyTables {
  std::unordered_map<std::string, std::uint32_t> full_name;
  std::unordered_map<std::string, std::uint32_t> first_name;
  std::unordered_map<std::string, std::uint32_t> first_single_name;
  std::unordered_map<std::string, std::uint32_t> email_domain;
  std::unordered_map<std::string, std::uint32_t> organization;
  std::unordered_map<std::string, std::uint32_t> city;
  std::unordered_map<std::string, std::uint32_t> country;
};

std::uint32_t table_count(const std::unordered_map<std::string, std::uint32_t>& table,
                          const std::string& key);

FrequencyTables build_frequency_tables(const std::vector<AuthorRecord>& authors);

// Publication metadata pooled over all authors, for the activity rules.
struct PubInfo {
  std::string journal_id;
  std::set<std::string> micro_topic_ids;
};

using PubCatalog = std::unordered_map<std::string, PubInfo>;

PubCatalog build_pub_catalog(const std::vector<AuthorRecord>& authors);

}  // namespace scholarmatch::corpus

#endif  // SCHOLARMATCH_CORPUS_HPP
