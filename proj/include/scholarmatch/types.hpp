#ifndef SCHOLARMATCH_TYPES_HPP
#define SCHOLARMATCH_TYPES_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace scholarmatch {

enum class Domain {
  SocialBehavioral,
  LawArtsHumanities,
  MedicalLife,
  Natural,
  Other,
};

const char* domain_name(Domain d);
std::optional<Domain> domain_from_name(const std::string& name);

struct Affiliation {
  std::string organization;
  std::string city;
  std::string country;
};

struct PubRef {
  std::string pub_id;
  std::string journal_id;
  std::set<std::string> micro_topic_ids;
  Domain domain = Domain::Other;
  int year = 0;
};

struct AuthorRecord {
  std::string author_id;
  std::string surname;
  std::optional<std::string> first_name;
  std::string initials;  // >= 1 letter, WoS order
  std::optional<std::string> email_domain;
  std::vector<Affiliation> affiliations;
  std::vector<PubRef> publications;
  int year_first_pub = 0;
};

struct AccountRecord {
  std::string handle;        // 1-15 chars, [A-Za-z0-9_]
  std::string display_name;  // <= 20 chars
  std::optional<std::string> url;
  std::optional<std::string> bio;
  std::optional<std::string> location;
  std::set<std::string> tweeted_pub_ids;
  std::set<std::string> comention_pub_ids;
};

struct GoldPair {
  std::string author_id;
  std::string handle;

  friend bool operator==(const GoldPair&, const GoldPair&) = default;
  friend auto operator<=>(const GoldPair&, const GoldPair&) = default;
};

}  // namespace scholarmatch

#endif  // SCHOLARMATCH_TYPES_HPP
