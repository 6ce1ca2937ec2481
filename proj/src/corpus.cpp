#include "scholarmatch/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <set>
#include <unordered_set>

#include <json.hpp>

namespace scholarmatch::corpus {

using nlohmann::json;

namespace {

int current_year() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  return tm.tm_year + 1900;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return in;
}

std::string require_string(const json& j, const char* field,
                           const std::string& path, std::size_t line) {
  if (!j.contains(field) || !j[field].is_string() ||
      j[field].get<std::string>().empty())
    throw LoadError(path, line, std::string("missing or empty field \"") + field + "\"");
  return j[field].get<std::string>();
}

std::optional<std::string> optional_string(const json& j, const char* field) {
  if (j.contains(field) && j[field].is_string() && !j[field].get<std::string>().empty())
    return j[field].get<std::string>();
  return std::nullopt;
}

bool legal_handle(const std::string& h) {
  if (h.empty() || h.size() > 15) return false;
  return std::all_of(h.begin(), h.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

std::size_t utf8_length(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

}  // namespace

std::vector<AuthorRecord> load_authors(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::vector<AuthorRecord> out;
  std::unordered_set<std::string> seen_ids;
  const int year_hi = current_year();
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw LoadError(path, lineno, std::string("malformed JSON: ") + e.what());
    }
    AuthorRecord a;
    a.author_id = require_string(j, "author_id", path, lineno);
    a.surname = require_string(j, "surname", path, lineno);
    a.initials = require_string(j, "initials", path, lineno);
    a.first_name = optional_string(j, "first_name");
    a.email_domain = optional_string(j, "email_domain");
    if (!seen_ids.insert(a.author_id).second)
      throw LoadError(path, lineno, "duplicate author_id \"" + a.author_id + "\"");
    if (j.contains("affiliations")) {
      for (const auto& aj : j["affiliations"]) {
        Affiliation aff;
        aff.organization = aj.value("organization", "");
        aff.city = aj.value("city", "");
        aff.country = aj.value("country", "");
        if (aff.organization.empty() && aff.city.empty() && aff.country.empty())
          throw LoadError(path, lineno, "affiliation with all fields empty");
        a.affiliations.push_back(std::move(aff));
      }
    }
    std::unordered_set<std::string> pub_ids;
    if (j.contains("publications")) {
      for (const auto& pj : j["publications"]) {
        PubRef p;
        p.pub_id = require_string(pj, "pub_id", path, lineno);
        if (!pub_ids.insert(p.pub_id).second)
          throw LoadError(path, lineno, "duplicate pub_id \"" + p.pub_id + "\"");
        p.journal_id = pj.value("journal_id", "");
        if (pj.contains("micro_topic_ids"))
          for (const auto& t : pj["micro_topic_ids"])
            p.micro_topic_ids.insert(t.get<std::string>());
        std::string dom = pj.value("domain", "Other");
        auto d = domain_from_name(dom);
        if (!d) throw LoadError(path, lineno, "unknown domain \"" + dom + "\"");
        p.domain = *d;
        p.year = pj.value("year", 0);
        if (p.year < 1980 || p.year > year_hi)
          throw LoadError(path, lineno,
                          "publication year out of range: " + std::to_string(p.year));
        a.publications.push_back(std::move(p));
      }
    }
    if (!j.contains("year_first_pub") || !j["year_first_pub"].is_number_integer())
      throw LoadError(path, lineno, "missing or non-integer field \"year_first_pub\"");
    a.year_first_pub = j["year_first_pub"].get<int>();
    if (!a.publications.empty()) {
      int min_year = a.publications[0].year;
      for (const auto& p : a.publications) min_year = std::min(min_year, p.year);
      if (a.year_first_pub > min_year)
        throw LoadError(path, lineno, "year_first_pub exceeds earliest publication year");
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<AccountRecord> load_accounts(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::vector<AccountRecord> out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw LoadError(path, lineno, std::string("malformed JSON: ") + e.what());
    }
    AccountRecord t;
    t.handle = require_string(j, "handle", path, lineno);
    if (!legal_handle(t.handle))
      throw LoadError(path, lineno, "illegal handle \"" + t.handle + "\"");
    if (!seen.insert(t.handle).second)
      throw LoadError(path, lineno, "duplicate handle \"" + t.handle + "\"");
    t.display_name = j.value("display_name", "");
    if (utf8_length(t.display_name) > 20)
      throw LoadError(path, lineno, "display_name longer than 20 characters");
    t.url = optional_string(j, "url");
    t.bio = optional_string(j, "bio");
    t.location = optional_string(j, "location");
    if (j.contains("tweeted_pub_ids"))
      for (const auto& p : j["tweeted_pub_ids"])
        t.tweeted_pub_ids.insert(p.get<std::string>());
    if (j.contains("comention_pub_ids"))
      for (const auto& p : j["comention_pub_ids"])
        t.comention_pub_ids.insert(p.get<std::string>());
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<GoldPair> load_gold(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::vector<GoldPair> out;
  std::set<GoldPair> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line == "author_id,handle") continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw LoadError(path, lineno, "expected two comma-separated columns");
    GoldPair g{line.substr(0, comma), line.substr(comma + 1)};
    if (g.author_id.empty() || g.handle.empty())
      throw LoadError(path, lineno, "empty field in gold pair");
    if (!seen.insert(g).second)
      throw LoadError(path, lineno, "duplicate gold pair " + g.author_id + "," + g.handle);
    out.push_back(std::move(g));
  }
  return out;
}

void write_authors(const std::string& path, const std::vector<AuthorRecord>& authors) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  for (const auto& a : authors) {
    json j;
    j["author_id"] = a.author_id;
    j["surname"] = a.surname;
    if (a.first_name) j["first_name"] = *a.first_name;
    j["initials"] = a.initials;
    if (a.email_domain) j["email_domain"] = *a.email_domain;
    json affs = json::array();
    for (const auto& aff : a.affiliations)
      affs.push_back({{"organization", aff.organization},
                      {"city", aff.city},
                      {"country", aff.country}});
    j["affiliations"] = std::move(affs);
    json pubs = json::array();
    for (const auto& p : a.publications) {
      json pj;
      pj["pub_id"] = p.pub_id;
      pj["journal_id"] = p.journal_id;
      pj["micro_topic_ids"] = p.micro_topic_ids;
      pj["domain"] = domain_name(p.domain);
      pj["year"] = p.year;
      pubs.push_back(std::move(pj));
    }
    j["publications"] = std::move(pubs);
    j["year_first_pub"] = a.year_first_pub;
    out << j.dump() << '\n';
  }
}

void write_accounts(const std::string& path, const std::vector<AccountRecord>& accounts) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  for (const auto& t : accounts) {
    json j;
    j["handle"] = t.handle;
    j["display_name"] = t.display_name;
    if (t.url) j["url"] = *t.url;
    if (t.bio) j["bio"] = *t.bio;
    if (t.location) j["location"] = *t.location;
    j["tweeted_pub_ids"] = t.tweeted_pub_ids;
    j["comention_pub_ids"] = t.comention_pub_ids;
    out << j.dump() << '\n';
  }
}

void write_gold(const std::string& path, const std::vector<GoldPair>& gold) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << "author_id,handle\n";
  for (const auto& g : gold) out << g.author_id << ',' << g.handle << '\n';
}

AuthorFeatures author_features(const AuthorRecord& author) {
  return author_features(author, namekit::make_name_profile(author));
}

AuthorFeatures author_features(const AuthorRecord& author,
                               const namekit::NameProfile& profile) {
  AuthorFeatures f;
  std::string surname_key;
  for (const auto& t : profile.surname) {
    if (!surname_key.empty()) surname_key += ' ';
    surname_key += t.base;
  }
  if (!profile.first.empty()) {
    for (const auto& t : profile.first) {
      if (!f.first_name.empty()) f.first_name += ' ';
      f.first_name += t.base;
    }
    f.first_single_name = profile.first[0].base;
    f.full_name = f.first_name + " " + surname_key;
  } else {
    // initials-only authors still get a full-name key
    f.full_name = profile.initials + " " + surname_key;
  }
  if (author.email_domain) {
    f.email_domain = *author.email_domain;
    std::transform(f.email_domain.begin(), f.email_domain.end(),
                   f.email_domain.begin(),
                   [](char c) { return static_cast<char>(std::tolower(c)); });
  }
  std::set<std::string> orgs, cities, countries;
  for (const auto& aff : author.affiliations) {
    if (!aff.organization.empty())
      orgs.insert(namekit::render(namekit::normalize(aff.organization)));
    if (!aff.city.empty())
      cities.insert(namekit::render(namekit::normalize(aff.city)));
    if (!aff.country.empty())
      countries.insert(namekit::render(namekit::normalize(aff.country)));
  }
  f.organizations.assign(orgs.begin(), orgs.end());
  f.cities.assign(cities.begin(), cities.end());
  f.countries.assign(countries.begin(), countries.end());
  return f;
}

std::uint32_t table_count(const std::unordered_map<std::string, std::uint32_t>& table,
                          const std::string& key) {
  auto it = table.find(key);
  return it == table.end() ? 0 : it->second;
}

FrequencyTables build_frequency_tables(const std::vector<AuthorRecord>& authors) {
  FrequencyTables tables;
  for (const auto& a : authors) {
    AuthorFeatures f = author_features(a);
    if (!f.full_name.empty()) ++tables.full_name[f.full_name];
    if (!f.first_name.empty()) ++tables.first_name[f.first_name];
    if (!f.first_single_name.empty()) ++tables.first_single_name[f.first_single_name];
    if (!f.email_domain.empty()) ++tables.email_domain[f.email_domain];
    // distinct authors per key: AuthorFeatures already dedupes per author
    for (const auto& o : f.organizations) ++tables.organization[o];
    for (const auto& c : f.cities) ++tables.city[c];
    for (const auto& c : f.countries) ++tables.country[c];
  }
  return tables;
}

PubCatalog build_pub_catalog(const std::vector<AuthorRecord>& authors) {
  PubCatalog catalog;
  for (const auto& a : authors) {
    for (const auto& p : a.publications) {
      PubInfo& info = catalog[p.pub_id];
      if (info.journal_id.empty()) info.journal_id = p.journal_id;
      info.micro_topic_ids.insert(p.micro_topic_ids.begin(), p.micro_topic_ids.end());
    }
  }
  return catalog;
}

}  // namespace scholarmatch::corpus
