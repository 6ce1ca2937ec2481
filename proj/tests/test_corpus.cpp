#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "scholarmatch/corpus.hpp"

using namespace scholarmatch;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = (std::filesystem::temp_directory_path() /
            ("sm_corpus_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++) + ".txt"))
               .string();
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const char* kAuthorLine =
    R"({"author_id":"a1","surname":"Silva","first_name":"Maria","initials":"M",)"
    R"("email_domain":"uni-x.nl","affiliations":[{"organization":"Uni X","city":"Leiden","country":"Netherlands"}],)"
    R"("publications":[{"pub_id":"p1","journal_id":"j1","micro_topic_ids":["t1"],"domain":"Natural","year":2010}],)"
    R"("year_first_pub":2010})";

}  // namespace

TEST_CASE("load_authors: empty file yields empty list") {
  TempFile f("");
  CHECK(corpus::load_authors(f.path).empty());
}

TEST_CASE("load_authors: well-formed line round trip") {
  TempFile f(std::string(kAuthorLine) + "\n");
  auto authors = corpus::load_authors(f.path);
  REQUIRE(authors.size() == 1);
  CHECK(authors[0].author_id == "a1");
  CHECK(authors[0].surname == "Silva");
  CHECK(authors[0].first_name == "Maria");
  CHECK(authors[0].publications.size() == 1);
  CHECK(authors[0].publications[0].domain == Domain::Natural);
}

TEST_CASE("load_authors: missing surname names the field and line") {
  TempFile f("{\"author_id\":\"a1\",\"initials\":\"M\",\"year_first_pub\":2000}\n");
  try {
    corpus::load_authors(f.path);
    FAIL("expected LoadError");
  } catch (const corpus::LoadError& e) {
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("surname") != std::string::npos);
  }
}

TEST_CASE("load_authors: duplicate author_id rejected") {
  TempFile f(std::string(kAuthorLine) + "\n" + kAuthorLine + "\n");
  CHECK_THROWS_AS(corpus::load_authors(f.path), corpus::LoadError);
}

TEST_CASE("load_authors: year_first_pub above earliest publication rejected") {
  std::string line = kAuthorLine;
  line.replace(line.find("\"year_first_pub\":2010"), 21, "\"year_first_pub\":2012");
  TempFile f(line + "\n");
  CHECK_THROWS_AS(corpus::load_authors(f.path), corpus::LoadError);
}

TEST_CASE("load_authors: missing file") {
  CHECK_THROWS(corpus::load_authors("/nonexistent/authors.jsonl"));
}

TEST_CASE("load_accounts: legal handle accepted, long handle rejected") {
  TempFile ok(R"({"handle":"a_b_c99","display_name":"A B"})"
              "\n");
  auto accounts = corpus::load_accounts(ok.path);
  REQUIRE(accounts.size() == 1);
  CHECK(accounts[0].handle == "a_b_c99");

  TempFile bad(R"({"handle":"sixteen_chars_xx","display_name":"A"})"
               "\n");
  CHECK_THROWS_AS(corpus::load_accounts(bad.path), corpus::LoadError);

  TempFile illegal(R"({"handle":"has-dash","display_name":"A"})"
                   "\n");
  CHECK_THROWS_AS(corpus::load_accounts(illegal.path), corpus::LoadError);
}

TEST_CASE("load_accounts: 20-char display name is kept and flagged downstream") {
  std::string twenty = "Maria Christina Silv";
  TempFile f(R"({"handle":"msilva","display_name":")" + twenty + R"("})" "\n");
  auto accounts = corpus::load_accounts(f.path);
  REQUIRE(accounts.size() == 1);
  auto parses = namekit::parse_display_name(accounts[0].display_name);
  REQUIRE(!parses.empty());
  CHECK(parses[0].truncated);
}

TEST_CASE("load_gold: round trip, duplicates rejected, 627 rows load") {
  TempFile f("author_id,handle\na1,drsilva\n");
  auto gold = corpus::load_gold(f.path);
  REQUIRE(gold.size() == 1);
  CHECK(gold[0].author_id == "a1");
  CHECK(gold[0].handle == "drsilva");

  TempFile dup("a1,drsilva\na1,drsilva\n");
  CHECK_THROWS_AS(corpus::load_gold(dup.path), corpus::LoadError);

  std::string many;
  for (int i = 0; i < 627; ++i)
    many += "a" + std::to_string(i) + ",h" + std::to_string(i) + "\n";
  TempFile big(many);
  CHECK(corpus::load_gold(big.path).size() == 627);
}

TEST_CASE("frequency tables count distinct authors per normalized feature") {
  std::vector<AuthorRecord> authors;
  for (int i = 0; i < 3; ++i) {
    AuthorRecord a;
    a.author_id = "a" + std::to_string(i);
    a.surname = "Silva";
    a.first_name = "Maria";
    a.initials = "M";
    authors.push_back(a);
  }
  auto tables = corpus::build_frequency_tables(authors);
  CHECK(corpus::table_count(tables.full_name, "maria silva") == 3);
  CHECK(corpus::table_count(tables.first_name, "maria") == 3);
  CHECK(corpus::table_count(tables.first_single_name, "maria") == 3);
}

TEST_CASE("an author with two affiliations in one city counts once") {
  // hand count on a 5-author toy corpus: the double-affiliation author
  // contributes 1 to leiden, the others 1 each to their cities
  std::vector<AuthorRecord> authors;
  auto add = [&](const std::string& id, std::vector<Affiliation> affs) {
    AuthorRecord a;
    a.author_id = id;
    a.surname = "S" + id;
    a.initials = "X";
    a.affiliations = std::move(affs);
    authors.push_back(a);
  };
  add("a1", {{"Uni A", "Leiden", "NL"}, {"Uni B", "Leiden", "NL"}});
  add("a2", {{"Uni C", "Leiden", "NL"}});
  add("a3", {{"Uni D", "Delft", "NL"}});
  add("a4", {{"Uni E", "Delft", "NL"}});
  add("a5", {{"Uni F", "Lyon", "FR"}});
  auto tables = corpus::build_frequency_tables(authors);
  CHECK(corpus::table_count(tables.city, "leiden") == 2);
  CHECK(corpus::table_count(tables.city, "delft") == 2);
  CHECK(corpus::table_count(tables.city, "lyon") == 1);
  CHECK(corpus::table_count(tables.country, "nl") == 4);
}

TEST_CASE("absent email domain contributes nothing") {
  AuthorRecord a;
  a.author_id = "a1";
  a.surname = "Silva";
  a.initials = "M";
  auto tables = corpus::build_frequency_tables({a});
  CHECK(tables.email_domain.empty());
}

TEST_CASE("initials-only authors still enter the full-name table") {
  AuthorRecord a;
  a.author_id = "a1";
  a.surname = "Silva";
  a.initials = "MC";
  auto tables = corpus::build_frequency_tables({a});
  CHECK(corpus::table_count(tables.full_name, "mc silva") == 1);
}

TEST_CASE("every author finds its own features with count >= 1") {
  std::vector<AuthorRecord> authors;
  AuthorRecord a;
  a.author_id = "a1";
  a.surname = "Müller";
  a.first_name = "José";
  a.initials = "J";
  a.email_domain = "Uni-X.NL";
  a.affiliations = {{"Uni X", "Leiden", "Netherlands"}};
  authors.push_back(a);
  auto tables = corpus::build_frequency_tables(authors);
  auto f = corpus::author_features(authors[0]);
  CHECK(corpus::table_count(tables.full_name, f.full_name) >= 1);
  CHECK(corpus::table_count(tables.first_name, f.first_name) >= 1);
  CHECK(corpus::table_count(tables.first_single_name, f.first_single_name) >= 1);
  CHECK(corpus::table_count(tables.email_domain, f.email_domain) >= 1);
  for (const auto& o : f.organizations)
    CHECK(corpus::table_count(tables.organization, o) >= 1);
  for (const auto& c : f.cities) CHECK(corpus::table_count(tables.city, c) >= 1);
  for (const auto& c : f.countries) CHECK(corpus::table_count(tables.country, c) >= 1);
}

TEST_CASE("rebuilding tables is deterministic") {
  std::vector<AuthorRecord> authors;
  for (int i = 0; i < 20; ++i) {
    AuthorRecord a;
    a.author_id = "a" + std::to_string(i);
    a.surname = i % 2 ? "Silva" : "Muller";
    a.first_name = i % 3 ? std::optional<std::string>("Maria") : std::nullopt;
    a.initials = "M";
    authors.push_back(a);
  }
  auto t1 = corpus::build_frequency_tables(authors);
  auto t2 = corpus::build_frequency_tables(authors);
  CHECK(t1.full_name == t2.full_name);
  CHECK(t1.first_name == t2.first_name);
}

TEST_CASE("write/load round trip preserves records") {
  AuthorRecord a;
  a.author_id = "a1";
  a.surname = "Silva";
  a.first_name = "Maria";
  a.initials = "MC";
  a.email_domain = "uni-x.nl";
  a.affiliations = {{"Uni X", "Leiden", "Netherlands"}};
  PubRef p;
  p.pub_id = "p1";
  p.journal_id = "j1";
  p.micro_topic_ids = {"t1", "t2"};
  p.domain = Domain::MedicalLife;
  p.year = 2001;
  a.publications = {p};
  a.year_first_pub = 2001;

  auto dir = std::filesystem::temp_directory_path() / "sm_roundtrip";
  std::filesystem::create_directories(dir);
  corpus::write_authors((dir / "authors.jsonl").string(), {a});
  auto back = corpus::load_authors((dir / "authors.jsonl").string());
  REQUIRE(back.size() == 1);
  CHECK(back[0].author_id == a.author_id);
  CHECK(back[0].first_name == a.first_name);
  CHECK(back[0].publications[0].micro_topic_ids == p.micro_topic_ids);
  CHECK(back[0].publications[0].domain == Domain::MedicalLife);
  std::filesystem::remove_all(dir);
}
