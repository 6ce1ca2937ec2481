#include <doctest.h>

#include <set>

#include "scholarmatch/linker.hpp"
#include "scholarmatch/synth.hpp"

using namespace scholarmatch;

namespace {

AuthorRecord author(const std::string& id, const std::string& surname,
                    const std::string& first, const std::string& initials) {
  AuthorRecord a;
  a.author_id = id;
  a.surname = surname;
  if (!first.empty()) a.first_name = first;
  a.initials = initials;
  return a;
}

AccountRecord account(const std::string& handle, const std::string& display) {
  AccountRecord t;
  t.handle = handle;
  t.display_name = display;
  return t;
}

using Pair = std::pair<std::string, std::string>;

std::set<Pair> pair_set(const std::vector<linker::CandidatePair>& candidates,
                        const std::vector<AuthorRecord>& authors,
                        const std::vector<AccountRecord>& accounts) {
  std::set<Pair> out;
  for (const auto& c : candidates)
    out.insert({authors[c.author_idx].author_id, accounts[c.account_idx].handle});
  return out;
}

// Independent of the index: test every author against every account.
std::set<Pair> all_pairs_oracle(const std::vector<AuthorRecord>& authors,
                                const std::vector<AccountRecord>& accounts) {
  std::set<Pair> out;
  for (const auto& a : authors) {
    auto prof = namekit::make_name_profile(a);
    for (const auto& t : accounts) {
      auto ev = linker::best_evidence(prof, linker::account_hypotheses(t));
      if (ev.surname_match && ev.initial_match) out.insert({a.author_id, t.handle});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("index covers diacritic variants of a surname") {
  std::vector<AuthorRecord> authors = {author("a1", "Müller", "Maria", "M")};
  auto index = linker::SurnameIndex::build(authors);
  CHECK(index.lookup("muller") != nullptr);
  CHECK(index.lookup("mueller") != nullptr);
}

TEST_CASE("two authors sharing a surname share a bucket") {
  std::vector<AuthorRecord> authors = {author("a1", "Silva", "Maria", "M"),
                                       author("a2", "Silva", "Pedro", "P")};
  auto index = linker::SurnameIndex::build(authors);
  const auto* bucket = index.lookup("silva");
  REQUIRE(bucket != nullptr);
  CHECK(bucket->size() == 2);
}

TEST_CASE("empty author list yields an empty index") {
  auto index = linker::SurnameIndex::build({});
  CHECK(index.size() == 0);
}

TEST_CASE("candidate generation enforces the initial") {
  // hand-enumerated: "Maria Silva" carries initial m, so only M. Silva pairs
  std::vector<AuthorRecord> authors = {author("a1", "Silva", "Maria", "M"),
                                       author("a2", "Silva", "Pedro", "P")};
  std::vector<AccountRecord> accounts = {account("maria_s", "Maria Silva")};
  auto index = linker::SurnameIndex::build(authors);
  auto candidates = linker::generate_candidates(authors, accounts, index);
  CHECK(pair_set(candidates, authors, accounts) == std::set<Pair>{{"a1", "maria_s"}});
}

TEST_CASE("handle without initial evidence produces no pair") {
  std::vector<AuthorRecord> authors = {author("a1", "Silva", "Maria", "M")};
  std::vector<AccountRecord> accounts = {account("drsilva", "")};
  auto index = linker::SurnameIndex::build(authors);
  auto candidates = linker::generate_candidates(authors, accounts, index);
  CHECK(candidates.empty());
}

TEST_CASE("blocking equals the all-pairs oracle on a 300x300 synthetic corpus") {
  synth::SynthSpec spec;
  spec.n_authors = 300;
  spec.n_accounts = 300;
  spec.fraction_linked = 0.4;
  spec.seed = 7;
  auto corpus = synth::generate(spec);
  auto index = linker::SurnameIndex::build(corpus.authors);
  auto blocked = linker::generate_candidates(corpus.authors, corpus.accounts, index);
  CHECK(pair_set(blocked, corpus.authors, corpus.accounts) ==
        all_pairs_oracle(corpus.authors, corpus.accounts));
  CHECK(!blocked.empty());
}

TEST_CASE("candidate output is sorted and worker-count independent") {
  synth::SynthSpec spec;
  spec.n_authors = 200;
  spec.n_accounts = 150;
  spec.seed = 3;
  auto corpus = synth::generate(spec);
  auto index = linker::SurnameIndex::build(corpus.authors);
  auto one = linker::generate_candidates(corpus.authors, corpus.accounts, index, 1);
  auto eight = linker::generate_candidates(corpus.authors, corpus.accounts, index, 8);
  REQUIRE(one.size() == eight.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].author_idx == eight[i].author_idx);
    CHECK(one[i].account_idx == eight[i].account_idx);
  }
  for (std::size_t i = 1; i < one.size(); ++i) {
    const auto& prev = corpus.authors[one[i - 1].author_idx].author_id;
    const auto& cur = corpus.authors[one[i].author_idx].author_id;
    CHECK(prev <= cur);
  }
}

TEST_CASE("every candidate satisfies the rule-0 condition") {
  synth::SynthSpec spec;
  spec.n_authors = 100;
  spec.n_accounts = 100;
  spec.seed = 11;
  auto corpus = synth::generate(spec);
  auto index = linker::SurnameIndex::build(corpus.authors);
  for (const auto& c :
       linker::generate_candidates(corpus.authors, corpus.accounts, index)) {
    CHECK(c.evidence.surname_match);
    CHECK(c.evidence.initial_match);
  }
}
