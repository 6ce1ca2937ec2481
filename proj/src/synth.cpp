#include "scholarmatch/synth.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "scholarmatch/corpus.hpp"

namespace scholarmatch::synth {

namespace {

struct WeightedName {
  const char* text;
  double weight;
};

// Frequency-skewed pools so every Table-1 bucket gets exercised: a few
// names shared by dozens of authors, a long tail of rare ones.
const WeightedName kSurnames[] = {
    {"Smith", 18}, {"Wang", 16}, {"Garcia", 12}, {"Silva", 12}, {"Muller", 10},
    {"Johnson", 8}, {"Brown", 7}, {"Jones", 6}, {"Kim", 6}, {"Tanaka", 5},
    {"Rossi", 4}, {"Novak", 4}, {"Jansen", 4}, {"Kowalski", 3}, {"Petrov", 3},
    {"Andersson", 3}, {"Dubois", 2.5}, {"Sanchez-Gil", 2.5}, {"Okafor", 2},
    {"Haugen", 2}, {"Castellanos", 1.5}, {"Szabo", 1.5}, {"Lindqvist", 1},
    {"Vermeulen", 1}, {"Oyelaran", 0.8}, {"Thorvaldsen", 0.8}, {"Mbeki", 0.6},
    {"Quispe", 0.6}, {"Baranauskas", 0.4}, {"Frankopan", 0.4}, {"Yilmazoglu", 0.3},
    {"Achterberg", 0.3}, {"Zylberstein", 0.2}, {"Okonkwo-Bell", 0.2},
    {"Huttenlocher", 0.15}, {"Grimaldi", 0.15}, {"Wachowiak", 0.1},
    {"Nakagawa-Ito", 0.1}, {"Balakrishnan", 0.1}, {"Oduya", 0.05},
};

const WeightedName kFirstNames[] = {
    {"Maria", 16}, {"John", 14}, {"Wei", 12}, {"Anna", 10}, {"David", 9},
    {"Sarah", 8}, {"Michael", 7}, {"Laura", 6}, {"Peter", 6}, {"Yuki", 5},
    {"Carlos", 4}, {"Elena", 4}, {"Thomas", 4}, {"Julia", 3}, {"Ahmed", 3},
    {"Sofia", 2.5}, {"Lars", 2}, {"Ingrid", 2}, {"Rajesh", 1.5}, {"Chiara", 1.5},
    {"Bogdan", 1}, {"Nadia", 1}, {"Tormod", 0.8}, {"Yewande", 0.6},
    {"Casimir", 0.4}, {"Perpetua", 0.3}, {"Eleuterio", 0.2}, {"Zsofia", 0.2},
    {"Olamide", 0.1}, {"Thaddeus", 0.1},
};

const WeightedName kDomains[] = {
    {"uni-leiden.nl", 14}, {"oxbridge.ac.uk", 10}, {"statecollege.edu", 10},
    {"pacific-u.edu", 7}, {"tu-berlin.de", 6}, {"univ-lyon.fr", 5},
    {"tokyotech.jp", 4}, {"andes-inst.cl", 3}, {"northlab.se", 2},
    {"riverside-med.org", 1.5}, {"polar-obs.no", 0.8}, {"savanna-ri.za", 0.4},
};

struct Institution {
  const char* org;
  const char* city;
  const char* country;
  double weight;
};

const Institution kInstitutions[] = {
    {"Leiden University", "Leiden", "Netherlands", 10},
    {"State College", "Springfield", "United States", 9},
    {"Pacific University", "San Francisco", "United States", 8},
    {"Technical University Berlin", "Berlin", "Germany", 7},
    {"University of Lyon", "Lyon", "France", 6},
    {"Tokyo Institute", "Tokyo", "Japan", 5},
    {"Oxbridge College", "Cambridge", "United Kingdom", 5},
    {"Andes Institute", "Santiago", "Chile", 3},
    {"North Lab", "Stockholm", "Sweden", 2.5},
    {"Riverside Medical Center", "Toronto", "Canada", 2},
    {"Polar Observatory", "Tromso", "Norway", 1},
    {"Savanna Research Institute", "Pretoria", "South Africa", 0.6},
};

template <typename T, std::size_t N>
std::discrete_distribution<std::size_t> make_dist(const T (&pool)[N]) {
  std::vector<double> weights;
  for (const auto& e : pool) weights.push_back(e.weight);
  return std::discrete_distribution<std::size_t>(weights.begin(), weights.end());
}

bool chance(std::mt19937_64& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Strip non-alphanumerics for handle material ("Sanchez-Gil" -> "SanchezGil").
std::string handleize(const std::string& s) {
  std::string out;
  for (char c : s)
    if (std::isalnum(static_cast<unsigned char>(c))) out += c;
  return out;
}

// Substitute a diacritic spelling into a display name (u -> u-umlaut) or
// its expansion into a handle (u -> ue).
std::string add_diacritic(const std::string& s, bool ascii_only) {
  auto pos = s.find('u');
  if (pos == std::string::npos || pos == 0) return s;
  if (ascii_only) return s.substr(0, pos) + "ue" + s.substr(pos + 1);
  return s.substr(0, pos) + "\xc3\xbc" + s.substr(pos + 1);  // ü
}

std::size_t utf8_clip(std::string& s, std::size_t max_cp) {
  std::size_t n = 0, i = 0;
  while (i < s.size()) {
    if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
      if (n == max_cp) {
        s.resize(i);
        return n;
      }
      ++n;
    }
    ++i;
  }
  return n;
}

struct AuthorSeed {
  std::string first_name;  // always known, possibly absent from the record
  std::string surname;
  Domain primary_domain;
};

}  // namespace

void SynthSpec::validate() const {
  if (n_authors == 0) throw std::invalid_argument("synth: n_authors must be positive");
  if (fraction_linked < 0.0 || fraction_linked > 1.0)
    throw std::invalid_argument("synth: fraction_linked must be in [0,1]");
  auto in01 = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!in01(noise.initials_only_prob) || !in01(noise.diacritic_prob) ||
      !in01(noise.truncation_prob) || !in01(noise.handle_scramble_prob) ||
      !in01(noise.drop_profile_prob))
    throw std::invalid_argument("synth: noise probabilities must be in [0,1]");
  std::size_t n_linked = static_cast<std::size_t>(fraction_linked * n_accounts + 0.5);
  if (n_linked > n_authors)
    throw std::invalid_argument("synth: more linked accounts than authors");
}

SynthCorpus generate(const SynthSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  SynthCorpus corpus;

  auto surname_dist = make_dist(kSurnames);
  auto first_dist = make_dist(kFirstNames);
  auto domain_dist = make_dist(kDomains);
  auto inst_dist = make_dist(kInstitutions);
  std::discrete_distribution<std::size_t> pubs_bin({30, 15, 15, 15, 12, 8, 5});
  std::discrete_distribution<std::size_t> sci_domain({15, 10, 35, 30, 10});

  std::vector<AuthorSeed> seeds(spec.n_authors);
  std::vector<std::string> all_pub_ids;
  std::size_t pub_counter = 0;

  for (std::size_t i = 0; i < spec.n_authors; ++i) {
    AuthorRecord a;
    AuthorSeed& seed = seeds[i];
    char idbuf[16];
    std::snprintf(idbuf, sizeof idbuf, "a%05zu", i);
    a.author_id = idbuf;
    seed.surname = kSurnames[surname_dist(rng)].text;
    seed.first_name = kFirstNames[first_dist(rng)].text;
    a.surname = seed.surname;
    a.initials.assign(1, seed.first_name[0]);
    if (chance(rng, 0.3))  // middle initial
      a.initials += static_cast<char>('A' + pick(rng, 0, 25));
    if (!chance(rng, spec.noise.initials_only_prob)) a.first_name = seed.first_name;
    if (chance(rng, 0.85)) a.email_domain = kDomains[domain_dist(rng)].text;

    std::size_t n_affs = chance(rng, 0.25) ? 2 : 1;
    std::set<std::size_t> chosen;
    while (a.affiliations.size() < n_affs) {
      std::size_t k = inst_dist(rng);
      if (!chosen.insert(k).second) continue;
      a.affiliations.push_back({kInstitutions[k].org, kInstitutions[k].city,
                                kInstitutions[k].country});
    }

    seed.primary_domain = static_cast<Domain>(sci_domain(rng));
    static const std::pair<std::size_t, std::size_t> kBins[] = {
        {1, 1}, {2, 2}, {3, 4}, {5, 9}, {10, 19}, {20, 49}, {50, 80}};
    auto [blo, bhi] = kBins[pubs_bin(rng)];
    std::size_t n_pubs = pick(rng, blo, bhi);

    int start_year = static_cast<int>(pick(rng, 1980, 2012));
    a.year_first_pub = start_year;
    std::size_t n_journals = pick(rng, 1, 4);
    std::vector<std::string> journals;
    for (std::size_t j = 0; j < n_journals; ++j)
      journals.push_back("j" + std::to_string(pick(rng, 0, 39)));
    std::size_t n_topics = pick(rng, 2, 5);
    std::vector<std::string> topics;
    for (std::size_t j = 0; j < n_topics; ++j)
      topics.push_back("t" + std::to_string(pick(rng, 0, 59)));

    for (std::size_t p = 0; p < n_pubs; ++p) {
      PubRef pub;
      pub.pub_id = "p" + std::to_string(pub_counter++);
      pub.journal_id = journals[pick(rng, 0, journals.size() - 1)];
      std::size_t nt = pick(rng, 1, std::min<std::size_t>(3, topics.size()));
      for (std::size_t t = 0; t < nt; ++t)
        pub.micro_topic_ids.insert(topics[pick(rng, 0, topics.size() - 1)]);
      pub.domain = chance(rng, 0.8) ? seed.primary_domain
                                    : static_cast<Domain>(sci_domain(rng));
      pub.year = (p == 0) ? start_year
                          : static_cast<int>(pick(rng, start_year, 2015));
      all_pub_ids.push_back(pub.pub_id);
      a.publications.push_back(std::move(pub));
    }
    corpus.authors.push_back(std::move(a));
  }

  // which authors hold an account
  std::size_t n_linked =
      static_cast<std::size_t>(spec.fraction_linked * spec.n_accounts + 0.5);
  std::vector<std::size_t> order(spec.n_authors);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(n_linked);

  std::unordered_set<std::string> used_handles;
  auto unique_handle = [&](std::string base) {
    if (base.empty()) base = "user";
    utf8_clip(base, 15);
    std::string h = base;
    std::size_t n = 2;
    while (used_handles.contains(h) || h.size() > 15) {
      std::string suffix = std::to_string(n++);
      h = base.substr(0, 15 - suffix.size()) + suffix;
    }
    used_handles.insert(h);
    return h;
  };

  auto pick_background_pubs = [&](std::set<std::string>& dst, std::size_t n) {
    for (std::size_t i = 0; i < n && !all_pub_ids.empty(); ++i)
      dst.insert(all_pub_ids[pick(rng, 0, all_pub_ids.size() - 1)]);
  };

  bool noiseless = spec.noise.drop_profile_prob == 0.0 &&
                   spec.noise.initials_only_prob == 0.0;

  for (std::size_t idx : order) {
    const AuthorRecord& a = corpus.authors[idx];
    const AuthorSeed& seed = seeds[idx];
    AccountRecord t;

    std::string first = seed.first_name;
    std::string surname = seed.surname;
    if (chance(rng, spec.noise.diacritic_prob)) surname = add_diacritic(surname, false);

    // display name
    if (!a.first_name) {
      std::string inits;
      for (char c : a.initials) {
        inits += static_cast<char>(std::toupper(c));
        inits += '.';
      }
      t.display_name = inits + " " + surname;
    } else {
      // abbreviated displays are a noise source: an initials-only display
      // can tie with an identically named author's account
      std::size_t style = noiseless ? 0 : pick(rng, 0, 9);
      if (style < 7) t.display_name = first + " " + surname;
      else if (style < 9) t.display_name = std::string(1, first[0]) + ". " + surname;
      else t.display_name = "Dr " + first + " " + surname;
    }
    if (chance(rng, spec.noise.truncation_prob))
      t.display_name += " " + std::string(a.affiliations[0].organization);
    utf8_clip(t.display_name, 20);

    // handle
    std::string hsur = handleize(seed.surname);
    if (chance(rng, spec.noise.diacritic_prob)) hsur = add_diacritic(hsur, true);
    std::string base;
    if (chance(rng, spec.noise.handle_scramble_prob)) {
      base = "sci";
      for (int i = 0; i < 8; ++i) base += static_cast<char>('a' + pick(rng, 0, 25));
    } else {
      switch (pick(rng, 0, 3)) {
        case 0: base = first + "_" + hsur; break;
        case 1: base = first + hsur; break;
        case 2: base = lower(std::string(1, first[0]) + hsur); break;
        default: base = lower(first + hsur); break;
      }
    }
    t.handle = unique_handle(base);

    // activity: always at least one self-tweet
    std::vector<std::string> own;
    for (const auto& p : a.publications) own.push_back(p.pub_id);
    std::shuffle(own.begin(), own.end(), rng);
    std::size_t n_self = std::min<std::size_t>(own.size(), pick(rng, 1, 8));
    if (noiseless) n_self = std::min<std::size_t>(own.size(), 6);
    for (std::size_t i = 0; i < n_self; ++i) t.tweeted_pub_ids.insert(own[i]);
    pick_background_pubs(t.tweeted_pub_ids, pick(rng, 0, 4));
    if (noiseless || chance(rng, 0.4)) t.comention_pub_ids.insert(own[0]);

    // profile fields
    if (noiseless || !chance(rng, spec.noise.drop_profile_prob)) {
      const Affiliation& aff = a.affiliations[0];
      t.bio = "Researcher at " + aff.organization + ", " + aff.country;
      t.location = aff.city;
      if (a.email_domain) t.url = "https://www." + *a.email_domain + "/~" + lower(hsur);
    }

    corpus.gold.push_back({a.author_id, t.handle});
    corpus.accounts.push_back(std::move(t));
  }

  // decoy accounts drawn from the same name pools
  while (corpus.accounts.size() < spec.n_accounts) {
    AccountRecord t;
    std::string first = kFirstNames[first_dist(rng)].text;
    std::string surname = kSurnames[surname_dist(rng)].text;
    std::size_t style = pick(rng, 0, 5);
    if (style < 3) t.display_name = first + " " + surname;
    else if (style < 4) t.display_name = std::string(1, first[0]) + ". " + surname;
    else if (style < 5) t.display_name = first;  // first name only
    else t.display_name = "The " + surname + " Lab";
    utf8_clip(t.display_name, 20);
    std::string base = chance(rng, 0.5) ? first + "_" + handleize(surname)
                                        : lower(first + handleize(surname));
    t.handle = unique_handle(base);
    pick_background_pubs(t.tweeted_pub_ids, pick(rng, 0, 6));
    if (chance(rng, 0.3)) {
      const Institution& inst = kInstitutions[inst_dist(rng)];
      t.bio = "Science fan, " + std::string(inst.city);
    }
    corpus.accounts.push_back(std::move(t));
  }

  std::shuffle(corpus.accounts.begin(), corpus.accounts.end(), rng);
  std::sort(corpus.gold.begin(), corpus.gold.end());
  return corpus;
}

void write_corpus(const SynthCorpus& corpus, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  corpus::write_authors(out_dir + "/authors.jsonl", corpus.authors);
  corpus::write_accounts(out_dir + "/accounts.jsonl", corpus.accounts);
  corpus::write_gold(out_dir + "/gold.csv", corpus.gold);
}

}  // namespace scholarmatch::synth
