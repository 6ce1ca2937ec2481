#include "scholarmatch/evalkit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace scholarmatch::evalkit {

using scoring::ScoredPair;

std::pair<double, double> precision_recall(const std::vector<ScoredPair>& predicted,
                                           const std::vector<GoldPair>& gold) {
  if (gold.empty()) throw std::invalid_argument("precision_recall: empty gold standard");
  std::unordered_set<std::string> gold_authors;
  std::set<std::pair<std::string, std::string>> gold_pairs;
  for (const auto& g : gold) {
    gold_authors.insert(g.author_id);
    gold_pairs.insert({g.author_id, g.handle});
  }
  std::size_t n_predicted = 0;
  std::set<std::pair<std::string, std::string>> correct;
  for (const auto& sp : predicted) {
    if (!gold_authors.contains(sp.author_id)) continue;
    ++n_predicted;
    if (gold_pairs.contains({sp.author_id, sp.handle}))
      correct.insert({sp.author_id, sp.handle});
  }
  // no assertions about gold authors means nothing asserted is wrong
  double precision = n_predicted == 0
                         ? 1.0
                         : static_cast<double>(correct.size()) / static_cast<double>(n_predicted);
  double recall = static_cast<double>(correct.size()) / static_cast<double>(gold_pairs.size());
  return {precision, recall};
}

std::vector<PrSweepRow> threshold_sweep(const std::vector<ScoredPair>& selected,
                                        const std::vector<GoldPair>& gold,
                                        const std::vector<int>& thresholds) {
  std::vector<PrSweepRow> rows;
  for (int t : thresholds) {
    std::vector<ScoredPair> filtered = scoring::filter_threshold(selected, t);
    std::unordered_set<std::string> matched;
    for (const auto& sp : filtered) matched.insert(sp.author_id);
    auto [p, r] = precision_recall(filtered, gold);
    rows.push_back({t, matched.size(), p, r});
  }
  return rows;
}

std::vector<GoldPair> restrict_gold_to_tweeting(const std::vector<GoldPair>& gold,
                                                const std::vector<AccountRecord>& accounts) {
  std::unordered_set<std::string> tweeting;
  for (const auto& t : accounts)
    if (!t.tweeted_pub_ids.empty()) tweeting.insert(t.handle);
  std::vector<GoldPair> out;
  for (const auto& g : gold)
    if (tweeting.contains(g.handle)) out.push_back(g);
  return out;
}

Domain assign_main_domain(const AuthorRecord& author, std::uint64_t seed) {
  if (author.publications.empty())
    throw std::invalid_argument("assign_main_domain: author " + author.author_id +
                                " has no publications");
  std::map<Domain, std::size_t> counts;
  for (const auto& p : author.publications) ++counts[p.domain];
  std::size_t best = 0;
  for (const auto& [d, n] : counts) best = std::max(best, n);
  std::vector<Domain> tied;
  for (const auto& [d, n] : counts)
    if (n == best) tied.push_back(d);
  if (tied.size() == 1) return tied[0];
  // seeded, order-independent tie break
  std::uint64_t h = seed;
  for (char c : author.author_id) h = h * 1099511628211ULL + static_cast<unsigned char>(c);
  std::mt19937_64 rng(h);
  return tied[rng() % tied.size()];
}

std::vector<ProductivityBin> default_productivity_bins() {
  return make_productivity_bins({1, 2, 3, 5, 10, 20, 50});
}

std::vector<ProductivityBin> make_productivity_bins(const std::vector<std::uint32_t>& lower_bounds) {
  if (lower_bounds.empty())
    throw std::invalid_argument("make_productivity_bins: no bin boundaries");
  std::vector<std::uint32_t> bounds = lower_bounds;
  std::sort(bounds.begin(), bounds.end());
  std::vector<ProductivityBin> bins;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    ProductivityBin b;
    b.lo = bounds[i];
    b.hi = (i + 1 < bounds.size()) ? bounds[i + 1] - 1
                                   : std::numeric_limits<std::uint32_t>::max();
    if (b.hi == std::numeric_limits<std::uint32_t>::max())
      b.label = ">=" + std::to_string(b.lo);
    else if (b.lo == b.hi)
      b.label = std::to_string(b.lo);
    else
      b.label = std::to_string(b.lo) + "-" + std::to_string(b.hi);
    bins.push_back(std::move(b));
  }
  return bins;
}

namespace {

std::unordered_set<std::string> matched_authors(const std::vector<ScoredPair>& matches) {
  std::unordered_set<std::string> out;
  for (const auto& sp : matches) out.insert(sp.author_id);
  return out;
}

int bin_of(const std::vector<ProductivityBin>& bins, std::size_t n_pubs) {
  for (std::size_t i = 0; i < bins.size(); ++i)
    if (n_pubs >= bins[i].lo && n_pubs <= bins[i].hi) return static_cast<int>(i);
  return -1;
}

}  // namespace

std::vector<ShareRow> productivity_share_report(const std::vector<AuthorRecord>& authors,
                                                const std::vector<ScoredPair>& matches,
                                                const std::vector<ProductivityBin>& bins) {
  auto matched = matched_authors(matches);
  std::vector<std::size_t> total(bins.size(), 0), on_twitter(bins.size(), 0);
  for (const auto& a : authors) {
    int b = bin_of(bins, a.publications.size());
    if (b < 0) continue;
    ++total[b];
    if (matched.contains(a.author_id)) ++on_twitter[b];
  }
  std::vector<ShareRow> rows;
  for (std::size_t i = 0; i < bins.size(); ++i) {
    double share = total[i] == 0 ? 0.0
                                 : static_cast<double>(on_twitter[i]) /
                                       static_cast<double>(total[i]);
    rows.push_back({bins[i].label, total[i], share});
  }
  return rows;
}

std::vector<ShareRow> domain_share_report(const std::vector<AuthorRecord>& authors,
                                          const std::vector<ScoredPair>& matches,
                                          std::uint64_t seed) {
  auto matched = matched_authors(matches);
  std::map<Domain, std::pair<std::size_t, std::size_t>> per_domain;  // total, matched
  for (const auto& a : authors) {
    if (a.publications.empty()) continue;
    Domain d = assign_main_domain(a, seed);
    auto& [total, on] = per_domain[d];
    ++total;
    if (matched.contains(a.author_id)) ++on;
  }
  std::vector<ShareRow> rows;
  for (Domain d : {Domain::SocialBehavioral, Domain::LawArtsHumanities,
                   Domain::MedicalLife, Domain::Natural, Domain::Other}) {
    auto it = per_domain.find(d);
    std::size_t total = it == per_domain.end() ? 0 : it->second.first;
    std::size_t on = it == per_domain.end() ? 0 : it->second.second;
    double share = total == 0 ? 0.0 : static_cast<double>(on) / static_cast<double>(total);
    rows.push_back({domain_name(d), total, share});
  }
  return rows;
}

std::vector<AgeRow> academic_age_report(const std::vector<AuthorRecord>& authors,
                                        const std::vector<ScoredPair>& matches,
                                        const std::vector<ProductivityBin>& bins) {
  auto matched = matched_authors(matches);
  struct Acc {
    std::size_t n_m = 0, n_u = 0;
    double sum_m = 0.0, sum_u = 0.0;
  };
  std::vector<Acc> acc(bins.size());
  for (const auto& a : authors) {
    int b = bin_of(bins, a.publications.size());
    if (b < 0) continue;
    if (matched.contains(a.author_id)) {
      ++acc[b].n_m;
      acc[b].sum_m += a.year_first_pub;
    } else {
      ++acc[b].n_u;
      acc[b].sum_u += a.year_first_pub;
    }
  }
  std::vector<AgeRow> rows;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < bins.size(); ++i) {
    if (acc[i].n_m == 0 && acc[i].n_u == 0) continue;  // empty bins are absent
    AgeRow r;
    r.bin = bins[i].label;
    r.n_matched = acc[i].n_m;
    r.n_unmatched = acc[i].n_u;
    r.mean_yfp_matched = acc[i].n_m ? acc[i].sum_m / acc[i].n_m : nan;
    r.mean_yfp_unmatched = acc[i].n_u ? acc[i].sum_u / acc[i].n_u : nan;
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_eval_tsv(const std::string& path, const std::vector<PrSweepRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << "threshold\tmatched_scholars\tprecision\trecall\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d\t%zu\t%.6f\t%.6f\n", r.threshold,
                  r.matched_scholars, r.precision, r.recall);
    out << buf;
  }
}

void write_report_tsv(const std::string& path, const DemographicsReport& report) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  char buf[160];
  out << "section\tkey\tn_scholars\tshare_on_twitter\n";
  for (const auto& r : report.productivity) {
    std::snprintf(buf, sizeof buf, "productivity\t%s\t%zu\t%.6f\n", r.key.c_str(),
                  r.n_scholars, r.share_on_twitter);
    out << buf;
  }
  for (const auto& r : report.domain) {
    std::snprintf(buf, sizeof buf, "domain\t%s\t%zu\t%.6f\n", r.key.c_str(),
                  r.n_scholars, r.share_on_twitter);
    out << buf;
  }
  out << "section\tbin\tn_matched\tn_unmatched\tmean_yfp_matched\tmean_yfp_unmatched\n";
  for (const auto& r : report.academic_age) {
    std::snprintf(buf, sizeof buf, "academic_age\t%s\t%zu\t%zu\t%.4f\t%.4f\n",
                  r.bin.c_str(), r.n_matched, r.n_unmatched, r.mean_yfp_matched,
                  r.mean_yfp_unmatched);
    out << buf;
  }
}

}  // namespace scholarmatch::evalkit
