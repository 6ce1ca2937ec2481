#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scholarmatch/corpus.hpp"
#include "scholarmatch/evalkit.hpp"
#include "scholarmatch/pipeline.hpp"
#include "scholarmatch/scoring.hpp"
#include "scholarmatch/synth.hpp"

namespace py = pybind11;
namespace sm = scholarmatch;

namespace {

py::dict parsed_to_dict(const sm::namekit::ParsedName& p) {
  py::dict d;
  py::list given, surname;
  for (const auto& t : p.given_tokens) given.append(t.base);
  for (const auto& t : p.surname_tokens) surname.append(t.base);
  d["given"] = given;
  d["initials"] = p.initials;
  d["surname"] = surname;
  d["truncated"] = p.truncated;
  return d;
}

py::dict scored_to_dict(const sm::scoring::ScoredPair& sp) {
  py::dict d;
  d["author_id"] = sp.author_id;
  d["handle"] = sp.handle;
  py::list scores;
  for (int v : sp.rule_scores) scores.append(v);
  d["rule_scores"] = scores;
  d["total"] = sp.total;
  return d;
}

sm::synth::SynthSpec spec_from_kwargs(std::size_t n_authors, std::size_t n_accounts,
                                      double fraction_linked, std::uint64_t seed,
                                      bool noise) {
  sm::synth::SynthSpec spec;
  spec.n_authors = n_authors;
  spec.n_accounts = n_accounts;
  spec.fraction_linked = fraction_linked;
  spec.seed = seed;
  if (!noise) spec.noise = sm::synth::NoiseModel::none();
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "scholarmatch: author / social-account record linkage";

  m.def("normalize", [](const std::string& raw) {
    py::list out;
    for (const auto& t : sm::namekit::normalize(raw).tokens) {
      py::dict d;
      d["base"] = t.base;
      d["variants"] = t.variants;
      out.append(d);
    }
    return out;
  }, py::arg("raw"), "Lowercase, fold diacritics and tokenize a name string.");

  m.def("parse_display_name", [](const std::string& display) {
    py::list out;
    for (const auto& p : sm::namekit::parse_display_name(display))
      out.append(parsed_to_dict(p));
    return out;
  }, py::arg("display"));

  m.def("parse_handle", [](const std::string& handle) {
    py::list out;
    for (const auto& p : sm::namekit::parse_handle(handle))
      out.append(parsed_to_dict(p));
    return out;
  }, py::arg("handle"));

  m.def("freq_bucket", [](int rule, std::uint32_t count) {
    return sm::scoring::freq_bucket(rule, count, sm::scoring::RuleConfig{});
  }, py::arg("rule"), py::arg("count"),
     "Score bucket of a corpus frequency under the default rule table.");

  m.def("synth_corpus",
        [](std::size_t n_authors, std::size_t n_accounts, double fraction_linked,
           std::uint64_t seed, bool noise, const std::string& out_dir) {
          auto corpus = sm::synth::generate(
              spec_from_kwargs(n_authors, n_accounts, fraction_linked, seed, noise));
          sm::synth::write_corpus(corpus, out_dir);
          return corpus.gold.size();
        },
        py::arg("n_authors"), py::arg("n_accounts"), py::arg("fraction_linked"),
        py::arg("seed"), py::arg("noise"), py::arg("out_dir"),
        "Write a seeded synthetic corpus; returns the number of gold pairs.");

  m.def("link",
        [](const std::string& authors_path, const std::string& accounts_path,
           int min_score, unsigned workers) {
          auto authors = sm::corpus::load_authors(authors_path);
          auto accounts = sm::corpus::load_accounts(accounts_path);
          sm::scoring::RuleConfig rules;
          rules.min_total_score = min_score;
          auto result = sm::pipeline::run_link(authors, accounts, rules, workers);
          py::list out;
          for (const auto& sp : result.matches) out.append(scored_to_dict(sp));
          return out;
        },
        py::arg("authors_path"), py::arg("accounts_path"), py::arg("min_score") = 4,
        py::arg("workers") = 1,
        "Run blocking, scoring, preferred rule and threshold; returns matches.");

  m.def("evaluate",
        [](const std::string& authors_path, const std::string& accounts_path,
           const std::string& gold_path, const std::vector<int>& thresholds,
           unsigned workers) {
          auto authors = sm::corpus::load_authors(authors_path);
          auto accounts = sm::corpus::load_accounts(accounts_path);
          auto gold = sm::evalkit::restrict_gold_to_tweeting(
              sm::corpus::load_gold(gold_path), accounts);
          auto result = sm::pipeline::run_link(authors, accounts,
                                               sm::scoring::RuleConfig{}, workers);
          auto rows = sm::evalkit::threshold_sweep(result.selected, gold, thresholds);
          py::list out;
          for (const auto& r : rows) {
            py::dict d;
            d["threshold"] = r.threshold;
            d["matched_scholars"] = r.matched_scholars;
            d["precision"] = r.precision;
            d["recall"] = r.recall;
            out.append(d);
          }
          return out;
        },
        py::arg("authors_path"), py::arg("accounts_path"), py::arg("gold_path"),
        py::arg("thresholds") = std::vector<int>{6, 5, 4, 3, 2},
        py::arg("workers") = 1,
        "Threshold sweep (precision/recall rows) against a gold standard.");
}
