#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "scholarmatch/corpus.hpp"
#include "scholarmatch/evalkit.hpp"
#include "scholarmatch/pipeline.hpp"
#include "scholarmatch/synth.hpp"

using namespace scholarmatch;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("sm_pipe_" + std::to_string(counter++) + "_" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this) & 0xffff));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("synth: same seed reproduces the corpus byte for byte") {
  synth::SynthSpec spec;
  spec.n_authors = 120;
  spec.n_accounts = 80;
  spec.seed = 42;
  TempDir d1, d2;
  synth::write_corpus(synth::generate(spec), d1.path.string());
  synth::write_corpus(synth::generate(spec), d2.path.string());
  for (const char* name : {"authors.jsonl", "accounts.jsonl", "gold.csv"})
    CHECK(slurp(d1.path / name) == slurp(d2.path / name));
  CHECK(slurp(d1.path / "authors.jsonl") != "");
}

TEST_CASE("synth: different seeds differ") {
  synth::SynthSpec a, b;
  a.n_authors = b.n_authors = 100;
  a.n_accounts = b.n_accounts = 60;
  a.seed = 1;
  b.seed = 2;
  auto ca = synth::generate(a);
  auto cb = synth::generate(b);
  CHECK(ca.gold != cb.gold);
}

TEST_CASE("synth: corpus sizes and gold shape honor the spec") {
  synth::SynthSpec spec;
  spec.n_authors = 200;
  spec.n_accounts = 100;
  spec.fraction_linked = 0.5;
  spec.seed = 9;
  auto c = synth::generate(spec);
  CHECK(c.authors.size() == 200);
  CHECK(c.accounts.size() == 100);
  CHECK(c.gold.size() == 50);
  std::set<std::string> handles;
  for (const auto& t : c.accounts) handles.insert(t.handle);
  CHECK(handles.size() == c.accounts.size());
  std::set<std::string> author_ids;
  for (const auto& a : c.authors) author_ids.insert(a.author_id);
  for (const auto& g : c.gold) {
    CHECK(author_ids.count(g.author_id) == 1);
    CHECK(handles.count(g.handle) == 1);
  }
}

TEST_CASE("synth: fraction_linked 0 gives an empty gold set") {
  synth::SynthSpec spec;
  spec.n_authors = 50;
  spec.n_accounts = 30;
  spec.fraction_linked = 0.0;
  spec.seed = 4;
  CHECK(synth::generate(spec).gold.empty());
}

TEST_CASE("synth: invalid specs rejected") {
  synth::SynthSpec spec;
  spec.fraction_linked = 1.5;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.fraction_linked = 0.5;
  spec.n_authors = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("synth output survives the corpus loaders' validation") {
  synth::SynthSpec spec;
  spec.n_authors = 150;
  spec.n_accounts = 90;
  spec.seed = 13;
  TempDir d;
  synth::write_corpus(synth::generate(spec), d.path.string());
  auto authors = corpus::load_authors((d.path / "authors.jsonl").string());
  auto accounts = corpus::load_accounts((d.path / "accounts.jsonl").string());
  auto gold = corpus::load_gold((d.path / "gold.csv").string());
  CHECK(authors.size() == 150);
  CHECK(accounts.size() == 90);
  CHECK(!gold.empty());
}

TEST_CASE("noiseless corpus: every link is recovered exactly at threshold 4") {
  synth::SynthSpec spec;
  spec.n_authors = 300;
  spec.n_accounts = 150;
  spec.fraction_linked = 0.6;
  spec.noise = synth::NoiseModel::none();
  spec.seed = 21;
  auto c = synth::generate(spec);
  scoring::RuleConfig rules;
  auto result = pipeline::run_link(c.authors, c.accounts, rules);
  auto kept = scoring::filter_threshold(result.selected, 4);
  auto [p, r] = evalkit::precision_recall(kept, c.gold);
  CHECK(p == doctest::Approx(1.0));
  CHECK(r == doctest::Approx(1.0));
}

TEST_CASE("run_link: matches are a threshold subset of selected") {
  synth::SynthSpec spec;
  spec.n_authors = 200;
  spec.n_accounts = 120;
  spec.seed = 6;
  auto c = synth::generate(spec);
  scoring::RuleConfig rules;
  auto r = pipeline::run_link(c.authors, c.accounts, rules);
  CHECK(r.matches.size() <= r.selected.size());
  CHECK(r.selected.size() <= r.scored.size());
  for (const auto& m : r.matches) CHECK(m.total >= rules.min_total_score);
  // raising the threshold keeps a subset
  auto strict = scoring::filter_threshold(r.selected, rules.min_total_score + 3);
  CHECK(strict.size() <= r.matches.size());
}

TEST_CASE("cmd_link output is deterministic across runs and workers") {
  synth::SynthSpec spec;
  spec.n_authors = 250;
  spec.n_accounts = 120;
  spec.seed = 17;
  TempDir data;
  synth::write_corpus(synth::generate(spec), data.path.string());

  auto run = [&](unsigned workers, const fs::path& out) {
    pipeline::PipelineConfig cfg;
    cfg.authors_path = (data.path / "authors.jsonl").string();
    cfg.accounts_path = (data.path / "accounts.jsonl").string();
    cfg.out_dir = out.string();
    cfg.workers = workers;
    return pipeline::cmd_link(cfg);
  };
  TempDir o1, o2, o3;
  auto p1 = run(1, o1.path);
  auto p2 = run(1, o2.path);
  auto p3 = run(8, o3.path);
  CHECK(slurp(p1) == slurp(p2));
  CHECK(slurp(p1) == slurp(p3));
  std::ifstream in(p1);
  std::string header;
  std::getline(in, header);
  CHECK(header.find("author_id") != std::string::npos);
  CHECK(header.find("total") != std::string::npos);
}

TEST_CASE("cmd_eval writes one row per threshold") {
  synth::SynthSpec spec;
  spec.n_authors = 200;
  spec.n_accounts = 100;
  spec.noise = synth::NoiseModel::none();
  spec.seed = 23;
  TempDir data, out;
  synth::write_corpus(synth::generate(spec), data.path.string());
  pipeline::PipelineConfig cfg;
  cfg.authors_path = (data.path / "authors.jsonl").string();
  cfg.accounts_path = (data.path / "accounts.jsonl").string();
  cfg.gold_path = (data.path / "gold.csv").string();
  cfg.out_dir = out.path.string();
  auto path = pipeline::cmd_eval(cfg);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "threshold\tmatched_scholars\tprecision\trecall");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 5);
}

TEST_CASE("cmd_eval rejects gold referencing unknown authors") {
  synth::SynthSpec spec;
  spec.n_authors = 50;
  spec.n_accounts = 30;
  spec.seed = 2;
  TempDir data, out;
  auto c = synth::generate(spec);
  synth::write_corpus(c, data.path.string());
  std::ofstream gold(data.path / "bad_gold.csv");
  gold << "author_id,handle\nnobody," << c.accounts[0].handle << "\n";
  gold.close();
  pipeline::PipelineConfig cfg;
  cfg.authors_path = (data.path / "authors.jsonl").string();
  cfg.accounts_path = (data.path / "accounts.jsonl").string();
  cfg.gold_path = (data.path / "bad_gold.csv").string();
  cfg.out_dir = out.path.string();
  try {
    pipeline::cmd_eval(cfg);
    FAIL("expected an error naming the unknown author");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("nobody") != std::string::npos);
  }
}

TEST_CASE("cmd_report writes the three demographic sections") {
  synth::SynthSpec spec;
  spec.n_authors = 150;
  spec.n_accounts = 80;
  spec.seed = 31;
  TempDir data, out;
  synth::write_corpus(synth::generate(spec), data.path.string());
  pipeline::PipelineConfig cfg;
  cfg.authors_path = (data.path / "authors.jsonl").string();
  cfg.accounts_path = (data.path / "accounts.jsonl").string();
  cfg.out_dir = out.path.string();
  auto path = pipeline::cmd_report(cfg);
  auto text = slurp(path);
  CHECK(text.find("productivity") != std::string::npos);
  CHECK(text.find("domain") != std::string::npos);
  CHECK(text.find("academic_age") != std::string::npos);
}

TEST_CASE("config file overrides rule parameters, unknown keys rejected") {
  TempDir d;
  auto cfg_path = (d.path / "rules.cfg").string();
  {
    std::ofstream out(cfg_path);
    out << "# comment\n"
        << "min_score = 7\n"
        << "rule11.score = 9\n"
        << "rule1_full_name.freq_hi = 99\n"
        << "workers = 4\n";
  }
  pipeline::PipelineConfig cfg;
  pipeline::apply_config_file(cfg, cfg_path);
  CHECK(cfg.rules.min_total_score == 7);
  CHECK(cfg.rules.rule11_comention == 9);
  CHECK(cfg.rules.rule1_full_name.hi == 99);
  CHECK(cfg.workers == 4);

  {
    std::ofstream out(cfg_path);
    out << "no_such_knob = 1\n";
  }
  pipeline::PipelineConfig fresh;
  try {
    pipeline::apply_config_file(fresh, cfg_path);
    FAIL("expected an error naming the key");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("no_such_knob") != std::string::npos);
  }
}

TEST_CASE("config template round-trips through the parser") {
  TempDir d;
  auto path = (d.path / "template.cfg").string();
  pipeline::write_config_template(path);
  pipeline::PipelineConfig cfg;
  pipeline::apply_config_file(cfg, path);  // defaults in, defaults out
  scoring::RuleConfig defaults;
  CHECK(cfg.rules.min_total_score == defaults.min_total_score);
  CHECK(cfg.rules.rule1_full_name.hi == defaults.rule1_full_name.hi);
}
