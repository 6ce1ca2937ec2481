#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "scholarmatch/pipeline.hpp"
#include "scholarmatch/synth.hpp"

namespace sm = scholarmatch;

int main(int argc, char** argv) {
  CLI::App app{"scholarmatch: link publication authors to social-media accounts"};
  app.require_subcommand(1);

  sm::pipeline::PipelineConfig config;
  std::string config_path;
  int min_score = -1000;  // sentinel: keep config value

  auto add_common = [&](CLI::App* cmd, bool needs_inputs) {
    if (needs_inputs) {
      cmd->add_option("--authors", config.authors_path, "authors.jsonl path")->required();
      cmd->add_option("--accounts", config.accounts_path, "accounts.jsonl path")->required();
    }
    cmd->add_option("--config", config_path, "flat key=value scoring config");
    cmd->add_option("--min-score", min_score, "threshold override");
    cmd->add_option("--seed", config.seed, "seed for tie-breaking");
    cmd->add_option("--workers", config.workers, "worker thread count");
    cmd->add_option("--out-dir", config.out_dir, "output directory");
  };

  auto* link = app.add_subcommand("link", "score and select author-account pairs");
  add_common(link, true);

  auto* eval = app.add_subcommand("eval", "threshold sweep against a gold standard");
  add_common(eval, true);
  eval->add_option("--gold", config.gold_path, "gold.csv path")->required();

  auto* report = app.add_subcommand("report", "demographic reports");
  add_common(report, true);

  sm::synth::SynthSpec spec;
  bool no_noise = false;
  auto* synth = app.add_subcommand("synth", "generate a seeded synthetic corpus");
  synth->add_option("--n-authors", spec.n_authors, "number of authors");
  synth->add_option("--n-accounts", spec.n_accounts, "number of accounts");
  synth->add_option("--fraction-linked", spec.fraction_linked,
                    "fraction of accounts that belong to authors");
  synth->add_option("--seed", spec.seed, "generator seed");
  synth->add_option("--initials-only-prob", spec.noise.initials_only_prob);
  synth->add_option("--diacritic-prob", spec.noise.diacritic_prob);
  synth->add_option("--truncation-prob", spec.noise.truncation_prob);
  synth->add_option("--handle-scramble-prob", spec.noise.handle_scramble_prob);
  synth->add_option("--drop-profile-prob", spec.noise.drop_profile_prob);
  synth->add_flag("--no-noise", no_noise, "disable every noise source");
  synth->add_option("--out-dir", config.out_dir, "output directory");

  std::string template_path;
  auto* cfg = app.add_subcommand("config-template", "write a config file with defaults");
  cfg->add_option("path", template_path, "output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) sm::pipeline::apply_config_file(config, config_path);
    if (min_score != -1000) config.rules.min_total_score = min_score;

    if (synth->parsed()) {
      if (no_noise) spec.noise = sm::synth::NoiseModel::none();
      auto corpus = sm::synth::generate(spec);
      sm::synth::write_corpus(corpus, config.out_dir);
      std::printf("wrote %zu authors, %zu accounts, %zu gold pairs to %s\n",
                  corpus.authors.size(), corpus.accounts.size(), corpus.gold.size(),
                  config.out_dir.c_str());
    } else if (link->parsed()) {
      std::string path = sm::pipeline::cmd_link(config);
      std::printf("wrote %s\n", path.c_str());
    } else if (eval->parsed()) {
      std::string path = sm::pipeline::cmd_eval(config);
      std::printf("wrote %s\n", path.c_str());
    } else if (report->parsed()) {
      std::string path = sm::pipeline::cmd_report(config);
      std::printf("wrote %s\n", path.c_str());
    } else if (cfg->parsed()) {
      sm::pipeline::write_config_template(template_path);
      std::printf("wrote %s\n", template_path.c_str());
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
