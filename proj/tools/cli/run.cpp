#include "cli/run.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"

namespace wordrank::cli {
namespace {

using nlohmann::json;

// A flag that may also come from a --config JSON file. Command-line values
// win; the JSON key is the flag name without dashes.
struct Setting {
  std::string key;
  CLI::Option* option;
  std::function<void(const json&)> assign;
};

class Settings {
 public:
  explicit Settings(CLI::App* app) : app_(app) {}

  template <typename T>
  CLI::Option* add(const std::string& key, T& target, const std::string& help) {
    auto* option = app_->add_option("--" + key, target, help);
    settings_.push_back({key, option, [&target](const json& j) { target = j.get<T>(); }});
    return option;
  }

  void apply(const json& config) const {
    for (const auto& s : settings_) {
      if (s.option->count() == 0 && config.contains(s.key) && !config.at(s.key).is_null()) {
        try {
          s.assign(config.at(s.key));
        } catch (const json::exception& e) {
          throw ConfigError("config key '" + s.key + "': " + e.what());
        }
      }
    }
  }

 private:
  CLI::App* app_;
  std::vector<Setting> settings_;
};

// Reads a JSON config. A manifest written by an earlier run is accepted too:
// its "config" object holds the settings.
json load_config(const std::string& path, std::vector<std::string>* manifest_inputs = nullptr) {
  if (path.empty()) {
    return json::object();
  }
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file '" + path + "'");
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("config file '" + path + "' must hold a JSON object");
  }
  if (j.contains("config") && j["config"].is_object()) {
    if (manifest_inputs && j.contains("input_paths") && j["input_paths"].is_array()) {
      *manifest_inputs = j["input_paths"].get<std::vector<std::string>>();
    }
    return j["config"];
  }
  return j;
}

Count token_count(double value, const char* flag) {
  if (!(value >= 1) || value > 0x1.0p53 || std::floor(value) != value) {
    throw ConfigError(std::string(flag) + " must be a positive integer token count");
  }
  return static_cast<Count>(value);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Neutral word-rank evolution: simulation, rank metrics, calibration and ingestion",
               "wordrank"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "Run a Wright-Fisher word-rank ensemble");
  Settings sim_settings(sim);
  SimulateOptions sim_opts;
  double sim_beta = static_cast<double>(sim_opts.config.beta);
  std::string sim_config;
  std::string sim_out;
  sim_settings.add("alpha", sim_opts.config.alpha, "Corpus growth rate per step");
  sim_settings.add("beta", sim_beta, "Initial corpus size (tokens)");
  sim_settings.add("vocab", sim_opts.config.vocab, "Vocabulary size c");
  sim_settings.add("zipf-a", sim_opts.config.zipf_a, "Zipf shape of the initial distribution");
  sim_settings.add("steps", sim_opts.config.steps, "Number of time steps T");
  sim_settings.add("seed", sim_opts.config.seed, "Random seed");
  sim_settings.add("replicates", sim_opts.config.replicates, "Number of replicates");
  sim_settings.add("lag", sim_opts.lag, "Lag of the second lagged RBO curve");
  sim_settings.add("rbo-p", sim_opts.rbo.p, "RBO persistence p in [0,1]");
  sim->add_option("--config", sim_config, "JSON config file or an earlier manifest.json");
  sim->add_option("--out", sim_out, "Output directory")->required();
  sim->add_flag("--force", sim_opts.out.force, "Allow writing into a non-empty directory");
  sim->add_option("--threads", sim_opts.threads, "Worker threads (0 = all cores)");

  // analyze
  auto* ana = app.add_subcommand("analyze", "Rank metrics of an ingested lexicon");
  Settings ana_settings(ana);
  AnalyzeOptions ana_opts;
  std::string ana_lexicon, ana_stop, ana_swadesh, ana_config, ana_out;
  ana_settings.add("lexicon", ana_lexicon, "Lexicon CSV (from ingest) or counts CSV");
  ana_settings.add("stopwords", ana_stop, "Stopword list; overrides lexicon tags");
  ana_settings.add("swadesh", ana_swadesh, "Swadesh list; overrides lexicon tags");
  ana_settings.add("lag", ana_opts.lag, "Lag of the second lagged RBO curve");
  ana_settings.add("rbo-p", ana_opts.rbo.p, "RBO persistence p in [0,1]");
  ana->add_option("--config", ana_config, "JSON config file or an earlier manifest.json");
  ana->add_option("--out", ana_out, "Output directory")->required();
  ana->add_flag("--force", ana_opts.out.force, "Allow writing into a non-empty directory");

  // fit
  auto* fit = app.add_subcommand("fit", "Log-linear fits with 99% confidence intervals");
  Settings fit_settings(fit);
  FitOptions fit_opts;
  std::string fit_kind, fit_input, fit_config, fit_out;
  fit->add_option("kind", fit_kind, "corpus | zipf | turnover")
      ->check(CLI::IsMember({"corpus", "zipf", "turnover"}));
  fit_settings.add("input", fit_input, "Series CSV (t,total), lexicon CSV or counts CSV");
  fit_settings.add("replicate", fit_opts.replicate, "Replicate to read from a counts CSV");
  fit_settings.add("top", fit_opts.top, "Largest top-list size for turnover (0 = min(c,1000))");
  fit->add_option("--config", fit_config, "JSON config file or an earlier manifest.json");
  fit->add_option("--out", fit_out, "Output directory")->required();
  fit->add_flag("--force", fit_opts.out.force, "Allow writing into a non-empty directory");

  // ingest
  auto* ing = app.add_subcommand("ingest", "Filter, consolidate and tag unigram shards");
  Settings ing_settings(ing);
  IngestOptions ing_opts;
  std::vector<std::string> ing_inputs;
  std::string ing_years, ing_stop, ing_swadesh, ing_config, ing_out;
  ing->add_option("inputs", ing_inputs, "Tab-separated unigram shards");
  ing_settings.add("min-volumes", ing_opts.min_volumes, "Minimum volume count per record");
  ing_settings.add("years", ing_years, "Inclusive year range A:B");
  ing_settings.add("stopwords", ing_stop, "Stopword list, one word per line");
  ing_settings.add("swadesh", ing_swadesh, "Swadesh list, one word per line");
  ing->add_option("--config", ing_config, "JSON config file or an earlier manifest.json");
  ing->add_option("--out", ing_out, "Output directory")->required();
  ing->add_flag("--force", ing_opts.out.force, "Allow writing into a non-empty directory");

  // potential
  auto* pot = app.add_subcommand("potential", "Net rank-change potential of Zipf envelopes");
  Settings pot_settings(pot);
  PotentialOptions pot_opts;
  std::vector<double> pot_betas;
  std::string pot_config, pot_out;
  pot_settings.add("zipf-a", pot_opts.zipf.a, "Zipf shape");
  pot_settings.add("vocab", pot_opts.zipf.c, "Vocabulary size c");
  pot_settings.add("beta", pot_betas, "Initial corpus size; repeat for a profile");
  pot->add_option("--config", pot_config, "JSON config file or an earlier manifest.json");
  pot->add_option("--out", pot_out, "Output directory")->required();
  pot->add_flag("--force", pot_opts.out.force, "Allow writing into a non-empty directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sim->parsed()) {
      sim_settings.apply(load_config(sim_config));
      sim_opts.config.beta = token_count(sim_beta, "--beta");
      sim_opts.out.dir = sim_out;
      cmd_simulate(sim_opts, out);
    } else if (ana->parsed()) {
      ana_settings.apply(load_config(ana_config));
      ana_opts.lexicon = ana_lexicon;
      ana_opts.stopwords = ana_stop;
      ana_opts.swadesh = ana_swadesh;
      ana_opts.out.dir = ana_out;
      cmd_analyze(ana_opts, out);
    } else if (fit->parsed()) {
      const auto config = load_config(fit_config);
      fit_settings.apply(config);
      if (fit_kind.empty() && config.contains("kind")) {
        fit_kind = config["kind"].get<std::string>();
      }
      if (fit_kind == "corpus") {
        fit_opts.kind = FitKind::corpus;
      } else if (fit_kind == "zipf") {
        fit_opts.kind = FitKind::zipf;
      } else if (fit_kind == "turnover") {
        fit_opts.kind = FitKind::turnover;
      } else {
        throw ConfigError("fit needs a kind: corpus, zipf or turnover");
      }
      fit_opts.input = fit_input;
      fit_opts.out.dir = fit_out;
      cmd_fit(fit_opts, out);
    } else if (ing->parsed()) {
      std::vector<std::string> manifest_inputs;
      const auto config = load_config(ing_config, &manifest_inputs);
      ing_settings.apply(config);
      if (ing_inputs.empty()) {
        ing_inputs = config.contains("inputs") ? config["inputs"].get<std::vector<std::string>>()
                                               : manifest_inputs;
      }
      ing_opts.inputs.assign(ing_inputs.begin(), ing_inputs.end());
      if (!ing_years.empty()) {
        ing_opts.years = parse_year_range(ing_years);
      }
      ing_opts.stopwords = ing_stop;
      ing_opts.swadesh = ing_swadesh;
      ing_opts.out.dir = ing_out;
      cmd_ingest(ing_opts, out);
    } else if (pot->parsed()) {
      pot_settings.apply(load_config(pot_config));
      for (double beta : pot_betas) {
        pot_opts.betas.push_back(token_count(beta, "--beta"));
      }
      pot_opts.out.dir = pot_out;
      cmd_potential(pot_opts, out);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: bad configuration: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace wordrank::cli
