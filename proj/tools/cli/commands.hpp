#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wordrank/distributions.hpp"
#include "wordrank/errors.hpp"
#include "wordrank/ingest.hpp"
#include "wordrank/metrics.hpp"
#include "wordrank/wf_engine.hpp"

namespace wordrank::cli {

const char* version();

struct OutputOptions {
  std::filesystem::path dir;
  bool force = false;
};

/// Written as manifest.json next to every output set. `config` holds the
/// effective settings under their flag names, so the manifest can be fed
/// back through --config.
struct RunManifest {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::vector<std::string> input_paths;
  std::string output_dir;
  std::string version;

  nlohmann::json to_json() const;
};

struct SimulateOptions {
  SimulationConfig config;
  std::size_t lag = 10;
  RboParams rbo;
  unsigned threads = 0;
  OutputOptions out;
};

struct AnalyzeOptions {
  std::filesystem::path lexicon;
  std::filesystem::path stopwords;
  std::filesystem::path swadesh;
  std::size_t lag = 10;
  RboParams rbo;
  OutputOptions out;
};

enum class FitKind { corpus, zipf, turnover };

struct FitOptions {
  FitKind kind = FitKind::corpus;
  std::filesystem::path input;
  std::size_t replicate = 0;
  /// Largest top-list size for turnover; 0 means min(c, 1000).
  std::size_t top = 0;
  OutputOptions out;
};

struct IngestOptions {
  std::vector<std::filesystem::path> inputs;
  Count min_volumes = 1;
  std::optional<YearRange> years;
  std::filesystem::path stopwords;
  std::filesystem::path swadesh;
  OutputOptions out;
};

struct PotentialOptions {
  ZipfParams zipf;
  std::vector<Count> betas;
  OutputOptions out;
};

/// Each command writes its files into out.dir and returns the manifest it
/// wrote. Errors surface as exceptions: ConfigError for usage and input
/// problems, other wordrank::Error types for data and runtime failures.
RunManifest cmd_simulate(const SimulateOptions& options, std::ostream& log);
RunManifest cmd_analyze(const AnalyzeOptions& options, std::ostream& log);
RunManifest cmd_fit(const FitOptions& options, std::ostream& log);
RunManifest cmd_ingest(const IngestOptions& options, std::ostream& log);
RunManifest cmd_potential(const PotentialOptions& options, std::ostream& log);

}  // namespace wordrank::cli
