#include "cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "cli/count_table.hpp"
#include "wordrank/calibration.hpp"
#include "wordrank/csv.hpp"
#include "wordrank/overlap.hpp"
#include "wordrank/parallel.hpp"

#ifndef WORDRANK_VERSION
#define WORDRANK_VERSION "0.0.0"
#endif

namespace wordrank::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void prepare_output(const OutputOptions& out) {
  if (out.dir.empty()) {
    throw ConfigError("an output directory is required (--out DIR)");
  }
  std::error_code ec;
  if (fs::exists(out.dir, ec)) {
    if (!fs::is_directory(out.dir, ec)) {
      throw ConfigError("output path '" + out.dir.string() + "' is not a directory");
    }
    if (!out.force && !fs::is_empty(out.dir, ec)) {
      throw ConfigError("output directory '" + out.dir.string() +
                        "' is not empty; pass --force to overwrite");
    }
  } else if (!fs::create_directories(out.dir, ec) || ec) {
    throw ConfigError("cannot create output directory '" + out.dir.string() + "'");
  }
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error("cannot write '" + path.string() + "'");
  }
  return file;
}

void write_manifest(const RunManifest& manifest, const fs::path& dir) {
  auto file = open_output(dir / "manifest.json");
  file << manifest.to_json().dump(2) << '\n';
}

RunManifest make_manifest(std::string command, json config, std::vector<std::string> inputs,
                          const OutputOptions& out) {
  return {std::move(command), std::move(config), std::move(inputs), out.dir.string(), version()};
}

// Time-step column headers: the years of a lexicon, or 0..T-1.
std::vector<std::string> time_headers(const std::vector<int>& years, std::size_t steps) {
  std::vector<std::string> headers;
  for (std::size_t t = 0; t < steps; ++t) {
    headers.push_back(years.empty() ? std::to_string(t) : std::to_string(years[t]));
  }
  return headers;
}

struct Curves {
  std::vector<double> lag1;
  std::vector<double> lagged;
  std::vector<double> initial;
};

Curves compute_curves(const RankedList& lists, std::size_t lag, const RboParams& rbo) {
  Curves curves;
  const std::size_t steps = lists.steps();
  if (steps > 1) {
    curves.lag1 = rbo_curve(lists, RboComparison::lagged(1), rbo);
  }
  if (steps > lag) {
    curves.lagged = rbo_curve(lists, RboComparison::lagged(lag), rbo);
  }
  curves.initial = rbo_curve(lists, RboComparison::from_initial(), rbo);
  return curves;
}

void write_summary_row(csv::Writer& writer, const RankChangeSummary& summary,
                       const RankMatrix& ranks, std::size_t w, WordTags tags) {
  writer.field(std::string_view(ranks.words[w]))
      .field(static_cast<std::uint64_t>(ranks.ranks(w, 0)))
      .field(summary.sum[w])
      .field(summary.normalized_sum[w])
      .field(summary.variance[w])
      .field(summary.normalized_variance[w])
      .field(tags.stopword)
      .field(tags.swadesh);
  writer.end_row();
}

constexpr const char* kSummaryColumns[] = {"word",     "initial_rank",        "sum",
                                           "normalized_sum", "variance", "normalized_variance",
                                           "is_stopword",    "is_swadesh"};

// Ensemble layout: t, mean across replicates, then one column per replicate.
void write_ensemble_curve(const fs::path& path, const std::vector<std::vector<double>>& curves) {
  auto file = open_output(path);
  csv::Writer writer(file);
  writer.field("t").field("mean");
  for (std::size_t r = 0; r < curves.size(); ++r) {
    writer.field(std::string_view("replicate_" + std::to_string(r)));
  }
  writer.end_row();
  const std::size_t length = curves.empty() ? 0 : curves.front().size();
  for (std::size_t t = 0; t < length; ++t) {
    double mean = 0;
    for (const auto& curve : curves) {
      mean += curve[t];
    }
    mean /= static_cast<double>(curves.size());
    writer.field(static_cast<std::uint64_t>(t)).field(mean);
    for (const auto& curve : curves) {
      writer.field(curve[t]);
    }
    writer.end_row();
  }
}

void write_curve(const fs::path& path, const std::vector<double>& curve) {
  auto file = open_output(path);
  csv::Writer writer(file);
  writer.field("t").field("value").end_row();
  for (std::size_t t = 0; t < curve.size(); ++t) {
    writer.field(static_cast<std::uint64_t>(t)).field(curve[t]);
    writer.end_row();
  }
}

void write_fit_rows(csv::Writer& writer, const char* name, const FitResult& fit) {
  writer.field(name)
      .field(fit.estimate)
      .field(fit.ci_low)
      .field(fit.ci_high)
      .field(static_cast<std::uint64_t>(fit.n_points));
  writer.end_row();
}

std::string lag_file(std::size_t lag) { return "rbo_lag" + std::to_string(lag) + ".csv"; }

std::vector<std::string> path_strings(const std::vector<fs::path>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) {
    out.push_back(p.string());
  }
  return out;
}

void require_readable(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read input '" + path.string() + "'");
  }
}

}  // namespace

const char* version() { return WORDRANK_VERSION; }

nlohmann::json RunManifest::to_json() const {
  return json{{"command", command},
              {"config", config},
              {"input_paths", input_paths},
              {"output_dir", output_dir},
              {"version", version}};
}

RunManifest cmd_simulate(const SimulateOptions& options, std::ostream& log) {
  const auto& config = options.config;
  try {
    config.validate();
    options.rbo.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (options.lag < 1) {
    throw ConfigError("--lag must be >= 1");
  }
  if (config.steps < 2) {
    throw InsufficientDataError("rank change statistics need at least 2 time steps (--steps)");
  }
  prepare_output(options.out);
  const auto& dir = options.out.dir;

  auto counts_file = open_output(dir / "counts.csv");
  auto ranks_file = open_output(dir / "ranks.csv");
  auto summary_file = open_output(dir / "summary.csv");
  csv::Writer counts_csv(counts_file);
  csv::Writer ranks_csv(ranks_file);
  csv::Writer summary_csv(summary_file);

  const auto headers = time_headers({}, config.steps);
  for (auto* writer : {&counts_csv, &ranks_csv}) {
    writer->field("replicate").field("word");
    for (const auto& h : headers) {
      writer->field(std::string_view(h));
    }
    writer->end_row();
  }
  summary_csv.field("replicate");
  for (const char* column : kSummaryColumns) {
    summary_csv.field(column);
  }
  summary_csv.end_row();

  struct ReplicateResult {
    FrequencyMatrix counts;
    RankMatrix ranks;
    RankChangeSummary summary;
    Curves curves;
  };

  std::vector<std::vector<double>> lag1(config.replicates);
  std::vector<std::vector<double>> lagged(config.replicates);
  std::vector<std::vector<double>> initial(config.replicates);

  // Replicates are computed in parallel batches and written in order.
  const std::size_t batch = 16;
  for (std::size_t begin = 0; begin < config.replicates; begin += batch) {
    const std::size_t end = std::min(config.replicates, begin + batch);
    std::vector<ReplicateResult> results(end - begin);
    parallel_for(end - begin, options.threads, [&](std::size_t i) {
      auto& result = results[i];
      result.counts = simulate_counts(config, begin + i);
      result.ranks = rank_matrix(result.counts);
      result.summary = rank_change_summary(result.ranks);
      result.curves = compute_curves(ranked_list(result.ranks), options.lag, options.rbo);
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
      const std::size_t r = begin + i;
      auto& result = results[i];
      for (std::size_t w = 0; w < config.vocab; ++w) {
        counts_csv.field(static_cast<std::uint64_t>(r))
            .field(std::string_view(result.counts.words[w]));
        ranks_csv.field(static_cast<std::uint64_t>(r))
            .field(std::string_view(result.ranks.words[w]));
        for (std::size_t t = 0; t < config.steps; ++t) {
          counts_csv.field(result.counts.counts(w, t));
          ranks_csv.field(static_cast<std::uint64_t>(result.ranks.ranks(w, t)));
        }
        counts_csv.end_row();
        ranks_csv.end_row();
        summary_csv.field(static_cast<std::uint64_t>(r));
        write_summary_row(summary_csv, result.summary, result.ranks, w, {});
      }
      lag1[r] = std::move(result.curves.lag1);
      lagged[r] = std::move(result.curves.lagged);
      initial[r] = std::move(result.curves.initial);
    }
  }

  write_ensemble_curve(dir / "rbo_lag1.csv", lag1);
  if (options.lag != 1) {
    write_ensemble_curve(dir / lag_file(options.lag), lagged);
  }
  write_ensemble_curve(dir / "rbo_initial.csv", initial);
  if (config.steps <= options.lag) {
    log << "note: " << config.steps << " steps leave no pairs at lag " << options.lag
        << "; " << lag_file(options.lag) << " has a header only\n";
  }

  json cfg{{"alpha", config.alpha},   {"beta", config.beta},         {"vocab", config.vocab},
           {"zipf-a", config.zipf_a}, {"steps", config.steps},       {"seed", config.seed},
           {"replicates", config.replicates}, {"lag", options.lag}, {"rbo-p", options.rbo.p}};
  auto manifest = make_manifest("simulate", std::move(cfg), {}, options.out);
  write_manifest(manifest, dir);
  log << "simulated " << config.replicates << " replicate(s): c=" << config.vocab
      << " T=" << config.steps << " -> " << dir.string() << '\n';
  return manifest;
}

RunManifest cmd_analyze(const AnalyzeOptions& options, std::ostream& log) {
  try {
    options.rbo.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (options.lag < 1) {
    throw ConfigError("--lag must be >= 1");
  }
  if (options.lexicon.empty()) {
    throw ConfigError("analyze needs --lexicon FILE");
  }
  require_readable(options.lexicon);
  auto lexicon = read_count_table(options.lexicon);
  if (!options.stopwords.empty() || !options.swadesh.empty()) {
    const auto stop = options.stopwords.empty() ? std::vector<std::string>{}
                                                : read_word_list(options.stopwords);
    const auto swad =
        options.swadesh.empty() ? std::vector<std::string>{} : read_word_list(options.swadesh);
    for (std::size_t w = 0; w < lexicon.vocab(); ++w) {
      const auto& word = lexicon.frequencies.words[w];
      lexicon.tags[w].stopword = std::find(stop.begin(), stop.end(), word) != stop.end();
      lexicon.tags[w].swadesh = std::find(swad.begin(), swad.end(), word) != swad.end();
    }
  }
  if (lexicon.vocab() == 0) {
    throw InsufficientDataError("lexicon '" + options.lexicon.string() + "' has no words");
  }
  if (lexicon.frequencies.steps() < 2) {
    throw InsufficientDataError("lexicon has " + std::to_string(lexicon.frequencies.steps()) +
                                " year(s); rank change statistics need at least 2");
  }

  const auto ranks = rank_matrix(lexicon.frequencies);
  const auto summary = rank_change_summary(ranks);
  const auto curves = compute_curves(ranked_list(ranks), options.lag, options.rbo);

  prepare_output(options.out);
  const auto& dir = options.out.dir;
  const auto headers = time_headers(lexicon.years, lexicon.frequencies.steps());
  {
    auto counts_file = open_output(dir / "counts.csv");
    auto ranks_file = open_output(dir / "ranks.csv");
    csv::Writer counts_csv(counts_file);
    csv::Writer ranks_csv(ranks_file);
    for (auto* writer : {&counts_csv, &ranks_csv}) {
      writer->field("word");
      for (const auto& h : headers) {
        writer->field(std::string_view(h));
      }
      writer->end_row();
    }
    for (std::size_t w = 0; w < lexicon.vocab(); ++w) {
      counts_csv.field(std::string_view(lexicon.frequencies.words[w]));
      ranks_csv.field(std::string_view(ranks.words[w]));
      for (std::size_t t = 0; t < lexicon.frequencies.steps(); ++t) {
        counts_csv.field(lexicon.frequencies.counts(w, t));
        ranks_csv.field(static_cast<std::uint64_t>(ranks.ranks(w, t)));
      }
      counts_csv.end_row();
      ranks_csv.end_row();
    }
  }
  {
    auto summary_file = open_output(dir / "summary.csv");
    csv::Writer summary_csv(summary_file);
    for (const char* column : kSummaryColumns) {
      summary_csv.field(column);
    }
    summary_csv.end_row();
    for (std::size_t w = 0; w < lexicon.vocab(); ++w) {
      write_summary_row(summary_csv, summary, ranks, w, lexicon.tags[w]);
    }
  }
  write_curve(dir / "rbo_lag1.csv", curves.lag1);
  if (options.lag != 1) {
    write_curve(dir / lag_file(options.lag), curves.lagged);
  }
  write_curve(dir / "rbo_initial.csv", curves.initial);

  json cfg{{"lexicon", options.lexicon.string()},
           {"stopwords", options.stopwords.string()},
           {"swadesh", options.swadesh.string()},
           {"lag", options.lag},
           {"rbo-p", options.rbo.p}};
  auto manifest = make_manifest("analyze", std::move(cfg), {options.lexicon.string()}, options.out);
  write_manifest(manifest, dir);
  log << "analyzed " << lexicon.vocab() << " words over " << lexicon.frequencies.steps()
      << " years -> " << dir.string() << '\n';
  return manifest;
}

RunManifest cmd_fit(const FitOptions& options, std::ostream& log) {
  if (options.input.empty()) {
    throw ConfigError("fit needs --input FILE");
  }
  require_readable(options.input);

  std::string kind_name;
  std::vector<std::pair<const char*, FitResult>> rows;
  std::vector<double> turnover_z;
  switch (options.kind) {
    case FitKind::corpus: {
      kind_name = "corpus";
      const auto totals = read_total_series(options.input, options.replicate);
      const auto fit = fit_corpus_growth(totals);
      rows = {{"alpha", fit.alpha}, {"ln_beta", fit.ln_beta}};
      log << "alpha=" << csv::format_real(fit.alpha.estimate)
          << " ln_beta=" << csv::format_real(fit.ln_beta.estimate) << '\n';
      break;
    }
    case FitKind::zipf: {
      kind_name = "zipf";
      const auto lexicon = read_count_table(options.input, options.replicate);
      if (lexicon.frequencies.steps() < 1) {
        throw InsufficientDataError("count table has no time steps");
      }
      const auto initial = lexicon.frequencies.counts.column(0);
      const auto fit = fit_zipf_shape(initial);
      rows = {{"a", fit.a}, {"intercept", fit.intercept}};
      log << "a=" << csv::format_real(fit.a.estimate) << " (ranks 1.." << fit.cutoff_rank
          << ")\n";
      break;
    }
    case FitKind::turnover: {
      kind_name = "turnover";
      const auto lexicon = read_count_table(options.input, options.replicate);
      const auto lists = ranked_list(rank_matrix(lexicon.frequencies));
      const std::size_t top =
          options.top == 0 ? std::min<std::size_t>(lexicon.vocab(), 1000) : options.top;
      const auto result = turnover(lists, top);
      rows = {{"a", result.a}, {"b", result.b}};
      turnover_z = result.z;
      log << "b=" << csv::format_real(result.b.estimate) << " (" << to_string(result.shape)
          << "; unbiased copying reference b=" << kUnbiasedCopyingExponent << ")\n";
      break;
    }
  }

  prepare_output(options.out);
  const auto& dir = options.out.dir;
  {
    auto file = open_output(dir / "fit.csv");
    csv::Writer writer(file);
    writer.row({"parameter", "estimate", "ci_low", "ci_high", "n_points"});
    for (const auto& [name, fit] : rows) {
      write_fit_rows(writer, name, fit);
    }
  }
  if (options.kind == FitKind::turnover) {
    auto file = open_output(dir / "turnover.csv");
    csv::Writer writer(file);
    writer.row({"y", "z"});
    for (std::size_t i = 0; i < turnover_z.size(); ++i) {
      writer.field(static_cast<std::uint64_t>(i + 1)).field(turnover_z[i]);
      writer.end_row();
    }
  }

  json cfg{{"kind", kind_name},
           {"input", options.input.string()},
           {"replicate", options.replicate},
           {"top", options.top}};
  auto manifest = make_manifest("fit", std::move(cfg), {options.input.string()}, options.out);
  write_manifest(manifest, dir);
  return manifest;
}

RunManifest cmd_ingest(const IngestOptions& options, std::ostream& log) {
  if (options.min_volumes < 1) {
    throw ConfigError("--min-volumes must be >= 1");
  }
  for (const auto& path : options.inputs) {
    require_readable(path);
  }
  // Word lists are read before any output is produced so a bad path fails early.
  const auto stopwords = options.stopwords.empty() ? std::vector<std::string>{}
                                                   : read_word_list(options.stopwords);
  const auto swadesh =
      options.swadesh.empty() ? std::vector<std::string>{} : read_word_list(options.swadesh);

  IngestStats stats;
  Consolidator acc;
  const FilterOptions filter{options.min_volumes, options.years};
  for (const auto& path : options.inputs) {
    std::ifstream in(path, std::ios::binary);
    ingest_stream(in, filter, acc, stats);
  }
  const auto table = acc.finish(options.years);
  const auto lexicon = build_lexicon(table, stopwords, swadesh);
  stats.words_dropped_incomplete = table.dropped_incomplete;
  stats.words_retained = lexicon.vocab();

  prepare_output(options.out);
  const auto& dir = options.out.dir;
  {
    auto file = open_output(dir / "lexicon.csv");
    write_lexicon_csv(file, lexicon);
  }
  {
    auto file = open_output(dir / "ingest_stats.csv");
    csv::Writer writer(file);
    writer.row({"statistic", "value"});
    const std::pair<const char*, std::size_t> entries[] = {
        {"records_read", stats.records_read},
        {"records_malformed", stats.records_malformed},
        {"records_filtered", stats.records_filtered},
        {"records_retained", stats.records_retained},
        {"words_dropped_incomplete", stats.words_dropped_incomplete},
        {"words_retained", stats.words_retained},
        {"stopwords_tagged", lexicon.stopword_count()},
        {"swadesh_tagged", lexicon.swadesh_count()},
    };
    for (const auto& [name, value] : entries) {
      writer.field(name).field(static_cast<std::uint64_t>(value));
      writer.end_row();
    }
    writer.field("ln_initial_corpus").field(lexicon.ln_initial_corpus());
    writer.end_row();
    writer.field("vocab_to_corpus_ratio").field(lexicon.vocab_to_corpus_ratio());
    writer.end_row();
  }

  json cfg{{"inputs", path_strings(options.inputs)},
           {"min-volumes", options.min_volumes},
           {"years", options.years ? std::to_string(options.years->first) + ":" +
                                         std::to_string(options.years->last)
                                   : std::string{}},
           {"stopwords", options.stopwords.string()},
           {"swadesh", options.swadesh.string()}};
  auto manifest = make_manifest("ingest", std::move(cfg), path_strings(options.inputs), options.out);
  write_manifest(manifest, dir);
  log << "ingest: read " << stats.records_read << ", malformed " << stats.records_malformed
      << ", filtered " << stats.records_filtered << ", retained " << stats.records_retained
      << "; " << lexicon.vocab() << " words kept, " << stats.words_dropped_incomplete
      << " dropped as incomplete\n";
  return manifest;
}

RunManifest cmd_potential(const PotentialOptions& options, std::ostream& log) {
  if (options.betas.empty()) {
    throw ConfigError("potential needs at least one --beta");
  }
  std::vector<OverlapReport> reports;
  try {
    reports = potential_profile(options.zipf, options.betas);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  prepare_output(options.out);
  const auto& dir = options.out.dir;
  {
    auto file = open_output(dir / "potential.csv");
    csv::Writer writer(file);
    writer.row({"beta", "rank", "mu", "sigma", "net_potential", "normalized_potential"});
    for (const auto& report : reports) {
      for (std::size_t w = 0; w < report.envelopes.size(); ++w) {
        writer.field(report.beta)
            .field(static_cast<std::uint64_t>(w + 1))
            .field(report.envelopes[w].mu)
            .field(report.envelopes[w].sigma)
            .field(report.net_potential[w])
            .field(report.normalized_potential[w]);
        writer.end_row();
      }
    }
  }
  json cfg{{"zipf-a", options.zipf.a}, {"vocab", options.zipf.c}, {"beta", options.betas}};
  auto manifest = make_manifest("potential", std::move(cfg), {}, options.out);
  write_manifest(manifest, dir);
  log << "potential: " << reports.size() << " corpus size(s), c=" << options.zipf.c << " -> "
      << dir.string() << '\n';
  return manifest;
}

}  // namespace wordrank::cli
