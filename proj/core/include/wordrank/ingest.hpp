#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordrank/frequency_matrix.hpp"

namespace wordrank {

/// One line of a Google Ngram v2 unigram file.
struct UnigramRecord {
  std::string token;
  int year = 0;
  Count match_count = 0;
  Count volume_count = 0;

  friend bool operator==(const UnigramRecord&, const UnigramRecord&) = default;
};

/// Inclusive year interval.
struct YearRange {
  int first = 0;
  int last = 0;

  bool contains(int year) const { return year >= first && year <= last; }
  std::size_t size() const { return static_cast<std::size_t>(last - first + 1); }
};

/// Parses "A:B" into an inclusive range. Throws ConfigError.
YearRange parse_year_range(std::string_view text);

/// Parses "token<TAB>year<TAB>match_count<TAB>volume_count". Returns nullopt
/// for anything else (wrong field count, non-numeric fields, zero counts).
std::optional<UnigramRecord> parse_record(std::string_view line);

struct IngestStats {
  std::size_t records_read = 0;
  std::size_t records_malformed = 0;
  std::size_t records_filtered = 0;   // outside the year range or below min_volumes
  std::size_t records_retained = 0;
  std::size_t words_dropped_incomplete = 0;
  std::size_t words_retained = 0;

  IngestStats& operator+=(const IngestStats& other);
  friend bool operator==(const IngestStats&, const IngestStats&) = default;
};

/// Reads every line of a stream; malformed lines are counted and skipped.
std::vector<UnigramRecord> read_records(std::istream& in, IngestStats& stats);

struct FilterOptions {
  Count min_volumes = 1;
  std::optional<YearRange> years;
};

/// Keeps records inside the year range whose volume count is at least
/// min_volumes. Records with zero counts are malformed and skipped.
std::vector<UnigramRecord> filter_records(std::span<const UnigramRecord> records,
                                          const FilterOptions& options, IngestStats& stats);

/// Strips a part-of-speech suffix (split at the last underscore) and lowercases.
/// Returns nullopt for malformed UTF-8 or an empty result.
std::optional<std::string> fold_token(std::string_view token);

/// Word -> per-year counts.
struct WordYearTable {
  std::vector<int> years;
  std::map<std::string, std::vector<Count>> counts;
  std::size_t dropped_incomplete = 0;
};

/// Streaming accumulator for the consolidation layer. Shards may be fed to
/// separate instances and merged; merging is associative and commutative.
class Consolidator {
 public:
  /// Returns false (and counts nothing) if the token does not fold.
  bool add(const UnigramRecord& record);
  void merge(const Consolidator& other);

  /// Table over `years` (or every year seen, if not given) keeping only
  /// words with a positive count in every one of those years.
  WordYearTable finish(const std::optional<YearRange>& years) const;

 private:
  std::map<std::string, std::map<int, Count>> counts_;
};

/// One-shot consolidation of an in-memory record set.
WordYearTable consolidate(std::span<const UnigramRecord> records,
                          const std::optional<YearRange>& years = std::nullopt);

struct WordTags {
  bool stopword = false;
  bool swadesh = false;

  friend bool operator==(const WordTags&, const WordTags&) = default;
};

struct Lexicon {
  FrequencyMatrix frequencies;
  std::vector<WordTags> tags;
  std::vector<int> years;

  std::size_t vocab() const { return frequencies.vocab(); }
  std::size_t stopword_count() const;
  std::size_t swadesh_count() const;
  /// Natural log of the first year's total; NaN for an empty lexicon.
  double ln_initial_corpus() const;
  /// c / beta for the first year; NaN for an empty lexicon.
  double vocab_to_corpus_ratio() const;
};

/// Reads a UTF-8 word list, one word per line, '#' lines ignored, words
/// lowercased. Throws ConfigError if the file cannot be read.
std::vector<std::string> read_word_list(const std::filesystem::path& path);

/// Materializes the table (words in byte order) and tags it. Empty paths
/// mean no list.
Lexicon build_lexicon(const WordYearTable& table, const std::filesystem::path& stopword_file,
                      const std::filesystem::path& swadesh_file);

Lexicon build_lexicon(const WordYearTable& table, std::span<const std::string> stopwords,
                      std::span<const std::string> swadesh);

}  // namespace wordrank

namespace wordrank {

/// Header: word,is_stopword,is_swadesh,<year>...; one row per word.
void write_lexicon_csv(std::ostream& out, const Lexicon& lexicon);

/// Reads a lexicon CSV. The tag columns are optional; every remaining
/// column header must be an integer year. Throws ConfigError.
Lexicon read_lexicon_csv(std::istream& in);

}  // namespace wordrank

namespace wordrank {

/// Filter and consolidation layers over one shard in a single pass: each
/// line is parsed, filtered and folded into `acc` without buffering the shard.
void ingest_stream(std::istream& in, const FilterOptions& options, Consolidator& acc,
                   IngestStats& stats);

}  // namespace wordrank
