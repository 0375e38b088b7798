#include "wordrank/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>

#include "wordrank/csv.hpp"
#include "wordrank/errors.hpp"
#include "wordrank/unicode.hpp"

namespace wordrank {
namespace {

template <typename T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    return std::nullopt;
  }
  return value;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

YearRange parse_year_range(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ConfigError("year range must look like A:B, got '" + std::string(text) + "'");
  }
  const auto first = parse_number<int>(trim(text.substr(0, colon)));
  const auto last = parse_number<int>(trim(text.substr(colon + 1)));
  if (!first || !last || *first > *last) {
    throw ConfigError("invalid year range '" + std::string(text) + "'");
  }
  return {*first, *last};
}

std::optional<UnigramRecord> parse_record(std::string_view line) {
  if (!line.empty() && line.back() == '\r') {
    line.remove_suffix(1);
  }
  std::string_view fields[4];
  std::size_t n = 0;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (n == 4) {
      return std::nullopt;
    }
    fields[n++] = line.substr(start, tab == std::string_view::npos ? tab : tab - start);
    if (tab == std::string_view::npos) {
      break;
    }
    start = tab + 1;
  }
  if (n != 4 || fields[0].empty()) {
    return std::nullopt;
  }
  const auto year = parse_number<int>(fields[1]);
  const auto matches = parse_number<Count>(fields[2]);
  const auto volumes = parse_number<Count>(fields[3]);
  if (!year || !matches || !volumes || *matches < 1 || *volumes < 1) {
    return std::nullopt;
  }
  return UnigramRecord{std::string(fields[0]), *year, *matches, *volumes};
}

IngestStats& IngestStats::operator+=(const IngestStats& other) {
  records_read += other.records_read;
  records_malformed += other.records_malformed;
  records_filtered += other.records_filtered;
  records_retained += other.records_retained;
  words_dropped_incomplete += other.words_dropped_incomplete;
  words_retained += other.words_retained;
  return *this;
}

std::vector<UnigramRecord> read_records(std::istream& in, IngestStats& stats) {
  std::vector<UnigramRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) {
      continue;
    }
    ++stats.records_read;
    if (auto record = parse_record(line)) {
      records.push_back(std::move(*record));
    } else {
      ++stats.records_malformed;
    }
  }
  return records;
}

std::vector<UnigramRecord> filter_records(std::span<const UnigramRecord> records,
                                          const FilterOptions& options, IngestStats& stats) {
  if (options.min_volumes < 1) {
    throw ConfigError("min_volumes must be >= 1");
  }
  std::vector<UnigramRecord> kept;
  for (const auto& record : records) {
    if (record.token.empty() || record.match_count < 1 || record.volume_count < 1) {
      ++stats.records_malformed;
      continue;
    }
    if ((options.years && !options.years->contains(record.year)) ||
        record.volume_count < options.min_volumes) {
      ++stats.records_filtered;
      continue;
    }
    ++stats.records_retained;
    kept.push_back(record);
  }
  return kept;
}

std::optional<std::string> fold_token(std::string_view token) {
  const auto underscore = token.rfind('_');
  if (underscore != std::string_view::npos) {
    token = token.substr(0, underscore);
  }
  if (token.empty()) {
    return std::nullopt;
  }
  return lowercase_utf8(token);
}

bool Consolidator::add(const UnigramRecord& record) {
  auto word = fold_token(record.token);
  if (!word) {
    return false;
  }
  counts_[std::move(*word)][record.year] += record.match_count;
  return true;
}

void Consolidator::merge(const Consolidator& other) {
  for (const auto& [word, by_year] : other.counts_) {
    auto& mine = counts_[word];
    for (const auto& [year, count] : by_year) {
      mine[year] += count;
    }
  }
}

WordYearTable Consolidator::finish(const std::optional<YearRange>& years) const {
  WordYearTable table;
  if (years) {
    for (int y = years->first; y <= years->last; ++y) {
      table.years.push_back(y);
    }
  } else {
    std::set<int> seen;
    for (const auto& [word, by_year] : counts_) {
      for (const auto& entry : by_year) {
        seen.insert(entry.first);
      }
    }
    table.years.assign(seen.begin(), seen.end());
  }

  for (const auto& [word, by_year] : counts_) {
    std::vector<Count> row(table.years.size(), 0);
    bool complete = true;
    for (std::size_t i = 0; i < table.years.size(); ++i) {
      const auto it = by_year.find(table.years[i]);
      if (it == by_year.end() || it->second == 0) {
        complete = false;
        break;
      }
      row[i] = it->second;
    }
    if (complete) {
      table.counts.emplace(word, std::move(row));
    } else {
      ++table.dropped_incomplete;
    }
  }
  return table;
}

WordYearTable consolidate(std::span<const UnigramRecord> records,
                          const std::optional<YearRange>& years) {
  Consolidator acc;
  for (const auto& record : records) {
    acc.add(record);
  }
  return acc.finish(years);
}

std::size_t Lexicon::stopword_count() const {
  return static_cast<std::size_t>(
      std::count_if(tags.begin(), tags.end(), [](const WordTags& t) { return t.stopword; }));
}

std::size_t Lexicon::swadesh_count() const {
  return static_cast<std::size_t>(
      std::count_if(tags.begin(), tags.end(), [](const WordTags& t) { return t.swadesh; }));
}

double Lexicon::ln_initial_corpus() const {
  if (vocab() == 0 || frequencies.steps() == 0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return std::log(static_cast<double>(frequencies.column_totals()[0]));
}

double Lexicon::vocab_to_corpus_ratio() const {
  if (vocab() == 0 || frequencies.steps() == 0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return static_cast<double>(vocab()) / static_cast<double>(frequencies.column_totals()[0]);
}

std::vector<std::string> read_word_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot read word list '" + path.string() + "'");
  }
  std::vector<std::string> words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = trim(line);
    if (line_no == 1 && text.starts_with("\xEF\xBB\xBF")) {
      text.remove_prefix(3);
    }
    if (text.empty() || text.front() == '#') {
      continue;
    }
    auto folded = lowercase_utf8(text);
    if (!folded) {
      throw ConfigError("word list '" + path.string() + "' line " + std::to_string(line_no) +
                        " is not valid UTF-8");
    }
    words.push_back(std::move(*folded));
  }
  return words;
}

Lexicon build_lexicon(const WordYearTable& table, std::span<const std::string> stopwords,
                      std::span<const std::string> swadesh) {
  const std::set<std::string> stop_set(stopwords.begin(), stopwords.end());
  const std::set<std::string> swadesh_set(swadesh.begin(), swadesh.end());

  Lexicon lexicon;
  lexicon.years = table.years;
  lexicon.frequencies.counts = Grid<Count>(table.counts.size(), table.years.size());
  std::size_t w = 0;
  // std::map iterates in byte order, which is code point order for UTF-8.
  for (const auto& [word, row] : table.counts) {
    lexicon.frequencies.words.push_back(word);
    lexicon.tags.push_back({stop_set.contains(word), swadesh_set.contains(word)});
    for (std::size_t t = 0; t < row.size(); ++t) {
      lexicon.frequencies.counts(w, t) = row[t];
    }
    ++w;
  }
  return lexicon;
}

Lexicon build_lexicon(const WordYearTable& table, const std::filesystem::path& stopword_file,
                      const std::filesystem::path& swadesh_file) {
  const auto stopwords =
      stopword_file.empty() ? std::vector<std::string>{} : read_word_list(stopword_file);
  const auto swadesh =
      swadesh_file.empty() ? std::vector<std::string>{} : read_word_list(swadesh_file);
  return build_lexicon(table, stopwords, swadesh);
}

void write_lexicon_csv(std::ostream& out, const Lexicon& lexicon) {
  csv::Writer writer(out);
  writer.field("word").field("is_stopword").field("is_swadesh");
  for (int year : lexicon.years) {
    writer.field(year);
  }
  writer.end_row();
  for (std::size_t w = 0; w < lexicon.vocab(); ++w) {
    writer.field(std::string_view(lexicon.frequencies.words[w]))
        .field(lexicon.tags[w].stopword)
        .field(lexicon.tags[w].swadesh);
    for (std::size_t t = 0; t < lexicon.years.size(); ++t) {
      writer.field(lexicon.frequencies.counts(w, t));
    }
    writer.end_row();
  }
}

Lexicon read_lexicon_csv(std::istream& in) {
  const auto header = csv::read_row(in);
  if (!header || header->empty() || (*header)[0] != "word") {
    throw ConfigError("lexicon csv must start with a 'word' column");
  }
  std::size_t col = 1;
  int stop_col = -1;
  int swadesh_col = -1;
  if (col < header->size() && (*header)[col] == "is_stopword") {
    stop_col = static_cast<int>(col++);
  }
  if (col < header->size() && (*header)[col] == "is_swadesh") {
    swadesh_col = static_cast<int>(col++);
  }
  const std::size_t first_year_col = col;

  Lexicon lexicon;
  for (; col < header->size(); ++col) {
    const auto year = parse_number<int>((*header)[col]);
    if (!year) {
      throw ConfigError("lexicon csv column '" + (*header)[col] + "' is not a year");
    }
    lexicon.years.push_back(*year);
  }

  std::vector<std::vector<Count>> rows;
  std::size_t line = 1;
  while (auto row = csv::read_row(in)) {
    ++line;
    if (row->size() == 1 && (*row)[0].empty()) {
      continue;
    }
    if (row->size() != header->size()) {
      throw ConfigError("lexicon csv line " + std::to_string(line) + " has " +
                        std::to_string(row->size()) + " fields, expected " +
                        std::to_string(header->size()));
    }
    auto flag = [&](int index) {
      if (index < 0) {
        return false;
      }
      const auto& v = (*row)[static_cast<std::size_t>(index)];
      if (v != "0" && v != "1") {
        throw ConfigError("lexicon csv line " + std::to_string(line) + ": tag must be 0 or 1");
      }
      return v == "1";
    };
    lexicon.frequencies.words.push_back((*row)[0]);
    lexicon.tags.push_back({flag(stop_col), flag(swadesh_col)});
    std::vector<Count> counts;
    for (std::size_t c = first_year_col; c < row->size(); ++c) {
      const auto value = parse_number<Count>((*row)[c]);
      if (!value) {
        throw ConfigError("lexicon csv line " + std::to_string(line) + ": bad count '" +
                          (*row)[c] + "'");
      }
      counts.push_back(*value);
    }
    rows.push_back(std::move(counts));
  }

  lexicon.frequencies.counts = Grid<Count>(rows.size(), lexicon.years.size());
  for (std::size_t w = 0; w < rows.size(); ++w) {
    for (std::size_t t = 0; t < rows[w].size(); ++t) {
      lexicon.frequencies.counts(w, t) = rows[w][t];
    }
  }
  return lexicon;
}

}  // namespace wordrank

namespace wordrank {

void ingest_stream(std::istream& in, const FilterOptions& options, Consolidator& acc,
                   IngestStats& stats) {
  if (options.min_volumes < 1) {
    throw ConfigError("min_volumes must be >= 1");
  }
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) {
      continue;
    }
    ++stats.records_read;
    const auto record = parse_record(line);
    if (!record) {
      ++stats.records_malformed;
      continue;
    }
    if ((options.years && !options.years->contains(record->year)) ||
        record->volume_count < options.min_volumes) {
      ++stats.records_filtered;
      continue;
    }
    if (!acc.add(*record)) {
      ++stats.records_malformed;
      continue;
    }
    ++stats.records_retained;
  }
}

}  // namespace wordrank
