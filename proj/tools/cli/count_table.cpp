#include "cli/count_table.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "wordrank/csv.hpp"
#include "wordrank/errors.hpp"

namespace wordrank::cli {
namespace {

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot read input '" + path.string() + "'");
  }
  return in;
}

template <typename T>
T to_number(const std::string& text, const std::filesystem::path& path) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("'" + path.string() + "': '" + text + "' is not a number");
  }
  return value;
}

std::string first_header_field(const std::filesystem::path& path) {
  auto in = open(path);
  const auto header = csv::read_row(in);
  return header && !header->empty() ? (*header)[0] : std::string{};
}

Lexicon read_simulated(const std::filesystem::path& path, std::size_t replicate) {
  auto in = open(path);
  const auto header = csv::read_row(in);
  if (!header || header->size() < 2 || (*header)[1] != "word") {
    throw ConfigError("'" + path.string() + "' does not look like a simulated counts table");
  }
  Lexicon lexicon;
  for (std::size_t c = 2; c < header->size(); ++c) {
    lexicon.years.push_back(to_number<int>((*header)[c], path));
  }
  std::vector<std::vector<Count>> rows;
  while (auto row = csv::read_row(in)) {
    if (row->size() == 1 && (*row)[0].empty()) {
      continue;
    }
    if (row->size() != header->size()) {
      throw ConfigError("'" + path.string() + "' has a ragged row");
    }
    if (to_number<std::size_t>((*row)[0], path) != replicate) {
      continue;
    }
    lexicon.frequencies.words.push_back((*row)[1]);
    lexicon.tags.push_back({});
    std::vector<Count> counts;
    for (std::size_t c = 2; c < row->size(); ++c) {
      counts.push_back(to_number<Count>((*row)[c], path));
    }
    rows.push_back(std::move(counts));
  }
  if (rows.empty()) {
    throw ConfigError("'" + path.string() + "' has no rows for replicate " +
                      std::to_string(replicate));
  }
  lexicon.frequencies.counts = Grid<Count>(rows.size(), lexicon.years.size());
  for (std::size_t w = 0; w < rows.size(); ++w) {
    for (std::size_t t = 0; t < rows[w].size(); ++t) {
      lexicon.frequencies.counts(w, t) = rows[w][t];
    }
  }
  return lexicon;
}

}  // namespace

Lexicon read_count_table(const std::filesystem::path& path, std::size_t replicate) {
  const auto first = first_header_field(path);
  if (first == "replicate") {
    return read_simulated(path, replicate);
  }
  auto in = open(path);
  return read_lexicon_csv(in);
}

CountVector read_total_series(const std::filesystem::path& path, std::size_t replicate) {
  const auto first = first_header_field(path);
  if (first == "word" || first == "replicate") {
    return read_count_table(path, replicate).frequencies.column_totals();
  }
  auto in = open(path);
  csv::read_row(in);  // header
  CountVector totals;
  while (auto row = csv::read_row(in)) {
    if (row->size() == 1 && (*row)[0].empty()) {
      continue;
    }
    if (row->size() != 2) {
      throw ConfigError("'" + path.string() + "': series rows need exactly two fields");
    }
    totals.push_back(to_number<Count>((*row)[1], path));
  }
  return totals;
}

}  // namespace wordrank::cli
