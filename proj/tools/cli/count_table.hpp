#pragma once

#include <filesystem>
#include <vector>

#include "wordrank/ingest.hpp"

namespace wordrank::cli {

/// Loads a word-by-time count table from any of the CSV layouts the tool
/// writes: a lexicon (word,[is_stopword,is_swadesh,]year...) or a simulated
/// counts.csv (replicate,word,t...), from which one replicate is selected.
Lexicon read_count_table(const std::filesystem::path& path, std::size_t replicate = 0);

/// Two-column series "t,total" (any header names) or a count table, whose
/// column totals are used.
CountVector read_total_series(const std::filesystem::path& path, std::size_t replicate = 0);

}  // namespace wordrank::cli
