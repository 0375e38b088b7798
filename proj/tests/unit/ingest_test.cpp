#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "wordrank/errors.hpp"
#include "wordrank/ingest.hpp"

using namespace wordrank;

namespace {

const std::filesystem::path kFixtures = WORDRANK_FIXTURE_DIR;

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<UnigramRecord> records_of(const std::string& text) {
  std::istringstream in(text);
  IngestStats stats;
  return read_records(in, stats);
}

std::string lexicon_text(const std::vector<std::string>& shard_names) {
  const FilterOptions options{3, YearRange{2000, 2002}};
  Consolidator acc;
  IngestStats stats;
  for (const auto& name : shard_names) {
    std::ifstream in(kFixtures / "ingest" / name);
    ingest_stream(in, options, acc, stats);
  }
  const auto lexicon = build_lexicon(acc.finish(options.years), kFixtures / "ingest/stopwords.txt",
                                     kFixtures / "ingest/swadesh.txt");
  std::ostringstream out;
  write_lexicon_csv(out, lexicon);
  return out.str();
}

}  // namespace

TEST_CASE("parse record") {
  const auto r = parse_record("Solo_NOUN\t1950\t12\t4");
  REQUIRE(r);
  CHECK(r->token == "Solo_NOUN");
  CHECK(r->year == 1950);
  CHECK(r->match_count == 12);
  CHECK(r->volume_count == 4);
  CHECK(parse_record("solo\t1950\t12\t4\r"));
  CHECK_FALSE(parse_record("solo\t1950\t12"));
  CHECK_FALSE(parse_record("solo\t1950\t12\t4\t9"));
  CHECK_FALSE(parse_record("solo\tyear\t12\t4"));
  CHECK_FALSE(parse_record("solo\t1950\t0\t4"));
  CHECK_FALSE(parse_record("solo\t1950\t-3\t4"));
  CHECK_FALSE(parse_record(""));
}

TEST_CASE("year range") {
  const auto r = parse_year_range("1900:2008");
  CHECK(r.first == 1900);
  CHECK(r.last == 2008);
  CHECK(r.size() == 109);
  CHECK(r.contains(1900));
  CHECK(r.contains(2008));
  CHECK_FALSE(r.contains(2009));
  CHECK_THROWS_AS(parse_year_range("2008:1900"), ConfigError);
  CHECK_THROWS_AS(parse_year_range("1900"), ConfigError);
  CHECK_THROWS_AS(parse_year_range("a:b"), ConfigError);
}

TEST_CASE("filter records") {
  IngestStats stats;
  CHECK(filter_records({}, {}, stats).empty());

  std::ifstream in(kFixtures / "ingest/ten_records.tsv");
  const auto records = read_records(in, stats);
  REQUIRE(records.size() == 10);
  IngestStats filter_stats;
  const auto kept = filter_records(records, {3, std::nullopt}, filter_stats);
  CHECK(kept.size() == 7);
  CHECK(filter_stats.records_filtered == 3);
  CHECK(std::any_of(kept.begin(), kept.end(), [](const auto& r) { return r.token == "gamma"; }));

  const std::vector<UnigramRecord> dated = {{"a", 1899, 5, 5}, {"a", 1900, 5, 5}, {"a", 2009, 5, 5}};
  CHECK(filter_records(dated, {1, YearRange{1900, 2008}}, filter_stats).size() == 1);
}

TEST_CASE("fold token") {
  CHECK(fold_token("Solo") == "solo");
  CHECK(fold_token("SOLO_NOUN") == "solo");
  CHECK(fold_token("rock_and_roll_NOUN") == "rock_and_roll");
  CHECK(fold_token("ÑANDÚ") == "ñandú");
  CHECK(fold_token("ΑΘΗΝΑ") == "αθηνα");
  CHECK_FALSE(fold_token("_NOUN"));
  CHECK_FALSE(fold_token("bad\xff"));
}

TEST_CASE("case variants are summed") {
  const auto table = consolidate(records_of("Solo\t1950\t3\t1\nsolo\t1950\t2\t1\nSOLO\t1950\t1\t1\n"),
                                 YearRange{1950, 1950});
  REQUIRE(table.counts.size() == 1);
  CHECK(table.counts.at("solo") == std::vector<Count>{6});
}

TEST_CASE("part of speech variants are merged") {
  const auto table = consolidate(
      records_of("run_VERB\t2000\t4\t1\nrun_NOUN\t2000\t3\t1\nrun\t2001\t5\t1\n"), YearRange{2000, 2001});
  CHECK(table.counts.at("run") == std::vector<Count>{7, 5});
}

TEST_CASE("words missing a year are dropped") {
  std::vector<UnigramRecord> records;
  for (int y = 1900; y <= 2008; ++y) {
    records.push_back({"always", y, 10, 1});
    if (y != 1950) {
      records.push_back({"gappy", y, 10, 1});
    }
  }
  const auto table = consolidate(records, YearRange{1900, 2008});
  CHECK(table.counts.size() == 1);
  CHECK(table.counts.count("always") == 1);
  CHECK(table.dropped_incomplete == 1);
  CHECK(table.years.size() == 109);
}

TEST_CASE("consolidator merge equals single pass") {
  const auto all = records_of(slurp(kFixtures / "ingest/shard_a.tsv") +
                              slurp(kFixtures / "ingest/shard_b.tsv") +
                              slurp(kFixtures / "ingest/shard_c.tsv"));
  Consolidator whole, left, right;
  for (std::size_t i = 0; i < all.size(); ++i) {
    whole.add(all[i]);
    (i % 2 == 0 ? left : right).add(all[i]);
  }
  right.merge(left);
  const auto a = whole.finish(YearRange{2000, 2002});
  const auto b = right.finish(YearRange{2000, 2002});
  CHECK(a.counts == b.counts);
  CHECK(a.years == b.years);
}

TEST_CASE("lexicon tags and statistics") {
  WordYearTable table;
  table.years = {2000, 2001};
  table.counts = {{"a", {5, 6}}, {"of", {9, 9}}, {"the", {20, 21}}, {"sun", {2, 3}}, {"zebra", {1, 1}}};
  const std::vector<std::string> stop = {"the", "of", "notpresent"};
  const std::vector<std::string> swadesh = {"sun"};
  const auto lex = build_lexicon(table, stop, swadesh);
  CHECK(lex.vocab() == 5);
  CHECK(lex.stopword_count() == 2);
  CHECK(lex.swadesh_count() == 1);
  CHECK(lex.frequencies.words == std::vector<std::string>{"a", "of", "sun", "the", "zebra"});
  CHECK(lex.ln_initial_corpus() == doctest::Approx(std::log(37.0)));
  CHECK(lex.vocab_to_corpus_ratio() == doctest::Approx(5.0 / 37));

  const auto untagged = build_lexicon(table, std::vector<std::string>{}, std::vector<std::string>{});
  CHECK(untagged.stopword_count() == 0);
  CHECK(untagged.swadesh_count() == 0);
  CHECK(untagged.frequencies == lex.frequencies);
}

TEST_CASE("word lists") {
  const auto stop = read_word_list(kFixtures / "ingest/stopwords.txt");
  CHECK(stop == std::vector<std::string>{"the", "a"});
  CHECK_THROWS_AS(read_word_list(kFixtures / "no_such_file.txt"), ConfigError);
}

TEST_CASE("lexicon csv round trip") {
  std::ifstream in(kFixtures / "ingest/expected_lexicon.csv");
  const auto lex = read_lexicon_csv(in);
  CHECK(lex.vocab() == 5);
  CHECK(lex.years == std::vector<int>{2000, 2001, 2002});
  std::ostringstream out;
  write_lexicon_csv(out, lex);
  CHECK(out.str() == slurp(kFixtures / "ingest/expected_lexicon.csv"));

  std::istringstream bad("token,2000\nx,1\n");
  CHECK_THROWS_AS(read_lexicon_csv(bad), ConfigError);
}

TEST_CASE("fixture shards give the golden lexicon in every order") {
  const auto golden = slurp(kFixtures / "ingest/expected_lexicon.csv");
  std::vector<std::string> shards = {"shard_a.tsv", "shard_b.tsv", "shard_c.tsv"};
  std::sort(shards.begin(), shards.end());
  do {
    CHECK(lexicon_text(shards) == golden);
  } while (std::next_permutation(shards.begin(), shards.end()));
}

TEST_CASE("fixture ingest statistics") {
  const FilterOptions options{3, YearRange{2000, 2002}};
  Consolidator acc;
  IngestStats stats;
  for (const char* name : {"shard_a.tsv", "shard_b.tsv", "shard_c.tsv"}) {
    std::ifstream in(kFixtures / "ingest" / name);
    ingest_stream(in, options, acc, stats);
  }
  const auto table = acc.finish(options.years);
  CHECK(stats.records_read == 26);
  // One line without tabs and one token that is only a suffix.
  CHECK(stats.records_malformed == 2);
  // "Rare" below the volume threshold and "the" in 1999.
  CHECK(stats.records_filtered == 2);
  CHECK(stats.records_retained == 22);
  // "ghost" and "rare" lack a year.
  CHECK(table.dropped_incomplete == 2);
  CHECK(table.counts.size() == 5);
  CHECK(table.counts.at("the") == std::vector<Count>{50, 40, 45});
  CHECK(table.counts.at("run") == std::vector<Count>{13, 11, 5});
}

TEST_CASE("empty input") {
  std::istringstream in("");
  Consolidator acc;
  IngestStats stats;
  ingest_stream(in, {}, acc, stats);
  CHECK(stats == IngestStats{});
  const auto table = acc.finish(std::nullopt);
  CHECK(table.counts.empty());
  CHECK(build_lexicon(table, std::vector<std::string>{}, std::vector<std::string>{}).vocab() == 0);
}
