#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wordrank::csv {

/// Fixed 10-significant-digit rendering ("%.10g"), '.' decimal separator.
std::string format_real(double value);

/// RFC 4180 quoting: fields containing a comma, quote, CR or LF are quoted
/// and embedded quotes doubled.
std::string escape(std::string_view field);

/// Writes rows terminated by "\n".
class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  Writer& field(std::string_view text);
  Writer& field(const char* text) { return field(std::string_view(text)); }
  Writer& field(const std::string& text) { return field(std::string_view(text)); }
  Writer& field(double value);
  Writer& field(std::int64_t value);
  Writer& field(std::uint64_t value);
  Writer& field(int value) { return field(static_cast<std::int64_t>(value)); }
  Writer& field(unsigned value) { return field(static_cast<std::uint64_t>(value)); }
  Writer& field(bool value) { return field(std::string_view(value ? "1" : "0")); }
  void end_row();

  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
  bool first_ = true;
};

/// Reads one RFC 4180 record (which may span lines inside quotes).
/// Returns nullopt at end of input. Throws ConfigError on an unterminated quote.
std::optional<std::vector<std::string>> read_row(std::istream& in);

}  // namespace wordrank::csv
