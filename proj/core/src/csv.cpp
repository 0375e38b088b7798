#include "wordrank/csv.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

#include "wordrank/errors.hpp"

namespace wordrank::csv {

std::string format_real(double value) {
  if (std::isnan(value)) {
    return "nan";
  }
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  if (value == 0) {
    return "0";  // no "-0"
  }
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') {
      out += "\"\"";
    } else {
      out.push_back(ch);
    }
  }
  out.push_back('"');
  return out;
}

Writer& Writer::field(std::string_view text) {
  if (!first_) {
    out_ << ',';
  }
  out_ << escape(text);
  first_ = false;
  return *this;
}

Writer& Writer::field(double value) { return field(std::string_view(format_real(value))); }

Writer& Writer::field(std::int64_t value) { return field(std::string_view(std::to_string(value))); }

Writer& Writer::field(std::uint64_t value) {
  return field(std::string_view(std::to_string(value)));
}

void Writer::end_row() {
  out_ << '\n';
  first_ = true;
}

void Writer::row(const std::vector<std::string>& fields) {
  for (const auto& f : fields) {
    field(std::string_view(f));
  }
  end_row();
}

std::optional<std::vector<std::string>> read_row(std::istream& in) {
  if (in.peek() == std::char_traits<char>::eof()) {
    return std::nullopt;
  }
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  bool after_quote = false;
  int ch;
  while ((ch = in.get()) != std::char_traits<char>::eof()) {
    const char c = static_cast<char>(ch);
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get();
          current.push_back('"');
        } else {
          quoted = false;
          after_quote = true;
        }
      } else {
        current.push_back(c);
      }
      continue;
    }
    if (c == '"' && current.empty() && !after_quote) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
      after_quote = false;
    } else if (c == '\n') {
      fields.push_back(std::move(current));
      return fields;
    } else if (c == '\r') {
      if (in.peek() == '\n') {
        in.get();
      }
      fields.push_back(std::move(current));
      return fields;
    } else {
      current.push_back(c);
    }
  }
  if (quoted) {
    throw ConfigError("csv: unterminated quoted field");
  }
  fields.push_back(std::move(current));
  return fields;
}

}  // namespace wordrank::csv
