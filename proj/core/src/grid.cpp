#include "wordrank/grid.hpp"

namespace wordrank {

std::vector<std::string> simulated_word_ids(std::size_t count) {
  const std::size_t width = std::to_string(count).size();
  std::vector<std::string> ids;
  ids.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    std::string digits = std::to_string(i);
    ids.push_back("w" + std::string(width - digits.size(), '0') + digits);
  }
  return ids;
}

}  // namespace wordrank
