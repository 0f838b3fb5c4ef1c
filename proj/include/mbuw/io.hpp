#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mbuw/distribution.hpp"

namespace mbuw {

class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numbers separated by any mix of whitespace, commas and newlines; blank
// cells and ragged rows are fine. Throws IngestError naming the line of a
// malformed token, or listing every value outside (0, 1).
Sample parse_sample(std::string_view text, std::string source = "<memory>");

Sample read_sample(const std::filesystem::path& path);

}  // namespace mbuw
