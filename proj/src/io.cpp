#include "mbuw/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace mbuw {

namespace {

bool is_separator(char c) { return c == ',' || c == ';' || c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

double parse_number(std::string_view token, std::size_t line, const std::string& source) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    std::ostringstream os;
    os << source << ":" << line << ": cannot parse '" << token << "' as a number";
    throw IngestError(os.str());
  }
  return value;
}

}  // namespace

Sample parse_sample(std::string_view text, std::string source) {
  std::vector<double> values;
  std::vector<std::string> offenders;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_separator(text[i])) {
      if (text[i] == '\n') ++line;
      ++i;
      continue;
    }
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !is_separator(text[i])) ++i;
    const std::string_view token = text.substr(start, i - start);
    const double v = parse_number(token, line, source);
    if (!(v > 0.0 && v < 1.0)) offenders.push_back(std::string(token) + " (line " + std::to_string(line) + ")");
    values.push_back(v);
  }
  if (!offenders.empty()) {
    std::ostringstream os;
    os << source << ": values outside the open interval (0, 1):";
    for (const auto& o : offenders) os << " " << o;
    throw IngestError(os.str());
  }
  if (values.empty()) throw IngestError(source + ": no observations");
  return Sample(std::move(values), std::move(source));
}

Sample read_sample(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open input file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_sample(buffer.str(), path.string());
}

}  // namespace mbuw
