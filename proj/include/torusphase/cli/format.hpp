#pragma once

#include <string>
#include <vector>

namespace torusphase::cli {

/// Shortest round-trip decimal form of a double, locale independent.
std::string fmt_double(double value);

/// Minimal CSV document builder: header row always emitted, '.' decimal
/// point, LF line endings, values rendered at full precision.
class CsvBuilder {
 public:
  explicit CsvBuilder(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace torusphase::cli
