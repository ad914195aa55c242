#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adf/sample.hpp"

namespace adf::exp {

/// Shortest text that parses back to exactly `v`.
std::string format_number(double v);

/// Strict parse of a whole field (surrounding blanks allowed). nullopt when
/// the text is not a number.
std::optional<double> parse_number(std::string_view text);

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comma-separated writer with a mandatory header. Missing values are
/// written as empty fields.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& header);

  void row(std::initializer_list<std::optional<double>> fields);
  void row(const std::vector<std::optional<double>>& fields);

 private:
  std::ostream& os_;
  std::size_t width_;
};

/// Reads a "t,x" stream (header mandatory, extra columns ignored, times
/// strictly increasing). Errors carry the 1-based line number.
std::vector<Sample> read_samples(std::istream& is);
std::vector<Sample> ingest_csv(const std::filesystem::path& path);

void write_samples(std::ostream& os, const std::vector<Sample>& samples);

}  // namespace adf::exp
