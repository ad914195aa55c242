#include "adf/experiments/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace adf::exp {

namespace {

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = line.find(',', pos);
    out.push_back(trim(line.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::string format_number(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), res.ptr};
}

std::optional<double> parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& header)
    : os_(os), width_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) os_ << (i ? "," : "") << header[i];
  os_ << '\n';
}

void CsvWriter::row(std::initializer_list<std::optional<double>> fields) {
  row(std::vector<std::optional<double>>(fields));
}

void CsvWriter::row(const std::vector<std::optional<double>>& fields) {
  if (fields.size() != width_) throw CsvError("csv: row width does not match header");
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    if (fields[i]) line += format_number(*fields[i]);
  }
  line += '\n';
  os_ << line;
}

std::vector<Sample> read_samples(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> t_col;
  std::optional<std::size_t> x_col;
  std::vector<Sample> samples;

  while (std::getline(is, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line);
    if (!t_col) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] == "t") t_col = i;
        if (fields[i] == "x") x_col = i;
      }
      if (!t_col || !x_col) {
        throw CsvError("line " + std::to_string(line_no) + ": header must name columns t and x");
      }
      continue;
    }
    const std::size_t need = std::max(*t_col, *x_col) + 1;
    if (fields.size() < need) {
      throw CsvError("line " + std::to_string(line_no) + ": expected at least " +
                     std::to_string(need) + " fields");
    }
    const auto t = parse_number(fields[*t_col]);
    const auto x = parse_number(fields[*x_col]);
    if (!t || !x) throw CsvError("line " + std::to_string(line_no) + ": malformed number");
    if (!samples.empty() && !(*t > samples.back().t)) {
      throw CsvError("line " + std::to_string(line_no) + ": time is not strictly increasing");
    }
    samples.push_back({*t, *x});
  }
  if (samples.empty()) throw CsvError("no samples");
  return samples;
}

std::vector<Sample> ingest_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw CsvError("cannot open " + path.string());
  return read_samples(is);
}

void write_samples(std::ostream& os, const std::vector<Sample>& samples) {
  CsvWriter w(os, {"t", "x"});
  for (const Sample& s : samples) w.row({s.t, s.x});
}

}  // namespace adf::exp
