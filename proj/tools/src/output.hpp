#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace fiedler::cli {

// 17 significant digits, '.' decimal, "inf"/"nan" for non-finite values.
std::string format_double(double value);

// Accumulates CSV text; fields are written verbatim.
class CsvWriter {
 public:
  explicit CsvWriter(std::initializer_list<std::string_view> header);
  explicit CsvWriter(const std::vector<std::string>& header);

  CsvWriter& field(std::string_view text);
  CsvWriter& field(double value);
  CsvWriter& field(std::size_t value);
  CsvWriter& field(long long value);
  void end_row();

  const std::string& str() const noexcept { return text_; }

 private:
  std::string text_;
  bool row_open_ = false;
};

// Files produced by one subcommand. All names are claimed before any
// computation so a collision fails fast, then written at the end.
class OutputSet {
 public:
  OutputSet(std::filesystem::path dir, bool force);

  void claim(const std::string& name);
  void write(const std::string& name, const std::string& contents) const;
  std::filesystem::path path(const std::string& name) const { return dir_ / name; }

 private:
  std::filesystem::path dir_;
  bool force_;
  std::vector<std::string> claimed_;
};

}  // namespace fiedler::cli
