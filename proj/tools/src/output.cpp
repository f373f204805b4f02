#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "fiedler/errors.hpp"

namespace fiedler::cli {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

CsvWriter::CsvWriter(std::initializer_list<std::string_view> header) {
  for (std::string_view h : header) field(h);
  end_row();
}

CsvWriter::CsvWriter(const std::vector<std::string>& header) {
  for (const std::string& h : header) field(h);
  end_row();
}

CsvWriter& CsvWriter::field(std::string_view text) {
  if (row_open_) text_ += ',';
  text_ += text;
  row_open_ = true;
  return *this;
}

CsvWriter& CsvWriter::field(double value) { return field(format_double(value)); }
CsvWriter& CsvWriter::field(std::size_t value) { return field(std::to_string(value)); }
CsvWriter& CsvWriter::field(long long value) { return field(std::to_string(value)); }

void CsvWriter::end_row() {
  text_ += '\n';
  row_open_ = false;
}

OutputSet::OutputSet(std::filesystem::path dir, bool force) : dir_(std::move(dir)), force_(force) {
  std::error_code ec;
  if (std::filesystem::exists(dir_, ec) && !std::filesystem::is_directory(dir_, ec)) {
    throw InputError("output path " + dir_.string() + " is not a directory");
  }
}

void OutputSet::claim(const std::string& name) {
  if (std::find(claimed_.begin(), claimed_.end(), name) != claimed_.end()) return;
  if (!force_ && std::filesystem::exists(dir_ / name)) {
    throw InputError("refusing to overwrite " + (dir_ / name).string() + " (pass --force)");
  }
  claimed_.push_back(name);
}

void OutputSet::write(const std::string& name, const std::string& contents) const {
  std::filesystem::create_directories(dir_);
  const auto target = dir_ / name;
  std::ofstream out(target, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot open " + target.string() + " for writing");
  out << contents;
  if (!out) throw InputError("failed writing " + target.string());
}

}  // namespace fiedler::cli
