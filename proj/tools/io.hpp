#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace powerlaw::cli {

/// 17 significant digits, enough to round-trip ("nan", "inf" for specials).
std::string number_text(double v);
std::string number_text(std::optional<double> v);  // empty when absent

std::string sha256_hex(const std::string& bytes);

std::string read_file(const std::string& path);

/// Collects the files one command produces, writes them under a directory
/// and remembers their digests for the manifest.
class OutputSet {
 public:
  explicit OutputSet(std::string dir);

  void write(const std::string& name, const std::string& content);
  /// Writes without recording a digest (the manifest itself).
  void write_untracked(const std::string& name, const std::string& content);

  [[nodiscard]] const std::string& dir() const { return dir_; }
  [[nodiscard]] const std::map<std::string, std::string>& digests() const { return digests_; }

 private:
  std::string dir_;
  std::map<std::string, std::string> digests_;
};

/// Builds an RFC 4180 CSV; fields containing separators or quotes are
/// quoted.
class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& header);
  void row(const std::vector<std::string>& fields);
  [[nodiscard]] const std::string& text() const { return text_; }

 private:
  void line(const std::vector<std::string>& fields);
  std::size_t width_;
  std::string text_;
};

/// Header plus rows of a CSV file; quoted fields are unquoted.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column as numbers; empty fields read as NaN. Throws for an unknown name.
  [[nodiscard]] std::vector<double> column(const std::string& name) const;
};

CsvTable parse_csv(const std::string& text);

}  // namespace powerlaw::cli
