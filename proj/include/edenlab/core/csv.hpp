#pragma once
// Minimal CSV reading and writing.
//
// All fields produced by this library are comma-free by construction (vertex
// ids use spaces/semicolons, numbers use to_chars), so no quoting layer is
// needed; the writer refuses fields that would require one rather than
// silently corrupting the file.

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/core/fmt.hpp"

namespace edenlab {

/// Streaming CSV writer with a fixed header. Writes '\n' line endings.
class csv_writer {
public:
  /// Opens `path` for writing and emits the header row.
  csv_writer(const std::string& path, const std::vector<std::string>& header)
      : file_(std::make_unique<std::ofstream>(path, std::ios::binary)),
        out_(file_.get()), columns_(header.size()) {
    if (!*file_) throw usage_error("cannot open '" + path + "' for writing");
    write_row(header);
  }

  /// Writes to an existing stream (not owned) and emits the header row.
  csv_writer(std::ostream& os, const std::vector<std::string>& header)
      : out_(&os), columns_(header.size()) {
    write_row(header);
  }

  /// Writes one row; the field count must match the header.
  void write_row(const std::vector<std::string>& fields) {
    if (fields.size() != columns_)
      throw invariant_error("csv row has " + std::to_string(fields.size()) +
                            " fields, header has " + std::to_string(columns_));
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const auto& f = fields[i];
      if (f.find_first_of(",\"\n\r") != std::string::npos)
        throw invariant_error("csv field would need quoting: '" + f + "'");
      if (i) *out_ << ',';
      *out_ << f;
    }
    *out_ << '\n';
  }

  void flush() { out_->flush(); }

private:
  std::unique_ptr<std::ofstream> file_;  // null when writing to a borrowed stream
  std::ostream* out_;
  std::size_t columns_;
};

/// A fully parsed CSV file: header plus data rows (no quoting dialect).
struct csv_table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Reads a CSV file produced by csv_writer.
inline csv_table read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open '" + path + "' for reading");
  csv_table t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
    auto fields = split(line, ',');
    if (first) {
      t.header = std::move(fields);
      first = false;
    } else {
      if (fields.size() != t.header.size())
        throw usage_error("csv '" + path + "': row " + std::to_string(t.rows.size() + 1) +
                          " has " + std::to_string(fields.size()) + " fields, header has " +
                          std::to_string(t.header.size()));
      t.rows.push_back(std::move(fields));
    }
  }
  if (first) throw usage_error("csv '" + path + "' is empty");
  return t;
}

/// Reads a whole file as bytes (for byte-identity comparisons).
inline std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace edenlab
