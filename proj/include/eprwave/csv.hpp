#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace eprwave {

/// Rectangular table of named numeric columns, with an optional leading
/// label column for categorical rows (spin outcomes and the like).
struct Table {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
  std::string label_name;           // empty = no label column
  std::vector<std::string> labels;  // row count must match when present
};

/// Decimal rendering contract: 12 significant digits, locale-independent.
std::string format_sig12(double v);

std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

struct ManifestEntry {
  std::string filename;
  std::string checksum;  // fnv1a64 of the file bytes, hex
};

/// Renders the table (header row + rows, LF line endings) and writes it
/// atomically (temp file + rename). Returns the manifest entry.
ManifestEntry emit_csv(const Table& table, const std::filesystem::path& path);

/// Atomic text-file write used for reports; returns the checksum entry.
ManifestEntry emit_text(const std::string& text,
                        const std::filesystem::path& path);

}  // namespace eprwave
