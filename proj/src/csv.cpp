#include "eprwave/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace eprwave {

std::string format_sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view data) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(data)));
  return buf;
}

ManifestEntry emit_text(const std::string& text,
                        const std::filesystem::path& path) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) {
      throw std::runtime_error("emit: cannot open " + tmp.string());
    }
    out << text;
    if (!out) {
      throw std::runtime_error("emit: write failed for " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
  return ManifestEntry{path.filename().string(), fnv1a64_hex(text)};
}

ManifestEntry emit_csv(const Table& table, const std::filesystem::path& path) {
  if (table.names.size() != table.columns.size()) {
    throw std::invalid_argument("emit_csv: name/column count mismatch");
  }
  const bool labeled = !table.label_name.empty();
  std::size_t rows = labeled ? table.labels.size()
                             : (table.columns.empty() ? 0
                                                      : table.columns[0].size());
  for (const auto& col : table.columns) {
    if (col.size() != rows) {
      throw std::invalid_argument("emit_csv: table is not rectangular");
    }
  }
  std::string text;
  if (labeled) {
    text += table.label_name;
    if (!table.names.empty()) text += ',';
  }
  for (std::size_t c = 0; c < table.names.size(); ++c) {
    if (c) text += ',';
    text += table.names[c];
  }
  text += '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    if (labeled) {
      text += table.labels[r];
      if (!table.columns.empty()) text += ',';
    }
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) text += ',';
      text += format_sig12(table.columns[c][r]);
    }
    text += '\n';
  }
  return emit_text(text, path);
}

}  // namespace eprwave
