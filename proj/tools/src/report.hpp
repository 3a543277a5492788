#pragma once

#include <filesystem>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "arith/value.hpp"

namespace arithconv {

/// Trailing columns every numeric report row carries. Empty strings where
/// a field does not apply (exact values have no threshold or tail bound).
struct Provenance {
  std::string mode;
  std::string threshold;
  std::string cutoff;
  std::string tail_bound;
};

inline constexpr const char* kProvenanceHeader = "mode,threshold,cutoff,tail_bound";

Provenance exact_provenance();
Provenance table_provenance(arith::ValueMode mode, const std::optional<arith::ZeroTest>& zero_test);

std::string fmt(double v);
std::string fmt(std::uint64_t v);
std::string fmt_bool(bool v);

/// CSV text assembled in memory: "# name" section markers, a header per
/// section, rows joined with ',' and LF line endings.
class CsvReport {
 public:
  void section(const std::string& name, const std::string& header);
  void row(std::initializer_list<std::string> fields, const Provenance& prov);
  void row(const std::vector<std::string>& fields, const Provenance& prov);
  void plain_row(const std::vector<std::string>& fields);
  void comment(const std::string& text);
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

/// Writes to a sibling temporary and renames it over the target.
void write_atomically(const std::filesystem::path& path, const std::string& content);

}  // namespace arithconv
