#include "report.hpp"

#include <fstream>

#include "arith/errors.hpp"

namespace arithconv {

Provenance exact_provenance() { return {"exact", "", "", ""}; }

Provenance table_provenance(arith::ValueMode mode, const std::optional<arith::ZeroTest>& zero_test) {
  Provenance p;
  p.mode = arith::to_string(mode);
  if (mode == arith::ValueMode::kFloating && zero_test) p.threshold = zero_test->to_string();
  return p;
}

std::string fmt(double v) { return arith::format_double(v); }
std::string fmt(std::uint64_t v) { return std::to_string(v); }
std::string fmt_bool(bool v) { return v ? "true" : "false"; }

void CsvReport::section(const std::string& name, const std::string& header) {
  if (!text_.empty()) text_ += '\n';
  text_ += "# " + name + '\n';
  text_ += header + '\n';
}

void CsvReport::row(std::initializer_list<std::string> fields, const Provenance& prov) {
  row(std::vector<std::string>(fields), prov);
}

void CsvReport::row(const std::vector<std::string>& fields, const Provenance& prov) {
  auto all = fields;
  all.insert(all.end(), {prov.mode, prov.threshold, prov.cutoff, prov.tail_bound});
  plain_row(all);
}

void CsvReport::plain_row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) text_ += ',';
    text_ += fields[i];
  }
  text_ += '\n';
}

void CsvReport::comment(const std::string& text) { text_ += "# " + text + '\n'; }

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace arithconv
