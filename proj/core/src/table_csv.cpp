#include "arith/table_csv.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "arith/errors.hpp"

namespace arith {

void write_table_csv(std::ostream& os, const ArithFunc& f) {
  os << "n,value\n";
  f.visit([&](const auto& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      os << (i + 1) << ',' << Value(values[i]).to_string() << '\n';
    }
  });
}

std::string table_csv(const ArithFunc& f) {
  std::ostringstream os;
  write_table_csv(os, f);
  return os.str();
}

ArithFunc read_table_csv(std::istream& is, ValueMode mode, std::uint64_t limit, ZeroTest zero_test) {
  std::map<std::uint64_t, Value> rows;
  std::string line;
  std::uint64_t line_no = 0;
  std::uint64_t max_n = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line_no == 1 && line.rfind("n,", 0) == 0) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw SpecError("table line " + std::to_string(line_no) + ": expected n,value");
    std::uint64_t n = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + comma, n);
    if (ec != std::errc() || ptr != line.data() + comma || n == 0) {
      throw SpecError("table line " + std::to_string(line_no) + ": bad index '" + line.substr(0, comma) + "'");
    }
    try {
      rows[n] = Value::parse(std::string_view(line).substr(comma + 1), mode);
    } catch (const std::invalid_argument& e) {
      throw SpecError("table line " + std::to_string(line_no) + ": " + e.what());
    }
    max_n = std::max(max_n, n);
  }
  if (limit == 0) limit = max_n;
  if (limit == 0) throw SpecError("table is empty and no limit was given");
  if (mode == ValueMode::kExact) {
    ArithFunc::ExactTable t(limit);
    for (const auto& [n, v] : rows) {
      if (n <= limit) t[n - 1] = v.rational();
    }
    return ArithFunc::exact(std::move(t));
  }
  ArithFunc::FloatTable t(limit);
  for (const auto& [n, v] : rows) {
    if (n <= limit) t[n - 1] = v.to_complex();
  }
  return ArithFunc::floating(std::move(t), zero_test);
}

}  // namespace arith
