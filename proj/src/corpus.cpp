#include "sumcubes/corpus.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>

namespace sumcubes {

std::optional<mpz_class> parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  mpz_class out(std::string(digits), 10);
  if (text.front() == '-') out = -out;
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Corpus read_corpus(std::istream& in) {
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;

  std::array<std::size_t, 4> column{};  // k, x, y, z
  bool have_header = false;
  while (!have_header && std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto names = split(line);
    constexpr std::array<std::string_view, 4> wanted{"k", "x", "y", "z"};
    for (std::size_t w = 0; w < wanted.size(); ++w) {
      const auto it = std::find(names.begin(), names.end(), wanted[w]);
      if (it == names.end())
        throw CorpusFormatError("line " + std::to_string(line_no) + ": header lacks column '" +
                                std::string(wanted[w]) + "'");
      column[w] = static_cast<std::size_t>(it - names.begin());
    }
    have_header = true;
  }
  if (!have_header) throw CorpusFormatError("missing header line (expected k,x,y,z)");

  const auto needed = *std::max_element(column.begin(), column.end()) + 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line);
    if (fields.size() < needed) {
      corpus.errors.push_back({line_no, "expected at least " + std::to_string(needed) + " fields, got " +
                                            std::to_string(fields.size())});
      continue;
    }
    CorpusRow row;
    row.line = line_no;
    std::array<mpz_class*, 4> slots{&row.k, &row.x, &row.y, &row.z};
    bool ok = true;
    for (std::size_t w = 0; w < slots.size() && ok; ++w) {
      const auto value = parse_integer(fields[column[w]]);
      if (!value) {
        corpus.errors.push_back({line_no, "not an integer: '" + std::string(fields[column[w]]) + "'"});
        ok = false;
      } else {
        *slots[w] = *value;
      }
    }
    if (ok) corpus.rows.push_back(std::move(row));
  }
  return corpus;
}

ReportRow check_row(const CorpusRow& row) {
  ReportRow r;
  r.line = row.line;
  r.k = row.k;
  r.x = row.x;
  r.y = row.y;
  r.z = row.z;
  r.cls = class_of(row.k);
  try {
    r.path = spell(label_solution(row.x, row.y, row.z, row.k));
    r.signed_path = signed_path(row.x, row.y, row.z);
    r.valid = true;
  } catch (const SumMismatch& e) {
    r.diagnostic = "sum=" + e.actual().get_str();
    if (e.infeasible_class()) r.diagnostic += " (k in infeasible class " + std::to_string(r.cls.value()) + ")";
  }
  return r;
}

void write_search_csv(std::ostream& out, std::span<const SearchResult> results) {
  out << kSearchHeader << '\n';
  for (const auto& result : results)
    for (const auto& rep : result.representations)
      out << rep.k() << ',' << rep.x() << ',' << rep.y() << ',' << rep.z() << ',' << result.cls.value() << ','
          << spell(rep.path()) << '\n';
}

void write_report_csv(std::ostream& out, std::span<const ReportRow> rows) {
  out << kReportHeader << '\n';
  for (const auto& r : rows)
    out << r.line << ',' << r.k << ',' << r.x << ',' << r.y << ',' << r.z << ',' << (r.valid ? "true" : "false")
        << ',' << r.cls.value() << ',' << r.path << ',' << r.signed_path << ',' << r.diagnostic << '\n';
}

}  // namespace sumcubes
