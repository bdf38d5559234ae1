#pragma once

// CSV interchange for representations: corpus ingestion (header k,x,y,z)
// and report/search output.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "sumcubes/residue.hpp"
#include "sumcubes/search.hpp"

namespace sumcubes {

/// Decimal integer with optional sign, any length. No whitespace, exponents or separators.
std::optional<mpz_class> parse_integer(std::string_view text);

struct CorpusRow {
  std::size_t line = 0;
  mpz_class k, x, y, z;
};

struct ParseError {
  std::size_t line = 0;
  std::string message;
};

struct Corpus {
  std::vector<CorpusRow> rows;
  std::vector<ParseError> errors;
};

class CorpusFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a CSV whose header names k, x, y and z (any order, extra columns
/// ignored). Bad rows are collected in `errors`; a bad header throws.
Corpus read_corpus(std::istream& in);

struct ReportRow {
  std::size_t line = 0;
  mpz_class k, x, y, z;
  bool valid = false;
  Residue cls;
  std::string path;         // class multiset, e.g. "8+8+8"
  std::string signed_path;  // positional, e.g. "-1-1+8"
  std::string diagnostic;   // set when !valid
};

ReportRow check_row(const CorpusRow& row);

inline constexpr std::string_view kSearchHeader = "k,x,y,z,class,path";
inline constexpr std::string_view kReportHeader = "line,k,x,y,z,valid,class,path,signed_path,diagnostic";

/// One row per representation, in result order; skipped k contribute no rows.
void write_search_csv(std::ostream& out, std::span<const SearchResult> results);
void write_report_csv(std::ostream& out, std::span<const ReportRow> rows);

}  // namespace sumcubes
