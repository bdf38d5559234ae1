#pragma once

// Subcommand bodies for the sumcubes tool. Each writes to the given streams
// and returns a process exit code.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace sumcubes::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kUsageError = 2,
};

struct GraphOptions {
  std::string alphabet = "018";
  int order = 3;
  std::optional<std::string> subgraph;    // E0, E1 or E2
  std::optional<std::string> edges_file;  // one gram per line
  std::optional<std::string> dot_file;
  std::optional<std::string> dashed;      // fixture whose edges are drawn dashed
  std::optional<int> highlight_class;     // ternary order-3 only
};

struct SearchOptions {
  std::int64_t bound = 100;
  std::optional<std::string> out_file;
  unsigned workers = 0;
};

int cmd_classes(std::ostream& out);
int cmd_graph(const GraphOptions& opts, std::ostream& out, std::ostream& err);
int cmd_cycle(const GraphOptions& opts, std::ostream& out, std::ostream& err);
/// `against` is "full" or a fixture name.
int cmd_validate(const std::string& cycle, const std::string& alphabet, int order, const std::string& against,
                 std::ostream& out, std::ostream& err);
int cmd_search(const std::string& k, const SearchOptions& opts, std::ostream& out, std::ostream& err);
int cmd_scan(std::int64_t from, std::int64_t to, const SearchOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify_corpus(const std::string& path, std::ostream& out, std::ostream& err);

}  // namespace sumcubes::cli
