#ifndef STRATA_CLI_COMMANDS_HPP
#define STRATA_CLI_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strata_cli/report.hpp"
#include "strata_cli/space_spec.hpp"

namespace strata::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kBudgetRefused = 2, kUsage = 3 };

struct Options {
  std::string command;
  SpaceSpec space;
  std::optional<std::size_t> k;
  std::vector<unsigned> primes{3, 5};
  std::uint64_t budget = 100'000'000;
  unsigned workers = 0;
  std::string label;
  std::string rows;
  /// Isotropic flag for `paving`: members separated by '|', rows by ';'.
  std::string flag;
  std::string suite = "all";
  bool counts = false;

  /// Deterministic record of the options, used as the report's invocation.
  Json invocation() const;
};

ReportBundle cmd_labels(const Options& opts);
ReportBundle cmd_classify(const Options& opts);
ReportBundle cmd_count(const Options& opts);
ReportBundle cmd_paving(const Options& opts);
ReportBundle cmd_resolve(const Options& opts);
ReportBundle cmd_fibers(const Options& opts);
ReportBundle cmd_closure(const Options& opts);
/// suite: partition, degrees, paving, towers, fibers, closure or all.
ReportBundle cmd_verify(const Options& opts);

/// Dispatches on opts.command (everything but export).
ReportBundle run(const Options& opts);

/// Covering relations of the order "i <= j iff i in closure[j]" (indices into
/// closure), i.e. the transitive reduction without loops.
std::vector<std::pair<std::size_t, std::size_t>> covering_edges(
    const std::vector<std::vector<bool>>& leq);

}  // namespace strata::cli

#endif  // STRATA_CLI_COMMANDS_HPP
