#ifndef ACCUT_RESULT_IO_HPP
#define ACCUT_RESULT_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "accut/solver.hpp"

namespace accut {

enum class OutputFormat { json, csv };
enum class TraceLevel { none, summary, full };

// Everything a run report carries. Serialization is deterministic: fixed key
// order, %.10g floats, partition sorted ascending. wall_time is the only
// field expected to differ between identical runs.
struct ResultDocument {
  std::string graph_name;
  std::string algorithm;  // cia0 | cia1 | cia2 | oracle
  std::string p = "1";    // 1 | 2 | inf
  int t_tot = 0;
  int t_eq = 0;
  int l_pop = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
  double best_anti = 0.0;  // discrete ratio of the reported partition
  double best_max = 0.0;
  double cut_size = 0.0;
  std::vector<int> partition;  // ascending vertex ids, 0-based
  int rounds = -1;             // population rounds; negative means not applicable
  double wall_time = 0.0;      // seconds
  TraceLevel trace_level = TraceLevel::none;
  std::vector<TraceEntry> trace;
};

std::string format_double(double v);  // shortest %.10g form

// Renders the document. Throws std::invalid_argument when the partition is
// empty: a report must name a nontrivial side.
std::string write_result(const ResultDocument& doc, OutputFormat format);

}  // namespace accut

#endif
