#include "accut/result_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace accut {

namespace {

const char* mode_name(Objective mode) {
  return mode == Objective::anti ? "anti" : "maxcut";
}

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void append_partition(std::string& out, const std::vector<int>& partition, char sep) {
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(partition[i]);
  }
}

std::string write_json(const ResultDocument& d) {
  std::string out;
  out += "{\n";
  out += "  \"graph_name\": \"" + escape_json(d.graph_name) + "\",\n";
  out += "  \"algorithm\": \"" + escape_json(d.algorithm) + "\",\n";
  out += "  \"config\": {\n";
  out += "    \"p\": \"" + escape_json(d.p) + "\",\n";
  out += "    \"t_tot\": " + std::to_string(d.t_tot) + ",\n";
  out += "    \"t_eq\": " + std::to_string(d.t_eq) + ",\n";
  out += "    \"l_pop\": " + std::to_string(d.l_pop) + ",\n";
  out += "    \"restarts\": " + std::to_string(d.restarts) + ",\n";
  out += "    \"seed\": " + std::to_string(d.seed) + "\n";
  out += "  },\n";
  out += "  \"best_anti\": " + format_double(d.best_anti) + ",\n";
  out += "  \"best_max\": " + format_double(d.best_max) + ",\n";
  out += "  \"cut_size\": " + format_double(d.cut_size) + ",\n";
  out += "  \"partition\": [";
  append_partition(out, d.partition, ',');
  out += "],\n";
  if (d.rounds >= 0) {
    out += "  \"rounds\": " + std::to_string(d.rounds) + ",\n";
  }
  out += "  \"wall_time\": " + format_double(d.wall_time);
  if (d.trace_level != TraceLevel::none && !d.trace.empty()) {
    out += ",\n  \"trace\": [\n";
    if (d.trace_level == TraceLevel::full) {
      for (std::size_t i = 0; i < d.trace.size(); ++i) {
        const TraceEntry& e = d.trace[i];
        out += "    {\"step\": " + std::to_string(e.step) + ", \"mode\": \"" +
               mode_name(e.mode) + "\", \"rate\": " + format_double(e.rate) + "}";
        out += i + 1 < d.trace.size() ? ",\n" : "\n";
      }
    } else {
      // One row per same-mode segment.
      std::size_t i = 0;
      bool first = true;
      while (i < d.trace.size()) {
        std::size_t j = i;
        while (j + 1 < d.trace.size() && d.trace[j + 1].mode == d.trace[i].mode) ++j;
        if (!first) out += ",\n";
        first = false;
        out += "    {\"mode\": \"" + std::string(mode_name(d.trace[i].mode)) +
               "\", \"from_step\": " + std::to_string(d.trace[i].step) +
               ", \"to_step\": " + std::to_string(d.trace[j].step) +
               ", \"rate_start\": " + format_double(d.trace[i].rate) +
               ", \"rate_end\": " + format_double(d.trace[j].rate) + "}";
        i = j + 1;
      }
      out += "\n";
    }
    out += "  ]";
  }
  out += "\n}\n";
  return out;
}

std::string write_csv(const ResultDocument& d) {
  std::string out =
      "graph_name,algorithm,p,t_tot,t_eq,l_pop,restarts,seed,"
      "best_anti,best_max,cut_size,partition,rounds,wall_time\n";
  out += d.graph_name + ',' + d.algorithm + ',' + d.p + ',';
  out += std::to_string(d.t_tot) + ',' + std::to_string(d.t_eq) + ',' +
         std::to_string(d.l_pop) + ',' + std::to_string(d.restarts) + ',' +
         std::to_string(d.seed) + ',';
  out += format_double(d.best_anti) + ',' + format_double(d.best_max) + ',' +
         format_double(d.cut_size) + ',';
  append_partition(out, d.partition, ';');
  out += ',';
  if (d.rounds >= 0) out += std::to_string(d.rounds);
  out += ',' + format_double(d.wall_time) + '\n';
  return out;
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value in a result document");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string write_result(const ResultDocument& doc, OutputFormat format) {
  if (doc.partition.empty()) {
    throw std::invalid_argument("refusing to write a result with an empty partition");
  }
  return format == OutputFormat::json ? write_json(doc) : write_csv(doc);
}

}  // namespace accut
