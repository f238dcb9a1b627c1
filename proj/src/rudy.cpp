#include "accut/rudy.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace accut {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

Graph parse_rudy(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1, m = -1;

  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) {
      fail(line_no, "expected header \"<vertices> <edges>\"");
    }
    if (n < 1) fail(line_no, "vertex count must be positive");
    if (m < 0) fail(line_no, "edge count must be nonnegative");
    break;
  }
  if (n < 0) throw std::runtime_error("empty input: missing header line");

  std::vector<WeightedEdge> edges;
  edges.reserve(m);
  std::set<std::pair<int, int>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    if (static_cast<int>(edges.size()) == m) {
      fail(line_no, "unexpected data after " + std::to_string(m) + " edges");
    }
    std::istringstream row(line);
    int i = 0, j = 0;
    double w = 0.0;
    std::string extra;
    if (!(row >> i >> j >> w) || (row >> extra)) {
      fail(line_no, "expected an edge \"<i> <j> <weight>\"");
    }
    if (i < 1 || i > n || j < 1 || j > n) {
      fail(line_no, "endpoint out of range 1.." + std::to_string(n));
    }
    if (i == j) fail(line_no, "self-loops are not allowed");
    if (w < 0.0) fail(line_no, "only nonnegative weights are in scope");
    const std::pair<int, int> key = std::minmax(i, j);
    if (!seen.insert(key).second) {
      fail(line_no, "duplicate edge (" + std::to_string(key.first) + ", " +
                        std::to_string(key.second) + ")");
    }
    edges.push_back({i - 1, j - 1, w});
  }

  if (static_cast<int>(edges.size()) != m) {
    throw std::runtime_error("header announced " + std::to_string(m) + " edges but the file has " +
                             std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

Graph parse_rudy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  try {
    return parse_rudy(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace accut
