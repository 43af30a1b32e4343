// Text, JSON and DOT forms of a Dag. Vertices are 1-based on the outside.
//
//   text:  first line n, then one "u v" per arc; '#' starts a comment
//   json:  {"n": 3, "arcs": [[1,2],[2,3]]}
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dag.hpp"

namespace reorilat {

inline Dag parse_dag_json(std::string const& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    fail(ErrorKind::parse, std::string("json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    fail(ErrorKind::parse, "json: expected an object with integer field \"n\"");
  }
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> arcs;
  if (j.contains("arcs")) {
    if (!j["arcs"].is_array()) {
      fail(ErrorKind::parse, "json: \"arcs\" must be an array");
    }
    for (auto const& a : j["arcs"]) {
      if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
          !a[1].is_number_integer()) {
        fail(ErrorKind::parse, "json: every arc must be a pair of integers");
      }
      arcs.emplace_back(a[0].get<int>() - 1, a[1].get<int>() - 1);
    }
  }
  return Dag(n, arcs);
}

inline Dag parse_dag_text(std::string const& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<int, int>> arcs;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) {
      line.erase(h);
    }
    std::istringstream ls(line);
    std::string tok;
    std::vector<long> nums;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long x = std::stol(tok, &used);
        if (used != tok.size()) {
          throw std::invalid_argument(tok);
        }
        nums.push_back(x);
      } catch (std::exception const&) {
        fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": bad token '" + tok + "'");
      }
    }
    if (nums.empty()) {
      continue;
    }
    if (n < 0) {
      if (nums.size() != 1) {
        fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": expected vertex count");
      }
      n = static_cast<int>(nums[0]);
      continue;
    }
    if (nums.size() != 2) {
      fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": expected 'u v'");
    }
    if (nums[0] < 1 || nums[0] > n || nums[1] < 1 || nums[1] > n) {
      fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": vertex out of range 1.." +
                                 std::to_string(n));
    }
    arcs.emplace_back(static_cast<int>(nums[0]) - 1, static_cast<int>(nums[1]) - 1);
  }
  if (n < 0) {
    fail(ErrorKind::parse, "empty input");
  }
  return Dag(n, arcs);
}

inline Dag parse_dag(std::string const& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string::npos && text[p] == '{') {
    return parse_dag_json(text);
  }
  return parse_dag_text(text);
}

inline Dag read_dag_file(std::string const& path) {
  std::ifstream f(path);
  if (!f) {
    fail(ErrorKind::parse, "cannot open " + path);
  }
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_dag(ss.str());
}

inline std::string to_text(Dag const& d) {
  std::string s = std::to_string(d.n()) + "\n";
  for (auto [u, v] : d.arcs()) {
    s += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return s;
}

inline nlohmann::json to_json(Dag const& d) {
  nlohmann::json arcs = nlohmann::json::array();
  for (auto [u, v] : d.arcs()) {
    arcs.push_back({u + 1, v + 1});
  }
  return {{"n", d.n()}, {"arcs", arcs}};
}

inline std::string to_dot(Dag const& d, std::string const& name = "D") {
  std::string s = "digraph " + name + " {\n";
  for (int v = 0; v < d.n(); ++v) {
    s += "  " + std::to_string(v + 1) + ";\n";
  }
  for (auto [u, v] : d.arcs()) {
    s += "  " + std::to_string(u + 1) + " -> " + std::to_string(v + 1) + ";\n";
  }
  return s + "}\n";
}

}  // namespace reorilat
