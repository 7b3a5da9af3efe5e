// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROIDOPT_IO_HPP
#define MATROIDOPT_IO_HPP

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "matroidopt/esa.hpp"
#include "matroidopt/instance.hpp"
#include "matroidopt/matroids.hpp"

namespace matroidopt {

namespace detail {

// Whitespace tokens with their source line, '#' to end of line stripped.
struct Token {
  std::string text;
  int line = 0;
};

inline std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string word;
    while (fields >> word) tokens.push_back({std::move(word), line_no});
  }
  return tokens;
}

class TokenReader {
 public:
  explicit TokenReader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& next(const std::string& what) {
    if (pos_ >= tokens_.size()) {
      throw ParseError("unexpected end of input, expected " + what);
    }
    return tokens_[pos_++];
  }

  long long next_int(const std::string& what, long long lo, long long hi) {
    const Token& token = next(what);
    long long value = 0;
    const char* begin = token.text.data();
    const char* end = begin + token.text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      throw ParseError("line " + std::to_string(token.line) + ": expected " +
                       what + ", got '" + token.text + "'");
    }
    if (value < lo || value > hi) {
      throw ParseError("line " + std::to_string(token.line) + ": " + what +
                       " " + token.text + " out of range [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return value;
  }

  bool exhausted() const { return pos_ >= tokens_.size(); }

  int current_line() const {
    return pos_ < tokens_.size() ? tokens_[pos_].line : 0;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

inline Sense parse_sense(const Token& token) {
  if (token.text == "min") return Sense::kMin;
  if (token.text == "max") return Sense::kMax;
  throw ParseError("line " + std::to_string(token.line) +
                   ": expected sense 'min' or 'max', got '" + token.text + "'");
}

}  // namespace detail

// Instance text format, whitespace separated, '#' starts a comment:
//   graphic <n> <m> <min|max>   followed by m lines  <u> <v> <c> <b>
//   uniform <n> <k> <beta> <min|max>   followed by n lines  <c> <b>
// Vertices are 1-based; elements are numbered 0..m-1 in record order.
inline BicriteriaInstance parse_instance(std::istream& in) {
  constexpr long long kMaxCost = 1'000'000'000'000LL;
  detail::TokenReader reader(detail::tokenize(in));
  const detail::Token kind = reader.next("instance kind");

  BicriteriaInstance parsed = [&] {
    if (kind.text == "graphic") {
      const int n = static_cast<int>(reader.next_int("vertex count", 1, 1'000'000));
      const int m = static_cast<int>(reader.next_int("edge count", 0, 10'000'000));
      const Sense sense = detail::parse_sense(reader.next("sense"));
      std::vector<GraphicMatroid::Edge> edges;
      std::vector<CostPair> costs;
      edges.reserve(static_cast<std::size_t>(m));
      costs.reserve(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) {
        const int u = static_cast<int>(reader.next_int("endpoint", 1, n));
        const int v = static_cast<int>(reader.next_int("endpoint", 1, n));
        const long long c = reader.next_int("cost", 0, kMaxCost);
        const int b = static_cast<int>(reader.next_int("binary cost", 0, 1));
        edges.push_back({u, v});
        costs.push_back({c, b});
      }
      auto matroid = std::make_shared<GraphicMatroid>(n, std::move(edges));
      return BicriteriaInstance(std::move(matroid), std::move(costs), sense,
                                MatroidKind::kGraphic, 1);
    }
    if (kind.text == "uniform") {
      const int n = static_cast<int>(reader.next_int("element count", 1, 10'000'000));
      const int k = static_cast<int>(reader.next_int("rank", 1, n));
      const int beta = static_cast<int>(reader.next_int("beta", 1, 1'000'000));
      const Sense sense = detail::parse_sense(reader.next("sense"));
      std::vector<CostPair> costs;
      costs.reserve(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        const long long c = reader.next_int("cost", 0, kMaxCost);
        const int b = static_cast<int>(reader.next_int("b value", 0, beta));
        costs.push_back({c, b});
      }
      auto matroid = std::make_shared<UniformMatroid>(n, k);
      return BicriteriaInstance(std::move(matroid), std::move(costs), sense,
                                MatroidKind::kUniform, beta);
    }
    throw ParseError("line " + std::to_string(kind.line) +
                     ": unknown instance kind '" + kind.text + "'");
  }();

  if (!reader.exhausted()) {
    throw ParseError("line " + std::to_string(reader.current_line()) +
                     ": trailing content after instance records");
  }
  return parsed;
}

inline BicriteriaInstance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  return parse_instance(in);
}

// Canonical serialization; parse(write(x)) == x and the bytes are
// deterministic, which the seeded-generator tests rely on.
inline void write_instance(const BicriteriaInstance& instance, std::ostream& out) {
  const auto& costs = instance.costs();
  if (instance.kind() == MatroidKind::kGraphic) {
    const auto& graph = dynamic_cast<const GraphicMatroid&>(instance.matroid());
    out << "graphic " << graph.n_vertices() << ' ' << graph.ground_size() << ' '
        << to_string(instance.sense()) << '\n';
    for (ElementId e = 0; e < graph.ground_size(); ++e) {
      const auto& edge = graph.edge(e);
      out << edge.u << ' ' << edge.v << ' ' << costs[static_cast<std::size_t>(e)].c
          << ' ' << costs[static_cast<std::size_t>(e)].b << '\n';
    }
    return;
  }
  if (instance.kind() == MatroidKind::kUniform) {
    const auto& uniform = dynamic_cast<const UniformMatroid&>(instance.matroid());
    out << "uniform " << uniform.ground_size() << ' ' << uniform.k() << ' '
        << instance.beta() << ' ' << to_string(instance.sense()) << '\n';
    for (const CostPair& cost : costs) {
      out << cost.c << ' ' << cost.b << '\n';
    }
    return;
  }
  throw UsageError("no text serialization for this matroid kind");
}

inline std::string instance_to_string(const BicriteriaInstance& instance) {
  std::ostringstream out;
  write_instance(instance, out);
  return out.str();
}

// Solver report, rendered to JSON or CSV. `counts` carries whichever of
// the cardinalities the chosen algorithm can certify (front size always;
// efficient-set and enumerated-basis totals when available).
struct SolveReport {
  std::string algorithm;
  ParetoFront front;
  SwapSequence swaps;           // esa only
  bool has_swaps = false;
  std::vector<std::pair<std::string, long long>> counts;
  double timing_ms = 0.0;
};

inline nlohmann::json report_to_json(const SolveReport& report) {
  nlohmann::json doc;
  doc["algorithm"] = report.algorithm;
  doc["sense"] = to_string(report.front.sense);
  doc["front"] = nlohmann::json::array();
  for (const ParetoPoint& point : report.front.points) {
    nlohmann::json entry;
    entry["c"] = point.outcome.c;
    entry["b"] = point.outcome.b;
    entry["basis"] = point.basis.elements();
    doc["front"].push_back(std::move(entry));
  }
  if (report.has_swaps) {
    doc["swaps"] = nlohmann::json::array();
    for (const Swap& swap : report.swaps) {
      nlohmann::json entry;
      entry["out"] = swap.out;
      entry["in"] = swap.in;
      entry["cost"] = swap.cost;
      doc["swaps"].push_back(std::move(entry));
    }
  }
  doc["timing_ms"] = report.timing_ms;
  doc["counts"] = nlohmann::json::object();
  for (const auto& [key, value] : report.counts) {
    doc["counts"][key] = value;
  }
  return doc;
}

inline std::string report_to_csv(const SolveReport& report) {
  std::ostringstream out;
  out << "c,b\n";
  for (const ParetoPoint& point : report.front.points) {
    out << point.outcome.c << ',' << point.outcome.b << '\n';
  }
  return out.str();
}

}  // namespace matroidopt

#endif  // MATROIDOPT_IO_HPP
