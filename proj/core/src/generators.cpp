// Copyright 2026 The ecse Authors
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

#include "ecse/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace ecse {
namespace {

// Splits text into lines, keeping 1-based line numbers.
std::vector<std::pair<int, std::string>> Lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> lines;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.emplace_back(number, line);
  }
  return lines;
}

std::vector<std::string> Tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

int ToInt(const std::string& token, int line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size() || value < std::numeric_limits<int>::min() ||
      value > std::numeric_limits<int>::max()) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return static_cast<int>(value);
}

bool IsComment(const std::string& line) {
  const std::size_t first = line.find_first_not_of(" \t");
  return first == std::string::npos || line[first] == 'c';
}

int PositiveCandidate(int literal) {
  return literal > 0 ? 2 * literal - 1 : 2 * -literal;
}

Instance Blank(Mode mode, int n, int m, int tau, int k, int x, int y) {
  Instance inst;
  inst.mode = mode;
  inst.n = n;
  inst.m = m;
  inst.tau = tau;
  inst.k = k;
  inst.x = x;
  inst.y = y;
  inst.profile.assign(tau, std::vector<int>(n, kNoCandidate));
  return inst;
}

Instance GenThreeLevels(const CnfFormula& cnf, Mode mode) {
  cnf.Validate();
  for (const auto& clause : cnf.clauses) {
    if (clause.size() > 3) {
      throw PreconditionError("clause with more than three literals");
    }
  }
  const int big_n = cnf.num_vars;
  const int clauses = static_cast<int>(cnf.clauses.size());
  if (6 * big_n + clauses < 1) throw PreconditionError("empty formula");
  Instance inst = Blank(mode, 6 * big_n + clauses, 2 * big_n, 3, big_n, 0, 1);
  for (int i = 1; i <= big_n; ++i) {
    const int p = 2 * i - 1;
    const int q = 2 * i;
    const int rows[6][3] = {{p, 0, q}, {q, p, 0}, {0, q, p},
                            {q, 0, p}, {p, q, 0}, {0, p, q}};
    for (int g = 0; g < 6; ++g) {
      for (int t = 0; t < 3; ++t) inst.profile[t][6 * (i - 1) + g] = rows[g][t];
    }
  }
  for (int r = 0; r < clauses; ++r) {
    const auto& clause = cnf.clauses[r];
    for (int j = 0; j < static_cast<int>(clause.size()); ++j) {
      inst.profile[j][6 * big_n + r] = PositiveCandidate(clause[j]);
    }
  }
  return inst;
}

void CheckAssignment(const CnfFormula& cnf,
                     const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != cnf.num_vars) {
    throw PreconditionError("assignment size does not match the formula");
  }
}

}  // namespace

void CnfFormula::Validate(bool allow_empty) const {
  if (num_vars < 0) throw PreconditionError("negative variable count");
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    if (clauses[j].empty() && !allow_empty) {
      throw PreconditionError("clause " + std::to_string(j + 1) + " is empty");
    }
    for (int literal : clauses[j]) {
      if (literal == 0 || std::abs(literal) > num_vars) {
        throw PreconditionError("literal " + std::to_string(literal) +
                                " out of range in clause " +
                                std::to_string(j + 1));
      }
    }
  }
}

CnfFormula ParseDimacs(const std::string& text) {
  CnfFormula cnf;
  int declared = -1;
  int last_line = 0;
  std::vector<int> open;
  for (const auto& [number, line] : Lines(text)) {
    last_line = number;
    if (IsComment(line)) continue;
    const std::vector<std::string> tokens = Tokens(line);
    if (tokens[0] == "p") {
      if (declared >= 0) throw ParseError(number, "duplicate problem line");
      if (tokens.size() != 4 || tokens[1] != "cnf") {
        throw ParseError(number, "expected 'p cnf <vars> <clauses>'");
      }
      cnf.num_vars = ToInt(tokens[2], number);
      declared = ToInt(tokens[3], number);
      if (cnf.num_vars < 0 || declared < 0) {
        throw ParseError(number, "negative count in problem line");
      }
      continue;
    }
    if (declared < 0) throw ParseError(number, "clause before problem line");
    for (const std::string& token : tokens) {
      const int literal = ToInt(token, number);
      if (literal == 0) {
        if (open.empty()) throw ParseError(number, "empty clause");
        cnf.clauses.push_back(std::move(open));
        open.clear();
        continue;
      }
      if (std::abs(literal) > cnf.num_vars) {
        throw ParseError(number, "literal " + token +
                                     " exceeds variable count " +
                                     std::to_string(cnf.num_vars));
      }
      open.push_back(literal);
    }
  }
  if (declared < 0) throw ParseError(last_line, "missing problem line");
  if (!open.empty()) throw ParseError(last_line, "unterminated clause");
  if (static_cast<int>(cnf.clauses.size()) != declared) {
    throw ParseError(last_line, "expected " + std::to_string(declared) +
                                    " clauses, found " +
                                    std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

std::string SerializeDimacs(const CnfFormula& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
  for (const auto& clause : cnf.clauses) {
    for (int literal : clause) out << literal << " ";
    out << "0\n";
  }
  return out.str();
}

CbvcInput ParseCbvc(const std::string& text) {
  CbvcInput input;
  bool header = false;
  int last_line = 0;
  for (const auto& [number, line] : Lines(text)) {
    last_line = number;
    if (IsComment(line)) continue;
    const std::vector<std::string> tokens = Tokens(line);
    if (!header) {
      if (tokens.size() != 5 || tokens[0] != "p" || tokens[1] != "cbvc") {
        throw ParseError(number, "expected 'p cbvc <|V1|> <|V2|> <k>'");
      }
      input.graph.left = ToInt(tokens[2], number);
      input.graph.right = ToInt(tokens[3], number);
      input.k = ToInt(tokens[4], number);
      if (input.graph.left < 0 || input.graph.right < 0 || input.k < 0) {
        throw ParseError(number, "negative value in problem line");
      }
      header = true;
      continue;
    }
    if (tokens.size() != 2) throw ParseError(number, "expected '<u> <v>'");
    const int u = ToInt(tokens[0], number);
    const int v = ToInt(tokens[1], number);
    if (u < 1 || u > input.graph.left || v < 1 || v > input.graph.right) {
      throw ParseError(number, "edge endpoint out of range");
    }
    input.graph.edges.emplace_back(u - 1, v - 1);
  }
  if (!header) throw ParseError(last_line, "missing problem line");
  return input;
}

std::string SerializeCbvc(const CbvcInput& input) {
  std::ostringstream out;
  out << "p cbvc " << input.graph.left << " " << input.graph.right << " "
      << input.k << "\n";
  for (const auto& [u, v] : input.graph.edges) {
    out << u + 1 << " " << v + 1 << "\n";
  }
  return out.str();
}

std::vector<int> ParseMultiset(const std::string& text) {
  std::vector<int> values;
  for (const auto& [number, line] : Lines(text)) {
    for (const std::string& token : Tokens(line)) {
      values.push_back(ToInt(token, number));
    }
  }
  return values;
}

Instance GenFromCbvc(const BipartiteGraph& graph, int k) {
  if (k < 0 || graph.left < 0 || graph.right < 0) {
    throw PreconditionError("negative size or budget");
  }
  const int m = graph.left + graph.right;
  if (graph.edges.empty()) {
    return Blank(Mode::kEgalitarian, 1, m, 2, k, 0, 0);
  }
  const int n = static_cast<int>(graph.edges.size());
  Instance inst = Blank(Mode::kEgalitarian, n, m, 2, k, 0, 1);
  for (int j = 0; j < n; ++j) {
    const auto [u, v] = graph.edges[j];
    if (u < 0 || u >= graph.left || v < 0 || v >= graph.right) {
      throw PreconditionError("edge endpoint out of range");
    }
    inst.profile[0][j] = u + 1;
    inst.profile[1][j] = graph.left + v + 1;
  }
  return inst;
}

Instance GenGcse3Sat(const CnfFormula& cnf) {
  return GenThreeLevels(cnf, Mode::kEgalitarian);
}

Instance GenQcseX13Sat(const CnfFormula& cnf) {
  return GenThreeLevels(cnf, Mode::kEquitable);
}

CommitteeSequence ThreeSatWitness(const CnfFormula& cnf,
                                  const std::vector<bool>& assignment) {
  CheckAssignment(cnf, assignment);
  Committee committee;
  for (int i = 1; i <= cnf.num_vars; ++i) {
    committee.push_back(assignment[i - 1] ? 2 * i - 1 : 2 * i);
  }
  CommitteeSequence seq;
  seq.committees.assign(3, committee);
  return seq;
}

Instance GenGcseSat(const CnfFormula& cnf) {
  cnf.Validate();
  if (cnf.num_vars < 1 || cnf.clauses.empty()) {
    throw PreconditionError("formula needs a variable and a clause");
  }
  Instance inst =
      Blank(Mode::kEgalitarian, static_cast<int>(cnf.clauses.size()), 2,
            cnf.num_vars, 1, 0, 1);
  for (int j = 0; j < inst.n; ++j) {
    for (int literal : cnf.clauses[j]) {
      const int level = std::abs(literal) - 1;
      const int c = literal > 0 ? 1 : 2;
      int& slot = inst.profile[level][j];
      if (slot != kNoCandidate && slot != c) {
        throw PreconditionError(
            "clause " + std::to_string(j + 1) + " contains variable " +
            std::to_string(level + 1) + " in both polarities");
      }
      slot = c;
    }
  }
  return inst;
}

CommitteeSequence SatWitness(const CnfFormula& cnf,
                             const std::vector<bool>& assignment) {
  CheckAssignment(cnf, assignment);
  CommitteeSequence seq;
  for (bool value : assignment) seq.committees.push_back({value ? 1 : 2});
  return seq;
}

std::vector<bool> SatAssignment(const CommitteeSequence& witness) {
  std::vector<bool> assignment;
  for (const Committee& committee : witness.committees) {
    assignment.push_back(std::find(committee.begin(), committee.end(), 1) !=
                         committee.end());
  }
  return assignment;
}

Instance GenQcseMonotoneX13Sat(const CnfFormula& cnf) {
  cnf.Validate();
  const int big_n = cnf.num_vars;
  const int clauses = static_cast<int>(cnf.clauses.size());
  if (big_n < 1) throw PreconditionError("formula needs a variable");
  Instance inst =
      Blank(Mode::kEquitable, clauses + 2 * big_n, 1, 2 * big_n, 1, 0, 1);
  for (int j = 0; j < clauses; ++j) {
    for (int literal : cnf.clauses[j]) {
      if (literal < 0) {
        throw PreconditionError("negated literal in clause " +
                                std::to_string(j + 1));
      }
      int& slot = inst.profile[literal - 1][j];
      if (slot != kNoCandidate) {
        throw PreconditionError("clause " + std::to_string(j + 1) +
                                " repeats variable " + std::to_string(literal));
      }
      slot = 1;
    }
  }
  for (int i = 0; i < big_n; ++i) {
    for (int g = 0; g < 2; ++g) {
      const int agent = clauses + 2 * i + g;
      inst.profile[i][agent] = 1;
      inst.profile[big_n + i][agent] = 1;
    }
  }
  return inst;
}

Instance GenNmx(const CnfFormula& cnf, Mode mode) {
  cnf.Validate();
  const int big_n = cnf.num_vars;
  const int clauses = static_cast<int>(cnf.clauses.size());
  const bool egalitarian = mode == Mode::kEgalitarian;
  std::vector<int> positive(big_n + 1, 0);
  std::vector<int> negative(big_n + 1, 0);
  for (int j = 0; j < clauses; ++j) {
    const auto& clause = cnf.clauses[j];
    std::set<int> variables;
    for (int literal : clause) {
      variables.insert(std::abs(literal));
      ++(literal > 0 ? positive : negative)[std::abs(literal)];
      if (!egalitarian && literal < 0) {
        throw PreconditionError("negated literal in clause " +
                                std::to_string(j + 1));
      }
    }
    if (clause.size() != 3 || variables.size() != 3) {
      throw PreconditionError("clause " + std::to_string(j + 1) +
                              " needs three distinct variables");
    }
  }
  for (int i = 1; i <= big_n; ++i) {
    const bool ok =
        egalitarian ? positive[i] == 2 && negative[i] == 2 : positive[i] == 3;
    if (!ok) {
      throw PreconditionError("variable " + std::to_string(i) +
                              " has the wrong occurrence pattern");
    }
  }
  if (big_n < 2 || clauses < 1) {
    throw PreconditionError("formula too small for this construction");
  }
  // With M <= 6 the committee {1} alone meets x = M - 3, so the absent
  // candidate is no longer forced and the output can be yes on a no input.
  if (!egalitarian && clauses < 7) {
    throw PreconditionError("equitable construction needs at least 7 clauses");
  }
  const int absent = egalitarian ? 3 : 2;
  Instance inst = Blank(mode, clauses, egalitarian ? 3 : 2, big_n, 2,
                        clauses - (egalitarian ? 2 : 3), big_n - 2);
  for (int t = 0; t < big_n; ++t) {
    for (int j = 0; j < clauses; ++j) inst.profile[t][j] = absent;
  }
  for (int j = 0; j < clauses; ++j) {
    for (int literal : cnf.clauses[j]) {
      inst.profile[std::abs(literal) - 1][j] = literal > 0 ? 1 : 2;
    }
  }
  return inst;
}

Instance OrCompose(const std::vector<Instance>& inputs) {
  const int p = static_cast<int>(inputs.size());
  if (p < 1 || (p & (p - 1)) != 0) {
    throw PreconditionError("number of inputs must be a power of two");
  }
  int q = 0;
  while ((1 << q) < p) ++q;
  const int tau = inputs[0].tau;
  int n = 0;
  for (int j = 0; j < p; ++j) {
    const Instance& in = inputs[j];
    in.Validate();
    if (in.mode != Mode::kEgalitarian) {
      throw PreconditionError("input " + std::to_string(j + 1) +
                              " is not egalitarian");
    }
    if (in.m != 2 || in.k != 1 || in.x != 0 || in.y != 1 || in.tau != tau) {
      throw PreconditionError(
          "input " + std::to_string(j + 1) +
          " needs m = 2, k = 1, x = 0, y = 1 and tau = " + std::to_string(tau));
    }
    n += in.n;
  }
  Instance out = Blank(Mode::kEgalitarian, n, 2, tau + q, 1, 0, 1);
  int offset = 0;
  for (int j = 0; j < p; ++j) {
    const Instance& in = inputs[j];
    for (int a = 0; a < in.n; ++a) {
      for (int t = 0; t < tau; ++t)
        out.profile[t][offset + a] = in.profile[t][a];
      for (int i = 0; i < q; ++i) {
        const int bit = (j >> (q - 1 - i)) & 1;
        out.profile[tau + i][offset + a] = bit == 0 ? 1 : 2;
      }
    }
    offset += in.n;
  }
  return out;
}

Instance Gen3Part(const std::vector<int>& values, Mode mode) {
  const int size = static_cast<int>(values.size());
  if (size == 0 || size % 3 != 0) {
    throw PreconditionError("multiset size must be a positive multiple of 3");
  }
  if (std::any_of(values.begin(), values.end(), [](int v) { return v < 1; })) {
    throw PreconditionError("multiset entries must be positive");
  }
  const long long sum = std::accumulate(values.begin(), values.end(), 0LL);
  const int groups = size / 3;
  if (sum % groups != 0) {
    throw PreconditionError("sum is not divisible by the number of triples");
  }
  if (sum > std::numeric_limits<int>::max()) {
    throw PreconditionError("multiset sum too large");
  }
  Instance inst = Blank(mode, static_cast<int>(sum), size, groups, 3,
                        static_cast<int>(sum / groups), 1);
  int agent = 0;
  for (int i = 0; i < size; ++i) {
    for (int copy = 0; copy < values[i]; ++copy, ++agent) {
      for (int t = 0; t < groups; ++t) inst.profile[t][agent] = i + 1;
    }
  }
  return inst;
}

Instance RandomInstance(std::uint64_t seed, int n, int m, int tau, int k, int x,
                        int y, Mode mode, double empty_prob) {
  if (!(empty_prob >= 0.0 && empty_prob <= 1.0)) {
    throw PreconditionError("empty_prob must lie in [0, 1]");
  }
  if (n < 1 || tau < 1) throw PreconditionError("n and tau must be >= 1");
  Instance inst = Blank(mode, n, m, tau, k, x, y);
  Rng rng(seed);
  for (auto& row : inst.profile) {
    for (int& nomination : row) {
      const bool empty = rng.Bernoulli(empty_prob);
      nomination = (empty || m < 1) ? kNoCandidate : rng.Uniform(1, m);
    }
  }
  inst.Validate();
  return inst;
}

int Rng::Uniform(int lo, int hi) {
  if (lo > hi) throw PreconditionError("empty sampling range");
  const std::uint64_t range =
      static_cast<std::uint64_t>(static_cast<long long>(hi) - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw = Next();
  while (draw >= limit) draw = Next();
  return static_cast<int>(lo + static_cast<long long>(draw % range));
}

double Rng::Unit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

}  // namespace ecse
