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

#include "ecse/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace ecse {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Splits into non-empty lines of tokens with comments removed.
std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::istringstream in{std::string(raw)};
    std::string token;
    while (in >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

int ToInt(const std::string& token, int line) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

std::vector<int> ToInts(const Line& line, size_t from) {
  std::vector<int> values;
  for (size_t i = from; i < line.tokens.size(); ++i) {
    values.push_back(ToInt(line.tokens[i], line.number));
  }
  return values;
}

void ExpectCount(const Line& line, size_t got, int want, const char* what) {
  if (static_cast<int>(got) != want) {
    throw ParseError(line.number, std::string("dimension mismatch: ") + what +
                                      " has " + std::to_string(got) +
                                      " entries, expected " +
                                      std::to_string(want));
  }
}

void AppendInts(std::string& out, const std::vector<int>& values) {
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
}

}  // namespace

Document ParseDocument(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.empty() ||
      lines[0].tokens != std::vector<std::string>{"ecse", "v1"}) {
    throw ParseError(lines.empty() ? 1 : lines[0].number,
                     "expected header 'ecse v1'");
  }
  std::map<std::string, int> scalars;
  std::map<std::string, Line> vectors;
  std::optional<Mode> mode;
  size_t i = 1;
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& key = line.tokens[0];
    if (key == "levels") break;
    if (key == "mode") {
      if (mode) throw ParseError(line.number, "duplicate key 'mode'");
      if (line.tokens.size() != 2) {
        throw ParseError(line.number, "expected 'mode gcse|qcse'");
      }
      if (line.tokens[1] == "gcse") {
        mode = Mode::kEgalitarian;
      } else if (line.tokens[1] == "qcse") {
        mode = Mode::kEquitable;
      } else {
        throw ParseError(line.number, "unknown mode '" + line.tokens[1] + "'");
      }
    } else if (key == "n" || key == "m" || key == "tau" || key == "k" ||
               key == "x" || key == "y") {
      if (scalars.count(key)) {
        throw ParseError(line.number, "duplicate key '" + key + "'");
      }
      if (line.tokens.size() != 2) {
        throw ParseError(line.number, "expected '" + key + " <int>'");
      }
      scalars[key] = ToInt(line.tokens[1], line.number);
    } else if (key == "kvec" || key == "xvec" || key == "yvec") {
      if (vectors.count(key)) {
        throw ParseError(line.number, "duplicate key '" + key + "'");
      }
      vectors.emplace(key, line);
    } else {
      throw ParseError(line.number, "unknown key '" + key + "'");
    }
  }
  if (i == lines.size()) {
    throw ParseError(lines.back().number, "missing 'levels' section");
  }
  const int levels_line = lines[i].number;
  if (lines[i].tokens.size() != 1) {
    throw ParseError(levels_line, "'levels' takes no arguments");
  }
  if (!mode) throw ParseError(levels_line, "missing key 'mode'");
  for (const char* key : {"n", "m", "tau"}) {
    if (!scalars.count(key)) {
      throw ParseError(levels_line, std::string("missing key '") + key + "'");
    }
  }
  const bool is_pe = !vectors.empty();
  const std::pair<const char*, const char*> defaults[] = {
      {"k", "kvec"}, {"x", "xvec"}, {"y", "yvec"}};
  for (auto [key, vec] : defaults) {
    if (!scalars.count(key)) {
      if (is_pe && vectors.count(vec)) {
        scalars[key] = 0;
      } else {
        throw ParseError(levels_line, std::string("missing key '") + key + "'");
      }
    }
  }

  Document doc;
  Instance& inst = doc.base;
  inst.mode = *mode;
  inst.n = scalars["n"];
  inst.m = scalars["m"];
  inst.tau = scalars["tau"];
  inst.k = scalars["k"];
  inst.x = scalars["x"];
  inst.y = scalars["y"];
  if (inst.n < 1 || inst.m < 0 || inst.tau < 1) {
    throw ParseError(levels_line, "need n >= 1, m >= 0, tau >= 1");
  }
  if (!is_pe && (inst.k < 0 || inst.x < 0 || inst.y < 0)) {
    throw ParseError(levels_line, "k, x and y must be non-negative");
  }

  ++i;
  for (int t = 0; t < inst.tau; ++t, ++i) {
    if (i >= lines.size() || lines[i].tokens[0] == "end") {
      throw ParseError(i < lines.size() ? lines[i].number : lines.back().number,
                       "dimension mismatch: expected " +
                           std::to_string(inst.tau) + " level rows");
    }
    const Line& row = lines[i];
    ExpectCount(row, row.tokens.size(), inst.n, "level row");
    std::vector<int> values = ToInts(row, 0);
    for (int c : values) {
      if (c < 0 || c > inst.m) {
        throw ParseError(row.number, "nomination " + std::to_string(c) +
                                         " out of range 0.." +
                                         std::to_string(inst.m));
      }
    }
    inst.profile.push_back(std::move(values));
  }
  if (i >= lines.size() || lines[i].tokens != std::vector<std::string>{"end"}) {
    throw ParseError(
        i < lines.size() ? lines[i].number : lines.back().number,
        "expected 'end' after " + std::to_string(inst.tau) + " level rows");
  }
  if (i + 1 != lines.size()) {
    throw ParseError(lines[i + 1].number, "trailing content after 'end'");
  }

  if (is_pe) {
    PeInstance pe;
    pe.mode = inst.mode;
    pe.n = inst.n;
    pe.m = inst.m;
    pe.tau = inst.tau;
    pe.profile = inst.profile;
    auto read_vec = [&](const char* key, int want, int fallback) {
      auto it = vectors.find(key);
      if (it == vectors.end()) return std::vector<int>(want, fallback);
      ExpectCount(it->second, it->second.tokens.size() - 1, want, key);
      return ToInts(it->second, 1);
    };
    pe.kvec = read_vec("kvec", inst.tau, inst.k);
    pe.xvec = read_vec("xvec", inst.tau, inst.x);
    pe.yvec = read_vec("yvec", inst.n, inst.y);
    doc.pe = std::move(pe);
  }
  return doc;
}

Instance ParseInstance(std::string_view text) {
  Document doc = ParseDocument(text);
  if (doc.pe) {
    throw ParseError(1,
                     "document uses per-level/per-agent vectors; "
                     "not a plain instance");
  }
  return std::move(doc.base);
}

PeInstance ParsePeInstance(std::string_view text) {
  Document doc = ParseDocument(text);
  if (doc.pe) return std::move(*doc.pe);
  return Lift(doc.base);
}

namespace {

void AppendHeader(std::string& out, Mode mode, int n, int m, int tau, int k,
                  int x, int y) {
  out += "ecse v1\n";
  out += std::string("mode ") + ModeName(mode) + "\n";
  out += "n " + std::to_string(n) + "\n";
  out += "m " + std::to_string(m) + "\n";
  out += "tau " + std::to_string(tau) + "\n";
  out += "k " + std::to_string(k) + "\n";
  out += "x " + std::to_string(x) + "\n";
  out += "y " + std::to_string(y) + "\n";
}

void AppendLevels(std::string& out, const Profile& profile) {
  out += "levels\n";
  for (const auto& row : profile) {
    AppendInts(out, row);
    out += '\n';
  }
  out += "end\n";
}

}  // namespace

std::string SerializeInstance(const Instance& inst) {
  std::string out;
  AppendHeader(out, inst.mode, inst.n, inst.m, inst.tau, inst.k, inst.x,
               inst.y);
  AppendLevels(out, inst.profile);
  return out;
}

std::string SerializePeInstance(const PeInstance& pe) {
  // Scalar defaults are the first vector entries; the vectors override them.
  std::string out;
  const int k = pe.kvec.empty() ? 0 : pe.kvec.front();
  const int x = pe.xvec.empty() ? 0 : pe.xvec.front();
  const int y = pe.yvec.empty() ? 0 : pe.yvec.front();
  AppendHeader(out, pe.mode, pe.n, pe.m, pe.tau, k, x, y);
  out += "kvec ";
  AppendInts(out, pe.kvec);
  out += "\nxvec ";
  AppendInts(out, pe.xvec);
  out += "\nyvec ";
  AppendInts(out, pe.yvec);
  out += '\n';
  AppendLevels(out, pe.profile);
  return out;
}

CommitteeSequence ParseSolution(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.empty() ||
      lines[0].tokens != std::vector<std::string>{"ecse-sol", "v1"}) {
    throw ParseError(lines.empty() ? 1 : lines[0].number,
                     "expected header 'ecse-sol v1'");
  }
  if (lines.size() < 2 || lines[1].tokens.size() != 1) {
    throw ParseError(lines.size() < 2 ? lines[0].number : lines[1].number,
                     "expected level count");
  }
  const int tau = ToInt(lines[1].tokens[0], lines[1].number);
  if (tau < 0) throw ParseError(lines[1].number, "negative level count");
  if (static_cast<int>(lines.size()) - 2 != tau) {
    throw ParseError(lines.back().number, "dimension mismatch: expected " +
                                              std::to_string(tau) +
                                              " committee lines, got " +
                                              std::to_string(lines.size() - 2));
  }
  CommitteeSequence seq;
  for (int t = 0; t < tau; ++t) {
    const Line& line = lines[t + 2];
    Committee committee;
    if (line.tokens != std::vector<std::string>{"-"}) {
      committee = ToInts(line, 0);
      for (size_t j = 0; j < committee.size(); ++j) {
        if (committee[j] < 1) {
          throw ParseError(line.number, "candidate ids must be >= 1");
        }
        if (j > 0 && committee[j] <= committee[j - 1]) {
          throw ParseError(line.number,
                           "candidate ids must be strictly increasing");
        }
      }
    }
    seq.committees.push_back(std::move(committee));
  }
  return seq;
}

std::string SerializeSolution(const CommitteeSequence& seq) {
  std::string out = "ecse-sol v1\n" + std::to_string(seq.tau()) + "\n";
  for (const Committee& committee : seq.committees) {
    if (committee.empty()) {
      out += "-";
    } else {
      AppendInts(out, committee);
    }
    out += '\n';
  }
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << contents;
}

}  // namespace ecse
