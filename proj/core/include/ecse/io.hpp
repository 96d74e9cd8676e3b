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

#ifndef ECSE_IO_HPP_
#define ECSE_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "ecse/instance.hpp"

namespace ecse {

// Text formats. Instance documents:
//
//   ecse v1
//   mode gcse|qcse
//   n <int>  m <int>  tau <int>  k <int>  x <int>  y <int>   (one per line)
//   [kvec <tau ints>] [xvec <tau ints>] [yvec <n ints>]
//   levels
//   <tau rows of n ints, 0 = no nomination>
//   end
//
// '#' starts a comment. Any PE vector switches the document to PE
// semantics; missing vectors are filled from k/x/y.
struct Document {
  Instance base;                 // k/x/y as written (defaults for PE)
  std::optional<PeInstance> pe;  // set iff a PE vector was present
};

Document ParseDocument(std::string_view text);

// Rejects PE documents.
Instance ParseInstance(std::string_view text);

// Accepts both kinds; plain documents are lifted.
PeInstance ParsePeInstance(std::string_view text);

std::string SerializeInstance(const Instance& inst);
std::string SerializePeInstance(const PeInstance& pe);

// Solution documents: `ecse-sol v1`, the level count, then one line per
// level holding either `-` or strictly increasing candidate ids.
CommitteeSequence ParseSolution(std::string_view text);
std::string SerializeSolution(const CommitteeSequence& seq);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace ecse

#endif  // ECSE_IO_HPP_
