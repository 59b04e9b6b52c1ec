// Copyright 2026 The Centering Kit Authors.
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

#ifndef CENTERING_PARSE_TREE_H_
#define CENTERING_PARSE_TREE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "centering/corpus.h"

namespace centering {

// Constituency tree rebuilt from the CoNLL parse-bit column. Every token gets
// a preterminal node labeled with its POS tag.
class ParseTree {
 public:
  struct Node {
    std::string label;  // function tags stripped ("NP-SBJ" -> "NP")
    int start = 0;
    int end = 0;
    int parent = -1;
    std::vector<int> children;
    bool preterminal = false;
  };

  // nullopt if any bit is malformed or the brackets do not balance.
  static std::optional<ParseTree> FromTokens(const std::vector<Token> &tokens);

  const std::vector<Node> &nodes() const { return nodes_; }
  const Node &node(int id) const { return nodes_[id]; }

  // Smallest node labeled |label| whose span contains [start, end]; -1 if none.
  int SmallestCovering(int start, int end, std::string_view label) const;

  // Bracketed rendering, e.g. "(TOP (S (NP (NNP John)) ...))". Debug aid.
  std::string ToString(const std::vector<Token> &tokens) const;

 private:
  std::vector<Node> nodes_;
};

}  // namespace centering

#endif  // CENTERING_PARSE_TREE_H_
