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

#include "centering/parse_tree.h"

namespace centering {
namespace {

std::string StripFunctionTags(std::string_view label) {
  // Keep -NONE-, -LRB- and friends intact.
  if (!label.empty() && label.front() == '-') return std::string(label);
  size_t cut = label.find_first_of("-=");
  return std::string(label.substr(0, cut));
}

}  // namespace

std::optional<ParseTree> ParseTree::FromTokens(
    const std::vector<Token> &tokens) {
  if (tokens.empty()) return std::nullopt;
  ParseTree tree;
  std::vector<int> open;
  for (size_t i = 0; i < tokens.size(); ++i) {
    std::string_view bit = tokens[i].parse_bit;
    size_t star = bit.find('*');
    if (star == std::string_view::npos ||
        bit.find('*', star + 1) != std::string_view::npos) {
      return std::nullopt;
    }

    // Opening brackets before the star.
    std::string_view head = bit.substr(0, star);
    size_t p = 0;
    while (p < head.size()) {
      if (head[p] != '(') return std::nullopt;
      size_t q = p + 1;
      while (q < head.size() && head[q] != '(') ++q;
      std::string_view label = head.substr(p + 1, q - p - 1);
      if (label.empty()) return std::nullopt;
      Node node;
      node.label = StripFunctionTags(label);
      node.start = static_cast<int>(i);
      node.parent = open.empty() ? -1 : open.back();
      int id = static_cast<int>(tree.nodes_.size());
      if (node.parent >= 0) tree.nodes_[node.parent].children.push_back(id);
      tree.nodes_.push_back(std::move(node));
      open.push_back(id);
      p = q;
    }

    // The token itself.
    Node leaf;
    leaf.label = tokens[i].pos;
    leaf.start = leaf.end = static_cast<int>(i);
    leaf.preterminal = true;
    leaf.parent = open.empty() ? -1 : open.back();
    int leaf_id = static_cast<int>(tree.nodes_.size());
    if (leaf.parent >= 0) tree.nodes_[leaf.parent].children.push_back(leaf_id);
    tree.nodes_.push_back(std::move(leaf));

    // Closing brackets after the star.
    for (char c : bit.substr(star + 1)) {
      if (c != ')' || open.empty()) return std::nullopt;
      tree.nodes_[open.back()].end = static_cast<int>(i);
      open.pop_back();
    }
  }
  if (!open.empty()) return std::nullopt;
  return tree;
}

int ParseTree::SmallestCovering(int start, int end,
                                std::string_view label) const {
  int best = -1;
  for (size_t id = 0; id < nodes_.size(); ++id) {
    const Node &n = nodes_[id];
    if (n.preterminal || n.label != label) continue;
    if (n.start > start || n.end < end) continue;
    if (best < 0 || n.end - n.start < nodes_[best].end - nodes_[best].start) {
      best = static_cast<int>(id);
    } else if (n.end - n.start == nodes_[best].end - nodes_[best].start) {
      // Unary chain: the deeper node was opened later.
      best = static_cast<int>(id);
    }
  }
  return best;
}

std::string ParseTree::ToString(const std::vector<Token> &tokens) const {
  std::string out;
  auto render = [&](auto &&self, int id) -> void {
    const Node &n = nodes_[id];
    out += "(" + n.label + " ";
    if (n.preterminal) {
      out += tokens[n.start].surface;
    } else {
      for (size_t k = 0; k < n.children.size(); ++k) {
        if (k > 0) out += " ";
        self(self, n.children[k]);
      }
    }
    out += ")";
  };
  bool first = true;
  for (size_t id = 0; id < nodes_.size(); ++id) {
    if (nodes_[id].parent != -1) continue;
    if (!first) out += " ";
    first = false;
    render(render, static_cast<int>(id));
  }
  return out;
}

}  // namespace centering
