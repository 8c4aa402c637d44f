#include "catmoves/plane_tree.hpp"

#include <algorithm>
#include <sstream>

namespace catmoves {

namespace {

std::string pair_text(const Pair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace

PlaneTree make_tree(int n, std::vector<Pair> pairs) {
  if (n < 1) {
    throw Error(ErrorCode::LabelOutOfRange, "edge count must be positive, got " + std::to_string(n));
  }
  if (static_cast<int>(pairs.size()) != n) {
    throw Error(ErrorCode::LabelOutOfRange,
                "expected " + std::to_string(n) + " pairs, got " + std::to_string(pairs.size()));
  }
  const int max_label = 2 * n;
  for (const Pair& p : pairs) {
    if (p.first >= p.second) {
      throw Error(ErrorCode::ReversedPair, "pair " + pair_text(p) + " has opener >= closer");
    }
    if (p.first < 1 || p.second > max_label) {
      throw Error(ErrorCode::LabelOutOfRange,
                  "pair " + pair_text(p) + " outside 1.." + std::to_string(max_label));
    }
  }
  std::sort(pairs.begin(), pairs.end());

  // pair index owning each label, or -1
  std::vector<int> owner(max_label + 1, -1);
  for (int e = 0; e < n; ++e) {
    for (int label : {pairs[e].first, pairs[e].second}) {
      if (owner[label] != -1) {
        throw Error(ErrorCode::DuplicateLabel, "label " + std::to_string(label) + " appears twice");
      }
      owner[label] = e;
    }
  }

  // Stack scan: a closer must match the most recently opened pair, otherwise
  // the top of the stack crosses it.
  std::vector<int> stack;
  for (int label = 1; label <= max_label; ++label) {
    const int e = owner[label];
    if (pairs[e].first == label) {
      stack.push_back(e);
    } else {
      const int top = stack.back();
      if (top != e) {
        throw Error(ErrorCode::CrossingPair,
                    "pairs " + pair_text(pairs[e]) + " and " + pair_text(pairs[top]) + " cross");
      }
      stack.pop_back();
    }
  }

  PlaneTree tree;
  tree.n = n;
  tree.pairs = std::move(pairs);
  return tree;
}

RootedTreeView tree_view(const PlaneTree& tree) {
  RootedTreeView view;
  view.parent.assign(tree.n, RootedTreeView::kRoot);
  view.children.assign(tree.n + 1, {});
  view.depth.assign(tree.n, 0);

  std::vector<int> owner(2 * tree.n + 1, -1);
  for (int e = 0; e < tree.n; ++e) {
    owner[tree.pairs[e].first] = e;
    owner[tree.pairs[e].second] = e;
  }

  std::vector<int> stack;
  for (int label = 1; label <= 2 * tree.n; ++label) {
    const int e = owner[label];
    if (tree.pairs[e].first == label) {
      const int parent = stack.empty() ? RootedTreeView::kRoot : stack.back();
      view.parent[e] = parent;
      view.children[parent + 1].push_back(e);
      view.depth[e] = static_cast<int>(stack.size()) + 1;
      stack.push_back(e);
    } else {
      stack.pop_back();
    }
  }
  return view;
}

std::int64_t total_distance(const PlaneTree& tree) {
  const RootedTreeView view = tree_view(tree);
  std::int64_t sum = 0;
  for (int e = 0; e < tree.n; ++e) sum += view.depth[e];
  return sum;
}

std::int64_t total_descendants(const PlaneTree& tree) {
  // The vertex below edge (i, j) has (j - i + 1)/2 - 1 proper descendants,
  // one per pair strictly inside the interval [i, j]. The root contributes n.
  std::int64_t sum = tree.n;
  for (const Pair& p : tree.pairs) {
    sum += (p.second - p.first + 1) / 2 - 1;
  }
  return sum;
}

PlaneTree mirror(const PlaneTree& tree) {
  const int m = 2 * tree.n + 1;
  std::vector<Pair> flipped;
  flipped.reserve(tree.pairs.size());
  for (const Pair& p : tree.pairs) {
    flipped.emplace_back(m - p.second, m - p.first);
  }
  return make_tree(tree.n, std::move(flipped));
}

bool is_symmetric(const PlaneTree& tree) { return mirror(tree) == tree; }

PlaneTree star_tree(int n) {
  std::vector<Pair> pairs;
  pairs.reserve(n);
  for (int k = 1; k <= n; ++k) pairs.emplace_back(2 * k - 1, 2 * k);
  return make_tree(n, std::move(pairs));
}

PlaneTree path_tree(int n) {
  std::vector<Pair> pairs;
  pairs.reserve(n);
  for (int k = 1; k <= n; ++k) pairs.emplace_back(k, 2 * n - k + 1);
  return make_tree(n, std::move(pairs));
}

std::string to_text(const PlaneTree& tree) {
  std::string out = std::to_string(tree.n) + ";";
  for (const Pair& p : tree.pairs) out += pair_text(p);
  return out;
}

PlaneTree parse_tree(const std::string& text) {
  const auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError, why + " in \"" + text + "\"");
  };

  const auto semi = text.find(';');
  if (semi == std::string::npos) fail("missing ';'");
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(text.substr(0, semi), &used);
    if (used != semi) fail("bad edge count");
  } catch (const std::exception&) {
    fail("bad edge count");
  }

  std::vector<Pair> pairs;
  size_t pos = semi + 1;
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    const auto comma = text.find(',', pos);
    const auto close = text.find(')', pos);
    if (comma == std::string::npos || close == std::string::npos || comma > close) {
      fail("malformed pair");
    }
    try {
      const int a = std::stoi(text.substr(pos + 1, comma - pos - 1));
      const int b = std::stoi(text.substr(comma + 1, close - comma - 1));
      pairs.emplace_back(a, b);
    } catch (const std::exception&) {
      fail("malformed pair");
    }
    pos = close + 1;
  }
  for (size_t k = 1; k < pairs.size(); ++k) {
    if (pairs[k - 1].first >= pairs[k].first) fail("pairs not in canonical opener order");
  }
  return make_tree(n, std::move(pairs));
}

}  // namespace catmoves
