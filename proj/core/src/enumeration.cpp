#include "catmoves/enumeration.hpp"

#include <algorithm>
#include <cstdlib>

namespace catmoves {

namespace {

constexpr int kMaxExactCatalan = 36;  // C_36 is the last Catalan number below 2^64

// f[r][s] = number of ways to finish a ballot word when r symbols remain and
// s openers are unmatched. Row 2n, column 0 is the n-th Catalan number.
struct BallotTable {
  int n = -1;
  std::vector<std::vector<std::uint64_t>> f;

  void build(int edges) {
    n = edges;
    const int len = 2 * n;
    f.assign(len + 1, std::vector<std::uint64_t>(len + 2, 0));
    f[0][0] = 1;
    for (int r = 1; r <= len; ++r) {
      for (int s = 0; s <= r; ++s) {
        std::uint64_t ways = f[r - 1][s + 1];
        if (s > 0) ways += f[r - 1][s - 1];
        f[r][s] = ways;
      }
    }
  }
};

const BallotTable& ballot_table(int n) {
  thread_local BallotTable table;
  if (table.n != n) table.build(n);
  return table;
}

void check_catalan_width(int n) {
  if (n < 1) {
    throw Error(ErrorCode::LabelOutOfRange, "edge count must be positive, got " + std::to_string(n));
  }
  if (n > kMaxExactCatalan) {
    throw Error(ErrorCode::SizeExceedsCap,
                "Catalan(" + std::to_string(n) + ") does not fit in 64 bits");
  }
}

PlaneTree tree_from_word(int n, const std::vector<bool>& is_opener) {
  std::vector<Pair> pairs;
  pairs.reserve(n);
  std::vector<int> stack;
  for (int label = 1; label <= 2 * n; ++label) {
    if (is_opener[label - 1]) {
      stack.push_back(label);
    } else {
      pairs.emplace_back(stack.back(), label);
      stack.pop_back();
    }
  }
  return make_tree(n, std::move(pairs));
}

}  // namespace

Caps Caps::from_env() {
  Caps caps;
  if (const char* raw = std::getenv("CATMOVES_MAX_N")) {
    const int value = std::atoi(raw);
    if (value > 0) {
      caps.max_tree_n = value;
      caps.max_syt_n = value;
    }
  }
  return caps;
}

std::uint64_t count_trees(int n) {
  check_catalan_width(n);
  return ballot_table(n).f[2 * n][0];
}

TreeIndex rank_tree(const PlaneTree& tree) {
  const int n = tree.n;
  check_catalan_width(n);
  const BallotTable& table = ballot_table(n);

  std::vector<bool> is_opener(2 * n, false);
  for (const Pair& p : tree.pairs) is_opener[p.first - 1] = true;

  std::uint64_t rank = 0;
  int surplus = 0;
  for (int pos = 0; pos < 2 * n; ++pos) {
    const int remaining = 2 * n - pos - 1;
    if (is_opener[pos]) {
      ++surplus;
    } else {
      rank += table.f[remaining][surplus + 1];  // words with '(' here come first
      --surplus;
    }
  }
  return TreeIndex{n, rank};
}

PlaneTree unrank_tree(const TreeIndex& index) {
  const int n = index.n;
  check_catalan_width(n);
  const BallotTable& table = ballot_table(n);
  if (index.rank >= table.f[2 * n][0]) {
    throw Error(ErrorCode::RankOutOfRange, "rank " + std::to_string(index.rank) +
                                               " >= Catalan(" + std::to_string(n) + ")");
  }

  std::vector<bool> is_opener(2 * n, false);
  std::uint64_t rank = index.rank;
  int surplus = 0;
  for (int pos = 0; pos < 2 * n; ++pos) {
    const int remaining = 2 * n - pos - 1;
    const std::uint64_t with_open = table.f[remaining][surplus + 1];
    if (rank < with_open) {
      is_opener[pos] = true;
      ++surplus;
    } else {
      rank -= with_open;
      --surplus;
    }
  }
  return tree_from_word(n, is_opener);
}

TreeStream::TreeStream(int n) : n_(n), count_(count_trees(n)) {}

std::optional<PlaneTree> TreeStream::next() {
  if (next_rank_ >= count_) return std::nullopt;
  return unrank_tree(TreeIndex{n_, next_rank_++});
}

std::vector<PlaneTree> all_trees(int n) {
  TreeStream stream(n);
  std::vector<PlaneTree> trees;
  trees.reserve(stream.size());
  while (auto tree = stream.next()) trees.push_back(std::move(*tree));
  return trees;
}

std::uint64_t hook_length_count(const Partition& shape) {
  const int total = shape.total();
  if (total > 33) {
    throw Error(ErrorCode::ShapeTooLarge, "hook length formula limited to N <= 33");
  }
  std::vector<int> conjugate(shape.parts.empty() ? 0 : shape.parts[0], 0);
  for (int part : shape.parts) {
    for (int c = 0; c < part; ++c) ++conjugate[c];
  }
  __int128 numerator = 1;
  for (int k = 2; k <= total; ++k) numerator *= k;
  __int128 denominator = 1;
  for (size_t r = 0; r < shape.parts.size(); ++r) {
    for (int c = 0; c < shape.parts[r]; ++c) {
      const int arm = shape.parts[r] - c - 1;
      const int leg = conjugate[c] - static_cast<int>(r) - 1;
      denominator *= arm + leg + 1;
    }
  }
  return static_cast<std::uint64_t>(numerator / denominator);
}

namespace {

void validate_shape(const Partition& shape) {
  if (shape.parts.empty()) throw Error(ErrorCode::BadShape, "shape has no parts");
  for (size_t r = 0; r < shape.parts.size(); ++r) {
    if (shape.parts[r] < 1) throw Error(ErrorCode::BadShape, "shape has a non-positive part");
    if (r > 0 && shape.parts[r] > shape.parts[r - 1]) {
      throw Error(ErrorCode::BadShape, "shape parts are not weakly decreasing");
    }
  }
}

void generate_syt(const Partition& shape, int value, int total,
                  std::vector<int>& filled, std::vector<std::vector<int>>& rows,
                  std::vector<std::vector<std::vector<int>>>& out) {
  if (value > total) {
    out.push_back(rows);
    return;
  }
  for (size_t r = 0; r < shape.parts.size(); ++r) {
    if (filled[r] >= shape.parts[r]) continue;
    if (r > 0 && filled[r - 1] <= filled[r]) continue;  // column order would break
    rows[r].push_back(value);
    ++filled[r];
    generate_syt(shape, value + 1, total, filled, rows, out);
    --filled[r];
    rows[r].pop_back();
  }
}

}  // namespace

SytStream::SytStream(Partition shape, const Caps& caps) : shape_(std::move(shape)) {
  validate_shape(shape_);
  const int total = shape_.total();
  if (total > caps.max_syt_n) {
    throw Error(ErrorCode::ShapeTooLarge, "shape size " + std::to_string(total) +
                                              " exceeds cap " + std::to_string(caps.max_syt_n));
  }
  std::vector<int> filled(shape_.parts.size(), 0);
  std::vector<std::vector<int>> rows(shape_.parts.size());
  generate_syt(shape_, 1, total, filled, rows, tableaux_);
  std::sort(tableaux_.begin(), tableaux_.end(), [](const auto& a, const auto& b) {
    // lexicographic by row-reading word
    for (size_t r = 0; r < a.size(); ++r) {
      if (a[r] != b[r]) return a[r] < b[r];
    }
    return false;
  });
}

std::optional<YoungTableau> SytStream::next() {
  if (cursor_ >= tableaux_.size()) return std::nullopt;
  return YoungTableau{shape_, tableaux_[cursor_++]};
}

std::vector<YoungTableau> all_syt(const Partition& shape, const Caps& caps) {
  SytStream stream(shape, caps);
  std::vector<YoungTableau> tableaux;
  tableaux.reserve(stream.size());
  while (auto tableau = stream.next()) tableaux.push_back(std::move(*tableau));
  return tableaux;
}

namespace {

void build_partitions(int remaining, int max_part, Partition& current,
                      std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.parts.push_back(part);
    build_partitions(remaining - part, part, current, out);
    current.parts.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int total) {
  std::vector<Partition> out;
  if (total < 1) return out;
  Partition current;
  build_partitions(total, total, current, out);
  return out;
}

}  // namespace catmoves
