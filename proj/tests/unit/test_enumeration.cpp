#include <functional>
#include <set>

#include "catmoves/enumeration.hpp"
#include "doctest.h"

using namespace catmoves;

namespace {

ErrorCode code_of(const std::function<void()>& call) {
  try {
    call();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("count_trees matches the convolution recurrence") {
  std::vector<std::uint64_t> catalan{1};  // C_0
  for (int n = 1; n <= 14; ++n) {
    std::uint64_t next = 0;
    for (int k = 0; k < n; ++k) next += catalan[k] * catalan[n - 1 - k];
    catalan.push_back(next);
    CHECK(count_trees(n) == next);
  }
  CHECK(count_trees(1) == 1);
  CHECK(count_trees(3) == 5);
  CHECK(count_trees(10) == 16796);
  CHECK(count_trees(30) == 3814986502092304ull);
  CHECK(code_of([] { count_trees(37); }) == ErrorCode::SizeExceedsCap);
}

TEST_CASE("enumeration order starts with the fully nested word") {
  TreeStream stream(2);
  CHECK(*stream.next() == make_tree(2, {{1, 4}, {2, 3}}));  // "(())"
  CHECK(*stream.next() == make_tree(2, {{1, 2}, {3, 4}}));  // "()()"
  CHECK_FALSE(stream.next().has_value());

  TreeStream single(1);
  CHECK(*single.next() == make_tree(1, {{1, 2}}));
}

TEST_CASE("streams are distinct, complete and restartable") {
  for (int n : {5, 6}) {
    TreeStream stream(n);
    std::set<std::string> seen;
    while (auto tree = stream.next()) seen.insert(to_text(*tree));
    CHECK(seen.size() == count_trees(n));

    stream.reset();
    TreeStream again(n);
    while (auto tree = stream.next()) CHECK(*tree == *again.next());
  }
}

TEST_CASE("rank and unrank invert each other in enumeration order") {
  CHECK(rank_tree(make_tree(2, {{1, 4}, {2, 3}})).rank == 0);
  CHECK(rank_tree(make_tree(2, {{1, 2}, {3, 4}})).rank == 1);

  for (int n = 1; n <= 8; ++n) {
    TreeStream stream(n);
    std::uint64_t expected = 0;
    while (auto tree = stream.next()) {
      const TreeIndex index = rank_tree(*tree);
      CHECK(index.n == n);
      CHECK(index.rank == expected);
      CHECK(unrank_tree(index) == *tree);
      ++expected;
    }
  }
  CHECK(code_of([] { unrank_tree(TreeIndex{3, 5}); }) == ErrorCode::RankOutOfRange);
}

TEST_CASE("the n=12 stream is complete and duplicate free by rank order") {
  // rank equals the stream position, so the stream hits every tree exactly once
  TreeStream stream(12);
  std::uint64_t at = 0;
  std::uint64_t mismatches = 0;
  while (auto tree = stream.next()) {
    mismatches += rank_tree(*tree).rank != at ? 1 : 0;
    ++at;
  }
  CHECK(mismatches == 0);
  CHECK(at == count_trees(12));
}

TEST_CASE("rank is injective over the n=6 enumeration") {
  std::set<std::uint64_t> ranks;
  TreeStream stream(6);
  while (auto tree = stream.next()) ranks.insert(rank_tree(*tree).rank);
  CHECK(ranks.size() == count_trees(6));
}

TEST_CASE("hook length counts for the small shapes") {
  CHECK(hook_length_count(Partition{{2, 2}}) == 2);
  CHECK(hook_length_count(Partition{{3, 3}}) == 5);  // 6!/(4*3*2*3*2*1)
  CHECK(hook_length_count(Partition{{2, 1}}) == 2);
  CHECK(hook_length_count(Partition{{1}}) == 1);
  CHECK(hook_length_count(Partition{{10, 10}}) == 16796);
}

TEST_CASE("SYT enumeration matches the hook length formula") {
  CHECK(all_syt(Partition{{2, 2}}).size() == 2);
  CHECK(all_syt(Partition{{3, 3}}).size() == 5);
  CHECK(all_syt(Partition{{2, 1}}).size() == 2);

  for (int total = 1; total <= 8; ++total) {
    for (const Partition& shape : partitions_of(total)) {
      const std::vector<YoungTableau> tableaux = all_syt(shape);
      CHECK(tableaux.size() == hook_length_count(shape));
      std::set<std::string> texts;
      for (const YoungTableau& t : tableaux) texts.insert(to_text(t));
      CHECK(texts.size() == tableaux.size());
    }
  }
}

TEST_CASE("SYT stream order is lexicographic by row-reading word") {
  SytStream stream(Partition{{2, 2}});
  CHECK(to_text(*stream.next()) == "1,2/3,4");
  CHECK(to_text(*stream.next()) == "1,3/2,4");
  CHECK_FALSE(stream.next().has_value());
}

TEST_CASE("caps bound the SYT generator") {
  Caps caps;
  caps.max_syt_n = 6;
  CHECK(code_of([&] { SytStream stream(Partition{{4, 3}}, caps); }) == ErrorCode::ShapeTooLarge);
  CHECK(all_syt(Partition{{3, 3}}, caps).size() == 5);
  CHECK(code_of([] { SytStream stream(Partition{{1, 2}}); }) == ErrorCode::BadShape);
}

TEST_CASE("partitions_of covers the partition numbers") {
  CHECK(partitions_of(1).size() == 1);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(8).size() == 22);
}
