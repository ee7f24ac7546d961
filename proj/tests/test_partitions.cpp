#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sylow/partitions.hpp"

using namespace sylow;

TEST_SUITE("partitions") {
  TEST_CASE("counts agree with the generating-function recurrence") {
    for (int n = 0; n <= 60; ++n) CHECK(partition_count(n) == oracle::partition_count(n));
    for (int n = 0; n <= 20; ++n) CHECK(all_partitions(n).size() == oracle::partition_count(n));
  }

  TEST_CASE("enumeration matches the reference list in canonical order") {
    for (int n = 1; n <= 12; ++n) {
      const auto mine = all_partitions(n);
      const auto ref = oracle::partitions(n);
      REQUIRE(mine.size() == ref.size());
      for (std::size_t i = 0; i < ref.size(); ++i) CHECK(mine[i].parts() == ref[i]);
      CHECK(mine.front() == Partition{n});
    }
  }

  TEST_CASE("conjugation is an involution preserving size") {
    for (int n = 1; n <= 14; ++n)
      for (const auto& lambda : all_partitions(n)) {
        const auto c = lambda.conjugate();
        CHECK(c.size() == n);
        CHECK(c.conjugate() == lambda);
        CHECK(c.first() == lambda.length());
      }
    CHECK(Partition{4, 2, 1}.conjugate() == Partition{3, 2, 1, 1});
  }

  TEST_CASE("box sets") {
    for (int n = 1; n <= 16; ++n)
      for (int t = 1; t <= n; ++t) {
        const auto b = box_set(n, t);
        std::uint64_t expected = 0;
        for (const auto& lambda : all_partitions(n)) expected += lambda.first() <= t && lambda.length() <= t;
        CHECK(b.size() == expected);
        CHECK(box_count(n, t) == expected);
        CHECK(b.conjugates() == b);
      }
    CHECK(box_set(9, 2).empty());
    CHECK(box_set(9, 3).size() == 1);
    CHECK(box_count(25, 25) == partition_count(25));
  }

  TEST_CASE("thin partitions") {
    CHECK(is_thin(Partition{5, 1, 1}));
    CHECK(is_thin(Partition{4, 3}));
    CHECK(is_thin(Partition{2, 2, 1, 1}));
    CHECK(is_thin(Partition{3, 3, 1, 1}) == false);
    CHECK(hook(7, 3) == Partition{3, 1, 1, 1, 1});
    CHECK(two_row(7, 4) == Partition{4, 3});
    CHECK_THROWS_AS(two_row(7, 3), ArgumentError);
  }

  TEST_CASE("p-adic expansion reconstructs n") {
    for (int p : {3, 5, 7})
      for (std::int64_t n = 1; n <= 500; ++n) {
        std::int64_t back = 0;
        for (auto [e, d] : p_adic_expansion(n, p)) {
          CHECK(d > 0);
          CHECK(d < p);
          back += d * ipow(p, e);
        }
        CHECK(back == n);
      }
  }

  TEST_CASE("adding and removing boxes are inverse") {
    for (int n = 1; n <= 10; ++n)
      for (const auto& lambda : all_partitions(n)) {
        for (const auto& up : add_box(lambda)) {
          CHECK(up.size() == n + 1);
          const auto downs = remove_box(up);
          CHECK(std::find(downs.begin(), downs.end(), lambda) != downs.end());
        }
        std::set<Partition> outer;
        for (const auto& up : add_box(lambda)) outer.insert(up);
        CHECK(outer.size() == add_box(lambda).size());
      }
  }

  TEST_CASE("subpartitions are exactly the contained diagrams") {
    const Partition lambda{5, 3, 2, 1};
    for (int size = 0; size <= lambda.size(); ++size) {
      std::size_t expected = 0;
      for (const auto& mu : all_partitions(size)) expected += lambda.contains(mu);
      CHECK(subpartitions(lambda, size).size() == expected);
    }
  }

  TEST_CASE("set algebra") {
    const auto a = box_set(8, 5);
    const auto b = box_set(8, 6);
    CHECK(a.is_subset_of(b));
    CHECK(a.united(b) == b);
    CHECK(a.intersected(b) == a);
    CHECK(b.minus(a).size() == b.size() - a.size());
    CHECK_THROWS_AS(a.united(box_set(9, 5)), ArgumentError);
  }

  TEST_CASE("closure under conjugation") {
    const PartitionSet a(6, {Partition{5, 1}, Partition{3, 3}});
    const auto c = circ_closure(a);
    CHECK(c.size() == 4);
    CHECK(c.contains(Partition{2, 1, 1, 1, 1}));
    CHECK(c.contains(Partition{2, 2, 2}));
  }

  TEST_CASE("parsing and printing") {
    CHECK(parse_partition("3,1,1") == Partition{3, 1, 1});
    CHECK(parse_partition("(3,1,1)") == Partition{3, 1, 1});
    CHECK(parse_partition("()").empty());
    CHECK(parse_partition("").empty());
    CHECK(Partition{3, 1, 1}.to_string() == "(3,1,1)");
    CHECK(Partition{}.to_string() == "()");
    CHECK_THROWS_AS(parse_partition("1,3"), ArgumentError);
    CHECK_THROWS_AS(parse_partition("2,x"), ArgumentError);
    CHECK_THROWS_AS(Partition({2, 0, 1}), ArgumentError);
    CHECK(Partition::from_multiset({1, 3, 0, 2}) == Partition{3, 2, 1});
    CHECK(partition_sum(Partition{3, 1}, Partition{2, 2, 1}) == Partition{5, 3, 1});
    CHECK(prepend_row(4, Partition{2, 1}) == Partition{4, 2, 1});
  }

  TEST_CASE("enumeration budget") {
    CHECK_THROWS_AS(all_partitions(300), ResourceError);
  }
}
