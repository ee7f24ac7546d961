#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "oracles.hpp"
#include "sylow/sn_characters.hpp"

using namespace sylow;

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt centralizer(const Partition& t) {
  std::map<int, int> mult;
  for (int part : t.parts()) ++mult[part];
  BigInt z = 1;
  for (auto [i, a] : mult)
    for (int j = 1; j <= a; ++j) z *= i * j;
  return z;
}

}  // namespace

TEST_SUITE("sn_characters") {
  TEST_CASE("Murnaghan-Nakayama agrees with diagram border strips") {
    for (int n = 1; n <= 9; ++n)
      for (const auto& lambda : all_partitions(n))
        for (const auto& t : all_partitions(n))
          CHECK(mn_value(lambda, t) == oracle::character(lambda.parts(), t.parts()));
  }

  TEST_CASE("degrees") {
    for (int n = 1; n <= 14; ++n) {
      BigInt squares = 0;
      for (const auto& lambda : all_partitions(n)) {
        const auto d = hook_length_degree(lambda);
        CHECK(d == mn_value(lambda, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))));
        squares += d * d;
      }
      CHECK(squares == factorial(n));
    }
    CHECK(hook_length_degree(Partition{5, 4, 3, 2, 1}) == BigInt(292864));
  }

  TEST_CASE("row and column orthogonality") {
    for (int n = 2; n <= 10; ++n) {
      const auto parts = all_partitions(n);
      for (const auto& t : parts)
        for (const auto& u : parts) {
          BigInt col = 0;
          for (const auto& lambda : parts) col += mn_value(lambda, t) * mn_value(lambda, u);
          CHECK(col == (t == u ? centralizer(t) : BigInt(0)));
        }
      for (const auto& a : parts)
        for (const auto& b : parts) {
          BigInt row = 0;
          for (const auto& t : parts) row += factorial(n) / centralizer(t) * mn_value(a, t) * mn_value(b, t);
          CHECK(row == (a == b ? factorial(n) : BigInt(0)));
        }
    }
  }

  TEST_CASE("large values stay exact") {
    const Partition lambda{10, 8, 6, 4, 2};
    const Partition t{5, 5, 5, 5, 5, 5};
    CHECK(mn_value(lambda, t) == mn_value(lambda.conjugate(), t));
    CHECK(hook_length_degree(Partition{20, 10}) == BigInt(15737865));
    // Rectangle 4^10: 40! / prod of hooks (4 - j) + (10 - i) - 1.
    BigInt hooks = 1;
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 4; ++j) hooks *= (4 - j) + (10 - i) - 1;
    CHECK(hook_length_degree(Partition(std::vector<int>(10, 4))) == factorial(40) / hooks);
  }

  TEST_CASE("S_3 by hand") {
    const auto trivial = MultisetLabel::parse("3:0");
    const auto other = MultisetLabel::parse("3:1");
    CHECK(branching_coefficient(Partition{3}, trivial.seqs[0]).z == 1);
    CHECK(branching_coefficient(Partition{2, 1}, trivial.seqs[0]).z == 0);
    CHECK(branching_coefficient(Partition{1, 1, 1}, trivial.seqs[0]).z == 1);
    CHECK(branching_coefficient(Partition{3}, other.seqs[0]).z == 0);
    CHECK(branching_coefficient(Partition{2, 1}, other.seqs[0]).z == 1);
    CHECK(branching_coefficient(Partition{1, 1, 1}, other.seqs[0]).z == 0);
  }

  TEST_CASE("P_{p^2} multiplicities agree with explicit permutations") {
    for (const auto& lambda : all_partitions(9))
      for (int s1 = 0; s1 < 3; ++s1)
        for (int s2 = 0; s2 < 3; ++s2)
          CHECK(branching_coefficient(lambda, SequenceLabel(3, {s1, s2})).z ==
                oracle::wreath_two_multiplicity(3, lambda.parts(), s1, s2));
    const auto parts = all_partitions(25);
    for (std::size_t i = 0; i < parts.size(); i += 7)
      for (auto [s1, s2] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 0}, std::pair{1, 1}, std::pair{2, 3}})
        CHECK_MESSAGE(branching_coefficient(parts[i], SequenceLabel(5, {s1, s2})).z ==
                          oracle::wreath_two_multiplicity(5, parts[i].parts(), s1, s2),
                      parts[i].to_string() << " s=(" << s1 << "," << s2 << ")");
  }

  TEST_CASE("induced degree identity") {
    // sum_lambda Z^lambda chi^lambda(1) = [S_n : P].
    for (const auto& [p, n] : {std::pair{3, 6}, std::pair{3, 9}, std::pair{5, 10}, std::pair{3, 11}, std::pair{5, 25}})
      for (const auto& label : orbit_representatives_n(p, n))
        for (auto method : {OracleMethod::Direct, OracleMethod::Composition}) {
          BigInt total = 0;
          for (const auto& [lambda, z] : z_table(label, method)) total += z * hook_length_degree(lambda);
          CHECK_MESSAGE(total * group_order(label) == factorial(n), label.to_string());
        }
  }

  TEST_CASE("direct and composition tables agree") {
    for (const auto& label : orbit_representatives_n(3, 14))
      CHECK(z_table(label, OracleMethod::Direct) == z_table(label, OracleMethod::Composition));
    for (const auto& label : orbit_representatives_n(5, 12))
      CHECK(z_table(label, OracleMethod::Direct) == z_table(label, OracleMethod::Composition));
  }

  TEST_CASE("pointwise composite matches the table") {
    const auto label = MultisetLabel::parse_sequences(3, 13, "(1,0)|(1)|()");
    const auto& table = z_table(label, OracleMethod::Direct);
    for (const auto& lambda : all_partitions(13)) {
      const auto it = table.find(lambda);
      CHECK(branching_coefficient_composite(lambda, label).z == (it == table.end() ? BigInt(0) : it->second));
    }
  }

  TEST_CASE("hook restriction formula") {
    for (int p : {3, 5, 7})
      for (const auto& lambda : all_partitions(p)) {
        const auto h = restriction_to_Pp(lambda, p);
        for (int s = 0; s < p; ++s) {
          const auto z = branching_coefficient(lambda, SequenceLabel(p, {s})).z;
          CHECK(z == h.m + (s == 0 ? h.correction : 0));
        }
      }
  }

  TEST_CASE("cache round trip") {
    auto& cache = CharacterValueCache::instance();
    mn_value(Partition{4, 2, 1}, Partition{3, 3, 1});
    const auto path = (std::filesystem::temp_directory_path() / "sylow_cache_test.json").string();
    cache.export_json(path);
    const auto before = cache.size();
    cache.clear();
    CHECK(cache.size() == 0);
    cache.import_json(path);
    CHECK(cache.size() == before);
    CHECK(mn_value(Partition{4, 2, 1}, Partition{3, 3, 1}) == oracle::character({4, 2, 1}, {3, 3, 1}));
    std::remove(path.c_str());
  }

  TEST_CASE("size mismatch is an argument error") {
    CHECK_THROWS_AS(mn_value(Partition{3, 1}, Partition{2, 1}), ArgumentError);
  }
}
