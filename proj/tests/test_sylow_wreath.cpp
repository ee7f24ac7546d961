#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sylow/sylow_wreath.hpp"

using namespace sylow;

namespace {

bool same_profile(const ClassProfile& a, const ClassProfile& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (const auto& [t, e] : a.entries) {
    const auto it = b.entries.find(t);
    if (it == b.entries.end() || it->second.count != e.count || !(it->second.phi_sum == e.phi_sum)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("sylow_wreath") {
  TEST_CASE("group orders") {
    CHECK(group_order(3, 1) == 3);
    CHECK(group_order(3, 2) == 81);
    CHECK(group_order(5, 2) == BigInt(15625));
    CHECK(group_order(3, 3) == BigInt(1594323));
    CHECK(flat_size(5, 3) == 31);
    const auto label = MultisetLabel::parse("5@30:(1,0)|(2)");
    CHECK(group_order(label) == BigInt(15625) * 5);
  }

  TEST_CASE("enumeration yields distinct permutations in the Sylow subgroup") {
    for (auto [p, k] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{5, 1}, std::pair{5, 2}}) {
      std::set<std::vector<int>> seen;
      enumerate_elements(p, k, [&](const WreathElement& w) {
        const auto perm = to_permutation(w);
        std::vector<int> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < static_cast<int>(sorted.size()); ++i) REQUIRE(sorted[i] == i);
        seen.insert(perm);
      });
      CHECK(BigInt(seen.size()) == group_order(p, k));
    }
  }

  TEST_CASE("P_{p^2} is the group of the reference construction") {
    for (int p : {3, 5}) {
      std::set<std::vector<int>> mine, ref;
      enumerate_elements(p, 2, [&](const WreathElement& w) { mine.insert(to_permutation(w)); });
      oracle::for_each_wreath_two(p, [&](const oracle::WreathTwo& w) { ref.insert(w.perm); });
      CHECK(mine == ref);
    }
  }

  TEST_CASE("phi is a homomorphism on products") {
    // phi is determined by the level sums, which are additive under composition.
    const int p = 3;
    std::vector<WreathElement> elems;
    enumerate_elements(p, 2, [&](const WreathElement& w) { elems.push_back(w); });
    std::map<std::vector<int>, const WreathElement*> by_perm;
    for (const auto& w : elems) by_perm[to_permutation(w)] = &w;
    for (const SequenceLabel& s : {SequenceLabel(p, {1, 0}), SequenceLabel(p, {0, 2}), SequenceLabel(p, {1, 1})})
      for (std::size_t a = 0; a < elems.size(); a += 7)
        for (std::size_t b = 0; b < elems.size(); b += 5) {
          const auto pa = to_permutation(elems[a]), pb = to_permutation(elems[b]);
          std::vector<int> prod(pa.size());
          for (std::size_t x = 0; x < pa.size(); ++x) prod[x] = pa[static_cast<std::size_t>(pb[x])];
          const auto* w = by_perm.at(prod);
          CHECK((phi_exponent(s, *w) - phi_exponent(s, elems[a]) - phi_exponent(s, elems[b])) % p == 0);
        }
  }

  TEST_CASE("census matches the wreath recursion") {
    for (int p : {3, 5, 7})
      for (int k = 1; k <= (p == 3 ? 3 : 2); ++k) {
        std::vector<int> entries(static_cast<std::size_t>(k), 0);
        std::function<void(int)> rec = [&](int i) {
          if (i == k) {
            const SequenceLabel s(p, entries);
            CHECK_MESSAGE(same_profile(class_profile(s), structural_profile(s)), s.to_string());
            return;
          }
          for (int v = 0; v < p; ++v) {
            entries[static_cast<std::size_t>(i)] = v;
            rec(i + 1);
          }
        };
        rec(0);
      }
  }

  TEST_CASE("orthogonality of linear characters") {
    for (int p : {3, 5})
      for (const auto& s : orbit_representatives(p, 2)) {
        const auto profile = class_profile(s);
        CyclotomicInt total(p);
        BigInt count = 0;
        for (const auto& [t, e] : profile.entries) {
          total += e.phi_sum;
          count += e.count;
        }
        CHECK(count == group_order(p, 2));
        CHECK(total == CyclotomicInt::integer(p, s.is_zero() ? group_order(p, 2) : BigInt(0)));
      }
  }

  TEST_CASE("composite profiles convolve their factors") {
    const auto label = MultisetLabel::parse_sequences(3, 12, "(1,0)|(1)");
    const auto profile = class_profile(label);
    CHECK(profile.n == 12);
    CHECK(profile.order() == BigInt(81 * 3));
    ClassProfile expected = class_profile(SequenceLabel(3, {1, 0}));
    for (const auto& s : label.seqs)
      if (s.k() == 1) expected = convolve(expected, class_profile(s));
    CHECK(same_profile(profile, expected));
  }

  TEST_CASE("budget is enforced") {
    CHECK_THROWS_AS(enumerate_elements(3, 3, [](const WreathElement&) {}, 1000), ResourceError);
  }

  TEST_CASE("labels") {
    const auto s = SequenceLabel::parse(5, "(0,3,0,2)");
    CHECK(s.support_representative() == SequenceLabel(5, {0, 1, 0, 1}));
    CHECK(s.suffix(2) == SequenceLabel(5, {0, 2}));
    CHECK(s.to_string() == "(0,3,0,2)");
    CHECK(n_orbit_equivalent(s, SequenceLabel(5, {0, 1, 0, 4})));
    CHECK_FALSE(n_orbit_equivalent(s, SequenceLabel(5, {1, 1, 0, 4})));
    CHECK_THROWS_AS(SequenceLabel(5, {5}), ArgumentError);
    CHECK_THROWS_AS(SequenceLabel(4, {1}), ArgumentError);

    const auto label = MultisetLabel::parse("5@30:(1,0)|(2)");
    CHECK(label.to_string() == "{(2),(1,0)}");
    CHECK(MultisetLabel::parse("5:1,0") == MultisetLabel::single(SequenceLabel(5, {1, 0})));
    CHECK_THROWS_AS(MultisetLabel::parse_sequences(5, 30, "(1,0)"), ArgumentError);
    CHECK(orbit_representatives(5, 3).size() == 8);
    CHECK(orbit_representatives_n(5, 30).size() == 8);
    CHECK(orbit_representatives_n(3, 8).size() == 3);
  }
}
