#include <doctest.h>

#include "sylow/branching_theory.hpp"
#include "sylow/sn_characters.hpp"

using namespace sylow;

namespace {

void check_against_oracle(const MultisetLabel& label) {
  const auto pred = predict(label);
  const auto oracle_set = omega_oracle(label, OracleMethod::Direct);
  INFO("label " << label.to_string() << " predicted " << pred.omega.normal_form());
  CHECK(pred.theorem_applies);
  CHECK(observed_m(oracle_set) == pred.m);
  CHECK(observed_M(oracle_set) == pred.M);
  int unknown = 0;
  for (const auto& lambda : all_partitions(label.n)) {
    const auto member = pred.omega.contains(lambda);
    if (member == Membership::Unknown) {
      ++unknown;
      continue;
    }
    CHECK_MESSAGE((member == Membership::In) == oracle_set.contains(lambda), lambda.to_string());
  }
  if (pred.omega.kind == OmegaDescription::Kind::Exact) {
    CHECK(unknown == 0);
    CHECK(pred.omega.enumerate() == oracle_set);
  }
}

}  // namespace

TEST_SUITE("branching_theory") {
  TEST_CASE("sequence statistics") {
    const SequenceLabel s(7, {0, 1, 0, 0, 1, 1, 0});
    const auto st = label_stats(s);
    CHECK(st.f == 2);
    CHECK(st.g == 5);
    CHECK(st.z == 3);
    CHECK(st.tau == 4);
    CHECK(label_stats(SequenceLabel(5, {0, 0})).tau == 1);
    CHECK(label_stats(SequenceLabel(5, {0, 0})).f == std::nullopt);
    CHECK(label_stats(SequenceLabel(5, {3, 0})).tau == 2);
    CHECK(label_stats(SequenceLabel(5, {0, 3})).tau == 3);
    CHECK(label_stats(SequenceLabel(5, {3})).tau == 3);
  }

  TEST_CASE("closed-form bounds for a long sequence") {
    const SequenceLabel s(7, {0, 1, 0, 0, 1, 1, 0});
    CHECK(little_m(s) == ipow(7, 7) - ipow(7, 5) - ipow(7, 2));
    CHECK(big_M(s) == ipow(7, 7) - ipow(7, 5));
  }

  TEST_CASE("type tuples") {
    const auto label = MultisetLabel::parse_sequences(5, 30, "(0)|(1,0)");
    CHECK(type_tuple(label) == TypeTuple{{1, 1, 0, 0}});
    CHECK(is_exceptional(label));
    CHECK(is_quasi_trivial(label));
    const auto four = MultisetLabel::parse_sequences(5, 30, "(0)|(1,1)");
    CHECK_FALSE(is_quasi_trivial(four));
    CHECK_FALSE(is_quasi_trivial(MultisetLabel::parse_sequences(5, 30, "(0)|(0,0)")));
  }

  TEST_CASE("normal forms") {
    auto form = [](int p, int n, const char* s) { return predict(MultisetLabel::parse_sequences(p, n, s)).omega.normal_form(); };
    CHECK(form(5, 25, "(0,0)") == "P'(25)");
    CHECK(form(5, 25, "(0,1)") == "B_25(24)");
    CHECK(form(5, 25, "(1,0)") == "B_25(19) ⊔ {(20,μ) : μ ∈ P'(5)}°");
    CHECK(form(5, 25, "(1,1)") == "B_25(19) ⊔ {(20,μ) : μ ∈ B_5(4)}°");
    CHECK(form(3, 9, "(0,1)") == "B_9(8) ∖ {(3,3,3)}°");
    CHECK(form(5, 30, "(0)|(0,0)") == "P(30)");
  }

  TEST_CASE("p = 3 is flagged") {
    const auto pred = predict(MultisetLabel::parse_sequences(3, 9, "(1,1)"));
    CHECK_FALSE(pred.theorem_applies);
    CHECK_FALSE(pred.notes.empty());
  }

  TEST_CASE("predictions match the oracle for p = 5 and p = 7") {
    for (auto [p, n] : {std::pair{5, 5}, std::pair{5, 6}, std::pair{5, 10}, std::pair{5, 11}, std::pair{5, 16},
                        std::pair{5, 25}, std::pair{5, 26}, std::pair{7, 7}, std::pair{7, 8}, std::pair{7, 15}})
      for (const auto& label : orbit_representatives_n(p, n)) check_against_oracle(label);
  }

  TEST_CASE("predictions are orbit invariant") {
    for (int a = 1; a < 5; ++a)
      for (int b = 0; b < 5; ++b) {
        const auto s = MultisetLabel::single(SequenceLabel(5, {a, b}));
        const auto rep = MultisetLabel::single(SequenceLabel(5, {1, b ? 1 : 0}));
        CHECK(predict(s).omega.normal_form() == predict(rep).omega.normal_form());
        CHECK(omega_oracle(s) == omega_oracle(rep));
      }
  }

  TEST_CASE("descriptions are closed under conjugation") {
    for (const auto& label : orbit_representatives_n(5, 30)) {
      const auto omega = predict(label).omega;
      for (const auto& lambda : all_partitions(30))
        CHECK(omega.contains(lambda) == omega.contains(lambda.conjugate()));
    }
  }

  TEST_CASE("observed bounds") {
    CHECK(observed_m(box_set(12, 7)) == 7);
    CHECK(observed_M(box_set(12, 7)) == 7);
    const PartitionSet full(6, all_partitions(6));
    CHECK(observed_m(full) == 6);
    CHECK(observed_M(full) == 6);
  }

  TEST_CASE("ratio bounds") {
    const auto b = omega_intersection_bounds(5, 5, true);
    REQUIRE(b.exact);
    CHECK(b.lower.to_double() <= b.exact->to_double());
    CHECK(b.exact->to_double() <= b.upper.to_double());
    double previous = 0;
    for (int n : {25, 50, 100}) {
      const auto r = omega_intersection_bounds(n, 5);
      CHECK(r.lower.to_double() >= previous);
      CHECK(r.lower.to_double() <= r.upper.to_double());
      previous = r.lower.to_double();
    }
    CHECK(Fraction{BigInt(6), BigInt(8)}.to_string() == "3/4");
    CHECK_THROWS_AS(omega_intersection_bounds(kExactRatioMaxN + 1, 5, true), ResourceError);
  }
}
