#include "sylow/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "sylow/branching_theory.hpp"
#include "sylow/cyclotomic.hpp"
#include "sylow/lr_calculus.hpp"
#include "sylow/partitions.hpp"
#include "sylow/sn_characters.hpp"
#include "sylow/sylow_wreath.hpp"

namespace sylow {

void VerifyReport::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

bool VerifyReport::ok() const { return failure_count() == 0; }

std::size_t VerifyReport::failure_count() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

namespace {

PartitionSet all_of(int n) { return PartitionSet(n, all_partitions(n)); }

PartitionSet closed(int n, std::vector<Partition> list) { return circ_closure(PartitionSet(n, std::move(list))); }

// {(row, mu) : mu in inner}°.
PartitionSet slice_set(int row, const PartitionSet& inner) {
  std::vector<Partition> out;
  for (const auto& mu : inner) out.push_back(prepend_row(row, mu));
  return closed(row + inner.n(), std::move(out));
}

PartitionSet p_prime(int n) { return all_of(n).minus(closed(n, {Partition{n - 1, 1}})); }

std::string diff_text(const PartitionSet& got, const PartitionSet& want) {
  const auto extra = got.minus(want);
  const auto missing = want.minus(got);
  std::string out;
  if (!extra.empty()) out += "unexpected " + std::to_string(extra.size()) + " e.g. " + extra.elements().front().to_string();
  if (!missing.empty()) {
    if (!out.empty()) out += "; ";
    out += "missing " + std::to_string(missing.size()) + " e.g. " + missing.elements().front().to_string();
  }
  return out;
}

void add_set_check(VerifyReport& r, const std::string& name, const PartitionSet& got, const PartitionSet& want) {
  r.add(name, got == want, got == want ? "|set| = " + std::to_string(got.size()) : diff_text(got, want));
}

// Uncached filling count, independent of the memo's argument order.
std::uint64_t count_lr_fillings(const Partition& lambda, const Partition& inner, const Partition& weight) {
  if (!lambda.contains(inner)) return 0;
  std::uint64_t count = 0;
  for_each_lr_filling(SkewShape(lambda, inner), weight, [&](const LRFilling&) { ++count; });
  return count;
}

std::string pair_text(std::int64_t a, std::int64_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

BigInt z_of(const MultisetLabel& label, const Partition& lambda, OracleMethod method = OracleMethod::Composition) {
  const auto& table = z_table(label, method);
  auto it = table.find(lambda);
  return it == table.end() ? BigInt(0) : it->second;
}

// Oracle set against a predicted description; Sandwich descriptions are
// checked for their bounds, thin-partition claim and top slice.
void check_against_prediction(VerifyReport& r, const std::string& tag, const PartitionSet& oracle,
                              const Prediction& pred) {
  const auto& omega = pred.omega;
  const auto om = observed_m(oracle);
  const auto oM = observed_M(oracle);
  r.add(tag + " m", om == pred.m, "oracle " + std::to_string(om) + ", predicted " + std::to_string(pred.m));
  r.add(tag + " M", oM == pred.M, "oracle " + std::to_string(oM) + ", predicted " + std::to_string(pred.M));
  std::size_t wrong = 0;
  std::size_t unknown = 0;
  std::string first_wrong;
  for (const auto& lambda : all_partitions(oracle.n())) {
    const auto m = omega.contains(lambda);
    if (m == Membership::Unknown) {
      ++unknown;
      continue;
    }
    if ((m == Membership::In) != oracle.contains(lambda)) {
      if (wrong++ == 0) first_wrong = lambda.to_string();
    }
  }
  const std::string kind = omega.kind == OmegaDescription::Kind::Exact ? "exact" : "sandwich";
  std::string detail = kind + ", " + std::to_string(unknown) + " undetermined";
  if (wrong) detail += ", " + std::to_string(wrong) + " disagreements, first " + first_wrong;
  r.add(tag + " Ω " + omega.normal_form(), wrong == 0, detail);
}

// ---------------------------------------------------------------- table1

VerifyReport table1() {
  VerifyReport r{"table1", {}, 0};
  struct Row {
    std::vector<int> s;
    std::int64_t m, M;
    PartitionSet omega;
  };
  const std::vector<Row> rows{
      {{0, 0}, 23, 25, p_prime(25)},
      {{0, 1}, 24, 24, box_set(25, 24)},
      {{1, 0}, 19, 20, box_set(25, 19).united(slice_set(20, p_prime(5)))},
      {{1, 1}, 19, 20, box_set(25, 19).united(slice_set(20, box_set(5, 4)))},
  };
  for (const auto& row : rows) {
    const SequenceLabel s(5, row.s);
    const auto label = MultisetLabel::single(s);
    const auto oracle = omega_oracle(label);
    const std::string tag = s.to_string();
    add_set_check(r, tag + " oracle Ω = expected", oracle, row.omega);
    const auto om = observed_m(oracle);
    const auto oM = observed_M(oracle);
    r.add(tag + " (m,M) = " + pair_text(row.m, row.M), om == row.m && oM == row.M, "oracle " + pair_text(om, oM));
    const auto pred = predict(label);
    r.add(tag + " predictor (m,M)", pred.m == row.m && pred.M == row.M, pair_text(pred.m, pred.M));
    add_set_check(r, tag + " predictor Ω", pred.omega.enumerate(), row.omega);
  }
  return r;
}

// ---------------------------------------------------------------- base lemmas

VerifyReport base_lemmas() {
  VerifyReport r{"base-lemmas", {}, 0};
  for (int p : {3, 5, 7}) {
    const auto zero = omega_oracle(MultisetLabel::single(SequenceLabel(p, {0})));
    const PartitionSet want_zero = all_of(p).minus(closed(p, {Partition{p - 1, 1}}));
    add_set_check(r, "p=" + std::to_string(p) + " Ω((0)) = P(p)∖{(p-1,1),(2,1^{p-2})}", zero, want_zero);
    for (int x = 1; x < p; ++x) {
      const auto omega = omega_oracle(MultisetLabel::single(SequenceLabel(p, {x})));
      add_set_check(r, "p=" + std::to_string(p) + " Ω((" + std::to_string(x) + ")) = B_p(p-1)", omega, box_set(p, p - 1));
    }
  }
  // Omega((0,...,0,x)) = B(p^{k+1}-1), with the 3 x 3 square missing at (p,k) = (3,1).
  struct Case {
    int p, k;
  };
  for (const auto& c : {Case{3, 1}, Case{3, 2}, Case{5, 1}}) {
    const int n = static_cast<int>(ipow(c.p, c.k + 1));
    PartitionSet want = box_set(n, n - 1);
    if (c.p == 3 && c.k == 1) want = want.minus(PartitionSet(9, {Partition{3, 3, 3}}));
    for (int x = 1; x < c.p; ++x) {
      std::vector<int> e(static_cast<std::size_t>(c.k), 0);
      e.push_back(x);
      const SequenceLabel s(c.p, e);
      const auto label = MultisetLabel::single(s);
      add_set_check(r, "p=" + std::to_string(c.p) + " Ω(" + s.to_string() + ")", omega_oracle(label), want);
      const BigInt z = z_of(label, Partition{n - 1, 1});
      r.add("p=" + std::to_string(c.p) + " Z^(" + std::to_string(n - 1) + ",1) for " + s.to_string() + " = 1", z == 1,
            "Z = " + z.str());
    }
  }
  return r;
}

// ---------------------------------------------------------------- hook restriction

VerifyReport hook_restriction() {
  VerifyReport r{"hook-restriction", {}, 0};
  for (int p : {3, 5, 7}) {
    std::size_t total = 0;
    std::size_t bad = 0;
    std::string first;
    for (const auto& lambda : all_partitions(p)) {
      const auto hr = restriction_to_Pp(lambda, p);
      if (hook_length_degree(lambda) != hr.m * p + hr.correction) {
        ++bad;
        if (first.empty()) first = lambda.to_string() + " degree";
      }
      for (int x = 0; x < p; ++x) {
        ++total;
        const BigInt want = hr.m + (x == 0 ? hr.correction : 0);
        const BigInt got = branching_coefficient(lambda, SequenceLabel(p, {x})).z;
        if (got != want) {
          ++bad;
          if (first.empty()) first = lambda.to_string() + " x=" + std::to_string(x);
        }
      }
    }
    r.add("p=" + std::to_string(p) + " restriction agrees with oracle", bad == 0,
          std::to_string(total) + " pairs" + (bad ? ", first mismatch " + first : ""));
  }
  return r;
}

// ---------------------------------------------------------------- n = 30

VerifyReport n30() {
  VerifyReport r{"n30", {}, 0};
  const int p = 5;
  const int n = 30;
  for (const auto& label : orbit_representatives_n(p, n)) {
    const std::string tag = label.to_string();
    const auto& direct = z_table(label, OracleMethod::Direct);
    const auto& composed = z_table(label, OracleMethod::Composition);
    std::size_t mismatches = 0;
    for (const auto& lambda : all_partitions(n)) {
      const auto a = direct.find(lambda);
      const auto b = composed.find(lambda);
      const BigInt za = a == direct.end() ? BigInt(0) : a->second;
      const BigInt zb = b == composed.end() ? BigInt(0) : b->second;
      if (za != zb) ++mismatches;
    }
    r.add(tag + " composition = direct over all λ ⊢ 30", mismatches == 0,
          std::to_string(mismatches) + " mismatches, |Ω| = " + std::to_string(direct.size()));
    // Pointwise evaluation on the partitions near the boundary of the box.
    std::size_t sampled = 0;
    std::size_t bad = 0;
    for (const auto& lambda : all_partitions(n)) {
      if (std::max(lambda.first(), lambda.length()) < 17) continue;
      ++sampled;
      const BigInt z = branching_coefficient_composite(lambda, label).z;
      const auto it = direct.find(lambda);
      if (z != (it == direct.end() ? BigInt(0) : it->second)) ++bad;
    }
    r.add(tag + " pointwise composite = direct", bad == 0,
          std::to_string(sampled) + " partitions with λ₁ or l(λ) ≥ 17, " + std::to_string(bad) + " mismatches");
    const auto pred = predict(label);
    check_against_prediction(r, tag, omega_oracle(label, OracleMethod::Direct), pred);
    if (!label.is_trivial() && is_exceptional(label))
      r.add(tag + " T = (R-1,1,0,0) gives m = N - 1", observed_m(omega_oracle(label)) == pred.N - 1,
            "N = " + std::to_string(pred.N));
  }
  return r;
}

// ---------------------------------------------------------------- LR properties

VerifyReport lr_props() {
  VerifyReport r{"lr-props", {}, 0};
  {
    std::size_t cases = 0;
    std::size_t bad = 0;
    std::string first;
    for (int n = 2; n <= 6; ++n)
      for (int n2 = 2; n2 <= 6; ++n2)
        for (int t = n / 2 + 1; t <= n; ++t)
          for (int t2 = n2 / 2 + 1; t2 <= n2; ++t2) {
            ++cases;
            if (star(box_set(n, t), box_set(n2, t2)) != box_set(n + n2, t + t2)) {
              if (bad++ == 0) first = "n=" + std::to_string(n) + ",n'=" + std::to_string(n2);
            }
          }
    r.add("B_n(t) ⋆ B_n'(t') = B_{n+n'}(t+t')", bad == 0, std::to_string(cases) + " cases" + (bad ? ", first " + first : ""));
  }
  {
    const auto s = star(box_set(7, 3), box_set(1, 1));
    const bool differs = s != box_set(8, 4) && !s.contains(Partition{4, 4}) && box_set(8, 4).contains(Partition{4, 4});
    r.add("B_7(3) ⋆ B_1(1) ≠ B_8(4) via (4,4)", differs, s.to_string());
  }
  {
    std::size_t cases = 0;
    std::size_t bad = 0;
    for (int m = 1; m <= 5; ++m)
      for (int n : {5, 6, 7})
        for (int t = m / 2 + 1; t <= m; ++t) {
          ++cases;
          const auto rhs = box_set(n, n - 2).united(closed(n, {Partition{n}}));
          if (star(box_set(m, t), rhs) != box_set(m + n, t + n)) ++bad;
        }
    r.add("B_m(t) ⋆ (B_n(n-2) ∪ {(n)}°) = B_{m+n}(t+n)", bad == 0, std::to_string(cases) + " cases");
  }
  for (auto [q, m, t] : {std::array{3, 5, 4}, std::array{4, 4, 3}}) {
    const auto d = d_set(q, m, box_set(m, t));
    const auto want = box_set(q * m, q * t - 1);
    const std::string name = "B_" + std::to_string(q * m) + "(" + std::to_string(q * t - 1) + ") ⊆ D(" +
                             std::to_string(q) + "," + std::to_string(m) + ",B_" + std::to_string(m) + "(" +
                             std::to_string(t) + "))";
    const auto missing = want.minus(d);
    r.add(name, missing.empty(), missing.empty() ? "|D| = " + std::to_string(d.size()) : "missing " + missing.to_string());
  }
  {
    std::size_t shapes = 0;
    std::size_t bad = 0;
    std::string first;
    for (int size = 0; size <= 10; ++size)
      for (const auto& outer : all_partitions(size))
        for (int inner_size = std::max(0, size - 7); inner_size <= size; ++inner_size)
          for (const auto& inner : subpartitions(outer, inner_size)) {
            const SkewShape x(outer, inner);
            const auto weights = lr_weights(x);
            std::vector<SkewShape> ys;
            for (const auto& bigger : add_box(outer)) ys.emplace_back(bigger, inner);
            for (const auto& smaller : remove_box(inner)) ys.emplace_back(outer, smaller);
            for (const auto& y : ys) {
              const auto wy = lr_weights(y);
              for (const auto& nu : weights) {
                ++shapes;
                const auto plus = add_box(nu);
                const bool hit = std::any_of(plus.begin(), plus.end(), [&](const Partition& v) { return wy.contains(v); });
                if (!hit && bad++ == 0) first = x.to_string() + " -> " + y.to_string() + " ν=" + nu.to_string();
              }
            }
          }
    r.add("add-a-box: LR(Y) ∩ ν⁺ ≠ ∅ for |X| ≤ 7, |outer| ≤ 10", bad == 0,
          std::to_string(shapes) + " (X, Y, ν) triples" + (bad ? ", first " + first : ""));
  }
  {
    // lambda = (b_1 + ... + b_a, mu), factors (b_i, nu^i) with b_i >= |nu^i|.
    std::size_t cases = 0;
    std::size_t bad = 0;
    std::string first;
    std::function<void(int, std::vector<int>&, std::vector<Partition>&)> rec;
    auto check = [&](const std::vector<int>& b, const std::vector<Partition>& nus) {
      int c = 0;
      int top = 0;
      for (std::size_t i = 0; i < b.size(); ++i) {
        c += nus[i].size();
        top += b[i];
      }
      std::vector<Partition> wide;
      for (std::size_t i = 0; i < b.size(); ++i) wide.push_back(prepend_row(b[i], nus[i]));
      for (const auto& mu : all_partitions(c)) {
        if (mu.first() > top) continue;
        ++cases;
        const Partition lambda = prepend_row(top, mu);
        if (iterated_lr(lambda, wide) != iterated_lr(mu, nus) && bad++ == 0) first = lambda.to_string();
      }
    };
    rec = [&](int budget, std::vector<int>& b, std::vector<Partition>& nus) {
      if (b.size() >= 2) check(b, nus);
      if (b.size() == 3) return;
      for (int bi = 1; bi <= budget; ++bi)
        for (int size = 0; size <= bi && bi + size <= budget; ++size)
          for (const auto& nu : all_partitions(size)) {
            b.push_back(bi);
            nus.push_back(nu);
            rec(budget - bi - size, b, nus);
            b.pop_back();
            nus.pop_back();
          }
    };
    std::vector<int> b;
    std::vector<Partition> nus;
    rec(12, b, nus);
    r.add("first-row iterated LR lemma, total size ≤ 12", bad == 0,
          std::to_string(cases) + " instances" + (bad ? ", first " + first : ""));
  }
  {
    std::size_t cases = 0;
    std::size_t sym = 0;
    std::size_t conj = 0;
    std::size_t bound = 0;
    for (int n = 0; n <= 10; ++n)
      for (const auto& lambda : all_partitions(n))
        for (int a = 0; a <= n; ++a)
          for (const auto& mu : subpartitions(lambda, a))
            for (const auto& nu : all_partitions(n - a)) {
              ++cases;
              const auto c = lr_coefficient(lambda, mu, nu);
              if (c != count_lr_fillings(lambda, nu, mu) || c != count_lr_fillings(lambda, mu, nu)) ++sym;
              if (c != lr_coefficient(lambda.conjugate(), mu.conjugate(), nu.conjugate())) ++conj;
              if (c > 0 && (lambda.first() > mu.first() + nu.first() || lambda.length() > mu.length() + nu.length()))
                ++bound;
            }
    r.add("LR symmetry c^λ_μν = c^λ_νμ, |λ| ≤ 10", sym == 0, std::to_string(cases) + " triples");
    r.add("LR conjugation c^λ'_μ'ν' = c^λ_μν, |λ| ≤ 10", conj == 0, std::to_string(conj) + " violations");
    r.add("c^λ_μν > 0 ⇒ λ₁ ≤ μ₁+ν₁ and l(λ) ≤ l(μ)+l(ν)", bound == 0, std::to_string(bound) + " violations");
  }
  return r;
}

// ---------------------------------------------------------------- multiplicities

VerifyReport multiplicities() {
  VerifyReport r{"multiplicities", {}, 0};
  const int p = 5;
  const int n = 25;
  std::vector<Partition> targets;
  for (const auto& lambda : {two_row(n, 19), hook(n, 19)}) {
    targets.push_back(lambda);
    targets.push_back(lambda.conjugate());
  }
  for (int x = 1; x < p; ++x)
    for (int x2 = 1; x2 < p; ++x2) {
      const auto label = MultisetLabel::single(SequenceLabel(p, {x, x2}));
      BigInt least = -1;
      for (const auto& lambda : targets) {
        const BigInt z = z_of(label, lambda);
        if (least < 0 || z < least) least = z;
      }
      r.add("Z ≥ 2 on {(19,6),(19,1^6)}° for " + label.to_string(), least >= 2, "min Z = " + least.str());
    }
  return r;
}

// ---------------------------------------------------------------- predictor identities

VerifyReport predictor_identities() {
  VerifyReport r{"predictor", {}, 0};
  {
    const SequenceLabel s(7, {0, 1, 0, 0, 1, 1, 0});
    const auto st = label_stats(s);
    const std::int64_t m = ipow(7, 7) - ipow(7, 5) - ipow(7, 2);
    const std::int64_t M = ipow(7, 7) - ipow(7, 5);
    r.add("p=7 s=(0,1,0,0,1,1,0): f=2, g=5, τ=4", st.f == 2 && st.g == 5 && st.tau == 4);
    r.add("m = 7^7-7^5-7^2", little_m(s) == m, std::to_string(little_m(s)));
    r.add("M = 7^7-7^5", big_M(s) == M, std::to_string(big_M(s)));
  }
  struct Row {
    std::string seqs;
    std::string omega;
    std::int64_t N;
  };
  const std::vector<Row> table3{
      {"(0,0,0)|(0,0),(0,0)", "P(175)", 175},
      {"(0,0,0)|(0,0),(1,0)", "B_175(169) ⊔ {(170,μ) : μ ∈ P'(5)}°", 170},
      {"(0,0,0)|(0,0),(0,1)", "B_175(174)", 174},
      {"(0,0,0)|(1,0),(1,0)", "B_175(165)", 165},
      {"(0,0,0)|(1,0),(0,1)", "B_175(169)", 169},
      {"(0,0,0)|(0,1),(0,1)", "B_175(173)", 173},
  };
  for (const auto& row : table3) {
    const auto label = MultisetLabel::parse_sequences(5, 175, row.seqs);
    const auto pred = predict(label);
    r.add("n=175 " + label.to_string() + " Ω = " + row.omega, pred.omega.normal_form() == row.omega,
          pred.omega.normal_form());
    r.add("n=175 " + label.to_string() + " N = " + std::to_string(row.N), pred.N == row.N, std::to_string(pred.N));
  }
  {
    const auto label = MultisetLabel::parse_sequences(5, 175, "(0,0,0)|(1,0),(1,1)");
    const auto pred = predict(label);
    r.add("n=175 {(0,0,0),(1,0),(1,1)}: m = N = 164, M = 165", pred.m == 164 && pred.M == 165,
          pair_text(pred.m, pred.M) + ", " + pred.omega.normal_form());
  }
  {
    const auto label = MultisetLabel::parse_sequences(5, 50, "(0,0),(0,1)");
    r.add("n=50 {(0,0),(0,1)}: N = m = 49", n_value_composite(label) == 49 && m_composite(label) == 49);
  }
  return r;
}

// ---------------------------------------------------------------- table 2

VerifyReport table2_slices() {
  VerifyReport r{"table2-slices", {}, 0};
  struct Row {
    std::vector<int> s;
    std::int64_t m, M;
    std::string omega;
  };
  const std::vector<Row> rows{
      {{0, 0, 0}, 123, 125, "P'(125)"},
      {{0, 0, 1}, 124, 124, "B_125(124)"},
      {{0, 1, 0}, 119, 120, "B_125(119) ⊔ {(120,μ) : μ ∈ P'(5)}°"},
      {{0, 1, 1}, 119, 120, "B_125(119) ⊔ {(120,μ) : μ ∈ B_5(4)}°"},
      {{1, 0, 0}, 99, 100, "B_125(99) ⊔ {(100,μ) : μ ∈ P'(25)}°"},
      {{1, 0, 1}, 99, 100, "B_125(99) ⊔ {(100,μ) : μ ∈ B_25(24)}°"},
      {{1, 1, 0}, 95, 100, ""},
      {{1, 1, 1}, 95, 100, ""},
  };
  for (const auto& row : rows) {
    const SequenceLabel s(5, row.s);
    const auto pred = predict(MultisetLabel::single(s));
    r.add(s.to_string() + " (m,M) = " + pair_text(row.m, row.M), pred.m == row.m && pred.M == row.M,
          pair_text(pred.m, pred.M));
    if (!row.omega.empty()) {
      r.add(s.to_string() + " Ω = " + row.omega, pred.omega.normal_form() == row.omega, pred.omega.normal_form());
    } else {
      const auto& d = pred.omega;
      const auto inner = predict_omega(SequenceLabel(5, {1, row.s[2]}));
      const bool ok = d.kind == OmegaDescription::Kind::Sandwich && d.no_thin_outside && d.slice &&
                      d.slice->row == 100 && d.slice->inner->normal_form() == inner.normal_form();
      r.add(s.to_string() + " sandwich with slice {(100,μ) : μ ∈ Ω(1," + std::to_string(row.s[2]) + ")}°", ok,
            d.normal_form());
    }
  }
  // The top-slice rule checked by the oracle one level down, where every
  // label with f < k can be enumerated.
  for (const auto& s : orbit_representatives(5, 2)) {
    const auto st = label_stats(s);
    if (!st.f || *st.f == s.k()) continue;
    const auto oracle = omega_oracle(MultisetLabel::single(s));
    const int M = static_cast<int>(big_M(s));
    const auto inner = omega_oracle(MultisetLabel::single(s.suffix(*st.f)));
    std::vector<Partition> top;
    for (const auto& lambda : oracle)
      if (lambda.first() == M || lambda.length() == M) top.push_back(lambda);
    add_set_check(r, s.to_string() + " oracle slice at row M = " + std::to_string(M), PartitionSet(25, top),
                  slice_set(M, inner));
  }
  return r;
}

// ---------------------------------------------------------------- ratio

VerifyReport ratio() {
  VerifyReport r{"ratio", {}, 0};
  const auto five = omega_intersection_bounds(5, 5, true);
  r.add("|Ω_5| / p(5) = 3/7", five.exact && five.exact->to_string() == "3/7",
        five.exact ? five.exact->to_string() : "none");
  {
    const auto omega5 = omega_oracle(MultisetLabel::single(SequenceLabel(5, {0})))
                            .intersected(omega_oracle(MultisetLabel::single(SequenceLabel(5, {1}))));
    add_set_check(r, "Ω_5 = P(5)∖{(5),(4,1),(2,1,1,1),(1^5)}", omega5,
                  PartitionSet(5, {Partition{3, 2}, Partition{3, 1, 1}, Partition{2, 2, 1}}));
  }
  double previous = 0;
  bool monotone = true;
  std::string seq;
  for (int n : {25, 50, 100, 200}) {
    const auto b = omega_intersection_bounds(n, 5);
    const double v = b.lower.to_double();
    if (v < previous) monotone = false;
    previous = v;
    seq += (seq.empty() ? "" : ", ") + std::to_string(n) + ":" + std::to_string(v);
    r.add("n=" + std::to_string(n) + " lower ≤ upper", b.lower.to_double() <= b.upper.to_double(),
          "m_min=" + std::to_string(b.m_min) + " M_min=" + std::to_string(b.M_min));
    if (n == 25) r.add("n=25 m_min = 19", b.m_min == 19, std::to_string(b.m_min));
  }
  r.add("lower ratio nondecreasing over n = 25, 50, 100, 200", monotone, seq);
  return r;
}

// ---------------------------------------------------------------- invariants

VerifyReport invariants() {
  VerifyReport r{"invariants", {}, 0};
  std::mt19937_64 rng(20240601);
  for (int p : {3, 5, 7}) {
    auto random_element = [&] {
      std::uniform_int_distribution<int> coeff(-50, 50);
      std::vector<BigInt> c;
      for (int i = 0; i < p - 1; ++i) c.emplace_back(coeff(rng));
      return CyclotomicInt(p, std::move(c));
    };
    std::size_t bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = random_element();
      const auto b = random_element();
      const auto c = random_element();
      if ((a * b) * c != a * (b * c)) ++bad;
      if (a * b != b * a) ++bad;
      if (a * (b + c) != a * b + a * c) ++bad;
      if ((a + b) + c != a + (b + c)) ++bad;
      if (conj(conj(a)) != a || conj(a * b) != conj(a) * conj(b)) ++bad;
    }
    CyclotomicInt sum(p);
    for (int j = 0; j < p; ++j) sum += root_of_unity(p, j);
    if (!sum.is_zero()) ++bad;
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        if (root_of_unity(p, a) * root_of_unity(p, b) != root_of_unity(p, a + b)) ++bad;
        if (conj(root_of_unity(p, a)) != root_of_unity(p, -a)) ++bad;
      }
    r.add("cyclotomic ring axioms p=" + std::to_string(p), bad == 0, std::to_string(bad) + " violations");
  }
  {
    std::size_t bad = 0;
    std::size_t types = 0;
    for (int n = 1; n <= 10; ++n)
      for (const auto& t : all_partitions(n)) {
        BigInt sum = 0;
        for (const auto& lambda : all_partitions(n)) sum += hook_length_degree(lambda) * mn_value(lambda, t);
        ++types;
        const bool identity = t.first() == 1;
        if (!identity && sum != 0) ++bad;
      }
    r.add("MN column sums vanish off the identity, n ≤ 10", bad == 0, std::to_string(types) + " cycle types");
  }
  {
    std::size_t bad = 0;
    for (int n = 1; n <= 12; ++n)
      for (const auto& lambda : all_partitions(n))
        if (mn_value(lambda, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) != hook_length_degree(lambda))
          ++bad;
    r.add("MN at identity = hook length degree, n ≤ 12", bad == 0);
  }
  for (auto [p, k] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{3, 3}, std::pair{5, 1}, std::pair{5, 2}, std::pair{7, 1}}) {
    std::size_t bad = 0;
    for (const auto& s : orbit_representatives(p, k)) {
      std::vector<int> e = s.entries;
      for (int& x : e) x = x ? p - 1 : 0;
      for (const auto& label : {s, SequenceLabel(p, e)}) {
        const auto a = class_profile(label);
        const auto b = structural_profile(label);
        if (a.entries.size() != b.entries.size()) {
          ++bad;
          continue;
        }
        for (const auto& [t, entry] : a.entries) {
          auto it = b.entries.find(t);
          if (it == b.entries.end() || it->second.count != entry.count || it->second.phi_sum != entry.phi_sum) ++bad;
        }
      }
    }
    const std::string pk = "(" + std::to_string(p) + "," + std::to_string(k) + ")";
    r.add("enumerated profile = wreath recursion at " + pk, bad == 0);
    const auto order = class_profile(SequenceLabel(p, std::vector<int>(static_cast<std::size_t>(k), 0))).order();
    r.add("|P| = p^((p^k-1)/(p-1)) at " + pk, order == group_order(p, k), order.str());
  }
  {
    // Orthogonality of linear characters of P_25.
    std::size_t bad = 0;
    std::vector<SequenceLabel> labels;
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) labels.emplace_back(5, std::vector<int>{a, b});
    std::vector<int> code_count(25, 0);
    enumerate_elements(5, 2, [&](const WreathElement& w) {
      const int code = phi_exponent(SequenceLabel(5, {1, 0}), w) + 5 * phi_exponent(SequenceLabel(5, {0, 1}), w);
      ++code_count[static_cast<std::size_t>(code)];
    });
    for (const auto& s : labels)
      for (const auto& t : labels) {
        CyclotomicInt sum(5);
        for (int code = 0; code < 25; ++code) {
          const int e1 = code % 5;
          const int e2 = code / 5;
          const int diff = (s[0] - t[0]) * e1 + (s[1] - t[1]) * e2;
          sum.add_root(diff, code_count[static_cast<std::size_t>(code)]);
        }
        const BigInt want = s == t ? BigInt(15625) : BigInt(0);
        if (!sum.is_rational() || as_integer(sum) != want) ++bad;
      }
    r.add("orthogonality of Lin(P_25)", bad == 0, "625 pairs");
  }
  std::size_t inner_products = 0;
  for (auto [p, k] : {std::pair{3, 2}, std::pair{5, 2}}) {
    const std::string pk = "(" + std::to_string(p) + "," + std::to_string(k) + ")";
    std::size_t conj_bad = 0;
    std::size_t orbit_bad = 0;
    std::size_t degree_bad = 0;
    std::map<Partition, BigInt> linear_total;
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        const SequenceLabel s(p, {a, b});
        const auto label = MultisetLabel::single(s);
        const auto& table = z_table(label);
        inner_products += partition_count(p * p);
        for (const auto& [lambda, z] : table) {
          linear_total[lambda] += z;
          const auto it = table.find(lambda.conjugate());
          if (it == table.end() || it->second != z) ++conj_bad;
        }
        if (omega_oracle(label) != omega_oracle(MultisetLabel::single(s.support_representative()))) ++orbit_bad;
      }
    for (const auto& [lambda, total] : linear_total)
      if (total > hook_length_degree(lambda)) ++degree_bad;
    r.add("Z^λ = Z^λ' for all labels at " + pk, conj_bad == 0, std::to_string(conj_bad) + " violations");
    r.add("Ω constant on N-orbits at " + pk, orbit_bad == 0, std::to_string(orbit_bad) + " violations");
    r.add("Σ_φ Z^λ_φ ≤ χ^λ(1) at " + pk, degree_bad == 0);
  }
  r.add("inner products integral and exactly divisible", true,
        std::to_string(inner_products) + " evaluated without integrity errors");
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lr-props", "table1", "table2-slices", "n30",       "base-lemmas",
                                              "multiplicities", "ratio", "hook-restriction", "predictor", "invariants"};
  return names;
}

VerifyReport run_suite(const std::string& name) {
  static const std::map<std::string, std::function<VerifyReport()>> suites{
      {"lr-props", lr_props},
      {"table1", table1},
      {"table2-slices", table2_slices},
      {"n30", n30},
      {"base-lemmas", base_lemmas},
      {"multiplicities", multiplicities},
      {"ratio", ratio},
      {"hook-restriction", hook_restriction},
      {"predictor", predictor_identities},
      {"invariants", invariants},
  };
  const auto it = suites.find(name);
  if (it == suites.end()) throw ArgumentError("unknown suite '" + name + "'");
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report = it->second();
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace sylow
