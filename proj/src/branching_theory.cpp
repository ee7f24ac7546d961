#include "sylow/branching_theory.hpp"

#include <algorithm>
#include <sstream>

#include "sylow/sn_characters.hpp"

namespace sylow {

LabelStats label_stats(const SequenceLabel& s) {
  LabelStats st;
  for (int i = 0; i < s.k(); ++i) {
    if (s[i] == 0) continue;
    ++st.z;
    if (!st.f) st.f = i + 1;
    else if (!st.g) st.g = i + 1;
  }
  if (st.z == 0) st.tau = 1;
  else if (st.z == 1) st.tau = *st.f < s.k() ? 2 : 3;
  else st.tau = 4;
  return st;
}

std::string TypeTuple::to_string() const {
  return "(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + "," +
         std::to_string(x[3]) + ")";
}

TypeTuple type_tuple(const MultisetLabel& label) {
  TypeTuple t;
  for (const auto& s : label.seqs) ++t.x[static_cast<std::size_t>(label_stats(s).tau - 1)];
  return t;
}

bool is_quasi_trivial(const MultisetLabel& label) { return type_tuple(label).x[3] == 0 && !label.is_trivial(); }

bool is_exceptional(const MultisetLabel& label) {
  const auto t = type_tuple(label);
  return t.x[1] == 1 && t.x[2] == 0 && t.x[3] == 0;
}

std::int64_t big_M(const SequenceLabel& s) {
  const auto st = label_stats(s);
  const std::int64_t n = ipow(s.p, s.k());
  if (!st.f) return n;
  return n - ipow(s.p, s.k() - *st.f);
}

std::int64_t little_m(const SequenceLabel& s) {
  const auto st = label_stats(s);
  const int k = s.k();
  const std::int64_t n = ipow(s.p, k);
  if (k == 0) return 1;
  switch (st.tau) {
    case 1:
      return n - 2;
    case 2:
      return n - ipow(s.p, k - *st.f) - 1;
    case 3:
      return n - 1;
    default:
      return n - ipow(s.p, k - *st.f) - ipow(s.p, k - *st.g);
  }
}

std::int64_t n_value(const SequenceLabel& s) {
  const auto st = label_stats(s);
  if (st.tau == 1) return ipow(s.p, s.k());
  if (st.tau == 2) return little_m(s) + 1;
  return little_m(s);
}

std::int64_t big_M_composite(const MultisetLabel& label) {
  std::int64_t total = 0;
  for (const auto& s : label.seqs) total += big_M(s);
  return total;
}

std::int64_t n_value_composite(const MultisetLabel& label) {
  std::int64_t total = 0;
  for (const auto& s : label.seqs) total += n_value(s);
  return total;
}

std::int64_t m_composite(const MultisetLabel& label) {
  if (label.is_prime_power()) return little_m(label.seqs.front());
  const std::int64_t n = n_value_composite(label);
  return is_exceptional(label) ? n - 1 : n;
}

namespace {

bool in_box(const Partition& lambda, std::int64_t t) { return lambda.first() <= t && lambda.length() <= t; }

Partition drop_first_row(const Partition& lambda) {
  return Partition(std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end()));
}

Membership combine_any(Membership a, Membership b) {
  if (a == Membership::In || b == Membership::In) return Membership::In;
  if (a == Membership::Unknown || b == Membership::Unknown) return Membership::Unknown;
  return Membership::Out;
}

Membership slice_membership(const OmegaDescription::Slice& slice, const Partition& lambda) {
  Membership result = Membership::Out;
  if (lambda.first() == slice.row) result = combine_any(result, slice.inner->contains(drop_first_row(lambda)));
  const Partition conj = lambda.conjugate();
  if (conj.first() == slice.row) result = combine_any(result, slice.inner->contains(drop_first_row(conj)));
  return result;
}

bool in_closed_list(const std::vector<Partition>& list, const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  return std::find(list.begin(), list.end(), lambda) != list.end() ||
         std::find(list.begin(), list.end(), conj) != list.end();
}

}  // namespace

Membership OmegaDescription::contains(const Partition& lambda) const {
  if (lambda.size() != n) return Membership::Out;
  if (kind == Kind::Exact) {
    if (in_box(lambda, lower)) return in_closed_list(excluded, lambda) ? Membership::Out : Membership::In;
    if (in_closed_list(extras, lambda)) return Membership::In;
    if (slice) return slice_membership(*slice, lambda);
    return Membership::Out;
  }
  if (in_box(lambda, lower)) return Membership::In;
  if (!in_box(lambda, upper)) return Membership::Out;
  if (no_thin_outside && is_thin(lambda)) return Membership::Out;
  if (slice && (lambda.first() == slice->row || lambda.length() == slice->row)) return slice_membership(*slice, lambda);
  return Membership::Unknown;
}

PartitionSet OmegaDescription::enumerate(int budget) const {
  std::vector<Partition> out;
  for (const auto& lambda : all_partitions(n, budget)) {
    const auto m = contains(lambda);
    if (m == Membership::Unknown)
      throw ArgumentError("membership of " + lambda.to_string() + " in " + normal_form() + " is not determined");
    if (m == Membership::In) out.push_back(lambda);
  }
  return PartitionSet(n, std::move(out));
}

namespace {

std::string list_closure(const std::vector<Partition>& list) {
  std::string out = "{";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ", ";
    out += list[i].to_string();
  }
  return out + "}°";
}

std::string slice_text(const OmegaDescription::Slice& slice) {
  return "{(" + std::to_string(slice.row) + ",μ) : μ ∈ " + slice.inner->normal_form() + "}°";
}

}  // namespace

std::string OmegaDescription::normal_form() const {
  if (!alias.empty()) return alias;
  const std::string nn = std::to_string(n);
  if (kind == Kind::Sandwich) {
    std::string out = "B_" + nn + "(" + std::to_string(lower) + ") ⊆ Ω ⊆ B_" + nn + "(" + std::to_string(upper) + ")";
    if (no_thin_outside) out += ", no thin partitions outside B_" + nn + "(" + std::to_string(lower) + ")";
    if (slice) out += ", top slice " + slice_text(*slice);
    return out;
  }
  std::string out = lower >= n ? "P(" + nn + ")" : "B_" + nn + "(" + std::to_string(lower) + ")";
  if (!excluded.empty()) out += " ∖ " + list_closure(excluded);
  if (slice) out += " ⊔ " + slice_text(*slice);
  if (!extras.empty()) out += " ⊔ " + list_closure(extras);
  return out;
}

namespace {

OmegaDescription exact_box(int n, std::int64_t t) {
  OmegaDescription d;
  d.kind = OmegaDescription::Kind::Exact;
  d.n = n;
  d.lower = static_cast<int>(std::min<std::int64_t>(t, n));
  d.upper = d.lower;
  return d;
}

// Omega of the trivial character of P_{p^j}: P'(p^j) for j >= 1.
OmegaDescription trivial_prime_power(int p, int j) {
  const int n = static_cast<int>(ipow(p, j));
  if (j == 0) return exact_box(1, 1);
  OmegaDescription d = exact_box(n, n - 2);
  d.upper = n;
  d.extras = {Partition{n}};
  d.alias = "P'(" + std::to_string(n) + ")";
  return d;
}

OmegaDescription::Slice make_slice(int row, OmegaDescription inner) {
  return {row, std::make_shared<const OmegaDescription>(std::move(inner))};
}

}  // namespace

OmegaDescription predict_omega(const SequenceLabel& s) {
  const int p = s.p;
  const int k = s.k();
  const int n = static_cast<int>(ipow(p, k));
  const auto st = label_stats(s);
  const auto m = little_m(s);
  const auto M = big_M(s);
  if (st.tau == 1) return trivial_prime_power(p, k);
  if (st.tau == 3) {
    OmegaDescription d = exact_box(n, m);
    // Omega((0,x)) at p = 3 misses the 3 x 3 square.
    if (p == 3 && k == 2) d.excluded = {Partition{3, 3, 3}};
    return d;
  }
  const int f = *st.f;
  if (st.tau == 2) {
    OmegaDescription d = exact_box(n, m);
    d.upper = static_cast<int>(M);
    d.slice = make_slice(static_cast<int>(m + 1), trivial_prime_power(p, k - f));
    return d;
  }
  auto slice = make_slice(static_cast<int>(M), predict_omega(s.suffix(f)));
  if (M == m + 1) {
    OmegaDescription d = exact_box(n, m);
    d.upper = static_cast<int>(M);
    d.slice = std::move(slice);
    return d;
  }
  OmegaDescription d;
  d.kind = OmegaDescription::Kind::Sandwich;
  d.n = n;
  d.lower = static_cast<int>(m);
  d.upper = static_cast<int>(M);
  d.no_thin_outside = true;
  d.slice = std::move(slice);
  return d;
}

OmegaDescription predict_omega(const MultisetLabel& label) {
  if (label.is_prime_power()) return predict_omega(label.seqs.front());
  const int n = label.n;
  const auto type = type_tuple(label);
  const auto m = m_composite(label);
  const auto M = big_M_composite(label);
  if (type.x[3] > 0) {
    OmegaDescription d;
    d.kind = OmegaDescription::Kind::Sandwich;
    d.n = n;
    d.lower = static_cast<int>(m);
    d.upper = static_cast<int>(M);
    d.no_thin_outside = true;
    return d;
  }
  OmegaDescription d = exact_box(n, m);
  d.upper = static_cast<int>(M);
  if (is_exceptional(label)) {
    for (const auto& s : label.seqs) {
      const auto st = label_stats(s);
      if (st.tau == 2) d.slice = make_slice(static_cast<int>(m + 1), trivial_prime_power(label.p, s.k() - *st.f));
    }
  }
  return d;
}

Prediction predict(const MultisetLabel& label) {
  Prediction out;
  out.label = label;
  for (const auto& s : label.seqs) out.stats.push_back(label_stats(s));
  out.type = type_tuple(label);
  out.m = m_composite(label);
  out.M = big_M_composite(label);
  out.N = label.is_prime_power() ? n_value(label.seqs.front()) : n_value_composite(label);
  out.omega = predict_omega(label);
  out.theorem_applies = label.p >= 5;
  if (!out.theorem_applies) out.notes.push_back("closed forms are proved for p >= 5 only");
  if (!label.is_prime_power() && is_exceptional(label))
    out.notes.push_back("T = (R-1,1,0,0): m = N - 1");
  return out;
}

std::int64_t observed_M(const PartitionSet& omega) {
  std::int64_t t = 0;
  for (const auto& lambda : omega) t = std::max<std::int64_t>(t, std::max(lambda.first(), lambda.length()));
  return t;
}

std::int64_t observed_m(const PartitionSet& omega) {
  std::int64_t t = omega.n();
  for (const auto& lambda : all_partitions(omega.n()))
    if (!omega.contains(lambda)) t = std::min<std::int64_t>(t, std::max(lambda.first(), lambda.length()) - 1);
  return t;
}

std::string Fraction::to_string() const {
  const BigInt g = boost::multiprecision::gcd(num, den);
  return BigInt(num / g).str() + "/" + BigInt(den / g).str();
}

double Fraction::to_double() const { return num.convert_to<double>() / den.convert_to<double>(); }

RatioBounds omega_intersection_bounds(int n, int p, bool exact) {
  RatioBounds out;
  out.n = n;
  out.p = p;
  const auto reps = orbit_representatives_n(p, n);
  out.m_min = n;
  out.M_min = n;
  for (const auto& label : reps) {
    out.m_min = std::min(out.m_min, m_composite(label));
    out.M_min = std::min(out.M_min, big_M_composite(label));
  }
  const BigInt total = partition_count(n);
  out.lower = {box_count(n, static_cast<int>(out.m_min)), total};
  out.upper = {box_count(n, static_cast<int>(out.M_min)), total};
  if (exact) {
    if (n > kExactRatioMaxN)
      throw ResourceError("exact ratio needs every oracle set of P_" + std::to_string(n) + "; limit is n <= " +
                          std::to_string(kExactRatioMaxN));
    std::optional<PartitionSet> meet;
    for (const auto& label : reps) {
      const auto omega = omega_oracle(label);
      meet = meet ? meet->intersected(omega) : omega;
    }
    out.exact = Fraction{meet->size(), total};
  }
  return out;
}

}  // namespace sylow
