#include "sl2q/sl2restrict.hpp"

#include <algorithm>
#include <vector>

#include "sl2q/error.hpp"

namespace sl2q {

void WeightMultiset::add(long weight, std::int64_t mult) {
  if (mult == 0) return;
  auto& c = counts[weight];
  c += mult;
  if (c == 0) counts.erase(weight);
}

std::int64_t WeightMultiset::total() const {
  std::int64_t t = 0;
  for (const auto& [w, m] : counts) t += m;
  return t;
}

std::int64_t WeightMultiset::count(long weight) const {
  auto it = counts.find(weight);
  return it == counts.end() ? 0 : it->second;
}

bool WeightMultiset::is_symmetric() const {
  return std::all_of(counts.begin(), counts.end(),
                     [&](const auto& kv) { return count(-kv.first) == kv.second; });
}

bool WeightMultiset::all_even() const {
  return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.first % 2 == 0; });
}

bool WeightMultiset::all_odd() const {
  return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.first % 2 != 0; });
}

std::string WeightMultiset::str() const {
  std::string out = "{";
  for (const auto& [w, m] : counts) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(w) + ":" + std::to_string(m);
  }
  return out + "}";
}

std::int64_t SL2Decomposition::dimension() const {
  std::int64_t t = 0;
  for (const auto& [d, m] : irreps) t += d * m;
  return t;
}

bool SL2Decomposition::all_odd() const {
  return std::all_of(irreps.begin(), irreps.end(), [](const auto& kv) { return kv.first % 2 == 1; });
}

WeightMultiset SL2Decomposition::weights() const {
  WeightMultiset w;
  for (const auto& [d, m] : irreps)
    for (long k = d - 1; k >= -(d - 1); k -= 2) w.add(k, m);
  return w;
}

WeightMultiset natural_weights(const Partition& p) {
  WeightMultiset w;
  for (long e : natural_eigenvalues(p)) w.add(e);
  return w;
}

WeightMultiset natural_weights(const UnipotentClass& c) { return natural_weights(c.partition()); }

WeightMultiset exterior_power(const WeightMultiset& w, int k) {
  if (k < 0 || k > w.total()) throw InvalidInput("exterior power degree out of range");
  // dp[j]: weights of Λ^j of the part processed so far
  std::vector<std::map<long, std::int64_t>> dp(k + 1);
  dp[0][0] = 1;
  int seen = 0;
  for (const auto& [weight, mult] : w.counts) {
    std::vector<std::map<long, std::int64_t>> next(k + 1);
    const int top = static_cast<int>(std::min<std::int64_t>(mult, k));
    std::int64_t binom = 1;
    for (int t = 0; t <= top; ++t) {
      if (t > 0) binom = binom * (mult - t + 1) / t;
      for (int j = 0; j + t <= k && j <= seen; ++j)
        for (const auto& [s, c] : dp[j]) next[j + t][s + t * weight] += c * binom;
    }
    seen += static_cast<int>(mult);
    dp = std::move(next);
  }
  WeightMultiset out;
  for (const auto& [s, c] : dp[k]) out.add(s, c);
  return out;
}

namespace {

// sums of ±entries, tagged by the parity of the number of '+' signs
std::map<std::pair<long, int>, std::int64_t> signed_sums(const HVector& h) {
  std::map<std::pair<long, int>, std::int64_t> acc{{{0, 0}, 1}};
  for (long d : h.entries) {
    std::map<std::pair<long, int>, std::int64_t> next;
    for (const auto& [key, c] : acc) {
      next[{key.first + d, key.second ^ 1}] += c;
      next[{key.first - d, key.second}] += c;
    }
    acc = std::move(next);
  }
  return acc;
}

long halve(long s) {
  if (s % 2 != 0) throw DataError("spin sign sum is odd; h-vector is not genuine");
  return s / 2;
}

}  // namespace

WeightMultiset spin_weights(const HVector& h) {
  WeightMultiset out;
  for (const auto& [key, c] : signed_sums(h)) out.add(halve(key.first), c);
  return out;
}

WeightMultiset spin_weights(const UnipotentClass& c) {
  if (c.group().series != Series::B) throw InvalidInput("spin weights need a type B class");
  return spin_weights(h_vector(c));
}

WeightMultiset semispin_weights(const HVector& h, Parity parity) {
  const int want = parity == Parity::even ? 0 : 1;
  WeightMultiset out;
  for (const auto& [key, c] : signed_sums(h))
    if (key.second == want) out.add(halve(key.first), c);
  return out;
}

WeightMultiset semispin_weights(const UnipotentClass& c, Parity parity) {
  if (c.group().series != Series::D) throw InvalidInput("semispin weights need a type D class");
  return semispin_weights(h_vector(c), parity);
}

std::vector<long> fundamental_coweight_values(const RootSystem& rs, const WeightedDiagram& wd) {
  std::vector<long> w(wd.weights.begin(), wd.weights.end());
  std::vector<long> out;
  for (const auto& q : inverse_cartan_apply(rs, w)) {
    if (q.get_den() != 1) throw DataError("C^{-1}[u] is not integral for " + wd.str());
    out.push_back(q.get_num().get_si());
  }
  return out;
}

WeightMultiset restrict_highest_weight(const RootSystem& rs, const UnipotentClass& c, const Weight& hw) {
  if (c.group() != rs.group()) throw InvalidInput("class does not belong to " + rs.group().name());
  const auto values = fundamental_coweight_values(rs, c.diagram());
  WeightMultiset out;
  for (const auto& [v, m] : evaluate_character(rs, hw, values)) out.add(v, m);
  return out;
}

WeightMultiset restrict_fundamental(const RootSystem& rs, const UnipotentClass& c, int i) {
  if (i < 1 || i > rs.rank()) throw InvalidInput("fundamental weight index out of range");
  Weight hw(rs.rank(), 0);
  hw[i - 1] = 1;
  return restrict_highest_weight(rs, c, hw);
}

WeightMultiset restrict_adjoint(const RootSystem& rs, const WeightedDiagram& wd) {
  WeightMultiset out;
  out.add(0, rs.rank());
  for (const auto& root : rs.positive_roots()) {
    long v = 0;
    for (int j = 0; j < rs.rank(); ++j) v += root[j] * wd.weights[j];
    out.add(v);
    out.add(-v);
  }
  return out;
}

SL2Decomposition sl2_decompose(const WeightMultiset& w) {
  if (!w.is_symmetric()) throw DataError("weight multiset is not symmetric: " + w.str());
  SL2Decomposition dec;
  for (const auto& [m, c] : w.counts) {
    if (m < 0) continue;
    const std::int64_t k = c - w.count(m + 2);
    if (k < 0) throw DataError("weight multiset is not an sl2 character: " + w.str());
    if (k > 0) dec.irreps[static_cast<int>(m + 1)] = k;
  }
  return dec;
}

IntPoly chebyshev_class(int d) {
  if (d < 1) throw InvalidInput("sl2 module dimension must be positive");
  IntPoly prev = IntPoly::constant(1), cur = IntPoly::x();
  if (d == 1) return prev;
  for (int n = 2; n < d; ++n) {
    IntPoly next = IntPoly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CharacterPoly char_poly(const SL2Decomposition& dec) {
  CharacterPoly out;
  for (const auto& [d, m] : dec.irreps) out.poly += static_cast<long>(m) * chebyshev_class(d);
  return out;
}

CharacterPoly char_poly(const WeightMultiset& w) { return char_poly(sl2_decompose(w)); }

CharacterPoly to_psl2_variable(const CharacterPoly& p) {
  if (p.side != Side::SL2) throw InvalidInput("polynomial is already on the PSL2 side");
  const auto& c = p.poly.coeffs();
  // x^(2k) = (x'+1)^k
  IntPoly q;
  IntPoly power = IntPoly::constant(1);
  const IntPoly shift({1, 1});
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % 2 == 1) {
      if (c[i] != 0) throw InvalidInput("odd-degree term in " + p.str() + "; not a PSL2 class");
      continue;
    }
    if (i > 0) power = power * shift;
    q += IntPoly({c[i]}) * power;
  }
  return CharacterPoly{q, Side::PSL2};
}

long dynkin_index_partition(GroupType g, const Partition& p) {
  if (!g.is_classical()) throw InvalidInput("partition index needs a classical group");
  long s = 0;
  for (long d : p.parts) s += d * (d * d - 1) / 6;
  if (g.series == Series::B || g.series == Series::D) {
    if (s % 2 != 0) throw DataError("odd per-part sum for orthogonal partition " + p.str());
    s /= 2;
  }
  return s;
}

long dynkin_index_roots(const RootSystem& rs, const WeightedDiagram& wd) {
  long s = 0;
  for (const auto& root : rs.positive_roots()) {
    long v = 0;
    for (int j = 0; j < rs.rank(); ++j) v += root[j] * wd.weights[j];
    s += 2 * v * v;
  }
  const long denom = 4L * rs.dual_coxeter();
  if (s % denom != 0) throw DataError("root-sum index is not an integer for " + wd.str());
  return s / denom;
}

long dynkin_index(const RootSystem& rs, const UnipotentClass& c) {
  if (c.group() != rs.group()) throw InvalidInput("class does not belong to " + rs.group().name());
  const long by_roots = dynkin_index_roots(rs, c.diagram());
  if (c.is_classical()) {
    const long by_parts = dynkin_index_partition(c.group(), c.partition());
    if (by_parts != by_roots)
      throw DataError("index routes disagree for " + c.name() + ": " + std::to_string(by_parts) +
                      " vs " + std::to_string(by_roots));
  } else if (const auto& pub = c.exceptional().published_index; pub && *pub != by_roots) {
    throw DataError("index of " + c.name() + " disagrees with the table: " + std::to_string(by_roots) +
                    " vs " + std::to_string(*pub));
  }
  return by_roots;
}

}  // namespace sl2q
