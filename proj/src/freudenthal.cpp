#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_set>

#include "sl2q/error.hpp"
#include "sl2q/root_data.hpp"

namespace sl2q {

namespace {

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (long x : w) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

// Integer multiple of the W-invariant form on fundamental-weight coordinates:
// (varpi_i, varpi_j) = (C^{-1})_{ij} len_j / 2, scaled by 2 det C.
IntMatrix scaled_gram(const RootSystem& rs) {
  const int r = rs.rank();
  IntMatrix g(r, std::vector<long>(r));
  const long det = rs.cartan_determinant();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      mpq_class v = rs.inverse_cartan()[i][j] * det * rs.simple_root_lengths()[j];
      v.canonicalize();
      if (v.get_den() != 1) throw DataError("Gram matrix is not integral");
      g[i][j] = v.get_num().get_si();
    }
  return g;
}

long form(const IntMatrix& g, const Weight& a, const Weight& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * g[i][j] * b[j];
  }
  return s;
}

}  // namespace

std::map<Weight, std::int64_t> dominant_multiplicities(const RootSystem& rs, const Weight& hw) {
  if (static_cast<int>(hw.size()) != rs.rank()) throw InvalidInput("weight has wrong length");
  if (!is_dominant(hw)) throw InvalidInput("highest weight is not dominant");
  const int r = rs.rank();
  std::vector<Weight> roots;
  std::vector<int> heights;
  for (const auto& a : rs.positive_roots()) {
    roots.push_back(rs.root_as_weight(a));
    int h = 0;
    for (int x : a) h += x;
    heights.push_back(h);
  }

  // Dominant weights of V(hw), with their depth below hw.
  std::map<Weight, int> depth{{hw, 0}};
  std::deque<Weight> queue{hw};
  while (!queue.empty()) {
    Weight mu = queue.front();
    queue.pop_front();
    const int d = depth[mu];
    for (std::size_t k = 0; k < roots.size(); ++k) {
      Weight nu = mu;
      for (int i = 0; i < r; ++i) nu[i] -= roots[k][i];
      if (!is_dominant(nu)) continue;
      auto [it, inserted] = depth.emplace(nu, d + heights[k]);
      if (inserted) queue.push_back(nu);
    }
  }
  std::vector<std::pair<int, Weight>> order;
  for (const auto& [w, d] : depth) order.emplace_back(d, w);
  std::sort(order.begin(), order.end());

  const IntMatrix g = scaled_gram(rs);
  Weight lr = hw;
  for (auto& x : lr) x += 1;
  const long top = form(g, lr, lr);

  std::map<Weight, std::int64_t> mult;
  mult[hw] = 1;
  for (std::size_t n = 1; n < order.size(); ++n) {
    const Weight& mu = order[n].second;
    std::int64_t sum = 0;
    for (const auto& a : roots) {
      Weight nu = mu;
      while (true) {
        for (int i = 0; i < r; ++i) nu[i] += a[i];
        auto it = mult.find(dominant_representative(rs, nu));
        if (it == mult.end()) break;
        sum += it->second * form(g, nu, a);
      }
    }
    Weight mr = mu;
    for (auto& x : mr) x += 1;
    const long denom = top - form(g, mr, mr);
    if (denom <= 0 || (2 * sum) % denom != 0) throw DataError("Freudenthal recursion failed");
    mult[mu] = 2 * sum / denom;
  }
  return mult;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant) {
  if (!is_dominant(dominant)) throw InvalidInput("orbit seed is not dominant");
  const int r = rs.rank();
  std::unordered_set<Weight, WeightHash> seen{dominant};
  std::vector<Weight> out{dominant};
  for (std::size_t n = 0; n < out.size(); ++n) {
    for (int i = 0; i < r; ++i) {
      const long c = out[n][i];
      // Moving only down (c > 0) still reaches the whole orbit.
      if (c <= 0) continue;
      Weight w = out[n];
      for (int j = 0; j < r; ++j) w[j] -= c * rs.cartan()[i][j];
      if (seen.insert(w).second) out.push_back(std::move(w));
    }
  }
  return out;
}

std::map<Weight, std::int64_t> weight_multiplicities(const RootSystem& rs, const WeightVector& hw) {
  const Weight lambda = integral_weight(rs, hw);
  std::map<Weight, std::int64_t> out;
  for (const auto& [mu, m] : dominant_multiplicities(rs, lambda))
    for (auto& w : weyl_orbit(rs, mu)) out.emplace(std::move(w), m);
  return out;
}

std::map<long, std::int64_t> evaluate_character(const RootSystem& rs, const Weight& hw,
                                                std::span<const long> coweight_values) {
  if (static_cast<int>(coweight_values.size()) != rs.rank())
    throw InvalidInput("coweight has wrong length");
  static std::mutex lock;
  static std::map<std::pair<std::string, Weight>, std::map<Weight, std::int64_t>> cache;
  std::map<Weight, std::int64_t> dom;
  {
    std::lock_guard guard(lock);
    auto key = std::make_pair(rs.group().name(), hw);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, dominant_multiplicities(rs, hw)).first;
    dom = it->second;
  }
  std::map<long, std::int64_t> out;
  for (const auto& [mu, m] : dom) {
    for (const auto& w : weyl_orbit(rs, mu)) {
      long v = 0;
      for (int i = 0; i < rs.rank(); ++i) v += w[i] * coweight_values[i];
      out[v] += m;
    }
  }
  return out;
}

}  // namespace sl2q
