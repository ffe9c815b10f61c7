#include "sl2q/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

#include "sl2q/error.hpp"

namespace sl2q {

namespace {

bool valid_rank(Series s, int r) {
  switch (s) {
    case Series::A: return r >= 1;
    case Series::B: return r >= 2;
    case Series::C: return r >= 2;
    case Series::D: return r >= 4;
    case Series::E: return r >= 6 && r <= 8;
    case Series::F: return r == 4;
    case Series::G: return r == 2;
  }
  return false;
}

std::vector<int> fundamental_degrees(GroupType g) {
  const int r = g.rank;
  std::vector<int> d;
  switch (g.series) {
    case Series::A:
      for (int i = 2; i <= r + 1; ++i) d.push_back(i);
      break;
    case Series::B:
    case Series::C:
      for (int i = 1; i <= r; ++i) d.push_back(2 * i);
      break;
    case Series::D:
      for (int i = 1; i < r; ++i) d.push_back(2 * i);
      d.push_back(r);
      break;
    case Series::E:
      if (r == 6) d = {2, 5, 6, 8, 9, 12};
      if (r == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (r == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Series::F: d = {2, 6, 8, 12}; break;
    case Series::G: d = {2, 6}; break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

int dual_coxeter_number(GroupType g) {
  const int r = g.rank;
  switch (g.series) {
    case Series::A: return r + 1;
    case Series::B: return 2 * r - 1;
    case Series::C: return r + 1;
    case Series::D: return 2 * r - 2;
    case Series::E: return r == 6 ? 12 : (r == 7 ? 18 : 30);
    case Series::F: return 9;
    case Series::G: return 4;
  }
  return 0;
}

// Gauss-Jordan inverse; also returns the determinant.
RatMatrix invert(const IntMatrix& m, mpq_class& det) {
  const std::size_t n = m.size();
  RatMatrix a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw DataError("singular Cartan matrix");
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const mpq_class inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RatMatrix out(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

std::vector<RootVector> generate_positive_roots(const IntMatrix& c) {
  const int r = static_cast<int>(c.size());
  std::vector<RootVector> roots;
  std::set<RootVector> seen;
  std::vector<RootVector> frontier;
  for (int i = 0; i < r; ++i) {
    RootVector e(r, 0);
    e[i] = 1;
    roots.push_back(e);
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < r; ++i) {
        long pairing = 0;
        for (int j = 0; j < r; ++j) pairing += beta[j] * c[j][i];
        // alpha_i-string through beta: p steps down, q steps up, p - q = <beta, alpha_i^vee>
        int p = 0;
        RootVector down = beta;
        while (true) {
          --down[i];
          if (!seen.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          RootVector up = beta;
          ++up[i];
          if (seen.insert(up).second) {
            roots.push_back(up);
            next.push_back(up);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::stable_sort(roots.begin(), roots.end(), [](const RootVector& a, const RootVector& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
  return roots;
}

// Squared simple-root lengths, shortest = 1, from C[i][j] len_j = C[j][i] len_i.
std::vector<long> symmetrizer(const IntMatrix& c) {
  const std::size_t n = c.size();
  std::vector<mpq_class> len(n, 0);
  len[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || c[i][j] == 0 || len[j] != 0) continue;
      mpq_class ratio(c[j][i], c[i][j]);
      ratio.canonicalize();
      len[j] = len[i] * ratio;
      stack.push_back(j);
    }
  }
  mpq_class lo = *std::min_element(len.begin(), len.end());
  std::vector<long> out;
  for (auto& l : len) {
    mpq_class v = l / lo;
    if (v.get_den() != 1) throw DataError("non-integral root length ratio");
    out.push_back(v.get_num().get_si());
  }
  return out;
}

}  // namespace

GroupType GroupType::make(Series series, int rank, std::string* note) {
  if (series == Series::C && rank == 1) {
    if (note) *note = "C1 canonicalized to A1";
    return {Series::A, 1};
  }
  if (series == Series::D && rank == 3) {
    if (note) *note = "D3 canonicalized to A3";
    return {Series::A, 3};
  }
  if (!valid_rank(series, rank)) {
    throw InvalidInput("unsupported rank " + std::to_string(rank) + " for series " +
                       std::string(1, static_cast<char>(series)));
  }
  return {series, rank};
}

GroupType GroupType::parse(std::string_view text, std::string* note) {
  if (text.size() < 2) throw InvalidInput("cannot parse group '" + std::string(text) + "'");
  const char s = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (s < 'A' || s > 'G') throw InvalidInput("unknown series in '" + std::string(text) + "'");
  int rank = 0;
  auto rest = text.substr(1);
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), rank);
  if (ec != std::errc() || ptr != rest.data() + rest.size())
    throw InvalidInput("cannot parse rank in '" + std::string(text) + "'");
  return make(static_cast<Series>(s), rank, note);
}

std::string GroupType::name() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

bool GroupType::is_classical() const {
  return series == Series::A || series == Series::B || series == Series::C || series == Series::D;
}

int GroupType::natural_dimension() const {
  switch (series) {
    case Series::A: return rank + 1;
    case Series::B: return 2 * rank + 1;
    case Series::C:
    case Series::D: return 2 * rank;
    default: return 0;
  }
}

int GroupType::dimension() const {
  const int r = rank;
  switch (series) {
    case Series::A: return r * (r + 2);
    case Series::B:
    case Series::C: return r * (2 * r + 1);
    case Series::D: return r * (2 * r - 1);
    case Series::E: return r == 6 ? 78 : (r == 7 ? 133 : 248);
    case Series::F: return 52;
    case Series::G: return 14;
  }
  return 0;
}

IntMatrix cartan_matrix(GroupType g) {
  const int r = g.rank;
  IntMatrix c(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  // a = <alpha_i, alpha_j^vee>, b = <alpha_j, alpha_i^vee>
  auto link = [&](int i, int j, long a = -1, long b = -1) {
    c[i][j] = a;
    c[j][i] = b;
  };
  switch (g.series) {
    case Series::A:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 2, r - 1, -2, -1);
      break;
    case Series::C:
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 2, r - 1, -1, -2);
      break;
    case Series::D:
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
    case Series::E:
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
      break;
    case Series::F:
      link(0, 1);
      link(1, 2, -2, -1);
      link(2, 3);
      break;
    case Series::G:
      link(0, 1, -1, -3);
      break;
  }
  return c;
}

RootSystem::RootSystem(GroupType group) : group_(group) {
  if (!valid_rank(group.series, group.rank))
    throw InvalidInput("unsupported rank for " + group.name());
  cartan_ = cartan_matrix(group);
  mpq_class det;
  inverse_cartan_ = invert(cartan_, det);
  cartan_det_ = det.get_num().get_si();
  positive_roots_ = generate_positive_roots(cartan_);
  lengths_ = symmetrizer(cartan_);
  degrees_ = fundamental_degrees(group);
  dual_coxeter_ = dual_coxeter_number(group);
  for (int i = 0; i < rank(); ++i) {
    mpz_class d = weyl_dimension(*this, WeightVector::fundamental_weight(rank(), i));
    fundamental_dims_.push_back(d.get_si());
  }
}

RootSystem build_root_system(GroupType group) { return RootSystem(group); }

long RootSystem::root_length(const RootVector& root) const {
  long twice = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) twice += root[i] * root[j] * cartan_[i][j] * lengths_[j];
  return twice / 2;
}

long RootSystem::long_root_length() const {
  return *std::max_element(lengths_.begin(), lengths_.end());
}

Weight RootSystem::root_as_weight(const RootVector& root) const {
  Weight w(rank(), 0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) w[j] += root[i] * cartan_[i][j];
  return w;
}

std::vector<mpq_class> inverse_cartan_apply(const RootSystem& rs, std::span<const long> v) {
  if (static_cast<int>(v.size()) != rs.rank())
    throw InvalidInput("vector length " + std::to_string(v.size()) + " does not match rank " +
                       std::to_string(rs.rank()));
  std::vector<mpq_class> out(rs.rank(), 0);
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) out[i] += rs.inverse_cartan()[i][j] * v[j];
  return out;
}

WeightVector WeightVector::fundamental(const Weight& w) {
  WeightVector out;
  out.basis = Basis::fundamental_weight;
  for (long x : w) out.coords.emplace_back(x);
  return out;
}

WeightVector WeightVector::fundamental_weight(int rank, int index, long multiple) {
  Weight w(rank, 0);
  w.at(index) = multiple;
  return fundamental(w);
}

WeightVector to_basis(const RootSystem& rs, const WeightVector& w, Basis target) {
  if (static_cast<int>(w.coords.size()) != rs.rank()) throw InvalidInput("weight has wrong length");
  if (w.basis == target) return w;
  WeightVector out;
  out.basis = target;
  out.coords.assign(rs.rank(), 0);
  const int r = rs.rank();
  if (target == Basis::fundamental_weight) {
    // m = C^T n
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i) out.coords[j] += w.coords[i] * rs.cartan()[i][j];
  } else {
    // n = (C^{-1})^T m
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i) out.coords[j] += w.coords[i] * rs.inverse_cartan()[i][j];
  }
  for (auto& x : out.coords) x.canonicalize();
  return out;
}

Weight integral_weight(const RootSystem& rs, const WeightVector& w) {
  const WeightVector f = to_basis(rs, w, Basis::fundamental_weight);
  Weight out;
  for (const auto& x : f.coords) {
    if (x.get_den() != 1) throw InvalidInput("weight is not integral");
    out.push_back(x.get_num().get_si());
  }
  return out;
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](long x) { return x >= 0; });
}

Weight dominant_representative(const RootSystem& rs, Weight w) {
  const int r = rs.rank();
  while (true) {
    int k = -1;
    for (int i = 0; i < r; ++i)
      if (w[i] < 0) {
        k = i;
        break;
      }
    if (k < 0) return w;
    const long c = w[k];
    for (int j = 0; j < r; ++j) w[j] -= c * rs.cartan()[k][j];
  }
}

mpz_class weyl_dimension(const RootSystem& rs, const WeightVector& hw) {
  const Weight lambda = integral_weight(rs, hw);
  if (!is_dominant(lambda)) throw InvalidInput("highest weight is not dominant");
  const auto& len = rs.simple_root_lengths();
  mpq_class prod = 1;
  for (const auto& root : rs.positive_roots()) {
    long num = 0, den = 0;
    for (int j = 0; j < rs.rank(); ++j) {
      num += (lambda[j] + 1) * root[j] * len[j];
      den += root[j] * len[j];
    }
    prod *= mpq_class(num, den);
  }
  prod.canonicalize();
  if (prod.get_den() != 1) throw DataError("Weyl dimension is not an integer");
  return prod.get_num();
}

}  // namespace sl2q
