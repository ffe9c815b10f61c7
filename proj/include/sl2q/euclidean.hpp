#pragma once

// Generic linear algebra over a Euclidean domain: Smith normal form, Koszul
// complexes and their homology.  A Ring supplies
//   Elem zero(), one(); bool is_zero(e); long norm(e);
//   pair<Elem,Elem> divmod(a, b); Elem normal(e)   (canonical associate)
// and Elem supports +, -, *.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "sl2q/error.hpp"
#include "sl2q/poly.hpp"

namespace sl2q {

struct IntegerRing {
  using Elem = mpz_class;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return a == 0; }
  long norm(const Elem& a) const {
    mpz_class v = abs(a);
    return v.fits_slong_p() ? v.get_si() : std::numeric_limits<long>::max();
  }
  std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {q, r};
  }
  Elem normal(const Elem& a) const { return abs(a); }
  bool is_unit(const Elem& a) const { return a == 1 || a == -1; }
  std::string str(const Elem& a) const { return a.get_str(); }
};

struct FpPolyRing {
  using Elem = FpPoly;
  long p;
  explicit FpPolyRing(long prime) : p(prime) {}
  Elem zero() const { return FpPoly(p, {}); }
  Elem one() const { return FpPoly::constant(p, 1); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  long norm(const Elem& a) const { return a.degree(); }
  std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const { return sl2q::divmod(a, b); }
  Elem normal(const Elem& a) const { return a.monic(); }
  bool is_unit(const Elem& a) const { return a.is_unit(); }
  std::string str(const Elem& a) const { return a.str(); }
};

template <class E>
using Matrix = std::vector<std::vector<E>>;

// A finitely generated module R^free ⊕ ⊕_j R/(torsion_j), torsion_j non-units.
template <class E>
struct ModuleDesc {
  int free_rank = 0;
  std::vector<E> torsion;
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const ModuleDesc&) const = default;
};

// Nonzero invariant factors of m (normalized, divisibility chain).
template <class Ring>
std::vector<typename Ring::Elem> smith_diagonal(const Ring& R, Matrix<typename Ring::Elem> m) {
  using E = typename Ring::Elem;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<E> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // pivot of minimal norm in the trailing block
      std::size_t pi = rows, pj = cols;
      long best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (!R.is_zero(m[i][j]) && (pi == rows || R.norm(m[i][j]) < best)) {
            pi = i;
            pj = j;
            best = R.norm(m[i][j]);
          }
      if (pi == rows) return diag;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (R.is_zero(m[i][t])) continue;
        const E q = R.divmod(m[i][t], m[t][t]).first;
        for (std::size_t j = t; j < cols; ++j) m[i][j] = m[i][j] - q * m[t][j];
        if (!R.is_zero(m[i][t])) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (R.is_zero(m[t][j])) continue;
        const E q = R.divmod(m[t][j], m[t][t]).first;
        for (std::size_t i = t; i < rows; ++i) m[i][j] = m[i][j] - q * m[i][t];
        if (!R.is_zero(m[t][j])) clean = false;
      }
      if (!clean) continue;
      // enforce divisibility of the remaining block by the pivot
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!R.is_zero(R.divmod(m[i][j], m[t][t]).second)) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] = m[t][k] + m[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(R.normal(m[t][t]));
  }
  return diag;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// k-element subsets of {0..m-1} in lexicographic order.
inline std::vector<std::vector<int>> subsets(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < m; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Koszul complex on gens: d[i-1] is the matrix of ∂_i : Λ^i → Λ^{i-1}
// (columns index i-subsets).  ∂(e_J) = Σ_k (-1)^{i-k} a_{j_k} e_{J∖j_k},
// k = 1..i, so ∂_1 = (a_1 … a_m) and for m = 2, ∂_2 = (a_2, -a_1)^T.
template <class Ring>
std::vector<Matrix<typename Ring::Elem>> koszul_complex_build(const Ring& R,
                                                              const std::vector<typename Ring::Elem>& gens) {
  using E = typename Ring::Elem;
  const int m = static_cast<int>(gens.size());
  if (m < 1) throw InvalidInput("Koszul complex needs at least one generator");
  std::vector<Matrix<E>> d;
  for (int i = 1; i <= m; ++i) {
    const auto src = subsets(m, i);
    const auto dst = subsets(m, i - 1);
    Matrix<E> mat(dst.size(), std::vector<E>(src.size(), R.zero()));
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (int k = 1; k <= i; ++k) {
        std::vector<int> face = src[c];
        const int j = face[k - 1];
        face.erase(face.begin() + (k - 1));
        const auto row = std::lower_bound(dst.begin(), dst.end(), face) - dst.begin();
        mat[row][c] = (i - k) % 2 == 0 ? gens[j] : R.zero() - gens[j];
      }
    }
    d.push_back(std::move(mat));
  }
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    const auto& a = d[i];
    const auto& b = d[i + 1];
    for (std::size_t r = 0; r < a.size(); ++r)
      for (std::size_t c = 0; c < b[0].size(); ++c) {
        E s = R.zero();
        for (std::size_t k = 0; k < b.size(); ++k) s = s + a[r][k] * b[k][c];
        if (!R.is_zero(s)) throw DataError("Koszul differentials do not square to zero");
      }
  }
  return d;
}

// Homology of 0 → C_m → … → C_0 → 0 from the SNF of every differential.
// d[i-1] : C_i → C_{i-1}; ranks[i] = rank of C_i.
template <class Ring>
std::vector<ModuleDesc<typename Ring::Elem>> snf_homology(const Ring& R,
                                                          const std::vector<Matrix<typename Ring::Elem>>& d,
                                                          const std::vector<int>& ranks) {
  using E = typename Ring::Elem;
  const int top = static_cast<int>(ranks.size()) - 1;
  std::vector<std::vector<E>> inv(top + 2);  // inv[i]: invariant factors of ∂_i
  for (int i = 1; i <= top; ++i) inv[i] = smith_diagonal(R, d[i - 1]);
  std::vector<ModuleDesc<E>> out;
  for (int i = 0; i <= top; ++i) {
    ModuleDesc<E> h;
    const int rank_out = i >= 1 ? static_cast<int>(inv[i].size()) : 0;
    const auto& incoming = inv[i + 1];
    h.free_rank = ranks[i] - rank_out - static_cast<int>(incoming.size());
    for (const auto& f : incoming)
      if (!R.is_unit(f)) h.torsion.push_back(f);
    out.push_back(std::move(h));
  }
  return out;
}

template <class Ring>
std::vector<ModuleDesc<typename Ring::Elem>> koszul_snf_homology(const Ring& R,
                                                                 const std::vector<typename Ring::Elem>& gens) {
  const int m = static_cast<int>(gens.size());
  std::vector<int> ranks;
  for (int i = 0; i <= m; ++i) ranks.push_back(static_cast<int>(binomial(m, i)));
  return snf_homology(R, koszul_complex_build(R, gens), ranks);
}

// Closed form over a PID: H_i = (R/(a))^{C(m-1,i)} with a = gcd of the
// generators.  a = 0 is outside the hypothesis and rejected.
template <class Ring>
std::vector<ModuleDesc<typename Ring::Elem>> koszul_homology_lemma(const Ring& R, const typename Ring::Elem& a,
                                                                   int m) {
  using E = typename Ring::Elem;
  if (m < 1) throw InvalidInput("Koszul lemma needs m >= 1");
  if (R.is_zero(a)) throw InvalidInput("Koszul lemma needs a nonzero gcd; use the SNF route");
  std::vector<ModuleDesc<E>> out(m + 1);
  if (R.is_unit(a)) return out;
  for (int i = 0; i <= m; ++i) out[i].torsion.assign(binomial(m - 1, i), R.normal(a));
  return out;
}

template <class Ring>
typename Ring::Elem ring_gcd(const Ring& R, const std::vector<typename Ring::Elem>& xs) {
  typename Ring::Elem g = R.zero();
  for (const auto& x : xs) {
    typename Ring::Elem a = g, b = x;
    while (!R.is_zero(b)) {
      auto r = R.divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    g = R.normal(a);
  }
  return g;
}

}  // namespace sl2q
