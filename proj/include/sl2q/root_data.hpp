#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sl2q {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A simple simply-connected complex group, named by its Dynkin type.
//
// Rank constraints: A r>=1, B r>=2, C r>=2, D r>=4, E r in {6,7,8}, F r=4,
// G r=2.  C1 and D3 are accepted by make()/parse() and canonicalized to A1 and
// A3; the optional `note` receives a human-readable warning when that happens.
struct GroupType {
  Series series = Series::A;
  int rank = 1;

  static GroupType make(Series series, int rank, std::string* note = nullptr);
  static GroupType parse(std::string_view text, std::string* note = nullptr);

  std::string name() const;
  bool is_classical() const;
  // Dimension of the natural module for classical series; 0 otherwise.
  int natural_dimension() const;
  int dimension() const;

  auto operator<=>(const GroupType&) const = default;
};

using IntMatrix = std::vector<std::vector<long>>;
using RatMatrix = std::vector<std::vector<mpq_class>>;
// Integer coordinates in the simple-root basis.
using RootVector = std::vector<int>;
// Integer coordinates in the fundamental-weight basis.
using Weight = std::vector<long>;

// Exact root-theoretic data in Bourbaki numbering.  Immutable once built.
//
// Convention: cartan()[i][j] = <alpha_i, alpha_j^vee>, so that row i of the
// Cartan matrix is alpha_i in fundamental-weight coordinates and
// C^{-1} applied to (alpha_j(h))_j gives (varpi_i(h))_i.
class RootSystem {
 public:
  explicit RootSystem(GroupType group);

  GroupType group() const { return group_; }
  int rank() const { return group_.rank; }
  int dimension() const { return static_cast<int>(2 * positive_roots_.size()) + rank(); }

  const IntMatrix& cartan() const { return cartan_; }
  const RatMatrix& inverse_cartan() const { return inverse_cartan_; }
  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }
  const RootVector& highest_root() const { return positive_roots_.back(); }
  // Squared lengths of the simple roots, shortest = 1.
  const std::vector<long>& simple_root_lengths() const { return lengths_; }
  long root_length(const RootVector& root) const;
  long long_root_length() const;
  // Fundamental degrees e_1 = 2 <= ... <= e_r.
  const std::vector<int>& degrees() const { return degrees_; }
  int dual_coxeter() const { return dual_coxeter_; }
  const std::vector<std::int64_t>& fundamental_rep_dims() const { return fundamental_dims_; }
  // det C, the order of the centre of the simply-connected group.
  long cartan_determinant() const { return cartan_det_; }

  // Root in fundamental-weight coordinates (row combination of C).
  Weight root_as_weight(const RootVector& root) const;

 private:
  GroupType group_;
  IntMatrix cartan_;
  RatMatrix inverse_cartan_;
  std::vector<RootVector> positive_roots_;
  std::vector<long> lengths_;
  std::vector<int> degrees_;
  int dual_coxeter_ = 0;
  long cartan_det_ = 0;
  std::vector<std::int64_t> fundamental_dims_;
};

RootSystem build_root_system(GroupType group);

// Cartan matrix alone (cheap; no roots).
IntMatrix cartan_matrix(GroupType group);

// C^{-1} v as exact rationals.  Throws InvalidInput on a length mismatch.
std::vector<mpq_class> inverse_cartan_apply(const RootSystem& rs, std::span<const long> v);

enum class Basis { simple_root, fundamental_weight };

struct WeightVector {
  Basis basis = Basis::fundamental_weight;
  std::vector<mpq_class> coords;

  static WeightVector fundamental(const Weight& w);
  static WeightVector fundamental_weight(int rank, int index, long multiple = 1);
  bool operator==(const WeightVector&) const = default;
};

WeightVector to_basis(const RootSystem& rs, const WeightVector& w, Basis target);
// Integer fundamental-weight coordinates; throws InvalidInput when not integral.
Weight integral_weight(const RootSystem& rs, const WeightVector& w);

bool is_dominant(const Weight& w);
Weight dominant_representative(const RootSystem& rs, Weight w);

// Dimension of V(hw) by the Weyl product formula.  hw dominant.
mpz_class weyl_dimension(const RootSystem& rs, const WeightVector& hw);

// Multiplicities of the dominant weights of V(hw) (Freudenthal recursion).
std::map<Weight, std::int64_t> dominant_multiplicities(const RootSystem& rs, const Weight& hw);

// Full weight multiset of V(hw), keyed by fundamental-weight coordinates.
// Throws InvalidInput when hw is not dominant integral.
std::map<Weight, std::int64_t> weight_multiplicities(const RootSystem& rs, const WeightVector& hw);

// Weyl orbit of a dominant weight.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant);

// Character of V(hw) evaluated on a coweight: `coweight_values[i]` is
// varpi_i(h); the result maps lambda(h) to its total multiplicity.
std::map<long, std::int64_t> evaluate_character(const RootSystem& rs, const Weight& hw,
                                                std::span<const long> coweight_values);

}  // namespace sl2q
