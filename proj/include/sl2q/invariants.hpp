#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2q/orbits.hpp"
#include "sl2q/root_data.hpp"

namespace sl2q {

// Isomorphism class of a (finitely generated) abelian homotopy group, kept
// symbolic.  cyclic(1) is trivial and cyclic(0) is Z.
class FiniteAbelianGroupDesc {
 public:
  enum class Kind { trivial, cyclic, sum, order4_undetermined, infinite_cyclic };

  static FiniteAbelianGroupDesc trivial() { return {Kind::trivial, {}}; }
  static FiniteAbelianGroupDesc cyclic(long n);
  static FiniteAbelianGroupDesc sum(std::vector<long> orders);
  // Z/2 ⊕ Z/2 or Z/4, extension not resolved.
  static FiniteAbelianGroupDesc order4_undetermined() { return {Kind::order4_undetermined, {}}; }
  static FiniteAbelianGroupDesc infinite_cyclic() { return {Kind::infinite_cyclic, {}}; }
  static FiniteAbelianGroupDesc parse(const std::string& text);

  Kind kind() const { return kind_; }
  const std::vector<long>& orders() const { return orders_; }
  std::string str() const;  // "0", "Z/2", "Z/2+Z/2", "Z/4|Z/2+Z/2", "Z"
  bool operator==(const FiniteAbelianGroupDesc&) const = default;

 private:
  FiniteAbelianGroupDesc(Kind k, std::vector<long> o) : kind_(k), orders_(std::move(o)) {}
  Kind kind_;
  std::vector<long> orders_;
};

using GroupDesc = FiniteAbelianGroupDesc;

struct LowHomotopy {
  GroupDesc pi1 = GroupDesc::trivial();
  GroupDesc pi2 = GroupDesc::trivial();
  GroupDesc pi3 = GroupDesc::trivial();
};

struct HigherHomotopy {
  GroupDesc pi4 = GroupDesc::trivial();
  GroupDesc pi5 = GroupDesc::trivial();
  GroupDesc pi6 = GroupDesc::trivial();
  bool operator==(const HigherHomotopy&) const = default;
};

struct HomotopyReport {
  int dim_X = 0;
  bool trivial_class = false;
  bool even = false;
  bool quite_even = false;
  long dynkin_index = 0;
  GroupDesc pi1 = GroupDesc::trivial();
  GroupDesc pi2 = GroupDesc::trivial();
  GroupDesc pi3 = GroupDesc::trivial();
  std::optional<GroupDesc> pi4, pi5, pi6;
  std::vector<int> sphere_degrees;
  std::vector<std::string> notes;
  bool operator==(const HomotopyReport&) const = default;
};

// Complex dimension of X_u(G) = dim G - 3.
int dim_X(GroupType g);

// all parts of the same parity
bool even_partition(const Partition& p);
// A/C: all parts odd.  B/D: all parts odd and prod d_i = ±1 mod 8.
// InvalidInput for the trivial class or an invalid partition.
bool quite_even_partition(GroupType g, const Partition& p);
// All entries of C^{-1}[u] even.  InvalidInput for the zero diagram,
// DataError when C^{-1}[u] is not integral.
bool quite_even_cartan(const RootSystem& rs, const WeightedDiagram& wd);

enum class SpinParity { all_even, all_odd };
// Parity of the spin weights of an all-odd partition via sum c_i(c_i+1)/2,
// parts written 2c_i+1.
SpinParity spin_parity_check(const Partition& p);

// Quite-even status of any nontrivial class (Cartan criterion; for classical
// groups also the partition criterion, DataError if they disagree).
bool quite_even(const RootSystem& rs, const UnipotentClass& c);

// pi_1..pi_3 of X_u; for u = 1 these are the groups of G itself (0, 0, Z).
LowHomotopy low_homotopy(const RootSystem& rs, const UnipotentClass& c);

// pi_4..pi_6 for series B or C from the Dynkin index.  Spin_5 = Sp_4, so
// rank-2 B uses the C column.
HigherHomotopy higher_pi_BC(Series series, long nu, int rank);

// Degrees 2e_i - 1 of the rational sphere factors.
std::vector<int> rational_type(GroupType g, bool trivial);

enum class QuotientCase {
  type_A_center,  // A_{2k-1} modulo the subgroup of order s of the centre
  SO_even,        // D_r -> SO_2r
  semispin,       // D_2k -> a semispin group
};
// Whether phi_u(SL_2) maps onto PSL_2 in the intermediate quotient.  Needs an
// even, not quite even, nontrivial class.
bool quotient_image_psl(QuotientCase which, const RootSystem& rs, const UnipotentClass& c, long s = 0);

HomotopyReport homotopy_report(const RootSystem& rs, const UnipotentClass& c);

}  // namespace sl2q
