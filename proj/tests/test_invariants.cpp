#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2q/error.hpp"
#include "sl2q/invariants.hpp"

using namespace sl2q;

namespace {

const OrbitCatalog& catalog() {
  static const OrbitCatalog cat(OrbitCatalog::default_data_dir());
  return cat;
}

UnipotentClass cls(GroupType g, const char* p) { return make_classical_class(g, Partition::parse(p)); }

const GroupType b6{Series::B, 6}, c6{Series::C, 6};

}  // namespace

TEST_CASE("group descriptors") {
  CHECK(GroupDesc::cyclic(1) == GroupDesc::trivial());
  CHECK(GroupDesc::cyclic(0) == GroupDesc::infinite_cyclic());
  CHECK(GroupDesc::cyclic(12).str() == "Z/12");
  CHECK(GroupDesc::sum({2, 2}).str() == "Z/2+Z/2");
  for (const char* s : {"0", "Z", "Z/2", "Z/4|Z/2+Z/2", "Z/2+Z/2"})
    CHECK(GroupDesc::parse(s).str() == s);
  CHECK_THROWS_AS(GroupDesc::parse("Q"), InvalidInput);
}

TEST_CASE("dimension of X") {
  CHECK(dim_X({Series::E, 6}) == 75);
  CHECK(dim_X(b6) == 75);
  CHECK(dim_X(c6) == 75);
  CHECK(dim_X({Series::A, 1}) == 0);
}

TEST_CASE("quite even by partition") {
  CHECK(quite_even_partition(b6, Partition::parse("[5^2,1^3]")));
  CHECK(quite_even_partition(b6, Partition::parse("[5,3,1^5]")));
  CHECK_FALSE(quite_even_partition(b6, Partition::parse("[3,1^10]")));
  CHECK_FALSE(quite_even_partition(c6, Partition::parse("[4,2,1^6]")));
  CHECK(quite_even_partition(c6, Partition::parse("[3^4]")));
  CHECK_THROWS_AS(quite_even_partition(b6, Partition::parse("[1^13]")), InvalidInput);
}

TEST_CASE("quite even by Cartan criterion") {
  const RootSystem b6rs(b6), e7(GroupType{Series::E, 7});
  CHECK(quite_even_cartan(b6rs, WeightedDiagram{{0, 2, 0, 0, 0, 0}}));
  CHECK(quite_even(e7, catalog().find_class({Series::E, 7}, "A2")));
  CHECK_FALSE(quite_even(e7, catalog().find_class({Series::E, 7}, "(3A1)''")));
  CHECK_THROWS_AS(quite_even_cartan(b6rs, WeightedDiagram{{0, 0, 0, 0, 0, 0}}), InvalidInput);
  CHECK_THROWS_AS(quite_even_cartan(RootSystem({Series::A, 2}), WeightedDiagram{{1, 0}}), DataError);
  CHECK_FALSE(quite_even(b6rs, trivial_class(b6)));
}

TEST_CASE("E6: every nontrivial even class is quite even") {
  const RootSystem rs({Series::E, 6});
  for (const auto& c : catalog().enumerate_classes({Series::E, 6}))
    if (c.diagram().is_even()) CHECK(quite_even(rs, c));
}

TEST_CASE("partition and Cartan criteria agree for n <= 14") {
  int checked = 0;
  for (int n = 2; n <= 14; ++n) {
    std::vector<GroupType> groups{{Series::A, n - 1}};
    if (n % 2 == 1 && n >= 5) groups.push_back({Series::B, (n - 1) / 2});
    if (n % 2 == 0 && n >= 4) groups.push_back({Series::C, n / 2});
    if (n % 2 == 0 && n >= 8) groups.push_back({Series::D, n / 2});
    for (GroupType g : groups) {
      const RootSystem rs(g);
      for (const auto& c : catalog().enumerate_classes(g)) {
        CAPTURE(g.name());
        CAPTURE(c.name());
        CHECK(quite_even_partition(g, c.partition()) == quite_even_cartan(rs, c.diagram()));
        ++checked;
      }
    }
  }
  CHECK(checked > 400);
}

TEST_CASE("spin parity") {
  CHECK(spin_parity_check(Partition::parse("[5^2,1^3]")) == SpinParity::all_even);
  CHECK(spin_parity_check(Partition::parse("[3,1^10]")) == SpinParity::all_odd);
  CHECK(spin_parity_check(Partition::parse("[1^7]")) == SpinParity::all_even);
  // against the product of parts mod 8 on every all-odd partition of 3..25
  for (int n = 3; n <= 25; n += 2)
    for (const auto& p : partitions_of(n)) {
      if (!p.all_odd()) continue;
      long prod = 1;
      for (int d : p.parts) prod = prod * d % 8;
      CHECK((spin_parity_check(p) == SpinParity::all_even) == (prod == 1 || prod == 7));
    }
}

TEST_CASE("low homotopy") {
  const RootSystem rs(b6);
  const auto a = low_homotopy(rs, cls(b6, "[3,1^10]"));
  CHECK(a.pi1 == GroupDesc::trivial());
  CHECK(a.pi2 == GroupDesc::trivial());
  CHECK(a.pi3 == GroupDesc::cyclic(2));
  const auto b = low_homotopy(rs, cls(b6, "[3^2,1^7]"));
  CHECK(b.pi2 == GroupDesc::cyclic(2));
  CHECK(b.pi3 == GroupDesc::cyclic(4));
  const auto t = low_homotopy(rs, trivial_class(b6));
  CHECK(t.pi2 == GroupDesc::trivial());
  CHECK(t.pi3 == GroupDesc::infinite_cyclic());
}

TEST_CASE("higher homotopy of B and C quotients") {
  for (long nu : {1L, 2L, 7L, 20L}) {
    const auto h = higher_pi_BC(Series::B, nu, 6);
    CHECK(h.pi5 == GroupDesc::cyclic(2));
  }
  CHECK(higher_pi_BC(Series::C, 10, 6) ==
        HigherHomotopy{GroupDesc::cyclic(2), GroupDesc::trivial(), GroupDesc::cyclic(2)});
  const auto odd = higher_pi_BC(Series::C, 11, 6);
  CHECK(odd.pi5 == GroupDesc::order4_undetermined());
  CHECK(odd.pi4 == GroupDesc::trivial());
  // Spin5 = Sp4: rank-2 B follows the C column
  CHECK(higher_pi_BC(Series::B, 3, 2) == higher_pi_BC(Series::C, 3, 2));
}

TEST_CASE("rational type") {
  CHECK(rational_type(b6, false) == std::vector<int>{7, 11, 15, 19, 23});
  CHECK(rational_type({Series::E, 6}, false) == std::vector<int>{9, 11, 15, 17, 23});
  CHECK(rational_type({Series::A, 1}, true) == std::vector<int>{3});
  CHECK(rational_type({Series::A, 1}, false).empty());
}

TEST_CASE("images in intermediate quotients") {
  const GroupType a7{Series::A, 7}, d4{Series::D, 4};
  const RootSystem a7rs(a7), d4rs(d4);
  CHECK(quotient_image_psl(QuotientCase::type_A_center, a7rs, cls(a7, "[2^4]"), 2));
  CHECK_FALSE(quotient_image_psl(QuotientCase::type_A_center, a7rs, cls(a7, "[2^4]"), 8));
  CHECK(quotient_image_psl(QuotientCase::SO_even, d4rs, cls(d4, "[3,1^5]")));
  CHECK_FALSE(quotient_image_psl(QuotientCase::semispin, d4rs, cls(d4, "[3,1^5]")));
  CHECK_THROWS_AS(quotient_image_psl(QuotientCase::SO_even, d4rs, cls(d4, "[3^2,1^2]")), InvalidInput);
  CHECK_THROWS_AS(quotient_image_psl(QuotientCase::SO_even, d4rs, cls(d4, "[3,2^2,1]")), InvalidInput);
}

TEST_CASE("full reports") {
  const RootSystem rs(b6);
  const auto r = homotopy_report(rs, cls(b6, "[5,2^4]"));
  CHECK(r.dim_X == 75);
  CHECK(r.dynkin_index == 12);
  CHECK_FALSE(r.quite_even);
  CHECK(r.pi3 == GroupDesc::cyclic(12));
  CHECK(r.pi5 == GroupDesc::cyclic(2));
  const auto t = homotopy_report(rs, catalog().find_class(b6, "[1^13]"));
  CHECK(t.trivial_class);
  CHECK(t.dynkin_index == 0);
  CHECK(t.pi3 == GroupDesc::infinite_cyclic());
  CHECK_FALSE(t.pi4.has_value());
  const auto e = homotopy_report(RootSystem({Series::E, 6}), catalog().find_class({Series::E, 6}, "A2"));
  CHECK(e.quite_even);
  CHECK(e.pi2 == GroupDesc::cyclic(2));
}
