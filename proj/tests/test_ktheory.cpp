#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sl2q/error.hpp"
#include "sl2q/euclidean.hpp"
#include "sl2q/ktheory.hpp"

using namespace sl2q;

namespace {

UnipotentClass cls(GroupType g, const char* p) { return make_classical_class(g, Partition::parse(p)); }

const GroupType b6{Series::B, 6};

IdealProfile b6_profile(const char* p, long bound = 97) {
  static const RootSystem rs(b6);
  return ideal_profile(rs, cls(b6, p), bound);
}

FpPoly random_poly(std::mt19937& rng, long p, int max_deg) {
  std::uniform_int_distribution<int> deg(-1, max_deg);
  std::uniform_int_distribution<long> coef(0, p - 1);
  std::vector<long> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  return FpPoly(p, c);
}

// ∂_{i} ∘ ∂_{i+1} written out entrywise
template <class Ring>
bool squares_to_zero(const Ring& R, const std::vector<Matrix<typename Ring::Elem>>& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    for (std::size_t r = 0; r < d[i].size(); ++r)
      for (std::size_t c = 0; c < d[i + 1][0].size(); ++c) {
        typename Ring::Elem s = R.zero();
        for (std::size_t k = 0; k < d[i + 1].size(); ++k) s = s + d[i][r][k] * d[i + 1][k][c];
        if (!R.is_zero(s)) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const IntPoly x = IntPoly::x();
  CHECK((x * x - IntPoly::constant(4)).str() == "x^2 - 4");
  CHECK((x * x).eval(3) == 9);
  const auto f = FpPoly::reduce(x * x - IntPoly::constant(4), 3);  // x^2 + 2
  CHECK(f == FpPoly(3, {2, 0, 1}));
  CHECK(gcd(f, FpPoly::x_minus(3, 2)) == FpPoly::x_minus(3, 2));
  CHECK(gcd(FpPoly(5, {}), FpPoly(5, {})).is_zero());
  CHECK(FpPoly::x_minus(2, 2, 3) == FpPoly(2, {0, 0, 0, 1}));
  const auto [q, r] = divmod(FpPoly(7, {1, 2, 3, 4}), FpPoly(7, {5, 1}));
  CHECK(q * FpPoly(7, {5, 1}) + r == FpPoly(7, {1, 2, 3, 4}));
  CHECK(r.degree() < 1);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(primes_up_to(20) == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("ideal generators") {
  const RootSystem rs(b6);
  const auto prof = ideal_generators(rs, cls(b6, "[3,1^10]"));
  REQUIRE(!prof.generators.empty());
  // natural restriction V_3 + 10 V_1: x^2 - 1 + 10 - 13
  CHECK(prof.generators[0] == IntPoly({-4, 0, 1}));
  CHECK(prof.side == Side::SL2);
  for (const auto& g : prof.generators) CHECK(g.eval(2) == 0);

  const RootSystem a1({Series::A, 1});
  const auto reg = ideal_generators(a1, cls({Series::A, 1}, "[2]"));
  CHECK(reg.generators == std::vector<IntPoly>{IntPoly({-2, 1})});

  const auto qe = ideal_generators(rs, cls(b6, "[5^2,1^3]"));
  CHECK(qe.side == Side::PSL2);
  CHECK(qe.d == 3);
  for (const auto& g : qe.generators) CHECK(g.eval(3) == 0);
}

TEST_CASE("reduced ideals") {
  const auto a = b6_profile("[5,2^4]");
  CHECK(a.per_prime.at(3).exponent == 3);
  CHECK(a.per_prime.at(3).gcd == FpPoly::x_minus(3, 2, 3));
  const auto b = b6_profile("[4^2,1^5]");
  CHECK(b.per_prime.at(2).exponent == 4);
  CHECK(b.per_prime.at(2).gcd == FpPoly(2, {0, 0, 0, 0, 1}));
  CHECK(b6_profile("[5,1^8]").per_prime.at(2).exponent == 2);
  CHECK(b6_profile("[2^6,1]").per_prime.at(3).exponent == 3);

  IdealProfile single;
  single.generators = {IntPoly({-2, 1})};
  single.labels = {"g"};
  CHECK(reduce_gcd_mod_p(single, 5).gcd == FpPoly::x_minus(5, 2));
  CHECK(reduce_gcd_mod_p(single, 5).exponent == 1);

  IdealProfile bad = single;
  bad.generators = {IntPoly({-3, 1})};  // does not vanish at 2
  CHECK_THROWS_AS(reduce_gcd_mod_p(bad, 5), DataError);

  IdealProfile zero = single;
  zero.generators = {IntPoly({-4, 2})};  // 2x - 4, zero mod 2
  CHECK(reduce_gcd_mod_p(zero, 2).degenerate());
  CHECK(reduce_gcd_mod_p(zero, 3).exponent == 1);
}

TEST_CASE("every reduction is a power of (x - d)") {
  const RootSystem rs(b6);
  for (const auto& c : OrbitCatalog(OrbitCatalog::default_data_dir()).enumerate_classes(b6)) {
    const auto prof = ideal_profile(rs, c, 31);
    for (const auto& [p, r] : prof.per_prime) {
      if (r.degenerate()) continue;
      CHECK(r.gcd == FpPoly::x_minus(p, prof.d, *r.exponent));
    }
  }
}

TEST_CASE("separating primes") {
  CHECK(first_separating_prime(b6_profile("[5,2^4]"), b6_profile("[4^2,3,1^2]")) == 3);
  CHECK(first_separating_prime(b6_profile("[5,1^8]"), b6_profile("[4^2,1^5]")) == 2);
  const auto a = b6_profile("[5,2^2,1^4]"), b = b6_profile("[4^2,2^2,1]");
  CHECK_FALSE(first_separating_prime(a, b).has_value());
  for (const auto& [p, r] : a.per_prime) CHECK(r.exponent == b.per_prime.at(p).exponent);
  CHECK_THROWS_AS(first_separating_prime(b6_profile("[5^2,1^3]"), a), InvalidInput);
}

TEST_CASE("generator routes give the same ideal") {
  for (GroupType g : {GroupType{Series::B, 4}, GroupType{Series::C, 4}}) {
    const RootSystem rs(g);
    for (const auto& c : OrbitCatalog(OrbitCatalog::default_data_dir()).enumerate_classes(g)) {
      const auto ext = ideal_generators(rs, c, GeneratorRoute::exterior);
      const auto fun = ideal_generators(rs, c, GeneratorRoute::fundamental);
      CHECK(ext.side == fun.side);
      for (long p : {2L, 3L, 5L}) {
        CAPTURE(g.name());
        CAPTURE(c.name());
        CAPTURE(p);
        const auto a = reduce_gcd_mod_p(ext, p), b = reduce_gcd_mod_p(fun, p);
        CHECK(a.exponent == b.exponent);
        CHECK(a.gcd == b.gcd);
      }
    }
  }
  CHECK_THROWS_AS(ideal_generators(RootSystem({Series::E, 6}), trivial_class({Series::E, 6}), GeneratorRoute::exterior),
                  InvalidInput);
}

TEST_CASE("Koszul complex over Z") {
  const IntegerRing Z;
  const std::vector<mpz_class> gens{2, 4};
  const auto d = koszul_complex_build(Z, gens);
  REQUIRE(d.size() == 2);
  // ∂_1 = (a_1 a_2), ∂_2 = (a_2, -a_1)^T
  CHECK(d[0] == Matrix<mpz_class>{{2, 4}});
  CHECK(d[1] == Matrix<mpz_class>{{4}, {-2}});
  const auto h = koszul_snf_homology(Z, gens);
  REQUIRE(h.size() == 3);
  CHECK(h[0] == ModuleDesc<mpz_class>{0, {2}});
  CHECK(h[1] == ModuleDesc<mpz_class>{0, {2}});
  CHECK(h[2].is_zero());
  CHECK(koszul_homology_lemma(Z, mpz_class(2), 2) == h);
  for (const auto& m : koszul_snf_homology(Z, std::vector<mpz_class>{3, 5})) CHECK(m.is_zero());
  CHECK_THROWS_AS(koszul_homology_lemma(Z, mpz_class(0), 2), InvalidInput);
}

TEST_CASE("Koszul complexes over F_p[x]") {
  const FpPolyRing F3(3), F2(2), F5(5);
  const auto one = koszul_snf_homology(F3, std::vector<FpPoly>{FpPoly::x_minus(3, 2)});
  CHECK(one[0] == ModuleDesc<FpPoly>{0, {FpPoly::x_minus(3, 2)}});
  CHECK(one[1].is_zero());

  const FpPoly x(2, {0, 1});
  const auto two = koszul_snf_homology(F2, std::vector<FpPoly>{x, x});
  CHECK(two[0] == ModuleDesc<FpPoly>{0, {x}});
  CHECK(two[1] == ModuleDesc<FpPoly>{0, {x}});
  CHECK(two[2].is_zero());

  const FpPoly a = FpPoly::x_minus(5, 2);
  const std::vector<FpPoly> gens{a, a * a, a * a * a};
  const auto d = koszul_complex_build(F5, gens);
  CHECK(d[0].size() == 1);
  CHECK(d[0][0].size() == 3);
  CHECK(d[1].size() == 3);
  CHECK(d[2][0].size() == 1);
  CHECK(squares_to_zero(F5, d));
  const auto h = koszul_snf_homology(F5, gens);
  CHECK(h == koszul_homology_lemma(F5, a, 3));
  CHECK(h[0].torsion.size() == 1);
  CHECK(h[1].torsion.size() == 2);
  CHECK(h[2].torsion.size() == 1);
  CHECK(h[3].is_zero());
}

TEST_CASE("Koszul lemma matches SNF on random instances") {
  std::mt19937 rng(20240611);
  const long primes[] = {2, 3, 5, 7};
  int checked = 0;
  while (checked < 300) {
    const long p = primes[rng() % 4];
    const int m = 1 + static_cast<int>(rng() % 4);
    const FpPolyRing R(p);
    std::vector<FpPoly> gens;
    for (int i = 0; i < m; ++i) gens.push_back(random_poly(rng, p, 5));
    const FpPoly g = ring_gcd(R, gens);
    if (g.is_zero()) continue;
    CAPTURE(p);
    CAPTURE(m);
    CHECK(squares_to_zero(R, koszul_complex_build(R, gens)));
    CHECK(koszul_snf_homology(R, gens) == koszul_homology_lemma(R, g, m));
    ++checked;
  }
  // and over Z
  for (int t = 0; t < 100; ++t) {
    const int m = 1 + static_cast<int>(rng() % 4);
    std::vector<mpz_class> gens;
    for (int i = 0; i < m; ++i) gens.emplace_back(static_cast<long>(rng() % 41) - 20);
    const IntegerRing Z;
    const mpz_class g = ring_gcd(Z, gens);
    if (g == 0) continue;
    CHECK(koszul_snf_homology(Z, gens) == koszul_homology_lemma(Z, g, m));
  }
}

TEST_CASE("Koszul check on profiles") {
  const auto prof = b6_profile("[5,2^4]");
  for (long p : {2L, 3L, 5L, 7L}) {
    const auto k = koszul_check(prof, p);
    CHECK(k.agree());
    CHECK_FALSE(k.by_snf.empty());
  }
  const auto k3 = koszul_check(prof, 3);
  CHECK(k3.by_snf[0].torsion == std::vector<FpPoly>{FpPoly::x_minus(3, 2, 3)});
}
