// Acceptance gate: one PASS/FAIL line per criterion, details for failures.
// Exit status is non-zero when any criterion fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "sl2q/error.hpp"
#include "sl2q/euclidean.hpp"
#include "sl2q/report.hpp"
#include "sl2q/sl2restrict.hpp"

using namespace sl2q;

namespace {

struct Result {
  bool pass = true;
  std::vector<std::string> details;
  void fail(std::string why) {
    pass = false;
    details.push_back(std::move(why));
  }
  void note(std::string what) { details.push_back(std::move(what)); }
};

const OrbitCatalog& catalog() {
  static const OrbitCatalog cat(OrbitCatalog::default_data_dir());
  return cat;
}

DossierCache& cache() {
  static DossierCache c(97);
  return c;
}

std::string yn(bool b) { return b ? "Y" : "N"; }

struct TableRow {
  const char* partition;
  const char* diagram;
  long index;
  bool quite_even;
};

Result check_table(GroupType g, const std::vector<TableRow>& expect, const Table& got) {
  Result r;
  if (got.rows.size() != expect.size())
    r.fail("row count " + std::to_string(got.rows.size()) + ", expected " + std::to_string(expect.size()));
  std::set<std::string> listed;
  for (const auto& row : got.rows) listed.insert(row[0]);
  for (const auto& e : expect) {
    const auto c = catalog().find_class(g, e.partition);
    const auto& h = cache().homotopy(SpaceId(c));
    const std::string name = c.name();
    if (!listed.count(name)) r.fail(name + " missing from the emitted table");
    if (c.diagram().str() != e.diagram) r.fail(name + ": diagram " + c.diagram().str() + " vs " + e.diagram);
    if (h.dynkin_index != e.index)
      r.fail(name + ": index " + std::to_string(h.dynkin_index) + " vs " + std::to_string(e.index));
    if (h.quite_even != e.quite_even) r.fail(name + ": quite even " + yn(h.quite_even) + " vs " + yn(e.quite_even));
  }
  return r;
}

Result criterion1() {
  const std::vector<TableRow> rows{
      {"[5^2,1^3]", "(0,2,0,2,0,0)", 20, true},  {"[5,4^2]", "(1,0,1,1,0,1)", 20, false},
      {"[5,3,1^5]", "(2,0,2,0,0,0)", 12, true},  {"[5,2^4]", "(2,1,0,0,0,1)", 12, false},
      {"[4^2,3,1^2]", "(0,1,1,0,1,0)", 12, false}, {"[5,2^2,1^4]", "(2,1,0,1,0,0)", 11, false},
      {"[4^2,2^2,1]", "(0,2,0,0,0,1)", 11, false}, {"[5,1^8]", "(2,2,0,0,0,0)", 10, false},
      {"[4^2,1^5]", "(0,2,0,1,0,0)", 10, false},   {"[3^2,1^7]", "(0,2,0,0,0,0)", 4, true},
      {"[3,2^4,1^2]", "(1,0,0,0,1,0)", 4, false},  {"[3,2^2,1^6]", "(1,0,1,0,0,0)", 3, false},
      {"[2^6,1]", "(0,0,0,0,0,1)", 3, false},      {"[3,1^10]", "(2,0,0,0,0,0)", 2, false},
      {"[2^4,1^5]", "(0,0,0,1,0,0)", 2, false},
  };
  return check_table({Series::B, 6}, rows, b6_orbits_table(cache(), catalog()));
}

Result criterion2() {
  const std::vector<TableRow> rows{
      {"[4,2,1^6]", "(2,0,1,0,0,0)", 11, false},
      {"[3^2,2^3]", "(0,1,0,0,1,0)", 11, false},
      {"[4,1^8]", "(2,1,0,0,0,0)", 10, false},
      {"[3^2,2^2,1^2]", "(0,1,0,1,0,0)", 10, false},
  };
  return check_table({Series::C, 6}, rows, c6_orbits_table(cache(), catalog()));
}

Result criterion3() {
  Result r;
  struct Row {
    const char* partition;
    long index;
    const char* prime;
    const char* ideal;
  };
  const std::vector<Row> expect{
      {"[5,2^4]", 12, "3", "((x-2)^3)"},
      {"[4^2,3,1^2]", 12, "3", "((x-2)^2)"},
      {"[5,2^2,1^4]", 11, "-", "no suitable p found"},
      {"[4^2,2^2,1]", 11, "-", "no suitable p found"},
      {"[5,1^8]", 10, "2", "(x^2)"},
      {"[4^2,1^5]", 10, "2", "(x^4)"},
      {"[3,2^2,1^6]", 3, "3", "((x-2)^2)"},
      {"[2^6,1]", 3, "3", "((x-2)^3)"},
      {"[3,1^10]", 2, "2", "(x^2)"},
      {"[2^4,1^5]", 2, "2", "(x^4)"},
  };
  const Table t = iu_mod_p_table(cache(), catalog());
  if (t.rows.size() != expect.size()) r.fail("row count " + std::to_string(t.rows.size()));
  for (std::size_t i = 0; i < std::min(t.rows.size(), expect.size()); ++i) {
    const auto& e = expect[i];
    const std::vector<std::string> want{Partition::parse(e.partition).str(), std::to_string(e.index), e.prime, e.ideal};
    if (t.rows[i] != want) r.fail("row " + std::to_string(i + 1) + ": got " + t.rows[i][0] + " " + t.rows[i][2] + " " +
                                  t.rows[i][3] + ", expected " + e.partition + " " + e.prime + " " + e.ideal);
    const auto& prof = cache().ktheory(SpaceId(catalog().find_class({Series::B, 6}, e.partition)));
    if (prof.side != Side::SL2 || prof.d != 2) r.fail(std::string(e.partition) + " is not on the d=2 side");
  }
  const auto& a = cache().ktheory(SpaceId(catalog().find_class({Series::B, 6}, "[5,2^2,1^4]")));
  const auto& b = cache().ktheory(SpaceId(catalog().find_class({Series::B, 6}, "[4^2,2^2,1]")));
  if (auto p = first_separating_prime(a, b)) r.fail("index-11 pair separated at p=" + std::to_string(*p));
  if (a.prime_bound != 97 || a.per_prime.size() != 25) r.fail("profile does not cover all primes <= 97");
  return r;
}

Result criterion4() {
  Result r;
  const auto rep = classify_dimension(75, 97, catalog());
  if (rep.spaces.size() != 93) r.fail(std::to_string(rep.spaces.size()) + " spaces");
  std::set<std::pair<std::string, std::string>> und;
  for (const auto& p : rep.pairs) {
    const auto& v = p.verdict;
    if (v.outcome == Outcome::Undetermined)
      und.insert({rep.spaces[p.a].str(), rep.spaces[p.b].str()});
    else if (v.outcome != Outcome::Distinct || v.witness == Witness::none)
      r.fail(rep.spaces[p.a].str() + " / " + rep.spaces[p.b].str() + ": no witness");
  }
  const std::set<std::pair<std::string, std::string>> expect{
      {"B6 [5,2^2,1^4]", "B6 [4^2,2^2,1]"},
      {"C6 [4,2,1^6]", "C6 [3^2,2^3]"},
      {"C6 [4,1^8]", "C6 [3^2,2^2,1^2]"},
  };
  if (und != expect) {
    std::string s;
    for (const auto& [x, y] : und) s += " {" + x + ", " + y + "}";
    r.fail("undetermined pairs:" + s);
  }
  return r;
}

Result criterion5() {
  Result r;
  const auto e6 = catalog().enumerate_classes({Series::E, 6});
  if (e6.size() != 20) r.fail(std::to_string(e6.size()) + " classes");
  std::map<long, std::string> seen;
  for (const auto& c : e6) {
    const long nu = cache().homotopy(SpaceId(c)).dynkin_index;
    if (seen.count(nu)) r.fail(c.name() + " and " + seen[nu] + " share index " + std::to_string(nu));
    seen[nu] = c.name();
  }
  return r;
}

Result criterion6() {
  Result r;
  const std::vector<std::string> printed_qe{"A2", "2A2", "D4(a1)", "D4", "A4+A2", "E6(a3)", "D5", "A6", "E6(a1)", "E6"};
  const std::vector<std::string> printed_not{"(3A1)''", "A2+3A1",  "(A3+A1)''", "A3+A2+A1", "(A3+A1)''",
                                             "(A5)''",  "D5(a1)+A1", "E7(a5)",   "E7(a4)",   "E7(a3)",
                                             "E7(a2)",  "E7(a1)",    "E7"};
  const std::set<std::string> want_qe(printed_qe.begin(), printed_qe.end());
  const std::set<std::string> want_not(printed_not.begin(), printed_not.end());
  if (want_not.size() != printed_not.size())
    r.note("printed not-quite-even list repeats a label (" + std::to_string(printed_not.size()) + " entries, " +
           std::to_string(want_not.size()) + " distinct)");
  std::set<std::string> got_qe, got_not;
  for (const auto& c : catalog().enumerate_classes({Series::E, 7})) {
    if (!c.diagram().is_even()) continue;
    (cache().homotopy(SpaceId(c)).quite_even ? got_qe : got_not).insert(c.name());
  }
  auto diff = [](const std::set<std::string>& a, const std::set<std::string>& b) {
    std::string s;
    for (const auto& x : a)
      if (!b.count(x)) s += (s.empty() ? "" : ", ") + x;
    return s.empty() ? std::string("none") : s;
  };
  if (got_qe != want_qe)
    r.fail("quite even: computed-only {" + diff(got_qe, want_qe) + "}, printed-only {" + diff(want_qe, got_qe) + "}");
  if (got_not != want_not)
    r.fail("not quite even: computed-only {" + diff(got_not, want_not) + "}, printed-only {" +
           diff(want_not, got_not) + "}");
  return r;
}

Result criterion7() {
  Result r;
  const auto rep = d4_report(97);
  const std::vector<long> printed{1, 2, 4, 4, 10, 14};
  std::vector<long> got;
  for (const auto& row : rep.rows) got.push_back(row.dynkin_index);
  if (got != printed) {
    std::string s;
    for (std::size_t i = 0; i < rep.rows.size(); ++i)
      if (got[i] != printed[i])
        s += " " + rep.rows[i].partition.str() + " -> " + std::to_string(got[i]) + " (printed " +
             std::to_string(printed[i]) + ")";
    r.fail("indices differ:" + s);
  }
  // the quite-even split of the printed index-4 tie
  const auto& a = rep.rows[2];
  const auto& b = rep.rows[3];
  if (!(a.partition.str() == "[3^2,1^2]" && a.quite_even && b.partition.str() == "[3,2^2,1]" && !b.quite_even))
    r.fail("[3^2,1^2] should be quite even and [3,2^2,1] not");
  for (const auto& v : rep.verdicts)
    if (v.verdict.outcome != Outcome::Distinct)
      r.fail(rep.rows[v.a].partition.str() + " / " + rep.rows[v.b].partition.str() + " not Distinct");
  return r;
}

std::vector<GroupType> classical_up_to_14() {
  std::vector<GroupType> out;
  for (int n = 2; n <= 14; ++n) {
    out.push_back({Series::A, n - 1});
    if (n % 2 == 1 && n >= 5) out.push_back({Series::B, (n - 1) / 2});
    if (n % 2 == 0 && n >= 4) out.push_back({Series::C, n / 2});
    if (n % 2 == 0 && n >= 8) out.push_back({Series::D, n / 2});
  }
  return out;
}

Result criterion8() {
  Result r;
  int classes = 0, spins = 0;
  for (GroupType g : classical_up_to_14()) {
    const RootSystem rs(g);
    for (const auto& c : catalog().enumerate_classes(g)) {
      ++classes;
      if (quite_even_partition(g, c.partition()) != quite_even_cartan(rs, c.diagram()))
        r.fail(g.name() + " " + c.name() + ": criteria disagree");
    }
    if (g.series != Series::B) continue;
    for (const auto& p : partitions_of(g.natural_dimension())) {
      if (!p.all_odd()) continue;
      ++spins;
      long prod = 1;
      for (int d : p.parts) prod = prod * d % 8;
      if ((spin_parity_check(p) == SpinParity::all_even) != (prod == 1 || prod == 7))
        r.fail(g.name() + " " + p.str() + ": spin parity disagrees with the mod-8 product");
    }
  }
  r.note(std::to_string(classes) + " classes, " + std::to_string(spins) + " all-odd B partitions");
  return r;
}

Result criterion9() {
  Result r;
  std::mt19937 rng(75);
  const long primes[] = {2, 3, 5, 7};
  int n = 0;
  while (n < 250) {
    const long p = primes[rng() % 4];
    const int m = 1 + static_cast<int>(rng() % 4);
    const FpPolyRing R(p);
    std::vector<FpPoly> gens;
    for (int i = 0; i < m; ++i) {
      std::vector<long> c(rng() % 7);  // degree <= 5
      for (auto& x : c) x = static_cast<long>(rng() % p);
      gens.emplace_back(p, c);
    }
    const FpPoly g = ring_gcd(R, gens);
    if (g.is_zero()) continue;
    ++n;
    if (koszul_snf_homology(R, gens) != koszul_homology_lemma(R, g, m))
      r.fail("mismatch at p=" + std::to_string(p) + ", m=" + std::to_string(m));
  }
  r.note(std::to_string(n) + " instances");
  return r;
}

Result criterion10() {
  Result r;
  int n = 0;
  for (GroupType g : {GroupType{Series::B, 6}, GroupType{Series::C, 6}, GroupType{Series::D, 4}}) {
    const RootSystem rs(g);
    for (const auto& c : catalog().enumerate_classes(g)) {
      ++n;
      const long a = dynkin_index_partition(g, c.partition());
      const long b = dynkin_index_roots(rs, c.diagram());
      if (a != b) r.fail(g.name() + " " + c.name() + ": " + std::to_string(a) + " vs " + std::to_string(b));
    }
  }
  for (GroupType g : {GroupType{Series::E, 6}, GroupType{Series::E, 7}}) {
    const RootSystem rs(g);
    for (const auto& c : catalog().enumerate_classes(g)) {
      const auto& pub = c.exceptional().published_index;
      if (!pub) continue;
      ++n;
      const long b = dynkin_index_roots(rs, c.diagram());
      if (*pub != b) r.fail(g.name() + " " + c.name() + ": " + std::to_string(*pub) + " vs " + std::to_string(b));
    }
  }
  r.note(std::to_string(n) + " classes");
  return r;
}

Result criterion11() {
  Result r;
  int modules = 0, reductions = 0;
  auto sweep = [&](GroupType g, const std::vector<UnipotentClass>& classes) {
    const RootSystem rs(g);
    for (const auto& c : classes) {
      const bool qe = quite_even(rs, c);
      for (int i = 1; i <= rs.rank(); ++i) {
        const auto w = restrict_fundamental(rs, c, i);
        CharacterPoly cp = char_poly(sl2_decompose(w));
        if (qe) cp = to_psl2_variable(cp);
        ++modules;
        if (cp.dimension() != w.total() || w.total() != rs.fundamental_rep_dims()[i - 1])
          r.fail(g.name() + " " + c.name() + " V(w" + std::to_string(i) + "): character does not give the dimension");
      }
      const auto& prof = cache().ktheory(SpaceId(c));
      for (const auto& [p, red] : prof.per_prime) {
        if (red.degenerate()) continue;
        ++reductions;
        if (red.gcd != FpPoly::x_minus(p, prof.d, *red.exponent))
          r.fail(g.name() + " " + c.name() + " p=" + std::to_string(p) + ": gcd is not a power of (x-d)");
      }
    }
  };
  for (GroupType g : {GroupType{Series::B, 6}, GroupType{Series::C, 6}, GroupType{Series::E, 6}})
    sweep(g, catalog().enumerate_classes(g));
  std::vector<UnipotentClass> d4;
  for (const char* p : {"[2^2,1^4]", "[3,1^5]", "[3^2,1^2]", "[3,2^2,1]", "[5,1^3]", "[5,3]"})
    d4.push_back(catalog().find_class({Series::D, 4}, p));
  sweep({Series::D, 4}, d4);
  r.note(std::to_string(modules) + " restrictions, " + std::to_string(reductions) + " reductions");
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"B6 table reproduction", criterion1},
      {"C6 table reproduction", criterion2},
      {"reduced ideal table reproduction", criterion3},
      {"dimension-75 classification", criterion4},
      {"E6 indices pairwise distinct", criterion5},
      {"E7 quite-even classification", criterion6},
      {"D4 example", criterion7},
      {"quite-even criteria equivalence", criterion8},
      {"Koszul lemma vs SNF", criterion9},
      {"index double entry", criterion10},
      {"character sanity", criterion11},
  };
  int failed = 0;
  int id = 0;
  for (const auto& [name, run] : criteria) {
    ++id;
    Result res;
    try {
      res = run();
    } catch (const std::exception& e) {
      res.fail(std::string("exception: ") + e.what());
    }
    failed += !res.pass;
    std::printf("%s  %2d  %s\n", res.pass ? "PASS" : "FAIL", id, name);
    for (const auto& d : res.details) std::printf("          %s\n", d.c_str());
  }
  std::printf("EXCL  12  homotopy-equivalence statements, pi5 extensions, integral Koszul homology "
              "(not decidable here; covered by the property suites)\n");
  std::printf("%d of %d criteria failed\n", failed, id);
  return failed == 0 ? 0 : 1;
}
