#include "doctest.h"
#include "dgideal/constructions.hpp"

#include <array>

using namespace dgideal;

namespace {

const Field Q = Field::rationals();

std::vector<std::string> entry_labels(const DiagramReport& r) {
  std::vector<std::string> out;
  for (const auto& e : r.entries) out.push_back(e.label);
  return out;
}

const std::vector<std::string> kSixteen = {
    "aaaa", "aaab", "aaba", "aabb", "abaa", "abab", "abba", "abbb",
    "baaa", "baab", "baba", "babb", "bbaa", "bbab", "bbba", "bbbb"};

}  // namespace

TEST_CASE("building the dual-number ideal lists every diagram once") {
  Catalog cat = fixtures(Q);
  Verified<SmithIdealData> b = build_ideal(cat.ideal("DUAL.eps"));
  REQUIRE(b.ok());
  REQUIRE(b.value.has_value());

  std::vector<std::string> want = {"module_L", "module_R", "central"};
  want.insert(want.end(), kSixteen.begin(), kSixteen.end());
  want.insert(want.end(), {"unit_a", "unit_b_L", "unit_b_R"});
  CHECK(entry_labels(b.report) == want);
  CHECK(b.report.entries.size() == 22);

  // exactly the five all-ring squares restate associativity of the ring
  std::vector<std::string> dups;
  for (const auto& e : b.report.entries)
    if (e.duplicate_of.has_value()) {
      CHECK(*e.duplicate_of == "dga.assoc");
      dups.push_back(e.label);
    }
  CHECK(dups == std::vector<std::string>{"aaaa", "baaa", "bbaa", "bbba", "bbbb"});
}

TEST_CASE("verify_ideal reports nineteen entries in a frozen order") {
  Catalog cat = fixtures(Q);
  SmithIdealData s = *build_ideal(cat.ideal("TRI.nil")).value;
  DiagramReport r = verify_ideal(s);
  std::vector<std::string> want = kSixteen;
  want.insert(want.end(), {"unit_a", "unit_b_L", "unit_b_R"});
  CHECK(entry_labels(r) == want);
  CHECK(r.all_pass());
}

TEST_CASE("derive after build gives back the same reduced data") {
  Catalog cat = fixtures(Q);
  for (const char* name : {"DUAL.eps", "TRI.nil", "KOSZUL.xe", "T3.t", "UV3.u"}) {
    const IdealData& r = cat.ideal(name);
    Verified<SmithIdealData> b = build_ideal(r);
    REQUIRE(b.ok());
    Verified<IdealData> back = derive_reduced(*b.value);
    REQUIRE(back.ok());
    CHECK(back.value->bim.left == r.bim.left);
    CHECK(back.value->bim.right == r.bim.right);
    CHECK(back.value->j.map() == r.j.map());
    CHECK(back.value->bim.carrier == r.bim.carrier);
  }
}

TEST_CASE("zeroing one contraction kills exactly one diagram") {
  Catalog cat = fixtures(Q);
  SmithIdealData s = *build_ideal(cat.ideal("DUAL.eps")).value;
  GradedMap zero_nu(s.nu_L.source(), s.nu_L.target(), 0, Q);
  SmithIdealData broken = make_smith(s.ring, s.ideal, s.mu_L, s.mu_R, zero_nu, s.nu_R);

  DiagramReport r = verify_ideal(broken);
  CHECK_FALSE(r.all_pass());
  for (const auto& e : r.entries) {
    if (e.label == "baba") {
      CHECK_FALSE(e.pass);
      REQUIRE(e.witness.has_value());
      CHECK(e.witness->degree == 0);
      CHECK(e.witness->tuple == std::vector<std::string>{"one", "eps", "one"});
      CHECK(e.witness->lhs == "eps");
      CHECK(e.witness->rhs == "0");
    } else {
      CHECK(e.pass);
    }
  }

  // the two candidate units no longer agree
  auto [jl, jr] = derive_units(broken);
  CHECK(jl.is_zero());
  CHECK_FALSE(jr.is_zero());
  CHECK(jl != jr);

  // so no reduced presentation comes back
  Verified<IdealData> red = derive_reduced(broken);
  CHECK_FALSE(red.ok());
  CHECK_FALSE(red.value.has_value());
  CHECK_FALSE(red.report.find("cond3.j_match")->pass);
}

TEST_CASE("derive_units produce j on an honest ideal") {
  Catalog cat = fixtures(Q);
  const IdealData& r = cat.ideal("T3.t");
  SmithIdealData s = *build_ideal(r).value;
  auto [jl, jr] = derive_units(s);
  CHECK(jl == r.j.map());
  CHECK(jr == r.j.map());
}

TEST_CASE("derive report carries the six reduction conditions") {
  Catalog cat = fixtures(Q);
  SmithIdealData s = *build_ideal(cat.ideal("DUAL.eps")).value;
  Verified<IdealData> red = derive_reduced(s);
  REQUIRE(red.ok());
  for (const char* lab :
       {"cond1.chain_L", "cond1.chain_R", "cond1.aaab", "cond1.abbb", "cond1.aabb",
        "cond1.unit_L", "cond1.unit_R", "cond2.nuL_L", "cond2.nuL_R", "cond2.nuR_L",
        "cond2.nuR_R", "cond3.j_match", "cond4.module_L", "cond4.module_R",
        "cond5.central", "cond6.nuL_via_j", "cond6.nuL_via_mu", "cond6.nuR_via_j",
        "cond6.nuR_via_mu"}) {
    const ReportEntry* e = red.report.find(lab);
    REQUIRE_MESSAGE(e != nullptr, lab);
    CHECK(e->pass);
  }
  // 19 verification entries + 19 reduction conditions
  CHECK(red.report.entries.size() == 38);
}

TEST_CASE("free square over the ground field is central, over t^3 it is not") {
  Catalog cat = fixtures(Q);

  IdealData fine = free_square_candidate(cat.ring("GROUND"));
  CHECK(build_ideal(fine).ok());

  IdealData sq = free_square_candidate(cat.ring("T3"));
  ReportEntry central = centrality_check(sq);
  CHECK_FALSE(central.pass);
  REQUIRE(central.witness.has_value());
  CHECK(central.witness->degree == 0);
  CHECK(central.witness->tuple ==
        std::vector<std::string>{"one", "one", "t", "one"});
  CHECK(central.witness->lhs == "t.one");
  CHECK(central.witness->rhs == "one.t");
}

TEST_CASE("free square witness against independent structure constants") {
  // k[t]/(t^3) by hand: index arithmetic, no library calls
  auto prod = [](int i, int j) { return i + j <= 2 ? i + j : -1; };
  const int n = 3;

  // first quadruple where (ab)c (x) d and a (x) b(cd) disagree, scanning in
  // lexicographic order exactly like the tensor basis enumeration
  std::array<int, 4> first{-1, -1, -1, -1};
  std::array<int, 2> lhs_pair{-1, -1}, rhs_pair{-1, -1};
  for (int a = 0; a < n && first[0] < 0; ++a)
    for (int b = 0; b < n && first[0] < 0; ++b)
      for (int c = 0; c < n && first[0] < 0; ++c)
        for (int d = 0; d < n && first[0] < 0; ++d) {
          int ab = prod(a, b);
          int abc = ab < 0 ? -1 : prod(ab, c);  // lhs is e_{(ab)c} (x) e_d
          int cd = prod(c, d);
          int bcd = cd < 0 ? -1 : prod(b, cd);  // rhs is e_a (x) e_{b(cd)}
          bool lhs_zero = abc < 0, rhs_zero = bcd < 0;
          bool equal = (lhs_zero && rhs_zero) ||
                       (!lhs_zero && !rhs_zero && abc == a && d == bcd);
          if (!equal) {
            first = {a, b, c, d};
            lhs_pair = {abc, d};
            rhs_pair = {a, bcd};
          }
        }
  CHECK(first == std::array<int, 4>{0, 0, 1, 0});
  CHECK(lhs_pair == std::array<int, 2>{1, 0});
  CHECK(rhs_pair == std::array<int, 2>{0, 1});

  // matches the library's witness tuple rendered over the same basis order
  Catalog cat = fixtures(Q);
  ReportEntry central = centrality_check(free_square_candidate(cat.ring("T3")));
  REQUIRE(central.witness.has_value());
  const std::vector<std::string> names = {"one", "t", "t2"};
  std::vector<std::string> tuple = {names[first[0]], names[first[1]], names[first[2]],
                                    names[first[3]]};
  CHECK(central.witness->tuple == tuple);
  CHECK(central.witness->lhs == names[lhs_pair[0]] + "." + names[lhs_pair[1]]);
  CHECK(central.witness->rhs == names[rhs_pair[0]] + "." + names[rhs_pair[1]]);
}

TEST_CASE("make_smith rejects non-chain structure maps") {
  Catalog cat = fixtures(Q);
  SmithIdealData s = *build_ideal(cat.ideal("KOSZUL.xe")).value;

  // scaling one block of mu_L breaks commutation with the differentials
  GradedMap bad = s.mu_L;
  bad.set_block(1, mat_scale(Q, Q.from_int(2), bad.block(1)));
  CHECK_THROWS_AS(make_smith(s.ring, s.ideal, bad, s.mu_R, s.nu_L, s.nu_R),
                  std::invalid_argument);

  // shape mismatches are structural too
  GradedMap wrong(s.ideal.space(), s.ideal.space(), 0, Q);
  CHECK_THROWS_AS(make_smith(s.ring, s.ideal, wrong, s.mu_R, s.nu_L, s.nu_R),
                  std::invalid_argument);
}

TEST_CASE("make_ideal_data rejects a non-chain inclusion") {
  Catalog cat = fixtures(Q);
  const IdealData& xe = cat.ideal("KOSZUL.xe");
  GradedMap bad = xe.j.map();
  bad.set_block(1, mat_scale(Q, Q.from_int(3), bad.block(1)));
  CHECK_THROWS_AS(make_ideal_data(xe.bim, bad), std::invalid_argument);
}

TEST_CASE("verify_smith mirrors the reduced-side axioms") {
  Catalog cat = fixtures(Q);
  DiagramReport r = verify_smith(cat.ideal("UV2.u"));
  CHECK(entry_labels(r) ==
        std::vector<std::string>{"bim.chain_L", "bim.chain_R", "bim.aaab", "bim.abbb",
                                 "bim.aabb", "bim.unit_L", "bim.unit_R", "module_L",
                                 "module_R", "central"});
  CHECK(r.all_pass());
}
