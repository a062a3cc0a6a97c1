#include "doctest.h"
#include "dgideal/cli.hpp"
#include "dgideal/constructions.hpp"
#include "dgideal/document.hpp"

#include <functional>
#include <sstream>

using namespace dgideal;

namespace {

const char* kDual = R"(# dual numbers
field Q

complex DC
  degree 0 dim 2 basis one eps

dga DUAL on DC
  unit = one
  mul one one = one
  mul one eps = eps
  mul eps one = eps

complex IC
  degree 0 dim 1 basis eps

map inc : IC -> DC
  eps |-> eps

bimodule M : IC over DUAL
  left one eps = eps
  right eps one = eps

ideal eps = reduced(M, j=inc)
)";

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parsing a full document") {
  Document doc = parse_document(kDual);
  CHECK(doc.field == Field::rationals());
  REQUIRE(doc.complexes.size() == 2);
  CHECK(doc.complexes[0].name == "DC");
  REQUIRE(doc.complexes[0].degrees.size() == 1);
  CHECK(doc.complexes[0].degrees[0].basis == std::vector<std::string>{"one", "eps"});
  REQUIRE(doc.dgas.size() == 1);
  CHECK(doc.dgas[0].name == "DUAL");
  CHECK(doc.dgas[0].muls.size() == 3);
  REQUIRE(doc.maps.size() == 1);
  CHECK(doc.maps[0].src1 == "IC");
  CHECK_FALSE(doc.maps[0].src2.has_value());
  REQUIRE(doc.bimodules.size() == 1);
  CHECK(doc.bimodules[0].lefts.size() == 1);
  REQUIRE(doc.ideals.size() == 1);
  CHECK(doc.ideals[0].reduced);
  CHECK(doc.ideals[0].bim == "M");
  CHECK(doc.ideals[0].j == "inc");
  // declaration order survives
  CHECK(doc.order.size() == 6);
  CHECK(doc.order[0].first == DeclKind::Complex);
  CHECK(doc.order[2].first == DeclKind::Complex);
  CHECK(doc.order[5].first == DeclKind::Ideal);
}

TEST_CASE("print and parse are inverse on the parse image") {
  Document doc = parse_document(kDual);
  std::string text = print_document(doc);
  Document again = parse_document(text);
  CHECK(doc == again);
  // and printing is idempotent on the nose
  CHECK(print_document(again) == text);
}

TEST_CASE("terms carry signs and fractions") {
  const char* src = R"(field Q

complex C
  degree 0 dim 2 basis a b

map f : C -> C
  a |-> 2*a+1/2*b
  b |-> -b
)";
  Document doc = parse_document(src);
  const Term& t = doc.maps[0].lines[0].rhs;
  REQUIRE(t.parts.size() == 2);
  Field q = Field::rationals();
  CHECK(t.parts[0].first == q.from_int(2));
  CHECK(t.parts[0].second == "a");
  CHECK(t.parts[1].first == q.from_fraction(1, 2));
  CHECK(t.parts[1].second == "b");
  const Term& m = doc.maps[0].lines[1].rhs;
  REQUIRE(m.parts.size() == 1);
  CHECK(m.parts[0].first == q.from_int(-1));

  // the zero term is empty
  Document z = parse_document("field Q\n\ncomplex C\n  degree 0 dim 1 basis a\n"
                              "\nmap f : C -> C\n  a |-> 0\n");
  CHECK(z.maps[0].lines[0].rhs.parts.empty());

  // round trip through the printer keeps the rendering canonical
  CHECK(print_document(parse_document(print_document(doc))) == print_document(doc));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_of([] { parse_document("field Q\nbogus\n"); }) ==
        "line 2: cannot make sense of this line");
  CHECK(error_of([] { parse_document("complex C\n  degree 0 dim 1 basis a\nfield Q\n"); }) ==
        "line 3: field must precede all declarations");
  CHECK(error_of([] { parse_document("field Q\nfield Q\n"); }) ==
        "line 2: field is declared twice");
  CHECK(error_of([] { parse_document("field Fp 6\n"); }) == "line 1: '6' is not a prime");
  CHECK(error_of([] {
          parse_document("field Q\n\ncomplex C\n  degree 0 dim 2 basis a a\n");
        }) == "line 4: basis id 'a' is used twice in this complex");
  CHECK(error_of([] {
          parse_document("field Q\n\ncomplex C\n  degree 0 dim 3 basis a b\n");
        }) == "line 4: dim 3 but 2 basis ids");
  CHECK(error_of([] {
          parse_document("field Q\n\ncomplex C\n  degree 0 dim 1 basis a\n"
                         "\ndga R on C\n  unit = a\n  mul a a = a\n  mul a a = 0\n");
        }) == "line 9: product of 'a' and 'a' is given twice");
  CHECK(error_of([] { parse_document("field Q\n\ncomplex C\n  degree 0 dim 1 basis a\n"
                                     "\nmap f : C * C -> C\n  a |-> a\n"); }) ==
        "line 7: map 'f' has a tensor source; give two basis ids");
}

TEST_CASE("runtime resolves complexes against declared labels") {
  DocRuntime rt(parse_document(kDual));
  const ChainComplex& dc = rt.complex("DC");
  CHECK(dc.space().dim(0) == 2);
  CHECK(dc.space().label(0, 1) == "eps");
  CHECK_THROWS_AS(rt.complex("NOPE"), std::invalid_argument);

  // the declared dga verifies and lands in the cache
  CHECK(rt.check_dga("DUAL").ok());
  const DGAStructure& dual = rt.dga("DUAL");
  CHECK(dual.carrier.space().dim(0) == 2);
}

TEST_CASE("runtime ideal equals the catalog construction") {
  DocRuntime rt(parse_document(kDual));
  const IdealData& mine = rt.reduced_ideal("eps");
  Catalog cat = fixtures(Field::rationals());
  const IdealData& theirs = cat.ideal("DUAL.eps");
  CHECK(mine.bim.left == theirs.bim.left);
  CHECK(mine.bim.right == theirs.bim.right);
  CHECK(mine.j.map() == theirs.j.map());
  CHECK(verify_smith(mine).all_pass());
}

TEST_CASE("kind-strict derive and build") {
  DocRuntime rt(parse_document(kDual));
  CHECK(error_of([&] { rt.derive_report("eps"); }) ==
        "ideal 'eps' is declared reduced; derive expects a full declaration");
  CHECK(rt.build_report("eps").ok());
}

TEST_CASE("terms must sit in the right degree") {
  const char* src = R"(field Q

complex C
  degree 0 dim 1 basis a
  degree 1 dim 1 basis b

map f : C -> C
  a |-> b
)";
  DocRuntime rt(parse_document(src));
  std::string msg = error_of([&] { rt.map("f"); });
  CHECK(msg.find("sits in degree 1, expected 0") != std::string::npos);
}

TEST_CASE("a differential that fails to square to zero is a complex error") {
  const char* src = R"(field Q

complex C
  degree 0 dim 1 basis a
  degree 1 dim 1 basis b
  degree 2 dim 1 basis c
  d b = a
  d c = b
)";
  DocRuntime rt(parse_document(src));
  std::string msg = error_of([&] { rt.complex("C"); });
  CHECK(msg.find("complex 'C'") == 0);
}

TEST_CASE("dga morphism extraction needs unique algebras on both ends") {
  const char* src = R"(field Q

complex A
  degree 0 dim 1 basis p

complex B
  degree 0 dim 1 basis q

dga R on A
  unit = p
  mul p p = p

map f : A -> B
  p |-> q
)";
  DocRuntime rt(parse_document(src));
  CHECK(error_of([&] { rt.dga_morphism("f"); }) ==
        "no algebra is declared on complex 'B'");
}

TEST_CASE("the cli runs a whole file end to end") {
  // exercised through the in-process entry point against a temp file
  std::string path = "test_document_tmp.si";
  {
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs(kDual, f);
    fclose(f);
  }
  std::ostringstream out, err;
  int rc = run_cli({"check-ideal", path, "eps"}, out, err);
  CHECK(rc == 0);
  CHECK(out.str().find("report-version 1\n") == 0);
  CHECK(out.str().find("record label=central status=pass") != std::string::npos);
  CHECK(out.str().find("summary records=10 failures=0") != std::string::npos);

  std::ostringstream out2, err2;
  int rc2 = run_cli({"check-ideal", path, "missing"}, out2, err2);
  CHECK(rc2 == 2);
  CHECK(out2.str().empty());
  CHECK_FALSE(err2.str().empty());
  remove(path.c_str());
}
