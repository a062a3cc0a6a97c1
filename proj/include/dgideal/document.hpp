#pragma once

#include "dgideal/constructions.hpp"

namespace dgideal {

/* Line-oriented description format for complexes, algebras, module actions
   and ideals. Parsing reports syntax errors with line numbers; everything a
   declaration leaves out (products, differentials, matrix entries) is zero.
   The printer emits a canonical form that parses back to an equal document. */

/* A formal sum of scalar multiples of named basis elements, kept exactly as
   written. "0" is the empty sum. */
struct Term {
  std::vector<std::pair<Scalar, std::string>> parts;
  bool operator==(const Term& o) const { return parts == o.parts; }
};

struct DegreeLine {
  int degree = 0;
  std::vector<std::string> basis;
  int line = 0;
  bool operator==(const DegreeLine& o) const {
    return degree == o.degree && basis == o.basis;
  }
};
struct DLine {
  std::string basis;
  Term rhs;
  int line = 0;
  bool operator==(const DLine& o) const { return basis == o.basis && rhs == o.rhs; }
};
struct ComplexDecl {
  std::string name;
  std::vector<DegreeLine> degrees;
  std::vector<DLine> d;
  int line = 0;
  bool operator==(const ComplexDecl& o) const {
    return name == o.name && degrees == o.degrees && d == o.d;
  }
};

struct PairLine {  // "mul a b = t", "left r m = t", "right m r = t"
  std::string a, b;
  Term rhs;
  int line = 0;
  bool operator==(const PairLine& o) const {
    return a == o.a && b == o.b && rhs == o.rhs;
  }
};
struct DgaDecl {
  std::string name, complex;
  Term unit;
  bool has_unit = false;
  std::vector<PairLine> muls;
  int line = 0;
  bool operator==(const DgaDecl& o) const {
    return name == o.name && complex == o.complex && unit == o.unit &&
           has_unit == o.has_unit && muls == o.muls;
  }
};

struct MapLine {
  std::string a;
  std::optional<std::string> b;  // set for tensor sources
  Term rhs;
  int line = 0;
  bool operator==(const MapLine& o) const {
    return a == o.a && b == o.b && rhs == o.rhs;
  }
};
struct MapDecl {
  std::string name;
  std::string src1;
  std::optional<std::string> src2;  // "A * B" source
  std::string dst;
  std::vector<MapLine> lines;
  int line = 0;
  bool operator==(const MapDecl& o) const {
    return name == o.name && src1 == o.src1 && src2 == o.src2 && dst == o.dst &&
           lines == o.lines;
  }
};

struct BimoduleDecl {
  std::string name, carrier, dga;
  std::vector<PairLine> lefts, rights;
  int line = 0;
  bool operator==(const BimoduleDecl& o) const {
    return name == o.name && carrier == o.carrier && dga == o.dga &&
           lefts == o.lefts && rights == o.rights;
  }
};

struct IdealDecl {
  std::string name;
  bool reduced = true;
  std::string bim;
  std::string j;          // reduced form
  std::string dga;        // full form
  std::string nuL, nuR;   // full form
  int line = 0;
  bool operator==(const IdealDecl& o) const {
    return name == o.name && reduced == o.reduced && bim == o.bim && j == o.j &&
           dga == o.dga && nuL == o.nuL && nuR == o.nuR;
  }
};

enum class DeclKind { Complex, Dga, Map, Bimodule, Ideal };

struct Document {
  Field field = Field::rationals();
  std::vector<ComplexDecl> complexes;
  std::vector<DgaDecl> dgas;
  std::vector<MapDecl> maps;
  std::vector<BimoduleDecl> bimodules;
  std::vector<IdealDecl> ideals;
  std::vector<std::pair<DeclKind, int>> order;  // declaration order across kinds

  bool operator==(const Document& o) const;
};

Document parse_document(const std::string& text);
std::string print_document(const Document& doc);

/* Thrown while resolving a target whose dependency fails its verification
   report; the command renders the dependency's report and exits 1 instead
   of treating it as a structural error. */
struct DependencyFailure {
  std::string target;
  DiagramReport report;
};

/* Resolves declarations into verified structures, caching as it goes.
   Unknown names and ill-formed declarations throw std::invalid_argument;
   failing verification of a dependency throws DependencyFailure. */
class DocRuntime {
 public:
  explicit DocRuntime(Document doc);

  const Document& doc() const { return doc_; }
  const Field& field() const { return doc_.field; }
  std::vector<std::string> names(DeclKind k) const;

  const ChainComplex& complex(const std::string& name);
  Verified<DGAStructure>& check_dga(const std::string& name);
  const DGAStructure& dga(const std::string& name);
  Verified<BimoduleStructure>& check_bimodule(const std::string& name);
  const BimoduleStructure& bimodule(const std::string& name);
  const GradedMap& map(const std::string& name);
  const MapDecl& map_decl(const std::string& name);
  const IdealDecl& ideal_decl(const std::string& name);

  /* A reduced presentation for any declared ideal; full declarations pass
     through derive_reduced and its report decides. */
  const IdealData& reduced_ideal(const std::string& name);
  /* A full presentation for any declared ideal; reduced declarations pass
     through build_ideal and its report decides. */
  const SmithIdealData& full_ideal(const std::string& name);
  Verified<IdealData>& derive_report(const std::string& name);      // full decls
  Verified<SmithIdealData>& build_report(const std::string& name);  // reduced decls

  /* The named map as a verified morphism between the unique algebras
     declared on its endpoint complexes. */
  DGAMorphism dga_morphism(const std::string& name);

 private:
  Document doc_;
  std::map<std::string, ChainComplex> complexes_;
  std::map<std::string, Verified<DGAStructure>> dgas_;
  std::map<std::string, Verified<BimoduleStructure>> bims_;
  std::map<std::string, GradedMap> maps_;
  std::map<std::string, IdealData> reduced_;
  std::map<std::string, SmithIdealData> full_;
  std::map<std::string, Verified<IdealData>> derived_;
  std::map<std::string, Verified<SmithIdealData>> built_;
};

}  // namespace dgideal
