#pragma once

#include "dgideal/quotient.hpp"

namespace dgideal {

/* The sub-bimodule spanned by the given columns (one matrix of independent
   columns per degree), with j the inclusion. Throws when the columns are
   dependent, the span is not closed under d, or it fails to absorb
   multiplication from either side; a genuine sub-ideal always verifies. */
IdealData span_ideal(const DGAStructure& ring, const std::map<int, Matrix>& span);

/* R as a bimodule over itself with j the identity. */
IdealData identity_ideal(const DGAStructure& ring);

/* The zero subobject. */
IdealData zero_ideal(const DGAStructure& ring);

/* Componentwise actions on the direct sum, j = [j1 j2]. Throws when the two
   ideals do not live over the same algebra. */
IdealData sum_ideals(const IdealData& a, const IdealData& b);

/* R (x) R with the outer actions and j the multiplication. A valid ideal
   exactly when centrality holds, which forces elements of the form
   (ab)c (x) e and a (x) b(ce) to agree. */
IdealData free_square_candidate(const DGAStructure& ring);

/* R (x) X (x) R with the outer actions. */
BimoduleStructure free_bimodule(const DGAStructure& ring, const ChainComplex& x);

/* An ordinary algebra given by structure constants, concentrated in degree
   zero with zero differential. */
struct AlgebraPresentation {
  std::vector<std::string> labels;
  std::vector<Scalar> unit;  // coordinates of 1
  std::vector<std::vector<std::vector<Scalar>>> table;  // table[i][j] = e_i * e_j
};

/* Import a subspace of a discrete algebra as an ideal. The presentation must
   be a unital associative algebra and the span columns independent (throws
   otherwise). Entries two_sided_L and two_sided_R record closure under
   multiplication from each side; a failing witness shows the offending
   product on the left and its canonical residual modulo the span on the
   right. The value is present when both entries pass. */
Verified<IdealData> discrete_import(const Field& f, const AlgebraPresentation& p,
                                    const Matrix& span);

/* Built-in examples over any exact field: small commutative and
   noncommutative algebras, truncated polynomial rings, a two-term complex
   with nontrivial differential, their interesting sub-ideals, and the
   degreewise surjections between them. Everything is verified while the
   catalog is assembled. */
struct CatalogIdeal {
  std::string name;
  IdealData data;
  std::string note;
};
struct CatalogMorphism {
  std::string name;
  DGAMorphism map;
};
struct Catalog {
  std::vector<std::pair<std::string, DGAStructure>> rings;
  std::vector<CatalogIdeal> ideals;
  std::vector<CatalogMorphism> morphisms;

  const DGAStructure& ring(const std::string& name) const;
  const IdealData& ideal(const std::string& name) const;
  const DGAMorphism& morphism(const std::string& name) const;
};
Catalog fixtures(const Field& f);

}  // namespace dgideal
