#pragma once

#include "dgideal/algebra.hpp"

namespace dgideal {

/* Reduced presentation of an ideal: a unital dg-bimodule I over R together
   with a chain map j : I -> R. Construction demands a verified bimodule and
   a genuine chain map; the interesting conditions (j is a bimodule map,
   centrality) are verified, not assumed. */
struct IdealData {
  BimoduleStructure bim;
  ChainMap j;
};
IdealData make_ideal_data(BimoduleStructure bim, GradedMap j);

/* Full two-object presentation: R sits on both endpoints, I is the remaining
   hom object, and the five compositions are mult, the two actions into I,
   and the two contractions into R. Construction checks shapes and that every
   structure map is a chain map; the seventeen composition diagrams are what
   verify_ideal is for. */
struct SmithIdealData {
  DGAStructure ring;
  ChainComplex ideal;
  GradedMap mu_L;  // R (x) I -> I
  GradedMap mu_R;  // I (x) R -> I
  GradedMap nu_L;  // R (x) I -> R
  GradedMap nu_R;  // I (x) R -> R
};
SmithIdealData make_smith(DGAStructure ring, ChainComplex ideal, GradedMap mu_L,
                          GradedMap mu_R, GradedMap nu_L, GradedMap nu_R);

/* All sixteen associativity squares (labelled by the four objects of the
   composable triple, 'b' marking the slots where the hom object is I) plus
   the three unit laws. The five squares whose three tensor factors are all R
   restate the ring's own associativity and are annotated duplicate_of
   "dga.assoc"; they are still computed. Nothing short-circuits. */
DiagramReport verify_ideal(const SmithIdealData& s);

/* j_L = nu_L(1 (x) -) and j_R = nu_R(- (x) 1), both I -> R; chain maps by
   construction. They agree exactly when the ideal verifies. */
std::pair<GradedMap, GradedMap> derive_units(const SmithIdealData& s);

/* Extract the reduced presentation. The report starts with verify_ideal and
   then records the six reduction conditions: cond1.* (bimodule axioms),
   cond2.* (the contractions are module maps), cond3.j_match, cond4.*
   (j is a bimodule map), cond5.central, cond6.* (the contractions are
   determined by j). The value is present only when everything holds. */
Verified<IdealData> derive_reduced(const SmithIdealData& s);

/* Promote a reduced presentation: nu_L = j mu_L, nu_R = j mu_R. The report
   records module_L, module_R, central first, then the full verify_ideal of
   the constructed object. When the prechecks hold the verification is a
   theorem, but it is still computed. */
Verified<SmithIdealData> build_ideal(const IdealData& r);

/* mu_L (j (x) 1) = mu_R (1 (x) j) on I (x) I: j(x) y = x j(y). */
ReportEntry centrality_check(const IdealData& r);

/* Reduced-side verification: bim.* plus module_L, module_R, central. */
DiagramReport verify_smith(const IdealData& r);

}  // namespace dgideal
