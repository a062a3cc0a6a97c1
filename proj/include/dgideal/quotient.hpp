#pragma once

#include "dgideal/smith.hpp"

namespace dgideal {

/* Homotopy quotient: the mapping cone of j with the twisted product
   (r, x) * (r', x') = (r r', (-1)^{|r|} r x' + x r'), unit (1, 0). The cone
   complex and the candidate product are always exposed so callers can probe
   exactly which axiom breaks; the verified structure exists only when every
   axiom holds. Entries: the dga axioms, then incl.chain / incl.mult /
   incl.unit for the ring's inclusion into the cone. */
struct ConeDgaResult {
  ConeData parts;
  GradedMap mult, unit;
  Verified<DGAStructure> dga;
  DiagramReport report;
  bool ok() const { return report.all_pass(); }
};
ConeDgaResult cone_dga(const IdealData& r);

/* Strict quotient R / j(I); defined only when j is degreewise injective
   (throws otherwise, naming the degree). The quotient basis consists of the
   ring basis vectors away from the pivot rows of the embedded ideal, and the
   product is lift-multiply-project. Entries: q.* (dga axioms of the
   quotient), proj.* (the projection is a dga map), cmp.* (the cone compares
   to the quotient by (r, x) |-> proj(r), a quasi-isomorphism). */
struct StrictQuotientData {
  ChainComplex quotient;
  GradedMap mult, unit;   // candidate structure on the quotient
  GradedMap projection;   // ring -> quotient, always a chain map
  GradedMap lift;         // quotient -> ring section of the projection
  Verified<DGAStructure> dga;
  DiagramReport report;
  bool ok() const { return report.all_pass(); }
};
StrictQuotientData strict_quotient_dga(const IdealData& r);

/* Kernel of a degreewise surjective dga map, as an ideal: the actions are
   solved back through the kernel inclusion and j is the inclusion itself.
   Throws when some degree is not surjective. Entries: bim.* for the induced
   bimodule, then the construction report of the resulting ideal. */
struct FiberData {
  KernelData kernel;
  GradedMap left, right;  // candidate actions on the kernel
  std::optional<IdealData> ideal;
  DiagramReport report;
  bool ok() const { return report.all_pass(); }
};
FiberData fiber_ideal(const DGAMorphism& f);

/* The full circle around a surjection f : R -> Q.

   fiber_valid        the kernel of f is an ideal of R
   cone_valid         the homotopy quotient of that ideal is a dga
   cmp_chain/mult/unit  (r, x) |-> f(r) is a dga map cone -> Q
   cmp_qis            ... and a quasi-isomorphism
   strict_valid       the strict quotient exists and verifies
   strict_cmp_qis     the induced map R/I -> Q is a quasi-isomorphism
   refiber_valid      the kernel of R -> R/I is again an ideal
   refiber_iso_*      ... and matches the original fiber: the comparison is a
                      chain map (chain), commutes with both actions
                      (actions_L, actions_R), commutes with j (j), and is
                      degreewise invertible (invertible)

   Later entries are only recorded when the structures they compare exist;
   a red aggregate entry carries the first failing inner witness. */
DiagramReport roundtrip_check(const DGAMorphism& f);

}  // namespace dgideal
