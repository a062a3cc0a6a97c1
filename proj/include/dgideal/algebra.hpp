#pragma once

#include "dgideal/complex.hpp"

namespace dgideal {

/* Differential graded algebra: multiplication and unit on a chain complex.
   Only verify_dga hands these out, so holding a DGAStructure means every
   axiom was checked. The zero algebra is allowed. */
struct DGAStructure {
  ChainComplex carrier;
  GradedMap mult;  // carrier (x) carrier -> carrier
  GradedMap unit;  // ground field -> carrier
};

/* Axioms, in report order: leibniz (d is a derivation of mult), unit_chain
   (the unit is a cycle), assoc, unit_L, unit_R. Shape errors throw; axiom
   failures come back as report entries. */
Verified<DGAStructure> verify_dga(const ChainComplex& carrier, const GradedMap& mult,
                                  const GradedMap& unit);

struct DGAMorphism {
  DGAStructure source, target;
  GradedMap map;
};

/* Entries: chain, mult, unit. */
Verified<DGAMorphism> verify_dga_map(const DGAStructure& a, const DGAStructure& b,
                                     const GradedMap& f);

/* Unital dg-bimodule over a dga. */
struct BimoduleStructure {
  DGAStructure ring;
  ChainComplex carrier;
  GradedMap left;   // ring (x) carrier -> carrier
  GradedMap right;  // carrier (x) ring -> carrier
};

/* Entries: chain_L, chain_R, aaab (left associativity), abbb (right
   associativity), aabb (the two actions commute past the middle), unit_L,
   unit_R. The associativity labels name the matching two-object diagrams so
   the two reports line up. */
Verified<BimoduleStructure> verify_bimodule(const DGAStructure& ring,
                                            const ChainComplex& carrier, const GradedMap& left,
                                            const GradedMap& right);

}  // namespace dgideal
