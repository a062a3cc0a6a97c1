#include "dgideal/algebra.hpp"

#include <stdexcept>

namespace dgideal {

namespace {

/* Rebind a map onto freshly built source/target spaces of the same
   dimensions. Callers may pass maps anchored on spaces without tensor-factor
   structure; diagram assembly needs the canonical one. */
GradedMap reanchor(const GradedMap& f, const GradedSpace& src, const GradedSpace& tgt) {
  GradedMap out(src, tgt, f.degree(), f.field());
  for (int n : src.degrees())
    if (tgt.dim(n + f.degree()) > 0) out.set_block(n, f.block(n));
  return out;
}

void require_shape(const GradedMap& f, const GradedSpace& src, const GradedSpace& tgt,
                   const Field& fl, const char* what) {
  if (f.field() != fl) throw std::invalid_argument(std::string(what) + ": field mismatch");
  if (f.degree() != 0)
    throw std::invalid_argument(std::string(what) + ": expected degree 0, got " +
                                std::to_string(f.degree()));
  if (f.source() != src)
    throw std::invalid_argument(std::string(what) + ": source has wrong dimensions");
  if (f.target() != tgt)
    throw std::invalid_argument(std::string(what) + ": target has wrong dimensions");
}

GradedMap tensor_d(const ChainComplex& x, const ChainComplex& y) {
  GradedMap idx = GradedMap::identity(x.space(), x.field());
  GradedMap idy = GradedMap::identity(y.space(), y.field());
  return map_add(tensor_map(x.d(), idy), tensor_map(idx, y.d()));
}

}  // namespace

Verified<DGAStructure> verify_dga(const ChainComplex& carrier, const GradedMap& mult,
                                  const GradedMap& unit) {
  const Field& f = carrier.field();
  const GradedSpace& r = carrier.space();
  GradedSpace rr = tensor_space(r, r);
  require_shape(mult, rr, r, f, "mult");
  require_shape(unit, unit_space(), r, f, "unit");

  GradedMap mu = reanchor(mult, rr, r);
  GradedMap i = reanchor(unit, unit_space(), r);
  GradedMap id = GradedMap::identity(r, f);

  Verified<DGAStructure> out;
  out.report.entries.push_back(
      check_equal("leibniz", compose(carrier.d(), mu), compose(mu, tensor_d(carrier, carrier))));
  out.report.entries.push_back(check_equal(
      "unit_chain", compose(carrier.d(), i), GradedMap(unit_space(), r, -1, f)));
  out.report.entries.push_back(
      check_equal("assoc", compose(mu, tensor_map(id, mu)), compose(mu, tensor_map(mu, id))));
  out.report.entries.push_back(check_equal(
      "unit_L", compose(mu, compose(tensor_map(i, id), unit_left_intro(r, f))), id));
  out.report.entries.push_back(check_equal(
      "unit_R", compose(mu, compose(tensor_map(id, i), unit_right_intro(r, f))), id));

  if (out.report.all_pass()) out.value = DGAStructure{carrier, mu, i};
  return out;
}

Verified<DGAMorphism> verify_dga_map(const DGAStructure& a, const DGAStructure& b,
                                     const GradedMap& f) {
  const Field& fl = a.carrier.field();
  if (b.carrier.field() != fl) throw std::invalid_argument("dga map: field mismatch");
  require_shape(f, a.carrier.space(), b.carrier.space(), fl, "dga map");
  GradedMap g = reanchor(f, a.carrier.space(), b.carrier.space());

  Verified<DGAMorphism> out;
  out.report.entries.push_back(chain_map_entry("chain", a.carrier, b.carrier, g));
  out.report.entries.push_back(
      check_equal("mult", compose(g, a.mult), compose(b.mult, tensor_map(g, g))));
  out.report.entries.push_back(check_equal("unit", compose(g, a.unit), b.unit));

  if (out.report.all_pass()) out.value = DGAMorphism{a, b, g};
  return out;
}

Verified<BimoduleStructure> verify_bimodule(const DGAStructure& ring,
                                            const ChainComplex& carrier, const GradedMap& left,
                                            const GradedMap& right) {
  const Field& fl = ring.carrier.field();
  if (carrier.field() != fl) throw std::invalid_argument("bimodule: field mismatch");
  const GradedSpace& r = ring.carrier.space();
  const GradedSpace& m = carrier.space();
  GradedSpace rm = tensor_space(r, m), mr = tensor_space(m, r);
  require_shape(left, rm, m, fl, "left action");
  require_shape(right, mr, m, fl, "right action");

  GradedMap l = reanchor(left, rm, m);
  GradedMap rr = reanchor(right, mr, m);
  const GradedMap& mu = ring.mult;
  const GradedMap& i = ring.unit;
  GradedMap id_r = GradedMap::identity(r, fl);
  GradedMap id_m = GradedMap::identity(m, fl);

  Verified<BimoduleStructure> out;
  auto& e = out.report.entries;
  e.push_back(check_equal("chain_L", compose(carrier.d(), l),
                          compose(l, tensor_d(ring.carrier, carrier))));
  e.push_back(check_equal("chain_R", compose(carrier.d(), rr),
                          compose(rr, tensor_d(carrier, ring.carrier))));
  e.push_back(check_equal("aaab", compose(l, tensor_map(id_r, l)),
                          compose(l, tensor_map(mu, id_m))));
  e.push_back(check_equal("abbb", compose(rr, tensor_map(id_m, mu)),
                          compose(rr, tensor_map(rr, id_r))));
  e.push_back(check_equal("aabb", compose(l, tensor_map(id_r, rr)),
                          compose(rr, tensor_map(l, id_r))));
  e.push_back(check_equal(
      "unit_L", compose(l, compose(tensor_map(i, id_m), unit_left_intro(m, fl))), id_m));
  e.push_back(check_equal(
      "unit_R", compose(rr, compose(tensor_map(id_m, i), unit_right_intro(m, fl))), id_m));

  if (out.report.all_pass()) out.value = BimoduleStructure{ring, carrier, l, rr};
  return out;
}

}  // namespace dgideal
