#include "dgideal/smith.hpp"

#include <stdexcept>

namespace dgideal {

namespace {

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

void require_chain(const char* what, const ChainComplex& src, const ChainComplex& dst,
                   const GradedMap& f) {
  GradedMap lhs = compose(dst.d(), f);
  GradedMap rhs = compose(f, src.d());
  for (int n : src.space().degrees())
    if (lhs.block(n) != rhs.block(n))
      throw std::invalid_argument(std::string(what) + " is not a chain map in degree " +
                                  std::to_string(n));
}

}  // namespace

IdealData make_ideal_data(BimoduleStructure bim, GradedMap j) {
  const Field& fl = bim.ring.carrier.field();
  require_shape(j, bim.carrier.space(), bim.ring.carrier.space(), fl, "j");
  GradedMap g = reanchor(j, bim.carrier.space(), bim.ring.carrier.space());
  ChainMap jm(bim.carrier, bim.ring.carrier, std::move(g));  // throws when not a chain map
  return IdealData{std::move(bim), std::move(jm)};
}

SmithIdealData make_smith(DGAStructure ring, ChainComplex ideal, GradedMap mu_L,
                          GradedMap mu_R, GradedMap nu_L, GradedMap nu_R) {
  const Field& fl = ring.carrier.field();
  if (ideal.field() != fl) throw std::invalid_argument("ideal carrier: field mismatch");
  const GradedSpace& r = ring.carrier.space();
  const GradedSpace& i = ideal.space();
  GradedSpace ri = tensor_space(r, i), ir = tensor_space(i, r);
  require_shape(mu_L, ri, i, fl, "mu_L");
  require_shape(mu_R, ir, i, fl, "mu_R");
  require_shape(nu_L, ri, r, fl, "nu_L");
  require_shape(nu_R, ir, r, fl, "nu_R");

  GradedMap m_l = reanchor(mu_L, ri, i), m_r = reanchor(mu_R, ir, i);
  GradedMap n_l = reanchor(nu_L, ri, r), n_r = reanchor(nu_R, ir, r);
  SmithIdealData s{std::move(ring), std::move(ideal), std::move(m_l), std::move(m_r),
                   std::move(n_l), std::move(n_r)};

  ChainComplex cri = tensor_complex(s.ring.carrier, s.ideal);
  ChainComplex cir = tensor_complex(s.ideal, s.ring.carrier);
  require_chain("mu_L", cri, s.ideal, s.mu_L);
  require_chain("mu_R", cir, s.ideal, s.mu_R);
  require_chain("nu_L", cri, s.ring.carrier, s.nu_L);
  require_chain("nu_R", cir, s.ring.carrier, s.nu_R);
  return s;
}

DiagramReport verify_ideal(const SmithIdealData& s) {
  const Field& fl = s.ring.carrier.field();
  const GradedSpace& r = s.ring.carrier.space();
  const GradedSpace& i = s.ideal.space();
  GradedMap id_r = GradedMap::identity(r, fl);
  GradedMap id_i = GradedMap::identity(i, fl);

  /* hom(a,b) = I, every other hom object is R */
  auto hom_is_ideal = [](char p, char q) { return p == 'a' && q == 'b'; };
  auto ident = [&](char p, char q) -> const GradedMap& {
    return hom_is_ideal(p, q) ? id_i : id_r;
  };
  /* composition hom(p,q) (x) hom(q,t) -> hom(p,t); an I factor can never
     meet another I factor, so five maps cover all composable cases */
  auto compose_of = [&](char p, char q, char t) -> const GradedMap& {
    bool fst = hom_is_ideal(p, q), snd = hom_is_ideal(q, t), res = hom_is_ideal(p, t);
    if (!fst && !snd && !res) return s.ring.mult;  // R (x) R -> R
    if (!fst && snd && res) return s.mu_L;         // R (x) I -> I
    if (fst && !snd && res) return s.mu_R;         // I (x) R -> I
    if (!fst && snd && !res) return s.nu_L;        // R (x) I -> R
    if (fst && !snd && !res) return s.nu_R;        // I (x) R -> R
    throw std::logic_error("no such composition");
  };

  DiagramReport rep;
  const char letters[2] = {'a', 'b'};
  for (char w : letters)
    for (char x : letters)
      for (char y : letters)
        for (char z : letters) {
          GradedMap lhs = compose(compose_of(w, x, z),
                                  tensor_map(ident(w, x), compose_of(x, y, z)));
          GradedMap rhs = compose(compose_of(w, y, z),
                                  tensor_map(compose_of(w, x, y), ident(y, z)));
          ReportEntry e = check_equal(std::string{w, x, y, z}, lhs, rhs);
          if (!hom_is_ideal(w, x) && !hom_is_ideal(x, y) && !hom_is_ideal(y, z))
            e.duplicate_of = "dga.assoc";
          rep.entries.push_back(std::move(e));
        }

  const GradedMap& mu = s.ring.mult;
  const GradedMap& one = s.ring.unit;
  ReportEntry ua_l = check_equal(
      "unit_a", compose(mu, compose(tensor_map(one, id_r), unit_left_intro(r, fl))), id_r);
  ReportEntry ua_r = check_equal(
      "unit_a", compose(mu, compose(tensor_map(id_r, one), unit_right_intro(r, fl))), id_r);
  rep.entries.push_back(merge_entries("unit_a", ua_l, ua_r));
  rep.entries.push_back(check_equal(
      "unit_b_L", compose(s.mu_L, compose(tensor_map(one, id_i), unit_left_intro(i, fl))),
      id_i));
  rep.entries.push_back(check_equal(
      "unit_b_R", compose(s.mu_R, compose(tensor_map(id_i, one), unit_right_intro(i, fl))),
      id_i));
  return rep;
}

std::pair<GradedMap, GradedMap> derive_units(const SmithIdealData& s) {
  const Field& fl = s.ring.carrier.field();
  const GradedSpace& i = s.ideal.space();
  GradedMap id_i = GradedMap::identity(i, fl);
  GradedMap j_l = compose(
      s.nu_L, compose(tensor_map(s.ring.unit, id_i), unit_left_intro(i, fl)));
  GradedMap j_r = compose(
      s.nu_R, compose(tensor_map(id_i, s.ring.unit), unit_right_intro(i, fl)));
  return {std::move(j_l), std::move(j_r)};
}

Verified<IdealData> derive_reduced(const SmithIdealData& s) {
  const Field& fl = s.ring.carrier.field();
  const GradedSpace& r = s.ring.carrier.space();
  const GradedSpace& i = s.ideal.space();
  GradedMap id_r = GradedMap::identity(r, fl);
  GradedMap id_i = GradedMap::identity(i, fl);
  const GradedMap& mu = s.ring.mult;

  Verified<IdealData> out;
  out.report = verify_ideal(s);

  Verified<BimoduleStructure> bim = verify_bimodule(s.ring, s.ideal, s.mu_L, s.mu_R);
  out.report.append(bim.report, "cond1.");

  auto& e = out.report.entries;
  e.push_back(check_equal("cond2.nuL_L", compose(mu, tensor_map(id_r, s.nu_L)),
                          compose(s.nu_L, tensor_map(mu, id_i))));
  e.push_back(check_equal("cond2.nuL_R", compose(s.nu_L, tensor_map(id_r, s.mu_R)),
                          compose(mu, tensor_map(s.nu_L, id_r))));
  e.push_back(check_equal("cond2.nuR_L", compose(mu, tensor_map(id_r, s.nu_R)),
                          compose(s.nu_R, tensor_map(s.mu_L, id_r))));
  e.push_back(check_equal("cond2.nuR_R", compose(s.nu_R, tensor_map(id_i, mu)),
                          compose(mu, tensor_map(s.nu_R, id_r))));

  auto [j_l, j_r] = derive_units(s);
  e.push_back(check_equal("cond3.j_match", j_l, j_r));
  const GradedMap& j = j_l;

  e.push_back(check_equal("cond4.module_L", compose(j, s.mu_L),
                          compose(mu, tensor_map(id_r, j))));
  e.push_back(check_equal("cond4.module_R", compose(j, s.mu_R),
                          compose(mu, tensor_map(j, id_r))));
  e.push_back(check_equal("cond5.central", compose(s.mu_L, tensor_map(j, id_i)),
                          compose(s.mu_R, tensor_map(id_i, j))));
  e.push_back(check_equal("cond6.nuL_via_j", s.nu_L, compose(j, s.mu_L)));
  e.push_back(check_equal("cond6.nuL_via_mu", s.nu_L, compose(mu, tensor_map(id_r, j))));
  e.push_back(check_equal("cond6.nuR_via_j", s.nu_R, compose(j, s.mu_R)));
  e.push_back(check_equal("cond6.nuR_via_mu", s.nu_R, compose(mu, tensor_map(j, id_r))));

  if (out.report.all_pass())
    out.value = IdealData{*bim.value, ChainMap(s.ideal, s.ring.carrier, j)};
  return out;
}

Verified<SmithIdealData> build_ideal(const IdealData& r) {
  const BimoduleStructure& bim = r.bim;
  const DGAStructure& ring = bim.ring;
  const Field& fl = ring.carrier.field();
  const GradedMap& j = r.j.map();
  GradedMap id_r = GradedMap::identity(ring.carrier.space(), fl);

  Verified<SmithIdealData> out;
  auto& e = out.report.entries;
  e.push_back(check_equal("module_L", compose(j, bim.left),
                          compose(ring.mult, tensor_map(id_r, j))));
  e.push_back(check_equal("module_R", compose(j, bim.right),
                          compose(ring.mult, tensor_map(j, id_r))));
  e.push_back(centrality_check(r));

  GradedMap nu_l = compose(j, bim.left);
  GradedMap nu_r = compose(j, bim.right);
  SmithIdealData s =
      make_smith(ring, bim.carrier, bim.left, bim.right, std::move(nu_l), std::move(nu_r));
  out.report.append(verify_ideal(s));

  if (out.report.all_pass()) out.value = std::move(s);
  return out;
}

ReportEntry centrality_check(const IdealData& r) {
  const Field& fl = r.bim.ring.carrier.field();
  GradedMap id_i = GradedMap::identity(r.bim.carrier.space(), fl);
  return check_equal("central", compose(r.bim.left, tensor_map(r.j.map(), id_i)),
                     compose(r.bim.right, tensor_map(id_i, r.j.map())));
}

DiagramReport verify_smith(const IdealData& r) {
  const BimoduleStructure& bim = r.bim;
  const DGAStructure& ring = bim.ring;
  const Field& fl = ring.carrier.field();
  const GradedMap& j = r.j.map();
  GradedMap id_r = GradedMap::identity(ring.carrier.space(), fl);

  DiagramReport rep;
  rep.append(verify_bimodule(ring, bim.carrier, bim.left, bim.right).report, "bim.");
  rep.entries.push_back(check_equal("module_L", compose(j, bim.left),
                                    compose(ring.mult, tensor_map(id_r, j))));
  rep.entries.push_back(check_equal("module_R", compose(j, bim.right),
                                    compose(ring.mult, tensor_map(j, id_r))));
  rep.entries.push_back(centrality_check(r));
  return rep;
}

}  // namespace dgideal
