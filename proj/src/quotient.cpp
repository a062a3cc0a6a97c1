#include "dgideal/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgideal {

namespace {

/* Roll a sub-report into one entry, keeping the first failing witness. */
ReportEntry aggregate(const std::string& label, const DiagramReport& rep) {
  ReportEntry e;
  e.label = label;
  e.pass = rep.all_pass();
  for (const auto& x : rep.entries) e.failure_count += x.failure_count;
  if (!e.pass)
    for (const auto& x : rep.entries)
      if (!x.pass && x.witness) {
        e.witness = x.witness;
        break;
      }
  return e;
}

ReportEntry bool_entry(const std::string& label, bool pass) {
  ReportEntry e;
  e.label = label;
  e.pass = pass;
  e.failure_count = pass ? 0 : 1;
  return e;
}

}  // namespace

ConeDgaResult cone_dga(const IdealData& r) {
  const DGAStructure& ring = r.bim.ring;
  const Field& fl = ring.carrier.field();
  const GradedSpace& rs = ring.carrier.space();

  ConeDgaResult out;
  out.parts = cone(r.j);
  const ChainComplex& c = out.parts.cone;
  const GradedSpace& cs = c.space();

  // Addresses a (x) b inside src by concatenating flat factor tuples, so a
  // component that is itself a tensor product (a free square, say) resolves
  // to the right column.
  auto pair_rank = [](const GradedMap& action, const GradedSpace& x, int nx, int ix,
                      const GradedSpace& y, int ny, int iy) {
    MultiIndex mi = x.flatten_index(nx, ix);
    MultiIndex rest = y.flatten_index(ny, iy);
    mi.insert(mi.end(), rest.begin(), rest.end());
    return action.source().tensor_rank(nx + ny, mi);
  };
  const GradedSpace& is = r.bim.carrier.space();

  GradedSpace t = tensor_space(cs, cs);
  out.mult = from_columns(t, cs, 0, fl, [&](int n, int col) {
    const MultiIndex& mi = t.tensor_basis(n)[col];
    auto [n1, i1] = mi[0];
    auto [n2, i2] = mi[1];
    std::vector<Scalar> res(cs.dim(n));
    int rd1 = rs.dim(n1), rd2 = rs.dim(n2), rout = rs.dim(n);
    bool in_r1 = i1 < rd1, in_r2 = i2 < rd2;
    if (in_r1 && in_r2) {
      int cc = pair_rank(ring.mult, rs, n1, i1, rs, n2, i2);
      auto v = ring.mult.block(n).col(cc);
      for (int k = 0; k < (int)v.size(); ++k) res[k] = v[k];
    } else if (in_r1 && !in_r2) {
      // r * x' picks up (-1)^{|r|} against the suspension
      int cc = pair_rank(r.bim.left, rs, n1, i1, is, n2 - 1, i2 - rd2);
      auto v = r.bim.left.block(n - 1).col(cc);
      Scalar sg = (n1 % 2 == 0) ? fl.one() : fl.neg(fl.one());
      for (int k = 0; k < (int)v.size(); ++k) res[rout + k] = fl.mul(sg, v[k]);
    } else if (!in_r1 && in_r2) {
      int cc = pair_rank(r.bim.right, is, n1 - 1, i1 - rd1, rs, n2, i2);
      auto v = r.bim.right.block(n - 1).col(cc);
      for (int k = 0; k < (int)v.size(); ++k) res[rout + k] = v[k];
    }
    // suspension * suspension is zero
    return res;
  });

  out.unit = from_columns(unit_space(), cs, 0, fl, [&](int, int) {
    std::vector<Scalar> res(cs.dim(0));
    auto v = ring.unit.block(0).col(0);
    for (int k = 0; k < (int)v.size(); ++k) res[k] = v[k];
    return res;
  });

  out.dga = verify_dga(c, out.mult, out.unit);
  out.report = out.dga.report;
  const GradedMap& inc = out.parts.include_target.map();
  out.report.entries.push_back(chain_map_entry("incl.chain", ring.carrier, c, inc));
  out.report.entries.push_back(check_equal("incl.mult", compose(inc, ring.mult),
                                           compose(out.mult, tensor_map(inc, inc))));
  out.report.entries.push_back(check_equal("incl.unit", compose(inc, ring.unit), out.unit));
  return out;
}

StrictQuotientData strict_quotient_dga(const IdealData& r) {
  const DGAStructure& ring = r.bim.ring;
  const Field& fl = ring.carrier.field();
  const GradedSpace& rs = ring.carrier.space();
  const GradedSpace& is = r.bim.carrier.space();
  const GradedMap& j = r.j.map();

  for (int n : is.degrees())
    if (rank(fl, j.block(n)) != is.dim(n))
      throw std::invalid_argument("strict quotient needs an embedded ideal: j is not injective in degree " +
                                  std::to_string(n));

  /* Row-reduce the embedded ideal; the ring basis vectors away from the
     pivot coordinates represent the quotient. */
  std::map<int, Rref> rows;
  std::map<int, std::vector<int>> keep;
  std::map<int, std::vector<std::string>> qbasis;
  for (int n : rs.degrees()) {
    Rref e = rref(fl, mat_transpose(j.block(n)));
    std::vector<int> k;
    for (int c = 0; c < rs.dim(n); ++c)
      if (std::find(e.pivot_cols.begin(), e.pivot_cols.end(), c) == e.pivot_cols.end())
        k.push_back(c);
    for (int c : k) qbasis[n].push_back(rs.label(n, c));
    rows[n] = std::move(e);
    keep[n] = std::move(k);
  }
  GradedSpace qs{qbasis};

  StrictQuotientData out;
  out.projection = GradedMap(rs, qs, 0, fl);
  out.lift = GradedMap(qs, rs, 0, fl);
  for (int n : rs.degrees()) {
    const auto& k = keep[n];
    if (k.empty()) continue;
    const Rref& e = rows[n];
    Matrix p((int)k.size(), rs.dim(n));
    Matrix l(rs.dim(n), (int)k.size());
    for (int idx = 0; idx < (int)k.size(); ++idx) {
      p.at(idx, k[idx]) = fl.one();
      l.at(k[idx], idx) = fl.one();
    }
    for (int pr = 0; pr < (int)e.pivot_cols.size(); ++pr)
      for (int idx = 0; idx < (int)k.size(); ++idx)
        p.at(idx, e.pivot_cols[pr]) = fl.neg(e.m.at(pr, k[idx]));
    out.projection.set_block(n, std::move(p));
    out.lift.set_block(n, std::move(l));
  }

  GradedMap dq = compose(out.projection, compose(ring.carrier.d(), out.lift));
  out.quotient = ChainComplex(qs, std::move(dq));
  out.mult = compose(out.projection, compose(ring.mult, tensor_map(out.lift, out.lift)));
  out.unit = compose(out.projection, ring.unit);

  out.dga = verify_dga(out.quotient, out.mult, out.unit);
  out.report.append(out.dga.report, "q.");

  out.report.entries.push_back(
      chain_map_entry("proj.chain", ring.carrier, out.quotient, out.projection));
  out.report.entries.push_back(
      check_equal("proj.mult", compose(out.projection, ring.mult),
                  compose(out.mult, tensor_map(out.projection, out.projection))));
  out.report.entries.push_back(
      check_equal("proj.unit", compose(out.projection, ring.unit), out.unit));

  ConeDgaResult cd = cone_dga(r);
  GradedMap phi =
      compose(out.projection, dsum_proj1(rs, shift_space(is, 1), fl));
  ReportEntry cmp_chain = chain_map_entry("cmp.chain", cd.parts.cone, out.quotient, phi);
  bool chain_ok = cmp_chain.pass;
  out.report.entries.push_back(std::move(cmp_chain));
  out.report.entries.push_back(check_equal("cmp.mult", compose(phi, cd.mult),
                                           compose(out.mult, tensor_map(phi, phi))));
  out.report.entries.push_back(check_equal("cmp.unit", compose(phi, cd.unit), out.unit));
  out.report.entries.push_back(bool_entry(
      "cmp.qis",
      chain_ok && is_quasi_iso(ChainMap(cd.parts.cone, out.quotient, phi)).ok));
  return out;
}

FiberData fiber_ideal(const DGAMorphism& f) {
  const DGAStructure& a = f.source;
  const DGAStructure& b = f.target;
  const Field& fl = a.carrier.field();
  const GradedSpace& rs = a.carrier.space();

  for (int n : b.carrier.space().degrees())
    if (rank(fl, f.map.block(n)) != b.carrier.space().dim(n))
      throw std::invalid_argument("fiber needs a degreewise surjection: not surjective in degree " +
                                  std::to_string(n));

  FiberData out;
  out.kernel = strict_kernel(ChainMap(a.carrier, b.carrier, f.map));
  const GradedMap& inc = out.kernel.include.map();
  const GradedSpace& is = out.kernel.kernel.space();
  GradedMap id_r = GradedMap::identity(rs, fl);

  GradedMap into_left = compose(a.mult, tensor_map(id_r, inc));   // R (x) K -> R
  GradedMap into_right = compose(a.mult, tensor_map(inc, id_r));  // K (x) R -> R

  out.left = GradedMap(into_left.source(), is, 0, fl);
  out.right = GradedMap(into_right.source(), is, 0, fl);
  for (int n : into_left.source().degrees()) {
    auto sol = solve_many(fl, inc.block(n), into_left.block(n));
    if (!sol) throw std::logic_error("kernel does not absorb left multiplication");
    if (is.dim(n) > 0) out.left.set_block(n, std::move(*sol));
  }
  for (int n : into_right.source().degrees()) {
    auto sol = solve_many(fl, inc.block(n), into_right.block(n));
    if (!sol) throw std::logic_error("kernel does not absorb right multiplication");
    if (is.dim(n) > 0) out.right.set_block(n, std::move(*sol));
  }

  Verified<BimoduleStructure> vb = verify_bimodule(a, out.kernel.kernel, out.left, out.right);
  out.report.append(vb.report, "bim.");
  if (vb.value) {
    IdealData idata = make_ideal_data(*vb.value, inc);
    Verified<SmithIdealData> built = build_ideal(idata);
    out.report.append(built.report);
    if (out.report.all_pass()) out.ideal = std::move(idata);
  }
  return out;
}

DiagramReport roundtrip_check(const DGAMorphism& f) {
  const DGAStructure& a = f.source;
  const DGAStructure& b = f.target;
  const Field& fl = a.carrier.field();
  const GradedSpace& rs = a.carrier.space();

  DiagramReport rep;
  FiberData fd = fiber_ideal(f);
  rep.entries.push_back(aggregate("fiber_valid", fd.report));
  if (!fd.ideal) return rep;
  const IdealData& idata = *fd.ideal;
  const GradedSpace& is = idata.bim.carrier.space();

  ConeDgaResult cd = cone_dga(idata);
  rep.entries.push_back(aggregate("cone_valid", cd.report));

  GradedMap phi = compose(f.map, dsum_proj1(rs, shift_space(is, 1), fl));
  ReportEntry cmp_chain = chain_map_entry("cmp_chain", cd.parts.cone, b.carrier, phi);
  bool chain_ok = cmp_chain.pass;
  rep.entries.push_back(std::move(cmp_chain));
  rep.entries.push_back(check_equal("cmp_mult", compose(phi, cd.mult),
                                    compose(b.mult, tensor_map(phi, phi))));
  rep.entries.push_back(check_equal("cmp_unit", compose(phi, cd.unit), b.unit));
  rep.entries.push_back(bool_entry(
      "cmp_qis", chain_ok && is_quasi_iso(ChainMap(cd.parts.cone, b.carrier, phi)).ok));

  StrictQuotientData sq = strict_quotient_dga(idata);
  rep.entries.push_back(aggregate("strict_valid", sq.report));
  GradedMap psi = compose(f.map, sq.lift);
  rep.entries.push_back(bool_entry(
      "strict_cmp_qis", is_quasi_iso(ChainMap(sq.quotient, b.carrier, psi)).ok));

  if (!sq.dga.value) {
    rep.entries.push_back(bool_entry("refiber_valid", false));
    return rep;
  }
  Verified<DGAMorphism> vp = verify_dga_map(a, *sq.dga.value, sq.projection);
  if (!vp.value) {
    rep.entries.push_back(bool_entry("refiber_valid", false));
    return rep;
  }
  FiberData fd2 = fiber_ideal(*vp.value);
  rep.entries.push_back(aggregate("refiber_valid", fd2.report));
  if (!fd2.ideal) return rep;

  const GradedMap& inc1 = fd.kernel.include.map();
  const GradedMap& inc2 = fd2.kernel.include.map();
  GradedMap chi(fd.kernel.kernel.space(), fd2.kernel.kernel.space(), 0, fl);
  bool solvable = true;
  for (int n : fd.kernel.kernel.space().degrees()) {
    auto sol = solve_many(fl, inc2.block(n), inc1.block(n));
    if (!sol) {
      solvable = false;
      break;
    }
    if (fd2.kernel.kernel.space().dim(n) > 0) chi.set_block(n, std::move(*sol));
  }
  if (!solvable) {
    for (const char* l : {"refiber_iso_chain", "refiber_iso_actions_L", "refiber_iso_actions_R",
                          "refiber_iso_j", "refiber_iso_invertible"})
      rep.entries.push_back(bool_entry(l, false));
    return rep;
  }

  GradedMap id_r = GradedMap::identity(rs, fl);
  rep.entries.push_back(check_equal("refiber_iso_chain",
                                    compose(fd2.kernel.kernel.d(), chi),
                                    compose(chi, fd.kernel.kernel.d())));
  rep.entries.push_back(check_equal("refiber_iso_actions_L",
                                    compose(chi, idata.bim.left),
                                    compose(fd2.ideal->bim.left, tensor_map(id_r, chi))));
  rep.entries.push_back(check_equal("refiber_iso_actions_R",
                                    compose(chi, idata.bim.right),
                                    compose(fd2.ideal->bim.right, tensor_map(chi, id_r))));
  rep.entries.push_back(check_equal("refiber_iso_j", compose(inc2, chi), inc1));
  bool inv = true;
  for (int n : fd.kernel.kernel.space().degrees()) {
    Matrix m = chi.block(n);
    if (m.rows() != m.cols() || rank(fl, m) != m.rows()) inv = false;
  }
  if (fd2.kernel.kernel.space().total_dim() != fd.kernel.kernel.space().total_dim()) inv = false;
  rep.entries.push_back(bool_entry("refiber_iso_invertible", inv));
  return rep;
}

}  // namespace dgideal
