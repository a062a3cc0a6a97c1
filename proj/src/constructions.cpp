#include "dgideal/constructions.hpp"

#include <array>
#include <stdexcept>

namespace dgideal {

namespace {

/* Canonical representative of v modulo the column span of m: reduce against
   the row echelon form of m^T so every pivot coordinate is cleared. Zero
   exactly when v lies in the span. */
std::vector<Scalar> residual_mod(const Field& f, const Matrix& m, std::vector<Scalar> v) {
  Rref e = rref(f, mat_transpose(m));
  for (int pr = 0; pr < (int)e.pivot_cols.size(); ++pr) {
    Scalar c = v[e.pivot_cols[pr]];
    if (f.is_zero(c)) continue;
    for (int k = 0; k < (int)v.size(); ++k)
      v[k] = f.sub(v[k], f.mul(c, e.m.at(pr, k)));
  }
  return v;
}

bool all_zero(const Field& f, const std::vector<Scalar>& v) {
  for (const auto& s : v)
    if (!f.is_zero(s)) return false;
  return true;
}

}  // namespace

IdealData span_ideal(const DGAStructure& ring, const std::map<int, Matrix>& span) {
  const Field& fl = ring.carrier.field();
  const GradedSpace& rs = ring.carrier.space();

  std::map<int, std::vector<std::string>> basis;
  for (const auto& [n, m] : span) {
    if (m.rows() != rs.dim(n))
      throw std::invalid_argument("span: wrong number of rows in degree " + std::to_string(n));
    if (m.cols() == 0) continue;
    if (rank(fl, m) != m.cols())
      throw std::invalid_argument("span: dependent columns in degree " + std::to_string(n));
    for (int c = 0; c < m.cols(); ++c)
      basis[n].push_back(render_element(fl, rs, n, m.col(c)));
  }
  GradedSpace is{basis};
  GradedMap inc(is, rs, 0, fl);
  for (const auto& [n, m] : span)
    if (m.cols() > 0) inc.set_block(n, m);

  GradedMap di(is, is, -1, fl);
  for (int n : is.degrees()) {
    auto sol =
        solve_many(fl, inc.block(n - 1), mat_mul(fl, ring.carrier.d().block(n), inc.block(n)));
    if (!sol)
      throw std::invalid_argument("span is not closed under d in degree " + std::to_string(n));
    if (is.dim(n - 1) > 0) di.set_block(n, std::move(*sol));
  }
  ChainComplex carrier(is, std::move(di));

  GradedMap id_r = GradedMap::identity(rs, fl);
  GradedMap into_left = compose(ring.mult, tensor_map(id_r, inc));
  GradedMap into_right = compose(ring.mult, tensor_map(inc, id_r));
  GradedMap left(into_left.source(), is, 0, fl);
  GradedMap right(into_right.source(), is, 0, fl);
  for (int n : into_left.source().degrees()) {
    auto sol = solve_many(fl, inc.block(n), into_left.block(n));
    if (!sol)
      throw std::invalid_argument("span is not a left ideal in degree " + std::to_string(n));
    if (is.dim(n) > 0) left.set_block(n, std::move(*sol));
  }
  for (int n : into_right.source().degrees()) {
    auto sol = solve_many(fl, inc.block(n), into_right.block(n));
    if (!sol)
      throw std::invalid_argument("span is not a right ideal in degree " + std::to_string(n));
    if (is.dim(n) > 0) right.set_block(n, std::move(*sol));
  }

  Verified<BimoduleStructure> vb = verify_bimodule(ring, carrier, left, right);
  if (!vb.value) throw std::logic_error("closed span failed bimodule verification");
  return make_ideal_data(std::move(*vb.value), inc);
}

IdealData identity_ideal(const DGAStructure& ring) {
  Verified<BimoduleStructure> vb =
      verify_bimodule(ring, ring.carrier, ring.mult, ring.mult);
  if (!vb.value) throw std::logic_error("ring is not a bimodule over itself");
  return make_ideal_data(std::move(*vb.value),
                         GradedMap::identity(ring.carrier.space(), ring.carrier.field()));
}

IdealData zero_ideal(const DGAStructure& ring) {
  return span_ideal(ring, {});
}

IdealData sum_ideals(const IdealData& a, const IdealData& b) {
  const DGAStructure& ring = a.bim.ring;
  const Field& fl = ring.carrier.field();
  if (b.bim.ring.carrier.field() != fl || b.bim.ring.carrier.space() != ring.carrier.space() ||
      b.bim.ring.mult != ring.mult || b.bim.ring.unit != ring.unit)
    throw std::invalid_argument("sum_ideals: the ideals live over different algebras");

  ChainComplex carrier = direct_sum(a.bim.carrier, b.bim.carrier);
  const GradedSpace& ss = carrier.space();
  const GradedSpace& rs = ring.carrier.space();
  const GradedSpace& as = a.bim.carrier.space();

  /* The summand the tuple hits decides which action supplies the column; the
     ring part of the tuple transfers unchanged. */
  GradedSpace tl = tensor_space(rs, ss);
  GradedMap left = from_columns(tl, ss, 0, fl, [&](int n, int col) {
    MultiIndex mi = tl.tensor_basis(n)[col];
    auto [n2, i2] = mi.back();
    std::vector<Scalar> res(ss.dim(n));
    if (i2 < as.dim(n2)) {
      auto v = a.bim.left.block(n).col(a.bim.left.source().tensor_rank(n, mi));
      for (int k = 0; k < (int)v.size(); ++k) res[k] = v[k];
    } else {
      mi.back() = {n2, i2 - as.dim(n2)};
      auto v = b.bim.left.block(n).col(b.bim.left.source().tensor_rank(n, mi));
      for (int k = 0; k < (int)v.size(); ++k) res[as.dim(n) + k] = v[k];
    }
    return res;
  });

  GradedSpace tr = tensor_space(ss, rs);
  GradedMap right = from_columns(tr, ss, 0, fl, [&](int n, int col) {
    MultiIndex mi = tr.tensor_basis(n)[col];
    auto [n1, i1] = mi.front();
    std::vector<Scalar> res(ss.dim(n));
    if (i1 < as.dim(n1)) {
      auto v = a.bim.right.block(n).col(a.bim.right.source().tensor_rank(n, mi));
      for (int k = 0; k < (int)v.size(); ++k) res[k] = v[k];
    } else {
      mi.front() = {n1, i1 - as.dim(n1)};
      auto v = b.bim.right.block(n).col(b.bim.right.source().tensor_rank(n, mi));
      for (int k = 0; k < (int)v.size(); ++k) res[as.dim(n) + k] = v[k];
    }
    return res;
  });

  GradedMap j(ss, rs, 0, fl);
  for (int n : ss.degrees()) {
    if (rs.dim(n) == 0) continue;
    j.set_block(n, mat_hcat(a.j.map().block(n), b.j.map().block(n)));
  }

  Verified<BimoduleStructure> vb = verify_bimodule(ring, carrier, left, right);
  if (!vb.value) throw std::logic_error("sum of bimodules failed verification");
  return make_ideal_data(std::move(*vb.value), std::move(j));
}

IdealData free_square_candidate(const DGAStructure& ring) {
  const Field& fl = ring.carrier.field();
  const GradedSpace& rs = ring.carrier.space();
  ChainComplex carrier = tensor_complex(ring.carrier, ring.carrier);
  GradedMap id_r = GradedMap::identity(rs, fl);
  GradedMap left = tensor_map(std::vector<GradedMap>{ring.mult, id_r});
  GradedMap right = tensor_map(std::vector<GradedMap>{id_r, ring.mult});

  Verified<BimoduleStructure> vb = verify_bimodule(ring, carrier, left, right);
  if (!vb.value) throw std::logic_error("free square failed bimodule verification");
  return make_ideal_data(std::move(*vb.value), ring.mult);
}

BimoduleStructure free_bimodule(const DGAStructure& ring, const ChainComplex& x) {
  const Field& fl = ring.carrier.field();
  ChainComplex carrier = tensor_complex(tensor_complex(ring.carrier, x), ring.carrier);
  GradedMap id_r = GradedMap::identity(ring.carrier.space(), fl);
  GradedMap id_x = GradedMap::identity(x.space(), fl);
  GradedMap left = tensor_map(std::vector<GradedMap>{ring.mult, id_x, id_r});
  GradedMap right = tensor_map(std::vector<GradedMap>{id_r, id_x, ring.mult});

  Verified<BimoduleStructure> vb = verify_bimodule(ring, carrier, left, right);
  if (!vb.value) throw std::logic_error("free bimodule failed verification");
  return std::move(*vb.value);
}

Verified<IdealData> discrete_import(const Field& f, const AlgebraPresentation& p,
                                    const Matrix& span) {
  int n = (int)p.labels.size();
  if ((int)p.unit.size() != n || (int)p.table.size() != n)
    throw std::invalid_argument("presentation: inconsistent sizes");
  for (const auto& row : p.table) {
    if ((int)row.size() != n) throw std::invalid_argument("presentation: inconsistent sizes");
    for (const auto& v : row)
      if ((int)v.size() != n) throw std::invalid_argument("presentation: inconsistent sizes");
  }
  if (span.rows() != n) throw std::invalid_argument("span: wrong number of rows");
  if (span.cols() > 0 && rank(f, span) != span.cols())
    throw std::invalid_argument("span: dependent columns");

  GradedSpace rs{std::map<int, std::vector<std::string>>{{0, p.labels}}};
  ChainComplex rc(rs, f);
  GradedSpace t = tensor_space(rs, rs);
  GradedMap mult = from_columns(t, rs, 0, f, [&](int, int col) {
    const MultiIndex& mi = t.tensor_basis(0)[col];
    return p.table[mi[0].second][mi[1].second];
  });
  GradedMap unit = from_columns(unit_space(), rs, 0, f, [&](int, int) { return p.unit; });
  Verified<DGAStructure> vd = verify_dga(rc, mult, unit);
  if (!vd.value)
    throw std::invalid_argument("presentation is not a unital associative algebra");

  Verified<IdealData> out;
  auto closure = [&](bool from_left) {
    ReportEntry e;
    e.label = from_left ? "two_sided_L" : "two_sided_R";
    e.pass = true;
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < span.cols(); ++c) {
        std::vector<Scalar> x = span.col(c);
        std::vector<Scalar> prod(n);
        for (int k = 0; k < n; ++k) {
          if (f.is_zero(x[k])) continue;
          const auto& row = from_left ? p.table[i][k] : p.table[k][i];
          for (int m = 0; m < n; ++m) prod[m] = f.add(prod[m], f.mul(x[k], row[m]));
        }
        std::vector<Scalar> res = residual_mod(f, span, prod);
        if (all_zero(f, res)) continue;
        e.pass = false;
        ++e.failure_count;
        if (!e.witness) {
          WitnessInfo w;
          w.degree = 0;
          std::string xlab = render_element(f, rs, 0, x);
          if (from_left) {
            w.atoms = {{0, i}, {0, c}};
            w.tuple = {p.labels[i], xlab};
          } else {
            w.atoms = {{0, c}, {0, i}};
            w.tuple = {xlab, p.labels[i]};
          }
          w.lhs = render_element(f, rs, 0, prod);
          w.rhs = render_element(f, rs, 0, res);
          e.witness = std::move(w);
        }
      }
    return e;
  };
  out.report.entries.push_back(closure(true));
  out.report.entries.push_back(closure(false));

  if (out.report.all_pass())
    out.value = span_ideal(*vd.value, std::map<int, Matrix>{{0, span}});
  return out;
}

namespace {

/* Degree-zero algebra: labels[0] must be the unit; prods lists e_i e_j = e_k
   for i, j >= 1, everything unlisted is zero. */
DGAStructure disc_ring(const Field& f, const std::vector<std::string>& labels,
                       const std::vector<std::array<int, 3>>& prods) {
  int n = (int)labels.size();
  GradedSpace rs{std::map<int, std::vector<std::string>>{{0, labels}}};
  ChainComplex rc(rs, f);
  GradedSpace t = tensor_space(rs, rs);
  GradedMap mult(t, rs, 0, f);
  auto set_prod = [&](int i, int j, int k) {
    mult.set(0, k, t.tensor_rank(0, MultiIndex{{0, i}, {0, j}}), f.one());
  };
  for (int i = 0; i < n; ++i) {
    set_prod(0, i, i);
    if (i > 0) set_prod(i, 0, i);
  }
  for (const auto& [i, j, k] : prods) set_prod(i, j, k);
  GradedMap unit(unit_space(), rs, 0, f);
  unit.set(0, 0, 0, f.one());

  Verified<DGAStructure> v = verify_dga(rc, mult, unit);
  if (!v.value) throw std::logic_error("catalog algebra failed verification: " + labels[0]);
  return std::move(*v.value);
}

IdealData basis_span(const DGAStructure& ring, const std::vector<std::pair<int, int>>& idx) {
  const GradedSpace& rs = ring.carrier.space();
  const Field& f = ring.carrier.field();
  std::map<int, std::vector<int>> by_deg;
  for (const auto& [n, i] : idx) by_deg[n].push_back(i);
  std::map<int, Matrix> span;
  for (const auto& [n, is] : by_deg) {
    Matrix m(rs.dim(n), (int)is.size());
    for (int c = 0; c < (int)is.size(); ++c) m.at(is[c], c) = f.one();
    span[n] = std::move(m);
  }
  return span_ideal(ring, span);
}

DGAMorphism checked_map(const DGAStructure& a, const DGAStructure& b, const GradedMap& g,
                        const std::string& name) {
  Verified<DGAMorphism> v = verify_dga_map(a, b, g);
  if (!v.value) throw std::logic_error("catalog morphism failed verification: " + name);
  return std::move(*v.value);
}

/* one |-> one, every other basis element |-> 0 */
DGAMorphism augmentation(const DGAStructure& a, const DGAStructure& ground,
                         const std::string& name) {
  GradedMap g(a.carrier.space(), ground.carrier.space(), 0, a.carrier.field());
  g.set(0, 0, 0, a.carrier.field().one());
  return checked_map(a, ground, g, name);
}

}  // namespace

const DGAStructure& Catalog::ring(const std::string& name) const {
  for (const auto& [n, r] : rings)
    if (n == name) return r;
  throw std::invalid_argument("no such ring in the catalog: " + name);
}

const IdealData& Catalog::ideal(const std::string& name) const {
  for (const auto& e : ideals)
    if (e.name == name) return e.data;
  throw std::invalid_argument("no such ideal in the catalog: " + name);
}

const DGAMorphism& Catalog::morphism(const std::string& name) const {
  for (const auto& e : morphisms)
    if (e.name == name) return e.map;
  throw std::invalid_argument("no such morphism in the catalog: " + name);
}

Catalog fixtures(const Field& f) {
  Catalog cat;

  DGAStructure ground = disc_ring(f, {"one"}, {});
  DGAStructure dual = disc_ring(f, {"one", "eps"}, {});
  DGAStructure tri = disc_ring(f, {"one", "x", "n"}, {{1, 1, 1}, {1, 2, 2}});
  DGAStructure uv2 = disc_ring(f, {"one", "u", "v"}, {});
  DGAStructure uv3 = disc_ring(f, {"one", "u", "v", "uu", "uv", "vv"},
                               {{1, 1, 3}, {1, 2, 4}, {2, 1, 4}, {2, 2, 5}});
  DGAStructure t2 = disc_ring(f, {"one", "t"}, {});
  DGAStructure t3 = disc_ring(f, {"one", "t", "t2"}, {{1, 1, 2}});
  DGAStructure t4 = disc_ring(f, {"one", "t", "t2", "t3"}, {{1, 1, 2}, {1, 2, 3}, {2, 1, 3}});
  DGAStructure ff = disc_ring(f, {"one", "g"}, {{1, 1, 1}});

  /* two-term complex with de = x and all products of x, e equal to zero */
  DGAStructure koszul = [&] {
    GradedSpace ks{std::map<int, std::vector<std::string>>{{0, {"one", "x"}}, {1, {"e"}}}};
    GradedMap d(ks, ks, -1, f);
    d.set(1, 1, 0, f.one());  // d e = x
    ChainComplex kc(ks, std::move(d));
    GradedSpace t = tensor_space(ks, ks);
    GradedMap mult(t, ks, 0, f);
    auto set_prod = [&](int n1, int i1, int n2, int i2, int k) {
      mult.set(n1 + n2, k, t.tensor_rank(n1 + n2, MultiIndex{{n1, i1}, {n2, i2}}), f.one());
    };
    set_prod(0, 0, 0, 0, 0);  // one * one
    set_prod(0, 0, 0, 1, 1);  // one * x
    set_prod(0, 1, 0, 0, 1);  // x * one
    set_prod(0, 0, 1, 0, 0);  // one * e
    set_prod(1, 0, 0, 0, 0);  // e * one
    GradedMap unit(unit_space(), ks, 0, f);
    unit.set(0, 0, 0, f.one());
    Verified<DGAStructure> v = verify_dga(kc, mult, unit);
    if (!v.value) throw std::logic_error("catalog algebra failed verification: koszul");
    return std::move(*v.value);
  }();

  cat.rings = {{"GROUND", ground}, {"DUAL", dual}, {"TRI", tri},  {"KOSZUL", koszul},
               {"UV2", uv2},       {"UV3", uv3},   {"T2", t2},    {"T3", t3},
               {"T4", t4},         {"FF", ff}};

  auto add = [&](const std::string& name, IdealData d, const std::string& note) {
    cat.ideals.push_back({name, std::move(d), note});
  };

  for (const auto& [name, r] : cat.rings) {
    add(name + ".zero", zero_ideal(r), "zero subobject");
    add(name + ".id", identity_ideal(r), "the algebra as an ideal of itself");
  }
  add("DUAL.eps", basis_span(dual, {{0, 1}}), "square-zero generator");
  add("TRI.nil", basis_span(tri, {{0, 2}}), "nilpotent column of the triangular algebra");
  add("KOSZUL.xe", basis_span(koszul, {{0, 1}, {1, 0}}), "acyclic two-term ideal with de = x");
  add("UV2.u", basis_span(uv2, {{0, 1}}), "one square-zero generator of two");
  add("UV2.v", basis_span(uv2, {{0, 2}}), "the other square-zero generator");
  add("UV3.u", basis_span(uv3, {{0, 1}, {0, 3}, {0, 4}}), "(u) in the truncated square");
  add("UV3.v", basis_span(uv3, {{0, 2}, {0, 4}, {0, 5}}), "(v) in the truncated square");
  add("T2.t", basis_span(t2, {{0, 1}}), "(t) with t^2 = 0");
  add("T3.t", basis_span(t3, {{0, 1}, {0, 2}}), "(t) with t^3 = 0");
  add("T3.t2", basis_span(t3, {{0, 2}}), "(t^2) with t^3 = 0");
  add("T4.t", basis_span(t4, {{0, 1}, {0, 2}, {0, 3}}), "(t) with t^4 = 0");
  add("T4.t2", basis_span(t4, {{0, 2}, {0, 3}}), "(t^2) with t^4 = 0");
  add("T4.t3", basis_span(t4, {{0, 3}}), "(t^3) with t^4 = 0");

  cat.morphisms.push_back({"GROUND.id",
                           checked_map(ground, ground,
                                       GradedMap::identity(ground.carrier.space(), f),
                                       "GROUND.id")});
  cat.morphisms.push_back({"DUAL.aug", augmentation(dual, ground, "DUAL.aug")});
  cat.morphisms.push_back({"KOSZUL.aug", augmentation(koszul, ground, "KOSZUL.aug")});
  cat.morphisms.push_back({"UV2.aug", augmentation(uv2, ground, "UV2.aug")});
  cat.morphisms.push_back({"UV3.aug", augmentation(uv3, ground, "UV3.aug")});
  cat.morphisms.push_back({"T2.aug", augmentation(t2, ground, "T2.aug")});
  cat.morphisms.push_back({"T3.aug", augmentation(t3, ground, "T3.aug")});
  cat.morphisms.push_back({"T4.aug", augmentation(t4, ground, "T4.aug")});

  GradedMap quot(tri.carrier.space(), ff.carrier.space(), 0, f);
  quot.set(0, 0, 0, f.one());  // one |-> one
  quot.set(0, 1, 1, f.one());  // x |-> g
  cat.morphisms.push_back({"TRI.quot", checked_map(tri, ff, quot, "TRI.quot")});

  return cat;
}

}  // namespace dgideal
