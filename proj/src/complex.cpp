#include "dgideal/complex.hpp"

#include <set>
#include <stdexcept>

namespace dgideal {

ChainComplex::ChainComplex(GradedSpace space, const Field& field)
    : space_(space), d_(space, space, -1, field) {}

ChainComplex::ChainComplex(GradedSpace space, GradedMap d) : space_(std::move(space)), d_(std::move(d)) {
  if (d_.degree() != -1)
    throw std::invalid_argument("differential must have degree -1, got " +
                                std::to_string(d_.degree()));
  if (d_.source() != space_ || d_.target() != space_)
    throw std::invalid_argument("differential is not an endomorphism of the carrier");
  GradedMap dd = compose(d_, d_);
  for (int n : space_.degrees())
    if (!dd.block(n).is_zero())
      throw std::invalid_argument("d*d != 0 starting in degree " + std::to_string(n));
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, GradedMap map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.degree() != 0)
    throw std::invalid_argument("chain map must have degree 0, got " +
                                std::to_string(map_.degree()));
  if (map_.source() != source_.space() || map_.target() != target_.space())
    throw std::invalid_argument("chain map endpoints do not match the complexes");
  if (map_.field() != source_.field() || map_.field() != target_.field())
    throw std::invalid_argument("chain map field does not match the complexes");
  GradedMap lhs = compose(target_.d(), map_);
  GradedMap rhs = compose(map_, source_.d());
  for (int n : source_.space().degrees())
    if (lhs.block(n) != rhs.block(n))
      throw std::invalid_argument("map does not commute with d in degree " + std::to_string(n));
}

ReportEntry chain_map_entry(const std::string& label, const ChainComplex& src,
                            const ChainComplex& dst, const GradedMap& f) {
  return check_equal(label, compose(dst.d(), f), compose(f, src.d()));
}

ChainComplex tensor_complex(const ChainComplex& x, const ChainComplex& y) {
  GradedSpace sp = tensor_space(x.space(), y.space());
  GradedMap idx = GradedMap::identity(x.space(), x.field());
  GradedMap idy = GradedMap::identity(y.space(), y.field());
  GradedMap d = map_add(tensor_map(x.d(), idy), tensor_map(idx, y.d()));
  return ChainComplex(sp, std::move(d));
}

ChainComplex shift_complex(const ChainComplex& x, int k) {
  GradedSpace sp = shift_space(x.space(), k);
  const Field& f = x.field();
  GradedMap d(sp, sp, -1, f);
  Scalar sign = (k % 2 == 0) ? f.one() : f.neg(f.one());
  for (int n : x.space().degrees()) {
    if (sp.dim(n + k - 1) == 0) continue;
    d.set_block(n + k, mat_scale(f, sign, x.d().block(n)));
  }
  return ChainComplex(sp, std::move(d));
}

ChainComplex direct_sum(const ChainComplex& x, const ChainComplex& y) {
  return ChainComplex(direct_sum(x.space(), y.space()), direct_sum(x.d(), y.d()));
}

ChainComplex unit_complex(const Field& f) { return ChainComplex(unit_space(), f); }

ConeData cone(const ChainMap& f) {
  const ChainComplex& x = f.source();
  const ChainComplex& y = f.target();
  const Field& fl = f.map().field();
  GradedSpace xs = shift_space(x.space(), 1);
  GradedSpace c = direct_sum(y.space(), xs);

  GradedMap d(c, c, -1, fl);
  for (int n : c.degrees()) {
    int ry = y.space().dim(n - 1), rx = x.space().dim(n - 2);
    int cy = y.space().dim(n), cx = x.space().dim(n - 1);
    if (ry + rx == 0) continue;
    Matrix m(ry + rx, cy + cx);
    Matrix dy = y.d().block(n);
    for (int i = 0; i < dy.rows(); ++i)
      for (int j = 0; j < dy.cols(); ++j) m.at(i, j) = dy.at(i, j);
    Matrix fb = f.map().block(n - 1);
    for (int i = 0; i < fb.rows(); ++i)
      for (int j = 0; j < fb.cols(); ++j) m.at(i, cy + j) = fb.at(i, j);
    Matrix dx = x.d().block(n - 1);
    for (int i = 0; i < dx.rows(); ++i)
      for (int j = 0; j < dx.cols(); ++j) m.at(ry + i, cy + j) = fl.neg(dx.at(i, j));
    d.set_block(n, std::move(m));
  }
  ChainComplex cc(c, std::move(d));

  ConeData out;
  out.include_target = ChainMap(y, cc, dsum_inc1(y.space(), xs, fl));
  out.project_source_shift = ChainMap(cc, shift_complex(x, 1), dsum_proj2(y.space(), xs, fl));
  out.cone = std::move(cc);
  return out;
}

KernelData strict_kernel(const ChainMap& f) {
  const ChainComplex& x = f.source();
  const Field& fl = f.map().field();

  std::map<int, Matrix> inc_blocks;
  std::map<int, std::vector<std::string>> basis;
  for (int n : x.space().degrees()) {
    Matrix k = kernel_basis(fl, f.map().block(n));
    if (k.cols() == 0) continue;
    std::vector<std::string> labs;
    for (int c = 0; c < k.cols(); ++c)
      labs.push_back(render_element(fl, x.space(), n, k.col(c)));
    basis[n] = std::move(labs);
    inc_blocks[n] = std::move(k);
  }
  GradedSpace ksp{basis};

  GradedMap inc(ksp, x.space(), 0, fl);
  for (auto& [n, m] : inc_blocks) inc.set_block(n, m);

  GradedMap dk(ksp, ksp, -1, fl);
  for (int n : ksp.degrees()) {
    Matrix down = mat_mul(fl, x.d().block(n), inc.block(n));
    Matrix below = inc.block(n - 1);  // zero-shaped when the kernel vanishes there
    auto sol = solve_many(fl, below, down);
    if (!sol) throw std::logic_error("kernel is not closed under d");
    if (ksp.dim(n - 1) > 0) dk.set_block(n, std::move(*sol));
    // otherwise `down` was zero and there is nothing to record
  }
  ChainComplex kernel(ksp, std::move(dk));

  KernelData out;
  out.include = ChainMap(kernel, x, std::move(inc));
  out.kernel = std::move(kernel);
  return out;
}

HomologyData homology(const ChainComplex& x) {
  const Field& f = x.field();
  HomologyData h;
  h.field_ = f;
  for (int n : x.space().degrees()) {
    Matrix z = kernel_basis(f, x.d().block(n));
    Matrix b = x.d().block(n + 1);
    int base_rank = rank(f, b);
    Matrix kept(x.space().dim(n), 0);
    Matrix span = b;
    int cur = base_rank;
    for (int c = 0; c < z.cols(); ++c) {
      Matrix col(x.space().dim(n), 1);
      col.set_col(0, z.col(c));
      Matrix cand = mat_hcat(span, col);
      if (rank(f, cand) > cur) {
        ++cur;
        span = std::move(cand);
        kept = mat_hcat(kept, col);
      }
    }
    if (kept.cols() > 0) h.dims_[n] = kept.cols();
    h.reps_[n] = std::move(kept);
    h.boundaries_[n] = std::move(b);
  }
  return h;
}

int HomologyData::dim(int n) const {
  auto it = dims_.find(n);
  return it == dims_.end() ? 0 : it->second;
}

const Matrix& HomologyData::reps(int n) const {
  static const Matrix empty;
  auto it = reps_.find(n);
  return it == reps_.end() ? empty : it->second;
}

std::optional<std::vector<Scalar>> HomologyData::coords(int n, const std::vector<Scalar>& cycle) const {
  auto rit = reps_.find(n);
  auto bit = boundaries_.find(n);
  if (rit == reps_.end()) {
    for (const auto& v : cycle)
      if (!field_.is_zero(v)) return std::nullopt;
    return std::vector<Scalar>{};
  }
  Matrix sys = mat_hcat(rit->second, bit->second);
  auto sol = solve(field_, sys, cycle);
  if (!sol) return std::nullopt;
  return std::vector<Scalar>(sol->begin(), sol->begin() + rit->second.cols());
}

QuasiIsoReport is_quasi_iso(const ChainMap& f) {
  const Field& fl = f.map().field();
  HomologyData hx = homology(f.source());
  HomologyData hy = homology(f.target());

  QuasiIsoReport out;
  out.source_dims = hx.dims();
  out.target_dims = hy.dims();

  std::set<int> degs;
  for (const auto& [n, k] : hx.dims()) degs.insert(n);
  for (const auto& [n, k] : hy.dims()) degs.insert(n);
  for (int n : degs) {
    bool bad = false;
    if (hx.dim(n) != hy.dim(n)) {
      bad = true;
    } else {
      Matrix m(hy.dim(n), hx.dim(n));
      const Matrix& r = hx.reps(n);
      for (int c = 0; c < r.cols(); ++c) {
        auto img = hy.coords(n, f.map().apply(n, r.col(c)));
        if (!img) throw std::logic_error("chain map image is not a cycle");
        m.set_col(c, *img);
      }
      if (rank(fl, m) != hx.dim(n)) bad = true;
    }
    if (bad) {
      out.ok = false;
      if (!out.first_bad_degree) out.first_bad_degree = n;
    }
  }
  return out;
}

}  // namespace dgideal
