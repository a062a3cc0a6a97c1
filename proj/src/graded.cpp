#include "dgideal/graded.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgideal {

namespace {

std::string auto_label(int n, int i) {
  std::string d = n < 0 ? "m" + std::to_string(-n) : std::to_string(n);
  return "e" + d + "_" + std::to_string(i);
}

}  // namespace

GradedSpace::GradedSpace(const std::map<int, int>& dims) {
  for (const auto& [n, k] : dims) {
    if (k < 0) throw std::invalid_argument("negative dimension in degree " + std::to_string(n));
    if (k == 0) continue;
    std::vector<std::string> labs;
    for (int i = 0; i < k; ++i) labs.push_back(auto_label(n, i));
    basis_[n] = std::move(labs);
    dims_[n] = k;
  }
  build_atom_tuples();
}

GradedSpace::GradedSpace(std::map<int, std::vector<std::string>> basis) {
  for (auto& [n, labs] : basis) {
    if (labs.empty()) continue;
    dims_[n] = (int)labs.size();
    basis_[n] = std::move(labs);
  }
  build_atom_tuples();
}

void GradedSpace::build_atom_tuples() {
  for (const auto& [n, k] : dims_) {
    std::vector<MultiIndex> t;
    for (int i = 0; i < k; ++i) t.push_back({{n, i}});
    tuples_[n] = std::move(t);
  }
}

void GradedSpace::build_tensor_tuples() {
  /* global enumeration of each atom: degree ascending, then index */
  std::vector<std::vector<std::pair<int, int>>> flat;
  for (const auto& a : atoms_) {
    std::vector<std::pair<int, int>> e;
    for (const auto& [n, k] : a.dims_)
      for (int i = 0; i < k; ++i) e.push_back({n, i});
    flat.push_back(std::move(e));
  }
  for (const auto& e : flat)
    if (e.empty()) return;  // a zero factor kills the product

  /* odometer, leftmost factor most significant: lexicographic output order */
  std::vector<size_t> pos(flat.size(), 0);
  while (true) {
    MultiIndex mi;
    int total = 0;
    for (size_t k = 0; k < flat.size(); ++k) {
      mi.push_back(flat[k][pos[k]]);
      total += flat[k][pos[k]].first;
    }
    tuples_[total].push_back(std::move(mi));
    size_t k = flat.size();
    while (k > 0) {
      --k;
      if (++pos[k] < flat[k].size()) break;
      pos[k] = 0;
      if (k == 0) goto done;
    }
  }
done:
  for (const auto& [n, tups] : tuples_) {
    dims_[n] = (int)tups.size();
    std::vector<std::string> labs;
    for (const auto& mi : tups) {
      std::string l;
      for (size_t k = 0; k < mi.size(); ++k) {
        if (k) l += ".";
        l += atoms_[k].label(mi[k].first, mi[k].second);
      }
      labs.push_back(std::move(l));
    }
    basis_[n] = std::move(labs);
  }
}

int GradedSpace::dim(int n) const {
  auto it = dims_.find(n);
  return it == dims_.end() ? 0 : it->second;
}

int GradedSpace::total_dim() const {
  int t = 0;
  for (const auto& [n, k] : dims_) t += k;
  return t;
}

std::vector<int> GradedSpace::degrees() const {
  std::vector<int> d;
  for (const auto& [n, k] : dims_) d.push_back(n);
  return d;
}

const std::string& GradedSpace::label(int n, int i) const {
  auto it = basis_.find(n);
  if (it == basis_.end() || i < 0 || i >= (int)it->second.size())
    throw std::out_of_range("no basis element " + std::to_string(i) + " in degree " +
                            std::to_string(n));
  return it->second[i];
}

const std::vector<MultiIndex>& GradedSpace::tensor_basis(int n) const {
  static const std::vector<MultiIndex> empty;
  auto it = tuples_.find(n);
  return it == tuples_.end() ? empty : it->second;
}

int GradedSpace::tensor_rank(int n, const MultiIndex& mi) const {
  const auto& t = tensor_basis(n);
  auto it = std::lower_bound(t.begin(), t.end(), mi);
  if (it == t.end() || *it != mi)
    throw std::out_of_range("multi-index not in degree " + std::to_string(n));
  return (int)(it - t.begin());
}

MultiIndex GradedSpace::flatten_index(int n, int i) const {
  if (i < 0 || i >= dim(n))
    throw std::out_of_range("no basis element " + std::to_string(i) + " in degree " +
                            std::to_string(n));
  if (atoms_.empty()) return MultiIndex{{n, i}};
  return tensor_basis(n)[i];
}

GradedSpace tensor_space(const GradedSpace& x, const GradedSpace& y) {
  GradedSpace t;
  auto absorb = [&t](const GradedSpace& s) {
    if (s.atoms_.empty()) {
      t.atoms_.push_back(s);
    } else {
      for (const auto& a : s.atoms_) t.atoms_.push_back(a);
    }
  };
  absorb(x);
  absorb(y);
  t.build_tensor_tuples();
  return t;
}

GradedSpace tensor_space(const std::vector<GradedSpace>& xs) {
  if (xs.empty()) throw std::invalid_argument("tensor_space: no factors");
  GradedSpace t = xs[0];
  for (size_t i = 1; i < xs.size(); ++i) t = tensor_space(t, xs[i]);
  return t;
}

GradedSpace unit_space() {
  return GradedSpace(std::map<int, std::vector<std::string>>{{0, {"one"}}});
}

GradedSpace shift_space(const GradedSpace& x, int k) {
  std::map<int, std::vector<std::string>> basis;
  for (int n : x.degrees()) {
    std::vector<std::string> labs;
    for (int i = 0; i < x.dim(n); ++i)
      labs.push_back(x.label(n, i) + "[" + std::to_string(k) + "]");
    basis[n + k] = std::move(labs);
  }
  return GradedSpace(std::move(basis));
}

GradedSpace direct_sum(const GradedSpace& x, const GradedSpace& y) {
  std::map<int, std::vector<std::string>> basis;
  for (int n : x.degrees()) {
    for (int i = 0; i < x.dim(n); ++i) basis[n].push_back(x.label(n, i));
  }
  for (int n : y.degrees()) {
    for (int i = 0; i < y.dim(n); ++i) {
      std::string l = y.label(n, i);
      std::string cand = l;
      int k = 2;
      while (std::find(basis[n].begin(), basis[n].end(), cand) != basis[n].end())
        cand = l + "#" + std::to_string(k++);
      basis[n].push_back(cand);
    }
  }
  return GradedSpace(std::move(basis));
}

GradedMap::GradedMap(GradedSpace source, GradedSpace target, int degree, const Field& field)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree), field_(field) {}

GradedMap GradedMap::identity(const GradedSpace& x, const Field& f) {
  GradedMap m(x, x, 0, f);
  for (int n : x.degrees()) m.set_block(n, Matrix::identity(x.dim(n)));
  return m;
}

Matrix GradedMap::block(int n) const {
  auto it = blocks_.find(n);
  if (it != blocks_.end()) return it->second;
  return Matrix(target_.dim(n + degree_), source_.dim(n));
}

void GradedMap::set_block(int n, Matrix m) {
  if (m.rows() != target_.dim(n + degree_) || m.cols() != source_.dim(n))
    throw std::invalid_argument("set_block: shape mismatch at degree " + std::to_string(n));
  blocks_[n] = std::move(m);
}

void GradedMap::set(int n, int row, int col, const Scalar& v) {
  auto it = blocks_.find(n);
  if (it == blocks_.end())
    it = blocks_.emplace(n, Matrix(target_.dim(n + degree_), source_.dim(n))).first;
  it->second.at(row, col) = v;
}

void GradedMap::add_to(int n, int row, int col, const Scalar& v) {
  auto it = blocks_.find(n);
  if (it == blocks_.end())
    it = blocks_.emplace(n, Matrix(target_.dim(n + degree_), source_.dim(n))).first;
  it->second.at(row, col) = field_.add(it->second.at(row, col), v);
}

bool GradedMap::is_zero() const {
  for (const auto& [n, m] : blocks_)
    if (!m.is_zero()) return false;
  return true;
}

bool GradedMap::operator==(const GradedMap& o) const {
  if (degree_ != o.degree_ || field_ != o.field_) return false;
  if (source_ != o.source_ || target_ != o.target_) return false;
  for (int n : source_.degrees())
    if (block(n) != o.block(n)) return false;
  return true;
}

std::vector<Scalar> GradedMap::apply(int n, const std::vector<Scalar>& v) const {
  return mat_apply(field_, block(n), v);
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
  if (f.field() != g.field()) throw std::invalid_argument("compose: field mismatch");
  if (f.target() != g.source()) {
    for (int n : f.target().degrees())
      if (f.target().dim(n) != g.source().dim(n))
        throw std::invalid_argument(
            "compose: inner spaces differ at degree " + std::to_string(n) + " (" +
            std::to_string(f.target().dim(n)) + " vs " + std::to_string(g.source().dim(n)) + ")");
    for (int n : g.source().degrees())
      if (f.target().dim(n) != g.source().dim(n))
        throw std::invalid_argument(
            "compose: inner spaces differ at degree " + std::to_string(n) + " (" +
            std::to_string(f.target().dim(n)) + " vs " + std::to_string(g.source().dim(n)) + ")");
    throw std::invalid_argument("compose: inner spaces differ");
  }
  GradedMap out(f.source(), g.target(), f.degree() + g.degree(), f.field());
  for (int n : f.source().degrees()) {
    if (out.target().dim(n + out.degree()) == 0) continue;
    out.set_block(n, mat_mul(f.field(), g.block(n + f.degree()), f.block(n)));
  }
  return out;
}

namespace {

void require_same_shape(const GradedMap& a, const GradedMap& b, const char* what) {
  if (a.field() != b.field() || a.degree() != b.degree() || a.source() != b.source() ||
      a.target() != b.target())
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

}  // namespace

GradedMap map_add(const GradedMap& a, const GradedMap& b) {
  require_same_shape(a, b, "map_add");
  GradedMap out(a.source(), a.target(), a.degree(), a.field());
  for (int n : a.source().degrees())
    out.set_block(n, mat_add(a.field(), a.block(n), b.block(n)));
  return out;
}

GradedMap map_sub(const GradedMap& a, const GradedMap& b) {
  return map_add(a, map_neg(b));
}

GradedMap map_neg(const GradedMap& a) {
  GradedMap out(a.source(), a.target(), a.degree(), a.field());
  for (int n : a.source().degrees()) out.set_block(n, mat_neg(a.field(), a.block(n)));
  return out;
}

GradedMap map_scale(const Scalar& c, const GradedMap& a) {
  GradedMap out(a.source(), a.target(), a.degree(), a.field());
  for (int n : a.source().degrees()) out.set_block(n, mat_scale(a.field(), c, a.block(n)));
  return out;
}

GradedMap tensor_map(const std::vector<GradedMap>& groups) {
  if (groups.empty()) throw std::invalid_argument("tensor_map: no factors");
  const Field& f = groups[0].field();
  for (const auto& g : groups)
    if (g.field() != f) throw std::invalid_argument("tensor_map: field mismatch");

  std::vector<GradedSpace> srcs, tgts;
  int deg = 0;
  for (const auto& g : groups) {
    srcs.push_back(g.source());
    tgts.push_back(g.target());
    deg += g.degree();
  }
  GradedSpace src = tensor_space(srcs);
  GradedSpace tgt = tensor_space(tgts);
  GradedMap out(src, tgt, deg, f);

  for (int n : src.degrees()) {
    const auto& cols = src.tensor_basis(n);
    for (int c = 0; c < (int)cols.size(); ++c) {
      const MultiIndex& mi = cols[c];
      /* split the column's multi-index into group segments */
      struct Piece {
        int out_deg;
        std::vector<std::pair<int, Scalar>> entries;  // nonzero rows of the group's column
      };
      std::vector<Piece> pieces;
      int pos = 0, acc = 0, sign_exp = 0;
      bool dead = false;
      for (const auto& g : groups) {
        int fc = g.source().factor_count();
        MultiIndex sub(mi.begin() + pos, mi.begin() + pos + fc);
        pos += fc;
        int s = 0;
        for (const auto& [d, i] : sub) s += d;
        sign_exp += g.degree() * acc;
        acc += s;
        int lr = g.source().tensor_rank(s, sub);
        Matrix b = g.block(s);
        Piece p;
        p.out_deg = s + g.degree();
        for (int r = 0; r < b.rows(); ++r)
          if (!f.is_zero(b.at(r, lr))) p.entries.push_back({r, b.at(r, lr)});
        if (p.entries.empty()) {
          dead = true;
          break;
        }
        pieces.push_back(std::move(p));
      }
      if (dead) continue;
      Scalar sgn = (sign_exp % 2 == 0) ? f.one() : f.neg(f.one());

      std::vector<size_t> choice(pieces.size(), 0);
      while (true) {
        Scalar coeff = sgn;
        MultiIndex tmi;
        for (size_t k = 0; k < pieces.size(); ++k) {
          const auto& [row, val] = pieces[k].entries[choice[k]];
          coeff = f.mul(coeff, val);
          const MultiIndex& part =
              groups[k].target().tensor_basis(pieces[k].out_deg)[row];
          tmi.insert(tmi.end(), part.begin(), part.end());
        }
        out.add_to(n, tgt.tensor_rank(n + deg, tmi), c, coeff);
        size_t k = pieces.size();
        bool carry = true;
        while (k > 0 && carry) {
          --k;
          if (++choice[k] < pieces[k].entries.size())
            carry = false;
          else
            choice[k] = 0;
        }
        if (carry) break;
      }
    }
  }
  return out;
}

GradedMap tensor_map(const GradedMap& f, const GradedMap& g) {
  return tensor_map(std::vector<GradedMap>{f, g});
}

GradedMap shift_map(const GradedMap& f, int k) {
  if (f.degree() != 0) throw std::invalid_argument("shift_map: degree 0 maps only");
  GradedMap out(shift_space(f.source(), k), shift_space(f.target(), k), 0, f.field());
  for (int n : f.source().degrees()) out.set_block(n + k, f.block(n));
  return out;
}

GradedMap direct_sum(const GradedMap& a, const GradedMap& b) {
  if (a.field() != b.field() || a.degree() != b.degree())
    throw std::invalid_argument("direct_sum: degree or field mismatch");
  GradedSpace src = direct_sum(a.source(), b.source());
  GradedSpace tgt = direct_sum(a.target(), b.target());
  GradedMap out(src, tgt, a.degree(), a.field());
  int d = a.degree();
  for (int n : src.degrees()) {
    Matrix m(tgt.dim(n + d), src.dim(n));
    Matrix ba = a.block(n), bb = b.block(n);
    for (int i = 0; i < ba.rows(); ++i)
      for (int j = 0; j < ba.cols(); ++j) m.at(i, j) = ba.at(i, j);
    for (int i = 0; i < bb.rows(); ++i)
      for (int j = 0; j < bb.cols(); ++j)
        m.at(a.target().dim(n + d) + i, a.source().dim(n) + j) = bb.at(i, j);
    out.set_block(n, std::move(m));
  }
  return out;
}

GradedMap dsum_inc1(const GradedSpace& x, const GradedSpace& y, const Field& f) {
  GradedSpace s = direct_sum(x, y);
  GradedMap out(x, s, 0, f);
  for (int n : x.degrees()) {
    Matrix m(s.dim(n), x.dim(n));
    for (int i = 0; i < x.dim(n); ++i) m.at(i, i) = f.one();
    out.set_block(n, std::move(m));
  }
  return out;
}

GradedMap dsum_inc2(const GradedSpace& x, const GradedSpace& y, const Field& f) {
  GradedSpace s = direct_sum(x, y);
  GradedMap out(y, s, 0, f);
  for (int n : y.degrees()) {
    Matrix m(s.dim(n), y.dim(n));
    for (int i = 0; i < y.dim(n); ++i) m.at(x.dim(n) + i, i) = f.one();
    out.set_block(n, std::move(m));
  }
  return out;
}

GradedMap dsum_proj1(const GradedSpace& x, const GradedSpace& y, const Field& f) {
  GradedSpace s = direct_sum(x, y);
  GradedMap out(s, x, 0, f);
  for (int n : s.degrees()) {
    Matrix m(x.dim(n), s.dim(n));
    for (int i = 0; i < x.dim(n); ++i) m.at(i, i) = f.one();
    out.set_block(n, std::move(m));
  }
  return out;
}

GradedMap dsum_proj2(const GradedSpace& x, const GradedSpace& y, const Field& f) {
  GradedSpace s = direct_sum(x, y);
  GradedMap out(s, y, 0, f);
  for (int n : s.degrees()) {
    Matrix m(y.dim(n), s.dim(n));
    for (int i = 0; i < y.dim(n); ++i) m.at(i, x.dim(n) + i) = f.one();
    out.set_block(n, std::move(m));
  }
  return out;
}

GradedMap unit_left_intro(const GradedSpace& x, const Field& f) {
  GradedSpace t = tensor_space(unit_space(), x);
  GradedMap out(x, t, 0, f);
  for (int n : x.degrees()) out.set_block(n, Matrix::identity(x.dim(n)));
  return out;
}

GradedMap unit_right_intro(const GradedSpace& x, const Field& f) {
  GradedSpace t = tensor_space(x, unit_space());
  GradedMap out(x, t, 0, f);
  for (int n : x.degrees()) out.set_block(n, Matrix::identity(x.dim(n)));
  return out;
}

GradedMap from_columns(const GradedSpace& source, const GradedSpace& target, int degree,
                       const Field& f,
                       const std::function<std::vector<Scalar>(int, int)>& fn) {
  GradedMap out(source, target, degree, f);
  for (int n : source.degrees()) {
    Matrix m(target.dim(n + degree), source.dim(n));
    for (int c = 0; c < source.dim(n); ++c) {
      std::vector<Scalar> col = fn(n, c);
      if ((int)col.size() != m.rows())
        throw std::invalid_argument("from_columns: bad column size at degree " +
                                    std::to_string(n));
      m.set_col(c, col);
    }
    out.set_block(n, std::move(m));
  }
  return out;
}

std::string render_element(const Field& f, const GradedSpace& sp, int degree,
                           const std::vector<Scalar>& v) {
  std::string out;
  for (int i = 0; i < (int)v.size(); ++i) {
    if (f.is_zero(v[i])) continue;
    Scalar c = v[i];
    bool neg = c.raw() < 0;
    if (neg) c = f.neg(c);
    std::string piece = f.is_one(c) ? sp.label(degree, i) : f.str(c) + "*" + sp.label(degree, i);
    if (out.empty())
      out = (neg ? "-" : "") + piece;
    else
      out += (neg ? "-" : "+") + piece;
  }
  return out.empty() ? "0" : out;
}

}  // namespace dgideal
