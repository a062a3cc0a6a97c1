#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dgideal/matrix.hpp"

namespace dgideal {

/* One (degree, index) entry per tensor factor. */
using MultiIndex = std::vector<std::pair<int, int>>;

/* Finitely supported graded vector space with an ordered, labeled basis.
   A space built by tensor_space remembers its atomic factors. The basis of a
   tensor product in each total degree is the list of per-factor (degree,
   index) tuples sorted lexicographically; because the key of a factor that is
   itself a tensor is the concatenation of its factors' keys, the two ways of
   flattening a triple tensor enumerate identically, so no associator maps are
   ever needed. Equality compares dimensions only; labels and factor structure
   are bookkeeping for rendering and for building tensor maps. */
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(const std::map<int, int>& dims);
  explicit GradedSpace(std::map<int, std::vector<std::string>> basis);

  int dim(int n) const;
  const std::map<int, int>& dims() const { return dims_; }
  int total_dim() const;
  bool is_zero() const { return dims_.empty(); }
  std::vector<int> degrees() const;

  const std::string& label(int n, int i) const;

  int factor_count() const { return atoms_.empty() ? 1 : (int)atoms_.size(); }
  const GradedSpace& factor(int k) const { return atoms_.empty() ? *this : atoms_[k]; }
  const std::vector<MultiIndex>& tensor_basis(int n) const;
  int tensor_rank(int n, const MultiIndex& mi) const;
  /* The flat factor tuple behind basis vector i of degree n: the stored
     tuple for a tensor product, the singleton {(n, i)} otherwise. Lets
     callers address X (x) Y by component indices even when a component is
     itself a tensor product and the tuples run over more than two atoms. */
  MultiIndex flatten_index(int n, int i) const;

  bool operator==(const GradedSpace& o) const { return dims_ == o.dims_; }
  bool operator!=(const GradedSpace& o) const { return dims_ != o.dims_; }

  friend GradedSpace tensor_space(const GradedSpace& x, const GradedSpace& y);

 private:
  std::map<int, std::vector<std::string>> basis_;
  std::map<int, int> dims_;
  std::vector<GradedSpace> atoms_;  // empty for an atom
  std::map<int, std::vector<MultiIndex>> tuples_;
  void build_atom_tuples();
  void build_tensor_tuples();
};

GradedSpace tensor_space(const GradedSpace& x, const GradedSpace& y);
GradedSpace tensor_space(const std::vector<GradedSpace>& xs);
GradedSpace unit_space();
GradedSpace shift_space(const GradedSpace& x, int k);
GradedSpace direct_sum(const GradedSpace& x, const GradedSpace& y);

/* Degree-homogeneous linear map; block n sends source degree n to target
   degree n + degree(). Absent blocks are zero. */
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(GradedSpace source, GradedSpace target, int degree, const Field& field);
  static GradedMap identity(const GradedSpace& x, const Field& f);

  const GradedSpace& source() const { return source_; }
  const GradedSpace& target() const { return target_; }
  int degree() const { return degree_; }
  const Field& field() const { return field_; }

  Matrix block(int n) const;
  void set_block(int n, Matrix m);
  void set(int n, int row, int col, const Scalar& v);
  void add_to(int n, int row, int col, const Scalar& v);

  bool is_zero() const;
  bool operator==(const GradedMap& o) const;
  bool operator!=(const GradedMap& o) const { return !(*this == o); }

  std::vector<Scalar> apply(int n, const std::vector<Scalar>& v) const;

 private:
  GradedSpace source_, target_;
  int degree_ = 0;
  Field field_ = Field::rationals();
  std::map<int, Matrix> blocks_;
};

/* g after f; throws naming the first mismatched degree when f's target and
   g's source disagree. */
GradedMap compose(const GradedMap& g, const GradedMap& f);
GradedMap map_add(const GradedMap& a, const GradedMap& b);
GradedMap map_sub(const GradedMap& a, const GradedMap& b);
GradedMap map_neg(const GradedMap& a);
GradedMap map_scale(const Scalar& c, const GradedMap& a);

/* Tensor product of maps, one entry per factor group, with the Koszul sign
   (f (x) g)(x (x) y) = (-1)^{deg(g)|x|} f(x) (x) g(y) extended to any number
   of groups. Sources and targets flatten into the canonical enumeration. */
GradedMap tensor_map(const std::vector<GradedMap>& groups);
GradedMap tensor_map(const GradedMap& f, const GradedMap& g);

/* Shift of a degree-0 map: same matrices between shifted spaces. */
GradedMap shift_map(const GradedMap& f, int k);

GradedMap direct_sum(const GradedMap& a, const GradedMap& b);
GradedMap dsum_inc1(const GradedSpace& x, const GradedSpace& y, const Field& f);
GradedMap dsum_inc2(const GradedSpace& x, const GradedSpace& y, const Field& f);
GradedMap dsum_proj1(const GradedSpace& x, const GradedSpace& y, const Field& f);
GradedMap dsum_proj2(const GradedSpace& x, const GradedSpace& y, const Field& f);

/* Canonical X -> S (x) X and X -> X (x) S; identity matrices, but explicit
   maps so unit diagrams compose without implicit identifications. */
GradedMap unit_left_intro(const GradedSpace& x, const Field& f);
GradedMap unit_right_intro(const GradedSpace& x, const Field& f);

/* Build a map columnwise: fn(n, col) returns the image of basis column col of
   source degree n, as coordinates in target degree n + degree. */
GradedMap from_columns(const GradedSpace& source, const GradedSpace& target, int degree,
                       const Field& f,
                       const std::function<std::vector<Scalar>(int, int)>& fn);

/* Compact exact rendering: "0", "t", "-eps", "2*t+1/2*t2", "one.t". */
std::string render_element(const Field& f, const GradedSpace& sp, int degree,
                           const std::vector<Scalar>& v);

}  // namespace dgideal
