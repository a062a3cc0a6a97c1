#pragma once

#include "dgideal/report.hpp"

namespace dgideal {

/* Chain complex: differential of degree -1 with d*d = 0. Construction
   validates both; a bad differential is a structural error, not a
   verification failure. */
class ChainComplex {
 public:
  ChainComplex() : ChainComplex(GradedSpace(), Field::rationals()) {}
  ChainComplex(GradedSpace space, const Field& field);  // zero differential
  ChainComplex(GradedSpace space, GradedMap d);

  const GradedSpace& space() const { return space_; }
  const GradedMap& d() const { return d_; }
  const Field& field() const { return d_.field(); }

  bool operator==(const ChainComplex& o) const { return space_ == o.space_ && d_ == o.d_; }
  bool operator!=(const ChainComplex& o) const { return !(*this == o); }

 private:
  GradedSpace space_;
  GradedMap d_;
};

/* Degree-0 map commuting with the differentials; construction validates. */
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(ChainComplex source, ChainComplex target, GradedMap map);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  const GradedMap& map() const { return map_; }

 private:
  ChainComplex source_, target_;
  GradedMap map_;
};

/* Does f commute with the differentials? Entry-producing form for callers
   that must report rather than throw. */
ReportEntry chain_map_entry(const std::string& label, const ChainComplex& src,
                            const ChainComplex& dst, const GradedMap& f);

ChainComplex tensor_complex(const ChainComplex& x, const ChainComplex& y);
ChainComplex shift_complex(const ChainComplex& x, int k);  // d picks up (-1)^k
ChainComplex direct_sum(const ChainComplex& x, const ChainComplex& y);
ChainComplex unit_complex(const Field& f);  // the field in degree 0

/* Mapping cone of f : X -> Y. Cone(f)_n = Y_n + X_{n-1} (target block first),
   d(y, x) = (dy + f(x), -dx). */
struct ConeData {
  ChainComplex cone;
  ChainMap include_target;        // y |-> (y, 0)
  ChainMap project_source_shift;  // (y, x) |-> x, landing in X shifted up by 1
};
ConeData cone(const ChainMap& f);

/* Degreewise kernel of a chain map; a subcomplex because f commutes with d.
   Kernel basis labels render the included vectors in the ambient basis. */
struct KernelData {
  ChainComplex kernel;
  ChainMap include;
};
KernelData strict_kernel(const ChainMap& f);

/* Exact homology. Representatives are the earliest kernel-basis columns that
   are independent modulo boundaries, kept in kernel-basis order. */
class HomologyData {
 public:
  int dim(int n) const;
  const std::map<int, int>& dims() const { return dims_; }
  bool is_acyclic() const { return dims_.empty(); }

  const Matrix& reps(int n) const;        // columns are representative cycles
  /* Coordinates of a cycle in the representatives, modulo boundaries;
     nullopt when the vector is not a cycle of that degree. */
  std::optional<std::vector<Scalar>> coords(int n, const std::vector<Scalar>& cycle) const;

  friend HomologyData homology(const ChainComplex& x);

 private:
  Field field_ = Field::rationals();
  std::map<int, int> dims_;
  std::map<int, Matrix> reps_, boundaries_;
};
HomologyData homology(const ChainComplex& x);

/* Induced map on homology in every degree; ok when it is an isomorphism
   everywhere. */
struct QuasiIsoReport {
  bool ok = true;
  std::optional<int> first_bad_degree;
  std::map<int, int> source_dims, target_dims;
};
QuasiIsoReport is_quasi_iso(const ChainMap& f);

}  // namespace dgideal
