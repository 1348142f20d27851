#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxfree/coxeter_datum.hpp"
#include "coxfree/linear_solve.hpp"
#include "coxfree/polynomial.hpp"

namespace coxfree {

inline constexpr std::size_t kDefaultOrderBound = 100000;

/// All elements of W as matrices on point coordinates; elements[0] is the
/// identity.
class ReflectionGroup {
 public:
  ReflectionGroup() = default;
  ReflectionGroup(std::size_t rank, std::vector<ScalarMatrix> generators, std::size_t order_bound);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const ScalarMatrix& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<ScalarMatrix>& elements() const noexcept { return elements_; }
  std::size_t inverse_index(std::size_t i) const { return inverse_.at(i); }
  bool is_reflection(std::size_t i) const { return is_reflection_.at(i); }
  std::size_t num_reflections() const;
  /// Indices of the generating simple reflections.
  const std::vector<std::size_t>& simple_reflections() const noexcept { return simple_; }
  /// Index of a matrix in the group, or order() if absent.
  std::size_t find(const ScalarMatrix& m) const;

 private:
  std::size_t rank_ = 0;
  std::vector<ScalarMatrix> elements_;
  std::vector<std::size_t> inverse_;
  std::vector<bool> is_reflection_;
  std::vector<std::size_t> simple_;
  std::map<ScalarMatrix, std::size_t> index_;
};

struct Hyperplane {
  std::vector<Scalar> form;  // coefficients of alpha_H, first nonzero entry 1
  Polynomial alpha;
  std::size_t reflection = 0;  // index in the group
};

/// Reflecting hyperplanes sorted by coefficient vector, with Q = prod alpha_H
/// and the W-orbits. Orbits are listed in order of their smallest member, and
/// members within an orbit in increasing order, which gives multiplicity
/// files a stable addressing scheme.
struct Arrangement {
  std::size_t rank = 0;
  std::vector<Hyperplane> hyperplanes;
  Polynomial defining_polynomial;
  std::vector<std::vector<std::size_t>> orbits;

  std::size_t size() const noexcept { return hyperplanes.size(); }
  const Polynomial& alpha(std::size_t h) const { return hyperplanes.at(h).alpha; }
  std::size_t orbit_of(std::size_t h) const;
  /// Copy with alpha_H multiplied by a nonzero factor (Q rescales with it).
  Arrangement rescaled(std::size_t h, const Scalar& factor) const;
};

/// Nonnegative integer per hyperplane.
class Multiplicity {
 public:
  Multiplicity() = default;
  explicit Multiplicity(std::vector<unsigned> values);

  static Multiplicity constant(const Arrangement& arr, unsigned value);
  static Multiplicity per_orbit(const Arrangement& arr, const std::vector<unsigned>& orbit_values);
  /// values[o][j] is the multiplicity of the j-th member of orbit o.
  static Multiplicity per_hyperplane(const Arrangement& arr, const std::vector<std::vector<unsigned>>& values);

  std::size_t size() const noexcept { return values_.size(); }
  unsigned operator[](std::size_t h) const { return values_.at(h); }
  const std::vector<unsigned>& values() const noexcept { return values_; }
  unsigned total() const noexcept { return total_; }
  bool is_constant() const;
  /// Pointwise m + shift.
  Multiplicity shifted(unsigned shift) const;

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

 private:
  std::vector<unsigned> values_;
  unsigned total_ = 0;
};

struct GroupBuild {
  ReflectionGroup group;
  Arrangement arrangement;
};

/// Enumerates W by closure of the simple reflections, then collects the
/// reflections, their hyperplanes and the orbit partition.
GroupBuild build_group(const CoxeterDatum& datum, std::size_t order_bound = kDefaultOrderBound);

/// Matrix of the reflection in the hyperplane ker(form), for the inner
/// product whose form Gram matrix is `form_gram`.
ScalarMatrix reflection_matrix(const ScalarMatrix& form_gram, const std::vector<Scalar>& form);

/// p(M x).
Polynomial substitute_linear(const Polynomial& p, const ScalarMatrix& m);

/// w.p = p o w^{-1}.
Polynomial act(const ReflectionGroup& group, std::size_t element, const Polynomial& p);

/// (1/|W|) sum_w w.p
Polynomial reynolds(const ReflectionGroup& group, const Polynomial& p);

/// Partition of the hyperplanes into W-orbits via conjugation of reflections.
std::vector<std::vector<std::size_t>> orbits(const ReflectionGroup& group, const Arrangement& arrangement);

}  // namespace coxfree
