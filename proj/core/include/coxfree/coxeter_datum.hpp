#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coxfree/linear_solve.hpp"

namespace coxfree {

enum class CoxeterFamily { A, B, D, G, H, I };

/// Coordinate realization of a finite irreducible Coxeter group.
///
/// Coordinates x_1..x_l are linear forms on V. Group matrices act on point
/// coordinate vectors. `gram` is the invariant inner product on V in those
/// point coordinates (w^T gram w == gram); `form_gram` is the Gram matrix of
/// the coordinate forms themselves, the inverse of `gram`.
struct CoxeterDatum {
  CoxeterFamily family = CoxeterFamily::A;
  unsigned rank = 0;
  unsigned dihedral_order = 0;  // m for I2(m), zero otherwise
  std::string label;
  std::uint32_t radicand = 1;  // 1 means the field is Q
  ScalarMatrix form_gram;
  ScalarMatrix gram;
  std::vector<std::vector<Scalar>> simple_roots;
  std::vector<unsigned> degrees;  // classical degrees of basic invariants, ascending
  std::size_t classical_order = 0;

  unsigned coxeter_number() const { return degrees.back(); }
  std::size_t num_hyperplanes() const;
  std::string field_name() const;
};

/// Accepts "A3", "B2", "D4", "G2", "H3", "I2(5)".
CoxeterDatum make_datum(std::string_view label);
CoxeterDatum make_datum(std::string_view family, unsigned rank);

}  // namespace coxfree
