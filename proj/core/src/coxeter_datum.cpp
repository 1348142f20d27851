#include "coxfree/coxeter_datum.hpp"

#include <algorithm>
#include <regex>

#include "coxfree/errors.hpp"

namespace coxfree {

namespace {

std::size_t factorial(unsigned n) {
  std::size_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<Scalar> unit(unsigned n, unsigned i) {
  std::vector<Scalar> v(n, Scalar(0));
  v[i] = Scalar(1);
  return v;
}

std::vector<Scalar> diff(unsigned n, unsigned i, unsigned j, int sign_j) {
  std::vector<Scalar> v(n, Scalar(0));
  v[i] = Scalar(1);
  v[j] = Scalar(sign_j);
  return v;
}

// Root coordinates: x_i is the i-th simple root; form_gram is the Gram matrix
// of the simple roots.
void simple_root_coordinates(CoxeterDatum& d, ScalarMatrix form_gram) {
  d.form_gram = std::move(form_gram);
  d.simple_roots.clear();
  for (unsigned i = 0; i < d.rank; ++i) d.simple_roots.push_back(unit(d.rank, i));
}

// cos(pi/5) = (1 + sqrt 5)/4
Scalar cos_pi_5() { return Scalar(mpq_class(1, 4), mpq_class(1, 4), 5); }

}  // namespace

std::size_t CoxeterDatum::num_hyperplanes() const {
  std::size_t s = 0;
  for (unsigned d : degrees) s += d - 1;
  return s;
}

std::string CoxeterDatum::field_name() const {
  return radicand == 1 ? "Q" : "Q(sqrt" + std::to_string(radicand) + ")";
}

CoxeterDatum make_datum(std::string_view family, unsigned rank) {
  if (family.empty()) throw UnsupportedType("empty Coxeter type");
  if (family == "I") throw UnsupportedType("dihedral types are written I2(m)");
  return make_datum(std::string(family) + std::to_string(rank));
}

CoxeterDatum make_datum(std::string_view label) {
  static const std::regex re(R"(^\s*([ABDGHI])\s*(\d+)\s*(?:\(\s*(\d+)\s*\))?\s*$)");
  const std::string s(label);
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw UnsupportedType("unrecognized Coxeter type '" + s + "'");
  const char fam = m[1].str()[0];
  const unsigned rank = static_cast<unsigned>(std::stoul(m[2].str()));
  if (rank == 0 || rank > 8) throw UnsupportedType("rank out of range in '" + s + "'");
  if (m[3].matched && fam != 'I') throw UnsupportedType("only I2 takes a parameter: '" + s + "'");

  CoxeterDatum d;
  d.rank = rank;
  const unsigned n = rank;
  switch (fam) {
    case 'A': {
      if (n > 7) throw UnsupportedType("A_l is supported for l <= 7");
      d.family = CoxeterFamily::A;
      ScalarMatrix g(n, n);
      for (unsigned i = 0; i < n; ++i) {
        g(i, i) = Scalar(1);
        if (i + 1 < n) {
          g(i, i + 1) = Scalar(-1, 2);
          g(i + 1, i) = Scalar(-1, 2);
        }
      }
      simple_root_coordinates(d, std::move(g));
      for (unsigned k = 2; k <= n + 1; ++k) d.degrees.push_back(k);
      d.classical_order = factorial(n + 1);
      d.label = "A" + std::to_string(n);
      break;
    }
    case 'B': {
      if (n < 2 || n > 6) throw UnsupportedType("B_l is supported for 2 <= l <= 6");
      d.family = CoxeterFamily::B;
      d.form_gram = ScalarMatrix::identity(n);
      for (unsigned i = 0; i + 1 < n; ++i) d.simple_roots.push_back(diff(n, i, i + 1, -1));
      d.simple_roots.push_back(unit(n, n - 1));
      for (unsigned k = 1; k <= n; ++k) d.degrees.push_back(2 * k);
      d.classical_order = (std::size_t{1} << n) * factorial(n);
      d.label = "B" + std::to_string(n);
      break;
    }
    case 'D': {
      if (n < 4 || n > 6) throw UnsupportedType("D_l is supported for 4 <= l <= 6");
      d.family = CoxeterFamily::D;
      d.form_gram = ScalarMatrix::identity(n);
      for (unsigned i = 0; i + 1 < n; ++i) d.simple_roots.push_back(diff(n, i, i + 1, -1));
      d.simple_roots.push_back(diff(n, n - 2, n - 1, 1));
      for (unsigned k = 1; k < n; ++k) d.degrees.push_back(2 * k);
      d.degrees.push_back(n);
      std::sort(d.degrees.begin(), d.degrees.end());
      d.classical_order = (std::size_t{1} << (n - 1)) * factorial(n);
      d.label = "D" + std::to_string(n);
      break;
    }
    case 'G': {
      if (n != 2) throw UnsupportedType("only G2 exists");
      d.family = CoxeterFamily::G;
      // short root of length 1, long root of length sqrt 3, angle 5pi/6
      simple_root_coordinates(d, ScalarMatrix{{Scalar(1), Scalar(-3, 2)}, {Scalar(-3, 2), Scalar(3)}});
      d.degrees = {2, 6};
      d.classical_order = 12;
      d.label = "G2";
      break;
    }
    case 'H': {
      if (n != 3) throw UnsupportedType("only H3 is supported among the H types");
      d.family = CoxeterFamily::H;
      d.radicand = 5;
      const Scalar c = -cos_pi_5();
      simple_root_coordinates(d, ScalarMatrix{{Scalar(1), c, Scalar(0)},
                                              {c, Scalar(1), Scalar(-1, 2)},
                                              {Scalar(0), Scalar(-1, 2), Scalar(1)}});
      d.degrees = {2, 6, 10};
      d.classical_order = 120;
      d.label = "H3";
      break;
    }
    case 'I': {
      if (n != 2 || !m[3].matched) throw UnsupportedType("dihedral types are written I2(m)");
      const unsigned order = static_cast<unsigned>(std::stoul(m[3].str()));
      d.family = CoxeterFamily::I;
      d.dihedral_order = order;
      // |a1| = 1, |a2|^2 = c, (a1, a2) = -cos(pi/m) sqrt(c); c is chosen to keep
      // every entry inside Q or Q(sqrt d).
      Scalar c;
      Scalar off;
      switch (order) {
        case 3: c = Scalar(1); off = Scalar(-1, 2); break;
        case 4: c = Scalar(2); off = Scalar(-1); break;
        case 5: c = Scalar(1); off = -cos_pi_5(); d.radicand = 5; break;
        case 6: c = Scalar(3); off = Scalar(-3, 2); break;
        case 8:
          c = Scalar(mpq_class(2), mpq_class(-1), 2);
          off = Scalar(mpq_class(0), mpq_class(-1, 2), 2);
          d.radicand = 2;
          break;
        default: throw UnsupportedType("I2(m) is supported for m in {3,4,5,6,8}");
      }
      simple_root_coordinates(d, ScalarMatrix{{Scalar(1), off}, {off, c}});
      d.degrees = {2, order};
      d.classical_order = 2 * order;
      d.label = "I2(" + std::to_string(order) + ")";
      break;
    }
    default: throw UnsupportedType("unsupported Coxeter type '" + s + "'");
  }
  d.gram = d.form_gram.inverse();
  return d;
}

}  // namespace coxfree
