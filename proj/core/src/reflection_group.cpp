#include "coxfree/reflection_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "coxfree/errors.hpp"

namespace coxfree {

ReflectionGroup::ReflectionGroup(std::size_t rank, std::vector<ScalarMatrix> generators, std::size_t order_bound)
    : rank_(rank) {
  const ScalarMatrix id = ScalarMatrix::identity(rank);
  elements_.push_back(id);
  index_.emplace(id, 0);
  for (const auto& g : generators) {
    auto [it, inserted] = index_.try_emplace(g, elements_.size());
    if (inserted) elements_.push_back(g);
    simple_.push_back(it->second);
  }
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < elements_.size(); ++i) queue.push_back(i);
  while (!queue.empty()) {
    const std::size_t e = queue.front();
    queue.pop_front();
    for (std::size_t s : simple_) {
      ScalarMatrix prod = elements_[s] * elements_[e];
      if (index_.count(prod)) continue;
      if (elements_.size() >= order_bound) {
        throw BudgetExceeded("group order exceeds the configured bound of " + std::to_string(order_bound));
      }
      index_.emplace(prod, elements_.size());
      queue.push_back(elements_.size());
      elements_.push_back(std::move(prod));
    }
  }

  inverse_.resize(elements_.size());
  is_reflection_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const std::size_t inv = find(elements_[i].inverse());
    if (inv == elements_.size()) throw std::logic_error("group is not closed under inversion");
    inverse_[i] = inv;
    is_reflection_[i] = i != 0 && inv == i && (id - elements_[i]).rank() == 1;
  }
}

std::size_t ReflectionGroup::num_reflections() const {
  return static_cast<std::size_t>(std::count(is_reflection_.begin(), is_reflection_.end(), true));
}

std::size_t ReflectionGroup::find(const ScalarMatrix& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? elements_.size() : it->second;
}

std::size_t Arrangement::orbit_of(std::size_t h) const {
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    if (std::find(orbits[o].begin(), orbits[o].end(), h) != orbits[o].end()) return o;
  }
  throw std::out_of_range("hyperplane index out of range");
}

Arrangement Arrangement::rescaled(std::size_t h, const Scalar& factor) const {
  if (factor.is_zero()) throw std::invalid_argument("rescaling factor must be nonzero");
  Arrangement out = *this;
  auto& hp = out.hyperplanes.at(h);
  for (auto& c : hp.form) c *= factor;
  hp.alpha *= factor;
  out.defining_polynomial *= factor;
  return out;
}

Multiplicity::Multiplicity(std::vector<unsigned> values) : values_(std::move(values)) {
  total_ = std::accumulate(values_.begin(), values_.end(), 0u);
}

Multiplicity Multiplicity::constant(const Arrangement& arr, unsigned value) {
  return Multiplicity(std::vector<unsigned>(arr.size(), value));
}

Multiplicity Multiplicity::per_orbit(const Arrangement& arr, const std::vector<unsigned>& orbit_values) {
  if (orbit_values.size() != arr.orbits.size()) {
    throw std::invalid_argument("expected " + std::to_string(arr.orbits.size()) + " orbit values, got " +
                                std::to_string(orbit_values.size()));
  }
  std::vector<unsigned> v(arr.size(), 0);
  for (std::size_t o = 0; o < arr.orbits.size(); ++o)
    for (std::size_t h : arr.orbits[o]) v[h] = orbit_values[o];
  return Multiplicity(std::move(v));
}

Multiplicity Multiplicity::per_hyperplane(const Arrangement& arr, const std::vector<std::vector<unsigned>>& values) {
  if (values.size() != arr.orbits.size()) {
    throw std::invalid_argument("expected values for " + std::to_string(arr.orbits.size()) + " orbits");
  }
  std::vector<unsigned> v(arr.size(), 0);
  for (std::size_t o = 0; o < arr.orbits.size(); ++o) {
    if (values[o].size() != arr.orbits[o].size()) {
      throw std::invalid_argument("orbit " + std::to_string(o) + " has " + std::to_string(arr.orbits[o].size()) +
                                  " hyperplanes, got " + std::to_string(values[o].size()) + " values");
    }
    for (std::size_t j = 0; j < values[o].size(); ++j) v[arr.orbits[o][j]] = values[o][j];
  }
  return Multiplicity(std::move(v));
}

bool Multiplicity::is_constant() const {
  return std::adjacent_find(values_.begin(), values_.end(), std::not_equal_to<>()) == values_.end();
}

Multiplicity Multiplicity::shifted(unsigned shift) const {
  std::vector<unsigned> v = values_;
  for (auto& x : v) x += shift;
  return Multiplicity(std::move(v));
}

ScalarMatrix reflection_matrix(const ScalarMatrix& form_gram, const std::vector<Scalar>& form) {
  const std::size_t n = form.size();
  std::vector<Scalar> v(n, Scalar(0));  // the root as a point: form_gram * a^T
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v[i] += form_gram(i, j) * form[j];
  Scalar norm(0);
  for (std::size_t i = 0; i < n; ++i) norm += form[i] * v[i];
  if (norm.sign() <= 0) throw std::domain_error("root has non-positive norm");
  const Scalar scale = Scalar(2) / norm;
  ScalarMatrix s = ScalarMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= scale * v[i] * form[j];
  return s;
}

Polynomial substitute_linear(const Polynomial& p, const ScalarMatrix& m) {
  const std::size_t n = p.num_vars();
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("substitution matrix has the wrong size");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::linear_form(m.row(i)));
  return p.substitute(images);
}

Polynomial act(const ReflectionGroup& group, std::size_t element, const Polynomial& p) {
  return substitute_linear(p, group.element(group.inverse_index(element)));
}

Polynomial reynolds(const ReflectionGroup& group, const Polynomial& p) {
  Polynomial sum(p.num_vars());
  // sum over w of p o w^{-1} equals the sum over w of p o w
  for (const auto& w : group.elements()) sum += substitute_linear(p, w);
  return sum / Scalar(static_cast<long>(group.order()));
}

std::vector<std::vector<std::size_t>> orbits(const ReflectionGroup& group, const Arrangement& arrangement) {
  const std::size_t n = arrangement.size();
  std::map<std::size_t, std::size_t> by_reflection;
  for (std::size_t h = 0; h < n; ++h) by_reflection[arrangement.hyperplanes[h].reflection] = h;

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t h = 0; h < n; ++h) {
    const auto& s = group.element(arrangement.hyperplanes[h].reflection);
    for (std::size_t g : group.simple_reflections()) {
      const ScalarMatrix conj = group.element(g) * s * group.element(group.inverse_index(g));
      const std::size_t idx = group.find(conj);
      auto it = by_reflection.find(idx);
      if (it == by_reflection.end()) throw std::logic_error("conjugate of a reflection is not a known reflection");
      parent[root(h)] = root(it->second);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> grouped;
  for (std::size_t h = 0; h < n; ++h) grouped[root(h)].push_back(h);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [r, members] : grouped) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

GroupBuild build_group(const CoxeterDatum& datum, std::size_t order_bound) {
  const std::size_t n = datum.rank;
  if (!datum.gram.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
  std::vector<ScalarMatrix> gens;
  for (const auto& root : datum.simple_roots) gens.push_back(reflection_matrix(datum.form_gram, root));
  GroupBuild out;
  out.group = ReflectionGroup(n, std::move(gens), order_bound);

  const ScalarMatrix id = ScalarMatrix::identity(n);
  auto& arr = out.arrangement;
  arr.rank = n;
  for (std::size_t i = 0; i < out.group.order(); ++i) {
    if (!out.group.is_reflection(i)) continue;
    const ScalarMatrix diff = id - out.group.element(i);
    std::vector<Scalar> form;
    for (std::size_t r = 0; r < n && form.empty(); ++r) {
      auto row = diff.row(r);
      if (std::any_of(row.begin(), row.end(), [](const Scalar& s) { return !s.is_zero(); })) form = std::move(row);
    }
    const auto lead = std::find_if(form.begin(), form.end(), [](const Scalar& s) { return !s.is_zero(); });
    const Scalar inv = lead->inverse();
    for (auto& c : form) c *= inv;
    arr.hyperplanes.push_back(Hyperplane{form, Polynomial::linear_form(form), i});
  }
  std::sort(arr.hyperplanes.begin(), arr.hyperplanes.end(),
            [](const Hyperplane& a, const Hyperplane& b) { return a.form < b.form; });
  arr.defining_polynomial = Polynomial::constant(n, Scalar(1));
  for (const auto& h : arr.hyperplanes) arr.defining_polynomial *= h.alpha;
  arr.orbits = orbits(out.group, arr);
  return out;
}

}  // namespace coxfree
