#include "lgmk/cohomology.hpp"

#include <algorithm>

#include "lgmk/error.hpp"
#include "lgmk/linalg.hpp"

namespace lgmk {

CohomologyRing::CohomologyRing(std::vector<BasisElement> basis, const std::vector<MultEntry>& mult,
                               std::vector<Rational> integration, int dim)
    : basis_(std::move(basis)), integration_(std::move(integration)), dim_(dim) {
  const std::size_t n = basis_.size();
  if (n == 0) throw GeometryError(GeometryErrorCode::malformed, "empty cohomology basis");
  if (integration_.size() != n)
    throw GeometryError(GeometryErrorCode::malformed, "integration functional has the wrong length");
  auto it = std::find_if(basis_.begin(), basis_.end(), [](const BasisElement& b) { return b.degree == 0; });
  if (it == basis_.end() || std::count_if(basis_.begin(), basis_.end(),
                                          [](const BasisElement& b) { return b.degree == 0; }) != 1)
    throw GeometryError(GeometryErrorCode::malformed, "basis needs exactly one degree-0 class");
  unit_index_ = static_cast<std::size_t>(it - basis_.begin());
  for (const auto& b : basis_)
    if (b.degree < 0 || b.degree % 2 || b.degree > 2 * dim_)
      throw GeometryError(GeometryErrorCode::malformed, "basis class '" + b.name + "' has a bad degree");

  table_.assign(n, std::vector<std::map<int, Rational>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    table_[unit_index_][i][static_cast<int>(i)] = 1;
    table_[i][unit_index_][static_cast<int>(i)] = 1;
  }
  for (const auto& e : mult) {
    if (e.i < 0 || e.j < 0 || e.k < 0 || static_cast<std::size_t>(std::max({e.i, e.j, e.k})) >= n)
      throw GeometryError(GeometryErrorCode::malformed, "mult entry index out of range");
    if (basis_[e.i].degree + basis_[e.j].degree != basis_[e.k].degree)
      throw GeometryError(GeometryErrorCode::malformed, "mult entry does not respect degrees");
    if (e.coeff == 0) continue;
    table_[e.i][e.j][e.k] = e.coeff;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (integration_[i] != 0 && basis_[i].degree != 2 * dim_)
      throw GeometryError(GeometryErrorCode::malformed, "integration must vanish below the top degree");
}

Class CohomologyRing::unit() const { return basis_class(unit_index_); }

Class CohomologyRing::basis_class(std::size_t i) const {
  Class c = zero();
  c.at(i) = 1;
  return c;
}

Class CohomologyRing::point_class() const {
  // The top-degree class integrating to 1.
  Class c = zero();
  for (std::size_t i = 0; i < size(); ++i)
    if (basis_[i].degree == 2 * dim_ && integration_[i] != 0) {
      c[i] = 1 / integration_[i];
      return c;
    }
  throw GeometryError(GeometryErrorCode::malformed, "no point class");
}

Class CohomologyRing::multiply(const Class& a, const Class& b) const {
  if (a.size() != size() || b.size() != size()) throw StructuralError("class size mismatch");
  Class r = zero();
  for (std::size_t i = 0; i < size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < size(); ++j) {
      if (b[j] == 0) continue;
      for (const auto& [k, c] : table_[i][j]) r[k] += c * a[i] * b[j];
    }
  }
  return r;
}

Class CohomologyRing::power(const Class& a, int k) const {
  if (k < 0) throw DomainError("negative power of a class");
  Class r = unit();
  for (int i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

Rational CohomologyRing::integrate(const Class& a) const {
  Rational s = 0;
  for (std::size_t i = 0; i < size(); ++i) s += integration_[i] * a[i];
  return s;
}

Class CohomologyRing::degree_part(const Class& a, int k) const {
  Class r = zero();
  for (std::size_t i = 0; i < size(); ++i)
    if (basis_[i].degree == 2 * k) r[i] = a[i];
  return r;
}

bool CohomologyRing::is_homogeneous(const Class& a, int k) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (a[i] != 0 && basis_[i].degree != 2 * k) return false;
  return true;
}

Class CohomologyRing::exp_nilpotent(const Class& a) const {
  if (h0(a) != 0) throw DomainError("exp of a class with nonzero degree-0 part");
  Class result = unit(), term = unit();
  for (int k = 1; k <= dim_; ++k) {
    term = multiply(term, a);
    for (auto& v : term) v /= k;
    for (std::size_t i = 0; i < size(); ++i) result[i] += term[i];
  }
  return result;
}

std::vector<std::vector<Rational>> CohomologyRing::pairing_matrix() const {
  std::vector<std::vector<Rational>> p(size(), std::vector<Rational>(size()));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) p[i][j] = integrate(multiply(basis_class(i), basis_class(j)));
  return p;
}

void CohomologyRing::validate() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Class ij = multiply(basis_class(i), basis_class(j));
      Class ji = multiply(basis_class(j), basis_class(i));
      // Even-degree classes only, so graded commutativity is plain commutativity.
      if (ij != ji) throw GeometryError(GeometryErrorCode::non_associative, "cup product not commutative");
      for (std::size_t k = 0; k < n; ++k) {
        if (multiply(ij, basis_class(k)) != multiply(basis_class(i), multiply(basis_class(j), basis_class(k))))
          throw GeometryError(GeometryErrorCode::non_associative,
                              "(" + basis_[i].name + "*" + basis_[j].name + ")*" + basis_[k].name);
      }
    }
  Rational pt_total = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (basis_[i].degree == 2 * dim_) pt_total += integration_[i];
  if (pt_total == 0) throw GeometryError(GeometryErrorCode::singular_pairing, "integration vanishes on the top degree");
  if (determinant(RationalMatrix::from_rows(pairing_matrix())) == 0)
    throw GeometryError(GeometryErrorCode::singular_pairing, "Poincare pairing is degenerate");
}

// ---------------------------------------------------------------- ClassLaurent

ClassLaurent ClassLaurent::monomial(const CohomologyRing& ring, const Class& c, int zexp) {
  ClassLaurent r(&ring);
  r.add(zexp, c);
  return r;
}

ClassLaurent ClassLaurent::linear(const CohomologyRing& ring, const Class& d, const Rational& a) {
  ClassLaurent r(&ring);
  r.add(0, d);
  Class u = ring.unit();
  for (auto& v : u) v *= a;
  r.add(1, u);
  return r;
}

ClassLaurent ClassLaurent::inverse_linear(const CohomologyRing& ring, const Class& d, const Rational& a) {
  if (a == 0) throw DomainError("inverse of a nilpotent class");
  if (ring.h0(d) != 0) throw DomainError("inverse_linear expects a class without degree-0 part");
  // (D + a z)^{-1} = sum_k (-1)^k D^k / (a z)^{k+1}
  ClassLaurent r(&ring);
  Class power = ring.unit();
  Rational scale = 1 / a;
  for (int k = 0; k <= ring.dim(); ++k) {
    Class c = power;
    for (auto& v : c) v *= (k % 2 ? -scale : scale);
    r.add(-(k + 1), c);
    power = ring.multiply(power, d);
    scale /= a;
  }
  return r;
}

void ClassLaurent::add(int zexp, const Class& c) {
  if (std::all_of(c.begin(), c.end(), [](const Rational& v) { return v == 0; })) return;
  auto [it, inserted] = terms_.try_emplace(zexp, c);
  if (!inserted) {
    for (std::size_t i = 0; i < c.size(); ++i) it->second[i] += c[i];
    if (std::all_of(it->second.begin(), it->second.end(), [](const Rational& v) { return v == 0; }))
      terms_.erase(it);
  }
}

ClassLaurent ClassLaurent::operator*(const ClassLaurent& other) const {
  ClassLaurent r(ring_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) r.add(ea + eb, ring_->multiply(ca, cb));
  return r;
}

ClassLaurent& ClassLaurent::operator+=(const ClassLaurent& other) {
  if (!ring_) ring_ = other.ring_;
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

ClassLaurent ClassLaurent::operator*(const Rational& s) const {
  ClassLaurent r(ring_);
  for (const auto& [e, c] : terms_) {
    Class v = c;
    for (auto& x : v) x *= s;
    r.add(e, v);
  }
  return r;
}

ClassLaurent ClassLaurent::negate_z() const {
  ClassLaurent r(ring_);
  for (const auto& [e, c] : terms_) {
    Class v = c;
    if (e % 2)
      for (auto& x : v) x = -x;
    r.add(e, v);
  }
  return r;
}

ClassLaurent ClassLaurent::scale_by_degree() const {
  ClassLaurent r(ring_);
  for (const auto& [e, c] : terms_)
    for (int k = 0; k <= ring_->dim(); ++k) r.add(e + k, ring_->degree_part(c, k));
  return r;
}

Class ClassLaurent::at(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ring_->zero() : it->second;
}

}  // namespace lgmk
