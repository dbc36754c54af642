#pragma once

#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "lgmk/exactalg.hpp"

namespace lgmk {

template <class T>
T to_real(const Rational& q) {
  if constexpr (std::is_same_v<T, double>) {
    return q.get_d();
  } else {
    return T(q.get_num().get_str()) / T(q.get_den().get_str());
  }
}

/// Coordinates of a class in the ring basis.
using Class = std::vector<Rational>;

struct BasisElement {
  std::string name;
  int degree = 0;  // real cohomological degree
};

struct MultEntry {
  int i, j, k;
  Rational coeff;
};

/// H*(X; Q) given by a multiplication table and an integration functional.
class CohomologyRing {
 public:
  CohomologyRing() = default;
  CohomologyRing(std::vector<BasisElement> basis, const std::vector<MultEntry>& mult,
                 std::vector<Rational> integration, int dim);

  std::size_t size() const { return basis_.size(); }
  int dim() const { return dim_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int complex_degree(std::size_t i) const { return basis_[i].degree / 2; }

  Class zero() const { return Class(size()); }
  Class unit() const;
  /// Basis vector with coordinate 1 at index i.
  Class basis_class(std::size_t i) const;
  Class point_class() const;

  Class multiply(const Class& a, const Class& b) const;
  Class power(const Class& a, int k) const;
  Rational integrate(const Class& a) const;

  /// Component of real degree 2k.
  Class degree_part(const Class& a, int k) const;
  Rational h0(const Class& a) const { return a[unit_index_]; }
  bool is_homogeneous(const Class& a, int k) const;

  /// exp of a nilpotent class (zero degree-0 part).
  Class exp_nilpotent(const Class& a) const;

  std::vector<std::vector<Rational>> pairing_matrix() const;

  /// Checks graded commutativity, associativity and the unit; throws GeometryError.
  void validate() const;

  template <class T>
  std::vector<T> multiply_real(const std::vector<T>& a, const std::vector<T>& b) const {
    std::vector<T> r(size(), T(0));
    for (std::size_t i = 0; i < size(); ++i) {
      if (a[i] == T(0)) continue;
      for (std::size_t j = 0; j < size(); ++j) {
        if (b[j] == T(0)) continue;
        for (const auto& [k, c] : table_[i][j]) r[k] += to_real<T>(c) * a[i] * b[j];
      }
    }
    return r;
  }

  template <class T>
  T integrate_real(const std::vector<T>& a) const {
    T s(0);
    for (std::size_t i = 0; i < size(); ++i) s += to_real<T>(integration_[i]) * a[i];
    return s;
  }

  template <class T>
  std::vector<T> to_real_class(const Class& a) const {
    std::vector<T> r;
    for (const auto& q : a) r.push_back(to_real<T>(q));
    return r;
  }

  /// exp of a nilpotent real class.
  template <class T>
  std::vector<T> exp_nilpotent_real(const std::vector<T>& a) const {
    std::vector<T> result(size(), T(0));
    result[unit_index_] = T(1);
    std::vector<T> term = result;
    for (int k = 1; k <= dim_; ++k) {
      term = multiply_real(term, a);
      for (auto& v : term) v /= T(k);
      for (std::size_t i = 0; i < size(); ++i) result[i] += term[i];
    }
    return result;
  }

  std::size_t unit_index() const { return unit_index_; }

 private:
  std::vector<BasisElement> basis_;
  std::vector<std::vector<std::map<int, Rational>>> table_;
  std::vector<Rational> integration_;
  int dim_ = 0;
  std::size_t unit_index_ = 0;
};

/// Laurent polynomial in z with class coefficients: z-exponent -> class.
class ClassLaurent {
 public:
  explicit ClassLaurent(const CohomologyRing* ring = nullptr) : ring_(ring) {}
  static ClassLaurent monomial(const CohomologyRing& ring, const Class& c, int zexp);
  /// (D + a z)^{-1} expanded in D/(a z); requires a != 0.
  static ClassLaurent inverse_linear(const CohomologyRing& ring, const Class& d, const Rational& a);
  /// D + a z.
  static ClassLaurent linear(const CohomologyRing& ring, const Class& d, const Rational& a);

  const std::map<int, Class>& terms() const { return terms_; }
  const CohomologyRing& ring() const { return *ring_; }
  bool is_zero() const { return terms_.empty(); }

  ClassLaurent operator*(const ClassLaurent& other) const;
  ClassLaurent& operator+=(const ClassLaurent& other);
  ClassLaurent operator*(const Rational& c) const;
  /// z -> -z.
  ClassLaurent negate_z() const;
  /// Multiplies the real-degree-2k part by z^k.
  ClassLaurent scale_by_degree() const;
  /// Coefficient class of z^e.
  Class at(int e) const;

  void add(int zexp, const Class& c);

 private:
  const CohomologyRing* ring_;
  std::map<int, Class> terms_;
};

}  // namespace lgmk
