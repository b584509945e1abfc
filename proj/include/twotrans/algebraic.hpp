#pragma once

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace twotrans {

/// The real field Q(2 cos(pi/L)), the maximal real subfield of the 2L-th
/// cyclotomic field. Field objects are immutable and shared; obtain them
/// through get(). Elements are represented by AlgebraicScalar as rational
/// coordinate vectors over the power basis 1, c, c^2, ... of the generator
/// c = 2 cos(pi/L).
class RealCyclotomicField {
 public:
  /// Returns the (memoized) field of the given level L >= 1.
  static std::shared_ptr<const RealCyclotomicField> get(unsigned level);

  unsigned level() const { return level_; }
  unsigned degree() const { return degree_; }

  /// Monic minimal polynomial of the generator; min_poly()[k] is the
  /// coefficient of x^k, min_poly().back() == 1.
  const std::vector<mpq_class>& min_poly() const { return min_poly_; }

  /// Exact sign (-1, 0, +1) of p(c) where p is given by coefficients of
  /// degree < degree(). Decided by refining an isolating interval for c;
  /// terminates because a nonzero reduced p cannot vanish at c.
  int sign_at_generator(const std::vector<mpq_class>& p) const;

  double generator_approx() const { return generator_approx_; }

 private:
  explicit RealCyclotomicField(unsigned level);

  // Reduces a coefficient vector of arbitrary degree modulo the minimal
  // polynomial; result has degree < degree().
  void reduce(std::vector<mpq_class>& coeffs) const;

  unsigned level_ = 1;
  unsigned degree_ = 1;
  std::vector<mpq_class> min_poly_;
  // high_power_[j] = x^{degree_+j} reduced, for j = 0 .. degree_-2.
  std::vector<std::vector<mpq_class>> high_power_;
  // Sturm chain of the minimal polynomial, used to certify root isolation.
  std::vector<std::vector<mpq_class>> sturm_;
  double generator_approx_ = 0.0;

  // Isolating interval for the generator (the largest real root of the
  // minimal polynomial). Refined lazily by sign queries.
  mutable std::mutex interval_mutex_;
  mutable mpq_class iso_lo_, iso_hi_;

  friend class AlgebraicScalar;
};

/// An exact element of a RealCyclotomicField. Rational values may carry a
/// null field pointer; they are promoted on demand when combined with proper
/// field elements. Arithmetic, equality and sign are exact.
class AlgebraicScalar {
 public:
  AlgebraicScalar() : coeffs_(1, mpq_class(0)) {}
  explicit AlgebraicScalar(long value) : coeffs_(1, mpq_class(value)) {}
  explicit AlgebraicScalar(const mpq_class& value) : coeffs_(1, value) {}

  /// Element given by coordinates over the power basis of the field.
  AlgebraicScalar(std::shared_ptr<const RealCyclotomicField> field,
                  std::vector<mpq_class> coeffs);

  /// The generator 2 cos(pi/level) of the field.
  static AlgebraicScalar generator(
      std::shared_ptr<const RealCyclotomicField> field);

  /// 2 cos(pi/m) as an element of `field`; requires m | field->level().
  static AlgebraicScalar two_cos_pi_over(
      unsigned m, const std::shared_ptr<const RealCyclotomicField>& field);

  const std::shared_ptr<const RealCyclotomicField>& field() const {
    return field_;
  }

  bool is_zero() const;
  bool is_rational() const;
  /// Value as a rational; requires is_rational().
  mpq_class rational_value() const;

  int sign() const;
  double to_double() const;
  std::string to_string() const;

  AlgebraicScalar operator-() const;
  AlgebraicScalar& operator+=(const AlgebraicScalar& rhs);
  AlgebraicScalar& operator-=(const AlgebraicScalar& rhs);
  AlgebraicScalar& operator*=(const AlgebraicScalar& rhs);

  friend AlgebraicScalar operator+(AlgebraicScalar a, const AlgebraicScalar& b) {
    a += b;
    return a;
  }
  friend AlgebraicScalar operator-(AlgebraicScalar a, const AlgebraicScalar& b) {
    a -= b;
    return a;
  }
  friend AlgebraicScalar operator*(AlgebraicScalar a, const AlgebraicScalar& b) {
    a *= b;
    return a;
  }
  friend bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b) {
    return (a - b).is_zero();
  }
  friend bool operator!=(const AlgebraicScalar& a, const AlgebraicScalar& b) {
    return !(a == b);
  }

  /// Multiplicative inverse; requires a nonzero value.
  AlgebraicScalar inverse() const;
  AlgebraicScalar& operator/=(const AlgebraicScalar& rhs) {
    *this *= rhs.inverse();
    return *this;
  }
  friend AlgebraicScalar operator/(AlgebraicScalar a, const AlgebraicScalar& b) {
    a /= b;
    return a;
  }

  size_t hash() const;

 private:
  // Aligns the two operands to a common field (promoting rationals).
  static void align(AlgebraicScalar& a, AlgebraicScalar& b);
  // Restores the canonical representation (rational values carry no field).
  void normalize();

  std::shared_ptr<const RealCyclotomicField> field_;  // null for rationals
  std::vector<mpq_class> coeffs_;  // size 1 (rational) or field degree
};

}  // namespace twotrans
