#include "twotrans/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstring>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace twotrans {

namespace {

using ZPoly = std::vector<mpz_class>;  // coefficient of x^k at index k
using QPoly = std::vector<mpq_class>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; requires that b divides a.
ZPoly divide_exact(ZPoly a, const ZPoly& b) {
  ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
  while (a.size() >= b.size() && !a.empty()) {
    mpz_class lead = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = lead;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("polynomial division not exact");
  return q;
}

// n-th cyclotomic polynomial, computed by dividing x^n - 1 by the cyclotomic
// polynomials of the proper divisors of n.
const ZPoly& cyclotomic(unsigned n) {
  static std::map<unsigned, ZPoly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::function<const ZPoly&(unsigned)> compute = [&](unsigned k) -> const ZPoly& {
    auto found = cache.find(k);
    if (found != cache.end()) return found->second;
    ZPoly p(k + 1, mpz_class(0));
    p[0] = -1;
    p[k] = 1;  // x^k - 1
    for (unsigned d = 1; d < k; ++d) {
      if (k % d == 0) p = divide_exact(std::move(p), compute(d));
    }
    return cache.emplace(k, std::move(p)).first->second;
  };
  return compute(n);
}

// Monic Chebyshev-like basis: t_0 = 2, t_1 = x, t_{k+1} = x t_k - t_{k-1},
// so that t_k(z + 1/z) = z^k + z^{-k}.
ZPoly monic_chebyshev(unsigned k) {
  ZPoly prev{mpz_class(2)};
  if (k == 0) return prev;
  ZPoly cur{mpz_class(0), mpz_class(1)};
  for (unsigned i = 1; i < k; ++i) {
    ZPoly next(cur.size() + 1, mpz_class(0));
    for (size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
    for (size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Minimal polynomial of 2 cos(pi/L) over Q, derived from the palindromic
// cyclotomic polynomial of order 2L via z^k + z^{-k} = t_k(z + 1/z).
QPoly min_poly_of_generator(unsigned level) {
  if (level == 1) return {mpq_class(2), mpq_class(1)};  // x + 2, root -2
  const ZPoly& phi = cyclotomic(2 * level);
  size_t deg = phi.size() - 1;
  if (deg % 2 != 0) throw std::logic_error("cyclotomic degree not even");
  size_t m = deg / 2;
  ZPoly acc(m + 1, mpz_class(0));
  acc[0] = phi[m];
  for (size_t k = 1; k <= m; ++k) {
    ZPoly t = monic_chebyshev(static_cast<unsigned>(k));
    for (size_t j = 0; j < t.size(); ++j) acc[j] += phi[m + k] * t[j];
  }
  QPoly out(acc.size());
  for (size_t j = 0; j < acc.size(); ++j) out[j] = mpq_class(acc[j]);
  return out;
}

mpq_class eval(const QPoly& p, const mpq_class& x) {
  mpq_class acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Remainder of polynomial division over Q.
QPoly remainder(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class lead = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
    trim(a);
  }
  return a;
}

int sign_of(const mpq_class& q) { return sgn(q); }

int sign_variations(const std::vector<QPoly>& chain, const mpq_class& x) {
  int variations = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign_of(eval(p, x));
    if (s != 0) {
      if (prev != 0 && s != prev) ++variations;
      prev = s;
    }
  }
  return variations;
}

// Interval product [al,ah] * [bl,bh] with exact rational endpoints.
void interval_mul(const mpq_class& al, const mpq_class& ah, const mpq_class& bl,
                  const mpq_class& bh, mpq_class& lo, mpq_class& hi) {
  mpq_class p1 = al * bl, p2 = al * bh, p3 = ah * bl, p4 = ah * bh;
  lo = std::min(std::min(p1, p2), std::min(p3, p4));
  hi = std::max(std::max(p1, p2), std::max(p3, p4));
}

}  // namespace

RealCyclotomicField::RealCyclotomicField(unsigned level) : level_(level) {
  if (level == 0) throw std::invalid_argument("field level must be positive");
  min_poly_ = min_poly_of_generator(level);
  degree_ = static_cast<unsigned>(min_poly_.size() - 1);
  generator_approx_ = 2.0 * std::cos(M_PI / static_cast<double>(level));

  // x^{degree+j} reduced modulo the minimal polynomial.
  if (degree_ >= 1) {
    std::vector<mpq_class> power(degree_, mpq_class(0));
    for (unsigned j = 0; j < degree_; ++j) power[j] = -min_poly_[j];  // x^degree
    for (unsigned j = 0; j + 1 < degree_; ++j) {
      high_power_.push_back(power);
      // multiply by x and fold the top coefficient
      mpq_class top = power.back();
      for (size_t i = power.size(); i-- > 1;) power[i] = power[i - 1];
      power[0] = 0;
      for (unsigned i = 0; i < degree_; ++i) power[i] -= top * min_poly_[i];
    }
  }

  if (degree_ >= 2) {
    // Sturm chain for root counting.
    QPoly p0 = min_poly_;
    QPoly p1(degree_, mpq_class(0));
    for (unsigned i = 1; i <= degree_; ++i) p1[i - 1] = mpq_class(i) * min_poly_[i];
    sturm_.push_back(p0);
    sturm_.push_back(p1);
    while (true) {
      QPoly r = remainder(sturm_[sturm_.size() - 2], sturm_.back());
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      sturm_.push_back(std::move(r));
      if (sturm_.back().size() == 1) break;
    }

    // Isolating interval around the generator, certified by Sturm counts.
    // The generator is the largest real root, so [approx - margin, 3] is
    // isolating once the margin undercuts the gap to the next root.
    mpq_class hi(3);
    double margin = 1e-6;
    for (int attempt = 0; attempt < 60; ++attempt) {
      mpq_class lo(generator_approx_ - margin);
      int count = sign_variations(sturm_, lo) - sign_variations(sturm_, hi);
      if (count == 1) {
        iso_lo_ = lo;
        iso_hi_ = hi;
        break;
      }
      if (count == 0) {
        margin *= 4.0;  // overshot below the root
      } else {
        margin /= 16.0;  // caught additional roots
      }
      if (attempt == 59) throw std::logic_error("failed to isolate field generator");
    }
  }
}

std::shared_ptr<const RealCyclotomicField> RealCyclotomicField::get(unsigned level) {
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const RealCyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(level);
  if (it != cache.end()) return it->second;
  auto field = std::shared_ptr<const RealCyclotomicField>(
      new RealCyclotomicField(level));
  cache.emplace(level, field);
  return field;
}

void RealCyclotomicField::reduce(std::vector<mpq_class>& coeffs) const {
  if (coeffs.size() <= degree_) {
    coeffs.resize(degree_, mpq_class(0));
    return;
  }
  std::vector<mpq_class> out(degree_, mpq_class(0));
  for (unsigned i = 0; i < degree_ && i < coeffs.size(); ++i) out[i] = coeffs[i];
  for (size_t k = degree_; k < coeffs.size(); ++k) {
    const mpq_class& c = coeffs[k];
    if (c == 0) continue;
    const auto& rep = high_power_.at(k - degree_);
    for (unsigned i = 0; i < degree_; ++i) out[i] += c * rep[i];
  }
  coeffs = std::move(out);
}

int RealCyclotomicField::sign_at_generator(const std::vector<mpq_class>& p) const {
  size_t top = p.size();
  while (top > 0 && p[top - 1] == 0) --top;
  if (top == 0) return 0;
  if (top == 1) return sign_of(p[0]);

  std::lock_guard<std::mutex> lock(interval_mutex_);
  mpq_class lo = iso_lo_, hi = iso_hi_;
  int lo_minpoly_sign = sign_of(eval(min_poly_, lo));
  while (true) {
    // Exact interval evaluation of p over [lo, hi] by Horner steps.
    mpq_class alo(0), ahi(0);
    for (size_t i = top; i-- > 0;) {
      mpq_class mlo, mhi;
      interval_mul(alo, ahi, lo, hi, mlo, mhi);
      alo = mlo + p[i];
      ahi = mhi + p[i];
    }
    if (sign_of(alo) > 0) return 1;
    if (sign_of(ahi) < 0) return -1;
    // Bisect; the half containing the root is the one with a sign change.
    mpq_class mid = (lo + hi) / 2;
    int mid_sign = sign_of(eval(min_poly_, mid));
    if (mid_sign == 0) throw std::logic_error("rational root of minimal polynomial");
    if (mid_sign == lo_minpoly_sign) {
      lo = mid;
    } else {
      hi = mid;
    }
    iso_lo_ = lo;
    iso_hi_ = hi;
  }
}

AlgebraicScalar::AlgebraicScalar(std::shared_ptr<const RealCyclotomicField> field,
                                 std::vector<mpq_class> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("null field");
  field_->reduce(coeffs_);
  normalize();
}

void AlgebraicScalar::normalize() {
  // Canonical representation: rational values always carry a null field.
  // Without this, equal values could hash differently.
  if (!field_) return;
  if (field_->degree() == 1 || is_rational()) {
    field_.reset();
    coeffs_.resize(1);
  }
}

AlgebraicScalar AlgebraicScalar::generator(
    std::shared_ptr<const RealCyclotomicField> field) {
  if (!field) throw std::invalid_argument("null field");
  if (field->degree() == 1) {
    // Generator is rational: root of the linear minimal polynomial.
    return AlgebraicScalar(mpq_class(-field->min_poly()[0]));
  }
  std::vector<mpq_class> c(field->degree(), mpq_class(0));
  c[1] = 1;
  return AlgebraicScalar(std::move(field), std::move(c));
}

AlgebraicScalar AlgebraicScalar::two_cos_pi_over(
    unsigned m, const std::shared_ptr<const RealCyclotomicField>& field) {
  if (m == 0) return AlgebraicScalar(2);  // bond order infinity: cos(0) = 1
  if (m == 1) return AlgebraicScalar(-2);
  if (m == 2) return AlgebraicScalar(0);
  if (!field || field->level() % m != 0)
    throw std::invalid_argument("field level does not contain bond order");
  unsigned k = field->level() / m;
  AlgebraicScalar prev(2);
  AlgebraicScalar cur = generator(field);
  for (unsigned i = 1; i < k; ++i) {
    AlgebraicScalar next = generator(field) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool AlgebraicScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool AlgebraicScalar::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

mpq_class AlgebraicScalar::rational_value() const {
  if (!is_rational()) throw std::logic_error("value is irrational");
  return coeffs_[0];
}

int AlgebraicScalar::sign() const {
  if (!field_ || is_rational()) return sign_of(coeffs_[0]);
  return field_->sign_at_generator(coeffs_);
}

double AlgebraicScalar::to_double() const {
  double x = field_ ? field_->generator_approx() : 0.0;
  double acc = 0.0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i].get_d();
  return acc;
}

std::string AlgebraicScalar::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[i].get_str();
    if (i >= 1) os << "*c" << (i > 1 ? std::to_string(i) : "");
    first = false;
  }
  os << " [c = 2cos(pi/" << field_->level() << ")]";
  return os.str();
}

AlgebraicScalar AlgebraicScalar::operator-() const {
  AlgebraicScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

void AlgebraicScalar::align(AlgebraicScalar& a, AlgebraicScalar& b) {
  if (a.field_ == b.field_) return;
  if (a.field_ && b.field_) {
    if (a.field_->level() != b.field_->level())
      throw std::logic_error("mixing scalars from different fields");
    return;
  }
  AlgebraicScalar& rational = a.field_ ? b : a;
  const AlgebraicScalar& proper = a.field_ ? a : b;
  rational.field_ = proper.field_;
  rational.coeffs_.resize(proper.field_->degree(), mpq_class(0));
}

AlgebraicScalar& AlgebraicScalar::operator+=(const AlgebraicScalar& rhs) {
  AlgebraicScalar r = rhs;
  align(*this, r);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
  normalize();
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator-=(const AlgebraicScalar& rhs) {
  AlgebraicScalar r = rhs;
  align(*this, r);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= r.coeffs_[i];
  normalize();
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator*=(const AlgebraicScalar& rhs) {
  AlgebraicScalar r = rhs;
  align(*this, r);
  if (!field_) {
    coeffs_[0] *= r.coeffs_[0];
    return *this;
  }
  std::vector<mpq_class> prod(coeffs_.size() + r.coeffs_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < r.coeffs_.size(); ++j) {
      if (r.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * r.coeffs_[j];
    }
  }
  field_->reduce(prod);
  coeffs_ = std::move(prod);
  normalize();
  return *this;
}

AlgebraicScalar AlgebraicScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (!field_ || is_rational()) {
    AlgebraicScalar out = *this;
    out.coeffs_.assign(out.coeffs_.size(), mpq_class(0));
    out.coeffs_[0] = 1 / coeffs_[0];
    return out;
  }
  // Extended Euclid in Q[x] against the minimal polynomial.
  QPoly r0 = field_->min_poly();
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0{};  // coefficient of the element in r0 = ... (tracks Bezout factor)
  QPoly s1{mpq_class(1)};
  while (true) {
    // r0 = q * r1 + r2
    QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, mpq_class(0));
    QPoly r2 = r0;
    while (r2.size() >= r1.size() && !r2.empty()) {
      mpq_class lead = r2.back() / r1.back();
      size_t shift = r2.size() - r1.size();
      q[shift] = lead;
      for (size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= lead * r1[i];
      trim(r2);
    }
    // s2 = s0 - q * s1
    QPoly s2 = s0;
    if (!q.empty() && !s1.empty()) {
      s2.resize(std::max(s2.size(), q.size() + s1.size() - 1), mpq_class(0));
      for (size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
      }
      trim(s2);
    }
    if (r2.empty()) {
      // r1 is the gcd; it must be a nonzero constant since the minimal
      // polynomial is irreducible.
      if (r1.size() != 1) throw std::logic_error("inverse: gcd not constant");
      QPoly inv = s1;
      for (auto& c : inv) c /= r1[0];
      return AlgebraicScalar(field_, std::move(inv));
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

size_t AlgebraicScalar::hash() const {
  size_t h = field_ ? field_->level() : 0;
  for (const auto& c : coeffs_) {
    double d = c.get_d();
    size_t bits;
    static_assert(sizeof(double) == sizeof(size_t));
    std::memcpy(&bits, &d, sizeof(bits));
    h = h * 1000003u + bits;
  }
  return h;
}

}  // namespace twotrans
