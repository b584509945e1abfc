#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace twotrans {

/// Integer coordinates in the fundamental-weight basis.
using Weight = std::vector<int>;

std::string weight_to_string(const Weight& w);
Weight parse_weight(const std::string& text, int rank);

enum class SimpleType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Root data of the simple types: Cartan matrix, positive roots, coroot
/// pairings and the invariant inner product, all exact.
class RootDatum {
 public:
  static const RootDatum& create(SimpleType type, int rank);
  static const RootDatum& parse(const std::string& name);  // "B4", "g2", ...

  SimpleType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;

  /// cartan(i, j) = pairing of alpha_j against the i-th simple coroot.
  int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }

  int positive_root_count() const { return static_cast<int>(pairing_.size()); }

  /// <lambda, alpha^vee> for the k-th positive root.
  long long coroot_pairing(int k, const Weight& lambda) const;

  /// Sum over all positive coroots of <lambda, alpha^vee>.
  long long total_coroot_pairing(const Weight& lambda) const;

  /// Positive roots in fundamental-weight coordinates.
  const std::vector<Weight>& positive_roots_weight_coords() const {
    return roots_omega_;
  }

  Weight rho() const { return Weight(rank_, 1); }

  /// Highest weight of the adjoint module (the highest root).
  const Weight& adjoint_weight() const { return highest_root_; }

  /// Invariant inner product of two weights (exact rational).
  mpq_class inner(const Weight& a, const Weight& b) const;

  bool is_dominant(const Weight& w) const;

 private:
  RootDatum(SimpleType type, int rank);

  SimpleType type_;
  int rank_;
  std::vector<int> cartan_;
  std::vector<Weight> roots_omega_;          // positive roots, omega coords
  std::vector<std::vector<long long>> pairing_;  // per root: <omega_j, alpha^vee>
  std::vector<std::vector<mpq_class>> gram_;     // (omega_i, omega_j)
  Weight highest_root_;
};

inline constexpr long long kDefaultDimensionCap = 10000;

/// Weyl dimension formula, exact.
unsigned long long weyl_dim(const RootDatum& rd, const Weight& lambda);

/// Full weight multiset of the irreducible module (Freudenthal recursion).
std::map<Weight, long long> character(const RootDatum& rd, const Weight& lambda,
                                      long long dim_cap = kDefaultDimensionCap);

struct IrrepComponent {
  Weight weight;
  long long multiplicity = 0;
  unsigned long long dimension = 0;  // of a single copy
};

struct IrrepSum {
  std::vector<IrrepComponent> components;  // highest first
  unsigned long long total_dimension = 0;
};

IrrepSum tensor_decompose(const RootDatum& rd, const Weight& lambda,
                          const Weight& mu,
                          long long dim_cap = kDefaultDimensionCap);
IrrepSum sym2_decompose(const RootDatum& rd, const Weight& lambda,
                        long long dim_cap = kDefaultDimensionCap);
IrrepSum alt2_decompose(const RootDatum& rd, const Weight& lambda,
                        long long dim_cap = kDefaultDimensionCap);

/// -w_0(lambda), via the dominance walk.
Weight dual_weight(const RootDatum& rd, const Weight& lambda);

enum class RealType { kReal, kComplex, kQuaternionic };
std::string to_string(RealType t);

/// Complex when not self-dual, otherwise real/quaternionic by the parity of
/// the total coroot pairing. The convention is validated once per process
/// against pinned spin, symplectic and exceptional cases; a mismatch aborts.
RealType real_type(const RootDatum& rd, const Weight& lambda);

}  // namespace twotrans
