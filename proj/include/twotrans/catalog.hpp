#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "twotrans/report.hpp"

namespace twotrans {

/// Quaternions over doubles; the catalog probes are the only floating-point
/// corner of the library.
struct Quat {
  double w = 0, x = 0, y = 0, z = 0;
  friend Quat operator*(const Quat& a, const Quat& b);
  friend Quat operator-(const Quat& a, const Quat& b);
  double norm() const;
};

/// e^{t(1 + i a)} = e^t (cos(ta) + i sin(ta)) on the distinguished complex
/// axis.
Quat spiral_element(double a, double t);

/// Checks spiral(a, s+t) == spiral(a, s) * spiral(a, t) on random s, t.
bool spiral_subgroup_law(double a, int samples, double tol, uint64_t seed);

struct ProbeResult {
  bool pass = false;
  int samples = 0;
  double max_error = 0;
};

/// Regularity probe for one sharply-transitive family: solves in closed form
/// for the unique group element mapping 1 to a random target, checks the
/// solution and rejects a perturbed factorization.  kind is one of
/// "real", "complex", "quaternion", "spiral" (spiral uses the parameter a).
ProbeResult sharply_transitive_probe(const std::string& kind, double a,
                                     int samples, double tol, uint64_t seed);

/// The classification tables, loaded from the versioned JSON documents.
class Catalog {
 public:
  static Catalog load(const std::string& data_dir);
  static const std::vector<std::string>& table_ids();
  /// Normalizes loose spellings ("Sh2Trs", "compact-class-a", ...).
  static std::string normalize_table_id(const std::string& raw);

  const nlohmann::json& table(const std::string& id) const;

  struct Query {
    std::optional<std::string> table;
    std::optional<long long> m;
    std::optional<std::string> space_kind;  // sphere | projective | vector
    std::optional<std::string> flag;
    std::optional<std::string> space;  // exact display match, e.g. "S^15"
  };

  struct Hit {
    std::string table;
    nlohmann::json row;
  };
  std::vector<Hit> lookup(const Query& q) const;

  /// Every stored invariant: row counts, dimension arithmetic against the
  /// weight-lattice engine, inclusion monotonicity, isomorphism links.
  CheckReport verify() const;

 private:
  std::map<std::string, nlohmann::json> tables_;
};

}  // namespace twotrans
