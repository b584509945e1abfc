#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "twotrans/coxeter.hpp"

namespace twotrans {

/// The orbit of a fundamental weight under the full group, with the
/// permutation action of every generator. Point 0 is the base weight; the
/// stabilizer of point 0 is the parabolic subgroup omitting `node`.
class WeightOrbit {
 public:
  WeightOrbit(CoxeterDiagram diagram, int node);

  const CoxeterDiagram& diagram() const { return diagram_; }
  int node() const { return node_; }
  int size() const { return size_; }
  static constexpr int kBase = 0;

  /// generator_perms()[j][p] is the image of point p under s_j.
  const std::vector<std::vector<int32_t>>& generator_perms() const {
    return perms_;
  }

  /// Exact fundamental-weight coordinates of a point.
  std::vector<AlgebraicScalar> point(int index) const;

  /// Image of a point under a word (letters applied right to left).
  int apply_word(const Word& w, int point) const;

 private:
  CoxeterDiagram diagram_;
  int node_;
  int size_ = 0;
  std::vector<std::vector<int32_t>> perms_;
  // integer path for crystallographic diagrams, exact path otherwise
  std::vector<long long> int_points_;  // size_ * rank, row-major
  std::vector<std::vector<AlgebraicScalar>> exact_points_;
  bool integral_ = false;
};

WeightOrbit weight_orbit(const CoxeterDiagram& d, int node);

struct DoubleCosetClass {
  long long size = 0;
  int min_length = 0;  // length of the minimal representative
  Word representative;  // reduced; shortest, then lexicographically smallest
};

struct DoubleCosetDecomposition {
  std::vector<int> class_of_point;       // orbit point -> class index
  std::vector<DoubleCosetClass> classes;  // class 0 contains the base point
};

DoubleCosetDecomposition double_cosets(const WeightOrbit& orbit);
DoubleCosetDecomposition double_cosets(const CoxeterDiagram& d, int node);

bool is_two_transitive(const CoxeterDiagram& d, int node);

/// The three diagram patterns that force a third double coset, relative to
/// the distinguished node 0.
enum class WitnessCase {
  kBranchAtDistinguished,  // node 0 has two neighbors
  kBranchAtInterior,       // some other node has three neighbors
  kMultipleBond,           // a bond of order >= 4 somewhere on a path from 0
};

WitnessCase witness_case_from_string(const std::string& s);
std::string to_string(WitnessCase c);

/// The explicit reduced word exhibiting the violation; throws
/// std::domain_error if the diagram does not contain the pattern.
Word witness_word(const CoxeterDiagram& d, WitnessCase c);

struct ClassifyRow {
  std::string diagram;
  int node = 0;  // 0-based
  long long class_count = 0;
  bool two_transitive = false;
  bool degenerate = false;  // the rank-1 two-point action
};

/// Sweeps all irreducible finite-type diagrams of rank <= max_rank (with
/// dihedral bonds up to max_dihedral) and every corank-1 node choice, and
/// returns the pairs whose coset action is 2-transitive. The rank-1 case is
/// included but flagged degenerate.
std::vector<ClassifyRow> classify(int max_rank, int max_dihedral = 12);

/// Same sweep without filtering; every (diagram, node) pair with its class
/// count.
std::vector<ClassifyRow> classify_all_rows(int max_rank, int max_dihedral = 12);

}  // namespace twotrans
