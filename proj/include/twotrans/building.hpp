#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twotrans/coxeter.hpp"
#include "twotrans/report.hpp"

namespace twotrans {

/// A permutation of {0..n-1} as an image array; the W-distance values of a
/// rank-k building live in Sym(k+1).
using SymPerm = std::vector<uint8_t>;

int perm_inversions(const SymPerm& w);
int perm_index(const SymPerm& w);          // Lehmer rank in [0, n!)
SymPerm perm_from_index(int index, int n);
SymPerm perm_inverse(const SymPerm& w);
SymPerm perm_multiply(const SymPerm& a, const SymPerm& b);  // (a*b)(x) = a(b(x))
Word perm_to_word(const SymPerm& w);       // reduced word in adjacent swaps
long long factorial_ll(int n);

/// The building of full flags in F_q^{rank+1}: chambers are maximal flags
/// stored as canonical row-echelon bases, i-adjacency identifies flags that
/// agree outside the i-th subspace. Immutable after construction.
class Building {
 public:
  Building(int rank, int q, long long chamber_cap = 1000000);

  int rank() const { return rank_; }
  int q() const { return q_; }
  int dim() const { return dim_; }
  int chamber_count() const { return static_cast<int>(chambers_.size()); }

  /// Panel (codimension-one residue) bookkeeping; type is 1-based like the
  /// subspace dimensions, 1 <= type <= rank.
  int panel_of(int type, int chamber) const;
  const std::vector<std::vector<int>>& panel_members(int type) const;

  /// Chambers grouped by their 1-dimensional subspace (the point residues).
  int point_of(int chamber) const { return point_of_[chamber]; }
  int point_count() const { return static_cast<int>(point_residues_.size()); }
  const std::vector<std::vector<int>>& point_residues() const {
    return point_residues_;
  }

  int line_of(int chamber) const { return line_of_[chamber]; }
  int line_count() const { return line_count_; }

  /// Relative position of two chambers: the permutation read off the
  /// intersection-dimension table of the two flags.
  SymPerm w_distance(int c, int d) const;

  /// Flag-level variant; rejects flags that do not belong to this building.
  SymPerm w_distance(const std::vector<uint8_t>& c,
                     const std::vector<uint8_t>& d) const;

  /// Point permutations induced by a generating set of GL(dim, q).
  std::vector<std::vector<int>> point_action_generators() const;

  /// Packed canonical bytes of a chamber (all echelon bases concatenated).
  const std::vector<uint8_t>& chamber_bytes(int c) const { return chambers_[c]; }

  /// Index of a chamber given its packed bytes; -1 if absent.
  int find_chamber(const std::vector<uint8_t>& bytes) const;

 private:
  int rank_, q_, dim_;
  std::vector<std::vector<uint8_t>> chambers_;
  std::vector<std::vector<int>> panel_of_;            // [type-1][chamber]
  std::vector<std::vector<std::vector<int>>> panels_;  // [type-1][panel]
  std::vector<int> point_of_;
  std::vector<std::vector<int>> point_residues_;
  std::vector<int> line_of_;
  int line_count_ = 0;
};

Building build_building(int rank, int q, long long chamber_cap = 1000000);

/// Histogram of W-distance values over all ordered chamber pairs, indexed by
/// perm_index. The parallel version fans out over chambers with per-thread
/// accumulators; both produce identical results.
std::vector<long long> pair_distance_histogram_serial(const Building& b);
std::vector<long long> pair_distance_histogram_parallel(const Building& b);

/// All-pairs scan between point residues: minimal W-distance data per ordered
/// point pair plus the sets of W-values within and across point residues.
struct PointPairScan {
  bool minima_unique = false;     // unique minimal element for every pair
  bool minima_uniform = false;    // the same element for every pair
  int common_min = -1;            // perm index of that element
  std::vector<uint8_t> same_point_values;   // flags per perm index
  std::vector<uint8_t> cross_point_values;  // flags per perm index
};
PointPairScan scan_point_pairs_serial(const Building& b);
PointPairScan scan_point_pairs_parallel(const Building& b);

/// The three point-residue checks: the induced matrix group acts
/// 2-transitively on points; every distinct pair of point residues attains
/// its minimal W-distance at one and the same element; and the W-values
/// split into the parabolic set and one further double coset.
CheckReport check_two_transitive_points(const Building& b, bool parallel = true);

/// Projective-plane/space axioms for the point-line geometry extracted from
/// the residues, including the Veblen-Young condition for rank >= 3.
CheckReport projective_axioms_report(const Building& b);
bool check_projective_axioms(const Building& b);

}  // namespace twotrans
