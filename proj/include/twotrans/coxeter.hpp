#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twotrans/algebraic.hpp"

namespace twotrans {

/// A word in the generators; letters are 0-based node indices. External
/// formats (CLI, reports, diagram files) use 1-based node numbering.
using Word = std::vector<int>;

/// A Coxeter diagram: nodes 0..rank-1 and symmetric bond orders m_ij with
/// m_ii = 1 and m_ij >= 2 off the diagonal. The value 0 encodes an infinite
/// bond. Immutable after construction.
class CoxeterDiagram {
 public:
  static constexpr unsigned kInfiniteBond = 0;

  CoxeterDiagram(int rank, std::vector<unsigned> bond_matrix,
                 std::string name = "");

  /// Named types with Bourbaki node ordering: A1.., B2.., C2.., D4.., E6..E8,
  /// F4, G2, H3, H4, I2(m), I2(inf). Case-insensitive.
  static CoxeterDiagram named(const std::string& name);

  /// Accepts a named type or a JSON document {"nodes": n, "bonds": [[i,j,m]..]}
  /// (1-based nodes, m = 0 or "inf" for an infinite bond) or
  /// {"matrix": [[...]]} with the full symmetric bond matrix.
  static CoxeterDiagram parse(const std::string& text);

  int rank() const { return rank_; }
  unsigned bond(int i, int j) const;
  const std::string& name() const { return name_; }
  std::string display_name() const;

  /// Nodes joined to i by an edge (m >= 3 or infinite).
  std::vector<int> neighbors(int i) const;
  bool is_irreducible() const;
  std::vector<std::vector<int>> components() const;
  bool has_infinite_bond() const;

  std::string to_document() const;  // JSON round-trip form

 private:
  int rank_;
  std::vector<unsigned> bonds_;  // rank*rank, row-major
  std::string name_;
};

/// Reflection-action data derived from a diagram: a generalized Cartan matrix
/// with A_ii = 2, A_ij <= 0 and A_ij A_ji = 4 cos^2(pi/m_ij). Crystallographic
/// bonds on forest diagrams get the integral split so the whole action stays
/// in integer arithmetic; otherwise entries live in Q(2cos(pi/L)).
struct CartanData {
  int rank = 0;
  bool integral = false;
  std::vector<long long> int_entries;        // rank*rank when integral
  std::vector<AlgebraicScalar> exact_entries;  // rank*rank, always valid
  std::shared_ptr<const RealCyclotomicField> field;  // null when rational

  long long ientry(int i, int j) const { return int_entries[i * rank + j]; }
  const AlgebraicScalar& entry(int i, int j) const {
    return exact_entries[i * rank + j];
  }
};

const CartanData& cartan_data(const CoxeterDiagram& d);

/// s_i acting on a vector in fundamental-weight coordinates.
std::vector<AlgebraicScalar> simple_reflection(
    const CoxeterDiagram& d, int node, const std::vector<AlgebraicScalar>& v);

/// True iff the word is a reduced expression, decided by the descent
/// criterion with exact arithmetic.
bool is_reduced(const CoxeterDiagram& d, const Word& w);

/// Length of the represented group element (<= |w|).
int element_length(const CoxeterDiagram& d, const Word& w);

/// Some reduced expression of the represented element, obtained by iterated
/// descent reduction. Deterministic for a given input word.
Word reduced_word(const CoxeterDiagram& d, const Word& w);

struct GroupOrder {
  bool finite = false;
  mpz_class order;  // meaningful when finite
};

/// |W| when the Gram form -cos(pi/m_ij) is positive definite, infinite
/// otherwise. Finite orders come from type recognition per component.
GroupOrder group_order(const CoxeterDiagram& d);

/// Recognized isomorphism type of a connected finite-type diagram.
struct TypeId {
  char family = '?';  // A, B, D, E, F, H, I (rank-2 families are all 'I')
  int rank = 0;
  unsigned dihedral = 0;  // m for family 'I'
};

std::optional<TypeId> recognize_finite_component(const CoxeterDiagram& d,
                                                 const std::vector<int>& nodes);

}  // namespace twotrans
