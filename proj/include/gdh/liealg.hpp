#pragma once

#include <string>
#include <vector>

#include "gdh/diagram.hpp"
#include "gdh/rational.hpp"

namespace gdh {

/// A simple Lie type. Valid ranks: A l≥1, B l≥2, C l≥3, D l≥4, E 6/7/8,
/// F 4, G 2.
struct SimpleType {
  char family = 'A';
  int rank = 0;

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

bool valid_simple_type(const SimpleType& t);
int dual_coxeter(const SimpleType& t);
int lacing(const SimpleType& t);
long dimension(const SimpleType& t);

/// One simple ideal with level and multiplicity.
struct Ideal {
  SimpleType type;
  int level = 1;
  int mult = 1;

  friend auto operator<=>(const Ideal&, const Ideal&) = default;
};

/// Multiset of (simple type, level) pairs sharing one ratio h^∨/k,
/// canonically sorted by (family, rank, level).
struct AffineStructure {
  std::vector<Ideal> ideals;

  long dim() const;
  int total_rank() const;
  Rat ratio() const;  // common h^∨/k
  friend bool operator==(const AffineStructure& a, const AffineStructure& b) {
    return a.ideals == b.ideals;
  }
};

/// "A_{3,1}^2D_{5,2}^2" style; multiplicities ≥ 10 get braces.
std::string structure_name(const AffineStructure& s);
AffineStructure parse_structure(const std::string& s);

/// All affine structures with h_i^∨/k_i constant, total rank ≤ 24 and
/// Σ dim = 24·(1 + h^∨/k). Deterministic order; each returned structure is
/// re-asserted against the ratio identity independently of the search.
std::vector<AffineStructure> trace_identity_solutions(int jobs = 1);

/// lcm over ideals of lacing · dual Coxeter number.
long orbifold_order(const AffineStructure& s);

/// Hole diagram of the structure: ideals attaining l_i·h_i^∨ = n map to
/// A_l→Ã_l, B_l→A_1, C_l→A_{l-1}, D_l→D̃_l, E_l→Ẽ_l, F_4→A_2, G_2→A_1.
HoleDiagram invtype_diagram(const AffineStructure& s);

}  // namespace gdh
