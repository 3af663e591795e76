#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gdh/lattice.hpp"

namespace gdh {

enum class QueryMode { ExactShell, Ball };

struct SphereQuery {
  ExactLattice lattice;
  RatVec target;   // ambient coordinates
  Rat radius_sq;   // ⟨v-target, v-target⟩ bound, ambient inner product
  QueryMode mode = QueryMode::Ball;
};

/// Finite, duplicate-free, lexicographically sorted set of ambient vectors.
/// Sorted output makes results independent of thread count.
struct VectorSet {
  std::vector<RatVec> vectors;
  Rat radius_sq;

  std::size_t size() const { return vectors.size(); }
};

struct EnumOptions {
  int jobs = 1;
  std::uint64_t candidate_cap = 10'000'000;  // guards against mis-scaled queries
};

struct EnumerationLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All lattice vectors v with ⟨v-target,v-target⟩ = radius_sq (ExactShell)
/// or ≤ radius_sq (Ball). Branch-and-bound over an exact LDL^T of the Gram
/// matrix; every emitted vector is re-verified against the query predicate
/// in rational arithmetic before it is returned.
VectorSet close_vectors(const SphereQuery& q, const EnumOptions& opt = {});

struct CosetMinimum {
  Rat min_norm;       // minimum of ⟨β,β⟩ over the coset
  std::size_t count;  // number of minimizers
};

/// Shortest vectors of a (never empty) lattice coset, by expanding-radius
/// close-vector queries around -shift.
CosetMinimum min_norm_in_coset(const Coset& c, const EnumOptions& opt = {});

}  // namespace gdh
