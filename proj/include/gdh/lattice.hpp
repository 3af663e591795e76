#pragma once

#include <optional>
#include <string>

#include "gdh/linalg.hpp"

namespace gdh {

/// A positive-definite lattice with exact rational coordinates.
///
/// The ambient inner product is ⟨u,v⟩ = scale·uᵀv. The scale carries
/// irrational global factors (√2-style rescalings) that would otherwise
/// make the coordinates irrational; all geometry downstream reads the
/// Gram matrix only.
struct ExactLattice {
  Eigen::Index rank = 0;
  Eigen::Index ambient = 0;
  Rat scale = 1;
  RatMat basis;  // rank x ambient, rows are basis vectors
  RatMat gram;   // rank x rank, = scale * basis * basisᵀ

  Rat inner(const RatVec& u, const RatVec& v) const { return scale * u.dot(v); }
  Rat norm(const RatVec& u) const { return inner(u, u); }

  /// Ambient vector of the lattice point with coefficient vector x.
  RatVec vector_of(const RatVec& x) const { return basis.transpose() * x; }

  /// Coefficients of an ambient vector w.r.t. the basis, if it lies in the
  /// rational span; integrality of the result decides lattice membership.
  RatVec coefficients(const RatVec& v) const;
  bool contains(const RatVec& v) const;
};

ExactLattice make_lattice(RatMat basis, Rat scale = 1);

/// The Leech lattice from the bundled generator matrix. Construction
/// re-validates the bundled data: even integral Gram, determinant 1, and
/// an empty norm-2 shell (no roots) together with a norm-4 vector.
ExactLattice leech_lattice();

/// K = √2·D12+, rank 12, even, determinant 2^12. Basis rows are D12+
/// coordinates; the √2 lives in the ambient scale.
ExactLattice d12plus_scaled();

/// Same lattice with all basis rows halved (K ↦ K/2).
ExactLattice dual_scale_half(const ExactLattice& l);

/// The dual lattice computed from the Gram inverse, in the same ambient.
ExactLattice dual_lattice(const ExactLattice& l);

struct LllResult {
  ExactLattice lattice;
  IntMat transform;  // unimodular, reduced basis = transform * old basis
};

/// Exact LLL reduction with δ = 3/4. The returned basis generates the same
/// lattice; the integer transform is recovered and re-checked against the
/// Gram matrices.
LllResult lll_reduce_with_transform(const ExactLattice& l);
ExactLattice lll_reduce(const ExactLattice& l);

struct Coset {
  ExactLattice lattice;
  RatVec shift;  // coset = shift + lattice

  bool contains(const RatVec& v) const { return lattice.contains(v - shift); }
};

/// JSON lattice file: {"rank", "ambient", "basis": rows of [num,den] pairs,
/// optional "scale": [num,den]}. Rejects zero denominators.
ExactLattice read_lattice_json(const std::string& text);
ExactLattice read_lattice_file(const std::string& path);
std::string write_lattice_json(const ExactLattice& l);

}  // namespace gdh
