#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gdh/data.hpp"
#include "gdh/diagram.hpp"
#include "gdh/liealg.hpp"

namespace gdh {

struct CandidatePair {
  AffineStructure structure;
  CycleShape shape;
  long n = 1;  // orbifold order of the structure
  HoleDiagram expected_diagram;
};

/// All (structure, shape) pairs with matching rank, shape order dividing
/// the orbifold order, and 1/(1-ρ_ν) = lcm(l_i·k_i), over the 221 trace
/// identity solutions and the bundled shape catalog. Deterministic order.
std::vector<CandidatePair> candidate_pairs(const std::vector<ShapeClassInfo>& shape_catalog,
                                           int jobs = 1);

struct NormFilterResult {
  bool keep = true;
  std::string witness_norms;  // "2/18, 2/12" style, k ascending
};

/// Divisibility filter on the difference norms 2k(1-ρ_ν) demanded by the
/// expected diagram (k=2 for non-adjacent pairs, k=3 for single edges,
/// k=4 for Ã_1 components): eliminate iff some required norm is not in
/// (2/|φ_η(ν)|)·Z.
NormFilterResult spurious_norm_filter(const CandidatePair& p, const ShapeClassInfo& info);

struct D12SearchResult {
  long sign_perm_classes = 0;  // solutions of the arithmetic conditions up to signed permutation
  std::vector<std::array<long, 12>> surviving_orbits;  // nondecreasing nonnegative entries
};

/// The order-2 frame search: integer tuples (h_1..h_12), all even or all
/// odd, Σh² = n², pairwise |h_i|+|h_j| bounded by n, filtered by the
/// twelve close-vector minima over 4k+1 powers with the k=0 closest-vector
/// multiset realizing the target diagram. Targets: (A_1,46), (A_1^2,22),
/// (A_1^3,14), (A_1^4,10), (A_1^6,6), (A~1^12,2).
D12SearchResult d12_centre_search(const HoleDiagram& target, long n, int jobs = 1);

/// Centre of the searched representative inside K/2 ambient coordinates.
RatVec d12_centre_vector(const std::array<long, 12>& rep, long n);

struct CentreVerification {
  RatVec centre;
  HoleDiagram diagram;
  Rat twisted_weight;  // = 1 on success
  VectorSet shell;
};

/// Closest-vector check around a proposed centre: no strictly closer
/// lattice vector may exist, the shell at radius² 2(1-ρ) must realize the
/// expected diagram. Throws "closer vector exists" / "diagram mismatch".
CentreVerification verify_centre(const ExactLattice& lattice, const RatVec& centre,
                                 const Rat& rho_nu, const HoleDiagram& expected,
                                 const EnumOptions& opt = {});

struct Completion {
  RatVec centre;
  HoleDiagram diagram;
};

/// Embeds a small affine seed (A~1, A~2 or A~3) as Leech lattice points
/// with the prescribed pairwise difference norms, reconstructs the centre
/// from the Kac labels and completes it to the full hole diagram. Throws
/// "no embedding found" when the shell budget is exhausted.
std::vector<Completion> affine_completion_search(const ExactLattice& leech,
                                                 const ComponentLabel& seed,
                                                 const Rat& rho_nu,
                                                 const EnumOptions& opt = {});

struct TableRowReport {
  std::string row_id;
  std::string structure;
  long n = 0;
  long dim = 0;
  std::string phi;
  int rank = 0;
  std::optional<std::string> verified_diagram;
  std::vector<std::string> diffs;  // empty when the row matches the golden copy
};

struct TableReport {
  std::vector<TableRowReport> rows;
  int diff_count = 0;
};

struct ReproduceOptions {
  bool geometry = true;               // run the 2^12 searches and centre checks
  std::string centres_path;           // optional deep-hole centre file
  std::string data_dir;
  int jobs = 1;
};

/// Recomputes every arithmetic column of the 70-row table (n, Dim, Φ(g),
/// rank) and geometrically verifies rows with available centres; any
/// difference against the golden copy is reported, never suppressed.
TableReport reproduce_tables(const ReproduceOptions& opt = {});

std::string report_to_json(const TableReport& r);
std::string report_diff_summary(const TableReport& r);

}  // namespace gdh
