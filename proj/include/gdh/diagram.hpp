#pragma once

#include <map>
#include <string>
#include <vector>

#include "gdh/enumerate.hpp"

namespace gdh {

/// One node type of a hole diagram: family A/D/E, rank, finite or affine.
struct ComponentLabel {
  char family = 'A';
  int rank = 0;
  bool affine = false;

  friend auto operator<=>(const ComponentLabel&, const ComponentLabel&) = default;
};

/// Sort key: finite before affine, then family, then rank.
struct LabelOrder {
  bool operator()(const ComponentLabel& a, const ComponentLabel& b) const {
    if (a.affine != b.affine) return !a.affine;
    if (a.family != b.family) return a.family < b.family;
    return a.rank < b.rank;
  }
};

/// "A_3", "D~8" (the tilde marks affine components).
std::string label_name(const ComponentLabel& l);
ComponentLabel parse_label(const std::string& s);

struct HoleDiagram {
  std::map<ComponentLabel, int, LabelOrder> components;  // label -> multiplicity

  void add(const ComponentLabel& l, int mult = 1) { components[l] += mult; }
  bool empty() const { return components.empty(); }
  int node_count() const;

  /// Canonical name, e.g. "A_1^2D~8"; a deterministic function of the
  /// multiset, concatenated in label order.
  std::string canonical_name() const;

  friend bool operator==(const HoleDiagram& a, const HoleDiagram& b) {
    return a.components == b.components;
  }
};

HoleDiagram parse_diagram(const std::string& name);
std::string diagram_to_json(const HoleDiagram& d);

/// Equal-radius point configuration: every point sits at squared distance
/// 2·(1-ρ_ν) from an implicit centre; inner products use scale·uᵀv.
struct WeightConfig {
  VectorSet points;
  Rat one_minus_rho;
  Rat scale = 1;
};

/// A recognized connected component: the participating point indices plus
/// its label and Cartan matrix.
struct DiagramComponent {
  ComponentLabel label;
  std::vector<int> point_index;
  RatMat cartan;  // 2⟨αi,αj⟩/⟨αi,αi⟩, from difference norms only
};

struct BuiltDiagram {
  HoleDiagram diagram;
  std::vector<DiagramComponent> parts;
};

/// Edges from pairwise difference half-norms {2,3,4}·(1-ρ): none / single /
/// double. Components are classified structurally (paths, cycles, forks)
/// and the Cartan determinant is re-checked: singular iff affine.
/// Throws "invalid configuration" for a half-norm outside the three cases
/// and "unrecognized component" for non-ADE shapes.
BuiltDiagram build_diagram_full(const WeightConfig& w);
HoleDiagram build_diagram(const WeightConfig& w);

struct KacLabels {
  std::vector<long> labels;  // coprime positive integers, one per node
};

/// Primitive positive null vector of an affine component's Cartan matrix.
/// Throws "not affine" when the matrix is nonsingular.
KacLabels kac_labels(const DiagramComponent& comp);
KacLabels kac_labels_of_cartan(const RatMat& cartan);

/// Centre reconstruction h = (Σ aᵢβᵢ)/(Σ aᵢ) for an affine component;
/// asserts all βᵢ are at squared distance 2·(1-ρ) from h.
RatVec affine_centre(const std::vector<RatVec>& component_points, const KacLabels& labels,
                     const Rat& one_minus_rho, const Rat& scale);

/// Cartan matrix of an abstract affine type, for null-vector cross-checks.
RatMat affine_cartan_matrix(const ComponentLabel& l);

}  // namespace gdh
