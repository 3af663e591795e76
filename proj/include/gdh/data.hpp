#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdh/lattice.hpp"
#include "gdh/orbnum.hpp"

namespace gdh {

/// Resolution order: explicit argument, GDH_DATA_DIR, compiled-in default.
std::string data_dir(const std::string& override_dir = "");

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One row of the bundled 70-row table.
struct GoldenRow {
  int schellekens_no = 0;
  std::string row_id;       // "A1".."K1"
  std::string shape;        // cycle shape string
  std::string structure;    // "" for the identity row
  long dim = 0;
  long n = 1;
  std::vector<std::string> twisted_weights;  // ρ(V(g^m)) per divisor m | n
  std::string phi;          // diagram string, "" when empty
};

/// One row of the bundled 13-row spurious table.
struct SpuriousRow {
  std::string shape;
  long lifted_order = 0;
  std::string rho;        // vacuum anomaly as a string
  long n = 1;
  std::string structure;
  std::string phi;
  std::string norms;      // witness norm list, e.g. "2/18, 2/12"
};

std::vector<ShapeClassInfo> load_shape_catalog(const std::string& dir = "");
std::vector<GoldenRow> load_table2(const std::string& dir = "");
std::vector<SpuriousRow> load_table1(const std::string& dir = "");

/// Optional centre file: name -> exact rational 24-vector in Leech basis
/// coordinates.
struct NamedCentre {
  std::string diagram;
  RatVec basis_coords;
};
std::vector<NamedCentre> load_deep_hole_centres(const std::string& path);

/// Re-validates every bundled data invariant (shape sums, table sizes,
/// trace identities of the 69 non-abelian structures). Throws DataError.
void validate_bundled_data(const std::string& dir = "");

}  // namespace gdh
