#include "gdh/lattice.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <sstream>

#include "gdh/enumerate.hpp"

namespace gdh {
namespace {

// Generator matrix of the Leech lattice, coordinates scaled by √8 (so the
// ambient inner product carries a factor 1/8). Derived from the extended
// binary Golay code; Hermite normal form, det = 8^12.
constexpr std::array<std::array<int, 24>, 24> kLeechBasis8 = {{
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 5},
    {0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 2, 0, 0, 2, 0, 0, 2, 0},
    {0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 2, 0, 0, 2, 0, 2, 0, 2, 2},
    {0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, 2, 2, 2, 0, 2, 2, 0},
    {0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 2, 2, 0, 0, 2},
    {0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 2, 2, 0, 2},
    {0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 2, 2, 2},
    {0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 2, 2, 0, 2, 2, 2, 2, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 2, 2, 0, 2, 2, 2, 2, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 2, 2, 0, 2, 2, 2, 2, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 0, 2, 2, 2, 0, 0, 0, 2, 2, 0, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 0, 2, 2, 2, 0, 0, 0, 2, 2, 2},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 4},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8},
}};

void check_positive_definite(const RatMat& gram) {
  ldlt_decompose(gram);  // throws if not SPD
}

}  // namespace

RatVec ExactLattice::coefficients(const RatVec& v) const {
  if (v.size() != ambient) throw std::invalid_argument("coefficients: wrong dimension");
  // ⟨b_i, v⟩ = (G x)_i for v = Σ x_i b_i; solving G x = scale·B v works for
  // any v, and v lies in the span iff basisᵀx reproduces it.
  RatVec rhs = scale * (basis * v);
  Ldlt f = ldlt_decompose(gram);
  return ldlt_solve(f, rhs);
}

bool ExactLattice::contains(const RatVec& v) const {
  RatVec x = coefficients(v);
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!is_integer(x[i])) return false;
  return basis.transpose() * x == v;
}

ExactLattice make_lattice(RatMat basis, Rat scale) {
  ExactLattice l;
  l.rank = basis.rows();
  l.ambient = basis.cols();
  l.scale = std::move(scale);
  if (l.scale <= 0) throw std::invalid_argument("make_lattice: scale must be positive");
  l.gram = l.scale * (basis * basis.transpose());
  l.basis = std::move(basis);
  check_positive_definite(l.gram);
  return l;
}

ExactLattice leech_lattice() {
  RatMat b(24, 24);
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) b(i, j) = kLeechBasis8[i][j];
  ExactLattice l = make_lattice(std::move(b), Rat(1, 8));

  // Bundled data is not trusted: re-check even unimodularity and
  // rootlessness on every construction.
  for (int i = 0; i < 24; ++i) {
    if (!is_integer(l.gram(i, i)) || rat_floor(l.gram(i, i)) % 2 != 0)
      throw std::logic_error("leech basis: Gram diagonal not even");
    for (int j = 0; j < 24; ++j)
      if (!is_integer(l.gram(i, j))) throw std::logic_error("leech basis: Gram not integral");
  }
  if (spd_determinant(l.gram) != 1) throw std::logic_error("leech basis: determinant != 1");
  SphereQuery roots{l, RatVec::Zero(24), Rat(2), QueryMode::ExactShell};
  if (!close_vectors(roots).vectors.empty())
    throw std::logic_error("leech basis: lattice has roots");
  return l;
}

ExactLattice d12plus_scaled() {
  RatMat b = RatMat::Zero(12, 12);
  for (int j = 0; j < 12; ++j) b(0, j) = Rat(1, 2);
  for (int i = 1; i < 11; ++i) {
    b(i, i) = 2;  // placeholder, fixed below
  }
  // Rows: the all-halves glue vector, e_i + e_12 for i = 2..11, and 2·e_12.
  b = RatMat::Zero(12, 12);
  for (int j = 0; j < 12; ++j) b(0, j) = Rat(1, 2);
  for (int i = 1; i < 11; ++i) {
    b(i, i) = 1;
    b(i, 11) = 1;
  }
  b(11, 11) = 2;
  ExactLattice l = make_lattice(std::move(b), Rat(2));
  for (int i = 0; i < 12; ++i) {
    if (!is_integer(l.gram(i, i)) || rat_floor(l.gram(i, i)) % 2 != 0)
      throw std::logic_error("d12plus basis: Gram diagonal not even");
  }
  if (spd_determinant(l.gram) != Rat(4096)) throw std::logic_error("d12plus basis: determinant != 2^12");
  return l;
}

ExactLattice dual_scale_half(const ExactLattice& l) {
  return make_lattice(RatMat(l.basis / 2), l.scale);
}

ExactLattice dual_lattice(const ExactLattice& l) {
  if (l.rank != l.ambient)
    throw std::invalid_argument("dual_lattice: full-rank lattices only");
  // Dual basis rows d_i satisfy ⟨d_i, b_j⟩ = δ_ij, i.e. D = G^{-1}·B.
  Ldlt f = ldlt_decompose(l.gram);
  RatMat dual(l.rank, l.ambient);
  for (Eigen::Index i = 0; i < l.rank; ++i) {
    RatVec e = RatVec::Zero(l.rank);
    e[i] = 1;
    RatVec x = ldlt_solve(f, e);
    dual.row(i) = (l.basis.transpose() * x).transpose();
  }
  return make_lattice(std::move(dual), l.scale);
}

LllResult lll_reduce_with_transform(const ExactLattice& l) {
  const Eigen::Index n = l.rank;
  RatMat gram = l.gram;
  IntMat u = IntMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) u(i, i) = 1;

  // Gram-Schmidt data over the current Gram matrix.
  RatMat mu = RatMat::Zero(n, n);
  RatVec bstar = RatVec::Zero(n);  // squared GS norms
  auto recompute = [&](Eigen::Index upto) {
    for (Eigen::Index i = 0; i <= upto; ++i) {
      for (Eigen::Index j = 0; j < i; ++j) {
        Rat s = gram(i, j);
        for (Eigen::Index k = 0; k < j; ++k) s -= mu(i, k) * mu(j, k) * bstar[k];
        mu(i, j) = s / bstar[j];
      }
      Rat s = gram(i, i);
      for (Eigen::Index k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * bstar[k];
      bstar[i] = s;
    }
  };
  recompute(n - 1);

  const Rat delta(3, 4);
  Eigen::Index k = 1;
  while (k < n) {
    // size-reduce row k against rows k-1..0
    for (Eigen::Index j = k - 1; j >= 0; --j) {
      Int r = rat_round(mu(k, j));
      if (r != 0) {
        Rat rq(r);
        for (Eigen::Index c = 0; c < n; ++c) u(k, c) -= r * u(j, c);
        // gram update: b_k -= r b_j
        Rat gkk = gram(k, k) - 2 * rq * gram(k, j) + rq * rq * gram(j, j);
        for (Eigen::Index c = 0; c < n; ++c) {
          gram(k, c) -= rq * gram(j, c);
        }
        for (Eigen::Index c = 0; c < n; ++c) gram(c, k) = gram(k, c);
        gram(k, k) = gkk;
        for (Eigen::Index c = 0; c < j; ++c) mu(k, c) -= rq * mu(j, c);
        mu(k, j) -= rq;
      }
    }
    if (bstar[k] >= (delta - mu(k, k - 1) * mu(k, k - 1)) * bstar[k - 1]) {
      ++k;
    } else {
      u.row(k).swap(u.row(k - 1));
      gram.row(k).swap(gram.row(k - 1));
      gram.col(k).swap(gram.col(k - 1));
      recompute(std::min(n - 1, k));
      k = std::max<Eigen::Index>(k - 1, 1);
    }
  }

  RatMat new_basis(n, l.ambient);
  for (Eigen::Index i = 0; i < n; ++i) {
    RatVec row = RatVec::Zero(l.ambient);
    for (Eigen::Index j = 0; j < n; ++j)
      if (u(i, j) != 0) row += Rat(u(i, j)) * l.basis.row(j).transpose();
    new_basis.row(i) = row.transpose();
  }
  LllResult res{make_lattice(std::move(new_basis), l.scale), std::move(u)};

  // The transform must be unimodular and reproduce the new Gram exactly.
  RatMat ur(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) ur(i, j) = Rat(res.transform(i, j));
  Rat det = determinant(ur);
  if (det != 1 && det != -1) throw std::logic_error("lll: transform not unimodular");
  if (RatMat(ur * l.gram * ur.transpose()) != res.lattice.gram)
    throw std::logic_error("lll: Gram mismatch after reduction");
  return res;
}

ExactLattice lll_reduce(const ExactLattice& l) { return lll_reduce_with_transform(l).lattice; }

namespace {

using nlohmann::json;

Rat rat_from_json_pair(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw std::invalid_argument("lattice json: entries must be [num, den] integer pairs");
  long den = j[1].get<long>();
  if (den == 0) throw std::invalid_argument("lattice json: zero denominator");
  Rat q(j[0].get<long>(), den);
  q.canonicalize();
  return q;
}

}  // namespace

ExactLattice read_lattice_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("rank") || !j.contains("ambient") || !j.contains("basis"))
    throw std::invalid_argument("lattice json: need rank, ambient, basis");
  Eigen::Index rank = j["rank"].get<Eigen::Index>();
  Eigen::Index ambient = j["ambient"].get<Eigen::Index>();
  const json& rows = j["basis"];
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != rank)
    throw std::invalid_argument("lattice json: basis row count != rank");
  RatMat b(rank, ambient);
  for (Eigen::Index i = 0; i < rank; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != ambient)
      throw std::invalid_argument("lattice json: basis row length != ambient");
    for (Eigen::Index c = 0; c < ambient; ++c) b(i, c) = rat_from_json_pair(row[c]);
  }
  Rat scale = 1;
  if (j.contains("scale")) scale = rat_from_json_pair(j["scale"]);
  return make_lattice(std::move(b), std::move(scale));
}

ExactLattice read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open lattice file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return read_lattice_json(ss.str());
}

std::string write_lattice_json(const ExactLattice& l) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < l.rank; ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < l.ambient; ++c)
      row.push_back({l.basis(i, c).get_num().get_si(), l.basis(i, c).get_den().get_si()});
    rows.push_back(row);
  }
  json j{{"rank", l.rank},
         {"ambient", l.ambient},
         {"basis", rows},
         {"scale", {l.scale.get_num().get_si(), l.scale.get_den().get_si()}}};
  return j.dump(1);
}

}  // namespace gdh
