#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "superroot/lattice.hpp"
#include "superroot/rootdata.hpp"

namespace superroot {

enum class Parity { even, odd };

inline int parity_bit(Parity p) { return p == Parity::odd ? 1 : 0; }
const char* parity_name(Parity p);

/// Square integer matrix, row-major.
class SquareMatrix {
public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t size) : size_(size), data_(size * size, Integer(0)) {}

  std::size_t size() const noexcept { return size_; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * size_ + c]; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * size_ + c]; }
  bool is_zero() const;
  bool is_diagonal() const;

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b);
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b);
  friend SquareMatrix operator*(const Integer& s, SquareMatrix a);
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
  std::size_t size_ = 0;
  std::vector<Integer> data_;
};

/// XY - (-1)^{|X||Y|} YX.
SquareMatrix supercommutator(const SquareMatrix& x, Parity px, const SquareMatrix& y, Parity py);

struct BasisElement {
  std::size_t index = 0;
  Parity parity = Parity::even;
  Weight weight;
  SquareMatrix matrix;
  std::string name;
};

/// Coordinates of an element in the basis of a LieSuperAlgebra.
using Element = std::vector<Integer>;

/// gl(m|n), q(n) or p(n) as integer matrices in the defining representation,
/// with a basis of (combinations of) elementary matrices ordered row-major by
/// their leading entry, and the full bracket table.
class LieSuperAlgebra {
public:
  static LieSuperAlgebra gl(int m, int n);
  static LieSuperAlgebra q(int n);
  static LieSuperAlgebra p(int n);
  static LieSuperAlgebra from_handle(const LieHandle& h);

  const LieHandle& handle() const noexcept { return handle_; }
  std::string label() const { return family_label(handle_); }
  std::size_t dim() const noexcept { return basis_.size(); }
  /// Rank of the standard torus.
  std::size_t rank() const noexcept { return rank_; }
  std::size_t matrix_size() const noexcept { return matrix_size_; }
  const std::vector<BasisElement>& basis() const noexcept { return basis_; }
  std::size_t count(Parity p) const;

  Element zero() const { return Element(dim(), Integer(0)); }
  Element unit(std::size_t i) const;

  /// Bracket of two basis elements, read from the table.
  const Element& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  /// Bilinear extension of the table.
  Element bracket(const Element& x, const Element& y) const;

  SquareMatrix to_matrix(const Element& x) const;
  /// Throws DecompositionError if `m` is not in the span of the basis.
  Element decompose(const SquareMatrix& m) const;

  /// Splits an element into its even and odd components.
  std::pair<Element, Element> homogeneous_parts(const Element& x) const;

  /// Indices of basis elements with the given weight and parity.
  std::vector<std::size_t> weight_space_indices(const Weight& w, Parity p) const;
  /// Index of the even Cartan element H_i (the i-th torus cocharacter).
  std::size_t cartan_index(std::size_t i) const { return cartan_.at(i); }
  /// Basis of h_odd (the odd elements of weight zero), K_1..K_l_odd.
  std::vector<std::size_t> odd_cartan_indices() const;

private:
  struct Generator {
    std::pair<std::size_t, std::size_t> pivot;
    Parity parity;
    SquareMatrix matrix;
    std::string name;
  };
  /// `diagonal_weights[a]` is the torus weight of the a-th standard basis
  /// vector of the defining representation.
  LieSuperAlgebra(LieHandle handle, std::size_t rank, std::size_t matrix_size,
                  std::vector<Weight> diagonal_weights, std::vector<Generator> generators);

  LieHandle handle_;
  std::size_t rank_ = 0;
  std::size_t matrix_size_ = 0;
  std::vector<Weight> diagonal_weights_;
  std::vector<BasisElement> basis_;
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;
  std::vector<std::size_t> cartan_;
  std::vector<Element> table_;
};

std::vector<BasisElement> weight_space(const LieSuperAlgebra& L, const Weight& w, Parity p);

/// lambda(h) for h in the even Cartan subalgebra, i.e. sum_i lambda_i c_i for
/// h = sum_i c_i H_i. Throws PreconditionError for anything else.
Integer eval_weight_on_cartan(const LieSuperAlgebra& L, const Weight& lambda, const Element& h);

/// A saturated sublattice of the coordinate lattice of L with a membership test.
class Subspace {
public:
  Subspace() = default;
  Subspace(std::size_t ambient, std::vector<Element> hnf_rows);

  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Element>& basis() const noexcept { return rows_; }
  bool contains(const Element& x) const;

private:
  std::size_t ambient_ = 0;
  std::vector<Element> rows_;
  std::vector<Element> equations_;
};

/// Smallest bracket-closed graded subspace containing the generators,
/// returned as the HNF basis of its integer points.
Subspace subalgebra_closure(const LieSuperAlgebra& L, const std::vector<Element>& generators);

enum class GenerationSemantics {
  /// Closure of the Psi_odd root vectors only.
  strict,
  /// Closure of the Psi_odd root vectors together with X_alpha, alpha in Psi_even.
  assisted,
};

const char* semantics_name(GenerationSemantics s);

struct AdmissibilityReport {
  struct Failure {
    std::string condition;  // "generation", "separation" or "multiplicity-one"
    std::string detail;
  };
  GenerationSemantics semantics = GenerationSemantics::assisted;
  bool generation = false;
  bool separation = false;
  bool multiplicity_one = false;
  bool ok = false;
  std::size_t closure_dim = 0;
  std::vector<Failure> failures;
};

/// Evaluates the generation, separation and multiplicity-one conditions for
/// (psi_even, psi_odd). psi_even must be the even simple roots under u and
/// psi_odd must lie in the positive odd roots (ParameterError otherwise).
AdmissibilityReport check_admissible_base(const LieSuperAlgebra& L, const SuperRootDatum& d,
                                          const OrderFunctional& u, const std::vector<Weight>& psi_even,
                                          const std::vector<Weight>& psi_odd,
                                          GenerationSemantics semantics = GenerationSemantics::assisted);

/// K_alpha = [X_alpha, Y_{-alpha}]. Requires one-dimensional g_even^alpha and
/// g_odd^{-alpha}; throws PreconditionError otherwise.
Element K_alpha(const LieSuperAlgebra& L, const Weight& alpha);

/// lambda([K_alpha, K_alpha]).
Integer kform_value(const LieSuperAlgebra& L, const Weight& alpha, const Weight& lambda);

}  // namespace superroot
