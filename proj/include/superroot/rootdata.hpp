#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superroot/lattice.hpp"

namespace superroot {

enum class Family { gl, q, p };

/// Names one of the built-in matrix Lie superalgebras gl(m|n), q(n), p(n).
/// For q and p only `n` is used.
struct LieHandle {
  Family family = Family::gl;
  int m = 0;
  int n = 0;

  friend bool operator==(const LieHandle&, const LieHandle&) = default;
};

/// "GL(2|1)", "Q(3)", "P(2)".
std::string family_label(const LieHandle& h);
/// Inverse of family_label; nullopt for anything else.
std::optional<LieHandle> parse_family_label(const std::string& label);

struct EvenRoot {
  Weight root;
  Coweight coroot;
  friend bool operator==(const EvenRoot&, const EvenRoot&) = default;
};

/// A nonzero odd root together with dim g_odd^gamma.
struct OddRoot {
  Weight root;
  std::int64_t multiplicity = 1;
  friend bool operator==(const OddRoot&, const OddRoot&) = default;
};

/// Root data of a split quasireductive supergroup: the even root datum, the
/// nonzero odd weights with multiplicities, and dim h_odd (the odd part of
/// weight zero). Immutable; both root lists are kept sorted.
class SuperRootDatum {
public:
  /// Validates the invariants and throws ValidationError with a
  /// `$.field[i]` style path on violation.
  SuperRootDatum(std::size_t rank, std::string label, std::vector<EvenRoot> even_roots,
                 std::vector<OddRoot> odd_roots, std::int64_t h_odd_dim,
                 std::optional<LieHandle> lie_handle = std::nullopt);

  std::size_t rank() const noexcept { return rank_; }
  const std::string& label() const noexcept { return label_; }
  const std::vector<EvenRoot>& even_roots() const noexcept { return even_; }
  const std::vector<OddRoot>& odd_roots() const noexcept { return odd_; }
  std::int64_t h_odd_dim() const noexcept { return h_odd_dim_; }
  const std::optional<LieHandle>& lie_handle() const noexcept { return lie_handle_; }

  /// dim g_even = #even roots + rank.
  std::int64_t n_even() const noexcept;
  /// dim g_odd = sum of odd multiplicities + dim h_odd.
  std::int64_t n_odd() const noexcept;
  /// 0 when gamma is not an odd root.
  std::int64_t odd_multiplicity(const Weight& gamma) const;
  bool is_even_root(const Weight& alpha) const;
  /// Membership in Delta, including the zero weight when h_odd != 0.
  bool is_root(const Weight& w) const;
  const EvenRoot* find_even_root(const Weight& alpha) const;

  friend bool operator==(const SuperRootDatum&, const SuperRootDatum&) = default;

private:
  std::size_t rank_;
  std::string label_;
  std::vector<EvenRoot> even_;
  std::vector<OddRoot> odd_;
  std::int64_t h_odd_dim_;
  std::optional<LieHandle> lie_handle_;
};

SuperRootDatum build_gl(int m, int n);
SuperRootDatum build_q(int n);
SuperRootDatum build_p(int n);
/// The reductive group GL_n with no odd data.
SuperRootDatum build_reductive_gl(int n);
/// F x| (G_a^odd)^k twisted by characters chi_1..chi_k: odd roots are the
/// distinct nonzero -chi_i with multiplicities, zero characters feed h_odd.
SuperRootDatum build_semidirect(const SuperRootDatum& even_datum, const std::vector<Weight>& chars);

/// Rational linear functional on X(T) used to split roots into signs.
class OrderFunctional {
public:
  OrderFunctional() = default;
  explicit OrderFunctional(std::vector<Rational> values) : values_(std::move(values)) {}

  const std::vector<Rational>& values() const noexcept { return values_; }
  std::size_t rank() const noexcept { return values_.size(); }
  Rational operator()(const Weight& w) const;

  /// Throws InvalidOrderError naming the first root on which it vanishes.
  void validate(const SuperRootDatum& d) const;

private:
  std::vector<Rational> values_;
};

/// Upsilon(lambda_i) = -i for GL(m|n), Q(n) and anything without a handle;
/// Upsilon(lambda_i) = n - i + 1 for P(n).
OrderFunctional default_order(const SuperRootDatum& d);

struct PositiveSystem {
  std::vector<EvenRoot> even_pos, even_neg;
  std::vector<OddRoot> odd_pos, odd_neg;

  std::int64_t odd_pos_dim() const;
  std::int64_t odd_neg_dim() const;
};

PositiveSystem positive_system(const SuperRootDatum& d, const OrderFunctional& u);

/// Simple roots of the positive even system: positive even roots that are
/// not a sum of two positive even roots. Sorted.
std::vector<Weight> even_simple_roots(const PositiveSystem& ps);

struct UnimodularityReport {
  struct Coordinate {
    std::size_t index = 0;
    Integer value;
    bool divides = false;
  };
  Weight odd_root_sum;
  /// p^r for the Frobenius-kernel test; nullopt for characteristic zero.
  std::optional<Integer> modulus;
  std::vector<Coordinate> per_coordinate;
  bool verdict = false;
};

Weight odd_root_sum(const SuperRootDatum& d);
UnimodularityReport is_unimodular_char0(const SuperRootDatum& d);
/// G_r unimodular iff p^r divides every coordinate of the odd root sum.
/// Throws ParameterError unless p is an odd prime and r >= 1.
UnimodularityReport is_frobenius_unimodular(const SuperRootDatum& d, std::int64_t p, std::int64_t r);
bool all_frobenius_unimodular(const SuperRootDatum& d);
/// Exponent weight of chi_r restricted to T (independent of r).
Weight chi_r_on_torus(const SuperRootDatum& d);

Weight delta_r(const SuperRootDatum& d, const OrderFunctional& u, std::int64_t p, std::int64_t r);

/// dim O(G_r) = p^{r n_even} 2^{n_odd}.
Integer dim_O_Gr(const SuperRootDatum& d, std::int64_t p, std::int64_t r);
/// Number of restricted PBW monomials spanning hy(G_r).
Integer pbw_monomial_count(const SuperRootDatum& d, std::int64_t p, std::int64_t r);

struct InducedDims {
  Integer dim_ind;
  Integer dim_coind;
};
InducedDims induced_dims(const SuperRootDatum& d, const OrderFunctional& u, std::int64_t p,
                         std::int64_t r, const Integer& dim_module);

/// Throws ParameterError unless p is an odd prime and r >= 1.
void check_frobenius_params(std::int64_t p, std::int64_t r);

}  // namespace superroot
