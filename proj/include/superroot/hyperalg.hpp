#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "superroot/numeric.hpp"

namespace superroot {

/// The factor binom(H - shift, degree).
struct HBinom {
  std::int64_t shift = 0;
  std::int64_t degree = 0;
  friend bool operator==(const HBinom&, const HBinom&) = default;
};

/// coefficient * X_-^(a) * prod binom(H - s, i) * X^(c), in (lowering,
/// Cartan, raising) order.
struct DividedMonomial {
  std::int64_t a = 0;
  std::vector<HBinom> h_binoms;
  std::int64_t c = 0;
  Integer coefficient = 1;
  friend bool operator==(const DividedMonomial&, const DividedMonomial&) = default;
};

using NormalFormSum = std::vector<DividedMonomial>;

/// X^(m) X_-^(n) = sum_{i=0}^{min(m,n)} X_-^(n-i) binom(H - m - n + 2i, i) X^(m-i).
/// Degree-zero binomial factors are left out.
NormalFormSum normal_order(std::int64_t m, std::int64_t n);

/// X^(n) X^(m) = binom(n+m, n) X^(n+m); returns (binom(n+m, n), n+m).
std::pair<Integer, std::int64_t> bw_multiply(std::int64_t n, std::int64_t m);

/// binom(n, k) mod p from the base-p digits of n and k.
Integer lucas_binom(const Integer& n, const Integer& k, std::int64_t p);

/// Polynomials in x, y with integer coefficients, keyed by exponents (a, b).
using Poly = std::map<std::pair<std::int64_t, std::int64_t>, Integer>;

/// Divided powers acting on Z[x, y]: X = x d/dy, X_- = y d/dx, H = x d/dx - y d/dy.
/// Each generator maps a monomial to a multiple of a single monomial.
namespace poly_operator {
Poly raise(const Poly& f, std::int64_t m);
Poly lower(const Poly& f, std::int64_t n);
Poly h_binom(const Poly& f, std::int64_t shift, std::int64_t degree);
Poly apply(const DividedMonomial& mono, const Poly& f);
Poly apply(const NormalFormSum& sum, const Poly& f);
}  // namespace poly_operator

using Expander = std::function<NormalFormSum(std::int64_t m, std::int64_t n)>;

struct CommutatorReport {
  struct Counterexample {
    std::int64_t m = 0, n = 0;
    /// Exponents of the input monomial x^a y^b.
    std::int64_t a = 0, b = 0;
    Poly lhs, rhs;
  };
  std::int64_t p = 0;
  std::int64_t cases = 0;
  bool ok = true;
  /// Least (m, n, a, b) where the two sides differ.
  std::optional<Counterexample> counterexample;
};

/// Compares X^(m) X_-^(n) with expand(m, n) as operators on every x^a y^b with
/// a + b <= degree_bound, for m <= M, n <= N, over Z (p = 0) or F_p.
CommutatorReport verify_commutator_formula(std::int64_t M, std::int64_t N, std::int64_t degree_bound,
                                           std::int64_t p, const Expander& expand = normal_order);

}  // namespace superroot
