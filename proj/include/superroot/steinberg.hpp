#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "superroot/liesuper.hpp"
#include "superroot/rootdata.hpp"

namespace superroot {

/// <lambda, alpha^v> >= 0 for every positive even root.
bool is_dominant(const SuperRootDatum& d, const OrderFunctional& u, const Weight& lambda);

/// Membership in the flat weights X(T)^b. Q(n): c_1 >= ... >= c_n and
/// c_i = c_{i+1} forces p | c_i (c_i = 0 when p = 0). GL(m|n): weakly
/// decreasing inside each block. Other families throw NotImplementedError.
bool is_flat(const LieHandle& family, std::int64_t p, const Weight& lambda);
/// Same, dispatching on the datum's handle.
bool is_flat(const SuperRootDatum& d, std::int64_t p, const Weight& lambda);
/// Whether is_flat has a branch for this datum.
bool flat_supported(const SuperRootDatum& d);

/// Psi_odd of the standard admissible base for the family's default order:
/// {l_m - l_(m+1)} for GL(m|n), the even simple roots for Q(n), {2 l_n} for
/// P(n). PreconditionError for data without a handle.
std::vector<Weight> standard_odd_base(const SuperRootDatum& d);

/// A base that passed check_admissible_base, together with [K_a, K_a] for
/// each shared root a in Psi_even and Psi_odd.
class AdmissibleBase {
public:
  /// Throws PreconditionError listing the failed conditions.
  static AdmissibleBase verify(const LieSuperAlgebra& L, const SuperRootDatum& d, const OrderFunctional& u,
                               std::vector<Weight> psi_even, std::vector<Weight> psi_odd,
                               GenerationSemantics semantics = GenerationSemantics::assisted);

  const OrderFunctional& order() const noexcept { return order_; }
  const std::vector<Weight>& psi_even() const noexcept { return psi_even_; }
  const std::vector<Weight>& psi_odd() const noexcept { return psi_odd_; }
  const AdmissibilityReport& report() const noexcept { return report_; }
  bool is_shared(const Weight& alpha) const { return kk_.count(alpha) != 0; }
  /// [K_a, K_a] in the basis of L; throws for a root that is not shared.
  const Element& kk(const Weight& alpha) const;

private:
  AdmissibleBase() = default;
  OrderFunctional order_;
  std::vector<Weight> psi_even_, psi_odd_;
  AdmissibilityReport report_;
  std::map<Weight, Element> kk_;
};

struct RestrictionReport {
  enum class RootClass { even_only, shared };
  struct RootCheck {
    Weight alpha;
    RootClass cls = RootClass::even_only;
    Integer pairing;
    std::optional<Integer> kform_value;
    Integer bound;
    bool ok = false;
  };
  Weight weight;
  std::int64_t p = 0;
  std::int64_t r = 0;
  std::vector<RootCheck> per_root;
  bool verdict = false;
  /// Flatness could not be checked for the family; dominance was used instead.
  bool weakened = false;
};

const char* root_class_name(RestrictionReport::RootClass c);

/// p^r-restriction: <lambda, a^v> <= p^r - 1 for even-only simple roots; for
/// shared ones the bound is p^r when p does not divide lambda([K_a, K_a]).
/// lambda must be flat (dominant when flatness is unavailable), otherwise
/// PreconditionError.
RestrictionReport is_restricted(const SuperRootDatum& d, const LieSuperAlgebra& L, const AdmissibleBase& base,
                                const Weight& lambda, std::int64_t p, std::int64_t r);

struct DecomposeOptions {
  /// Digits are searched among (lambda mod p) + p k with |k_i| <= radius.
  int radius = 2;
  std::size_t max_depth = 64;
};

struct SteinbergDecomposition {
  std::vector<Weight> digits;
  /// False when the family has no flatness test, so intermediate quotients
  /// were only checked for dominance.
  bool flatness_checked = true;
};

/// lambda = sum_i p^i lambda_i with every lambda_i flat and 1-restricted.
/// Depth-first: a weight with all |c_i| < p that is itself a valid digit
/// ends the expansion; otherwise digits are tried in order of (max |k_i|,
/// sum |k_i|, k lexicographic) and the first that leads to a full expansion
/// wins. Throws DecompositionFailure when nothing is found.
SteinbergDecomposition steinberg_decompose(const SuperRootDatum& d, const LieSuperAlgebra& L,
                                           const AdmissibleBase& base, const Weight& lambda, std::int64_t p,
                                           const DecomposeOptions& options = {});

/// Finitely supported Z-valued function on X(T); zero entries are never stored.
class CharacterElement {
public:
  CharacterElement() = default;
  explicit CharacterElement(std::size_t rank) : rank_(rank) {}
  static CharacterElement monomial(const Weight& w, const Integer& mult = 1);

  std::size_t rank() const noexcept { return rank_; }
  const std::map<Weight, Integer>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  Integer coefficient(const Weight& w) const;
  void add_term(const Weight& w, const Integer& mult);
  /// Sum of multiplicities (the dimension for a module character).
  Integer total_dimension() const;

  friend bool operator==(const CharacterElement&, const CharacterElement&) = default;

private:
  std::size_t rank_ = 0;
  std::map<Weight, Integer> terms_;
};

CharacterElement char_add(const CharacterElement& a, const CharacterElement& b);
CharacterElement char_mul(const CharacterElement& a, const CharacterElement& b);
/// e^lambda -> e^(p^r lambda).
CharacterElement frobenius_twist(const CharacterElement& a, std::int64_t p, std::int64_t r);
/// prod_i frobenius_twist(ch_i, p, i). Needs at least one factor.
CharacterElement steinberg_character(const std::vector<CharacterElement>& restricted_chars, std::int64_t p);
/// Terms on which u is maximal, sorted.
std::vector<std::pair<Weight, Integer>> upsilon_max_terms(const CharacterElement& a, const OrderFunctional& u);

}  // namespace superroot
