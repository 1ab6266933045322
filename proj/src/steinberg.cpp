#include "superroot/steinberg.hpp"

#include <algorithm>
#include <set>

namespace superroot {

bool is_dominant(const SuperRootDatum& d, const OrderFunctional& u, const Weight& lambda) {
  if (lambda.rank() != d.rank()) {
    throw DimensionError("weight " + lambda.str() + " for a datum of rank " + std::to_string(d.rank()));
  }
  const PositiveSystem ps = positive_system(d, u);
  return std::all_of(ps.even_pos.begin(), ps.even_pos.end(),
                     [&](const EvenRoot& a) { return pair(lambda, a.coroot) >= 0; });
}

namespace {

void check_flat_p(std::int64_t p) {
  if (p != 0 && (p == 2 || !is_prime(p))) {
    throw ParameterError("p must be 0 or an odd prime, got " + std::to_string(p));
  }
}

bool weakly_decreasing(const Weight& w, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i + 1 < end; ++i) {
    if (w[i] < w[i + 1]) return false;
  }
  return true;
}

}  // namespace

bool is_flat(const LieHandle& family, std::int64_t p, const Weight& lambda) {
  check_flat_p(p);
  switch (family.family) {
    case Family::q: {
      const auto n = static_cast<std::size_t>(family.n);
      if (lambda.rank() != n) throw DimensionError("weight " + lambda.str() + " for " + family_label(family));
      if (!weakly_decreasing(lambda, 0, n)) return false;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (lambda[i] != lambda[i + 1]) continue;
        if (p == 0 ? lambda[i] != 0 : lambda[i] % p != 0) return false;
      }
      return true;
    }
    case Family::gl: {
      const auto m = static_cast<std::size_t>(family.m);
      const auto n = static_cast<std::size_t>(family.n);
      if (lambda.rank() != m + n) throw DimensionError("weight " + lambda.str() + " for " + family_label(family));
      return weakly_decreasing(lambda, 0, m) && weakly_decreasing(lambda, m, m + n);
    }
    case Family::p:
      break;
  }
  throw NotImplementedError("no flatness test for " + family_label(family));
}

bool flat_supported(const SuperRootDatum& d) {
  return d.lie_handle() && d.lie_handle()->family != Family::p;
}

bool is_flat(const SuperRootDatum& d, std::int64_t p, const Weight& lambda) {
  if (!d.lie_handle()) throw NotImplementedError("no flatness test for " + d.label());
  return is_flat(*d.lie_handle(), p, lambda);
}

std::vector<Weight> standard_odd_base(const SuperRootDatum& d) {
  if (!d.lie_handle()) throw PreconditionError("no standard base for " + d.label());
  const LieHandle& h = *d.lie_handle();
  const std::size_t l = d.rank();
  switch (h.family) {
    case Family::gl: {
      const auto m = static_cast<std::size_t>(h.m);
      return {Weight::unit(l, m - 1) - Weight::unit(l, m)};
    }
    case Family::q: {
      std::vector<Weight> out;
      for (std::size_t i = 0; i + 1 < l; ++i) out.push_back(Weight::unit(l, i) - Weight::unit(l, i + 1));
      return out;
    }
    case Family::p:
      return {Integer(2) * Weight::unit(l, l - 1)};
  }
  throw PreconditionError("no standard base for " + d.label());
}

AdmissibleBase AdmissibleBase::verify(const LieSuperAlgebra& L, const SuperRootDatum& d, const OrderFunctional& u,
                                      std::vector<Weight> psi_even, std::vector<Weight> psi_odd,
                                      GenerationSemantics semantics) {
  AdmissibleBase b;
  b.report_ = check_admissible_base(L, d, u, psi_even, psi_odd, semantics);
  if (!b.report_.ok) {
    std::string msg = "not an admissible base:";
    for (const auto& f : b.report_.failures) msg += " [" + f.condition + "] " + f.detail + ";";
    msg.pop_back();
    throw PreconditionError(msg);
  }
  std::sort(psi_even.begin(), psi_even.end());
  psi_even.erase(std::unique(psi_even.begin(), psi_even.end()), psi_even.end());
  std::sort(psi_odd.begin(), psi_odd.end());
  psi_odd.erase(std::unique(psi_odd.begin(), psi_odd.end()), psi_odd.end());
  for (const auto& a : psi_even) {
    if (std::binary_search(psi_odd.begin(), psi_odd.end(), a)) {
      const Element k = K_alpha(L, a);
      b.kk_.emplace(a, L.bracket(k, k));
    }
  }
  b.order_ = u;
  b.psi_even_ = std::move(psi_even);
  b.psi_odd_ = std::move(psi_odd);
  return b;
}

const Element& AdmissibleBase::kk(const Weight& alpha) const {
  auto it = kk_.find(alpha);
  if (it == kk_.end()) throw PreconditionError(alpha.str() + " is not in both Psi_even and Psi_odd");
  return it->second;
}

const char* root_class_name(RestrictionReport::RootClass c) {
  return c == RestrictionReport::RootClass::shared ? "shared" : "even-only";
}

namespace {

// Flatness where it is defined, dominance otherwise.
bool flat_or_dominant(const SuperRootDatum& d, const OrderFunctional& u, std::int64_t p, const Weight& lambda) {
  return flat_supported(d) ? is_flat(d, p, lambda) : is_dominant(d, u, lambda);
}

RestrictionReport restriction_checks(const SuperRootDatum& d, const LieSuperAlgebra& L,
                                     const AdmissibleBase& base, const Weight& lambda, std::int64_t p,
                                     std::int64_t r) {
  RestrictionReport rep;
  rep.weight = lambda;
  rep.p = p;
  rep.r = r;
  rep.weakened = !flat_supported(d);
  const Integer pr = ipow(Integer(p), static_cast<std::uint64_t>(r));
  rep.verdict = true;
  for (const auto& a : base.psi_even()) {
    const EvenRoot* root = d.find_even_root(a);
    if (!root) throw PreconditionError(a.str() + " is not an even root of " + d.label());
    RestrictionReport::RootCheck c;
    c.alpha = a;
    c.pairing = pair(lambda, root->coroot);
    c.bound = pr - 1;
    if (base.is_shared(a)) {
      c.cls = RestrictionReport::RootClass::shared;
      c.kform_value = eval_weight_on_cartan(L, lambda, base.kk(a));
      if (*c.kform_value % p != 0) c.bound = pr;
    }
    c.ok = c.pairing <= c.bound;
    rep.verdict = rep.verdict && c.ok;
    rep.per_root.push_back(std::move(c));
  }
  return rep;
}

}  // namespace

RestrictionReport is_restricted(const SuperRootDatum& d, const LieSuperAlgebra& L, const AdmissibleBase& base,
                                const Weight& lambda, std::int64_t p, std::int64_t r) {
  check_frobenius_params(p, r);
  if (lambda.rank() != d.rank()) {
    throw DimensionError("weight " + lambda.str() + " for a datum of rank " + std::to_string(d.rank()));
  }
  if (!flat_or_dominant(d, base.order(), p, lambda)) {
    throw PreconditionError(lambda.str() + (flat_supported(d) ? " is not flat" : " is not dominant"));
  }
  return restriction_checks(d, L, base, lambda, p, r);
}

namespace {

class DigitSearch {
public:
  DigitSearch(const SuperRootDatum& d, const LieSuperAlgebra& L, const AdmissibleBase& base, std::int64_t p,
              const DecomposeOptions& options)
      : d_(d), L_(L), base_(base), p_(p), options_(options) {
    const std::size_t l = d.rank();
    const int width = 2 * options.radius + 1;
    double count = 1;
    for (std::size_t i = 0; i < l; ++i) count *= width;
    if (count > 1e6) throw ParameterError("search box too large: (2*radius+1)^rank > 10^6");
    std::vector<int> k(l, -options.radius);
    while (true) {
      offsets_.push_back(k);
      std::size_t i = l;
      while (i > 0 && k[i - 1] == options.radius) k[--i] = -options.radius;
      if (i == 0) break;
      ++k[i - 1];
    }
    auto key = [](const std::vector<int>& v) {
      int inf = 0, one = 0;
      for (int x : v) {
        inf = std::max(inf, std::abs(x));
        one += std::abs(x);
      }
      return std::make_pair(inf, one);
    };
    std::stable_sort(offsets_.begin(), offsets_.end(),
                     [&](const auto& a, const auto& b) { return key(a) < key(b); });
  }

  std::optional<std::vector<Weight>> solve(const Weight& mu, std::size_t depth) {
    if (mu.is_zero()) return std::vector<Weight>{};
    if (small(mu) && digit_ok(mu)) return std::vector<Weight>{mu};
    if (depth >= options_.max_depth || failed_.count(mu) || on_stack_.count(mu)) {
      return std::nullopt;
    }
    on_stack_.insert(mu);
    const Integer p(p_);
    Weight residue = mu;
    for (std::size_t i = 0; i < residue.rank(); ++i) residue[i] = floor_mod(mu[i], p);
    for (const auto& k : offsets_) {
      Weight c = residue;
      for (std::size_t i = 0; i < c.rank(); ++i) c[i] += p * k[i];
      if (!digit_ok(c)) continue;
      Weight rest = mu - c;
      for (std::size_t i = 0; i < rest.rank(); ++i) rest[i] /= p;
      if (!rest.is_zero() && !flat_or_dominant(d_, base_.order(), p_, rest)) continue;
      if (auto tail = solve(rest, depth + 1)) {
        tail->insert(tail->begin(), c);
        on_stack_.erase(mu);
        return tail;
      }
    }
    on_stack_.erase(mu);
    failed_.insert(mu);
    return std::nullopt;
  }

  const std::set<Weight>& failed() const noexcept { return failed_; }

private:
  bool small(const Weight& w) const {
    return std::all_of(w.coords().begin(), w.coords().end(),
                       [&](const Integer& c) { return abs(c) < p_; });
  }
  bool digit_ok(const Weight& w) const {
    return flat_or_dominant(d_, base_.order(), p_, w) && restriction_checks(d_, L_, base_, w, p_, 1).verdict;
  }

  const SuperRootDatum& d_;
  const LieSuperAlgebra& L_;
  const AdmissibleBase& base_;
  std::int64_t p_;
  DecomposeOptions options_;
  std::vector<std::vector<int>> offsets_;
  std::set<Weight> failed_;
  std::set<Weight> on_stack_;
};

}  // namespace

SteinbergDecomposition steinberg_decompose(const SuperRootDatum& d, const LieSuperAlgebra& L,
                                           const AdmissibleBase& base, const Weight& lambda, std::int64_t p,
                                           const DecomposeOptions& options) {
  check_frobenius_params(p, 1);
  if (options.radius < 0) throw ParameterError("search radius must be >= 0");
  if (lambda.rank() != d.rank()) {
    throw DimensionError("weight " + lambda.str() + " for a datum of rank " + std::to_string(d.rank()));
  }
  if (!flat_or_dominant(d, base.order(), p, lambda)) {
    throw PreconditionError(lambda.str() + (flat_supported(d) ? " is not flat" : " is not dominant"));
  }
  SteinbergDecomposition out;
  out.flatness_checked = flat_supported(d);
  if (lambda.is_zero()) {
    out.digits = {lambda};
    return out;
  }
  DigitSearch search(d, L, base, p, options);
  auto digits = search.solve(lambda, 0);
  if (!digits) {
    std::vector<std::string> frontier;
    for (const auto& w : search.failed()) frontier.push_back(w.str());
    throw DecompositionFailure("no decomposition of " + lambda.str() + " with p = " + std::to_string(p) +
                                   " within radius " + std::to_string(options.radius),
                               std::move(frontier));
  }
  out.digits = std::move(*digits);
  return out;
}

CharacterElement CharacterElement::monomial(const Weight& w, const Integer& mult) {
  CharacterElement c(w.rank());
  c.add_term(w, mult);
  return c;
}

Integer CharacterElement::coefficient(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void CharacterElement::add_term(const Weight& w, const Integer& mult) {
  if (w.rank() != rank_) {
    throw DimensionError("term " + w.str() + " in a character of rank " + std::to_string(rank_));
  }
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer CharacterElement::total_dimension() const {
  Integer sum = 0;
  for (const auto& [w, m] : terms_) sum += m;
  return sum;
}

namespace {

void check_same_rank(const CharacterElement& a, const CharacterElement& b) {
  if (a.rank() != b.rank()) {
    throw DimensionError("characters of rank " + std::to_string(a.rank()) + " and " + std::to_string(b.rank()));
  }
}

}  // namespace

CharacterElement char_add(const CharacterElement& a, const CharacterElement& b) {
  check_same_rank(a, b);
  CharacterElement out = a;
  for (const auto& [w, m] : b.terms()) out.add_term(w, m);
  return out;
}

CharacterElement char_mul(const CharacterElement& a, const CharacterElement& b) {
  check_same_rank(a, b);
  CharacterElement out(a.rank());
  for (const auto& [wa, ma] : a.terms()) {
    for (const auto& [wb, mb] : b.terms()) out.add_term(wa + wb, ma * mb);
  }
  return out;
}

CharacterElement frobenius_twist(const CharacterElement& a, std::int64_t p, std::int64_t r) {
  if (p < 2) throw ParameterError("twist needs p >= 2");
  if (r < 0) throw ParameterError("twist needs r >= 0");
  const Integer scale = ipow(Integer(p), static_cast<std::uint64_t>(r));
  CharacterElement out(a.rank());
  for (const auto& [w, m] : a.terms()) out.add_term(scale * w, m);
  return out;
}

CharacterElement steinberg_character(const std::vector<CharacterElement>& restricted_chars, std::int64_t p) {
  if (restricted_chars.empty()) throw ParameterError("steinberg_character needs at least one factor");
  CharacterElement out = frobenius_twist(restricted_chars.front(), p, 0);
  for (std::size_t i = 1; i < restricted_chars.size(); ++i) {
    out = char_mul(out, frobenius_twist(restricted_chars[i], p, static_cast<std::int64_t>(i)));
  }
  return out;
}

std::vector<std::pair<Weight, Integer>> upsilon_max_terms(const CharacterElement& a, const OrderFunctional& u) {
  std::vector<std::pair<Weight, Integer>> out;
  std::optional<Rational> best;
  for (const auto& [w, m] : a.terms()) {
    const Rational v = u(w);
    if (!best || v > *best) {
      best = v;
      out.clear();
    }
    if (v == *best) out.emplace_back(w, m);
  }
  return out;
}

}  // namespace superroot
