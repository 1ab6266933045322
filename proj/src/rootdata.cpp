#include "superroot/rootdata.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

namespace superroot {

std::string family_label(const LieHandle& h) {
  switch (h.family) {
    case Family::gl:
      return "GL(" + std::to_string(h.m) + "|" + std::to_string(h.n) + ")";
    case Family::q:
      return "Q(" + std::to_string(h.n) + ")";
    case Family::p:
      return "P(" + std::to_string(h.n) + ")";
  }
  return {};
}

std::optional<LieHandle> parse_family_label(const std::string& label) {
  static const std::regex gl_re(R"(GL\((\d+)\|(\d+)\))");
  static const std::regex qp_re(R"(([QP])\((\d+)\))");
  std::smatch match;
  if (std::regex_match(label, match, gl_re)) {
    return LieHandle{Family::gl, std::stoi(match[1]), std::stoi(match[2])};
  }
  if (std::regex_match(label, match, qp_re)) {
    return LieHandle{match[1] == "Q" ? Family::q : Family::p, 0, std::stoi(match[2])};
  }
  return std::nullopt;
}

SuperRootDatum::SuperRootDatum(std::size_t rank, std::string label, std::vector<EvenRoot> even_roots,
                               std::vector<OddRoot> odd_roots, std::int64_t h_odd_dim,
                               std::optional<LieHandle> lie_handle)
    : rank_(rank),
      label_(std::move(label)),
      even_(std::move(even_roots)),
      odd_(std::move(odd_roots)),
      h_odd_dim_(h_odd_dim),
      lie_handle_(lie_handle) {
  if (rank_ == 0) throw ValidationError("$.rank: must be positive");
  if (h_odd_dim_ < 0) throw ValidationError("$.h_odd_dim: must be non-negative");

  std::set<Weight> seen_even;
  for (std::size_t i = 0; i < even_.size(); ++i) {
    const std::string path = "$.even_roots[" + std::to_string(i) + "]";
    const auto& e = even_[i];
    if (e.root.rank() != rank_) {
      throw ValidationError(path + ".root: length " + std::to_string(e.root.rank()) +
                            " does not match rank " + std::to_string(rank_));
    }
    if (e.coroot.rank() != rank_) {
      throw ValidationError(path + ".coroot: length " + std::to_string(e.coroot.rank()) +
                            " does not match rank " + std::to_string(rank_));
    }
    if (e.root.is_zero()) throw ValidationError(path + ".root: even roots must be nonzero");
    if (pair(e.root, e.coroot) != 2) {
      throw ValidationError(path + ": <root, coroot> = " + pair(e.root, e.coroot).str() +
                            ", expected 2");
    }
    if (!seen_even.insert(e.root).second) {
      throw ValidationError(path + ".root: duplicate even root " + e.root.str());
    }
  }
  for (std::size_t i = 0; i < even_.size(); ++i) {
    if (!seen_even.count(-even_[i].root)) {
      throw ValidationError("$.even_roots[" + std::to_string(i) + "].root: negative of " +
                            even_[i].root.str() + " is not an even root");
    }
  }

  std::set<Weight> seen_odd;
  for (std::size_t i = 0; i < odd_.size(); ++i) {
    const std::string path = "$.odd_roots[" + std::to_string(i) + "]";
    const auto& o = odd_[i];
    if (o.root.rank() != rank_) {
      throw ValidationError(path + ".root: length " + std::to_string(o.root.rank()) +
                            " does not match rank " + std::to_string(rank_));
    }
    if (o.root.is_zero()) {
      throw ValidationError(path + ".root: odd roots must be nonzero (weight zero goes to h_odd_dim)");
    }
    if (o.multiplicity < 1) throw ValidationError(path + ".mult: must be positive");
    if (!seen_odd.insert(o.root).second) {
      throw ValidationError(path + ".root: duplicate odd root " + o.root.str());
    }
  }

  std::sort(even_.begin(), even_.end(),
            [](const EvenRoot& a, const EvenRoot& b) { return a.root < b.root; });
  std::sort(odd_.begin(), odd_.end(),
            [](const OddRoot& a, const OddRoot& b) { return a.root < b.root; });
}

std::int64_t SuperRootDatum::n_even() const noexcept {
  return static_cast<std::int64_t>(even_.size() + rank_);
}

std::int64_t SuperRootDatum::n_odd() const noexcept {
  std::int64_t total = h_odd_dim_;
  for (const auto& o : odd_) total += o.multiplicity;
  return total;
}

std::int64_t SuperRootDatum::odd_multiplicity(const Weight& gamma) const {
  auto it = std::lower_bound(odd_.begin(), odd_.end(), gamma,
                             [](const OddRoot& o, const Weight& w) { return o.root < w; });
  return (it != odd_.end() && it->root == gamma) ? it->multiplicity : 0;
}

const EvenRoot* SuperRootDatum::find_even_root(const Weight& alpha) const {
  auto it = std::lower_bound(even_.begin(), even_.end(), alpha,
                             [](const EvenRoot& e, const Weight& w) { return e.root < w; });
  return (it != even_.end() && it->root == alpha) ? &*it : nullptr;
}

bool SuperRootDatum::is_even_root(const Weight& alpha) const {
  return find_even_root(alpha) != nullptr;
}

bool SuperRootDatum::is_root(const Weight& w) const {
  if (w.rank() != rank_) return false;
  if (w.is_zero()) return h_odd_dim_ > 0;
  return is_even_root(w) || odd_multiplicity(w) > 0;
}

namespace {

Weight diff(std::size_t rank, std::size_t i, std::size_t j) {
  return Weight::unit(rank, i) - Weight::unit(rank, j);
}

Coweight codiff(std::size_t rank, std::size_t i, std::size_t j) {
  return Coweight::unit(rank, i) - Coweight::unit(rank, j);
}

// Type A roots lambda_i - lambda_j for i != j inside [lo, hi).
void add_type_a(std::vector<EvenRoot>& out, std::size_t rank, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    for (std::size_t j = lo; j < hi; ++j) {
      if (i != j) out.push_back({diff(rank, i, j), codiff(rank, i, j)});
    }
  }
}

void require_positive(int v, const char* what, int min = 1) {
  if (v < min) {
    throw ParameterError(std::string(what) + " must be at least " + std::to_string(min));
  }
}

}  // namespace

SuperRootDatum build_gl(int m, int n) {
  require_positive(m, "m");
  require_positive(n, "n");
  const std::size_t rank = static_cast<std::size_t>(m + n);
  std::vector<EvenRoot> even;
  add_type_a(even, rank, 0, static_cast<std::size_t>(m));
  add_type_a(even, rank, static_cast<std::size_t>(m), rank);
  std::vector<OddRoot> odd;
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
    for (std::size_t j = static_cast<std::size_t>(m); j < rank; ++j) {
      odd.push_back({diff(rank, i, j), 1});
      odd.push_back({diff(rank, j, i), 1});
    }
  }
  LieHandle h{Family::gl, m, n};
  return SuperRootDatum(rank, family_label(h), std::move(even), std::move(odd), 0, h);
}

SuperRootDatum build_q(int n) {
  require_positive(n, "n");
  const std::size_t rank = static_cast<std::size_t>(n);
  std::vector<EvenRoot> even;
  add_type_a(even, rank, 0, rank);
  std::vector<OddRoot> odd;
  for (const auto& e : even) odd.push_back({e.root, 1});
  LieHandle h{Family::q, 0, n};
  return SuperRootDatum(rank, family_label(h), std::move(even), std::move(odd), n, h);
}

SuperRootDatum build_p(int n) {
  require_positive(n, "n", 2);
  const std::size_t rank = static_cast<std::size_t>(n);
  std::vector<EvenRoot> even;
  add_type_a(even, rank, 0, rank);
  std::vector<OddRoot> odd;
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      Weight s = Weight::unit(rank, i) + Weight::unit(rank, j);
      odd.push_back({s, 1});
      odd.push_back({-s, 1});
    }
    odd.push_back({Integer(2) * Weight::unit(rank, i), 1});
  }
  LieHandle h{Family::p, 0, n};
  return SuperRootDatum(rank, family_label(h), std::move(even), std::move(odd), 0, h);
}

SuperRootDatum build_reductive_gl(int n) {
  require_positive(n, "n");
  const std::size_t rank = static_cast<std::size_t>(n);
  std::vector<EvenRoot> even;
  add_type_a(even, rank, 0, rank);
  return SuperRootDatum(rank, "GL_" + std::to_string(n), std::move(even), {}, 0);
}

SuperRootDatum build_semidirect(const SuperRootDatum& even_datum, const std::vector<Weight>& chars) {
  if (!even_datum.odd_roots().empty() || even_datum.h_odd_dim() != 0) {
    throw PreconditionError("build_semidirect: base datum " + even_datum.label() +
                            " already carries odd data");
  }
  std::map<Weight, std::int64_t> counts;
  std::int64_t zeros = 0;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (chars[i].rank() != even_datum.rank()) {
      throw DimensionError("build_semidirect: character " + std::to_string(i) + " has rank " +
                           std::to_string(chars[i].rank()) + ", expected " +
                           std::to_string(even_datum.rank()));
    }
    if (chars[i].is_zero()) {
      ++zeros;
    } else {
      ++counts[-chars[i]];
    }
  }
  std::vector<OddRoot> odd;
  for (const auto& [w, c] : counts) odd.push_back({w, c});
  std::string label = even_datum.label() + "|x(Ga_odd)^" + std::to_string(chars.size());
  return SuperRootDatum(even_datum.rank(), std::move(label), even_datum.even_roots(), std::move(odd),
                        zeros);
}

Rational OrderFunctional::operator()(const Weight& w) const {
  if (w.rank() != values_.size()) {
    throw DimensionError("order functional of rank " + std::to_string(values_.size()) +
                         " applied to weight of rank " + std::to_string(w.rank()));
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) sum += values_[i] * Rational(w[i]);
  return sum;
}

void OrderFunctional::validate(const SuperRootDatum& d) const {
  if (rank() != d.rank()) {
    throw InvalidOrderError("order functional has " + std::to_string(rank()) +
                            " values but the datum has rank " + std::to_string(d.rank()));
  }
  for (const auto& e : d.even_roots()) {
    if ((*this)(e.root) == 0) {
      throw InvalidOrderError("order functional vanishes on even root " + e.root.str());
    }
  }
  for (const auto& o : d.odd_roots()) {
    if ((*this)(o.root) == 0) {
      throw InvalidOrderError("order functional vanishes on odd root " + o.root.str());
    }
  }
}

OrderFunctional default_order(const SuperRootDatum& d) {
  std::vector<Rational> values(d.rank());
  const auto n = static_cast<long long>(d.rank());
  const bool periplectic = d.lie_handle() && d.lie_handle()->family == Family::p;
  for (long long i = 1; i <= n; ++i) {
    values[static_cast<std::size_t>(i - 1)] = periplectic ? Rational(n - i + 1) : Rational(-i);
  }
  return OrderFunctional(std::move(values));
}

std::int64_t PositiveSystem::odd_pos_dim() const {
  std::int64_t total = 0;
  for (const auto& o : odd_pos) total += o.multiplicity;
  return total;
}

std::int64_t PositiveSystem::odd_neg_dim() const {
  std::int64_t total = 0;
  for (const auto& o : odd_neg) total += o.multiplicity;
  return total;
}

PositiveSystem positive_system(const SuperRootDatum& d, const OrderFunctional& u) {
  u.validate(d);
  PositiveSystem ps;
  // The datum keeps its roots sorted, so each part comes out sorted too.
  for (const auto& e : d.even_roots()) (u(e.root) > 0 ? ps.even_pos : ps.even_neg).push_back(e);
  for (const auto& o : d.odd_roots()) (u(o.root) > 0 ? ps.odd_pos : ps.odd_neg).push_back(o);
  return ps;
}

std::vector<Weight> even_simple_roots(const PositiveSystem& ps) {
  std::set<Weight> positive;
  for (const auto& e : ps.even_pos) positive.insert(e.root);
  std::vector<Weight> simple;
  for (const auto& e : ps.even_pos) {
    bool decomposable = false;
    for (const auto& a : ps.even_pos) {
      if (positive.count(e.root - a.root)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(e.root);
  }
  return simple;
}

Weight odd_root_sum(const SuperRootDatum& d) {
  Weight sum = Weight::zero(d.rank());
  for (const auto& o : d.odd_roots()) sum += Integer(o.multiplicity) * o.root;
  return sum;
}

UnimodularityReport is_unimodular_char0(const SuperRootDatum& d) {
  UnimodularityReport rep;
  rep.odd_root_sum = odd_root_sum(d);
  for (std::size_t i = 0; i < d.rank(); ++i) {
    rep.per_coordinate.push_back({i, rep.odd_root_sum[i], rep.odd_root_sum[i] == 0});
  }
  rep.verdict = rep.odd_root_sum.is_zero();
  return rep;
}

void check_frobenius_params(std::int64_t p, std::int64_t r) {
  if (p <= 2 || !is_prime(p)) {
    throw ParameterError("p must be an odd prime, got " + std::to_string(p));
  }
  if (r < 1) throw ParameterError("r must be a positive integer, got " + std::to_string(r));
}

UnimodularityReport is_frobenius_unimodular(const SuperRootDatum& d, std::int64_t p, std::int64_t r) {
  check_frobenius_params(p, r);
  UnimodularityReport rep;
  rep.odd_root_sum = odd_root_sum(d);
  rep.modulus = ipow(Integer(p), static_cast<std::uint64_t>(r));
  rep.verdict = true;
  for (std::size_t i = 0; i < d.rank(); ++i) {
    const bool divides = rep.odd_root_sum[i] % *rep.modulus == 0;
    rep.per_coordinate.push_back({i, rep.odd_root_sum[i], divides});
    rep.verdict = rep.verdict && divides;
  }
  return rep;
}

bool all_frobenius_unimodular(const SuperRootDatum& d) { return odd_root_sum(d).is_zero(); }

Weight chi_r_on_torus(const SuperRootDatum& d) {
  // prod_alpha alpha^{p^r - 1} * prod_gamma gamma^{dim}; the even factor is
  // (p^r - 1) times the sum of all even roots, which vanishes because the
  // even roots are closed under negation.
  return odd_root_sum(d);
}

Weight delta_r(const SuperRootDatum& d, const OrderFunctional& u, std::int64_t p, std::int64_t r) {
  check_frobenius_params(p, r);
  const PositiveSystem ps = positive_system(d, u);
  const Integer factor = ipow(Integer(p), static_cast<std::uint64_t>(r)) - 1;
  Weight out = Weight::zero(d.rank());
  for (const auto& e : ps.even_pos) out -= factor * e.root;
  for (const auto& o : ps.odd_neg) out += Integer(o.multiplicity) * o.root;
  return out;
}

Integer dim_O_Gr(const SuperRootDatum& d, std::int64_t p, std::int64_t r) {
  check_frobenius_params(p, r);
  return ipow(Integer(p), static_cast<std::uint64_t>(r * d.n_even())) *
         ipow(Integer(2), static_cast<std::uint64_t>(d.n_odd()));
}

Integer pbw_monomial_count(const SuperRootDatum& d, std::int64_t p, std::int64_t r) {
  check_frobenius_params(p, r);
  // Each even generator X_alpha, H_i carries an exponent in [0, p^r - 1];
  // each odd generator Y_(gamma,j), K_t an exponent in {0, 1}.
  const Integer even_choices = ipow(Integer(p), static_cast<std::uint64_t>(r));
  Integer count = 1;
  for (std::size_t k = 0; k < d.even_roots().size(); ++k) count *= even_choices;
  for (std::size_t i = 0; i < d.rank(); ++i) count *= even_choices;
  for (const auto& o : d.odd_roots()) {
    for (std::int64_t j = 0; j < o.multiplicity; ++j) count *= 2;
  }
  for (std::int64_t t = 0; t < d.h_odd_dim(); ++t) count *= 2;
  return count;
}

InducedDims induced_dims(const SuperRootDatum& d, const OrderFunctional& u, std::int64_t p,
                         std::int64_t r, const Integer& dim_module) {
  check_frobenius_params(p, r);
  if (dim_module < 0) throw ParameterError("module dimension must be non-negative");
  const PositiveSystem ps = positive_system(d, u);
  const Integer pr = ipow(Integer(p), static_cast<std::uint64_t>(r));
  InducedDims out;
  out.dim_ind = ipow(pr, ps.even_pos.size()) *
                ipow(Integer(2), static_cast<std::uint64_t>(ps.odd_pos_dim())) * dim_module;
  out.dim_coind = ipow(pr, ps.even_neg.size()) *
                  ipow(Integer(2), static_cast<std::uint64_t>(ps.odd_neg_dim())) * dim_module;
  return out;
}

}  // namespace superroot
