#include "superroot/hyperalg.hpp"

#include <algorithm>

#include "superroot/errors.hpp"

namespace superroot {

NormalFormSum normal_order(std::int64_t m, std::int64_t n) {
  if (m < 0 || n < 0) throw ParameterError("normal_order needs m, n >= 0");
  NormalFormSum out;
  for (std::int64_t i = 0; i <= std::min(m, n); ++i) {
    DividedMonomial t;
    t.a = n - i;
    t.c = m - i;
    if (i > 0) t.h_binoms.push_back({m + n - 2 * i, i});
    out.push_back(std::move(t));
  }
  return out;
}

std::pair<Integer, std::int64_t> bw_multiply(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0) throw ParameterError("bw_multiply needs n, m >= 0");
  return {binomial(Integer(n + m), n), n + m};
}

Integer lucas_binom(const Integer& n, const Integer& k, std::int64_t p) {
  if (p < 2 || !is_prime(p)) throw ParameterError("lucas_binom needs a prime p, got " + std::to_string(p));
  if (n < 0 || k < 0) throw ParameterError("lucas_binom needs n, k >= 0");
  const Integer P(p);
  Integer nn = n, kk = k, result = 1;
  while (kk > 0) {
    const Integer nd = nn % P, kd = kk % P;
    if (kd > nd) return 0;
    result = result * binomial(nd, static_cast<std::int64_t>(kd)) % P;
    nn /= P;
    kk /= P;
  }
  return result;
}

namespace poly_operator {

namespace {

void accumulate(Poly& out, std::pair<std::int64_t, std::int64_t> key, const Integer& c) {
  if (c == 0) return;
  auto& slot = out[key];
  slot += c;
  if (slot == 0) out.erase(key);
}

}  // namespace

Poly raise(const Poly& f, std::int64_t m) {
  Poly out;
  for (const auto& [e, c] : f) {
    const auto [a, b] = e;
    if (m > b) continue;
    accumulate(out, {a + m, b - m}, c * binomial(Integer(b), m));
  }
  return out;
}

Poly lower(const Poly& f, std::int64_t n) {
  Poly out;
  for (const auto& [e, c] : f) {
    const auto [a, b] = e;
    if (n > a) continue;
    accumulate(out, {a - n, b + n}, c * binomial(Integer(a), n));
  }
  return out;
}

Poly h_binom(const Poly& f, std::int64_t shift, std::int64_t degree) {
  Poly out;
  for (const auto& [e, c] : f) {
    const auto [a, b] = e;
    accumulate(out, e, c * binomial(Integer(a - b - shift), degree));
  }
  return out;
}

Poly apply(const DividedMonomial& mono, const Poly& f) {
  Poly g = raise(f, mono.c);
  for (const auto& h : mono.h_binoms) g = h_binom(g, h.shift, h.degree);
  g = lower(g, mono.a);
  Poly out;
  for (const auto& [e, c] : g) accumulate(out, e, mono.coefficient * c);
  return out;
}

Poly apply(const NormalFormSum& sum, const Poly& f) {
  Poly out;
  for (const auto& mono : sum) {
    for (const auto& [e, c] : apply(mono, f)) accumulate(out, e, c);
  }
  return out;
}

}  // namespace poly_operator

namespace {

Poly reduce(const Poly& f, std::int64_t p) {
  if (p == 0) return f;
  Poly out;
  for (const auto& [e, c] : f) {
    Integer r = floor_mod(c, Integer(p));
    if (r != 0) out.emplace(e, r);
  }
  return out;
}

}  // namespace

CommutatorReport verify_commutator_formula(std::int64_t M, std::int64_t N, std::int64_t degree_bound,
                                           std::int64_t p, const Expander& expand) {
  if (M < 0 || N < 0 || degree_bound < 0) throw ParameterError("bounds must be >= 0");
  if (p != 0 && (p == 2 || !is_prime(p))) throw ParameterError("p must be 0 or an odd prime");
  CommutatorReport rep;
  rep.p = p;
  for (std::int64_t m = 0; m <= M; ++m) {
    for (std::int64_t n = 0; n <= N; ++n) {
      const NormalFormSum rhs_op = expand(m, n);
      for (std::int64_t a = 0; a <= degree_bound; ++a) {
        for (std::int64_t b = 0; a + b <= degree_bound; ++b) {
          const Poly f{{{a, b}, Integer(1)}};
          Poly lhs = reduce(poly_operator::raise(poly_operator::lower(f, n), m), p);
          Poly rhs = reduce(poly_operator::apply(rhs_op, f), p);
          ++rep.cases;
          if (lhs != rhs) {
            rep.ok = false;
            rep.counterexample = CommutatorReport::Counterexample{m, n, a, b, std::move(lhs), std::move(rhs)};
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace superroot
