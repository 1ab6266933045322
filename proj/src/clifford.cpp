#include "superroot/clifford.hpp"

namespace superroot {

CliffordForm gram_form(const LieSuperAlgebra& L, const Weight& lambda, std::int64_t char_p) {
  if (char_p != 0 && (char_p == 2 || !is_prime(char_p))) {
    throw ParameterError("characteristic must be 0 or an odd prime, got " + std::to_string(char_p));
  }
  if (lambda.rank() != L.rank()) {
    throw DimensionError("weight of rank " + std::to_string(lambda.rank()) + " on " + L.label());
  }
  const auto ks = L.odd_cartan_indices();
  CliffordForm f;
  f.lambda = lambda;
  f.char_p = char_p;
  f.gram.assign(ks.size(), std::vector<Integer>(ks.size(), Integer(0)));
  for (std::size_t s = 0; s < ks.size(); ++s) {
    for (std::size_t t = 0; t < ks.size(); ++t) {
      Integer v = eval_weight_on_cartan(L, lambda, L.bracket_basis(ks[s], ks[t]));
      f.gram[s][t] = char_p ? floor_mod(v, Integer(char_p)) : v;
    }
  }
  return f;
}

namespace {

std::size_t rank_rational(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

Integer inverse_mod(const Integer& a, const Integer& p) {
  // p prime: a^(p-2).
  Integer result = 1, base = floor_mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::size_t rank_mod_p(IntMatrix a, const Integer& p) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (auto& row : a) {
    for (auto& x : row) x = floor_mod(x, p);
  }
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    const Integer inv = inverse_mod(a[rank][c], p);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      const Integer f = a[r][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) a[r][k] = floor_mod(a[r][k] - f * a[rank][k], p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t form_rank(const CliffordForm& f) {
  return f.char_p ? rank_mod_p(f.gram, Integer(f.char_p)) : rank_rational(f.gram);
}

const char* clifford_type_name(CliffordType t) { return t == CliffordType::Q ? "Q" : "M"; }

SimpleModuleDim u_lambda_dim_closed(const CliffordForm& f) {
  SimpleModuleDim out;
  out.rank = form_rank(f);
  out.dim = ipow(Integer(2), (out.rank + 1) / 2);
  out.type = out.rank % 2 ? CliffordType::Q : CliffordType::M;
  return out;
}

bool may_fail_absolute_simplicity(const SuperRootDatum& d) { return d.h_odd_dim() > 0; }

}  // namespace superroot
