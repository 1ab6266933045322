#include <doctest.h>

#include <set>

#include "superroot/liesuper.hpp"
#include "superroot/rootdata.hpp"

using namespace superroot;

namespace {

std::size_t find_basis(const LieSuperAlgebra& L, const std::string& name) {
  for (const auto& b : L.basis()) {
    if (b.name == name) return b.index;
  }
  FAIL("no basis element " << name);
  return 0;
}

Element combo(const LieSuperAlgebra& L, std::initializer_list<std::pair<const char*, int>> terms) {
  Element e = L.zero();
  for (const auto& [name, c] : terms) e[find_basis(L, name)] += c;
  return e;
}

OrderFunctional minus_i(std::size_t rank) {
  std::vector<Rational> v;
  for (std::size_t i = 1; i <= rank; ++i) v.emplace_back(-static_cast<long long>(i));
  return OrderFunctional(v);
}

Element scaled(Element x, const Integer& s) {
  for (auto& c : x) c *= s;
  return x;
}

}  // namespace

TEST_CASE("gl(1|1) anticommutator") {
  const auto L = LieSuperAlgebra::gl(1, 1);
  CHECK(L.dim() == 4);
  const auto e12 = L.unit(find_basis(L, "E1,2"));
  const auto e21 = L.unit(find_basis(L, "E2,1"));
  CHECK(L.bracket(e12, e21) == combo(L, {{"E1,1", 1}, {"E2,2", 1}}));
}

TEST_CASE("self-brackets") {
  const auto L = LieSuperAlgebra::q(2);
  for (const auto& b : L.basis()) {
    const Element x = L.unit(b.index);
    const Element xx = L.bracket(x, x);
    if (b.parity == Parity::even) {
      CHECK(xx == L.zero());
    } else {
      CHECK(L.to_matrix(xx) == Integer(2) * (b.matrix * b.matrix));
    }
  }
}

TEST_CASE("q(2) odd Cartan") {
  const auto L = LieSuperAlgebra::q(2);
  const auto ks = L.odd_cartan_indices();
  REQUIRE(ks.size() == 2);
  // [k_1, k_1] = 2 h_1 in the matrix model.
  Element expected = L.zero();
  expected[L.cartan_index(0)] = 2;
  CHECK(L.bracket_basis(ks[0], ks[0]) == expected);
  CHECK(L.bracket_basis(ks[0], ks[1]) == L.zero());
}

TEST_CASE("bracket table matches matrix supercommutators") {
  for (const auto& L : {LieSuperAlgebra::gl(2, 1), LieSuperAlgebra::q(2), LieSuperAlgebra::p(2)}) {
    for (const auto& x : L.basis()) {
      for (const auto& y : L.basis()) {
        CHECK(L.to_matrix(L.bracket_basis(x.index, y.index)) ==
              supercommutator(x.matrix, x.parity, y.matrix, y.parity));
      }
    }
  }
}

TEST_CASE("decompose rejects matrices outside the algebra") {
  const auto L = LieSuperAlgebra::q(2);
  SquareMatrix m(4);
  m(0, 0) = 1;  // E_11 alone is not in q(2)
  CHECK_THROWS_AS(L.decompose(m), DecompositionError);
  CHECK_THROWS_AS(L.decompose(SquareMatrix(3)), DimensionError);
  const auto P = LieSuperAlgebra::p(2);
  SquareMatrix b(4);
  b(0, 3) = 1;  // B must be symmetric
  CHECK_THROWS_AS(P.decompose(b), DecompositionError);
}

TEST_CASE("weight spaces") {
  const auto L = LieSuperAlgebra::gl(2, 1);
  const auto ws = weight_space(L, Weight{1, 0, -1}, Parity::odd);
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].name == "E1,3");
  for (int n = 1; n <= 4; ++n) {
    CHECK(LieSuperAlgebra::q(n).odd_cartan_indices().size() == static_cast<std::size_t>(build_q(n).h_odd_dim()));
  }
  CHECK(weight_space(L, Weight{5, 0, 0}, Parity::odd).empty());
  CHECK(weight_space(L, Weight{1, 0}, Parity::odd).empty());
}

TEST_CASE("basis counts and weight multiplicities match the root data") {
  std::vector<std::pair<LieSuperAlgebra, SuperRootDatum>> cases;
  cases.emplace_back(LieSuperAlgebra::gl(2, 2), build_gl(2, 2));
  cases.emplace_back(LieSuperAlgebra::gl(1, 3), build_gl(1, 3));
  cases.emplace_back(LieSuperAlgebra::q(3), build_q(3));
  cases.emplace_back(LieSuperAlgebra::p(3), build_p(3));
  for (const auto& [L, d] : cases) {
    CHECK(static_cast<std::int64_t>(L.count(Parity::even)) == d.n_even());
    CHECK(static_cast<std::int64_t>(L.count(Parity::odd)) == d.n_odd());
    std::set<Weight> weights;
    for (const auto& b : L.basis()) weights.insert(b.weight);
    for (const auto& w : weights) {
      const auto even = L.weight_space_indices(w, Parity::even).size();
      const auto odd = L.weight_space_indices(w, Parity::odd).size();
      if (w.is_zero()) {
        CHECK(even == d.rank());
        CHECK(odd == static_cast<std::size_t>(d.h_odd_dim()));
      } else {
        CHECK(even == (d.is_even_root(w) ? 1u : 0u));
        CHECK(odd == static_cast<std::size_t>(d.odd_multiplicity(w)));
      }
    }
  }
}

TEST_CASE("torus acts on basis elements through their weights") {
  for (const auto& L : {LieSuperAlgebra::gl(2, 1), LieSuperAlgebra::q(2), LieSuperAlgebra::p(3)}) {
    for (std::size_t i = 0; i < L.rank(); ++i) {
      const Element h = L.unit(L.cartan_index(i));
      for (const auto& b : L.basis()) {
        const Element x = L.unit(b.index);
        CHECK(L.bracket(h, x) == scaled(x, pair(b.weight, Coweight::unit(L.rank(), i))));
      }
    }
  }
}

TEST_CASE("subalgebra closure") {
  const auto L = LieSuperAlgebra::gl(2, 1);
  CHECK(subalgebra_closure(L, {}).dim() == 0);

  const Element y23 = L.unit(find_basis(L, "E2,3"));
  const Element x12 = L.unit(find_basis(L, "E1,2"));
  const Element y13 = L.unit(find_basis(L, "E1,3"));
  const Subspace alone = subalgebra_closure(L, {y23});
  CHECK(alone.dim() == 1);  // [E23, E23] = 0
  CHECK_FALSE(alone.contains(y13));
  const Subspace helped = subalgebra_closure(L, {y23, x12});
  CHECK(helped.contains(y13));

  // Idempotent and monotone.
  const Subspace again = subalgebra_closure(L, helped.basis());
  CHECK(again.basis() == helped.basis());
  for (const auto& v : alone.basis()) CHECK(helped.contains(v));

  // Mixed-parity generators are split into homogeneous parts.
  Element mixed = y23;
  mixed[find_basis(L, "E1,2")] = 1;
  CHECK(subalgebra_closure(L, {mixed}).basis() == helped.basis());

  // q(2) root vectors generate the derived part: all of the even part and the
  // odd elements with traceless off-diagonal block.
  const auto Q = LieSuperAlgebra::q(2);
  const Subspace derived = subalgebra_closure(
      Q, {Q.unit(find_basis(Q, "A1,2")), Q.unit(find_basis(Q, "A2,1")), Q.unit(find_basis(Q, "B1,2")),
          Q.unit(find_basis(Q, "B2,1"))});
  CHECK(derived.dim() == 7);
  CHECK(derived.contains(combo(Q, {{"A1,1", 1}})));
  CHECK(derived.contains(combo(Q, {{"B1,1", 1}, {"B2,2", -1}})));
  CHECK_FALSE(derived.contains(combo(Q, {{"B1,1", 1}, {"B2,2", 1}})));
}

TEST_CASE("admissible bases") {
  SUBCASE("GL(m|n)") {
    for (int m = 1; m <= 3; ++m) {
      for (int n = 1; n <= 3; ++n) {
        const auto d = build_gl(m, n);
        const auto L = LieSuperAlgebra::gl(m, n);
        const auto u = default_order(d);
        const Weight g = Weight::unit(d.rank(), static_cast<std::size_t>(m - 1)) -
                         Weight::unit(d.rank(), static_cast<std::size_t>(m));
        const auto rep = check_admissible_base(L, d, u, even_simple_roots(positive_system(d, u)), {g});
        CHECK_MESSAGE(rep.ok, d.label());
      }
    }
  }
  SUBCASE("Q(n)") {
    for (int n = 2; n <= 3; ++n) {
      const auto d = build_q(n);
      const auto u = default_order(d);
      const auto simple = even_simple_roots(positive_system(d, u));
      CHECK(check_admissible_base(LieSuperAlgebra::q(n), d, u, simple, simple).ok);
    }
  }
  SUBCASE("P(n) with the descending order") {
    for (int n = 2; n <= 3; ++n) {
      const auto d = build_p(n);
      const auto u = default_order(d);
      const Weight g = Integer(2) * Weight::unit(d.rank(), d.rank() - 1);
      CHECK(check_admissible_base(LieSuperAlgebra::p(n), d, u, even_simple_roots(positive_system(d, u)), {g}).ok);
    }
  }
  SUBCASE("strict semantics cannot move between odd weight spaces") {
    const auto d = build_gl(2, 1);
    const auto u = default_order(d);
    const auto rep = check_admissible_base(LieSuperAlgebra::gl(2, 1), d, u, {Weight{1, -1, 0}}, {Weight{0, 1, -1}},
                                           GenerationSemantics::strict);
    CHECK_FALSE(rep.generation);
    CHECK(rep.separation);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].condition == "generation");
  }
  SUBCASE("P(2) with the order -i") {
    // The only positive odd root is -(l_1 + l_2) itself, so it generates its
    // own root space; and -(l_1+l_2) - (l_1-l_2) = -2 l_1 is not a root.
    const auto d = build_p(2);
    const auto rep = check_admissible_base(LieSuperAlgebra::p(2), d, minus_i(2), {Weight{1, -1}}, {Weight{-1, -1}});
    CHECK(rep.separation);
    CHECK(rep.generation);
    CHECK(rep.multiplicity_one);
  }
  SUBCASE("separation failure") {
    // GL(2|1) with both positive odd roots: (1,0,-1) - (1,-1,0) = (0,1,-1) is a root.
    const auto d = build_gl(2, 1);
    const auto rep = check_admissible_base(LieSuperAlgebra::gl(2, 1), d, default_order(d), {Weight{1, -1, 0}},
                                           {Weight{0, 1, -1}, Weight{1, 0, -1}});
    CHECK_FALSE(rep.separation);
    CHECK_FALSE(rep.ok);
  }
  SUBCASE("parameter checks") {
    const auto d = build_gl(2, 1);
    const auto L = LieSuperAlgebra::gl(2, 1);
    const auto u = default_order(d);
    CHECK_THROWS_AS(check_admissible_base(L, d, u, {Weight{1, -1, 0}}, {Weight{0, -1, 1}}), ParameterError);
    CHECK_THROWS_AS(check_admissible_base(L, d, u, {Weight{-1, 1, 0}}, {Weight{0, 1, -1}}), ParameterError);
    CHECK_THROWS_AS(check_admissible_base(LieSuperAlgebra::q(2), d, u, {}, {}), DimensionError);
  }
}

TEST_CASE("K_alpha and the weight form") {
  const auto L = LieSuperAlgebra::q(2);
  const Weight alpha{1, -1};
  const Element k = K_alpha(L, alpha);
  const auto ks = L.odd_cartan_indices();
  Element expected = L.zero();
  expected[ks[0]] = 1;
  expected[ks[1]] = -1;
  CHECK((k == expected || k == scaled(expected, -1)));
  // [K_a, K_a] = 2 (H_1 + H_2).
  Element kk = L.zero();
  kk[L.cartan_index(0)] = 2;
  kk[L.cartan_index(1)] = 2;
  CHECK(L.bracket(k, k) == kk);
  CHECK(kform_value(L, alpha, Weight{1, -2}) == -2);

  const auto Q3 = LieSuperAlgebra::q(3);
  for (std::size_t i = 0; i + 1 < 3; ++i) {
    const Weight a = Weight::unit(3, i) - Weight::unit(3, i + 1);
    for (const Weight& lam : {Weight{4, 1, -3}, Weight{0, 0, 0}, Weight{-2, 5, 7}}) {
      CHECK(kform_value(Q3, a, lam) == 2 * (lam[i] + lam[i + 1]));
    }
  }
  // gl has no odd root space at -alpha for an even root.
  CHECK_THROWS_AS(K_alpha(LieSuperAlgebra::gl(2, 1), Weight{1, -1, 0}), PreconditionError);
}

TEST_CASE("eval_weight_on_cartan") {
  const auto L = LieSuperAlgebra::q(2);
  Element h = L.zero();
  h[L.cartan_index(0)] = 1;
  h[L.cartan_index(1)] = -1;
  CHECK(eval_weight_on_cartan(L, Weight{1, -2}, h) == 3);
  CHECK(eval_weight_on_cartan(L, Weight{0, 0}, h) == 0);
  CHECK(eval_weight_on_cartan(L, Weight{1, -2}, L.bracket(K_alpha(L, Weight{1, -1}), K_alpha(L, Weight{1, -1}))) == -2);
  CHECK_THROWS_AS(eval_weight_on_cartan(L, Weight{1, -2}, L.unit(L.odd_cartan_indices()[0])), PreconditionError);
  CHECK_THROWS_AS(eval_weight_on_cartan(L, Weight{1, -2, 0}, h), DimensionError);
}

TEST_CASE("super skew-symmetry and Jacobi on small algebras") {
  for (const auto& L : {LieSuperAlgebra::gl(1, 1), LieSuperAlgebra::q(2), LieSuperAlgebra::p(2)}) {
    const auto& B = L.basis();
    for (const auto& x : B) {
      for (const auto& y : B) {
        const int sign = (x.parity == Parity::odd && y.parity == Parity::odd) ? 1 : -1;
        Element sum = L.bracket_basis(x.index, y.index);
        const Element& yx = L.bracket_basis(y.index, x.index);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] -= sign * yx[k];
        CHECK(sum == L.zero());
      }
    }
  }
}
