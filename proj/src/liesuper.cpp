#include "superroot/liesuper.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace superroot {

const char* parity_name(Parity p) { return p == Parity::odd ? "odd" : "even"; }

bool SquareMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool SquareMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < size_; ++r) {
    for (std::size_t c = 0; c < size_; ++c) {
      if (r != c && (*this)(r, c) != 0) return false;
    }
  }
  return true;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.size_ != b.size_) throw DimensionError("matrix size mismatch");
  SquareMatrix out(a.size_);
  for (std::size_t r = 0; r < a.size_; ++r) {
    for (std::size_t k = 0; k < a.size_; ++k) {
      const Integer& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < a.size_; ++c) {
        if (b(k, c) != 0) out(r, c) += x * b(k, c);
      }
    }
  }
  return out;
}

SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) {
  if (a.size_ != b.size_) throw DimensionError("matrix size mismatch");
  for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
  return a;
}

SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) {
  if (a.size_ != b.size_) throw DimensionError("matrix size mismatch");
  for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
  return a;
}

SquareMatrix operator*(const Integer& s, SquareMatrix a) {
  for (auto& x : a.data_) x *= s;
  return a;
}

SquareMatrix supercommutator(const SquareMatrix& x, Parity px, const SquareMatrix& y, Parity py) {
  if (px == Parity::odd && py == Parity::odd) return x * y + y * x;
  return x * y - y * x;
}

namespace {

SquareMatrix elementary(std::size_t size, std::size_t r, std::size_t c) {
  SquareMatrix m(size);
  m(r, c) = 1;
  return m;
}

std::string name_of(char block, std::size_t i, std::size_t j) {
  return std::string(1, block) + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

}  // namespace

LieSuperAlgebra::LieSuperAlgebra(LieHandle handle, std::size_t rank, std::size_t matrix_size,
                                 std::vector<Weight> diagonal_weights, std::vector<Generator> generators)
    : handle_(handle),
      rank_(rank),
      matrix_size_(matrix_size),
      diagonal_weights_(std::move(diagonal_weights)) {
  std::sort(generators.begin(), generators.end(),
            [](const Generator& a, const Generator& b) { return a.pivot < b.pivot; });
  const std::size_t none = generators.size();
  cartan_.assign(rank_, none);
  for (auto& g : generators) {
    BasisElement b;
    b.index = basis_.size();
    b.parity = g.parity;
    b.weight = diagonal_weights_[g.pivot.first] - diagonal_weights_[g.pivot.second];
    b.matrix = std::move(g.matrix);
    b.name = std::move(g.name);
    if (b.parity == Parity::even && g.pivot.first == g.pivot.second && g.pivot.first < rank_) {
      cartan_[g.pivot.first] = b.index;
    }
    pivots_.push_back(g.pivot);
    basis_.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < rank_; ++i) {
    if (cartan_[i] == none) throw DecompositionError("missing Cartan element H_" + std::to_string(i + 1));
  }
  table_.reserve(dim() * dim());
  for (const auto& x : basis_) {
    for (const auto& y : basis_) {
      table_.push_back(decompose(supercommutator(x.matrix, x.parity, y.matrix, y.parity)));
    }
  }
}

LieSuperAlgebra LieSuperAlgebra::gl(int m, int n) {
  if (m < 1 || n < 1) throw ParameterError("gl(m|n) needs m, n >= 1");
  const std::size_t size = static_cast<std::size_t>(m + n);
  const auto mm = static_cast<std::size_t>(m);
  std::vector<Weight> diag;
  for (std::size_t a = 0; a < size; ++a) diag.push_back(Weight::unit(size, a));
  std::vector<Generator> gens;
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      const Parity par = ((a < mm) != (b < mm)) ? Parity::odd : Parity::even;
      gens.push_back({{a, b}, par, elementary(size, a, b), name_of('E', a, b)});
    }
  }
  return LieSuperAlgebra({Family::gl, m, n}, size, size, std::move(diag), std::move(gens));
}

LieSuperAlgebra LieSuperAlgebra::q(int n) {
  if (n < 1) throw ParameterError("q(n) needs n >= 1");
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t size = 2 * nn;
  std::vector<Weight> diag;
  for (std::size_t a = 0; a < size; ++a) diag.push_back(Weight::unit(nn, a % nn));
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = 0; j < nn; ++j) {
      gens.push_back({{i, j}, Parity::even,
                      elementary(size, i, j) + elementary(size, nn + i, nn + j), name_of('A', i, j)});
      gens.push_back({{i, nn + j}, Parity::odd,
                      elementary(size, i, nn + j) + elementary(size, nn + i, j), name_of('B', i, j)});
    }
  }
  return LieSuperAlgebra({Family::q, 0, n}, nn, size, std::move(diag), std::move(gens));
}

LieSuperAlgebra LieSuperAlgebra::p(int n) {
  if (n < 2) throw ParameterError("p(n) needs n >= 2");
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t size = 2 * nn;
  std::vector<Weight> diag;
  for (std::size_t a = 0; a < nn; ++a) diag.push_back(Weight::unit(nn, a));
  for (std::size_t a = 0; a < nn; ++a) diag.push_back(-Weight::unit(nn, a));
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = 0; j < nn; ++j) {
      // (A, B, C, -A^t) with B symmetric and C antisymmetric.
      gens.push_back({{i, j}, Parity::even,
                      elementary(size, i, j) - elementary(size, nn + j, nn + i), name_of('A', i, j)});
      if (i <= j) {
        SquareMatrix b = elementary(size, i, nn + j);
        if (i != j) b = b + elementary(size, j, nn + i);
        gens.push_back({{i, nn + j}, Parity::odd, std::move(b), name_of('B', i, j)});
      }
      if (i < j) {
        gens.push_back({{nn + i, j}, Parity::odd,
                        elementary(size, nn + i, j) - elementary(size, nn + j, i), name_of('C', i, j)});
      }
    }
  }
  return LieSuperAlgebra({Family::p, 0, n}, nn, size, std::move(diag), std::move(gens));
}

LieSuperAlgebra LieSuperAlgebra::from_handle(const LieHandle& h) {
  switch (h.family) {
    case Family::gl:
      return gl(h.m, h.n);
    case Family::q:
      return q(h.n);
    case Family::p:
      return p(h.n);
  }
  throw ParameterError("unknown family");
}

std::size_t LieSuperAlgebra::count(Parity p) const {
  return static_cast<std::size_t>(std::count_if(basis_.begin(), basis_.end(),
                                                [p](const BasisElement& b) { return b.parity == p; }));
}

Element LieSuperAlgebra::unit(std::size_t i) const {
  Element e = zero();
  e.at(i) = 1;
  return e;
}

Element LieSuperAlgebra::bracket(const Element& x, const Element& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionError("bracket: element of wrong length");
  Element out = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      const Element& b = bracket_basis(i, j);
      const Integer coeff = x[i] * y[j];
      for (std::size_t k = 0; k < dim(); ++k) {
        if (b[k] != 0) out[k] += coeff * b[k];
      }
    }
  }
  return out;
}

SquareMatrix LieSuperAlgebra::to_matrix(const Element& x) const {
  if (x.size() != dim()) throw DimensionError("to_matrix: element of wrong length");
  SquareMatrix m(matrix_size_);
  for (std::size_t k = 0; k < dim(); ++k) {
    if (x[k] != 0) m = m + x[k] * basis_[k].matrix;
  }
  return m;
}

Element LieSuperAlgebra::decompose(const SquareMatrix& m) const {
  if (m.size() != matrix_size_) throw DimensionError("decompose: matrix of wrong size");
  Element coeffs = zero();
  SquareMatrix residual = m;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const auto [r, c] = pivots_[k];
    const Integer& lead = basis_[k].matrix(r, c);
    if (residual(r, c) == 0) continue;
    if (residual(r, c) % lead != 0) {
      throw DecompositionError("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                               ") is not an integer multiple of basis element " + basis_[k].name);
    }
    coeffs[k] = residual(r, c) / lead;
    residual = residual - coeffs[k] * basis_[k].matrix;
  }
  if (!residual.is_zero()) {
    throw DecompositionError("matrix is not in the span of " + label());
  }
  return coeffs;
}

std::pair<Element, Element> LieSuperAlgebra::homogeneous_parts(const Element& x) const {
  if (x.size() != dim()) throw DimensionError("homogeneous_parts: element of wrong length");
  Element even = zero();
  Element odd = zero();
  for (std::size_t k = 0; k < dim(); ++k) {
    (basis_[k].parity == Parity::even ? even : odd)[k] = x[k];
  }
  return {even, odd};
}

std::vector<std::size_t> LieSuperAlgebra::weight_space_indices(const Weight& w, Parity p) const {
  std::vector<std::size_t> out;
  if (w.rank() != rank_) return out;
  for (const auto& b : basis_) {
    if (b.parity == p && b.weight == w) out.push_back(b.index);
  }
  return out;
}

std::vector<std::size_t> LieSuperAlgebra::odd_cartan_indices() const {
  return weight_space_indices(Weight::zero(rank_), Parity::odd);
}

std::vector<BasisElement> weight_space(const LieSuperAlgebra& L, const Weight& w, Parity p) {
  std::vector<BasisElement> out;
  for (std::size_t i : L.weight_space_indices(w, p)) out.push_back(L.basis()[i]);
  return out;
}

Integer eval_weight_on_cartan(const LieSuperAlgebra& L, const Weight& lambda, const Element& h) {
  if (lambda.rank() != L.rank()) {
    throw DimensionError("weight of rank " + std::to_string(lambda.rank()) + " on " + L.label());
  }
  if (h.size() != L.dim()) throw DimensionError("eval_weight_on_cartan: element of wrong length");
  std::map<std::size_t, std::size_t> coordinate;
  for (std::size_t i = 0; i < L.rank(); ++i) coordinate[L.cartan_index(i)] = i;
  Integer value = 0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] == 0) continue;
    auto it = coordinate.find(k);
    if (it == coordinate.end()) {
      throw PreconditionError("non-Cartan input: component along " + L.basis()[k].name);
    }
    value += h[k] * lambda[it->second];
  }
  return value;
}

Subspace::Subspace(std::size_t ambient, std::vector<Element> hnf_rows)
    : ambient_(ambient), rows_(std::move(hnf_rows)), equations_(integer_kernel(rows_, ambient)) {}

bool Subspace::contains(const Element& x) const {
  if (x.size() != ambient_) throw DimensionError("Subspace::contains: element of wrong length");
  for (const auto& eq : equations_) {
    Integer dot = 0;
    for (std::size_t i = 0; i < ambient_; ++i) dot += eq[i] * x[i];
    if (dot != 0) return false;
  }
  return true;
}

namespace {

// Reduced row echelon form over Q, grown one vector at a time.
class RationalEchelon {
public:
  explicit RationalEchelon(std::size_t dim) : dim_(dim) {}

  /// Adds `x` if it is independent of the rows so far; returns whether it was.
  bool add(const Element& x) {
    std::vector<Rational> v(dim_);
    for (std::size_t i = 0; i < dim_; ++i) v[i] = Rational(x[i]);
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      const Rational f = v[pivot];
      for (std::size_t i = 0; i < dim_; ++i) {
        if (row[i] != 0) v[i] -= f * row[i];
      }
    }
    std::size_t pivot = 0;
    while (pivot < dim_ && v[pivot] == 0) ++pivot;
    if (pivot == dim_) return false;
    const Rational lead = v[pivot];
    for (auto& c : v) c /= lead;
    for (auto& [p, row] : rows_) {
      if (row[pivot] == 0) continue;
      const Rational f = row[pivot];
      for (std::size_t i = 0; i < dim_; ++i) {
        if (v[i] != 0) row[i] -= f * v[i];
      }
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }

private:
  std::size_t dim_;
  std::map<std::size_t, std::vector<Rational>> rows_;
};

bool is_zero(const Element& x) {
  return std::all_of(x.begin(), x.end(), [](const Integer& c) { return c == 0; });
}

}  // namespace

Subspace subalgebra_closure(const LieSuperAlgebra& L, const std::vector<Element>& generators) {
  RationalEchelon echelon(L.dim());
  std::vector<Element> members;
  auto try_add = [&](const Element& x) {
    if (!is_zero(x) && echelon.add(x)) members.push_back(x);
  };
  for (const auto& g : generators) {
    auto [even, odd] = L.homogeneous_parts(g);
    try_add(even);
    try_add(odd);
  }
  // Every member gets bracketed with every member found before it (and itself).
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      try_add(L.bracket(members[k], members[j]));
    }
  }
  // Saturate: the integer points of the rational span.
  IntMatrix saturated = integer_kernel(integer_kernel(members, L.dim()), L.dim());
  return Subspace(L.dim(), std::move(saturated));
}

const char* semantics_name(GenerationSemantics s) {
  return s == GenerationSemantics::strict ? "strict" : "assisted";
}

AdmissibilityReport check_admissible_base(const LieSuperAlgebra& L, const SuperRootDatum& d,
                                          const OrderFunctional& u, const std::vector<Weight>& psi_even,
                                          const std::vector<Weight>& psi_odd,
                                          GenerationSemantics semantics) {
  if (L.rank() != d.rank()) {
    throw DimensionError(L.label() + " has torus rank " + std::to_string(L.rank()) + " but " +
                         d.label() + " has rank " + std::to_string(d.rank()));
  }
  const PositiveSystem ps = positive_system(d, u);

  const std::vector<Weight> simple = even_simple_roots(ps);
  const std::set<Weight> even_set(psi_even.begin(), psi_even.end());
  if (even_set != std::set<Weight>(simple.begin(), simple.end())) {
    std::string listed;
    for (const auto& s : simple) listed += (listed.empty() ? "" : ", ") + s.str();
    throw ParameterError("psi_even must be the even simple roots {" + listed + "}");
  }
  std::set<Weight> positive_odd;
  for (const auto& o : ps.odd_pos) positive_odd.insert(o.root);
  const std::set<Weight> odd_set(psi_odd.begin(), psi_odd.end());
  for (const auto& g : odd_set) {
    if (!positive_odd.count(g)) {
      throw ParameterError("psi_odd element " + g.str() + " is not a positive odd root");
    }
  }
  for (const auto& o : d.odd_roots()) {
    if (L.weight_space_indices(o.root, Parity::odd).size() != static_cast<std::size_t>(o.multiplicity)) {
      throw PreconditionError(L.label() + " does not realize the odd root " + o.root.str() + " of " +
                              d.label());
    }
  }

  AdmissibilityReport rep;
  rep.semantics = semantics;

  std::vector<Element> gens;
  for (const auto& g : odd_set) {
    for (std::size_t i : L.weight_space_indices(g, Parity::odd)) gens.push_back(L.unit(i));
  }
  if (semantics == GenerationSemantics::assisted) {
    for (const auto& a : even_set) {
      for (std::size_t i : L.weight_space_indices(a, Parity::even)) gens.push_back(L.unit(i));
    }
  }
  const Subspace closure = subalgebra_closure(L, gens);
  rep.closure_dim = closure.dim();
  rep.generation = true;
  for (const auto& o : ps.odd_pos) {
    for (std::size_t i : L.weight_space_indices(o.root, Parity::odd)) {
      if (!closure.contains(L.unit(i))) {
        rep.generation = false;
        rep.failures.push_back({"generation", "g_odd^" + o.root.str() + " (" + L.basis()[i].name +
                                                  ") is not in the generated subalgebra"});
        break;
      }
    }
  }

  rep.separation = true;
  for (const auto& a : even_set) {
    for (const auto& g : odd_set) {
      if (a == g) continue;
      const Weight diff = g - a;
      if (d.is_root(diff)) {
        rep.separation = false;
        rep.failures.push_back(
            {"separation", g.str() + " - " + a.str() + " = " + diff.str() + " is a root"});
      }
    }
  }

  rep.multiplicity_one = true;
  for (const auto& a : even_set) {
    if (!odd_set.count(a)) continue;
    for (const Weight& w : {a, -a}) {
      const auto mult = d.odd_multiplicity(w);
      if (mult != 1) {
        rep.multiplicity_one = false;
        rep.failures.push_back({"multiplicity-one", "dim g_odd^" + w.str() + " = " + std::to_string(mult)});
      }
    }
  }

  rep.ok = rep.generation && rep.separation && rep.multiplicity_one;
  return rep;
}

Element K_alpha(const LieSuperAlgebra& L, const Weight& alpha) {
  const auto x = L.weight_space_indices(alpha, Parity::even);
  if (x.size() != 1) {
    throw PreconditionError("dim g_even^" + alpha.str() + " = " + std::to_string(x.size()) + ", expected 1");
  }
  const auto y = L.weight_space_indices(-alpha, Parity::odd);
  if (y.size() != 1) {
    throw PreconditionError("dim g_odd^" + (-alpha).str() + " = " + std::to_string(y.size()) +
                            ", expected 1");
  }
  return L.bracket_basis(x.front(), y.front());
}

Integer kform_value(const LieSuperAlgebra& L, const Weight& alpha, const Weight& lambda) {
  const Element k = K_alpha(L, alpha);
  return eval_weight_on_cartan(L, lambda, L.bracket(k, k));
}

}  // namespace superroot
