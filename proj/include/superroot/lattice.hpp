#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "superroot/errors.hpp"
#include "superroot/numeric.hpp"

namespace superroot {

/// Dense integer vector in a lattice of fixed rank. Tagged so that weights
/// (characters of the torus) and coweights (cocharacters) do not mix.
template <class Tag>
class LatticeVector {
public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long long> coords) {
    coords_.reserve(coords.size());
    for (long long c : coords) coords_.emplace_back(c);
  }

  static LatticeVector zero(std::size_t rank) {
    return LatticeVector(std::vector<Integer>(rank, Integer(0)));
  }
  static LatticeVector unit(std::size_t rank, std::size_t i) {
    auto v = zero(rank);
    v.coords_.at(i) = 1;
    return v;
  }

  std::size_t rank() const noexcept { return coords_.size(); }
  const std::vector<Integer>& coords() const noexcept { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
  }

  LatticeVector& operator+=(const LatticeVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  LatticeVector& operator*=(const Integer& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& s, LatticeVector a) { return a *= s; }
  friend LatticeVector operator-(LatticeVector a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return !(a == b); }
  /// Lexicographic on coordinates; shorter vectors first.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                        b.coords_.end());
  }
  friend bool operator>(const LatticeVector& a, const LatticeVector& b) { return b < a; }
  friend bool operator<=(const LatticeVector& a, const LatticeVector& b) { return !(b < a); }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ",";
      out += coords_[i].str();
    }
    return out + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.str(); }

private:
  void check_rank(const LatticeVector& o) const {
    if (o.rank() != rank()) {
      throw DimensionError("lattice rank mismatch: " + std::to_string(rank()) + " vs " +
                           std::to_string(o.rank()));
    }
  }

  std::vector<Integer> coords_;
};

struct WeightTag {};
struct CoweightTag {};

/// Element of the character lattice X(T) in the basis lambda_1..lambda_l.
using Weight = LatticeVector<WeightTag>;
/// Element of the cocharacter lattice X(T)^vee.
using Coweight = LatticeVector<CoweightTag>;

/// The perfect pairing X(T) x X(T)^vee -> Z.
Integer pair(const Weight& lambda, const Coweight& cov);

using IntMatrix = std::vector<std::vector<Integer>>;

/// Row-style Hermite normal form of the lattice spanned by `rows` (all of
/// length `dim`): pivots strictly increase, are positive, and the entries
/// above each pivot lie in [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(IntMatrix rows, std::size_t dim);

/// HNF basis of {x in Z^dim : <e, x> = 0 for every row e of `equations`}.
IntMatrix integer_kernel(const IntMatrix& equations, std::size_t dim);

/// Integral basis (HNF rows) of {lambda : <lambda, c> = 0 for all c}.
/// With no coweights the ambient rank cannot be inferred, so it is passed.
std::vector<Weight> pairing_kernel(std::span<const Coweight> covs, std::size_t rank);

}  // namespace superroot
