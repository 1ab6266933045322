#pragma once

#include <cstdint>
#include <vector>

#include "superroot/liesuper.hpp"
#include "superroot/rootdata.hpp"

namespace superroot {

/// b^lambda(x, y) = lambda([x, y]) on h_odd, in the basis K_1..K_l of odd
/// weight-zero elements. Entries are reduced into [0, p) when char_p > 0.
struct CliffordForm {
  IntMatrix gram;
  Weight lambda;
  std::int64_t char_p = 0;
};

/// Empty form when L has no odd Cartan part. char_p must be 0 or an odd prime.
CliffordForm gram_form(const LieSuperAlgebra& L, const Weight& lambda, std::int64_t char_p);

/// Rank of the Gram matrix over Q (char_p == 0) or F_p.
std::size_t form_rank(const CliffordForm& f);

enum class CliffordType { M, Q };
const char* clifford_type_name(CliffordType t);

struct SimpleModuleDim {
  Integer dim;
  CliffordType type = CliffordType::M;
  std::size_t rank = 0;
};

/// Simple supermodule of Cl(h_odd, b^lambda) over an algebraically closed
/// field: dimension 2^ceil(rk/2), type M for even rank and Q for odd.
SimpleModuleDim u_lambda_dim_closed(const CliffordForm& f);

/// True iff 0 is a root (h_odd != 0), where simple modules need not stay
/// simple after extending scalars.
bool may_fail_absolute_simplicity(const SuperRootDatum& d);

}  // namespace superroot
