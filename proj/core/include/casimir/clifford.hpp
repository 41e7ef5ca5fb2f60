#pragma once

#include "casimir/exterior.hpp"

namespace casimir {

/// Clifford elements share the Form carrier; only the product differs.
using CliffordElement = Form;

/// Product in Cl(n) with e_i e_j + e_j e_i = -2 delta_ij.
CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b);
/// Sign of e_A e_B = sign * e_{A xor B}.
int blade_product_sign(IndexBlade a, IndexBlade b);
/// Sum_k (e_k _| T)(e_k _| T) in the Clifford algebra.
CliffordElement contraction_square(const Form& t);
inline CliffordElement embed(const Form& a) { return a; }
/// Reverse anti-automorphism: e_{i1..ip} -> e_{ip..i1}.
CliffordElement reverse(const CliffordElement& a);

}  // namespace casimir
