#pragma once

#include "weylhodge/exactlin/rational.hpp"

#include <string>
#include <vector>

namespace weylhodge {

/// Coefficient list c_0, c_1, … of a polynomial in t.
using Polynomial = std::vector<BigInt>;

/// Σ_k dim (∧^k (std_n ⊗ C^g))^{S_{n+1}} t^k by Molien's formula, where std_n
/// is the n-dimensional standard representation of S_{n+1}. Throws
/// ResourceLimit when (n+1)! > 10^7.
Polynomial molien_holomorphic_invariants(int g, int n);

/// "1 + t^2" style rendering; "0" for the zero polynomial.
std::string to_string(const Polynomial& p);

} // namespace weylhodge
