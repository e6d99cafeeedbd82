#pragma once

#include "l2burau/braid.hpp"
#include "l2burau/l2burau.hpp"
#include "l2burau/laurent.hpp"

namespace l2b {

/// Classical Burau matrix with (i, j) entry T^phi(d h_beta(x_j) / d x_i),
/// phi(x_i) = 1. Column j is the image of x_j, so burau(a * b) = burau(b) burau(a).
LaurentMatrix burau(const BraidWord& beta);

/// The same matrix assembled as a product of per-generator blocks
/// [[1-T, 1], [T, 0]] and [[0, T^-1], [1, 1-T^-1]]; independent of Fox calculus.
LaurentMatrix burau_by_generators(const BraidWord& beta);

/// (n-1) x (n-1) matrix T^phi(d h_beta(g_j) / d g_i) with phi(g_i) = i.
LaurentMatrix reduced_burau(const BraidWord& beta);

/// Specializes every entry through g -> T^{grading * psi(g)}. Entries already
/// follow the Burau convention (column j = image of generator j), so no
/// transpose is applied.
LaurentMatrix theta(const OperatorMatrix& m);

}  // namespace l2b
