#pragma once

#include <vector>

#include "rls/tuple.hpp"

namespace rls {

/// Linear-algebra data behind one middle convolution. For finite-slot
/// matrices A_1..A_m on V = C^n, B_k acts on V^m as the identity outside
/// block row k, whose blocks are
///   lambda (A_1 - 1), ..., lambda (A_{k-1} - 1), lambda A_k, A_{k+1} - 1, ..., A_m - 1.
/// K is the slot-wise sum of ker(A_k - 1), L the common fixed space of the B_k.
struct ConvolutionWorkspace {
    Cyclotomic lambda;
    std::vector<Matrix> blocks;          // B_1..B_m
    std::vector<Vector> kernel_part;     // basis of K
    std::vector<Vector> fixed_part;      // basis of L
    std::vector<size_t> complement;      // standard basis indices spanning a complement of K + L

    [[nodiscard]] size_t ambient_dimension() const { return blocks.empty() ? 0 : blocks.front().rows(); }
    [[nodiscard]] size_t quotient_dimension() const { return complement.size(); }
};

ConvolutionWorkspace convolution_workspace(const MonodromyTuple& t, const Cyclotomic& lambda);

/// MC_lambda(t): the action induced by the B_k on V^m / (K + L), with the
/// infinity slot recomputed as the inverse of the product of the others.
/// Throws BadLambda for lambda in {0, 1} and DegenerateQuotient when the
/// quotient is zero. Hypothesis violations (fewer than two nontrivial finite
/// slots, reducible input) are recorded as warnings on the result.
MonodromyTuple middle_convolution(const MonodromyTuple& t, const Cyclotomic& lambda);

}  // namespace rls
