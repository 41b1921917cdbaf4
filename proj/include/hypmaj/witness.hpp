#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hypmaj/hyperbolic.hpp"
#include "hypmaj/scalar.hpp"

namespace hypmaj {

/// Doubly stochastic A with X̃ = A·Ỹ for the ascending-sorted column vectors.
struct DoublyStochasticWitness {
    std::vector<std::vector<Rational>> matrix;  ///< row-major, n × n
    std::size_t t_transforms = 0;               ///< number of T-transform factors

    std::size_t size() const noexcept { return matrix.size(); }
};

/// Builds the witness for X ≺ Y as a product of T-transforms
/// μI + (1-μ)Π_{kl}, one per contraction of the chain that carries Y to X.
/// Strictly hyperbolic distinct pairs use decompose_majorization; other
/// pairs use transfer_chain. The product is checked exactly before return.
/// Throws NotMajorized.
DoublyStochasticWitness build_witness(std::span<const Rational> x, std::span<const Rational> y);

/// Float inputs are rejected: the witness is an exact object.
DoublyStochasticWitness build_witness(std::span<const double> x, std::span<const double> y);

/// Exact check of the witness invariants: nonnegative entries, unit row and
/// column sums, and A·Ỹ = X̃.
bool check_witness(const DoublyStochasticWitness& w, std::span<const Rational> x, std::span<const Rational> y);

}  // namespace hypmaj
