#pragma once

#include <cstdint>
#include <random>

#include "shoda/algebra.hpp"

namespace shoda {

/// All randomness in the library flows through an explicitly seeded engine.
using Rng = std::mt19937_64;

/// Entries drawn independently from the standard complex normal distribution.
Matrix random_matrix(int rows, int cols, Rng& rng);
Vector random_vector(int size, Rng& rng);
Element random_element(const AlgebraSpec& spec, Rng& rng);

/// Random element whose block i has rank ranks[i] (generically).
Element random_element_with_ranks(const AlgebraSpec& spec, const std::vector<int>& ranks,
                                  Rng& rng);

/// Random element with total trace zero and, generically, nonzero block traces.
Element random_traceless_element(const AlgebraSpec& spec, Rng& rng);

}  // namespace shoda
