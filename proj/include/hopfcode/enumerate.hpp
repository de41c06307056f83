// Exhaustive enumeration of all right submodules of a structure algebra
// over a prime field: the brute-force oracle the classification theorems are
// verified against.
//
// Every submodule is a sum of cyclic submodules, so the kernel computes the
// right-ideal closure of every projective coordinate vector (the hot,
// data-parallel loop) and then closes the resulting set under pairwise sums.
// Two drivers share the same per-vector closure routine: a serial reference
// implementation and an OpenMP-parallel one. Both return the identical
// deterministic list, sorted by canonical basis.

#pragma once

#include <cstdint>
#include <vector>

#include "hopfcode/algebra.hpp"

namespace hopfcode {

// Default cap on p^dim for exhaustive enumeration (3^12).
std::uint64_t default_enumeration_budget();

struct EnumerationOptions {
  std::uint64_t budget = default_enumeration_budget();
  bool parallel = true;
};

// All subspaces closed under right multiplication, including the zero
// submodule and the whole algebra. Preconditions: prime field and
// p^dim <= budget (else BudgetExceeded).
std::vector<RightSubmodule> enumerate_right_submodules(
    const StructureAlgebra& alg, const EnumerationOptions& opts = {});

// Serial reference path, bypassing OpenMP regardless of build flags.
std::vector<RightSubmodule> enumerate_right_submodules_serial(
    const StructureAlgebra& alg,
    std::uint64_t budget = default_enumeration_budget());

}  // namespace hopfcode
