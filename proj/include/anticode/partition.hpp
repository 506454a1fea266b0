#pragma once

// Greedy functional partition of the column indices of a generator matrix.
//
// Step i picks a nonzero functional a_i maximizing the number of columns
// g_j, j in R_{i-1}, with a_i(g_j) != 0; those columns form S_i and
// R_i = R_{i-1} \ S_i. For codes without zero columns the steps exhaust
// [n] within k rounds, |S_1| is the diameter and |S_i| <= floor(|S_{i-1}|/q),
// which together give n <= sum_{i<k} floor(delta/q^i).
//
// Column indices are 0-based throughout.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "anticode/codes.hpp"

namespace anticode {

inline constexpr std::uint64_t kDefaultFunctionalBudget = std::uint64_t{1} << 22;

struct PartitionTrace {
    std::uint64_t q = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    // a_1..a_k; nullopt once R_{i-1} is empty.
    std::vector<std::optional<std::vector<Elem>>> functionals;
    // S_1..S_k, each sorted.
    std::vector<std::vector<std::size_t>> sets;
    // R_0..R_k, each sorted.
    std::vector<std::vector<std::size_t>> remainders;

    std::vector<std::size_t> set_sizes() const;
};

struct PartitionOptions {
    // Upper bound on (q^k - 1)/(q - 1) candidate functionals per step.
    std::uint64_t functional_budget = kDefaultFunctionalBudget;
    // When set, ties among maximizers are broken uniformly at random with
    // this seed instead of taking the lexicographically least candidate.
    std::optional<std::uint64_t> random_tie_break_seed;
};

// Throws HypothesisViolation (zero column, message names its index) or
// InfeasibleEnumeration (functional budget exceeded).
PartitionTrace greedy_partition(const LinearCode& code, const PartitionOptions& options = {});

// For every step i with R_{i-1} nonempty, a_1..a_i have rank i.
bool check_independence(const PartitionTrace& trace, const LinearCode& code);

// The S_i are pairwise disjoint and cover [0, n).
bool check_partition(const PartitionTrace& trace, const LinearCode& code);

// |S_i| <= floor(|S_{i-1}| / q) for every i >= 2.
bool check_halving(const PartitionTrace& trace);

// Every a_i attains the maximum support count on R_{i-1} over all nonzero
// functionals.
bool check_maximality(const PartitionTrace& trace, const LinearCode& code);

// R_0 = [n], S_i = {j in R_{i-1} : a_i(g_j) != 0}, R_i = R_{i-1} \ S_i.
bool check_trace_consistency(const PartitionTrace& trace, const LinearCode& code);

struct PencilCheck {
    std::size_t i = 0;  // 1-based step index, >= 2
    // sum_{j in R_{i-2}} sum_{t in P(F_q)} 1{b_t(g_j) != 0}, where
    // b_t = a_{i-1} + t a_i and b_inf = a_i.
    std::uint64_t lhs = 0;
    // q (|S_{i-1}| + |S_i|)
    std::uint64_t rhs = 0;
    // Each inner sum over t is q when (a_{i-1}(g_j), a_i(g_j)) != (0,0)
    // and 0 otherwise.
    bool per_column_ok = false;

    bool holds() const { return lhs == rhs && per_column_ok; }
};

// Throws InputError when i < 2, i > k, or a_{i-1}/a_i is absent.
PencilCheck averaging_identity(const LinearCode& code, const PartitionTrace& trace, std::size_t i);

// Steps i >= 2 where both a_{i-1} and a_i are present.
std::vector<std::size_t> pencil_steps(const PartitionTrace& trace);

}  // namespace anticode
