#pragma once

// List-of-lists partitions of [n] and the four statistics
//   rlb - blocks whose opener is a right-to-left minimum of the opener
//         sequence, excluding the opener 1;
//   nsb - k - 1 - rlb;
//   rle - within-block right-to-left minima other than the block minimum;
//   nse - n - k - rle.
// The opener of a block is its minimum, whatever the block's internal order.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unigf/polyring.hpp"

namespace unigf {

struct LLPartition {
    std::vector<std::vector<int>> blocks;

    int n() const;
    int k() const { return static_cast<int>(blocks.size()); }

    friend bool operator==(const LLPartition&, const LLPartition&) = default;
};

/// `3,8,2/1,4,7/9,6/5`
std::string to_string(const LLPartition& p);

/// Accepts the comma form and, when no commas are present, the digit
/// shorthand `382/147/96/5`. Validates that the elements cover 1..n exactly
/// once. Throws std::invalid_argument.
LLPartition parse_partition(std::string_view text);

struct StatVector {
    int rlb = 0;
    int nsb = 0;
    int rle = 0;
    int nse = 0;

    friend bool operator==(const StatVector&, const StatVector&) = default;
};

int stat_rlb(const LLPartition& p);
int stat_nsb(const LLPartition& p);
int stat_rle(const LLPartition& p);
int stat_nse(const LLPartition& p);
StatVector stats(const LLPartition& p);

/// rle of one block: right-to-left minima exceeding the block minimum.
int block_rle(std::span<const int> block);

using LLPartitionVisitor = std::function<void(const LLPartition&)>;

/// Visits every partition of [n] into k ordered blocks of ordered elements
/// exactly once. Order: set partitions by restricted growth string, then
/// block orders in lexicographic permutation order, then within-block orders
/// in lexicographic permutation order with the last block varying fastest.
/// The visited object is reused between calls. Nothing is visited unless
/// 1 <= k <= n.
void for_each_llp(int n, int k, const LLPartitionVisitor& visit);

/// for_each_llp collected into a vector.
std::vector<LLPartition> enumerate_llp(int n, int k);

/// Every restricted growth string of length n with exactly k distinct values,
/// in lexicographic order.
std::vector<std::vector<int>> restricted_growth_strings(int n, int k);

/// Fewest entries that, each moved only to the right, leave the sequence
/// increasing. Exhaustive over subsets; throws std::invalid_argument for
/// sequences longer than 8.
int min_right_moves(std::span<const int> seq);

inline constexpr int kEnumerationGuard = 8;

/// sum over LLP(n,k) of a^rlb b^nsb l^rle m^nse by full enumeration.
/// Throws std::invalid_argument for n > 8 unless `force` is set.
MPoly s_poly_bruteforce(int n, int k, bool force = false);

/// S(n,k) = (a + (k-1) b) S(n-1,k-1) + (k l + (n-1) m) S(n-1,k), S(1,1) = 1.
MPoly s_poly_rec(int n, int k);

}  // namespace unigf
