#pragma once

// Exact counting of q'-cumulative rearrangements.
//
// |W^(q)_r| is computed by a dynamic program over states
// (remaining residue-class counts, current prefix residue):
//
//   f(0, s)      = 1
//   f(counts, s) = sum over classes i with counts_i > 0 and s+i != 0 (mod q)
//                  of f(counts - e_i, (s+i) mod q)
//
// and |W^(q)_r| = f(r, 0) for r != 0. c^(q)_lambda is then assembled from
// |W^(q)_{r(lambda)}|, a multinomial correction for the actual part values,
// and the number of ways to place the parts divisible by q.

#include <cstdint>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "qcum/core.hpp"

namespace qcum {

/// Upper bound on DP table entries (count vectors times residues) per query.
inline constexpr std::uint64_t kMaxTableEntries = std::uint64_t{1} << 22;

[[nodiscard]] BigCount factorial(std::uint64_t n);

/// C(n, k), and 0 whenever n < 0, k < 0 or k > n.
[[nodiscard]] BigCount binomial(std::int64_t n, std::int64_t k);

/// Dense table of f(counts, s) for every sub-vector of a fixed top vector.
class WCountBox {
public:
    /// Throws std::length_error if the table would exceed kMaxTableEntries.
    WCountBox(std::uint64_t q, std::span<const std::uint64_t> top);

    [[nodiscard]] std::uint64_t modulus() const noexcept { return q_; }
    /// f(counts, residue); counts must be dominated by the top vector.
    [[nodiscard]] const BigCount& ways(std::span<const std::uint64_t> counts, std::uint64_t residue) const;

private:
    std::uint64_t q_;
    std::vector<std::uint64_t> top_;
    std::vector<std::uint64_t> classes_;  // residues i with top_i > 0
    std::vector<std::uint64_t> strides_;  // mixed-radix stride per entry of classes_
    std::vector<BigCount> table_;         // [index * q + residue]
};

/// Memo of f(counts, .) rows that can be shared across calls and threads.
/// Lookups take a shared lock; a miss fills a private WCountBox and then
/// publishes every row of it under an exclusive lock, so results are
/// identical to the unshared path.
class WCountTable {
public:
    explicit WCountTable(std::uint64_t q);

    [[nodiscard]] std::uint64_t modulus() const noexcept { return q_; }

    /// f(counts, residue) with counts indexed by residue 1..q-1 at offsets 0..q-2.
    [[nodiscard]] BigCount ways(std::span<const std::uint64_t> counts, std::uint64_t residue);

    /// |W^(q)_r|; zero for the zero vector.
    [[nodiscard]] BigCount count(const ResidueProfile& rp);

    [[nodiscard]] std::size_t size() const;

private:
    struct VectorHash {
        std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept;
    };

    std::uint64_t q_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::vector<std::uint64_t>, std::vector<BigCount>, VectorHash> rows_;
};

/// |W^(q)_r| with a private memo. Requires q >= 2 and r0 = 0; zero for the zero vector.
[[nodiscard]] BigCount w_count(const ResidueProfile& rp);

/// c^(q)_lambda. Zero for the empty partition and for q = 1.
[[nodiscard]] BigCount c_count(const Partition& lambda, std::uint64_t q);
[[nodiscard]] BigCount c_count(const Partition& lambda, std::uint64_t q, WCountTable& shared);

}  // namespace qcum
