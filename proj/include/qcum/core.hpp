#pragma once

/**
 * @file core.hpp
 * @brief Compositions, partitions and residue profiles.
 *
 * A composition is a finite sequence of positive parts; a partition is a
 * weakly decreasing composition. A composition is q'-cumulative when none of
 * its partial sums is divisible by q. The residue profile of a composition
 * records, for a modulus q, how many parts fall into each residue class.
 *
 * All values are immutable once built and may be shared between threads.
 */

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcum {

using Part = std::uint64_t;

/// Exact nonnegative count.
using BigCount = boost::multiprecision::cpp_int;

/// Largest total size accepted for a composition; keeps 64-bit partial sums exact.
inline constexpr Part kMaxTotalSize = Part{1} << 32;

class Composition {
public:
    Composition() = default;
    /// Throws std::invalid_argument if a part is zero or the total exceeds kMaxTotalSize.
    explicit Composition(std::vector<Part> parts);
    Composition(std::initializer_list<Part> parts);

    [[nodiscard]] std::span<const Part> parts() const noexcept { return parts_; }
    [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    /// |delta|, the sum of the parts.
    [[nodiscard]] Part size() const noexcept { return size_; }
    [[nodiscard]] Part operator[](std::size_t i) const { return parts_[i]; }

    friend bool operator==(const Composition& a, const Composition& b) noexcept {
        return a.parts_ == b.parts_;
    }
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) noexcept {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<Part> parts_;
    Part size_ = 0;
};

class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless the parts are positive and weakly decreasing.
    explicit Partition(std::vector<Part> parts);
    Partition(std::initializer_list<Part> parts);

    /// Sorts the parts into weakly decreasing order first.
    static Partition from_unsorted(std::vector<Part> parts);

    [[nodiscard]] const Composition& composition() const noexcept { return composition_; }
    [[nodiscard]] std::span<const Part> parts() const noexcept { return composition_.parts(); }
    [[nodiscard]] std::size_t length() const noexcept { return composition_.length(); }
    [[nodiscard]] bool empty() const noexcept { return composition_.empty(); }
    [[nodiscard]] Part size() const noexcept { return composition_.size(); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    explicit Partition(Composition c) : composition_(std::move(c)) {}
    Composition composition_;
};

/// Residue-class part counts for a modulus q: r0 parts divisible by q and
/// r_i parts congruent to i for 1 <= i <= q-1.
class ResidueProfile {
public:
    /// Throws std::invalid_argument if q == 0 or residues.size() != q - 1.
    ResidueProfile(std::uint64_t q, std::uint64_t r0, std::vector<std::uint64_t> residues);

    [[nodiscard]] std::uint64_t modulus() const noexcept { return q_; }
    [[nodiscard]] std::uint64_t r0() const noexcept { return r0_; }
    /// r_1..r_{q-1}, stored at offsets 0..q-2.
    [[nodiscard]] std::span<const std::uint64_t> residues() const noexcept { return r_; }
    /// r_i for 1 <= i <= q-1; throws std::out_of_range otherwise.
    [[nodiscard]] std::uint64_t at(std::uint64_t i) const;
    /// r0 + sum of r_i.
    [[nodiscard]] std::uint64_t total_parts() const noexcept;

    friend bool operator==(const ResidueProfile&, const ResidueProfile&) = default;

private:
    std::uint64_t q_;
    std::uint64_t r0_;
    std::vector<std::uint64_t> r_;
};

[[nodiscard]] std::vector<Part> partial_sums(const Composition& delta);

[[nodiscard]] Composition concatenate(const Composition& delta, const Composition& eta);

/// n_d(delta). Throws std::invalid_argument if d == 0.
[[nodiscard]] std::uint64_t part_multiplicity(const Composition& delta, Part d);

/// True iff delta is nonempty and no partial sum is divisible by q.
/// The empty composition is never cumulative. Throws if q == 0.
[[nodiscard]] bool is_cumulative(const Composition& delta, std::uint64_t q);
[[nodiscard]] bool is_cumulative(std::span<const Part> parts, std::uint64_t q);

[[nodiscard]] ResidueProfile residue_profile(const Composition& delta, std::uint64_t q);
[[nodiscard]] inline ResidueProfile residue_profile(const Partition& lambda, std::uint64_t q) {
    return residue_profile(lambda.composition(), q);
}

/// ||r|| = sum of i * r_i.
[[nodiscard]] std::uint64_t profile_norm(const ResidueProfile& rp);

/// |r|_q = (q-1) + sum_{i>=2} (q-i) r_i. Throws std::domain_error for q == 1.
[[nodiscard]] std::uint64_t profile_weight(const ResidueProfile& rp);

/// max(r_1, ..., r_{q-1}); r0 is ignored. Throws std::domain_error for q == 1.
[[nodiscard]] std::uint64_t profile_max(const ResidueProfile& rp);

/// The profile ^a r with r'_j = r_i whenever j == a*i (mod q).
/// Requires 1 <= a <= q-1 and gcd(a, q) == 1.
[[nodiscard]] ResidueProfile scale_profile(const ResidueProfile& rp, std::uint64_t a);

/// a*x mod q mapped into 1..q-1. Requires gcd(a, q) == 1 and x not divisible by q.
[[nodiscard]] std::uint64_t scale_part(Part x, std::uint64_t a, std::uint64_t q);

/// Part-wise multiplication by a mod q with representatives in 1..q-1.
/// Every part must lie in 1..q-1 and a must be invertible mod q.
[[nodiscard]] Composition scale_composition(const Composition& delta, std::uint64_t a, std::uint64_t q);

/// The b in 1..q-1 with a*b == 1 (mod q). Throws std::domain_error unless q >= 2 and gcd(a, q) == 1.
[[nodiscard]] std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t q);

[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

/// "3,1,1"-style text; the empty composition prints as an empty string.
[[nodiscard]] std::string to_string(std::span<const Part> parts, char sep = ',');

}  // namespace qcum
