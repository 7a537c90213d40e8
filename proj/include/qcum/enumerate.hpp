#pragma once

// Brute-force ground truth: partitions of n, distinct rearrangements of a
// partition, and exhaustive enumeration of q'-cumulative rearrangements.
// Everything here is deliberately naive and serves as the oracle for the
// counting and decision modules.

#include <bit>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qcum/core.hpp"

namespace qcum {

/// Lazy stream of the partitions of n in reverse-lexicographic order:
/// (n), (n-1,1), ..., (1^n). Single consumer.
class PartitionStream {
public:
    explicit PartitionStream(std::uint64_t n);

    /// Next partition, or nullopt once exhausted.
    std::optional<Partition> next();

    class iterator {
    public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(PartitionStream* stream) : stream_(stream) { ++*this; }
        const Partition& operator*() const { return *current_; }
        const Partition* operator->() const { return &*current_; }
        iterator& operator++() {
            current_ = stream_->next();
            return *this;
        }
        void operator++(int) { ++*this; }
        bool operator==(std::default_sentinel_t) const { return !current_.has_value(); }

    private:
        PartitionStream* stream_ = nullptr;
        std::optional<Partition> current_;
    };

    iterator begin() { return iterator(this); }
    std::default_sentinel_t end() const { return {}; }

private:
    std::vector<Part> parts_;
    bool started_ = false;
    bool done_ = false;
};

[[nodiscard]] PartitionStream partitions_of(std::uint64_t n);

/// Lazy stream of the distinct rearrangements of a partition in lexicographic
/// order, produced as successive multiset permutations (no duplicates are ever
/// generated).
class RearrangementStream {
public:
    explicit RearrangementStream(const Partition& lambda);
    std::optional<Composition> next();

private:
    std::vector<Part> current_;
    bool started_ = false;
    bool done_ = false;
};

/// All of C(lambda), lexicographic. C(empty) = {empty}.
[[nodiscard]] std::vector<Composition> rearrangements(const Partition& lambda);

/// The q'-cumulative members of C(lambda), lexicographic.
[[nodiscard]] std::vector<Composition> cumulative_rearrangements(const Partition& lambda, std::uint64_t q);

/// c^(q)_lambda by exhaustive enumeration of C(lambda).
[[nodiscard]] BigCount brute_c(const Partition& lambda, std::uint64_t q);

/// Largest modulus supported by the pattern walker.
inline constexpr std::uint64_t kMaxWalkModulus = 64;

/// The multiset mu = ((q-1)^{r_{q-1}}, ..., 1^{r_1}) for a profile with r0 = 0.
[[nodiscard]] Partition reduced_partition(const ResidueProfile& rp);

namespace detail {

void check_walk_profile(const ResidueProfile& rp);

template <class Visitor>
class PatternWalk {
public:
    PatternWalk(const ResidueProfile& rp, Visitor& visitor) : q_(rp.modulus()), visitor_(visitor) {
        for (std::uint64_t i = 1; i < q_; ++i) {
            counts_[i] = rp.at(i);
            remaining_ += counts_[i];
            if (counts_[i] != 0) available_ |= std::uint64_t{1} << i;
        }
        for (std::uint64_t s = 0; s < q_; ++s) {
            allowed_[s] = 0;
            for (std::uint64_t i = 1; i < q_; ++i) {
                if ((s + i) % q_ != 0) allowed_[s] |= std::uint64_t{1} << i;
            }
        }
        path_.resize(remaining_);
    }

    void run() {
        if (remaining_ != 0) descend(0, 0);
    }

private:
    void descend(std::uint64_t residue, std::size_t depth) {
        std::uint64_t candidates = available_ & allowed_[residue];
        while (candidates != 0) {
            const auto i = static_cast<std::uint64_t>(std::countr_zero(candidates));
            candidates &= candidates - 1;
            const std::uint64_t next = residue + i >= q_ ? residue + i - q_ : residue + i;
            path_[depth] = i;
            visitor_.enter(i, next);
            if (remaining_ == 1) {
                visitor_.complete(std::span<const Part>(path_));
            } else {
                if (--counts_[i] == 0) available_ &= ~(std::uint64_t{1} << i);
                --remaining_;
                descend(next, depth + 1);
                ++remaining_;
                if (counts_[i]++ == 0) available_ |= std::uint64_t{1} << i;
            }
            visitor_.leave();
        }
    }

    std::uint64_t q_;
    Visitor& visitor_;
    std::uint64_t counts_[kMaxWalkModulus] = {};
    std::uint64_t allowed_[kMaxWalkModulus] = {};
    std::uint64_t available_ = 0;
    std::uint64_t remaining_ = 0;
    std::vector<Part> path_;
};

}  // namespace detail

/// Depth-first walk over W^(q)_r, i.e. every q'-cumulative arrangement of
/// reduced_partition(rp), in lexicographic order. A prefix whose partial sum
/// is divisible by q is cut immediately since no extension of it qualifies.
///
/// The visitor receives enter(part, prefix_residue) when a part is appended,
/// leave() when it is removed, and complete(parts) for every member of W.
/// Requires 2 <= q <= kMaxWalkModulus and r0 == 0.
template <class Visitor>
void walk_cumulative_patterns(const ResidueProfile& rp, Visitor& visitor) {
    detail::check_walk_profile(rp);
    detail::PatternWalk<Visitor>(rp, visitor).run();
}

/// W^(q)_r, lexicographic.
[[nodiscard]] std::vector<Composition> brute_w(const ResidueProfile& rp);

/// |W^(q)_r| by walking every member.
[[nodiscard]] std::uint64_t brute_w_size(const ResidueProfile& rp);

}  // namespace qcum
