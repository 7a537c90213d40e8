#include "qcum/enumerate.hpp"

#include <algorithm>

namespace qcum {

PartitionStream::PartitionStream(std::uint64_t n) {
    if (n > kMaxTotalSize) throw std::invalid_argument("partition size exceeds 2^32");
    if (n > 0) parts_.push_back(n);
}

std::optional<Partition> PartitionStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        return Partition(parts_);
    }
    // Rightmost part that can still be split.
    auto it = std::find_if(parts_.rbegin(), parts_.rend(), [](Part p) { return p > 1; });
    if (it == parts_.rend()) {
        done_ = true;
        return std::nullopt;
    }
    const auto k = static_cast<std::size_t>(std::distance(it, parts_.rend())) - 1;
    Part rest = static_cast<Part>(parts_.size() - k);  // trailing ones plus the unit taken from parts_[k]
    const Part cap = --parts_[k];
    parts_.resize(k + 1);
    while (rest > 0) {
        const Part p = std::min(cap, rest);
        parts_.push_back(p);
        rest -= p;
    }
    return Partition(parts_);
}

PartitionStream partitions_of(std::uint64_t n) { return PartitionStream(n); }

RearrangementStream::RearrangementStream(const Partition& lambda)
    : current_(lambda.parts().rbegin(), lambda.parts().rend()) {}

std::optional<Composition> RearrangementStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
    } else if (!std::next_permutation(current_.begin(), current_.end())) {
        done_ = true;
        return std::nullopt;
    }
    return Composition(current_);
}

std::vector<Composition> rearrangements(const Partition& lambda) {
    std::vector<Composition> out;
    RearrangementStream stream(lambda);
    while (auto delta = stream.next()) out.push_back(std::move(*delta));
    return out;
}

std::vector<Composition> cumulative_rearrangements(const Partition& lambda, std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("modulus must be at least 1");
    std::vector<Composition> out;
    RearrangementStream stream(lambda);
    while (auto delta = stream.next()) {
        if (is_cumulative(*delta, q)) out.push_back(std::move(*delta));
    }
    return out;
}

BigCount brute_c(const Partition& lambda, std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("modulus must be at least 1");
    std::uint64_t count = 0;
    RearrangementStream stream(lambda);
    while (auto delta = stream.next()) {
        if (is_cumulative(*delta, q)) ++count;
    }
    return BigCount(count);
}

Partition reduced_partition(const ResidueProfile& rp) {
    if (rp.r0() != 0) throw std::invalid_argument("reduced partition needs r0 = 0");
    std::vector<Part> parts;
    for (std::uint64_t i = rp.modulus() - 1; i >= 1; --i) parts.insert(parts.end(), rp.at(i), i);
    return Partition(std::move(parts));
}

namespace detail {

void check_walk_profile(const ResidueProfile& rp) {
    if (rp.modulus() < 2) throw std::invalid_argument("pattern enumeration needs q >= 2");
    if (rp.modulus() > kMaxWalkModulus) throw std::invalid_argument("pattern enumeration supports q <= 64");
    if (rp.r0() != 0) throw std::invalid_argument("pattern enumeration needs r0 = 0");
}

}  // namespace detail

namespace {

struct Collect {
    std::vector<Composition> out;
    void enter(Part, std::uint64_t) {}
    void leave() {}
    void complete(std::span<const Part> parts) { out.emplace_back(std::vector<Part>(parts.begin(), parts.end())); }
};

struct Tally {
    std::uint64_t count = 0;
    void enter(Part, std::uint64_t) {}
    void leave() {}
    void complete(std::span<const Part>) { ++count; }
};

}  // namespace

std::vector<Composition> brute_w(const ResidueProfile& rp) {
    Collect collect;
    walk_cumulative_patterns(rp, collect);
    return std::move(collect.out);
}

std::uint64_t brute_w_size(const ResidueProfile& rp) {
    Tally tally;
    walk_cumulative_patterns(rp, tally);
    return tally.count;
}

}  // namespace qcum
