#include "qcum/core.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace qcum {

namespace {

__extension__ typedef __int128 Wide;
__extension__ typedef unsigned __int128 UWide;

void require_modulus(std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("modulus must be at least 1");
}

void require_invertible(std::uint64_t a, std::uint64_t q) {
    if (q < 2 || std::gcd(a % q, q) != 1) {
        throw std::domain_error("multiplier " + std::to_string(a) + " is not invertible modulo " +
                                std::to_string(q));
    }
}

}  // namespace

Composition::Composition(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (Part p : parts_) {
        if (p == 0) throw std::invalid_argument("composition parts must be positive");
        if (p > kMaxTotalSize - size_) throw std::invalid_argument("composition size exceeds 2^32");
        size_ += p;
    }
}

Composition::Composition(std::initializer_list<Part> parts) : Composition(std::vector<Part>(parts)) {}

Partition::Partition(std::vector<Part> parts) : composition_(std::move(parts)) {
    auto ps = composition_.parts();
    if (std::adjacent_find(ps.begin(), ps.end(), std::less<>{}) != ps.end()) {
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

Partition Partition::from_unsorted(std::vector<Part> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>{});
    return Partition(Composition(std::move(parts)));
}

ResidueProfile::ResidueProfile(std::uint64_t q, std::uint64_t r0, std::vector<std::uint64_t> residues)
    : q_(q), r0_(r0), r_(std::move(residues)) {
    require_modulus(q);
    if (r_.size() != q - 1) throw std::invalid_argument("residue vector must have q-1 entries");
}

std::uint64_t ResidueProfile::at(std::uint64_t i) const {
    if (i == 0 || i >= q_) throw std::out_of_range("residue index out of range");
    return r_[i - 1];
}

std::uint64_t ResidueProfile::total_parts() const noexcept {
    return std::accumulate(r_.begin(), r_.end(), r0_);
}

std::vector<Part> partial_sums(const Composition& delta) {
    std::vector<Part> sums(delta.length());
    std::partial_sum(delta.parts().begin(), delta.parts().end(), sums.begin());
    return sums;
}

Composition concatenate(const Composition& delta, const Composition& eta) {
    std::vector<Part> parts(delta.parts().begin(), delta.parts().end());
    parts.insert(parts.end(), eta.parts().begin(), eta.parts().end());
    return Composition(std::move(parts));
}

std::uint64_t part_multiplicity(const Composition& delta, Part d) {
    if (d == 0) throw std::invalid_argument("part value must be at least 1");
    return static_cast<std::uint64_t>(std::count(delta.parts().begin(), delta.parts().end(), d));
}

bool is_cumulative(std::span<const Part> parts, std::uint64_t q) {
    require_modulus(q);
    if (parts.empty()) return false;
    std::uint64_t residue = 0;
    for (Part p : parts) {
        residue = (residue + p % q) % q;
        if (residue == 0) return false;
    }
    return true;
}

bool is_cumulative(const Composition& delta, std::uint64_t q) { return is_cumulative(delta.parts(), q); }

ResidueProfile residue_profile(const Composition& delta, std::uint64_t q) {
    require_modulus(q);
    std::uint64_t r0 = 0;
    std::vector<std::uint64_t> r(q - 1, 0);
    for (Part p : delta.parts()) {
        const std::uint64_t i = p % q;
        if (i == 0) {
            ++r0;
        } else {
            ++r[i - 1];
        }
    }
    return ResidueProfile(q, r0, std::move(r));
}

std::uint64_t profile_norm(const ResidueProfile& rp) {
    std::uint64_t norm = 0;
    auto r = rp.residues();
    for (std::size_t k = 0; k < r.size(); ++k) norm += (k + 1) * r[k];
    return norm;
}

std::uint64_t profile_weight(const ResidueProfile& rp) {
    const std::uint64_t q = rp.modulus();
    if (q == 1) throw std::domain_error("|r|_q is undefined for q = 1");
    std::uint64_t weight = q - 1;
    for (std::uint64_t i = 2; i < q; ++i) weight += (q - i) * rp.at(i);
    return weight;
}

std::uint64_t profile_max(const ResidueProfile& rp) {
    if (rp.modulus() == 1) throw std::domain_error("max r is undefined for q = 1");
    return std::ranges::max(rp.residues());
}

ResidueProfile scale_profile(const ResidueProfile& rp, std::uint64_t a) {
    const std::uint64_t q = rp.modulus();
    if (a == 0 || a >= q) throw std::domain_error("multiplier must lie in 1..q-1");
    require_invertible(a, q);
    std::vector<std::uint64_t> scaled(q - 1, 0);
    for (std::uint64_t i = 1; i < q; ++i) scaled[(a * i) % q - 1] = rp.at(i);
    return ResidueProfile(q, rp.r0(), std::move(scaled));
}

std::uint64_t scale_part(Part x, std::uint64_t a, std::uint64_t q) {
    require_invertible(a, q);
    if (x % q == 0) throw std::domain_error("part divisible by the modulus cannot be scaled");
    const auto product = static_cast<UWide>(a % q) * (x % q);
    return static_cast<std::uint64_t>(product % q);
}

Composition scale_composition(const Composition& delta, std::uint64_t a, std::uint64_t q) {
    require_invertible(a, q);
    std::vector<Part> scaled;
    scaled.reserve(delta.length());
    for (Part p : delta.parts()) {
        if (p >= q) throw std::domain_error("scale_composition requires parts in 1..q-1");
        scaled.push_back(scale_part(p, a, q));
    }
    return Composition(std::move(scaled));
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t q) {
    require_invertible(a, q);
    // Extended Euclid on (a mod q, q), tracking only the coefficient of a.
    Wide old_r = a % q, r = q;
    Wide old_s = 1, s = 0;
    while (r != 0) {
        const Wide quotient = old_r / r;
        old_r = std::exchange(r, old_r - quotient * r);
        old_s = std::exchange(s, old_s - quotient * s);
    }
    const Wide m = q;
    return static_cast<std::uint64_t>(((old_s % m) + m) % m);
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::string to_string(std::span<const Part> parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(parts[i]);
    }
    return out;
}

}  // namespace qcum
