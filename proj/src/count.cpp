#include "qcum/count.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qcum {

namespace {

void check_w_profile(const ResidueProfile& rp) {
    if (rp.modulus() < 2) throw std::invalid_argument("w_count needs q >= 2");
    if (rp.r0() != 0) throw std::invalid_argument("w_count needs r0 = 0");
}

bool is_zero(std::span<const std::uint64_t> counts) {
    return std::ranges::all_of(counts, [](std::uint64_t c) { return c == 0; });
}

// Divides out the multiplicities of the actual part values within each class.
BigCount multinomial_correction(const Partition& lambda, const ResidueProfile& rp) {
    BigCount numerator = factorial(rp.r0());
    for (std::uint64_t r : rp.residues()) numerator *= factorial(r);
    BigCount denominator = 1;
    auto parts = lambda.parts();
    for (auto it = parts.begin(); it != parts.end();) {
        auto run_end = std::find_if(it, parts.end(), [&](Part p) { return p != *it; });
        denominator *= factorial(static_cast<std::uint64_t>(run_end - it));
        it = run_end;
    }
    return numerator / denominator;
}

BigCount assemble(const Partition& lambda, const ResidueProfile& rp, const BigCount& w) {
    if (w == 0) return 0;
    return w * multinomial_correction(lambda, rp) *
           binomial(static_cast<std::int64_t>(lambda.length()) - 1, static_cast<std::int64_t>(rp.r0()));
}

}  // namespace

BigCount factorial(std::uint64_t n) {
    BigCount result = 1;
    for (std::uint64_t k = 2; k <= n; ++k) result *= k;
    return result;
}

BigCount binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigCount result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

WCountBox::WCountBox(std::uint64_t q, std::span<const std::uint64_t> top)
    : q_(q), top_(top.begin(), top.end()) {
    if (q < 2) throw std::invalid_argument("counting table needs q >= 2");
    if (top_.size() != q - 1) throw std::invalid_argument("count vector must have q-1 entries");

    std::uint64_t states = 1;
    for (std::uint64_t i = 1; i < q; ++i) {
        const std::uint64_t c = top_[i - 1];
        if (c == 0) continue;
        classes_.push_back(i);
        strides_.push_back(states);
        if (c + 1 > kMaxTableEntries / states) throw std::length_error("residue profile too large to count");
        states *= c + 1;
    }
    if (states > kMaxTableEntries / q) throw std::length_error("residue profile too large to count");

    table_.resize(states * q);
    std::vector<std::uint64_t> digits(classes_.size(), 0);
    for (std::uint64_t s = 0; s < q; ++s) table_[s] = 1;
    for (std::uint64_t index = 1; index < states; ++index) {
        // Mixed-radix increment; digits[k] counts remaining parts of class classes_[k].
        for (std::size_t k = 0; k < digits.size(); ++k) {
            if (digits[k] < top_[classes_[k] - 1]) {
                ++digits[k];
                break;
            }
            digits[k] = 0;
        }
        for (std::uint64_t s = 0; s < q; ++s) {
            BigCount& cell = table_[index * q + s];
            for (std::size_t k = 0; k < classes_.size(); ++k) {
                if (digits[k] == 0) continue;
                const std::uint64_t next = (s + classes_[k]) % q;
                if (next == 0) continue;
                cell += table_[(index - strides_[k]) * q + next];
            }
        }
    }
}

const BigCount& WCountBox::ways(std::span<const std::uint64_t> counts, std::uint64_t residue) const {
    if (counts.size() != q_ - 1 || residue >= q_) throw std::invalid_argument("state outside counting table");
    std::uint64_t index = 0;
    std::size_t k = 0;
    for (std::uint64_t i = 1; i < q_; ++i) {
        const std::uint64_t c = counts[i - 1];
        if (c > top_[i - 1]) throw std::invalid_argument("state outside counting table");
        if (top_[i - 1] != 0) index += c * strides_[k++];
    }
    return table_[index * q_ + residue];
}

std::size_t WCountTable::VectorHash::operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t x : v) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

WCountTable::WCountTable(std::uint64_t q) : q_(q) {
    if (q < 2) throw std::invalid_argument("counting table needs q >= 2");
}

BigCount WCountTable::ways(std::span<const std::uint64_t> counts, std::uint64_t residue) {
    if (counts.size() != q_ - 1 || residue >= q_) throw std::invalid_argument("state outside counting table");
    std::vector<std::uint64_t> key(counts.begin(), counts.end());
    {
        std::shared_lock lock(mutex_);
        if (auto it = rows_.find(key); it != rows_.end()) return it->second[residue];
    }

    WCountBox box(q_, counts);
    // Publish every sub-vector row of the box.
    std::map<std::vector<std::uint64_t>, std::vector<BigCount>> fresh;
    std::vector<std::uint64_t> sub(q_ - 1, 0);
    while (true) {
        std::vector<BigCount> row(q_);
        for (std::uint64_t s = 0; s < q_; ++s) row[s] = box.ways(sub, s);
        fresh.emplace(sub, std::move(row));
        std::size_t k = 0;
        for (; k < sub.size(); ++k) {
            if (sub[k] < counts[k]) {
                ++sub[k];
                break;
            }
            sub[k] = 0;
        }
        if (k == sub.size()) break;
    }
    BigCount result = fresh.at(key)[residue];
    std::unique_lock lock(mutex_);
    for (auto& [k, row] : fresh) rows_.try_emplace(k, std::move(row));
    return result;
}

BigCount WCountTable::count(const ResidueProfile& rp) {
    check_w_profile(rp);
    if (rp.modulus() != q_) throw std::invalid_argument("profile modulus does not match table");
    if (is_zero(rp.residues())) return 0;
    return ways(rp.residues(), 0);
}

std::size_t WCountTable::size() const {
    std::shared_lock lock(mutex_);
    return rows_.size();
}

BigCount w_count(const ResidueProfile& rp) {
    check_w_profile(rp);
    if (is_zero(rp.residues())) return 0;
    return WCountBox(rp.modulus(), rp.residues()).ways(rp.residues(), 0);
}

BigCount c_count(const Partition& lambda, std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("modulus must be at least 1");
    if (lambda.empty() || q == 1) return 0;
    const ResidueProfile rp = residue_profile(lambda, q);
    const BigCount w = w_count(ResidueProfile(q, 0, {rp.residues().begin(), rp.residues().end()}));
    return assemble(lambda, rp, w);
}

BigCount c_count(const Partition& lambda, std::uint64_t q, WCountTable& shared) {
    if (q == 0) throw std::invalid_argument("modulus must be at least 1");
    if (lambda.empty() || q == 1) return 0;
    if (shared.modulus() != q) throw std::invalid_argument("shared table modulus does not match");
    const ResidueProfile rp = residue_profile(lambda, q);
    const BigCount w = shared.count(ResidueProfile(q, 0, {rp.residues().begin(), rp.residues().end()}));
    return assemble(lambda, rp, w);
}

}  // namespace qcum
