#include "qcum/decide.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcum/count.hpp"

namespace qcum {

namespace {

void check_pattern_profile(const ResidueProfile& rp) {
    if (rp.modulus() < 2) throw std::invalid_argument("pattern construction needs q >= 2");
    if (rp.r0() != 0) throw std::invalid_argument("pattern construction needs r0 = 0");
    if (rp.at(1) != profile_max(rp)) throw std::invalid_argument("pattern construction needs r_1 = max r");
}

void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
}

// Conditions (i) and (ii) for a profile with r_1 = max r.
bool satisfies_conditions(const ResidueProfile& rp) {
    const std::uint64_t max = profile_max(rp);
    return rp.at(1) == max && profile_norm(rp) % rp.modulus() != 0 && max <= profile_weight(rp);
}

ResidueProfile with_counts(std::uint64_t q, std::vector<std::uint64_t> counts) {
    return ResidueProfile(q, 0, std::move(counts));
}

void append_run(std::vector<Part>& out, Part value, std::uint64_t times) { out.insert(out.end(), times, value); }

}  // namespace

bool ExistenceVerdict::any_maximizer_passed() const noexcept {
    return std::ranges::any_of(checked_maximizers, &MaximizerCheck::passed);
}

std::string_view to_string(WitnessMethod method) noexcept {
    switch (method) {
        case WitnessMethod::lemma1_construction: return "lemma1-construction";
        case WitnessMethod::dp_guided_search: return "dp-guided-search";
        case WitnessMethod::none: return "none";
    }
    return "none";
}

bool lemma1_nonempty(const ResidueProfile& rp) {
    check_pattern_profile(rp);
    return satisfies_conditions(rp);
}

ExistenceVerdict theorem1_nonzero(const Partition& lambda, std::uint64_t p) {
    require_prime(p);
    const ResidueProfile rp = residue_profile(lambda, p);
    ExistenceVerdict verdict;
    verdict.size_divisible = lambda.size() % p == 0;
    verdict.max_residue_count = profile_max(rp);
    for (std::uint64_t a = 1; a < p; ++a) {
        if (rp.at(a) != verdict.max_residue_count) continue;
        MaximizerCheck check;
        check.a = a;
        check.b = mod_inverse(a, p);
        check.scaled_weight = profile_weight(scale_profile(rp, check.b));
        check.passed = verdict.max_residue_count <= check.scaled_weight;
        verdict.checked_maximizers.push_back(check);
    }
    verdict.nonzero = !verdict.size_divisible && verdict.any_maximizer_passed();
    return verdict;
}

bool remark_sufficient(const Partition& lambda, std::uint64_t p) {
    require_prime(p);
    if (lambda.size() % p == 0) return false;
    const ResidueProfile rp = residue_profile(lambda, p);
    const std::uint64_t max = profile_max(rp);
    return max > 0 && std::ranges::count(rp.residues(), max) >= 2;
}

std::optional<Composition> dp_guided_pattern(const ResidueProfile& rp) {
    if (rp.modulus() < 2) throw std::invalid_argument("pattern search needs q >= 2");
    if (rp.r0() != 0) throw std::invalid_argument("pattern search needs r0 = 0");
    const std::uint64_t q = rp.modulus();
    std::vector<std::uint64_t> counts(rp.residues().begin(), rp.residues().end());
    const std::uint64_t length = rp.total_parts();
    if (length == 0) return std::nullopt;

    const WCountBox box(q, counts);
    if (box.ways(counts, 0) == 0) return std::nullopt;

    std::vector<Part> parts;
    parts.reserve(length);
    std::uint64_t residue = 0;
    for (std::uint64_t step = 0; step < length; ++step) {
        bool placed = false;
        for (std::uint64_t i = 1; i < q && !placed; ++i) {
            const std::uint64_t next = (residue + i) % q;
            if (counts[i - 1] == 0 || next == 0) continue;
            --counts[i - 1];
            if (box.ways(counts, next) > 0) {
                parts.push_back(i);
                residue = next;
                placed = true;
            } else {
                ++counts[i - 1];
            }
        }
        if (!placed) throw std::logic_error("DP-guided search reached a dead state");
    }
    return Composition(std::move(parts));
}

PatternResult build_pattern(const ResidueProfile& rp) {
    check_pattern_profile(rp);
    if (!satisfies_conditions(rp)) return {};

    const std::uint64_t q = rp.modulus();
    std::vector<std::uint64_t> r(rp.residues().begin(), rp.residues().end());
    auto at = [&r](std::uint64_t i) -> std::uint64_t& { return r[i - 1]; };

    // Suffix blocks appended after the pattern of the reduced profile, innermost last.
    std::vector<std::vector<Part>> suffixes;
    std::vector<Part> head;
    bool fell_back = false;

    while (true) {
        const ResidueProfile current = with_counts(q, r);
        const std::uint64_t weight = profile_weight(current);
        const std::uint64_t norm = profile_norm(current);

        if (weight == q - 1) {
            // Only residue-1 parts remain: (1^{r_1}).
            append_run(head, 1, at(1));
            break;
        }

        // Smallest b >= 2 present in r whose residue differs from ||r||.
        std::uint64_t lone = 0;
        for (std::uint64_t b = 2; b < q; ++b) {
            if (at(b) > 0 && b != norm % q) {
                lone = b;
                break;
            }
        }
        if (lone != 0) {
            --at(lone);
            if (!satisfies_conditions(with_counts(q, r))) {
                ++at(lone);
                fell_back = true;
                break;
            }
            suffixes.push_back({lone});
            continue;
        }

        std::vector<std::uint64_t> present;
        for (std::uint64_t b = 2; b < q; ++b) {
            if (at(b) > 0) present.push_back(b);
        }
        if (present.size() != 1) {
            fell_back = true;
            break;
        }
        const std::uint64_t b = present.front();

        if (at(1) + (q - b) <= weight) {
            --at(1);
            --at(b);
            if (!satisfies_conditions(with_counts(q, r))) {
                ++at(1);
                ++at(b);
                fell_back = true;
                break;
            }
            suffixes.push_back({b, 1});
            continue;
        }

        // Closed form: (1^{q-1}) # (b,1^{q-b})^{r_b - 1} # (b,1^s).
        const auto tail = static_cast<std::int64_t>(at(1)) -
                          static_cast<std::int64_t>((q - b) * (at(b) - 1)) - static_cast<std::int64_t>(q - 1);
        if (tail <= 0 || tail > static_cast<std::int64_t>(q - b)) {
            fell_back = true;
            break;
        }
        append_run(head, 1, q - 1);
        for (std::uint64_t k = 1; k < at(b); ++k) {
            head.push_back(b);
            append_run(head, 1, q - b);
        }
        head.push_back(b);
        append_run(head, 1, static_cast<std::uint64_t>(tail));
        break;
    }

    if (fell_back) {
        auto searched = dp_guided_pattern(with_counts(q, r));
        if (!searched) throw std::logic_error("valid residue profile has no cumulative arrangement");
        head.assign(searched->parts().begin(), searched->parts().end());
    }
    for (auto it = suffixes.rbegin(); it != suffixes.rend(); ++it) head.insert(head.end(), it->begin(), it->end());

    Composition pattern(std::move(head));
    if (!is_cumulative(pattern, q) || residue_profile(pattern, q) != rp) {
        return {dp_guided_pattern(rp), WitnessMethod::dp_guided_search};
    }
    return {std::move(pattern), fell_back ? WitnessMethod::dp_guided_search : WitnessMethod::lemma1_construction};
}

std::optional<Composition> witness_pattern(const ResidueProfile& rp) { return build_pattern(rp).pattern; }

Composition lift_pattern(const Composition& pattern, const Partition& lambda, std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("lifting needs q >= 2");
    std::vector<std::vector<Part>> by_residue(q);
    for (Part p : lambda.parts()) by_residue[p % q].push_back(p);  // descending within each class
    std::vector<std::size_t> used(q, 0);

    std::vector<Part> parts;
    parts.reserve(lambda.length());
    for (Part slot : pattern.parts()) {
        if (slot == 0 || slot >= q) throw std::invalid_argument("pattern parts must lie in 1..q-1");
        auto& bucket = by_residue[slot];
        if (used[slot] == bucket.size()) throw std::invalid_argument("pattern does not match the partition");
        parts.push_back(bucket[used[slot]++]);
    }
    for (std::uint64_t i = 1; i < q; ++i) {
        if (used[i] != by_residue[i].size()) throw std::invalid_argument("pattern does not match the partition");
    }
    parts.insert(parts.end(), by_residue[0].begin(), by_residue[0].end());
    return Composition(std::move(parts));
}

WitnessReport witness(const Partition& lambda, std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("witness needs q >= 2");
    if (lambda.empty()) return {};

    const ResidueProfile full = residue_profile(lambda, q);
    const ResidueProfile reduced(q, 0, {full.residues().begin(), full.residues().end()});

    std::optional<Composition> pattern;
    WitnessMethod method = WitnessMethod::dp_guided_search;
    if (is_prime(q)) {
        const ExistenceVerdict verdict = theorem1_nonzero(lambda, q);
        if (!verdict.nonzero) return {};
        const auto chosen = std::ranges::find_if(verdict.checked_maximizers, &MaximizerCheck::passed);
        // ^b r has the maximum at index 1; scaling by a carries its pattern back to r.
        PatternResult built = build_pattern(scale_profile(reduced, chosen->b));
        if (built.pattern) {
            pattern = scale_composition(*built.pattern, chosen->a, q);
            method = built.method;
        }
    }
    if (!pattern) pattern = dp_guided_pattern(reduced);
    if (!pattern) return {};

    Composition lifted = lift_pattern(*pattern, lambda, q);
    if (!is_cumulative(lifted, q)) throw std::logic_error("constructed witness is not cumulative");
    return {true, std::move(lifted), method};
}

}  // namespace qcum
