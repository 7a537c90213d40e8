#pragma once

// Deciding whether c^(p)_lambda is nonzero without counting, and building an
// explicit q'-cumulative rearrangement when one exists.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qcum/core.hpp"

namespace qcum {

/// Outcome of the maximizer test for one index a with r_a = max r(lambda).
struct MaximizerCheck {
    std::uint64_t a = 0;
    std::uint64_t b = 0;               // inverse of a modulo p
    std::uint64_t scaled_weight = 0;   // |^b r(lambda)|_p
    bool passed = false;               // max r(lambda) <= scaled_weight

    friend bool operator==(const MaximizerCheck&, const MaximizerCheck&) = default;
};

struct ExistenceVerdict {
    bool nonzero = false;
    bool size_divisible = false;  // p divides |lambda|
    std::uint64_t max_residue_count = 0;
    std::vector<MaximizerCheck> checked_maximizers;

    [[nodiscard]] bool any_maximizer_passed() const noexcept;
};

enum class WitnessMethod { lemma1_construction, dp_guided_search, none };

[[nodiscard]] std::string_view to_string(WitnessMethod method) noexcept;

struct WitnessReport {
    bool exists = false;
    std::optional<Composition> witness;
    WitnessMethod method = WitnessMethod::none;
};

/// For a profile with r0 = 0 and r_1 = max r: W^(q)_r is nonempty iff
/// q does not divide ||r|| and max r <= |r|_q.
/// Throws std::invalid_argument when q < 2, r0 != 0 or r_1 != max r.
[[nodiscard]] bool lemma1_nonempty(const ResidueProfile& rp);

/// Nonzero test for c^(p)_lambda, p prime. Every maximizer a of r(lambda) is
/// tried with b = a^{-1} mod p; the verdict holds iff p does not divide
/// |lambda| and some maximizer satisfies max r <= |^b r|_p.
/// Throws std::domain_error for non-prime p.
[[nodiscard]] ExistenceVerdict theorem1_nonzero(const Partition& lambda, std::uint64_t p);

/// Cheap sufficient condition: p does not divide |lambda| and the positive
/// maximum of r(lambda) is attained at two or more residues.
[[nodiscard]] bool remark_sufficient(const Partition& lambda, std::uint64_t p);

struct PatternResult {
    std::optional<Composition> pattern;
    WitnessMethod method = WitnessMethod::none;
};

/// A member of W^(q)_r built by peeling suffixes off r: append a single b whose
/// residue differs from ||r||, append (b,1), or close with the chain
/// (1^{q-1}) # (b,1^{q-b})^{r_b-1} # (b,1^s); the base is (1^{r_1}).
/// Each reduced profile is re-validated, and when a step would leave the valid
/// region the remaining prefix comes from DP-guided greedy search instead.
/// Preconditions as for lemma1_nonempty.
[[nodiscard]] PatternResult build_pattern(const ResidueProfile& rp);

/// build_pattern without the provenance tag.
[[nodiscard]] std::optional<Composition> witness_pattern(const ResidueProfile& rp);

/// Lexicographically smallest member of W^(q)_r, chosen part by part as the
/// smallest class whose removal leaves a completable state. Works for any q >= 2.
[[nodiscard]] std::optional<Composition> dp_guided_pattern(const ResidueProfile& rp);

/// Replaces each residue-i slot of a pattern with an actual part of lambda
/// congruent to i (largest first within each class) and appends the parts
/// divisible by q in descending order.
[[nodiscard]] Composition lift_pattern(const Composition& pattern, const Partition& lambda, std::uint64_t q);

/// A q'-cumulative rearrangement of lambda, or none iff c^(q)_lambda = 0.
[[nodiscard]] WitnessReport witness(const Partition& lambda, std::uint64_t q);

}  // namespace qcum
