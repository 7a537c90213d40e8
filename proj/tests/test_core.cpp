#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "qcum/core.hpp"

using namespace qcum;

namespace {

Composition random_composition(std::mt19937_64& rng, std::size_t max_len, Part max_part) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<Part> part(1, max_part);
    std::vector<Part> parts(len(rng));
    for (Part& p : parts) p = part(rng);
    return Composition(std::move(parts));
}

}  // namespace

TEST_CASE("composition construction rejects zero parts and oversize totals") {
    CHECK_THROWS_AS(Composition({2, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Composition({kMaxTotalSize, 1}), std::invalid_argument);
    CHECK(Composition({kMaxTotalSize}).size() == kMaxTotalSize);
    CHECK(Composition{}.empty());
    CHECK(Composition{}.length() == 0);
}

TEST_CASE("partition requires weakly decreasing parts") {
    CHECK_NOTHROW(Partition({3, 2, 2, 1}));
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK(Partition::from_unsorted({1, 3, 2, 3}) == Partition({3, 3, 2, 1}));
}

TEST_CASE("partial_sums") {
    CHECK(partial_sums(Composition{2, 1, 1}) == std::vector<Part>{2, 3, 4});
    CHECK(partial_sums(Composition{}).empty());
    CHECK(partial_sums(Composition{3, 2, 2}) == std::vector<Part>{3, 5, 7});
}

TEST_CASE("concatenate") {
    CHECK(concatenate(Composition{2, 1}, Composition{3}) == Composition{2, 1, 3});
    CHECK(concatenate(Composition{}, Composition{1, 1}) == Composition{1, 1});
    CHECK(concatenate(Composition{1}, Composition{}) == Composition{1});
}

TEST_CASE("part_multiplicity") {
    CHECK(part_multiplicity(Composition{3, 2, 2}, 2) == 2);
    CHECK(part_multiplicity(Composition{3, 2, 2}, 5) == 0);
    CHECK(part_multiplicity(Composition{}, 1) == 0);
    CHECK_THROWS_AS((void)part_multiplicity(Composition{1}, 0), std::invalid_argument);
}

TEST_CASE("is_cumulative") {
    CHECK(is_cumulative(Composition{1, 1, 2}, 3));
    CHECK_FALSE(is_cumulative(Composition{2, 1, 1}, 3));
    CHECK_FALSE(is_cumulative(Composition{5}, 1));
    CHECK_FALSE(is_cumulative(Composition{}, 7));  // the empty composition never counts
    CHECK_THROWS_AS((void)is_cumulative(Composition{1}, 0), std::invalid_argument);
}

TEST_CASE("residue_profile") {
    auto rp = residue_profile(Composition{6, 3, 1}, 3);
    CHECK(rp.r0() == 2);
    CHECK(rp.residues()[0] == 1);
    CHECK(rp.residues()[1] == 0);

    CHECK(residue_profile(Composition{3, 2, 2}, 5) == ResidueProfile(5, 0, {0, 2, 1, 0}));
    CHECK(residue_profile(Composition{}, 4) == ResidueProfile(4, 0, {0, 0, 0}));
    CHECK(residue_profile(Composition{4, 9}, 1) == ResidueProfile(1, 2, {}));
    CHECK_THROWS_AS((void)residue_profile(Composition{1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(ResidueProfile(3, 0, {1}), std::invalid_argument);
}

TEST_CASE("profile statistics") {
    CHECK(profile_norm(ResidueProfile(3, 0, {2, 1})) == 4);
    CHECK(profile_norm(ResidueProfile(3, 0, {3, 3})) == 9);
    CHECK(profile_norm(ResidueProfile(5, 0, {0, 0, 0, 0})) == 0);

    CHECK(profile_weight(ResidueProfile(3, 0, {2, 1})) == 3);
    CHECK(profile_weight(ResidueProfile(3, 0, {4, 0})) == 2);
    CHECK(profile_weight(ResidueProfile(5, 0, {7, 0, 0, 0})) == 4);
    CHECK_THROWS_AS((void)profile_weight(ResidueProfile(1, 3, {})), std::domain_error);

    CHECK(profile_max(ResidueProfile(3, 0, {2, 1})) == 2);
    CHECK(profile_max(ResidueProfile(5, 0, {0, 1, 0, 0})) == 1);
    CHECK(profile_max(ResidueProfile(4, 7, {0, 0, 0})) == 0);
    CHECK_THROWS_AS((void)profile_max(ResidueProfile(1, 3, {})), std::domain_error);
}

TEST_CASE("scale_profile") {
    CHECK(scale_profile(ResidueProfile(5, 0, {2, 1, 0, 0}), 2) == ResidueProfile(5, 0, {0, 2, 0, 1}));
    CHECK(scale_profile(ResidueProfile(3, 0, {2, 1}), 1) == ResidueProfile(3, 0, {2, 1}));
    CHECK(scale_profile(ResidueProfile(3, 0, {2, 1}), 2) == ResidueProfile(3, 0, {1, 2}));
    CHECK(scale_profile(ResidueProfile(7, 4, {1, 0, 0, 0, 0, 0}), 3).r0() == 4);
    CHECK_THROWS_AS((void)scale_profile(ResidueProfile(6, 0, {1, 0, 0, 0, 0}), 2), std::domain_error);
    CHECK_THROWS_AS((void)scale_profile(ResidueProfile(5, 0, {1, 0, 0, 0}), 0), std::domain_error);
    CHECK_THROWS_AS((void)scale_profile(ResidueProfile(5, 0, {1, 0, 0, 0}), 6), std::domain_error);
}

TEST_CASE("scale_composition") {
    CHECK(scale_composition(Composition{1, 1, 2}, 2, 3) == Composition{2, 2, 1});
    CHECK(scale_composition(Composition{1}, 1, 5) == Composition{1});
    CHECK(scale_composition(Composition{2, 3}, 3, 7) == Composition{6, 2});
    CHECK_THROWS_AS((void)scale_composition(Composition{3}, 1, 3), std::domain_error);
    CHECK_THROWS_AS((void)scale_composition(Composition{4}, 1, 3), std::domain_error);
    CHECK_THROWS_AS((void)scale_composition(Composition{1}, 2, 4), std::domain_error);
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(2, 5) == 3);
    CHECK(mod_inverse(1, 11) == 1);
    CHECK(mod_inverse(4, 7) == 2);
    CHECK(mod_inverse(5, 6) == 5);
    CHECK(mod_inverse(12, 5) == 3);  // reduced first
    CHECK_THROWS_AS((void)mod_inverse(2, 4), std::domain_error);
    CHECK_THROWS_AS((void)mod_inverse(1, 1), std::domain_error);

    for (std::uint64_t q = 2; q <= 40; ++q) {
        for (std::uint64_t a = 1; a < q; ++a) {
            bool coprime = true;
            for (std::uint64_t d = 2; d <= a; ++d) coprime = coprime && !(a % d == 0 && q % d == 0);
            if (!coprime) continue;
            const std::uint64_t b = mod_inverse(a, q);
            CHECK(b >= 1);
            CHECK(b < q);
            CHECK(a * b % q == 1);
        }
    }
}

TEST_CASE("is_prime") {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = 0; n < 30; ++n) {
        if (is_prime(n)) primes.push_back(n);
    }
    CHECK(primes == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("property: scaling preserves cumulativity and permutes the profile") {
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 4000; ++trial) {
        const std::uint64_t q = 2 + rng() % 11;
        std::vector<Part> parts(rng() % 9);
        for (Part& p : parts) p = 1 + rng() % (q - 1);
        const Composition delta(std::move(parts));
        for (std::uint64_t a = 1; a < q; ++a) {
            bool invertible = true;
            for (std::uint64_t d = 2; d <= a; ++d) invertible = invertible && !(a % d == 0 && q % d == 0);
            if (!invertible) continue;
            const Composition image = scale_composition(delta, a, q);
            CHECK(image.length() == delta.length());
            CHECK(is_cumulative(delta, q) == is_cumulative(image, q));
            CHECK(residue_profile(image, q) == scale_profile(residue_profile(delta, q), a));
            const std::uint64_t b = mod_inverse(a, q);
            const ResidueProfile rp = residue_profile(delta, q);
            CHECK(scale_profile(scale_profile(rp, a), b) == rp);
            CHECK(scale_composition(image, b, q) == delta);
        }
    }
}

TEST_CASE("property: profile totals and concatenated partial sums") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 2000; ++trial) {
        const Composition delta = random_composition(rng, 8, 20);
        const Composition eta = random_composition(rng, 8, 20);
        const std::uint64_t q = 1 + rng() % 9;
        CHECK(residue_profile(delta, q).total_parts() == delta.length());

        std::vector<Part> expected = partial_sums(delta);
        for (Part s : partial_sums(eta)) expected.push_back(delta.size() + s);
        CHECK(partial_sums(concatenate(delta, eta)) == expected);
        if (!delta.empty()) CHECK(partial_sums(delta).back() == delta.size());
    }
}
