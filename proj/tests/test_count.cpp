#include <doctest.h>

#include <numeric>
#include <thread>
#include <vector>

#include "qcum/count.hpp"
#include "qcum/enumerate.hpp"

using namespace qcum;

namespace {

// Calls f on every vector of length q-1 with entries in 0..limit.
template <class F>
void for_each_vector(std::uint64_t q, std::uint64_t limit, F&& f) {
    std::vector<std::uint64_t> r(q - 1, 0);
    while (true) {
        f(ResidueProfile(q, 0, r));
        std::size_t k = 0;
        for (; k < r.size(); ++k) {
            if (++r[k] <= limit) break;
            r[k] = 0;
        }
        if (k == r.size()) return;
    }
}

}  // namespace

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(25).str() == "15511210043330985984000000");
    CHECK(binomial(2, 0) == 1);
    CHECK(binomial(1, 2) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
    for (std::int64_t n = 1; n <= 30; ++n) {
        for (std::int64_t k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}

TEST_CASE("w_count examples") {
    CHECK(w_count(ResidueProfile(3, 0, {2, 1})) == 1);
    CHECK(w_count(ResidueProfile(3, 0, {4, 0})) == 0);
    CHECK(w_count(ResidueProfile(5, 0, {1, 0, 0, 0})) == 1);
    CHECK(w_count(ResidueProfile(4, 0, {0, 0, 0})) == 0);  // empty composition excluded
    CHECK_THROWS_AS((void)w_count(ResidueProfile(1, 0, {})), std::invalid_argument);
    CHECK_THROWS_AS((void)w_count(ResidueProfile(3, 2, {1, 0})), std::invalid_argument);
}

TEST_CASE("w_count matches brute-force enumeration") {
    for (std::uint64_t q = 2; q <= 5; ++q) {
        for_each_vector(q, 4, [](const ResidueProfile& rp) { CHECK(w_count(rp) == brute_w_size(rp)); });
    }
    for_each_vector(6, 2, [](const ResidueProfile& rp) { CHECK(w_count(rp) == brute_w_size(rp)); });
}

TEST_CASE("w_count is invariant under index scaling") {
    for (std::uint64_t q = 2; q <= 7; ++q) {
        for_each_vector(q, q <= 5 ? 4 : 2, [q](const ResidueProfile& rp) {
            const BigCount base = w_count(rp);
            for (std::uint64_t a = 1; a < q; ++a) {
                if (std::gcd(a, q) != 1) continue;
                CHECK(w_count(scale_profile(rp, a)) == base);
            }
        });
    }
}

TEST_CASE("c_count examples") {
    CHECK(c_count(Partition{3, 1, 1}, 3) == 2);
    CHECK(c_count(Partition{6, 3, 1}, 3) == 2);
    CHECK(c_count(Partition{3, 2, 2}, 2) == 1);
    CHECK(c_count(Partition{3, 2, 2}, 5) == 1);
    CHECK(c_count(Partition{12, 3, 2}, 5) == 2);  // same residues as (3,2,2), different count
    CHECK(c_count(Partition{}, 3) == 0);
    CHECK(c_count(Partition{4, 2}, 1) == 0);
    CHECK_THROWS_AS((void)c_count(Partition{1}, 0), std::invalid_argument);
}

TEST_CASE("c_count matches brute force on small partitions") {
    for (std::uint64_t n = 0; n <= 9; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            const BigCount bound = static_cast<std::uint64_t>(rearrangements(lambda).size());
            for (std::uint64_t q = 1; q <= 7; ++q) {
                const BigCount c = c_count(lambda, q);
                CHECK(c == brute_c(lambda, q));
                CHECK(c <= bound);
                if (n % q == 0) CHECK(c == 0);
            }
        }
    }
}

TEST_CASE("c_count is exact beyond machine words") {
    // One odd part with 50 distinct even parts: c^(2) = 50!.
    std::vector<Part> parts;
    for (Part even = 100; even >= 2; even -= 2) parts.push_back(even);
    parts.push_back(1);
    CHECK(c_count(Partition(parts), 2) == factorial(50));

    // (1^k) is cumulative for every q > k, and nothing else is rearranged.
    CHECK(c_count(Partition(std::vector<Part>(40, 1)), 41) == 1);
    CHECK(c_count(Partition(std::vector<Part>(40, 1)), 40) == 0);
}

TEST_CASE("oversized profiles are refused") {
    std::vector<std::uint64_t> huge(12, 40);
    CHECK_THROWS_AS((void)w_count(ResidueProfile(13, 0, huge)), std::length_error);
}

TEST_CASE("shared table agrees with private memo, including under concurrency") {
    WCountTable shared(5);
    CHECK(shared.size() == 0);
    for_each_vector(5, 3, [&](const ResidueProfile& rp) { CHECK(shared.count(rp) == w_count(rp)); });
    CHECK(shared.size() > 0);
    CHECK_THROWS_AS((void)shared.count(ResidueProfile(3, 0, {1, 1})), std::invalid_argument);

    WCountTable concurrent(7);
    std::vector<Partition> inputs;
    for (std::uint64_t n = 1; n <= 14; ++n) {
        for (const Partition& lambda : partitions_of(n)) inputs.push_back(lambda);
    }
    std::vector<BigCount> expected;
    for (const Partition& lambda : inputs) expected.push_back(c_count(lambda, 7));

    std::vector<std::vector<BigCount>> results(4);
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < results.size(); ++t) {
        workers.emplace_back([&, t] {
            for (std::size_t i = 0; i < inputs.size(); ++i) {
                const std::size_t k = (i * (t + 1)) % inputs.size();  // different visiting orders
                results[t].push_back(c_count(inputs[k], 7, concurrent));
            }
        });
    }
    for (auto& w : workers) w.join();
    for (std::size_t t = 0; t < results.size(); ++t) {
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            CHECK(results[t][i] == expected[(i * (t + 1)) % inputs.size()]);
        }
    }
}
