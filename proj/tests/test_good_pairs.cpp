#include <doctest.h>

#include <algorithm>

#include "weylflag/good_pairs.hpp"

using namespace weylflag;

namespace {

// Independent replay of a certificate: left multiplications, strict Bruhat
// increase at every step, supports inside one orbit of start . end^{-1}.
bool certificate_valid(const GoodPairCertificate& c) {
    MultiPermutation cur = c.start;
    std::vector<std::vector<std::vector<int>>> orbs;
    for (int t = 1; t <= c.start.sigma(); ++t)
        orbs.push_back(orbits(compose(c.start.comp(t), c.end.comp(t).inverse())));
    for (const auto& r : c.chain) {
        bool inside = false;
        for (const auto& orb : orbs[r.tau - 1])
            if (std::count(orb.begin(), orb.end(), r.i) && std::count(orb.begin(), orb.end(), r.j))
                inside = true;
        if (!inside) return false;
        std::vector<Permutation> comps = cur.comps();
        Permutation next = left_mult_transposition(comps[r.tau - 1], r.i, r.j);
        if (!(comps[r.tau - 1].length() < next.length() &&
              bruhat_leq(comps[r.tau - 1], next)))
            return false;
        comps[r.tau - 1] = next;
        cur = MultiPermutation(comps);
    }
    return cur == c.end;
}

}  // namespace

TEST_CASE("orbits") {
    auto o = orbits(Permutation({2, 1, 3}));
    REQUIRE(o.size() == 2);
    CHECK(o[0] == std::vector<int>{1, 2});
    CHECK(o[1] == std::vector<int>{3});
    CHECK(orbits(Permutation({2, 3, 1})).size() == 1);
    CHECK(orbits(Permutation::identity(4)).size() == 4);
}

TEST_CASE("every comparable pair in S_3 is good, with a valid certificate") {
    auto perms = all_permutations(3);
    int comparable = 0;
    for (const auto& u : perms)
        for (const auto& w : perms) {
            if (!bruhat_leq(u, w)) continue;
            ++comparable;
            GoodPairResult res = is_good_pair(u, w);
            CHECK(res.good);
            REQUIRE(res.certificate.has_value());
            CHECK(certificate_valid(*res.certificate));
            // Each step strictly increases length, so the chain can't be longer
            // than the length gap (a single transposition may jump by more).
            CHECK(static_cast<int>(res.certificate->chain.size()) <= w.length() - u.length());
            CHECK(res.certificate->chain.empty() == (u == w));
        }
    CHECK(comparable == 19);
}

TEST_CASE("the single bad pair of S_4") {
    Permutation w1({1, 3, 2, 4}), w2({4, 2, 3, 1});
    CHECK(bruhat_leq(w1, w2));
    CHECK(!is_good_pair(w1, w2).good);

    int bad = 0;
    auto perms = all_permutations(4);
    for (const auto& u : perms)
        for (const auto& w : perms) {
            if (!bruhat_leq(u, w)) continue;
            GoodPairResult res = is_good_pair(u, w);
            if (!res.good)
                ++bad;
            else
                CHECK(certificate_valid(*res.certificate));
        }
    CHECK(bad == 1);
}

TEST_CASE("incomparable input is a domain error") {
    CHECK_THROWS_AS(is_good_pair(Permutation({2, 1, 3}), Permutation({1, 3, 2})), DomainError);
}

TEST_CASE("multi pairs are good componentwise") {
    MultiPermutation good_u = MultiPermutation::parse("1,2,3,4;1,2,3,4");
    MultiPermutation good_w = MultiPermutation::parse("2,1,3,4;4,3,2,1");
    GoodPairResult res = is_good_pair_multi(good_u, good_w);
    CHECK(res.good);
    CHECK(certificate_valid(*res.certificate));

    MultiPermutation mixed_u = MultiPermutation::parse("1,2,3,4;1,3,2,4");
    MultiPermutation mixed_w = MultiPermutation::parse("2,1,3,4;4,2,3,1");
    CHECK(!is_good_pair_multi(mixed_u, mixed_w).good);
}

TEST_CASE("census accounting at sigma = 2") {
    CensusReport one = census(4, 1);
    CensusReport two = census(4, 2);
    CHECK(one.comparable_pairs == 213);
    CHECK(one.good == 212);
    CHECK(two.comparable_pairs == one.comparable_pairs * one.comparable_pairs);
    CHECK(two.good == one.good * one.good);
    CHECK(two.bad == two.comparable_pairs - two.good);
    CHECK(static_cast<long long>(two.bad_pairs.size()) == two.bad);
    CHECK(std::is_sorted(two.bad_pairs.begin(), two.bad_pairs.end()));
    for (const auto& [u, w] : two.bad_pairs) CHECK(!is_good_pair_multi(u, w).good);
}

TEST_CASE("census bounds") {
    CHECK_THROWS_AS(census(6, 1), DomainError);
    CHECK_NOTHROW(census(2, 1, 2));
}
