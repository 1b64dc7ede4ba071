#include "weylflag/good_pairs.hpp"

#include <algorithm>
#include <unordered_map>

namespace weylflag {

std::vector<std::vector<int>> orbits(const Permutation& p) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(p.n(), false);
    for (int start = 1; start <= p.n(); ++start) {
        if (seen[start - 1]) continue;
        std::vector<int> cyc;
        int x = start;
        while (!seen[x - 1]) {
            seen[x - 1] = true;
            cyc.push_back(x);
            x = p(x);
        }
        std::sort(cyc.begin(), cyc.end());
        out.push_back(cyc);
    }
    return out;
}

GoodPairResult is_good_pair(const Permutation& w1, const Permutation& w2) {
    if (!bruhat_leq(w1, w2))
        throw DomainError("is_good_pair: " + w1.to_string() + " is not Bruhat-below " + w2.to_string());

    GoodPairResult res;
    auto wrap = [&](std::vector<Root> chain) {
        res.good = true;
        res.certificate = GoodPairCertificate{std::move(chain), MultiPermutation({w1}), MultiPermutation({w2})};
    };
    if (w1 == w2) {
        wrap({});
        return res;
    }

    // The allowed transpositions are fixed once from the orbits of w1 . w2^{-1},
    // not recomputed per step.
    std::vector<std::pair<int, int>> allowed;
    for (const std::vector<int>& orbit : orbits(compose(w1, w2.inverse())))
        for (size_t a = 0; a < orbit.size(); ++a)
            for (size_t b = a + 1; b < orbit.size(); ++b)
                allowed.emplace_back(orbit[a], orbit[b]);

    struct Node {
        Permutation perm;
        int parent;
        std::pair<int, int> step;
        int depth;
    };
    int cap = w2.length() - w1.length();
    std::vector<Node> nodes{{w1, -1, {0, 0}, 0}};
    std::unordered_map<std::uint64_t, int> seen{{w1.key(), 0}};
    for (size_t head = 0; head < nodes.size(); ++head) {
        Node cur = nodes[head];  // copy: nodes reallocates below
        if (cur.depth >= cap) continue;
        for (const auto& [i, j] : allowed) {
            Permutation nxt = left_mult_transposition(cur.perm, i, j);
            if (nxt.length() <= cur.perm.length()) continue;
            if (seen.contains(nxt.key())) continue;
            if (!bruhat_leq(nxt, w2)) continue;
            seen.emplace(nxt.key(), static_cast<int>(nodes.size()));
            nodes.push_back({nxt, static_cast<int>(head), {i, j}, cur.depth + 1});
            if (nxt == w2) {
                std::vector<Root> chain;
                for (int at = static_cast<int>(nodes.size()) - 1; nodes[at].parent >= 0; at = nodes[at].parent)
                    chain.push_back({1, nodes[at].step.first, nodes[at].step.second});
                std::reverse(chain.begin(), chain.end());
                wrap(std::move(chain));
                return res;
            }
        }
    }
    return res;
}

GoodPairResult is_good_pair_multi(const MultiPermutation& w1, const MultiPermutation& w2) {
    if (w1.sigma() != w2.sigma() || w1.n() != w2.n())
        throw std::invalid_argument("good pair shape mismatch");
    if (!bruhat_leq(w1, w2))
        throw DomainError("is_good_pair_multi: " + w1.to_string() + " is not Bruhat-below " + w2.to_string());
    GoodPairResult out;
    std::vector<Root> chain;
    for (int t = 1; t <= w1.sigma(); ++t) {
        GoodPairResult comp = is_good_pair(w1.comp(t), w2.comp(t));
        if (!comp.good) return out;
        for (Root r : comp.certificate->chain) {
            r.tau = t;
            chain.push_back(r);
        }
    }
    out.good = true;
    out.certificate = GoodPairCertificate{std::move(chain), w1, w2};
    return out;
}

CensusReport census(int n, int sigma, int bound) {
    if (n < 1 || sigma < 1) throw std::invalid_argument("census needs n, sigma >= 1");
    if (n > bound)
        throw DomainError("census bound exceeded: n = " + std::to_string(n) + " > " + std::to_string(bound));

    std::vector<Permutation> perms = all_permutations(n);
    std::vector<std::pair<int, int>> comparable;  // indices (u, w) with u <= w
    std::vector<bool> pair_good;
    for (size_t a = 0; a < perms.size(); ++a)
        for (size_t b = 0; b < perms.size(); ++b)
            if (bruhat_leq(perms[a], perms[b])) {
                comparable.emplace_back(static_cast<int>(a), static_cast<int>(b));
                pair_good.push_back(is_good_pair(perms[a], perms[b]).good);
            }

    long long c = static_cast<long long>(comparable.size());
    long long g = 0;
    for (bool ok : pair_good) g += ok;

    CensusReport rep;
    rep.n = n;
    rep.sigma = sigma;
    rep.comparable_pairs = 1;
    rep.good = 1;
    for (int t = 0; t < sigma; ++t) {
        rep.comparable_pairs *= c;
        rep.good *= g;
    }
    rep.bad = rep.comparable_pairs - rep.good;

    // Multi bad pairs: some component is bad.  Partition by the FIRST bad
    // position t: components before t good, component t bad, the rest
    // arbitrary comparable; avoids enumerating the full product space.
    std::vector<size_t> bad_idx, all_idx, good_idx;
    for (size_t pi = 0; pi < comparable.size(); ++pi) {
        all_idx.push_back(pi);
        (pair_good[pi] ? good_idx : bad_idx).push_back(pi);
    }
    // first bad component at position t: components < t good, component t bad,
    // components > t arbitrary comparable.
    std::vector<std::vector<size_t>> choices(sigma);
    auto emit = [&](const std::vector<size_t>& pick) {
        std::vector<Permutation> c1, c2;
        for (size_t pi : pick) {
            c1.push_back(perms[comparable[pi].first]);
            c2.push_back(perms[comparable[pi].second]);
        }
        rep.bad_pairs.emplace_back(MultiPermutation(c1), MultiPermutation(c2));
    };
    for (int t = 0; t < sigma; ++t) {
        for (int u = 0; u < sigma; ++u)
            choices[u] = (u < t) ? good_idx : (u == t) ? bad_idx : all_idx;
        std::vector<size_t> pick(sigma, 0);
        std::vector<size_t> pos(sigma, 0);
        bool any = true;
        for (int u = 0; u < sigma; ++u)
            if (choices[u].empty()) any = false;
        while (any) {
            for (int u = 0; u < sigma; ++u) pick[u] = choices[u][pos[u]];
            emit(pick);
            int u = sigma - 1;
            while (u >= 0 && ++pos[u] == choices[u].size()) pos[u--] = 0;
            if (u < 0) break;
        }
    }
    std::sort(rep.bad_pairs.begin(), rep.bad_pairs.end());
    if (static_cast<long long>(rep.bad_pairs.size()) != rep.bad)
        throw DomainError("census internal accounting mismatch");
    return rep;
}

}  // namespace weylflag
