#include "weylflag/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include "weylflag/formula.hpp"
#include "weylflag/golden.hpp"
#include "weylflag/good_pairs.hpp"
#include "weylflag/schubert.hpp"
#include "weylflag/serialize.hpp"

namespace weylflag {

namespace {

template <class Body>
CheckResult timed(int id, const std::string& name, long long budget_ms, Body body) {
    CheckResult res;
    res.id = id;
    res.name = name;
    std::ostringstream detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail << " threw: " << e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    res.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (res.millis >= budget_ms) {
        ok = false;
        detail << " [over " << budget_ms << " ms budget]";
    }
    res.pass = ok;
    res.detail = detail.str();
    return res;
}

AlgElem random_elem(const AlgPtr& alg, std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> coef(lo, hi);
    QVec c(alg->dim());
    for (auto& x : c) x = coef(rng);
    return AlgElem(alg, c);
}

ArtinMatrix random_invertible(const AlgPtr& alg, int n, std::mt19937_64& rng) {
    ArtinMatrix m(alg, n, n);
    do {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = random_elem(alg, rng, -3, 3);
    } while (!m.is_invertible());
    return m;
}

QVec dot_reflect_row(const QVec& nu, int i, int j) {
    QVec out = nu;
    out[i - 1] = nu[j - 1] + (i - j);
    out[j - 1] = nu[i - 1] + (j - i);
    return out;
}

// Replays a single-component linkage chain: every step strictly decreasing in
// dominance order, landing exactly on mu.
bool replay_chain(const WeightVector& mu, const WeightVector& lam, const std::vector<Root>& chain) {
    QVec nu = lam.rows()[0];
    for (const auto& r : chain) {
        if (r.tau != 1) return false;
        QVec nxt = dot_reflect_row(nu, r.i, r.j);
        WeightVector a({nxt}), b({nu});
        if (!weight_lt(a, b)) return false;
        nu = nxt;
    }
    return nu == mu.rows()[0];
}

}  // namespace

std::string CheckResult::line() const {
    std::ostringstream out;
    out << (pass ? "PASS" : "FAIL") << "  " << id << " " << name;
    for (size_t k = name.size(); k < 12; ++k) out << ' ';
    out << " " << detail << " (" << millis << " ms)";
    return out.str();
}

CheckResult check_census() {
    return timed(1, "census", 10000, [](std::ostringstream& detail) {
        bool ok = true;
        for (int n = 2; n <= 3; ++n) {
            CensusReport r = census(n, 1);
            detail << "n=" << n << ": " << r.comparable_pairs << " pairs, " << r.bad << " bad; ";
            ok = ok && r.bad == 0;
        }
        CensusReport r4 = census(4, 1);
        detail << "n=4: " << r4.comparable_pairs << " pairs, " << r4.bad << " bad";
        ok = ok && r4.bad == 1 && r4.bad_pairs.size() == 1;
        if (ok) {
            ok = r4.bad_pairs[0].first.to_string() == golden::bad_pair_n4_w1 &&
                 r4.bad_pairs[0].second.to_string() == golden::bad_pair_n4_w2;
            detail << " = (" << r4.bad_pairs[0].first.to_string() << " | "
                   << r4.bad_pairs[0].second.to_string() << ")";
        }
        return ok;
    });
}

CheckResult check_tangent_oracle() {
    return timed(2, "tangent", 60000, [](std::ostringstream& detail) {
        bool ok = true;
        long long pairs = 0;
        for (int n = 1; n <= 4; ++n) {
            for (const auto& w : all_permutations(n)) {
                for (const auto& tau : all_permutations(n)) {
                    if (!bruhat_leq(tau, w)) continue;
                    ++pairs;
                    int comb = schubert_tangent_dim(w, tau);
                    int orc = jacobian_oracle_tangent_dim(w, tau);
                    if (comb != orc) {
                        ok = false;
                        detail << " mismatch w=" << w.to_string() << " tau=" << tau.to_string()
                               << ": " << comb << " vs " << orc << ";";
                    }
                    if (tau == w && comb != w.length()) ok = false;
                }
            }
        }
        const char* frozen[] = {golden::tangent_table_n2, golden::tangent_table_n3,
                                golden::tangent_table_n4};
        for (int n = 2; n <= 4; ++n)
            if (schubert_table_csv(n, false) != frozen[n - 2]) {
                ok = false;
                detail << " frozen table n=" << n << " drifted;";
            }
        detail << pairs << " comparable pairs, tables n<=4 match frozen";
        return ok;
    });
}

CheckResult check_flag_lemma(unsigned seed) {
    return timed(3, "flag-lemma", 30000, [seed](std::ostringstream& detail) {
        std::mt19937_64 rng(seed);
        bool ok = true;
        long long flags = 0;
        for (const AlgPtr& alg : {TruncatedAlgebra::rationals(), TruncatedAlgebra::dual_numbers()}) {
            for (int n = 2; n <= 3; ++n) {
                auto perms = all_permutations(n);
                for (int rep = 0; rep < 200; ++rep) {
                    FlagOverRing f(random_invertible(alg, n, rng));
                    ++flags;
                    for (const auto& w : perms)
                        if (subquotient_cell_test(f, w) != open_cell_member(f, w)) {
                            ok = false;
                            detail << " disagree at w=" << w.to_string() << " over "
                                   << alg->name() << ";";
                        }
                }
            }
        }
        detail << flags << " flags over Q and Q[e]/(e^2), all w agree";
        return ok;
    });
}

CheckResult check_eigen(unsigned seed) {
    return timed(4, "eigen", 30000, [seed](std::ostringstream& detail) {
        std::mt19937_64 rng(seed);
        bool ok = true;
        long long cases = 0;
        std::vector<int> residue_pool = {-5, -4, -3, -2, -1, 1, 2, 3, 4, 6};
        for (int trunc = 2; trunc <= 3; ++trunc) {
            AlgPtr alg = TruncatedAlgebra::truncated("e", trunc);
            for (int n = 1; n <= 4; ++n) {
                for (int rep = 0; rep < 100; ++rep) {
                    ++cases;
                    std::shuffle(residue_pool.begin(), residue_pool.end(), rng);
                    std::vector<AlgElem> lams;
                    for (int i = 0; i < n; ++i) {
                        AlgElem nil = random_elem(alg, rng, -2, 2);
                        QVec c = nil.coeffs();
                        c[0] = residue_pool[i];
                        lams.push_back(AlgElem(alg, c));
                    }
                    ArtinMatrix d(alg, n, n);
                    for (int i = 0; i < n; ++i) d.at(i, i) = lams[i];
                    ArtinMatrix b = random_invertible(alg, n, rng);
                    ArtinMatrix f = b * d * b.inverse();

                    ArtinMatrix eb = eigen_basis(f, lams);
                    ArtinMatrix de(alg, n, n);
                    for (int i = 0; i < n; ++i) de.at(i, i) = lams[i];
                    if (!(f * eb == eb * de) || !eb.det().is_unit()) {
                        ok = false;
                        detail << " eigen_basis failed (n=" << n << ", e^" << trunc << ");";
                    }

                    std::vector<AlgPoly> chain = bezout_chain(lams);
                    AlgPoly sum = AlgPoly::zero(alg);
                    for (int i = 0; i < n; ++i) {
                        AlgPoly term = chain[i];
                        for (int j = 0; j < n; ++j)
                            if (j != i) term = term * AlgPoly::linear(-lams[j], AlgElem::one(alg));
                        sum = sum + term;
                    }
                    if (!(sum == AlgPoly::one(alg))) {
                        ok = false;
                        detail << " Bezout identity failed (n=" << n << ", e^" << trunc << ");";
                    }
                }
            }
        }
        detail << cases << " matrices diagonalized, Bezout identities exact";
        return ok;
    });
}

CheckResult check_linkage(unsigned seed) {
    return timed(5, "linkage", 300000, [seed](std::ostringstream& detail) {
        std::mt19937_64 rng(seed);
        bool ok = true;
        long long multi_checked = 0, bfs_runs = 0;
        for (int n = 2; n <= 4; ++n) {
            auto perms = all_permutations(n);
            int np = static_cast<int>(perms.size());

            // Single-pair good table.
            std::vector<std::pair<int, int>> good_single;
            for (int a = 0; a < np; ++a)
                for (int b = 0; b < np; ++b)
                    if (bruhat_leq(perms[a], perms[b]) && is_good_pair(perms[a], perms[b]).good)
                        good_single.emplace_back(a, b);

            // Pool of strictly increasing integer weight rows.
            std::uniform_int_distribution<int> start(-5, 0), step(1, 4);
            std::vector<std::vector<long>> hpool;
            for (int k = 0; k < 12; ++k) {
                std::vector<long> row(n);
                row[0] = start(rng);
                for (int i = 1; i < n; ++i) row[i] = row[i - 1] + step(rng);
                hpool.push_back(row);
            }

            // chi pools per (pair, h row): three random rows constant on the
            // orbits of w wsat^{-1}; linkage results memoized per draw.
            std::uniform_int_distribution<int> chival(0, 6);
            std::map<std::pair<int, int>, std::vector<QVec>> chipools;
            std::unordered_map<long long, bool> memo;
            auto component_linked = [&](int pairIdx, int hIdx, int chiIdx) {
                long long key = (static_cast<long long>(pairIdx) << 6) | (hIdx << 2) | chiIdx;
                auto it = memo.find(key);
                if (it != memo.end()) return it->second;
                auto [a, b] = good_single[pairIdx];
                MultiPermutation wsat({perms[a]}), w({perms[b]});
                auto& pool = chipools[{pairIdx, hIdx}];
                if (pool.empty()) {
                    auto orbs = orbits(compose(w.comp(1), wsat.comp(1).inverse()));
                    for (int k = 0; k < 3; ++k) {
                        QVec chi(n);
                        for (const auto& orb : orbs) {
                            Rat v(chival(rng));
                            for (int idx : orb) chi[idx - 1] = v;
                        }
                        pool.push_back(chi);
                    }
                }
                HodgeTateWeights h({hpool[hIdx]});
                WeightVector chi({pool[chiIdx]});
                ++bfs_runs;
                LinkageResult res = companion_linkage_check(w, wsat, h, chi);
                bool linked = res.linked;
                if (linked) {
                    WeightVector lam(1, n);
                    for (int i = 1; i <= n; ++i)
                        lam.entry(1, i) = Rat(h.value(1, i)) + (i - 1) + chi.entry(1, w.comp(1)(i));
                    linked = replay_chain(dot_action(wsat, lam), dot_action(w, lam), res.chain);
                }
                memo[key] = linked;
                return linked;
            };

            std::uniform_int_distribution<int> pick_h(0, static_cast<int>(hpool.size()) - 1);
            std::uniform_int_distribution<int> pick_chi(0, 2);
            long long bad_here = 0;
            for (int sigma = 1; sigma <= 2; ++sigma) {
                long long npairs = static_cast<long long>(good_single.size());
                long long total = sigma == 1 ? npairs : npairs * npairs;
                for (long long idx = 0; idx < total; ++idx) {
                    int c1 = static_cast<int>(idx % npairs);
                    int c2 = static_cast<int>(idx / npairs);
                    ++multi_checked;
                    for (int hd = 0; hd < 5; ++hd) {
                        int h1 = pick_h(rng), h2 = pick_h(rng);
                        for (int cd = 0; cd < 3; ++cd) {
                            bool linked = component_linked(c1, h1, pick_chi(rng));
                            if (sigma == 2) linked = linked && component_linked(c2, h2, pick_chi(rng));
                            if (!linked) ++bad_here;
                        }
                    }
                }
            }
            if (bad_here > 0) {
                ok = false;
                detail << " n=" << n << ": " << bad_here << " draws not linked;";
            }

            // Spot check that the multi-level call composes the per-component
            // answers (random sigma = 2 pairs, full call).
            std::uniform_int_distribution<size_t> pick_pair(0, good_single.size() - 1);
            for (int rep = 0; rep < 50; ++rep) {
                auto [a1, b1] = good_single[pick_pair(rng)];
                auto [a2, b2] = good_single[pick_pair(rng)];
                MultiPermutation wsat({perms[a1], perms[a2]}), w({perms[b1], perms[b2]});
                std::vector<std::vector<long>> hrows = {hpool[pick_h(rng)], hpool[pick_h(rng)]};
                HodgeTateWeights h(hrows);
                WeightVector chi(2, n);
                for (int t = 1; t <= 2; ++t) {
                    auto orbs = orbits(compose(w.comp(t), wsat.comp(t).inverse()));
                    for (const auto& orb : orbs) {
                        Rat v(chival(rng));
                        for (int idx : orb) chi.entry(t, idx) = v;
                    }
                }
                if (!companion_linkage_check(w, wsat, h, chi).linked) {
                    ok = false;
                    detail << " sigma=2 spot check failed at n=" << n << ";";
                }
            }
        }
        detail << multi_checked << " good pairs x 15 draws, " << bfs_runs << " linkage searches";
        return ok;
    });
}

CheckResult check_formula() {
    return timed(6, "formula", 120000, [](std::ostringstream& detail) {
        bool ok = true;
        long long degenerate = 0, longest = 0;
        for (int n = 1; n <= 4; ++n) {
            std::vector<long> hrow(n);
            for (int i = 0; i < n; ++i) hrow[i] = i;
            auto perms = all_permutations(n);
            for (int sigma = 1; sigma <= 2; ++sigma) {
                HodgeTateWeights h(std::vector<std::vector<long>>(sigma, hrow));
                std::vector<MultiPermutation> multis;
                if (sigma == 1)
                    for (const auto& p : perms) multis.push_back(MultiPermutation({p}));
                else
                    for (const auto& p : perms)
                        for (const auto& q : perms) multis.push_back(MultiPermutation({p, q}));

                for (const auto& w : multis) {
                    FormulaReport rep = main_formula(n, sigma, w, w, h);
                    ++degenerate;
                    if (rep.total != rep.dim_xtri || !rep.good_pair) {
                        ok = false;
                        detail << " w=wsat=" << w.to_string() << " gave " << rep.total << ";";
                    }
                }
                MultiPermutation w0 = MultiPermutation::longest(n, sigma);
                for (const auto& wsat : multis) {
                    FormulaReport rep = main_formula(n, sigma, w0, wsat, h);
                    ++longest;
                    if (rep.schubert_sum != static_cast<long long>(sigma) * n * (n - 1) / 2) {
                        ok = false;
                        detail << " w0 sum wrong at wsat=" << wsat.to_string() << ";";
                    }
                }
            }
        }
        detail << degenerate << " w=wsat cases hit dim_xtri, " << longest
               << " w=w0 cases hit sigma*n(n-1)/2";
        return ok;
    });
}

CheckResult check_bruhat() {
    return timed(7, "bruhat", 60000, [](std::ostringstream& detail) {
        bool ok = true;
        long long pairs = 0;
        for (int n = 1; n <= 5; ++n) {
            auto perms = all_permutations(n);
            for (const auto& u : perms)
                for (const auto& w : perms) {
                    ++pairs;
                    if (bruhat_leq(u, w) != bruhat_leq_subword(u, w)) {
                        ok = false;
                        detail << " disagree at u=" << u.to_string() << " w=" << w.to_string()
                               << ";";
                    }
                }
        }
        detail << pairs << " pairs, Ehresmann == subword oracle";
        return ok;
    });
}

std::vector<CheckResult> run_suite(const std::string& suite, unsigned seed) {
    std::vector<CheckResult> out;
    auto want = [&](const std::string& name) { return suite == "all" || suite == name; };
    if (want("census")) out.push_back(check_census());
    if (want("tangent")) out.push_back(check_tangent_oracle());
    if (want("flag-lemma")) out.push_back(check_flag_lemma(seed));
    if (want("eigen")) out.push_back(check_eigen(seed));
    if (want("linkage")) out.push_back(check_linkage(seed));
    if (want("formula")) out.push_back(check_formula());
    if (want("bruhat")) out.push_back(check_bruhat());
    if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

}  // namespace weylflag
