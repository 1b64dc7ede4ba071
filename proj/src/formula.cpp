#include "weylflag/formula.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "weylflag/schubert.hpp"

namespace weylflag {

HodgeTateWeights::HodgeTateWeights(std::vector<std::vector<long>> values) : v_(std::move(values)) {
    if (v_.empty() || v_[0].empty()) throw std::invalid_argument("empty weight data");
    for (const auto& row : v_) {
        if (row.size() != v_[0].size()) throw std::invalid_argument("ragged weight rows");
        for (size_t i = 1; i < row.size(); ++i)
            if (row[i - 1] >= row[i])
                throw std::invalid_argument("weights must be strictly increasing per embedding");
    }
}

WeightVector HodgeTateWeights::as_weights() const {
    WeightVector out(sigma(), n());
    for (int t = 1; t <= sigma(); ++t)
        for (int i = 1; i <= n(); ++i) out.entry(t, i) = value(t, i);
    return out;
}

std::string HodgeTateWeights::to_string() const {
    std::vector<std::string> rows;
    for (const auto& row : v_) {
        std::vector<std::string> parts;
        for (long x : row) parts.push_back(std::to_string(x));
        rows.push_back(join(parts, ","));
    }
    return join(rows, ";");
}

HodgeTateWeights HodgeTateWeights::parse(const std::string& s) {
    std::vector<std::vector<long>> rows;
    std::stringstream ss(s);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<long> r;
        std::stringstream rs(row);
        std::string tok;
        while (std::getline(rs, tok, ',')) {
            size_t pos = 0;
            long x;
            try {
                x = std::stol(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad weight literal: " + s);
            }
            if (pos != tok.size()) throw std::invalid_argument("bad weight literal: " + s);
            r.push_back(x);
        }
        rows.push_back(r);
    }
    return HodgeTateWeights(rows);
}

void CharacterParam::validate() const {
    if (k.empty() || k[0].empty()) throw std::invalid_argument("empty character exponents");
    for (const auto& row : k)
        if (row.size() != k[0].size()) throw std::invalid_argument("ragged character exponents");
    if (phi.size() != k[0].size())
        throw std::invalid_argument("phi label count must match n");
    for (size_t i = 0; i < phi.size(); ++i)
        for (size_t j = i + 1; j < phi.size(); ++j)
            if (phi[i] == phi[j])
                throw std::invalid_argument("phi labels must be pairwise distinct");
}

long long dim_xtri(int n, int sigma) {
    if (n < 1 || sigma < 1) throw std::invalid_argument("dim_xtri needs n, sigma >= 1");
    return static_cast<long long>(n) * n +
           static_cast<long long>(sigma) * n * (n + 1) / 2;
}

int d_invariant(const MultiPermutation& wp) {
    int n = wp.n();
    int sigma = wp.sigma();
    std::vector<QVec> rows;
    for (int t = 1; t <= sigma; ++t) {
        const Permutation& u = wp.comp(t);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                QVec row(static_cast<size_t>(sigma) * n, Rat(0));
                auto bump = [&](int idx, int delta) { row[(t - 1) * n + (idx - 1)] += delta; };
                // u(e_i - e_j) - (e_i - e_j)
                bump(u(i), 1);
                bump(u(j), -1);
                bump(i, -1);
                bump(j, 1);
                rows.push_back(row);
            }
    }
    QMat m(static_cast<int>(rows.size()), sigma * n);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < sigma * n; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
    return rank(m);
}

bool companion_weight_space_member(const WeightVector& eta, const MultiPermutation& w,
                                   const MultiPermutation& wsat, const HodgeTateWeights& h) {
    int n = h.n();
    int sigma = h.sigma();
    if (eta.n() != n || eta.sigma() != sigma || w.n() != n || w.sigma() != sigma ||
        wsat.n() != n || wsat.sigma() != sigma)
        throw std::invalid_argument("companion weight space shape mismatch");
    for (int t = 1; t <= sigma; ++t) {
        Permutation wsat_inv = wsat.comp(t).inverse();
        for (int i = 1; i <= n; ++i) {
            Rat lhs = eta.entry(t, wsat.comp(t)(i)) - eta.entry(t, w.comp(t)(i));
            Rat rhs = Rat(h.value(t, i)) - Rat(h.value(t, wsat_inv(w.comp(t)(i))));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

std::vector<std::vector<long>> apply_perm_to_weights(const MultiPermutation& w, const HodgeTateWeights& h) {
    if (w.n() != h.n() || w.sigma() != h.sigma())
        throw std::invalid_argument("permutation/weight shape mismatch");
    std::vector<std::vector<long>> out(h.sigma(), std::vector<long>(h.n()));
    for (int t = 1; t <= h.sigma(); ++t) {
        Permutation inv = w.comp(t).inverse();
        for (int i = 1; i <= h.n(); ++i) out[t - 1][i - 1] = h.value(t, inv(i));
    }
    return out;
}

CharacterParam jmath_twist(const CharacterParam& c, const MultiPermutation& w,
                           const MultiPermutation& wsat, const HodgeTateWeights& h) {
    c.validate();
    auto wh = apply_perm_to_weights(w, h);
    auto wsath = apply_perm_to_weights(wsat, h);
    CharacterParam out = c;
    if (out.k.size() != wh.size() || out.k[0].size() != wh[0].size())
        throw std::invalid_argument("character/weight shape mismatch");
    for (size_t t = 0; t < wh.size(); ++t)
        for (size_t i = 0; i < wh[t].size(); ++i) out.k[t][i] += wh[t][i] - wsath[t][i];
    return out;
}

namespace {

// Single-row strict dominance decrease: nu2 < nu1 with integral difference.
bool row_strictly_dominated(const QVec& nu2, const QVec& nu1) {
    Rat prefix(0);
    bool equal = true;
    for (size_t i = 0; i < nu1.size(); ++i) {
        prefix += nu1[i] - nu2[i];
        if (!is_integer(prefix) || prefix < 0) return false;
        if (nu1[i] != nu2[i]) equal = false;
    }
    return prefix == 0 && !equal;
}

// BFS over the dot orbit of one tau-row, following only strictly decreasing
// dot-reflections, from lam down to mu.
std::optional<std::vector<std::pair<int, int>>> linkage_chain_row(const QVec& mu, const QVec& lam) {
    if (mu == lam) return std::vector<std::pair<int, int>>{};
    int n = static_cast<int>(lam.size());
    struct Node {
        QVec v;
        int parent;
        std::pair<int, int> step;
    };
    std::vector<Node> nodes{{lam, -1, {0, 0}}};
    std::map<QVec, int> seen{{lam, 0}};
    for (size_t head = 0; head < nodes.size(); ++head) {
        QVec cur = nodes[head].v;
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                // s_{ij} . cur in closed form; only entries i, j move.
                QVec nxt = cur;
                nxt[i - 1] = cur[j - 1] + (i - j);
                nxt[j - 1] = cur[i - 1] + (j - i);
                if (!row_strictly_dominated(nxt, cur)) continue;
                if (seen.contains(nxt)) continue;
                seen.emplace(nxt, static_cast<int>(nodes.size()));
                nodes.push_back({nxt, static_cast<int>(head), {i, j}});
                if (nxt == mu) {
                    std::vector<std::pair<int, int>> chain;
                    for (int at = static_cast<int>(nodes.size()) - 1; nodes[at].parent >= 0;
                         at = nodes[at].parent)
                        chain.push_back(nodes[at].step);
                    std::reverse(chain.begin(), chain.end());
                    return chain;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

LinkageResult strongly_linked(const WeightVector& mu, const WeightVector& lam) {
    if (mu.sigma() != lam.sigma() || mu.n() != lam.n())
        throw std::invalid_argument("weight shape mismatch");
    for (int t = 1; t <= mu.sigma(); ++t)
        for (int i = 1; i <= mu.n(); ++i)
            if (!is_integer(lam.entry(t, i) - mu.entry(t, i)))
                throw DomainError("strong linkage needs an integral weight difference");
    LinkageResult out;
    for (int t = 1; t <= mu.sigma(); ++t) {
        auto chain = linkage_chain_row(mu.rows()[t - 1], lam.rows()[t - 1]);
        if (!chain) return {};
        for (const auto& [i, j] : *chain) out.chain.push_back({t, i, j});
    }
    out.linked = true;
    return out;
}

LinkageResult companion_linkage_check(const MultiPermutation& w, const MultiPermutation& wsat,
                                      const HodgeTateWeights& h, const WeightVector& chi) {
    int n = h.n();
    int sigma = h.sigma();
    if (w.n() != n || w.sigma() != sigma || wsat.n() != n || wsat.sigma() != sigma ||
        chi.n() != n || chi.sigma() != sigma)
        throw std::invalid_argument("companion linkage shape mismatch");
    for (int t = 1; t <= sigma; ++t) {
        Permutation u = compose(w.comp(t), wsat.comp(t).inverse());
        for (int i = 1; i <= n; ++i)
            if (chi.entry(t, u(i)) != chi.entry(t, i))
                throw DomainError("chi weights must be constant on the orbits of w wsat^{-1}");
    }
    WeightVector lam(sigma, n);
    for (int t = 1; t <= sigma; ++t)
        for (int i = 1; i <= n; ++i)
            lam.entry(t, i) = Rat(h.value(t, i)) + (i - 1) + chi.entry(t, w.comp(t)(i));
    return strongly_linked(dot_action(wsat, lam), dot_action(w, lam));
}

FormulaReport main_formula(int n, int sigma, const MultiPermutation& w, const MultiPermutation& wsat,
                           const HodgeTateWeights& h, bool override_nongood) {
    if (w.n() != n || w.sigma() != sigma || wsat.n() != n || wsat.sigma() != sigma)
        throw std::invalid_argument("main_formula permutation shape mismatch");
    if (h.n() != n || h.sigma() != sigma)
        throw std::invalid_argument("main_formula weight shape mismatch");
    if (!bruhat_leq(wsat, w))
        throw DomainError("main_formula: wsat must be Bruhat-below w");
    GoodPairResult good = is_good_pair_multi(wsat, w);
    if (!good.good && !override_nongood)
        throw DomainError("main_formula: (wsat, w) is not a good pair (pass the override to compute anyway)");

    FormulaReport rep;
    rep.n = n;
    rep.sigma = sigma;
    rep.good_pair = good.good;
    rep.conjectural = !good.good;
    rep.dim_xtri = dim_xtri(n, sigma);
    rep.d_term = d_invariant(compose(w, wsat.inverse()));
    for (int t = 1; t <= sigma; ++t) {
        PerTauTerm term;
        term.tau = t;
        term.tangent_dim = schubert_tangent_dim(w.comp(t), wsat.comp(t));
        term.length_w = w.comp(t).length();
        term.length_wsat = wsat.comp(t).length();
        rep.schubert_sum += term.tangent_dim;
        rep.per_tau.push_back(term);
    }
    rep.length_term = wsat.length();
    rep.total = rep.dim_xtri - rep.d_term + rep.schubert_sum - rep.length_term;
    return rep;
}

}  // namespace weylflag
