#include "weylflag/perm.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace weylflag {

Permutation::Permutation(std::vector<int> one_line) : v_(std::move(one_line)) {
    int n = static_cast<int>(v_.size());
    if (n == 0) throw std::invalid_argument("empty permutation");
    std::vector<bool> seen(n, false);
    for (int x : v_) {
        if (x < 1 || x > n || seen[x - 1])
            throw std::invalid_argument("not a permutation: " + to_string());
        seen[x - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    for (int j = 0; j < n; ++j) v[j] = j + 1;
    return Permutation(v);
}

Permutation Permutation::longest(int n) {
    std::vector<int> v(n);
    for (int j = 0; j < n; ++j) v[j] = n - j;
    return Permutation(v);
}

Permutation Permutation::simple(int n, int i) { return transposition(n, i, i + 1); }

Permutation Permutation::transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw std::invalid_argument("bad transposition indices");
    Permutation t = identity(n);
    std::swap(t.v_[i - 1], t.v_[j - 1]);
    return t;
}

bool Permutation::is_identity() const {
    for (int j = 0; j < n(); ++j)
        if (v_[j] != j + 1) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(n());
    for (int j = 0; j < n(); ++j) inv[v_[j] - 1] = j + 1;
    return Permutation(inv);
}

int Permutation::length() const {
    int len = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (v_[i] > v_[j]) ++len;
    return len;
}

std::uint64_t Permutation::key() const {
    std::uint64_t k = 0;
    for (int x : v_) k = (k << 5) | static_cast<std::uint64_t>(x);
    return k;
}

std::string Permutation::to_string() const {
    std::vector<std::string> parts;
    parts.reserve(v_.size());
    for (int x : v_) parts.push_back(std::to_string(x));
    return join(parts, ",");
}

Permutation Permutation::parse(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int x;
        try {
            x = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad permutation literal: " + s);
        }
        if (pos != tok.size()) throw std::invalid_argument("bad permutation literal: " + s);
        v.push_back(x);
    }
    return Permutation(v);
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw std::invalid_argument("composing permutations of different rank");
    std::vector<int> v(a.n());
    for (int j = 1; j <= a.n(); ++j) v[j - 1] = a(b(j));
    return Permutation(v);
}

Permutation left_mult_transposition(const Permutation& w, int i, int j) {
    return compose(Permutation::transposition(w.n(), i, j), w);
}

Permutation right_mult_transposition(const Permutation& w, int i, int j) {
    return compose(w, Permutation::transposition(w.n(), i, j));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    for (int j = 0; j < n; ++j) v[j] = j + 1;
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<int> reduced_word(const Permutation& w) {
    // Peeling descents from the right: if x(i) > x(i+1) then length(x s_i) =
    // length(x) - 1, so collecting the positions and reversing yields a word of
    // exactly length(w) letters.
    std::vector<int> word;
    std::vector<int> x = w.one_line();
    int n = w.n();
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i + 1 < n; ++i) {
            if (x[i] > x[i + 1]) {
                std::swap(x[i], x[i + 1]);
                word.push_back(i + 1);
                progress = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.n() != w.n()) throw std::invalid_argument("comparing permutations of different rank");
    int n = u.n();
    // Ehresmann dominance: sorted prefixes of u entrywise <= sorted prefixes of w.
    std::vector<int> pu, pw;
    for (int k = 1; k < n; ++k) {
        pu.insert(std::upper_bound(pu.begin(), pu.end(), u(k)), u(k));
        pw.insert(std::upper_bound(pw.begin(), pw.end(), w(k)), w(k));
        for (int t = 0; t < k; ++t)
            if (pu[t] > pw[t]) return false;
    }
    return true;
}

bool bruhat_leq_subword(const Permutation& u, const Permutation& w) {
    if (u.n() != w.n()) throw std::invalid_argument("comparing permutations of different rank");
    std::vector<int> word = reduced_word(w);
    std::unordered_set<std::uint64_t> seen;
    std::vector<Permutation> frontier;
    Permutation id = Permutation::identity(w.n());
    seen.insert(id.key());
    frontier.push_back(id);
    for (int a : word) {
        std::vector<Permutation> grown = frontier;
        for (const Permutation& p : frontier) {
            Permutation q = right_mult_transposition(p, a, a + 1);
            if (seen.insert(q.key()).second) grown.push_back(q);
        }
        frontier = std::move(grown);
    }
    return seen.contains(u.key());
}

bool bruhat_leq_checked(const Permutation& u, const Permutation& w) {
    bool fast = bruhat_leq(u, w);
    bool oracle = bruhat_leq_subword(u, w);
    if (fast != oracle)
        throw DomainError("bruhat algorithms disagree on " + u.to_string() + " vs " + w.to_string());
    return fast;
}

MultiPermutation::MultiPermutation(std::vector<Permutation> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw std::invalid_argument("empty multipermutation");
    for (const Permutation& p : comps_)
        if (p.n() != comps_[0].n())
            throw std::invalid_argument("multipermutation components of different rank");
}

MultiPermutation MultiPermutation::identity(int n, int sigma) {
    return MultiPermutation(std::vector<Permutation>(sigma, Permutation::identity(n)));
}

MultiPermutation MultiPermutation::longest(int n, int sigma) {
    return MultiPermutation(std::vector<Permutation>(sigma, Permutation::longest(n)));
}

MultiPermutation MultiPermutation::inverse() const {
    std::vector<Permutation> out;
    out.reserve(comps_.size());
    for (const Permutation& p : comps_) out.push_back(p.inverse());
    return MultiPermutation(out);
}

int MultiPermutation::length() const {
    int len = 0;
    for (const Permutation& p : comps_) len += p.length();
    return len;
}

bool MultiPermutation::is_identity() const {
    for (const Permutation& p : comps_)
        if (!p.is_identity()) return false;
    return true;
}

std::string MultiPermutation::to_string() const {
    std::vector<std::string> parts;
    for (const Permutation& p : comps_) parts.push_back(p.to_string());
    return join(parts, ";");
}

MultiPermutation MultiPermutation::parse(const std::string& s) {
    std::vector<Permutation> comps;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) comps.push_back(Permutation::parse(tok));
    return MultiPermutation(comps);
}

MultiPermutation compose(const MultiPermutation& a, const MultiPermutation& b) {
    if (a.sigma() != b.sigma() || a.n() != b.n())
        throw std::invalid_argument("composing multipermutations of different shape");
    std::vector<Permutation> out;
    for (int t = 1; t <= a.sigma(); ++t) out.push_back(compose(a.comp(t), b.comp(t)));
    return MultiPermutation(out);
}

bool bruhat_leq(const MultiPermutation& u, const MultiPermutation& w) {
    if (u.sigma() != w.sigma() || u.n() != w.n())
        throw std::invalid_argument("comparing multipermutations of different shape");
    for (int t = 1; t <= u.sigma(); ++t)
        if (!bruhat_leq(u.comp(t), w.comp(t))) return false;
    return true;
}

}  // namespace weylflag
