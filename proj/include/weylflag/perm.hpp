#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylflag/rational.hpp"

namespace weylflag {

// Element of the symmetric group S_n in one-line notation, 1-based: the entry
// at position j is w(j).  The matrix embedding puts a 1 at (i, j) iff i = w(j),
// so left multiplication by the transposition t_ij swaps the VALUES i and j in
// one-line notation, right multiplication swaps the positions.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    static Permutation longest(int n);  // w0: j -> n+1-j
    static Permutation simple(int n, int i);  // s_i, 1 <= i < n
    static Permutation transposition(int n, int i, int j);  // t_ij

    int n() const { return static_cast<int>(v_.size()); }
    int operator()(int j) const { return v_[j - 1]; }  // 1-based
    const std::vector<int>& one_line() const { return v_; }

    bool is_identity() const;
    Permutation inverse() const;
    int length() const;  // number of inversions

    // Packs the one-line word into a single integer; used as a hash/set key.
    std::uint64_t key() const;

    bool operator==(const Permutation& o) const = default;
    bool operator<(const Permutation& o) const { return v_ < o.v_; }

    std::string to_string() const;  // "3,1,2"
    static Permutation parse(const std::string& s);

private:
    std::vector<int> v_;
};

// (a . b)(j) = a(b(j))
Permutation compose(const Permutation& a, const Permutation& b);

// t_ij . w and w . t_ij
Permutation left_mult_transposition(const Permutation& w, int i, int j);
Permutation right_mult_transposition(const Permutation& w, int i, int j);

std::vector<Permutation> all_permutations(int n);

// One reduced word for w, as simple-reflection indices applied left to right:
// w = s_{a_1} . s_{a_2} ... s_{a_l}.
std::vector<int> reduced_word(const Permutation& w);

// Bruhat order, Ehresmann sorted-prefix dominance criterion (primary algorithm).
bool bruhat_leq(const Permutation& u, const Permutation& w);

// Bruhat order by enumerating subword products of a reduced word of w.
// Exponential bookkeeping kept as the independent test oracle.
bool bruhat_leq_subword(const Permutation& u, const Permutation& w);

// Runs both algorithms and throws DomainError if they ever disagree.
bool bruhat_leq_checked(const Permutation& u, const Permutation& w);

// One permutation per embedding tau = 1..sigma, all of the same rank.  Bruhat
// order, lengths and products are componentwise/additive.
class MultiPermutation {
public:
    MultiPermutation() = default;
    explicit MultiPermutation(std::vector<Permutation> comps);
    static MultiPermutation identity(int n, int sigma);
    static MultiPermutation longest(int n, int sigma);

    int n() const { return comps_.empty() ? 0 : comps_[0].n(); }
    int sigma() const { return static_cast<int>(comps_.size()); }
    const Permutation& comp(int tau) const { return comps_[tau - 1]; }  // 1-based
    const std::vector<Permutation>& comps() const { return comps_; }

    MultiPermutation inverse() const;
    int length() const;
    bool is_identity() const;

    bool operator==(const MultiPermutation& o) const = default;
    bool operator<(const MultiPermutation& o) const { return comps_ < o.comps_; }

    std::string to_string() const;  // "3,1,2;2,1,3"
    static MultiPermutation parse(const std::string& s);

private:
    std::vector<Permutation> comps_;
};

MultiPermutation compose(const MultiPermutation& a, const MultiPermutation& b);
bool bruhat_leq(const MultiPermutation& u, const MultiPermutation& w);

// Root e_i - e_j of the component tau (tau = 1 for plain permutations).
struct Root {
    int tau = 1;
    int i = 0;
    int j = 0;
    bool operator==(const Root& o) const = default;
};

}  // namespace weylflag
