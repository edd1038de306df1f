#ifndef MCGFORGE_HOMOLOGY_HPP
#define MCGFORGE_HOMOLOGY_HPP

#include "mcgforge/matrix.hpp"

#include <vector>
#include <stdexcept>

namespace mcgforge {

struct Genus {
    int g;
    explicit Genus(int genus) : g(genus) {
        if (g < 1) throw std::invalid_argument("Genus: g must be >= 1");
    }
    bool operator==(const Genus& o) const { return g == o.g; }
};

// Integer vector of length 2g in the ordered basis (a_1, b_1, ..., a_g, b_g).
struct HomologyClass {
    int g;
    std::vector<Int> coords;

    HomologyClass(Genus genus, std::vector<Int> c) : g(genus.g), coords(std::move(c)) {
        if (coords.size() != static_cast<std::size_t>(2 * g))
            throw std::invalid_argument("HomologyClass: coords must have length 2g");
    }
    static HomologyClass zero(Genus genus) {
        return HomologyClass(genus, std::vector<Int>(2 * genus.g, Int(0)));
    }
    // basis class a_i (1-based): index 2(i-1); b_i: index 2(i-1)+1
    static HomologyClass basis_a(Genus genus, int i);
    static HomologyClass basis_b(Genus genus, int i);

    bool is_zero() const;
    bool is_primitive() const;  // gcd of coords is 1
    bool operator==(const HomologyClass& o) const { return g == o.g && coords == o.coords; }
};

// Element of Sp_2g(Z); construction checks M^T J M = J exactly.
struct SympMatrix {
    int g;
    ExactMatrix mat;

    SympMatrix(Genus genus, ExactMatrix m);
    static SympMatrix identity(Genus genus);
    SympMatrix operator*(const SympMatrix& o) const;
    SympMatrix inverse_m() const;
    bool operator==(const SympMatrix& o) const { return g == o.g && mat == o.mat; }
};

struct TwistLetter {
    HomologyClass cls;
    long exponent;
};

// Word in Dehn twists; letters share a genus.
struct TwistWord {
    std::vector<TwistLetter> letters;
};

// Standard symplectic form, block-diagonal [[0,1],[-1,0]] per handle.
ExactMatrix standard_j(Genus genus);

// <x, y> = x^T J y, with <a_i, b_i> = +1.
Int pairing(const HomologyClass& x, const HomologyClass& y);

// Transvection x |-> x + <a, x> a as a 2g x 2g matrix. Always symplectic;
// a = 0 yields the identity (separating twists act trivially).
SympMatrix twist_matrix(const HomologyClass& a);

// Ordered product of twist_matrix(class)^exponent over the word's letters.
SympMatrix eval_word(Genus genus, const TwistWord& w);

// tau_a tau_b tau_a == tau_b tau_a tau_b as matrices.
bool check_braid(const HomologyClass& a, const HomologyClass& b);

// Transvections commute; equals (pairing == 0) for nonzero classes.
bool check_commute(const HomologyClass& a, const HomologyClass& b);

// True iff the word acts trivially on homology (Psi-kernel membership).
bool torelli_check(Genus genus, const TwistWord& w);

} // namespace mcgforge

#endif
