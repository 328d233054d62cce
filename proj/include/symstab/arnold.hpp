#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symstab/chars.hpp"
#include "symstab/symcore.hpp"

namespace symstab::arnold {

// Unordered pair {i,j}, stored with i < j (the convention w_ij = w_ji).
struct GeneratorIndex {
    int i = 0, j = 0;

    GeneratorIndex() = default;
    GeneratorIndex(int a, int b);  // normalizes; rejects a == b

    std::string to_string() const;  // "w13"
    auto operator<=>(const GeneratorIndex&) const = default;
};

// Exact-rational combination of wedge monomials g1 ^ g2 with g1 < g2
// lexicographically.  A single swap during normalization contributes -1.
class ExteriorTwoVector {
  public:
    using Monomial = std::pair<GeneratorIndex, GeneratorIndex>;

    ExteriorTwoVector() = default;
    explicit ExteriorTwoVector(int n);

    int degree() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    // Accumulates c * (g1 ^ g2), normalizing the order; g1 == g2 adds zero.
    void add(GeneratorIndex g1, GeneratorIndex g2, const Rational& c);

    ExteriorTwoVector& operator+=(const ExteriorTwoVector& o);
    ExteriorTwoVector& operator-=(const ExteriorTwoVector& o);
    ExteriorTwoVector& operator*=(const Rational& c);

    bool operator==(const ExteriorTwoVector&) const = default;
    std::string to_string() const;

  private:
    int n_ = 0;
    std::map<Monomial, Rational> terms_;
};

GeneratorIndex act_degree1(const Permutation& p, const GeneratorIndex& g);
ExteriorTwoVector act_degree2(const Permutation& p, const ExteriorTwoVector& v);

// w_ij^w_ik - w_ij^w_jk + w_ik^w_jk for i < j < k.
ExteriorTwoVector yb_relation(int i, int j, int k, int n);

// Character of the span of the YB relations.  Closed form:
// C(i_1,3) + i_3 - i_1*i_2.  Brute force: signed count of setwise-fixed
// triples of a class representative.  The public entry point evaluates the
// closed form and cross-checks against brute force for n <= 8.
chars::CharacterFn i2_character(int n);
chars::CharacterFn i2_character_closed(int n);
chars::CharacterFn i2_character_brute(int n);  // n <= 8

// Character of the full degree-2 exterior algebra on the C(n,2) generators,
// by brute-force traces on the wedge monomial basis.
chars::CharacterFn lambda2_character_brute(int n);

// Character of the degree-1 generator space (= the 2-subset permutation
// module under w_ij <-> {i,j}).
chars::CharacterFn degree1_character(int n);

// Decomposition of Lambda^2; computed both by brute-force traces and by the
// half-determinant formula on the degree-1 character, which must agree.
chars::MultiplicityTable lambda2_decompose(int n);

chars::MultiplicityTable i2_decompose(int n);

// degree 1: the generator space; degree 2: Lambda^2 minus the relation
// ideal, handled at the character level.
chars::MultiplicityTable arnold_decompose(int n, int degree);

// Explicit degree-1 bases of the three stable components, written in the
// 2-subset dictionary w_ij <-> {i,j}.
struct OmegaBases {
    SubsetVector invariant;                 // sum of all w_ij
    std::vector<SubsetVector> standard;     // n-1 vectors Omega^n_{1j}
    std::vector<SubsetVector> two_row;      // n(n-3)/2 vectors, triangular order
};

SubsetVector omega_full(int n);
SubsetVector omega_ij(int n, int i, int j);       // sum_{k != i,j} (w_ik - w_jk)
SubsetVector omega_ijkl(int n, int i, int j, int k, int l);  // w_il - w_ik + w_jk - w_jl
OmegaBases omega_bases(int n);  // n >= 4

}  // namespace symstab::arnold
