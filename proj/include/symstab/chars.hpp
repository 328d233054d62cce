#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "symstab/symcore.hpp"

namespace symstab::chars {

// Class function on S_n, stored densely over all cycle types (keyed by the
// partition of cycle lengths).  Genuine characters take integer values.
struct CharacterFn {
    int n = 0;
    std::map<Partition, Rational> values;

    const Rational& at(const Partition& class_partition) const;
    const Rational& at(const CycleType& ct) const { return at(ct.to_partition()); }
};

CharacterFn operator+(CharacterFn f, const CharacterFn& g);
CharacterFn operator-(CharacterFn f, const CharacterFn& g);
CharacterFn operator*(CharacterFn f, const CharacterFn& g);  // pointwise (tensor product)

// Decomposition output: nonzero multiplicities keyed by partition.
struct MultiplicityTable {
    int n = 0;
    std::map<Partition, long> entries;

    long mult(const Partition& lam) const;
    BigInt total_dimension() const;  // sum mult * dim
    std::string to_string() const;   // "{(3,1):2, (2,2):1}"

    bool operator==(const MultiplicityTable&) const = default;
};

// Irreducible character chi_lambda at the class ct, by the
// Murnaghan-Nakayama border-strip recursion.  chi(identity) = dim.
BigInt mn_character(const Partition& lam, const CycleType& ct);

// chi_lambda as a dense class function; tables are cached per degree.
CharacterFn irreducible_character(const Partition& lam);

BigInt dimension(const Partition& lam);

// Closed-form character polynomials in the cycle counts (i_1,i_2,i_3,i_4)
// for the stable two-column/three-box labels
//   (1),(1,1),(2),(3),(2,1),(1,1,1),(3,1).
// Defined when n - |mu| >= mu_1; agrees with the oracle on every class.
Rational closed_form_character(const StableLabel& label, const CycleType& ct);
bool closed_form_supported(const Partition& mu);
std::vector<Partition> closed_form_labels();

// Character of a permutation representation: value at a class = number of
// fixed basis elements of a representative.
CharacterFn perm_rep_character(const std::function<BigInt(const CycleType&)>& fixed_points,
                               int n);

// Fixed k-subsets of a representative of ct (the k-subset module counter).
BigInt count_fixed_subsets(const CycleType& ct, int k);

// Character of the k-subset permutation module.
CharacterFn subsets_character(int n, int k);

// Character of the whole power-set module: 2^(number of cycles).
CharacterFn powerset_full_character(int n);

// (1/n!) sum over classes of size * f * g.
Rational character_inner_product(const CharacterFn& f, const CharacterFn& g);

// Multiplicities <f, chi_lambda> for every lambda.  A non-integer or
// negative multiplicity, or a failed reconstruction sum, throws
// std::logic_error("not a character"): every module in scope is genuine,
// so that signals a bug upstream.
MultiplicityTable decompose_character(const CharacterFn& f);

// Cycle type of p^2 for p in class ct: odd cycles persist, each 2q-cycle
// splits into two q-cycles.
CycleType power_map(const CycleType& ct);

// chi_{Lambda^2 V}(ct) = (f(ct)^2 - f(ct^2)) / 2.
CharacterFn exterior_square_character(const CharacterFn& f);

// dim of the two-row irreducible (n-k,k): C(n,k) - C(n,k-1).
BigInt dim_two_row(int n, int k);

// Central projection (dim/n!) sum chi_lambda(p) p.v onto the lambda-isotypic
// component of the subset representation.  Full group sum; n <= 8.
SubsetVector isotypic_projection(const Partition& lam, const SubsetVector& v);

// Projection images of several vectors at once (one group sweep).
std::vector<SubsetVector> isotypic_projection_batch(const Partition& lam,
                                                    const std::vector<SubsetVector>& vs);

// Character of the invariant subspace spanned by the given vectors, by
// exact traces of class representatives.  Throws if the span is not
// S_n-invariant.
CharacterFn module_character(const std::vector<SubsetVector>& span_vectors, int n);

}  // namespace symstab::chars
