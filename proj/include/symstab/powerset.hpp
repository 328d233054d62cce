#pragma once

#include <vector>

#include "symstab/symcore.hpp"

namespace symstab::powerset {

// sigma(n,k,A) = sum over all k-subsets of {1..n} containing A, with
// coefficient 1.  The generators of the canonical filtration of the
// k-subset module.
SubsetVector sigma(int n, int k, SubsetMask a);

// The C(n,i) vectors {sigma(n,k,A) : card(A)=i} in increasing mask order.
// Only defined for k <= n/2; use complement_map to reach the upper range.
std::vector<SubsetVector> filtration_basis(int n, int k, int i);

// A -> {1..n} \ A on every term.  Equivariant involution swapping the
// cardinality-k and cardinality-(n-k) layers.
SubsetVector complement_map(const SubsetVector& v);

// Drops every term containing the point n; result lives at degree n-1.
SubsetVector restriction(const SubsetVector& v);

// Same terms, ambient degree raised to n+1.
SubsetVector inclusion(const SubsetVector& v);

// Average of sigma(n,k,{1..i}) over the subgroup of S_{n+1} fixing 1..i,
// scaled by 1/((n-i)!*(n-k+1)), minus the (i+1,n+1)-translate.  Equals
// sigma(n+1,k,{1..i+1}).
SubsetVector group_average_lift(int n, int k, int i);

// Canonical reduced basis of span{ p.v : p in S_m, v in vs }.  Computed by
// closing the span under the group generators; the result is the unique
// RREF of the invariant subspace generated by vs.
std::vector<SubsetVector> sn_span(const std::vector<SubsetVector>& vs, int group_degree);

}  // namespace symstab::powerset
