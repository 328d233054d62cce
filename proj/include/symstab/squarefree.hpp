#pragma once

#include <utility>
#include <vector>

#include "symstab/symcore.hpp"

namespace symstab::squarefree {

// Paired index lists (h_1|j_1)...(h_s|j_s) with h < j per position and all
// 2s points distinct; encodes the difference product prod (x_h - x_j).
// Canonical form: positions sorted by h.
struct DeltaPair {
    std::vector<std::pair<int, int>> pairs;

    DeltaPair() = default;
    explicit DeltaPair(std::vector<std::pair<int, int>> ps);  // validates + canonicalizes

    int size() const { return static_cast<int>(pairs.size()); }
    SubsetMask points() const;
    std::string to_string() const;  // "(1|2)(3|4)"

    bool operator==(const DeltaPair&) const = default;
};

// Product in Q[x_1..x_n]/<x_i^2>: x_A * x_B = x_{A u B} if disjoint, else 0.
SubsetVector sf_multiply(const SubsetVector& v, const SubsetVector& w);

// sigma_k^B: sum of all k-subsets of B.
SubsetVector viete(SubsetMask b, int k, int n);

// Expansion of prod (x_h - x_j) over the pairs; 2^s signed terms.
SubsetVector delta_product(const DeltaPair& dp, int n);

// Linear extension of x_A -> x_A * sigma_{k-i}^{A'} on a homogeneous input
// of degree i.  Sends the orthogonal complement of level i-1 of the degree-i
// filtration into the orthogonal complement at degree k.
SubsetVector psi_isometry(const SubsetVector& v, int k);

// The inductive independent set of difference products spanning the
// orthogonal complement of level i-1 inside level i.  Recursion: keep the
// set for n-1, and extend each (i-1)-set element by (r|n) where r is the
// smallest point outside its support.  Exactly C(n,i)-C(n,i-1) elements.
std::vector<DeltaPair> canonical_delta_set(int n, int i);

// Basis of the two-row irreducible component at filtration level i of the
// degree-k square-free slice: psi applied to each canonical delta product.
// Each element equals the direct product delta * sigma_{k-i}^L with L the
// complement of the delta support (verified internally).
std::vector<SubsetVector> irreducible_basis(int n, int k, int i);

}  // namespace symstab::squarefree
