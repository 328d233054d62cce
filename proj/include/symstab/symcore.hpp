#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "symstab/rational.hpp"

namespace symstab {

// Subsets of {1..n} as bitmasks: bit (i-1) stands for the point i.
using SubsetMask = std::uint32_t;

inline constexpr int kMaxDegree = 24;           // bitmask subsets fit a machine word
inline constexpr int kMaxBruteForceDegree = 8;  // full S_n enumerations (n! loops)
inline constexpr int kMaxCharacterDegree = 10;  // dense character tables
inline constexpr int kMaxSpanDegree = 12;       // group-closure span computations

SubsetMask full_mask(int n);
int mask_card(SubsetMask a);
std::vector<int> mask_elements(SubsetMask a);
SubsetMask mask_of(std::initializer_list<int> xs);
SubsetMask mask_of(const std::vector<int>& xs);
std::string mask_to_string(SubsetMask a);  // "{1,3}", "{}" for the empty set

// k-subsets of {1..n} in increasing numeric mask order.
void for_each_subset_of_card(int n, int k, const std::function<void(SubsetMask)>& fn);

// Permutation of {1..n} in one-line notation, 1-based.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);  // validates bijectivity

    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);
    // Cycles given as point lists; unnamed points are fixed.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x) - 1]; }

    // (p.compose(q))(x) = p(q(x)), so acting with compose(p,q) equals acting
    // with q first, then p.
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;
    std::string to_string() const;  // one-line "[2,1,3]"

  private:
    std::vector<int> images_;
};

// Weakly decreasing positive parts.  operator< is the canonical display
// order of the library: lexicographically decreasing, so (n) sorts first.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int weight() const;
    int rows() const { return static_cast<int>(parts.size()); }
    int part(int i) const;  // 1-based, 0 beyond the last row
    std::string to_string() const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts > o.parts; }
};

// Cycle multiplicities (i_1,...,i_n) of a conjugacy class of S_n.
struct CycleType {
    int n = 0;
    std::vector<int> counts;  // counts[q-1] = number of q-cycles

    CycleType() = default;
    CycleType(int n, std::vector<int> counts);

    int count(int q) const;
    Partition to_partition() const;  // cycle lengths, decreasing
    static CycleType from_partition(const Partition& lengths, int n);
    std::string to_string() const;

    bool operator==(const CycleType&) const = default;
};

// Stable name V(mu)_n of the irreducible labelled by (n-|mu|, mu).
struct StableLabel {
    Partition mu;
    int n = 0;

    StableLabel(Partition mu_, int n_);  // rejects n - |mu| < mu_1 ("unstable label")
    std::string to_string() const;       // "V(2)_7", "V(0)_5"

    bool operator==(const StableLabel&) const = default;
};

// Exact-rational linear combination of subsets of {1..n}.  Doubles as a
// square-free polynomial (monomial x_A <-> subset A).  Terms are kept in
// increasing mask order and zero coefficients are never stored.
class SubsetVector {
  public:
    SubsetVector() = default;
    explicit SubsetVector(int n);
    static SubsetVector monomial(int n, SubsetMask a, const Rational& c = 1);

    int degree() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<SubsetMask, Rational>& terms() const { return terms_; }
    Rational coeff(SubsetMask a) const;

    void add(SubsetMask a, const Rational& c);

    SubsetVector& operator+=(const SubsetVector& o);
    SubsetVector& operator-=(const SubsetVector& o);
    SubsetVector& operator*=(const Rational& c);

    bool operator==(const SubsetVector&) const = default;
    std::string to_string() const;  // "{1,2} + 2*{1,3}"

    // Common cardinality of all terms, or -1 if mixed / zero vector.
    int homogeneous_card() const;

  private:
    int n_ = 0;
    std::map<SubsetMask, Rational> terms_;
};

SubsetVector operator+(SubsetVector a, const SubsetVector& b);
SubsetVector operator-(SubsetVector a, const SubsetVector& b);
SubsetVector operator*(const Rational& c, SubsetVector a);

CycleType cycle_type(const Permutation& p);

// Deterministic representative: cycles laid out on 1..n, longest first.
Permutation class_representative(const CycleType& ct);

struct ConjugacyClass {
    CycleType type;
    BigInt size;
};

// One class per partition of n, in canonical partition order.
// size = n! / prod(q^{i_q} i_q!).
std::vector<ConjugacyClass> conjugacy_classes(int n);

SubsetMask act_subset(const Permutation& p, SubsetMask a);
SubsetVector act_vector(const Permutation& p, const SubsetVector& v);

// All partitions of n, each once, lexicographically decreasing:
// (3),(2,1),(1,1,1).
std::vector<Partition> partitions(int n);

StableLabel to_stable(const Partition& lam, int n);
Partition from_stable(const StableLabel& sl);

// <v,w> = sum_A v[A]*w[A]; the subset basis is orthonormal.
Rational inner_product(const SubsetVector& v, const SubsetVector& w);

// Reduced echelon basis of a rational subspace of the subset space.
// Pivots are smallest masks; rows are fully reduced with leading
// coefficient 1, so the stored basis is the canonical RREF of the span
// and does not depend on insertion order.
class EchelonBasis {
  public:
    explicit EchelonBasis(int n);

    // Remainder of v after subtracting pivot rows.
    SubsetVector reduce(SubsetVector v) const;
    // Inserts the new direction of v, if any.  Returns true if rank grew.
    bool insert(const SubsetVector& v);
    bool contains(const SubsetVector& v) const;

    int degree() const { return n_; }
    std::size_t rank() const { return rows_.size(); }
    std::vector<SubsetVector> basis() const;  // rows in pivot order
    const std::map<SubsetMask, SubsetVector>& rows() const { return rows_; }

  private:
    int n_ = 0;
    std::map<SubsetMask, SubsetVector> rows_;  // pivot mask -> row
};

struct SpanResult {
    std::size_t rank = 0;
    std::vector<SubsetVector> basis;
};

// Exact Gaussian elimination; basis is the canonical reduced echelon form.
SpanResult rank_and_span(const std::vector<SubsetVector>& vs);

// S_n in lexicographic one-line order.  Guarded by kMaxBruteForceDegree
// unless relax_cap is set (callers that know better, e.g. small subgroups).
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn,
                          bool relax_cap = false);

// {(1 2), (1 2 ... n)}; empty for n < 2.
std::vector<Permutation> symmetric_group_generators(int n);

}  // namespace symstab
