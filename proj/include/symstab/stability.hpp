#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symstab/chars.hpp"
#include "symstab/symcore.hpp"

namespace symstab::stability {

// ---------------------------------------------------------------------------
// Module families: a level-indexed sequence X_n inside the subset space,
// with a connecting map phi_n : X_n -> X_{n+1}.

struct ModuleFamily {
    std::string name;
    int min_n = 0;
    std::function<std::vector<SubsetVector>(int)> basis_at;
    // phi_n applied to a vector of X_n (defaults to the ambient inclusion).
    std::function<SubsetVector(int, const SubsetVector&)> include_to_next;
    // Labels of a permutation basis of X_n (pi . e_A = e_{pi(A)}), when one
    // exists; drives the orbit inventory of the reports.
    std::function<std::optional<std::vector<SubsetMask>>(int)> orbit_labels_at;
};

ModuleFamily subsets_module_family(int k);          // spans of k-subsets
ModuleFamily powerset_module_family();              // the full power set span
ModuleFamily filtration_module_family(int k, int i);
ModuleFamily squarefree_module_family(int k);       // degree-k square-free slice

// ---------------------------------------------------------------------------
// Monotonicity: for each isotypic component U = c * V(mu)_n of X_n, the
// S_{n+1}-span of phi_n(U) must contain >= c copies of V(mu)_{n+1}.

struct MonotonicityResult {
    std::map<Partition, bool> by_label;  // keyed by the stable tail mu
    std::map<Partition, long> required;  // c at level n
    std::map<Partition, long> found;     // multiplicity inside the span
    bool all() const;
};

// Full-group isotypic projections; needs n <= 7 (levels n and n+1).
MonotonicityResult monotonicity_check(const ModuleFamily& fam, int n);

// ---------------------------------------------------------------------------

struct RepStabilityRow {
    int n = 0;
    chars::MultiplicityTable table;              // irreducible multiplicities
    std::map<Partition, long> stable_table;      // same, keyed by stable tail
    std::map<Partition, long> orbit_inventory;   // permutation-summand counts
    bool has_orbit_inventory = false;
    bool consistent = false;
    bool injective = false;
    std::optional<bool> surjective;              // S_{n+1}.Im(phi_n) = X_{n+1}
    std::optional<MonotonicityResult> monotone;
    std::vector<std::string> notes;
};

struct RepStabilityReport {
    std::string family;
    int n_min = 0, n_max = 0;
    std::vector<RepStabilityRow> rows;
    // Smallest n0 < n_max with identical stable tables on [n0, n_max];
    // empty when constancy is not observed inside the window.
    std::optional<int> multiplicities_stable_from;
    // Per stable type: onset of constant orbit counts and the tail value.
    std::map<Partition, std::pair<int, long>> orbit_counts_stable_from;
    int monotonic_checked_upto = -1;
    bool monotonic_all = true;
    bool consistent_all = true, injective_all = true;
    bool surjective_all_checked = true;
    std::string verdict;
};

// Decomposes every level of the window, checks the connecting maps
// (equivariance, injectivity, group-span surjectivity) and monotonicity up
// to the brute-force caps.  n_max <= 10.
RepStabilityReport rep_stability_report(const ModuleFamily& fam, int n_min, int n_max,
                                        int monotonic_cap = 7);

// ---------------------------------------------------------------------------
// Finite S_n-set families and action stability.

using PointId = std::uint64_t;

struct FiniteSnSet {
    int n = 0;
    std::vector<PointId> points;
    std::function<PointId(const Permutation&, PointId)> act;
};

struct SetFamily {
    std::string name;
    int min_n = 0;
    std::function<FiniteSnSet(int)> at;
    std::function<PointId(int, PointId)> include_to_next;
    std::function<std::string(int, PointId)> describe;  // orbit naming
};

SetFamily subsets_set_family(int k);  // the k-subsets
SetFamily powerset_set_family();      // the whole power set
SetFamily natural_set_family();       // {1..n}
SetFamily sign_set_family();          // two points, swapped by odd permutations

// Orbits as sorted point lists, ordered by minimal representative.
std::vector<std::vector<PointId>> orbit_decomposition(const FiniteSnSet& xs);

// Sorted cardinalities of the orbits of Stab(x) on {1..n}, for x the
// minimal point of the orbit.  Stabilizer by full enumeration; n <= 8.
Partition orbit_type(const FiniteSnSet& xs, const std::vector<PointId>& orbit);

struct OrbitInfo {
    std::vector<PointId> points;  // sorted
    Partition type;
    Partition stable_type;        // tail of type
    std::string label;
};

struct ClosureCheck {
    Partition stable_type;
    bool holds = false;
    std::vector<std::string> closure_orbits;  // orbits the closure covers
    std::vector<std::string> target_orbits;   // orbits of Y_{n+1}
    std::vector<PointId> closure_points;      // sorted, at level n+1
    std::vector<PointId> target_points;       // sorted, at level n+1
};

struct ActionStabilityRow {
    int n = 0;
    std::vector<OrbitInfo> orbits;
    std::map<Partition, long> inventory;  // stable type -> orbit count
    bool consistent = false;
    bool injective = false;
    bool surjective = false;
    std::vector<std::string> unreached_orbits;  // of X_{n+1}
    std::vector<ClosureCheck> closure_checks;   // per type, vs level n+1
};

struct ActionStabilityReport {
    std::string family;
    int n_min = 0, n_max = 0;
    std::vector<ActionStabilityRow> rows;
    std::map<Partition, std::pair<int, long>> counts_stable_from;  // onset, tail value
    bool consistent_all = true, injective_all = true, surjective_all = true;
    bool closure_all = true;
    std::string verdict;
};

// Orbit inventories per level plus the connecting-map conditions; closure
// checks compare consecutive levels inside the window.  n_max <= 7.
ActionStabilityReport action_stability_report(const SetFamily& fam, int n_min, int n_max);

}  // namespace symstab::stability
