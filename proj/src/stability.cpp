#include "symstab/stability.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "symstab/powerset.hpp"

namespace symstab::stability {

namespace {

Permutation extend_fixing_top(const Permutation& p) {
    std::vector<int> im;
    im.reserve(static_cast<std::size_t>(p.degree() + 1));
    for (int x = 1; x <= p.degree(); ++x) im.push_back(p(x));
    im.push_back(p.degree() + 1);
    return Permutation(std::move(im));
}

std::vector<SubsetVector> subset_layer_basis(int n, int k) {
    std::vector<SubsetVector> out;
    for_each_subset_of_card(n, k, [&](SubsetMask a) {
        out.push_back(SubsetVector::monomial(n, a));
    });
    return out;
}

std::vector<SubsetMask> subset_layer_masks(int n, int k) {
    std::vector<SubsetMask> out;
    for_each_subset_of_card(n, k, [&](SubsetMask a) { out.push_back(a); });
    return out;
}

SubsetVector ambient_inclusion(int /*n*/, const SubsetVector& v) {
    return powerset::inclusion(v);
}

Partition stable_tail(const Partition& type) {
    if (type.parts.empty()) return Partition();
    return Partition(std::vector<int>(type.parts.begin() + 1, type.parts.end()));
}

}  // namespace

ModuleFamily subsets_module_family(int k) {
    ModuleFamily f;
    f.name = "LP_" + std::to_string(k);
    f.min_n = k;
    f.basis_at = [k](int n) { return subset_layer_basis(n, k); };
    f.include_to_next = ambient_inclusion;
    f.orbit_labels_at = [k](int n) { return std::optional(subset_layer_masks(n, k)); };
    return f;
}

ModuleFamily powerset_module_family() {
    ModuleFamily f;
    f.name = "LP";
    f.min_n = 0;
    f.basis_at = [](int n) {
        std::vector<SubsetVector> out;
        for (SubsetMask a = 0; a <= full_mask(n); ++a)
            out.push_back(SubsetVector::monomial(n, a));
        return out;
    };
    f.include_to_next = ambient_inclusion;
    f.orbit_labels_at = [](int n) {
        std::vector<SubsetMask> out;
        for (SubsetMask a = 0; a <= full_mask(n); ++a) out.push_back(a);
        return std::optional(std::move(out));
    };
    return f;
}

ModuleFamily filtration_module_family(int k, int i) {
    ModuleFamily f;
    f.name = "F_" + std::to_string(i) + "LP_" + std::to_string(k);
    f.min_n = 2 * k;
    f.basis_at = [k, i](int n) { return powerset::filtration_basis(n, k, i); };
    f.include_to_next = ambient_inclusion;
    // pi . sigma(A) = sigma(pi(A)): the i-subsets label a permutation basis.
    f.orbit_labels_at = [i](int n) { return std::optional(subset_layer_masks(n, i)); };
    return f;
}

ModuleFamily squarefree_module_family(int k) {
    ModuleFamily f = subsets_module_family(k);
    f.name = "Sf_" + std::to_string(k);
    return f;
}

bool MonotonicityResult::all() const {
    for (const auto& [mu, ok] : by_label)
        if (!ok) return false;
    return true;
}

MonotonicityResult monotonicity_check(const ModuleFamily& fam, int n) {
    if (n > kMaxBruteForceDegree - 1)
        throw std::invalid_argument(
            "degree out of range (cap: n <= 7 for monotonicity, projections at n and n+1)");
    std::vector<SubsetVector> basis = fam.basis_at(n);
    chars::MultiplicityTable table = chars::decompose_character(chars::module_character(basis, n));
    MonotonicityResult res;
    for (const auto& [lam, c] : table.entries) {
        std::vector<SubsetVector> proj = chars::isotypic_projection_batch(lam, basis);
        SpanResult u = rank_and_span(proj);
        if (static_cast<BigInt>(u.rank) != c * chars::dimension(lam))
            throw std::logic_error("isotypic component has unexpected dimension");
        std::vector<SubsetVector> images;
        images.reserve(u.basis.size());
        for (const auto& v : u.basis) images.push_back(fam.include_to_next(n, v));
        std::vector<SubsetVector> span = powerset::sn_span(images, n + 1);
        chars::CharacterFn chi = chars::module_character(span, n + 1);
        Partition mu = to_stable(lam, n).mu;
        Partition target = from_stable(StableLabel(mu, n + 1));
        Rational m = chars::character_inner_product(chi, chars::irreducible_character(target));
        if (!is_integer(m) || m < 0) throw std::logic_error("non-integer multiplicity in span");
        long found = static_cast<long>(numerator(m));
        res.required[mu] = c;
        res.found[mu] = found;
        res.by_label[mu] = found >= c;
    }
    return res;
}

RepStabilityReport rep_stability_report(const ModuleFamily& fam, int n_min, int n_max,
                                        int monotonic_cap) {
    if (n_min < fam.min_n || n_min > n_max) throw std::invalid_argument("bad window");
    if (n_max > kMaxCharacterDegree)
        throw std::invalid_argument("degree out of range (cap: n <= 10 for multiplicities)");
    RepStabilityReport rep;
    rep.family = fam.name;
    rep.n_min = n_min;
    rep.n_max = n_max;

    for (int n = n_min; n <= n_max; ++n) {
        RepStabilityRow row;
        row.n = n;
        std::vector<SubsetVector> basis = fam.basis_at(n);
        row.table = chars::decompose_character(chars::module_character(basis, n));
        for (const auto& [lam, m] : row.table.entries) row.stable_table[to_stable(lam, n).mu] = m;

        // orbit inventory of the permutation basis, when there is one
        if (n <= kMaxBruteForceDegree) {
            if (auto labels = fam.orbit_labels_at(n)) {
                FiniteSnSet xs;
                xs.n = n;
                for (SubsetMask a : *labels) xs.points.push_back(a);
                xs.act = [](const Permutation& p, PointId a) {
                    return static_cast<PointId>(act_subset(p, static_cast<SubsetMask>(a)));
                };
                for (const auto& orbit : orbit_decomposition(xs)) {
                    Partition type = orbit_type(xs, orbit);
                    row.orbit_inventory[stable_tail(type)] += 1;
                }
                row.has_orbit_inventory = true;
            }
        } else {
            row.notes.push_back("orbit inventory skipped (needs n <= 8)");
        }

        // phi_n equivariance on group generators
        row.consistent = true;
        for (const Permutation& g : symmetric_group_generators(n)) {
            Permutation g_up = extend_fixing_top(g);
            for (const auto& b : basis) {
                if (fam.include_to_next(n, act_vector(g, b)) !=
                    act_vector(g_up, fam.include_to_next(n, b))) {
                    row.consistent = false;
                    row.notes.push_back("phi_" + std::to_string(n) + " is not equivariant");
                    break;
                }
            }
            if (!row.consistent) break;
        }

        // injectivity of phi_n
        std::vector<SubsetVector> images;
        images.reserve(basis.size());
        for (const auto& b : basis) images.push_back(fam.include_to_next(n, b));
        row.injective = rank_and_span(images).rank == basis.size();

        // S_{n+1} . Im(phi_n) = X_{n+1}
        if (n + 1 <= kMaxSpanDegree) {
            std::vector<SubsetVector> span = powerset::sn_span(images, n + 1);
            EchelonBasis target(n + 1);
            for (const auto& b : fam.basis_at(n + 1)) target.insert(b);
            bool contained = true;
            for (const auto& v : span)
                if (!target.contains(v)) {
                    contained = false;
                    break;
                }
            row.surjective = contained && span.size() == target.rank();
            if (!*row.surjective)
                row.notes.push_back("group span of the image has dimension " +
                                    std::to_string(span.size()) + ", level " +
                                    std::to_string(n + 1) + " has dimension " +
                                    std::to_string(target.rank()));
        } else {
            row.notes.push_back("surjectivity skipped (span cap n <= 12)");
        }

        if (n <= monotonic_cap && n <= kMaxBruteForceDegree - 1) {
            row.monotone = monotonicity_check(fam, n);
            rep.monotonic_checked_upto = n;
            if (!row.monotone->all()) rep.monotonic_all = false;
        }

        rep.consistent_all = rep.consistent_all && row.consistent;
        rep.injective_all = rep.injective_all && row.injective;
        if (row.surjective.has_value())
            rep.surjective_all_checked = rep.surjective_all_checked && *row.surjective;
        rep.rows.push_back(std::move(row));
    }

    // first n0 < n_max from which the stable tables agree through the window
    for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i) {
        bool constant = true;
        for (std::size_t j = i + 1; j < rep.rows.size(); ++j)
            if (rep.rows[j].stable_table != rep.rows[i].stable_table) {
                constant = false;
                break;
            }
        if (constant) {
            rep.multiplicities_stable_from = rep.rows[i].n;
            break;
        }
    }

    // per-type onset of constant orbit counts
    std::set<Partition> types;
    for (const auto& row : rep.rows)
        if (row.has_orbit_inventory)
            for (const auto& [mu, c] : row.orbit_inventory) {
                (void)c;
                types.insert(mu);
            }
    for (const Partition& mu : types) {
        std::vector<std::pair<int, long>> counts;
        for (const auto& row : rep.rows)
            if (row.has_orbit_inventory) {
                auto it = row.orbit_inventory.find(mu);
                counts.emplace_back(row.n, it == row.orbit_inventory.end() ? 0 : it->second);
            }
        if (counts.empty()) continue;
        std::size_t onset = counts.size() - 1;
        while (onset > 0 && counts[onset - 1].second == counts.back().second) --onset;
        rep.orbit_counts_stable_from[mu] = {counts[onset].first, counts.back().second};
    }

    std::ostringstream verdict;
    verdict << (rep.consistent_all ? "consistent" : "NOT consistent");
    verdict << (rep.injective_all ? ", injective" : ", NOT injective");
    verdict << (rep.surjective_all_checked ? ", group-span surjective"
                                           : ", NOT group-span surjective");
    if (rep.multiplicities_stable_from)
        verdict << "; stable multiplicities constant from n=" << *rep.multiplicities_stable_from;
    else
        verdict << "; stable-multiplicity constancy not observed in the window";
    if (rep.monotonic_checked_upto >= 0)
        verdict << "; monotonic " << (rep.monotonic_all ? "true" : "FALSE") << " for n <= "
                << rep.monotonic_checked_upto;
    rep.verdict = verdict.str();
    return rep;
}

// ---------------------------------------------------------------------------
// Finite S_n-sets

SetFamily subsets_set_family(int k) {
    SetFamily f;
    f.name = "P_" + std::to_string(k);
    f.min_n = k;
    f.at = [k](int n) {
        FiniteSnSet xs;
        xs.n = n;
        for (SubsetMask a : subset_layer_masks(n, k)) xs.points.push_back(a);
        xs.act = [](const Permutation& p, PointId a) {
            return static_cast<PointId>(act_subset(p, static_cast<SubsetMask>(a)));
        };
        return xs;
    };
    f.include_to_next = [](int, PointId a) { return a; };
    f.describe = [](int n, PointId a) {
        return "P_" + std::to_string(mask_card(static_cast<SubsetMask>(a))) + "(" +
               std::to_string(n) + ")";
    };
    return f;
}

SetFamily powerset_set_family() {
    SetFamily f = subsets_set_family(0);
    f.name = "P";
    f.min_n = 0;
    f.at = [](int n) {
        FiniteSnSet xs;
        xs.n = n;
        for (SubsetMask a = 0; a <= full_mask(n); ++a) xs.points.push_back(a);
        xs.act = [](const Permutation& p, PointId a) {
            return static_cast<PointId>(act_subset(p, static_cast<SubsetMask>(a)));
        };
        return xs;
    };
    return f;
}

SetFamily natural_set_family() {
    SetFamily f;
    f.name = "underline_n";
    f.min_n = 1;
    f.at = [](int n) {
        FiniteSnSet xs;
        xs.n = n;
        for (int x = 1; x <= n; ++x) xs.points.push_back(static_cast<PointId>(x));
        xs.act = [](const Permutation& p, PointId x) {
            return static_cast<PointId>(p(static_cast<int>(x)));
        };
        return xs;
    };
    f.include_to_next = [](int, PointId x) { return x; };
    f.describe = [](int n, PointId x) {
        return "point " + std::to_string(x) + " of {1.." + std::to_string(n) + "}";
    };
    return f;
}

namespace {
int permutation_parity(const Permutation& p) {
    CycleType ct = cycle_type(p);
    int transpositions = 0;
    for (int q = 2; q <= ct.n; ++q) transpositions += (q - 1) * ct.count(q);
    return transpositions % 2;
}
}  // namespace

SetFamily sign_set_family() {
    SetFamily f;
    f.name = "sign_cosets";
    f.min_n = 2;
    f.at = [](int n) {
        FiniteSnSet xs;
        xs.n = n;
        xs.points = {0, 1};
        xs.act = [](const Permutation& p, PointId x) {
            return x ^ static_cast<PointId>(permutation_parity(p));
        };
        return xs;
    };
    f.include_to_next = [](int, PointId x) { return x; };
    f.describe = [](int, PointId x) { return x == 0 ? std::string("even coset")
                                                    : std::string("odd coset"); };
    return f;
}

std::vector<std::vector<PointId>> orbit_decomposition(const FiniteSnSet& xs) {
    std::vector<Permutation> gens = symmetric_group_generators(xs.n);
    std::set<PointId> todo(xs.points.begin(), xs.points.end());
    std::vector<std::vector<PointId>> orbits;
    while (!todo.empty()) {
        PointId seed = *todo.begin();
        std::set<PointId> orbit;
        std::deque<PointId> work{seed};
        orbit.insert(seed);
        while (!work.empty()) {
            PointId x = work.front();
            work.pop_front();
            for (const Permutation& g : gens) {
                PointId y = xs.act(g, x);
                if (orbit.insert(y).second) work.push_back(y);
            }
        }
        std::vector<PointId> sorted(orbit.begin(), orbit.end());
        for (PointId x : sorted) todo.erase(x);
        orbits.push_back(std::move(sorted));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return orbits;
}

Partition orbit_type(const FiniteSnSet& xs, const std::vector<PointId>& orbit) {
    if (orbit.empty()) throw std::invalid_argument("orbit must be nonempty");
    int n = xs.n;
    if (n > kMaxBruteForceDegree)
        throw std::invalid_argument(
            "degree out of range (cap: n <= 8 for stabilizer enumeration)");
    PointId rep = orbit.front();
    // union-find over {1..n} under the stabilizer of rep
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    for (int x = 0; x <= n; ++x) parent[static_cast<std::size_t>(x)] = x;
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };
    for_each_permutation(n, [&](const Permutation& p) {
        if (xs.act(p, rep) != rep) return;
        for (int x = 1; x <= n; ++x) unite(x, p(x));
    });
    std::map<int, int> sizes;
    for (int x = 1; x <= n; ++x) ++sizes[find(x)];
    std::vector<int> parts;
    for (const auto& [root, sz] : sizes) {
        (void)root;
        parts.push_back(sz);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

namespace {

std::set<PointId> group_closure(const FiniteSnSet& xs, const std::set<PointId>& seeds) {
    std::vector<Permutation> gens = symmetric_group_generators(xs.n);
    std::set<PointId> out = seeds;
    std::deque<PointId> work(seeds.begin(), seeds.end());
    while (!work.empty()) {
        PointId x = work.front();
        work.pop_front();
        for (const Permutation& g : gens) {
            PointId y = xs.act(g, x);
            if (out.insert(y).second) work.push_back(y);
        }
    }
    return out;
}

struct LevelData {
    FiniteSnSet xs;
    std::vector<OrbitInfo> orbits;
};

}  // namespace

ActionStabilityReport action_stability_report(const SetFamily& fam, int n_min, int n_max) {
    if (n_min < fam.min_n || n_min > n_max) throw std::invalid_argument("bad window");
    if (n_max > kMaxBruteForceDegree - 1)
        throw std::invalid_argument(
            "degree out of range (cap: n <= 7 for action stability windows)");
    ActionStabilityReport rep;
    rep.family = fam.name;
    rep.n_min = n_min;
    rep.n_max = n_max;

    // orbit data for every level in the window plus one above (targets)
    std::map<int, LevelData> levels;
    for (int n = n_min; n <= n_max + 1; ++n) {
        LevelData ld;
        ld.xs = fam.at(n);
        for (const auto& orbit : orbit_decomposition(ld.xs)) {
            OrbitInfo info;
            info.points = orbit;
            info.type = orbit_type(ld.xs, orbit);
            info.stable_type = stable_tail(info.type);
            info.label = fam.describe(n, orbit.front()) + " [type " + info.type.to_string() +
                         ", size " + std::to_string(orbit.size()) + "]";
            ld.orbits.push_back(std::move(info));
        }
        levels.emplace(n, std::move(ld));
    }

    auto orbits_covering = [](const LevelData& ld, const std::set<PointId>& pts) {
        std::vector<std::string> out;
        for (const OrbitInfo& o : ld.orbits)
            if (pts.count(o.points.front())) out.push_back(o.label);
        return out;
    };

    for (int n = n_min; n <= n_max; ++n) {
        const LevelData& here = levels.at(n);
        const LevelData& above = levels.at(n + 1);
        ActionStabilityRow row;
        row.n = n;
        row.orbits = here.orbits;
        for (const OrbitInfo& o : here.orbits) row.inventory[o.stable_type] += 1;

        // consistency of phi_n on generators
        row.consistent = true;
        for (const Permutation& g : symmetric_group_generators(n)) {
            Permutation g_up = extend_fixing_top(g);
            for (PointId x : here.xs.points)
                if (fam.include_to_next(n, here.xs.act(g, x)) !=
                    above.xs.act(g_up, fam.include_to_next(n, x))) {
                    row.consistent = false;
                    break;
                }
            if (!row.consistent) break;
        }

        // injectivity
        std::set<PointId> image;
        for (PointId x : here.xs.points) image.insert(fam.include_to_next(n, x));
        row.injective = image.size() == here.xs.points.size();

        // S_{n+1}-surjectivity
        std::set<PointId> closure = group_closure(above.xs, image);
        std::set<PointId> all_above(above.xs.points.begin(), above.xs.points.end());
        row.surjective = closure == all_above;
        if (!row.surjective) {
            for (const OrbitInfo& o : above.orbits)
                if (!closure.count(o.points.front())) row.unreached_orbits.push_back(o.label);
        }

        // closure condition per stable type
        for (const auto& [mu, count] : row.inventory) {
            (void)count;
            ClosureCheck check;
            check.stable_type = mu;
            std::set<PointId> y_n;
            for (const OrbitInfo& o : here.orbits)
                if (o.stable_type == mu) y_n.insert(o.points.begin(), o.points.end());
            std::set<PointId> y_image;
            for (PointId x : y_n) y_image.insert(fam.include_to_next(n, x));
            std::set<PointId> y_closure = group_closure(above.xs, y_image);
            std::set<PointId> y_target;
            for (const OrbitInfo& o : above.orbits)
                if (o.stable_type == mu) y_target.insert(o.points.begin(), o.points.end());
            check.holds = y_closure == y_target;
            check.closure_orbits = orbits_covering(above, y_closure);
            check.target_orbits = orbits_covering(above, y_target);
            check.closure_points.assign(y_closure.begin(), y_closure.end());
            check.target_points.assign(y_target.begin(), y_target.end());
            rep.closure_all = rep.closure_all && check.holds;
            row.closure_checks.push_back(std::move(check));
        }

        rep.consistent_all = rep.consistent_all && row.consistent;
        rep.injective_all = rep.injective_all && row.injective;
        rep.surjective_all = rep.surjective_all && row.surjective;
        rep.rows.push_back(std::move(row));
    }

    // per-type onsets
    std::set<Partition> types;
    for (const auto& row : rep.rows)
        for (const auto& [mu, c] : row.inventory) {
            (void)c;
            types.insert(mu);
        }
    for (const Partition& mu : types) {
        std::vector<std::pair<int, long>> counts;
        for (const auto& row : rep.rows) {
            auto it = row.inventory.find(mu);
            counts.emplace_back(row.n, it == row.inventory.end() ? 0 : it->second);
        }
        std::size_t onset = counts.size() - 1;
        while (onset > 0 && counts[onset - 1].second == counts.back().second) --onset;
        rep.counts_stable_from[mu] = {counts[onset].first, counts.back().second};
    }

    if (rep.consistent_all && rep.injective_all && rep.surjective_all && rep.closure_all)
        rep.verdict = "strongly action stable";
    else if (rep.consistent_all && rep.injective_all)
        rep.verdict = "action stable";
    else
        rep.verdict = "not action stable";
    return rep;
}

}  // namespace symstab::stability
