#include <doctest.h>

#include <random>

#include "symstab/chars.hpp"
#include "symstab/powerset.hpp"

using namespace symstab;
using namespace symstab::chars;

namespace {

// independent dimension oracle: hook length formula
BigInt hook_dimension(const Partition& lam) {
    int n = lam.weight();
    if (n == 0) return 1;
    std::vector<int> conj(static_cast<std::size_t>(lam.parts[0]), 0);
    for (int r : lam.parts)
        for (int c = 0; c < r; ++c) ++conj[static_cast<std::size_t>(c)];
    BigInt denom = 1;
    for (int r = 0; r < lam.rows(); ++r)
        for (int c = 0; c < lam.parts[static_cast<std::size_t>(r)]; ++c) {
            int arm = lam.parts[static_cast<std::size_t>(r)] - c - 1;
            int leg = conj[static_cast<std::size_t>(c)] - r - 1;
            denom *= arm + leg + 1;
        }
    return factorial(n) / denom;
}

CycleType ct(std::vector<int> lengths, int n) {
    return CycleType::from_partition(lengths.empty() ? Partition() : Partition(lengths), n);
}

}  // namespace

TEST_CASE("irreducible characters match the classical S_3 and S_4 tables") {
    // S_3, classes (1^3), (2,1), (3)
    CHECK(mn_character(Partition({3}), ct({1, 1, 1}, 3)) == 1);
    CHECK(mn_character(Partition({3}), ct({2, 1}, 3)) == 1);
    CHECK(mn_character(Partition({3}), ct({3}, 3)) == 1);
    CHECK(mn_character(Partition({2, 1}), ct({1, 1, 1}, 3)) == 2);
    CHECK(mn_character(Partition({2, 1}), ct({2, 1}, 3)) == 0);
    CHECK(mn_character(Partition({2, 1}), ct({3}, 3)) == -1);
    CHECK(mn_character(Partition({1, 1, 1}), ct({1, 1, 1}, 3)) == 1);
    CHECK(mn_character(Partition({1, 1, 1}), ct({2, 1}, 3)) == -1);
    CHECK(mn_character(Partition({1, 1, 1}), ct({3}, 3)) == 1);

    // S_4 rows against the standard table
    struct Row {
        Partition lam;
        std::vector<BigInt> values;  // classes (1^4),(2,1,1),(2,2),(3,1),(4)
    };
    std::vector<Row> rows = {
        {Partition({4}), {1, 1, 1, 1, 1}},
        {Partition({3, 1}), {3, 1, -1, 0, -1}},
        {Partition({2, 2}), {2, 0, 2, -1, 0}},
        {Partition({2, 1, 1}), {3, -1, -1, 0, 1}},
        {Partition({1, 1, 1, 1}), {1, -1, 1, 1, -1}},
    };
    std::vector<CycleType> classes = {ct({1, 1, 1, 1}, 4), ct({2, 1, 1}, 4), ct({2, 2}, 4),
                                      ct({3, 1}, 4), ct({4}, 4)};
    for (const Row& row : rows)
        for (std::size_t c = 0; c < classes.size(); ++c)
            CHECK(mn_character(row.lam, classes[c]) == row.values[c]);

    CHECK_THROWS_AS(mn_character(Partition({2, 1}), ct({2, 2}, 4)), std::invalid_argument);
}

TEST_CASE("character dimensions agree with the hook length formula, n <= 8") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lam : partitions(n)) CHECK(dimension(lam) == hook_dimension(lam));
}

TEST_CASE("orthonormality of irreducible characters, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        auto ps = partitions(n);
        for (std::size_t a = 0; a < ps.size(); ++a)
            for (std::size_t b = a; b < ps.size(); ++b) {
                Rational ip = character_inner_product(irreducible_character(ps[a]),
                                                      irreducible_character(ps[b]));
                CHECK(ip == (a == b ? 1 : 0));
            }
    }
}

TEST_CASE("closed-form character rows") {
    // row evaluations
    CHECK(closed_form_character(StableLabel(Partition({1}), 5), ct({1, 1, 1, 1, 1}, 5)) == 4);
    CHECK(closed_form_character(StableLabel(Partition({2}), 6), ct({1, 1, 1, 1, 1, 1}, 6)) == 9);
    CHECK(dim_two_row(6, 2) == 9);
    CHECK(closed_form_character(StableLabel(Partition({1, 1}), 4), ct({2, 1, 1}, 4)) == -1);
    CHECK(mn_character(Partition({2, 1, 1}), ct({2, 1, 1}, 4)) == -1);
    CHECK(closed_form_character(StableLabel(Partition({1}), 3), ct({2, 1}, 3)) == 0);

    CHECK(closed_form_supported(Partition({2, 1})));
    CHECK_FALSE(closed_form_supported(Partition({4})));
    CHECK_THROWS_AS(
        closed_form_character(StableLabel(Partition({4}), 10), ct({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 10)),
        std::invalid_argument);
}

TEST_CASE("closed forms agree with the recursion oracle on every class") {
    for (const Partition& mu : closed_form_labels()) {
        int start = std::max(4, mu.weight() + mu.part(1));
        for (int n = start; n <= 8; ++n) {
            StableLabel label(mu, n);
            Partition lam = from_stable(label);
            for (const auto& cc : conjugacy_classes(n))
                CHECK(closed_form_character(label, cc.type) ==
                      Rational(mn_character(lam, cc.type)));
        }
    }
}

TEST_CASE("permutation characters") {
    CharacterFn one = subsets_character(5, 1);
    CHECK(one.at(Partition({1, 1, 1, 1, 1})) == 5);
    CharacterFn two4 = subsets_character(4, 2);
    CHECK(two4.at(Partition({2, 2})) == 2);  // the two transposed pairs
    CharacterFn zero = subsets_character(6, 0);
    for (const auto& [cls, v] : zero.values) {
        (void)cls;
        CHECK(v == 1);
    }

    // brute-force fixed-subset counts against the cycle generating function
    for (int n = 2; n <= 6; ++n)
        for (const auto& cc : conjugacy_classes(n)) {
            Permutation rep = class_representative(cc.type);
            for (int k = 0; k <= n; ++k) {
                BigInt fixed = 0;
                for_each_subset_of_card(n, k, [&](SubsetMask a) {
                    if (act_subset(rep, a) == a) ++fixed;
                });
                CHECK(count_fixed_subsets(cc.type, k) == fixed);
            }
        }
}

TEST_CASE("inner products and Burnside counts") {
    CharacterFn triv6 = irreducible_character(Partition({6}));
    CHECK(character_inner_product(triv6, triv6) == 1);
    CHECK(character_inner_product(subsets_character(4, 2), irreducible_character(Partition({4}))) ==
          1);
    CHECK(character_inner_product(irreducible_character(Partition({2, 1})),
                                  irreducible_character(Partition({1, 1, 1}))) == 0);
}

TEST_CASE("decomposition tables") {
    MultiplicityTable t = decompose_character(subsets_character(4, 2));
    CHECK(t.entries ==
          std::map<Partition, long>{{Partition({4}), 1}, {Partition({3, 1}), 1},
                                    {Partition({2, 2}), 1}});
    CHECK(t.total_dimension() == 6);

    MultiplicityTable full = decompose_character(powerset_full_character(4));
    CHECK(full.entries ==
          std::map<Partition, long>{{Partition({4}), 5}, {Partition({3, 1}), 3},
                                    {Partition({2, 2}), 1}});
    CHECK(full.total_dimension() == 16);

    CharacterFn zero{3, {}};
    for (const auto& cc : conjugacy_classes(3)) zero.values[cc.type.to_partition()] = 0;
    CHECK(decompose_character(zero).entries.empty());

    // a tampered character is rejected
    CharacterFn bad = irreducible_character(Partition({3}));
    bad.values[Partition({3})] = Rational(1, 2);
    CHECK_THROWS_AS(decompose_character(bad), std::logic_error);
    CharacterFn neg = irreducible_character(Partition({3})) - irreducible_character(Partition({2, 1}));
    CHECK_THROWS_AS(decompose_character(neg), std::logic_error);
}

TEST_CASE("power map") {
    CHECK(power_map(ct({2}, 2)) == ct({1, 1}, 2));
    CHECK(power_map(ct({4}, 4)) == ct({2, 2}, 4));
    CHECK(power_map(ct({3}, 3)) == ct({3}, 3));

    // squaring a representative realizes the power map, n <= 6
    for (int n = 2; n <= 6; ++n)
        for (const auto& cc : conjugacy_classes(n)) {
            Permutation rep = class_representative(cc.type);
            CHECK(cycle_type(rep.compose(rep)) == power_map(cc.type));
        }
}

TEST_CASE("exterior squares of stable characters") {
    for (int n = 7; n <= 10; ++n) {
        CharacterFn v1 = irreducible_character(from_stable(StableLabel(Partition({1}), n)));
        MultiplicityTable l2v1 = decompose_character(exterior_square_character(v1));
        CHECK(l2v1.entries ==
              std::map<Partition, long>{{from_stable(StableLabel(Partition({1, 1}), n)), 1}});

        CharacterFn v2 = irreducible_character(from_stable(StableLabel(Partition({2}), n)));
        MultiplicityTable l2v2 = decompose_character(exterior_square_character(v2));
        std::map<Partition, long> expect;
        for (const auto& mu : {Partition({1, 1}), Partition({2, 1}), Partition({1, 1, 1}),
                               Partition({3, 1})})
            expect[from_stable(StableLabel(mu, n))] = 1;
        CHECK(l2v2.entries == expect);

        // tensor identity for the product of the two stable characters
        MultiplicityTable prod = decompose_character(v1 * v2);
        std::map<Partition, long> expect_prod;
        for (const auto& mu : {Partition({1}), Partition({2}), Partition({1, 1}), Partition({3}),
                               Partition({2, 1})})
            expect_prod[from_stable(StableLabel(mu, n))] = 1;
        CHECK(prod.entries == expect_prod);
    }

    // dimension of the exterior square at the identity
    CharacterFn f = subsets_character(6, 2);
    Rational d = f.at(Partition({1, 1, 1, 1, 1, 1}));
    CHECK(exterior_square_character(f).at(Partition({1, 1, 1, 1, 1, 1})) == d * (d - 1) / 2);
}

TEST_CASE("two-row dimensions") {
    CHECK(dim_two_row(7, 2) == 14);
    CHECK(dim_two_row(4, 2) == 2);
    CHECK(dim_two_row(9, 0) == 1);
    CHECK_THROWS_AS(dim_two_row(4, 3), std::invalid_argument);
    for (int n = 1; n <= 10; ++n)
        for (int k = 0; 2 * k <= n; ++k) {
            std::vector<int> parts{n - k};
            if (k > 0) parts.push_back(k);
            CHECK(dim_two_row(n, k) == dimension(Partition(parts)));
        }
}

TEST_CASE("isotypic projections") {
    SubsetVector inv = powerset::sigma(4, 2, 0);
    CHECK(isotypic_projection(Partition({4}), inv) == inv);
    CHECK(isotypic_projection(Partition({3, 1}), inv).is_zero());

    // the standard component of the 2-subset module at n=4 is 3-dimensional
    std::vector<SubsetVector> basis;
    for_each_subset_of_card(4, 2, [&](SubsetMask a) {
        basis.push_back(SubsetVector::monomial(4, a));
    });
    auto proj = isotypic_projection_batch(Partition({3, 1}), basis);
    CHECK(rank_and_span(proj).rank == 3);

    // idempotence on random vectors
    std::mt19937 rng(17);
    for (int n = 3; n <= 5; ++n) {
        SubsetVector v(n);
        std::uniform_int_distribution<SubsetMask> mask(0, full_mask(n));
        for (int j = 0; j < 5; ++j) v.add(mask(rng), j + 1);
        for (const Partition& lam : partitions(n)) {
            SubsetVector p = isotypic_projection(lam, v);
            CHECK(isotypic_projection(lam, p) == p);
        }
    }
    CHECK_THROWS_AS(isotypic_projection(Partition({4}), SubsetVector(3)), std::invalid_argument);
}

TEST_CASE("module characters by trace") {
    // the filtration level i piece is equivalent to the i-subset module
    for (int n = 4; n <= 6; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            for (int i = 0; i <= k; ++i) {
                CharacterFn chi = module_character(powerset::filtration_basis(n, k, i), n);
                CharacterFn perm = subsets_character(n, i);
                for (const auto& [cls, v] : chi.values) CHECK(v == perm.at(cls));
            }

    // a non-invariant span is rejected
    std::vector<SubsetVector> bad{SubsetVector::monomial(3, mask_of({1}))};
    CHECK_THROWS_AS(module_character(bad, 3), std::invalid_argument);
}
