#include "symstab/chars.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace symstab::chars {

const Rational& CharacterFn::at(const Partition& class_partition) const {
    auto it = values.find(class_partition);
    if (it == values.end()) throw std::invalid_argument("unknown conjugacy class");
    return it->second;
}

namespace {
void check_same_degree(const CharacterFn& f, const CharacterFn& g) {
    if (f.n != g.n) throw std::invalid_argument("degree mismatch");
}
}  // namespace

CharacterFn operator+(CharacterFn f, const CharacterFn& g) {
    check_same_degree(f, g);
    for (auto& [cls, v] : f.values) v += g.at(cls);
    return f;
}

CharacterFn operator-(CharacterFn f, const CharacterFn& g) {
    check_same_degree(f, g);
    for (auto& [cls, v] : f.values) v -= g.at(cls);
    return f;
}

CharacterFn operator*(CharacterFn f, const CharacterFn& g) {
    check_same_degree(f, g);
    for (auto& [cls, v] : f.values) v *= g.at(cls);
    return f;
}

long MultiplicityTable::mult(const Partition& lam) const {
    auto it = entries.find(lam);
    return it == entries.end() ? 0 : it->second;
}

BigInt MultiplicityTable::total_dimension() const {
    BigInt out = 0;
    for (const auto& [lam, m] : entries) out += m * dimension(lam);
    return out;
}

std::string MultiplicityTable::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [lam, m] : entries) {
        if (!first) os << ", ";
        os << lam.to_string() << ':' << m;
        first = false;
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama

namespace {

// Beta-numbers b_i = lam_i + (rows - i).  Removing a border strip of
// length q means replacing some b by b - q when b - q is not already a
// beta number; the strip height is the number of beta numbers jumped over.
BigInt mn_rec(std::vector<int> lam, std::vector<int> cycles,
              std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt>& memo) {
    if (cycles.empty()) return lam.empty() ? 1 : 0;
    auto key = std::make_pair(lam, cycles);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int q = cycles.back();  // remove the smallest cycle first
    cycles.pop_back();

    int t = static_cast<int>(lam.size());
    std::vector<int> beta(lam.begin(), lam.end());
    for (int i = 0; i < t; ++i) beta[static_cast<std::size_t>(i)] += t - 1 - i;
    // beta is strictly decreasing

    BigInt total = 0;
    for (int i = 0; i < t; ++i) {
        int b = beta[static_cast<std::size_t>(i)];
        if (b < q) continue;
        int nb = b - q;
        int height = 0;
        bool occupied = false;
        for (int j = i + 1; j < t; ++j) {
            int bj = beta[static_cast<std::size_t>(j)];
            if (bj == nb) {
                occupied = true;
                break;
            }
            if (bj > nb) ++height;
        }
        if (occupied) continue;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<std::size_t>(i)] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> nlam(static_cast<std::size_t>(t));
        for (int j = 0; j < t; ++j)
            nlam[static_cast<std::size_t>(j)] = nbeta[static_cast<std::size_t>(j)] - (t - 1 - j);
        while (!nlam.empty() && nlam.back() == 0) nlam.pop_back();
        BigInt sub = mn_rec(std::move(nlam), cycles, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

struct CharTable {
    std::vector<Partition> lams;     // row labels, canonical order
    std::vector<Partition> classes;  // column labels, canonical order
    std::map<Partition, std::map<Partition, BigInt>> chi;  // chi[lam][class]
};

const CharTable& character_table(int n) {
    static std::mutex mu;
    static std::map<int, CharTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n > kMaxCharacterDegree)
        throw std::invalid_argument("degree out of range (cap: n <= 10 for character tables)");
    CharTable t;
    t.lams = partitions(n);
    t.classes = t.lams;
    std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo;
    for (const Partition& lam : t.lams)
        for (const Partition& cls : t.classes)
            t.chi[lam][cls] = mn_rec(lam.parts, cls.parts, memo);
    return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

BigInt mn_character(const Partition& lam, const CycleType& ct) {
    if (lam.weight() != ct.n) throw std::invalid_argument("weight mismatch");
    if (ct.n <= kMaxCharacterDegree) return character_table(ct.n).chi.at(lam).at(ct.to_partition());
    std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo;
    return mn_rec(lam.parts, ct.to_partition().parts, memo);
}

CharacterFn irreducible_character(const Partition& lam) {
    int n = lam.weight();
    const CharTable& t = character_table(n);
    CharacterFn f{n, {}};
    for (const Partition& cls : t.classes) f.values[cls] = Rational(t.chi.at(lam).at(cls));
    return f;
}

BigInt dimension(const Partition& lam) {
    int n = lam.weight();
    return mn_character(lam, CycleType::from_partition(
                                 n == 0 ? Partition() : Partition(std::vector<int>(n, 1)), n));
}

// ---------------------------------------------------------------------------
// Closed-form character polynomials

bool closed_form_supported(const Partition& mu) {
    for (const Partition& p : closed_form_labels())
        if (p == mu) return true;
    return false;
}

std::vector<Partition> closed_form_labels() {
    return {Partition({1}),    Partition({1, 1}), Partition({2}),    Partition({3}),
            Partition({2, 1}), Partition({1, 1, 1}), Partition({3, 1})};
}

Rational closed_form_character(const StableLabel& label, const CycleType& ct) {
    if (label.n != ct.n) throw std::invalid_argument("degree mismatch");
    Rational i1 = ct.count(1), i2 = ct.count(2), i3 = ct.count(3), i4 = ct.count(4);
    const std::vector<int>& mu = label.mu.parts;
    auto choose2 = [](const Rational& x) { return x * (x - 1) / 2; };
    auto choose3 = [](const Rational& x) { return x * (x - 1) * (x - 2) / 6; };
    if (mu == std::vector<int>{1}) return i1 - 1;
    if (mu == std::vector<int>{1, 1}) return choose2(i1 - 1) - i2;
    if (mu == std::vector<int>{2}) return i1 * (i1 - 3) / 2 + i2;
    if (mu == std::vector<int>{3}) return i1 * (i1 - 1) * (i1 - 5) / 6 + i2 * (i1 - 1) + i3;
    if (mu == std::vector<int>{2, 1}) return i1 * (i1 - 2) * (i1 - 4) / 3 - i3;
    if (mu == std::vector<int>{1, 1, 1}) return choose3(i1 - 1) + i2 * (1 - i1) + i3;
    if (mu == std::vector<int>{3, 1})
        return i1 * (i1 - 1) * (i1 - 3) * (i1 - 6) / 8 + i2 * choose2(i1 - 1) - choose2(i2) - i4;
    throw std::invalid_argument("unsupported closed-form label " + label.to_string());
}

// ---------------------------------------------------------------------------

CharacterFn perm_rep_character(const std::function<BigInt(const CycleType&)>& fixed_points,
                               int n) {
    CharacterFn f{n, {}};
    for (const ConjugacyClass& cc : conjugacy_classes(n))
        f.values[cc.type.to_partition()] = Rational(fixed_points(cc.type));
    return f;
}

BigInt count_fixed_subsets(const CycleType& ct, int k) {
    // [z^k] prod_q (1 + z^q)^{i_q}: a fixed k-subset is a union of cycles.
    int n = ct.n;
    if (k < 0 || k > n) return 0;
    std::vector<BigInt> poly(static_cast<std::size_t>(k + 1), 0);
    poly[0] = 1;
    for (int q = 1; q <= n; ++q) {
        for (int c = 0; c < ct.count(q); ++c) {
            for (int d = k; d >= q; --d)
                poly[static_cast<std::size_t>(d)] += poly[static_cast<std::size_t>(d - q)];
        }
    }
    return poly[static_cast<std::size_t>(k)];
}

CharacterFn subsets_character(int n, int k) {
    return perm_rep_character(
        [k](const CycleType& ct) { return count_fixed_subsets(ct, k); }, n);
}

CharacterFn powerset_full_character(int n) {
    return perm_rep_character(
        [](const CycleType& ct) -> BigInt {
            int cycles = 0;
            for (int q = 1; q <= ct.n; ++q) cycles += ct.count(q);
            BigInt out = 1;
            return out << cycles;
        },
        n);
}

Rational character_inner_product(const CharacterFn& f, const CharacterFn& g) {
    check_same_degree(f, g);
    Rational sum = 0;
    for (const ConjugacyClass& cc : conjugacy_classes(f.n)) {
        Partition cls = cc.type.to_partition();
        sum += Rational(cc.size) * f.at(cls) * g.at(cls);
    }
    return sum / Rational(factorial(f.n));
}

MultiplicityTable decompose_character(const CharacterFn& f) {
    const CharTable& t = character_table(f.n);
    MultiplicityTable out{f.n, {}};
    for (const Partition& lam : t.lams) {
        Rational m = character_inner_product(f, irreducible_character(lam));
        if (!is_integer(m) || m < 0)
            throw std::logic_error("not a character: multiplicity of " + lam.to_string() +
                                   " is " + to_string(m));
        if (m != 0) out.entries[lam] = static_cast<long>(numerator(m));
    }
    // exact reconstruction
    for (const Partition& cls : t.classes) {
        Rational sum = 0;
        for (const auto& [lam, m] : out.entries) sum += Rational(m * t.chi.at(lam).at(cls));
        if (sum != f.at(cls))
            throw std::logic_error("not a character: reconstruction fails at class " +
                                   cls.to_string());
    }
    return out;
}

CycleType power_map(const CycleType& ct) {
    std::vector<int> counts(static_cast<std::size_t>(ct.n), 0);
    for (int q = 1; q <= ct.n; ++q) {
        if (ct.count(q) == 0) continue;
        if (q % 2 == 1)
            counts[static_cast<std::size_t>(q - 1)] += ct.count(q);
        else
            counts[static_cast<std::size_t>(q / 2 - 1)] += 2 * ct.count(q);
    }
    return CycleType(ct.n, std::move(counts));
}

CharacterFn exterior_square_character(const CharacterFn& f) {
    CharacterFn out{f.n, {}};
    for (const ConjugacyClass& cc : conjugacy_classes(f.n)) {
        Partition cls = cc.type.to_partition();
        Rational v = f.at(cls);
        Rational v2 = f.at(power_map(cc.type).to_partition());
        out.values[cls] = (v * v - v2) / 2;
    }
    return out;
}

BigInt dim_two_row(int n, int k) {
    if (k < 0 || 2 * k > n) throw std::invalid_argument("requires 0 <= k <= n/2");
    return binomial(n, k) - binomial(n, k - 1);
}

SubsetVector isotypic_projection(const Partition& lam, const SubsetVector& v) {
    return isotypic_projection_batch(lam, {v}).front();
}

std::vector<SubsetVector> isotypic_projection_batch(const Partition& lam,
                                                    const std::vector<SubsetVector>& vs) {
    if (vs.empty()) return {};
    int n = vs.front().degree();
    if (lam.weight() != n) throw std::invalid_argument("weight mismatch");
    if (n > kMaxBruteForceDegree)
        throw std::invalid_argument(
            "degree out of range (cap: n <= 8 for isotypic projections)");
    for (const auto& v : vs)
        if (v.degree() != n) throw std::invalid_argument("degree mismatch");
    const CharTable& t = character_table(n);
    const auto& chi_row = t.chi.at(lam);
    std::vector<SubsetVector> out(vs.size(), SubsetVector(n));
    for_each_permutation(n, [&](const Permutation& p) {
        const BigInt& chi = chi_row.at(cycle_type(p).to_partition());
        if (chi == 0) return;
        Rational c(chi);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (const auto& [a, coeff] : vs[i].terms()) out[i].add(act_subset(p, a), c * coeff);
    });
    Rational scale = Rational(dimension(lam)) / Rational(factorial(n));
    for (auto& w : out) w *= scale;
    return out;
}

CharacterFn module_character(const std::vector<SubsetVector>& span_vectors, int n) {
    EchelonBasis eb(n);
    for (const auto& v : span_vectors) {
        if (v.degree() != n) throw std::invalid_argument("degree mismatch");
        eb.insert(v);
    }
    for (const Permutation& g : symmetric_group_generators(n))
        for (const auto& [p, row] : eb.rows()) {
            (void)p;
            if (!eb.contains(act_vector(g, row)))
                throw std::invalid_argument("span is not S_n-invariant");
        }
    CharacterFn f{n, {}};
    for (const ConjugacyClass& cc : conjugacy_classes(n)) {
        Permutation rep = class_representative(cc.type);
        Rational trace = 0;
        // rows are fully reduced, so the coordinate of any w along the row
        // with pivot p is just w[p]
        for (const auto& [pivot, row] : eb.rows()) trace += act_vector(rep, row).coeff(pivot);
        f.values[cc.type.to_partition()] = trace;
    }
    return f;
}

}  // namespace symstab::chars
