#include "symstab/arnold.hpp"

#include <sstream>
#include <stdexcept>

namespace symstab::arnold {

GeneratorIndex::GeneratorIndex(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
    if (a == b || a < 1 || b < 1) throw std::invalid_argument("generator needs i != j, both >= 1");
}

std::string GeneratorIndex::to_string() const {
    std::ostringstream os;
    os << 'w' << i << ',' << j;
    return os.str();
}

ExteriorTwoVector::ExteriorTwoVector(int n) : n_(n) {
    if (n < 0 || n > kMaxDegree) throw std::invalid_argument("degree out of range");
}

void ExteriorTwoVector::add(GeneratorIndex g1, GeneratorIndex g2, const Rational& c) {
    if (g1.j > n_ || g2.j > n_) throw std::invalid_argument("generator index exceeds n");
    if (g1 == g2) return;  // w ^ w = 0
    Rational coeff = c;
    if (g2 < g1) {
        std::swap(g1, g2);
        coeff = -coeff;
    }
    if (coeff == 0) return;
    Monomial key{g1, g2};
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ExteriorTwoVector& ExteriorTwoVector::operator+=(const ExteriorTwoVector& o) {
    if (n_ != o.n_) throw std::invalid_argument("degree mismatch");
    for (const auto& [m, c] : o.terms_) add(m.first, m.second, c);
    return *this;
}

ExteriorTwoVector& ExteriorTwoVector::operator-=(const ExteriorTwoVector& o) {
    if (n_ != o.n_) throw std::invalid_argument("degree mismatch");
    for (const auto& [m, c] : o.terms_) add(m.first, m.second, -c);
    return *this;
}

ExteriorTwoVector& ExteriorTwoVector::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

std::string ExteriorTwoVector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = c < 0 ? Rational(-c) : c;
        if (a != 1) os << symstab::to_string(a) << '*';
        os << m.first.to_string() << '^' << m.second.to_string();
        first = false;
    }
    return os.str();
}

GeneratorIndex act_degree1(const Permutation& p, const GeneratorIndex& g) {
    return GeneratorIndex(p(g.i), p(g.j));
}

ExteriorTwoVector act_degree2(const Permutation& p, const ExteriorTwoVector& v) {
    if (p.degree() != v.degree()) throw std::invalid_argument("degree mismatch");
    ExteriorTwoVector out(v.degree());
    for (const auto& [m, c] : v.terms())
        out.add(act_degree1(p, m.first), act_degree1(p, m.second), c);
    return out;
}

ExteriorTwoVector yb_relation(int i, int j, int k, int n) {
    if (!(1 <= i && i < j && j < k && k <= n))
        throw std::invalid_argument("YB needs 1 <= i < j < k <= n");
    ExteriorTwoVector out(n);
    out.add(GeneratorIndex(i, j), GeneratorIndex(i, k), 1);
    out.add(GeneratorIndex(i, j), GeneratorIndex(j, k), -1);
    out.add(GeneratorIndex(i, k), GeneratorIndex(j, k), 1);
    return out;
}

chars::CharacterFn i2_character_closed(int n) {
    return chars::perm_rep_character(
        [](const CycleType& ct) -> BigInt {
            BigInt i1 = ct.count(1), i2 = ct.count(2), i3 = ct.count(3);
            return i1 * (i1 - 1) * (i1 - 2) / 6 + i3 - i1 * i2;
        },
        n);
}

chars::CharacterFn i2_character_brute(int n) {
    if (n > kMaxBruteForceDegree)
        throw std::invalid_argument("degree out of range (cap: n <= 8 for brute-force traces)");
    chars::CharacterFn f{n, {}};
    for (const ConjugacyClass& cc : conjugacy_classes(n)) {
        Permutation rep = class_representative(cc.type);
        Rational trace = 0;
        for_each_subset_of_card(n, 3, [&](SubsetMask t) {
            if (act_subset(rep, t) != t) return;
            std::vector<int> e = mask_elements(t);
            ExteriorTwoVector yb = yb_relation(e[0], e[1], e[2], n);
            ExteriorTwoVector img = act_degree2(rep, yb);
            ExteriorTwoVector neg = yb;
            neg *= Rational(-1);
            if (img == yb)
                trace += 1;
            else if (img == neg)
                trace -= 1;
            else
                throw std::logic_error("YB relation not preserved up to sign");
        });
        f.values[cc.type.to_partition()] = trace;
    }
    return f;
}

chars::CharacterFn i2_character(int n) {
    chars::CharacterFn closed = i2_character_closed(n);
    if (n <= kMaxBruteForceDegree) {
        chars::CharacterFn brute = i2_character_brute(n);
        for (const auto& [cls, v] : closed.values)
            if (brute.at(cls) != v)
                throw std::logic_error("relation-ideal character mismatch at class " +
                                       cls.to_string());
    }
    return closed;
}

chars::CharacterFn lambda2_character_brute(int n) {
    std::vector<GeneratorIndex> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) gens.emplace_back(i, j);
    chars::CharacterFn f{n, {}};
    for (const ConjugacyClass& cc : conjugacy_classes(n)) {
        Permutation rep = class_representative(cc.type);
        Rational trace = 0;
        for (std::size_t a = 0; a < gens.size(); ++a)
            for (std::size_t b = a + 1; b < gens.size(); ++b) {
                GeneratorIndex h1 = act_degree1(rep, gens[a]);
                GeneratorIndex h2 = act_degree1(rep, gens[b]);
                if (h1 == gens[a] && h2 == gens[b])
                    trace += 1;
                else if (h1 == gens[b] && h2 == gens[a])
                    trace -= 1;  // swapped pair contributes the wedge sign
            }
        f.values[cc.type.to_partition()] = trace;
    }
    return f;
}

chars::CharacterFn degree1_character(int n) {
    return chars::perm_rep_character(
        [](const CycleType& ct) { return chars::count_fixed_subsets(ct, 2); }, n);
}

chars::MultiplicityTable lambda2_decompose(int n) {
    if (n < 2) throw std::invalid_argument("requires n >= 2");
    chars::CharacterFn closed = chars::exterior_square_character(degree1_character(n));
    chars::CharacterFn brute = lambda2_character_brute(n);
    for (const auto& [cls, v] : closed.values)
        if (brute.at(cls) != v)
            throw std::logic_error("exterior-square character mismatch at class " +
                                   cls.to_string());
    return chars::decompose_character(closed);
}

chars::MultiplicityTable i2_decompose(int n) { return chars::decompose_character(i2_character(n)); }

chars::MultiplicityTable arnold_decompose(int n, int degree) {
    if (n < 2) throw std::invalid_argument("requires n >= 2");
    if (degree == 1) return chars::decompose_character(degree1_character(n));
    if (degree == 2)
        return chars::decompose_character(
            chars::exterior_square_character(degree1_character(n)) - i2_character(n));
    throw std::invalid_argument("degree must be 1 or 2");
}

SubsetVector omega_full(int n) {
    SubsetVector out(n);
    for_each_subset_of_card(n, 2, [&](SubsetMask m) { out.add(m, 1); });
    return out;
}

SubsetVector omega_ij(int n, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("bad indices");
    SubsetVector out(n);
    for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        out.add(mask_of({i, k}), 1);
        out.add(mask_of({j, k}), -1);
    }
    return out;
}

SubsetVector omega_ijkl(int n, int i, int j, int k, int l) {
    SubsetVector out(n);
    out.add(mask_of({i, l}), 1);
    out.add(mask_of({i, k}), -1);
    out.add(mask_of({j, k}), 1);
    out.add(mask_of({j, l}), -1);
    return out;
}

OmegaBases omega_bases(int n) {
    if (n < 4) throw std::invalid_argument("requires n >= 4");
    OmegaBases out{omega_full(n), {}, {}};
    for (int j = 2; j <= n; ++j) out.standard.push_back(omega_ij(n, 1, j));
    // triangular scheme, row m = 4..n: Omega_{1,2,3,m} then Omega_{1,h,2,m}
    for (int m = 4; m <= n; ++m) {
        out.two_row.push_back(omega_ijkl(n, 1, 2, 3, m));
        for (int h = 3; h <= m - 1; ++h) out.two_row.push_back(omega_ijkl(n, 1, h, 2, m));
    }
    return out;
}

}  // namespace symstab::arnold
