#include "symstab/powerset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace symstab::powerset {

SubsetVector sigma(int n, int k, SubsetMask a) {
    if (n < 0 || n > kMaxDegree) throw std::invalid_argument("degree out of range");
    if ((a & ~full_mask(n)) != 0) throw std::invalid_argument("subset not contained in {1..n}");
    int i = mask_card(a);
    if (i > k) throw std::invalid_argument("card(A) > k");
    if (k > n) throw std::invalid_argument("k > n");
    SubsetVector out(n);
    // complement of a, renumbered
    std::vector<int> comp;
    for (int x = 1; x <= n; ++x)
        if (!(a & (1u << (x - 1)))) comp.push_back(x);
    int m = static_cast<int>(comp.size());
    for_each_subset_of_card(m, k - i, [&](SubsetMask b) {
        SubsetMask t = a;
        for (int j : mask_elements(b)) t |= (1u << (comp[static_cast<std::size_t>(j - 1)] - 1));
        out.add(t, 1);
    });
    return out;
}

std::vector<SubsetVector> filtration_basis(int n, int k, int i) {
    if (2 * k > n) throw std::invalid_argument("requires k <= n/2");
    if (i < 0 || i > k) throw std::invalid_argument("requires 0 <= i <= k");
    std::vector<SubsetVector> out;
    for_each_subset_of_card(n, i, [&](SubsetMask a) { out.push_back(sigma(n, k, a)); });
    return out;
}

SubsetVector complement_map(const SubsetVector& v) {
    SubsetMask all = full_mask(v.degree());
    SubsetVector out(v.degree());
    for (const auto& [a, c] : v.terms()) out.add(all & ~a, c);
    return out;
}

SubsetVector restriction(const SubsetVector& v) {
    int n = v.degree();
    if (n < 1) throw std::invalid_argument("restriction needs n >= 1");
    SubsetMask top = 1u << (n - 1);
    SubsetVector out(n - 1);
    for (const auto& [a, c] : v.terms())
        if (!(a & top)) out.add(a, c);
    return out;
}

SubsetVector inclusion(const SubsetVector& v) {
    SubsetVector out(v.degree() + 1);
    for (const auto& [a, c] : v.terms()) out.add(a, c);
    return out;
}

SubsetVector group_average_lift(int n, int k, int i) {
    if (!(0 <= i && i <= k - 1 && k <= n))
        throw std::invalid_argument("requires 0 <= i <= k-1 and k <= n");
    if (n + 1 - i > kMaxBruteForceDegree + 1 || n + 1 > kMaxDegree)
        throw std::invalid_argument("degree out of range (cap: (n+1-i)! group sum, n-i <= 8)");
    SubsetVector base = inclusion(sigma(n, k, full_mask(i)));
    SubsetVector sum(n + 1);
    // permutations of {i+1..n+1}, extended by the identity on 1..i
    std::vector<int> tail(static_cast<std::size_t>(n + 1 - i));
    std::iota(tail.begin(), tail.end(), i + 1);
    do {
        std::vector<int> im(static_cast<std::size_t>(n + 1));
        std::iota(im.begin(), im.end(), 1);
        for (int j = 0; j < n + 1 - i; ++j)
            im[static_cast<std::size_t>(i + j)] = tail[static_cast<std::size_t>(j)];
        sum += act_vector(Permutation(std::move(im)), base);
    } while (std::next_permutation(tail.begin(), tail.end()));
    sum *= Rational(1) / Rational(factorial(n - i) * (n - k + 1));
    sum -= act_vector(Permutation::transposition(n + 1, i + 1, n + 1), base);
    return sum;
}

std::vector<SubsetVector> sn_span(const std::vector<SubsetVector>& vs, int group_degree) {
    if (group_degree < 0 || group_degree > kMaxSpanDegree)
        throw std::invalid_argument("degree out of range (cap: n <= 12 for span closure)");
    if (vs.empty()) return {};
    for (const auto& v : vs)
        if (v.degree() != group_degree) throw std::invalid_argument("degree mismatch");
    std::vector<Permutation> gens = symmetric_group_generators(group_degree);
    EchelonBasis eb(group_degree);
    std::deque<SubsetVector> work;
    for (const auto& v : vs) {
        SubsetVector r = eb.reduce(v);
        if (eb.insert(r)) work.push_back(std::move(r));
    }
    while (!work.empty()) {
        SubsetVector v = std::move(work.front());
        work.pop_front();
        for (const auto& g : gens) {
            SubsetVector w = eb.reduce(act_vector(g, v));
            if (eb.insert(w)) work.push_back(std::move(w));
        }
    }
    return eb.basis();
}

}  // namespace symstab::powerset
