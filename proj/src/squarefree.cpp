#include "symstab/squarefree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "symstab/powerset.hpp"

namespace symstab::squarefree {

DeltaPair::DeltaPair(std::vector<std::pair<int, int>> ps) : pairs(std::move(ps)) {
    SubsetMask seen = 0;
    for (auto& [h, j] : pairs) {
        if (!(1 <= h && h < j)) throw std::invalid_argument("delta pair needs h < j");
        SubsetMask two = (1u << (h - 1)) | (1u << (j - 1));
        if (seen & two) throw std::invalid_argument("delta pair points must be distinct");
        seen |= two;
    }
    std::sort(pairs.begin(), pairs.end());
}

SubsetMask DeltaPair::points() const {
    SubsetMask m = 0;
    for (auto& [h, j] : pairs) m |= (1u << (h - 1)) | (1u << (j - 1));
    return m;
}

std::string DeltaPair::to_string() const {
    std::ostringstream os;
    for (auto& [h, j] : pairs) os << '(' << h << '|' << j << ')';
    if (pairs.empty()) os << "()";
    return os.str();
}

SubsetVector sf_multiply(const SubsetVector& v, const SubsetVector& w) {
    if (v.degree() != w.degree()) throw std::invalid_argument("degree mismatch");
    SubsetVector out(v.degree());
    for (const auto& [a, ca] : v.terms())
        for (const auto& [b, cb] : w.terms())
            if ((a & b) == 0) out.add(a | b, ca * cb);
    return out;
}

SubsetVector viete(SubsetMask b, int k, int n) {
    if ((b & ~full_mask(n)) != 0) throw std::invalid_argument("subset not contained in {1..n}");
    if (k < 0 || k > mask_card(b)) throw std::invalid_argument("k > card(B)");
    std::vector<int> elems = mask_elements(b);
    SubsetVector out(n);
    for_each_subset_of_card(static_cast<int>(elems.size()), k, [&](SubsetMask idx) {
        SubsetMask t = 0;
        for (int j : mask_elements(idx)) t |= (1u << (elems[static_cast<std::size_t>(j - 1)] - 1));
        out.add(t, 1);
    });
    return out;
}

SubsetVector delta_product(const DeltaPair& dp, int n) {
    if ((dp.points() & ~full_mask(n)) != 0)
        throw std::invalid_argument("delta pair points exceed n");
    SubsetVector out = SubsetVector::monomial(n, 0);
    for (auto& [h, j] : dp.pairs) {
        SubsetVector binom(n);
        binom.add(1u << (h - 1), 1);
        binom.add(1u << (j - 1), -1);
        out = sf_multiply(out, binom);
    }
    return out;
}

SubsetVector psi_isometry(const SubsetVector& v, int k) {
    int n = v.degree();
    if (v.is_zero()) return SubsetVector(n);
    int i = v.homogeneous_card();
    if (i < 0) throw std::invalid_argument("psi needs a homogeneous input");
    if (i > k || k > n) throw std::invalid_argument("requires i <= k <= n");
    SubsetVector out(n);
    for (const auto& [a, c] : v.terms()) out += c * powerset::sigma(n, k, a);
    return out;
}

namespace {
// Internal recursion; returns the empty family above the 2i <= n range so
// the n-1 branch can vanish at the 2i = n boundary.
std::vector<DeltaPair> delta_set_rec(int n, int i) {
    if (i == 0) return {DeltaPair{}};
    if (2 * i > n) return {};
    std::vector<DeltaPair> out = delta_set_rec(n - 1, i);
    for (const DeltaPair& dp : delta_set_rec(n - 1, i - 1)) {
        SubsetMask used = dp.points() | (1u << (n - 1));
        int r = 0;
        for (int x = 1; x <= n; ++x) {
            if (!(used & (1u << (x - 1)))) {
                r = x;
                break;
            }
        }
        std::vector<std::pair<int, int>> ps = dp.pairs;
        ps.emplace_back(r, n);
        out.push_back(DeltaPair(std::move(ps)));
    }
    return out;
}
}  // namespace

std::vector<DeltaPair> canonical_delta_set(int n, int i) {
    if (n < 0 || i < 0 || 2 * i > n) throw std::invalid_argument("requires 0 <= 2i <= n");
    return delta_set_rec(n, i);
}

std::vector<SubsetVector> irreducible_basis(int n, int k, int i) {
    if (!(0 <= i && i <= k && 2 * k <= n))
        throw std::invalid_argument("requires 0 <= i <= k <= n/2");
    std::vector<SubsetVector> out;
    for (const DeltaPair& dp : canonical_delta_set(n, i)) {
        SubsetVector d = delta_product(dp, n);
        SubsetVector v = psi_isometry(d, k);
        // psi(delta) must coincide with the direct product delta * sigma^L
        SubsetVector direct = sf_multiply(d, viete(full_mask(n) & ~dp.points(), k - i, n));
        if (v != direct)
            throw std::logic_error("psi(delta) != delta * sigma^L (internal inconsistency)");
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace symstab::squarefree
