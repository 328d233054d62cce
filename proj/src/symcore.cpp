#include "symstab/symcore.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symstab {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

SubsetMask full_mask(int n) {
    if (n < 0 || n > kMaxDegree)
        throw std::invalid_argument("degree out of range (cap: n <= 24 for bitmask subsets)");
    return n == 0 ? 0u : ((1u << n) - 1u);
}

int mask_card(SubsetMask a) { return __builtin_popcount(a); }

std::vector<int> mask_elements(SubsetMask a) {
    std::vector<int> xs;
    for (int i = 1; a != 0; ++i, a >>= 1)
        if (a & 1u) xs.push_back(i);
    return xs;
}

SubsetMask mask_of(std::initializer_list<int> xs) { return mask_of(std::vector<int>(xs)); }

SubsetMask mask_of(const std::vector<int>& xs) {
    SubsetMask m = 0;
    for (int x : xs) {
        if (x < 1 || x > kMaxDegree) throw std::invalid_argument("point out of range 1..24");
        m |= (1u << (x - 1));
    }
    return m;
}

std::string mask_to_string(SubsetMask a) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int x : mask_elements(a)) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    os << '}';
    return os.str();
}

void for_each_subset_of_card(int n, int k, const std::function<void(SubsetMask)>& fn) {
    if (n < 0 || n > kMaxDegree) throw std::invalid_argument("degree out of range");
    if (k < 0 || k > n) return;
    if (k == 0) {
        fn(0u);
        return;
    }
    // Gosper's hack walks k-masks in increasing numeric order.
    SubsetMask v = (1u << k) - 1u;
    SubsetMask limit = full_mask(n);
    while (v <= limit) {
        fn(v);
        SubsetMask c = v & (~v + 1u);
        SubsetMask r = v + c;
        if (r == 0) break;  // would wrap past the word
        v = (((r ^ v) >> 2) / c) | r;
    }
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    int n = degree();
    if (n > kMaxDegree) throw std::invalid_argument("degree out of range");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int x : images_) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)])
            throw std::invalid_argument("not a bijection on {1..n}");
        seen[static_cast<std::size_t>(x - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw std::invalid_argument("bad transposition");
    Permutation p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(a - 1)],
              p.images_[static_cast<std::size_t>(b - 1)]);
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(n);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (from < 1 || from > n) throw std::invalid_argument("cycle point out of range");
            p.images_[static_cast<std::size_t>(from - 1)] = to;
        }
    }
    return Permutation(std::move(p.images_));  // re-validate
}

Permutation Permutation::compose(const Permutation& other) const {
    if (degree() != other.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> im(images_.size());
    for (int x = 1; x <= degree(); ++x) im[static_cast<std::size_t>(x - 1)] = (*this)(other(x));
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int x = 1; x <= degree(); ++x) im[static_cast<std::size_t>((*this)(x)-1)] = x;
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= degree(); ++x)
        if ((*this)(x) != x) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) os << ',';
        os << images_[i];
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// Partition / CycleType / StableLabel

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::part(int i) const {
    return (i >= 1 && i <= rows()) ? parts[static_cast<std::size_t>(i - 1)] : 0;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    os << ')';
    return os.str();
}

CycleType::CycleType(int n_, std::vector<int> counts_) : n(n_), counts(std::move(counts_)) {
    if (static_cast<int>(counts.size()) != n) counts.resize(static_cast<std::size_t>(n), 0);
    long total = 0;
    for (int q = 1; q <= n; ++q) {
        if (count(q) < 0) throw std::invalid_argument("negative cycle count");
        total += static_cast<long>(q) * count(q);
    }
    if (total != n) throw std::invalid_argument("cycle counts do not sum to n");
}

int CycleType::count(int q) const {
    return (q >= 1 && q <= n) ? counts[static_cast<std::size_t>(q - 1)] : 0;
}

Partition CycleType::to_partition() const {
    std::vector<int> parts;
    for (int q = n; q >= 1; --q)
        for (int c = 0; c < count(q); ++c) parts.push_back(q);
    return parts.empty() ? Partition() : Partition(std::move(parts));
}

CycleType CycleType::from_partition(const Partition& lengths, int n) {
    if (lengths.weight() != n) throw std::invalid_argument("cycle lengths must sum to n");
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    for (int q : lengths.parts) ++counts[static_cast<std::size_t>(q - 1)];
    return CycleType(n, std::move(counts));
}

std::string CycleType::to_string() const {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (int q = 1; q <= n; ++q) {
        if (count(q) == 0) continue;
        if (!first) os << ',';
        os << 'i' << q << '=' << count(q);
        first = false;
    }
    os << ')';
    return os.str();
}

StableLabel::StableLabel(Partition mu_, int n_) : mu(std::move(mu_)), n(n_) {
    if (n - mu.weight() < mu.part(1))
        throw std::invalid_argument("unstable label: n - |mu| < mu_1");
}

std::string StableLabel::to_string() const {
    std::ostringstream os;
    os << 'V' << '(';
    for (std::size_t i = 0; i < mu.parts.size(); ++i) {
        if (i) os << ',';
        os << mu.parts[i];
    }
    if (mu.parts.empty()) os << '0';
    os << ")_" << n;
    return os.str();
}

// ---------------------------------------------------------------------------
// SubsetVector

SubsetVector::SubsetVector(int n) : n_(n) {
    if (n < 0 || n > kMaxDegree)
        throw std::invalid_argument("degree out of range (cap: n <= 24 for bitmask subsets)");
}

SubsetVector SubsetVector::monomial(int n, SubsetMask a, const Rational& c) {
    SubsetVector v(n);
    v.add(a, c);
    return v;
}

Rational SubsetVector::coeff(SubsetMask a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SubsetVector::add(SubsetMask a, const Rational& c) {
    if ((a & ~full_mask(n_)) != 0) throw std::invalid_argument("subset not contained in {1..n}");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SubsetVector& SubsetVector::operator+=(const SubsetVector& o) {
    if (n_ != o.n_) throw std::invalid_argument("degree mismatch");
    for (const auto& [a, c] : o.terms_) add(a, c);
    return *this;
}

SubsetVector& SubsetVector::operator-=(const SubsetVector& o) {
    if (n_ != o.n_) throw std::invalid_argument("degree mismatch");
    for (const auto& [a, c] : o.terms_) add(a, -c);
    return *this;
}

SubsetVector& SubsetVector::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, x] : terms_) x *= c;
    return *this;
}

std::string SubsetVector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (abs_c != 1) os << symstab::to_string(abs_c) << '*';
        os << mask_to_string(a);
        first = false;
    }
    return os.str();
}

int SubsetVector::homogeneous_card() const {
    int card = -1;
    for (const auto& [a, c] : terms_) {
        (void)c;
        int k = mask_card(a);
        if (card == -1)
            card = k;
        else if (card != k)
            return -1;
    }
    return card;
}

SubsetVector operator+(SubsetVector a, const SubsetVector& b) { return a += b; }
SubsetVector operator-(SubsetVector a, const SubsetVector& b) { return a -= b; }
SubsetVector operator*(const Rational& c, SubsetVector a) { return a *= c; }

// ---------------------------------------------------------------------------
// Group combinatorics

CycleType cycle_type(const Permutation& p) {
    int n = p.degree();
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int x = 1; x <= n; ++x) {
        if (seen[static_cast<std::size_t>(x - 1)]) continue;
        int len = 0;
        int y = x;
        do {
            seen[static_cast<std::size_t>(y - 1)] = true;
            y = p(y);
            ++len;
        } while (y != x);
        ++counts[static_cast<std::size_t>(len - 1)];
    }
    return CycleType(n, std::move(counts));
}

Permutation class_representative(const CycleType& ct) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int q : ct.to_partition().parts) {
        std::vector<int> cyc(static_cast<std::size_t>(q));
        std::iota(cyc.begin(), cyc.end(), next);
        next += q;
        cycles.push_back(std::move(cyc));
    }
    return Permutation::from_cycles(ct.n, cycles);
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<ConjugacyClass> out;
    BigInt nf = factorial(n);
    for (const Partition& lam : partitions(n)) {
        CycleType ct = CycleType::from_partition(lam, n);
        BigInt denom = 1;
        for (int q = 1; q <= n; ++q) {
            for (int c = 0; c < ct.count(q); ++c) denom *= q;
            denom *= factorial(ct.count(q));
        }
        out.push_back({ct, nf / denom});
    }
    return out;
}

SubsetMask act_subset(const Permutation& p, SubsetMask a) {
    SubsetMask out = 0;
    for (int x : mask_elements(a)) out |= (1u << (p(x) - 1));
    return out;
}

SubsetVector act_vector(const Permutation& p, const SubsetVector& v) {
    if (p.degree() != v.degree()) throw std::invalid_argument("degree mismatch");
    SubsetVector out(v.degree());
    for (const auto& [a, c] : v.terms()) out.add(act_subset(p, a), c);
    return out;
}

namespace {
void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur.empty() ? Partition() : Partition(cur));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

StableLabel to_stable(const Partition& lam, int n) {
    if (lam.weight() != n) throw std::invalid_argument("partition weight must equal n");
    std::vector<int> tail(lam.parts.begin() + (lam.parts.empty() ? 0 : 1), lam.parts.end());
    return StableLabel(tail.empty() ? Partition() : Partition(std::move(tail)), n);
}

Partition from_stable(const StableLabel& sl) {
    std::vector<int> parts;
    parts.push_back(sl.n - sl.mu.weight());
    parts.insert(parts.end(), sl.mu.parts.begin(), sl.mu.parts.end());
    if (parts[0] == 0) parts.erase(parts.begin());  // only for n == |mu|, mu empty
    return parts.empty() ? Partition() : Partition(std::move(parts));
}

Rational inner_product(const SubsetVector& v, const SubsetVector& w) {
    if (v.degree() != w.degree()) throw std::invalid_argument("degree mismatch");
    Rational out = 0;
    const auto& small = v.term_count() <= w.term_count() ? v : w;
    const auto& large = v.term_count() <= w.term_count() ? w : v;
    for (const auto& [a, c] : small.terms()) out += c * large.coeff(a);
    return out;
}

// ---------------------------------------------------------------------------
// EchelonBasis

EchelonBasis::EchelonBasis(int n) : n_(n) {}

SubsetVector EchelonBasis::reduce(SubsetVector v) const {
    if (v.degree() != n_) throw std::invalid_argument("degree mismatch");
    // Rows are fully reduced, so one ascending pass suffices.
    for (const auto& [pivot, row] : rows_) {
        Rational c = v.coeff(pivot);
        if (c != 0) v -= c * row;
    }
    return v;
}

bool EchelonBasis::insert(const SubsetVector& v) {
    SubsetVector r = reduce(v);
    if (r.is_zero()) return false;
    SubsetMask pivot = r.terms().begin()->first;
    r *= Rational(1) / r.terms().begin()->second;
    for (auto& [p, row] : rows_) {
        (void)p;
        Rational c = row.coeff(pivot);
        if (c != 0) row -= c * r;
    }
    rows_.emplace(pivot, std::move(r));
    return true;
}

bool EchelonBasis::contains(const SubsetVector& v) const { return reduce(v).is_zero(); }

std::vector<SubsetVector> EchelonBasis::basis() const {
    std::vector<SubsetVector> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_) {
        (void)p;
        out.push_back(row);
    }
    return out;
}

SpanResult rank_and_span(const std::vector<SubsetVector>& vs) {
    if (vs.empty()) return {0, {}};
    int n = vs.front().degree();
    EchelonBasis eb(n);
    for (const auto& v : vs) eb.insert(v);
    return {eb.rank(), eb.basis()};
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn,
                          bool relax_cap) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (!relax_cap && n > kMaxBruteForceDegree)
        throw std::invalid_argument(
            "degree out of range (cap: n <= 8 for full group enumeration)");
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    do {
        fn(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
}

std::vector<Permutation> symmetric_group_generators(int n) {
    if (n < 2) return {};
    std::vector<Permutation> gens;
    gens.push_back(Permutation::transposition(n, 1, 2));
    if (n > 2) {
        std::vector<int> cyc(static_cast<std::size_t>(n));
        std::iota(cyc.begin(), cyc.end(), 1);
        gens.push_back(Permutation::from_cycles(n, {cyc}));
    }
    return gens;
}

}  // namespace symstab
