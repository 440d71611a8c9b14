#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace oracle {

int pairing(int d, Mask x, Mask y) {
    int sum = 0;
    for (int i = 1; i <= 2 * d; ++i)
        for (int j = 1; j <= 2 * d; ++j)
            if (i - j == 1 || j - i == 1) sum += static_cast<int>(((x >> (i - 1)) & 1) * ((y >> (j - 1)) & 1));
    return sum % 2;
}

Mask e(int i) { return Mask{1} << (i - 1); }

Mask interval(int a, int b) {
    Mask out = 0;
    for (int j = a; j <= b; ++j) out |= e(j);
    return out;
}

ElementSet span(int d, const std::vector<Mask>& generators) {
    if (d > kMaxOracleD) throw std::invalid_argument("oracle span: d too large");
    ElementSet set = 1;  // {0}
    for (Mask g : generators) {
        ElementSet next = set;
        for (Mask x : elements(set)) next |= ElementSet{1} << (x ^ g);
        set = next;
    }
    return set;
}

std::vector<Mask> elements(ElementSet set) {
    std::vector<Mask> out;
    for (Mask x = 0; x < 64; ++x)
        if ((set >> x) & 1) out.push_back(x);
    return out;
}

bool contains(ElementSet set, Mask x) { return x < 64 && ((set >> x) & 1); }

int dimension(ElementSet set) { return std::countr_zero(static_cast<unsigned>(std::popcount(set))); }

namespace {

// Representative in V of the child basis vector e^i_k.
Mask induced(int d, int i, int k) {
    if (k <= i - 2) return e(k);
    if (k == i - 1) return e(i - 1) | (i + 1 <= 2 * d ? e(i + 1) : 0);
    return e(k + 2);
}

} // namespace

Mask project(int d, int i, Mask x) {
    const int child = 2 * (d - 1);
    for (Mask y = 0; y < (Mask{1} << child); ++y) {
        Mask lift = 0;
        for (int k = 1; k <= child; ++k)
            if ((y >> (k - 1)) & 1) lift ^= induced(d, i, k);
        if (lift == x || (lift ^ e(i)) == x) return y;
    }
    throw std::logic_error("oracle project: no preimage");
}

bool in_family(int d, ElementSet X) {
    if (X == 1) return true;
    if (d == 0) return false;
    const auto members = elements(X);
    for (int i = 1; i <= 2 * d; ++i) {
        if (!contains(X, e(i))) continue;
        bool perp = true;
        for (Mask x : members) perp = perp && pairing(d, x, e(i)) == 0;
        if (!perp) continue;
        ElementSet image = 0;
        for (Mask x : members) image |= ElementSet{1} << project(d, i, x);
        if (in_family(d - 1, image)) return true;
    }
    return false;
}

std::set<ElementSet> isotropic_subspaces(int d) {
    const Mask n = Mask{1} << (2 * d);
    std::set<ElementSet> seen{1};
    std::deque<ElementSet> queue{1};
    while (!queue.empty()) {
        const ElementSet X = queue.front();
        queue.pop_front();
        const auto members = elements(X);
        for (Mask v = 1; v < n; ++v) {
            if (contains(X, v)) continue;
            bool perp = true;
            for (Mask x : members) perp = perp && pairing(d, x, v) == 0;
            if (!perp) continue;
            ElementSet next = X;
            for (Mask x : members) next |= ElementSet{1} << (x ^ v);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return seen;
}

std::set<ElementSet> family(int d) {
    std::set<ElementSet> out;
    for (ElementSet X : isotropic_subspaces(d))
        if (in_family(d, X)) out.insert(X);
    return out;
}

std::vector<std::pair<int, int>> alpha(int d, ElementSet X) {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= 2 * d; ++a)
        for (int b = a; b <= 2 * d; b += 2)
            if (contains(X, interval(a, b))) out.emplace_back(a, b);
    return out;
}

std::vector<int> coverage(int d, ElementSet X) {
    std::vector<int> f(static_cast<std::size_t>(2 * d), 0);
    for (auto [a, b] : alpha(d, X))
        for (int j = a; j <= b; ++j) ++f[static_cast<std::size_t>(j - 1)];
    return f;
}

Mask phi(int d, ElementSet X) {
    const auto f = coverage(d, X);
    Mask out = 0;
    for (int j = 1; j <= 2 * d; ++j) {
        const int c = f[static_cast<std::size_t>(j - 1)];
        if ((c * (c + 1) / 2) % 2 == 1) out |= e(j);
    }
    return out;
}

ElementSet tilde_v(int d) {
    ElementSet out = 0;
    for (ElementSet X : family(d)) out |= X;
    return out;
}

std::map<Mask, int> reachable(int d) {
    std::map<Mask, int> distance{{0, 0}};
    std::deque<Mask> queue{0};
    while (!queue.empty()) {
        const Mask x = queue.front();
        queue.pop_front();
        for (int j = 1; j <= 2 * d; ++j) {
            if (pairing(d, e(j), x) != 0) continue;
            const Mask y = x ^ e(j);
            if (distance.emplace(y, distance[x] + 1).second) queue.push_back(y);
        }
    }
    return distance;
}

mpz_class leibniz_determinant(const Matrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    mpz_class total = 0;
    do {
        long inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
        mpz_class term = inversions % 2 ? -1 : 1;
        for (std::size_t r = 0; r < n && term != 0; ++r) term *= m[r][perm[r]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

mpq_class rational_determinant(const Matrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = m[r][c];
    mpq_class det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            const mpq_class factor = a[r][k] / a[k][k];
            for (std::size_t c = k; c < n; ++c) a[r][c] -= factor * a[k][c];
        }
    }
    return det;
}

long kostka(const std::vector<int>& lambda, const std::vector<int>& mu) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < static_cast<int>(lambda.size()); ++r)
        for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
    const int n = static_cast<int>(cells.size());
    const int k = static_cast<int>(mu.size());
    long total = 0;
    long fillings = 1;
    for (int t = 0; t < n; ++t) fillings *= k;
    std::vector<int> value(static_cast<std::size_t>(n));
    for (long code = 0; code < fillings; ++code) {
        long rest = code;
        std::vector<int> content(static_cast<std::size_t>(k), 0);
        std::map<std::pair<int, int>, int> at;
        for (int t = 0; t < n; ++t) {
            value[static_cast<std::size_t>(t)] = static_cast<int>(rest % k) + 1;
            rest /= k;
            ++content[static_cast<std::size_t>(value[static_cast<std::size_t>(t)] - 1)];
            at[cells[static_cast<std::size_t>(t)]] = value[static_cast<std::size_t>(t)];
        }
        if (content != mu) continue;
        bool ok = true;
        for (const auto& [cell, v] : at) {
            const auto right = at.find({cell.first, cell.second + 1});
            const auto below = at.find({cell.first + 1, cell.second});
            if (right != at.end() && right->second < v) ok = false;
            if (below != at.end() && below->second <= v) ok = false;
        }
        total += ok;
    }
    return total;
}

} // namespace oracle
