#include "isofam/symfam.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "isofam/error.hpp"

namespace isofam {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0) raise(ErrorKind::Precondition, "partition parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            raise(ErrorKind::Precondition, "partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    while (!text.empty()) {
        const auto plus = text.find('+');
        const auto token = text.substr(0, plus);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            raise(ErrorKind::Precondition, "cannot parse partition '" + std::string(text) + "'");
        parts.push_back(value);
        if (plus == std::string_view::npos) break;
        text.remove_prefix(plus + 1);
    }
    if (parts.empty()) raise(ErrorKind::Precondition, "empty partition string");
    return Partition(std::move(parts));
}

Partition Partition::column(int m) { return Partition(std::vector<int>(static_cast<std::size_t>(m), 1)); }

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k > 0) out += '+';
        out += std::to_string(parts_[k]);
    }
    return out;
}

std::strong_ordering operator<=>(const Partition& lhs, const Partition& rhs) {
    if (auto c = lhs.size_ <=> rhs.size_; c != 0) return c;
    // Larger leading parts first.
    return rhs.parts_ <=> lhs.parts_;
}

namespace {

void generate(int remaining, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
        prefix.push_back(part);
        generate(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

void check_same_size(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        raise(ErrorKind::Precondition, "kostka: |" + lambda.to_string() + "| != |" + mu.to_string() + "|");
}

// Fills cells row by row; rows weakly increase, columns strictly increase.
struct TableauCounter {
    const std::vector<int>& shape;
    std::vector<int> remaining;  // content still to place, per value
    std::vector<std::vector<int>> cells;

    long count(std::size_t row, int col) {
        if (row == shape.size()) return 1;
        if (col == shape[row]) return count(row + 1, 0);
        const int left = col > 0 ? cells[row][static_cast<std::size_t>(col - 1)] : 0;
        const int above = row > 0 ? cells[row - 1][static_cast<std::size_t>(col)] : -1;
        long total = 0;
        for (int v = std::max(left, above + 1); v < static_cast<int>(remaining.size()); ++v) {
            if (remaining[static_cast<std::size_t>(v)] == 0) continue;
            --remaining[static_cast<std::size_t>(v)];
            cells[row][static_cast<std::size_t>(col)] = v;
            total += count(row, col + 1);
            ++remaining[static_cast<std::size_t>(v)];
        }
        return total;
    }
};

using Permutation = std::vector<int>;

std::vector<Permutation> symmetric_group(int m) {
    Permutation p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int sign_of(const Permutation& p) {
    int inversions = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// Number of ordered set partitions with block sizes `composition` that g
// preserves block by block: brute force over all labelings.
long fixed_tabloids(const Permutation& g, const std::vector<int>& composition) {
    std::vector<int> labels;
    for (std::size_t block = 0; block < composition.size(); ++block)
        labels.insert(labels.end(), static_cast<std::size_t>(composition[block]), static_cast<int>(block));
    long fixed = 0;
    do {
        bool invariant = true;
        for (std::size_t x = 0; x < labels.size() && invariant; ++x)
            invariant = labels[static_cast<std::size_t>(g[x])] == labels[x];
        if (invariant) ++fixed;
    } while (std::next_permutation(labels.begin(), labels.end()));
    return fixed;
}

// chi^lambda(g) = sum over sigma in S_l of sgn(sigma) * pi_{lambda_i - i + sigma(i)}(g).
long irreducible_character(const Partition& lambda, const Permutation& g) {
    const int l = lambda.length();
    long value = 0;
    for (const auto& sigma : symmetric_group(l)) {
        std::vector<int> composition;
        bool vanishes = false;
        for (int i = 0; i < l; ++i) {
            const int part = lambda[i] - i + sigma[static_cast<std::size_t>(i)];
            if (part < 0) {
                vanishes = true;
                break;
            }
            if (part > 0) composition.push_back(part);
        }
        if (vanishes) continue;
        value += sign_of(sigma) * fixed_tabloids(g, composition);
    }
    return value;
}

} // namespace

std::vector<Partition> partitions(int m) {
    if (m < 0) raise(ErrorKind::Precondition, "partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> prefix;
    if (m == 0) return {Partition()};
    generate(m, m, prefix, out);
    return out;
}

std::vector<Partition> nonsign_partitions(int m) {
    auto all = partitions(m);
    std::erase(all, Partition::column(m));
    return all;
}

long kostka(const Partition& lambda, const Partition& mu) {
    check_same_size(lambda, mu);
    std::vector<std::vector<int>> cells;
    for (int part : lambda.parts()) cells.emplace_back(static_cast<std::size_t>(part), 0);
    TableauCounter counter{lambda.parts(), mu.parts(), std::move(cells)};
    return counter.count(0, 0);
}

long kostka_by_characters(const Partition& lambda, const Partition& mu) {
    check_same_size(lambda, mu);
    const auto group = symmetric_group(lambda.size());
    long inner = 0;
    for (const auto& g : group) inner += irreducible_character(lambda, g) * fixed_tabloids(g, mu.parts());
    const long order = static_cast<long>(group.size());
    if (inner % order != 0)
        raise(ErrorKind::TheoremViolation, "character inner product is not an integer");
    return inner / order;
}

namespace {

std::vector<std::vector<int>> unit_bijections(int m) {
    const auto labels = nonsign_partitions(m);
    const std::size_t n = labels.size();
    std::vector<std::vector<long>> table(n, std::vector<long>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a][b] = kostka(labels[a], labels[b]);
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<std::vector<int>> found;
    do {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = table[a][static_cast<std::size_t>(sigma[a])] == 1;
        if (ok) found.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return found;
}

} // namespace

std::size_t count_unit_bijections(int m) { return unit_bijections(m).size(); }

std::vector<std::pair<Partition, Partition>> unique_bijection(int m) {
    const auto found = unit_bijections(m);
    if (found.size() != 1)
        raise(ErrorKind::Uniqueness, "m = " + std::to_string(m) + ": " + std::to_string(found.size()) +
                                         " bijections with unit multiplicities");
    const auto labels = nonsign_partitions(m);
    std::vector<std::pair<Partition, Partition>> out;
    for (std::size_t a = 0; a < labels.size(); ++a)
        out.emplace_back(labels[a], labels[static_cast<std::size_t>(found.front()[a])]);
    return out;
}

bool young_modules_distinct(int m) {
    const auto all = partitions(m);
    std::set<std::vector<long>> columns;
    for (const auto& mu : nonsign_partitions(m)) {
        std::vector<long> column;
        for (const auto& lambda : all) column.push_back(kostka(lambda, mu));
        columns.insert(column);
    }
    return columns.size() == nonsign_partitions(m).size();
}

std::vector<CxRow> cx_multiplicities(int m) {
    const auto labels = nonsign_partitions(m);
    std::vector<CxRow> rows;
    for (const auto& [rho, matched] : unique_bijection(m)) {
        CxRow row{m, rho, matched, {}};
        for (const auto& other : labels) row.multiplicities.push_back(kostka(other, matched));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace isofam
