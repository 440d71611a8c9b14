#include "isofam/lemmas.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <thread>

#include "isofam/error.hpp"
#include "isofam/excdata.hpp"
#include "isofam/family.hpp"
#include "isofam/phimap.hpp"
#include "isofam/symfam.hpp"
#include "isofam/zbasis.hpp"

namespace isofam {

std::string CheckResult::line() const {
    return name + ": " + (passed() ? "PASS" : "FAIL") + ", " + scope + ", " + std::to_string(violations) +
           (violations == 1 ? " violation" : " violations");
}

namespace {

constexpr std::size_t kMaxSamples = 5;

class Tally {
public:
    Tally(std::string name, std::string scope) { result_ = {std::move(name), std::move(scope), 0, {}}; }

    void expect(bool condition, const std::function<std::string()>& message) {
        if (condition) return;
        ++result_.violations;
        if (result_.samples.size() < kMaxSamples) result_.samples.push_back(message());
    }

    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

std::string d_scope(int d) { return "d=" + std::to_string(d); }

std::string describe(const Subspace& X) {
    std::string out = "span(";
    for (std::size_t k = 0; k < X.rows().size(); ++k) {
        if (k > 0) out += ",";
        out += Vector(X.d(), X.rows()[k]).to_bitstring();
    }
    return out + ")";
}

bool in_alpha(const Subspace& X, int a, int b) {
    const auto& alpha = X.alpha();
    return std::binary_search(alpha.begin(), alpha.end(), Interval{a, b});
}

} // namespace

std::vector<CheckResult> check_family(int d) {
    const auto& family = enumerate_family(d);
    const std::string scope = d_scope(d);
    Tally isotropic("family-isotropic", scope);
    Tally closure("recursion-closure", scope);
    Tally gap("interval-gap", scope);
    Tally stability("projection-stability", scope);
    Tally extension("lagrangian-extension", scope);
    Tally basis("interval-basis", scope);
    Tally first("first-interval-chain", scope);
    Tally beyond("chain-ends-beyond-first-basis", scope);
    Tally after("no-interval-after-first-basis", scope);
    Tally split("parity-split", scope);
    Tally perp("parity-perp", scope);
    Tally perp_lagrangian("parity-perp-lagrangian", scope);

    for (const auto& X : family) {
        const std::string name = describe(X);
        isotropic.expect(X.is_isotropic(), [&] { return name + " is not isotropic"; });

        if (!X.is_zero()) {
            bool reproduced = false;
            for (int i = 1; i <= 2 * d && !reproduced; ++i)
                if (X.contains_basis_vector(i))
                    reproduced = lift_member(QuotientModel(d, i), project_member(X, i)) == X;
            closure.expect(reproduced, [&] { return name + " is not a preimage of its projections"; });
        }

        for (const auto& I : X.alpha()) {
            if (I.a == I.b) continue;
            bool found = false;
            for (int i = I.a + 1; i < I.b && !found; ++i) found = X.contains_basis_vector(i);
            gap.expect(found, [&] { return name + ": no e_i inside " + I.to_string(); });
        }

        for (int i = 1; i <= 2 * d; ++i) {
            if (!X.contains_basis_vector(i)) continue;
            const Subspace projected = project_member(X, i);
            stability.expect(enumerate_family(d - 1).contains(projected),
                             [&] { return name + ": projection by e_" + std::to_string(i) + " leaves the family"; });
        }

        const Subspace extended = extend_to_lagrangian(X);
        extension.expect(extended.dim() == d && X.is_subspace_of(extended) && family.contains(extended),
                         [&] { return name + " extends to " + describe(extended); });

        std::vector<Vector> interval_vectors;
        for (const auto& I : X.alpha()) interval_vectors.push_back(interval_vector(I, d));
        basis.expect(static_cast<int>(X.alpha().size()) == X.dim() && Subspace::span(d, interval_vectors) == X,
                     [&] { return name + ": interval vectors do not form a basis"; });

        if (!X.is_zero()) {
            int i = 2 * d + 1;
            for (const auto& I : X.alpha()) i = std::min(i, I.a);
            const int j = first_basis_index(X).value_or(0);
            first.expect(j >= 1 && i <= j, [&] { return name + ": smallest interval index exceeds first basis index"; });
            for (int h = i; h <= j; ++h) {
                std::vector<int> ends;
                for (const auto& I : X.alpha())
                    if (I.a == h) ends.push_back(I.b);
                first.expect(ends.size() == 1 && ends.front() >= j,
                             [&] { return name + ": interval chain broken at " + std::to_string(h); });
                if (j < 2 * d && h < j && ends.size() == 1)
                    beyond.expect(ends.front() > j, [&] {
                        return name + ": interval from " + std::to_string(h) + " stops at the first basis index";
                    });
            }
            if (j < 2 * d)
                for (int k = j + 2; k <= 2 * d; ++k)
                    after.expect(!in_alpha(X, j + 1, k),
                                 [&] { return name + ": [" + std::to_string(j + 1) + "," + std::to_string(k) + "] in alpha"; });
        }

        const auto [even, odd] = parity_split(X);
        std::vector<std::uint64_t> both = even.rows();
        both.insert(both.end(), odd.rows().begin(), odd.rows().end());
        split.expect(even.dim() + odd.dim() == X.dim() && Subspace::span(d, both) == X,
                     [&] { return name + ": not the sum of its parity parts"; });
        const bool mutual =
            perp_within(even, parity_mask(d, 1)) == odd && perp_within(odd, parity_mask(d, 0)) == even;
        perp.expect(mutual, [&] { return name + ": parity parts are not mutual perpendiculars"; });
        if (X.dim() == d)
            perp_lagrangian.expect(mutual, [&] { return name + ": parity parts are not mutual perpendiculars"; });
    }

    std::vector<CheckResult> out;
    for (auto* t : {&isotropic, &closure, &gap, &stability, &extension, &basis, &first, &beyond, &after, &split,
                    &perp, &perp_lagrangian})
        out.push_back(t->take());
    return out;
}

std::vector<CheckResult> check_phi(int d) {
    const auto& family = enumerate_family(d);
    const auto& table = phi_table(d);
    const auto& support = tilde_v(d);
    const std::string scope = d_scope(d);
    Tally compat("phi-compatibility", scope);
    Tally member("phi-membership", scope);
    Tally injective("phi-injective", scope);
    Tally bijection("phi-bijection", scope);
    Tally reach("reachability", scope);

    for (std::size_t k = 0; k < family.size(); ++k) {
        const Subspace& X = family[k];
        const Vector image = table.images()[k];
        member.expect(X.contains(image), [&] { return describe(X) + ": phi not in X"; });
        for (int i = 1; i <= 2 * d; ++i) {
            if (!X.contains_basis_vector(i)) continue;
            const QuotientModel q(d, i);
            if (pairing(image, q.pivot_vector())) {
                compat.expect(false, [&] { return describe(X) + ": phi not perpendicular to e_" + std::to_string(i); });
                continue;
            }
            compat.expect(q.project(image) == phi(project_member(X, i)),
                          [&] { return describe(X) + ": phi does not commute with projection by e_" + std::to_string(i); });
        }
    }

    injective.expect(table.injective(), [&] { return "two members share a phi value"; });
    bijection.expect(family.size() == support.size(), [&] {
        return std::to_string(family.size()) + " members but " + std::to_string(support.size()) + " points";
    });
    for (const auto& v : support.elements)
        bijection.expect(table.find(v) != nullptr, [&] { return v.to_bitstring() + " has no preimage"; });

    const Reachability reachable = reachable_set(d);
    for (const auto& v : reachable.elements)
        reach.expect(support.contains(v), [&] { return v.to_bitstring() + " reachable but outside tilde V"; });
    for (const auto& v : support.elements)
        reach.expect(reachable.distance.contains(v), [&] { return v.to_bitstring() + " in tilde V but unreachable"; });

    std::vector<CheckResult> out;
    for (auto* t : {&compat, &member, &injective, &bijection, &reach}) out.push_back(t->take());
    return out;
}

CheckResult check_characteristic_basis(int d, bool with_smith) {
    Tally tally("characteristic-basis", d_scope(d));
    try {
        const auto& cert = basis_matrix(d, kMaxHalfDim);
        tally.expect(cert.unimodular(), [&] { return "determinant " + cert.determinant.get_str(); });
        if (with_smith) {
            const auto invariants = smith_invariants(cert.matrix);
            tally.expect(std::all_of(invariants.begin(), invariants.end(), [](const mpz_class& v) { return v == 1; }),
                         [&] { return "Smith form is not the identity"; });
        }
    } catch (const Error& e) {
        tally.expect(false, [&] { return std::string(e.what()); });
    }
    return tally.take();
}

CheckResult check_decomposition_roundtrip(int d, int functions, std::uint64_t seed) {
    Tally tally("decomposition-roundtrip", d_scope(d));
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(d));
    std::uniform_int_distribution<long> value(-5, 5);
    const std::size_t n = tilde_v(d).size();
    for (int trial = 0; trial < functions; ++trial) {
        FunctionOnTildeV f{d, std::vector<mpz_class>(n)};
        for (auto& v : f.values) v = value(rng);
        const auto coefficients = decompose(f);
        tally.expect(recompose(d, coefficients) == f, [&] { return "function " + std::to_string(trial) + " does not round-trip"; });

        std::vector<mpz_class> chosen(n);
        for (auto& c : chosen) c = value(rng);
        tally.expect(decompose(recompose(d, chosen)) == chosen,
                     [&] { return "coefficients " + std::to_string(trial) + " do not round-trip"; });
    }
    return tally.take();
}

CheckResult check_induction_step(int d) {
    Tally tally("induction-step", d_scope(d));
    if (d == 0) return tally.take();
    const auto& support = tilde_v(d);
    const auto& child_support = tilde_v(d - 1);
    const Reachability reach = reachable_set(d);
    const auto& child_rows = basis_matrix(d - 1, kMaxHalfDim).row_order;

    for (const auto& x : support.elements) {
        const int n = reach.distance.at(x);
        if (n == 0) continue;
        bool witnessed = false;
        for (int j = 1; j <= 2 * d && !witnessed; ++j) {
            const QuotientModel q(d, j);
            if (pairing(x, q.pivot_vector())) continue;
            const Vector partner = x + q.pivot_vector();
            const auto it = reach.distance.find(partner);
            if (it == reach.distance.end() || it->second != n - 1 || !support.contains(partner)) continue;
            const Vector y = q.project(x);
            if (!child_support.contains(y)) continue;
            const auto coefficients = decompose(FunctionOnTildeV::point_mass(y));
            FunctionOnTildeV combined = FunctionOnTildeV::constant(d, 0);
            for (std::size_t k = 0; k < child_rows.size(); ++k) {
                if (sgn(coefficients[k]) == 0) continue;
                const auto indicator = FunctionOnTildeV::indicator(lift_member(q, child_rows[k]));
                for (std::size_t c = 0; c < combined.values.size(); ++c)
                    combined.values[c] += coefficients[k] * indicator.values[c];
            }
            FunctionOnTildeV target = FunctionOnTildeV::point_mass(x);
            target.values[static_cast<std::size_t>(
                std::lower_bound(support.elements.begin(), support.elements.end(), partner) -
                support.elements.begin())] += 1;
            witnessed = combined == target;
        }
        tally.expect(witnessed, [&] { return x.to_bitstring() + ": no generating step found"; });
    }
    return tally.take();
}

std::vector<CheckResult> check_symmetric() {
    Tally agree("kostka-two-methods", "m<=5");
    for (int m = 1; m <= 5; ++m)
        for (const auto& lambda : partitions(m))
            for (const auto& mu : partitions(m)) {
                const long a = kostka(lambda, mu);
                const long b = kostka_by_characters(lambda, mu);
                agree.expect(a == b, [&] {
                    return "K(" + lambda.to_string() + "," + mu.to_string() + "): " + std::to_string(a) + " vs " +
                           std::to_string(b);
                });
            }

    std::vector<CheckResult> out{agree.take()};
    for (int m = 3; m <= 5; ++m) {
        const std::string scope = "m=" + std::to_string(m);
        Tally unique("unit-bijection", scope);
        const std::size_t count = count_unit_bijections(m);
        unique.expect(count == 1, [&] { return std::to_string(count) + " bijections"; });
        if (count == 1)
            for (const auto& [rho, mu] : unique_bijection(m))
                unique.expect(rho == mu, [&] { return rho.to_string() + " paired with " + mu.to_string(); });
        out.push_back(unique.take());

        Tally distinct("young-modules-distinct", scope);
        distinct.expect(young_modules_distinct(m), [] { return "two Young subgroups give the same module"; });
        out.push_back(distinct.take());

        Tally diagonal("cx-diagonal", scope);
        const auto labels = nonsign_partitions(m);
        for (const auto& row : cx_multiplicities(m)) {
            const auto at = std::find(labels.begin(), labels.end(), row.rho) - labels.begin();
            diagonal.expect(row.multiplicities[static_cast<std::size_t>(at)] == 1,
                            [&] { return row.rho.to_string() + " does not occur once in its own row"; });
        }
        out.push_back(diagonal.take());
    }
    return out;
}

std::vector<CheckResult> check_exceptional() {
    std::vector<CheckResult> out;
    for (const auto& [type, n_c] : all_tables()) {
        Tally tally("table-verification", to_string(type) + " n_c=" + std::to_string(n_c));
        const auto report = verify_table(family_table(type, n_c));
        for (const auto& v : report.violations) tally.expect(false, [&] { return v; });
        out.push_back(tally.take());
    }
    const std::pair<WeylType, int> symmetric_cases[] = {{WeylType::G2, 4}, {WeylType::F4, 11}, {WeylType::E8, 17}};
    for (const auto& [type, n_c] : symmetric_cases) {
        const std::string scope = to_string(type) + " n_c=" + std::to_string(n_c);
        Tally cx("cx-cross-check", scope);
        const auto check = cross_check_cx(type, n_c);
        cx.expect(check.ok, [&] { return check.message; });
        cx.expect(check.consistent_correspondences <= 1, [&] { return check.message; });
        out.push_back(cx.take());

        Tally printed("printed-sums", scope);
        for (const auto& mismatch : check_printed_sums(type).mismatches) printed.expect(false, [&] { return mismatch; });
        out.push_back(printed.take());
    }
    return out;
}

std::vector<CheckResult> run_suite(const SuiteOptions& options) {
    using Task = std::function<std::vector<CheckResult>()>;
    std::vector<Task> tasks;
    for (int d = 0; d <= options.d_max; ++d) {
        tasks.push_back([d] { return check_family(d); });
        tasks.push_back([d] { return check_phi(d); });
        tasks.push_back([d] { return std::vector<CheckResult>{check_characteristic_basis(d, d <= 4)}; });
        if (d <= options.roundtrip_max_d)
            tasks.push_back([d, &options] {
                return std::vector<CheckResult>{
                    check_decomposition_roundtrip(d, options.roundtrip_functions, options.seed)};
            });
        if (d <= options.induction_max_d)
            tasks.push_back([d] { return std::vector<CheckResult>{check_induction_step(d)}; });
    }
    tasks.push_back([] { return check_symmetric(); });
    tasks.push_back([] { return check_exceptional(); });

    // Warm the enumeration caches in order before fanning out.
    for (int d = 0; d <= options.d_max; ++d) enumerate_family(d);

    std::vector<std::vector<CheckResult>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) {
            try {
                slots[k] = tasks[k]();
            } catch (const std::exception& e) {
                slots[k] = {CheckResult{"task-" + std::to_string(k), "error", 1, {e.what()}}};
            }
        }
    };
    const unsigned count = std::max(1u, options.workers);
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < count; ++w) pool.emplace_back(worker);
    worker();
    pool.clear();

    std::vector<CheckResult> out;
    for (auto& slot : slots)
        for (auto& result : slot) out.push_back(std::move(result));
    return out;
}

} // namespace isofam
