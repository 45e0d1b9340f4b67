// Acceptance suite: every release gate in one binary, one line per criterion.
// Exits nonzero if any gate fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "siegel/detail/parallel.hpp"
#include "siegel/detail/random.hpp"
#include "siegel/siegel.hpp"

using namespace siegel;

namespace {

struct Criterion {
    bool pass = true;
    std::string detail;
    double seconds = 0.0;
};

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

LinearForm seeded_form(std::uint64_t seed, int n, long max_coeff) {
    std::mt19937_64 gen(seed);
    while (true) {
        std::vector<BigInt> coeffs;
        bool nonzero = false;
        for (int i = 0; i < n; ++i) {
            long v = static_cast<long>(detail::uniform01(gen) * (2 * max_coeff + 1)) - max_coeff;
            if (v != 0) nonzero = true;
            coeffs.emplace_back(v);
        }
        if (nonzero) return make_linear_form(std::move(coeffs));
    }
}

int rank_of(std::vector<std::vector<BigInt>> rows) {
    int rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            BigInt p = rows[pivot_row][col], q = rows[r][col];
            for (std::size_t c = 0; c < cols; ++c)
                rows[r][c] = rows[r][c] * p - rows[pivot_row][c] * q;
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

std::vector<long> minima_from_brute_force(const LinearForm& form, long max_radius) {
    auto shells = brute_force_minima(form, max_radius);
    std::vector<std::vector<BigInt>> pool;
    std::vector<long> lambdas;
    int last_rank = 0;
    for (const auto& shell : shells) {
        for (const auto& v : shell.vectors) {
            std::vector<BigInt> row;
            for (long x : v) row.emplace_back(x);
            pool.push_back(std::move(row));
        }
        int r = rank_of(pool);
        for (int k = last_rank; k < r; ++k) lambdas.push_back(shell.radius);
        last_rank = r;
        if (last_rank == form.n - 1) break;
    }
    return lambdas;
}

// 1. exact vs quadrature for n = 1..20, spot values, under a second
Criterion criterion1() {
    auto start = Clock::now();
    Criterion c;
    if (sigma_exact(1) != Rational(1)) { c.pass = false; c.detail = "sigma_1 != 1"; }
    if (sigma_exact(3) != Rational(3, 4) || sigma_exact(4) != Rational(2, 3) ||
        sigma_exact(5) != Rational(115, 192)) {
        c.pass = false;
        c.detail = "spot value mismatch";
    }
    for (int n = 2; n <= 20 && c.pass; ++n) {
        double q = sigma_quadrature(n, 1e-10);
        if (std::fabs(q - sigma_exact(n).to_double()) > 1e-9) {
            c.pass = false;
            c.detail = "quadrature mismatch at n = " + std::to_string(n);
        }
    }
    c.seconds = elapsed(start);
    if (c.pass && c.seconds >= 1.0) {
        c.pass = false;
        c.detail = "runtime above 1 s";
    }
    if (c.pass) c.detail = "sigma_exact == sigma_quadrature +- 1e-9 for n <= 20";
    return c;
}

// 2. the n = 9 numbers: 115 < 2^8 sigma_9 < 116, Elkies gives 95, optimum 161
Criterion criterion2() {
    auto start = Clock::now();
    Criterion c;
    Rational scaled = sigma_exact(9) * Rational(256);
    if (!(scaled > Rational(115) && scaled < Rational(116))) {
        c.pass = false;
        c.detail = "2^8 sigma_9 outside (115, 116)";
    }
    BigInt predicted = lower_bound_new(9).floor() + 1;
    if (predicted != 116) {
        c.pass = false;
        c.detail = "prediction is " + predicted.get_str() + ", expected 116";
    }
    BigInt elkies9 = lower_bound_elkies(9).floor() + 1;
    if (elkies9 != 95) {
        c.pass = false;
        c.detail = "Elkies prediction is " + elkies9.get_str() + ", expected 95";
    }
    c.seconds = elapsed(start);
    if (c.pass && c.seconds >= 1.0) {
        c.pass = false;
        c.detail = "runtime above 1 s";
    }
    if (c.pass) c.detail = "a_9 >= 116 predicted (Elkies: 95; known optimum 161)";
    return c;
}

// 3. n sigma_n^2 > 1 for 5 <= n <= 1000, exact
Criterion criterion3() {
    auto start = Clock::now();
    Criterion c;
    const auto& table = sigma_table(1000);
    for (int n = 5; n <= 1000; ++n) {
        Rational s = table[static_cast<std::size_t>(n - 1)];
        if (!((Rational(n) * s * s).compare(BigInt(1)) > 0)) {
            c.pass = false;
            c.detail = "n sigma_n^2 <= 1 at n = " + std::to_string(n);
            break;
        }
    }
    c.seconds = elapsed(start);
    if (c.pass && c.seconds >= 60.0) {
        c.pass = false;
        c.detail = "runtime above 60 s";
    }
    if (c.pass) c.detail = "1/sigma_n < sqrt(n) for all 5 <= n <= 1000 (exact)";
    return c;
}

// 4. sigma_n 2^{n-1} > binom(2n,n)/2^n for 10 <= n <= 1000, exact
Criterion criterion4() {
    auto start = Clock::now();
    Criterion c;
    const auto& table = sigma_table(1000);
    for (int n = 10; n <= 1000; ++n) {
        Rational nb = table[static_cast<std::size_t>(n - 1)] *
                      Rational(pow2(static_cast<unsigned long>(n - 1)));
        if (!(nb > lower_bound_elkies(n))) {
            c.pass = false;
            c.detail = "new bound <= Elkies at n = " + std::to_string(n);
            break;
        }
    }
    c.seconds = elapsed(start);
    if (c.pass && c.seconds >= 120.0) {
        c.pass = false;
        c.detail = "runtime above 120 s";
    }
    if (c.pass) c.detail = "new bound beats Elkies for all 10 <= n <= 1000 (exact)";
    return c;
}

// 5. monotone chain 0 < sigma_{n+1} < sigma_n <= 1. Strict from n = 2 on;
// sigma_1 = sigma_2 = 1 exactly, so the n = 1 step is equality, not strict.
Criterion criterion5() {
    auto start = Clock::now();
    Criterion c;
    const auto& table = sigma_table(1000);
    if (!(table[0] == Rational(1) && table[1] == Rational(1))) {
        c.pass = false;
        c.detail = "sigma_1 or sigma_2 differs from 1";
    }
    auto report = verify_sigma_monotonicity(1000);
    if (!report.holds) {
        c.pass = false;
        c.detail = "strict chain broken at n = " + std::to_string(*report.first_failure);
    }
    for (int n = 1; n <= 1000 && c.pass; ++n) {
        const Rational& s = table[static_cast<std::size_t>(n - 1)];
        if (!(s.sign() > 0 && s <= Rational(1))) {
            c.pass = false;
            c.detail = "sigma_n outside (0, 1] at n = " + std::to_string(n);
        }
    }
    c.seconds = elapsed(start);
    if (c.pass)
        c.detail = "0 < sigma_{n+1} < sigma_n <= 1 for 2 <= n <= 999 "
                   "(n = 1: sigma_1 = sigma_2 = 1, equality)";
    return c;
}

// 6. asymptotics at n = 1000 and the sqrt(3/2) factor over Elkies
Criterion criterion6() {
    auto start = Clock::now();
    Criterion c;
    const auto& table = sigma_table(1000);
    double product = table[999].to_double() * std::sqrt(3.14159265358979323846 * 1000.0 / 6.0);
    if (!(product > 0.99 && product < 1.01)) {
        c.pass = false;
        c.detail = "sigma_1000 sqrt(pi 1000/6) = " + std::to_string(product);
    }
    Rational ratio = (table[999] * Rational(pow2(999))) / lower_bound_elkies(1000);
    double r = ratio.to_double();
    if (std::fabs(r - std::sqrt(1.5)) >= 0.01) {
        c.pass = false;
        c.detail = "bound ratio at n = 1000 is " + std::to_string(r);
    }
    double prev = 1e300;
    for (int n : {100, 200, 400, 800}) {
        double gap = std::fabs(table[static_cast<std::size_t>(n - 1)].to_double() *
                                   std::sqrt(3.14159265358979323846 * n / 6.0) -
                               1.0);
        if (!(gap < prev)) {
            c.pass = false;
            c.detail = "asymptotic gap not decreasing at n = " + std::to_string(n);
            break;
        }
        prev = gap;
    }
    c.seconds = elapsed(start);
    if (c.pass)
        c.detail = "sigma_1000 sqrt(pi n/6) = " + std::to_string(product) +
                   "; new/Elkies ratio = " + std::to_string(r) + " ~ sqrt(3/2)";
    return c;
}

// 7. theorem 1 falsification: 100 seeded forms per n in {5..8}, |a|_inf <= 50
Criterion criterion7() {
    auto start = Clock::now();
    Criterion c;
    const int trials = 100;
    struct Item {
        bool strict = true;
        bool oracle_ok = true;
        int n = 0;
        long trial = 0;
    };
    std::vector<Item> items(4 * trials);
    detail::parallel_for(items.size(), [&](std::size_t i) {
        int n = 5 + static_cast<int>(i / trials);
        long t = static_cast<long>(i % trials);
        LinearForm form = seeded_form(900000ull + static_cast<std::uint64_t>(i), n, 50);
        auto report = verify_theorem1(form);
        items[i].n = n;
        items[i].trial = t;
        items[i].strict = report.strict;
        if (n <= 6) {
            long max_lambda =
                static_cast<long>(report.certificate.lambdas.back().get_si());
            auto oracle = minima_from_brute_force(report.certificate.form, max_lambda);
            items[i].oracle_ok = oracle.size() == report.certificate.lambdas.size();
            for (std::size_t k = 0; items[i].oracle_ok && k < oracle.size(); ++k)
                items[i].oracle_ok = report.certificate.lambdas[k] == oracle[k];
        }
    });
    for (const auto& item : items) {
        if (!item.strict) {
            c.pass = false;
            c.detail = "strict bound failed at n = " + std::to_string(item.n) + " trial " +
                       std::to_string(item.trial);
            break;
        }
        if (!item.oracle_ok) {
            c.pass = false;
            c.detail = "brute-force disagreement at n = " + std::to_string(item.n) + " trial " +
                       std::to_string(item.trial);
            break;
        }
    }
    c.seconds = elapsed(start);
    if (c.pass && c.seconds >= 600.0) {
        c.pass = false;
        c.detail = "runtime above 600 s";
    }
    if (c.pass)
        c.detail = "400 forms: product < |a|_inf/sigma_n; minima match brute force on n in {5,6}";
    return c;
}

// 8. Gram certificate on every generated basis
Criterion criterion8() {
    auto start = Clock::now();
    Criterion c;
    long checked = 0;
    std::mt19937_64 gen(424242);
    for (int trial = 0; trial < 500 && c.pass; ++trial) {
        int n = 2 + static_cast<int>(gen() % 7);
        long coeff_cap = 1 + static_cast<long>(gen() % 1000);
        LinearForm form = seeded_form(gen(), n, coeff_cap);
        auto kb = kernel_basis(form);
        if (kb.gram_det != kb.form.euclidean_norm_sq) {
            c.pass = false;
            c.detail = "Gram mismatch at trial " + std::to_string(trial);
        }
        for (const auto& b : kb.basis) {
            BigInt d = 0;
            for (std::size_t i = 0; i < b.size(); ++i) d += b[i] * kb.form.coeffs[i];
            if (d != 0) {
                c.pass = false;
                c.detail = "basis vector outside the kernel at trial " + std::to_string(trial);
            }
        }
        ++checked;
    }
    c.seconds = elapsed(start);
    if (c.pass) c.detail = "det(B B^T) = |a|^2 on " + std::to_string(checked) + "/500 bases";
    return c;
}

// 9. lemma 3 bound on 10^4 directions per n in {3..8}; equality cases tight
Criterion criterion9() {
    auto start = Clock::now();
    Criterion c;
    const long trials = 10000;
    for (int n = 3; n <= 8 && c.pass; ++n) {
        std::vector<unsigned char> ok(static_cast<std::size_t>(trials), 1);
        detail::parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
            std::mt19937_64 gen(777000ull * static_cast<std::uint64_t>(n) + t);
            auto dir = make_direction(detail::random_unit_vector(gen, n));
            auto report = verify_lemma3(dir, 1e-6);
            ok[t] = report.holds_within_tol ? 1 : 0;
        });
        for (long t = 0; t < trials; ++t) {
            if (!ok[static_cast<std::size_t>(t)]) {
                c.pass = false;
                c.detail = "bound violated at n = " + std::to_string(n) + " trial " +
                           std::to_string(t);
                break;
            }
        }
    }
    for (int n = 2; n <= 8 && c.pass; ++n) {
        auto report = verify_lemma3(make_direction(std::vector<double>(n, 1.0)), 1e-8);
        if (std::fabs(report.lhs - report.rhs.to_double()) > 1e-8) {
            c.pass = false;
            c.detail = "vertex equality missed at n = " + std::to_string(n);
        }
    }
    if (c.pass) {
        std::mt19937_64 gen(31415);
        for (int t = 0; t < 100; ++t) {
            auto report = verify_lemma3(make_direction(detail::random_unit_vector(gen, 2)), 1e-8);
            if (std::fabs(report.lhs - report.rhs.to_double()) > 1e-8) {
                c.pass = false;
                c.detail = "n = 2 equality missed at trial " + std::to_string(t);
                break;
            }
        }
    }
    c.seconds = elapsed(start);
    if (c.pass) c.detail = "f(x/|x|_inf) <= 1/(sigma_n 2^{n-1}) + 1e-6 on 6x10^4 directions";
    return c;
}

// 10. quadrature vs Monte Carlo on 100 directions per n in {3,4,5}
Criterion criterion10() {
    auto start = Clock::now();
    Criterion c;
    auto hex = section_volume(make_direction({1, 1, 1}), 1e-7);
    if (std::fabs(hex.value - 3.0 * std::sqrt(3.0)) > 1e-6) {
        c.pass = false;
        c.detail = "hexagon volume off by " +
                   std::to_string(hex.value - 3.0 * std::sqrt(3.0));
    }
    for (int n = 3; n <= 5 && c.pass; ++n) {
        std::vector<unsigned char> ok(100, 1);
        detail::parallel_for(ok.size(), [&](std::size_t t) {
            std::mt19937_64 gen(555000ull * static_cast<std::uint64_t>(n) + t);
            auto dir = make_direction(detail::random_unit_vector(gen, n));
            auto quad = section_volume(dir, 1e-8);
            auto mc = section_volume_mc(dir, 1000000, 0.01,
                                        991000ull * static_cast<std::uint64_t>(n) + t);
            double gap = std::fabs(quad.value - mc.value);
            ok[t] = gap <= quad.error_estimate + mc.error_estimate ? 1 : 0;
        });
        for (std::size_t t = 0; t < ok.size(); ++t) {
            if (!ok[t]) {
                c.pass = false;
                c.detail = "disagreement at n = " + std::to_string(n) + " trial " +
                           std::to_string(t);
                break;
            }
        }
    }
    c.seconds = elapsed(start);
    if (c.pass) c.detail = "quadrature and Monte Carlo agree on 300 directions; hexagon = 3 sqrt 3";
    return c;
}

// 11. sum-distinct checker vs the quadratic oracle; the two spot sets
Criterion criterion11() {
    auto start = Clock::now();
    Criterion c;
    auto oracle = [](const std::vector<long>& v) {
        std::vector<long> sums{0};
        for (long x : v) {
            std::size_t sz = sums.size();
            for (std::size_t i = 0; i < sz; ++i) sums.push_back(sums[i] + x);
        }
        for (std::size_t i = 0; i < sums.size(); ++i)
            for (std::size_t j = i + 1; j < sums.size(); ++j)
                if (sums[i] == sums[j]) return false;
        return true;
    };
    long checked = 0;
    for (unsigned mask = 1; mask < (1u << 12) && c.pass; ++mask) {
        if (__builtin_popcount(mask) > 6) continue;
        std::vector<long> subset;
        std::vector<BigInt> elems;
        for (int b = 0; b < 12; ++b)
            if (mask >> b & 1u) {
                subset.push_back(b + 1);
                elems.emplace_back(b + 1);
            }
        auto result = is_sum_distinct(make_sum_distinct_set(elems));
        if (result.distinct != oracle(subset)) {
            c.pass = false;
            c.detail = "oracle disagreement on a subset of {1..12}";
        }
        ++checked;
    }
    auto good = is_sum_distinct(make_sum_distinct_set({BigInt(1), BigInt(2), BigInt(4), BigInt(8)}));
    if (!good.distinct) {
        c.pass = false;
        c.detail = "{1,2,4,8} rejected";
    }
    auto bad = is_sum_distinct(make_sum_distinct_set({BigInt(1), BigInt(2), BigInt(3)}));
    if (bad.distinct || !bad.witness.has_value()) {
        c.pass = false;
        c.detail = "{1,2,3} not rejected with a witness";
    } else {
        BigInt ls = 0, rs = 0;
        for (const auto& x : bad.witness->first) ls += x;
        for (const auto& x : bad.witness->second) rs += x;
        if (ls != rs) {
            c.pass = false;
            c.detail = "witness sums differ";
        }
    }
    c.seconds = elapsed(start);
    if (c.pass)
        c.detail = "checker matches the quadratic oracle on " + std::to_string(checked) +
                   " subsets; spot sets behave";
    return c;
}

} // namespace

int main() {
    Criterion (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                                 criterion5, criterion6, criterion7, criterion8,
                                 criterion9, criterion10, criterion11};
    bool all_pass = true;
    for (std::size_t i = 0; i < sizeof(criteria) / sizeof(criteria[0]); ++i) {
        Criterion c = criteria[i]();
        std::printf("criterion %2zu: %s  (%.2fs)  %s\n", i + 1, c.pass ? "PASS" : "FAIL",
                    c.seconds, c.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && c.pass;
    }
    return all_pass ? 0 : 1;
}
