#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "siegel/errors.hpp"
#include "siegel/kernel_lattice.hpp"
#include "siegel/rational.hpp"
#include "siegel/sigma.hpp"

namespace siegel {

// 0 < a_1 < a_2 < ... < a_n whose 2^n subset sums we test for distinctness.
struct SumDistinctSet {
    std::vector<BigInt> elements;
    int n = 0;
};

inline SumDistinctSet make_sum_distinct_set(std::vector<BigInt> elements) {
    if (elements.empty()) throw std::invalid_argument("SumDistinctSet: empty set");
    BigInt prev = 0;
    for (const BigInt& a : elements) {
        if (a <= prev)
            throw std::invalid_argument("SumDistinctSet: elements must be strictly increasing and positive");
        prev = a;
    }
    SumDistinctSet s;
    s.n = static_cast<int>(elements.size());
    s.elements = std::move(elements);
    return s;
}

struct SubsetSumBudget {
    int max_n = 30;
    std::uint64_t max_bytes = 1ull << 30; // 1 GiB of subset-sum storage
};

struct DistinctnessResult {
    bool distinct = false;
    // two disjoint subsets (as element values) with equal sums, if any
    std::optional<std::pair<std::vector<BigInt>, std::vector<BigInt>>> witness;
};

namespace detail {

// Finds two distinct masks over elements[0..count) with subset sum == target.
// Only called once a collision value is known, so cost is a single
// meet-in-the-middle pass.
inline std::pair<std::uint32_t, std::uint32_t> find_mask_pair(const std::vector<std::uint64_t>& elems,
                                                              int count, std::uint64_t target) {
    int half = count / 2;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> lo; // (sum, mask) over low half
    lo.reserve(1ull << half);
    for (std::uint32_t mask = 0; mask < (1u << half); ++mask) {
        std::uint64_t s = 0;
        for (int i = 0; i < half; ++i)
            if (mask >> i & 1u) s += elems[static_cast<std::size_t>(i)];
        lo.emplace_back(s, mask);
    }
    std::sort(lo.begin(), lo.end());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> hits; // full masks reaching target
    int rest = count - half;
    for (std::uint32_t mask = 0; mask < (1u << rest); ++mask) {
        std::uint64_t s = 0;
        for (int i = 0; i < rest; ++i)
            if (mask >> i & 1u) s += elems[static_cast<std::size_t>(half + i)];
        if (s > target) continue;
        std::uint64_t need = target - s;
        auto it = std::lower_bound(lo.begin(), lo.end(), std::make_pair(need, 0u));
        for (; it != lo.end() && it->first == need; ++it) {
            hits.emplace_back(mask, it->second);
            if (hits.size() == 2) {
                std::uint32_t m1 = (hits[0].first << half) | hits[0].second;
                std::uint32_t m2 = (hits[1].first << half) | hits[1].second;
                return {m1, m2};
            }
        }
    }
    return {0, 0}; // unreachable when a collision is known to exist
}

} // namespace detail

// All 2^n subset sums pairwise distinct? Sorted merge generation, one element
// at a time, with early exit on the first duplicate. On failure the two
// colliding subsets are recovered and returned disjoint.
inline DistinctnessResult is_sum_distinct(const SumDistinctSet& set,
                                          const SubsetSumBudget& budget = {}) {
    const int n = set.n;
    if (n > budget.max_n)
        throw resource_limit_error("is_sum_distinct: n exceeds the 2^n budget");
    if ((std::uint64_t(16) << n) > budget.max_bytes)
        throw resource_limit_error("is_sum_distinct: subset-sum table exceeds the memory budget");

    BigInt total = 0;
    for (const BigInt& a : set.elements) total += a;
    if (mpz_sizeinbase(total.get_mpz_t(), 2) > 62)
        throw resource_limit_error("is_sum_distinct: element sums exceed the 64-bit fast path");

    std::vector<std::uint64_t> elems;
    elems.reserve(static_cast<std::size_t>(n));
    for (const BigInt& a : set.elements) elems.push_back(a.get_ui());

    DistinctnessResult result;
    std::vector<std::uint64_t> sums{0};
    for (int k = 0; k < n; ++k) {
        std::uint64_t add = elems[static_cast<std::size_t>(k)];
        std::vector<std::uint64_t> merged(sums.size() * 2);
        std::size_t i = 0, j = 0, out = 0;
        bool collision = false;
        std::uint64_t collision_value = 0;
        while (i < sums.size() || j < sums.size()) {
            std::uint64_t next;
            if (j >= sums.size() || (i < sums.size() && sums[i] <= sums[j] + add))
                next = sums[i++];
            else
                next = sums[j++] + add;
            if (out > 0 && merged[out - 1] == next) {
                collision = true;
                collision_value = next;
                break;
            }
            merged[out++] = next;
        }
        if (collision) {
            auto [m1, m2] = detail::find_mask_pair(elems, k + 1, collision_value);
            std::uint32_t common = m1 & m2;
            std::vector<BigInt> left, right;
            for (int b = 0; b <= k; ++b) {
                if ((m1 & ~common) >> b & 1u) left.push_back(set.elements[static_cast<std::size_t>(b)]);
                if ((m2 & ~common) >> b & 1u) right.push_back(set.elements[static_cast<std::size_t>(b)]);
            }
            result.distinct = false;
            result.witness = std::make_pair(std::move(left), std::move(right));
            return result;
        }
        sums = std::move(merged);
    }
    result.distinct = true;
    return result;
}

// Corollary bound: a_n > sigma_n 2^{n-1}, exact.
inline Rational lower_bound_new(int n) {
    if (n < 1) throw std::invalid_argument("lower_bound_new: n must be >= 1");
    return sigma_cached(n) * Rational(pow2(static_cast<unsigned long>(n - 1)));
}

// Elkies: a_n > binom(2n, n) / 2^n, exact.
inline Rational lower_bound_elkies(int n) {
    if (n < 1) throw std::invalid_argument("lower_bound_elkies: n must be >= 1");
    return Rational(binomial(2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n)),
                    pow2(static_cast<unsigned long>(n)));
}

// Erdos-Moser: a_n > max{2^n/n, 2^n/(4 sqrt n)}. The max resolves exactly:
// 2^n/n >= 2^n/(4 sqrt n) iff 16n >= n^2 iff n <= 16. The sqrt branch is kept
// symbolically as (2^n/4) / sqrt(n) so later comparisons can square.
struct ErdosMoserBound {
    int n = 0;
    Rational pow_over_n;      // 2^n / n
    Rational sqrt_branch_coeff; // 2^n / 4; the bound is coeff / sqrt(n)
    bool rational_branch = true; // true iff the max is 2^n/n (n <= 16)

    double to_double() const {
        if (rational_branch) return pow_over_n.to_double();
        return sqrt_branch_coeff.to_double() / std::sqrt(static_cast<double>(n));
    }

    // sign of (this bound - q), exact
    int compare(const Rational& q) const {
        if (rational_branch) {
            Rational diff = pow_over_n - q;
            return diff.sign();
        }
        if (q.sign() <= 0) return 1; // bound is positive
        // coeff/sqrt(n) vs q  <=>  coeff^2 vs q^2 n
        Rational lhs = sqrt_branch_coeff * sqrt_branch_coeff;
        Rational rhs = q * q * Rational(n);
        if (lhs > rhs) return 1;
        if (lhs < rhs) return -1;
        return 0;
    }
};

inline ErdosMoserBound lower_bound_erdos_moser(int n) {
    if (n < 1) throw std::invalid_argument("lower_bound_erdos_moser: n must be >= 1");
    ErdosMoserBound b;
    b.n = n;
    Rational p2(pow2(static_cast<unsigned long>(n)));
    b.pow_over_n = p2 / Rational(n);
    b.sqrt_branch_coeff = p2 / Rational(4);
    b.rational_branch = n <= 16;
    return b;
}

enum class BestBound { new_bound, elkies, erdos_moser };

struct BoundsRow {
    int n = 0;
    Rational sigma;
    Rational new_bound;       // sigma_n 2^{n-1}
    BigInt new_bound_integer; // floor(new_bound) + 1: the bound is strict
    Rational elkies;
    ErdosMoserBound erdos_moser;
    BestBound best = BestBound::new_bound;
};

inline BoundsRow bounds_row(int n) {
    BoundsRow row;
    row.n = n;
    row.sigma = sigma_cached(n);
    row.new_bound = row.sigma * Rational(pow2(static_cast<unsigned long>(n - 1)));
    row.new_bound_integer = row.new_bound.floor() + 1;
    row.elkies = lower_bound_elkies(n);
    row.erdos_moser = lower_bound_erdos_moser(n);

    // exact winner; ties resolve toward the earlier entry in this order
    row.best = BestBound::new_bound;
    Rational leader = row.new_bound;
    if (row.elkies > leader) {
        row.best = BestBound::elkies;
        leader = row.elkies;
    }
    if (row.erdos_moser.compare(leader) > 0) row.best = BestBound::erdos_moser;
    return row;
}

// Per-n comparison of the three lower bounds, all in exact arithmetic.
inline std::vector<BoundsRow> bounds_table(int n_from, int n_to) {
    if (n_from < 1 || n_from > n_to || n_to > 2000)
        throw std::invalid_argument("bounds_table: need 1 <= from <= to <= 2000");
    sigma_table(n_to); // fill the shared cache in one parallel pass
    std::vector<BoundsRow> rows(static_cast<std::size_t>(n_to - n_from + 1));
    detail::parallel_for(rows.size(), [&](std::size_t i) {
        rows[i] = bounds_row(n_from + static_cast<int>(i));
    });
    return rows;
}

struct CertifyReport {
    bool bound_holds = false; // a_n > sigma_n 2^{n-1}, exact
    Rational bound;
    BigInt largest;
    bool lambda1_checked = false;  // the kernel cross-check ran (3^n budget)
    bool lambda1_at_least_2 = false;
};

// For a verified sum-distinct set: the Corollary bound must hold (a violation
// falsifies it), and the kernel lattice of the element vector must have no
// nonzero {-1,0,1} solution.
inline CertifyReport certify_set(const SumDistinctSet& set, const SubsetSumBudget& budget = {}) {
    DistinctnessResult check = is_sum_distinct(set, budget);
    if (!check.distinct)
        throw std::invalid_argument("certify_set: the set is not sum-distinct");

    CertifyReport report;
    report.largest = set.elements.back();
    report.bound = lower_bound_new(set.n);
    report.bound_holds = report.bound.compare(report.largest) < 0;

    if (set.n >= 2 && std::pow(3.0, set.n) <= 50e6) {
        report.lambda1_checked = true;
        report.lambda1_at_least_2 = lambda1_at_least_two(make_linear_form(set.elements));
    }
    return report;
}

} // namespace siegel
