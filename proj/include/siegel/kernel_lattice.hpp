#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "siegel/errors.hpp"
#include "siegel/rational.hpp"
#include "siegel/sigma.hpp"

namespace siegel {

// The linear form L(x) = a.x whose kernel lattice we study.
struct LinearForm {
    std::vector<BigInt> coeffs;
    int n = 0;
    BigInt max_norm;
    BigInt euclidean_norm_sq;
    BigInt gcd;
};

inline LinearForm make_linear_form(std::vector<BigInt> coeffs) {
    if (coeffs.size() < 2) throw std::invalid_argument("LinearForm: need n >= 2");
    LinearForm f;
    f.n = static_cast<int>(coeffs.size());
    f.max_norm = 0;
    f.euclidean_norm_sq = 0;
    f.gcd = 0;
    for (const BigInt& a : coeffs) {
        BigInt aa = abs(a);
        if (aa > f.max_norm) f.max_norm = aa;
        f.euclidean_norm_sq += a * a;
        mpz_gcd(f.gcd.get_mpz_t(), f.gcd.get_mpz_t(), a.get_mpz_t());
    }
    if (f.max_norm == 0) throw std::invalid_argument("LinearForm: zero vector");
    f.coeffs = std::move(coeffs);
    return f;
}

// Divide out gcd(a_1,...,a_n); idempotent, signs preserved.
inline LinearForm normalize(const LinearForm& form) {
    if (form.gcd == 1) return form;
    std::vector<BigInt> reduced(form.coeffs);
    for (BigInt& a : reduced) a /= form.gcd;
    return make_linear_form(std::move(reduced));
}

struct KernelBasis {
    LinearForm form; // gcd-normalized
    std::vector<std::vector<BigInt>> basis;
    BigInt gram_det; // det(B B^T) = |a|^2 for a primitive form
};

namespace detail {

inline void canonicalize_sign(std::vector<BigInt>& v) {
    for (const BigInt& x : v) {
        if (x != 0) {
            if (x < 0)
                for (BigInt& y : v) y = -y;
            return;
        }
    }
}

inline void canonicalize_sign(std::vector<long>& v) {
    for (long x : v) {
        if (x != 0) {
            if (x < 0)
                for (long& y : v) y = -y;
            return;
        }
    }
}

// Witness tie-break inside a shell: plain lexicographic order over the
// sign-canonical vectors (first nonzero entry positive).
template <typename Int>
bool witness_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// Incremental exact rank via fraction-free row echelon over Z.
class RankTracker {
public:
    explicit RankTracker(int) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    // Adds v if it is independent of the rows seen so far.
    bool try_add(std::vector<BigInt> v) {
        for (const auto& row : rows_) {
            std::size_t lead = leading_index(row);
            if (v[lead] == 0) continue;
            BigInt pivot = row[lead];
            BigInt factor = v[lead];
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] * pivot - row[i] * factor;
            divide_by_content(v);
        }
        if (std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; })) return false;
        divide_by_content(v);
        rows_.push_back(std::move(v));
        std::sort(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) {
            return leading_index(a) < leading_index(b);
        });
        // re-reduce to keep leading indices distinct
        for (std::size_t i = 1; i < rows_.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                std::size_t lead = leading_index(rows_[j]);
                if (rows_[i][lead] == 0) continue;
                BigInt pivot = rows_[j][lead];
                BigInt factor = rows_[i][lead];
                for (std::size_t k = 0; k < rows_[i].size(); ++k)
                    rows_[i][k] = rows_[i][k] * pivot - rows_[j][k] * factor;
                divide_by_content(rows_[i]);
            }
        }
        rows_.erase(std::remove_if(rows_.begin(), rows_.end(),
                                   [](const auto& r) {
                                       return std::all_of(r.begin(), r.end(),
                                                          [](const BigInt& x) { return x == 0; });
                                   }),
                    rows_.end());
        return true;
    }

private:
    static std::size_t leading_index(const std::vector<BigInt>& row) {
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i] != 0) return i;
        return row.size();
    }

    static void divide_by_content(std::vector<BigInt>& row) {
        BigInt g = 0;
        for (const BigInt& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g > 1)
            for (BigInt& x : row) x /= g;
    }

    std::vector<std::vector<BigInt>> rows_;
};

// Fraction-free (Bareiss) determinant of a square mpz matrix.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline BigInt gram_determinant(const std::vector<std::vector<BigInt>>& basis) {
    const std::size_t m = basis.size();
    std::vector<std::vector<BigInt>> gram(m, std::vector<BigInt>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            BigInt dot = 0;
            for (std::size_t k = 0; k < basis[i].size(); ++k) dot += basis[i][k] * basis[j][k];
            gram[i][j] = dot;
            gram[j][i] = dot;
        }
    return bareiss_determinant(std::move(gram));
}

} // namespace detail

// Integer basis of {x in Z^n : a.x = 0} by the extended-gcd chain: coordinates
// where a_i = 0 contribute unit vectors; the running gcd g of the nonzero
// prefix pairs with each next coefficient b to give (b/g') c - (g/g') e_i.
inline KernelBasis kernel_basis(const LinearForm& input) {
    KernelBasis out;
    out.form = normalize(input);
    const auto& a = out.form.coeffs;
    const int n = out.form.n;

    std::vector<std::vector<BigInt>> basis;
    std::vector<BigInt> combo(static_cast<std::size_t>(n), BigInt(0)); // a . combo = g
    BigInt g = 0;
    int first_nonzero = -1;
    for (int i = 0; i < n; ++i) {
        const BigInt& ai = a[static_cast<std::size_t>(i)];
        if (ai == 0) {
            std::vector<BigInt> e(static_cast<std::size_t>(n), BigInt(0));
            e[static_cast<std::size_t>(i)] = 1;
            basis.push_back(std::move(e));
            continue;
        }
        if (first_nonzero < 0) {
            first_nonzero = i;
            g = abs(ai);
            combo[static_cast<std::size_t>(i)] = ai > 0 ? 1 : -1;
            continue;
        }
        BigInt g_next, s, t;
        mpz_gcdext(g_next.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
                   ai.get_mpz_t());
        std::vector<BigInt> v(static_cast<std::size_t>(n), BigInt(0));
        BigInt scale_combo = ai / g_next;
        BigInt scale_unit = g / g_next;
        for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = scale_combo * combo[static_cast<std::size_t>(j)];
        v[static_cast<std::size_t>(i)] -= scale_unit;
        detail::canonicalize_sign(v);
        basis.push_back(std::move(v));
        for (int j = 0; j < n; ++j) combo[static_cast<std::size_t>(j)] *= s;
        combo[static_cast<std::size_t>(i)] += t;
        g = g_next;
    }

    out.gram_det = detail::gram_determinant(basis);
    out.basis = std::move(basis);
    return out;
}

enum class MinimaMethod { enumeration_exact, reduction_heuristic };

// Successive minima of the kernel lattice in the max norm, with witnesses and
// the exact product-vs-bound comparison (bound = |a|_inf / sigma_n).
struct MinimaCertificate {
    LinearForm form; // normalized
    std::vector<BigInt> lambdas;
    std::vector<std::vector<BigInt>> witnesses;
    BigInt product;
    Rational bound;
    MinimaMethod method = MinimaMethod::enumeration_exact;
    bool certified = false;
};

struct EnumerationBudget {
    long max_radius = 4096;
    std::uint64_t max_nodes = 400'000'000;
};

class enumeration_limit_error : public resource_limit_error {
public:
    enumeration_limit_error(const std::string& what, std::vector<BigInt> best_lambdas)
        : resource_limit_error(what), best_lambdas_(std::move(best_lambdas)) {}

    const std::vector<BigInt>& best_lambdas() const noexcept { return best_lambdas_; }

private:
    std::vector<BigInt> best_lambdas_;
};

namespace detail {

struct Int64Form {
    std::vector<long> a;
    int dependent = 0;        // index of the largest |a_i|, solved for at the leaves
    bool pin_zeros = false;   // freeze coordinates with a_i = 0 at zero
};

inline Int64Form to_int64_form(const LinearForm& form, long radius, bool pin_zeros = false) {
    Int64Form f;
    f.a.reserve(static_cast<std::size_t>(form.n));
    BigInt abs_sum = 0;
    for (const BigInt& c : form.coeffs) abs_sum += abs(c);
    BigInt reach = abs_sum * BigInt(radius + 1);
    BigInt limit = pow2(62);
    if (reach >= limit)
        throw resource_limit_error("kernel enumeration: coefficients too large for the "
                                   "int64 search path at this radius");
    int dep = 0;
    for (int i = 0; i < form.n; ++i) {
        f.a.push_back(static_cast<long>(form.coeffs[static_cast<std::size_t>(i)].get_si()));
        if (abs(form.coeffs[static_cast<std::size_t>(i)]) >
            abs(form.coeffs[static_cast<std::size_t>(dep)]))
            dep = i;
    }
    f.dependent = dep;
    f.pin_zeros = pin_zeros;
    return f;
}

// All kernel vectors with |x|_inf == radius whose first nonzero entry is
// positive, in no particular order. DFS over the free coordinates with the
// reachability prune; the dependent coordinate is solved by division.
class ShellEnumerator {
public:
    ShellEnumerator(const Int64Form& form, std::uint64_t node_budget)
        : form_(form), nodes_left_(node_budget) {
        const std::size_t n = form_.a.size();
        suffix_abs_.assign(n + 1, 0);
        for (std::size_t i = n; i-- > 0;) {
            long ai = form_.a[i];
            long abs_ai = ai < 0 ? -ai : ai;
            suffix_abs_[i] = suffix_abs_[i + 1] + (static_cast<int>(i) == form_.dependent ? 0 : abs_ai);
        }
    }

    std::vector<std::vector<long>> collect(long radius) {
        radius_ = radius;
        found_.clear();
        x_.assign(form_.a.size(), 0);
        dfs(0, 0);
        return std::move(found_);
    }

    std::uint64_t nodes_left() const { return nodes_left_; }

private:
    void dfs(std::size_t idx, long partial) {
        if (nodes_left_ == 0)
            throw enumeration_limit_error("kernel enumeration: node budget exhausted", {});
        --nodes_left_;
        const std::size_t n = form_.a.size();
        if (idx == n) {
            finish(partial);
            return;
        }
        if (static_cast<int>(idx) == form_.dependent) {
            dfs(idx + 1, partial);
            return;
        }
        long ai = form_.a[idx];
        if (ai == 0 && form_.pin_zeros) {
            x_[idx] = 0;
            dfs(idx + 1, partial);
            return;
        }
        long dep_abs = form_.a[static_cast<std::size_t>(form_.dependent)];
        if (dep_abs < 0) dep_abs = -dep_abs;
        long reach = suffix_abs_[idx + 1] * radius_ + dep_abs * radius_;
        for (long v = -radius_; v <= radius_; ++v) {
            long next = partial + ai * v;
            if (next > reach || next < -reach) continue;
            x_[idx] = v;
            dfs(idx + 1, next);
        }
        x_[idx] = 0;
    }

    void finish(long partial) {
        long ad = form_.a[static_cast<std::size_t>(form_.dependent)];
        if (partial % ad != 0) return;
        long xd = -partial / ad;
        if (xd > radius_ || xd < -radius_) return;
        x_[static_cast<std::size_t>(form_.dependent)] = xd;
        long mx = 0;
        for (long v : x_) mx = std::max(mx, v < 0 ? -v : v);
        if (mx != radius_) {
            x_[static_cast<std::size_t>(form_.dependent)] = 0;
            return;
        }
        for (long v : x_) {
            if (v > 0) break;
            if (v < 0) { // first nonzero negative: the mirror image is canonical
                x_[static_cast<std::size_t>(form_.dependent)] = 0;
                return;
            }
        }
        found_.push_back(x_);
        x_[static_cast<std::size_t>(form_.dependent)] = 0;
    }

    Int64Form form_;
    std::uint64_t nodes_left_;
    long radius_ = 0;
    std::vector<long> suffix_abs_;
    std::vector<long> x_;
    std::vector<std::vector<long>> found_;
};

inline std::vector<BigInt> to_bigint_vector(const std::vector<long>& v) {
    std::vector<BigInt> out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

} // namespace detail

// Ground-truth oracle: every x with |x|_inf <= radius and a.x = 0 (both signs,
// zero excluded), grouped by max norm. Plain odometer scan, no pruning.
struct BruteForceShell {
    long radius = 0;
    std::vector<std::vector<long>> vectors;
};

inline std::vector<BruteForceShell> brute_force_minima(const LinearForm& form, long radius) {
    if (radius < 1) throw std::invalid_argument("brute_force_minima: radius must be >= 1");
    const int n = form.n;
    double volume = std::pow(2.0 * static_cast<double>(radius) + 1.0, n);
    if (volume > 4.0e9)
        throw resource_limit_error("brute_force_minima: search volume too large");
    detail::Int64Form f = detail::to_int64_form(form, radius);

    std::vector<BruteForceShell> shells(static_cast<std::size_t>(radius));
    for (long r = 1; r <= radius; ++r) shells[static_cast<std::size_t>(r - 1)].radius = r;

    std::vector<long> x(static_cast<std::size_t>(n), -radius);
    while (true) {
        long dot = 0, mx = 0;
        for (int i = 0; i < n; ++i) {
            dot += f.a[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
            long v = x[static_cast<std::size_t>(i)];
            mx = std::max(mx, v < 0 ? -v : v);
        }
        if (dot == 0 && mx > 0)
            shells[static_cast<std::size_t>(mx - 1)].vectors.push_back(x);
        int i = n - 1;
        while (i >= 0 && x[static_cast<std::size_t>(i)] == radius) {
            x[static_cast<std::size_t>(i)] = -radius;
            --i;
        }
        if (i < 0) break;
        ++x[static_cast<std::size_t>(i)];
    }
    return shells;
}

// Exact successive minima by expanding max-norm shells. Coordinates with
// a_i = 0 contribute unit-vector witnesses immediately; the remaining shells
// are enumerated with those coordinates pinned to zero. Within a shell,
// candidates are sorted by the witness order and added greedily while they
// increase the rank; lambda_i is the shell radius at which rank reaches i.
inline MinimaCertificate successive_minima(const LinearForm& input,
                                           const EnumerationBudget& budget = {}) {
    MinimaCertificate cert;
    cert.form = normalize(input);
    cert.method = MinimaMethod::enumeration_exact;
    const int n = cert.form.n;
    const int target = n - 1;

    cert.bound = Rational(cert.form.max_norm) / sigma_exact(n);

    detail::RankTracker rank(n);
    for (int i = 0; i < n; ++i) {
        if (cert.form.coeffs[static_cast<std::size_t>(i)] == 0) {
            std::vector<BigInt> unit(static_cast<std::size_t>(n), BigInt(0));
            unit[static_cast<std::size_t>(i)] = 1;
            rank.try_add(unit);
            cert.lambdas.emplace_back(1);
            cert.witnesses.push_back(std::move(unit));
        }
    }

    std::uint64_t nodes = budget.max_nodes;
    for (long radius = 1; rank.rank() < target; ++radius) {
        if (radius > budget.max_radius)
            throw enumeration_limit_error(
                "successive_minima: radius budget exhausted at rank " +
                    std::to_string(rank.rank()),
                cert.lambdas);
        detail::Int64Form f = detail::to_int64_form(cert.form, radius, /*pin_zeros=*/true);
        detail::ShellEnumerator enumerator(f, nodes);
        std::vector<std::vector<long>> shell;
        try {
            shell = enumerator.collect(radius);
        } catch (enumeration_limit_error&) {
            throw enumeration_limit_error(
                "successive_minima: node budget exhausted at radius " +
                    std::to_string(radius),
                cert.lambdas);
        }
        nodes = enumerator.nodes_left();
        std::sort(shell.begin(), shell.end(), detail::witness_less<long>);
        for (const auto& v : shell) {
            auto big = detail::to_bigint_vector(v);
            if (rank.try_add(big)) {
                cert.lambdas.emplace_back(radius);
                cert.witnesses.push_back(std::move(big));
                if (rank.rank() == target) break;
            }
        }
    }

    cert.product = 1;
    for (const BigInt& l : cert.lambdas) cert.product *= l;
    cert.certified = cert.bound.compare(cert.product) > 0;
    return cert;
}

namespace detail {

// Textbook LLL with exact rational Gram-Schmidt data, delta = 3/4. The basis
// stays integral throughout; only the mu/B bookkeeping is rational.
inline void lll_reduce(std::vector<std::vector<BigInt>>& basis) {
    const std::size_t m = basis.size();
    if (m <= 1) return;
    const std::size_t n = basis[0].size();

    std::vector<std::vector<Rational>> mu(m, std::vector<Rational>(m));
    std::vector<Rational> B(m);
    std::vector<std::vector<Rational>> star(m, std::vector<Rational>(n));
    auto recompute = [&]() {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t c = 0; c < n; ++c) star[i][c] = Rational(basis[i][c]);
            for (std::size_t j = 0; j < i; ++j) {
                Rational num;
                for (std::size_t c = 0; c < n; ++c) num += Rational(basis[i][c]) * star[j][c];
                mu[i][j] = (B[j].sign() == 0) ? Rational(0) : num / B[j];
                for (std::size_t c = 0; c < n; ++c) star[i][c] -= mu[i][j] * star[j][c];
            }
            Rational norm;
            for (std::size_t c = 0; c < n; ++c) norm += star[i][c] * star[i][c];
            B[i] = norm;
        }
    };

    auto round_nearest = [](const Rational& q) {
        return (q + Rational(1, 2)).floor();
    };

    recompute();
    const Rational delta(3, 4);
    std::size_t k = 1;
    while (k < m) {
        for (std::size_t j = k; j-- > 0;) {
            BigInt r = round_nearest(mu[k][j]);
            if (r != 0) {
                for (std::size_t c = 0; c < n; ++c) basis[k][c] -= r * basis[j][c];
                for (std::size_t l = 0; l < j; ++l) mu[k][l] -= Rational(r) * mu[j][l];
                mu[k][j] -= Rational(r);
            }
        }
        if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            ++k;
        } else {
            std::swap(basis[k], basis[k - 1]);
            recompute();
            k = (k > 1) ? k - 1 : 1;
        }
    }
}

} // namespace detail

enum class SolveStrategy { reduce_then_refine, enumerate };

// n-1 independent small kernel vectors. The heuristic route LLL-reduces the
// kernel basis (euclidean proxy for the max norm); if the certified product
// bound |a|_inf/sigma_n is missed for n >= 5 (or the c_n reference for
// n <= 4), exact shell enumeration takes over.
inline MinimaCertificate small_solutions(const LinearForm& input,
                                         SolveStrategy strategy = SolveStrategy::reduce_then_refine,
                                         const EnumerationBudget& budget = {}) {
    LinearForm form = normalize(input);
    if (strategy == SolveStrategy::enumerate) return successive_minima(form, budget);

    KernelBasis kb = kernel_basis(form);
    detail::lll_reduce(kb.basis);

    std::vector<std::vector<BigInt>> vectors = kb.basis;
    for (auto& v : vectors) detail::canonicalize_sign(v);
    std::sort(vectors.begin(), vectors.end(), [](const auto& a, const auto& b) {
        BigInt ma = 0, mb = 0;
        for (const BigInt& x : a) ma = std::max(ma, BigInt(abs(x)));
        for (const BigInt& x : b) mb = std::max(mb, BigInt(abs(x)));
        if (ma != mb) return ma < mb;
        return detail::witness_less(a, b);
    });

    MinimaCertificate cert;
    cert.form = form;
    cert.method = MinimaMethod::reduction_heuristic;
    cert.bound = Rational(form.max_norm) / sigma_exact(form.n);
    cert.product = 1;
    for (const auto& v : vectors) {
        BigInt mx = 0;
        for (const BigInt& x : v) mx = std::max(mx, BigInt(abs(x)));
        cert.lambdas.push_back(mx);
        cert.product *= mx;
    }
    cert.witnesses = std::move(vectors);
    cert.certified = cert.bound.compare(cert.product) > 0;

    bool good_enough;
    if (form.n >= 5) {
        good_enough = cert.certified;
    } else {
        Rational reference = cn_bound(form.n).known_exact.value() * Rational(form.max_norm);
        good_enough = reference.compare(cert.product) >= 0;
    }
    if (!good_enough) return successive_minima(form, budget);
    return cert;
}

struct Theorem1Report {
    BigInt product;
    Rational bound;
    bool strict = false;
    MinimaCertificate certificate;
};

// Exact minima product against |a|_inf/sigma_n. The strict inequality is the
// guaranteed claim for n >= 5; smaller n is reporting only.
inline Theorem1Report verify_theorem1(const LinearForm& form,
                                      const EnumerationBudget& budget = {}) {
    Theorem1Report report;
    report.certificate = successive_minima(form, budget);
    report.product = report.certificate.product;
    report.bound = report.certificate.bound;
    report.strict = report.bound.compare(report.product) > 0;
    return report;
}

// True iff the kernel lattice has no nonzero vector with |x|_inf <= 1,
// i.e. lambda_1 >= 2. Ternary enumeration; refuses beyond the node budget.
inline bool lambda1_at_least_two(const LinearForm& input, const EnumerationBudget& budget = {}) {
    LinearForm form = normalize(input);
    double volume = std::pow(3.0, form.n);
    if (volume > static_cast<double>(budget.max_nodes))
        throw resource_limit_error("lambda1_at_least_two: 3^n exceeds the node budget");
    detail::Int64Form f = detail::to_int64_form(form, 1);
    detail::ShellEnumerator enumerator(f, budget.max_nodes);
    return enumerator.collect(1).empty();
}

} // namespace siegel
