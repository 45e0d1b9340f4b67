// Command-line front end: exact sinc constants, Erdos-Moser bound tables,
// small kernel solutions, sum-distinct checks, cube sections, and the
// falsification suites. Exit codes: 0 success, 1 verification failure,
// 2 invalid input, 3 resource/convergence limit.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "siegel/siegel.hpp"

using json = nlohmann::json;
using namespace siegel;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitResourceLimit = 3;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::vector<BigInt> parse_int_list(const std::string& text) {
    std::vector<BigInt> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in integer list");
        out.emplace_back(item);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in number list");
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw std::invalid_argument("empty number list");
    return out;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << content;
}

const char* best_name(BestBound b) {
    switch (b) {
        case BestBound::new_bound: return "new";
        case BestBound::elkies: return "elkies";
        case BestBound::erdos_moser: return "erdos_moser";
    }
    return "?";
}

std::string render_bounds(const std::vector<BoundsRow>& rows, const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        os << "n,sigma_num,sigma_den,new_bound_float,new_bound_integer,"
              "elkies_num,elkies_den,em_float,best\n";
        for (const auto& r : rows) {
            os << r.n << ',' << r.sigma.numerator().get_str() << ','
               << r.sigma.denominator().get_str() << ',' << format_double(r.new_bound.to_double())
               << ',' << r.new_bound_integer.get_str() << ',' << r.elkies.numerator().get_str()
               << ',' << r.elkies.denominator().get_str() << ','
               << format_double(r.erdos_moser.to_double()) << ',' << best_name(r.best) << '\n';
        }
    } else if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"n", r.n},
                           {"sigma", r.sigma.str()},
                           {"new_bound", r.new_bound.str()},
                           {"new_bound_float", r.new_bound.to_double()},
                           {"new_bound_integer", r.new_bound_integer.get_str()},
                           {"elkies", r.elkies.str()},
                           {"elkies_float", r.elkies.to_double()},
                           {"erdos_moser_float", r.erdos_moser.to_double()},
                           {"best", best_name(r.best)}});
        }
        os << arr.dump() << '\n';
    } else {
        os << "   n  new_bound            elkies               erdos_moser          best\n";
        for (const auto& r : rows) {
            char line[160];
            std::snprintf(line, sizeof(line), "%4d  %-19.12g  %-19.12g  %-19.12g  %s\n", r.n,
                          r.new_bound.to_double(), r.elkies.to_double(),
                          r.erdos_moser.to_double(), best_name(r.best));
            os << line;
        }
    }
    return os.str();
}

std::string render_witness(const std::vector<BigInt>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ", ";
        s += w[i].get_str();
    }
    s += ")";
    return s;
}

std::string render_certificate(const MinimaCertificate& cert, const std::string& format) {
    if (format == "json") {
        json j;
        j["method"] = cert.method == MinimaMethod::enumeration_exact ? "enumeration_exact"
                                                                     : "reduction_heuristic";
        json lambdas = json::array();
        for (const auto& l : cert.lambdas) lambdas.push_back(l.get_str());
        j["lambdas"] = lambdas;
        json witnesses = json::array();
        for (const auto& w : cert.witnesses) {
            json row = json::array();
            for (const auto& x : w) row.push_back(x.get_str());
            witnesses.push_back(row);
        }
        j["witnesses"] = witnesses;
        j["product"] = cert.product.get_str();
        j["bound"] = cert.bound.str();
        j["certified"] = cert.certified;
        if (cert.form.n <= 4) {
            Rational ref = cn_bound(cert.form.n).known_exact.value() * Rational(cert.form.max_norm);
            j["cn_reference"] = ref.str();
            j["within_cn_reference"] = ref.compare(cert.product) >= 0;
        }
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << "method: "
       << (cert.method == MinimaMethod::enumeration_exact ? "enumeration_exact"
                                                          : "reduction_heuristic")
       << '\n';
    os << "lambdas:";
    for (const auto& l : cert.lambdas) os << ' ' << l.get_str();
    os << '\n';
    os << "witnesses:\n";
    for (const auto& w : cert.witnesses) os << "  " << render_witness(w) << '\n';
    os << "product: " << cert.product.get_str() << '\n';
    os << "bound: " << cert.bound.str() << " = " << format_double(cert.bound.to_double()) << '\n';
    os << "certified: " << (cert.certified ? "true" : "false") << '\n';
    if (cert.form.n <= 4) {
        Rational ref = cn_bound(cert.form.n).known_exact.value() * Rational(cert.form.max_norm);
        os << "c_n reference: product " << (ref.compare(cert.product) >= 0 ? "<=" : ">")
           << " " << ref.str() << '\n';
    }
    return os.str();
}

// ---- verify suites ------------------------------------------------------

struct SuiteResult {
    bool pass = true;
    std::string detail;
};

SuiteResult suite_monotonicity() {
    auto report = verify_sigma_monotonicity(1000);
    SuiteResult r;
    r.pass = report.holds;
    r.detail = report.holds
                   ? "0 < sigma_{n+1} < sigma_n <= 1 for 2 <= n < 1000"
                   : "first failure at n = " + std::to_string(report.first_failure.value_or(-1));
    return r;
}

SuiteResult suite_remark1() {
    const auto& table = sigma_table(1000);
    SuiteResult r;
    for (int n = 5; n <= 1000; ++n) {
        Rational s = table[static_cast<std::size_t>(n - 1)];
        Rational n_sigma_sq = Rational(n) * s * s;
        if (!(n_sigma_sq.compare(BigInt(1)) > 0)) {
            r.pass = false;
            r.detail = "n*sigma_n^2 <= 1 at n = " + std::to_string(n);
            return r;
        }
    }
    r.detail = "1/sigma_n < sqrt(n) for all 5 <= n <= 1000 (exact)";
    return r;
}

SuiteResult suite_remark2() {
    const auto& table = sigma_table(1000);
    SuiteResult r;
    for (int n = 10; n <= 1000; ++n) {
        Rational nb = table[static_cast<std::size_t>(n - 1)] *
                      Rational(pow2(static_cast<unsigned long>(n - 1)));
        if (!(nb > lower_bound_elkies(n))) {
            r.pass = false;
            r.detail = "new bound <= Elkies at n = " + std::to_string(n);
            return r;
        }
    }
    BoundsRow nine = bounds_row(9);
    if (nine.new_bound_integer != 116) {
        r.pass = false;
        r.detail = "n = 9 prediction is " + nine.new_bound_integer.get_str() + ", expected 116";
        return r;
    }
    r.detail = "new bound beats Elkies for all 10 <= n <= 1000; n = 9 predicts a_9 >= 116";
    return r;
}

SuiteResult suite_lemma3(long trials, std::uint64_t seed) {
    SuiteResult r;
    const double tol = 1e-6;
    for (int n = 3; n <= 8; ++n) {
        std::mt19937_64 gen(seed * 1000 + static_cast<std::uint64_t>(n));
        for (long t = 0; t < trials; ++t) {
            auto dir = make_direction(siegel::detail::random_unit_vector(gen, n));
            auto report = verify_lemma3(dir, tol);
            if (!report.holds_within_tol) {
                r.pass = false;
                r.detail = "violated at n = " + std::to_string(n) + ", trial " + std::to_string(t);
                return r;
            }
        }
    }
    // equality cases: vertex directions, and every direction at n = 2
    for (int n = 2; n <= 8; ++n) {
        auto report = verify_lemma3(make_direction(std::vector<double>(n, 1.0)), 1e-8);
        if (std::fabs(report.lhs - report.rhs.to_double()) > 1e-8) {
            r.pass = false;
            r.detail = "vertex equality missed at n = " + std::to_string(n);
            return r;
        }
    }
    std::mt19937_64 gen2(seed + 17);
    for (int t = 0; t < 50; ++t) {
        auto dir = make_direction(siegel::detail::random_unit_vector(gen2, 2));
        auto report = verify_lemma3(dir, 1e-8);
        if (std::fabs(report.lhs - report.rhs.to_double()) > 1e-8) {
            r.pass = false;
            r.detail = "n = 2 equality missed at trial " + std::to_string(t);
            return r;
        }
    }
    r.detail = "f(x/|x|_inf) <= 1/(sigma_n 2^{n-1}) on all sampled directions";
    return r;
}

LinearForm random_form(std::mt19937_64& gen, int n, long max_coeff) {
    while (true) {
        std::vector<BigInt> coeffs;
        bool nonzero = false;
        for (int i = 0; i < n; ++i) {
            long v = static_cast<long>(siegel::detail::uniform01(gen) * (2 * max_coeff + 1)) -
                     max_coeff;
            if (v != 0) nonzero = true;
            coeffs.emplace_back(v);
        }
        if (nonzero) return make_linear_form(std::move(coeffs));
    }
}

SuiteResult suite_theorem1(long trials, std::uint64_t seed) {
    SuiteResult r;
    for (int n = 5; n <= 8; ++n) {
        std::mt19937_64 gen(seed * 1000 + static_cast<std::uint64_t>(n));
        for (long t = 0; t < trials; ++t) {
            LinearForm form = random_form(gen, n, 50);
            auto report = verify_theorem1(form);
            if (!report.strict) {
                r.pass = false;
                r.detail = "strict bound failed at n = " + std::to_string(n) + ", trial " +
                           std::to_string(t) + " (product " + report.product.get_str() +
                           ", bound " + report.bound.str() + ")";
                return r;
            }
        }
    }
    r.detail = "minima product < |a|_inf/sigma_n on every sampled form, n in {5..8}";
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"siegel: exact sinc constants, cube sections, kernel lattice minima, "
                 "and Erdos-Moser bounds"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string format = "text";
    std::string out_path;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--tol", tol, "absolute tolerance for quadrature results");
    app.add_option("--seed", seed, "seed for randomized suites");

    // sigma
    auto* cmd_sigma = app.add_subcommand("sigma", "sinc constant sigma_n");
    int sigma_n = 0;
    bool sigma_exact_flag = false;
    cmd_sigma->add_option("--n", sigma_n, "index n")->required();
    cmd_sigma->add_flag("--exact", sigma_exact_flag, "print the exact rational");

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "Erdos-Moser lower-bound table");
    int bounds_from = 0, bounds_to = 0;
    cmd_bounds->add_option("--from", bounds_from)->required();
    cmd_bounds->add_option("--to", bounds_to)->required();

    // solve
    auto* cmd_solve = app.add_subcommand("solve", "small kernel solutions of a.x = 0");
    std::string solve_coeffs;
    std::string solve_strategy = "reduce";
    cmd_solve->add_option("--coeffs", solve_coeffs, "comma-separated integer coefficients")->required();
    cmd_solve->add_option("--strategy", solve_strategy, "reduce | enumerate")
        ->check(CLI::IsMember({"reduce", "enumerate"}));

    // check
    auto* cmd_check = app.add_subcommand("check", "sum-distinct verification");
    std::string check_set;
    cmd_check->add_option("--set", check_set, "comma-separated increasing positive integers")->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "falsification suites");
    std::string suite;
    long trials = 0;
    cmd_verify->add_option("--suite", suite, "monotonicity | remark1 | remark2 | lemma3 | theorem1")
        ->required()
        ->check(CLI::IsMember({"monotonicity", "remark1", "remark2", "lemma3", "theorem1"}));
    cmd_verify->add_option("--trials", trials, "trials per dimension (suite-specific default)");

    // section
    auto* cmd_section = app.add_subcommand("section", "central cube-section volume");
    std::string section_direction;
    cmd_section->add_option("--direction", section_direction, "comma-separated components")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (*cmd_sigma) {
            if (sigma_exact_flag) {
                SigmaValue v = sigma_value(sigma_n);
                if (format == "json") {
                    json j{{"n", v.n}, {"exact", v.exact.str()}, {"float64", v.float64}};
                    emit(j.dump() + "\n", out_path);
                } else if (format == "csv") {
                    emit("n,sigma_num,sigma_den,float64\n" + std::to_string(v.n) + "," +
                             v.exact.numerator().get_str() + "," + v.exact.denominator().get_str() +
                             "," + format_double(v.float64) + "\n",
                         out_path);
                } else {
                    emit(v.exact.str() + "\n", out_path);
                }
            } else {
                double v = sigma_quadrature(sigma_n, tol);
                if (format == "json") {
                    json j{{"n", sigma_n}, {"value", v}, {"error", tol}};
                    emit(j.dump() + "\n", out_path);
                } else {
                    emit(format_double(v) + "\n", out_path);
                }
            }
        } else if (*cmd_bounds) {
            auto rows = bounds_table(bounds_from, bounds_to);
            emit(render_bounds(rows, format), out_path);
        } else if (*cmd_solve) {
            LinearForm form = make_linear_form(parse_int_list(solve_coeffs));
            SolveStrategy strategy = solve_strategy == "enumerate" ? SolveStrategy::enumerate
                                                                   : SolveStrategy::reduce_then_refine;
            MinimaCertificate cert = small_solutions(form, strategy);
            emit(render_certificate(cert, format), out_path);
        } else if (*cmd_check) {
            SumDistinctSet set = make_sum_distinct_set(parse_int_list(check_set));
            DistinctnessResult res = is_sum_distinct(set);
            if (!res.distinct) {
                std::ostringstream os;
                os << "sum-distinct: false; witness {";
                const auto& [left, right] = *res.witness;
                for (std::size_t i = 0; i < left.size(); ++i)
                    os << (i ? "," : "") << left[i].get_str();
                os << "} = {";
                for (std::size_t i = 0; i < right.size(); ++i)
                    os << (i ? "," : "") << right[i].get_str();
                os << "}\n";
                emit(os.str(), out_path);
                return kExitVerificationFailure;
            }
            CertifyReport report = certify_set(set);
            std::ostringstream os;
            if (format == "json") {
                json j{{"sum_distinct", true},
                       {"bound", report.bound.str()},
                       {"largest", report.largest.get_str()},
                       {"bound_holds", report.bound_holds},
                       {"lambda1_checked", report.lambda1_checked},
                       {"lambda1_at_least_2", report.lambda1_at_least_2}};
                os << j.dump() << '\n';
            } else {
                os << "sum-distinct: true; bound " << report.bound.str() << " < "
                   << report.largest.get_str() << ": " << (report.bound_holds ? "ok" : "VIOLATED")
                   << '\n';
                if (report.lambda1_checked)
                    os << "lambda_1 >= 2: " << (report.lambda1_at_least_2 ? "ok" : "VIOLATED")
                       << '\n';
            }
            emit(os.str(), out_path);
            if (!report.bound_holds || (report.lambda1_checked && !report.lambda1_at_least_2))
                return kExitVerificationFailure;
        } else if (*cmd_verify) {
            SuiteResult result;
            if (suite == "monotonicity") result = suite_monotonicity();
            else if (suite == "remark1") result = suite_remark1();
            else if (suite == "remark2") result = suite_remark2();
            else if (suite == "lemma3") result = suite_lemma3(trials > 0 ? trials : 1000, seed);
            else result = suite_theorem1(trials > 0 ? trials : 100, seed);
            std::ostringstream os;
            os << suite << ": " << (result.pass ? "PASS" : "FAIL") << " (" << result.detail << ")\n";
            emit(os.str(), out_path);
            if (!result.pass) return kExitVerificationFailure;
        } else if (*cmd_section) {
            Direction dir = make_direction(parse_double_list(section_direction));
            SectionVolume vol = section_volume(dir, tol);
            if (format == "json") {
                json j{{"direction", dir.coords},
                       {"value", vol.value},
                       {"error", vol.error_estimate},
                       {"method", "quadrature"}};
                emit(j.dump() + "\n", out_path);
            } else {
                emit(format_double(vol.value) + " (error <= " + format_double(vol.error_estimate) +
                         ")\n",
                     out_path);
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const convergence_error& e) {
        std::cerr << "convergence failure: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitOk;
}
