#pragma once

#include <cmath>
#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <utility>

namespace siegel {

using BigInt = mpz_class;

// Exact rational with the canonical-form guarantee: denominator > 0 and
// gcd(|num|, den) = 1 at all times. Arithmetic never rounds; conversion to
// double is round-to-nearest-even and is the only lossy operation.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}
    Rational(const BigInt& v) : q_(v) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.q_ = std::move(q); // caller guarantees canonical form
        return r;
    }

    // Accepts "num/den" or a plain integer string.
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    }

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    const mpq_class& mpq() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    BigInt floor() const {
        BigInt r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }

    Rational inverse() const {
        if (sign() == 0) throw std::invalid_argument("Rational: inverse of zero");
        mpq_class r;
        mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
        return from_mpq(r);
    }

    Rational operator-() const { return from_mpq(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return from_mpq(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return from_mpq(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return from_mpq(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.sign() == 0) throw std::invalid_argument("Rational: division by zero");
        return from_mpq(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    int compare(const BigInt& v) const { return mpq_cmp_z(q_.get_mpq_t(), v.get_mpz_t()); }

    // "num/den", or just "num" when the denominator is 1.
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    // Nearest double, ties to even. mpq_get_d truncates, so do the rounding
    // explicitly from an integer quotient with >= 54 significant bits.
    double to_double() const {
        int s = sign();
        if (s == 0) return 0.0;
        BigInt a = abs(numerator());
        BigInt b = denominator();
        long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
                 static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));
        long k = 54 - e; // a*2^k/b lands in (2^53, 2^55)
        BigInt num = a, den = b;
        if (k >= 0) mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k));
        else        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-k));
        BigInt quot, rem;
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        long qbits = static_cast<long>(mpz_sizeinbase(quot.get_mpz_t(), 2));
        long drop = qbits - 53; // 1 or 2 low bits beyond double precision
        BigInt low;
        mpz_fdiv_r_2exp(low.get_mpz_t(), quot.get_mpz_t(), static_cast<unsigned long>(drop));
        BigInt high;
        mpz_fdiv_q_2exp(high.get_mpz_t(), quot.get_mpz_t(), static_cast<unsigned long>(drop));
        BigInt half;
        mpz_setbit(half.get_mpz_t(), static_cast<unsigned long>(drop - 1));
        int cmp_half = cmp(low, half);
        bool round_up;
        if (cmp_half > 0) round_up = true;
        else if (cmp_half < 0) round_up = false;
        else if (rem != 0) round_up = true;
        else round_up = mpz_tstbit(high.get_mpz_t(), 0) != 0; // tie: to even
        if (round_up) high += 1;
        double mant = high.get_d(); // <= 2^53, exact
        double v = std::ldexp(mant, static_cast<int>(drop - k));
        return s < 0 ? -v : v;
    }

private:
    mpq_class q_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

// n-th factorial, binomial, power helpers used by the exact formulas.
inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt int_pow(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline BigInt pow2(unsigned long exp) {
    BigInt r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), exp);
    return r;
}

} // namespace siegel
