#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace haarcalc {

using Int = long long;

// Reduced fraction with positive denominator. num may be negative or zero;
// PrimeExponentVector below is the strictly-positive counterpart.
struct Fraction {
    Int num{0};
    Int den{1};

    Fraction() = default;
    Fraction(Int n, Int d);
    static Fraction integer(Int n) { return Fraction(n, 1); }

    Fraction operator*(const Fraction& o) const;
    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator-() const { return Fraction(-num, den); }
    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Fraction& o) const { return !(*this == o); }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    Fraction inverse() const;
    Fraction abs() const { return Fraction(num < 0 ? -num : num, den); }
    std::string str() const;
};

// p-adic valuation of a nonzero fraction.
Int valuation(const Fraction& x, Int p);
Int valuation(Int n, Int p);

bool is_prime(Int n);
// Returns the prime p with q = p^k, or nullopt if q is not a prime power (q >= 2).
std::optional<Int> prime_power_base(Int q);

// A positive rational stored as its prime factorization: the finitely
// supported exponent map p -> e_p, representing prod p^{e_p}. The empty
// map is 1. Support is kept normalized (no zero exponents).
class PrimeExponentVector {
public:
    PrimeExponentVector() = default;

    // Exact factorization of num/den, both > 0.
    static PrimeExponentVector factorize(Int num, Int den = 1);
    static PrimeExponentVector from_fraction(const Fraction& f);
    static PrimeExponentVector prime_power(Int p, Int e);

    void add_factor(Int p, Int e);

    PrimeExponentVector times(const PrimeExponentVector& o) const;
    PrimeExponentVector divided_by(const PrimeExponentVector& o) const;
    PrimeExponentVector inverse() const;
    PrimeExponentVector pow(Int k) const;

    bool is_one() const { return exp_.empty(); }
    Int exponent(Int p) const;
    const std::map<Int, Int>& exponents() const { return exp_; }

    // Reconstructs the fraction; throws std::overflow_error if it does not
    // fit in 64 bits.
    Fraction to_fraction() const;

    bool operator==(const PrimeExponentVector& o) const { return exp_ == o.exp_; }
    bool operator!=(const PrimeExponentVector& o) const { return !(*this == o); }
    bool operator<(const PrimeExponentVector& o) const { return exp_ < o.exp_; }

    std::string str() const;

private:
    std::map<Int, Int> exp_;
};

enum class CombineMode { Multiply, Divide };

// An exact positive real: a positive rational times a monomial in named
// symbolic factors. Equality is syntactic on the normalized form. The
// floating hints are advisory display data and never enter comparisons.
class PositiveReal {
public:
    PositiveReal() = default;
    explicit PositiveReal(PrimeExponentVector rational) : rational_(std::move(rational)) {}

    static PositiveReal one() { return PositiveReal(); }
    static PositiveReal from_fraction(Int num, Int den = 1);
    static PositiveReal from_fraction(const Fraction& f);
    static PositiveReal symbol(const std::string& name, Int exponent = 1);

    PositiveReal times(const PositiveReal& o) const;
    PositiveReal divided_by(const PositiveReal& o) const;
    PositiveReal inverse() const;
    PositiveReal pow(Int k) const;

    bool is_rational() const { return symbolic_.empty(); }
    bool is_one() const { return rational_.is_one() && symbolic_.empty(); }

    const PrimeExponentVector& rational_part() const { return rational_; }
    const std::map<std::string, Int>& symbolic_part() const { return symbolic_; }

    void set_hint(const std::string& name, double approx) { hints_[name] = approx; }
    const std::map<std::string, double>& hints() const { return hints_; }

    bool operator==(const PositiveReal& o) const {
        return rational_ == o.rational_ && symbolic_ == o.symbolic_;
    }
    bool operator!=(const PositiveReal& o) const { return !(*this == o); }

    std::string str() const;

private:
    PrimeExponentVector rational_;
    std::map<std::string, Int> symbolic_;
    std::map<std::string, double> hints_;
};

PositiveReal scalar_combine(const PositiveReal& a, const PositiveReal& b, CombineMode mode);

}  // namespace haarcalc
