#include "haarcalc/rational.hpp"

#include <numeric>
#include <sstream>

namespace haarcalc {

namespace {

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
    return r;
}

}  // namespace

Fraction::Fraction(Int n, Int d) {
    if (d == 0) throw std::domain_error("fraction with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Int g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Fraction Fraction::operator*(const Fraction& o) const {
    // Cross-cancel before multiplying to keep intermediates small.
    Int g1 = std::gcd(num < 0 ? -num : num, o.den);
    Int g2 = std::gcd(o.num < 0 ? -o.num : o.num, den);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Fraction(checked_mul(num / g1, o.num / g2), checked_mul(den / g2, o.den / g1));
}

Fraction Fraction::operator+(const Fraction& o) const {
    Int g = std::gcd(den, o.den);
    Int l = checked_mul(den / g, o.den);
    return Fraction(checked_mul(num, l / den) + checked_mul(o.num, l / o.den), l);
}

Fraction Fraction::operator-(const Fraction& o) const { return *this + (-o); }

Fraction Fraction::inverse() const {
    if (num == 0) throw std::domain_error("inverse of zero");
    return Fraction(den, num);
}

std::string Fraction::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Int valuation(Int n, Int p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    if (n < 0) n = -n;
    Int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

Int valuation(const Fraction& x, Int p) {
    if (x.num == 0) throw std::domain_error("valuation of zero");
    return valuation(x.num, p) - valuation(x.den, p);
}

bool is_prime(Int n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::optional<Int> prime_power_base(Int q) {
    if (q < 2) return std::nullopt;
    Int p = q;
    if (q % 2 == 0) {
        p = 2;
    } else {
        for (Int d = 3; d * d <= q; d += 2)
            if (q % d == 0) {
                p = d;
                break;
            }
    }
    Int m = q;
    while (m % p == 0) m /= p;
    if (m != 1) return std::nullopt;
    return p;
}

PrimeExponentVector PrimeExponentVector::factorize(Int num, Int den) {
    if (num <= 0 || den <= 0) throw std::domain_error("factorize: input must be positive");
    PrimeExponentVector out;
    auto absorb = [&out](Int n, Int sign) {
        for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
            while (n % d == 0) {
                out.add_factor(d, sign);
                n /= d;
            }
        }
        if (n > 1) out.add_factor(n, sign);
    };
    absorb(num, 1);
    absorb(den, -1);
    return out;
}

PrimeExponentVector PrimeExponentVector::from_fraction(const Fraction& f) {
    if (f.num <= 0) throw std::domain_error("factorize: input must be positive");
    return factorize(f.num, f.den);
}

PrimeExponentVector PrimeExponentVector::prime_power(Int p, Int e) {
    PrimeExponentVector out;
    out.add_factor(p, e);
    return out;
}

void PrimeExponentVector::add_factor(Int p, Int e) {
    if (!is_prime(p)) throw std::domain_error("exponent key must be prime: " + std::to_string(p));
    Int& slot = exp_[p];
    slot += e;
    if (slot == 0) exp_.erase(p);
}

PrimeExponentVector PrimeExponentVector::times(const PrimeExponentVector& o) const {
    PrimeExponentVector out = *this;
    for (auto& [p, e] : o.exp_) {
        Int& slot = out.exp_[p];
        slot += e;
        if (slot == 0) out.exp_.erase(p);
    }
    return out;
}

PrimeExponentVector PrimeExponentVector::divided_by(const PrimeExponentVector& o) const {
    return times(o.inverse());
}

PrimeExponentVector PrimeExponentVector::inverse() const {
    PrimeExponentVector out;
    for (auto& [p, e] : exp_) out.exp_[p] = -e;
    return out;
}

PrimeExponentVector PrimeExponentVector::pow(Int k) const {
    PrimeExponentVector out;
    if (k == 0) return out;
    for (auto& [p, e] : exp_) out.exp_[p] = e * k;
    return out;
}

Int PrimeExponentVector::exponent(Int p) const {
    auto it = exp_.find(p);
    return it == exp_.end() ? 0 : it->second;
}

Fraction PrimeExponentVector::to_fraction() const {
    Int num = 1, den = 1;
    for (auto& [p, e] : exp_) {
        for (Int i = 0; i < (e < 0 ? -e : e); ++i) {
            if (e > 0)
                num = checked_mul(num, p);
            else
                den = checked_mul(den, p);
        }
    }
    return Fraction(num, den);
}

std::string PrimeExponentVector::str() const {
    try {
        return to_fraction().str();
    } catch (const std::overflow_error&) {
        std::ostringstream os;
        bool first = true;
        for (auto& [p, e] : exp_) {
            if (!first) os << "*";
            first = false;
            os << p << "^" << e;
        }
        return os.str();
    }
}

PositiveReal PositiveReal::from_fraction(Int num, Int den) {
    return PositiveReal(PrimeExponentVector::factorize(num, den));
}

PositiveReal PositiveReal::from_fraction(const Fraction& f) {
    return PositiveReal(PrimeExponentVector::from_fraction(f));
}

PositiveReal PositiveReal::symbol(const std::string& name, Int exponent) {
    PositiveReal out;
    if (name.empty()) throw std::domain_error("empty symbol name");
    if (exponent != 0) out.symbolic_[name] = exponent;
    return out;
}

PositiveReal PositiveReal::times(const PositiveReal& o) const {
    PositiveReal out;
    out.rational_ = rational_.times(o.rational_);
    out.symbolic_ = symbolic_;
    for (auto& [s, e] : o.symbolic_) {
        Int& slot = out.symbolic_[s];
        slot += e;
        if (slot == 0) out.symbolic_.erase(s);
    }
    out.hints_ = hints_;
    for (auto& [s, h] : o.hints_) out.hints_[s] = h;
    return out;
}

PositiveReal PositiveReal::divided_by(const PositiveReal& o) const { return times(o.inverse()); }

PositiveReal PositiveReal::inverse() const {
    PositiveReal out;
    out.rational_ = rational_.inverse();
    for (auto& [s, e] : symbolic_) out.symbolic_[s] = -e;
    out.hints_ = hints_;
    return out;
}

PositiveReal PositiveReal::pow(Int k) const {
    PositiveReal out;
    out.rational_ = rational_.pow(k);
    if (k != 0)
        for (auto& [s, e] : symbolic_) out.symbolic_[s] = e * k;
    out.hints_ = hints_;
    return out;
}

std::string PositiveReal::str() const {
    if (symbolic_.empty()) return rational_.str();
    std::ostringstream os;
    bool first = true;
    for (auto& [s, e] : symbolic_) {
        if (!first) os << "*";
        first = false;
        os << s;
        if (e != 1) os << "^" << e;
    }
    if (!rational_.is_one()) os << "*" << rational_.str();
    return os.str();
}

PositiveReal scalar_combine(const PositiveReal& a, const PositiveReal& b, CombineMode mode) {
    return mode == CombineMode::Multiply ? a.times(b) : a.divided_by(b);
}

}  // namespace haarcalc
