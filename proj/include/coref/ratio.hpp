#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace coref {

// An exact rational number. All scores in this library are kept as exact
// integer fractions; decimal form is produced only at rendering time.
//
// One non-numeric state exists: 0/0, the degenerate score of a comparison
// that offers no links to count (singleton vs singleton, all-singleton
// documents, chance agreement of 1). Arithmetic on a degenerate value
// throws; callers decide how to render it.
class Ratio {
public:
    constexpr Ratio() : num_(0), den_(1) {}

    Ratio(long long numerator, long long denominator) {
        if (denominator == 0) {
            if (numerator != 0)
                throw std::invalid_argument("ratio with zero denominator and nonzero numerator");
            num_ = 0;
            den_ = 0;  // degenerate
            return;
        }
        if (denominator < 0) {
            numerator = -numerator;
            denominator = -denominator;
        }
        const long long g = std::gcd(numerator < 0 ? -numerator : numerator, denominator);
        num_ = g ? numerator / g : 0;
        den_ = g ? denominator / g : 1;
    }

    static Ratio degenerate() {
        Ratio r;
        r.num_ = 0;
        r.den_ = 0;
        return r;
    }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_degenerate() const { return den_ == 0; }

    double to_double() const {
        require_value("to_double");
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // Decimal rendering at a fixed number of places, rounding halves away
    // from zero (so 11/21 -> "0.52", 6/7 -> "0.857", 1/8 at 2 -> "0.13").
    std::string to_decimal_string(int places) const {
        require_value("to_decimal_string");
        if (places < 0 || places > 18)
            throw std::invalid_argument("decimal places must be in [0, 18]");

        using i128 = __int128;
        i128 pow10 = 1;
        for (int i = 0; i < places; ++i) pow10 *= 10;

        const bool negative = num_ < 0;
        const i128 abs_num = negative ? -static_cast<i128>(num_) : static_cast<i128>(num_);
        const i128 den = den_;
        // floor((2*|num|*10^p + den) / (2*den)) rounds half away from zero
        const i128 scaled = (2 * abs_num * pow10 + den) / (2 * den);

        const i128 whole = scaled / pow10;
        const i128 frac = scaled % pow10;

        std::string out;
        if (negative && (whole != 0 || frac != 0)) out += '-';
        out += i128_to_string(whole);
        if (places > 0) {
            std::string digits = i128_to_string(frac);
            out += '.';
            out += std::string(static_cast<std::size_t>(places) - digits.size(), '0');
            out += digits;
        }
        return out;
    }

    friend Ratio operator+(const Ratio& a, const Ratio& b) {
        a.require_value("+");
        b.require_value("+");
        using i128 = __int128;
        return make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                    static_cast<i128>(a.den_) * b.den_);
    }

    friend Ratio operator-(const Ratio& a, const Ratio& b) {
        a.require_value("-");
        b.require_value("-");
        using i128 = __int128;
        return make(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                    static_cast<i128>(a.den_) * b.den_);
    }

    friend Ratio operator*(const Ratio& a, const Ratio& b) {
        a.require_value("*");
        b.require_value("*");
        using i128 = __int128;
        return make(static_cast<i128>(a.num_) * b.num_,
                    static_cast<i128>(a.den_) * b.den_);
    }

    friend Ratio operator/(const Ratio& a, const Ratio& b) {
        a.require_value("/");
        b.require_value("/");
        if (b.num_ == 0) throw std::domain_error("division of ratio by zero");
        using i128 = __int128;
        return make(static_cast<i128>(a.num_) * b.den_,
                    static_cast<i128>(a.den_) * b.num_);
    }

    Ratio operator-() const {
        require_value("negate");
        Ratio r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    // Structural equality; two degenerate values compare equal.
    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }

    friend bool operator<(const Ratio& a, const Ratio& b) {
        a.require_value("<");
        b.require_value("<");
        using i128 = __int128;
        return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    }
    friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
    friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
    friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Ratio& r) {
        if (r.is_degenerate()) return os << "0/0";
        return os << r.num_ << '/' << r.den_;
    }

private:
    void require_value(const char* op) const {
        if (is_degenerate())
            throw std::domain_error(std::string("degenerate ratio used in ") + op);
    }

    static Ratio make(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a != 0) {
            num /= a;
            den /= a;
        } else {
            den = 1;
        }
        constexpr auto max = static_cast<__int128>(std::numeric_limits<long long>::max());
        constexpr auto min = static_cast<__int128>(std::numeric_limits<long long>::min());
        if (num > max || num < min || den > max)
            throw std::overflow_error("ratio arithmetic overflow");
        Ratio r;
        r.num_ = static_cast<long long>(num);
        r.den_ = static_cast<long long>(den);
        return r;
    }

    static std::string i128_to_string(__int128 v) {
        if (v == 0) return "0";
        std::string s;
        while (v > 0) {
            s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
            v /= 10;
        }
        return s;
    }

    long long num_;
    long long den_;
};

}  // namespace coref
