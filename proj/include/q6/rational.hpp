#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>

namespace q6 {

using BigInt = boost::multiprecision::cpp_int;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// A sampled subspace / prime / chart turned out degenerate; callers resample.
struct nongeneric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Exact rational number. Always stored normalized: gcd(num, den) = 1, den > 0.
class Rat {
public:
    Rat() = default;
    Rat(long n) : v_(n) {}
    Rat(const BigInt& n) : v_(n) {}
    Rat(const BigInt& n, const BigInt& d) {
        if (d == 0) throw input_error("rational with zero denominator");
        BigInt nn = n, dd = d;
        if (dd < 0) { nn = -nn; dd = -dd; }
        BigInt g = boost::multiprecision::gcd(nn < 0 ? BigInt(-nn) : nn, dd);
        if (g > 1) { nn /= g; dd /= g; }
        v_.assign(boost::multiprecision::cpp_rational(nn, dd));
    }
    Rat(long n, long d) : Rat(BigInt(n), BigInt(d)) {}

    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(BigInt(s));
        return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    }

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    int sign() const { return v_.sign(); }

    Rat zero_like() const { return Rat(); }
    Rat one_like() const { return Rat(1); }
    Rat from_int(long n) const { return Rat(n); }

    Rat operator-() const {
        Rat r;
        r.v_ = v_;
        r.v_ *= -1;
        return r;
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw input_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    Rat inv() const {
        if (is_zero()) throw input_error("inverse of zero");
        return Rat(den(), num());
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    /// "n" for integers, "n/d" otherwise.
    std::string str() const {
        std::string s = num().str();
        if (den() != 1) s += "/" + den().str();
        return s;
    }

private:
    boost::multiprecision::cpp_rational v_;
};

/// Exact square root of an integer, if it is a perfect square.
inline std::optional<BigInt> perfect_sqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

/// Exact square root in Q, if the argument is a square.
inline std::optional<Rat> field_sqrt(const Rat& x) {
    if (x.sign() < 0) return std::nullopt;
    auto n = perfect_sqrt(x.num());
    auto d = perfect_sqrt(x.den());
    if (!n || !d) return std::nullopt;
    return Rat(*n, *d);
}

/// The field interface every scalar type implements. Finite-field elements
/// carry their modulus at runtime, so constants are built from a prototype
/// (zero_like / one_like / from_int).
template <class K>
concept Field = requires(const K a, const K b) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a.inv() } -> std::convertible_to<K>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.zero_like() } -> std::convertible_to<K>;
    { a.one_like() } -> std::convertible_to<K>;
    { a.from_int(long{}) } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
};

static_assert(Field<Rat>);

} // namespace q6
