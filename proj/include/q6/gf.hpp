#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rational.hpp"

namespace q6 {

namespace detail {

inline std::int64_t mod_norm(std::int64_t v, std::int64_t q) {
    v %= q;
    return v < 0 ? v + q : v;
}

inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t q) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % q);
}

inline std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t q) {
    std::int64_t r = 1 % q;
    a = mod_norm(a, q);
    for (; e > 0; e >>= 1) {
        if (e & 1) r = mod_mul(r, a, q);
        a = mod_mul(a, a, q);
    }
    return r;
}

inline std::int64_t mod_inv(std::int64_t a, std::int64_t q) {
    std::int64_t t = 0, nt = 1, r = q, nr = mod_norm(a, q);
    while (nr != 0) {
        std::int64_t k = r / nr;
        t -= k * nt; std::swap(t, nt);
        r -= k * nr; std::swap(r, nr);
    }
    if (r != 1) throw input_error("not invertible mod q");
    return mod_norm(t, q);
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace detail

/// Characteristic 2 and 3 break the doubled-Gram conventions; reject them.
inline void check_field_prime(std::int64_t q) {
    if (q < 5 || !detail::is_prime(q))
        throw input_error("field modulus must be a prime >= 5, got " + std::to_string(q));
}

/// Square root mod an odd prime, by Tonelli-Shanks. Empty for non-residues.
inline std::optional<std::int64_t> sqrt_mod(std::int64_t a, std::int64_t q) {
    using namespace detail;
    a = mod_norm(a, q);
    if (a == 0) return 0;
    if (mod_pow(a, (q - 1) / 2, q) != 1) return std::nullopt;
    if (q % 4 == 3) return mod_pow(a, (q + 1) / 4, q);
    std::int64_t s = 0, d = q - 1;
    while (d % 2 == 0) { d /= 2; ++s; }
    std::int64_t z = 2;
    while (mod_pow(z, (q - 1) / 2, q) != q - 1) ++z;
    std::int64_t m = s, c = mod_pow(z, d, q), t = mod_pow(a, d, q), r = mod_pow(a, (d + 1) / 2, q);
    while (t != 1) {
        std::int64_t i = 0, tt = t;
        while (tt != 1) { tt = mod_mul(tt, tt, q); ++i; }
        std::int64_t b = mod_pow(c, std::int64_t(1) << (m - i - 1), q);
        m = i;
        c = mod_mul(b, b, q);
        t = mod_mul(t, c, q);
        r = mod_mul(r, b, q);
    }
    return r;
}

/// Smallest quadratic non-residue mod q.
inline std::int64_t nonresidue_mod(std::int64_t q) {
    for (std::int64_t n = 2; n < q; ++n)
        if (detail::mod_pow(n, (q - 1) / 2, q) == q - 1) return n;
    throw internal_error("no nonresidue found");
}

/// Element of a prime field F_q, q an odd prime >= 5. A default-constructed
/// element is the zero of a not-yet-bound field; it combines with any field
/// and lets generic code write K{} for "zero".
class Fp {
public:
    Fp() = default;
    Fp(std::int64_t v, std::int64_t q) : q_(q) {
        check_field_prime(q);
        v_ = detail::mod_norm(v, q);
    }
    static Fp reduce(const Rat& x, std::int64_t q) {
        std::int64_t d = static_cast<std::int64_t>(x.den() % q);
        if (d == 0) throw nongeneric_error("denominator divisible by q; pick another prime");
        std::int64_t n = static_cast<std::int64_t>(x.num() % q);
        return Fp(detail::mod_mul(detail::mod_norm(n, q), detail::mod_inv(d, q), q), q);
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return q_; }
    bool bound() const { return q_ != 0; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return bound() ? v_ == 1 : false; }

    Fp zero_like() const { return bound() ? Fp(0, q_) : Fp(); }
    Fp one_like() const { require_bound(); return Fp(1, q_); }
    Fp from_int(long n) const { require_bound(); return Fp(n, q_); }

    Fp operator-() const { return bound() ? Fp(q_ - v_, q_) : Fp(); }
    friend Fp operator+(const Fp& a, const Fp& b) {
        auto q = merge(a, b);
        if (!q) return Fp();
        return Fp(a.v_ + b.v_, *q);
    }
    friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
    friend Fp operator*(const Fp& a, const Fp& b) {
        auto q = merge(a, b);
        if (!q) return Fp();
        return Fp(detail::mod_mul(a.v_, b.v_, *q), *q);
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.q_ && b.q_ && a.q_ != b.q_) throw input_error("mixed-field comparison");
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inv() const {
        require_bound();
        if (is_zero()) throw input_error("inverse of zero in F_q");
        return Fp(detail::mod_inv(v_, q_), q_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

    std::string str() const { return std::to_string(v_); }

private:
    void require_bound() const {
        if (!bound()) throw internal_error("operation needs a bound F_q element");
    }
    static std::optional<std::int64_t> merge(const Fp& a, const Fp& b) {
        if (a.q_ && b.q_) {
            if (a.q_ != b.q_) throw input_error("mixed-field entries");
            return a.q_;
        }
        if (a.q_) return a.q_;
        if (b.q_) return b.q_;
        return std::nullopt; // both unbound zeros
    }

    std::int64_t v_ = 0;
    std::int64_t q_ = 0;
};

inline std::optional<Fp> field_sqrt(const Fp& x) {
    if (!x.bound()) return x;
    auto r = sqrt_mod(x.value(), x.modulus());
    if (!r) return std::nullopt;
    return Fp(*r, x.modulus());
}

/// Element a + b*t of F_{q^2} = F_q[t]/(t^2 - n), n the smallest non-residue.
class Fp2 {
public:
    Fp2() = default;
    Fp2(std::int64_t a, std::int64_t b, std::int64_t q)
        : a_(detail::mod_norm(a, q)), b_(detail::mod_norm(b, q)), q_(q), n_(nonresidue_mod(q)) {
        check_field_prime(q);
    }
    static Fp2 lift(const Fp& x) {
        return x.bound() ? Fp2(x.value(), 0, x.modulus()) : Fp2();
    }

    std::int64_t re() const { return a_; }
    std::int64_t im() const { return b_; }
    std::int64_t modulus() const { return q_; }
    bool bound() const { return q_ != 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    Fp2 zero_like() const { return bound() ? Fp2(0, 0, q_) : Fp2(); }
    Fp2 one_like() const { require_bound(); return Fp2(1, 0, q_); }
    Fp2 from_int(long n) const { require_bound(); return Fp2(n, 0, q_); }

    Fp2 operator-() const { return bound() ? Fp2(q_ - a_, q_ - b_, q_) : Fp2(); }
    friend Fp2 operator+(const Fp2& x, const Fp2& y) {
        auto q = merge(x, y);
        if (!q) return Fp2();
        return Fp2(x.a_ + y.a_, x.b_ + y.b_, *q);
    }
    friend Fp2 operator-(const Fp2& x, const Fp2& y) { return x + (-y); }
    friend Fp2 operator*(const Fp2& x, const Fp2& y) {
        auto q = merge(x, y);
        if (!q) return Fp2();
        std::int64_t n = nonresidue_mod(*q);
        using detail::mod_mul;
        std::int64_t a = detail::mod_norm(mod_mul(x.a_, y.a_, *q) + mod_mul(n, mod_mul(x.b_, y.b_, *q), *q), *q);
        std::int64_t b = detail::mod_norm(mod_mul(x.a_, y.b_, *q) + mod_mul(x.b_, y.a_, *q), *q);
        return Fp2(a, b, *q);
    }
    Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
    Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
    Fp2& operator*=(const Fp2& o) { return *this = *this * o; }
    friend bool operator==(const Fp2& x, const Fp2& y) {
        if (x.q_ && y.q_ && x.q_ != y.q_) throw input_error("mixed-field comparison");
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Fp2& x, const Fp2& y) { return !(x == y); }

    Fp2 inv() const {
        require_bound();
        // 1/(a+bt) = (a-bt)/(a^2 - n b^2); the norm is nonzero since t^2-n is irreducible
        using detail::mod_mul;
        std::int64_t norm = detail::mod_norm(mod_mul(a_, a_, q_) - mod_mul(n_, mod_mul(b_, b_, q_), q_), q_);
        if (norm == 0) throw input_error("inverse of zero in F_{q^2}");
        std::int64_t ni = detail::mod_inv(norm, q_);
        return Fp2(mod_mul(a_, ni, q_), mod_mul(detail::mod_norm(-b_, q_), ni, q_), q_);
    }
    friend Fp2 operator/(const Fp2& x, const Fp2& y) { return x * y.inv(); }

    std::string str() const {
        if (b_ == 0) return std::to_string(a_);
        return std::to_string(a_) + "+" + std::to_string(b_) + "t";
    }

private:
    void require_bound() const {
        if (!bound()) throw internal_error("operation needs a bound F_{q^2} element");
    }
    static std::optional<std::int64_t> merge(const Fp2& x, const Fp2& y) {
        if (x.q_ && y.q_) {
            if (x.q_ != y.q_) throw input_error("mixed-field entries");
            return x.q_;
        }
        if (x.q_) return x.q_;
        if (y.q_) return y.q_;
        return std::nullopt;
    }

    std::int64_t a_ = 0, b_ = 0;
    std::int64_t q_ = 0, n_ = 0;
};

static_assert(Field<Fp>);
static_assert(Field<Fp2>);

} // namespace q6
