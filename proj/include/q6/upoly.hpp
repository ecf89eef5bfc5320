#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace q6 {

/// Dense univariate polynomial; coeffs_[i] is the coefficient of x^i.
/// The zero polynomial has an empty coefficient vector and degree -1.
template <Field K>
class Poly {
public:
    Poly() = default;
    explicit Poly(K c) { coeffs_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly x(const K& proto) { return Poly(std::vector<K>{proto.zero_like(), proto.one_like()}); }
    static Poly monomial(std::size_t deg, const K& coef) {
        std::vector<K> c(deg + 1, coef.zero_like());
        c[deg] = coef;
        return Poly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<K>& coeffs() const { return coeffs_; }
    K coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : K{}; }
    K lc() const {
        if (is_zero()) throw input_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    bool is_constant() const { return degree() <= 0; }

    K proto() const {
        for (auto& c : coeffs_)
            if (!c.is_zero()) return c;
        return K{};
    }

    Poly operator-() const {
        Poly p = *this;
        for (auto& c : p.coeffs_) c = -c;
        return p;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        std::vector<K> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const K& s, const Poly& p) {
        if (s.is_zero()) return Poly{};
        Poly q = p;
        for (auto& c : q.coeffs_) c = s * c;
        q.trim();
        return q;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return false;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
        return true;
    }

    K eval(const K& x) const {
        K r = x.zero_like();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
        return r;
    }

    /// Evaluate with coefficients mapped into another ring (e.g. Q -> F_q,
    /// or Q -> Q[t]/S).
    template <class R, class MapFn>
    R eval_mapped(const R& x, MapFn map) const {
        R r = x.zero_like();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + map(*it);
        return r;
    }

    Poly derivative() const {
        if (degree() <= 0) return Poly{};
        std::vector<K> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i].from_int(static_cast<long>(i)) * coeffs_[i];
        return Poly(std::move(c));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return lc().inv() * *this;
    }

    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw input_error("polynomial division by zero");
        Poly r = a;
        Poly q;
        q.coeffs_.assign(a.coeffs_.size() >= b.coeffs_.size() ? a.coeffs_.size() - b.coeffs_.size() + 1 : 0,
                         K{});
        const K binv = b.lc().inv();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            K f = r.lc() * binv;
            q.coeffs_[shift] = q.coeffs_[shift] + f;
            for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
                r.coeffs_[shift + i] -= f * b.coeffs_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (coeffs_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + coeffs_[i].str() + ")";
            if (i > 0) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<K> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <Field K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        a = a % b;
        std::swap(a, b);
        // keep coefficients small between steps
        if (!b.is_zero()) b = b.monic();
    }
    return a.is_zero() ? a : a.monic();
}

/// Extended gcd: returns (g, s, t) monic with s*a + t*b = g.
template <Field K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_xgcd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r0 = a, r1 = b;
    K one = a.is_zero() ? b.proto().one_like() : a.proto().one_like();
    Poly<K> s0(one), s1, t0, t1(one);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1; r1 = r;
        Poly<K> s = s0 - q * s1; s0 = s1; s1 = s;
        Poly<K> t = t0 - q * t1; t0 = t1; t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    K inv = r0.lc().inv();
    return {inv * r0, inv * s0, inv * t0};
}

/// Yun's squarefree decomposition (characteristic zero): f = lc * prod fac[m]^m
/// with the fac[m] squarefree and pairwise coprime. fac[0] is unused.
template <Field K>
std::vector<Poly<K>> squarefree_decomposition(const Poly<K>& f) {
    if (f.is_zero()) throw input_error("squarefree decomposition of zero");
    std::vector<Poly<K>> out(1); // index 0 placeholder
    Poly<K> fm = f.monic();
    if (fm.degree() == 0) return out;
    Poly<K> d = fm.derivative();
    Poly<K> a = poly_gcd(fm, d);
    Poly<K> b = fm / a;
    Poly<K> c = d / a;
    while (b.degree() > 0) {
        Poly<K> w = c - b.derivative();
        Poly<K> g = poly_gcd(b, w);
        out.push_back(g.monic());
        b = b / g;
        c = w / g;
    }
    return out;
}

/// Squarefree part f / gcd(f, f').
template <Field K>
Poly<K> squarefree_part(const Poly<K>& f) {
    if (f.is_zero()) throw input_error("squarefree part of zero");
    if (f.degree() == 0) return f.monic();
    return (f / poly_gcd(f, f.derivative())).monic();
}

namespace detail {

inline std::vector<BigInt> small_divisors(const BigInt& n, std::size_t cap = 4096) {
    std::vector<BigInt> out;
    BigInt a = boost::multiprecision::abs(n);
    if (a == 0) return out;
    for (BigInt d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(a / d);
            if (out.size() > 2 * cap) break;
        }
        if (d > 2000000) break; // trial division budget
    }
    return out;
}

} // namespace detail

/// Extract the rational roots of f with multiplicities; returns the root list
/// and the (root-free) remaining cofactor. Candidates come from the rational
/// root theorem when the end coefficients are factorable in budget, plus a
/// small fallback grid. Linear factors are always resolved exactly.
inline std::vector<std::pair<Rat, int>> rational_roots(Poly<Rat> f, Poly<Rat>* cofactor = nullptr) {
    if (f.is_zero()) throw input_error("roots of zero polynomial");
    std::vector<std::pair<Rat, int>> roots;
    // zero roots
    int zmult = 0;
    while (!f.is_zero() && f.coeff(0).is_zero() && f.degree() >= 1) {
        std::vector<Rat> c(f.coeffs().begin() + 1, f.coeffs().end());
        f = Poly<Rat>(std::move(c));
        ++zmult;
    }
    if (zmult) roots.push_back({Rat(0), zmult});

    auto try_root = [&](const Rat& r) {
        int m = 0;
        Poly<Rat> lin(std::vector<Rat>{-r, Rat(1)});
        while (f.degree() >= 1) {
            auto [q, rem] = divmod(f, lin);
            if (!rem.is_zero()) break;
            f = q;
            ++m;
        }
        if (m) roots.push_back({r, m});
    };

    while (f.degree() == 1) try_root(-f.coeff(0) / f.coeff(1));

    if (f.degree() >= 2) {
        // integer-primitive form for candidate generation
        BigInt l = 1;
        for (auto& c : f.coeffs()) l = boost::multiprecision::lcm(l, c.den());
        BigInt a0 = (f.coeff(0) * Rat(l)).num();
        BigInt an = (f.lc() * Rat(l)).num();
        auto ps = detail::small_divisors(a0);
        auto qs = detail::small_divisors(an);
        std::vector<Rat> cands;
        if (!ps.empty() && !qs.empty() && ps.size() * qs.size() < 40000) {
            for (auto& p : ps)
                for (auto& q : qs) {
                    cands.push_back(Rat(p, q));
                    cands.push_back(Rat(-p, q));
                }
        }
        for (long n = -40; n <= 40; ++n)
            for (long d = 1; d <= 12; ++d) cands.push_back(Rat(n, d));
        for (auto& r : cands) {
            if (f.degree() < 1) break;
            if (f.eval(r).is_zero()) try_root(r);
        }
        while (f.degree() == 1) try_root(-f.coeff(0) / f.coeff(1));
    }
    if (cofactor) *cofactor = f;
    return roots;
}

} // namespace q6
