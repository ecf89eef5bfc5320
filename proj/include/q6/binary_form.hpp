#pragma once

#include <utility>
#include <vector>

#include "upoly.hpp"

namespace q6 {

/// Projective point of P^1, normalized to (t : 1) or (1 : 0).
template <Field K>
struct P1Point {
    K a, b;
    friend bool operator==(const P1Point& x, const P1Point& y) { return x.a == y.a && x.b == y.b; }
};

/// Homogeneous binary form of degree d: sum c_i X^{d-i} Y^i, coefficients
/// c_0..c_d. The zero form keeps its formal degree and an explicit flag.
template <Field K>
class BinaryForm {
public:
    BinaryForm() : zero_(true), deg_(0) {}
    static BinaryForm zero(int formal_degree) {
        BinaryForm f;
        f.deg_ = formal_degree;
        return f;
    }
    explicit BinaryForm(std::vector<K> coeffs) : zero_(false), deg_(int(coeffs.size()) - 1), c_(std::move(coeffs)) {
        if (c_.empty()) throw input_error("binary form needs at least one coefficient");
        bool all = true;
        for (auto& x : c_)
            if (!x.is_zero()) { all = false; break; }
        if (all) {
            zero_ = true;
            c_.clear();
        }
    }
    /// Constant form c of degree 0.
    static BinaryForm constant(const K& c) {
        if (c.is_zero()) return zero(0);
        return BinaryForm(std::vector<K>{c});
    }
    /// The linear form (b0*X - a0*Y) vanishing at (a0 : b0).
    static BinaryForm vanishing_at(const K& a0, const K& b0) {
        return BinaryForm(std::vector<K>{b0, -a0});
    }

    bool is_zero() const { return zero_; }
    int degree() const { return deg_; }
    K coeff(int i) const {
        if (zero_ || i < 0 || i > deg_) return K{};
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<K>& coeffs() const { return c_; }

    K proto() const {
        for (auto& x : c_)
            if (!x.is_zero()) return x;
        return K{};
    }

    K eval(const K& a, const K& b) const {
        if (zero_) return a.zero_like() + b.zero_like();
        K r = a.zero_like();
        // Horner in b/a would divide; accumulate powers instead (degrees are tiny).
        K pa = a.one_like();
        std::vector<K> apow(deg_ + 1, pa);
        for (int i = 1; i <= deg_; ++i) apow[i] = apow[i - 1] * a;
        K pb = b.one_like();
        for (int i = 0; i <= deg_; ++i) {
            r += c_[i] * apow[deg_ - i] * pb;
            pb = pb * b;
        }
        return r;
    }

    template <class R, class MapFn>
    R eval_mapped(const R& a, const R& b, MapFn map) const {
        R r = a.zero_like();
        if (zero_) return r;
        std::vector<R> apow(deg_ + 1, a.one_like());
        for (int i = 1; i <= deg_; ++i) apow[i] = apow[i - 1] * a;
        R pb = a.one_like();
        for (int i = 0; i <= deg_; ++i) {
            r = r + map(c_[i]) * apow[deg_ - i] * pb;
            pb = pb * b;
        }
        return r;
    }

    BinaryForm operator-() const {
        if (zero_) return *this;
        auto c = c_;
        for (auto& x : c) x = -x;
        return BinaryForm(std::move(c));
    }
    friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
        if (f.zero_) return g;
        if (g.zero_) return f;
        if (f.deg_ != g.deg_) throw input_error("adding binary forms of different degrees");
        auto c = f.c_;
        for (int i = 0; i <= f.deg_; ++i) c[i] += g.c_[i];
        return BinaryForm(std::move(c));
    }
    friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) { return f + (-g); }
    friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
        if (f.zero_ || g.zero_) return zero(f.deg_ + g.deg_);
        std::vector<K> c(f.deg_ + g.deg_ + 1, f.proto().zero_like());
        for (int i = 0; i <= f.deg_; ++i)
            for (int j = 0; j <= g.deg_; ++j) c[i + j] += f.c_[i] * g.c_[j];
        return BinaryForm(std::move(c));
    }
    friend BinaryForm operator*(const K& s, const BinaryForm& f) {
        if (f.zero_ || s.is_zero()) return zero(f.deg_);
        auto c = f.c_;
        for (auto& x : c) x = s * x;
        return BinaryForm(std::move(c));
    }
    friend bool operator==(const BinaryForm& f, const BinaryForm& g) {
        if (f.zero_ || g.zero_) return f.zero_ && g.zero_;
        return f.deg_ == g.deg_ && f.c_ == g.c_;
    }

    /// Multiplicity of the root (1 : 0), i.e. the power of Y dividing the form.
    int inf_root_mult() const {
        if (zero_) throw input_error("roots of the zero form");
        int k = 0;
        while (c_[k].is_zero()) ++k;
        return k;
    }

    /// Dehomogenization on the chart b = 1: the polynomial f(t, 1) in t,
    /// with the Y^k factor (root at (1:0)) stripped first.
    std::pair<Poly<K>, int> chart_poly() const {
        if (zero_) return {Poly<K>{}, 0};
        int k = inf_root_mult();
        // f = Y^k * sum_{i>=k} c_i X^{d-i} Y^{i-k}; on (t,1): coeff of t^{d-i}
        std::vector<K> p(static_cast<std::size_t>(deg_ - k) + 1, proto().zero_like());
        for (int i = k; i <= deg_; ++i) p[static_cast<std::size_t>(deg_ - i)] = c_[i];
        return {Poly<K>(std::move(p)), k};
    }

    /// Rebuild a form of degree deg(p) + inf_mult from a chart polynomial.
    static BinaryForm from_chart(const Poly<K>& p, int inf_mult) {
        if (p.is_zero()) {
            if (inf_mult == 0) return zero(0);
            return zero(inf_mult);
        }
        int d = p.degree() + inf_mult;
        std::vector<K> c(static_cast<std::size_t>(d) + 1, p.proto().zero_like());
        for (int j = 0; j <= p.degree(); ++j) c[static_cast<std::size_t>(d - j)] = p.coeff(j);
        return BinaryForm(std::move(c));
    }

    /// Normalized so the first nonzero coefficient is 1.
    BinaryForm normalized() const {
        if (zero_) return *this;
        return c_[inf_root_mult()].inv() * *this;
    }

    std::string str(const std::string& X = "X", const std::string& Y = "Y") const {
        if (zero_) return "0";
        std::string s;
        for (int i = 0; i <= deg_; ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[i].str() + ")";
            int dx = deg_ - i, dy = i;
            if (dx) s += "*" + X + (dx > 1 ? "^" + std::to_string(dx) : "");
            if (dy) s += "*" + Y + (dy > 1 ? "^" + std::to_string(dy) : "");
        }
        return s;
    }

private:
    bool zero_;
    int deg_;
    std::vector<K> c_;
};

/// Monic-normalized gcd of binary forms (common projective roots with
/// multiplicity). gcd(f, 0) = normalized f; both zero is an error.
template <Field K>
BinaryForm<K> gcd_forms(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    if (f.is_zero() && g.is_zero())
        throw input_error("gcd of two zero forms; handle the double-cone branch explicitly");
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    auto [pf, kf] = f.chart_poly();
    auto [pg, kg] = g.chart_poly();
    Poly<K> h = poly_gcd(pf, pg);
    return BinaryForm<K>::from_chart(h, std::min(kf, kg)).normalized();
}

/// Content gcd of a list of forms (zero entries skipped).
template <Field K>
BinaryForm<K> content_forms(const std::vector<BinaryForm<K>>& fs) {
    BinaryForm<K> g; // zero
    bool any = false;
    for (auto& f : fs) {
        if (f.is_zero()) continue;
        g = any ? gcd_forms(g, f) : f.normalized();
        any = true;
    }
    if (!any) throw input_error("content of all-zero form list");
    return g;
}

/// Exact division of binary forms; throws on non-divisibility.
template <Field K>
BinaryForm<K> divexact_forms(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    if (g.is_zero()) throw input_error("binary form division by zero");
    if (f.is_zero()) return BinaryForm<K>::zero(f.degree() - g.degree());
    auto [pf, kf] = f.chart_poly();
    auto [pg, kg] = g.chart_poly();
    if (kg > kf) throw input_error("binary form division is not exact");
    auto [q, r] = divmod(pf, pg);
    if (!r.is_zero()) throw input_error("binary form division is not exact");
    return BinaryForm<K>::from_chart(q, kf - kg);
}

/// Distinct projective roots with multiplicities. Rational roots are listed
/// explicitly; what remains (no rational root found) is returned, per
/// multiplicity class, as squarefree "cluster" forms whose degrees count the
/// remaining distinct roots over the algebraic closure.
struct FormRoots {
    std::vector<std::pair<P1Point<Rat>, int>> rational;  // point, multiplicity
    std::vector<std::pair<BinaryForm<Rat>, int>> clusters; // squarefree factor, multiplicity
    int total_with_multiplicity = 0;
    int distinct = 0;
};

inline FormRoots form_roots(const BinaryForm<Rat>& f) {
    if (f.is_zero()) throw input_error("roots of the zero form");
    FormRoots out;
    out.total_with_multiplicity = f.degree();
    int kinf = f.inf_root_mult();
    if (kinf > 0) {
        out.rational.push_back({{Rat(1), Rat(0)}, kinf});
        ++out.distinct;
    }
    auto [p, k] = f.chart_poly();
    (void)k;
    if (p.degree() <= 0) return out;
    auto fac = squarefree_decomposition(p);
    for (std::size_t m = 1; m < fac.size(); ++m) {
        if (fac[m].degree() <= 0) continue;
        Poly<Rat> cof;
        auto roots = rational_roots(fac[m], &cof);
        for (auto& [r, mult] : roots) {
            // roots of a squarefree factor are simple within it
            out.rational.push_back({{r, Rat(1)}, int(m) * mult});
            ++out.distinct;
        }
        if (cof.degree() >= 1) {
            out.clusters.push_back({BinaryForm<Rat>::from_chart(cof, 0), int(m)});
            out.distinct += cof.degree();
        }
    }
    return out;
}

} // namespace q6
