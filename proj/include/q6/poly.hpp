#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "binary_form.hpp"
#include "upoly.hpp"

namespace q6 {

/// Sparse multivariate polynomial over K with a fixed, ordered variable list.
/// Terms map exponent vectors (one slot per declared variable) to nonzero
/// coefficients. Variable order is the declared order; binary operations
/// require identical variable lists (use extend_vars to align).
template <Field K>
class MultiPoly {
public:
    using Exp = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const K& c) {
        MultiPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_[Exp(p.vars_.size(), 0)] = c;
        return p;
    }
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name, const K& one) {
        MultiPoly p(std::move(vars));
        Exp e(p.vars_.size(), 0);
        e[p.var_index(name)] = 1;
        p.terms_[e] = one;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exp, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    std::size_t var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        throw input_error("unknown variable '" + name + "'");
    }
    bool has_var(const std::string& name) const {
        for (auto& v : vars_)
            if (v == name) return true;
        return false;
    }

    K proto() const {
        if (!terms_.empty()) return terms_.begin()->second;
        return K{};
    }

    // Ring-element view, so a MultiPoly can itself be an evaluation target.
    MultiPoly zero_like() const { return MultiPoly(vars_); }
    MultiPoly one_like() const { return constant(vars_, proto().one_like()); }

    void add_term(const Exp& e, const K& c) {
        if (e.size() != vars_.size()) throw input_error("exponent arity mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly p = *this;
        for (auto& [e, c] : p.terms_) c = -c;
        return p;
    }
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.check_same_vars(b);
        MultiPoly p = a;
        for (auto& [e, c] : b.terms_) p.add_term(e, c);
        return p;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_same_vars(b);
        MultiPoly p(a.vars_);
        for (auto& [e1, c1] : a.terms_)
            for (auto& [e2, c2] : b.terms_) {
                Exp e = e1;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                p.add_term(e, c1 * c2);
            }
        return p;
    }
    friend MultiPoly operator*(const K& s, const MultiPoly& a) {
        MultiPoly p(a.vars_);
        if (s.is_zero()) return p;
        for (auto& [e, c] : a.terms_) p.terms_[e] = s * c;
        return p;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    int degree_in(const std::string& var) const {
        std::size_t i = var_index(var);
        int d = -1;
        for (auto& [e, c] : terms_) d = std::max(d, e[i]);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }
    int weighted_degree(const std::vector<int>& weights) const {
        int d = -1;
        for (auto& [e, c] : terms_) {
            int s = 0;
            for (std::size_t i = 0; i < e.size(); ++i) s += weights[i] * e[i];
            d = std::max(d, s);
        }
        return d;
    }
    bool is_homogeneous(const std::vector<int>& weights) const {
        int d = -2;
        for (auto& [e, c] : terms_) {
            int s = 0;
            for (std::size_t i = 0; i < e.size(); ++i) s += weights[i] * e[i];
            if (d == -2) d = s;
            else if (d != s) return false;
        }
        return true;
    }

    /// Full evaluation into any commutative ring R through a coefficient map.
    template <class R, class MapFn>
    R eval_mapped(const std::vector<R>& vals, MapFn map) const {
        if (vals.size() != vars_.size()) throw input_error("evaluation arity mismatch");
        if (vals.empty()) {
            // constant polynomial over no variables
            throw input_error("evaluation needs at least one variable");
        }
        R acc = vals[0].zero_like();
        for (auto& [e, c] : terms_) {
            R t = map(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t = t * vals[i];
            acc = acc + t;
        }
        return acc;
    }
    K eval(const std::vector<K>& vals) const {
        return eval_mapped(vals, [](const K& c) { return c; });
    }

    /// Simultaneous substitution var_i -> polys[i] (all over the same target
    /// variable list).
    MultiPoly subst_all(const std::vector<MultiPoly>& images) const {
        if (images.size() != vars_.size()) throw input_error("substitution arity mismatch");
        if (images.empty()) throw input_error("substitution needs at least one variable");
        return eval_mapped(images, [&](const K& c) { return constant(images[0].vars_, c); });
    }

    /// Substitute a single variable; result keeps the same variable list.
    MultiPoly subst(const std::string& var, const MultiPoly& image) const {
        if (is_zero()) return *this;
        K pr = proto();
        if (pr.is_zero()) pr = image.proto();
        std::vector<MultiPoly> images;
        images.reserve(vars_.size());
        for (auto& v : vars_)
            images.push_back(v == var ? image : variable(vars_, v, pr.one_like()));
        return subst_all(images);
    }

    MultiPoly derivative(const std::string& var) const {
        std::size_t i = var_index(var);
        MultiPoly p(vars_);
        for (auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exp e2 = e;
            e2[i] -= 1;
            p.add_term(e2, c.from_int(e[i]) * c);
        }
        return p;
    }

    /// Coefficients as polynomials in the remaining variables: result[k] is
    /// the coefficient of var^k (variable list unchanged, exponent zeroed).
    std::vector<MultiPoly> coeffs_in(const std::string& var) const {
        std::size_t i = var_index(var);
        int d = degree_in(var);
        std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(d, -1) + 1), MultiPoly(vars_));
        for (auto& [e, c] : terms_) {
            Exp e2 = e;
            int k = e2[i];
            e2[i] = 0;
            out[static_cast<std::size_t>(k)].add_term(e2, c);
        }
        return out;
    }

    /// View over a superset of variables (given order).
    MultiPoly extend_vars(const std::vector<std::string>& newvars) const {
        MultiPoly p(newvars);
        std::vector<std::size_t> pos;
        for (auto& v : vars_) pos.push_back(p.var_index(v));
        for (auto& [e, c] : terms_) {
            Exp e2(newvars.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) e2[pos[i]] = e[i];
            p.terms_[e2] = c;
        }
        return p;
    }

    /// Drop variables that do not occur (restricting to the given list).
    MultiPoly restrict_vars(const std::vector<std::string>& keep) const {
        MultiPoly p(keep);
        std::vector<long> pos(vars_.size(), -1);
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = 0; j < keep.size(); ++j)
                if (vars_[i] == keep[j]) pos[i] = static_cast<long>(j);
        for (auto& [e, c] : terms_) {
            Exp e2(keep.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (pos[i] < 0) throw input_error("restrict_vars drops an occurring variable");
                e2[static_cast<std::size_t>(pos[i])] = e[i];
            }
            p.add_term(e2, c);
        }
        return p;
    }

    /// As a dense univariate polynomial, provided only `var` occurs.
    Poly<K> to_upoly(const std::string& var) const {
        std::size_t i = var_index(var);
        std::vector<K> c(static_cast<std::size_t>(std::max(degree_in(var), -1) + 1), K{});
        for (auto& [e, coef] : terms_) {
            for (std::size_t j = 0; j < e.size(); ++j)
                if (j != i && e[j] != 0) throw input_error("polynomial is not univariate in " + var);
            c[static_cast<std::size_t>(e[i])] = coef;
        }
        return Poly<K>(std::move(c));
    }

    /// As a binary form in (varX, varY), provided homogeneous in exactly those.
    BinaryForm<K> to_binary_form(const std::string& varX, const std::string& varY) const {
        std::size_t ix = var_index(varX), iy = var_index(varY);
        if (is_zero()) return BinaryForm<K>::zero(0);
        int d = total_degree();
        std::vector<K> c(static_cast<std::size_t>(d) + 1, proto().zero_like());
        for (auto& [e, coef] : terms_) {
            for (std::size_t j = 0; j < e.size(); ++j)
                if (j != ix && j != iy && e[j] != 0)
                    throw input_error("polynomial involves variables besides the form pair");
            if (e[ix] + e[iy] != d) throw input_error("polynomial is not homogeneous in the form pair");
            c[static_cast<std::size_t>(e[iy])] = coef;
        }
        return BinaryForm<K>(std::move(c));
    }

    static MultiPoly from_binary_form(const BinaryForm<K>& f, std::vector<std::string> vars,
                                      const std::string& varX, const std::string& varY) {
        MultiPoly p(std::move(vars));
        if (f.is_zero()) return p;
        std::size_t ix = p.var_index(varX), iy = p.var_index(varY);
        for (int i = 0; i <= f.degree(); ++i) {
            if (f.coeff(i).is_zero()) continue;
            Exp e(p.vars_.size(), 0);
            e[ix] = f.degree() - i;
            e[iy] = i;
            p.terms_[e] = f.coeff(i);
        }
        return p;
    }

    /// Leading term under lex order on the declared variable list.
    std::pair<Exp, K> leading_term() const {
        if (is_zero()) throw input_error("leading term of zero polynomial");
        auto it = terms_.rbegin();
        return {it->first, it->second};
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += "(" + it->second.str() + ")";
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (it->first[i] == 0) continue;
                s += "*" + vars_[i];
                if (it->first[i] > 1) s += "^" + std::to_string(it->first[i]);
            }
        }
        return s;
    }

private:
    void check_same_vars(const MultiPoly& o) const {
        if (vars_ != o.vars_) throw input_error("operands declared over different variable lists");
    }

    std::vector<std::string> vars_;
    std::map<Exp, K> terms_;
};

/// Exact division in K[vars]; throws internal_error when not exact (callers
/// rely on it only where divisibility is guaranteed, e.g. Bareiss steps).
template <Field K>
MultiPoly<K> divexact(const MultiPoly<K>& f, const MultiPoly<K>& g) {
    if (g.is_zero()) throw input_error("polynomial division by zero");
    MultiPoly<K> r = f, q(f.vars());
    auto [ge, gc] = g.leading_term();
    const K ginv = gc.inv();
    while (!r.is_zero()) {
        auto [re, rc] = r.leading_term();
        typename MultiPoly<K>::Exp e(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) {
            e[i] = re[i] - ge[i];
            if (e[i] < 0) throw internal_error("divexact: leading term not divisible");
        }
        MultiPoly<K> t(f.vars());
        t.add_term(e, rc * ginv);
        q = q + t;
        r = r - t * g;
    }
    return q;
}

namespace detail {

/// Fraction-free determinant of a square polynomial matrix (Bareiss).
template <Field K>
MultiPoly<K> poly_det(std::vector<std::vector<MultiPoly<K>>> m) {
    const std::size_t n = m.size();
    if (n == 0) throw input_error("determinant of empty matrix");
    MultiPoly<K> prev;
    bool have_prev = false;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return MultiPoly<K>(m[0][0].vars());
        if (piv != k) { std::swap(m[piv], m[k]); sign = -sign; }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly<K> t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = have_prev ? divexact(t, prev) : t;
            }
            m[i][k] = MultiPoly<K>(m[0][0].vars());
        }
        prev = m[k][k];
        have_prev = true;
    }
    MultiPoly<K> d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

} // namespace detail

/// Sylvester resultant of f and g eliminating `var`. Vanishes identically
/// iff f and g share a factor involving var. Sign convention: determinant of
/// the Sylvester matrix with f-rows first (rows of g-degree many f-shifts).
template <Field K>
MultiPoly<K> resultant(const MultiPoly<K>& f, const MultiPoly<K>& g, const std::string& var) {
    if (!f.has_var(var) || !g.has_var(var)) throw input_error("resultant variable missing from inputs");
    int df = f.degree_in(var), dg = g.degree_in(var);
    if (df <= 0 || dg <= 0) throw input_error("resultant inputs must be nonconstant in " + var);
    auto fc = f.coeffs_in(var);
    auto gc = g.coeffs_in(var);
    const std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<MultiPoly<K>>> m(n, std::vector<MultiPoly<K>>(n, MultiPoly<K>(f.vars())));
    for (int r = 0; r < dg; ++r)
        for (int i = 0; i <= df; ++i) m[r][r + df - i] = fc[static_cast<std::size_t>(i)];
    for (int r = 0; r < df; ++r)
        for (int i = 0; i <= dg; ++i) m[dg + r][r + dg - i] = gc[static_cast<std::size_t>(i)];
    return detail::poly_det(m);
}

} // namespace q6
