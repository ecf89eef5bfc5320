#pragma once

#include <memory>

#include "upoly.hpp"

namespace q6 {

/// Raised by QElem::inv when the element is a zero divisor mod the current
/// modulus; carries a proper factor so the driver can split the branch.
struct SplitRequest {
    Poly<Rat> factor;
};

/// Element of Q[theta]/(S) with S squarefree (not necessarily irreducible).
/// Arithmetic proceeds as if the quotient were a field; inversion of a zero
/// divisor throws SplitRequest, and for_each_branch reruns the computation
/// modulo each factor (dynamic evaluation).
class QElem {
public:
    QElem() = default;
    QElem(Poly<Rat> v, std::shared_ptr<const Poly<Rat>> mod) : mod_(std::move(mod)) {
        v_ = v % *mod_;
    }
    static std::shared_ptr<const Poly<Rat>> make_modulus(const Poly<Rat>& s) {
        if (s.degree() < 1) throw input_error("modulus must be nonconstant");
        return std::make_shared<const Poly<Rat>>(s.monic());
    }
    static QElem constant(const Rat& c, const std::shared_ptr<const Poly<Rat>>& mod) {
        return QElem(Poly<Rat>(c), mod);
    }
    static QElem theta(const std::shared_ptr<const Poly<Rat>>& mod) {
        return QElem(Poly<Rat>::x(Rat(1)), mod);
    }

    const Poly<Rat>& rep() const { return v_; }
    const std::shared_ptr<const Poly<Rat>>& modulus() const { return mod_; }
    bool bound() const { return mod_ != nullptr; }
    bool is_zero() const { return v_.is_zero(); }

    QElem zero_like() const { return bound() ? QElem(Poly<Rat>{}, mod_) : QElem(); }
    QElem one_like() const {
        require_bound();
        return QElem(Poly<Rat>(Rat(1)), mod_);
    }
    QElem from_int(long n) const {
        require_bound();
        return QElem(Poly<Rat>(Rat(n)), mod_);
    }

    QElem operator-() const {
        QElem r = *this;
        r.v_ = -r.v_;
        return r;
    }
    friend QElem operator+(const QElem& a, const QElem& b) {
        auto m = merge(a, b);
        if (!m) return QElem();
        return QElem(a.v_ + b.v_, m);
    }
    friend QElem operator-(const QElem& a, const QElem& b) { return a + (-b); }
    friend QElem operator*(const QElem& a, const QElem& b) {
        auto m = merge(a, b);
        if (!m) return QElem();
        return QElem(a.v_ * b.v_, m);
    }
    QElem& operator+=(const QElem& o) { return *this = *this + o; }
    QElem& operator-=(const QElem& o) { return *this = *this - o; }
    QElem& operator*=(const QElem& o) { return *this = *this * o; }
    friend bool operator==(const QElem& a, const QElem& b) { return a.v_ == b.v_; }
    friend bool operator!=(const QElem& a, const QElem& b) { return !(a == b); }

    QElem inv() const {
        require_bound();
        if (is_zero()) throw input_error("inverse of zero in Q[t]/S");
        auto [g, s, t] = poly_xgcd(v_, *mod_);
        (void)t;
        if (g.degree() == 0) return QElem(s, mod_);
        throw SplitRequest{g};
    }
    friend QElem operator/(const QElem& a, const QElem& b) { return a * b.inv(); }

    std::string str() const { return v_.str("@"); }

private:
    void require_bound() const {
        if (!bound()) throw internal_error("operation needs a bound quotient-ring element");
    }
    static std::shared_ptr<const Poly<Rat>> merge(const QElem& a, const QElem& b) {
        if (a.mod_ && b.mod_) {
            if (!(*a.mod_ == *b.mod_)) throw internal_error("mixed quotient-ring moduli");
            return a.mod_;
        }
        return a.mod_ ? a.mod_ : b.mod_;
    }

    Poly<Rat> v_;
    std::shared_ptr<const Poly<Rat>> mod_;
};

static_assert(Field<QElem>);

/// Run fn once per irreducible-enough branch of the squarefree modulus s;
/// splits lazily whenever fn trips over a zero divisor. fn must be pure in
/// the modulus (it is rerun from scratch on each branch).
template <class Fn>
void for_each_branch(const Poly<Rat>& s, Fn fn) {
    std::vector<Poly<Rat>> work{s.monic()};
    while (!work.empty()) {
        Poly<Rat> cur = work.back();
        work.pop_back();
        if (cur.degree() < 1) continue;
        try {
            fn(cur);
        } catch (const SplitRequest& sr) {
            Poly<Rat> g = sr.factor.monic();
            work.push_back(g);
            work.push_back((cur / g).monic());
        }
    }
}

} // namespace q6
