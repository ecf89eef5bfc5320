#pragma once

#include <array>
#include <optional>

#include "poly.hpp"
#include "quadspace.hpp"

namespace q6 {

// ---------------------------------------------------------------------------
// Parameter spaces and parametrized subvarieties of Q6
// ---------------------------------------------------------------------------

enum class SpaceKind { P3, WP1112, P1xP2, P2, P1 };

/// Parameter space descriptor: variable names, weights, and scaling groups
/// (one group per projective factor).
struct ParamSpace {
    SpaceKind kind;
    std::vector<std::string> vars;
    std::vector<int> weights;
    std::vector<std::pair<std::size_t, std::size_t>> groups; // offset, length

    static ParamSpace make(SpaceKind kind) {
        switch (kind) {
        case SpaceKind::P3: return {kind, {"t0", "t1", "t2", "t3"}, {1, 1, 1, 1}, {{0, 4}}};
        case SpaceKind::WP1112: return {kind, {"u0", "u1", "u2", "u3"}, {1, 1, 1, 2}, {{0, 4}}};
        case SpaceKind::P1xP2: return {kind, {"u0", "u1", "v0", "v1", "v2"}, {1, 1, 1, 1, 1}, {{0, 2}, {2, 3}}};
        case SpaceKind::P2: return {kind, {"u0", "u1", "u2"}, {1, 1, 1}, {{0, 3}}};
        case SpaceKind::P1: return {kind, {"s", "t"}, {1, 1}, {{0, 2}}};
        }
        throw internal_error("unhandled space kind");
    }

    std::size_t arity() const { return vars.size(); }
    const char* name() const {
        switch (kind) {
        case SpaceKind::P3: return "P3";
        case SpaceKind::WP1112: return "WP1112";
        case SpaceKind::P1xP2: return "P1xP2";
        case SpaceKind::P2: return "P2";
        case SpaceKind::P1: return "P1";
        }
        return "?";
    }
};

/// A subvariety of Q6 given by 8 coordinate polynomials on a parameter
/// space. Construction checks that the pullback of the quadric vanishes
/// identically and that the coordinates are (weighted/multi) homogeneous.
class ParamVariety {
public:
    ParamVariety(std::string name, ParamSpace space, std::vector<MultiPoly<Rat>> coords, int dim)
        : name_(std::move(name)), space_(std::move(space)), coords_(std::move(coords)), dim_(dim) {
        if (coords_.size() != 8) throw input_error("parametrization needs 8 coordinates");
        for (auto& c : coords_)
            if (c.vars() != space_.vars) throw input_error("coordinate variables must match the space");
        check_invariants();
    }

    const std::string& name() const { return name_; }
    const ParamSpace& space() const { return space_; }
    const std::vector<MultiPoly<Rat>>& coords() const { return coords_; }
    int dim() const { return dim_; }

    /// quadric5 keeps an implicit model (its P^4 span) alongside the
    /// parametrization; linear meets use it because the stereographic
    /// parametrization has a base conic.
    void set_implicit_span(const LinearSubspace<Rat>& s) { implicit_span_ = s; }
    const std::optional<LinearSubspace<Rat>>& implicit_span() const { return implicit_span_; }

    /// Image of a parameter tuple (weighted scaling respected; each factor
    /// must be nonzero).
    template <Field K>
    ProjPoint<K> eval(const std::vector<K>& params) const {
        check_params(params);
        std::vector<K> x(8, params[0].zero_like());
        for (std::size_t i = 0; i < 8; ++i)
            if (!coords_[i].is_zero())
                x[i] = coords_[i].eval_mapped(params, [&](const Rat& c) {
                    return map_scalar(c, params[0]);
                });
        bool all_zero = true;
        for (auto& c : x)
            if (!c.is_zero()) { all_zero = false; break; }
        if (all_zero) throw nongeneric_error("parameter point is a base point of the parametrization");
        ProjPoint<K> p(std::move(x));
        if (!p.on_q6()) throw internal_error("image point escaped Q6");
        return p;
    }

    /// Rank of the 8 x (#params) Jacobian of the affine-cone parametrization.
    template <Field K>
    std::size_t jacobian_rank(const std::vector<K>& params) const {
        check_params(params);
        Matrix<K> j(8, space_.arity());
        for (std::size_t i = 0; i < 8; ++i) {
            if (coords_[i].is_zero()) continue;
            for (std::size_t k = 0; k < space_.arity(); ++k) {
                auto d = coords_[i].derivative(space_.vars[k]);
                if (d.is_zero()) continue;
                j(i, k) = d.eval_mapped(params, [&](const Rat& c) { return map_scalar(c, params[0]); });
            }
        }
        return j.rank();
    }

    /// Seeded parameter sample avoiding zero factors and base points.
    std::vector<Rat> sample_params(Rng& rng) const {
        for (int tries = 0; tries < 200; ++tries) {
            std::vector<Rat> p(space_.arity());
            for (auto& c : p) c = Rat(rng.small_int());
            bool ok = true;
            for (auto& [off, len] : space_.groups) {
                bool nz = false;
                for (std::size_t i = off; i < off + len; ++i)
                    if (!p[i].is_zero()) nz = true;
                if (!nz) ok = false;
            }
            if (!ok) continue;
            try {
                eval(p);
                return p;
            } catch (const nongeneric_error&) {
            }
        }
        throw internal_error("could not sample a parameter point");
    }

private:
    template <Field K>
    static K map_scalar(const Rat& c, const K& proto) {
        if constexpr (std::is_same_v<K, Rat>) {
            (void)proto;
            return c;
        } else if constexpr (std::is_same_v<K, Fp>) {
            return Fp::reduce(c, proto.modulus());
        } else {
            return Fp2::lift(Fp::reduce(c, proto.modulus()));
        }
    }

    template <Field K>
    void check_params(const std::vector<K>& params) const {
        if (params.size() != space_.arity()) throw input_error("parameter arity mismatch");
        bool all_zero = true;
        for (auto& c : params)
            if (!c.is_zero()) all_zero = false;
        if (all_zero) throw input_error("all-zero parameter tuple");
        for (auto& [off, len] : space_.groups) {
            bool nz = false;
            for (std::size_t i = off; i < off + len; ++i)
                if (!params[i].is_zero()) nz = true;
            if (!nz) throw input_error("zero tuple in a projective factor");
        }
    }

    void check_invariants() const {
        // multidegree: homogeneous within each group's weights
        for (auto& c : coords_) {
            if (c.is_zero()) continue;
            for (std::size_t gi = 0; gi < space_.groups.size(); ++gi) {
                std::vector<int> w(space_.arity(), 0);
                auto [off, len] = space_.groups[gi];
                for (std::size_t i = off; i < off + len; ++i) w[i] = space_.weights[i];
                if (!c.is_homogeneous(w))
                    throw input_error("coordinates must be homogeneous per projective factor");
            }
        }
        // pullback of the quadric vanishes identically
        MultiPoly<Rat> q = coords_[0] * coords_[7] - coords_[1] * coords_[6] + coords_[2] * coords_[5] -
                           coords_[3] * coords_[4];
        if (!q.is_zero()) throw input_error("image does not lie in Q6");
    }

    std::string name_;
    ParamSpace space_;
    std::vector<MultiPoly<Rat>> coords_;
    int dim_;
    std::optional<LinearSubspace<Rat>> implicit_span_;
};

// ---------------------------------------------------------------------------
// Built-in varieties
// ---------------------------------------------------------------------------

namespace builtin_detail {

inline MultiPoly<Rat> pv(const ParamSpace& s, const std::string& v) {
    return MultiPoly<Rat>::variable(s.vars, v, Rat(1));
}
inline MultiPoly<Rat> pz(const ParamSpace& s) { return MultiPoly<Rat>(s.vars); }

} // namespace builtin_detail

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{
        "horizontal3", "vertical3", "quadric5", "segre", "veronese_surface", "veronese_cone", "cubic_secant"};
    return names;
}

inline ParamVariety builtin(const std::string& name) {
    using namespace builtin_detail;
    if (name == "horizontal3") {
        auto s = ParamSpace::make(SpaceKind::P3);
        auto z = pz(s);
        // image H0 = {x4 = x6 = x7 = x8 = 0}
        return ParamVariety(name, s, {pv(s, "t0"), pv(s, "t1"), pv(s, "t2"), z, pv(s, "t3"), z, z, z}, 3);
    }
    if (name == "vertical3") {
        auto s = ParamSpace::make(SpaceKind::P3);
        auto z = pz(s);
        return ParamVariety(name, s, {pv(s, "t0"), pv(s, "t1"), pv(s, "t2"), pv(s, "t3"), z, z, z, z}, 3);
    }
    if (name == "quadric5") {
        // Q6 restricted to span{e1+e8, e2+e7, e3, e6, e4+e5}, a P^4 on which
        // the form has rank 5; parametrized stereographically from the point
        // e3. The span is kept as the implicit model.
        auto s = ParamSpace::make(SpaceKind::P3);
        auto t0 = pv(s, "t0"), t1 = pv(s, "t1"), t2 = pv(s, "t2"), t3 = pv(s, "t3");
        auto a = -(t0 * t2), b = -(t1 * t2), c = t0 * t0 - t1 * t1 - t3 * t3, d = -(t2 * t3), e = -(t2 * t2);
        ParamVariety v(name, s, {a, b, c, d, d, e, b, a}, 3);
        Rat one(1);
        Matrix<Rat> rows(5, 8);
        auto setrow = [&](std::size_t r, std::initializer_list<int> idx) {
            for (int i : idx) rows(r, static_cast<std::size_t>(i)) = one;
        };
        setrow(0, {0, 7});
        setrow(1, {1, 6});
        setrow(2, {2});
        setrow(3, {5});
        setrow(4, {3, 4});
        auto span = LinearSubspace<Rat>::span_rows(std::move(rows));
        if (restrict_rank(span) != 5)
            throw internal_error("quadric5 model must have restricted rank 5");
        v.set_implicit_span(span);
        return v;
    }
    if (name == "segre") {
        auto s = ParamSpace::make(SpaceKind::P1xP2);
        auto u0 = pv(s, "u0"), u1 = pv(s, "u1"), v0 = pv(s, "v0"), v1 = pv(s, "v1"), v2 = pv(s, "v2");
        auto z = pz(s);
        return ParamVariety(name, s, {u0 * v0, u1 * v0, u0 * v1, u0 * v2, u1 * v1, u1 * v2, z, z}, 3);
    }
    if (name == "veronese_surface" || name == "cubic_secant") {
        // The secant surface of the twisted cubic maps, under the Pluecker
        // embedding, onto the quadratic Veronese surface; cubic_secant is the
        // same map with parameters read as the symmetric functions
        // (1 : s+t : st) of the two secant-chord points.
        auto s = ParamSpace::make(SpaceKind::P2);
        auto u0 = pv(s, "u0"), u1 = pv(s, "u1"), u2 = pv(s, "u2");
        auto z = pz(s);
        return ParamVariety(name, s,
                            {z, u0 * u0, u0 * u1, u0 * u2, u1 * u1 - u0 * u2, u1 * u2, u2 * u2, z}, 2);
    }
    if (name == "veronese_cone") {
        auto s = ParamSpace::make(SpaceKind::WP1112);
        auto u0 = pv(s, "u0"), u1 = pv(s, "u1"), u2 = pv(s, "u2"), u3 = pv(s, "u3");
        auto z = pz(s);
        return ParamVariety(name, s,
                            {u3, u0 * u0, u0 * u1, u0 * u2, u1 * u1 - u0 * u2, u1 * u2, u2 * u2, z}, 3);
    }
    throw input_error("unknown builtin '" + name + "'");
}

/// (s, t) -> symmetric coordinates (1 : s+t : st) for the secant surface.
inline std::vector<Rat> secant_params(const Rat& s, const Rat& t) {
    return {Rat(1), s + t, s * t};
}

// ---------------------------------------------------------------------------
// Twisted-cubic secants and Pluecker coordinates
// ---------------------------------------------------------------------------

/// Pluecker coordinates (p12:p13:p23:p14:p24:p34) of the secant line through
/// (1:t:t^2:t^3) and (1:s:s^2:s^3), normalized by dividing out (s - t).
inline std::array<Rat, 6> wedge_plucker(const Rat& s, const Rat& t) {
    if (s == t) throw input_error("tangent-line degeneration: s = t");
    Rat d = s - t;
    std::array<Rat, 6> p{
        (s - t) / d,
        (s * s - t * t) / d,
        (t * s * s - s * t * t) / d,
        (s * s * s - t * t * t) / d,
        (t * s * s * s - s * t * t * t) / d,
        (t * t * s * s * s - s * s * t * t * t) / d,
    };
    // Pluecker relation
    if (!(p[0] * p[5] - p[1] * p[4] + p[2] * p[3]).is_zero())
        throw internal_error("Pluecker relation violated");
    return p;
}

/// The same coordinates as polynomials in (s, t) (already divided by s - t).
inline std::array<MultiPoly<Rat>, 6> wedge_plucker_polys() {
    std::vector<std::string> vs{"s", "t"};
    auto s = MultiPoly<Rat>::variable(vs, "s", Rat(1));
    auto t = MultiPoly<Rat>::variable(vs, "t", Rat(1));
    auto d = s - t;
    std::array<MultiPoly<Rat>, 6> raw{
        s - t,
        s * s - t * t,
        t * s * s - s * t * t,
        s * s * s - t * t * t,
        t * s * s * s - s * t * t * t,
        t * t * s * s * s - s * s * t * t * t,
    };
    std::array<MultiPoly<Rat>, 6> out{raw};
    for (auto& f : out) f = divexact(f, d);
    return out;
}

/// Embed a Pluecker 6-tuple into Q6 as (0 : p12 : p13 : p23 : p14 : p24 : p34 : 0).
template <class T>
std::vector<T> embed_plucker(const std::array<T, 6>& p, const T& zero) {
    return {zero, p[0], p[1], p[2], p[3], p[4], p[5], zero};
}

// ---------------------------------------------------------------------------
// Weil divisors of bidegree (1, p) on Q4
// ---------------------------------------------------------------------------

/// Whether a point lies on Q4 = {x7 = x8 = 0, x3x6 = x4x5}.
template <Field K>
bool on_q4(const std::vector<K>& x) {
    return x[6].is_zero() && x[7].is_zero() && (x[2] * x[5] - x[3] * x[4]).is_zero();
}

/// The divisor div(f) - (p-1) D1 on Q4, where
///   f = g_p(x4,x6) + x1 g1 + x2 g2 + x3 g3 + x5 g5
/// with deg g_p = p and deg g1..g5 = p-1 (forms in (x4, x6)).
class Q4Divisor {
public:
    Q4Divisor(int p, BinaryForm<Rat> gp, BinaryForm<Rat> g1, BinaryForm<Rat> g2, BinaryForm<Rat> g3,
              BinaryForm<Rat> g5)
        : p_(p), gp_(std::move(gp)), g1_(std::move(g1)), g2_(std::move(g2)), g3_(std::move(g3)),
          g5_(std::move(g5)) {
        if (p_ < 1) throw input_error("divisor needs p >= 1");
        auto fix = [&](BinaryForm<Rat>& f, int d, const char* which) {
            if (f.is_zero()) {
                f = BinaryForm<Rat>::zero(d);
            } else if (f.degree() != d) {
                throw input_error(std::string("form ") + which + " must have degree " + std::to_string(d));
            }
        };
        fix(gp_, p_, "g_p");
        fix(g1_, p_ - 1, "g1");
        fix(g2_, p_ - 1, "g2");
        fix(g3_, p_ - 1, "g3");
        fix(g5_, p_ - 1, "g5");
        if (gp_.is_zero() && g1_.is_zero() && g2_.is_zero() && g3_.is_zero() && g5_.is_zero())
            throw input_error("divisor data cannot be all zero");
    }

    int p() const { return p_; }
    const BinaryForm<Rat>& gp() const { return gp_; }
    const BinaryForm<Rat>& g1() const { return g1_; }
    const BinaryForm<Rat>& g2() const { return g2_; }
    const BinaryForm<Rat>& g3() const { return g3_; }
    const BinaryForm<Rat>& g5() const { return g5_; }

    /// f as a polynomial in x1..x8 (only x1..x6 occur).
    MultiPoly<Rat> f_poly() const {
        static const std::vector<std::string> xs{"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"};
        auto form = [&](const BinaryForm<Rat>& g) {
            return MultiPoly<Rat>::from_binary_form(g, xs, "x4", "x6");
        };
        auto xv = [&](const char* v) { return MultiPoly<Rat>::variable(xs, v, Rat(1)); };
        return form(gp_) + xv("x1") * form(g1_) + xv("x2") * form(g2_) + xv("x3") * form(g3_) +
               xv("x5") * form(g5_);
    }

    /// Value of f at a point (any field through the coefficient map).
    template <Field K, class MapFn>
    K f_value(const std::vector<K>& x, MapFn map) const {
        K r = gp_.eval_mapped(x[3], x[5], map);
        r = r + x[0] * g1_.eval_mapped(x[3], x[5], map);
        r = r + x[1] * g2_.eval_mapped(x[3], x[5], map);
        r = r + x[2] * g3_.eval_mapped(x[3], x[5], map);
        r = r + x[4] * g5_.eval_mapped(x[3], x[5], map);
        return r;
    }
    Rat f_value(const std::vector<Rat>& x) const {
        return f_value(x, [](const Rat& c) { return c; });
    }

    /// The four coefficient binary forms of lambda in (a, b):
    /// (g1, g2, a*g3 + b*g5, g_p) of degrees (p-1, p-1, p, p).
    std::array<BinaryForm<Rat>, 4> lambda_coefficient_forms() const {
        BinaryForm<Rat> X(std::vector<Rat>{Rat(1), Rat(0)});
        BinaryForm<Rat> Y(std::vector<Rat>{Rat(0), Rat(1)});
        return {g1_, g2_, X * g3_ + Y * g5_, gp_};
    }

    /// Parse a polynomial into divisor normal form: reduce x4x5 -> x3x6 using
    /// the Q4 equation, then match against (weil)'s shape.
    static Q4Divisor from_polynomial(MultiPoly<Rat> f);

private:
    int p_;
    BinaryForm<Rat> gp_, g1_, g2_, g3_, g5_;
};

inline Q4Divisor Q4Divisor::from_polynomial(MultiPoly<Rat> f) {
    static const std::vector<std::string> xs{"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"};
    if (f.vars() != xs) f = f.extend_vars(xs);
    // reduce: every x4x5 pair becomes x3x6
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [e, c] : f.terms()) {
            if (e[3] > 0 && e[4] > 0) {
                MultiPoly<Rat>::Exp e2 = e;
                e2[3] -= 1;
                e2[4] -= 1;
                e2[2] += 1;
                e2[5] += 1;
                MultiPoly<Rat> shift(xs);
                shift.add_term(e2, c);
                MultiPoly<Rat> orig(xs);
                orig.add_term(e, c);
                f = f - orig + shift;
                changed = true;
                break;
            }
        }
    }
    int p = f.total_degree();
    if (p < 1) throw input_error("divisor polynomial must be nonconstant");
    std::vector<Rat> gp(static_cast<std::size_t>(p) + 1, Rat(0));
    std::array<std::vector<Rat>, 4> gi;
    for (auto& v : gi) v.assign(static_cast<std::size_t>(p), Rat(0));
    for (auto& [e, c] : f.terms()) {
        if (e[6] != 0 || e[7] != 0) throw input_error("divisor polynomial must not involve x7, x8");
        int aux[4] = {e[0], e[1], e[2], e[4]}; // exponents of x1, x2, x3, x5
        int auxsum = aux[0] + aux[1] + aux[2] + aux[3];
        int d46 = e[3] + e[5];
        if (auxsum == 0) {
            if (d46 != p) throw input_error("term outside the (1,p) normal form");
            gp[static_cast<std::size_t>(e[5])] += c;
        } else if (auxsum == 1 && d46 == p - 1) {
            int which = aux[0] ? 0 : aux[1] ? 1 : aux[2] ? 2 : 3;
            gi[static_cast<std::size_t>(which)][static_cast<std::size_t>(e[5])] += c;
        } else {
            throw input_error("term outside the (1,p) normal form");
        }
    }
    auto mk = [&](std::vector<Rat> v, int d) {
        BinaryForm<Rat> f2(std::move(v));
        return f2.is_zero() ? BinaryForm<Rat>::zero(d) : f2;
    };
    return Q4Divisor(p, mk(std::move(gp), p), mk(std::move(gi[0]), p - 1), mk(std::move(gi[1]), p - 1),
                     mk(std::move(gi[2]), p - 1), mk(std::move(gi[3]), p - 1));
}

// ---------------------------------------------------------------------------
// The pencil of vertical 3-planes through L and the divisor's plane family
// ---------------------------------------------------------------------------

/// Embedding of u-coordinates of P(a,b) into x-space:
/// (u1:u2:u3:u4) -> (u1 : u2 : u3 a : u4 a : u3 b : u4 b : 0 : 0).
template <Field K>
std::vector<K> pencil_embed(const K& a, const K& b, const std::vector<K>& u) {
    if (u.size() != 4) throw input_error("pencil point needs 4 u-coordinates");
    K z = a.zero_like() + b.zero_like();
    return {u[0], u[1], u[2] * a, u[3] * a, u[2] * b, u[3] * b, z, z};
}

/// The 3-plane P(a,b); depends only on (a : b).
template <Field K>
LinearSubspace<K> pencil_plane(const K& a, const K& b) {
    if (a.is_zero() && b.is_zero()) throw input_error("pencil parameter (0,0)");
    K one = (a.is_zero() ? b : a).one_like();
    K zero = one.zero_like();
    Matrix<K> rows(4, 8);
    for (std::size_t j = 0; j < 8; ++j) rows(0, j) = rows(1, j) = rows(2, j) = rows(3, j) = zero;
    rows(0, 0) = one;
    rows(1, 1) = one;
    rows(2, 2) = a;
    rows(2, 4) = b;
    rows(3, 3) = a;
    rows(3, 5) = b;
    return LinearSubspace<K>::span_rows(std::move(rows));
}

/// The divisor's trace on one pencil plane.
struct PlaneFamily {
    Rat a, b;
    LinearSubspace<Rat> plane;       // P(a,b)
    std::array<Rat, 4> lambda;       // coefficients of lambda(u)
    bool whole_plane;                // all four coefficients vanish
    std::optional<LinearSubspace<Rat>> qplane; // Q(a,b) when proper
};

inline std::array<Rat, 4> lambda_at(const Q4Divisor& d, const Rat& a, const Rat& b) {
    return {d.g1().eval(a, b), d.g2().eval(a, b), a * d.g3().eval(a, b) + b * d.g5().eval(a, b),
            d.gp().eval(a, b)};
}

inline PlaneFamily q_plane(const Q4Divisor& d, const Rat& a, const Rat& b) {
    if (a.is_zero() && b.is_zero()) throw input_error("pencil parameter (0,0)");
    PlaneFamily out{a, b, pencil_plane(a, b), lambda_at(d, a, b), false, std::nullopt};
    bool all = true;
    for (auto& c : out.lambda)
        if (!c.is_zero()) all = false;
    out.whole_plane = all;
    if (!all) {
        Matrix<Rat> lrow(1, 4);
        for (std::size_t i = 0; i < 4; ++i) lrow(0, i) = out.lambda[i];
        auto ker = lrow.kernel_basis();
        std::vector<std::vector<Rat>> pts;
        for (auto& u : ker) pts.push_back(pencil_embed(a, b, u));
        out.qplane = LinearSubspace<Rat>::span_points(pts);
        if (out.qplane->ldim() != 3) throw internal_error("Q(a,b) must be a plane");
    }
    return out;
}

/// f restricted to P(a,b): a polynomial in (u1..u4); equals u4^{p-1} * lambda
/// as a polynomial identity.
inline MultiPoly<Rat> restrict_to_pencil(const Q4Divisor& d, const Rat& a, const Rat& b) {
    if (a.is_zero() && b.is_zero()) throw input_error("pencil parameter (0,0)");
    static const std::vector<std::string> us{"u1", "u2", "u3", "u4"};
    auto uv = [&](const char* v) { return MultiPoly<Rat>::variable(us, v, Rat(1)); };
    std::vector<MultiPoly<Rat>> images{
        uv("u1"), uv("u2"), a * uv("u3"), a * uv("u4"), b * uv("u3"), b * uv("u4"),
        MultiPoly<Rat>(us), MultiPoly<Rat>(us)};
    auto f = d.f_poly();
    auto restricted = f.eval_mapped(images, [&](const Rat& c) { return MultiPoly<Rat>::constant(us, c); });

    // postcondition: u4^(p-1) * lambda
    auto lam = lambda_at(d, a, b);
    auto expect = lam[0] * uv("u1") + lam[1] * uv("u2") + lam[2] * uv("u3") + lam[3] * uv("u4");
    for (int k = 0; k < d.p() - 1; ++k) expect = expect * uv("u4");
    if (!(restricted == expect)) throw internal_error("pencil restriction identity failed");
    return restricted;
}

/// psi((a:b)) in Eq-(pointL) form; defined away from common roots of g1, g2.
inline ProjPoint<Rat> psi(const Q4Divisor& d, const Rat& a, const Rat& b) {
    if (a.is_zero() && b.is_zero()) throw input_error("pencil parameter (0,0)");
    if (d.g1().is_zero() && d.g2().is_zero())
        throw input_error("psi undefined: g1 and g2 both vanish (double-cone branch)");
    Rat v1 = d.g1().eval(a, b), v2 = d.g2().eval(a, b);
    if (v1.is_zero() && v2.is_zero())
        throw input_error("psi undefined at the common root (" + a.str() + ":" + b.str() + ") of g1, g2");
    std::vector<Rat> x(8, Rat(0));
    x[0] = -v2;
    x[1] = v1;
    return ProjPoint<Rat>(std::move(x));
}

/// Degree of psi: p - 1 minus the common-root count of (g1, g2).
inline int psi_degree(const Q4Divisor& d) {
    if (d.g1().is_zero() && d.g2().is_zero())
        throw input_error("psi undefined: g1 and g2 both vanish (double-cone branch)");
    int shared = gcd_forms(d.g1(), d.g2()).degree();
    return d.p() - 1 - shared;
}

/// Membership test for points of Q4. Points of L count as contained
/// (irreducible (1,p) divisors contain L; for reducible data this is a
/// documented convention, callers needing scheme precision use q_plane).
inline bool divisor_contains(const Q4Divisor& d, const ProjPoint<Rat>& z) {
    const auto& x = z.coords();
    if (!on_q4(x)) throw input_error("point does not lie on Q4");
    bool on_l = true;
    for (int i = 2; i < 8; ++i)
        if (!x[static_cast<std::size_t>(i)].is_zero()) on_l = false;
    if (on_l) return true;
    Rat a, b, u3, u4;
    if (!x[3].is_zero() || !x[5].is_zero()) {
        a = x[3];
        b = x[5];
        u4 = Rat(1);
        u3 = a.is_zero() ? x[4] / b : x[2] / a;
    } else {
        a = x[2];
        b = x[4];
        u4 = Rat(0);
        u3 = Rat(1);
    }
    auto lam = lambda_at(d, a, b);
    Rat val = lam[0] * x[0] + lam[1] * x[1] + lam[2] * u3 + lam[3] * u4;
    return val.is_zero();
}

} // namespace q6
