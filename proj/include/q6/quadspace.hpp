#pragma once

#include <utility>

#include "gf.hpp"
#include "matrix.hpp"
#include "rng.hpp"

namespace q6 {

// Q6 is the quadric x1x8 - x2x7 + x3x6 - x4x5 = 0 in P^7. The Gram matrix is
// doubled (x^T G x = 2*Q) so all entries stay integral; rank and isotropy are
// unaffected away from characteristic 2.

/// The 8x8 Gram matrix of Q6 over the field of `one`.
template <Field K>
Matrix<K> gram8(const K& one) {
    Matrix<K> g(8, 8);
    auto set = [&](int i, int j, long s) {
        g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = one.from_int(s);
        g(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = one.from_int(s);
    };
    set(0, 7, 1);
    set(1, 6, -1);
    set(2, 5, 1);
    set(3, 4, -1);
    return g;
}

/// Quadric value x1x8 - x2x7 + x3x6 - x4x5 (half of x^T G x).
template <Field K>
K q6_value(const std::vector<K>& x) {
    if (x.size() != 8) throw input_error("point needs 8 coordinates");
    return x[0] * x[7] - x[1] * x[6] + x[2] * x[5] - x[3] * x[4];
}

/// Polar pairing u^T G v (twice the polarization of the quadric).
template <Field K>
K gram_pair(const std::vector<K>& u, const std::vector<K>& v) {
    return u[0] * v[7] + u[7] * v[0] - u[1] * v[6] - u[6] * v[1] + u[2] * v[5] + u[5] * v[2] -
           u[3] * v[4] - u[4] * v[3];
}

/// Projective point of P^7, normalized so the first nonzero coordinate is 1.
template <Field K>
class ProjPoint {
public:
    explicit ProjPoint(std::vector<K> coords) : x_(std::move(coords)) {
        if (x_.size() != 8) throw input_error("point needs 8 coordinates");
        std::size_t i = 0;
        while (i < 8 && x_[i].is_zero()) ++i;
        if (i == 8) throw input_error("projective point cannot be zero");
        K inv = x_[i].inv();
        for (auto& c : x_) c = inv * c;
    }
    const std::vector<K>& coords() const { return x_; }
    const K& operator[](std::size_t i) const { return x_[i]; }
    bool on_q6() const { return q6_value(x_).is_zero(); }
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.x_ == b.x_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < 8; ++i) s += (i ? ":" : "") + x_[i].str();
        return s + ")";
    }

private:
    std::vector<K> x_;
};

/// Projective linear subspace of P^7 as a row space; stored in reduced row
/// echelon form, so equal subspaces compare equal.
template <Field K>
class LinearSubspace {
public:
    /// Row span of the given matrix (rows need not be independent).
    static LinearSubspace span_rows(Matrix<K> rows) {
        auto pivots = rows.rref();
        Matrix<K> basis(pivots.size(), 8);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (std::size_t j = 0; j < 8; ++j) basis(i, j) = rows(i, j);
        return LinearSubspace(std::move(basis));
    }
    static LinearSubspace span_points(const std::vector<std::vector<K>>& pts) {
        Matrix<K> m;
        for (auto& p : pts) m.append_row(p);
        return span_rows(std::move(m));
    }
    /// Common kernel of the given linear forms (rows).
    static LinearSubspace from_equations(const Matrix<K>& eqs) {
        auto basis = eqs.kernel_basis();
        Matrix<K> m(0, 8);
        for (auto& v : basis) m.append_row(v);
        return span_rows(std::move(m));
    }

    std::size_t ldim() const { return basis_.rows(); }
    int pdim() const { return static_cast<int>(basis_.rows()) - 1; }
    const Matrix<K>& basis() const { return basis_; }

    /// Defining equations: an (8-k) x 8 matrix N with N x = 0 on the subspace.
    Matrix<K> equations() const {
        auto ker = basis_.kernel_basis();
        Matrix<K> n(0, 8);
        for (auto& v : ker) n.append_row(v);
        return n;
    }

    bool contains_vector(const std::vector<K>& v) const {
        Matrix<K> m = basis_;
        m.append_row(v);
        return m.rank() == basis_.rows();
    }
    bool contains(const LinearSubspace& other) const {
        Matrix<K> m = basis_;
        for (std::size_t i = 0; i < other.ldim(); ++i) m.append_row(other.basis_.row(i));
        return m.rank() == basis_.rows();
    }

    LinearSubspace sum(const LinearSubspace& other) const {
        Matrix<K> m = basis_;
        for (std::size_t i = 0; i < other.ldim(); ++i) m.append_row(other.basis_.row(i));
        return span_rows(std::move(m));
    }
    LinearSubspace intersect(const LinearSubspace& other) const {
        // kernel trick on stacked equations
        Matrix<K> eqs = equations();
        Matrix<K> o = other.equations();
        for (std::size_t i = 0; i < o.rows(); ++i) eqs.append_row(o.row(i));
        return from_equations(eqs);
    }

    friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
        return a.basis_ == b.basis_;
    }

private:
    explicit LinearSubspace(Matrix<K> rref_basis) : basis_(std::move(rref_basis)) {}
    Matrix<K> basis_;
};

/// {y : x^T G y = 0 for all x in S}; dim S + dim Ann(S) = 8.
template <Field K>
LinearSubspace<K> annihilator(const LinearSubspace<K>& s) {
    if (s.ldim() == 0) throw input_error("annihilator of the empty subspace");
    K one = s.basis().first_nonzero_proto().one_like();
    return LinearSubspace<K>::from_equations(s.basis() * gram8(one));
}

/// Rank of the quadratic form restricted to the subspace (B G B^T).
template <Field K>
std::size_t restrict_rank(const LinearSubspace<K>& s) {
    if (s.ldim() == 0) return 0;
    K one = s.basis().first_nonzero_proto().one_like();
    return (s.basis() * gram8(one) * s.basis().transpose()).rank();
}

template <Field K>
bool is_isotropic(const LinearSubspace<K>& s) {
    return s.ldim() == 0 || restrict_rank(s) == 0;
}

template <Field K>
std::size_t intersection_ldim(const LinearSubspace<K>& a, const LinearSubspace<K>& b) {
    Matrix<K> m = a.basis();
    for (std::size_t i = 0; i < b.ldim(); ++i) m.append_row(b.basis().row(i));
    return a.ldim() + b.ldim() - m.rank();
}

namespace ref_spaces {

template <Field K>
std::vector<K> unit(int i, const K& one) {
    std::vector<K> e(8, one.zero_like());
    e[static_cast<std::size_t>(i)] = one;
    return e;
}

/// The reference vertical V0 = {x5 = x6 = x7 = x8 = 0} = span{e1..e4}.
template <Field K>
LinearSubspace<K> V0(const K& one) {
    return LinearSubspace<K>::span_points({unit(0, one), unit(1, one), unit(2, one), unit(3, one)});
}
/// The reference horizontal H0 = {x4 = x6 = x7 = x8 = 0} = span{e1, e2, e3, e5}.
template <Field K>
LinearSubspace<K> H0(const K& one) {
    return LinearSubspace<K>::span_points({unit(0, one), unit(1, one), unit(2, one), unit(4, one)});
}
/// The vertex line L = {x3 = ... = x8 = 0} of Q4.
template <Field K>
LinearSubspace<K> L(const K& one) {
    return LinearSubspace<K>::span_points({unit(0, one), unit(1, one)});
}

} // namespace ref_spaces

enum class IsoType { Horizontal, Vertical };

inline const char* iso_type_name(IsoType t) {
    return t == IsoType::Vertical ? "vertical" : "horizontal";
}

/// Type oracle for maximal isotropic subspaces: Vertical iff dim(U ∩ V0) is
/// even (linear dimensions). The naming convention is fixed so that
/// V0 = {x5=x6=x7=x8=0} is vertical and H0 = {x4=x6=x7=x8=0} horizontal.
template <Field K>
IsoType iso_type(const LinearSubspace<K>& u) {
    if (u.ldim() != 4) throw input_error("iso_type needs a P^3 (linear dimension 4)");
    if (!is_isotropic(u)) throw input_error("iso_type needs an isotropic subspace");
    K one = u.basis().first_nonzero_proto().one_like();
    std::size_t d = intersection_ldim(u, ref_spaces::V0(one));
    return d % 2 == 0 ? IsoType::Vertical : IsoType::Horizontal;
}

/// The two maximal isotropic 4-spaces containing an isotropic 3-space W,
/// labeled (vertical, horizontal). They are found as the two isotropic lines
/// of the rank-2 form induced on Ann(W)/W; over Q the two lines are rational
/// because each is Galois-stable (the two members have different types).
template <Field K>
std::pair<LinearSubspace<K>, LinearSubspace<K>> extend_isotropic_plane(const LinearSubspace<K>& w) {
    if (w.ldim() != 3) throw input_error("extend_isotropic_plane needs linear dimension 3");
    if (!is_isotropic(w)) throw input_error("extend_isotropic_plane needs an isotropic subspace");
    K one = w.basis().first_nonzero_proto().one_like();
    auto ann = annihilator(w);
    if (ann.ldim() != 5) throw internal_error("annihilator of isotropic 3-space must have dim 5");

    // complement of W inside Ann(W)
    Matrix<K> stack = w.basis();
    std::vector<std::vector<K>> comp;
    for (std::size_t i = 0; i < ann.ldim() && comp.size() < 2; ++i) {
        auto r = ann.basis().row(i);
        Matrix<K> trial = stack;
        trial.append_row(r);
        if (trial.rank() == stack.rows() + 1) {
            stack = trial;
            comp.push_back(r);
        }
    }
    if (comp.size() != 2) throw internal_error("could not extend W inside its annihilator");

    // induced binary quadratic form alpha x^2 + beta xy + gamma y^2 on Ann(W)/W
    K alpha = q6_value(comp[0]);
    K gamma = q6_value(comp[1]);
    K beta = gram_pair(comp[0], comp[1]); // already twice the polar form of q6_value
    K rank_probe_zero = one.zero_like();
    if (alpha == rank_probe_zero && beta == rank_probe_zero && gamma == rank_probe_zero)
        throw internal_error("induced form on Ann(W)/W is zero; G would be degenerate");

    // isotropic directions (x : y) of the induced form
    std::vector<std::pair<K, K>> dirs;
    if (alpha.is_zero()) {
        dirs.push_back({one, one.zero_like()});
        dirs.push_back({gamma, -beta}); // beta*x + gamma*y = 0 branch
        if (dirs[1].first.is_zero() && dirs[1].second.is_zero())
            throw internal_error("induced form has rank < 2");
    } else {
        K disc = beta * beta - one.from_int(4) * alpha * gamma;
        auto root = field_sqrt(disc);
        if (!root)
            throw internal_error("induced form discriminant is not a square; "
                                 "the two extensions should be rational");
        K two_a = one.from_int(2) * alpha;
        dirs.push_back({(-beta + *root), two_a});
        dirs.push_back({(-beta - *root), two_a});
    }
    if ((dirs[0].first * dirs[1].second - dirs[0].second * dirs[1].first).is_zero())
        throw internal_error("induced form has a double root; rank < 2");

    std::vector<LinearSubspace<K>> exts;
    for (auto& [x, y] : dirs) {
        std::vector<K> v(8, one.zero_like());
        for (std::size_t j = 0; j < 8; ++j) v[j] = x * comp[0][j] + y * comp[1][j];
        Matrix<K> m = w.basis();
        m.append_row(v);
        auto u = LinearSubspace<K>::span_rows(std::move(m));
        if (u.ldim() != 4 || !is_isotropic(u))
            throw internal_error("extension is not a maximal isotropic subspace");
        exts.push_back(u);
    }
    IsoType t0 = iso_type(exts[0]);
    IsoType t1 = iso_type(exts[1]);
    if (t0 == t1) throw internal_error("the two extensions must have different types");
    if (t0 == IsoType::Vertical) return {exts[0], exts[1]};
    return {exts[1], exts[0]};
}

/// G-orthogonal reflection through a non-isotropic vector:
/// tau(x) = x - (x^T G u / q6_value(u)) u, as a matrix on column vectors.
template <Field K>
Matrix<K> reflection_matrix(const std::vector<K>& u, const K& one) {
    K qu = q6_value(u);
    if (qu.is_zero()) throw input_error("reflection axis must be non-isotropic");
    Matrix<K> g = gram8(one);
    std::vector<K> gu = g.apply(u);
    Matrix<K> m = Matrix<K>::identity(8, one);
    K inv = qu.inv();
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) m(i, j) -= inv * u[i] * gu[j];
    return m;
}

/// Seeded sample of a maximal isotropic 4-space of the requested type,
/// as the image of the reference space under a random product of
/// G-reflections (with one extra reflection to fix the family when needed).
template <Field K>
LinearSubspace<K> random_max_isotropic(IsoType type, Rng& rng, const K& one) {
    auto sample_axis = [&]() {
        for (int tries = 0; tries < 1000; ++tries) {
            std::vector<K> u(8);
            for (auto& c : u) c = one.from_int(rng.small_int());
            if (!q6_value(u).is_zero()) return u;
        }
        throw internal_error("could not sample a non-isotropic vector");
    };
    Matrix<K> m = Matrix<K>::identity(8, one);
    for (int k = 0; k < 8; ++k) m = reflection_matrix(sample_axis(), one) * m;

    auto base = type == IsoType::Vertical ? ref_spaces::V0(one) : ref_spaces::H0(one);
    auto u = LinearSubspace<K>::span_rows(base.basis() * m.transpose());
    if (iso_type(u) != type)
        u = LinearSubspace<K>::span_rows(u.basis() * reflection_matrix(sample_axis(), one).transpose());
    if (u.ldim() != 4 || !is_isotropic(u) || iso_type(u) != type)
        throw internal_error("isotropic sampling failed its postcondition");
    return u;
}

template <Field K>
LinearSubspace<K> random_max_isotropic(IsoType type, std::uint64_t seed, const K& one) {
    Rng rng(seed);
    return random_max_isotropic(type, rng, one);
}

} // namespace q6
