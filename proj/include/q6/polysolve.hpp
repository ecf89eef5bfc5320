#pragma once

#include <map>
#include <string>

#include "poly.hpp"
#include "qring.hpp"
#include "varieties.hpp"

namespace q6 {

// Zero-dimensional solving of small polynomial systems over Q by linear
// substitution and successive resultants, with algebraic solution families
// ("clusters") carried as Q[theta]/(S) data. Built for the handful of
// parameter-space shapes the built-in varieties use; anything too degenerate
// for the shape assumptions raises nongeneric_error and callers resample.

/// One solution of a system: either a rational point or a cluster of
/// conjugate points cut out by a squarefree modulus S(theta), with every
/// coordinate a polynomial in theta.
struct SolvePoint {
    std::map<std::string, Rat> coords;           // rational branch (empty for clusters)
    std::optional<Poly<Rat>> modulus;            // cluster branch: squarefree, deg >= 2
    std::map<std::string, Poly<Rat>> theta_coords;
    int multiplicity = 1;
    std::string cell;

    bool is_cluster() const { return modulus.has_value(); }
    int point_count() const { return is_cluster() ? modulus->degree() : 1; }
};

struct SolveResult {
    bool finite = true;
    std::vector<SolvePoint> points;
    std::vector<std::pair<std::string, Poly<Rat>>> eliminants; // cell label -> bottom gcd
    long total_with_multiplicity() const {
        long t = 0;
        for (auto& p : points) t += static_cast<long>(p.multiplicity) * p.point_count();
        return t;
    }
};

namespace solve_detail {

inline bool is_constant_poly(const MultiPoly<Rat>& p) {
    for (auto& [e, c] : p.terms())
        for (int x : e)
            if (x != 0) return false;
    return true;
}

inline Rat constant_value(const MultiPoly<Rat>& p) {
    if (p.is_zero()) return Rat(0);
    return p.terms().begin()->second;
}

/// Coefficient of x in p when p is linear in x with a constant coefficient;
/// empty otherwise.
inline std::optional<Rat> linear_constant_coeff(const MultiPoly<Rat>& p, const std::string& x) {
    if (p.degree_in(x) != 1) return std::nullopt;
    auto cs = p.coeffs_in(x);
    if (!is_constant_poly(cs[1])) return std::nullopt;
    return constant_value(cs[1]);
}

/// Substitution record for back-solving eliminated variables.
struct LinearStep {
    std::string var;
    MultiPoly<Rat> expr; // var = expr (expr does not involve var)
};

/// Evaluate a MultiPoly at a rational assignment covering every variable
/// that actually occurs.
inline Rat eval_at(const MultiPoly<Rat>& p, const std::map<std::string, Rat>& a) {
    std::vector<Rat> vals;
    for (auto& v : p.vars()) {
        auto it = a.find(v);
        if (it == a.end()) {
            if (p.degree_in(v) > 0) throw internal_error("missing assignment for " + v);
            vals.push_back(Rat(0));
        } else {
            vals.push_back(it->second);
        }
    }
    return p.eval(vals);
}

/// Evaluate a MultiPoly at a cluster assignment (all vars present).
inline QElem eval_at_cluster(const MultiPoly<Rat>& p, const std::map<std::string, Poly<Rat>>& a,
                             const std::shared_ptr<const Poly<Rat>>& mod) {
    QElem acc = QElem::constant(Rat(0), mod);
    for (auto& [e, c] : p.terms()) {
        QElem t = QElem::constant(c, mod);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = a.find(p.vars()[i]);
            if (it == a.end()) throw internal_error("missing cluster assignment for " + p.vars()[i]);
            QElem v(it->second, mod);
            for (int k = 0; k < e[i]; ++k) t = t * v;
        }
        acc = acc + t;
    }
    return acc;
}

/// View p as a dense polynomial in x with cluster-valued coefficients, all
/// other variables drawn from the assignment.
inline Poly<QElem> specialize_to_x(const MultiPoly<Rat>& p, const std::string& x,
                                   const std::map<std::string, Poly<Rat>>& a,
                                   const std::shared_ptr<const Poly<Rat>>& mod) {
    int d = p.degree_in(x);
    std::vector<QElem> coeffs(static_cast<std::size_t>(std::max(d, 0)) + 1, QElem::constant(Rat(0), mod));
    auto parts = p.coeffs_in(x);
    for (std::size_t k = 0; k < parts.size(); ++k) coeffs[k] = eval_at_cluster(parts[k], a, mod);
    return Poly<QElem>(std::move(coeffs));
}

/// Substitute a rational assignment for every variable except x.
inline Poly<Rat> specialize_to_x(const MultiPoly<Rat>& p, const std::string& x,
                                 const std::map<std::string, Rat>& a) {
    int d = p.degree_in(x);
    std::vector<Rat> coeffs(static_cast<std::size_t>(std::max(d, 0)) + 1, Rat(0));
    auto parts = p.coeffs_in(x);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        std::map<std::string, Rat> full = a;
        full[x] = Rat(0); // x exponent already stripped by coeffs_in
        coeffs[k] = eval_at(parts[k], full);
    }
    return Poly<Rat>(std::move(coeffs));
}

class Solver {
public:
    explicit Solver(std::vector<std::string> all_vars) : all_vars_(std::move(all_vars)) {}

    SolveResult run(std::vector<MultiPoly<Rat>> system, std::vector<std::string> active) {
        SolveResult out;
        solve(std::move(system), std::move(active), {}, 1, out);
        return out;
    }

private:
    // Root structure of a univariate gcd: extend `base` with roots of g in x.
    void emit_roots(const Poly<Rat>& g, const std::string& x, const SolvePoint& base, int mult_factor,
                    SolveResult& out, const std::vector<LinearStep>& pending) {
        auto fac = squarefree_decomposition(g);
        for (std::size_t m = 1; m < fac.size(); ++m) {
            if (fac[m].degree() < 1) continue;
            Poly<Rat> cof;
            auto roots = rational_roots(fac[m], &cof);
            for (auto& [r, rm] : roots) {
                SolvePoint p = base;
                p.coords[x] = r;
                p.multiplicity = base.multiplicity * mult_factor * static_cast<int>(m) * rm;
                backfill(p, pending);
                out.points.push_back(std::move(p));
            }
            if (cof.degree() >= 1) {
                if (cof.degree() == 1) throw internal_error("unextracted linear factor");
                SolvePoint p = base;
                if (p.is_cluster())
                    throw nongeneric_error("nested algebraic clusters; resample the subspace");
                p.modulus = cof.monic();
                for (auto& [v, val] : p.coords) p.theta_coords[v] = Poly<Rat>(val);
                p.coords.clear();
                p.theta_coords[x] = Poly<Rat>::x(Rat(1));
                p.multiplicity = base.multiplicity * mult_factor * static_cast<int>(m);
                backfill(p, pending);
                out.points.push_back(std::move(p));
            }
        }
    }

    void backfill(SolvePoint& p, const std::vector<LinearStep>& pending) {
        // pending steps are in elimination order; apply in reverse
        for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
            if (p.is_cluster()) {
                auto mod = QElem::make_modulus(*p.modulus);
                QElem v = eval_at_cluster_partial(it->expr, p.theta_coords, mod);
                p.theta_coords[it->var] = v.rep();
            } else {
                p.coords[it->var] = eval_partial(it->expr, p.coords);
            }
        }
    }

    static Rat eval_partial(const MultiPoly<Rat>& e, const std::map<std::string, Rat>& a) {
        std::vector<Rat> vals;
        for (auto& v : e.vars()) {
            auto it = a.find(v);
            vals.push_back(it == a.end() ? Rat(0) : it->second);
            if (it == a.end() && e.degree_in(v) > 0)
                throw internal_error("linear back-substitution missing " + v);
        }
        return e.eval(vals);
    }

    static QElem eval_at_cluster_partial(const MultiPoly<Rat>& e,
                                         const std::map<std::string, Poly<Rat>>& a,
                                         const std::shared_ptr<const Poly<Rat>>& mod) {
        QElem acc = QElem::constant(Rat(0), mod);
        for (auto& [ex, c] : e.terms()) {
            QElem t = QElem::constant(c, mod);
            for (std::size_t i = 0; i < ex.size(); ++i) {
                if (ex[i] == 0) continue;
                auto it = a.find(e.vars()[i]);
                if (it == a.end()) throw internal_error("cluster back-substitution missing " + e.vars()[i]);
                QElem v(it->second, mod);
                for (int k = 0; k < ex[i]; ++k) t = t * v;
            }
            acc = acc + t;
        }
        return acc;
    }

    void solve(std::vector<MultiPoly<Rat>> sys, std::vector<std::string> active,
               std::vector<LinearStep> pending, int mult, SolveResult& out) {
        // normalize
        std::vector<MultiPoly<Rat>> polys;
        for (auto& p : sys) {
            if (p.is_zero()) continue;
            if (is_constant_poly(p)) return; // nonzero constant: empty cell
            polys.push_back(p);
        }
        // drop vars that no longer occur anywhere: they are unconstrained
        for (auto& v : active) {
            bool occurs = false;
            for (auto& p : polys)
                if (p.degree_in(v) > 0) occurs = true;
            if (!occurs) {
                out.finite = false;
                return;
            }
        }
        if (active.empty()) {
            SolvePoint p;
            p.multiplicity = mult;
            backfill(p, pending);
            out.points.push_back(std::move(p));
            return;
        }
        if (polys.empty()) {
            out.finite = false;
            return;
        }

        // 1. linear substitution with constant coefficient
        for (auto& p : polys) {
            for (auto& x : active) {
                auto c = linear_constant_coeff(p, x);
                if (!c) continue;
                auto cs = p.coeffs_in(x);
                MultiPoly<Rat> expr = (-c->inv()) * cs[0];
                std::vector<MultiPoly<Rat>> rest;
                for (auto& q : polys)
                    if (!(q == p)) rest.push_back(q.subst(x, expr));
                std::vector<std::string> remaining;
                for (auto& v : active)
                    if (v != x) remaining.push_back(v);
                pending.push_back({x, expr});
                solve(std::move(rest), std::move(remaining), std::move(pending), mult, out);
                return;
            }
        }

        // 2. one variable left: the ideal is generated by the gcd
        if (active.size() == 1) {
            const std::string& x = active[0];
            Poly<Rat> g;
            for (auto& p : polys) {
                Poly<Rat> u = p.to_upoly(x);
                g = g.is_zero() ? u : poly_gcd(g, u);
            }
            if (g.is_zero()) throw internal_error("zero survived normalization");
            out.eliminants.push_back({cell_label_, g});
            if (g.degree() == 0) return; // inconsistent: no roots
            SolvePoint base;
            base.multiplicity = 1;
            emit_roots(g, x, base, mult, out, pending);
            return;
        }

        // 3. eliminate one variable by resultants against a pivot; prefer a
        // (variable, pivot) pair whose resultants all survive, since an
        // identically-zero resultant loses a constraint
        auto ordered = ordered_variables(polys, active);
        std::string x;
        std::vector<MultiPoly<Rat>> with_x, without_x, base_sys;
        bool committed = false;
        for (auto& cand : ordered) {
            std::vector<MultiPoly<Rat>> wx, wox;
            for (auto& p : polys) (p.degree_in(cand) > 0 ? wx : wox).push_back(p);
            std::sort(wx.begin(), wx.end(), [&](const MultiPoly<Rat>& a, const MultiPoly<Rat>& b) {
                if (a.degree_in(cand) != b.degree_in(cand)) return a.degree_in(cand) < b.degree_in(cand);
                return a.term_count() < b.term_count();
            });
            for (std::size_t pi = 0; pi < wx.size() && !committed; ++pi) {
                std::vector<MultiPoly<Rat>> bs = wox;
                bool all_nonzero = true;
                for (std::size_t i = 0; i < wx.size(); ++i) {
                    if (i == pi) continue;
                    auto r = resultant(wx[pi], wx[i], cand);
                    if (r.is_zero())
                        all_nonzero = false;
                    else
                        bs.push_back(std::move(r));
                }
                if (all_nonzero || (pi + 1 == wx.size() && cand == ordered.back())) {
                    x = cand;
                    std::swap(wx[0], wx[pi]);
                    with_x = std::move(wx);
                    without_x = std::move(wox);
                    base_sys = std::move(bs);
                    committed = true;
                }
                if (committed) break;
            }
            if (committed) break;
        }
        if (!committed) throw internal_error("no elimination variable available");
        std::vector<std::string> remaining;
        for (auto& v : active)
            if (v != x) remaining.push_back(v);
        if (base_sys.empty()) {
            out.finite = false;
            return;
        }

        SolveResult base_out;
        base_out.finite = true;
        Solver sub(all_vars_);
        sub.cell_label_ = cell_label_;
        sub.solve(std::move(base_sys), remaining, {}, 1, base_out);
        for (auto& e : base_out.eliminants) out.eliminants.push_back(e);
        if (!base_out.finite) {
            out.finite = false;
            return;
        }

        // lift each base solution over x
        for (auto& sol : base_out.points) {
            if (!sol.is_cluster()) {
                lift_rational(sol, x, with_x, pending, mult, out);
            } else {
                lift_cluster(sol, x, with_x, pending, mult, out);
            }
        }
    }

    void lift_rational(const SolvePoint& sol, const std::string& x,
                       const std::vector<MultiPoly<Rat>>& with_x, const std::vector<LinearStep>& pending,
                       int mult, SolveResult& out) {
        Poly<Rat> h;
        bool inconsistent = false;
        int nonzero = 0;
        for (auto& p : with_x) {
            Poly<Rat> u = specialize_to_x(p, x, sol.coords);
            if (u.is_zero()) continue;
            ++nonzero;
            if (u.degree() == 0) { inconsistent = true; break; }
            h = h.is_zero() ? u : poly_gcd(h, u);
        }
        if (inconsistent) return; // extraneous resultant candidate
        if (nonzero == 0) {
            out.finite = false; // whole fiber over this point
            return;
        }
        if (h.degree() == 0) return; // no common x
        SolvePoint base = sol; // base.multiplicity already carries sol's factor
        emit_roots(h, x, base, mult, out, pending);
    }

    void lift_cluster(const SolvePoint& sol, const std::string& x,
                      const std::vector<MultiPoly<Rat>>& with_x, const std::vector<LinearStep>& pending,
                      int mult, SolveResult& out) {
        for_each_branch(*sol.modulus, [&](const Poly<Rat>& branch) {
            auto mod = QElem::make_modulus(branch);
            Poly<QElem> h;
            bool inconsistent = false;
            int nonzero = 0;
            for (auto& p : with_x) {
                Poly<QElem> u = specialize_to_x(p, x, sol.theta_coords, mod);
                if (u.is_zero()) continue;
                ++nonzero;
                if (u.degree() == 0) {
                    // nonzero constant in the quotient ring: it may still
                    // vanish on a proper sub-branch; split there, drop here
                    Poly<Rat> g = poly_gcd(u.coeff(0).rep(), branch);
                    if (g.degree() >= 1) throw SplitRequest{g};
                    inconsistent = true;
                    break;
                }
                h = h.is_zero() ? u : poly_gcd(h, u);
            }
            if (inconsistent) return;
            if (nonzero == 0) {
                out.finite = false;
                return;
            }
            if (h.is_zero()) throw internal_error("cluster fiber gcd vanished");
            if (h.degree() == 0) return;
            if (h.degree() > 1)
                throw nongeneric_error("cluster fiber is not in shape position; resample");
            QElem root = -(h.coeff(0) / h.coeff(1));
            SolvePoint p = sol;
            p.modulus = branch;
            for (auto& [v, e] : p.theta_coords) p.theta_coords[v] = e % branch;
            p.theta_coords[x] = root.rep();
            p.multiplicity = mult * sol.multiplicity;
            if (branch.degree() == 1) {
                // the cluster collapsed to a rational point
                Rat th = -branch.coeff(0) / branch.coeff(1);
                SolvePoint rp;
                rp.cell = p.cell;
                rp.multiplicity = p.multiplicity;
                for (auto& [v, e] : p.theta_coords) rp.coords[v] = e.eval(th);
                backfill(rp, pending);
                out.points.push_back(std::move(rp));
            } else {
                backfill(p, pending);
                out.points.push_back(std::move(p));
            }
        });
    }

    static std::vector<std::string> ordered_variables(const std::vector<MultiPoly<Rat>>& polys,
                                                      const std::vector<std::string>& active) {
        std::vector<std::pair<int, std::string>> ranked;
        for (auto& v : active) {
            int d = 0;
            for (auto& p : polys) d = std::max(d, p.degree_in(v));
            if (d > 0) ranked.push_back({d, v});
        }
        std::sort(ranked.begin(), ranked.end());
        if (ranked.empty()) throw internal_error("no variable to eliminate");
        std::vector<std::string> out;
        for (auto& [d, v] : ranked) out.push_back(v);
        return out;
    }

public:
    std::string cell_label_;

private:
    std::vector<std::string> all_vars_;
};

} // namespace solve_detail

/// Solve a zero-dimensional affine system. The variable list of every
/// polynomial must equal `vars`; solutions carry rational coordinates or
/// cluster data. Composed multiplicities are exact for simple solutions
/// (the only ones bidegree/degree counting accepts); tangential solutions
/// report the product of per-stage multiplicities.
inline SolveResult solve_zero_dim(std::vector<MultiPoly<Rat>> system, std::vector<std::string> vars,
                                  const std::string& cell_label = "") {
    solve_detail::Solver s(vars);
    s.cell_label_ = cell_label;
    auto out = s.run(std::move(system), std::move(vars));
    for (auto& p : out.points) p.cell = cell_label;
    return out;
}

/// Affine chart of a parameter space: one pivot coordinate per factor set to
/// 1, all the others free. Charts overlap; a solution is attributed to the
/// chart whose pivots are its first nonzero coordinate in each factor, which
/// is what `must_vanish` filters for. Multiplicities are honest because each
/// point is counted in a chart that is a full affine neighborhood of it.
struct ParamChart {
    std::string label;
    std::map<std::string, Rat> fixed;      // pivot vars -> 1
    std::vector<std::string> free_vars;
    std::vector<std::string> must_vanish;  // earlier-in-factor coordinates
};

inline std::vector<ParamChart> parameter_charts(const ParamSpace& space) {
    std::vector<ParamChart> out{ParamChart{}};
    for (auto& [off, len] : space.groups) {
        std::vector<ParamChart> next;
        for (auto& base : out)
            for (std::size_t piv = 0; piv < len; ++piv) {
                ParamChart c = base;
                const std::string& pv = space.vars[off + piv];
                c.label = c.label.empty() ? pv + "=1" : c.label + "," + pv + "=1";
                c.fixed[pv] = Rat(1);
                for (std::size_t i = 0; i < len; ++i) {
                    if (i == piv) continue;
                    c.free_vars.push_back(space.vars[off + i]);
                    if (i < piv) c.must_vanish.push_back(space.vars[off + i]);
                }
                next.push_back(std::move(c));
            }
        out = std::move(next);
    }
    return out;
}

namespace solve_detail {

/// Keep only the part of a solution whose must-vanish coordinates are zero
/// (dedup across overlapping charts); clusters may shrink or collapse.
inline std::optional<SolvePoint> dedup_filter(SolvePoint p, const std::vector<std::string>& must_vanish) {
    if (!p.is_cluster()) {
        for (auto& v : must_vanish)
            if (!p.coords.at(v).is_zero()) return std::nullopt;
        return p;
    }
    Poly<Rat> s = *p.modulus;
    for (auto& v : must_vanish) {
        const Poly<Rat>& rep = p.theta_coords.at(v);
        if (rep.is_zero()) continue;
        s = poly_gcd(s, rep);
        if (s.degree() == 0) return std::nullopt;
    }
    if (s.degree() == p.modulus->degree()) return p;
    if (s.degree() == 1) {
        Rat th = -s.coeff(0) / s.coeff(1);
        SolvePoint rp;
        rp.cell = p.cell;
        rp.multiplicity = p.multiplicity;
        for (auto& [v, e] : p.theta_coords) rp.coords[v] = e.eval(th);
        return rp;
    }
    p.modulus = s;
    for (auto& [v, e] : p.theta_coords) e = e % s;
    return p;
}

} // namespace solve_detail

namespace solve_detail {

/// Solve one affine chart, retrying under seeded unipotent coordinate
/// changes when the elimination loses shape position or constraints. A
/// coordinate change cannot make a positive-dimensional system finite, so
/// an all-attempts-nonfinite verdict is trustworthy; a single finite verdict
/// wins because false nonfinites only arise from dropped zero resultants.
inline SolveResult solve_chart(std::vector<MultiPoly<Rat>> polys, const std::vector<std::string>& frees,
                               const std::string& label, std::uint64_t seed) {
    const int attempts = 4;
    bool saw_nonfinite = false;
    std::optional<nongeneric_error> last_ng;
    for (int att = 0; att < attempts; ++att) {
        std::vector<MultiPoly<Rat>> sys = polys;
        // x = A y with A unipotent-lower times unipotent-upper (always invertible)
        Matrix<Rat> a = Matrix<Rat>::identity(frees.size(), Rat(1));
        if (att > 0) {
            Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(att));
            Matrix<Rat> lo = Matrix<Rat>::identity(frees.size(), Rat(1));
            Matrix<Rat> up = lo;
            for (std::size_t i = 0; i < frees.size(); ++i)
                for (std::size_t j = 0; j < frees.size(); ++j) {
                    if (i > j) lo(i, j) = Rat(rng.uniform(-3, 3));
                    if (i < j) up(i, j) = Rat(rng.uniform(-3, 3));
                }
            a = lo * up;
            std::vector<MultiPoly<Rat>> images;
            for (std::size_t i = 0; i < frees.size(); ++i) {
                MultiPoly<Rat> e(polys.empty() ? std::vector<std::string>(frees) : polys[0].vars());
                for (std::size_t j = 0; j < frees.size(); ++j)
                    e = e + a(i, j) * MultiPoly<Rat>::variable(e.vars(), frees[j], Rat(1));
                images.push_back(std::move(e));
            }
            for (auto& p : sys) {
                std::vector<MultiPoly<Rat>> full;
                for (auto& v : p.vars()) {
                    std::size_t idx = 0;
                    bool found = false;
                    for (std::size_t j = 0; j < frees.size(); ++j)
                        if (frees[j] == v) { idx = j; found = true; }
                    full.push_back(found ? images[idx]
                                         : MultiPoly<Rat>::variable(p.vars(), v, Rat(1)));
                }
                p = p.subst_all(full);
            }
        }
        try {
            auto res = solve_zero_dim(std::move(sys), frees, label);
            if (!res.finite) {
                saw_nonfinite = true;
                continue;
            }
            if (att > 0) {
                // map solutions back: x_i = sum_j a(i,j) y_j
                for (auto& p : res.points) {
                    if (p.is_cluster()) {
                        std::map<std::string, Poly<Rat>> back;
                        for (std::size_t i = 0; i < frees.size(); ++i) {
                            Poly<Rat> acc;
                            for (std::size_t j = 0; j < frees.size(); ++j)
                                if (!a(i, j).is_zero()) acc = acc + a(i, j) * p.theta_coords.at(frees[j]);
                            back[frees[i]] = acc % *p.modulus;
                        }
                        p.theta_coords = std::move(back);
                    } else {
                        std::map<std::string, Rat> back;
                        for (std::size_t i = 0; i < frees.size(); ++i) {
                            Rat acc;
                            for (std::size_t j = 0; j < frees.size(); ++j)
                                acc += a(i, j) * p.coords.at(frees[j]);
                            back[frees[i]] = acc;
                        }
                        p.coords = std::move(back);
                    }
                }
            }
            return res;
        } catch (const nongeneric_error& ng) {
            last_ng = ng;
        }
    }
    if (saw_nonfinite) {
        SolveResult r;
        r.finite = false;
        return r;
    }
    throw last_ng ? *last_ng : nongeneric_error("chart solving failed");
}

} // namespace solve_detail

/// Solve a (multi)homogeneous system on a parameter space chart by chart;
/// solutions come back with all parameter coordinates present and are
/// reported exactly once.
inline SolveResult solve_on_space(const ParamSpace& space, const std::vector<MultiPoly<Rat>>& system,
                                  std::uint64_t seed = 0x9d2c5680) {
    SolveResult merged;
    for (auto& chart : parameter_charts(space)) {
        std::vector<MultiPoly<Rat>> polys;
        for (auto& p : system) {
            MultiPoly<Rat> q = p;
            for (auto& [v, val] : chart.fixed) q = q.subst(v, MultiPoly<Rat>::constant(p.vars(), val));
            polys.push_back(q.restrict_vars(chart.free_vars));
        }
        auto res = solve_detail::solve_chart(std::move(polys), chart.free_vars, chart.label, seed);
        if (!res.finite) merged.finite = false;
        for (auto& p : res.points) {
            auto kept = solve_detail::dedup_filter(std::move(p), chart.must_vanish);
            if (!kept) continue;
            for (auto& [v, val] : chart.fixed) {
                if (kept->is_cluster())
                    kept->theta_coords[v] = Poly<Rat>(val);
                else
                    kept->coords[v] = val;
            }
            merged.points.push_back(std::move(*kept));
        }
        for (auto& e : res.eliminants) merged.eliminants.push_back(std::move(e));
    }
    return merged;
}

} // namespace q6
