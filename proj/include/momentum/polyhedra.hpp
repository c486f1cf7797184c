#pragma once

// Exact rational convex polyhedra.
//
// A polyhedron P in Q^d is handled through its homogenization
//   C(P) = closure of { (x, t) : t > 0, x / t in P } in Q^{d+1},
// with the homogenizing coordinate last. Generators (x, 1) are points, (x, 0)
// rays; an inequality a.x >= b becomes (a, -b).(x, t) >= 0. The double
// description method converts between the two descriptions of C(P), and the
// same routine run on the dual cone gives the opposite direction.
//
// Canonical form (both descriptions present and irredundant):
//   * lineality basis and affine-hull equalities in reduced row echelon form,
//     scaled to primitive integer vectors;
//   * points, rays and facet normals reduced modulo those subspaces (zero in
//     every pivot column); rays and normals primitive integer vectors;
//   * every list sorted lexicographically.

#include "momentum/exactq.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace momentum {

struct Halfspace {
    QVec normal;
    Rational offset;  // normal . x >= offset

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
    friend bool operator<(const Halfspace& a, const Halfspace& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

namespace dd {

// Cone in V-form: lineality basis plus rays.
struct ConeGenerators {
    std::vector<QVec> lineality;
    std::vector<QVec> rays;
};

// Converts { y : a.y >= 0 (a in ineqs), e.y = 0 (e in eqs) } in Q^n into
// generators. Rays of the result are irredundant and primitive.
inline ConeGenerators generators_of(std::size_t n, const std::vector<QVec>& ineqs, const std::vector<QVec>& eqs) {
    using Bits = boost::dynamic_bitset<>;
    const std::size_t m = ineqs.size();

    std::vector<QVec> lin;
    for (std::size_t i = 0; i < n; ++i) lin.push_back(QVec::unit(n, i));
    struct Ray {
        QVec v;
        Bits zero;  // processed inequalities that vanish on v
    };
    std::vector<Ray> rays;

    // Removes from the lineality space the direction not annihilated by a.
    // Returns the eliminated vector oriented so that a.l > 0, or nullopt.
    auto split_lineality = [&](const QVec& a) -> std::optional<QVec> {
        std::size_t piv = lin.size();
        Rational best;
        for (std::size_t i = 0; i < lin.size(); ++i) {
            Rational s = dot(a, lin[i]);
            if (s != 0) {
                piv = i;
                best = s;
                break;
            }
        }
        if (piv == lin.size()) return std::nullopt;
        QVec l0 = lin[piv];
        if (best < 0) {
            l0 = -l0;
            best = -best;
        }
        lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(piv));
        for (auto& l : lin) {
            Rational s = dot(a, l);
            if (s != 0) l = primitive(l - (s / best) * l0);
        }
        for (auto& r : rays) {
            Rational s = dot(a, r.v);
            if (s != 0) r.v = primitive(r.v - (s / best) * l0);
        }
        return primitive(l0);
    };

    // Fourier-Motzkin step with the combinatorial adjacency test.
    auto combine = [&](const QVec& a, bool equality, std::size_t index) {
        std::vector<Rational> val(rays.size());
        std::vector<std::size_t> pos, neg, zer;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i].v);
            if (val[i] > 0) pos.push_back(i);
            else if (val[i] < 0) neg.push_back(i);
            else zer.push_back(i);
        }
        std::vector<Ray> out;
        for (std::size_t p : pos)
            for (std::size_t q : neg) {
                Bits common = rays[p].zero & rays[q].zero;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    if (common.is_subset_of(rays[r].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                QVec v = primitive(val[p] * rays[q].v - val[q] * rays[p].v);
                Ray nr{std::move(v), common};
                if (!equality) nr.zero.set(index);
                out.push_back(std::move(nr));
            }
        for (std::size_t z : zer) {
            Ray r = rays[z];
            if (!equality) r.zero.set(index);
            out.push_back(std::move(r));
        }
        if (!equality)
            for (std::size_t p : pos) out.push_back(rays[p]);
        rays = std::move(out);
    };

    for (const auto& e : eqs) {
        if (e.size() != n) throw ShapeError("constraint dimension mismatch");
        if (e.is_zero()) continue;
        if (split_lineality(e)) continue;
        combine(e, true, 0);
    }
    for (std::size_t k = 0; k < m; ++k) {
        const QVec& a = ineqs[k];
        if (a.size() != n) throw ShapeError("constraint dimension mismatch");
        for (auto& r : rays) r.zero.resize(m);
        if (a.is_zero()) {
            for (auto& r : rays) r.zero.set(k);
            continue;
        }
        if (auto l0 = split_lineality(a)) {
            for (auto& r : rays) r.zero.set(k);
            Bits z(m);
            for (std::size_t j = 0; j < k; ++j) z.set(j);
            rays.push_back(Ray{std::move(*l0), std::move(z)});
            continue;
        }
        combine(a, false, k);
    }
    ConeGenerators out;
    out.lineality = std::move(lin);
    for (auto& r : rays) out.rays.push_back(std::move(r.v));
    return out;
}

// RREF basis of a subspace, each row scaled to a primitive integer vector
// with positive leading entry. Returns the pivot columns alongside.
inline std::pair<std::vector<QVec>, std::vector<std::size_t>> canonical_subspace(std::vector<QVec> basis,
                                                                                   std::size_t n) {
    auto piv = rref_in_place(basis, n);
    for (auto& b : basis) b = primitive(b);
    return {std::move(basis), std::move(piv)};
}

// Zeroes the pivot columns of v using the (RREF, primitive) rows.
inline QVec reduce_mod(QVec v, const std::vector<QVec>& rows, const std::vector<std::size_t>& piv) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (v[piv[k]] == 0) continue;
        v -= (v[piv[k]] / rows[k][piv[k]]) * rows[k];
    }
    return v;
}

}  // namespace dd

class Polyhedron {
public:
    enum class Form { generators, halfspaces, both };

    Polyhedron() = default;

    // Raw generator form; call dd_convert (or any operation) to canonicalize.
    static Polyhedron from_generators(std::size_t dim, std::vector<QVec> points, std::vector<QVec> rays,
                                      std::vector<QVec> lines = {}) {
        Polyhedron p;
        p.dim_ = dim;
        p.form_ = Form::generators;
        for (const auto* list : {&points, &rays, &lines})
            for (const auto& v : *list)
                if (v.size() != dim) throw ShapeError("generator dimension mismatch");
        p.points_ = std::move(points);
        p.rays_ = std::move(rays);
        p.lines_ = std::move(lines);
        p.empty_ = p.points_.empty();
        return p;
    }

    // Raw halfspace form: normal.x >= offset, plus equalities normal.x = offset.
    static Polyhedron from_halfspaces(std::size_t dim, std::vector<Halfspace> ineqs,
                                      std::vector<Halfspace> eqs = {}) {
        Polyhedron p;
        p.dim_ = dim;
        p.form_ = Form::halfspaces;
        for (const auto* list : {&ineqs, &eqs})
            for (const auto& h : *list)
                if (h.normal.size() != dim) throw ShapeError("halfspace dimension mismatch");
        p.ineqs_ = std::move(ineqs);
        p.eqs_ = std::move(eqs);
        return p;
    }

    static Polyhedron empty(std::size_t dim) {
        Polyhedron p;
        p.dim_ = dim;
        p.form_ = Form::both;
        p.empty_ = true;
        return p;
    }

    static Polyhedron universe(std::size_t dim) { return from_halfspaces(dim, {}).canonical(); }

    std::size_t dim() const { return dim_; }
    Form form() const { return form_; }
    bool is_canonical() const { return form_ == Form::both; }
    bool is_empty() const {
        require_canonical();
        return empty_;
    }

    const std::vector<QVec>& points() const { return points_; }
    const std::vector<QVec>& rays() const { return rays_; }
    const std::vector<QVec>& lines() const { return lines_; }
    const std::vector<Halfspace>& inequalities() const { return ineqs_; }
    const std::vector<Halfspace>& equalities() const { return eqs_; }

    bool is_polytope() const {
        require_canonical();
        return rays_.empty() && lines_.empty();
    }
    bool is_cone() const {
        require_canonical();
        return !empty_ && points_.size() == 1 && points_.front().is_zero();
    }

    // Halfspace list with every equality written as a pair of opposite
    // inequalities. The empty polyhedron is { x : 0 >= 1 }.
    std::vector<Halfspace> halfspaces() const {
        require_canonical();
        if (empty_) return {Halfspace{QVec(dim_), Rational(1)}};
        std::vector<Halfspace> out = ineqs_;
        for (const auto& e : eqs_) {
            out.push_back(e);
            out.push_back(Halfspace{-e.normal, -e.offset});
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool contains(const QVec& x) const {
        require_canonical();
        if (x.size() != dim_) throw ShapeError("point dimension mismatch");
        if (empty_) return false;
        for (const auto& e : eqs_)
            if (dot(e.normal, x) != e.offset) return false;
        for (const auto& h : ineqs_)
            if (dot(h.normal, x) < h.offset) return false;
        return true;
    }

    // Face-free containment test: every generator of `inner` satisfies the
    // constraints of *this.
    bool contains(const Polyhedron& inner) const {
        require_canonical();
        inner.require_canonical();
        if (inner.dim_ != dim_) throw ShapeError("dimension mismatch");
        if (inner.empty_) return true;
        if (empty_) return false;
        for (const auto& p : inner.points_)
            if (!contains(p)) return false;
        auto dir_ok = [&](const QVec& r, bool both_ways) {
            for (const auto& e : eqs_)
                if (dot(e.normal, r) != 0) return false;
            for (const auto& h : ineqs_) {
                Rational s = dot(h.normal, r);
                if (s < 0 || (both_ways && s != 0)) return false;
            }
            return true;
        };
        for (const auto& r : inner.rays_)
            if (!dir_ok(r, false)) return false;
        for (const auto& l : inner.lines_)
            if (!dir_ok(l, true)) return false;
        return true;
    }

    // Affine dimension (-1 when empty).
    long affine_dimension() const {
        require_canonical();
        if (empty_) return -1;
        return static_cast<long>(dim_) - static_cast<long>(eqs_.size());
    }

    // Both descriptions, canonical. Idempotent.
    Polyhedron canonical() const {
        if (form_ == Form::both) return *this;
        const std::size_t n = dim_ + 1;
        dd::ConeGenerators gens;
        if (form_ == Form::generators) {
            if (points_.empty()) return empty(dim_);
            std::vector<QVec> g, l;
            for (const auto& p : points_) g.push_back(lift(p, 1));
            for (const auto& r : rays_)
                if (!r.is_zero()) g.push_back(lift(r, 0));
            for (const auto& x : lines_)
                if (!x.is_zero()) l.push_back(lift(x, 0));
            auto dual = dd::generators_of(n, g, l);
            gens = dd::generators_of(n, dual.rays, dual.lineality);
            return assemble(gens, dual);
        }
        std::vector<QVec> a, e;
        for (const auto& h : ineqs_) a.push_back(lift(h.normal, -h.offset));
        a.push_back(QVec::unit(n, dim_));
        for (const auto& h : eqs_) e.push_back(lift(h.normal, -h.offset));
        gens = dd::generators_of(n, a, e);
        bool any_point = false;
        for (const auto& r : gens.rays)
            if (r[dim_] > 0) any_point = true;
        if (!any_point) return empty(dim_);
        auto dual = dd::generators_of(n, gens.rays, gens.lineality);
        return assemble(gens, dual);
    }

    friend bool operator==(const Polyhedron& a, const Polyhedron& b) {
        a.require_canonical();
        b.require_canonical();
        if (a.dim_ != b.dim_ || a.empty_ != b.empty_) return false;
        if (a.empty_) return true;
        return a.points_ == b.points_ && a.rays_ == b.rays_ && a.lines_ == b.lines_ && a.ineqs_ == b.ineqs_ &&
               a.eqs_ == b.eqs_;
    }

private:
    static QVec lift(const QVec& x, const Rational& t) {
        QVec y(x.size() + 1);
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i];
        y[x.size()] = t;
        return y;
    }
    static QVec drop_last(const QVec& y) {
        QVec x(y.size() - 1);
        for (std::size_t i = 0; i + 1 < y.size(); ++i) x[i] = y[i];
        return x;
    }

    void require_canonical() const {
        if (form_ != Form::both) throw DomainError("polyhedron is not canonical; call canonical() first");
    }

    // gens: generators of C(P); dual: generators of its dual cone.
    Polyhedron assemble(const dd::ConeGenerators& gens, const dd::ConeGenerators& dual) const {
        const std::size_t n = dim_ + 1;
        Polyhedron p;
        p.dim_ = dim_;
        p.form_ = Form::both;

        auto [lin, lpiv] = dd::canonical_subspace(gens.lineality, n);
        std::set<QVec> pts, rys;
        for (const auto& r : gens.rays) {
            QVec v = dd::reduce_mod(r, lin, lpiv);
            if (v[dim_] > 0) {
                pts.insert(drop_last((1 / v[dim_]) * v));
            } else {
                QVec d = primitive(drop_last(v));
                if (!d.is_zero()) rys.insert(std::move(d));
            }
        }
        p.points_.assign(pts.begin(), pts.end());
        p.rays_.assign(rys.begin(), rys.end());
        for (const auto& l : lin) p.lines_.push_back(drop_last(l));
        std::sort(p.lines_.begin(), p.lines_.end());
        if (p.points_.empty()) return empty(dim_);

        auto [eqr, epiv] = dd::canonical_subspace(dual.lineality, n);
        std::set<Halfspace> hs;
        for (const auto& r : dual.rays) {
            QVec v = primitive(dd::reduce_mod(r, eqr, epiv));
            QVec a = drop_last(v);
            if (a.is_zero()) continue;  // t >= 0, or a trivially true constraint
            hs.insert(Halfspace{std::move(a), -v[dim_]});
        }
        p.ineqs_.assign(hs.begin(), hs.end());
        for (const auto& e : eqr) p.eqs_.push_back(Halfspace{drop_last(e), -e[dim_]});
        std::sort(p.eqs_.begin(), p.eqs_.end());
        p.empty_ = false;
        return p;
    }

    std::size_t dim_ = 0;
    Form form_ = Form::both;
    bool empty_ = true;
    std::vector<QVec> points_, rays_, lines_;
    std::vector<Halfspace> ineqs_, eqs_;
};

inline Polyhedron dd_convert(const Polyhedron& p) { return p.canonical(); }

inline std::size_t common_dimension(const std::vector<QVec>& vs) {
    std::size_t d = vs.front().size();
    for (const auto& v : vs)
        if (v.size() != d) throw ShapeError("inconsistent vector dimensions");
    return d;
}

inline Polyhedron hull(const std::vector<QVec>& points) {
    if (points.empty()) throw DomainError("hull of an empty point set");
    return Polyhedron::from_generators(common_dimension(points), points, {}).canonical();
}

template <class Range>
Polyhedron hull_of(const Range& r) {
    return hull(std::vector<QVec>(r.begin(), r.end()));
}

inline Polyhedron cone_from_rays(std::size_t dim, const std::vector<QVec>& rays) {
    for (const auto& r : rays)
        if (r.size() != dim) throw ShapeError("ray dimension mismatch");
    return Polyhedron::from_generators(dim, {QVec(dim)}, rays).canonical();
}

inline Polyhedron cone_from_rays(const std::vector<QVec>& rays) {
    if (rays.empty()) throw ShapeError("cannot infer dimension of an empty ray list");
    return cone_from_rays(common_dimension(rays), rays);
}

inline Polyhedron intersect(const Polyhedron& a0, const Polyhedron& b0) {
    if (a0.dim() != b0.dim()) throw ShapeError("intersect: dimension mismatch");
    Polyhedron a = a0.canonical(), b = b0.canonical();
    if (a.is_empty() || b.is_empty()) return Polyhedron::empty(a.dim());
    auto ineqs = a.inequalities();
    ineqs.insert(ineqs.end(), b.inequalities().begin(), b.inequalities().end());
    auto eqs = a.equalities();
    eqs.insert(eqs.end(), b.equalities().begin(), b.equalities().end());
    return Polyhedron::from_halfspaces(a.dim(), std::move(ineqs), std::move(eqs)).canonical();
}

// Generators of the polyhedron with every line replaced by its two rays.
inline std::vector<QVec> all_rays(const Polyhedron& p) {
    std::vector<QVec> out = p.rays();
    for (const auto& l : p.lines()) {
        out.push_back(l);
        out.push_back(-l);
    }
    return out;
}

inline Polyhedron join_with_origin(const Polyhedron& p0) {
    Polyhedron p = p0.canonical();
    if (!p.is_polytope()) throw DomainError("join_with_origin expects a polytope");
    if (p.is_empty()) return hull({QVec(p.dim())});
    auto pts = p.points();
    pts.push_back(QVec(p.dim()));
    return hull(pts);
}

inline Polyhedron cone_over(const Polyhedron& p0) {
    Polyhedron p = p0.canonical();
    if (!p.is_polytope()) throw DomainError("cone_over expects a polytope");
    std::vector<QVec> rays;
    for (const auto& v : p.points())
        if (!v.is_zero()) rays.push_back(v);
    return cone_from_rays(p.dim(), rays);
}

inline Polyhedron shift(const Polyhedron& p0, const QVec& v) {
    Polyhedron p = p0.canonical();
    if (v.size() != p.dim()) throw ShapeError("shift vector dimension mismatch");
    if (p.is_empty()) return p;
    std::vector<QVec> pts;
    for (const auto& x : p.points()) pts.push_back(x + v);
    return Polyhedron::from_generators(p.dim(), std::move(pts), p.rays(), p.lines()).canonical();
}

// { y in Q^k : sum_j y_j b_j in P } for an independent basis b_1..b_k.
inline Polyhedron slice(const Polyhedron& p0, const std::vector<QVec>& basis) {
    Polyhedron p = p0.canonical();
    for (const auto& b : basis)
        if (b.size() != p.dim()) throw ShapeError("slice basis vector dimension mismatch");
    if (!basis.empty() && rank(QMat(basis)) != basis.size()) throw DomainError("slice basis is linearly dependent");
    const std::size_t k = basis.size();
    if (p.is_empty()) return Polyhedron::empty(k);
    auto pull = [&](const Halfspace& h) {
        QVec a(k);
        for (std::size_t j = 0; j < k; ++j) a[j] = dot(h.normal, basis[j]);
        return Halfspace{std::move(a), h.offset};
    };
    std::vector<Halfspace> ineqs, eqs;
    for (const auto& h : p.inequalities()) ineqs.push_back(pull(h));
    for (const auto& h : p.equalities()) eqs.push_back(pull(h));
    if (k == 0) {
        // the slice of the zero-dimensional subspace is {0} or empty
        return p.contains(QVec(p.dim())) ? hull({QVec()}) : Polyhedron::empty(0);
    }
    return Polyhedron::from_halfspaces(k, std::move(ineqs), std::move(eqs)).canonical();
}

inline bool is_proper(const Polyhedron& p0) {
    Polyhedron p = p0.canonical();
    if (!p.is_cone()) throw DomainError("is_proper expects a cone");
    return p.lines().empty();
}

inline bool contains(const Polyhedron& p, const QVec& x) { return p.canonical().contains(x); }
inline bool equal(const Polyhedron& a, const Polyhedron& b) { return a.canonical() == b.canonical(); }
inline bool subset(const Polyhedron& inner, const Polyhedron& outer) {
    return outer.canonical().contains(inner.canonical());
}

// Image under x -> M x for an invertible square M.
inline Polyhedron linear_image(const Polyhedron& p0, const QMat& m) {
    Polyhedron p = p0.canonical();
    if (m.rows() != p.dim() || m.cols() != p.dim()) throw ShapeError("linear_image: matrix shape mismatch");
    if (p.is_empty()) return p;
    std::vector<QVec> pts, rys, lns;
    for (const auto& x : p.points()) pts.push_back(m * x);
    for (const auto& x : p.rays()) rys.push_back(m * x);
    for (const auto& x : p.lines()) lns.push_back(m * x);
    return Polyhedron::from_generators(p.dim(), std::move(pts), std::move(rys), std::move(lns)).canonical();
}

}  // namespace momentum
