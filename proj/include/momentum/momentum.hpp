#pragma once

// Momentum polytopes, momentum cones and local momentum cones.
//
// Sign convention: a torus weight nu contributes -nu. For a linear action
// Delta(V) = -cone{nu_i}; for the projectivization Delta(PV) = -hull{nu_i}.
// For a nonabelian group the chamber representative of -nu is nu* = -w0 nu,
// so every projective bound below is computed from starred weights and then
// intersected with the dominant chamber.

#include "momentum/polyhedra.hpp"
#include "momentum/repweights.hpp"
#include "momentum/rootsys.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace momentum {

// Certificates naming the result that grants an exact answer.
namespace certificate {
inline constexpr const char* bigweight = "exact: no simple pairing equals 1 (Proposition bigweight)";
inline constexpr const char* bigpolytope =
    "exact: no simple pairing of any highest weight equals 1 (Proposition bigpolytope)";
inline constexpr const char* multiple = "exact: at least rank+1 copies of one irreducible (Proposition multiple)";
inline constexpr const char* rank_two = "exact: rank at most two, upper bound is sharp (Proposition example, part 2)";
inline constexpr const char* su4 = "exact: SU(4) with highest weight pi1, pi2, pi3 or pi1+pi2+pi3 (Proposition example, part 1)";
inline constexpr const char* kostant = "exact: L = T, Kostant convexity";
inline constexpr const char* dominant_roots_fill = "exact: rays through dominant roots not perpendicular to the wall fill the chamber";
inline constexpr const char* maximal_root = "exact: SU(n), wall spanned by pi1 or pi_{n-1}, ray through the maximal root";
inline constexpr const char* bounds_only = "bounds only";
}  // namespace certificate

struct BoundedAnswer {
    std::optional<Polyhedron> exact;
    Polyhedron lower;
    Polyhedron upper;
    std::string certificate;

    static BoundedAnswer exactly(Polyhedron p, std::string cert) {
        return BoundedAnswer{p, p, p, std::move(cert)};
    }
};

// { lambda : lambda_i >= 0 for every semisimple index }.
inline Polyhedron chamber(const RootSystem& rs) {
    std::vector<Halfspace> hs;
    for (auto& n : rs.chamber_normals()) hs.push_back(Halfspace{std::move(n), Rational(0)});
    return Polyhedron::from_halfspaces(rs.dim(), std::move(hs)).canonical();
}

// Chamber of the semisimple part: the chamber with central coordinates zero.
inline Polyhedron semisimple_chamber(const RootSystem& rs) {
    std::vector<Halfspace> hs, eqs;
    for (auto& n : rs.chamber_normals()) hs.push_back(Halfspace{std::move(n), Rational(0)});
    for (std::size_t i = rs.semisimple_rank(); i < rs.dim(); ++i)
        eqs.push_back(Halfspace{QVec::unit(rs.dim(), i), Rational(0)});
    return Polyhedron::from_halfspaces(rs.dim(), std::move(hs), std::move(eqs)).canonical();
}

inline void require_dim(const RootSystem& rs, const QVec& v, const char* what) {
    if (v.size() != rs.dim())
        throw ShapeError(std::string(what) + " has " + std::to_string(v.size()) + " coordinates, expected " +
                         std::to_string(rs.dim()));
}

// Delta(V) = -cone{weights}.
inline Polyhedron linear_cone_torus(const RootSystem& rs, const std::vector<QVec>& weights) {
    std::vector<QVec> rays;
    for (const auto& w : weights) {
        require_dim(rs, w, "weight");
        rays.push_back(-w);
    }
    return cone_from_rays(rs.dim(), rays);
}

// Delta(PV) = -hull{weights}.
inline Polyhedron projective_polytope_torus(const RootSystem& rs, const std::vector<QVec>& weights) {
    if (weights.empty()) throw DomainError("projective polytope of the zero module");
    std::vector<QVec> pts;
    for (const auto& w : weights) {
        require_dim(rs, w, "weight");
        pts.push_back(-w);
    }
    return hull(pts);
}

// Delta(X) = cone hw(X) from user-supplied generators of the highest-weight
// monoid.
inline Polyhedron affine_cone_from_hw(const RootSystem& rs, const std::vector<QVec>& generators) {
    for (const auto& g : generators) {
        require_dim(rs, g, "generator");
        if (!rs.is_dominant(g)) throw DomainError("affine_cone_from_hw: generator is not dominant");
    }
    return cone_from_rays(rs.dim(), generators);
}

inline Polyhedron projective_closure_polytope(const RootSystem& rs, const Polyhedron& infinity_polytope) {
    if (infinity_polytope.dim() != rs.dim()) throw ShapeError("polytope dimension differs from the rank");
    return join_with_origin(infinity_polytope);
}

inline Polyhedron recover_cone(const Polyhedron& p) { return cone_over(p); }

// Chamber intersected with the hull of the union of the orbits W lambda_j*.
inline Polyhedron naive_projective_bound(const RootSystem& rs, const std::vector<QVec>& hw_list) {
    std::set<QVec> pts;
    for (const auto& l : hw_list) {
        require_dominant_integral(rs, l);
        auto orbit = rs.weyl_orbit(rs.star(l));
        pts.insert(orbit.begin(), orbit.end());
    }
    return intersect(chamber(rs), hull_of(pts));
}

// Chamber intersected with hull(Pi_lambda*).
inline Polyhedron upper_bound_projective(const RootSystem& rs, const QVec& lambda) {
    std::set<QVec> pts;
    for (const auto& nu : pi_lambda(rs, lambda)) pts.insert(rs.star_linear(nu));
    return intersect(chamber(rs), hull_of(pts));
}

enum class SubsetSearch { exhaustive, greedy };

inline const char* to_string(SubsetSearch s) { return s == SubsetSearch::exhaustive ? "exhaustive" : "greedy"; }

struct LowerBound {
    Polyhedron polytope;
    SubsetSearch search = SubsetSearch::exhaustive;
    std::size_t subsets = 0;
};

inline constexpr std::size_t exhaustive_search_limit = 20;

namespace detail {

struct WeightItem {
    QVec weight;
    std::vector<long> ints;
    std::size_t summand = 0;
    Rational norm;
};

inline std::vector<long> to_longs(const QVec& v) {
    std::vector<long> out;
    for (const auto& x : v) out.push_back(x.get_num().get_si());
    return out;
}

// Bron-Kerbosch with pivoting on at most 32 vertices.
inline void maximal_cliques(const std::vector<std::uint32_t>& adj, std::uint32_t r, std::uint32_t p,
                            std::uint32_t x, std::vector<std::uint32_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    std::uint32_t px = p | x;
    int pivot = __builtin_ctz(px);
    std::uint32_t cand = p & ~adj[pivot];
    while (cand) {
        int v = __builtin_ctz(cand);
        std::uint32_t bit = 1u << v;
        maximal_cliques(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= ~bit;
        x |= bit;
        cand &= ~bit;
    }
}

}  // namespace detail

// Lower bound from weight vectors that pairwise satisfy the vanishing
// condition <E_alpha v_i, v_j> = 0: two weight vectors qualify when they lie
// in different irreducible summands, or when their weights do not differ by a
// root. Every such family S gives chamber /\ hull(S*) inside Delta(PV); the
// bound is the hull of the union of these pieces.
inline LowerBound lower_bound_projective(const RootSystem& rs, const WeightSystem& ws) {
    if (!ws.root_system_ptr() || ws.dominant_multiplicities().empty())
        throw DomainError("lower_bound_projective: empty weight system");
    if (!ws.root_system().same_as(rs)) throw DomainError("lower_bound_projective: root system mismatch");

    auto rsp = ws.root_system_ptr();
    std::vector<detail::WeightItem> items;
    std::vector<std::set<QVec>> orbit_of_hw;
    auto add_summand = [&](const std::map<QVec, long>& entries, std::size_t s) {
        for (const auto& [nu, m] : entries)
            items.push_back(detail::WeightItem{nu, detail::to_longs(nu), s, rs.inner(nu, nu)});
    };
    if (ws.hw_list().empty()) {
        add_summand(ws.entries(), 0);
        auto top = ws.dominant_multiplicities().rbegin()->first;
        orbit_of_hw.push_back(rs.weyl_orbit(top));
    } else {
        for (std::size_t s = 0; s < ws.hw_list().size(); ++s) {
            const QVec& l = ws.hw_list()[s];
            add_summand(irrep_weights(rsp, l).entries(), s);
            orbit_of_hw.push_back(rs.weyl_orbit(l));
        }
    }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.norm != b.norm) return a.norm > b.norm;
        if (a.summand != b.summand) return a.summand < b.summand;
        return a.weight < b.weight;
    });

    std::set<std::vector<long>> roots;
    for (const auto& a : rs.positive_roots()) {
        roots.insert(detail::to_longs(a.weight));
        roots.insert(detail::to_longs(-a.weight));
    }
    auto compatible = [&](const detail::WeightItem& a, const detail::WeightItem& b) {
        if (a.summand != b.summand) return true;
        std::vector<long> d(a.ints.size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.ints[i] - b.ints[i];
        return roots.count(d) == 0;
    };

    const std::size_t n = items.size();
    std::set<std::vector<std::size_t>> families;
    LowerBound out;
    if (n <= exhaustive_search_limit) {
        out.search = SubsetSearch::exhaustive;
        std::vector<std::uint32_t> adj(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && compatible(items[i], items[j])) adj[i] |= 1u << j;
        std::vector<std::uint32_t> cliques;
        std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1u);
        detail::maximal_cliques(adj, 0, all, 0, cliques);
        for (auto c : cliques) {
            std::vector<std::size_t> f;
            for (std::size_t i = 0; i < n; ++i)
                if (c & (1u << i)) f.push_back(i);
            families.insert(std::move(f));
        }
    } else {
        // Greedy: seed with each extreme weight (a point of the orbit of its
        // summand's highest weight), then scan the remaining weights from the
        // outside in.
        out.search = SubsetSearch::greedy;
        for (std::size_t seed = 0; seed < n; ++seed) {
            if (!orbit_of_hw[items[seed].summand].count(items[seed].weight)) continue;
            std::vector<std::size_t> f{seed};
            for (std::size_t j = 0; j < n; ++j) {
                if (j == seed) continue;
                bool ok = std::all_of(f.begin(), f.end(), [&](std::size_t i) { return compatible(items[i], items[j]); });
                if (ok) f.push_back(j);
            }
            std::sort(f.begin(), f.end());
            families.insert(std::move(f));
        }
    }

    const Polyhedron ch = chamber(rs);
    std::set<QVec> pts;
    for (const auto& f : families) {
        std::set<QVec> starred;
        for (std::size_t i : f) starred.insert(rs.star_linear(items[i].weight));
        Polyhedron piece = intersect(ch, hull_of(starred));
        if (piece.is_empty()) continue;
        pts.insert(piece.points().begin(), piece.points().end());
    }
    out.subsets = families.size();
    out.polytope = hull_of(pts);
    return out;
}

inline bool has_simple_pairing_one(const RootSystem& rs, const QVec& lambda) {
    for (std::size_t i = 0; i < rs.semisimple_rank(); ++i)
        if (lambda[i] == 1) return true;
    return false;
}

inline bool has_root_pairing_one(const RootSystem& rs, const QVec& lambda) {
    for (const auto& a : rs.positive_roots())
        if (rs.pairing(lambda, a) == 1) return true;
    return false;
}

// Delta(PV) for V with the given highest weights (one entry per irreducible
// summand, repeated for multiple copies).
inline BoundedAnswer momentum_polytope_projective(const RootSystem& rs, const std::vector<QVec>& hw_list) {
    if (hw_list.empty()) throw DomainError("momentum_polytope_projective: empty highest-weight list");
    for (const auto& l : hw_list) require_dominant_integral(rs, l);

    bool no_pairing_one = std::none_of(hw_list.begin(), hw_list.end(),
                                       [&](const QVec& l) { return has_simple_pairing_one(rs, l); });
    std::set<QVec> distinct(hw_list.begin(), hw_list.end());
    if (no_pairing_one) {
        return BoundedAnswer::exactly(naive_projective_bound(rs, hw_list),
                                      distinct.size() == 1 && hw_list.size() == 1 ? certificate::bigweight
                                                                                  : certificate::bigpolytope);
    }
    if (distinct.size() == 1 && hw_list.size() >= rs.semisimple_rank() + 1 && hw_list.size() > 1)
        return BoundedAnswer::exactly(naive_projective_bound(rs, {hw_list.front()}), certificate::multiple);

    if (hw_list.size() == 1) {
        const QVec& l = hw_list.front();
        if (rs.semisimple_rank() <= 2) return BoundedAnswer::exactly(upper_bound_projective(rs, l), certificate::rank_two);
        const auto& g = rs.spec();
        if (g.torus_rank == 0 && g.factors.size() == 1 && g.factors[0] == SimpleFactor{CartanType::A, 3}) {
            static const std::vector<QVec> su4 = {QVec::from_ints({1, 0, 0}), QVec::from_ints({0, 1, 0}),
                                                  QVec::from_ints({0, 0, 1}), QVec::from_ints({1, 1, 1})};
            if (std::find(su4.begin(), su4.end(), l) != su4.end())
                return BoundedAnswer::exactly(upper_bound_projective(rs, l), certificate::su4);
        }
    }

    auto rsp = std::make_shared<const RootSystem>(rs);
    std::vector<WeightSystem> parts;
    for (const auto& l : hw_list) parts.push_back(irrep_weights(rsp, l));
    auto lower = lower_bound_projective(rs, union_weights(parts));
    Polyhedron upper =
        hw_list.size() == 1 ? upper_bound_projective(rs, hw_list.front()) : naive_projective_bound(rs, hw_list);
    BoundedAnswer ans{std::nullopt, lower.polytope, upper,
                      std::string(certificate::bounds_only) + " (lower bound search: " + to_string(lower.search) + ")"};
    if (ans.lower == ans.upper) {
        ans.exact = ans.upper;
        ans.certificate = "exact: lower and upper bounds coincide";
    }
    return ans;
}

// ---------------------------------------------------------------------------
// Local momentum cones

enum class IsotropyCase { full_torus, central_orbit, subtorus, general };

inline IsotropyCase parse_isotropy_case(const std::string& s) {
    if (s == "full-torus-isotropy" || s == "full-torus") return IsotropyCase::full_torus;
    if (s == "central-orbit") return IsotropyCase::central_orbit;
    if (s == "subtorus-isotropy" || s == "subtorus") return IsotropyCase::subtorus;
    if (s == "general") return IsotropyCase::general;
    throw UnsupportedCase("unknown isotropy case '" + s +
                          "'; supported: full-torus-isotropy, central-orbit, subtorus-isotropy");
}

inline const char* to_string(IsotropyCase c) {
    switch (c) {
        case IsotropyCase::full_torus: return "full-torus-isotropy";
        case IsotropyCase::central_orbit: return "central-orbit";
        case IsotropyCase::subtorus: return "subtorus-isotropy";
        case IsotropyCase::general: return "general";
    }
    return "?";
}

struct LocalConeSpec {
    std::shared_ptr<const RootSystem> rs;
    QVec mu;                              // the value of the momentum map at m, dominant
    std::vector<QVec> slice_weights;      // T-weights of the symplectic slice
    std::vector<QVec> isotropy_subtorus;  // basis of Lie(K_m /\ T), coweight coordinates
    IsotropyCase case_tag = IsotropyCase::full_torus;
};

inline void validate(const LocalConeSpec& s) {
    if (!s.rs) throw DomainError("local cone spec without root system");
    const RootSystem& rs = *s.rs;
    require_dim(rs, s.mu, "mu");
    if (!rs.is_dominant(s.mu)) throw DomainError("mu is not in the dominant chamber");
    for (const auto& w : s.slice_weights) require_dim(rs, w, "slice weight");
    switch (s.case_tag) {
        case IsotropyCase::general:
            throw UnsupportedCase(
                "local cone for nonabelian isotropy needs the symplectic slice model (Theorem model); only "
                "full-torus-isotropy, central-orbit and subtorus-isotropy are supported");
        case IsotropyCase::central_orbit:
            for (std::size_t i = 0; i < rs.semisimple_rank(); ++i)
                if (s.mu[i] == 0)
                    throw UnsupportedCase(
                        "central-orbit case with nonabelian K_mu (mu on a wall) needs the momentum cone of a "
                        "nonabelian slice representation (Theorem model)");
            break;
        case IsotropyCase::subtorus:
            if (s.isotropy_subtorus.empty()) throw DomainError("subtorus-isotropy needs a nonempty isotropy basis");
            for (const auto& u : s.isotropy_subtorus) require_dim(rs, u, "isotropy basis vector");
            if (rank(QMat(s.isotropy_subtorus)) != s.isotropy_subtorus.size())
                throw DomainError("isotropy basis is linearly dependent");
            break;
        case IsotropyCase::full_torus: break;
    }
}

// Delta_m = mu + Delta(slice). For subtorus isotropy the slice cone is the
// preimage of -cone(restricted weights) under restriction to the subtorus.
inline Polyhedron local_cone(const LocalConeSpec& s) {
    validate(s);
    const std::size_t d = s.rs->dim();
    if (s.case_tag != IsotropyCase::subtorus)
        return shift(linear_cone_torus(*s.rs, s.slice_weights), s.mu);

    const std::size_t k = s.isotropy_subtorus.size();
    auto restrict_to = [&](const QVec& nu) {
        QVec r(k);
        for (std::size_t j = 0; j < k; ++j) r[j] = dot(nu, s.isotropy_subtorus[j]);
        return r;
    };
    std::vector<QVec> rays;
    for (const auto& w : s.slice_weights) rays.push_back(-restrict_to(w));
    Polyhedron small = cone_from_rays(k, rays);
    // a.y >= 0 on the subtorus pulls back to (sum_j a_j u_j).(x - mu) >= 0
    auto pull = [&](const QVec& a) {
        QVec n(d);
        for (std::size_t j = 0; j < k; ++j) n += a[j] * s.isotropy_subtorus[j];
        return n;
    };
    std::vector<Halfspace> ineqs, eqs;
    for (const auto& h : small.inequalities()) {
        QVec n = pull(h.normal);
        Rational off = dot(n, s.mu) + h.offset;
        ineqs.push_back(Halfspace{std::move(n), off});
    }
    for (const auto& h : small.equalities()) {
        QVec n = pull(h.normal);
        Rational off = dot(n, s.mu) + h.offset;
        eqs.push_back(Halfspace{std::move(n), off});
    }
    return Polyhedron::from_halfspaces(d, std::move(ineqs), std::move(eqs)).canonical();
}

// Delta(M) as the intersection of local momentum cones.
inline Polyhedron assemble_polytope(const std::vector<LocalConeSpec>& specs) {
    if (specs.empty()) throw DomainError("assemble_polytope: empty list of local cones");
    Polyhedron acc = local_cone(specs.front());
    for (std::size_t i = 1; i < specs.size(); ++i) {
        if (!specs[i].rs || !specs[i].rs->same_as(*specs.front().rs))
            throw DomainError("assemble_polytope: local cones over different groups");
        acc = intersect(acc, local_cone(specs[i]));
    }
    return acc;
}

// Necessary condition for mu to be a vertex: the local cone, moved to apex
// 0, is proper.
inline bool vertex_condition(const LocalConeSpec& s) {
    Polyhedron c = local_cone(s);
    return is_proper(shift(c, -s.mu));
}

// Delta of the quotient at a central level mu: (-mu + Delta(M)) restricted to
// the subspace spanned by `basis`, in the coordinates of that basis.
inline Polyhedron reduce(const RootSystem& rs_big, const Polyhedron& polytope, const QVec& mu,
                         const std::vector<QVec>& basis) {
    require_dim(rs_big, mu, "mu");
    if (polytope.dim() != rs_big.dim()) throw ShapeError("polytope dimension differs from the rank");
    for (std::size_t i = 0; i < rs_big.semisimple_rank(); ++i)
        if (mu[i] != 0) throw DomainError("reduce: mu must be central (semisimple coordinates zero)");
    return slice(shift(polytope, -mu), basis);
}

// For K x K with K = rs: the subspace { (x, x*) : x in [k,k]* /\ t* }. The
// second factor of the two-sided action on T*K sees -nu, whose chamber
// representative is nu*, so this is the image of the diagonal.
inline std::vector<QVec> twisted_diagonal_basis(const RootSystem& k) {
    const std::size_t r = k.dim();
    std::vector<QVec> basis;
    for (std::size_t i = 0; i < k.semisimple_rank(); ++i) {
        QVec e = QVec::unit(r, i);
        QVec es = k.star_linear(e);
        QVec b(2 * r);
        for (std::size_t j = 0; j < r; ++j) {
            b[j] = e[j];
            b[r + j] = es[j];
        }
        basis.push_back(std::move(b));
    }
    return basis;
}

// Delta(T*(K/L)) for L = T (no generators) or L = K_sigma, the centralizer of
// the wall spanned by the given dominant weights.
inline BoundedAnswer cotangent_homogeneous(const RootSystem& rs, const std::vector<QVec>& wall_generators) {
    for (const auto& g : wall_generators) {
        require_dim(rs, g, "wall generator");
        if (!rs.is_dominant(g)) throw DomainError("wall generator is not dominant");
    }
    const Polyhedron upper = semisimple_chamber(rs);
    bool trivial_wall = std::all_of(wall_generators.begin(), wall_generators.end(),
                                    [](const QVec& g) { return g.is_zero(); });
    if (trivial_wall) return BoundedAnswer::exactly(upper, certificate::kostant);

    std::vector<QVec> rays;
    if (rs.semisimple_rank() > 0)
        for (const auto& delta : rs.dominant_roots()) {
            bool perpendicular = std::all_of(wall_generators.begin(), wall_generators.end(),
                                             [&](const QVec& g) { return rs.inner(delta, g) == 0; });
            if (!perpendicular) rays.push_back(delta);
        }
    Polyhedron lower = cone_from_rays(rs.dim(), rays);
    if (lower == upper) return BoundedAnswer::exactly(upper, certificate::dominant_roots_fill);

    const auto& spec = rs.spec();
    if (spec.torus_rank == 0 && spec.factors.size() == 1 && spec.factors[0].type == CartanType::A &&
        spec.factors[0].rank >= 2) {
        const std::size_t n1 = static_cast<std::size_t>(spec.factors[0].rank);  // n - 1
        auto spans_ray = [&](std::size_t idx) {
            bool any = false;
            for (const auto& g : wall_generators) {
                if (g.is_zero()) continue;
                for (std::size_t i = 0; i < rs.dim(); ++i)
                    if (i != idx && g[i] != 0) return false;
                any = true;
            }
            return any;
        };
        if (spans_ray(0) || spans_ray(n1 - 1)) {
            QVec theta = QVec::unit(rs.dim(), 0) + QVec::unit(rs.dim(), n1 - 1);
            return BoundedAnswer::exactly(cone_from_rays(rs.dim(), {theta}), certificate::maximal_root);
        }
    }
    return BoundedAnswer{std::nullopt, lower, upper, certificate::bounds_only};
}

// Matrix of the linear involution -w0 in fundamental-weight coordinates.
inline QMat star_matrix(const RootSystem& rs) {
    const std::size_t d = rs.dim();
    QMat m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        QVec c = rs.star_linear(QVec::unit(d, j));
        for (std::size_t i = 0; i < d; ++i) m(i, j) = c[i];
    }
    return m;
}

inline Polyhedron star_image(const RootSystem& rs, const Polyhedron& p) {
    if (p.dim() != rs.dim()) throw ShapeError("polyhedron dimension differs from the rank");
    return linear_image(p, star_matrix(rs));
}

inline bool star_invariance_check(const RootSystem& rs, const Polyhedron& p) {
    return star_image(rs, p) == p.canonical();
}

}  // namespace momentum
