#pragma once

// Root data for a product of simple Cartan types times a central torus.
//
// Coordinates: a weight is written in the basis of fundamental weights of the
// semisimple factors (in factor order), followed by the coordinates of the
// central torus. With this choice the pairing (lambda, check alpha_i) with a
// simple coroot is the i-th coordinate, and the dominant chamber is
// { lambda : lambda_i >= 0 for every semisimple index i }.

#include "momentum/exactq.hpp"

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace momentum {

enum class CartanType { A, B, C, D, E, F, G };

struct SimpleFactor {
    CartanType type;
    int rank;

    friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

struct GroupSpec {
    std::vector<SimpleFactor> factors;
    int torus_rank = 0;

    int semisimple_rank() const {
        int r = 0;
        for (const auto& f : factors) r += f.rank;
        return r;
    }
    int rank() const { return semisimple_rank() + torus_rank; }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

inline char type_letter(CartanType t) { return "ABCDEFG"[static_cast<int>(t)]; }

inline void validate(const SimpleFactor& f) {
    auto bad = [&] {
        throw DomainError(std::string("invalid rank ") + std::to_string(f.rank) + " for type " +
                          type_letter(f.type));
    };
    switch (f.type) {
        case CartanType::A: if (f.rank < 1) bad(); break;
        case CartanType::B:
        case CartanType::C: if (f.rank < 2) bad(); break;
        case CartanType::D: if (f.rank < 3) bad(); break;
        case CartanType::E: if (f.rank < 6 || f.rank > 8) bad(); break;
        case CartanType::F: if (f.rank != 4) bad(); break;
        case CartanType::G: if (f.rank != 2) bad(); break;
    }
}

// "A2", "B2xA1", "A2xT1", "T3". Torus factors may appear anywhere; their
// coordinates always come last.
inline GroupSpec parse_group(std::string_view text) {
    GroupSpec spec;
    if (text.empty()) throw DomainError("empty group string");
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find('x', pos);
        std::string_view tok = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        if (tok.size() < 2) throw DomainError("malformed group factor '" + std::string(tok) + "'");
        char letter = tok[0];
        std::string digits(tok.substr(1));
        for (char ch : digits)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw DomainError("malformed group factor '" + std::string(tok) + "'");
        int r = std::stoi(digits);
        if (letter == 'T') {
            if (r < 1) throw DomainError("torus factor needs positive rank");
            spec.torus_rank += r;
        } else {
            static const std::string letters = "ABCDEFG";
            auto idx = letters.find(letter);
            if (idx == std::string::npos) throw DomainError("unknown Cartan type '" + std::string(1, letter) + "'");
            SimpleFactor f{static_cast<CartanType>(idx), r};
            validate(f);
            spec.factors.push_back(f);
        }
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return spec;
}

inline std::string to_string(const GroupSpec& g) {
    std::string s;
    for (const auto& f : g.factors) {
        if (!s.empty()) s += 'x';
        s += type_letter(f.type);
        s += std::to_string(f.rank);
    }
    if (g.torus_rank > 0) {
        if (!s.empty()) s += 'x';
        s += "T" + std::to_string(g.torus_rank);
    }
    return s;
}

// Sequence of simple reflections, applied first-to-last.
struct WeylWord {
    std::vector<int> letters;

    bool empty() const { return letters.empty(); }
    WeylWord inverse() const { return WeylWord{{letters.rbegin(), letters.rend()}}; }
    friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

struct PositiveRoot {
    std::vector<long> simple_coeffs;  // alpha = sum c_i alpha_i, c_i >= 0
    QVec weight;                      // fundamental-weight coordinates
    QVec coroot;                      // (lambda, check alpha) = dot(lambda, coroot)
    Rational norm2;                   // (alpha, alpha), long roots of each factor normalized to 2
    int factor = 0;
    // alpha = apply(word, alpha_{seed})
    WeylWord word;
    int seed = 0;

    long height() const {
        long h = 0;
        for (long c : simple_coeffs) h += c;
        return h;
    }
};

namespace detail {

// Squared lengths of the simple roots (long roots = 2) and the Dynkin edges,
// Bourbaki numbering.
inline void dynkin_data(const SimpleFactor& f, std::vector<Rational>& len2,
                        std::vector<std::pair<int, int>>& edges) {
    const int n = f.rank;
    len2.assign(n, Rational(2));
    edges.clear();
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) edges.emplace_back(i, i + 1);
    };
    switch (f.type) {
        case CartanType::A: chain(n); break;
        case CartanType::B: chain(n); len2[n - 1] = 1; break;
        case CartanType::C:
            chain(n);
            for (int i = 0; i + 1 < n; ++i) len2[i] = 1;
            break;
        case CartanType::D:
            chain(n - 1);
            edges.emplace_back(n - 3, n - 1);
            break;
        case CartanType::E:
            // 1-3-4-5-6-7-8 with 2 attached to 4 (zero-based below)
            edges.emplace_back(0, 2);
            edges.emplace_back(1, 3);
            for (int i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case CartanType::F:
            chain(4);
            len2[2] = 1;
            len2[3] = 1;
            break;
        case CartanType::G:
            chain(2);
            len2[0] = make_rational(2, 3);
            break;
    }
}

}  // namespace detail

class RootSystem {
public:
    explicit RootSystem(GroupSpec spec) : spec_(std::move(spec)) {
        for (const auto& f : spec_.factors) validate(f);
        if (spec_.torus_rank < 0) throw DomainError("negative torus rank");
        ss_rank_ = spec_.semisimple_rank();
        dim_ = spec_.rank();
        build_cartan();
        build_positive_roots();
    }

    static RootSystem parse(std::string_view text) { return RootSystem(parse_group(text)); }

    const GroupSpec& spec() const { return spec_; }
    std::size_t dim() const { return dim_; }
    std::size_t semisimple_rank() const { return ss_rank_; }
    std::size_t torus_rank() const { return dim_ - ss_rank_; }

    // (alpha_i, check alpha_j), semisimple block only
    const QMat& cartan() const { return cartan_; }
    const std::vector<QVec>& simple_roots() const { return simple_roots_; }
    const std::vector<PositiveRoot>& positive_roots() const { return positive_; }
    const std::vector<Rational>& simple_len2() const { return len2_; }
    int factor_of(std::size_t simple_index) const { return factor_of_[simple_index]; }

    Rational pairing(const QVec& lambda, const PositiveRoot& alpha) const {
        check_dim(lambda);
        return dot(lambda, alpha.coroot);
    }

    // Invariant inner product: the normalized form on each simple factor and
    // the standard form on the central coordinates.
    Rational inner(const QVec& a, const QVec& b) const {
        check_dim(a);
        check_dim(b);
        Rational s = 0;
        for (std::size_t i = 0; i < ss_rank_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < ss_rank_; ++j)
                if (gram_(i, j) != 0) s += a[i] * gram_(i, j) * b[j];
        }
        for (std::size_t i = ss_rank_; i < dim_; ++i) s += a[i] * b[i];
        return s;
    }

    QVec rho() const {
        QVec r(dim_);
        for (std::size_t i = 0; i < ss_rank_; ++i) r[i] = 1;
        return r;
    }

    bool is_dominant(const QVec& lambda) const {
        check_dim(lambda);
        for (std::size_t i = 0; i < ss_rank_; ++i)
            if (lambda[i] < 0) return false;
        return true;
    }

    bool is_integral(const QVec& lambda) const {
        check_dim(lambda);
        return lambda.is_integral();
    }

    QVec reflect(std::size_t i, const QVec& lambda) const {
        if (i >= ss_rank_) throw DomainError("simple reflection index out of range");
        check_dim(lambda);
        if (lambda[i] == 0) return lambda;
        return lambda - lambda[i] * simple_roots_[i];
    }

    QVec apply(const WeylWord& w, QVec lambda) const {
        for (int i : w.letters) lambda = reflect(static_cast<std::size_t>(i), lambda);
        return lambda;
    }

    // Reflection in the hyperplane orthogonal to a positive root, realized as
    // the conjugate w s_i w^{-1} of a simple reflection.
    QVec reflect_root(const PositiveRoot& alpha, const QVec& lambda) const {
        QVec x = apply(alpha.word.inverse(), lambda);
        x = reflect(static_cast<std::size_t>(alpha.seed), x);
        return apply(alpha.word, x);
    }

    std::pair<QVec, WeylWord> dominantize(QVec lambda) const {
        check_dim(lambda);
        WeylWord w;
        for (;;) {
            std::size_t i = 0;
            while (i < ss_rank_ && lambda[i] >= 0) ++i;
            if (i == ss_rank_) break;
            lambda = lambda - lambda[i] * simple_roots_[i];
            w.letters.push_back(static_cast<int>(i));
        }
        return {std::move(lambda), std::move(w)};
    }

    std::set<QVec> weyl_orbit(const QVec& lambda) const {
        check_dim(lambda);
        std::set<QVec> seen{lambda};
        std::vector<QVec> frontier{lambda};
        while (!frontier.empty()) {
            std::vector<QVec> next;
            for (const auto& mu : frontier)
                for (std::size_t i = 0; i < ss_rank_; ++i) {
                    if (mu[i] == 0) continue;
                    QVec nu = reflect(i, mu);
                    if (seen.insert(nu).second) next.push_back(std::move(nu));
                }
            frontier = std::move(next);
        }
        return seen;
    }

    // lambda* = -w0 lambda for dominant lambda.
    QVec star(const QVec& lambda) const {
        if (!is_dominant(lambda)) throw DomainError("star expects a dominant weight");
        return dominantize(-lambda).first;
    }

    // The linear involution -w0 on the whole weight space (needed for
    // non-dominant weights, where it differs from dominantize(-x)).
    QVec star_linear(const QVec& x) const {
        check_dim(x);
        return -apply(longest_word_, x);
    }

    const WeylWord& longest_word() const { return longest_word_; }

    // Positive roots lying in the dominant chamber: per simple factor, the
    // highest root and (for two root lengths) the highest short root.
    std::vector<QVec> dominant_roots() const {
        if (ss_rank_ == 0) throw DomainError("dominant_roots: no semisimple factor");
        std::vector<QVec> out;
        for (const auto& a : positive_) {
            bool dom = true;
            for (std::size_t i = 0; i < ss_rank_; ++i)
                if (a.weight[i] < 0) dom = false;
            if (dom) out.push_back(a.weight);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Chamber halfspaces { lambda : lambda_i >= 0 }, as normal vectors.
    std::vector<QVec> chamber_normals() const {
        std::vector<QVec> out;
        for (std::size_t i = 0; i < ss_rank_; ++i) out.push_back(QVec::unit(dim_, i));
        return out;
    }

    // Coordinates of lambda - mu in the simple-root basis, or nullopt if the
    // difference has a central component.
    std::optional<QVec> simple_root_coords(const QVec& x) const {
        check_dim(x);
        for (std::size_t i = ss_rank_; i < dim_; ++i)
            if (x[i] != 0) return std::nullopt;
        QVec ss(ss_rank_);
        for (std::size_t i = 0; i < ss_rank_; ++i) ss[i] = x[i];
        // x = sum_i c_i alpha_i = C^T c
        return solve(cartan_.transpose(), ss);
    }

    bool same_as(const RootSystem& o) const { return spec_ == o.spec_; }

private:
    void check_dim(const QVec& v) const {
        if (v.size() != dim_)
            throw ShapeError("weight has " + std::to_string(v.size()) + " coordinates, expected " +
                             std::to_string(dim_));
    }

    void build_cartan() {
        // block-diagonal symmetric form on the simple roots
        QMat bform(ss_rank_, ss_rank_);
        len2_.assign(ss_rank_, Rational(0));
        std::size_t off = 0;
        int fi = 0;
        for (const auto& f : spec_.factors) {
            std::vector<Rational> l2;
            std::vector<std::pair<int, int>> edges;
            detail::dynkin_data(f, l2, edges);
            for (int i = 0; i < f.rank; ++i) {
                len2_[off + i] = l2[i];
                bform(off + i, off + i) = l2[i];
                factor_of_.push_back(fi);
            }
            for (auto [i, j] : edges) {
                Rational v = -std::max(l2[i], l2[j]) / 2;
                bform(off + i, off + j) = v;
                bform(off + j, off + i) = v;
            }
            off += f.rank;
            ++fi;
        }
        cartan_ = QMat(ss_rank_, ss_rank_);
        for (std::size_t i = 0; i < ss_rank_; ++i)
            for (std::size_t j = 0; j < ss_rank_; ++j) cartan_(i, j) = 2 * bform(i, j) / len2_[j];
        simple_roots_.clear();
        for (std::size_t i = 0; i < ss_rank_; ++i) {
            QVec a(dim_);
            for (std::size_t j = 0; j < ss_rank_; ++j) a[j] = cartan_(i, j);
            simple_roots_.push_back(std::move(a));
        }
        // C G = D/2  =>  G = C^{-1} D / 2
        gram_ = QMat(ss_rank_, ss_rank_);
        if (ss_rank_ > 0) {
            auto cinv = inverse(cartan_);
            if (!cinv) throw DomainError("singular Cartan matrix");
            for (std::size_t i = 0; i < ss_rank_; ++i)
                for (std::size_t j = 0; j < ss_rank_; ++j) gram_(i, j) = (*cinv)(i, j) * len2_[j] / 2;
        }
        bform_ = std::move(bform);
    }

    void build_positive_roots() {
        // Closure: start from the simple roots, reflect, keep the results with
        // nonnegative simple-root coordinates.
        std::map<std::vector<long>, PositiveRoot> found;
        std::vector<std::vector<long>> frontier;
        for (std::size_t i = 0; i < ss_rank_; ++i) {
            PositiveRoot r;
            r.simple_coeffs.assign(ss_rank_, 0);
            r.simple_coeffs[i] = 1;
            r.seed = static_cast<int>(i);
            r.factor = factor_of_[i];
            frontier.push_back(r.simple_coeffs);
            found.emplace(r.simple_coeffs, std::move(r));
        }
        while (!frontier.empty()) {
            std::vector<std::vector<long>> next;
            for (const auto& c : frontier) {
                const PositiveRoot& beta = found.at(c);
                for (std::size_t j = 0; j < ss_rank_; ++j) {
                    // (beta, check alpha_j) = sum_i c_i C[i][j]
                    Rational p = 0;
                    for (std::size_t i = 0; i < ss_rank_; ++i)
                        if (c[i] != 0) p += c[i] * cartan_(i, j);
                    if (p == 0) continue;
                    std::vector<long> nc = c;
                    nc[j] -= p.get_num().get_si();
                    if (nc[j] < 0) continue;
                    if (found.count(nc)) continue;
                    PositiveRoot r;
                    r.simple_coeffs = nc;
                    r.seed = beta.seed;
                    r.factor = beta.factor;
                    r.word = beta.word;
                    r.word.letters.push_back(static_cast<int>(j));
                    found.emplace(nc, std::move(r));
                    next.push_back(std::move(nc));
                }
            }
            frontier = std::move(next);
        }
        positive_.clear();
        for (auto& [c, r] : found) {
            r.weight = QVec(dim_);
            for (std::size_t i = 0; i < ss_rank_; ++i)
                if (c[i] != 0) r.weight += Rational(c[i]) * simple_roots_[i];
            Rational n2 = 0;
            for (std::size_t i = 0; i < ss_rank_; ++i)
                for (std::size_t j = 0; j < ss_rank_; ++j) n2 += c[i] * c[j] * bform_(i, j);
            r.norm2 = n2;
            r.coroot = QVec(dim_);
            for (std::size_t i = 0; i < ss_rank_; ++i) r.coroot[i] = c[i] * len2_[i] / n2;
            positive_.push_back(std::move(r));
        }
        std::sort(positive_.begin(), positive_.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
            if (a.height() != b.height()) return a.height() < b.height();
            return a.simple_coeffs > b.simple_coeffs;
        });
        longest_word_ = dominantize(-rho()).second;
    }

    GroupSpec spec_;
    std::size_t ss_rank_ = 0, dim_ = 0;
    QMat cartan_, gram_, bform_;
    std::vector<Rational> len2_;
    std::vector<int> factor_of_;
    std::vector<QVec> simple_roots_;
    std::vector<PositiveRoot> positive_;
    WeylWord longest_word_;
};

inline QVec reflect(const RootSystem& rs, std::size_t i, const QVec& lambda) { return rs.reflect(i, lambda); }
inline std::set<QVec> weyl_orbit(const RootSystem& rs, const QVec& lambda) { return rs.weyl_orbit(lambda); }
inline std::pair<QVec, WeylWord> dominantize(const RootSystem& rs, const QVec& lambda) {
    return rs.dominantize(lambda);
}
inline QVec star(const RootSystem& rs, const QVec& lambda) { return rs.star(lambda); }
inline std::vector<QVec> dominant_roots(const RootSystem& rs) { return rs.dominant_roots(); }

}  // namespace momentum
