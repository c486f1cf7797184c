#pragma once

// Weight systems of finite-dimensional representations.

#include "momentum/rootsys.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <vector>

namespace momentum {

inline void require_dominant_integral(const RootSystem& rs, const QVec& lambda) {
    if (lambda.size() != rs.dim()) throw ShapeError("highest weight has wrong number of coordinates");
    if (!rs.is_integral(lambda)) throw DomainError("highest weight must be integral");
    if (!rs.is_dominant(lambda)) throw DomainError("highest weight must be dominant");
}

// Multiplicities are stored on dominant representatives only; entries()
// expands them along Weyl orbits.
class WeightSystem {
public:
    explicit WeightSystem(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {}
    WeightSystem(std::shared_ptr<const RootSystem> rs, std::map<QVec, long> dominant, std::vector<QVec> hw)
        : rs_(std::move(rs)), dominant_(std::move(dominant)), hw_(std::move(hw)) {}

    const RootSystem& root_system() const { return *rs_; }
    const std::shared_ptr<const RootSystem>& root_system_ptr() const { return rs_; }
    const std::map<QVec, long>& dominant_multiplicities() const { return dominant_; }
    const std::vector<QVec>& hw_list() const { return hw_; }

    std::map<QVec, long> entries() const {
        std::map<QVec, long> out;
        for (const auto& [mu, m] : dominant_)
            for (const auto& nu : rs_->weyl_orbit(mu)) out[nu] += m;
        return out;
    }

    long multiplicity(const QVec& nu) const {
        auto it = dominant_.find(rs_->dominantize(nu).first);
        return it == dominant_.end() ? 0 : it->second;
    }

    long dim() const {
        long total = 0;
        for (const auto& [mu, m] : dominant_) total += m * static_cast<long>(rs_->weyl_orbit(mu).size());
        return total;
    }

private:
    std::shared_ptr<const RootSystem> rs_;
    std::map<QVec, long> dominant_;
    std::vector<QVec> hw_;
};

// Weyl dimension formula.
inline Integer weyl_dimension(const RootSystem& rs, const QVec& lambda) {
    require_dominant_integral(rs, lambda);
    QVec lr = lambda + rs.rho();
    Rational d = 1;
    for (const auto& a : rs.positive_roots()) d *= rs.pairing(lr, a) / rs.pairing(rs.rho(), a);
    if (d.get_den() != 1) throw DomainError("non-integral Weyl dimension");
    return d.get_num();
}

namespace detail {

// Dominant weights mu with lambda - mu a nonnegative combination of roots,
// together with the height of lambda - mu. Every such weight is reachable
// from lambda through a chain of dominant weights, each step subtracting a
// positive root.
inline std::map<QVec, long> dominant_weights_below(const RootSystem& rs, const QVec& lambda) {
    std::map<QVec, long> depth{{lambda, 0}};
    std::vector<QVec> frontier{lambda};
    while (!frontier.empty()) {
        std::vector<QVec> next;
        for (const auto& mu : frontier) {
            long h = depth.at(mu);
            for (const auto& a : rs.positive_roots()) {
                QVec nu = mu - a.weight;
                if (!rs.is_dominant(nu)) continue;
                if (depth.emplace(nu, h + a.height()).second) next.push_back(std::move(nu));
            }
        }
        frontier = std::move(next);
    }
    return depth;
}

}  // namespace detail

// Freudenthal's recursion over the dominant weights, in order of increasing
// depth below lambda.
inline WeightSystem irrep_weights(std::shared_ptr<const RootSystem> rsp, const QVec& lambda) {
    const RootSystem& rs = *rsp;
    require_dominant_integral(rs, lambda);
    auto depth = detail::dominant_weights_below(rs, lambda);
    std::vector<QVec> order;
    for (const auto& [mu, h] : depth) order.push_back(mu);
    std::stable_sort(order.begin(), order.end(),
                     [&](const QVec& a, const QVec& b) { return depth.at(a) < depth.at(b); });

    const QVec rho = rs.rho();
    const QVec lr = lambda + rho;
    const Rational top = rs.inner(lr, lr);
    std::map<QVec, long> mult;
    for (const auto& mu : order) {
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        Rational sum = 0;
        for (const auto& a : rs.positive_roots()) {
            for (long k = 1;; ++k) {
                QVec nu = mu + Rational(k) * a.weight;
                auto dom = rs.dominantize(nu).first;
                auto it = mult.find(dom);
                if (it == mult.end()) break;
                sum += it->second * rs.inner(nu, a.weight);
            }
        }
        QVec mr = mu + rho;
        Rational denom = top - rs.inner(mr, mr);
        Rational m = 2 * sum / denom;
        if (m.get_den() != 1 || m < 0) throw DomainError("Freudenthal recursion produced a non-integer multiplicity");
        if (m > 0) mult[mu] = m.get_num().get_si();
    }
    return WeightSystem(std::move(rsp), std::move(mult), {lambda});
}

inline WeightSystem irrep_weights(const RootSystem& rs, const QVec& lambda) {
    return irrep_weights(std::make_shared<const RootSystem>(rs), lambda);
}

inline Integer dim(const RootSystem& rs, const QVec& lambda) { return weyl_dimension(rs, lambda); }

// Weights of V(lambda) other than lambda - alpha for positive roots alpha
// with (lambda, check alpha) = 1.
inline std::set<QVec> pi_lambda(const RootSystem& rs, const QVec& lambda) {
    require_dominant_integral(rs, lambda);
    auto ws = irrep_weights(rs, lambda);
    std::set<QVec> out;
    for (const auto& [nu, m] : ws.entries()) out.insert(nu);
    for (const auto& a : rs.positive_roots())
        if (rs.pairing(lambda, a) == 1) out.erase(lambda - a.weight);
    return out;
}

inline WeightSystem union_weights(const std::vector<WeightSystem>& systems) {
    if (systems.empty()) return WeightSystem(nullptr);
    auto rs = systems.front().root_system_ptr();
    std::map<QVec, long> dom;
    std::vector<QVec> hw;
    for (const auto& s : systems) {
        if (!s.root_system_ptr() || !s.root_system().same_as(*rs))
            throw DomainError("union_weights: mismatched root systems");
        for (const auto& [mu, m] : s.dominant_multiplicities()) dom[mu] += m;
        hw.insert(hw.end(), s.hw_list().begin(), s.hw_list().end());
    }
    return WeightSystem(rs, std::move(dom), std::move(hw));
}

}  // namespace momentum
