#pragma once

// Exact phase-one simplex (Bland's rule) used as an independent membership
// oracle: x lies in hull(S) + cone(R) iff
//   sum_s a_s s + sum_r b_r r = x,  sum_s a_s = 1,  a, b >= 0
// is feasible.

#include "momentum/exactq.hpp"

#include <vector>

namespace oracle {

using momentum::QVec;
using momentum::Rational;

// Feasibility of { y >= 0 : A y = b }.
inline bool feasible(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    for (std::size_t i = 0; i < m; ++i)
        if (b[i] < 0) {
            for (auto& x : a[i]) x = -x;
            b[i] = -b[i];
        }
    // tableau with artificials n..n+m-1
    const std::size_t cols = n + m;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][cols] = b[i];
        basis[i] = n + i;
    }
    // objective: minimize sum of artificials; reduced costs
    std::vector<Rational> cost(cols + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= cols; ++j)
            if (j < n || j == cols) cost[j] -= t[i][j];
    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i)
            if (t[i][enter] > 0) {
                Rational r = t[i][cols] / t[i][enter];
                if (leave == m || r < best || (r == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = r;
                }
            }
        if (leave == m) break;  // unbounded cannot happen in phase one
        Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i)
            if (i != leave && t[i][enter] != 0) {
                Rational f = t[i][enter];
                for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
            }
        Rational f = cost[enter];
        for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t[leave][j];
        basis[leave] = enter;
    }
    return cost[cols] == 0;
}

inline bool in_hull(const std::vector<QVec>& points, const std::vector<QVec>& rays, const QVec& x) {
    const std::size_t d = x.size();
    const std::size_t n = points.size() + rays.size();
    std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(n));
    std::vector<Rational> b(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) a[i][j] = points[j][i];
        for (std::size_t j = 0; j < rays.size(); ++j) a[i][points.size() + j] = rays[j][i];
        b[i] = x[i];
    }
    for (std::size_t j = 0; j < points.size(); ++j) a[d][j] = 1;
    b[d] = 1;
    return feasible(a, b);
}

}  // namespace oracle
