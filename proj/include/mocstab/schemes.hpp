#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mocstab/models.hpp"

namespace mocstab {

/// Uniform periodic grid with node_count = M+1 nodes at x_m = m h, h = L/(M+1);
/// node M+1 identifies with node 0.
struct PeriodicGrid {
    int node_count;
    double length;

    PeriodicGrid(int node_count_, double length_)
        : node_count(node_count_), length(length_) {
        if (node_count < 3 || length <= 0.0)
            throw std::invalid_argument("PeriodicGrid: need >= 3 nodes and positive length");
    }

    double h() const { return length / node_count; }
    double x(int m) const { return m * h(); }
    int wrap(int m) const {
        m %= node_count;
        return m < 0 ? m + node_count : m;
    }
};

namespace node_ops {

inline Vec3 add(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 scaled(double c, const Vec3& a) { return {c * a[0], c * a[1], c * a[2]}; }
inline double max_abs(const Vec3& a) {
    return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
}

inline Complex add(const Complex& a, const Complex& b) { return a + b; }
inline Complex scaled(double c, const Complex& a) { return c * a; }
inline double max_abs(const Complex& a) {
    return std::max(std::abs(a.real()), std::abs(a.imag()));
}

}  // namespace node_ops

/// Per-node state of the + and - characteristic families at one time level.
template <class Node>
struct TwoFamilyState {
    PeriodicGrid grid;
    std::vector<Node> plus, minus;
    double time = 0.0;

    explicit TwoFamilyState(PeriodicGrid g)
        : grid(g), plus(g.node_count), minus(g.node_count) {}

    bool is_finite(double threshold = 1e6) const {
        for (int m = 0; m < grid.node_count; ++m) {
            const double a = node_ops::max_abs(plus[m]);
            const double b = node_ops::max_abs(minus[m]);
            if (!std::isfinite(a) || !std::isfinite(b) || a > threshold || b > threshold)
                return false;
        }
        return true;
    }
};

using StokesState = TwoFamilyState<Vec3>;
using GNState = TwoFamilyState<Complex>;

/// Two consecutive leap-frog levels; times differ by exactly h.
template <class Node>
struct LFStatePair {
    TwoFamilyState<Node> previous;  // level n-1
    TwoFamilyState<Node> current;   // level n
};

// Rhs is callable as rhs(plus_node, minus_node) -> std::pair<Node, Node>.

namespace detail {

template <class Node, class Rhs>
std::vector<std::pair<Node, Node>> rhs_table(const TwoFamilyState<Node>& s,
                                             const Rhs& rhs) {
    std::vector<std::pair<Node, Node>> f(s.grid.node_count);
    for (int m = 0; m < s.grid.node_count; ++m) f[m] = rhs(s.plus[m], s.minus[m]);
    return f;
}

}  // namespace detail

template <class Node, class Rhs>
TwoFamilyState<Node> step_se(const TwoFamilyState<Node>& s, const Rhs& rhs) {
    using namespace node_ops;
    const int n = s.grid.node_count;
    const double h = s.grid.h();
    const auto f = detail::rhs_table(s, rhs);
    TwoFamilyState<Node> out(s.grid);
    out.time = s.time + h;
    for (int m = 0; m < n; ++m) {
        const int mp = s.grid.wrap(m - 1);  // base node for the + family
        const int mm = s.grid.wrap(m + 1);
        out.plus[m] = add(s.plus[mp], scaled(h, f[mp].first));
        out.minus[m] = add(s.minus[mm], scaled(h, f[mm].second));
    }
    return out;
}

template <class Node, class Rhs>
TwoFamilyState<Node> step_me(const TwoFamilyState<Node>& s, const Rhs& rhs) {
    using namespace node_ops;
    const int n = s.grid.node_count;
    const double h = s.grid.h();
    const TwoFamilyState<Node> pred = step_se(s, rhs);
    TwoFamilyState<Node> out(s.grid);
    out.time = s.time + h;
    for (int m = 0; m < n; ++m) {
        const int mp = s.grid.wrap(m - 1);
        const int mm = s.grid.wrap(m + 1);
        const auto [fp, fm] = rhs(pred.plus[m], pred.minus[m]);
        out.plus[m] = scaled(0.5, add(add(s.plus[mp], pred.plus[m]), scaled(h, fp)));
        out.minus[m] = scaled(0.5, add(add(s.minus[mm], pred.minus[m]), scaled(h, fm)));
    }
    return out;
}

template <class Node, class Rhs>
LFStatePair<Node> step_lf(const LFStatePair<Node>& pair, const Rhs& rhs) {
    using namespace node_ops;
    const auto& prev = pair.previous;
    const auto& cur = pair.current;
    const int n = cur.grid.node_count;
    const double h = cur.grid.h();
    const auto f = detail::rhs_table(cur, rhs);
    TwoFamilyState<Node> out(cur.grid);
    out.time = cur.time + h;
    for (int m = 0; m < n; ++m) {
        const int mp1 = cur.grid.wrap(m - 1);
        const int mm1 = cur.grid.wrap(m + 1);
        const int mp2 = cur.grid.wrap(m - 2);
        const int mm2 = cur.grid.wrap(m + 2);
        out.plus[m] = add(prev.plus[mp2], scaled(2.0 * h, f[mp1].first));
        out.minus[m] = add(prev.minus[mm2], scaled(2.0 * h, f[mm1].second));
    }
    return {cur, std::move(out)};
}

template <class Node, class Rhs>
TwoFamilyState<Node> step_crk(const TwoFamilyState<Node>& s, const Rhs& rhs) {
    using namespace node_ops;
    const int n = s.grid.node_count;
    const double h = s.grid.h();

    std::vector<Node> kp1(n), km1(n), kp2(n), km2(n), kp3(n), km3(n), kp4(n), km4(n);

    // Stage bases sit at the shifted nodes m -+ 1; stage increments are unshifted.
    const auto f1 = detail::rhs_table(s, rhs);
    for (int m = 0; m < n; ++m) {
        const int mp = s.grid.wrap(m - 1);
        const int mm = s.grid.wrap(m + 1);
        kp1[m] = scaled(h, f1[mp].first);
        km1[m] = scaled(h, f1[mm].second);
    }
    const auto mid_stage = [&](const std::vector<Node>& kp_prev,
                               const std::vector<Node>& km_prev,
                               std::vector<Node>& kp, std::vector<Node>& km,
                               double frac) {
        for (int m = 0; m < n; ++m) {
            const int mp = s.grid.wrap(m - 1);
            const int mm = s.grid.wrap(m + 1);
            const auto [fp, fp_other] = rhs(add(s.plus[mp], scaled(frac, kp_prev[m])),
                                            add(s.minus[mp], scaled(frac, km_prev[m])));
            const auto [fm_other, fm] = rhs(add(s.plus[mm], scaled(frac, kp_prev[m])),
                                            add(s.minus[mm], scaled(frac, km_prev[m])));
            kp[m] = scaled(h, fp);
            km[m] = scaled(h, fm);
        }
    };
    mid_stage(kp1, km1, kp2, km2, 0.5);
    mid_stage(kp2, km2, kp3, km3, 0.5);
    mid_stage(kp3, km3, kp4, km4, 1.0);

    TwoFamilyState<Node> out(s.grid);
    out.time = s.time + h;
    for (int m = 0; m < n; ++m) {
        const int mp = s.grid.wrap(m - 1);
        const int mm = s.grid.wrap(m + 1);
        const Node incp = scaled(1.0 / 6.0,
                                 add(add(kp1[m], scaled(2.0, kp2[m])),
                                     add(scaled(2.0, kp3[m]), kp4[m])));
        const Node incm = scaled(1.0 / 6.0,
                                 add(add(km1[m], scaled(2.0, km2[m])),
                                     add(scaled(2.0, km3[m]), km4[m])));
        out.plus[m] = add(s.plus[mp], incp);
        out.minus[m] = add(s.minus[mm], incm);
    }
    return out;
}

/// Right-hand-side functors for the two model families.
struct StokesRhs {
    CouplingModel model;
    std::pair<Vec3, Vec3> operator()(const Vec3& p, const Vec3& m) const {
        return stokes_rhs(p, m, model);
    }
};

struct GNRhs {
    std::pair<Complex, Complex> operator()(const Complex& u, const Complex& v) const {
        return gn_rhs(u, v);
    }
};

}  // namespace mocstab
