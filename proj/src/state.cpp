#include "nlsteer/state.hpp"

#include <cmath>
#include <stdexcept>

#include "nlsteer/fft.hpp"

namespace nlsteer {

SpectralState::SpectralState(int d, int M, double s, double t)
    : dim(d), cutoff(M), sobolev_s(s), time(t) {
    if (d < 1 || M < 0) throw std::invalid_argument("SpectralState: bad shape");
    size_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<size_t>(2 * M + 1);
    coeffs.assign(count, cplx(0.0, 0.0));
}

size_t SpectralState::index_of(const ModeIndex& k) const {
    if (!in_box(k)) throw std::out_of_range("SpectralState: mode outside cutoff box");
    size_t idx = 0;
    for (int a = 0; a < dim; ++a) idx = idx * static_cast<size_t>(n()) + static_cast<size_t>(k[a] + cutoff);
    return idx;
}

ModeIndex SpectralState::mode_at(size_t i) const {
    std::vector<int> c(static_cast<size_t>(dim));
    for (int a = dim - 1; a >= 0; --a) {
        c[static_cast<size_t>(a)] = static_cast<int>(i % static_cast<size_t>(n())) - cutoff;
        i /= static_cast<size_t>(n());
    }
    return ModeIndex(std::move(c));
}

double SpectralState::k2_at(size_t i) const {
    double k2 = 0.0;
    for (int a = dim - 1; a >= 0; --a) {
        int k = static_cast<int>(i % static_cast<size_t>(n())) - cutoff;
        i /= static_cast<size_t>(n());
        k2 += static_cast<double>(k) * k;
    }
    return k2;
}

double hs_norm(const SpectralState& state, double s) {
    double acc = 0.0;
    for (size_t i = 0; i < state.coeffs.size(); ++i) {
        double w = std::pow(1.0 + state.k2_at(i), s);
        acc += w * std::norm(state.coeffs[i]);
    }
    return std::sqrt(acc);
}

double hs_norm(const SpectralState& state) { return hs_norm(state, state.sobolev_s); }
double l2_norm(const SpectralState& state) { return hs_norm(state, 0.0); }

cplx inner(const SpectralState& a, const SpectralState& b, InnerProduct ip, double s) {
    if (a.coeffs.size() != b.coeffs.size())
        throw std::invalid_argument("inner: shape mismatch");
    cplx acc(0.0, 0.0);
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        double w = (ip == InnerProduct::l2) ? 1.0 : std::pow(1.0 + a.k2_at(i), s);
        acc += w * a.coeffs[i] * std::conj(b.coeffs[i]);
    }
    return acc;
}

SpectralState rotate_basis(const SpectralState& state, BasisDirection dir) {
    SpectralState out = state;
    const double sign = (dir == BasisDirection::to_fk) ? -1.0 : 1.0;
    for (size_t i = 0; i < out.coeffs.size(); ++i) {
        double ph = sign * out.k2_at(i) * out.time;
        out.coeffs[i] *= cplx(std::cos(ph), std::sin(ph));
    }
    return out;
}

namespace {

SpectralState project_frame(const SpectralState& state, const Projection& proj) {
    // Orthogonal projection onto span(frame) under the declared inner product:
    // solve G a = rhs with G_ij = <f_j, f_i>, rhs_i = <u, f_i>.
    const auto& fr = proj.frame;
    const size_t m = fr.size();
    const double s = state.sobolev_s;
    std::vector<std::vector<cplx>> g(m, std::vector<cplx>(m));
    std::vector<cplx> rhs(m);
    for (size_t i = 0; i < m; ++i) {
        rhs[i] = inner(state, fr[i], proj.ip, s);
        for (size_t j = 0; j < m; ++j) g[i][j] = inner(fr[j], fr[i], proj.ip, s);
    }
    // Gaussian elimination with partial pivoting
    std::vector<cplx> a = rhs;
    for (size_t col = 0; col < m; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < m; ++r)
            if (std::abs(g[r][col]) > std::abs(g[piv][col])) piv = r;
        if (std::abs(g[piv][col]) < 1e-12)
            throw std::invalid_argument("project: frame not linearly independent");
        std::swap(g[col], g[piv]);
        std::swap(a[col], a[piv]);
        for (size_t r = 0; r < m; ++r) {
            if (r == col) continue;
            cplx f = g[r][col] / g[col][col];
            for (size_t cc = col; cc < m; ++cc) g[r][cc] -= f * g[col][cc];
            a[r] -= f * a[col];
        }
    }
    for (size_t i = 0; i < m; ++i) a[i] /= g[i][i];
    SpectralState out(state.dim, state.cutoff, state.sobolev_s, state.time);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] += a[i] * fr[i].coeffs[j];
    return out;
}

}  // namespace

SpectralState project(const SpectralState& state, const Projection& proj) {
    if (proj.modes) {
        SpectralState out(state.dim, state.cutoff, state.sobolev_s, state.time);
        for (const auto& k : proj.modes->members) {
            if (!state.in_box(k))
                throw std::invalid_argument("project: mode outside cutoff box");
            out.at(k) = state.at(k);
        }
        return out;
    }
    return project_frame(state, proj);
}

SpectralState project_complement(const SpectralState& state, const Projection& proj) {
    return state - project(state, proj);
}

SpectralState cubic_product(const SpectralState& state) {
    const int pad_n = 2 * state.n();  // >= 4M+2 removes all cubic aliasing to the box
    GridTransform big(state.dim, pad_n);
    size_t big_points = big.points();
    std::vector<cplx> padded(big_points, cplx(0.0, 0.0));
    // embed coefficients into the padded centered box
    const int ph = (pad_n - 1) / 2;
    std::vector<size_t> stride_small(static_cast<size_t>(state.dim)),
        stride_big(static_cast<size_t>(state.dim));
    size_t ss = 1, sb = 1;
    for (int a = state.dim - 1; a >= 0; --a) {
        stride_small[static_cast<size_t>(a)] = ss;
        stride_big[static_cast<size_t>(a)] = sb;
        ss *= static_cast<size_t>(state.n());
        sb *= static_cast<size_t>(pad_n);
    }
    for (size_t i = 0; i < state.coeffs.size(); ++i) {
        size_t rem = i, j = 0;
        for (int a = 0; a < state.dim; ++a) {
            int idx = static_cast<int>(rem / stride_small[static_cast<size_t>(a)]);
            rem %= stride_small[static_cast<size_t>(a)];
            int k = idx - state.cutoff;
            j += static_cast<size_t>(k + ph) * stride_big[static_cast<size_t>(a)];
        }
        padded[j] = state.coeffs[i];
    }
    std::vector<cplx> grid;
    big.synthesis(padded, grid);
    for (auto& u : grid) u = std::norm(u) * u;
    std::vector<cplx> out_big;
    big.analysis(grid, out_big);
    SpectralState out(state.dim, state.cutoff, state.sobolev_s, state.time);
    for (size_t i = 0; i < out.coeffs.size(); ++i) {
        size_t rem = i, j = 0;
        for (int a = 0; a < state.dim; ++a) {
            int idx = static_cast<int>(rem / stride_small[static_cast<size_t>(a)]);
            rem %= stride_small[static_cast<size_t>(a)];
            int k = idx - state.cutoff;
            j += static_cast<size_t>(k + ph) * stride_big[static_cast<size_t>(a)];
        }
        out.coeffs[i] = out_big[j];
    }
    return out;
}

double energy(const SpectralState& state) {
    double kin = 0.0;
    for (size_t i = 0; i < state.coeffs.size(); ++i)
        kin += 0.5 * state.k2_at(i) * std::norm(state.coeffs[i]);
    const int pad_n = 2 * state.n();
    GridTransform big(state.dim, pad_n);
    std::vector<cplx> padded(big.points(), cplx(0.0, 0.0));
    const int ph = (pad_n - 1) / 2;
    for (size_t i = 0; i < state.coeffs.size(); ++i) {
        ModeIndex k = state.mode_at(i);
        size_t j = 0;
        for (int a = 0; a < state.dim; ++a) j = j * static_cast<size_t>(pad_n) + static_cast<size_t>(k[a] + ph);
        padded[j] = state.coeffs[i];
    }
    std::vector<cplx> grid;
    big.synthesis(padded, grid);
    double quart = 0.0;
    for (const auto& u : grid) quart += std::norm(u) * std::norm(u);
    quart /= static_cast<double>(grid.size());
    return kin + 0.25 * quart;
}

SpectralState operator+(const SpectralState& a, const SpectralState& b) {
    SpectralState out = a;
    for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

SpectralState operator-(const SpectralState& a, const SpectralState& b) {
    SpectralState out = a;
    for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
    return out;
}

SpectralState scaled(const SpectralState& a, cplx factor) {
    SpectralState out = a;
    for (auto& c : out.coeffs) c *= factor;
    return out;
}

}  // namespace nlsteer
