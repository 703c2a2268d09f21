#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "nlsteer/lattice.hpp"

namespace nlsteer {

using cplx = std::complex<double>;

/// Truncated Fourier representation of u in H^s(T^d): coefficients over the
/// centered box |k|_inf <= cutoff, row-major, plus the model time the state
/// belongs to. Free propagator convention: mode k evolves by e^{+i|k|^2 t},
/// so f_k = e^{i(k.x + |k|^2 t)} are exact free solutions.
struct SpectralState {
    int dim = 2;
    int cutoff = 8;          // M; (2M+1)^d modes retained
    double sobolev_s = 1.1;  // declared regularity index (s > d/2)
    double time = 0.0;
    std::vector<cplx> coeffs;

    SpectralState() = default;
    SpectralState(int d, int M, double s, double t = 0.0);

    int n() const { return 2 * cutoff + 1; }
    size_t mode_count() const { return coeffs.size(); }

    size_t index_of(const ModeIndex& k) const;
    bool in_box(const ModeIndex& k) const { return k.dim() == dim && k.norm_inf() <= cutoff; }
    cplx& at(const ModeIndex& k) { return coeffs[index_of(k)]; }
    const cplx& at(const ModeIndex& k) const { return coeffs[index_of(k)]; }

    /// Mode of flat index i.
    ModeIndex mode_at(size_t i) const;
    /// |k|^2 of flat index i.
    double k2_at(size_t i) const;
};

enum class BasisDirection { to_fk, from_fk };

enum class InnerProduct { l2, hs };

/// Coordinate-subspace projection (zero everything off `modes`) or general
/// finite-dimensional projection given by a frame of states.
struct Projection {
    std::optional<ModeSet> modes;
    std::vector<SpectralState> frame;  // used when modes is empty
    InnerProduct ip = InnerProduct::l2;
};

double hs_norm(const SpectralState& state, double s);
double hs_norm(const SpectralState& state);  // uses state.sobolev_s
double l2_norm(const SpectralState& state);

cplx inner(const SpectralState& a, const SpectralState& b, InnerProduct ip, double s);

/// Multiplies coefficients by e^{-i|k|^2 t} (to_fk) or e^{+i|k|^2 t} (from_fk),
/// t taken from the state. Round trip is the identity.
SpectralState rotate_basis(const SpectralState& state, BasisDirection dir);

SpectralState project(const SpectralState& state, const Projection& proj);

/// Complement: state - project(state, proj).
SpectralState project_complement(const SpectralState& state, const Projection& proj);

/// Spectral coefficients of |u|^2 u, computed alias-free: synthesis on a grid
/// zero-padded to 2(2M+1) per dimension, pointwise cube, analysis, truncation.
SpectralState cubic_product(const SpectralState& state);

/// Energy functional per unit volume: 1/2 sum |k|^2 |c_k|^2 + 1/4 mean(|u|^4),
/// the quartic mean evaluated alias-free on the padded grid.
double energy(const SpectralState& state);

SpectralState operator+(const SpectralState& a, const SpectralState& b);
SpectralState operator-(const SpectralState& a, const SpectralState& b);
SpectralState scaled(const SpectralState& a, cplx factor);

}  // namespace nlsteer
