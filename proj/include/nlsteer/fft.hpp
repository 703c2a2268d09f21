#pragma once

#include <complex>
#include <vector>

namespace nlsteer {

/// d-dimensional complex DFT pair on an n^d grid (FFTW-backed, plans cached per thread).
/// Conventions: synthesis maps Fourier coefficients c_k of u(x) = sum c_k e^{ik.x}
/// (k in the centered box) to grid samples on the uniform torus grid; analysis is its
/// inverse (forward DFT scaled by n^-d). Coefficient layout is row-major over
/// k in [-m, m]^d where n = 2m+1 for the state grid, or any n with centered modes.
class GridTransform {
  public:
    GridTransform(int dim, int n);

    int dim() const { return dim_; }
    int n() const { return n_; }
    size_t points() const { return points_; }

    /// coeffs (centered box, row-major, size n^d) -> grid values (row-major, size n^d)
    void synthesis(const std::vector<std::complex<double>>& coeffs,
                   std::vector<std::complex<double>>& grid) const;
    /// grid values -> coefficients (exact inverse of synthesis)
    void analysis(const std::vector<std::complex<double>>& grid,
                  std::vector<std::complex<double>>& coeffs) const;

  private:
    int dim_, n_;
    size_t points_;
};

}  // namespace nlsteer
