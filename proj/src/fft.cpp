#include "nlsteer/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace nlsteer {

namespace {

// FFTW planner is not thread-safe; executing a plan on its own buffers is.
std::mutex planner_mutex;

struct PlanPair {
    fftw_plan backward = nullptr;  // synthesis direction (e^{+ikx})
    fftw_plan forward = nullptr;   // analysis direction
    fftw_complex* buf = nullptr;
    size_t points = 0;

    PlanPair(int dim, int n) {
        points = 1;
        for (int i = 0; i < dim; ++i) points *= static_cast<size_t>(n);
        buf = fftw_alloc_complex(points);
        std::vector<int> shape(static_cast<size_t>(dim), n);
        std::lock_guard<std::mutex> lk(planner_mutex);
        backward = fftw_plan_dft(dim, shape.data(), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
        forward = fftw_plan_dft(dim, shape.data(), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    }
    ~PlanPair() {
        std::lock_guard<std::mutex> lk(planner_mutex);
        fftw_destroy_plan(backward);
        fftw_destroy_plan(forward);
        fftw_free(buf);
    }
};

PlanPair& cached_plan(int dim, int n) {
    thread_local std::map<std::pair<int, int>, std::unique_ptr<PlanPair>> cache;
    auto key = std::make_pair(dim, n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<PlanPair>(dim, n)).first;
    return *it->second;
}

}  // namespace

GridTransform::GridTransform(int dim, int n) : dim_(dim), n_(n) {
    if (dim < 1 || n < 1) throw std::invalid_argument("GridTransform: bad shape");
    points_ = 1;
    for (int i = 0; i < dim; ++i) points_ *= static_cast<size_t>(n);
}

// The centered index k in [-h, n-1-h] (h = n/2 for even n, (n-1)/2 odd) maps to the DFT
// bin (k mod n). With the state layout k in [-m, m], n = 2m+1, h = m.
namespace {
inline size_t wrap_index(int dim, int n, size_t centered, const size_t* strides_in,
                         const size_t* strides_out, int half) {
    size_t out = 0;
    for (int a = 0; a < dim; ++a) {
        int idx = static_cast<int>(centered / strides_in[a]);
        centered %= strides_in[a];
        int k = idx - half;
        int bin = k >= 0 ? k : k + n;
        out += static_cast<size_t>(bin) * strides_out[a];
    }
    return out;
}
}  // namespace

void GridTransform::synthesis(const std::vector<std::complex<double>>& coeffs,
                              std::vector<std::complex<double>>& grid) const {
    if (coeffs.size() != points_) throw std::invalid_argument("synthesis: size mismatch");
    PlanPair& p = cached_plan(dim_, n_);
    const int half = (n_ - 1) / 2;
    std::vector<size_t> strides(static_cast<size_t>(dim_));
    size_t s = 1;
    for (int a = dim_ - 1; a >= 0; --a) {
        strides[static_cast<size_t>(a)] = s;
        s *= static_cast<size_t>(n_);
    }
    for (size_t i = 0; i < points_; ++i) {
        p.buf[i][0] = 0.0;
        p.buf[i][1] = 0.0;
    }
    for (size_t i = 0; i < points_; ++i) {
        size_t j = wrap_index(dim_, n_, i, strides.data(), strides.data(), half);
        p.buf[j][0] = coeffs[i].real();
        p.buf[j][1] = coeffs[i].imag();
    }
    fftw_execute(p.backward);
    grid.resize(points_);
    for (size_t i = 0; i < points_; ++i) grid[i] = {p.buf[i][0], p.buf[i][1]};
}

void GridTransform::analysis(const std::vector<std::complex<double>>& grid,
                             std::vector<std::complex<double>>& coeffs) const {
    if (grid.size() != points_) throw std::invalid_argument("analysis: size mismatch");
    PlanPair& p = cached_plan(dim_, n_);
    for (size_t i = 0; i < points_; ++i) {
        p.buf[i][0] = grid[i].real();
        p.buf[i][1] = grid[i].imag();
    }
    fftw_execute(p.forward);
    const double scale = 1.0 / static_cast<double>(points_);
    const int half = (n_ - 1) / 2;
    std::vector<size_t> strides(static_cast<size_t>(dim_));
    size_t s = 1;
    for (int a = dim_ - 1; a >= 0; --a) {
        strides[static_cast<size_t>(a)] = s;
        s *= static_cast<size_t>(n_);
    }
    coeffs.resize(points_);
    for (size_t i = 0; i < points_; ++i) {
        size_t j = wrap_index(dim_, n_, i, strides.data(), strides.data(), half);
        coeffs[i] = std::complex<double>(p.buf[j][0], p.buf[j][1]) * scale;
    }
}

}  // namespace nlsteer
