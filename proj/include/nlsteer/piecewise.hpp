#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace nlsteer {

/// Dense polynomial, coefficients in ascending powers of the local variable.
struct Poly {
    std::vector<double> c;

    Poly() = default;
    explicit Poly(std::vector<double> coeffs) : c(std::move(coeffs)) {}
    static Poly constant(double v) { return Poly({v}); }
    static Poly linear(double a0, double a1) { return Poly({a0, a1}); }

    double eval(double x) const {
        double v = 0.0;
        for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }
    Poly deriv() const {
        if (c.size() <= 1) return Poly({0.0});
        Poly d;
        d.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) d.c[i - 1] = c[i] * static_cast<double>(i);
        return d;
    }
    Poly antideriv() const {
        Poly a;
        a.c.resize(c.size() + 1);
        a.c[0] = 0.0;
        for (size_t i = 0; i < c.size(); ++i) a.c[i + 1] = c[i] / static_cast<double>(i + 1);
        return a;
    }
    Poly operator*(const Poly& o) const {
        Poly p;
        p.c.assign(c.size() + o.c.size() - 1, 0.0);
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < o.c.size(); ++j) p.c[i + j] += c[i] * o.c[j];
        return p;
    }
    Poly operator+(const Poly& o) const {
        Poly p;
        p.c.assign(std::max(c.size(), o.c.size()), 0.0);
        for (size_t i = 0; i < c.size(); ++i) p.c[i] += c[i];
        for (size_t i = 0; i < o.c.size(); ++i) p.c[i] += o.c[i];
        return p;
    }
    Poly scaled(double k) const {
        Poly p = *this;
        for (double& v : p.c) v *= k;
        return p;
    }
};

/// Piecewise polynomial on [brk.front(), brk.back()]; piece i uses the local
/// variable (t - brk[i]). Evaluation clamps to the domain.
class PiecewisePoly {
  public:
    PiecewisePoly() = default;
    PiecewisePoly(std::vector<double> breakpoints, std::vector<Poly> pieces)
        : brk_(std::move(breakpoints)), pieces_(std::move(pieces)) {
        if (brk_.size() != pieces_.size() + 1)
            throw std::invalid_argument("PiecewisePoly: breakpoints/pieces mismatch");
    }
    static PiecewisePoly constant(double t0, double t1, double v) {
        return PiecewisePoly({t0, t1}, {Poly::constant(v)});
    }

    double t_begin() const { return brk_.front(); }
    double t_end() const { return brk_.back(); }
    const std::vector<double>& breakpoints() const { return brk_; }

    size_t piece_index(double t) const {
        if (t <= brk_.front()) return 0;
        if (t >= brk_.back()) return pieces_.size() - 1;
        size_t i = static_cast<size_t>(std::upper_bound(brk_.begin(), brk_.end(), t) -
                                       brk_.begin());
        return std::min(i - 1, pieces_.size() - 1);
    }
    double eval(double t) const {
        size_t i = piece_index(t);
        return pieces_[i].eval(t - brk_[i]);
    }
    double eval_deriv(double t) const {
        size_t i = piece_index(t);
        return pieces_[i].deriv().eval(t - brk_[i]);
    }

    /// Cumulative integral from t_begin; continuous by construction.
    PiecewisePoly antideriv() const {
        std::vector<Poly> out;
        out.reserve(pieces_.size());
        double acc = 0.0;
        for (size_t i = 0; i < pieces_.size(); ++i) {
            Poly a = pieces_[i].antideriv();
            a.c[0] = acc;
            acc = a.eval(brk_[i + 1] - brk_[i]);
            out.push_back(std::move(a));
        }
        return PiecewisePoly(brk_, std::move(out));
    }

    double integral(double a, double b) const {
        PiecewisePoly A = antideriv();
        return A.eval(b) - A.eval(a);
    }

    /// Integral of |f|; sign changes located by sampling + bisection.
    double abs_integral(double a, double b, int samples_per_piece = 256) const {
        double total = 0.0;
        for (size_t i = 0; i < pieces_.size(); ++i) {
            double lo = std::max(a, brk_[i]), hi = std::min(b, brk_[i + 1]);
            if (lo >= hi) continue;
            Poly anti = pieces_[i].antideriv();
            std::vector<double> cuts{lo};
            double prev_t = lo, prev_v = pieces_[i].eval(lo - brk_[i]);
            for (int s = 1; s <= samples_per_piece; ++s) {
                double t = lo + (hi - lo) * s / samples_per_piece;
                double v = pieces_[i].eval(t - brk_[i]);
                if ((prev_v < 0) != (v < 0) && prev_v != 0.0) {
                    double x0 = prev_t, x1 = t;
                    for (int it = 0; it < 60; ++it) {
                        double xm = 0.5 * (x0 + x1);
                        double vm = pieces_[i].eval(xm - brk_[i]);
                        if ((vm < 0) == (prev_v < 0)) x0 = xm; else x1 = xm;
                    }
                    cuts.push_back(0.5 * (x0 + x1));
                }
                prev_t = t;
                prev_v = v;
            }
            cuts.push_back(hi);
            for (size_t j = 0; j + 1 < cuts.size(); ++j) {
                double seg = anti.eval(cuts[j + 1] - brk_[i]) - anti.eval(cuts[j] - brk_[i]);
                total += std::abs(seg);
            }
        }
        return total;
    }

    /// Concatenation of this and `next`; domains must abut.
    PiecewisePoly then(const PiecewisePoly& next) const {
        if (std::abs(next.t_begin() - t_end()) > 1e-12)
            throw std::invalid_argument("PiecewisePoly::then: domains must abut");
        std::vector<double> b = brk_;
        b.insert(b.end(), next.brk_.begin() + 1, next.brk_.end());
        std::vector<Poly> p = pieces_;
        p.insert(p.end(), next.pieces_.begin(), next.pieces_.end());
        return PiecewisePoly(std::move(b), std::move(p));
    }

    PiecewisePoly operator+(const PiecewisePoly& o) const;
    PiecewisePoly scaled(double k) const {
        PiecewisePoly p = *this;
        for (Poly& q : p.pieces_) q = q.scaled(k);
        return p;
    }

    double max_abs(int samples_per_piece = 128) const {
        double m = 0.0;
        for (size_t i = 0; i < pieces_.size(); ++i)
            for (int s = 0; s <= samples_per_piece; ++s) {
                double t = brk_[i] + (brk_[i + 1] - brk_[i]) * s / samples_per_piece;
                m = std::max(m, std::abs(pieces_[i].eval(t - brk_[i])));
            }
        return m;
    }

  private:
    std::vector<double> brk_;
    std::vector<Poly> pieces_;
};

/// Piecewise-linear interpolant through (t_i, v_i).
PiecewisePoly piecewise_linear(const std::vector<double>& t, const std::vector<double>& v);

/// Merge-refine sum of two piecewise polynomials on the same domain.
inline PiecewisePoly PiecewisePoly::operator+(const PiecewisePoly& o) const {
    std::vector<double> b;
    std::merge(brk_.begin(), brk_.end(), o.brk_.begin(), o.brk_.end(), std::back_inserter(b));
    b.erase(std::unique(b.begin(), b.end(),
                        [](double x, double y) { return std::abs(x - y) < 1e-14; }),
            b.end());
    std::vector<Poly> p;
    for (size_t i = 0; i + 1 < b.size(); ++i) {
        double t0 = b[i];
        size_t ia = piece_index(0.5 * (b[i] + b[i + 1]));
        size_t ib = o.piece_index(0.5 * (b[i] + b[i + 1]));
        // re-center both pieces at t0
        auto recenter = [](const Poly& q, double shift) {
            // q(x + shift) expanded in x
            Poly out({0.0});
            Poly xpow({1.0});
            Poly base({shift, 1.0});
            out = Poly::constant(0.0);
            for (size_t k = 0; k < q.c.size(); ++k) {
                out = out + xpow.scaled(q.c[k]);
                xpow = xpow * base;
            }
            return out;
        };
        Poly qa = recenter(pieces_[ia], t0 - brk_[ia]);
        Poly qb = recenter(o.pieces_[ib], t0 - o.brk_[ib]);
        p.push_back(qa + qb);
    }
    return PiecewisePoly(std::move(b), std::move(p));
}

inline PiecewisePoly piecewise_linear(const std::vector<double>& t, const std::vector<double>& v) {
    if (t.size() < 2 || t.size() != v.size())
        throw std::invalid_argument("piecewise_linear: need matching arrays, size >= 2");
    std::vector<Poly> pieces;
    pieces.reserve(t.size() - 1);
    for (size_t i = 0; i + 1 < t.size(); ++i) {
        double dt = t[i + 1] - t[i];
        if (dt <= 0) throw std::invalid_argument("piecewise_linear: t must increase");
        pieces.push_back(Poly::linear(v[i], (v[i + 1] - v[i]) / dt));
    }
    return PiecewisePoly(t, std::move(pieces));
}

}  // namespace nlsteer
