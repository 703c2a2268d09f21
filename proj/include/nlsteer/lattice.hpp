#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlsteer {

/// Lattice wavevector k in Z^d.
struct ModeIndex {
    std::vector<int> c;

    ModeIndex() = default;
    explicit ModeIndex(std::vector<int> coords) : c(std::move(coords)) {}
    ModeIndex(std::initializer_list<int> coords) : c(coords) {}

    int dim() const { return static_cast<int>(c.size()); }
    int operator[](int i) const { return c[static_cast<size_t>(i)]; }

    long long norm2() const {
        long long s = 0;
        for (int x : c) s += static_cast<long long>(x) * x;
        return s;
    }
    long long norm1() const {
        long long s = 0;
        for (int x : c) s += std::abs(static_cast<long long>(x));
        return s;
    }
    int norm_inf() const {
        int m = 0;
        for (int x : c) m = std::max(m, std::abs(x));
        return m;
    }

    friend bool operator==(const ModeIndex& a, const ModeIndex& b) { return a.c == b.c; }
    friend bool operator!=(const ModeIndex& a, const ModeIndex& b) { return a.c != b.c; }
    friend bool operator<(const ModeIndex& a, const ModeIndex& b) { return a.c < b.c; }

    friend ModeIndex operator+(const ModeIndex& a, const ModeIndex& b);
    friend ModeIndex operator-(const ModeIndex& a, const ModeIndex& b);
    std::string str() const;
};

ModeIndex zero_mode(int dim);

/// 2r - s, the elementary-extension image of the ordered pair (r, s).
ModeIndex extension_image(const ModeIndex& r, const ModeIndex& s);

/// Finite subset of Z^d.
struct ModeSet {
    int dim = 0;
    std::set<ModeIndex> members;

    ModeSet() = default;
    explicit ModeSet(int d) : dim(d) {}
    ModeSet(int d, std::initializer_list<ModeIndex> ms) : dim(d) {
        for (const auto& m : ms) insert(m);
    }

    size_t size() const { return members.size(); }
    bool contains(const ModeIndex& m) const { return members.count(m) > 0; }
    void insert(const ModeIndex& m) {
        if (m.dim() != dim) throw std::invalid_argument("ModeSet: dimension mismatch");
        members.insert(m);
    }
    friend bool operator==(const ModeSet& a, const ModeSet& b) {
        return a.dim == b.dim && a.members == b.members;
    }
};

struct ExtensionStep {
    ModeIndex r, s, new_mode;
};

/// Ordered elementary extensions; replaying from `base` grows the set one mode per step.
struct ExtensionChain {
    ModeSet base;
    std::vector<ExtensionStep> steps;

    /// Replays the chain, validating every step; returns the final set.
    ModeSet replay() const;
    size_t length() const { return steps.size(); }
};

struct NoChainFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// set ∪ {2r−s}; r and s must be members.
ModeSet elementary_extension(const ModeSet& set, const ModeIndex& r, const ModeIndex& s);

/// Iterates K^j = {2m−n | m,n ∈ K^{j−1}} clipped to |k|_inf <= 2*window internally;
/// returned sets are the |k|_inf <= window restrictions, K^1 first. Stops at the
/// internal fixpoint or after max_iter productions.
std::vector<ModeSet> closure_sequence(const ModeSet& base, int window, int max_iter);

struct SaturationVerdict {
    bool saturating_within_window = false;
    std::optional<ModeIndex> first_unreached;  // witness when false
    int iterations_used = 0;
    int window = 0;  // verdict is window-bounded only
};

SaturationVerdict is_saturating_within(const ModeSet& base, int window, int max_iter);

struct CubeGenerators {
    ModeSet set;          // all 2^d subset sums of the generators
    long long det = 0;    // det(k_1 .. k_d)
    bool unimodular = false;  // |det| == 1 (saturation hypothesis)
};

/// The 2^d subset sums of d generator vectors, empty sum included.
CubeGenerators build_cube_generators(const std::vector<ModeIndex>& k_list);

/// Breadth-first extension planning: returns a chain from `base` whose replay covers
/// `targets`. Deterministic: parents chosen by min |r|_1+|s|_1, then lex order.
/// Throws NoChainFound when some target is unreachable within the window budget.
ExtensionChain plan_extension_chain(const ModeSet& base, const ModeSet& targets, int window,
                                    int max_iter = 0);

long long integer_determinant(std::vector<std::vector<long long>> m);

/// All modes of the box |k|_inf <= window in Z^d, lex order.
std::vector<ModeIndex> box_modes(int dim, int window);

}  // namespace nlsteer
