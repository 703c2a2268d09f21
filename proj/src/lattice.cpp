#include "nlsteer/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nlsteer {

ModeIndex operator+(const ModeIndex& a, const ModeIndex& b) {
    ModeIndex out = a;
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
    return out;
}

ModeIndex operator-(const ModeIndex& a, const ModeIndex& b) {
    ModeIndex out = a;
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] -= b.c[i];
    return out;
}

std::string ModeIndex::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

ModeIndex zero_mode(int dim) { return ModeIndex(std::vector<int>(static_cast<size_t>(dim), 0)); }

ModeIndex extension_image(const ModeIndex& r, const ModeIndex& s) {
    if (r.dim() != s.dim()) throw std::invalid_argument("extension_image: dimension mismatch");
    ModeIndex out = r;
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = 2 * r.c[i] - s.c[i];
    return out;
}

ModeSet elementary_extension(const ModeSet& set, const ModeIndex& r, const ModeIndex& s) {
    if (r.dim() != set.dim || s.dim() != set.dim)
        throw std::invalid_argument("elementary_extension: dimension mismatch");
    if (!set.contains(r) || !set.contains(s))
        throw std::invalid_argument("elementary_extension: r and s must be members");
    ModeSet out = set;
    out.insert(extension_image(r, s));
    return out;
}

ModeSet ExtensionChain::replay() const {
    ModeSet cur = base;
    for (const auto& st : steps) {
        if (!cur.contains(st.r) || !cur.contains(st.s))
            throw std::invalid_argument("ExtensionChain: step uses modes not yet present");
        ModeIndex img = extension_image(st.r, st.s);
        if (img != st.new_mode)
            throw std::invalid_argument("ExtensionChain: new_mode != 2r-s");
        if (cur.contains(img))
            throw std::invalid_argument("ExtensionChain: step adds an already-present mode");
        cur.insert(img);
    }
    return cur;
}

namespace {

ModeSet restrict_to_window(const ModeSet& s, int window) {
    ModeSet out(s.dim);
    for (const auto& m : s.members)
        if (m.norm_inf() <= window) out.insert(m);
    return out;
}

}  // namespace

std::vector<ModeSet> closure_sequence(const ModeSet& base, int window, int max_iter) {
    if (window < 1 || max_iter < 1)
        throw std::invalid_argument("closure_sequence: window and max_iter must be >= 1");
    const int halo = 2 * window;  // out-of-window pairs can re-enter; keep one window of margin
    ModeSet cur = restrict_to_window(base, halo);
    std::vector<ModeSet> out;
    out.push_back(restrict_to_window(cur, window));
    for (int it = 0; it < max_iter; ++it) {
        ModeSet next(cur.dim);
        for (const auto& m : cur.members)
            for (const auto& n : cur.members) {
                ModeIndex img = extension_image(m, n);
                if (img.norm_inf() <= halo) next.insert(img);
            }
        bool fix = (next == cur);
        cur = std::move(next);
        out.push_back(restrict_to_window(cur, window));
        if (fix) break;
    }
    return out;
}

SaturationVerdict is_saturating_within(const ModeSet& base, int window, int max_iter) {
    auto seq = closure_sequence(base, window, max_iter);
    const ModeSet& last = seq.back();
    SaturationVerdict v;
    v.window = window;
    v.iterations_used = static_cast<int>(seq.size()) - 1;
    for (const auto& m : box_modes(base.dim, window)) {
        if (!last.contains(m)) {
            v.saturating_within_window = false;
            v.first_unreached = m;
            return v;
        }
    }
    v.saturating_within_window = true;
    return v;
}

long long integer_determinant(std::vector<std::vector<long long>> m) {
    // Bareiss fraction-free elimination
    const size_t n = m.size();
    long long sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

CubeGenerators build_cube_generators(const std::vector<ModeIndex>& k_list) {
    if (k_list.empty()) throw std::invalid_argument("build_cube_generators: empty generator list");
    const int d = k_list[0].dim();
    if (static_cast<int>(k_list.size()) != d)
        throw std::invalid_argument("build_cube_generators: need exactly d generators in Z^d");
    for (const auto& k : k_list)
        if (k.dim() != d) throw std::invalid_argument("build_cube_generators: dimension mismatch");

    CubeGenerators out;
    out.set = ModeSet(d);
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        ModeIndex sum = zero_mode(d);
        for (int j = 0; j < d; ++j)
            if (mask & (1u << j)) sum = sum + k_list[static_cast<size_t>(j)];
        out.set.members.insert(sum);
    }
    std::vector<std::vector<long long>> m(static_cast<size_t>(d),
                                          std::vector<long long>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = k_list[static_cast<size_t>(j)][i];
    out.det = integer_determinant(std::move(m));
    out.unimodular = (out.det == 1 || out.det == -1);
    return out;
}

std::vector<ModeIndex> box_modes(int dim, int window) {
    std::vector<ModeIndex> out;
    ModeIndex cur(std::vector<int>(static_cast<size_t>(dim), -window));
    while (true) {
        out.push_back(cur);
        int i = dim - 1;
        while (i >= 0 && cur.c[static_cast<size_t>(i)] == window) {
            cur.c[static_cast<size_t>(i)] = -window;
            --i;
        }
        if (i < 0) break;
        ++cur.c[static_cast<size_t>(i)];
    }
    return out;
}

ExtensionChain plan_extension_chain(const ModeSet& base, const ModeSet& targets, int window,
                                    int max_iter) {
    if (base.dim != targets.dim)
        throw std::invalid_argument("plan_extension_chain: dimension mismatch");
    for (const auto& t : targets.members)
        if (t.norm_inf() > window)
            throw std::invalid_argument("plan_extension_chain: target outside window");
    if (max_iter <= 0) max_iter = 4 * window;

    const int halo = 2 * window;
    struct Parent {
        ModeIndex r, s;
        int depth = 0;
    };
    std::map<ModeIndex, Parent> parent;  // derived modes only
    std::set<ModeIndex> reached(base.members.begin(), base.members.end());

    auto better = [](const ModeIndex& r1, const ModeIndex& s1, const ModeIndex& r2,
                     const ModeIndex& s2) {
        long long a = r1.norm1() + s1.norm1(), b = r2.norm1() + s2.norm1();
        if (a != b) return a < b;
        if (r1 != r2) return r1 < r2;
        return s1 < s2;
    };

    for (int depth = 1; depth <= max_iter; ++depth) {
        std::map<ModeIndex, Parent> layer;
        for (const auto& r : reached)
            for (const auto& s : reached) {
                ModeIndex img = extension_image(r, s);
                if (img.norm_inf() > halo || reached.count(img)) continue;
                auto it = layer.find(img);
                if (it == layer.end() || better(r, s, it->second.r, it->second.s))
                    layer[img] = Parent{r, s, depth};
            }
        if (layer.empty()) break;
        for (auto& [m, p] : layer) {
            reached.insert(m);
            parent.emplace(m, p);
        }
        bool all = true;
        for (const auto& t : targets.members)
            if (!reached.count(t)) { all = false; break; }
        if (all) break;
    }

    for (const auto& t : targets.members)
        if (!reached.count(t))
            throw NoChainFound("plan_extension_chain: target " + t.str() +
                               " unreachable within window " + std::to_string(window));

    // dependency closure of the required derived modes
    std::set<ModeIndex> needed;
    std::vector<ModeIndex> stack;
    for (const auto& t : targets.members)
        if (!base.contains(t)) stack.push_back(t);
    while (!stack.empty()) {
        ModeIndex m = stack.back();
        stack.pop_back();
        if (needed.count(m)) continue;
        needed.insert(m);
        const Parent& p = parent.at(m);
        if (!base.contains(p.r) && !needed.count(p.r)) stack.push_back(p.r);
        if (!base.contains(p.s) && !needed.count(p.s)) stack.push_back(p.s);
    }

    std::vector<ModeIndex> order(needed.begin(), needed.end());
    std::sort(order.begin(), order.end(), [&](const ModeIndex& a, const ModeIndex& b) {
        int da = parent.at(a).depth, db = parent.at(b).depth;
        if (da != db) return da < db;
        return a < b;
    });

    ExtensionChain chain;
    chain.base = base;
    for (const auto& m : order) {
        const Parent& p = parent.at(m);
        chain.steps.push_back(ExtensionStep{p.r, p.s, m});
    }
    chain.replay();  // validates ordering
    return chain;
}

}  // namespace nlsteer
