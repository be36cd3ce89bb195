#include "small_canon.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace eulerplanar::detail {

namespace {

// Signature of a vertex for one refinement round: own color, then how many
// neighbors it has of each color. Comparable bytewise.
struct Sig {
    std::array<std::uint8_t, 1 + kMaxCanonVertices> b{};
    bool operator==(const Sig&) const = default;
    bool operator<(const Sig& o) const {
        return std::memcmp(b.data(), o.b.data(), b.size()) < 0;
    }
};

}  // namespace

int refine_colors(const SmallGraph& g, std::array<std::uint8_t, kMaxCanonVertices>& colors) {
    const int n = g.n;
    if (n == 0) return 0;

    // Initial colors: rank of degree, ascending.
    std::array<int, kMaxCanonVertices> deg{};
    std::array<int, kMaxCanonVertices + 1> seen_deg{};
    for (int v = 0; v < n; ++v) {
        deg[v] = std::popcount(g.rows[v]);
        seen_deg[deg[v]] = 1;
    }
    std::array<std::uint8_t, kMaxCanonVertices + 1> rank_of_deg{};
    std::uint8_t classes = 0;
    for (int d = 0; d <= kMaxCanonVertices; ++d)
        if (seen_deg[d]) rank_of_deg[d] = classes++;
    for (int v = 0; v < n; ++v) colors[v] = rank_of_deg[deg[v]];

    while (classes < n) {
        std::array<Sig, kMaxCanonVertices> sig{};
        for (int v = 0; v < n; ++v) {
            sig[v].b[0] = colors[v];
            std::uint16_t bits = g.rows[v];
            while (bits) {
                int u = std::countr_zero(bits);
                bits &= bits - 1;
                ++sig[v].b[1 + colors[u]];
            }
        }
        std::array<int, kMaxCanonVertices> order;
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.begin() + n,
                  [&](int a, int b) { return sig[a] < sig[b]; });
        std::array<std::uint8_t, kMaxCanonVertices> next{};
        std::uint8_t c = 0;
        next[order[0]] = 0;
        for (int i = 1; i < n; ++i) {
            if (!(sig[order[i - 1]] == sig[order[i]])) ++c;
            next[order[i]] = c;
        }
        std::uint8_t new_classes = static_cast<std::uint8_t>(c + 1);
        colors = next;
        if (new_classes == classes) break;
        classes = new_classes;
    }
    return classes;
}

void identity_segments(const SmallGraph& g, std::array<std::uint16_t, kMaxCanonVertices>& seg) {
    for (int k = 0; k < g.n; ++k) {
        std::uint16_t s = 0;
        for (int i = 0; i < k; ++i) s = static_cast<std::uint16_t>((s << 1) | ((g.rows[k] >> i) & 1));
        seg[k] = s;
    }
}

namespace {

// (v w) transposition is an automorphism iff the rows agree outside {v, w}.
inline bool swap_is_automorphism(const SmallGraph& g, int v, int w) {
    std::uint16_t other = static_cast<std::uint16_t>(~((1u << v) | (1u << w)));
    return ((g.rows[v] ^ g.rows[w]) & other) == 0;
}

struct IdentityCheck {
    const SmallGraph* g;
    const std::uint8_t* colors;
    std::array<std::uint16_t, kMaxCanonVertices> base;
    std::array<std::uint8_t, kMaxCanonVertices> perm;
    std::uint16_t used = 0;

    // False as soon as a strictly smaller labeling exists.
    bool dfs(int k) {
        const int n = g->n;
        if (k == n) return true;  // an automorphism; keep searching elsewhere
        std::array<std::uint8_t, kMaxCanonVertices> tried;
        int tried_count = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            if (colors[v] != colors[k]) continue;
            bool twin = false;
            for (int t = 0; t < tried_count && !twin; ++t)
                twin = swap_is_automorphism(*g, v, tried[t]);
            if (twin) continue;
            std::uint16_t seg = 0;
            for (int i = 0; i < k; ++i)
                seg = static_cast<std::uint16_t>((seg << 1) | ((g->rows[v] >> perm[i]) & 1));
            if (seg < base[k]) return false;
            if (seg == base[k]) {
                tried[tried_count++] = static_cast<std::uint8_t>(v);
                perm[k] = static_cast<std::uint8_t>(v);
                used |= static_cast<std::uint16_t>(1u << v);
                if (!dfs(k + 1)) return false;
                used &= static_cast<std::uint16_t>(~(1u << v));
            }
        }
        return true;
    }
};

struct MinSearch {
    const SmallGraph* g;
    std::array<std::uint8_t, kMaxCanonVertices> vertex_color;
    std::array<std::uint8_t, kMaxCanonVertices> pos_color;  // color class of each position
    std::array<std::uint16_t, kMaxCanonVertices> best;
    std::array<std::uint16_t, kMaxCanonVertices> cur{};
    std::array<std::uint8_t, kMaxCanonVertices> perm{};
    std::uint16_t used = 0;
    bool have_best = false;

    void dfs(int k, bool prefix_equal) {
        const int n = g->n;
        if (k == n) {
            if (!have_best || std::lexicographical_compare(cur.begin(), cur.begin() + n,
                                                           best.begin(), best.begin() + n)) {
                best = cur;
                have_best = true;
            }
            return;
        }
        // Candidates of this position's class, with their segments; only a
        // minimal segment can start a minimal completion of this prefix.
        std::array<std::uint8_t, kMaxCanonVertices> cand;
        std::array<std::uint16_t, kMaxCanonVertices> cand_seg;
        int cand_count = 0;
        std::uint16_t m = 0xffff;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            if (vertex_color[v] != pos_color[k]) continue;
            std::uint16_t seg = 0;
            for (int i = 0; i < k; ++i)
                seg = static_cast<std::uint16_t>((seg << 1) | ((g->rows[v] >> perm[i]) & 1));
            if (seg < m) m = seg;
            cand[cand_count] = static_cast<std::uint8_t>(v);
            cand_seg[cand_count] = seg;
            ++cand_count;
        }
        if (prefix_equal && have_best && m > best[k]) return;
        bool child_equal = prefix_equal && have_best && m == best[k];
        std::array<std::uint8_t, kMaxCanonVertices> tried;
        int tried_count = 0;
        for (int c = 0; c < cand_count; ++c) {
            if (cand_seg[c] != m) continue;
            int v = cand[c];
            bool twin = false;
            for (int t = 0; t < tried_count && !twin; ++t)
                twin = swap_is_automorphism(*g, v, tried[t]);
            if (twin) continue;
            tried[tried_count++] = static_cast<std::uint8_t>(v);
            cur[k] = m;
            perm[k] = static_cast<std::uint8_t>(v);
            used |= static_cast<std::uint16_t>(1u << v);
            dfs(k + 1, child_equal);
            used &= static_cast<std::uint16_t>(~(1u << v));
        }
    }
};

}  // namespace

bool is_canonical_identity(const SmallGraph& g,
                           const std::array<std::uint8_t, kMaxCanonVertices>& colors) {
    if (g.n <= 1) return true;
    IdentityCheck chk;
    chk.g = &g;
    chk.colors = colors.data();
    identity_segments(g, chk.base);
    return chk.dfs(0);
}

void canonical_segments(const SmallGraph& g, std::array<std::uint16_t, kMaxCanonVertices>& seg) {
    const int n = g.n;
    if (n <= 1) {
        seg.fill(0);
        return;
    }
    std::array<std::uint8_t, kMaxCanonVertices> colors{};
    refine_colors(g, colors);

    MinSearch srch;
    srch.g = &g;
    srch.vertex_color = colors;
    // Position k belongs to the k-th smallest color, counted with multiplicity.
    std::array<std::uint8_t, kMaxCanonVertices> sorted_colors{};
    for (int v = 0; v < n; ++v) sorted_colors[v] = colors[v];
    std::sort(sorted_colors.begin(), sorted_colors.begin() + n);
    srch.pos_color = sorted_colors;
    srch.best.fill(0xffff);
    srch.dfs(0, true);
    seg = srch.best;
    for (int k = n; k < kMaxCanonVertices; ++k) seg[k] = 0;
    seg[0] = 0;
}

}  // namespace eulerplanar::detail
