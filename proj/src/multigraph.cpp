#include "modphi/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "modphi/errors.hpp"

namespace modphi {

namespace {

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

} // namespace

bool MultiGraph::connected() const {
    if (n <= 1) return true;
    DSU dsu(n);
    int comps = n;
    for (auto [u, v] : edges)
        if (u != v && dsu.unite(u, v)) --comps;
    return comps == 1;
}

MultiGraph MultiGraph::contract(const SetPartition& pi) const {
    std::vector<int> block_of(n, -1);
    for (int b = 0; b < (int)pi.blocks.size(); ++b)
        for (int v : pi.blocks[b]) block_of[v] = b;
    MultiGraph out;
    out.n = (int)pi.blocks.size();
    for (auto [u, v] : edges) {
        int bu = block_of[u], bv = block_of[v];
        if (bu != bv) out.edges.push_back({bu, bv});
    }
    return out;
}

MultiGraph MultiGraph::induced(const std::vector<int>& verts) const {
    std::vector<int> idx(n, -1);
    for (int i = 0; i < (int)verts.size(); ++i) idx[verts[i]] = i;
    MultiGraph out;
    out.n = (int)verts.size();
    for (auto [u, v] : edges)
        if (idx[u] >= 0 && idx[v] >= 0) out.edges.push_back({idx[u], idx[v]});
    return out;
}

MultiGraph graph_from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    MultiGraph g;
    g.n = n;
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

long long f_functional_subsets(const MultiGraph& H) {
    int m = H.edge_count();
    if (m > 24) throw too_large_error("subset enumeration capped at 24 edges");
    if (H.n == 1 && m == 0) return 1;
    long long acc = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        DSU dsu(H.n);
        int comps = H.n;
        int cnt = 0;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) {
                ++cnt;
                auto [u, v] = H.edges[e];
                if (u != v && dsu.unite(u, v)) --comps;
            }
        if (comps == 1) acc += ((cnt - H.n + 1) % 2 == 0) ? 1 : -1;
    }
    return acc;
}

namespace {

long long f_delcon_rec(MultiGraph g) {
    if (!g.connected()) return 0;
    // pick a non-loop edge; if none remain, F = 1 on a bare vertex and 0 once
    // any loop is present
    int pick = -1;
    int loops = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.edges[e].first == g.edges[e].second)
            ++loops;
        else
            pick = e;
    }
    if (pick < 0) return (g.n == 1 && loops == 0) ? 1 : 0;

    auto [u, v] = g.edges[pick];
    MultiGraph del = g;
    del.edges.erase(del.edges.begin() + pick);

    MultiGraph con;
    con.n = g.n - 1;
    auto remap = [&](int w) {
        int t = (w == v) ? u : w; // merge v into u
        return t - (t > v ? 1 : 0);
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == pick) continue;
        con.edges.push_back({remap(g.edges[e].first), remap(g.edges[e].second)});
    }
    return f_delcon_rec(std::move(con)) + f_delcon_rec(std::move(del));
}

} // namespace

long long f_functional_deletion_contraction(const MultiGraph& H) { return f_delcon_rec(H); }

long long f_functional(const MultiGraph& H) {
    if (H.edge_count() <= 24) return f_functional_subsets(H);
    return f_functional_deletion_contraction(H);
}

long long spanning_tree_count(const MultiGraph& H) {
    int n = H.n;
    if (n == 0) return 0;
    if (n == 1) return 1; // loop-only graphs count one (empty) tree
    if (!H.connected()) return 0;
    // integer Laplacian minor determinant via fraction-free elimination
    std::vector<std::vector<__int128>> L(n - 1, std::vector<__int128>(n - 1, 0));
    for (auto [u, v] : H.edges) {
        if (u == v) continue;
        if (u < n - 1) L[u][u] += 1;
        if (v < n - 1) L[v][v] += 1;
        if (u < n - 1 && v < n - 1) {
            L[u][v] -= 1;
            L[v][u] -= 1;
        }
    }
    int m = n - 1;
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < m; ++k) {
        if (L[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < m; ++i)
                if (L[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(L[k], L[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j)
                L[i][j] = (L[i][j] * L[k][k] - L[i][k] * L[k][j]) / prev;
        prev = L[k][k];
    }
    __int128 det = sign * L[m - 1][m - 1];
    return (long long)det;
}

long long spanning_tree_count_deletion_contraction(const MultiGraph& H) {
    if (!H.connected()) return 0;
    int pick = -1;
    for (int e = 0; e < H.edge_count(); ++e)
        if (H.edges[e].first != H.edges[e].second) {
            pick = e;
            break;
        }
    if (pick < 0) return H.n == 1 ? 1 : 0;
    auto [u, v] = H.edges[pick];
    MultiGraph del = H;
    del.edges.erase(del.edges.begin() + pick);
    MultiGraph con;
    con.n = H.n - 1;
    auto remap = [&](int w) {
        int t = (w == v) ? u : w;
        return t - (t > v ? 1 : 0);
    };
    for (int e = 0; e < H.edge_count(); ++e) {
        if (e == pick) continue;
        con.edges.push_back({remap(H.edges[e].first), remap(H.edges[e].second)});
    }
    return spanning_tree_count_deletion_contraction(con) +
           spanning_tree_count_deletion_contraction(del);
}

std::pair<long long, long long> bicolored_identity_check(const MultiGraph& H) {
    if (H.n > 9) throw too_large_error("bicolored identity capped at 9 vertices");
    long long st = spanning_tree_count(H);
    long long lhs = st << (H.n - 1);
    long long rhs = 0;
    for_each_set_partition(H.n, [&](const SetPartition& pi) {
        long long term = spanning_tree_count(H.contract(pi));
        if (term == 0) return;
        for (const auto& block : pi.blocks) {
            if (term == 0) break;
            term *= spanning_tree_count(H.induced(block));
        }
        rhs += term;
    });
    return {lhs, rhs};
}

namespace {

// canonical key: vertices relabeled by iterated degree refinement, then the
// sorted edge multiset
std::string canonical_key(const MultiGraph& g) {
    int n = g.n;
    std::vector<long long> color(n, 0);
    for (auto [u, v] : g.edges) {
        if (u == v) {
            color[u] += 1000003; // loops weigh differently
        } else {
            ++color[u];
            ++color[v];
        }
    }
    for (int round = 0; round < n; ++round) {
        std::vector<long long> next(n, 0);
        for (int v = 0; v < n; ++v) next[v] = color[v] * 131;
        for (auto [u, v] : g.edges) {
            if (u == v) continue;
            next[u] += color[v] * 31 + 7;
            next[v] += color[u] * 31 + 7;
        }
        color = next;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges) {
        int a = rank[u], b = rank[v];
        es.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(es.begin(), es.end());
    std::string key = std::to_string(n) + ";";
    for (auto [a, b] : es) key += std::to_string(a) + "," + std::to_string(b) + ";";
    return key;
}

long long tutte_rec(const MultiGraph& g, int x, int y, std::map<std::string, long long>& memo) {
    // strip loops and bridges first, accumulating their factors
    int m = g.edge_count();
    if (m == 0) return 1;

    std::string key = canonical_key(g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    long long result;
    int loop = -1, regular = -1;
    for (int e = 0; e < m; ++e) {
        if (g.edges[e].first == g.edges[e].second) {
            loop = e;
            break;
        }
    }
    if (loop >= 0) {
        MultiGraph del = g;
        del.edges.erase(del.edges.begin() + loop);
        result = y * tutte_rec(del, x, y, memo);
    } else {
        // bridge test: removing e disconnects
        int bridge = -1;
        for (int e = 0; e < m; ++e) {
            MultiGraph del = g;
            del.edges.erase(del.edges.begin() + e);
            if (!del.connected()) {
                bridge = e;
            } else {
                regular = e;
                break;
            }
        }
        if (regular >= 0) {
            auto [u, v] = g.edges[regular];
            MultiGraph del = g;
            del.edges.erase(del.edges.begin() + regular);
            MultiGraph con;
            con.n = g.n - 1;
            auto remap = [&](int w) {
                int t = (w == v) ? u : w;
                return t - (t > v ? 1 : 0);
            };
            for (int e = 0; e < m; ++e) {
                if (e == regular) continue;
                con.edges.push_back({remap(g.edges[e].first), remap(g.edges[e].second)});
            }
            result = tutte_rec(del, x, y, memo) + tutte_rec(con, x, y, memo);
        } else {
            // all edges are bridges: T = x^m
            (void)bridge;
            result = 1;
            for (int e = 0; e < m; ++e) result *= x;
        }
    }
    memo[key] = result;
    return result;
}

} // namespace

long long tutte_point(const MultiGraph& H, int x, int y) {
    if ((x != 0 && x != 1) || (y != 0 && y != 1))
        throw validation_error("tutte_point supports x, y in {0, 1}");
    if (!H.connected()) throw disconnected_error("tutte_point requires a connected graph");
    if (H.edge_count() > 20) throw too_large_error("tutte_point capped at 20 edges");
    std::map<std::string, long long> memo;
    return tutte_rec(H, x, y, memo);
}

} // namespace modphi
