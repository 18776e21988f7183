#include "graphpoly/multigraph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <queue>

#include "graphpoly/error.hpp"

namespace graphpoly {

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) {
        throw ContractViolation("vertex count must be nonnegative");
    }
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.tail < 0 || e.tail >= vertex_count_ || e.head < 0 || e.head >= vertex_count_) {
            throw ContractViolation("edge " + std::to_string(i) + " has an endpoint outside 0.." +
                                    std::to_string(vertex_count_ - 1));
        }
    }
}

bool MultiGraph::has_loops() const {
    for (const Edge& e : edges_) {
        if (e.tail == e.head) return true;
    }
    return false;
}

int MultiGraph::loop_count() const {
    int count = 0;
    for (const Edge& e : edges_) {
        if (e.tail == e.head) ++count;
    }
    return count;
}

MultiGraph load_graph(std::string_view text) {
    std::vector<Edge> edges;
    std::map<long long, VertexId> relabel;  // input label -> dense id, first-appearance order
    int next_id = 0;

    auto intern = [&](long long label) {
        auto [it, inserted] = relabel.try_emplace(label, next_id);
        if (inserted) ++next_id;
        return it->second;
    };

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }

        std::vector<long long> fields;
        size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            std::string_view token = line.substr(i, j - i);
            long long value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size()) {
                throw ParseError(line_no, "expected a nonnegative integer, got '" + std::string(token) + "'");
            }
            if (value < 0) {
                throw ParseError(line_no, "negative vertex label " + std::to_string(value));
            }
            fields.push_back(value);
            i = j;
        }
        if (fields.empty()) continue;  // blank or comment-only line
        if (fields.size() != 2) {
            throw ParseError(line_no, "expected two vertex labels, got " + std::to_string(fields.size()));
        }
        VertexId u = intern(fields[0]);
        VertexId v = intern(fields[1]);
        edges.push_back(Edge{u, v});
    }

    return MultiGraph(next_id, std::move(edges));
}

namespace {

// Plain union-find, used for connectivity and ranks of edge subsets.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<size_t>(n)), count_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<size_t>(x)] != x) {
            parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[static_cast<size_t>(b)] = a;
        --count_;
        return true;
    }
    int count() const { return count_; }

private:
    std::vector<int> parent_;
    int count_;
};

}  // namespace

RankProfile rank_profile(const MultiGraph& g) {
    UnionFind uf(g.vertex_count());
    for (const Edge& e : g.edges()) uf.merge(e.tail, e.head);
    int k = uf.count();
    int r = g.vertex_count() - k;
    return RankProfile{k, r, g.edge_count() - r};
}

int SignedEdgeVector::support_size() const {
    int n = 0;
    for (std::int8_t s : sign) n += (s != 0);
    return n;
}

ForestData spanning_forest(const MultiGraph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();

    ForestData out;
    out.circuit_index.assign(static_cast<size_t>(m), -1);
    out.bond_index.assign(static_cast<size_t>(m), -1);

    // Lexicographically least spanning forest under edge-id order.
    UnionFind uf(n);
    for (EdgeId e = 0; e < m; ++e) {
        if (g.is_loop(e)) continue;
        if (uf.merge(g.edge(e).tail, g.edge(e).head)) out.forest_edges.push_back(e);
    }

    // Root each tree at its lowest vertex and record parent links.
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(static_cast<size_t>(n));
    for (EdgeId e : out.forest_edges) {
        adj[static_cast<size_t>(g.edge(e).tail)].emplace_back(g.edge(e).head, e);
        adj[static_cast<size_t>(g.edge(e).head)].emplace_back(g.edge(e).tail, e);
    }
    std::vector<VertexId> parent(static_cast<size_t>(n), -1);
    std::vector<EdgeId> parent_edge(static_cast<size_t>(n), -1);
    std::vector<int> depth(static_cast<size_t>(n), -1);
    for (VertexId root = 0; root < n; ++root) {
        if (depth[static_cast<size_t>(root)] >= 0) continue;
        depth[static_cast<size_t>(root)] = 0;
        std::queue<VertexId> queue;
        queue.push(root);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            for (auto [w, e] : adj[static_cast<size_t>(v)]) {
                if (depth[static_cast<size_t>(w)] >= 0) continue;
                depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(v)] + 1;
                parent[static_cast<size_t>(w)] = v;
                parent_edge[static_cast<size_t>(w)] = e;
                queue.push(w);
            }
        }
    }

    std::vector<char> in_forest(static_cast<size_t>(m), 0);
    for (EdgeId e : out.forest_edges) in_forest[static_cast<size_t>(e)] = 1;

    // Fundamental circuits: for y=(u,v), direct the circuit through y as
    // u -> v, then back from v to u through the forest path. A loop is its
    // own fundamental circuit.
    for (EdgeId y = 0; y < m; ++y) {
        if (in_forest[static_cast<size_t>(y)]) continue;
        SignedEdgeVector row;
        row.pivot = y;
        row.sign.assign(static_cast<size_t>(m), 0);
        row.sign[static_cast<size_t>(y)] = 1;
        if (!g.is_loop(y)) {
            // Lift both endpoints to their lca. The v side is walked with the
            // circuit (child -> parent); the u side against it (parent -> child).
            VertexId x = g.edge(y).tail;
            VertexId z = g.edge(y).head;
            std::vector<std::int8_t>& s = row.sign;
            auto lift_v_side = [&] {
                EdgeId e = parent_edge[static_cast<size_t>(z)];
                s[static_cast<size_t>(e)] = (g.edge(e).tail == z) ? std::int8_t{1} : std::int8_t{-1};
                z = parent[static_cast<size_t>(z)];
            };
            auto lift_u_side = [&] {
                EdgeId e = parent_edge[static_cast<size_t>(x)];
                s[static_cast<size_t>(e)] = (g.edge(e).head == x) ? std::int8_t{1} : std::int8_t{-1};
                x = parent[static_cast<size_t>(x)];
            };
            while (depth[static_cast<size_t>(z)] > depth[static_cast<size_t>(x)]) lift_v_side();
            while (depth[static_cast<size_t>(x)] > depth[static_cast<size_t>(z)]) lift_u_side();
            while (x != z) {
                lift_v_side();
                lift_u_side();
            }
        }
        out.circuit_index[static_cast<size_t>(y)] = static_cast<int>(out.circuits.size());
        out.circuits.push_back(std::move(row));
    }

    // Fundamental bonds: removing forest edge e=(u,v) splits its tree; the
    // bond is every edge with exactly one endpoint on the child side, directed
    // so that the bond agrees with the reference orientation on e.
    for (EdgeId e : out.forest_edges) {
        VertexId u = g.edge(e).tail;
        VertexId v = g.edge(e).head;
        VertexId child = (parent_edge[static_cast<size_t>(u)] == e) ? u : v;

        std::vector<char> in_child(static_cast<size_t>(n), 0);
        in_child[static_cast<size_t>(child)] = 1;
        std::queue<VertexId> queue;
        queue.push(child);
        while (!queue.empty()) {
            VertexId a = queue.front();
            queue.pop();
            for (auto [b, f] : adj[static_cast<size_t>(a)]) {
                if (f == e || in_child[static_cast<size_t>(b)]) continue;
                in_child[static_cast<size_t>(b)] = 1;
                queue.push(b);
            }
        }

        SignedEdgeVector row;
        row.pivot = e;
        row.sign.assign(static_cast<size_t>(m), 0);
        const bool tail_on_child_side = in_child[static_cast<size_t>(u)];
        for (EdgeId x = 0; x < m; ++x) {
            bool ta = in_child[static_cast<size_t>(g.edge(x).tail)];
            bool ha = in_child[static_cast<size_t>(g.edge(x).head)];
            if (ta == ha) continue;  // not in the bond (covers loops)
            // +1 iff x's tail lies on the same side as e's tail
            row.sign[static_cast<size_t>(x)] = (ta == tail_on_child_side) ? std::int8_t{1} : std::int8_t{-1};
        }
        out.bond_index[static_cast<size_t>(e)] = static_cast<int>(out.bonds.size());
        out.bonds.push_back(std::move(row));
    }

    return out;
}

bool is_cut(const MultiGraph& g, const std::vector<EdgeId>& U) {
    return is_cut(g, spanning_forest(g), U);
}

bool is_cut(const MultiGraph& g, const ForestData& forest, const std::vector<EdgeId>& U) {
    if (U.empty()) throw ContractViolation("is_cut requires a nonempty edge subset");
    std::vector<char> in_U(static_cast<size_t>(g.edge_count()), 0);
    for (EdgeId e : U) {
        if (e < 0 || e >= g.edge_count()) throw ContractViolation("is_cut: edge id out of range");
        in_U[static_cast<size_t>(e)] = 1;
    }
    // |U ∩ C| must be even on a basis of the cycle space over GF(2).
    for (const SignedEdgeVector& c : forest.circuits) {
        int parity = 0;
        for (EdgeId x = 0; x < g.edge_count(); ++x) {
            if (c.sign[static_cast<size_t>(x)] != 0 && in_U[static_cast<size_t>(x)]) parity ^= 1;
        }
        if (parity) return false;
    }
    return true;
}

MultiGraph minor(const MultiGraph& g, EdgeId e, MinorMode mode, MinorTrace* trace) {
    if (e < 0 || e >= g.edge_count()) throw ContractViolation("minor: edge id out of range");
    if (mode == MinorMode::Contract && g.is_loop(e)) {
        throw ContractViolation("cannot contract a loop; branch per the deletion-contraction relation");
    }

    const int n = g.vertex_count();
    std::vector<VertexId> vmap(static_cast<size_t>(n));
    int new_n = n;
    if (mode == MinorMode::Delete) {
        std::iota(vmap.begin(), vmap.end(), 0);
    } else {
        VertexId u = g.edge(e).tail;
        VertexId v = g.edge(e).head;
        VertexId keep = std::min(u, v);
        VertexId drop = std::max(u, v);
        int next = 0;
        for (VertexId w = 0; w < n; ++w) {
            if (w == drop) {
                vmap[static_cast<size_t>(w)] = -1;  // fixed up below
            } else {
                vmap[static_cast<size_t>(w)] = next++;
            }
        }
        vmap[static_cast<size_t>(drop)] = vmap[static_cast<size_t>(keep)];
        new_n = n - 1;
    }

    std::vector<Edge> edges;
    std::vector<EdgeId> emap(static_cast<size_t>(g.edge_count()), -1);
    for (EdgeId x = 0; x < g.edge_count(); ++x) {
        if (x == e) continue;
        emap[static_cast<size_t>(x)] = static_cast<EdgeId>(edges.size());
        edges.push_back(Edge{vmap[static_cast<size_t>(g.edge(x).tail)], vmap[static_cast<size_t>(g.edge(x).head)]});
    }

    if (trace) {
        trace->vertex_map = std::move(vmap);
        trace->edge_map = std::move(emap);
    }
    return MultiGraph(new_n, std::move(edges));
}

}  // namespace graphpoly
