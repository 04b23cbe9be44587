#include "flowroots/graph.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <functional>
#include <optional>
#include <set>

namespace flowroots {

namespace {

constexpr int kInfinity = INT_MAX;

}  // namespace

// ---- Multigraph ----

Multigraph::Multigraph(int n, const std::vector<std::pair<int, int>>& pairs) : n_(n) {
    for (const auto& [u, v] : pairs) add_edge(u, v);
}

const Edge& Multigraph::edge(int id) const {
    for (const Edge& e : edges_)
        if (e.id == id) return e;
    throw UnknownEdge(id);
}

bool Multigraph::has_edge_id(int id) const {
    for (const Edge& e : edges_)
        if (e.id == id) return true;
    return false;
}

int Multigraph::add_edge(int u, int v) { return add_edge_with_id(u, v, next_id_); }

int Multigraph::add_edge_with_id(int u, int v, int id) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw PreconditionViolated("edge endpoint out of range");
    if (has_edge_id(id)) throw PreconditionViolated("duplicate edge id");
    edges_.push_back({u, v, id});
    next_id_ = std::max(next_id_, id + 1);
    return id;
}

int Multigraph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

int Multigraph::loop_count() const {
    int c = 0;
    for (const Edge& e : edges_)
        if (e.is_loop()) ++c;
    return c;
}

std::vector<int> Multigraph::loop_ids() const {
    std::vector<int> ids;
    for (const Edge& e : edges_)
        if (e.is_loop()) ids.push_back(e.id);
    return ids;
}

std::map<int, int> Multigraph::degree_histogram() const {
    std::map<int, int> h;
    for (int v = 0; v < n_; ++v) h[degree(v)] += 1;
    return h;
}

std::vector<std::vector<std::pair<int, int>>> Multigraph::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(n_);
    for (const Edge& e : edges_) {
        adj[e.u].emplace_back(e.v, e.id);
        adj[e.v].emplace_back(e.u, e.id);
    }
    return adj;
}

Multigraph delete_edge(const Multigraph& g, int id) {
    if (!g.has_edge_id(id)) throw UnknownEdge(id);
    Multigraph h(g.vertex_count());
    for (const Edge& e : g.edges())
        if (e.id != id) h.add_edge_with_id(e.u, e.v, e.id);
    return h;
}

Multigraph contract_edge(const Multigraph& g, int id) {
    const Edge& c = g.edge(id);
    if (c.is_loop()) return delete_edge(g, id);
    int keep = std::min(c.u, c.v), gone = std::max(c.u, c.v);
    Multigraph h(g.vertex_count() - 1);
    auto remap = [keep, gone](int x) {
        if (x == gone) return keep;
        return x > gone ? x - 1 : x;
    };
    for (const Edge& e : g.edges())
        if (e.id != id) h.add_edge_with_id(remap(e.u), remap(e.v), e.id);
    return h;
}

Multigraph contract_set(const Multigraph& g, const std::vector<int>& vertices) {
    if (vertices.empty()) throw PreconditionViolated("empty contraction set");
    std::vector<bool> in_set(g.vertex_count(), false);
    int distinct = 0;
    for (int v : vertices) {
        if (v < 0 || v >= g.vertex_count()) throw PreconditionViolated("vertex out of range");
        if (!in_set[v]) ++distinct;
        in_set[v] = true;
    }
    int rep = *std::min_element(vertices.begin(), vertices.end());
    // merged vertex takes the slot of its smallest member
    std::vector<int> remap(g.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v == rep || !in_set[v]) remap[v] = next++;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (in_set[v]) remap[v] = remap[rep];
    Multigraph h(g.vertex_count() - distinct + 1);
    for (const Edge& e : g.edges()) {
        if (in_set[e.u] && in_set[e.v]) continue;  // contracted away
        h.add_edge_with_id(remap[e.u], remap[e.v], e.id);
    }
    return h;
}

// ---- formats ----

namespace {

struct ByteCursor {
    std::string_view s;
    std::size_t pos = 0;
    bool done() const { return pos >= s.size(); }
};

int g6_byte(ByteCursor& c) {
    if (c.done()) throw MalformedInput("unexpected end of input", c.pos);
    unsigned char b = static_cast<unsigned char>(c.s[c.pos]);
    if (b < 63 || b > 126) throw MalformedInput("byte outside graph6 range", c.pos);
    ++c.pos;
    return b - 63;
}

long read_order(ByteCursor& c) {
    int b0 = g6_byte(c);
    if (b0 < 63) return b0;
    // b0 == 63 ('~'): extended sizes
    std::size_t mark = c.pos;
    int b1 = g6_byte(c);
    if (b1 < 63) {
        long n = b1;
        n = (n << 6) | g6_byte(c);
        n = (n << 6) | g6_byte(c);
        return n;
    }
    (void)mark;
    long n = 0;
    for (int i = 0; i < 6; ++i) n = (n << 6) | g6_byte(c);
    return n;
}

struct BitReader {
    ByteCursor* c;
    int buf = 0, avail = 0;
    std::optional<int> bit() {
        if (avail == 0) {
            if (c->done()) return std::nullopt;
            buf = g6_byte(*c);
            avail = 6;
        }
        --avail;
        return (buf >> avail) & 1;
    }
    std::optional<long> bits(int k) {
        long x = 0;
        for (int i = 0; i < k; ++i) {
            auto b = bit();
            if (!b) return std::nullopt;
            x = (x << 1) | *b;
        }
        return x;
    }
};

std::string_view strip_header(std::string_view s, std::string_view header) {
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    return s;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    return s;
}

Multigraph parse_graph6(std::string_view bytes) {
    std::string_view s = trim(strip_header(bytes, ">>graph6<<"));
    ByteCursor c{s};
    long n = read_order(c);
    if (n > 100000) throw MalformedInput("graph order too large", 0);
    Multigraph g(static_cast<int>(n));
    long bits_needed = n * (n - 1) / 2;
    long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long>(s.size() - c.pos) != bytes_needed)
        throw MalformedInput("wrong graph6 length", c.pos);
    BitReader br{&c};
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            auto b = br.bit();
            if (!b) throw MalformedInput("truncated graph6 bit vector", c.pos);
            if (*b) g.add_edge(u, v);
        }
    }
    return g;
}

Multigraph parse_sparse6(std::string_view bytes) {
    std::string_view s = trim(strip_header(bytes, ">>sparse6<<"));
    if (s.empty() || s[0] != ':') throw MalformedInput("sparse6 must start with ':'", 0);
    s.remove_prefix(1);
    ByteCursor c{s};
    long n = read_order(c);
    if (n > 100000) throw MalformedInput("graph order too large", 0);
    Multigraph g(static_cast<int>(n));
    if (n == 0) {
        if (!c.done()) throw MalformedInput("trailing bytes in sparse6", c.pos);
        return g;
    }
    int k = 1;
    while ((n - 1) >> k) ++k;
    BitReader br{&c};
    long v = 0;
    while (true) {
        auto b = br.bit();
        if (!b) break;
        if (*b) ++v;
        auto x = br.bits(k);
        if (!x) break;
        if (v >= n) break;
        if (*x > v)
            v = *x;
        else
            g.add_edge(static_cast<int>(*x), static_cast<int>(v));
    }
    return g;
}

struct IntScanner {
    std::string_view s;
    std::size_t pos = 0;
    void skip_space() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at_end() {
        skip_space();
        return pos >= s.size();
    }
    long next(const char* what) {
        skip_space();
        if (pos >= s.size()) throw MalformedInput(std::string("expected ") + what, pos);
        std::size_t start = pos;
        bool neg = false;
        if (s[pos] == '-') {
            neg = true;
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw MalformedInput(std::string("expected ") + what, start);
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 100000000) throw MalformedInput("number too large", start);
            ++pos;
        }
        return neg ? -v : v;
    }
};

Multigraph parse_edge_list(std::string_view bytes) {
    IntScanner sc{bytes};
    long n = sc.next("vertex count");
    long m = sc.next("edge count");
    if (n < 0 || m < 0) throw MalformedInput("negative header value", 0);
    Multigraph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        std::size_t at = sc.pos;
        long u = sc.next("edge endpoint");
        long v = sc.next("edge endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw MalformedInput("edge endpoint out of range", at);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (!sc.at_end()) throw MalformedInput("trailing input after edge list", sc.pos);
    return g;
}

void append_order(std::string& out, long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw PreconditionViolated("graph too large to serialize");
    }
}

struct BitWriter {
    std::string* out;
    int buf = 0, used = 0;
    void bit(int b) {
        buf = (buf << 1) | (b & 1);
        if (++used == 6) {
            out->push_back(static_cast<char>(buf + 63));
            buf = 0;
            used = 0;
        }
    }
    void bits(long x, int k) {
        for (int i = k - 1; i >= 0; --i) bit(static_cast<int>((x >> i) & 1));
    }
    int pending() const { return used == 0 ? 0 : 6 - used; }
    void pad(int first_bit) {
        if (used == 0) return;
        bit(first_bit);
        while (used != 0) bit(1);
    }
};

}  // namespace

Multigraph parse(GraphFormat format, std::string_view bytes) {
    switch (format) {
        case GraphFormat::Graph6: return parse_graph6(bytes);
        case GraphFormat::Sparse6: return parse_sparse6(bytes);
        case GraphFormat::EdgeList: return parse_edge_list(bytes);
    }
    throw PreconditionViolated("unknown format");
}

Multigraph parse_auto(std::string_view line) {
    std::string_view s = trim(line);
    if (s.substr(0, 11) == ">>sparse6<<" || (!s.empty() && s[0] == ':'))
        return parse_sparse6(s);
    if (s.substr(0, 10) == ">>graph6<<") return parse_graph6(s);
    if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s[0]))))
        return parse_edge_list(s);
    return parse_graph6(s);
}

std::string to_graph6(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const Edge& e : g.edges()) {
        if (e.is_loop() || adj[e.u][e.v])
            throw PreconditionViolated("graph6 requires a simple graph");
        adj[e.u][e.v] = adj[e.v][e.u] = true;
    }
    std::string out;
    append_order(out, n);
    BitWriter bw{&out};
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bw.bit(adj[u][v] ? 1 : 0);
    bw.pad(0);
    return out;
}

std::string to_sparse6(const Multigraph& g) {
    long n = g.vertex_count();
    std::string out = ":";
    append_order(out, n);
    if (n == 0) return out;
    int k = 1;
    while ((n - 1) >> k) ++k;
    std::vector<std::pair<long, long>> es;  // (max, min)
    es.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        es.emplace_back(std::max(e.u, e.v), std::min(e.u, e.v));
    std::sort(es.begin(), es.end());
    BitWriter bw{&out};
    long v = 0;
    for (const auto& [w, u] : es) {
        if (w == v) {
            bw.bit(0);
            bw.bits(u, k);
        } else if (w == v + 1) {
            bw.bit(1);
            bw.bits(u, k);
            v = w;
        } else {
            bw.bit(0);
            bw.bits(w, k);
            bw.bit(0);
            bw.bits(u, k);
            v = w;
        }
    }
    // all-ones padding, except where it could decode as a spurious loop
    bool power_of_two = n >= 2 && (n & (n - 1)) == 0;
    if (power_of_two && bw.pending() >= k + 1 && v == n - 2)
        bw.pad(0);
    else
        bw.pad(1);
    return out;
}

// ---- connectivity ----

int connected_components(const Multigraph& g, std::vector<int>& comp) {
    int n = g.vertex_count();
    comp.assign(n, -1);
    auto adj = g.adjacency();
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [w, id] : adj[u]) {
                (void)id;
                if (comp[w] == -1) {
                    comp[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    return count;
}

bool is_connected(const Multigraph& g) {
    std::vector<int> comp;
    return connected_components(g, comp) <= 1;
}

std::vector<int> bridges(const Multigraph& g) {
    int n = g.vertex_count();
    auto adj = g.adjacency();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> out;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int in_edge) {
        disc[u] = low[u] = timer++;
        for (auto [w, id] : adj[u]) {
            if (id == in_edge || w == u) continue;  // entering edge / loop
            if (disc[w] == -1) {
                dfs(w, id);
                low[u] = std::min(low[u], low[w]);
                if (low[w] > disc[u]) out.push_back(id);
            } else {
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    for (int s = 0; s < n; ++s)
        if (disc[s] == -1) dfs(s, -1);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Unit-capacity max flow (per parallel edge) between s and t.
int max_flow(const Multigraph& g, int s, int t) {
    struct Arc {
        int to, cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out(g.vertex_count());
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        out[e.u].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({e.v, 1});
        out[e.v].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({e.u, 1});
    }
    int flow = 0;
    while (true) {
        std::vector<int> pre_arc(g.vertex_count(), -1);
        std::vector<int> queue{s};
        pre_arc[s] = -2;
        for (std::size_t qi = 0; qi < queue.size() && pre_arc[t] == -1; ++qi) {
            int u = queue[qi];
            for (int ai : out[u]) {
                if (arcs[ai].cap > 0 && pre_arc[arcs[ai].to] == -1) {
                    pre_arc[arcs[ai].to] = ai;
                    queue.push_back(arcs[ai].to);
                }
            }
        }
        if (pre_arc[t] == -1) break;
        for (int v = t; v != s;) {
            int ai = pre_arc[v];
            arcs[ai].cap -= 1;
            arcs[ai ^ 1].cap += 1;
            v = arcs[ai ^ 1].to;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int edge_connectivity(const Multigraph& g) {
    if (!is_connected(g)) throw Disconnected();
    if (g.vertex_count() <= 1) return kInfinity;
    int best = kInfinity;
    for (int t = 1; t < g.vertex_count(); ++t) best = std::min(best, max_flow(g, 0, t));
    return best;
}

std::vector<int> find_two_edge_cut(const Multigraph& g) {
    std::vector<Edge> sorted_edges = g.edges();
    std::sort(sorted_edges.begin(), sorted_edges.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (const Edge& e : sorted_edges) {
        if (e.is_loop()) continue;
        auto br = bridges(delete_edge(g, e.id));
        if (!br.empty()) return {e.id, br[0]};
    }
    return {};
}

Multigraph series_reduce(const Multigraph& g) {
    auto br = bridges(g);
    if (!br.empty()) throw HasBridge(br[0]);
    Multigraph h = g;
    while (h.vertex_count() > 1) {
        auto cut = find_two_edge_cut(h);
        if (cut.empty()) break;
        h = contract_edge(h, cut[0]);
    }
    return h;
}

std::vector<std::vector<int>> block_edge_sets(const Multigraph& g) {
    int n = g.vertex_count();
    auto adj = g.adjacency();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int in_edge) {
        disc[u] = low[u] = timer++;
        for (auto [w, id] : adj[u]) {
            if (id == in_edge || w == u) continue;
            if (disc[w] == -1) {
                edge_stack.push_back(id);
                dfs(w, id);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    std::vector<int> blk;
                    while (true) {
                        int top = edge_stack.back();
                        edge_stack.pop_back();
                        blk.push_back(top);
                        if (top == id) break;
                    }
                    std::sort(blk.begin(), blk.end());
                    blocks.push_back(std::move(blk));
                }
            } else if (disc[w] < disc[u]) {
                edge_stack.push_back(id);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    for (int s = 0; s < n; ++s)
        if (disc[s] == -1) dfs(s, -1);
    return blocks;
}

Multigraph subgraph_of_edges(const Multigraph& g, const std::vector<int>& edge_ids) {
    std::vector<int> remap(g.vertex_count(), -1);
    int next = 0;
    std::vector<const Edge*> picked;
    for (int id : edge_ids) picked.push_back(&g.edge(id));
    for (const Edge* e : picked) {
        if (remap[e->u] == -1) remap[e->u] = next++;
        if (remap[e->v] == -1) remap[e->v] = next++;
    }
    Multigraph h(next);
    for (const Edge* e : picked) h.add_edge_with_id(remap[e->u], remap[e->v], e->id);
    return h;
}

// ---- minimal 3-cutsets ----

namespace {

// components of g with the given edge ids removed
int components_without(const Multigraph& g, const std::vector<int>& skip,
                       std::vector<int>& comp) {
    Multigraph h(g.vertex_count());
    for (const Edge& e : g.edges()) {
        bool skipped = false;
        for (int s : skip)
            if (e.id == s) skipped = true;
        if (!skipped) h.add_edge_with_id(e.u, e.v, e.id);
    }
    return connected_components(h, comp);
}

}  // namespace

int CutsetReport::proper_count() const {
    int c = 0;
    for (const auto& cs : cutsets)
        if (cs.proper) ++c;
    return c;
}

CutsetReport minimal_three_cutsets(const Multigraph& g) {
    if (!is_connected(g)) throw NotThreeEdgeConnected();
    CutsetReport rep;
    if (g.vertex_count() <= 1) return rep;
    if (!bridges(g).empty() || !find_two_edge_cut(g).empty()) throw NotThreeEdgeConnected();

    std::vector<Edge> es = g.edges();
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    int m = static_cast<int>(es.size());
    std::vector<int> comp;
    for (int a = 0; a < m; ++a) {
        if (es[a].is_loop()) continue;
        for (int b = a + 1; b < m; ++b) {
            if (es[b].is_loop()) continue;
            for (int c = b + 1; c < m; ++c) {
                if (es[c].is_loop()) continue;
                std::vector<int> skip{es[a].id, es[b].id, es[c].id};
                if (components_without(g, skip, comp) < 2) continue;
                // 3-edge-connectivity forces exactly two sides
                Cutset cs;
                cs.edge_ids = {es[a].id, es[b].id, es[c].id};
                for (int v = 0; v < g.vertex_count(); ++v)
                    (comp[v] == comp[0] ? cs.side_a : cs.side_b).push_back(v);
                int ea = 0, eb = 0;
                for (const Edge& e : g.edges()) {
                    bool in_cut = e.id == es[a].id || e.id == es[b].id || e.id == es[c].id;
                    if (in_cut) continue;
                    if (comp[e.u] == comp[0])
                        ++ea;
                    else
                        ++eb;
                }
                cs.proper = ea >= 1 && eb >= 1;
                rep.cutsets.push_back(std::move(cs));
            }
        }
    }
    return rep;
}

// ---- canonical labeling ----

namespace {

struct CanonContext {
    int n;
    std::vector<std::vector<int>> mult;  // non-loop multiplicities
    std::vector<int> loops;
    std::string best;
    bool have_best = false;

    using Partition = std::vector<std::vector<int>>;

    void refine(Partition& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<int> cell_of(n, 0);
            for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci)
                for (int v : cells[ci]) cell_of[v] = ci;
            Partition next;
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                // signature: loop count plus edge multiplicity into every cell
                std::vector<std::pair<std::vector<int>, int>> sigs;
                sigs.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> sig(cells.size() + 1, 0);
                    sig[0] = loops[v];
                    for (int u = 0; u < n; ++u)
                        if (u != v) sig[1 + cell_of[u]] += mult[v][u];
                    sigs.emplace_back(std::move(sig), v);
                }
                std::stable_sort(sigs.begin(), sigs.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                std::size_t run = 0;
                for (std::size_t i = 1; i <= sigs.size(); ++i) {
                    if (i == sigs.size() || sigs[i].first != sigs[run].first) {
                        std::vector<int> sub;
                        for (std::size_t j = run; j < i; ++j) sub.push_back(sigs[j].second);
                        std::sort(sub.begin(), sub.end());
                        next.push_back(std::move(sub));
                        if (i - run != sigs.size()) changed = true;
                        run = i;
                    }
                }
            }
            cells = std::move(next);
            if (cells.size() == static_cast<std::size_t>(n)) break;
        }
    }

    std::string encode(const std::vector<int>& order) const {
        std::string s;
        s.reserve(2 + n + n * (n - 1) / 2);
        s.push_back(static_cast<char>(n & 0xff));
        s.push_back(static_cast<char>((n >> 8) & 0xff));
        for (int v : order) s.push_back(static_cast<char>(loops[v]));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s.push_back(static_cast<char>(mult[order[i]][order[j]]));
        return s;
    }

    void search(Partition cells) {
        refine(cells);
        int branch = -1;
        std::size_t branch_size = 0;
        for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
            if (cells[ci].size() > 1 &&
                (branch == -1 || cells[ci].size() < branch_size)) {
                branch = ci;
                branch_size = cells[ci].size();
            }
        }
        if (branch == -1) {
            std::vector<int> order;
            order.reserve(n);
            for (const auto& cell : cells) order.push_back(cell[0]);
            std::string enc = encode(order);
            if (!have_best || enc < best) {
                best = std::move(enc);
                have_best = true;
            }
            return;
        }
        for (int v : cells[branch]) {
            Partition split;
            split.reserve(cells.size() + 1);
            for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
                if (ci == branch) {
                    split.push_back({v});
                    std::vector<int> rest;
                    for (int u : cells[ci])
                        if (u != v) rest.push_back(u);
                    split.push_back(std::move(rest));
                } else {
                    split.push_back(cells[ci]);
                }
            }
            search(std::move(split));
        }
    }
};

}  // namespace

std::string canonical_key(const Multigraph& g) {
    CanonContext ctx;
    ctx.n = g.vertex_count();
    ctx.mult.assign(ctx.n, std::vector<int>(ctx.n, 0));
    ctx.loops.assign(ctx.n, 0);
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) {
            ctx.loops[e.u] += 1;
        } else {
            ctx.mult[e.u][e.v] += 1;
            ctx.mult[e.v][e.u] += 1;
        }
    }
    if (ctx.n == 0) return std::string("\0\0", 2);
    CanonContext::Partition init{std::vector<int>()};
    init[0].resize(ctx.n);
    for (int v = 0; v < ctx.n; ++v) init[0][v] = v;
    ctx.search(std::move(init));
    return ctx.best;
}

Multigraph simple_support(const Multigraph& g) {
    std::set<std::pair<int, int>> seen;
    Multigraph h(g.vertex_count());
    std::vector<Edge> es = g.edges();
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (const Edge& e : es) {
        if (e.is_loop()) continue;
        auto key = std::minmax(e.u, e.v);
        if (seen.insert({key.first, key.second}).second)
            h.add_edge_with_id(e.u, e.v, e.id);
    }
    return h;
}

Multigraph relabel(const Multigraph& g, const std::vector<int>& perm) {
    Multigraph h(g.vertex_count());
    for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
    return h;
}

}  // namespace flowroots
