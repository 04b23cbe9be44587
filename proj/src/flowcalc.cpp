#include "flowroots/flowcalc.hpp"

#include <algorithm>
#include <map>

namespace flowroots {

// ---- MemoCache ----

std::optional<IntPoly> MemoCache::get(const std::string& key) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    lru_.splice(lru_.begin(), lru_, it->second.second);
    return it->second.first;
}

void MemoCache::put(const std::string& key, const IntPoly& value) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) {
        lru_.splice(lru_.begin(), lru_, it->second.second);
        return;  // pure values: an existing entry is identical
    }
    lru_.push_front(key);
    map_.emplace(key, std::make_pair(value, lru_.begin()));
    if (cap_ > 0 && map_.size() > cap_) {
        map_.erase(lru_.back());
        lru_.pop_back();
    }
}

std::size_t MemoCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
}

namespace {

IntPoly x_minus(long a) { return IntPoly::linear(BigInt(a)); }

Multigraph without_loops(const Multigraph& g) {
    Multigraph h(g.vertex_count());
    for (const Edge& e : g.edges())
        if (!e.is_loop()) h.add_edge_with_id(e.u, e.v, e.id);
    return h;
}

IntPoly flow_poly_rec(const Multigraph& g, const FlowOptions& opts);

// maximal-multiplicity pivot edge, smallest id among ties
int pick_pivot(const Multigraph& h) {
    std::map<std::pair<int, int>, int> mult;
    for (const Edge& e : h.edges())
        if (!e.is_loop()) mult[std::minmax(e.u, e.v)] += 1;
    int best_id = -1, best_mult = 0;
    std::vector<Edge> es = h.edges();
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (const Edge& e : es) {
        if (e.is_loop()) continue;
        int m = mult[std::minmax(e.u, e.v)];
        if (m > best_mult) {
            best_mult = m;
            best_id = e.id;
        }
    }
    return best_id;
}

// h: a bridgeless 2-connected block, no loops
IntPoly flow_core(const Multigraph& block, const FlowOptions& opts) {
    Multigraph h = series_reduce(block);
    IntPoly factor = IntPoly::one();
    int loops = h.loop_count();
    if (loops > 0) {
        factor = x_minus(1).pow(static_cast<unsigned>(loops));
        h = without_loops(h);
    }
    if (h.vertex_count() <= 1 || h.edge_count() == 0) return factor;

    // h is now 3-edge-connected with >= 2 vertices and no loops
    std::string key;
    if (opts.memo) {
        key = canonical_key(h);
        if (auto hit = opts.memo->get(key)) return factor * *hit;
    }

    IntPoly val;
    bool done = false;
    if (opts.use_three_cut_decomposition) {
        CutsetReport rep = minimal_three_cutsets(h);
        for (const Cutset& cs : rep.cutsets) {
            if (!cs.proper) continue;
            Multigraph g1 = contract_set(h, cs.side_b);
            Multigraph g2 = contract_set(h, cs.side_a);
            IntPoly num = flow_poly_rec(g1, opts) * flow_poly_rec(g2, opts);
            try {
                val = divide_exact(num, x_minus(1) * x_minus(2));
            } catch (const NonDivisible&) {
                throw InternalInconsistency(
                    "3-cutset product formula produced a non-divisible product");
            }
            done = true;
            break;
        }
    }
    if (!done) {
        int e = pick_pivot(h);
        val = flow_poly_rec(contract_edge(h, e), opts) - flow_poly_rec(delete_edge(h, e), opts);
    }
    if (opts.memo) opts.memo->put(key, val);
    return factor * val;
}

IntPoly flow_poly_rec(const Multigraph& g, const FlowOptions& opts) {
    if (!bridges(g).empty()) return IntPoly::zero();
    IntPoly result = x_minus(1).pow(static_cast<unsigned>(g.loop_count()));
    Multigraph h = without_loops(g);
    for (const auto& blk : block_edge_sets(h))
        result *= flow_core(subgraph_of_edges(h, blk), opts);
    return result;
}

}  // namespace

IntPoly flow_poly(const Multigraph& g, const FlowOptions& opts) { return flow_poly_rec(g, opts); }

IntPoly flow_poly(const Multigraph& g) {
    MemoCache local;
    FlowOptions opts;
    opts.memo = &local;
    return flow_poly_rec(g, opts);
}

// ---- nowhere-zero flow counting oracle ----

long flow_count_oracle(const Multigraph& g, long k, long max_assignments) {
    if (k < 2) throw PreconditionViolated("group order must be at least 2");
    if (!is_connected(g)) throw PreconditionViolated("oracle requires a connected graph");
    if (!bridges(g).empty()) throw PreconditionViolated("oracle requires a bridgeless graph");

    int n = g.vertex_count(), m = g.edge_count();
    long nullity = m - n + 1;
    double assignments = 1;
    for (long i = 0; i < nullity; ++i) {
        assignments *= static_cast<double>(k);
        if (assignments > static_cast<double>(max_assignments))
            throw BudgetExceeded("k^nullity exceeds the oracle budget");
    }
    if (m == 0) return 1;  // single vertex: the empty flow

    // spanning tree by BFS from 0
    auto adj = g.adjacency();
    int max_id = 0;
    for (const Edge& e : g.edges()) max_id = std::max(max_id, e.id);
    std::vector<int> parent_edge(n, -1), order;
    std::vector<bool> seen(n, false);
    std::vector<bool> in_tree(static_cast<std::size_t>(max_id) + 1, false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        order.push_back(u);
        for (auto [w, id] : adj[u]) {
            if (!seen[w]) {
                seen[w] = true;
                parent_edge[w] = id;
                in_tree[id] = true;
                queue.push_back(w);
            }
        }
    }

    std::vector<Edge> cotree;
    for (const Edge& e : g.edges())
        if (!in_tree[e.id]) cotree.push_back(e);

    // enumerate nonzero values on cotree edges; tree edges are forced
    std::vector<long> val(cotree.size(), 1);
    long count = 0;
    std::vector<long> net(n);
    while (true) {
        std::fill(net.begin(), net.end(), 0L);
        for (std::size_t i = 0; i < cotree.size(); ++i) {
            net[cotree[i].v] += val[i];
            net[cotree[i].u] -= val[i];
        }
        bool ok = true;
        for (std::size_t oi = order.size(); oi-- > 1;) {
            int v = order[oi];
            const Edge& t = g.edge(parent_edge[v]);
            // value x on u->v adds x at v and removes x at u; solve for balance at v
            long x;
            int other;
            if (t.v == v) {
                x = ((-net[v]) % k + k) % k;
                other = t.u;
            } else {
                x = ((net[v]) % k + k) % k;
                other = t.v;
            }
            if (x == 0) {
                ok = false;
                break;
            }
            if (t.v == v) {
                net[v] += x;
                net[other] -= x;
            } else {
                net[v] -= x;
                net[other] += x;
            }
        }
        if (ok) ++count;
        // odometer over values 1..k-1
        std::size_t pos = 0;
        while (pos < val.size()) {
            if (++val[pos] < k) break;
            val[pos] = 1;
            ++pos;
        }
        if (pos == val.size()) break;
    }
    return count;
}

// ---- chromatic polynomial ----

namespace {

std::vector<Multigraph> component_subgraphs(const Multigraph& g) {
    std::vector<int> comp;
    int c = connected_components(g, comp);
    std::vector<std::vector<int>> verts(c);
    for (int v = 0; v < g.vertex_count(); ++v) verts[comp[v]].push_back(v);
    std::vector<Multigraph> out;
    for (int i = 0; i < c; ++i) {
        std::vector<int> remap(g.vertex_count(), -1);
        for (std::size_t j = 0; j < verts[i].size(); ++j) remap[verts[i][j]] = static_cast<int>(j);
        Multigraph h(static_cast<int>(verts[i].size()));
        for (const Edge& e : g.edges())
            if (comp[e.u] == i) h.add_edge_with_id(remap[e.u], remap[e.v], e.id);
        out.push_back(std::move(h));
    }
    return out;
}

IntPoly chromatic_rec(const Multigraph& g, MemoCache* memo) {
    if (g.loop_count() > 0) return IntPoly::zero();
    Multigraph h = simple_support(g);
    int n = h.vertex_count(), m = h.edge_count();
    if (m == 0) {
        IntPoly x(std::vector<BigInt>{0, 1});
        return x.pow(static_cast<unsigned>(n));
    }
    std::vector<int> comp;
    if (connected_components(h, comp) > 1) {
        IntPoly result = IntPoly::one();
        for (const auto& part : component_subgraphs(h)) result *= chromatic_rec(part, memo);
        return result;
    }
    if (m == n - 1) {  // tree
        IntPoly x(std::vector<BigInt>{0, 1});
        return x * x_minus(1).pow(static_cast<unsigned>(n - 1));
    }
    std::string key;
    if (memo) {
        key = std::string("P:") + canonical_key(h);
        if (auto hit = memo->get(key)) return *hit;
    }
    int pivot = h.edges().front().id;
    for (const Edge& e : h.edges()) pivot = std::min(pivot, e.id);
    IntPoly val =
        chromatic_rec(delete_edge(h, pivot), memo) - chromatic_rec(contract_edge(h, pivot), memo);
    if (memo) memo->put(key, val);
    return val;
}

}  // namespace

IntPoly chromatic_poly(const Multigraph& g, MemoCache* memo) { return chromatic_rec(g, memo); }

IntPoly chromatic_poly(const Multigraph& g) {
    MemoCache local;
    return chromatic_rec(g, &local);
}

// ---- statistics ----

FlowStats flow_stats(const Multigraph& g) {
    FlowStats s;
    std::vector<int> comp;
    int c = connected_components(g, comp);
    s.r = g.edge_count() - g.vertex_count() + c;
    s.degree_histogram = g.degree_histogram();
    for (const auto& [deg, count] : s.degree_histogram)
        if (deg >= 3) s.delta += static_cast<long>(deg - 3) * count;
    return s;
}

// ---- product formula ----

ProductFormulaCheck product_formula_check(const Multigraph& g, const std::array<int, 3>& cutset) {
    for (int id : cutset)
        if (!g.has_edge_id(id)) throw UnknownEdge(id);

    // removal must split into exactly two sides, each keeping an edge
    Multigraph rest(g.vertex_count());
    for (const Edge& e : g.edges()) {
        if (e.id == cutset[0] || e.id == cutset[1] || e.id == cutset[2]) continue;
        rest.add_edge_with_id(e.u, e.v, e.id);
    }
    std::vector<int> comp;
    int c = connected_components(rest, comp);
    std::vector<int> base_comp;
    int c0 = connected_components(g, base_comp);
    if (c != c0 + 1) throw NotAProperCutset("edge set is not a minimal cutset");
    // minimality: no proper subset disconnects
    for (int skip = 0; skip < 3; ++skip) {
        Multigraph two(g.vertex_count());
        for (const Edge& e : g.edges()) {
            bool in_cut = false;
            for (int j = 0; j < 3; ++j)
                if (j != skip && e.id == cutset[j]) in_cut = true;
            if (!in_cut) two.add_edge_with_id(e.u, e.v, e.id);
        }
        std::vector<int> comp2;
        if (connected_components(two, comp2) != c0)
            throw NotAProperCutset("a proper subset already disconnects");
    }
    const Edge& witness = g.edge(cutset[0]);
    std::vector<int> side_a, side_b;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (comp[v] == comp[witness.u])
            side_a.push_back(v);
        else if (comp[v] == comp[witness.v])
            side_b.push_back(v);
    }
    int edges_a = 0, edges_b = 0;
    for (const Edge& e : rest.edges()) {
        if (comp[e.u] == comp[witness.u] && comp[e.v] == comp[witness.u]) ++edges_a;
        if (comp[e.u] == comp[witness.v] && comp[e.v] == comp[witness.v]) ++edges_b;
    }
    if (edges_a < 1 || edges_b < 1) throw NotAProperCutset("a side of the cutset has no edge");

    FlowOptions plain;
    plain.use_three_cut_decomposition = false;
    MemoCache c1, c2, c3;
    ProductFormulaCheck out;
    plain.memo = &c1;
    out.f_g = flow_poly(g, plain);
    plain.memo = &c2;
    out.f_g1 = flow_poly(contract_set(g, side_b), plain);
    plain.memo = &c3;
    out.f_g2 = flow_poly(contract_set(g, side_a), plain);
    out.holds = out.f_g * (x_minus(1) * x_minus(2)) == out.f_g1 * out.f_g2;
    return out;
}

// ---- decomposition trace ----

namespace {

DecompositionNode trace_rec(const Multigraph& g);

DecompositionNode trace_core(const Multigraph& block) {
    Multigraph h = series_reduce(block);
    if (h.edge_count() != block.edge_count() || h.vertex_count() != block.vertex_count()) {
        DecompositionNode node;
        node.rule = "series";
        node.n = block.vertex_count();
        node.m = block.edge_count();
        node.children.push_back(trace_rec(h));
        node.value = node.children[0].value;
        return node;
    }
    if (h.loop_count() > 0 || h.edge_count() == 0) return trace_rec(h);

    DecompositionNode node;
    node.n = h.vertex_count();
    node.m = h.edge_count();
    CutsetReport rep = minimal_three_cutsets(h);
    for (const Cutset& cs : rep.cutsets) {
        if (!cs.proper) continue;
        node.rule = "three_cut";
        node.detail = "edges " + std::to_string(cs.edge_ids[0]) + "," +
                      std::to_string(cs.edge_ids[1]) + "," + std::to_string(cs.edge_ids[2]);
        node.children.push_back(trace_rec(contract_set(h, cs.side_b)));
        node.children.push_back(trace_rec(contract_set(h, cs.side_a)));
        node.value = divide_exact(node.children[0].value * node.children[1].value,
                                  x_minus(1) * x_minus(2));
        return node;
    }
    int e = pick_pivot(h);
    node.rule = "del_con";
    node.detail = "edge " + std::to_string(e);
    node.children.push_back(trace_rec(contract_edge(h, e)));
    node.children.push_back(trace_rec(delete_edge(h, e)));
    node.value = node.children[0].value - node.children[1].value;
    return node;
}

DecompositionNode trace_rec(const Multigraph& g) {
    DecompositionNode node;
    node.n = g.vertex_count();
    node.m = g.edge_count();
    if (!bridges(g).empty()) {
        node.rule = "zero_bridge";
        node.value = IntPoly::zero();
        return node;
    }
    int loops = g.loop_count();
    Multigraph h = without_loops(g);
    auto blks = block_edge_sets(h);
    if (loops > 0) {
        node.rule = "loops";
        node.detail = std::to_string(loops) + " loop factor(s) of (x-1)";
        if (!blks.empty()) {
            node.children.push_back(trace_rec(h));
            node.value = x_minus(1).pow(static_cast<unsigned>(loops)) * node.children[0].value;
        } else {
            node.value = x_minus(1).pow(static_cast<unsigned>(loops));
        }
        return node;
    }
    if (blks.empty()) {
        node.rule = "leaf";
        node.value = IntPoly::one();
        return node;
    }
    if (blks.size() > 1) {
        node.rule = "blocks";
        node.value = IntPoly::one();
        for (const auto& blk : blks) {
            node.children.push_back(trace_core(subgraph_of_edges(h, blk)));
            node.value *= node.children.back().value;
        }
        return node;
    }
    return trace_core(subgraph_of_edges(h, blks[0]));
}

}  // namespace

DecompositionNode decompose_trace(const Multigraph& g) { return trace_rec(g); }

}  // namespace flowroots
