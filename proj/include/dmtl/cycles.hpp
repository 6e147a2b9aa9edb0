#pragma once

// Strongly connected components (Tarjan) and elementary circuits (Johnson)
// over the dependency multigraph. Parallel edges give distinct cycles.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <set>
#include <vector>

#include "dmtl/dependency_graph.hpp"

namespace dmtl {

inline constexpr std::size_t kDefaultCycleCap = 100000;

/// Component id per node; ids are a reverse topological order of the
/// condensation (sinks first), as produced by Tarjan's algorithm.
struct SccResult {
    std::vector<std::size_t> component;
    std::size_t count = 0;
};

/// `edge_on` masks out edges (nullptr keeps all); `node_on` likewise.
inline SccResult strongly_connected_components(const DepGraph& g, const std::vector<bool>* edge_on = nullptr,
                                               const std::vector<bool>* node_on = nullptr) {
    const std::size_t n = g.nodes.size();
    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (edge_on && !(*edge_on)[e]) continue;
        const auto& ed = g.edges[e];
        if (node_on && (!(*node_on)[ed.from] || !(*node_on)[ed.to])) continue;
        adj[ed.from].push_back(ed.to);
    }
    SccResult res;
    res.component.assign(n, kUnset);
    std::vector<std::size_t> index(n, kUnset), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    std::size_t counter = 0;
    // iterative Tarjan: (node, next child position)
    std::vector<std::pair<std::size_t, std::size_t>> call;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnset) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            if (pos < adj[v].size()) {
                std::size_t w = adj[v][pos++];
                if (index[w] == kUnset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            std::size_t done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                for (;;) {
                    std::size_t w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    res.component[w] = res.count;
                    if (w == done) break;
                }
                ++res.count;
            }
        }
    }
    return res;
}

struct Cycle {
    std::vector<std::size_t> edges;  // consecutive edge indices
    std::vector<std::size_t> nodes;  // nodes[i] = edges[i].from
    std::size_t scc = 0;
    Interval interval_weight = Interval::point(0);
    TimePoint shift_sum = 0;
};

namespace detail {

/// Sum of shift labels; a cycle mixing +inf and -inf counts as +inf (it can
/// never contribute a finite period).
inline TimePoint shift_total(const DepGraph& g, const std::vector<std::size_t>& edges) {
    bool pos_inf = false, neg_inf = false;
    Rational sum = 0;
    for (auto e : edges) {
        const TimePoint& s = g.edges[e].shift_label;
        if (s.is_pos_inf()) pos_inf = true;
        else if (s.is_neg_inf()) neg_inf = true;
        else sum += s.value();
    }
    if (pos_inf) return TimePoint::infinity();
    if (neg_inf) return TimePoint::neg_infinity();
    return TimePoint(sum);
}

inline Cycle make_cycle(const DepGraph& g, std::vector<std::size_t> edges, std::size_t scc) {
    Cycle c;
    c.scc = scc;
    c.interval_weight = Interval::point(0);
    for (auto e : edges) {
        c.nodes.push_back(g.edges[e].from);
        c.interval_weight = minkowski_sum(c.interval_weight, g.edges[e].interval_label);
    }
    c.shift_sum = shift_total(g, edges);
    c.edges = std::move(edges);
    return c;
}

class Johnson {
  public:
    Johnson(const DepGraph& g, const std::vector<bool>* edge_on, std::size_t cap,
            std::function<void(Cycle&&)> sink)
        : g_(g), edge_on_(edge_on), cap_(cap), sink_(std::move(sink)) {}

    void run() {
        const std::size_t n = g_.nodes.size();
        scc_ = strongly_connected_components(g_, edge_on_);
        // parallel edges between two distinct nodes, and self loops
        std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> between;
        for (std::size_t e = 0; e < g_.edges.size(); ++e) {
            if (edge_on_ && !(*edge_on_)[e]) continue;
            between[{g_.edges[e].from, g_.edges[e].to}].push_back(e);
        }
        parallel_ = std::move(between);
        succ_.assign(n, {});
        for (const auto& [key, es] : parallel_)
            if (key.first != key.second && scc_.component[key.first] == scc_.component[key.second])
                succ_[key.first].push_back(key.second);

        for (std::size_t v = 0; v < n; ++v)
            if (auto it = parallel_.find({v, v}); it != parallel_.end())
                for (auto e : it->second) emit({e});

        blocked_.assign(n, false);
        block_map_.assign(n, {});
        for (start_ = 0; start_ < n; ++start_) {
            if (succ_[start_].empty()) continue;
            for (std::size_t v = start_; v < n; ++v) {
                blocked_[v] = false;
                block_map_[v].clear();
            }
            circuit(start_);
        }
    }

  private:
    bool allowed(std::size_t w) const {
        return w >= start_ && scc_.component[w] == scc_.component[start_];
    }

    void unblock(std::size_t u) {
        std::vector<std::size_t> work{u};
        while (!work.empty()) {
            std::size_t x = work.back();
            work.pop_back();
            if (!blocked_[x]) continue;
            blocked_[x] = false;
            for (auto w : block_map_[x]) work.push_back(w);
            block_map_[x].clear();
        }
    }

    bool circuit(std::size_t v) {
        bool found = false;
        path_.push_back(v);
        blocked_[v] = true;
        for (auto w : succ_[v]) {
            if (!allowed(w)) continue;
            if (w == start_) {
                expand();
                found = true;
            } else if (!blocked_[w] && circuit(w)) {
                found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (auto w : succ_[v])
                if (allowed(w)) block_map_[w].insert(v);
        }
        path_.pop_back();
        return found;
    }

    /// Emits one cycle per choice of parallel edges along the node path.
    void expand() {
        std::vector<const std::vector<std::size_t>*> hops;
        for (std::size_t i = 0; i < path_.size(); ++i)
            hops.push_back(&parallel_.at({path_[i], path_[(i + 1) % path_.size()]}));
        std::vector<std::size_t> pick(hops.size(), 0);
        for (;;) {
            std::vector<std::size_t> edges;
            for (std::size_t i = 0; i < hops.size(); ++i) edges.push_back((*hops[i])[pick[i]]);
            emit(std::move(edges));
            std::size_t k = hops.size();
            while (k > 0 && ++pick[k - 1] == hops[k - 1]->size()) pick[--k] = 0;
            if (k == 0) break;
        }
    }

    void emit(std::vector<std::size_t> edges) {
        if (++count_ > cap_)
            throw CapExceeded("simple-cycle enumeration exceeded the cap of " + std::to_string(cap_) + " cycles");
        std::size_t scc = scc_.component[g_.edges[edges.front()].from];
        sink_(make_cycle(g_, std::move(edges), scc));
    }

    const DepGraph& g_;
    const std::vector<bool>* edge_on_;
    std::size_t cap_;
    std::function<void(Cycle&&)> sink_;
    SccResult scc_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> parallel_;
    std::vector<std::vector<std::size_t>> succ_;
    std::vector<bool> blocked_;
    std::vector<std::set<std::size_t>> block_map_;
    std::vector<std::size_t> path_;
    std::size_t start_ = 0;
    std::size_t count_ = 0;
};

}  // namespace detail

/// Every elementary cycle exactly once (rotation starting at its smallest
/// node). Throws CapExceeded beyond `cap` cycles.
inline std::vector<Cycle> simple_cycles(const DepGraph& g, std::size_t cap = kDefaultCycleCap,
                                        const std::vector<bool>* edge_on = nullptr) {
    std::vector<Cycle> out;
    detail::Johnson(g, edge_on, cap, [&](Cycle&& c) { out.push_back(std::move(c)); }).run();
    return out;
}

}  // namespace dmtl
