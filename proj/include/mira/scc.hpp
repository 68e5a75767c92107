#pragma once

#include <algorithm>
#include <functional>
#include <vector>

namespace mira {

// Strongly connected components of a digraph on {0..n-1} (Tarjan, iterative
// enough for our graph sizes via recursion).  Components are returned with
// each component's vertex list sorted, and components sorted by smallest
// vertex, so the output is deterministic.
inline std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    std::vector<std::vector<int>> comps;
    int counter = 0;
    std::function<void(int)> dfs = [&](int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int u : adj[v]) {
            if (index[u] == -1) {
                dfs(u);
                low[v] = std::min(low[v], low[u]);
            } else if (on_stack[u]) {
                low[v] = std::min(low[v], index[u]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<int> comp;
            for (;;) {
                int u = stack.back();
                stack.pop_back();
                on_stack[u] = false;
                comp.push_back(u);
                if (u == v) break;
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[v] == -1) dfs(v);
    std::sort(comps.begin(), comps.end());
    return comps;
}

}  // namespace mira
