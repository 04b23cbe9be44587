#ifndef FLOWROOTS_TESTS_FIXTURES_HPP
#define FLOWROOTS_TESTS_FIXTURES_HPP

#include <array>
#include <utility>
#include <vector>

#include "flowroots/graph.hpp"

namespace flowroots::fixtures {

inline Multigraph k4() {
    return Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline Multigraph k5() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) es.push_back({i, j});
    return Multigraph(5, es);
}

inline Multigraph k33() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) es.push_back({i, j});
    return Multigraph(6, es);
}

inline Multigraph cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return Multigraph(n, es);
}

inline Multigraph path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Multigraph(n, es);
}

/// two vertices joined by k parallel edges
inline Multigraph theta(int k) {
    std::vector<std::pair<int, int>> es(k, {0, 1});
    return Multigraph(2, es);
}

inline Multigraph prism() {
    return Multigraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

inline Multigraph petersen() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) es.push_back({i, (i + 1) % 5});      // outer cycle
    for (int i = 0; i < 5; ++i) es.push_back({i, i + 5});            // spokes
    for (int i = 0; i < 5; ++i) es.push_back({5 + i, 5 + (i + 2) % 5});  // pentagram
    return Multigraph(10, es);
}

/// apex vertex 0 joined to the path 1-2-3-4
inline Multigraph fan4() {
    return Multigraph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
}

/// 18-edge graph with one proper 3-cutset splitting off a triangle side;
/// degrees: eight 3s, one 5, one 7.
inline Multigraph figure1() {
    return Multigraph(10, {
                              {1, 8},  // 0
                              {8, 9},  // 1
                              {9, 1},  // 2
                              {4, 8},  // 3
                              {4, 9},  // 4
                              {0, 7},  // 5
                              {7, 4},  // 6
                              {5, 7},  // 7
                              {0, 1},  // 8
                              {1, 2},  // 9
                              {2, 3},  // 10
                              {3, 4},  // 11
                              {4, 5},  // 12
                              {5, 0},  // 13
                              {2, 6},  // 14
                              {6, 4},  // 15
                              {3, 6},  // 16
                              {1, 4},  // 17
                          });
}

/// the cutset drawn dashed: separates vertices {2, 3, 6} (a triangle)
inline std::array<int, 3> figure1_cutset() { return {9, 11, 15}; }

inline Multigraph triangle_with_pendant() {
    return Multigraph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
}

/// K4 with edge {2,3} subdivided through vertex 4
inline Multigraph k4_subdivided() {
    return Multigraph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {4, 3}});
}

}  // namespace flowroots::fixtures

#endif
