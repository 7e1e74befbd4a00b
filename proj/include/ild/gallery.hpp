#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ild/plmap.hpp"

namespace ild {

// A built-in example map together with the claims the test-suite pins on it.
// `expected` is the verdict/value the engine is expected to produce;
// `basis` says where the expectation comes from (construction, exact
// computation, or literature attribution).
struct GalleryEntry {
    std::string name;
    std::string description;
    PLMap map;
    struct Claim {
        std::string property;
        std::string expected;
        std::string basis;
    };
    std::vector<Claim> claims;
    bool truncation = false;  // finite stand-in for an infinite-breakpoint construction
};

namespace gallery_detail {

inline PLMap make(std::initializer_list<std::pair<long long, long long>> xs,
                  std::initializer_list<std::pair<long long, long long>> ys) {
    std::vector<PLMap::Point> pts;
    auto xi = xs.begin();
    auto yi = ys.begin();
    for (; xi != xs.end(); ++xi, ++yi)
        pts.emplace_back(Rat(xi->first, xi->second), Rat(yi->first, yi->second));
    return PLMap::create(std::move(pts));
}

// Full tent map: (0,0) (1/2,1) (1,0).
inline PLMap tent2() { return make({{0, 1}, {1, 2}, {1, 1}}, {{0, 1}, {1, 1}, {0, 1}}); }

// Unimodal map whose critical point is exactly 2-periodic: 1/2 -> 1 -> 1/2.
inline PLMap u2() { return make({{0, 1}, {1, 2}, {1, 1}}, {{0, 1}, {1, 1}, {1, 2}}); }

// Minc's map (2001), proposed around the Nadler-Quinn problem. Long-branched:
// iterate branch lengths never drop below 1/3, yet level-1 zigzags exist.
inline PLMap minc() {
    return make({{0, 1}, {1, 3}, {5, 12}, {7, 12}, {2, 3}, {1, 1}},
                {{0, 1}, {1, 1}, {1, 3}, {2, 3}, {0, 1}, {1, 1}});
}

// Arc whose interior point (1/2,1/2,...) has degenerate basic arcs: the
// middle lap contracts onto the fixed point 1/2 with slope -1/3.
inline PLMap fig4() {
    return make({{0, 1}, {1, 3}, {2, 3}, {1, 1}}, {{0, 1}, {5, 9}, {4, 9}, {1, 1}});
}

// Middle lap is an exact homeomorphic involution of [1/3,2/3]; produces a
// basic-arc endpoint that is not an endpoint of the space.
inline PLMap fig6() {
    return make({{0, 1}, {1, 3}, {2, 3}, {1, 1}}, {{0, 1}, {2, 3}, {1, 3}, {1, 1}});
}

// Two-sided spiral: both critical orbits converge to interior fixed points
// 1/9 and 8/9, the critical set is never revisited, and the inverse limit is
// an arc with endpoints over 1/9 and 8/9.
inline PLMap fig7() {
    return make({{0, 1}, {1, 3}, {2, 3}, {1, 1}}, {{1, 6}, {0, 1}, {1, 1}, {5, 6}});
}

// Three invariant thirds: two Knaster factors glued by a double sin(1/x)
// part; the inverse limit has no endpoints although the critical 2-cycle
// {4/9, 5/9} meets the critical set. Coordinates are kept verbatim from the
// source drawing; the vertices at (1/3,1/3) and (2/3,2/3) are collinear and
// normalize away, so 1/3 and 2/3 are not critical points of this map --
// the genuine 2-periodic critical points are 4/9 and 5/9.
inline PLMap fig8() {
    return make({{0, 1}, {1, 6}, {1, 3}, {4, 9}, {5, 9}, {2, 3}, {5, 6}, {1, 1}},
                {{1, 3}, {0, 1}, {1, 3}, {5, 9}, {4, 9}, {2, 3}, {1, 1}, {2, 3}});
}

// Depth-k truncation of a self-similar cascade of zigzag levels accumulating
// at 0 (full version has infinitely many breakpoints). Level i occupies
// [t_{i+1}, t_i] with t_i = (2/3)^i, wiggles up-down-up into [t_i, t_{i-1}],
// level 0 maps [2/3,1] onto [0,1]; the tail below t_k is one linear piece.
inline PLMap fig5_truncation(int k) {
    if (k < 1 || k > 16) throw DomainError("fig5 truncation depth must be in 1..16");
    std::vector<PLMap::Point> pts;
    std::vector<Rat> t(static_cast<std::size_t>(k) + 1);
    t[0] = 1;
    for (int i = 1; i <= k; ++i) t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i - 1)] * Rat(2, 3);
    pts.emplace_back(Rat(0), Rat(0));
    pts.emplace_back(t[static_cast<std::size_t>(k)], t[static_cast<std::size_t>(k - 1)]);
    for (int i = k - 1; i >= 1; --i) {
        const Rat& ti = t[static_cast<std::size_t>(i)];
        const Rat& tn = t[static_cast<std::size_t>(i + 1)];
        const Rat& tp = t[static_cast<std::size_t>(i - 1)];
        pts.emplace_back(tn + ti / 9, tp);
        pts.emplace_back(tn + ti * Rat(2, 9), ti * Rat(9, 8));
        pts.emplace_back(ti, tp);
    }
    pts.emplace_back(Rat(5, 6), Rat(0));
    pts.emplace_back(Rat(1), Rat(1));
    return PLMap::create(std::move(pts));
}

// Depth-k truncation of the cascade with peaks (2^-n, 2^-(n-1)) and fixed
// valleys on the diagonal at (5/4)*2^-n (full version accumulates at 0 and
// yields countably many endpoints). The tail below 2^-k is one linear piece.
inline PLMap fig9_truncation(int k) {
    if (k < 1 || k > 16) throw DomainError("fig9 truncation depth must be in 1..16");
    std::vector<PLMap::Point> pts;
    pts.emplace_back(Rat(0), Rat(0));
    Rat p = Rat(1);
    for (int i = 0; i < k; ++i) p /= 2;  // 2^-k
    pts.emplace_back(p, p * 2);
    for (int n = k - 1; n >= 1; --n) {
        Rat peak = p * 2;           // 2^-n after the update below
        Rat valley = p * Rat(5, 4);  // between 2^-(n+1)=p and 2^-n
        pts.emplace_back(valley, valley);
        pts.emplace_back(peak, peak * 2);
        p = peak;
    }
    pts.emplace_back(Rat(1), Rat(0));
    return PLMap::create(std::move(pts));
}

}  // namespace gallery_detail

inline std::vector<GalleryEntry> gallery() {
    using gallery_detail::make;
    std::vector<GalleryEntry> g;

    g.push_back(GalleryEntry{
        "t2",
        "full tent map",
        gallery_detail::tent2(),
        {{"zigzag-free", "proven", "unimodal maps cannot form zigzags (fewer than three laps)"},
         {"leo", "proven (markov)", "critical orbit 1/2 -> 1 -> 0 is finite; covering relation is primitive; slope 2"},
         {"omega", "{0} exact", "all critical orbits land on the fixed point 0"},
         {"retractable", "no monotone pull-back from the cover at any depth",
          "omega limit set of the critical set lies in {0,1}"},
         {"recurrence(1/2)", "refuted", "orbit of 1/2 is 1, 0, 0, ... and never returns"}},
        false});

    g.push_back(GalleryEntry{
        "minc",
        "long-branched map with level-1 zigzags",
        gallery_detail::minc(),
        {{"long-zigzag", "proven, epsilon >= 1/3",
          "classical example (Minc 2001); branch images of every iterate have length >= 1/3"},
         {"zigzag-free", "refuted at level 1", "fold pair inside [1/3,2/3]"}},
        false});

    g.push_back(GalleryEntry{
        "fig4",
        "arc with an interior point whose basic arcs are all degenerate",
        gallery_detail::fig4(),
        {{"arc", "proven", "both complementary components funnel into the fixed point 1/2"},
         {"b-endpoint(1/2,1/2,...)", "proven", "middle lap contracts with slope -1/3; windows shrink to the point"},
         {"double-spiral(1/2,1/2,...)", "proven", "two-sided onto-chains abut at the fixed point"},
         {"retractable", "proven", "constant backward orbit at 1/2 with the critical-free middle lap"}},
        false});

    g.push_back(GalleryEntry{
        "fig6",
        "involution middle lap; basic-arc endpoint that is not an endpoint",
        gallery_detail::fig6(),
        {{"leo", "refuted", "middle third is invariant"},
         {"arc", "refuted", "points of one component stop on different fixed points of the square"}},
        false});

    g.push_back(GalleryEntry{
        "fig7",
        "two-sided spiral onto an arc",
        gallery_detail::fig7(),
        {{"omega-meets-critical-set", "empty intersection, exact",
          "critical orbits converge to 1/9 and 8/9 which are not critical"},
         {"arc", "proven, endpoints over {1/9, 8/9}", "exact attraction certificates"}},
        false});

    g.push_back(GalleryEntry{
        "fig8",
        "three invariant thirds, no endpoints, recurrent critical 2-cycle",
        gallery_detail::fig8(),
        {{"leo", "refuted, invariant interval [0,1/3]", "f([0,1/3]) = [0,1/3]"},
         {"arc", "refuted", "period >= 2 points of the square inside [0,1/3]"},
         {"omega-meets-critical-set", "nonempty, exact", "critical points 4/9, 5/9 form an exact 2-cycle"},
         {"coordinate-note",
          "source drawing marks 1/3 and 2/3 as 2-periodic critical points, but its own coordinates "
          "fix both and make them collinear vertices; the genuine critical 2-cycle is {4/9, 5/9}",
          "verbatim coordinates kept; collinear vertices normalize away"}},
        false});

    g.push_back(GalleryEntry{
        "fig5@3",
        "depth-3 truncation of the self-similar double-spiral cascade",
        gallery_detail::fig5_truncation(3),
        {{"truncation", "qualitative only",
          "full construction has infinitely many breakpoints accumulating at 0"}},
        true});

    g.push_back(GalleryEntry{
        "fig9@4",
        "depth-4 truncation of the diagonal-valley cascade",
        gallery_detail::fig9_truncation(4),
        {{"truncation", "qualitative only",
          "full construction has infinitely many breakpoints accumulating at 0"}},
        true});

    g.push_back(GalleryEntry{
        "u2",
        "unimodal map with exactly 2-periodic critical point",
        gallery_detail::u2(),
        {{"recurrence(1/2)", "proven", "orbit of 1/2 is the exact cycle {1/2, 1}"},
         {"endpoint-construction", "output passes the basic-arc endpoint test",
          "backward orbit through the critical cycle"}},
        false});

    return g;
}

// Resolves a gallery name; understands parameterized truncations "fig5@k"
// and "fig9@k" for any k in 1..16.
inline std::optional<GalleryEntry> find_gallery(const std::string& name) {
    auto parse_depth = [](const std::string& s) -> std::optional<int> {
        if (s.empty() || s.size() > 2) return std::nullopt;
        int v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') return std::nullopt;
            v = v * 10 + (c - '0');
        }
        return v;
    };
    for (const auto& prefix : {std::string("fig5@"), std::string("fig9@")}) {
        if (name.rfind(prefix, 0) == 0) {
            auto k = parse_depth(name.substr(prefix.size()));
            if (!k || *k < 1 || *k > 16) return std::nullopt;
            PLMap m = prefix == "fig5@" ? gallery_detail::fig5_truncation(*k)
                                        : gallery_detail::fig9_truncation(*k);
            return GalleryEntry{name,
                                "depth-" + std::to_string(*k) + " truncation",
                                std::move(m),
                                {{"truncation", "qualitative only",
                                  "finite stand-in for an infinite-breakpoint construction"}},
                                true};
        }
    }
    for (auto& e : gallery())
        if (e.name == name) return e;
    return std::nullopt;
}

}  // namespace ild
