#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ild/plmap.hpp"

namespace ild {

inline constexpr long long kDefaultBudget = 1'000'000;

// f^n restricted to [x0,x1] is the single affine segment through
// (x0,y0), (x1,y1). Pieces of an iterate tile [0,1].
struct LinearPiece {
    Rat x0, x1, y0, y1;
    Rat slope() const { return (y1 - y0) / (x1 - x0); }
    Rat at(const Rat& x) const { return y0 + (x - x0) * (y1 - y0) / (x1 - x0); }
    Rat invert(const Rat& y) const { return x0 + (y - y0) * (x1 - x0) / (y1 - y0); }
    RatInterval domain() const { return RatInterval(x0, x1); }
    RatInterval value_range() const { return RatInterval::sorted(y0, y1); }
    bool on_diagonal() const { return y0 == x0 && y1 == x1; }
};

class LinearPartition {
public:
    int n = 0;
    std::vector<LinearPiece> pieces;

    std::size_t piece_index_at(const Rat& x, bool prefer_left = false) const {
        if (x < 0 || x > 1) throw DomainError("point outside [0,1]");
        std::size_t lo = 0, hi = pieces.size() - 1;
        while (hi > lo) {
            std::size_t mid = (lo + hi + 1) / 2;
            if (pieces[mid].x0 <= x)
                lo = mid;
            else
                hi = mid - 1;
        }
        if (prefer_left && lo > 0 && pieces[lo].x0 == x) return lo - 1;
        return lo;
    }

    Rat eval(const Rat& x) const { return pieces[piece_index_at(x)].at(x); }

    RatInterval image_of(const RatInterval& d) const {
        std::size_t i = piece_index_at(d.lo);
        Rat lo = pieces[i].at(d.lo), hi = lo;
        for (; i < pieces.size() && pieces[i].x0 < d.hi; ++i) {
            const LinearPiece& p = pieces[i];
            Rat a = p.at(rat_max(p.x0, d.lo));
            Rat b = p.at(rat_min(p.x1, d.hi));
            lo = rat_min(lo, rat_min(a, b));
            hi = rat_max(hi, rat_max(a, b));
        }
        return RatInterval(lo, hi);
    }

    std::vector<Rat> preimages(const Rat& y) const {
        std::vector<Rat> out;
        for (const auto& p : pieces) {
            if (!p.value_range().contains(y)) continue;
            Rat x = p.invert(y);
            if (out.empty() || out.back() != x) out.push_back(x);
        }
        return out;
    }

    std::vector<RatInterval> preimage_components(const RatInterval& j) const {
        std::vector<RatInterval> comps;
        for (const auto& p : pieces) {
            auto hit = intersect(p.value_range(), j);
            if (!hit) continue;
            RatInterval dom = RatInterval::sorted(p.invert(hit->lo), p.invert(hit->hi));
            if (!comps.empty() && comps.back().hi >= dom.lo)
                comps.back() = hull(comps.back(), dom);
            else
                comps.push_back(dom);
        }
        return comps;
    }
};

// Exact piece partition of f^n. Built iteratively: pieces of f^{j+1} arise by
// splitting each piece of f^j at the preimages of f's breakpoints that fall
// strictly inside its value range. Throws BudgetExceeded when the piece count
// would pass `budget`.
inline LinearPartition iterate_pieces(const PLMap& f, int n, long long budget = kDefaultBudget) {
    if (n < 1) throw DomainError("iterate count must be >= 1");
    LinearPartition part;
    part.n = 1;
    for (std::size_t i = 0; i < f.piece_count(); ++i) {
        auto p = f.piece(i);
        part.pieces.push_back(LinearPiece{p.x0, p.x1, p.y0, p.y1});
    }
    const auto& bps = f.breakpoints();
    for (int level = 2; level <= n; ++level) {
        std::vector<LinearPiece> next;
        next.reserve(part.pieces.size());
        for (const LinearPiece& p : part.pieces) {
            // Split points: preimages of breakpoint abscissas interior to the range.
            std::vector<Rat> cuts;
            RatInterval range = p.value_range();
            for (const auto& bp : bps)
                if (range.interior_contains(bp.first)) cuts.push_back(p.invert(bp.first));
            std::sort(cuts.begin(), cuts.end());
            Rat x_prev = p.x0, y_prev = p.y0;
            cuts.push_back(p.x1);
            for (const Rat& x : cuts) {
                Rat y = (x == p.x1) ? p.y1 : p.at(x);
                next.push_back(LinearPiece{x_prev, x, f.eval(y_prev), f.eval(y)});
                if (static_cast<long long>(next.size()) > budget)
                    throw BudgetExceeded(static_cast<long long>(next.size()));
                x_prev = x;
                y_prev = y;
            }
        }
        part.pieces = std::move(next);
        part.n = level;
    }
    return part;
}

// Maximal monotone laps of f^n with exact images; merges piece runs of equal
// slope sign. Lap count of f^n never exceeds (lap count of f)^n.
struct BranchPartition {
    int n = 0;
    struct Lap {
        RatInterval domain;
        RatInterval image;
        int direction;
    };
    std::vector<Lap> laps;

    // Image value at the fold between laps i and i+1.
    Rat fold_value(std::size_t i) const {
        return laps[i].direction > 0 ? laps[i].image.hi : laps[i].image.lo;
    }
};

inline BranchPartition branch_partition_from(const LinearPartition& part) {
    BranchPartition bp;
    bp.n = part.n;
    std::size_t i = 0;
    while (i < part.pieces.size()) {
        int dir = rat_sign(part.pieces[i].y1 - part.pieces[i].y0);
        std::size_t j = i;
        while (j + 1 < part.pieces.size() &&
               rat_sign(part.pieces[j + 1].y1 - part.pieces[j + 1].y0) == dir)
            ++j;
        RatInterval dom(part.pieces[i].x0, part.pieces[j].x1);
        RatInterval img = RatInterval::sorted(part.pieces[i].y0, part.pieces[j].y1);
        bp.laps.push_back(BranchPartition::Lap{dom, img, dir});
        i = j + 1;
    }
    return bp;
}

inline BranchPartition iterate_partition(const PLMap& f, int n,
                                         long long budget = kDefaultBudget) {
    return branch_partition_from(iterate_pieces(f, n, budget));
}

// Exact solutions of f^k(x) = x. Pieces lying identically on the diagonal are
// reported as segments; isolated solutions as points (segment endpoints and
// interior are not duplicated into the point list).
struct FixedPoints {
    std::vector<Rat> points;
    std::vector<RatInterval> segments;

    bool member(const Rat& x) const {
        if (std::binary_search(points.begin(), points.end(), x)) return true;
        for (const auto& s : segments)
            if (s.contains(x)) return true;
        return false;
    }
    bool empty() const { return points.empty() && segments.empty(); }
};

inline FixedPoints fixed_points_of(const LinearPartition& part) {
    FixedPoints out;
    IntervalSet segs;
    std::vector<Rat> pts;
    for (const auto& p : part.pieces) {
        if (p.on_diagonal()) {
            segs.insert(p.domain());
            continue;
        }
        // x = y0 + (x - x0) * m  =>  x (1 - m) = y0 - m x0
        Rat m = p.slope();
        if (m == 1) continue;  // parallel to the diagonal, off it
        Rat x = (p.y0 - m * p.x0) / (1 - m);
        if (p.domain().contains(x)) pts.push_back(x);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const auto& s : segs.parts()) out.segments.push_back(s);
    for (const auto& x : pts) {
        bool inside_segment = false;
        for (const auto& s : out.segments)
            if (s.contains(x)) inside_segment = true;
        if (!inside_segment) out.points.push_back(x);
    }
    return out;
}

inline FixedPoints fixed_points(const PLMap& f, int k, long long budget = kDefaultBudget) {
    return fixed_points_of(iterate_pieces(f, k, budget));
}

// Smallest |slope| over the pieces of f itself.
inline Rat min_slope_magnitude(const PLMap& f) {
    Rat best = rat_abs(f.piece(0).slope());
    for (std::size_t i = 1; i < f.piece_count(); ++i)
        best = rat_min(best, rat_abs(f.piece(i).slope()));
    return best;
}

// Exact image of an interval set, as a canonical set.
inline IntervalSet image_of_set(const PLMap& f, const IntervalSet& s) {
    IntervalSet out;
    for (const auto& p : s.parts()) out.insert(f.image(p));
    return out;
}

}  // namespace ild
