#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "ild/interval.hpp"
#include "ild/rat.hpp"

namespace ild {

// Continuous surjective piecewise-linear self-map of [0,1], given by finitely
// many breakpoints (x, f(x)) with 0 = x_0 < ... < x_m = 1.
//
// Construction invariants:
//   - surjective: min breakpoint value 0 and max value 1 (extrema of a PL
//     graph sit on breakpoints, so this is the full check);
//   - no flat segment: consecutive values differ;
//   - collinear interior breakpoints are normalized away, so every interior
//     breakpoint is a genuine corner.
//
// Critical points are {0, 1} plus the interior breakpoints where the slope
// changes sign; a corner where the slope merely changes magnitude is not
// critical (the map stays locally injective there).
class PLMap {
public:
    using Point = std::pair<Rat, Rat>;

    struct Piece {
        Rat x0, x1;  // domain, x0 < x1
        Rat y0, y1;  // values at the domain ends
        Rat slope() const { return (y1 - y0) / (x1 - x0); }
        Rat at(const Rat& x) const { return y0 + (x - x0) * (y1 - y0) / (x1 - x0); }
        // Unique solution of piece(x) = y; caller guarantees y in value range.
        Rat invert(const Rat& y) const { return x0 + (y - y0) * (x1 - x0) / (y1 - y0); }
        RatInterval value_range() const { return RatInterval::sorted(y0, y1); }
    };

    // Maximal interval of monotonicity together with its exact image.
    struct Lap {
        RatInterval domain;
        RatInterval image;
        int direction;  // +1 increasing, -1 decreasing
    };

    static PLMap create(std::vector<Point> pts) {
        validate_raw(pts);
        normalize_collinear(pts);
        return PLMap(std::move(pts));
    }

    const std::vector<Point>& breakpoints() const { return pts_; }
    std::size_t piece_count() const { return pts_.size() - 1; }

    Piece piece(std::size_t i) const {
        return Piece{pts_[i].first, pts_[i + 1].first, pts_[i].second, pts_[i + 1].second};
    }

    // Index of a piece whose domain contains x. At a shared breakpoint the
    // right piece wins unless prefer_left is set (or x == 1).
    std::size_t piece_index_at(const Rat& x, bool prefer_left = false) const {
        if (x < 0 || x > 1) throw DomainError("point outside [0,1]");
        std::size_t lo = 0, hi = pts_.size() - 1;  // pts_[lo].x <= x <= pts_[hi].x
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            if (pts_[mid].first <= x)
                lo = mid;
            else
                hi = mid;
        }
        if (prefer_left && lo > 0 && pts_[lo].first == x) return lo - 1;
        return lo;
    }

    Rat eval(const Rat& x) const {
        std::size_t i = piece_index_at(x);
        return piece(i).at(x);
    }

    Rat eval_iter(const Rat& x, int n) const {
        Rat y = x;
        for (int i = 0; i < n; ++i) y = eval(y);
        return y;
    }

    // {0, 1} plus interior breakpoints with a slope sign change, ascending.
    const std::vector<Rat>& critical_set() const { return critical_; }

    bool is_critical(const Rat& x) const {
        return std::binary_search(critical_.begin(), critical_.end(), x);
    }

    // Critical neighbours of x: the largest critical point <= x and the
    // smallest >= x. For x itself critical both sides return x.
    Rat critical_left_of(const Rat& x) const {
        auto it = std::upper_bound(critical_.begin(), critical_.end(), x);
        return *std::prev(it);
    }
    Rat critical_right_of(const Rat& x) const {
        auto it = std::lower_bound(critical_.begin(), critical_.end(), x);
        return *it;
    }

    // Maximal monotone laps, ascending; adjacent laps share one endpoint.
    const std::vector<Lap>& laps() const { return laps_; }

    // At a lap boundary the right lap wins unless prefer_left is set.
    std::size_t lap_index_at(const Rat& x, bool prefer_left = false) const {
        if (x < 0 || x > 1) throw DomainError("point outside [0,1]");
        std::size_t lo = 0, hi = laps_.size() - 1;
        while (hi > lo) {
            std::size_t mid = (lo + hi + 1) / 2;
            if (laps_[mid].domain.lo <= x)
                lo = mid;
            else
                hi = mid - 1;
        }
        if (prefer_left && lo > 0 && laps_[lo].domain.lo == x) return lo - 1;
        return lo;
    }

    // Exact image of a closed subinterval of [0,1].
    RatInterval image(const RatInterval& d) const {
        std::size_t i = piece_index_at(d.lo);
        Rat lo = piece(i).at(d.lo), hi = lo;
        for (; i < piece_count() && pts_[i].first < d.hi; ++i) {
            Piece p = piece(i);
            Rat a = p.at(rat_max(p.x0, d.lo));
            Rat b = p.at(rat_min(p.x1, d.hi));
            lo = rat_min(lo, rat_min(a, b));
            hi = rat_max(hi, rat_max(a, b));
        }
        return RatInterval(lo, hi);
    }

    // All solutions of f(x) = y, ascending.
    std::vector<Rat> preimages(const Rat& y) const {
        std::vector<Rat> out;
        for (std::size_t i = 0; i < piece_count(); ++i) {
            Piece p = piece(i);
            if (!p.value_range().contains(y)) continue;
            Rat x = p.invert(y);
            if (out.empty() || out.back() != x) out.push_back(x);
        }
        return out;
    }

    // Connected components of f^{-1}(j), exact, ascending.
    std::vector<RatInterval> preimage_components(const RatInterval& j) const {
        if (j.lo < 0 || j.hi > 1) throw DomainError("target interval outside [0,1]");
        std::vector<RatInterval> comps;
        for (std::size_t i = 0; i < piece_count(); ++i) {
            Piece p = piece(i);
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

private:
    explicit PLMap(std::vector<Point> pts) : pts_(std::move(pts)) {
        critical_.push_back(Rat(0));
        for (std::size_t i = 1; i + 1 < pts_.size(); ++i) {
            int sl = rat_sign(pts_[i].second - pts_[i - 1].second);
            int sr = rat_sign(pts_[i + 1].second - pts_[i].second);
            if (sl != sr) critical_.push_back(pts_[i].first);
        }
        critical_.push_back(Rat(1));
        build_laps();
    }

    static void validate_raw(const std::vector<Point>& pts) {
        if (pts.size() < 2) throw SpecError("a map needs at least two breakpoints");
        if (pts.front().first != 0) throw SpecError("first breakpoint must be at x = 0");
        if (pts.back().first != 1) throw SpecError("last breakpoint must be at x = 1");
        Rat ymin(1), ymax(0);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto& [x, y] = pts[i];
            if (x < 0 || x > 1) throw SpecError("breakpoint x outside [0,1]: " + rat_to_string(x));
            if (y < 0 || y > 1) throw SpecError("breakpoint value outside [0,1]: " + rat_to_string(y));
            if (i > 0) {
                if (x == pts[i - 1].first)
                    throw SpecError("duplicate breakpoint x = " + rat_to_string(x));
                if (x < pts[i - 1].first) throw SpecError("breakpoints not sorted by x");
                if (y == pts[i - 1].second)
                    throw SpecError("flat segment at value " + rat_to_string(y) +
                                    "; intervals of constancy are not supported");
            }
            ymin = rat_min(ymin, y);
            ymax = rat_max(ymax, y);
        }
        if (ymin != 0 || ymax != 1)
            throw SpecError("not surjective: values cover [" + rat_to_string(ymin) + "," +
                            rat_to_string(ymax) + "], need [0,1]");
    }

    static void normalize_collinear(std::vector<Point>& pts) {
        std::vector<Point> out;
        out.reserve(pts.size());
        for (const auto& p : pts) {
            while (out.size() >= 2) {
                const auto& a = out[out.size() - 2];
                const auto& b = out[out.size() - 1];
                // b lies on segment (a, p) exactly?
                if ((b.second - a.second) * (p.first - a.first) ==
                    (p.second - a.second) * (b.first - a.first))
                    out.pop_back();
                else
                    break;
            }
            out.push_back(p);
        }
        pts = std::move(out);
    }

    void build_laps() {
        laps_.clear();
        for (std::size_t c = 0; c + 1 < critical_.size(); ++c) {
            RatInterval dom(critical_[c], critical_[c + 1]);
            laps_.push_back(Lap{dom, image(dom),
                                rat_sign(eval(dom.hi) - eval(dom.lo))});
        }
    }

    std::vector<Point> pts_;
    std::vector<Rat> critical_;
    std::vector<Lap> laps_;
};

inline bool operator==(const PLMap& a, const PLMap& b) {
    return a.breakpoints() == b.breakpoints();
}

}  // namespace ild
