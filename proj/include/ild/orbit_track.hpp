#pragma once

#include <optional>
#include <vector>

#include "ild/plmap.hpp"

namespace ild {

// Maximal-injectivity tracking around a forward orbit.
//
// For a base point z and each side, the state holds the image under f^k of
// the maximal one-sided interval D on which f^k is injective: the anchor
// f^k(z) is always an endpoint of that image, `e` is the image of the far
// domain end. One step: pull the far end back to the nearest critical point
// flanking the anchor (the domain shrinks exactly when the image would cross
// a fold), then apply f to both ends.
struct TrackState {
    Rat anchor;
    Rat left_e;    // far-end image of the maximal injective domain left of z
    Rat right_e;   // same for the right side
    bool left_clipped = false;   // set when the last step shrank the domain
    bool right_clipped = false;
    bool anchor_hit_critical = false;  // anchor passed through an interior fold

    static TrackState start(const Rat& z) {
        TrackState s;
        s.anchor = z;
        s.left_e = 0;
        s.right_e = 1;
        return s;
    }

    RatInterval left_image() const { return RatInterval::sorted(anchor, left_e); }
    RatInterval right_image() const { return RatInterval::sorted(anchor, right_e); }
    RatInterval hull_image() const {
        return RatInterval(rat_min(anchor, rat_min(left_e, right_e)),
                           rat_max(anchor, rat_max(left_e, right_e)));
    }

    bool operator==(const TrackState& o) const {
        return anchor == o.anchor && left_e == o.left_e && right_e == o.right_e;
    }
};

namespace detail {

// Smallest critical point strictly above x (x < 1 assumed by callers).
inline Rat next_critical_above(const PLMap& f, const Rat& x) {
    const auto& c = f.critical_set();
    auto it = std::upper_bound(c.begin(), c.end(), x);
    return *it;
}
inline Rat next_critical_below(const PLMap& f, const Rat& x) {
    const auto& c = f.critical_set();
    auto it = std::lower_bound(c.begin(), c.end(), x);
    return *std::prev(it);
}

inline Rat clip_far_end(const PLMap& f, const Rat& anchor, const Rat& e, bool& clipped) {
    clipped = false;
    if (e > anchor) {
        Rat c = next_critical_above(f, anchor);
        if (e > c) {
            clipped = true;
            return c;
        }
    } else if (e < anchor) {
        Rat c = next_critical_below(f, anchor);
        if (e < c) {
            clipped = true;
            return c;
        }
    }
    return e;
}

}  // namespace detail

inline TrackState track_step(const PLMap& f, const TrackState& s) {
    TrackState n;
    bool cl = false, cr = false;
    Rat le = detail::clip_far_end(f, s.anchor, s.left_e, cl);
    Rat re = detail::clip_far_end(f, s.anchor, s.right_e, cr);
    bool interior_crit = s.anchor != 0 && s.anchor != 1 && f.is_critical(s.anchor);
    n.anchor = f.eval(s.anchor);
    n.left_e = f.eval(le);
    n.right_e = f.eval(re);
    n.left_clipped = cl;
    n.right_clipped = cr;
    n.anchor_hit_critical = s.anchor_hit_critical || interior_crit;
    return n;
}

inline TrackState track_run(const PLMap& f, const Rat& z, int steps) {
    TrackState s = TrackState::start(z);
    for (int i = 0; i < steps; ++i) s = track_step(f, s);
    return s;
}

// Image of the maximal monotone interval of f^n around z, and the distances
// from f^n(z) to its ends. When z is a critical point of f^n there are two
// one-sided choices; the longer image wins and the shorter one's near-end
// distance is reported as the alternative.
struct BranchImage {
    RatInterval image;      // M_n at the chosen branch
    Rat near_dist;          // min distance of f^n(z) to the ends of image
    Rat far_dist;           // max distance
    Rat alt_near_dist;      // near-end distance over the other lap choice (== near_dist if unique)
    bool two_sided;         // anchor never crossed an interior fold
};

inline BranchImage branch_image(const PLMap& f, const Rat& z, int n) {
    TrackState s = track_run(f, z, n);
    BranchImage out;
    out.two_sided = !s.anchor_hit_critical && z != 0 && z != 1 && !f.is_critical(z);
    auto dists = [&](const RatInterval& im) {
        return std::pair<Rat, Rat>(rat_min(s.anchor - im.lo, im.hi - s.anchor),
                                   rat_max(s.anchor - im.lo, im.hi - s.anchor));
    };
    if (out.two_sided) {
        out.image = s.hull_image();
        auto [nd, fd] = dists(out.image);
        out.near_dist = nd;
        out.far_dist = fd;
        out.alt_near_dist = nd;
        return out;
    }
    RatInterval li = s.left_image(), ri = s.right_image();
    const RatInterval& big = li.length() >= ri.length() ? li : ri;
    const RatInterval& small = li.length() >= ri.length() ? ri : li;
    out.image = big;
    auto [nd, fd] = dists(big);
    out.near_dist = nd;  // the anchor is an end of a one-sided image, so this is 0
    out.far_dist = fd;
    out.alt_near_dist = dists(small).first;
    return out;
}

}  // namespace ild
