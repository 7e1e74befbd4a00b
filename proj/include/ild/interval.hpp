#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ild/rat.hpp"

namespace ild {

// Closed interval with rational endpoints. Degenerate intervals (lo == hi)
// are first-class: point sets appear all over the classification layer.
struct RatInterval {
    Rat lo;
    Rat hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (lo > hi) throw DomainError("interval endpoints out of order");
    }
    static RatInterval point(const Rat& x) { return RatInterval(x, x); }
    static RatInterval sorted(const Rat& a, const Rat& b) {
        return a <= b ? RatInterval(a, b) : RatInterval(b, a);
    }

    Rat length() const { return hi - lo; }
    bool degenerate() const { return lo == hi; }
    Rat midpoint() const { return (lo + hi) / 2; }

    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool interior_contains(const Rat& x) const { return lo < x && x < hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool strictly_contains(const RatInterval& o) const { return lo < o.lo && o.hi < hi; }

    bool operator==(const RatInterval& o) const { return lo == o.lo && hi == o.hi; }
    bool operator!=(const RatInterval& o) const { return !(*this == o); }

    std::string str() const { return "[" + rat_to_string(lo) + "," + rat_to_string(hi) + "]"; }
};

inline std::optional<RatInterval> intersect(const RatInterval& a, const RatInterval& b) {
    const Rat& lo = rat_max(a.lo, b.lo);
    const Rat& hi = rat_min(a.hi, b.hi);
    if (lo > hi) return std::nullopt;
    return RatInterval(lo, hi);
}

inline RatInterval hull(const RatInterval& a, const RatInterval& b) {
    return RatInterval(rat_min(a.lo, b.lo), rat_max(a.hi, b.hi));
}

// Finite union of pairwise-disjoint, non-adjacent closed intervals, sorted by
// lo. Canonical: any insertion order of the same parts produces the same list.
class IntervalSet {
public:
    IntervalSet() = default;

    const std::vector<RatInterval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    // Inserts `a`, merging any overlapping or merely adjacent parts.
    void insert(const RatInterval& a) {
        Rat lo = a.lo, hi = a.hi;
        auto first = parts_.begin();
        while (first != parts_.end() && first->hi < lo) ++first;
        auto last = first;
        while (last != parts_.end() && last->lo <= hi) {
            lo = rat_min(lo, last->lo);
            hi = rat_max(hi, last->hi);
            ++last;
        }
        first = parts_.erase(first, last);
        parts_.insert(first, RatInterval(lo, hi));
    }
    void insert_point(const Rat& x) { insert(RatInterval::point(x)); }

    bool contains(const Rat& x) const {
        for (const auto& p : parts_) {
            if (x < p.lo) return false;
            if (x <= p.hi) return true;
        }
        return false;
    }
    bool contains(const RatInterval& a) const {
        for (const auto& p : parts_) {
            if (a.lo < p.lo) return false;
            if (a.lo <= p.hi) return a.hi <= p.hi;
        }
        return false;
    }
    // Every part of `o` lies inside a single part of this set.
    bool contains(const IntervalSet& o) const {
        for (const auto& p : o.parts_)
            if (!contains(p)) return false;
        return true;
    }

    // Exact distance from x to the set; 0 when contained. Empty set -> nullopt.
    std::optional<Rat> distance(const Rat& x) const {
        if (parts_.empty()) return std::nullopt;
        Rat best = -1;
        for (const auto& p : parts_) {
            Rat d = p.contains(x) ? Rat(0) : (x < p.lo ? Rat(p.lo - x) : Rat(x - p.hi));
            if (best < 0 || d < best) best = d;
        }
        return best;
    }

    bool operator==(const IntervalSet& o) const { return parts_ == o.parts_; }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ", ";
            s += parts_[i].str();
        }
        return s + "}";
    }

private:
    std::vector<RatInterval> parts_;
};

}  // namespace ild
