#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ild/interval.hpp"
#include "ild/plmap.hpp"
#include "ild/verdict.hpp"

namespace ild {

// Exact classification of a single forward orbit within a finite horizon.
// Two certified outcomes:
//   EventuallyPeriodic -- an exact repetition was found; the omega set is the
//     cycle read off verbatim.
//   AttractedToCycle -- the orbit entered a window W on which some f^p is one
//     affine contraction with fixed point q in W, and the ball around q
//     through the entry point stays in W; then f^p maps the ball into itself
//     and the omega set is the exact cycle of q.
struct OrbitAnalysis {
    enum class Kind { EventuallyPeriodic, AttractedToCycle, Undetermined };
    Kind kind = Kind::Undetermined;
    std::vector<Rat> prefix;      // orbit as computed, x, f(x), ...
    std::vector<Rat> limit_cycle; // exact omega set of the point (certified kinds)
    // EventuallyPeriodic:
    int preperiod = 0;
    int period = 0;
    // AttractedToCycle:
    int entry_index = 0;
    int cycle_len = 0;
    Rat contraction;      // |slope| of the affine f^cycle_len on the window
    RatInterval window;   // forward-invariant ball certifying the attraction
};

namespace detail {

// Affine composition of f along p steps from y, valid on a maximal window
// around y (pulled back through the traversed pieces). Fails if the orbit
// touches a breakpoint, where the local map is not affine.
struct AffineOnWindow {
    Rat a, b;  // x -> a x + b
    RatInterval window;
};

inline std::optional<AffineOnWindow> affine_along(const PLMap& f, const Rat& y, int p) {
    Rat a(1), b(0);
    Rat lo(0), hi(1);
    Rat cur = y;
    for (int s = 0; s < p; ++s) {
        for (const auto& bp : f.breakpoints())
            if (bp.first == cur) return std::nullopt;
        auto pc = f.piece(f.piece_index_at(cur));
        // clip current window image [a*lo+b, a*hi+b] into the piece domain
        Rat ilo = a * lo + b, ihi = a * hi + b;
        if (ilo > ihi) std::swap(ilo, ihi);
        Rat clo = rat_max(ilo, pc.x0), chi = rat_min(ihi, pc.x1);
        if (a > 0) {
            lo = (clo - b) / a;
            hi = (chi - b) / a;
        } else {
            lo = (chi - b) / a;
            hi = (clo - b) / a;
        }
        Rat m = pc.slope();
        b = m * b + (pc.y0 - m * pc.x0);
        a = m * a;
        cur = f.eval(cur);
    }
    return AffineOnWindow{a, b, RatInterval(lo, hi)};
}

}  // namespace detail

inline OrbitAnalysis analyze_orbit(const PLMap& f, const Rat& start, int horizon,
                                   int max_attraction_period = 8) {
    OrbitAnalysis out;
    std::map<Rat, int> seen;
    Rat x = start;
    for (int t = 0; t <= horizon; ++t) {
        auto it = seen.find(x);
        if (it != seen.end()) {
            out.kind = OrbitAnalysis::Kind::EventuallyPeriodic;
            out.preperiod = it->second;
            out.period = t - it->second;
            for (int j = it->second; j < t; ++j)
                out.limit_cycle.push_back(out.prefix[static_cast<std::size_t>(j)]);
            std::sort(out.limit_cycle.begin(), out.limit_cycle.end());
            return out;
        }
        seen[x] = t;
        out.prefix.push_back(x);
        // attraction probe before stepping on
        for (int p = 1; p <= max_attraction_period; ++p) {
            auto aff = detail::affine_along(f, x, p);
            if (!aff || rat_abs(aff->a) >= 1 || aff->a == 0) continue;
            Rat q = aff->b / (1 - aff->a);
            if (!aff->window.contains(q)) continue;
            Rat d = rat_abs(x - q);
            if (d == 0) continue;  // exact fixed point of f^p: periodicity will catch it
            RatInterval ball(q - d, q + d);
            if (!aff->window.contains(ball)) continue;
            out.kind = OrbitAnalysis::Kind::AttractedToCycle;
            out.entry_index = t;
            out.cycle_len = p;
            out.contraction = rat_abs(aff->a);
            out.window = ball;
            Rat z = q;
            for (int j = 0; j < p; ++j) {
                out.limit_cycle.push_back(z);
                z = f.eval(z);
            }
            std::sort(out.limit_cycle.begin(), out.limit_cycle.end());
            out.limit_cycle.erase(std::unique(out.limit_cycle.begin(), out.limit_cycle.end()),
                                  out.limit_cycle.end());
            return out;
        }
        x = f.eval(x);
    }
    out.kind = OrbitAnalysis::Kind::Undetermined;
    return out;
}

// Certified outer approximation of the omega limit set of the critical set.
// `cover` always contains it: either the exact union of limit cycles of all
// critical orbits (exact_flag, fattening 0), or an eps-fattened trap of the
// orbit segments past the transient, enlarged until f(cover) is contained in
// cover (tails then never escape).
struct OmegaApprox {
    int transient = 0;
    int horizon = 0;
    IntervalSet cover;
    Rat fattening = 0;
    bool exact_flag = false;
    int enlargements = 0;              // how often the fattening was doubled
    std::vector<Rat> exact_points;     // sorted cycle points when exact
    std::vector<OrbitAnalysis> per_critical;

    bool provably_out(const Rat& x) const { return !cover.contains(x); }
};

inline OmegaApprox omega_approx(const PLMap& f, int transient = 64, int horizon = 4096,
                                Rat fattening = Rat(1, 1024)) {
    if (transient >= horizon) throw DomainError("transient must be smaller than horizon");
    OmegaApprox out;
    out.transient = transient;
    out.horizon = horizon;
    bool all_certified = true;
    for (const Rat& c : f.critical_set()) {
        out.per_critical.push_back(analyze_orbit(f, c, horizon));
        if (out.per_critical.back().kind == OrbitAnalysis::Kind::Undetermined)
            all_certified = false;
    }
    if (all_certified) {
        out.exact_flag = true;
        out.fattening = 0;
        for (const auto& an : out.per_critical)
            for (const Rat& p : an.limit_cycle) {
                out.cover.insert_point(p);
                out.exact_points.push_back(p);
            }
        std::sort(out.exact_points.begin(), out.exact_points.end());
        out.exact_points.erase(std::unique(out.exact_points.begin(), out.exact_points.end()),
                               out.exact_points.end());
        return out;
    }
    // fattened trap of the orbit tails
    Rat eps = fattening > 0 ? fattening : Rat(1, 1024);
    for (;;) {
        IntervalSet cover;
        for (const auto& an : out.per_critical) {
            int last = static_cast<int>(an.prefix.size()) - 1;
            int from = transient <= last ? transient : last;
            for (std::size_t t = static_cast<std::size_t>(from); t < an.prefix.size(); ++t) {
                const Rat& p = an.prefix[t];
                cover.insert(RatInterval(rat_max(Rat(0), p - eps), rat_min(Rat(1), p + eps)));
            }
            for (const Rat& p : an.limit_cycle)
                cover.insert(RatInterval(rat_max(Rat(0), p - eps), rat_min(Rat(1), p + eps)));
        }
        if (cover.contains(image_of_set(f, cover))) {
            out.cover = cover;
            out.fattening = eps;
            return out;
        }
        eps *= 2;
        ++out.enlargements;
        if (eps >= 1) {
            IntervalSet all;
            all.insert(RatInterval(Rat(0), Rat(1)));
            out.cover = all;
            out.fattening = eps;
            return out;
        }
    }
}

// Does the critical point recur on itself? Proven exactly when its orbit is
// eventually periodic with c on the cycle; refuted when the omega set of c is
// certified and avoids c; otherwise Unknown with the closest-return record.
struct RecurrenceCert {
    std::vector<Rat> cycle;
    int period = 0;
};
struct RecurrenceRefutation {
    std::vector<Rat> omega_of_c;
    Rat distance;  // exact positive distance from c to its omega set
};

inline Verdict<RecurrenceCert, RecurrenceRefutation> recurrence_check(const PLMap& f,
                                                                      const Rat& c,
                                                                      int depth = 4096) {
    if (!f.is_critical(c)) throw DomainError("recurrence_check expects a critical point");
    OrbitAnalysis an = analyze_orbit(f, c, depth);
    using V = Verdict<RecurrenceCert, RecurrenceRefutation>;
    if (an.kind == OrbitAnalysis::Kind::Undetermined) {
        Rat best(-1);
        for (std::size_t t = 1; t < an.prefix.size(); ++t) {
            Rat d = rat_abs(an.prefix[t] - c);
            if (best < 0 || d < best) best = d;
        }
        return V::unknown_at(depth, "no exact cycle within depth; closest return distance " +
                                        rat_to_string(best));
    }
    bool on = std::binary_search(an.limit_cycle.begin(), an.limit_cycle.end(), c);
    if (on) {
        RecurrenceCert cert;
        cert.cycle = an.limit_cycle;
        cert.period = an.kind == OrbitAnalysis::Kind::EventuallyPeriodic ? an.period : an.cycle_len;
        return V::proven_with(std::move(cert), depth);
    }
    RecurrenceRefutation ref;
    ref.omega_of_c = an.limit_cycle;
    Rat best(-1);
    for (const Rat& p : an.limit_cycle) {
        Rat d = rat_abs(p - c);
        if (best < 0 || d < best) best = d;
    }
    ref.distance = best;
    return V::refuted_with(std::move(ref), depth);
}

}  // namespace ild
