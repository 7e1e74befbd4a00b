#pragma once

#include <optional>
#include <string>
#include <utility>

namespace ild {

// Three-valued outcome for semi-decidable properties. Proven and Refuted are
// final and carry a payload that re-validates from scratch; Unknown always
// carries the exhausted depth/budget.
enum class Status { Proven, Refuted, Unknown };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Proven: return "proven";
        case Status::Refuted: return "refuted";
        default: return "unknown";
    }
}

struct NoPayload {};

template <typename Cert, typename Witness = NoPayload>
struct Verdict {
    Status status = Status::Unknown;
    std::optional<Cert> certificate;  // present when Proven
    std::optional<Witness> witness;   // present when Refuted
    long long depth_reached = 0;
    std::string note;  // deterministic human-readable detail

    bool proven() const { return status == Status::Proven; }
    bool refuted() const { return status == Status::Refuted; }
    bool unknown() const { return status == Status::Unknown; }

    static Verdict proven_with(Cert c, long long depth = 0, std::string note = {}) {
        Verdict v;
        v.status = Status::Proven;
        v.certificate = std::move(c);
        v.depth_reached = depth;
        v.note = std::move(note);
        return v;
    }
    static Verdict refuted_with(Witness w, long long depth = 0, std::string note = {}) {
        Verdict v;
        v.status = Status::Refuted;
        v.witness = std::move(w);
        v.depth_reached = depth;
        v.note = std::move(note);
        return v;
    }
    static Verdict unknown_at(long long depth, std::string note = {}) {
        Verdict v;
        v.status = Status::Unknown;
        v.depth_reached = depth;
        v.note = std::move(note);
        return v;
    }
};

}  // namespace ild
