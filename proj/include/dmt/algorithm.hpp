#ifndef DMT_ALGORITHM_HPP
#define DMT_ALGORITHM_HPP

#include <set>
#include <utility>
#include <vector>

#include "dmt/floperations.hpp"

namespace dmt {

enum class Label { c, f };

inline char label_char(Label l) { return l == Label::c ? 'c' : 'f'; }

inline Label conjugate(Label l) { return l == Label::c ? Label::f : Label::c; }

struct LabeledFlowline {
    Path flowline;
    Label label;
};

enum class AlgStatus { Terminated, Cycled };

struct AlgOutcome {
    AlgStatus status;
    std::vector<LabeledFlowline> list;
    int period = 0;  // appends per cycle (Cycled only)
    int flops = 0;
    int inserts = 0;
    int cancels = 0;

    int floperations() const { return flops + inserts + cancels; }
};

/// The flowline algorithm:
///
///   while path is noncritical:
///       Flop
///       while path is illegal:  Cancel; Append 'c'; Flop
///       Append 'f'
///       if path is critical: stop
///       Insert
///
/// start=c runs exactly that (the initial flowline is listed with label
/// 'c'); start=f first Inserts, which requires a noncritical flowline.
/// A run that revisits its initial (flowline, label) pair reports Cycled;
/// determinism plus invertibility of the floperations means no other pair
/// can recur first, and a recurrence elsewhere raises.
inline AlgOutcome alg_list(const Path& F, Label start,
                           const ModifiedHasseDiagram& H,
                           long max_floperations = 1000000) {
    if (!is_flowline(F, H))
        throw MalformedPathError("alg_list requires a legal index-2 flowline "
                                 "between critical simplices: " +
                                 F.name());
    AlgOutcome out;
    out.list.push_back({F, start});
    std::set<std::pair<std::vector<Simplex>, Label>> seen;
    seen.insert({F.nodes, start});

    // Returns true when the run should stop (cycle closed).
    auto append = [&](const Path& P, Label l) {
        if (!is_flowline(P, H))
            throw InvariantViolationError("appended path is not a legal "
                                          "flowline: " +
                                          P.name());
        out.list.push_back({P, l});
        if (P.nodes == F.nodes && l == start) {
            out.status = AlgStatus::Cycled;
            out.period = static_cast<int>(out.list.size()) - 1;
            return true;
        }
        if (!seen.insert({P.nodes, l}).second)
            throw InvariantViolationError(
                "algorithm revisited a non-initial state at " + P.name());
        return false;
    };

    Path P = F;
    if (start == Label::f) {
        P = insert(P, H);  // throws CannotInsertError on critical F
        ++out.inserts;
    }
    for (;;) {
        if (out.floperations() > max_floperations)
            throw UnboundedEnumerationError(
                "algorithm exceeded the floperation limit");
        P = flop(P, H);
        ++out.flops;
        while (!P.is_legal()) {
            P = cancel(P, H);
            ++out.cancels;
            if (append(P, Label::c)) return out;
            P = flop(P, H);
            ++out.flops;
        }
        if (append(P, Label::f)) return out;
        if (is_critical_flowline(P, H)) {
            out.status = AlgStatus::Terminated;
            return out;
        }
        P = insert(P, H);
        ++out.inserts;
    }
}

/// The critical flowline paired with a critical flowline by the algorithm.
/// Involutive, and never the identity.
inline Path alg(const Path& F, const ModifiedHasseDiagram& H) {
    if (!is_critical_flowline(F, H))
        throw MalformedPathError("alg requires a critical flowline, got " +
                                 F.name());
    AlgOutcome out = alg_list(F, Label::c, H);
    if (out.status != AlgStatus::Terminated)
        throw InvariantViolationError(
            "algorithm cycled from a critical flowline " + F.name());
    return out.list.back().flowline;
}

}  // namespace dmt

#endif
