#pragma once

#include <map>
#include <string>
#include <vector>

#include "tribill/lemma_covers.hpp"

namespace tribill {

enum class VerdictKind { Impossible, InFamily, Undecided };

struct Verdict {
    VerdictKind kind = VerdictKind::Impossible;
    std::vector<std::string> reasons;       // Impossible: ordered, deduplicated
    std::vector<CoverDescriptor> covers;    // InFamily: verified descriptors
    std::vector<std::string> diagnostics;   // Undecided: surviving candidates
};

// Every cover or equivalence the doubling family generates between
// unfoldings whose source has genus >= 2 and Q <= bound: the degree-2
// doublings, the degree-1 equivalences in both directions, and the degree-2
// compositions through the shared right unfolding.  Each map is constructed
// explicitly and verified before being listed; composition profiles are
// cross-checked point-level against the two legs.  Deduplicated by
// (source, target, degree) and deterministically ordered.
std::vector<CoverDescriptor> family_closure(long bound);

// Decides one ordered pair.  Signatures are canonicalized first; the source
// must have genus >= 2.  Either certifies the pair inside the family
// closure, proves impossibility with an ordered reason list, or reports
// candidate profiles no filter excluded (a defect worth investigating).
Verdict filter_chain(const TriangleSignature& source, const TriangleSignature& target);

struct PairOutcome {
    TriangleSignature source{1, 1, 1};
    TriangleSignature target{1, 1, 1};
    Verdict verdict;
};

struct SearchReport {
    long q_max = 0;
    long pairs_evaluated = 0;
    std::vector<PairOutcome> in_family;
    std::map<std::string, long> impossible_by_reason;  // keyed by first reason
    std::vector<PairOutcome> undecided;
};

// Runs filter_chain over every ordered pair (A, B) of canonical signatures
// with genus(A) >= 2, Q(A) <= q_max, and Q(B) in the holonomy-compatible
// set {Q(A)/2, Q(A), 2*Q(A)} as parity permits.  Deterministic.
SearchReport search(long q_max);

}  // namespace tribill
