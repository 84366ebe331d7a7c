#ifndef LFID_LFID_PIPELINE_HPP
#define LFID_LFID_PIPELINE_HPP

#include "lfid/fib.hpp"
#include "lfid/topology.hpp"

namespace lfid {

struct PipelineOptions {
  unsigned workers = 1;
};

// Ordered loop removal over upward nexthops. For every destination, each
// upward entry (x -> n) is examined exactly once, in max-priority order of
// (remaining total nexthops, cost of the costliest unexamined upward entry,
// ascending node id as the final tie-break). An entry is deleted when, with
// the reverse arc (n -> x) temporarily removed, n can still reach x in the
// destination digraph. The reverse arc is restored only if it existed before
// the check. Only Upward entries are ever deleted.
AllNodeFib remove_loops(AllNodeFib fib, const Topology& topo,
                        const PipelineOptions& options = {});

// Dead-end pruning to fixpoint: an upward entry (x -> n) is deleted when
// node n's list for the destination holds exactly one entry and that entry
// points back to x. Deletions re-enqueue surviving upward entries into x.
AllNodeFib remove_dead_ends(AllNodeFib fib,
                            const PipelineOptions& options = {});

// fill_fib -> remove_loops -> remove_dead_ends.
AllNodeFib compute_lfid(const Topology& topo,
                        const PipelineOptions& options = {});

}  // namespace lfid

#endif  // LFID_LFID_PIPELINE_HPP
