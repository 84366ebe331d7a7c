#ifndef LFID_BASELINES_HPP
#define LFID_BASELINES_HPP

#include <optional>
#include <string>

#include "lfid/fib.hpp"
#include "lfid/topology.hpp"

namespace lfid {

// Entry (x, d, n_i) present iff w(x, n_i) + sp(n_i, d) = sp(x, d).
AllNodeFib compute_ecmp(const Topology& topo, unsigned workers = 1);

// Entry present iff sp(n_i, d) < sp(x, d), full-graph costs.
AllNodeFib compute_dw(const Topology& topo, unsigned workers = 1);

// DW plus equal-cost entries where the neighbor's node id is lower.
AllNodeFib compute_dwe(const Topology& topo, unsigned workers = 1);

// CLI selector tokens. Opt has no FIB: experiments evaluate it directly on
// the undirected topology. The MARA variants are comparison slots from
// external work and are not implemented; experiment output leaves their
// columns absent.
enum class Algorithm { Ecmp, Dw, Dwe, Lfid, Opt, MaraMc, MaraSpe };

std::optional<Algorithm> parse_algorithm(const std::string& token);
std::string algorithm_token(Algorithm algo);
bool algorithm_implemented(Algorithm algo);

// Dispatch for the implemented FIB-producing algorithms; throws
// std::invalid_argument for Opt and the MARA slots.
AllNodeFib compute_fib(const Topology& topo, Algorithm algo,
                       unsigned workers = 1);

}  // namespace lfid

#endif  // LFID_BASELINES_HPP
