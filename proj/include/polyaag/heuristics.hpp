#ifndef POLYAAG_HEURISTICS_HPP
#define POLYAAG_HEURISTICS_HPP

#include <string>
#include <vector>

#include "polyaag/aag.hpp"
#include "polyaag/group.hpp"
#include "polyaag/rng.hpp"
#include "polyaag/word.hpp"

namespace polyaag {

// The seven simple word heuristics. H1 splices a whole subgroup generator
// a_i^{+-1}, H2-H4 insert/delete/substitute a single group generator, H5/H6
// conjugate a position/subword by a group generator, H7 swaps two letters.
enum class HeuristicId { H1 = 1, H2, H3, H4, H5, H6, H7 };

struct HeuristicChain {
    std::vector<HeuristicId> ids;

    bool operator==(const HeuristicChain&) const = default;
};

// All randomness is uniform. Draw order is frozen per heuristic -- position(s)
// first, then generator index, then sign -- so seeded runs are reproducible:
//   H1: insert position, a_gens index, sign
//   H2: insert position, generator index, sign
//   H3: delete position (empty word: no-op, nothing drawn)
//   H4: position, generator index, sign
//   H5: position, generator index, sign  (letter x becomes f^{-1} x f)
//   H6: two positions (subword = [min, max]), generator index, sign
//   H7: two positions (words shorter than 2 letters: no-op, nothing drawn)
// Outputs are always freely reduced.
Word apply_heuristic(HeuristicId id, const GroupSpec& spec, const AagInstance& inst,
                     const Word& w, Rng& rng);

// Left-to-right composition of apply_heuristic over the chain.
Word apply_chain(const HeuristicChain& chain, const GroupSpec& spec,
                 const AagInstance& inst, const Word& w, Rng& rng);

// True when every entry is H3; such chains are forbidden as hyper-heuristic
// candidates (they can only shrink words).
bool is_pure_deletion(const HeuristicChain& chain);

// Compact form, e.g. "H2H1H4".
std::string format_chain(const HeuristicChain& chain);

// Parses the compact form; run-length syntax "H3^2" expands to H3H3.
// Whitespace is ignored and 'h' is accepted for 'H'. Throws on anything else.
HeuristicChain parse_chain(const std::string& text);

}  // namespace polyaag

#endif
