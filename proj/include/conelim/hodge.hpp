#pragma once

#include <vector>

#include "conelim/pair.hpp"

namespace conelim {

// Fixed point of the scaling action: a graded split bundle whose maps have
// weight one (piece j maps to piece j+1 twisted by the line degree).
struct HodgeBundle {
    int l_degree = 1;
    std::vector<int> type_vector;               // piece ranks
    std::vector<std::vector<int>> piece_twists; // descending per piece
    std::vector<TwistedMatrix> maps;            // maps[j]: piece j -> piece j+1 (l)

    int rank() const;
    int degree() const;
    int piece_degree(std::size_t j) const;

    // Shape and twist-law consistency; throws std::logic_error on violation.
    void check() const;
};

// The graded bundle assembled back into a pair: summands sorted descending
// and the weight-one block matrix conjugated by the sorting permutation.
HitchinPair hodge_to_pair(const HodgeBundle& h);

// Isomorphy at the level the artifact tracks: same type, same piece twists,
// and per adjacent pair the same map invariants (rank, kernel splitting,
// saturated image splitting).
bool hodge_equivalent(const HodgeBundle& a, const HodgeBundle& b);

}  // namespace conelim
