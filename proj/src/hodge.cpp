#include "conelim/hodge.hpp"

#include <algorithm>
#include <numeric>

#include "conelim/subbundle.hpp"

namespace conelim {

int HodgeBundle::rank() const {
    return std::accumulate(type_vector.begin(), type_vector.end(), 0);
}

int HodgeBundle::degree() const {
    int d = 0;
    for (std::size_t j = 0; j < piece_twists.size(); ++j) d += piece_degree(j);
    return d;
}

int HodgeBundle::piece_degree(std::size_t j) const {
    return std::accumulate(piece_twists[j].begin(), piece_twists[j].end(), 0);
}

void HodgeBundle::check() const {
    if (type_vector.size() != piece_twists.size())
        throw std::logic_error("piece count mismatch");
    if (!maps.empty() && maps.size() + 1 != type_vector.size())
        throw std::logic_error("need one map per adjacent piece pair");
    if (maps.empty() && type_vector.size() > 1)
        throw std::logic_error("missing weight-one maps");
    for (std::size_t j = 0; j < type_vector.size(); ++j)
        if (static_cast<int>(piece_twists[j].size()) != type_vector[j])
            throw std::logic_error("piece twists do not match its rank");
    for (std::size_t j = 0; j < maps.size(); ++j) {
        if (maps[j].col_twists() != piece_twists[j])
            throw std::logic_error("map source twists mismatch");
        std::vector<int> target(piece_twists[j + 1]);
        for (auto& t : target) t += l_degree;
        if (maps[j].row_twists() != target)
            throw std::logic_error("map target twists mismatch");
    }
}

HitchinPair hodge_to_pair(const HodgeBundle& h) {
    h.check();
    int r = h.rank();
    std::vector<int> concat;
    std::vector<std::size_t> piece_offset;
    for (const auto& twists : h.piece_twists) {
        piece_offset.push_back(concat.size());
        concat.insert(concat.end(), twists.begin(), twists.end());
    }
    // Weight-one block matrix in concatenated order.
    std::vector<std::vector<BinaryForm>> grid(r, std::vector<BinaryForm>(r));
    for (std::size_t j = 0; j < h.maps.size(); ++j) {
        const TwistedMatrix& m = h.maps[j];
        for (std::size_t ti = 0; ti < m.rows(); ++ti)
            for (std::size_t sj = 0; sj < m.cols(); ++sj)
                grid[piece_offset[j + 1] + ti][piece_offset[j] + sj] = m.at(ti, sj);
    }
    // Stable sort of summands descending; conjugate by the permutation.
    std::vector<std::size_t> order(r);
    for (int i = 0; i < r; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return concat[a] > concat[b]; });
    std::vector<int> sorted(r);
    for (int i = 0; i < r; ++i) sorted[i] = concat[order[i]];
    std::vector<std::vector<BinaryForm>> sorted_grid(r, std::vector<BinaryForm>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sorted_grid[i][j] = grid[order[i]][order[j]];
    return HitchinPair::create(BundleModel(sorted), h.l_degree, sorted_grid);
}

namespace {

// Orbit invariants of one twisted map between split bundles, at the sizes
// the artifact produces (ranks at most 3 per side).
struct MapInvariants {
    std::size_t rank;
    std::vector<int> kernel_twists;
    std::vector<int> image_twists;

    bool operator==(const MapInvariants&) const = default;
};

MapInvariants invariants(const TwistedMatrix& m) {
    MapInvariants out;
    out.rank = m.rank();
    out.kernel_twists = kernel_basis(m).basis.col_twists();
    if (out.rank > 0) out.image_twists = saturate_span(m).basis.col_twists();
    return out;
}

}  // namespace

bool hodge_equivalent(const HodgeBundle& a, const HodgeBundle& b) {
    if (a.l_degree != b.l_degree) return false;
    if (a.type_vector != b.type_vector) return false;
    if (a.piece_twists != b.piece_twists) return false;
    for (std::size_t j = 0; j < a.maps.size(); ++j)
        if (!(invariants(a.maps[j]) == invariants(b.maps[j]))) return false;
    return true;
}

}  // namespace conelim
