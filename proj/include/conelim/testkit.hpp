#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "conelim/pair.hpp"
#include "conelim/subbundle.hpp"

namespace conelim::testkit {

// Deterministic stream: attempt k of seed s runs on mt19937_64 seeded with
// splitmix64(s ^ k * 0x9E3779B97F4A7C15). Same params, same instances, on
// any platform.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t attempt);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    int uniform(int lo, int hi);  // inclusive
    Rational small_rational(int bound = 3) { return Rational(uniform(-bound, bound)); }
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

BinaryForm random_form(Rng& rng, int degree, bool ensure_nonzero, int coeff_bound = 3);

enum class Shape { Zero, Regular, Rank3Intermediate, Any };

struct GenParams {
    std::uint64_t seed = 0;
    int rank = 3;
    int twist_min = -3;
    int twist_max = 3;
    int l_min = 1;
    int l_max = 3;
    Shape shape = Shape::Any;
    bool require_stable = false;
    int max_attempts = 200;
};

// Deterministic in the seed. Shapes are built in a plain frame (strictly
// triangular for regular fields, a rank-one square-zero product for the
// rank-3 intermediate shape) and conjugated back by a random determinant-one
// automorphism of the bundle. Rejection-samples until the shape (and
// stability, when requested) holds; ExhaustedAttempts otherwise.
HitchinPair random_pair(const GenParams& params);

// Random twist-law-respecting automorphism of the split bundle (determinant
// +-1): integer shears on equal-twist blocks, random forms strictly between
// twist groups.
TwistedMatrix random_automorphism(Rng& rng, const std::vector<int>& twists);

// Random twisted matrix for property tests (entries in every feasible slot).
TwistedMatrix random_twisted_matrix(Rng& rng, const std::vector<int>& row_twists,
                                    const std::vector<int>& col_twists);

// h^0 of the subbundle twisted by m, for m = 0..m_max, by exact linear
// algebra on global generators (independent of the splitting machinery).
std::vector<int> h0_profile(const SubbundleBasis& B, int m_max);
int h0_at(const SubbundleBasis& B, int m);

// Splitting multiset recovered from successive differences of the h^0
// function (the oracle side of the splitting-type cross-check).
std::vector<int> splitting_from_h0(const SubbundleBasis& B);

// Evaluates the field at `samples` distinct chart points plus the point at
// infinity and tests nilpotency of each rational matrix exactly.
bool pointwise_nilpotency_oracle(const HitchinPair& pair, int samples);

// Random invariant subbundles for soundness sampling.
SubbundleBasis random_line_in(Rng& rng, const SubbundleBasis& sub);
SubbundleBasis random_overline_of(Rng& rng, const HitchinPair& pair,
                                  const SubbundleBasis& line);
// Saturated invariant subbundle generated by a random section of a random
// chain step together with its field iterates.
SubbundleBasis random_cyclic_invariant(Rng& rng, const HitchinPair& pair,
                                       const SubbundleBasis& seed_step);

}  // namespace conelim::testkit
