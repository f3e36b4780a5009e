#pragma once

#include <map>
#include <string>
#include <vector>

#include "tracering/groebner.hpp"
#include "tracering/poly.hpp"
#include "tracering/words.hpp"

namespace tracering {

// Coordinates I_V for V running over products of generators with strictly
// increasing indices: for n generators there are 2^n - 1 of them, declared
// by subset size then lexicographically (I_1, ..., I_n, I_12, I_13, ...).
class TraceRing {
  public:
    explicit TraceRing(const std::vector<std::string>& gen_names);

    const RingPtr& ring() const { return ring_; }
    uint32_t ngens() const { return ngens_; }
    // variable index of the coordinate I_V for the increasing product V
    uint32_t coord(const std::vector<uint32_t>& subset) const;
    const std::vector<std::vector<uint32_t>>& subsets() const { return subsets_; }

  private:
    uint32_t ngens_;
    RingPtr ring_;
    std::vector<std::vector<uint32_t>> subsets_;
    std::map<std::vector<uint32_t>, uint32_t> index_;
};

// Rewrites tr(w) into the coordinate polynomial using the trace identities
// tr(AB) = tr(A)tr(B) - tr(AB^-1), tr(A^-1) = tr(A), and Cayley-Hamilton,
// with memoization on the cyclic-canonical form. Coefficients are integers.
class TraceCalculator {
  public:
    explicit TraceCalculator(TraceRing tr) : tr_(std::move(tr)) {}

    const TraceRing& trace_ring() const { return tr_; }
    Poly trace_of_word(const GroupWord& w);

  private:
    Poly compute(const std::vector<int32_t>& w);
    Poly coordinate(const std::vector<int32_t>& sorted_positive);

    TraceRing tr_;
    std::map<std::vector<int32_t>, Poly> memo_;
};

// Superideal presentation of the character variety: for each relator r and
// each coordinate word V (including the empty word), impose
// tr(r V) = tr(V). Supports up to 3 generators.
IdealPresentation character_ideal(const Presentation& pres);

// trace polynomial of mu^p lambda^q in the presentation's trace coordinates
Poly slope_trace(const Presentation& pres, const SlopeSpec& slope);

// Substitution homomorphism: replace every variable of p's ring by the
// given image polynomial (indexed by source variable) in the target ring.
Poly compose(const Poly& p, const RingPtr& target, const std::vector<Poly>& images);

}  // namespace tracering
