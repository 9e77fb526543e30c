#pragma once

#include "conf2/linalg.hpp"

#include <optional>

namespace conf2::f2 {

/// Cohomology at the middle of  C^{n-1} --incoming--> C^n --outgoing--> C^{n+1}.
/// Representatives are the first cocycles of the kernel basis that stay independent
/// modulo coboundaries, so the choice is deterministic.
class CohomologyGroup {
public:
    static CohomologyGroup compute(const F2Matrix& incoming, const F2Matrix& outgoing);

    [[nodiscard]] std::size_t dim() const { return representatives_.rows(); }
    [[nodiscard]] std::size_t cochain_dim() const { return boundaries_.ambient_dim(); }
    /// dim() x cochain_dim() matrix; row i is a cocycle representing basis class i.
    [[nodiscard]] const F2Matrix& representatives() const { return representatives_; }
    [[nodiscard]] const Subspace& boundaries() const { return boundaries_; }

    [[nodiscard]] bool is_cocycle(const BitVector& v) const { return !outgoing_.apply(v).any(); }
    /// Coordinates of the class of `cocycle` in the representative basis; nullopt if
    /// the vector is not a cocycle.
    [[nodiscard]] std::optional<BitVector> coordinates(const BitVector& cocycle) const;
    /// Matrix (in representative coordinates) of a cochain map `f` from this group's
    /// cochains to `target`'s cochains. Throws if some image is not a cocycle.
    [[nodiscard]] F2Matrix induced_map(const F2Matrix& f, const CohomologyGroup& target) const;

private:
    F2Matrix outgoing_;
    Subspace boundaries_;
    QuotientMap modulo_boundaries_;
    F2Matrix representatives_;
    F2Matrix projected_representatives_; ///< columns: representatives in C^n / B^n
};

} // namespace conf2::f2
