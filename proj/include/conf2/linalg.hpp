#pragma once

#include "conf2/f2matrix.hpp"

#include <optional>
#include <vector>

namespace conf2::f2 {

struct RrefResult {
    F2Matrix reduced;
    std::vector<std::size_t> pivots; ///< pivot column of row i, strictly increasing

    [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

/// A linear subspace of F2^ambient_dim. The basis is kept in reduced row-echelon
/// form, so two equal subspaces have identical bases.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    /// Span of the rows of `generators` (dependent or duplicate rows are fine).
    static Subspace span(const F2Matrix& generators);
    static Subspace span(std::span<const BitVector> generators, std::size_t ambient_dim);

    [[nodiscard]] std::size_t ambient_dim() const { return basis_.cols(); }
    [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
    [[nodiscard]] const F2Matrix& basis() const { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

    [[nodiscard]] bool contains(const BitVector& v) const;
    /// Reduce v against the basis: the unique representative with zeros on every pivot.
    [[nodiscard]] BitVector reduce(BitVector v) const;

private:
    F2Matrix basis_;
    std::vector<std::size_t> pivots_;
};

struct RankKernel {
    std::size_t rank = 0;
    Subspace kernel;
};

/// Projection F2^ambient -> F2^ambient / sub in coordinates given by the non-pivot
/// positions of sub's echelon basis. `representatives[i]` is the ambient coordinate
/// whose unit vector maps to the i-th quotient basis vector.
struct QuotientMap {
    F2Matrix projection;
    std::size_t quotient_dim = 0;
    std::vector<std::size_t> representatives;

    [[nodiscard]] BitVector apply(const BitVector& v) const { return projection.apply(v); }
    /// ambient x quotient_dim matrix sending quotient basis vector i to e_{representatives[i]}.
    [[nodiscard]] F2Matrix section() const;
};

// The entry points below dispatch to the OpenMP kernels; the serial versions live in
// conf2::f2::reference and are kept for cross-checking and benchmarking.

RrefResult rref(const F2Matrix& m);
std::size_t rank(const F2Matrix& m);
RankKernel rank_and_kernel(const F2Matrix& m);
std::optional<BitVector> solve_linear(const F2Matrix& m, const BitVector& b);
std::optional<F2Matrix> inverse(const F2Matrix& m);
QuotientMap quotient_map(std::size_t ambient_dim, const Subspace& sub);
bool subspace_equal(const Subspace& a, const Subspace& b);
/// Indices of the first maximal independent subset of rows, scanning top to bottom.
std::vector<std::size_t> independent_rows(const F2Matrix& m);

namespace reference {
RrefResult rref(const F2Matrix& m);
F2Matrix multiply(const F2Matrix& a, const F2Matrix& b);
} // namespace reference

namespace kernels {
/// In-place reduction to RREF; returns pivot columns. Parallel over rows.
std::vector<std::size_t> rref_in_place(F2Matrix& m);
F2Matrix multiply(const F2Matrix& a, const F2Matrix& b);
} // namespace kernels

} // namespace conf2::f2
