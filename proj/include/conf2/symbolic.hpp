#pragma once

#include "conf2/linalg.hpp"
#include "conf2/surface.hpp"

#include <vector>

namespace conf2 {

/// Multiplicities of a finite F2[S2]-module: t trivial summands F2, f free summands F2[S2].
struct RepDecomposition {
    std::size_t trivial = 0;
    std::size_t free = 0;

    [[nodiscard]] std::size_t dim() const { return trivial + 2 * free; }
    friend bool operator==(const RepDecomposition&, const RepDecomposition&) = default;
};

/// f = rank(1 + swap), t = dim - 2f. Throws ValidationError unless swap^2 = 1.
RepDecomposition rep_decompose(std::size_t dim, const f2::F2Matrix& swap);

namespace symbolic {

inline constexpr int kTopDegree = 4;

struct DegreeCohomology {
    int degree = 0;
    std::size_t ambient_dim = 0;  ///< dim H^q(M x M)
    f2::Subspace kernel;          ///< ker i* inside H^q(M x M)
    f2::QuotientMap quotient;     ///< H^q(M x M) -> H^q(Conf)
    f2::F2Matrix induced_swap;    ///< swap on H^q(Conf) in quotient coordinates
    RepDecomposition decomposition;
    std::vector<std::string> basis_labels; ///< cross-product names of the quotient representatives

    [[nodiscard]] std::size_t dim() const { return quotient.quotient_dim; }
};

/// H^q(Conf(2,M); F2) for q = 0..4 as quotients of H^q(M x M).
struct ConfCohomology {
    SurfaceKind kind = SurfaceKind::sphere();
    std::vector<DegreeCohomology> degrees;

    [[nodiscard]] std::vector<std::size_t> dims() const;
    [[nodiscard]] long euler() const;
    /// Zero group for degrees outside 0..4.
    [[nodiscard]] std::size_t dim(int q) const;
    [[nodiscard]] RepDecomposition decomposition(int q) const;
};

/// span{(x×1)·u0 : x a basis element of H^{q-2}(M)}; zero for q < 2.
f2::Subspace gysin_kernel(const surface::KunnethAlgebra& k, int q);
/// Degree-q part of the ideal (u0): span{z·u0 : z a basis element of H^{q-2}(M x M)}.
f2::Subspace diagonal_ideal(const surface::KunnethAlgebra& k, int q);
/// True iff the Gysin kernel and the degree-q part of (u0) coincide.
bool kernel_ideal_check(const surface::KunnethAlgebra& k, int q);
/// True iff swap maps the degree-q Gysin kernel into itself.
bool kernel_is_swap_invariant(const surface::KunnethAlgebra& k, int q);

ConfCohomology conf_cohomology(const SurfaceKind& kind);
ConfCohomology conf_cohomology(const surface::KunnethAlgebra& k, const SurfaceKind& kind);

} // namespace symbolic
} // namespace conf2
