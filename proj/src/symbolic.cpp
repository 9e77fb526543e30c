#include "conf2/symbolic.hpp"

namespace conf2 {

RepDecomposition rep_decompose(std::size_t dim, const f2::F2Matrix& swap)
{
    if (swap.rows() != dim || swap.cols() != dim) throw ValidationError("rep_decompose: swap has the wrong shape");
    const f2::F2Matrix id = f2::F2Matrix::identity(dim);
    if (swap * swap != id) throw ValidationError("rep_decompose: swap is not an involution");
    const std::size_t f = f2::rank(id + swap);
    return {dim - 2 * f, f};
}

namespace symbolic {

std::vector<std::size_t> ConfCohomology::dims() const
{
    std::vector<std::size_t> out;
    for (const auto& d : degrees) out.push_back(d.dim());
    return out;
}

long ConfCohomology::euler() const
{
    long chi = 0;
    for (const auto& d : degrees) chi += (d.degree % 2 == 0 ? 1 : -1) * static_cast<long>(d.dim());
    return chi;
}

std::size_t ConfCohomology::dim(int q) const
{
    if (q < 0 || q >= static_cast<int>(degrees.size())) return 0;
    return degrees[static_cast<std::size_t>(q)].dim();
}

RepDecomposition ConfCohomology::decomposition(int q) const
{
    if (q < 0 || q >= static_cast<int>(degrees.size())) return {};
    return degrees[static_cast<std::size_t>(q)].decomposition;
}

f2::Subspace gysin_kernel(const surface::KunnethAlgebra& k, int q)
{
    const std::size_t n = k.dim(q);
    if (q < 2 || q > k.top_degree()) return f2::Subspace::zero(n);
    std::vector<f2::BitVector> gens;
    const surface::Element one = k.factor.unit();
    for (std::size_t i = 0; i < k.factor.dim(q - 2); ++i) {
        const surface::Element x1 = k.cross_product(k.factor.basis_element(q - 2, i), one);
        gens.push_back(k.algebra.multiply(x1, k.diagonal).coeffs);
    }
    return f2::Subspace::span(gens, n);
}

f2::Subspace diagonal_ideal(const surface::KunnethAlgebra& k, int q)
{
    const std::size_t n = k.dim(q);
    if (q < 2 || q > k.top_degree()) return f2::Subspace::zero(n);
    std::vector<f2::BitVector> gens;
    for (std::size_t i = 0; i < k.dim(q - 2); ++i)
        gens.push_back(k.algebra.multiply(k.algebra.basis_element(q - 2, i), k.diagonal).coeffs);
    return f2::Subspace::span(gens, n);
}

bool kernel_ideal_check(const surface::KunnethAlgebra& k, int q)
{
    return f2::subspace_equal(gysin_kernel(k, q), diagonal_ideal(k, q));
}

bool kernel_is_swap_invariant(const surface::KunnethAlgebra& k, int q)
{
    const f2::Subspace kernel = gysin_kernel(k, q);
    if (kernel.dim() == 0) return true;
    const f2::F2Matrix& swap = k.swap[static_cast<std::size_t>(q)];
    for (std::size_t i = 0; i < kernel.dim(); ++i)
        if (!kernel.contains(swap.apply(kernel.basis().row(i)))) return false;
    return true;
}

ConfCohomology conf_cohomology(const SurfaceKind& kind)
{
    return conf_cohomology(surface::build_kunneth(surface::build_surface_ring(kind)), kind);
}

ConfCohomology conf_cohomology(const surface::KunnethAlgebra& k, const SurfaceKind& kind)
{
    ConfCohomology out;
    out.kind = kind;
    for (int q = 0; q <= kTopDegree; ++q) {
        DegreeCohomology d;
        d.degree = q;
        d.ambient_dim = k.dim(q);
        d.kernel = gysin_kernel(k, q);
        if (!kernel_is_swap_invariant(k, q))
            throw ValidationError("conf_cohomology: kernel in degree " + std::to_string(q) + " is not swap-invariant");
        d.quotient = f2::quotient_map(d.ambient_dim, d.kernel);

        const f2::F2Matrix& swap = q <= k.top_degree() ? k.swap[static_cast<std::size_t>(q)] : f2::F2Matrix();
        d.induced_swap = d.quotient.projection * swap * d.quotient.section();
        d.decomposition = rep_decompose(d.dim(), d.induced_swap);
        for (std::size_t r : d.quotient.representatives) d.basis_labels.push_back(k.algebra.name(q, r));
        out.degrees.push_back(std::move(d));
    }
    if (out.dim(4) != 0)
        throw ValidationError("conf_cohomology: H^4 does not vanish (dim " + std::to_string(out.dim(4)) + ")");
    return out;
}

} // namespace symbolic
} // namespace conf2
