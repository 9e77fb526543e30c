#include "conf2/cochain.hpp"

#include <stdexcept>

namespace conf2::f2 {

CohomologyGroup CohomologyGroup::compute(const F2Matrix& incoming, const F2Matrix& outgoing)
{
    if (incoming.rows() != outgoing.cols())
        throw std::invalid_argument("CohomologyGroup: incoming and outgoing maps are not composable");
    const std::size_t n = outgoing.cols();

    CohomologyGroup g;
    g.outgoing_ = outgoing;
    g.boundaries_ = Subspace::span(incoming.transpose());
    g.modulo_boundaries_ = quotient_map(n, g.boundaries_);

    const Subspace cocycles = rank_and_kernel(outgoing).kernel;
    F2Matrix projected(cocycles.dim(), g.modulo_boundaries_.quotient_dim);
    for (std::size_t i = 0; i < cocycles.dim(); ++i)
        projected.set_row(i, g.modulo_boundaries_.apply(cocycles.basis().row(i)));

    const std::vector<std::size_t> keep = independent_rows(projected);
    g.representatives_ = F2Matrix(keep.size(), n);
    F2Matrix kept(keep.size(), g.modulo_boundaries_.quotient_dim);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        g.representatives_.set_row(i, cocycles.basis().row(keep[i]));
        kept.set_row(i, projected.row(keep[i]));
    }
    g.projected_representatives_ = kept.transpose();
    return g;
}

std::optional<BitVector> CohomologyGroup::coordinates(const BitVector& cocycle) const
{
    if (!is_cocycle(cocycle)) return std::nullopt;
    if (dim() == 0) return BitVector(0);
    return solve_linear(projected_representatives_, modulo_boundaries_.apply(cocycle));
}

F2Matrix CohomologyGroup::induced_map(const F2Matrix& f, const CohomologyGroup& target) const
{
    if (f.cols() != cochain_dim() || f.rows() != target.cochain_dim())
        throw std::invalid_argument("CohomologyGroup::induced_map: shape mismatch");
    F2Matrix m(target.dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        const auto image = target.coordinates(f.apply(representatives_.row(i)));
        if (!image) throw std::logic_error("induced_map: image of a cocycle is not a cocycle");
        for (std::size_t r : image->support()) m.set(r, i);
    }
    return m;
}

} // namespace conf2::f2
