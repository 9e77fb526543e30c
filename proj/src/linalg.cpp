#include "conf2/linalg.hpp"

#include <stdexcept>

namespace conf2::f2 {

RrefResult rref(const F2Matrix& m)
{
    RrefResult out{m, {}};
    out.pivots = kernels::rref_in_place(out.reduced);
    return out;
}

std::size_t rank(const F2Matrix& m)
{
    F2Matrix copy = m;
    return kernels::rref_in_place(copy).size();
}

RankKernel rank_and_kernel(const F2Matrix& m)
{
    const RrefResult r = rref(m);
    const std::size_t n = m.cols();

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;

    // One kernel vector per free column f: x_f = 1, x_{pivot_i} = R[i][f].
    F2Matrix generators(n - r.rank(), n);
    std::size_t g = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        generators.set(g, f);
        for (std::size_t i = 0; i < r.rank(); ++i)
            if (r.reduced.get(i, f)) generators.set(g, r.pivots[i]);
        ++g;
    }
    return {r.rank(), Subspace::span(generators)};
}

std::optional<BitVector> solve_linear(const F2Matrix& m, const BitVector& b)
{
    if (b.size() != m.rows()) throw std::invalid_argument("solve_linear: rhs length must equal rows");
    const std::size_t n = m.cols();
    F2Matrix aug(m.rows(), n + 1);
    aug.place(0, 0, m);
    for (std::size_t r : b.support()) aug.set(r, n);

    const RrefResult r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == n) return std::nullopt;

    BitVector x(n);
    for (std::size_t i = 0; i < r.rank(); ++i)
        if (r.reduced.get(i, n)) x.set(r.pivots[i]);
    return x;
}

std::optional<F2Matrix> inverse(const F2Matrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix must be square");
    const std::size_t n = m.rows();
    F2Matrix aug(n, 2 * n);
    aug.place(0, 0, m);
    aug.place(0, n, F2Matrix::identity(n));
    const RrefResult r = rref(aug);
    if (r.rank() < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;

    F2Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (r.reduced.get(i, n + j)) inv.set(i, j);
    return inv;
}

std::vector<std::size_t> independent_rows(const F2Matrix& m)
{
    // Pivot columns of the transpose are exactly the greedy independent rows.
    return rref(m.transpose()).pivots;
}

Subspace Subspace::zero(std::size_t ambient_dim)
{
    Subspace s;
    s.basis_ = F2Matrix(0, ambient_dim);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) { return span(F2Matrix::identity(ambient_dim)); }

Subspace Subspace::span(const F2Matrix& generators)
{
    RrefResult r = rref(generators);
    Subspace s;
    s.basis_ = r.reduced.row_block(0, r.rank());
    s.pivots_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::span(std::span<const BitVector> generators, std::size_t ambient_dim)
{
    return span(F2Matrix::from_row_vectors(generators, ambient_dim));
}

BitVector Subspace::reduce(BitVector v) const
{
    if (v.size() != ambient_dim()) throw std::invalid_argument("Subspace::reduce: size mismatch");
    for (std::size_t i = 0; i < pivots_.size(); ++i)
        if (v.get(pivots_[i])) v ^= basis_.row(i);
    return v;
}

bool Subspace::contains(const BitVector& v) const { return !reduce(v).any(); }

F2Matrix QuotientMap::section() const
{
    F2Matrix s(projection.cols(), quotient_dim);
    for (std::size_t i = 0; i < quotient_dim; ++i) s.set(representatives[i], i);
    return s;
}

QuotientMap quotient_map(std::size_t ambient_dim, const Subspace& sub)
{
    if (sub.ambient_dim() != ambient_dim) throw std::invalid_argument("quotient_map: ambient dimension mismatch");

    std::vector<long> slot(ambient_dim, -1);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (std::size_t p : sub.pivots()) is_pivot[p] = true;

    QuotientMap q;
    for (std::size_t c = 0; c < ambient_dim; ++c) {
        if (is_pivot[c]) continue;
        slot[c] = static_cast<long>(q.representatives.size());
        q.representatives.push_back(c);
    }
    q.quotient_dim = q.representatives.size();
    q.projection = F2Matrix(q.quotient_dim, ambient_dim);

    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) q.projection.set(static_cast<std::size_t>(slot[c]), c);

    // e_{pivot_i} is congruent to (basis row i minus e_{pivot_i}), which lives on
    // non-pivot coordinates only because the basis is fully reduced.
    const F2Matrix& basis = sub.basis();
    for (std::size_t i = 0; i < sub.pivots().size(); ++i) {
        const std::size_t p = sub.pivots()[i];
        for (std::size_t c : basis.row(i).support())
            if (c != p) q.projection.set(static_cast<std::size_t>(slot[c]), p);
    }
    return q;
}

bool subspace_equal(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace_equal: ambient dimension mismatch");
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!b.contains(a.basis().row(i))) return false;
    return true;
}

} // namespace conf2::f2
