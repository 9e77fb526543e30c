#include "conf2/borel.hpp"
#include "conf2/linalg.hpp"

#include <stdexcept>

namespace conf2::borel {

EquivariantComplex::EquivariantComplex(const oracle::CellComplex& c, int window) : window_(window)
{
    if (window < 4) throw ValidationError("EquivariantComplex: window must be at least 4");
    if (!c.involution) throw ValidationError("EquivariantComplex: complex has no involution");
    if (!c.involution_is_free()) throw ValidationError("EquivariantComplex: involution has a fixed cell");
    for (int q = 0; q <= c.dimension(); ++q) {
        cochain_dims_.push_back(c.count(q));
        coboundary_.push_back(c.coboundary(q));
        norm_.push_back(f2::F2Matrix::identity(c.count(q)) + c.involution_on_cochains(q));
    }
}

std::size_t EquivariantComplex::total_dim(int n) const
{
    if (n < 0) return 0;
    std::size_t total = 0;
    for (int q = 0; q <= std::min(n, cell_dimension()); ++q) total += cochain_dims_[static_cast<std::size_t>(q)];
    return total;
}

std::optional<std::size_t> EquivariantComplex::block_offset(int n, int p) const
{
    const int q = n - p;
    if (p < 0 || q < 0 || q > cell_dimension()) return std::nullopt;
    // Blocks are laid out by increasing p, i.e. decreasing q.
    std::size_t offset = 0;
    for (int qq = std::min(n, cell_dimension()); qq > q; --qq) offset += cochain_dims_[static_cast<std::size_t>(qq)];
    return offset;
}

f2::F2Matrix EquivariantComplex::differential(int n) const
{
    f2::F2Matrix d(total_dim(n + 1), total_dim(n));
    for (int p = 0; p <= n; ++p) {
        const auto src = block_offset(n, p);
        if (!src) continue;
        const auto q = static_cast<std::size_t>(n - p);
        if (const auto dst = block_offset(n + 1, p)) d.place(*dst, *src, coboundary_[q]);
        if (const auto dst = block_offset(n + 1, p + 1)) d.place(*dst, *src, norm_[q]);
    }
    return d;
}

f2::F2Matrix EquivariantComplex::alpha_shift(int n) const
{
    f2::F2Matrix s(total_dim(n + 1), total_dim(n));
    for (int p = 0; p <= n; ++p) {
        const auto src = block_offset(n, p);
        const auto dst = block_offset(n + 1, p + 1);
        if (!src || !dst) continue;
        for (std::size_t i = 0; i < cochain_dims_[static_cast<std::size_t>(n - p)]; ++i) s.set(*dst + i, *src + i);
    }
    return s;
}

f2::BitVector EquivariantComplex::unit() const
{
    f2::BitVector v(total_dim(0));
    for (std::size_t i = 0; i < v.size(); ++i) v.set(i);
    return v;
}

EquivariantComplex equivariant_cochain_complex(const oracle::CellComplex& c, int window)
{
    return EquivariantComplex(c, window);
}

EquivariantChecks check_complex(const EquivariantComplex& e)
{
    EquivariantChecks out;
    for (int n = 0; n < e.window(); ++n) {
        const f2::F2Matrix d0 = e.differential(n);
        const f2::F2Matrix d1 = e.differential(n + 1);
        if (!(d1 * d0).is_zero()) out.d_squared_zero = false;
        if (e.alpha_shift(n + 1) * d0 != d1 * e.alpha_shift(n)) out.alpha_is_chain_map = false;
    }
    return out;
}

long AlphaModule::euler() const
{
    long chi = 0;
    for (std::size_t n = 0; n < dims.size(); ++n) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(dims[n]);
    return chi;
}

std::size_t AlphaModule::composite_rank(int n, int len) const
{
    if (n < 0 || n + len > window) return 0;
    if (len == 0) return dims[static_cast<std::size_t>(n)];
    f2::F2Matrix m = alpha_maps[static_cast<std::size_t>(n)];
    for (int k = 1; k < len; ++k) m = alpha_maps[static_cast<std::size_t>(n + k)] * m;
    return f2::rank(m);
}

AlphaModule equivariant_cohomology_with_alpha(const EquivariantComplex& e)
{
    const int top = e.window();
    std::vector<f2::F2Matrix> d; // d[n + 1] = d_n for n = -1..top
    for (int n = -1; n <= top; ++n) d.push_back(e.differential(n));
    std::vector<f2::F2Matrix> shift;
    for (int n = 0; n <= top; ++n) shift.push_back(e.alpha_shift(n));

    for (int n = 0; n < top; ++n) {
        const auto i = static_cast<std::size_t>(n);
        if (shift[i + 1] * d[i + 1] != d[i + 2] * shift[i])
            throw std::logic_error("equivariant cohomology: level shift does not commute with d in degree " +
                                   std::to_string(n));
    }

    std::vector<f2::CohomologyGroup> groups;
    AlphaModule a;
    a.window = top;
    for (int n = 0; n <= top; ++n) {
        const auto i = static_cast<std::size_t>(n);
        groups.push_back(f2::CohomologyGroup::compute(d[i], d[i + 1]));
        a.dims.push_back(groups.back().dim());
    }
    for (int n = 0; n < top; ++n) {
        const auto i = static_cast<std::size_t>(n);
        a.alpha_maps.push_back(groups[i].induced_map(shift[i], groups[i + 1]));
    }
    a.unit = *groups[0].coordinates(e.unit());
    a.towers = module_decompose(a);
    return a;
}

std::vector<Tower> module_decompose(const AlphaModule& a)
{
    const int top = a.window;
    auto r = [&](int n, int len) -> long { return static_cast<long>(a.composite_rank(n, len)); };

    std::vector<Tower> towers;
    auto emit = [&](int n, int len, long count, bool truncated) {
        if (count < 0)
            throw std::logic_error("module_decompose: negative tower count at degree " + std::to_string(n) +
                                   ", length " + std::to_string(len));
        for (long i = 0; i < count; ++i) towers.push_back({n, len, truncated});
    };
    for (int n = 0; n <= top; ++n) {
        // Towers born at n that die exactly at n+len-1.
        for (int len = 1; len <= top - n; ++len)
            emit(n, len, (r(n, len - 1) - r(n, len)) - (r(n - 1, len) - r(n - 1, len + 1)), false);
        // Born at n and still alive in the last degree of the window.
        emit(n, top - n + 1, r(n, top - n) - r(n - 1, top - n + 1), true);
    }
    return towers;
}

SWHeight sw_height(const AlphaModule& a)
{
    if (a.dims.empty() || a.dims[0] != 1)
        throw ValidationError("sw_height: H^0 must be one-dimensional (connected orbit space)");
    f2::BitVector v = a.unit;
    for (int m = 1; m <= a.window; ++m) {
        v = a.alpha_maps[static_cast<std::size_t>(m - 1)].apply(v);
        if (!v.any()) return {m - 1, false};
    }
    return {a.window, true};
}

} // namespace conf2::borel
