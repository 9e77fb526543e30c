#include "conf2/surface.hpp"
#include "conf2/linalg.hpp"

#include <charconv>

namespace conf2 {

SurfaceKind SurfaceKind::orientable(int genus)
{
    if (genus < 1) throw std::invalid_argument("orientable surface needs genus >= 1 (use sphere for genus 0)");
    return {Type::Orientable, genus};
}

SurfaceKind SurfaceKind::nonorientable(int crosscaps)
{
    if (crosscaps < 1) throw std::invalid_argument("nonorientable surface needs at least one crosscap");
    return {Type::Nonorientable, crosscaps};
}

SurfaceKind SurfaceKind::parse(std::string_view text)
{
    if (text == "sphere") return sphere();
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("unknown surface '" + std::string(text) + "'");
    const std::string_view head = text.substr(0, colon);
    const std::string_view tail = text.substr(colon + 1);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
    if (ec != std::errc{} || ptr != tail.data() + tail.size())
        throw std::invalid_argument("bad surface count in '" + std::string(text) + "'");
    if (head == "orientable") return n == 0 ? sphere() : orientable(n);
    if (head == "nonorientable") return nonorientable(n);
    throw std::invalid_argument("unknown surface '" + std::string(text) + "'");
}

std::string SurfaceKind::to_string() const
{
    switch (type_) {
    case Type::Sphere: return "sphere";
    case Type::Orientable: return "orientable:" + std::to_string(count_);
    case Type::Nonorientable: return "nonorientable:" + std::to_string(count_);
    }
    return {};
}

namespace surface {

Element operator+(const Element& a, const Element& b)
{
    if (a.degree != b.degree) throw std::invalid_argument("Element: adding different degrees");
    return {a.degree, a.coeffs ^ b.coeffs};
}

GradedAlgebra::GradedAlgebra(std::vector<std::vector<std::string>> basis_names) : names_(std::move(basis_names))
{
    if (names_.empty() || names_[0].size() != 1)
        throw ValidationError("GradedAlgebra: degree 0 must be spanned by the unit");
    for (int d = 0; d <= top_degree(); ++d)
        for (std::size_t i = 0; i < names_[d].size(); ++i)
            if (!index_.emplace(names_[d][i], std::pair{d, i}).second)
                throw ValidationError("GradedAlgebra: duplicate basis name " + names_[d][i]);

    const int slots = (top_degree() + 1) * (top_degree() + 1);
    table_.resize(static_cast<std::size_t>(slots));
    for (int p = 0; p <= top_degree(); ++p)
        for (int q = 0; q <= top_degree(); ++q) {
            const std::size_t width = p + q <= top_degree() ? dim(p + q) : 0;
            table_[slot(p, q)].assign(dim(p) * dim(q), f2::BitVector(width));
        }
    for (int d = 0; d <= top_degree(); ++d)
        for (std::size_t i = 0; i < dim(d); ++i) set_product(0, 0, d, i, f2::BitVector::unit(dim(d), i));
}

std::size_t GradedAlgebra::dim(int degree) const
{
    if (degree < 0 || degree > top_degree()) return 0;
    return names_[static_cast<std::size_t>(degree)].size();
}

std::optional<std::pair<int, std::size_t>> GradedAlgebra::find(std::string_view name) const
{
    const auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Element GradedAlgebra::zero(int degree) const { return {degree, f2::BitVector(dim(degree))}; }

Element GradedAlgebra::basis_element(int degree, std::size_t index) const
{
    return {degree, f2::BitVector::unit(dim(degree), index)};
}

Element GradedAlgebra::element(std::string_view name) const
{
    const auto pos = find(name);
    if (!pos) throw std::out_of_range("no basis element named " + std::string(name));
    return basis_element(pos->first, pos->second);
}

Element GradedAlgebra::sum(std::initializer_list<std::string_view> names) const
{
    if (names.size() == 0) throw std::invalid_argument("GradedAlgebra::sum: empty list");
    Element acc = element(*names.begin());
    for (auto it = names.begin() + 1; it != names.end(); ++it) acc = acc + element(*it);
    return acc;
}

void GradedAlgebra::set_product(int p, std::size_t i, int q, std::size_t j, const f2::BitVector& value)
{
    if (p + q > top_degree()) throw std::out_of_range("set_product: degree above top");
    if (value.size() != dim(p + q)) throw std::invalid_argument("set_product: wrong value length");
    table_[slot(p, q)][i * dim(q) + j] = value;
    table_[slot(q, p)][j * dim(p) + i] = value;
}

const f2::BitVector& GradedAlgebra::product(int p, std::size_t i, int q, std::size_t j) const
{
    return table_[slot(p, q)][i * dim(q) + j];
}

Element GradedAlgebra::multiply(const Element& x, const Element& y) const
{
    const int d = x.degree + y.degree;
    Element out = zero(d);
    if (d > top_degree() || x.degree < 0 || y.degree < 0) return out;
    for (std::size_t i : x.coeffs.support())
        for (std::size_t j : y.coeffs.support()) out.coeffs ^= product(x.degree, i, y.degree, j);
    return out;
}

std::string GradedAlgebra::format(const Element& x) const
{
    std::string s;
    for (std::size_t i : x.coeffs.support()) {
        if (!s.empty()) s += " + ";
        s += name(x.degree, i);
    }
    return s.empty() ? "0" : s;
}

GradedAlgebra build_surface_ring(const SurfaceKind& kind)
{
    std::vector<std::string> deg1;
    const int n = kind.count();
    if (kind.type() == SurfaceKind::Type::Orientable) {
        for (int i = 1; i <= n; ++i) deg1.push_back("a" + std::to_string(i));
        for (int i = 1; i <= n; ++i) deg1.push_back("b" + std::to_string(i));
    } else if (kind.type() == SurfaceKind::Type::Nonorientable) {
        for (int i = 1; i <= n; ++i) deg1.push_back("w" + std::to_string(i));
    }
    GradedAlgebra ring({{"1"}, deg1, {"u"}});
    const f2::BitVector u = f2::BitVector::unit(1, 0);

    // Products not set here stay zero: a_i a_j = b_i b_j = a_i b_j = 0 (i != j),
    // a_i^2 = b_i^2 = 0, w_i w_j = 0 (i != j).
    if (kind.type() == SurfaceKind::Type::Orientable) {
        for (int i = 0; i < n; ++i)
            ring.set_product(1, static_cast<std::size_t>(i), 1, static_cast<std::size_t>(n + i), u);
    } else if (kind.type() == SurfaceKind::Type::Nonorientable) {
        for (int i = 0; i < n; ++i) ring.set_product(1, static_cast<std::size_t>(i), 1, static_cast<std::size_t>(i), u);
    }
    return ring;
}

Element cup_product(const GradedAlgebra& ring, const Element& x, const Element& y) { return ring.multiply(x, y); }

f2::F2Matrix poincare_pairing(const GradedAlgebra& ring, int p)
{
    const int top = ring.top_degree();
    const int q = top - p;
    f2::F2Matrix m(ring.dim(p), ring.dim(q));
    for (std::size_t i = 0; i < ring.dim(p); ++i)
        for (std::size_t j = 0; j < ring.dim(q); ++j)
            if (ring.product(p, i, q, j).any()) m.set(i, j);
    return m;
}

std::size_t KunnethAlgebra::cross_index(int p, std::size_t i, int q, std::size_t j) const
{
    const auto pos = algebra.find(factor.name(p, i) + "|" + factor.name(q, j));
    if (!pos) throw std::out_of_range("cross_index: no such cross product");
    return pos->second;
}

Element KunnethAlgebra::cross_product(const Element& x, const Element& y) const
{
    Element out = algebra.zero(x.degree + y.degree);
    if (x.degree + y.degree > top_degree()) return out;
    for (std::size_t i : x.coeffs.support())
        for (std::size_t j : y.coeffs.support()) out.coeffs.flip(cross_index(x.degree, i, y.degree, j));
    return out;
}

KunnethAlgebra build_kunneth(const GradedAlgebra& ring)
{
    const int top = 2 * ring.top_degree();
    std::vector<std::vector<std::string>> names(static_cast<std::size_t>(top + 1));
    std::vector<std::vector<CrossFactor>> cross(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n)
        for (int p = 0; p <= n; ++p)
            for (std::size_t i = 0; i < ring.dim(p); ++i)
                for (std::size_t j = 0; j < ring.dim(n - p); ++j) {
                    names[n].push_back(ring.name(p, i) + "|" + ring.name(n - p, j));
                    cross[n].push_back({p, i, n - p, j});
                }

    KunnethAlgebra k{ring, GradedAlgebra(names), std::move(cross), {}, {}};

    // (x×y)(x'×y') = (xx')×(yy'); over F2 the Koszul sign disappears.
    for (int n = 0; n <= top; ++n)
        for (int m = n; n + m <= top; ++m)
            for (std::size_t s = 0; s < k.dim(n); ++s)
                for (std::size_t t = 0; t < k.dim(m); ++t) {
                    const CrossFactor& a = k.cross[n][s];
                    const CrossFactor& b = k.cross[m][t];
                    const Element left = ring.multiply(ring.basis_element(a.left_degree, a.left),
                                                       ring.basis_element(b.left_degree, b.left));
                    const Element right = ring.multiply(ring.basis_element(a.right_degree, a.right),
                                                        ring.basis_element(b.right_degree, b.right));
                    k.algebra.set_product(n, s, m, t, k.cross_product(left, right).coeffs);
                }

    for (int n = 0; n <= top; ++n) {
        std::vector<std::size_t> image(k.dim(n));
        for (std::size_t s = 0; s < k.dim(n); ++s) {
            const CrossFactor& c = k.cross[n][s];
            image[s] = k.cross_index(c.right_degree, c.right, c.left_degree, c.left);
        }
        k.swap.push_back(f2::F2Matrix::permutation(image));
    }

    k.diagonal = diagonal_class(k);
    return k;
}

Element swap_involution(const KunnethAlgebra& k, const Element& x)
{
    if (x.degree < 0 || x.degree > k.top_degree()) return x;
    return {x.degree, k.swap[static_cast<std::size_t>(x.degree)].apply(x.coeffs)};
}

Element diagonal_class(const KunnethAlgebra& k)
{
    const GradedAlgebra& ring = k.factor;
    const int top = ring.top_degree();
    if (ring.dim(top) != 1) throw ValidationError("diagonal_class: top degree must be one-dimensional");

    Element u0 = k.algebra.zero(top);
    for (int p = 0; p <= top; ++p) {
        const int q = top - p;
        const f2::F2Matrix pairing = poincare_pairing(ring, p);
        if (pairing.rows() != pairing.cols())
            throw ValidationError("diagonal_class: H^" + std::to_string(p) + " and H^" + std::to_string(q) +
                                  " have different dimensions");
        // Dual basis e_i^∨ = Σ_j C_ij f_j with <e_i, e_k^∨> = δ_ik, i.e. C = (P^T)^{-1}.
        const auto c = f2::inverse(pairing.transpose());
        if (!c) throw ValidationError("diagonal_class: degenerate pairing in degree " + std::to_string(p));
        for (std::size_t i = 0; i < ring.dim(p); ++i) {
            Element dual{q, c->row(i)};
            u0 = u0 + k.cross_product(ring.basis_element(p, i), dual);
        }
    }
    return u0;
}

} // namespace surface
} // namespace conf2
