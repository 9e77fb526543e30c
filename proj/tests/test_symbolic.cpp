#include "conf2/symbolic.hpp"

#include <doctest.h>

using namespace conf2;
using namespace conf2::surface;

namespace {

KunnethAlgebra kunneth(const SurfaceKind& kind) { return build_kunneth(build_surface_ring(kind)); }

f2::Subspace span_of(const KunnethAlgebra& k, int degree, std::vector<Element> elems)
{
    std::vector<f2::BitVector> rows;
    for (const auto& e : elems) rows.push_back(e.coeffs);
    return f2::Subspace::span(rows, k.dim(degree));
}

std::vector<SurfaceKind> sweep(int max)
{
    std::vector<SurfaceKind> kinds{SurfaceKind::sphere()};
    for (int n = 1; n <= max; ++n) {
        kinds.push_back(SurfaceKind::orientable(n));
        kinds.push_back(SurfaceKind::nonorientable(n));
    }
    return kinds;
}

} // namespace

TEST_CASE("Gysin kernel of the torus")
{
    const auto k = kunneth(SurfaceKind::orientable(1));
    const auto& a = k.algebra;
    CHECK(f2::subspace_equal(symbolic::gysin_kernel(k, 2), span_of(k, 2, {k.diagonal})));
    CHECK(f2::subspace_equal(symbolic::gysin_kernel(k, 3),
                             span_of(k, 3, {a.sum({"a1|u", "u|a1"}), a.sum({"b1|u", "u|b1"})})));
    CHECK(symbolic::gysin_kernel(k, 4).dim() == 1);
    for (const auto& kind : sweep(3)) {
        const auto kk = kunneth(kind);
        CHECK(symbolic::gysin_kernel(kk, 0).dim() == 0);
        CHECK(symbolic::gysin_kernel(kk, 1).dim() == 0);
    }
}

TEST_CASE("kernel is the ideal generated by the diagonal class")
{
    const auto g2 = kunneth(SurfaceKind::orientable(2));
    CHECK(symbolic::kernel_ideal_check(g2, 4));
    CHECK(f2::subspace_equal(symbolic::gysin_kernel(g2, 4), span_of(g2, 4, {g2.algebra.element("u|u")})));
    for (const auto& kind : sweep(4)) {
        CAPTURE(kind.to_string());
        const auto k = kunneth(kind);
        for (int q = 0; q <= 4; ++q) {
            CHECK(symbolic::kernel_ideal_check(k, q));
            CHECK(symbolic::kernel_is_swap_invariant(k, q));
        }
        CHECK(symbolic::gysin_kernel(k, 2).dim() == 1);
    }
}

TEST_CASE("Conf cohomology of small surfaces")
{
    CHECK(symbolic::conf_cohomology(SurfaceKind::sphere()).dims() == std::vector<std::size_t>{1, 0, 1, 0, 0});
    const auto torus = symbolic::conf_cohomology(SurfaceKind::orientable(1));
    CHECK(torus.dims() == std::vector<std::size_t>{1, 4, 5, 2, 0});
    CHECK(torus.decomposition(0) == RepDecomposition{1, 0});
    CHECK(torus.decomposition(1) == RepDecomposition{0, 2});
    CHECK(torus.decomposition(2) == RepDecomposition{3, 1});
    CHECK(torus.decomposition(3) == RepDecomposition{2, 0});
    CHECK(symbolic::conf_cohomology(SurfaceKind::nonorientable(1)).dims() ==
          std::vector<std::size_t>{1, 2, 2, 1, 0});
}

TEST_CASE("closed forms across the sweep")
{
    for (const auto& kind : sweep(4)) {
        CAPTURE(kind.to_string());
        const auto c = symbolic::conf_cohomology(kind);
        const long chi = kind.euler();
        CHECK(c.euler() == chi * chi - chi);
        CHECK(c.dim(4) == 0);
        for (int q = 0; q <= 4; ++q) CHECK(c.decomposition(q).dim() == c.dim(q));
        const auto n = static_cast<std::size_t>(kind.count());
        switch (kind.type()) {
        case SurfaceKind::Type::Sphere:
            CHECK(c.decomposition(2) == RepDecomposition{1, 0});
            break;
        case SurfaceKind::Type::Orientable:
            CHECK(c.decomposition(1) == RepDecomposition{0, 2 * n});
            CHECK(c.decomposition(2) == RepDecomposition{2 * n + 1, 2 * n * n - n});
            CHECK(c.decomposition(3) == RepDecomposition{2 * n, 0});
            break;
        case SurfaceKind::Type::Nonorientable:
            CHECK(c.decomposition(1) == RepDecomposition{0, n});
            CHECK(c.decomposition(2) == RepDecomposition{n - 1, n * (n - 1) / 2 + 1});
            CHECK(c.decomposition(3) == RepDecomposition{n, 0});
            break;
        }
    }
}

TEST_CASE("H3 of genus g is generated by u×a_i, u×b_i")
{
    const auto c = symbolic::conf_cohomology(SurfaceKind::orientable(2));
    const auto& h3 = c.degrees[3];
    for (const auto& label : h3.basis_labels) {
        const bool u_left = label.rfind("u|", 0) == 0;
        const bool u_right = label.size() > 2 && label.substr(label.size() - 2) == "|u";
        CHECK((u_left || u_right));
    }
    // The swap fixes each class since u×x ≡ x×u modulo the kernel.
    CHECK(h3.induced_swap == f2::F2Matrix::identity(h3.dim()));
}

TEST_CASE("rep_decompose")
{
    CHECK(rep_decompose(2, f2::F2Matrix::from_rows({{0, 1}, {1, 0}})) == RepDecomposition{0, 1});
    CHECK(rep_decompose(3, f2::F2Matrix::identity(3)) == RepDecomposition{3, 0});
    CHECK(rep_decompose(0, f2::F2Matrix()) == RepDecomposition{0, 0});
    // Unipotent 3x3 with (1+s) of rank 1: one free and one trivial summand.
    CHECK(rep_decompose(3, f2::F2Matrix::from_rows({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})) == RepDecomposition{1, 1});
    CHECK_THROWS_AS(rep_decompose(2, f2::F2Matrix::from_rows({{1, 1}, {1, 0}})), ValidationError);
}
