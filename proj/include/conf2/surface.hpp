#pragma once

#include "conf2/f2matrix.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace conf2 {

/// Raised when a construction produces something that violates a checked invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Closed surface up to homeomorphism.
class SurfaceKind {
public:
    enum class Type { Sphere, Orientable, Nonorientable };

    static SurfaceKind sphere() { return {Type::Sphere, 0}; }
    static SurfaceKind orientable(int genus);
    static SurfaceKind nonorientable(int crosscaps);
    /// "sphere", "orientable:G", "nonorientable:K".
    static SurfaceKind parse(std::string_view text);

    [[nodiscard]] Type type() const { return type_; }
    /// Genus g or crosscap count k; 0 for the sphere.
    [[nodiscard]] int count() const { return count_; }
    [[nodiscard]] bool is_orientable() const { return type_ != Type::Nonorientable; }
    [[nodiscard]] int first_betti() const { return type_ == Type::Orientable ? 2 * count_ : count_; }
    [[nodiscard]] int euler() const { return 2 - first_betti(); }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const SurfaceKind&, const SurfaceKind&) = default;

private:
    SurfaceKind(Type t, int c) : type_(t), count_(c) {}
    Type type_;
    int count_;
};

namespace surface {

/// Homogeneous element: coefficient vector over the degree's basis. Degrees above the
/// algebra's top degree are represented by an empty coefficient vector (always zero).
struct Element {
    int degree = 0;
    f2::BitVector coeffs;

    [[nodiscard]] bool is_zero() const { return !coeffs.any(); }
    friend bool operator==(const Element&, const Element&) = default;
};

Element operator+(const Element& a, const Element& b);

/// Graded-commutative F2-algebra on a named basis, given by its multiplication table.
class GradedAlgebra {
public:
    GradedAlgebra() = default;
    /// basis_names[d] lists degree-d basis names; degree 0 holds only the unit.
    explicit GradedAlgebra(std::vector<std::vector<std::string>> basis_names);

    [[nodiscard]] int top_degree() const { return static_cast<int>(names_.size()) - 1; }
    [[nodiscard]] std::size_t dim(int degree) const;
    [[nodiscard]] const std::string& name(int degree, std::size_t index) const { return names_.at(degree).at(index); }
    [[nodiscard]] const std::vector<std::string>& names(int degree) const { return names_.at(degree); }
    [[nodiscard]] std::optional<std::pair<int, std::size_t>> find(std::string_view name) const;

    [[nodiscard]] Element zero(int degree) const;
    [[nodiscard]] Element unit() const { return basis_element(0, 0); }
    [[nodiscard]] Element basis_element(int degree, std::size_t index) const;
    /// Element by basis name; throws std::out_of_range for unknown names.
    [[nodiscard]] Element element(std::string_view name) const;
    /// Sum of named basis elements of one degree.
    [[nodiscard]] Element sum(std::initializer_list<std::string_view> names) const;

    /// Define basis(p,i) * basis(q,j) (and the symmetric product) as `value` in degree p+q.
    void set_product(int p, std::size_t i, int q, std::size_t j, const f2::BitVector& value);
    [[nodiscard]] const f2::BitVector& product(int p, std::size_t i, int q, std::size_t j) const;
    [[nodiscard]] Element multiply(const Element& x, const Element& y) const;

    /// Human-readable sum of basis names, "0" for zero.
    [[nodiscard]] std::string format(const Element& x) const;

private:
    [[nodiscard]] std::size_t slot(int p, int q) const { return static_cast<std::size_t>(p * (top_degree() + 1) + q); }

    std::vector<std::vector<std::string>> names_;
    std::map<std::string, std::pair<int, std::size_t>, std::less<>> index_;
    std::vector<std::vector<f2::BitVector>> table_; ///< [slot(p,q)][i * dim(q) + j]
};

struct CrossFactor {
    int left_degree;
    std::size_t left;
    int right_degree;
    std::size_t right;
};

/// H*(M x M) = H*(M) (x) H*(M) with the swap involution and the diagonal class.
struct KunnethAlgebra {
    GradedAlgebra factor;
    GradedAlgebra algebra;                        ///< basis "x|y" for the cross product x×y
    std::vector<std::vector<CrossFactor>> cross;  ///< per degree, factors of each basis element
    std::vector<f2::F2Matrix> swap;               ///< per degree, x×y -> y×x
    Element diagonal;

    [[nodiscard]] int top_degree() const { return algebra.top_degree(); }
    [[nodiscard]] std::size_t dim(int degree) const { return algebra.dim(degree); }
    /// Cross product x×y of homogeneous elements of the factor ring.
    [[nodiscard]] Element cross_product(const Element& x, const Element& y) const;
    [[nodiscard]] std::size_t cross_index(int p, std::size_t i, int q, std::size_t j) const;
};

GradedAlgebra build_surface_ring(const SurfaceKind& kind);
Element cup_product(const GradedAlgebra& ring, const Element& x, const Element& y);

/// Matrix of the pairing H^p x H^{top-p} -> F2, (x, y) -> coefficient of the top class in xy.
f2::F2Matrix poincare_pairing(const GradedAlgebra& ring, int p);

KunnethAlgebra build_kunneth(const GradedAlgebra& ring);
Element swap_involution(const KunnethAlgebra& k, const Element& x);
/// Sum of e × e^∨ over a basis of H*(M) and its Poincaré dual basis.
/// Throws ValidationError when the pairing is degenerate.
Element diagonal_class(const KunnethAlgebra& k);

} // namespace surface
} // namespace conf2
