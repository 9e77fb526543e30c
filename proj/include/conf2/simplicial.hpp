#pragma once

#include "conf2/cochain.hpp"
#include "conf2/surface.hpp"

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace conf2::oracle {

/// Malformed user input (bad triangulation file, repeated vertices, ...).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Vertex = std::uint32_t;
using Simplex = std::vector<Vertex>; ///< sorted, distinct

/// Finite simplicial complex given by its facets. Faces of every facet are implied.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Facets are sorted on input; throws InputError on out-of-range or repeated vertices,
    /// empty or over-dimensional facets and duplicate facets.
    SimplicialComplex(std::size_t vertex_count, std::vector<Simplex> facets);

    [[nodiscard]] std::size_t vertex_count() const { return vertex_count_; }
    [[nodiscard]] const std::vector<Simplex>& facets() const { return facets_; }
    [[nodiscard]] int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
    /// All d-simplices in lexicographic order (vertices are all of 0..n-1).
    [[nodiscard]] const std::vector<Simplex>& simplices(int d) const;
    [[nodiscard]] std::vector<std::size_t> f_vector() const;
    [[nodiscard]] long euler() const;
    /// Index of a simplex within simplices(dim); nullopt if absent.
    [[nodiscard]] std::optional<std::size_t> index_of(const Simplex& s) const;
    /// Simplicial boundary ∂_d over F2 (rows: (d-1)-simplices, cols: d-simplices).
    [[nodiscard]] f2::F2Matrix boundary(int d) const;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Simplex> facets_;
    std::vector<std::vector<Simplex>> simplices_;
    std::map<Simplex, std::size_t> index_;
};

struct SurfaceValidation {
    bool closed = false;
    bool connected = false;
    long euler = 0;
    std::array<std::size_t, 3> betti{};
};

SurfaceValidation validate_surface(const SimplicialComplex& k);
/// F2 Betti numbers b_0..b_dim.
std::vector<std::size_t> betti_numbers(const SimplicialComplex& k);

/// Triangulation file: `vertices N` then `f i j k` lines; blank lines and `#` comments ignored.
SimplicialComplex read_triangulation(std::istream& in);
SimplicialComplex read_triangulation(const std::filesystem::path& path);
void write_triangulation(std::ostream& out, const SimplicialComplex& k);

/// Validated shipped triangulations: ∂Δ³, 7-vertex torus, 6-vertex RP², and connected
/// sums of these for higher genus / crosscap number.
SimplicialComplex builtin_triangulation(const SurfaceKind& kind);
SimplicialComplex connected_sum(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex barycentric_subdivide(const SimplicialComplex& k);

/// Cell complex over F2 with an optional cellular involution.
struct CellComplex {
    std::vector<std::vector<std::string>> cells; ///< per dimension, cell labels
    std::vector<f2::F2Matrix> boundary;          ///< boundary[d]: C_d -> C_{d-1}; boundary[0] is 0 x n_0
    std::optional<std::vector<std::vector<std::size_t>>> involution; ///< per dimension, cell permutation

    [[nodiscard]] int dimension() const { return static_cast<int>(cells.size()) - 1; }
    [[nodiscard]] std::size_t count(int d) const;
    [[nodiscard]] std::vector<std::size_t> counts() const;
    [[nodiscard]] long euler() const;
    /// Coboundary δ_d = ∂_{d+1}^T : C^d -> C^{d+1} (empty target above the top dimension).
    [[nodiscard]] f2::F2Matrix coboundary(int d) const;
    /// Matrix of φ -> φ∘σ on C^d.
    [[nodiscard]] f2::F2Matrix involution_on_cochains(int d) const;

    [[nodiscard]] bool boundary_squares_to_zero() const;
    [[nodiscard]] bool involution_commutes() const;
    [[nodiscard]] bool involution_is_free() const;
};

/// Cells σ×τ with σ∩τ = ∅; ∂(σ×τ) = ∂σ×τ + σ×∂τ; involution σ×τ -> τ×σ.
CellComplex deleted_product(const SimplicialComplex& k);

struct CohomologyResult {
    std::vector<std::size_t> dims;
    std::vector<f2::CohomologyGroup> groups; ///< per degree; representatives are the cocycle basis

    [[nodiscard]] const f2::F2Matrix& cocycle_basis(int d) const { return groups.at(static_cast<std::size_t>(d)).representatives(); }
    [[nodiscard]] long euler() const;
};

CohomologyResult cohomology_f2(const CellComplex& c);
/// Swap action on each cohomology group in the cocycle basis. Throws std::logic_error
/// if the involution does not map cocycles to cocycles.
std::vector<f2::F2Matrix> induced_involution(const CellComplex& c, const CohomologyResult& h);
/// Orbit complex of a free involution; throws ValidationError on a fixed cell.
CellComplex quotient_complex(const CellComplex& c);

} // namespace conf2::oracle
