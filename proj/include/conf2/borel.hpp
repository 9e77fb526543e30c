#pragma once

#include "conf2/cochain.hpp"
#include "conf2/simplicial.hpp"

#include <optional>
#include <vector>

namespace conf2::borel {

inline constexpr int kDefaultWindow = 8;

/// Cochains of X ×_{S2} S^∞ for a free S2-complex X, built from the periodic resolution
/// of F2 over F2[S2]: T^{p,q} = C^q(X) for every level p >= 0, with total differential
///   d(φ at (p,q)) = δφ at (p,q+1) + (φ + φ∘σ) at (p+1,q).
/// Total degrees 0..window+1 are materialised so H^n is exact for n <= window.
class EquivariantComplex {
public:
    /// Throws ValidationError if the involution is missing or has a fixed cell, or if window < 4.
    EquivariantComplex(const oracle::CellComplex& c, int window = kDefaultWindow);

    [[nodiscard]] int window() const { return window_; }
    [[nodiscard]] int cell_dimension() const { return static_cast<int>(cochain_dims_.size()) - 1; }
    [[nodiscard]] std::size_t total_dim(int n) const;
    /// Offset of block (p, n-p) inside T^n, or nullopt if that block is empty.
    [[nodiscard]] std::optional<std::size_t> block_offset(int n, int p) const;

    /// d_n : T^n -> T^{n+1} (column-vector convention). n = -1 gives the zero map into T^0.
    [[nodiscard]] f2::F2Matrix differential(int n) const;
    /// The level shift T^{p,q} -> T^{p+1,q}, which realises multiplication by α.
    [[nodiscard]] f2::F2Matrix alpha_shift(int n) const;
    /// Constant cochain on 0-cells at level 0.
    [[nodiscard]] f2::BitVector unit() const;

private:
    int window_;
    std::vector<std::size_t> cochain_dims_;
    std::vector<f2::F2Matrix> coboundary_; ///< δ_q : C^q -> C^{q+1}
    std::vector<f2::F2Matrix> norm_;       ///< 1 + σ* on C^q
};

/// Summand F2[α]/(α^length) generated in degree `start`. `truncated` means the tower
/// was still alive at the top of the window, so `length` is only a lower bound.
struct Tower {
    int start = 0;
    int length = 0;
    bool truncated = false;

    friend bool operator==(const Tower&, const Tower&) = default;
    friend auto operator<=>(const Tower&, const Tower&) = default;
};

struct AlphaModule {
    int window = 0;
    std::vector<std::size_t> dims;           ///< H^n for n = 0..window
    std::vector<f2::F2Matrix> alpha_maps;    ///< α : H^n -> H^{n+1} for n = 0..window-1
    f2::BitVector unit;                      ///< coordinates of 1 in H^0
    std::vector<Tower> towers;

    [[nodiscard]] long euler() const;
    /// rank of α^len : H^n -> H^{n+len}; dims[n] for len = 0, 0 outside the window.
    [[nodiscard]] std::size_t composite_rank(int n, int len) const;
};

struct SWHeight {
    int value = 0;
    bool truncated = false; ///< true means "at least value"

    friend bool operator==(const SWHeight&, const SWHeight&) = default;
};

struct EquivariantChecks {
    bool d_squared_zero = true;
    bool alpha_is_chain_map = true;
};

/// Verifies d∘d = 0 and shift∘d = d∘shift on every degree of the window.
EquivariantChecks check_complex(const EquivariantComplex& e);

EquivariantComplex equivariant_cochain_complex(const oracle::CellComplex& c, int window = kDefaultWindow);
/// Throws std::logic_error if the shift fails to be a chain map.
AlphaModule equivariant_cohomology_with_alpha(const EquivariantComplex& e);
/// Towers from composite ranks; throws std::logic_error on a negative multiplicity.
std::vector<Tower> module_decompose(const AlphaModule& a);
/// Largest m with α^m·1 != 0. Throws ValidationError if H^0 is not one-dimensional.
SWHeight sw_height(const AlphaModule& a);

} // namespace conf2::borel
