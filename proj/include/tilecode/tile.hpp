#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tilecode/monomial.hpp"

namespace tilecode {

/// The product of a tile's N-1 direction axes equals e/x_m where x_m is the
/// one axis missing from the direction list; the missing axis index is what
/// we carry around.
struct GradientIndex {
    int axis = -1;

    bool operator==(const GradientIndex&) const = default;
    std::string str(int dim) const { return "e/" + axis_name(dim, axis); }
};

/// Which side of a local trajectory a traversal exits through.
enum class Slot : std::uint8_t { U, D };

inline Slot toggled(Slot s) { return s == Slot::U ? Slot::D : Slot::U; }
inline char slot_letter(Slot s) { return s == Slot::U ? 'U' : 'D'; }

/// A slant N-hedron tile: base lattice point plus an ordered list of N-1
/// distinct axis directions. Its N vertices are the partial products
/// a_0 = base, a_i = a_{i-1} * x_{dirs[i-1]}.
class SlantTile {
public:
    SlantTile(Monomial base, std::vector<int> dirs);

    int dim() const { return base_.dim(); }
    const Monomial& base() const { return base_; }
    const std::vector<int>& dirs() const { return dirs_; }

    /// The unique axis absent from dirs().
    int missing_axis() const;
    GradientIndex gradient() const { return GradientIndex{missing_axis()}; }

    std::vector<Monomial> vertices() const;

    /// The shift operator applied k times (k may be negative). Advancing
    /// once multiplies the base by the first direction and rotates the
    /// direction list with the missing axis appended; N applications equal
    /// translation by e.
    SlantTile shifted(int k = 1) const;

    /// Replaces the last direction by the missing axis (the "up" side of
    /// this tile's local trajectory). Involutive.
    SlantTile up_tile() const;

    /// Advances the base along the first direction and rotates the
    /// direction list cyclically (the "down" side). Keeps the gradient.
    SlantTile down_tile() const;

    SlantTile e_translated(int k) const { return SlantTile(base_.e_translated(k), dirs_); }

    bool operator==(const SlantTile&) const = default;

    /// Literal form, e.g. "zw[xyz]".
    std::string str() const;

private:
    Monomial base_;
    std::vector<int> dirs_;
};

/// The shift-orbit class of a slant tile; geometrically, its projection onto
/// the hyperplane of coordinate-sum zero. Stored as a canonical
/// representative: among the N orbit classes mod e-translation, each is
/// e-translated so all vertex exponents are >= 0 with some axis touching 0,
/// and the one with the smallest base exponent sum is kept (the sums are
/// pairwise distinct mod N, so the minimum is unique).
class FlatTile {
public:
    static FlatTile of(const SlantTile& s);

    const SlantTile& rep() const { return rep_; }
    int dim() const { return rep_.dim(); }

    /// The N orbit-class representatives shifted^0(rep) .. shifted^{N-1}(rep);
    /// their gradients are pairwise distinct and cover all N axes.
    std::vector<SlantTile> lifts() const;

    /// The unique lift class with the given gradient.
    SlantTile lift_with_gradient(GradientIndex g) const;

    bool operator==(const FlatTile&) const = default;

    std::string str() const { return rep_.str(); }

private:
    explicit FlatTile(SlantTile rep) : rep_(std::move(rep)) {}

    SlantTile rep_;
};

/// One lift of a flat tile together with the flats of its up/down sides.
struct Neighbor {
    SlantTile lift;
    FlatTile up;
    FlatTile down;
};

/// The local trajectories of all N lifts of t. The entries form the "slot
/// cycle": down(k) == up(k+1 mod N), the N up-flats are pairwise distinct,
/// and every neighbor flat occurs exactly once on each side.
std::vector<Neighbor> neighbors(const FlatTile& t);

/// The unique lift of `cur` whose up/down pair is {prev, next}, in either
/// order. Throws NotAdjacent if prev or next is not a neighbor flat of cur
/// at all, NoLift if both are neighbors but not adjacent on the slot cycle
/// (the two "diagonals" for N = 4).
SlantTile lift_from_pair(const FlatTile& prev, const FlatTile& cur, const FlatTile& next);

} // namespace tilecode
