#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "prmlcc/field.hpp"

namespace prmlcc {

/// A point of the projective space P^m over GF(q), stored as its canonical
/// representative: m+1 coordinates whose first nonzero entry is 1.
struct ProjPoint {
    std::vector<Elem> coords;

    unsigned dim() const { return static_cast<unsigned>(coords.size()) - 1; }  // m

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

struct Normalized {
    ProjPoint point;  // canonical representative
    Elem scale;       // leading nonzero coordinate of the input, so raw == scale * point
};

/// Canonical representative of a nonzero vector plus the scalar that was
/// divided out. Throws std::invalid_argument on the zero vector.
Normalized normalize(const Field& f, std::span<const Elem> raw);

bool is_normalized(std::span<const Elem> coords);

/// Caps on enumeration sizes. Exceeding them is an error, not an OOM.
inline constexpr std::size_t kEnumerationCap = 10'000'000;

/// Number of points of P^m: (q^{m+1} - 1)/(q - 1). Throws when the count
/// exceeds cap.
std::size_t projective_size(const Field& f, unsigned m, std::size_t cap = kEnumerationCap);

/// All points of P^m in canonical order: ascending position of the leading
/// 1 (stratum), then lexicographically on the free trailing coordinates,
/// leftmost coordinate most significant, elements in canonical field order.
/// Codeword indexing everywhere in the library is the position in this list.
std::vector<ProjPoint> enumerate_points(const Field& f, unsigned m, std::size_t cap = kEnumerationCap);

/// Position of a normalized point in the canonical enumeration, computed
/// arithmetically (no table).
std::size_t point_index(const Field& f, const ProjPoint& p);

/// Inverse of point_index.
ProjPoint point_at(const Field& f, unsigned m, std::size_t index);

/// The projective line through w with direction v, one entry per parameter:
/// the q finite parameters in canonical field order (so entry 0 is w
/// itself), then infinity, which maps to v. The q+1 points are pairwise
/// distinct.
struct Line {
    std::vector<ExtElem> params;
    std::vector<ProjPoint> points;
    std::vector<Elem> scalars;  // leading scalar of w + lambda*v; 1 at lambda = 0 and at infinity
};

/// Throws std::invalid_argument when w == v or the points are not
/// normalized points of the same space.
Line line_through(const Field& f, const ProjPoint& w, const ProjPoint& v);

// Affine space A^m, used by the GRM reference code. Enumeration is
// lexicographic with the first coordinate most significant.

std::size_t affine_size(const Field& f, unsigned m, std::size_t cap = kEnumerationCap);
std::vector<Elem> affine_at(const Field& f, unsigned m, std::size_t index);
std::size_t affine_index(const Field& f, std::span<const Elem> coords);

}  // namespace prmlcc
