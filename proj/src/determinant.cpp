#include "fgroth/determinant.hpp"

#include <bit>
#include <cstdint>
#include <optional>

#include "fgroth/errors.hpp"

namespace fgroth {

Poly determinant(const PolyMatrix& m) {
    const std::size_t r = m.size();
    for (const auto& row : m)
        if (row.size() != r) throw UsageError("determinant: matrix is not square");
    if (r == 0) throw UsageError("determinant: empty matrix has no variable count");
    if (r > 20) throw UsageError("determinant: matrix too large for cofactor expansion");

    const int n_vars = m[0][0].n_vars();
    Caps caps = m[0][0].caps();
    for (const auto& row : m)
        for (const auto& e : row) caps = common_caps(caps, e.caps());

    // minor[mask] = det of the rows r - popcount(mask) .. r-1 restricted to the columns in mask.
    std::vector<std::optional<Poly>> minor(std::size_t(1) << r);
    minor[0] = Poly::constant(n_vars, caps, 1);
    for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
        const std::size_t row = r - static_cast<std::size_t>(std::popcount(mask));
        Poly acc(n_vars, caps);
        int sign = 1;
        for (std::size_t c = 0; c < r; ++c) {
            if (!(mask & (1u << c))) continue;
            const Poly& entry = m[row][c];
            const Poly& sub = *minor[mask & ~(1u << c)];
            if (!entry.is_zero() && !sub.is_zero()) acc.add_scaled(entry * sub, sign);
            sign = -sign;
        }
        minor[mask] = std::move(acc);
    }
    return std::move(*minor[(1u << r) - 1]);
}

}  // namespace fgroth
