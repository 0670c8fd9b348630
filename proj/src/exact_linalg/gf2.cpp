#include "fiberlab/linalg.hpp"

namespace fiberlab {

std::size_t rank_gf2(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols)
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        const std::size_t word = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t sel = rank;
        while (sel < rows.size() && !(rows[sel][word] & bit)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        const auto& pivot = rows[rank];
        for (std::size_t r = rank + 1; r < rows.size(); ++r)
            if (rows[r][word] & bit)
                for (std::size_t w = word; w < pivot.size(); ++w) rows[r][w] ^= pivot[w];
        ++rank;
    }
    return rank;
}

}  // namespace fiberlab
