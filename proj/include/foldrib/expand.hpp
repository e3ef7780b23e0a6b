#pragma once

// Portion-by-portion expansion of a leveling into a binary grid diagram.

#include <vector>

#include "foldrib/model.hpp"

namespace foldrib {

/// Blocks of a portion, bottom to top. T0 needs its uncrossed cup below the
/// crossed one, so it reads [B1o, B1]; T4 reads [B3, B3o].
std::vector<BlockType> expand_portion(const PortionType& p);

/// Moves realizing the k-th vertex of the leveling; strand positions are
/// frontier indices at that level.
std::vector<Move> portion_moves(const LeveledDiagram& l, int k);

/// All portions stacked bottom to top and laid out on integer columns.
BinaryGridDiagram build_bgd(const LeveledDiagram& l);

}  // namespace foldrib
