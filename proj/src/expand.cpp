#include "foldrib/expand.hpp"

namespace foldrib {

std::vector<BlockType> expand_portion(const PortionType& p) {
    switch (p.index) {
        case 0: return {kB1o, kB1};
        case 1: return p.plus ? std::vector<BlockType>{kB1} : std::vector<BlockType>{kB1o, kB2};
        case 2: return {kB2};
        case 3: return p.plus ? std::vector<BlockType>{kB3} : std::vector<BlockType>{kB2, kB3o};
        case 4: return {kB3, kB3o};
        default: throw Error(ErrorCode::RoutingError, "portion index out of range");
    }
}

std::vector<Move> portion_moves(const LeveledDiagram& l, int k) {
    const VertexFrame& f = l.frames.at(k);
    const Crossing& c = l.diagram.crossings.at(f.crossing);
    const int r = f.rotation;
    const int p = f.position;
    auto over = [&](int slot) { return c.slot_is_over(((slot % 4) + 4) % 4); };
    const PortionType type = l.portions.at(k);
    switch (type.index) {
        case 0:
            // Cup for the under strand, then the over strand's cup straddles one of its legs.
            return {{kB1o, 0}, {kB1, over(r - 1) ? 0 : 1}};
        case 1:
            if (type.plus) return {{kB1, p}};
            return {{kB1o, p + 1}, {kB2, p, Side::Right}};
        case 2:
            if (over(r)) return {{kB2, p, Side::Right}};
            return {{kB2, p + 1, Side::Left}};
        case 3:
            if (type.plus) return {{kB3, p}};
            return {{kB2, p + 1, Side::Right}, {kB3o, p}};
        case 4:
            return {{kB3, over(r) ? p : p + 1}, {kB3o, p}};
        default:
            throw Error(ErrorCode::RoutingError, "portion index out of range");
    }
}

BinaryGridDiagram build_bgd(const LeveledDiagram& l) {
    std::vector<Move> moves;
    for (int k = 0; k < static_cast<int>(l.frames.size()); ++k) {
        auto part = portion_moves(l, k);
        moves.insert(moves.end(), part.begin(), part.end());
    }
    try {
        return from_moves(moves);
    } catch (const Error& e) {
        throw Error(ErrorCode::RoutingError, std::string("expansion failed: ") + e.what());
    }
}

}  // namespace foldrib
