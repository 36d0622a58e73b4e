#include "cocrit/arrowing.hpp"

#include <stdexcept>

namespace cocrit {

ArrowVerdict arrows(const Graph& g, const PairParams& p, const SearchBudget& b) {
    SearchOutcome s = find_critical(g, p, b);
    ArrowVerdict v;
    v.nodes = s.nodes;
    switch (s.status) {
        case SearchStatus::NoneExists:
            v.status = ArrowStatus::Arrows;
            break;
        case SearchStatus::Found:
            v.status = ArrowStatus::NotArrows;
            v.witness = std::move(s.witness);
            break;
        case SearchStatus::Exhausted:
            v.status = ArrowStatus::Unknown;
            break;
    }
    return v;
}

int ramsey_star(int t, int k) {
    PairParams check(t, k);  // validates the range
    return (t - 1) * k + 1;
}

}  // namespace cocrit
