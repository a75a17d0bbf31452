#pragma once

#include <map>
#include <sstream>

#include "crysdem/crystal.hpp"

namespace crysdem {

/// Crystal graph in DOT: nodes labeled with coordinate tuples, directed edges
/// b -> f_i(b) labeled i. Node order follows the canonical (lexicographic)
/// ordering, so output is deterministic.
inline std::string crystal_graph_dot(const CrystalContext& ctx, const std::set<ZVector>& S,
                                     Int label_width = 0) {
    Int width = label_width;
    for (const ZVector& b : S) width = std::max(width, b.max_support());
    std::map<ZVector, size_t> id;
    for (const ZVector& b : S) id.emplace(b, id.size());
    std::ostringstream os;
    os << "digraph crystal {\n";
    os << "  rankdir=TB;\n";
    for (const ZVector& b : S)
        os << "  n" << id.at(b) << " [label=\"" << b.to_string(width) << "\"];\n";
    for (const ZVector& b : S) {
        for (int i = 1; i <= ctx.A.rank(); ++i) {
            auto y = f_tilde(ctx, i, b);
            if (y && S.count(*y))
                os << "  n" << id.at(b) << " -> n" << id.at(*y) << " [label=\"" << i << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace crysdem
