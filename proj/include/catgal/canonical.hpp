#pragma once

#include "catgal/category.hpp"

namespace catgal {

// Relabels c so that isomorphic categories get identical tables: objects
// become o0, o1, ... and morphisms f0, f1, ... in canonical order. Colour
// refinement plus individualization, taking the least table over all leaves;
// each search node is charged to the budget.
CategoryPtr canonical_relabel(const CategoryPtr& c, SearchBudget& budget);
CategoryPtr canonical_relabel(const CategoryPtr& c);

}  // namespace catgal
