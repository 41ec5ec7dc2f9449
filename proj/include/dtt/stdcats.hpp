#pragma once

#include <string>
#include <vector>

#include "dtt/fincat.hpp"

namespace dtt {

/// a --f--> b
FinCat walking_arrow();

/// a --f--> b --g--> c, with composite fg
FinCat three_chain();

/// a --f--> b --g--> c --h--> d, with all composites
FinCat four_chain();

/// one object, one non-identity morphism g with g·g = id
FinCat two_element_group();

/// Canonical names for finite sets and functions between them.
ObjId finset_obj_name(const std::vector<std::string>& elems);
MorId finset_mor_name(const ObjId& src, const ObjId& dst,
                      const std::vector<std::pair<std::string, std::string>>& graph);

/// The category of subsets of `atoms` of size <= bound, with all functions.
FinCat finset_category(int bound, const std::vector<std::string>& atoms);

/// Elements of a named subset object of a finset category.
std::vector<std::string> finset_elements(const ObjId& set_name);
/// Graph of a named function morphism.
std::vector<std::pair<std::string, std::string>> finset_graph(const MorId& mor_name);

}  // namespace dtt
