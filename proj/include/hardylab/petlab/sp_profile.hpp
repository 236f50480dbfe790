#pragma once

#include "hardylab/lefun/analysis.hpp"
#include "hardylab/petlab/family.hpp"

namespace hardylab::petlab {

// Degree/type/size/leading vector of a collection of sub-linear-plus-
// polynomial functions: the profile of the maximal non-constant essentially
// distinct subfamily of the polynomial parts (first polynomial included when
// possible).
struct SPProfile {
  int degree = 0;
  TypeVector type;
  size_t size = 0;
  LeadingVector leading;
  std::vector<size_t> chosen;  // indices of the selected subfamily
};

SPProfile sp_profile(const std::vector<lefun::LEFunction>& fs);

}  // namespace hardylab::petlab
