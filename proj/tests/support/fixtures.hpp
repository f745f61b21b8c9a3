#pragma once

#include <string>
#include <vector>

#include <hullkit/fixtures.hpp>

namespace testing_support {

/// Every solvable fixture, including a grid of example1 parameters.
inline const std::vector<std::string>& solvable_fixture_ids() {
  static const std::vector<std::string> ids{
      "sol",
      "heisenberg",
      "filiform4",
      "kodaira_thurston",
      "rotation",
      "abelian:n=3",
      "example1",
      "example1:m=2:n=1:a=1,2:b=3",
      "example1:m=1:n=2:a=1/2:b=1,2",
      "example1:m=1:n=0:a=3",
      "example1:m=0:n=1:b=1",
      "example1:m=2:n=0:a=1,-1",
      "example2",
      "section7",
      "section7_Mdelta",
  };
  return ids;
}

/// example1 parameter grid used for the split-form round trip.
inline const std::vector<std::string>& example1_grid() {
  static const std::vector<std::string> ids{
      "example1",
      "example1:m=1:n=0:a=1",
      "example1:m=0:n=1:b=1",
      "example1:m=2:n=1:a=1,2:b=3",
      "example1:m=1:n=2:a=1/2:b=1,2",
      "example1:m=2:n=2:a=1,-1:b=2,1/3",
      "example1:m=1:n=1:a=0:b=1",
      "example1:m=3:n=0:a=1,2,3",
  };
  return ids;
}

}  // namespace testing_support
