#pragma once

#include <string>

#include "regmap/analysis.hpp"
#include "regmap/map.hpp"

namespace regmap {

// <R, S | R^3, S^2n, (RS)^2, [R,S]^3>: the rotation group of the map on
// the degree-n Fermat curve, of order 6n^2.
Presentation fermat_presentation(int n);
RegularMap fermat_map(int n, std::size_t max_cosets = kDefaultMaxCosets);

Presentation tetrahedron_presentation();
RegularMap tetrahedron_map();

struct FermatReport {
  int n = 0;
  int group_order = 0;
  int vertex_count = 0;
  int genus = 0;
  Rational density;
  bool simple = false;
  bool reflexive = false;
  int p = 0;
  int q = 0;
  int even_period = 0;
  Classification classification;
  bool pass = false;  // all fields match the expected closed forms
};

FermatReport verify_fermat(int n);

std::string to_json(const FermatReport& r);

}  // namespace regmap
