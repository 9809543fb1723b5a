#include "regmap/fermat.hpp"

#include <stdexcept>

#include <json.hpp>

#include "regmap/parse.hpp"

namespace regmap {

Presentation fermat_presentation(int n) {
  if (n < 1) throw std::invalid_argument("fermat_presentation requires n >= 1");
  return parse_presentation("gens R S ; rels R^3, S^" + std::to_string(2 * n) +
                            ", (R*S)^2, [R,S]^3");
}

RegularMap fermat_map(int n, std::size_t max_cosets) {
  return build_map(fermat_presentation(n), max_cosets);
}

Presentation tetrahedron_presentation() {
  return parse_presentation("gens R S ; rels R^3, S^3, (R*S)^2");
}

RegularMap tetrahedron_map() { return build_map(tetrahedron_presentation()); }

FermatReport verify_fermat(int n) {
  const RegularMap m = fermat_map(n);
  FermatReport r;
  r.n = n;
  r.group_order = m.order();
  r.vertex_count = m.cells().vertex_count();
  r.genus = genus(m);
  r.density = density(m).density;
  r.simple = is_simple(m);
  r.reflexive = is_reflexive(m);
  r.p = m.face_size();
  r.q = m.vertex_degree();
  r.even_period = even_period(m);
  r.classification = classify(m);
  r.pass = r.group_order == 6 * n * n && r.vertex_count == 3 * n && r.p == 3 && r.q == 2 * n &&
           r.genus == (n - 1) * (n - 2) / 2 && r.density == Rational(2, 3) && r.simple &&
           r.reflexive && r.even_period == 2 &&
           r.classification == Classification{ClassificationTag::Fermat, n};
  return r;
}

std::string to_json(const FermatReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["group_order"] = r.group_order;
  j["vertex_count"] = r.vertex_count;
  j["genus"] = r.genus;
  j["density"] = r.density.str();
  j["simple"] = r.simple;
  j["reflexive"] = r.reflexive;
  j["p"] = r.p;
  j["q"] = r.q;
  j["even_period"] = r.even_period;
  j["classification"] = r.classification.str();
  j["pass"] = r.pass;
  return j.dump();
}

}  // namespace regmap
