#pragma once

#include <string>
#include <vector>

#include "regmap/group.hpp"
#include "regmap/words.hpp"

namespace regmap {

// Cells of a regular map. Directed edges are the group elements; vertices,
// edges and faces are the left cosets of <S>, <RS> and <R>, identified by
// dense ids in order of their smallest member. member lists follow the
// rotation walk (g, g*S, g*S^2, ... for a vertex), so face members are the
// boundary edges in rotation order.
struct CellStructure {
  std::vector<int> vertex_of, edge_of, face_of;  // element -> cell id
  std::vector<std::vector<int>> vertex_members, edge_members, face_members;

  int vertex_count() const { return static_cast<int>(vertex_members.size()); }
  int edge_count() const { return static_cast<int>(edge_members.size()); }
  int face_count() const { return static_cast<int>(face_members.size()); }
};

// Undirected skeleton graph; adjacency lists are sorted neighbor multisets
// with one entry per incident edge end (a loop contributes two entries).
struct Graph {
  int vertex_count = 0;
  std::vector<std::vector<int>> adjacency;
};

enum class ClassificationTag { Tetrahedron, Fermat, Other };

struct Classification {
  ClassificationTag tag = ClassificationTag::Other;
  int fermat_n = 0;

  std::string str() const;
  friend bool operator==(const Classification&, const Classification&) = default;
};

// A regular map realized on the rotation group of a standard map
// presentation. Immutable once built; safe for concurrent reads.
class RegularMap {
 public:
  const Presentation& presentation() const { return pres_; }
  const GroupTable& group() const { return table_; }
  const CellStructure& cells() const { return cells_; }

  int order() const { return table_.order(); }
  int gen_r() const { return gen_r_; }
  int gen_s() const { return gen_s_; }
  int edge_flip() const { return edge_flip_; }  // the element R*S
  int face_size() const { return face_size_; }      // p
  int vertex_degree() const { return vertex_degree_; }  // q

  // Vertex image of a vertex under left multiplication by an element.
  int act_on_vertex(int element, int vertex) const {
    return cells_.vertex_of[table_.multiply(element, cells_.vertex_members[vertex][0])];
  }

  // The rotation about a vertex: g S g^-1 for any directed edge g leaving
  // it (the choice of g does not matter).
  int vertex_rotation(int vertex) const {
    const int g = cells_.vertex_members[vertex][0];
    return table_.multiply(table_.multiply(g, gen_s_), table_.inverse(g));
  }

  // The same rotation (raised to a power) as a word in the generators.
  Word vertex_rotation_word(int vertex, int exponent) const;

  friend RegularMap build_map(const Presentation& p, std::size_t max_cosets);

 private:
  Presentation pres_;
  GroupTable table_;
  int gen_r_ = 0;
  int gen_s_ = 0;
  int edge_flip_ = 0;
  int face_size_ = 0;
  int vertex_degree_ = 0;
  CellStructure cells_;
};

// Enumerates the group of a standard map presentation and builds the cell
// structure. p and q are the actual element orders of R and S, not the
// relator exponents.
RegularMap build_map(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets);

// Genus of the underlying closed orientable surface.
int genus(const RegularMap& m);

Graph skeleton(const RegularMap& m);

bool is_simple(const RegularMap& m);
bool is_simple(const Graph& g);

// True iff some automorphism of the rotation group sends R -> R^-1 and
// S -> S^-1 (equivalently, the map admits an orientation-reversing
// automorphism).
bool is_reflexive(const RegularMap& m);

std::pair<int, int> map_type(const RegularMap& m);  // (p, q)

Classification classify(const RegularMap& m);

}  // namespace regmap
