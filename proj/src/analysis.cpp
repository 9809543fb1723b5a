#include "regmap/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "regmap/errors.hpp"

namespace regmap {

namespace {

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count, -1);
  std::vector<int> queue;
  queue.reserve(g.vertex_count);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int w : g.adjacency[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> distinct_neighbors(const Graph& g, int v) {
  std::vector<int> out;
  for (int w : g.adjacency[v]) {
    if (w != v && (out.empty() || out.back() != w)) out.push_back(w);
  }
  return out;
}

int power_of(const GroupTable& t, int e, int exponent) {
  int out = 0;
  for (int i = 0; i < exponent; ++i) out = t.multiply(out, e);
  return out;
}

bool commutes(const GroupTable& t, int a, int b) {
  return t.multiply(a, b) == t.multiply(b, a);
}

long long modular_inverse(long long a, long long m) {
  long long t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
  while (new_r != 0) {
    const long long qu = r / new_r;
    std::swap(t -= qu * new_t, new_t);
    std::swap(r -= qu * new_r, new_r);
  }
  if (r != 1) return -1;
  return ((t % m) + m) % m;
}

// Pairs (v, w) over [0,count)^2, exhaustive or deterministically sampled.
std::vector<std::pair<int, int>> quantifier_pairs(int count, std::size_t limit) {
  std::vector<std::pair<int, int>> out;
  const std::size_t total = static_cast<std::size_t>(count) * count;
  if (limit == 0 || total <= limit) {
    out.reserve(total);
    for (int v = 0; v < count; ++v) {
      for (int w = 0; w < count; ++w) out.emplace_back(v, w);
    }
    return out;
  }
  std::mt19937 rng(0x5eed2024);
  std::uniform_int_distribution<int> pick(0, count - 1);
  out.reserve(limit);
  for (std::size_t i = 0; i < limit; ++i) out.emplace_back(pick(rng), pick(rng));
  return out;
}

}  // namespace

DensityReport density(const RegularMap& m) {
  const Graph g = skeleton(m);
  DensityReport report;
  report.q = m.vertex_degree();
  report.vertex_count = g.vertex_count;
  report.per_vertex_neighbor_counts.reserve(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) {
    report.per_vertex_neighbor_counts.push_back(
        static_cast<int>(distinct_neighbors(g, v).size()));
  }
  for (int c : report.per_vertex_neighbor_counts) {
    if (c != report.per_vertex_neighbor_counts[0]) {
      throw RegularityViolationError("vertices disagree on neighbor count");
    }
  }
  report.density = Rational(report.per_vertex_neighbor_counts[0], g.vertex_count);
  return report;
}

std::pair<std::vector<int>, std::vector<int>> neighborhood(const Graph& g, int v, int radius) {
  const std::vector<int> dist = bfs_distances(g, v);
  std::vector<int> ball, sphere;
  for (int w = 0; w < g.vertex_count; ++w) {
    if (dist[w] >= 0 && dist[w] <= radius) ball.push_back(w);
    if (dist[w] == radius) sphere.push_back(w);
  }
  return {ball, sphere};
}

int diameter(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count; ++v) {
    const std::vector<int> dist = bfs_distances(g, v);
    for (int w = 0; w < g.vertex_count; ++w) {
      if (dist[w] < 0) throw DisconnectedError();
      best = std::max(best, dist[w]);
    }
  }
  return best;
}

std::vector<int> diagonal_neighbors(const RegularMap& m, int v) {
  if (m.face_size() != 3) throw NotTriangularError();
  const Graph g = skeleton(m);
  std::vector<int> out;
  for (int w : distinct_neighbors(g, v)) {
    const int rot2 = power_of(m.group(), m.vertex_rotation(w), 2);
    out.push_back(m.act_on_vertex(rot2, v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AlignmentData diagonal_alignment(const RegularMap& m) {
  if (m.face_size() != 3) throw NotTriangularError();
  const int nv = m.cells().vertex_count();
  const int q = m.vertex_degree();

  std::vector<int> dsu(nv);
  std::iota(dsu.begin(), dsu.end(), 0);
  const auto root = [&](int v) {
    while (dsu[v] != v) v = dsu[v] = dsu[dsu[v]];
    return v;
  };
  for (int v = 0; v < nv; ++v) {
    for (int u : diagonal_neighbors(m, v)) {
      const int a = root(v), b = root(u);
      if (a != b) dsu[std::max(a, b)] = std::min(a, b);
    }
  }

  AlignmentData data;
  data.class_of.assign(nv, -1);
  for (int v = 0; v < nv; ++v) {
    const int r = root(v);
    if (data.class_of[r] < 0) {
      data.class_of[r] = static_cast<int>(data.classes.size());
      data.classes.emplace_back();
    }
    data.class_of[v] = data.class_of[r];
    data.classes[data.class_of[v]].push_back(v);
  }

  // Primitive period: least j with S_v^j fixing the class of v pointwise;
  // the map's regularity makes it independent of v, which we assert.
  data.primitive_period = 0;
  for (int v = 0; v < nv; ++v) {
    const int rot = m.vertex_rotation(v);
    const auto& cls = data.classes[data.class_of[v]];
    int power = 0;
    int jv = 0;
    for (int j = 1; j <= q; ++j) {
      power = m.group().multiply(power, rot);
      const bool fixes_class = std::all_of(cls.begin(), cls.end(), [&](int u) {
        return m.act_on_vertex(power, u) == u;
      });
      if (fixes_class) {
        jv = j;
        break;
      }
    }
    if (jv == 0) throw RegularityViolationError("no rotation power fixes the class of vertex " +
                                                std::to_string(v));
    if (data.primitive_period == 0) {
      data.primitive_period = jv;
    } else if (data.primitive_period != jv) {
      throw RegularityViolationError("primitive period depends on the vertex");
    }
  }
  data.even_period = std::lcm(data.primitive_period, 2);
  return data;
}

int primitive_period(const RegularMap& m) { return diagonal_alignment(m).primitive_period; }

int even_period(const RegularMap& m) { return diagonal_alignment(m).even_period; }

std::optional<int> rotation_transfer(const RegularMap& m, int v, int v2, int j) {
  const int q = m.vertex_degree();
  if (j < 1 || j > q) throw Error("rotation_transfer requires 1 <= j <= q");
  const GroupTable& t = m.group();
  const int e = power_of(t, m.vertex_rotation(v), j);
  if (m.act_on_vertex(e, v2) != v2) return std::nullopt;

  // e fixes v2, so it is a power of the rotation about v2; find which.
  const int rot2 = m.vertex_rotation(v2);
  int i = -1;
  int power = 0;
  for (int cand = 0; cand < q; ++cand) {
    if (power == e) {
      i = cand;
      break;
    }
    power = t.multiply(power, rot2);
  }
  if (i < 0) throw RegularityViolationError("element fixing a vertex is not a rotation power");

  const int g = std::gcd(j, q);
  const int mod = q / g;
  if (i % g != 0) throw RegularityViolationError("rotation powers of unequal order");
  if (mod == 1) return 1;
  const long long inv = modular_inverse(j / g, mod);
  if (inv < 0) throw RegularityViolationError("rotation exponent not invertible");
  int k = static_cast<int>(((i / g) * inv) % mod);
  if (k == 0) k = mod;
  return k;
}

bool LemmaReport::has_failures() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const LemmaCheck& c) { return c.applicable && !c.passed; });
}

std::vector<std::string> LemmaReport::failure_ids() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (c.applicable && !c.passed) out.push_back(c.id);
  }
  return out;
}

LemmaReport lemma_suite(const RegularMap& m, const LemmaOptions& options) {
  LemmaReport report;
  const auto note = [&](const std::string& id, bool applicable, bool passed,
                        std::string witness = "") {
    report.checks.push_back({id, applicable, applicable && passed, std::move(witness)});
  };

  const Graph g = skeleton(m);
  const bool simple = is_simple(g);
  const bool reflexive = is_reflexive(m);
  const DensityReport dens = density(m);
  const Rational half(1, 2), two_thirds(2, 3), three_quarters(3, 4);
  const int p = m.face_size();
  const int q = m.vertex_degree();
  const int nv = g.vertex_count;
  const GroupTable& t = m.group();

  if (simple && dens.density >= half) {
    const int d = diameter(g);
    note("diameter_le_2", true, d <= 2, d <= 2 ? "" : "diameter=" + std::to_string(d));
  } else {
    note("diameter_le_2", false, false);
  }

  const bool high = simple && reflexive && dens.density > half;

  note("p_eq_3", high, p == 3, high && p != 3 ? "p=" + std::to_string(p) : "");

  if (high && q % 2 == 1) {
    const Classification cls = classify(m);
    const bool ok = cls.tag == ClassificationTag::Tetrahedron && dens.density == three_quarters;
    note("q_odd_tetrahedron", true, ok, ok ? "" : "classified " + cls.str());
  } else {
    note("q_odd_tetrahedron", false, false);
  }

  const bool diag_gate = high && p == 3;
  AlignmentData align;
  std::vector<std::vector<int>> spheres(nv), diag(nv);
  std::vector<int> rot(nv);
  if (diag_gate) {
    align = diagonal_alignment(m);
    for (int v = 0; v < nv; ++v) {
      spheres[v] = distinct_neighbors(g, v);
      diag[v] = diagonal_neighbors(m, v);
      rot[v] = m.vertex_rotation(v);
    }
    const int j = align.primitive_period;

    {
      bool ok = true;
      std::string witness;
      for (int v = 0; v < nv && ok; ++v) {
        for (int v2 : diag[v]) {
          int minimal = 0;
          int power = 0;
          for (int jj = 1; jj <= q; ++jj) {
            power = t.multiply(power, rot[v]);
            if (m.act_on_vertex(power, v2) == v2) {
              minimal = jj;
              break;
            }
          }
          if (minimal != j) {
            ok = false;
            witness = "v=" + std::to_string(v) + " v'=" + std::to_string(v2) +
                      " minimal=" + std::to_string(minimal);
            break;
          }
        }
      }
      note("diag_min_period", true, ok, witness);
    }

    {
      bool ok = true;
      std::string witness;
      for (int v = 0; v < nv && ok; ++v) {
        for (int v2 : diag[v]) {
          const bool neighbor = std::binary_search(spheres[v].begin(), spheres[v].end(), v2);
          if ((j == q) != neighbor) {
            ok = false;
            witness = "v=" + std::to_string(v) + " v'=" + std::to_string(v2);
            break;
          }
        }
      }
      note("diag_period_q_iff_neighbor", true, ok, witness);
    }

    {
      const bool one_class = align.classes.size() == 1;
      note("diag_period_q_iff_one_class", true, (j == q) == one_class,
           "classes=" + std::to_string(align.classes.size()));
    }

    std::vector<int> rot_prim(nv);
    for (int v = 0; v < nv; ++v) rot_prim[v] = power_of(t, rot[v], j);

    {
      bool ok = true;
      std::string witness;
      for (const auto& [v, w] : quantifier_pairs(nv, options.sample_limit)) {
        if (m.act_on_vertex(rot_prim[v], w) == w && align.class_of[w] != align.class_of[v]) {
          ok = false;
          witness = "v=" + std::to_string(v) + " w=" + std::to_string(w);
          break;
        }
      }
      note("diag_fixed_points_in_class", true, ok, witness);
    }

    if (j < q) {
      bool ok = q % 2 == 0 && dens.density <= two_thirds;
      std::string witness = ok ? "" : "q=" + std::to_string(q) + " density=" + dens.density.str();
      for (int v = 0; v < nv && ok; ++v) {
        for (int v2 : spheres[v]) {
          if (align.class_of[v2] == align.class_of[v]) {
            ok = false;
            witness = "v=" + std::to_string(v) + " neighbor=" + std::to_string(v2);
            break;
          }
        }
      }
      note("diag_period_lt_q_consequences", true, ok, witness);
    } else {
      note("diag_period_lt_q_consequences", false, false);
    }

    note("diag_period_q_odd", j == q, q % 2 == 1, j == q ? "q=" + std::to_string(q) : "");
  } else {
    for (const char* id : {"diag_min_period", "diag_period_q_iff_neighbor",
                           "diag_period_q_iff_one_class", "diag_fixed_points_in_class",
                           "diag_period_lt_q_consequences", "diag_period_q_odd"}) {
      note(id, false, false);
    }
  }

  const bool branch = diag_gate && q % 2 == 0;
  if (branch) {
    const int jt = align.even_period;
    std::vector<int> rot_even(nv), rot_four(nv);
    for (int v = 0; v < nv; ++v) {
      rot_even[v] = power_of(t, rot[v], jt);
      rot_four[v] = power_of(t, rot[v], 4);
    }

    {
      bool ok = true;
      std::string witness;
      for (const auto& [v, w] : quantifier_pairs(nv, options.sample_limit)) {
        if (!commutes(t, rot_even[v], rot_even[w]) || !commutes(t, rot_even[v], rot_four[w])) {
          ok = false;
          witness = "v=" + std::to_string(v) + " w=" + std::to_string(w);
          break;
        }
      }
      note("primt_commutes", true, ok, witness);
    }

    {
      bool ok = true;
      std::string witness;
      for (int v = 0; v < nv && ok; ++v) {
        for (int v2 : diag[v]) {
          if (rot_even[v] != rot_even[v2]) {
            ok = false;
            witness = "v=" + std::to_string(v) + " v'=" + std::to_string(v2);
            break;
          }
        }
      }
      note("primt_transfer_join", true, ok, witness);
    }

    {
      bool ok = true;
      std::string witness;
      for (const auto& members : m.cells().face_members) {
        const int a = m.cells().vertex_of[members[0]];
        const int b = m.cells().vertex_of[members[1]];
        const int c = m.cells().vertex_of[members[2]];
        if (t.multiply(t.multiply(rot_even[a], rot_even[b]), rot_even[c]) != 0) {
          ok = false;
          witness = "face of vertices " + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(c);
          break;
        }
      }
      note("face_relation", true, ok, witness);
    }

    if (jt == q) {
      const Classification cls = classify(m);
      note("primt_eq_q_fer1", true, cls == Classification{ClassificationTag::Fermat, 1},
           "classified " + cls.str());
    } else {
      note("primt_eq_q_fer1", false, false);
    }

    note("density_two_thirds", dens.density <= two_thirds, dens.density == two_thirds,
         "density=" + dens.density.str());

    if (align.classes.size() == 3) {
      bool ok = true;
      std::string witness;
      for (int v = 0; v < nv && ok; ++v) {
        const int rep = m.cells().vertex_members[v][0];
        const auto& face = m.cells().face_members[m.cells().face_of[rep]];
        std::vector<int> expected;
        for (int el : face) {
          const int corner = m.cells().vertex_of[el];
          if (align.class_of[corner] == align.class_of[v]) continue;
          const auto& cls = align.classes[align.class_of[corner]];
          expected.insert(expected.end(), cls.begin(), cls.end());
        }
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        if (expected != spheres[v]) {
          ok = false;
          witness = "v=" + std::to_string(v);
        }
      }
      note("sphere_boundary_classes", true, ok, witness);
    } else {
      note("sphere_boundary_classes", false, false);
    }

    note("even_period_two", dens.density == two_thirds, jt == 2, "even_period=" + std::to_string(jt));
  } else {
    for (const char* id : {"primt_commutes", "primt_transfer_join", "face_relation",
                           "primt_eq_q_fer1", "density_two_thirds", "sphere_boundary_classes",
                           "even_period_two"}) {
      note(id, false, false);
    }
  }

  return report;
}

}  // namespace regmap
