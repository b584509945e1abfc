#include "twotrans/coset.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace twotrans {

namespace {

struct IntVecHash {
  size_t operator()(const std::vector<long long>& v) const {
    size_t h = 1469598103934665603ull;
    for (long long x : v) {
      h ^= static_cast<size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct ExactVecHash {
  size_t operator()(const std::vector<AlgebraicScalar>& v) const {
    size_t h = 1469598103934665603ull;
    for (const auto& s : v) {
      h ^= s.hash();
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct ExactVecEq {
  bool operator()(const std::vector<AlgebraicScalar>& a,
                  const std::vector<AlgebraicScalar>& b) const {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  }
};

// Reflection on fundamental-weight coordinates: v_j -= v_i * A[j][i].
void reflect_weight_int(const CartanData& cd, int i, std::vector<long long>& v) {
  long long vi = v[i];
  if (vi == 0) return;
  for (int j = 0; j < cd.rank; ++j) {
    long long a = cd.ientry(j, i);
    if (a != 0) v[j] -= vi * a;
  }
}

void reflect_weight_exact(const CartanData& cd, int i,
                          std::vector<AlgebraicScalar>& v) {
  AlgebraicScalar vi = v[i];
  if (vi.is_zero()) return;
  for (int j = 0; j < cd.rank; ++j) {
    const AlgebraicScalar& a = cd.entry(j, i);
    if (a.is_zero()) continue;
    v[j] -= vi * a;
  }
}

}  // namespace

WeightOrbit::WeightOrbit(CoxeterDiagram diagram, int node)
    : diagram_(std::move(diagram)), node_(node) {
  if (node_ < 0 || node_ >= diagram_.rank())
    throw std::out_of_range("node index out of range");
  GroupOrder go = group_order(diagram_);
  if (!go.finite)
    throw std::domain_error("weight orbit requires a finite-type diagram");

  const CartanData& cd = cartan_data(diagram_);
  integral_ = cd.integral;
  int n = diagram_.rank();
  perms_.assign(n, {});

  if (integral_) {
    std::unordered_map<std::vector<long long>, int, IntVecHash> index;
    std::vector<std::vector<long long>> pts;
    std::vector<long long> base(n, 0);
    base[node_] = 1;
    index.emplace(base, 0);
    pts.push_back(base);
    for (size_t head = 0; head < pts.size(); ++head) {
      for (int j = 0; j < n; ++j) {
        std::vector<long long> img = pts[head];
        reflect_weight_int(cd, j, img);
        auto it = index.find(img);
        if (it == index.end()) {
          it = index.emplace(std::move(img), static_cast<int>(pts.size())).first;
          pts.push_back(it->first);
        }
      }
    }
    size_ = static_cast<int>(pts.size());
    for (int j = 0; j < n; ++j) perms_[j].resize(size_);
    for (int p = 0; p < size_; ++p) {
      for (int j = 0; j < n; ++j) {
        std::vector<long long> img = pts[p];
        reflect_weight_int(cd, j, img);
        perms_[j][p] = index.at(img);
      }
    }
    int_points_.reserve(static_cast<size_t>(size_) * n);
    for (const auto& p : pts)
      int_points_.insert(int_points_.end(), p.begin(), p.end());
  } else {
    std::unordered_map<std::vector<AlgebraicScalar>, int, ExactVecHash, ExactVecEq>
        index;
    std::vector<AlgebraicScalar> base(n, AlgebraicScalar(0));
    base[node_] = AlgebraicScalar(1);
    index.emplace(base, 0);
    exact_points_.push_back(base);
    for (size_t head = 0; head < exact_points_.size(); ++head) {
      for (int j = 0; j < n; ++j) {
        std::vector<AlgebraicScalar> img = exact_points_[head];
        reflect_weight_exact(cd, j, img);
        if (index.emplace(img, static_cast<int>(exact_points_.size())).second)
          exact_points_.push_back(std::move(img));
      }
    }
    size_ = static_cast<int>(exact_points_.size());
    for (int j = 0; j < n; ++j) perms_[j].resize(size_);
    for (int p = 0; p < size_; ++p) {
      for (int j = 0; j < n; ++j) {
        std::vector<AlgebraicScalar> img = exact_points_[p];
        reflect_weight_exact(cd, j, img);
        perms_[j][p] = index.at(img);
      }
    }
  }
}

std::vector<AlgebraicScalar> WeightOrbit::point(int index) const {
  if (index < 0 || index >= size_) throw std::out_of_range("orbit point index");
  int n = diagram_.rank();
  if (integral_) {
    std::vector<AlgebraicScalar> out;
    out.reserve(n);
    for (int j = 0; j < n; ++j)
      out.emplace_back(int_points_[static_cast<size_t>(index) * n + j]);
    return out;
  }
  return exact_points_[index];
}

int WeightOrbit::apply_word(const Word& w, int point) const {
  int p = point;
  for (size_t i = w.size(); i-- > 0;) {
    int s = w[i];
    if (s < 0 || s >= diagram_.rank())
      throw std::out_of_range("word letter out of range");
    p = perms_[s][p];
  }
  return p;
}

WeightOrbit weight_orbit(const CoxeterDiagram& d, int node) {
  return WeightOrbit(d, node);
}

namespace {

// Shortest/lex-least word moving the base point to `target`, read from the
// breadth-first distance table: at each step take the smallest generator that
// decreases the distance, prepending it to the word.
Word word_to_point(const WeightOrbit& orbit, const std::vector<int>& dist,
                   int target) {
  Word out;
  int cur = target;
  const auto& perms = orbit.generator_perms();
  int n = orbit.diagram().rank();
  while (dist[cur] > 0) {
    int best = -1;
    for (int j = 0; j < n; ++j) {
      int q = perms[j][cur];
      if (dist[q] == dist[cur] - 1) {
        best = j;
        break;  // generators scanned in increasing order
      }
    }
    if (best < 0) throw std::logic_error("broken distance table");
    out.push_back(best);
    cur = perms[best][cur];
  }
  return out;
}

}  // namespace

DoubleCosetDecomposition double_cosets(const WeightOrbit& orbit) {
  int n = orbit.diagram().rank();
  int size = orbit.size();
  const auto& perms = orbit.generator_perms();

  // Breadth-first distances from the base point under all generators.
  std::vector<int> dist(size, -1);
  dist[WeightOrbit::kBase] = 0;
  std::deque<int> queue{WeightOrbit::kBase};
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      int q = perms[j][p];
      if (dist[q] < 0) {
        dist[q] = dist[p] + 1;
        queue.push_back(q);
      }
    }
  }

  // Partition into orbits of the parabolic subgroup (all generators except
  // the distinguished node).
  DoubleCosetDecomposition out;
  out.class_of_point.assign(size, -1);
  std::vector<int> class_min_dist;
  for (int start = 0; start < size; ++start) {
    if (out.class_of_point[start] >= 0) continue;
    int id = static_cast<int>(class_min_dist.size());
    long long count = 0;
    int min_dist = std::numeric_limits<int>::max();
    std::deque<int> bfs{start};
    out.class_of_point[start] = id;
    while (!bfs.empty()) {
      int p = bfs.front();
      bfs.pop_front();
      ++count;
      min_dist = std::min(min_dist, dist[p]);
      for (int j = 0; j < n; ++j) {
        if (j == orbit.node()) continue;
        int q = perms[j][p];
        if (out.class_of_point[q] < 0) {
          out.class_of_point[q] = id;
          bfs.push_back(q);
        }
      }
    }
    out.classes.push_back(DoubleCosetClass{count, min_dist, {}});
    class_min_dist.push_back(min_dist);
  }

  // Minimal representative per class: shortest then lexicographically
  // smallest word over the points realizing the minimal distance.
  for (size_t c = 0; c < out.classes.size(); ++c) {
    Word best;
    bool have = false;
    for (int p = 0; p < size; ++p) {
      if (out.class_of_point[p] != static_cast<int>(c)) continue;
      if (dist[p] != out.classes[c].min_length) continue;
      Word w = word_to_point(orbit, dist, p);
      if (!have || w < best) {
        best = std::move(w);
        have = true;
      }
    }
    out.classes[c].representative = std::move(best);
  }

  // Deterministic class order: the base class first, the rest by minimal
  // length then representative word.
  std::vector<int> order(out.classes.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ca = out.classes[a];
    const auto& cb = out.classes[b];
    if (ca.min_length != cb.min_length) return ca.min_length < cb.min_length;
    return ca.representative < cb.representative;
  });
  std::vector<int> new_id(out.classes.size());
  std::vector<DoubleCosetClass> reordered(out.classes.size());
  for (size_t i = 0; i < order.size(); ++i) {
    new_id[order[i]] = static_cast<int>(i);
    reordered[i] = std::move(out.classes[order[i]]);
  }
  out.classes = std::move(reordered);
  for (auto& c : out.class_of_point) c = new_id[c];
  return out;
}

DoubleCosetDecomposition double_cosets(const CoxeterDiagram& d, int node) {
  return double_cosets(WeightOrbit(d, node));
}

bool is_two_transitive(const CoxeterDiagram& d, int node) {
  WeightOrbit orbit(d, node);
  if (orbit.size() < 2) throw std::domain_error("orbit has fewer than 2 points");
  return double_cosets(orbit).classes.size() == 2;
}

// ---------------------------------------------------------------------------
// Witness words
// ---------------------------------------------------------------------------

WitnessCase witness_case_from_string(const std::string& s) {
  if (s == "branch-at-1") return WitnessCase::kBranchAtDistinguished;
  if (s == "branch-at-i") return WitnessCase::kBranchAtInterior;
  if (s == "multiple-bond") return WitnessCase::kMultipleBond;
  throw std::invalid_argument("unknown witness case: " + s);
}

std::string to_string(WitnessCase c) {
  switch (c) {
    case WitnessCase::kBranchAtDistinguished:
      return "branch-at-1";
    case WitnessCase::kBranchAtInterior:
      return "branch-at-i";
    case WitnessCase::kMultipleBond:
      return "multiple-bond";
  }
  return "?";
}

namespace {

// Breadth-first tree from node 0 over diagram edges; parent[0] = -1,
// unreachable nodes keep parent -2.
std::vector<int> bfs_parents(const CoxeterDiagram& d) {
  std::vector<int> parent(d.rank(), -2);
  parent[0] = -1;
  std::deque<int> q{0};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : d.neighbors(u)) {
      if (parent[v] == -2) {
        parent[v] = u;
        q.push_back(v);
      }
    }
  }
  return parent;
}

Word path_from_root(const std::vector<int>& parent, int target) {
  Word path;
  for (int cur = target; cur != -1; cur = parent[cur]) path.push_back(cur);
  std::reverse(path.begin(), path.end());
  return path;  // starts with node 0, ends with target
}

}  // namespace

Word witness_word(const CoxeterDiagram& d, WitnessCase c) {
  switch (c) {
    case WitnessCase::kBranchAtDistinguished: {
      auto nb = d.neighbors(0);
      if (nb.size() < 2)
        throw std::domain_error("node 1 does not have two neighbors");
      return Word{0, nb[0], nb[1], 0};
    }
    case WitnessCase::kBranchAtInterior: {
      auto parent = bfs_parents(d);
      // nearest node (by path length, then index) with three neighbors
      int pick = -1, pick_depth = 0;
      for (int i = 1; i < d.rank(); ++i) {
        if (parent[i] == -2) continue;
        if (d.neighbors(i).size() < 3) continue;
        int depth = static_cast<int>(path_from_root(parent, i).size());
        if (pick < 0 || depth < pick_depth) {
          pick = i;
          pick_depth = depth;
        }
      }
      if (pick < 0)
        throw std::domain_error("no interior node with three neighbors");
      Word path = path_from_root(parent, pick);
      int pred = path[path.size() - 2];
      std::vector<int> extra;
      for (int v : d.neighbors(pick))
        if (v != pred) extra.push_back(v);
      if (extra.size() < 2) throw std::logic_error("degree bookkeeping failed");
      Word w(path.begin(), path.end());  // 0 .. pick
      w.push_back(extra[0]);
      w.push_back(extra[1]);
      w.push_back(pick);
      for (size_t i = path.size() - 1; i-- > 0;) w.push_back(path[i]);
      return w;
    }
    case WitnessCase::kMultipleBond: {
      auto parent = bfs_parents(d);
      // heavy edge (m >= 4 or infinite) nearest to node 0
      int best_u = -1, best_v = -1, best_depth = 0;
      for (int u = 0; u < d.rank(); ++u) {
        if (parent[u] == -2) continue;
        int depth_u = static_cast<int>(path_from_root(parent, u).size());
        for (int v : d.neighbors(u)) {
          unsigned m = d.bond(u, v);
          if (m != CoxeterDiagram::kInfiniteBond && m < 4) continue;
          if (best_u < 0 || depth_u < best_depth ||
              (depth_u == best_depth && std::make_pair(u, v) <
                                            std::make_pair(best_u, best_v))) {
            best_u = u;
            best_v = v;
            best_depth = depth_u;
          }
        }
      }
      if (best_u < 0) throw std::domain_error("no bond of order >= 4 reachable");
      Word path = path_from_root(parent, best_u);  // 0 .. u
      Word w(path.begin(), path.end());
      w.push_back(best_v);
      for (size_t i = path.size(); i-- > 0;) w.push_back(path[i]);
      return w;
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Classification sweep
// ---------------------------------------------------------------------------

namespace {

std::vector<CoxeterDiagram> sweep_diagrams(int max_rank, int max_dihedral) {
  std::vector<CoxeterDiagram> out;
  for (int k = 1; k <= max_rank; ++k) out.push_back(CoxeterDiagram::named("A" + std::to_string(k)));
  for (int k = 2; k <= max_rank; ++k) out.push_back(CoxeterDiagram::named("B" + std::to_string(k)));
  for (int k = 4; k <= max_rank; ++k) out.push_back(CoxeterDiagram::named("D" + std::to_string(k)));
  for (int k = 6; k <= std::min(max_rank, 8); ++k)
    out.push_back(CoxeterDiagram::named("E" + std::to_string(k)));
  if (max_rank >= 4) out.push_back(CoxeterDiagram::named("F4"));
  if (max_rank >= 2) out.push_back(CoxeterDiagram::named("G2"));
  if (max_rank >= 3) out.push_back(CoxeterDiagram::named("H3"));
  if (max_rank >= 4) out.push_back(CoxeterDiagram::named("H4"));
  if (max_rank >= 2) {
    // I2(3), I2(4), I2(6) already appear as A2, B2, G2.
    for (int m = 5; m <= max_dihedral; ++m) {
      if (m == 6) continue;
      out.push_back(CoxeterDiagram::named("I2(" + std::to_string(m) + ")"));
    }
  }
  return out;
}

}  // namespace

std::vector<ClassifyRow> classify_all_rows(int max_rank, int max_dihedral) {
  if (max_rank < 1) throw std::invalid_argument("max_rank must be >= 1");
  if (max_rank > 8) throw std::invalid_argument("max_rank is capped at 8");
  if (max_dihedral < 3) throw std::invalid_argument("max_dihedral must be >= 3");
  auto diagrams = sweep_diagrams(max_rank, max_dihedral);
  struct Task {
    int diagram;
    int node;
  };
  std::vector<Task> tasks;
  for (size_t i = 0; i < diagrams.size(); ++i)
    for (int node = 0; node < diagrams[i].rank(); ++node)
      tasks.push_back({static_cast<int>(i), node});

  std::vector<ClassifyRow> rows(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long t = 0; t < static_cast<long>(tasks.size()); ++t) {
    const auto& task = tasks[t];
    const CoxeterDiagram& d = diagrams[task.diagram];
    auto decomp = double_cosets(d, task.node);
    rows[t] = ClassifyRow{d.name(), task.node,
                          static_cast<long long>(decomp.classes.size()),
                          decomp.classes.size() == 2, d.rank() == 1};
  }
  return rows;
}

std::vector<ClassifyRow> classify(int max_rank, int max_dihedral) {
  auto rows = classify_all_rows(max_rank, max_dihedral);
  std::vector<ClassifyRow> out;
  for (auto& r : rows)
    if (r.two_transitive) out.push_back(std::move(r));
  return out;
}

}  // namespace twotrans
