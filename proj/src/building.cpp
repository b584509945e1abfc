#include "twotrans/building.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "twotrans/perm_action.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace twotrans {

long long factorial_ll(int n) {
  long long out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

int perm_inversions(const SymPerm& w) {
  int n = static_cast<int>(w.size());
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

int perm_index(const SymPerm& w) {
  int n = static_cast<int>(w.size());
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (w[j] < w[i]) ++smaller;
    idx += smaller * static_cast<int>(factorial_ll(n - 1 - i));
  }
  return idx;
}

SymPerm perm_from_index(int index, int n) {
  std::vector<uint8_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  SymPerm w(n);
  for (int i = 0; i < n; ++i) {
    int f = static_cast<int>(factorial_ll(n - 1 - i));
    int k = index / f;
    index %= f;
    w[i] = pool[k];
    pool.erase(pool.begin() + k);
  }
  return w;
}

SymPerm perm_inverse(const SymPerm& w) {
  SymPerm out(w.size());
  for (size_t i = 0; i < w.size(); ++i) out[w[i]] = static_cast<uint8_t>(i);
  return out;
}

SymPerm perm_multiply(const SymPerm& a, const SymPerm& b) {
  SymPerm out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

Word perm_to_word(const SymPerm& w) {
  SymPerm cur = w;
  Word letters;
  while (true) {
    int i = -1;
    for (size_t t = 0; t + 1 < cur.size(); ++t) {
      if (cur[t] > cur[t + 1]) {
        i = static_cast<int>(t);
        break;
      }
    }
    if (i < 0) break;
    std::swap(cur[i], cur[i + 1]);
    letters.push_back(i);
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

// ---------------------------------------------------------------------------
// Field and matrix helpers
// ---------------------------------------------------------------------------

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

struct Gf {
  int q;
  std::vector<uint8_t> inv;
  explicit Gf(int q_) : q(q_), inv(q_, 0) {
    for (int a = 1; a < q; ++a)
      for (int b = 1; b < q; ++b)
        if (a * b % q == 1) inv[a] = static_cast<uint8_t>(b);
  }
  uint8_t add(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + b) % q); }
  uint8_t sub(uint8_t a, uint8_t b) const {
    return static_cast<uint8_t>((a + q - b) % q);
  }
  uint8_t mul(uint8_t a, uint8_t b) const { return static_cast<uint8_t>(a * b % q); }
};

// Reduced row-echelon form in place; rows of length `cols`. Returns the rank;
// zero rows are dropped.
int rref(std::vector<uint8_t>& rows, int cols, const Gf& gf) {
  int nrows = static_cast<int>(rows.size()) / cols;
  int rank = 0;
  for (int col = 0; col < cols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r) {
      if (rows[r * cols + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int c = 0; c < cols; ++c)
      std::swap(rows[pivot * cols + c], rows[rank * cols + c]);
    uint8_t s = gf.inv[rows[rank * cols + col]];
    for (int c = 0; c < cols; ++c)
      rows[rank * cols + c] = gf.mul(rows[rank * cols + c], s);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank) continue;
      uint8_t f = rows[r * cols + col];
      if (f == 0) continue;
      for (int c = 0; c < cols; ++c)
        rows[r * cols + c] = gf.sub(rows[r * cols + c], gf.mul(f, rows[rank * cols + c]));
    }
    ++rank;
  }
  rows.resize(static_cast<size_t>(rank) * cols);
  return rank;
}

// Reduce a row vector against an echelon basis; returns true if it lies in
// the span (i.e. reduces to zero).
bool in_span(const std::vector<uint8_t>& basis, int cols, const Gf& gf,
             std::vector<uint8_t>& v) {
  int nrows = static_cast<int>(basis.size()) / cols;
  for (int r = 0; r < nrows; ++r) {
    int lead = -1;
    for (int c = 0; c < cols; ++c) {
      if (basis[r * cols + c] != 0) {
        lead = c;
        break;
      }
    }
    if (lead < 0) continue;
    uint8_t f = v[lead];
    if (f == 0) continue;
    // basis rows are normalized with leading 1
    for (int c = 0; c < cols; ++c) v[c] = gf.sub(v[c], gf.mul(f, basis[r * cols + c]));
  }
  return std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; });
}

size_t level_offset(int level, int cols) {
  // levels 1..k stored consecutively; level i holds i rows
  return static_cast<size_t>(cols) * (static_cast<size_t>(level) * (level - 1) / 2);
}

}  // namespace

// ---------------------------------------------------------------------------
// Building construction
// ---------------------------------------------------------------------------

Building::Building(int rank, int q, long long chamber_cap)
    : rank_(rank), q_(q), dim_(rank + 1) {
  if (rank < 1) throw std::invalid_argument("building rank must be >= 1");
  if (!is_prime(q)) throw std::invalid_argument("q must be a prime");

  long long expected = 1;
  {
    long long points = 0, power = 1;
    for (int n = dim_; n >= 2; --n) {
      points = 0;
      power = 1;
      for (int j = 0; j < n; ++j) {
        points += power;
        power *= q;
      }
      expected *= points;
      if (expected > chamber_cap)
        throw std::domain_error("chamber count exceeds the configured cap");
    }
  }

  Gf gf(q);
  int n = dim_;
  long long total_vectors = 1;
  for (int i = 0; i < n; ++i) total_vectors *= q;

  auto decode = [&](long long code) {
    std::vector<uint8_t> v(n);
    for (int i = 0; i < n; ++i) {
      v[i] = static_cast<uint8_t>(code % q);
      code /= q;
    }
    return v;
  };

  // Depth-first enumeration of complete flags; at each level collect the
  // canonical extensions and recurse in sorted order.
  std::vector<uint8_t> packed;
  std::function<void(const std::vector<uint8_t>&, int)> extend =
      [&](const std::vector<uint8_t>& current, int level) {
        if (level > rank_) {
          chambers_.push_back(current);
          return;
        }
        const uint8_t* prev = current.data() + level_offset(level - 1, n);
        std::vector<uint8_t> prev_basis(prev, prev + static_cast<size_t>(level - 1) * n);
        std::set<std::vector<uint8_t>> extensions;
        for (long long code = 1; code < total_vectors; ++code) {
          std::vector<uint8_t> v = decode(code);
          std::vector<uint8_t> red = v;
          if (in_span(prev_basis, n, gf, red)) continue;
          std::vector<uint8_t> basis = prev_basis;
          basis.insert(basis.end(), v.begin(), v.end());
          rref(basis, n, gf);
          extensions.insert(std::move(basis));
        }
        for (const auto& basis : extensions) {
          std::vector<uint8_t> next = current;
          next.insert(next.end(), basis.begin(), basis.end());
          extend(next, level + 1);
        }
      };
  extend({}, 1);

  if (static_cast<long long>(chambers_.size()) != expected)
    throw std::logic_error("flag enumeration does not match the counting formula");
  std::sort(chambers_.begin(), chambers_.end());

  // Panels per type: chambers agreeing outside level i.
  panel_of_.assign(rank_, std::vector<int>(chambers_.size(), -1));
  panels_.assign(rank_, {});
  for (int type = 1; type <= rank_; ++type) {
    std::map<std::vector<uint8_t>, int> ids;
    for (size_t c = 0; c < chambers_.size(); ++c) {
      std::vector<uint8_t> key;
      const auto& bytes = chambers_[c];
      size_t lo = level_offset(type, n);
      size_t hi = level_offset(type + 1, n);
      key.insert(key.end(), bytes.begin(), bytes.begin() + lo);
      key.insert(key.end(), bytes.begin() + hi, bytes.end());
      auto [it, fresh] = ids.emplace(std::move(key), static_cast<int>(panels_[type - 1].size()));
      if (fresh) panels_[type - 1].emplace_back();
      panel_of_[type - 1][c] = it->second;
      panels_[type - 1][it->second].push_back(static_cast<int>(c));
    }
  }

  // Point and line residues, indexed by the canonical subspace bytes.
  {
    std::map<std::vector<uint8_t>, int> point_ids;
    point_of_.resize(chambers_.size());
    for (size_t c = 0; c < chambers_.size(); ++c) {
      std::vector<uint8_t> key(chambers_[c].begin(), chambers_[c].begin() + n);
      auto [it, fresh] = point_ids.emplace(std::move(key), static_cast<int>(point_residues_.size()));
      if (fresh) point_residues_.emplace_back();
      point_of_[c] = it->second;
      point_residues_[it->second].push_back(static_cast<int>(c));
    }
  }
  line_of_.assign(chambers_.size(), -1);
  if (rank_ >= 2) {
    std::map<std::vector<uint8_t>, int> line_ids;
    for (size_t c = 0; c < chambers_.size(); ++c) {
      std::vector<uint8_t> key(chambers_[c].begin() + level_offset(2, n),
                               chambers_[c].begin() + level_offset(3, n));
      auto [it, fresh] = line_ids.emplace(std::move(key), line_count_);
      if (fresh) ++line_count_;
      line_of_[c] = it->second;
    }
  }
}

int Building::panel_of(int type, int chamber) const {
  return panel_of_.at(type - 1).at(chamber);
}

const std::vector<std::vector<int>>& Building::panel_members(int type) const {
  return panels_.at(type - 1);
}

int Building::find_chamber(const std::vector<uint8_t>& bytes) const {
  auto it = std::lower_bound(chambers_.begin(), chambers_.end(), bytes);
  if (it == chambers_.end() || *it != bytes) return -1;
  return static_cast<int>(it - chambers_.begin());
}

SymPerm Building::w_distance(int c, int d) const {
  int n = dim_;
  Gf gf(q_);
  const auto& cf = chambers_.at(c);
  const auto& df = chambers_.at(d);

  // dims[i][j] = dim(V_i meet U_j); border cases are forced.
  std::vector<std::vector<int>> dims(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    dims[i][n] = i;
    dims[n][i] = i;
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      std::vector<uint8_t> stack;
      const uint8_t* vi = cf.data() + level_offset(i, n);
      const uint8_t* uj = df.data() + level_offset(j, n);
      stack.insert(stack.end(), vi, vi + static_cast<size_t>(i) * n);
      stack.insert(stack.end(), uj, uj + static_cast<size_t>(j) * n);
      int r = rref(stack, n, gf);
      dims[i][j] = i + j - r;
    }
  }

  // w maps positions of the second flag to positions of the first, so that
  // moving d inside an i-panel multiplies the distance by s_i on the right.
  SymPerm w(n);
  for (int i = 1; i <= n; ++i) {
    int found = -1;
    for (int j = 1; j <= n; ++j) {
      int jump = dims[i][j] - dims[i - 1][j] - dims[i][j - 1] + dims[i - 1][j - 1];
      if (jump == 1) {
        found = j;
        break;
      }
    }
    if (found < 0) throw std::logic_error("intersection table has no jump");
    w[found - 1] = static_cast<uint8_t>(i - 1);
  }
  return w;
}

SymPerm Building::w_distance(const std::vector<uint8_t>& cf,
                             const std::vector<uint8_t>& df) const {
  int c = find_chamber(cf), d = find_chamber(df);
  if (c < 0 || d < 0)
    throw std::domain_error("flag does not belong to this building");
  return w_distance(c, d);
}

std::vector<std::vector<int>> Building::point_action_generators() const {
  int n = dim_;
  Gf gf(q_);

  // canonical representative bytes -> point index
  std::map<std::vector<uint8_t>, int> point_ids;
  std::vector<std::vector<uint8_t>> reps;
  for (size_t c = 0; c < chambers_.size(); ++c) {
    std::vector<uint8_t> key(chambers_[c].begin(), chambers_[c].begin() + n);
    if (point_ids.emplace(key, point_of_[c]).second) {
      if (static_cast<int>(reps.size()) <= point_of_[c]) reps.resize(point_of_[c] + 1);
      reps[point_of_[c]] = key;
    }
  }

  std::vector<std::vector<std::vector<uint8_t>>> mats;  // generator matrices
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      if (r == s) continue;
      std::vector<std::vector<uint8_t>> m(n, std::vector<uint8_t>(n, 0));
      for (int i = 0; i < n; ++i) m[i][i] = 1;
      m[r][s] = 1;  // transvection
      mats.push_back(std::move(m));
    }
  }
  if (q_ > 2) {
    std::vector<std::vector<uint8_t>> m(n, std::vector<uint8_t>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    for (int g = 2; g < q_; ++g) {
      // any non-identity scalar on the first coordinate reaches GL mod SL
      m[0][0] = static_cast<uint8_t>(g);
      mats.push_back(m);
      break;
    }
  }

  std::vector<std::vector<int>> perms;
  for (const auto& m : mats) {
    std::vector<int> perm(reps.size());
    for (size_t p = 0; p < reps.size(); ++p) {
      std::vector<uint8_t> img(n, 0);
      for (int i = 0; i < n; ++i) {
        uint8_t acc = 0;
        for (int j = 0; j < n; ++j) acc = gf.add(acc, gf.mul(m[i][j], reps[p][j]));
        img[i] = acc;
      }
      // canonicalize the spanning vector
      std::vector<uint8_t> row = img;
      rref(row, n, gf);
      auto it = point_ids.find(row);
      if (it == point_ids.end()) throw std::logic_error("point image not found");
      perm[p] = it->second;
    }
    perms.push_back(std::move(perm));
  }
  return perms;
}

Building build_building(int rank, int q, long long chamber_cap) {
  return Building(rank, q, chamber_cap);
}

// ---------------------------------------------------------------------------
// All-pairs kernels: serial reference and OpenMP variants
// ---------------------------------------------------------------------------

std::vector<long long> pair_distance_histogram_serial(const Building& b) {
  int nf = static_cast<int>(factorial_ll(b.dim()));
  std::vector<long long> hist(nf, 0);
  int count = b.chamber_count();
  for (int c = 0; c < count; ++c)
    for (int d = 0; d < count; ++d) ++hist[perm_index(b.w_distance(c, d))];
  return hist;
}

std::vector<long long> pair_distance_histogram_parallel(const Building& b) {
  int nf = static_cast<int>(factorial_ll(b.dim()));
  std::vector<long long> hist(nf, 0);
  int count = b.chamber_count();
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<long long> local(nf, 0);
#pragma omp for schedule(static) nowait
    for (int c = 0; c < count; ++c)
      for (int d = 0; d < count; ++d) ++local[perm_index(b.w_distance(c, d))];
#pragma omp critical
    for (int i = 0; i < nf; ++i) hist[i] += local[i];
  }
#else
  hist = pair_distance_histogram_serial(b);
  (void)count;
#endif
  return hist;
}

namespace {

struct PairCell {
  int min_len = 1 << 20;
  uint32_t min_mask = 0;  // perm indices attaining min_len (dim <= 4: fits)
};

void scan_accumulate(const Building& b, int c_begin, int c_end,
                     std::vector<PairCell>& cells, std::vector<uint8_t>& same_vals,
                     std::vector<uint8_t>& cross_vals) {
  int points = b.point_count();
  for (int c = c_begin; c < c_end; ++c) {
    int pc = b.point_of(c);
    for (int d = 0; d < b.chamber_count(); ++d) {
      int pd = b.point_of(d);
      SymPerm w = b.w_distance(c, d);
      int idx = perm_index(w);
      if (pc == pd) {
        same_vals[idx] = 1;
        continue;
      }
      cross_vals[idx] = 1;
      PairCell& cell = cells[pc * points + pd];
      int len = perm_inversions(w);
      if (len < cell.min_len) {
        cell.min_len = len;
        cell.min_mask = 1u << idx;
      } else if (len == cell.min_len) {
        cell.min_mask |= 1u << idx;
      }
    }
  }
}

PointPairScan finalize_scan(const Building& b, std::vector<PairCell>& cells,
                            std::vector<uint8_t> same_vals,
                            std::vector<uint8_t> cross_vals) {
  PointPairScan out;
  out.same_point_values = std::move(same_vals);
  out.cross_point_values = std::move(cross_vals);
  int points = b.point_count();
  out.minima_unique = true;
  out.minima_uniform = true;
  out.common_min = -1;
  for (int p = 0; p < points; ++p) {
    for (int r = 0; r < points; ++r) {
      if (p == r) continue;
      const PairCell& cell = cells[p * points + r];
      if (cell.min_mask == 0) {
        out.minima_unique = false;
        out.minima_uniform = false;
        continue;
      }
      if (__builtin_popcount(cell.min_mask) != 1) out.minima_unique = false;
      int idx = __builtin_ctz(cell.min_mask);
      if (out.common_min < 0) out.common_min = idx;
      if (cell.min_mask != (1u << out.common_min)) out.minima_uniform = false;
    }
  }
  return out;
}

}  // namespace

PointPairScan scan_point_pairs_serial(const Building& b) {
  if (b.dim() > 4)
    throw std::domain_error("point-pair scan supports rank <= 3 buildings");
  int nf = static_cast<int>(factorial_ll(b.dim()));
  int points = b.point_count();
  std::vector<PairCell> cells(static_cast<size_t>(points) * points);
  std::vector<uint8_t> same_vals(nf, 0), cross_vals(nf, 0);
  scan_accumulate(b, 0, b.chamber_count(), cells, same_vals, cross_vals);
  return finalize_scan(b, cells, std::move(same_vals), std::move(cross_vals));
}

PointPairScan scan_point_pairs_parallel(const Building& b) {
  if (b.dim() > 4)
    throw std::domain_error("point-pair scan supports rank <= 3 buildings");
#ifndef _OPENMP
  return scan_point_pairs_serial(b);
#else
  int nf = static_cast<int>(factorial_ll(b.dim()));
  int points = b.point_count();
  std::vector<PairCell> cells(static_cast<size_t>(points) * points);
  std::vector<uint8_t> same_vals(nf, 0), cross_vals(nf, 0);
#pragma omp parallel
  {
    std::vector<PairCell> local_cells(cells.size());
    std::vector<uint8_t> local_same(nf, 0), local_cross(nf, 0);
    int count = b.chamber_count();
#pragma omp for schedule(static) nowait
    for (int c = 0; c < count; ++c)
      scan_accumulate(b, c, c + 1, local_cells, local_same, local_cross);
#pragma omp critical
    {
      for (size_t i = 0; i < cells.size(); ++i) {
        if (local_cells[i].min_len < cells[i].min_len) {
          cells[i] = local_cells[i];
        } else if (local_cells[i].min_len == cells[i].min_len) {
          cells[i].min_mask |= local_cells[i].min_mask;
        }
      }
      for (int i = 0; i < nf; ++i) {
        same_vals[i] |= local_same[i];
        cross_vals[i] |= local_cross[i];
      }
    }
  }
  return finalize_scan(b, cells, std::move(same_vals), std::move(cross_vals));
#endif
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

namespace {

std::string word_to_text(const Word& w) {
  std::string out = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i] + 1);
  }
  return out + "]";
}

}  // namespace

CheckReport check_two_transitive_points(const Building& b, bool parallel) {
  if (b.rank() < 2)
    throw std::domain_error("point-residue checks require rank >= 2");
  CheckReport report;
  int points = b.point_count();

  {
    auto gens = b.point_action_generators();
    bool two = action_is_two_transitive(points, gens);
    report.items.push_back(
        {"points-two-transitive", two,
         std::to_string(points) + " points, " +
             std::to_string(static_cast<long long>(points) * (points - 1)) +
             " ordered pairs"});
  }

  PointPairScan scan = parallel ? scan_point_pairs_parallel(b)
                                : scan_point_pairs_serial(b);
  {
    bool pass = scan.minima_unique && scan.minima_uniform;
    std::string detail = "n/a";
    if (scan.common_min >= 0) {
      SymPerm w = perm_from_index(scan.common_min, b.dim());
      detail = "w = " + word_to_text(perm_to_word(w));
    }
    report.items.push_back({"minimal-distance-unique-and-uniform", pass, detail});
  }
  {
    // The distance values must split as the point stabilizer (permutations
    // fixing position 1) and the single double coset of the common minimum.
    int n = b.dim();
    int nf = static_cast<int>(factorial_ll(n));
    std::vector<uint8_t> parabolic(nf, 0);
    for (int i = 0; i < nf; ++i) {
      SymPerm w = perm_from_index(i, n);
      if (w[0] == 0) parabolic[i] = 1;
    }
    bool same_ok = scan.same_point_values == parabolic;

    std::vector<uint8_t> coset(nf, 0);
    bool cross_ok = false;
    if (scan.common_min >= 0) {
      // closure of {w} under left/right multiplication by the stabilizer
      // generators s_2 .. s_k
      std::vector<int> stack{scan.common_min};
      coset[scan.common_min] = 1;
      while (!stack.empty()) {
        int idx = stack.back();
        stack.pop_back();
        SymPerm w = perm_from_index(idx, n);
        for (int j = 1; j + 1 < n; ++j) {
          SymPerm s(n);
          std::iota(s.begin(), s.end(), 0);
          std::swap(s[j], s[j + 1]);
          for (const SymPerm& prod : {perm_multiply(s, w), perm_multiply(w, s)}) {
            int pi = perm_index(prod);
            if (!coset[pi]) {
              coset[pi] = 1;
              stack.push_back(pi);
            }
          }
        }
      }
      cross_ok = scan.cross_point_values == coset;
    }
    long long coset_size = std::count(coset.begin(), coset.end(), uint8_t(1));
    long long parabolic_size =
        std::count(parabolic.begin(), parabolic.end(), uint8_t(1));
    report.items.push_back(
        {"distance-set-is-parabolic-plus-one-double-coset", same_ok && cross_ok,
         "|W_J| = " + std::to_string(parabolic_size) +
             ", |W_J w W_J| = " + std::to_string(coset_size)});
  }
  return report;
}

CheckReport projective_axioms_report(const Building& b) {
  CheckReport report;
  if (b.rank() < 2)
    throw std::domain_error("projective axioms require rank >= 2");
  int points = b.point_count();
  int lines = b.line_count();

  // Incidence from chambers: a point and a line are incident when some
  // chamber contains both.
  std::vector<std::vector<char>> incident(points, std::vector<char>(lines, 0));
  for (int c = 0; c < b.chamber_count(); ++c)
    incident[b.point_of(c)][b.line_of(c)] = 1;

  std::vector<std::vector<int>> line_points(lines);
  for (int l = 0; l < lines; ++l)
    for (int p = 0; p < points; ++p)
      if (incident[p][l]) line_points[l].push_back(p);

  report.items.push_back({"geometry-extracted", true,
                          std::to_string(points) + " points, " +
                              std::to_string(lines) + " lines"});

  // Two distinct points lie on exactly one common line.
  bool unique_join = true;
  std::vector<std::vector<int>> join(points, std::vector<int>(points, -1));
  for (int p = 0; p < points && unique_join; ++p) {
    for (int r = p + 1; r < points; ++r) {
      int found = -1;
      int count = 0;
      for (int l = 0; l < lines; ++l) {
        if (incident[p][l] && incident[r][l]) {
          found = l;
          ++count;
        }
      }
      if (count != 1) {
        unique_join = false;
        break;
      }
      join[p][r] = join[r][p] = found;
    }
  }
  report.items.push_back({"two-points-span-one-line", unique_join, ""});

  // Thick lines: at least three points each (exactly q+1 here).
  bool thick = true;
  int min_line = points;
  for (int l = 0; l < lines; ++l) {
    min_line = std::min(min_line, static_cast<int>(line_points[l].size()));
    if (static_cast<int>(line_points[l].size()) < 3) thick = false;
  }
  report.items.push_back({"lines-have-three-points", thick,
                          "minimum line size " + std::to_string(min_line)});

  if (b.rank() >= 3 && unique_join) {
    // Veblen-Young: if ab and cd meet, then ac and bd meet.
    auto lines_meet = [&](int l1, int l2) {
      if (l1 == l2) return true;
      for (int p : line_points[l1])
        if (incident[p][l2]) return true;
      return false;
    };
    bool veblen = true;
    for (int a = 0; a < points && veblen; ++a)
      for (int bb = 0; bb < points && veblen; ++bb)
        for (int c = 0; c < points && veblen; ++c)
          for (int d = 0; d < points && veblen; ++d) {
            if (a == bb || a == c || a == d || bb == c || bb == d || c == d)
              continue;
            if (!lines_meet(join[a][bb], join[c][d])) continue;
            if (!lines_meet(join[a][c], join[bb][d])) veblen = false;
          }
    report.items.push_back({"veblen-young", veblen, ""});
  }
  return report;
}

bool check_projective_axioms(const Building& b) {
  return projective_axioms_report(b).all_pass();
}

}  // namespace twotrans
