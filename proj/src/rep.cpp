#include "twotrans/rep.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace twotrans {

std::string weight_to_string(const Weight& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out;
}

Weight parse_weight(const std::string& text, int rank) {
  Weight out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    out.push_back(v);
  }
  if (static_cast<int>(out.size()) != rank)
    throw std::invalid_argument("expected " + std::to_string(rank) +
                                " weight coordinates");
  return out;
}

namespace {

struct WeightHash {
  size_t operator()(const Weight& w) const {
    size_t h = 1469598103934665603ull;
    for (int x : w) {
      h ^= static_cast<size_t>(static_cast<unsigned>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

RootDatum::RootDatum(SimpleType type, int rank) : type_(type), rank_(rank) {
  auto check = [&](bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
  };
  switch (type) {
    case SimpleType::A: check(rank >= 1, "A requires rank >= 1"); break;
    case SimpleType::B: check(rank >= 2, "B requires rank >= 2"); break;
    case SimpleType::C: check(rank >= 2, "C requires rank >= 2"); break;
    case SimpleType::D: check(rank >= 4, "D requires rank >= 4"); break;
    case SimpleType::E: check(rank >= 6 && rank <= 8, "E requires rank 6..8"); break;
    case SimpleType::F: check(rank == 4, "F requires rank 4"); break;
    case SimpleType::G: check(rank == 2, "G requires rank 2"); break;
  }

  // Bourbaki Cartan matrices; cartan_[i][j] = <alpha_j, alpha_i^vee>.
  cartan_.assign(static_cast<size_t>(rank) * rank, 0);
  auto at = [&](int i, int j) -> int& { return cartan_[i * rank + j]; };
  for (int i = 0; i < rank; ++i) at(i, i) = 2;
  auto bond = [&](int i, int j) { at(i, j) = at(j, i) = -1; };
  switch (type) {
    case SimpleType::A:
      for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1);
      break;
    case SimpleType::B:
      for (int i = 0; i + 2 < rank; ++i) bond(i, i + 1);
      at(rank - 2, rank - 1) = -1;
      at(rank - 1, rank - 2) = -2;
      break;
    case SimpleType::C:
      for (int i = 0; i + 2 < rank; ++i) bond(i, i + 1);
      at(rank - 2, rank - 1) = -2;
      at(rank - 1, rank - 2) = -1;
      break;
    case SimpleType::D:
      for (int i = 0; i + 1 < rank - 2; ++i) bond(i, i + 1);
      bond(rank - 3, rank - 2);
      bond(rank - 3, rank - 1);
      break;
    case SimpleType::E:
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < rank; ++i) bond(i, i + 1);
      break;
    case SimpleType::F:
      bond(0, 1);
      at(1, 2) = -1;
      at(2, 1) = -2;
      bond(2, 3);
      break;
    case SimpleType::G:
      at(0, 1) = -3;
      at(1, 0) = -1;
      break;
  }

  // Symmetrizer d_i proportional to (alpha_i, alpha_i)/2, by propagation.
  std::vector<mpq_class> d(rank, 0);
  d[0] = 1;
  {
    std::vector<int> stack{0};
    std::vector<char> seen(rank, 0);
    seen[0] = 1;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < rank; ++j) {
        if (seen[j] || at(i, j) == 0) continue;
        d[j] = d[i] * at(i, j) / at(j, i);
        seen[j] = 1;
        stack.push_back(j);
      }
    }
    for (int i = 0; i < rank; ++i)
      if (!seen[i]) throw std::logic_error("disconnected simple type");
  }

  // Positive roots: closure of the simple roots under reflections, in
  // simple-root coordinates.
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    all.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto r = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank; ++i) {
      long long pair = 0;
      for (int j = 0; j < rank; ++j) pair += static_cast<long long>(at(i, j)) * r[j];
      std::vector<int> img = r;
      img[i] -= static_cast<int>(pair);
      if (all.insert(img).second) queue.push_back(img);
    }
  }

  std::vector<std::vector<int>> positives;
  for (const auto& r : all) {
    bool nonneg = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
    if (nonneg) positives.push_back(r);
  }
  // order by height then lexicographically, for reproducible tables
  std::sort(positives.begin(), positives.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int ha = std::accumulate(a.begin(), a.end(), 0);
              int hb = std::accumulate(b.begin(), b.end(), 0);
              if (ha != hb) return ha < hb;
              return a < b;
            });

  for (const auto& r : positives) {
    // omega coordinates: sum_j r_j * column j of the Cartan matrix
    Weight w(rank, 0);
    for (int i = 0; i < rank; ++i) {
      long long acc = 0;
      for (int j = 0; j < rank; ++j) acc += static_cast<long long>(at(i, j)) * r[j];
      w[i] = static_cast<int>(acc);
    }
    roots_omega_.push_back(w);

    // (alpha, alpha) = sum_{ij} r_i r_j d_i C[i][j]
    mpq_class norm = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        norm += mpq_class(r[i]) * r[j] * d[i] * at(i, j);
    std::vector<long long> pv(rank);
    for (int j = 0; j < rank; ++j) {
      // <omega_j, alpha^vee> = 2 d_j r_j / (alpha, alpha)
      mpq_class val = 2 * d[j] * r[j] / norm;
      if (val.get_den() != 1)
        throw std::logic_error("coroot pairing is not integral");
      pv[j] = static_cast<long long>(val.get_num().get_si());
    }
    pairing_.push_back(std::move(pv));
  }

  // expected number of positive roots per type
  {
    int n = rank;
    int expected = 0;
    switch (type) {
      case SimpleType::A: expected = n * (n + 1) / 2; break;
      case SimpleType::B:
      case SimpleType::C: expected = n * n; break;
      case SimpleType::D: expected = n * (n - 1); break;
      case SimpleType::E: expected = n == 6 ? 36 : (n == 7 ? 63 : 120); break;
      case SimpleType::F: expected = 24; break;
      case SimpleType::G: expected = 6; break;
    }
    if (static_cast<int>(pairing_.size()) != expected)
      throw std::logic_error("positive root enumeration failed");
  }

  // Gram matrix of the fundamental weights: G * C = diag(d).
  {
    int n = rank;
    // invert the Cartan matrix over Q
    std::vector<mpq_class> m(static_cast<size_t>(n) * 2 * n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i * 2 * n + j] = at(i, j);
      m[i * 2 * n + n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (int r = col; r < n; ++r)
        if (m[r * 2 * n + col] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) throw std::logic_error("singular Cartan matrix");
      if (pivot != col)
        for (int c = 0; c < 2 * n; ++c)
          std::swap(m[pivot * 2 * n + c], m[col * 2 * n + c]);
      mpq_class inv = 1 / m[col * 2 * n + col];
      for (int c = 0; c < 2 * n; ++c) m[col * 2 * n + c] *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        mpq_class f = m[r * 2 * n + col];
        if (f == 0) continue;
        for (int c = 0; c < 2 * n; ++c) m[r * 2 * n + c] -= f * m[col * 2 * n + c];
      }
    }
    gram_.assign(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gram_[i][j] = d[i] * m[i * 2 * n + n + j];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (gram_[i][j] != gram_[j][i])
          throw std::logic_error("weight inner product is not symmetric");
  }

  // Highest root: maximal height (last in the sorted positive list).
  highest_root_ = roots_omega_.back();
}

const RootDatum& RootDatum::create(SimpleType type, int rank) {
  static std::mutex mutex;
  static std::map<std::pair<char, int>, std::unique_ptr<RootDatum>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(static_cast<char>(type), rank);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::unique_ptr<RootDatum>(new RootDatum(type, rank)))
             .first;
  }
  return *it->second;
}

const RootDatum& RootDatum::parse(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty type name");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  if (f < 'A' || f > 'G')
    throw std::invalid_argument("unknown simple type: " + name);
  int rank = 0;
  try {
    size_t pos = 0;
    rank = std::stoi(name.substr(1), &pos);
    if (pos + 1 != name.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed type name: " + name);
  }
  return create(static_cast<SimpleType>(f), rank);
}

std::string RootDatum::name() const {
  return std::string(1, static_cast<char>(type_)) + std::to_string(rank_);
}

long long RootDatum::coroot_pairing(int k, const Weight& lambda) const {
  const auto& pv = pairing_.at(k);
  long long acc = 0;
  for (int j = 0; j < rank_; ++j) acc += pv[j] * lambda[j];
  return acc;
}

long long RootDatum::total_coroot_pairing(const Weight& lambda) const {
  long long acc = 0;
  for (int k = 0; k < positive_root_count(); ++k) acc += coroot_pairing(k, lambda);
  return acc;
}

mpq_class RootDatum::inner(const Weight& a, const Weight& b) const {
  mpq_class acc = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b[j] == 0) continue;
      acc += gram_[i][j] * a[i] * b[j];
    }
  }
  return acc;
}

bool RootDatum::is_dominant(const Weight& w) const {
  if (static_cast<int>(w.size()) != rank_) return false;
  return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

unsigned long long weyl_dim(const RootDatum& rd, const Weight& lambda) {
  if (!rd.is_dominant(lambda))
    throw std::domain_error("weight is not dominant");
  mpz_class num = 1, den = 1;
  for (int k = 0; k < rd.positive_root_count(); ++k) {
    long long rho_p = 0;
    Weight rho = rd.rho();
    rho_p = rd.coroot_pairing(k, rho);
    num *= static_cast<long>(rd.coroot_pairing(k, lambda) + rho_p);
    den *= static_cast<long>(rho_p);
  }
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("Weyl dimension is not integral");
  if (!q.fits_ulong_p()) throw std::domain_error("dimension overflow");
  return q.get_ui();
}

std::map<Weight, long long> character(const RootDatum& rd, const Weight& lambda,
                                      long long dim_cap) {
  unsigned long long dim = weyl_dim(rd, lambda);
  if (static_cast<long long>(dim) > dim_cap)
    throw std::domain_error("dimension cap exceeded");

  int n = rd.rank();
  const auto& roots = rd.positive_roots_weight_coords();

  // Weight support: close the highest weight under full root strings.
  std::unordered_set<Weight, WeightHash> support;
  std::vector<Weight> queue{lambda};
  support.insert(lambda);
  while (!queue.empty()) {
    Weight w = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      int c = w[i];
      if (c <= 0) continue;
      Weight step = w;
      for (int k = 1; k <= c; ++k) {
        for (int j = 0; j < n; ++j) step[j] -= rd.cartan(j, i);
        if (support.insert(step).second) queue.push_back(step);
      }
    }
  }

  // Order by decreasing (mu, rho); Freudenthal top-down.
  Weight rho = rd.rho();
  std::vector<Weight> order(support.begin(), support.end());
  std::vector<mpq_class> height(order.size());
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    mpq_class ha = rd.inner(a, rho), hb = rd.inner(b, rho);
    if (ha != hb) return ha > hb;
    return a > b;
  });

  std::map<Weight, long long> mult;
  std::unordered_set<Weight, WeightHash> in_support = support;
  mpq_class top_norm = rd.inner(lambda, lambda) + 2 * rd.inner(lambda, rho);
  for (const auto& mu : order) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    mpq_class num = 0;
    for (const auto& alpha : roots) {
      Weight nu = mu;
      while (true) {
        for (int j = 0; j < n; ++j) nu[j] += alpha[j];
        if (!in_support.count(nu)) break;
        auto it = mult.find(nu);
        if (it == mult.end() || it->second == 0) continue;
        num += mpq_class(static_cast<long>(it->second)) * rd.inner(nu, alpha);
      }
    }
    mpq_class denom = top_norm - rd.inner(mu, mu) - 2 * rd.inner(mu, rho);
    if (denom == 0) throw std::logic_error("Freudenthal denominator vanished");
    mpq_class m = 2 * num / denom;
    if (m.get_den() != 1 || m < 0)
      throw std::logic_error("Freudenthal multiplicity is not a natural number");
    long long mm = static_cast<long long>(m.get_num().get_si());
    if (mm > 0) mult[mu] = mm;
  }

  long long total = 0;
  for (const auto& [w, m] : mult) total += m;
  if (total != static_cast<long long>(dim))
    throw std::logic_error("character size disagrees with the dimension formula");
  return mult;
}

namespace {

// Repeatedly strip the highest remaining weight and subtract its character.
IrrepSum subtract_leading_terms(const RootDatum& rd,
                                std::map<Weight, long long> bag,
                                long long dim_cap) {
  IrrepSum out;
  Weight rho = rd.rho();
  while (!bag.empty()) {
    auto best = bag.begin();
    mpq_class best_h = rd.inner(best->first, rho);
    for (auto it = std::next(bag.begin()); it != bag.end(); ++it) {
      mpq_class h = rd.inner(it->first, rho);
      if (h > best_h || (h == best_h && it->first > best->first)) {
        best = it;
        best_h = h;
      }
    }
    Weight top = best->first;
    long long mult = best->second;
    if (mult <= 0) throw std::logic_error("negative multiplicity while decomposing");
    if (!rd.is_dominant(top))
      throw std::logic_error("leading term is not dominant");
    auto ch = character(rd, top, dim_cap);
    for (const auto& [w, m] : ch) {
      auto it = bag.find(w);
      if (it == bag.end() || it->second < mult * m)
        throw std::logic_error("subtraction produced a negative multiplicity");
      it->second -= mult * m;
      if (it->second == 0) bag.erase(it);
    }
    unsigned long long dim = weyl_dim(rd, top);
    out.components.push_back(IrrepComponent{top, mult, dim});
    out.total_dimension += static_cast<unsigned long long>(mult) * dim;
  }
  return out;
}

}  // namespace

IrrepSum tensor_decompose(const RootDatum& rd, const Weight& lambda,
                          const Weight& mu, long long dim_cap) {
  unsigned long long dl = weyl_dim(rd, lambda), dm = weyl_dim(rd, mu);
  if (static_cast<long long>(dl * dm) > dim_cap)
    throw std::domain_error("dimension cap exceeded");
  auto cl = character(rd, lambda, dim_cap);
  auto cm = character(rd, mu, dim_cap);
  std::map<Weight, long long> bag;
  for (const auto& [w1, m1] : cl) {
    for (const auto& [w2, m2] : cm) {
      Weight sum(rd.rank());
      for (int i = 0; i < rd.rank(); ++i) sum[i] = w1[i] + w2[i];
      bag[sum] += m1 * m2;
    }
  }
  auto out = subtract_leading_terms(rd, std::move(bag), dim_cap);
  if (out.total_dimension != dl * dm)
    throw std::logic_error("tensor decomposition dimension mismatch");
  return out;
}

namespace {

IrrepSum square_decompose(const RootDatum& rd, const Weight& lambda,
                          long long dim_cap, bool symmetric) {
  unsigned long long d = weyl_dim(rd, lambda);
  unsigned long long target =
      symmetric ? d * (d + 1) / 2 : d * (d - 1) / 2;
  if (static_cast<long long>(target) > dim_cap)
    throw std::domain_error("dimension cap exceeded");
  auto ch = character(rd, lambda, dim_cap);
  std::vector<std::pair<Weight, long long>> vals(ch.begin(), ch.end());
  std::map<Weight, long long> bag;
  int n = rd.rank();
  for (size_t a = 0; a < vals.size(); ++a) {
    for (size_t b = a; b < vals.size(); ++b) {
      long long count;
      if (a == b) {
        long long m = vals[a].second;
        count = symmetric ? m * (m + 1) / 2 : m * (m - 1) / 2;
      } else {
        count = vals[a].second * vals[b].second;
      }
      if (count == 0) continue;
      Weight sum(n);
      for (int i = 0; i < n; ++i) sum[i] = vals[a].first[i] + vals[b].first[i];
      bag[sum] += count;
    }
  }
  auto out = subtract_leading_terms(rd, std::move(bag), dim_cap);
  if (out.total_dimension != target)
    throw std::logic_error("square decomposition dimension mismatch");
  return out;
}

}  // namespace

IrrepSum sym2_decompose(const RootDatum& rd, const Weight& lambda,
                        long long dim_cap) {
  return square_decompose(rd, lambda, dim_cap, true);
}

IrrepSum alt2_decompose(const RootDatum& rd, const Weight& lambda,
                        long long dim_cap) {
  return square_decompose(rd, lambda, dim_cap, false);
}

Weight dual_weight(const RootDatum& rd, const Weight& lambda) {
  if (!rd.is_dominant(lambda)) throw std::domain_error("weight is not dominant");
  int n = rd.rank();
  Weight v(n);
  for (int i = 0; i < n; ++i) v[i] = -lambda[i];
  // dominance walk: reflect at a negative coordinate until dominant
  while (true) {
    int i = -1;
    for (int j = 0; j < n; ++j)
      if (v[j] < 0) {
        i = j;
        break;
      }
    if (i < 0) break;
    int vi = v[i];
    for (int j = 0; j < n; ++j) v[j] -= vi * rd.cartan(j, i);
  }
  return v;
}

std::string to_string(RealType t) {
  switch (t) {
    case RealType::kReal: return "real";
    case RealType::kComplex: return "complex";
    case RealType::kQuaternionic: return "quaternionic";
  }
  return "?";
}

namespace {

RealType real_type_unchecked(const RootDatum& rd, const Weight& lambda) {
  if (dual_weight(rd, lambda) != lambda) return RealType::kComplex;
  long long parity = rd.total_coroot_pairing(lambda);
  return parity % 2 == 0 ? RealType::kReal : RealType::kQuaternionic;
}

// Pinned convention checks; run once before the first use.
void validate_real_type_convention() {
  struct Case {
    const char* type;
    Weight weight;
    RealType expected;
  };
  const Case cases[] = {
      {"C3", {1, 0, 0}, RealType::kQuaternionic},
      {"C3", {0, 1, 0}, RealType::kReal},
      {"C3", {0, 0, 1}, RealType::kQuaternionic},
      {"G2", {1, 0}, RealType::kReal},
      {"G2", {2, 0}, RealType::kReal},
      {"B3", {0, 0, 1}, RealType::kReal},
      {"B4", {0, 0, 0, 1}, RealType::kReal},
      {"A2", {1, 0}, RealType::kComplex},
  };
  for (const auto& c : cases) {
    const RootDatum& rd = RootDatum::parse(c.type);
    if (real_type_unchecked(rd, c.weight) != c.expected)
      throw std::logic_error(
          "Frobenius-Schur convention check failed for " + std::string(c.type) +
          " weight " + weight_to_string(c.weight));
  }
}

}  // namespace

RealType real_type(const RootDatum& rd, const Weight& lambda) {
  if (!rd.is_dominant(lambda)) throw std::domain_error("weight is not dominant");
  static std::once_flag flag;
  std::call_once(flag, validate_real_type_convention);
  return real_type_unchecked(rd, lambda);
}

}  // namespace twotrans
