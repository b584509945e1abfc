#include "twotrans/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace twotrans {

namespace {

constexpr unsigned kInf = CoxeterDiagram::kInfiniteBond;

std::string upcase(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

CoxeterDiagram::CoxeterDiagram(int rank, std::vector<unsigned> bond_matrix,
                               std::string name)
    : rank_(rank), bonds_(std::move(bond_matrix)), name_(std::move(name)) {
  if (rank_ <= 0) throw std::invalid_argument("diagram rank must be positive");
  if (bonds_.size() != static_cast<size_t>(rank_) * rank_)
    throw std::invalid_argument("bond matrix size mismatch");
  for (int i = 0; i < rank_; ++i) {
    if (bonds_[i * rank_ + i] != 1)
      throw std::invalid_argument("diagonal bond order must be 1");
    for (int j = 0; j < rank_; ++j) {
      if (i == j) continue;
      unsigned m = bonds_[i * rank_ + j];
      if (m != bonds_[j * rank_ + i])
        throw std::invalid_argument("bond matrix is not symmetric");
      if (m != kInf && m < 2)
        throw std::invalid_argument("off-diagonal bond order must be >= 2");
    }
  }
}

unsigned CoxeterDiagram::bond(int i, int j) const {
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_)
    throw std::out_of_range("node index out of range");
  return bonds_[i * rank_ + j];
}

std::vector<int> CoxeterDiagram::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < rank_; ++j) {
    if (j == i) continue;
    unsigned m = bond(i, j);
    if (m >= 3 || m == kInf) out.push_back(j);
  }
  return out;
}

std::vector<std::vector<int>> CoxeterDiagram::components() const {
  std::vector<int> comp(rank_, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < rank_; ++start) {
    if (comp[start] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(start);
    comp[start] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      out[id].push_back(u);
      for (int v : neighbors(u)) {
        if (comp[v] < 0) {
          comp[v] = id;
          q.push(v);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool CoxeterDiagram::is_irreducible() const { return components().size() == 1; }

bool CoxeterDiagram::has_infinite_bond() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if (bond(i, j) == kInf) return true;
  return false;
}

std::string CoxeterDiagram::display_name() const {
  if (!name_.empty()) return name_;
  return "custom[" + std::to_string(rank_) + "]";
}

namespace {

std::vector<unsigned> empty_bonds(int n) {
  std::vector<unsigned> b(static_cast<size_t>(n) * n, 2);
  for (int i = 0; i < n; ++i) b[i * n + i] = 1;
  return b;
}

void set_bond(std::vector<unsigned>& b, int n, int i, int j, unsigned m) {
  b[i * n + j] = m;
  b[j * n + i] = m;
}

}  // namespace

CoxeterDiagram CoxeterDiagram::named(const std::string& raw) {
  std::string name = upcase(raw);
  // strip whitespace
  name.erase(std::remove_if(name.begin(), name.end(),
                            [](unsigned char c) { return std::isspace(c); }),
             name.end());
  if (name.empty()) throw std::invalid_argument("empty diagram name");

  auto path_diagram = [&](int n) {
    auto b = empty_bonds(n);
    for (int i = 0; i + 1 < n; ++i) set_bond(b, n, i, i + 1, 3);
    return b;
  };

  char family = name[0];
  std::string rest = name.substr(1);

  if (family == 'I') {
    // I2(m) or I2(INF)
    if (rest.size() < 4 || rest[0] != '2' || rest[1] != '(' || rest.back() != ')')
      throw std::invalid_argument("malformed dihedral name: " + raw);
    std::string arg = rest.substr(2, rest.size() - 3);
    unsigned m;
    if (arg == "INF" || arg == "INFINITY" || arg == "0") {
      m = kInf;
    } else {
      size_t pos = 0;
      long v = std::stol(arg, &pos);
      if (pos != arg.size() || v < 3)
        throw std::invalid_argument("dihedral bond order must be >= 3");
      m = static_cast<unsigned>(v);
    }
    auto b = empty_bonds(2);
    set_bond(b, 2, 0, 1, m);
    std::string canonical = m == kInf ? "I2(inf)" : "I2(" + std::to_string(m) + ")";
    return CoxeterDiagram(2, std::move(b), canonical);
  }

  size_t pos = 0;
  int n = 0;
  try {
    n = std::stoi(rest, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed diagram name: " + raw);
  }
  if (pos != rest.size() || n <= 0)
    throw std::invalid_argument("malformed diagram name: " + raw);

  switch (family) {
    case 'A': {
      return CoxeterDiagram(n, path_diagram(n), "A" + std::to_string(n));
    }
    case 'B':
    case 'C': {
      if (n < 2) throw std::invalid_argument("rank must be >= 2 for " + raw);
      auto b = path_diagram(n);
      set_bond(b, n, n - 2, n - 1, 4);
      return CoxeterDiagram(n, std::move(b), std::string(1, family) + std::to_string(n));
    }
    case 'D': {
      if (n < 4) throw std::invalid_argument("rank must be >= 4 for " + raw);
      auto b = empty_bonds(n);
      for (int i = 0; i + 1 < n - 1; ++i) set_bond(b, n, i, i + 1, 3);
      set_bond(b, n, n - 3, n - 1, 3);
      return CoxeterDiagram(n, std::move(b), "D" + std::to_string(n));
    }
    case 'E': {
      if (n < 6 || n > 8) throw std::invalid_argument("rank must be 6..8 for E");
      auto b = empty_bonds(n);
      // Bourbaki: string 1-3-4-5-...-n with node 2 attached to node 4.
      set_bond(b, n, 0, 2, 3);
      for (int i = 2; i + 1 < n; ++i) set_bond(b, n, i, i + 1, 3);
      set_bond(b, n, 1, 3, 3);
      return CoxeterDiagram(n, std::move(b), "E" + std::to_string(n));
    }
    case 'F': {
      if (n != 4) throw std::invalid_argument("rank must be 4 for F");
      auto b = path_diagram(4);
      set_bond(b, 4, 1, 2, 4);
      return CoxeterDiagram(4, std::move(b), "F4");
    }
    case 'G': {
      if (n != 2) throw std::invalid_argument("rank must be 2 for G");
      auto b = empty_bonds(2);
      set_bond(b, 2, 0, 1, 6);
      return CoxeterDiagram(2, std::move(b), "G2");
    }
    case 'H': {
      if (n != 3 && n != 4) throw std::invalid_argument("rank must be 3 or 4 for H");
      auto b = path_diagram(n);
      set_bond(b, n, 0, 1, 5);
      return CoxeterDiagram(n, std::move(b), "H" + std::to_string(n));
    }
    default:
      throw std::invalid_argument("unknown diagram family: " + raw);
  }
}

CoxeterDiagram CoxeterDiagram::parse(const std::string& text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty diagram spec");
  if (text[first] != '{') return named(text);

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed diagram document: ") + e.what());
  }

  auto bond_value = [](const nlohmann::json& v) -> unsigned {
    if (v.is_string()) {
      std::string s = upcase(v.get<std::string>());
      if (s == "INF" || s == "INFINITY") return kInf;
      throw std::invalid_argument("bad bond order string: " + v.get<std::string>());
    }
    long m = v.get<long>();
    if (m == 0) return kInf;
    if (m < 2) throw std::invalid_argument("bond order must be >= 2 or infinite");
    return static_cast<unsigned>(m);
  };

  if (doc.contains("matrix")) {
    const auto& rows = doc.at("matrix");
    int n = static_cast<int>(rows.size());
    if (n == 0) throw std::invalid_argument("empty bond matrix");
    std::vector<unsigned> b(static_cast<size_t>(n) * n, 2);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n)
        throw std::invalid_argument("bond matrix is not square");
      for (int j = 0; j < n; ++j) {
        const auto& v = rows[i][j];
        if (i == j) {
          if (!v.is_number() || v.get<long>() != 1)
            throw std::invalid_argument("diagonal bond order must be 1");
          b[i * n + j] = 1;
        } else {
          b[i * n + j] = bond_value(v);
        }
      }
    }
    // the constructor rejects asymmetric input
    return CoxeterDiagram(n, std::move(b));
  }

  int n = doc.at("nodes").get<int>();
  if (n <= 0) throw std::invalid_argument("node count must be positive");
  auto b = empty_bonds(n);
  std::vector<bool> assigned(static_cast<size_t>(n) * n, false);
  if (doc.contains("bonds")) {
    for (const auto& item : doc.at("bonds")) {
      if (!item.is_array() || item.size() != 3)
        throw std::invalid_argument("bond entries must be [i, j, m]");
      int i = item[0].get<int>() - 1;
      int j = item[1].get<int>() - 1;
      if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw std::invalid_argument("bond node index out of range");
      unsigned m = bond_value(item[2]);
      size_t a = static_cast<size_t>(i) * n + j;
      size_t bb = static_cast<size_t>(j) * n + i;
      if ((assigned[a] && b[a] != m) || (assigned[bb] && b[bb] != m))
        throw std::invalid_argument("asymmetric bond orders for a node pair");
      assigned[a] = assigned[bb] = true;
      b[a] = b[bb] = m;
    }
  }
  return CoxeterDiagram(n, std::move(b));
}

std::string CoxeterDiagram::to_document() const {
  nlohmann::json doc;
  doc["nodes"] = rank_;
  nlohmann::json bonds = nlohmann::json::array();
  for (int i = 0; i < rank_; ++i) {
    for (int j = i + 1; j < rank_; ++j) {
      unsigned m = bond(i, j);
      if (m == 2) continue;
      bonds.push_back({i + 1, j + 1, m});
    }
  }
  doc["bonds"] = std::move(bonds);
  return doc.dump();
}

// ---------------------------------------------------------------------------
// Cartan data
// ---------------------------------------------------------------------------

namespace {

bool diagram_is_forest(const CoxeterDiagram& d) {
  int edges = 0;
  for (int i = 0; i < d.rank(); ++i)
    for (int j = i + 1; j < d.rank(); ++j) {
      unsigned m = d.bond(i, j);
      if (m >= 3 || m == kInf) ++edges;
    }
  return edges == d.rank() - static_cast<int>(d.components().size());
}

CartanData build_cartan(const CoxeterDiagram& d) {
  int n = d.rank();
  CartanData cd;
  cd.rank = n;
  bool forest = diagram_is_forest(d);

  unsigned long long level = 1;
  bool all_int = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      unsigned m = d.bond(i, j);
      if (m <= 3 || m == kInf) continue;
      bool integral_bond = forest && (m == 4 || m == 6);
      if (!integral_bond) {
        all_int = false;
        level = std::lcm<unsigned long long>(level, m);
        if (level > 600)
          throw std::invalid_argument("bond orders too large for exact arithmetic");
      }
    }
  cd.integral = all_int;

  std::shared_ptr<const RealCyclotomicField> field;
  if (!all_int) field = RealCyclotomicField::get(static_cast<unsigned>(level));
  cd.field = field;

  cd.exact_entries.assign(static_cast<size_t>(n) * n, AlgebraicScalar(0));
  if (all_int) cd.int_entries.assign(static_cast<size_t>(n) * n, 0);

  auto put = [&](int i, int j, long long v) {
    cd.exact_entries[i * n + j] = AlgebraicScalar(v);
    if (all_int) cd.int_entries[i * n + j] = v;
  };

  for (int i = 0; i < n; ++i) put(i, i, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      unsigned m = d.bond(i, j);
      if (m == 2) continue;
      if (m == kInf) {
        put(i, j, -2);
        put(j, i, -2);
      } else if (m == 3) {
        put(i, j, -1);
        put(j, i, -1);
      } else if (forest && (m == 4 || m == 6)) {
        put(i, j, -1);
        put(j, i, -static_cast<long long>(m) / 2);
      } else {
        AlgebraicScalar v = -AlgebraicScalar::two_cos_pi_over(m, field);
        cd.exact_entries[i * n + j] = v;
        cd.exact_entries[j * n + i] = v;
      }
    }
  }
  return cd;
}

}  // namespace

const CartanData& cartan_data(const CoxeterDiagram& d) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::vector<unsigned>>, std::unique_ptr<CartanData>>
      cache;
  std::vector<unsigned> key;
  key.reserve(static_cast<size_t>(d.rank()) * d.rank());
  for (int i = 0; i < d.rank(); ++i)
    for (int j = 0; j < d.rank(); ++j) key.push_back(d.bond(i, j));
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({d.rank(), key});
  if (it != cache.end()) return *it->second;
  auto ptr = std::make_unique<CartanData>(build_cartan(d));
  const CartanData& ref = *ptr;
  cache.emplace(std::make_pair(d.rank(), std::move(key)), std::move(ptr));
  return ref;
}

std::vector<AlgebraicScalar> simple_reflection(
    const CoxeterDiagram& d, int node, const std::vector<AlgebraicScalar>& v) {
  if (node < 0 || node >= d.rank()) throw std::out_of_range("node index out of range");
  if (static_cast<int>(v.size()) != d.rank())
    throw std::invalid_argument("vector length must equal rank");
  const CartanData& cd = cartan_data(d);
  std::vector<AlgebraicScalar> out = v;
  const AlgebraicScalar& vi = v[node];
  if (vi.is_zero()) return out;
  for (int j = 0; j < d.rank(); ++j) {
    const AlgebraicScalar& a = cd.entry(j, node);
    if (a.is_zero()) continue;
    out[j] -= vi * a;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Word operations via descent reduction in simple-root coordinates
// ---------------------------------------------------------------------------

namespace {

struct IntCartanView {
  using Scalar = long long;
  const CartanData* cd;
  Scalar entry(int i, int j) const { return cd->ientry(i, j); }
  static Scalar zero() { return 0; }
  static Scalar one() { return 1; }
  static bool is_zero(Scalar s) { return s == 0; }
  static bool is_one(Scalar s) { return s == 1; }
};

struct ExactCartanView {
  using Scalar = AlgebraicScalar;
  const CartanData* cd;
  const Scalar& entry(int i, int j) const { return cd->entry(i, j); }
  static Scalar zero() { return Scalar(0); }
  static Scalar one() { return Scalar(1); }
  static bool is_zero(const Scalar& s) { return s.is_zero(); }
  static bool is_one(const Scalar& s) { return s == Scalar(1); }
};

// Applies s_t to a root in simple-root coordinates: only coordinate t moves.
template <class View>
void reflect_root(const View& a, int rank, int t,
                  std::vector<typename View::Scalar>& g) {
  typename View::Scalar acc = View::zero();
  for (int j = 0; j < rank; ++j) {
    if (View::is_zero(g[j])) continue;
    acc += a.entry(t, j) * g[j];
  }
  g[t] -= acc;
}

template <class View>
bool is_simple_root(const View&, int rank, int t,
                    const std::vector<typename View::Scalar>& g) {
  if (!View::is_one(g[t])) return false;
  for (int j = 0; j < rank; ++j) {
    if (j == t) continue;
    if (!View::is_zero(g[j])) return false;
  }
  return true;
}

// Multiplies the reduced word w by s on the right, keeping it reduced.
// Returns true if the letter was appended (length went up).
template <class View>
bool insert_letter(const View& a, int rank, std::vector<int>& w, int s) {
  std::vector<typename View::Scalar> g(rank, View::zero());
  g[s] = View::one();
  for (int j = static_cast<int>(w.size()) - 1; j >= 0; --j) {
    int t = w[j];
    if (is_simple_root(a, rank, t, g)) {
      w.erase(w.begin() + j);
      return false;
    }
    reflect_root(a, rank, t, g);
  }
  w.push_back(s);
  return true;
}

template <class View>
Word reduce_word_impl(const View& a, int rank, const Word& input) {
  Word w;
  w.reserve(input.size());
  for (int s : input) {
    if (s < 0 || s >= rank) throw std::out_of_range("word letter out of range");
    insert_letter(a, rank, w, s);
  }
  return w;
}

template <class View>
bool is_reduced_impl(const View& a, int rank, const Word& input) {
  Word w;
  w.reserve(input.size());
  for (int s : input) {
    if (s < 0 || s >= rank) throw std::out_of_range("word letter out of range");
    if (!insert_letter(a, rank, w, s)) return false;
  }
  return true;
}

}  // namespace

bool is_reduced(const CoxeterDiagram& d, const Word& w) {
  const CartanData& cd = cartan_data(d);
  if (cd.integral) return is_reduced_impl(IntCartanView{&cd}, d.rank(), w);
  return is_reduced_impl(ExactCartanView{&cd}, d.rank(), w);
}

Word reduced_word(const CoxeterDiagram& d, const Word& w) {
  const CartanData& cd = cartan_data(d);
  if (cd.integral) return reduce_word_impl(IntCartanView{&cd}, d.rank(), w);
  return reduce_word_impl(ExactCartanView{&cd}, d.rank(), w);
}

int element_length(const CoxeterDiagram& d, const Word& w) {
  return static_cast<int>(reduced_word(d, w).size());
}

// ---------------------------------------------------------------------------
// Finiteness and group order
// ---------------------------------------------------------------------------

std::optional<TypeId> recognize_finite_component(const CoxeterDiagram& d,
                                                 const std::vector<int>& nodes) {
  int r = static_cast<int>(nodes.size());
  if (r == 1) return TypeId{'A', 1, 0};
  if (r == 2) {
    unsigned m = d.bond(nodes[0], nodes[1]);
    if (m == kInf || m < 3) return std::nullopt;  // reducible pairs handled upstream
    return TypeId{'I', 2, m};
  }

  // Rank >= 3: must be a tree with simple structure.
  struct Edge {
    int u, v;
    unsigned m;
  };
  std::vector<Edge> edges;
  std::vector<int> degree(r, 0);
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      unsigned m = d.bond(nodes[i], nodes[j]);
      if (m == kInf) return std::nullopt;
      if (m >= 3) {
        edges.push_back({i, j, m});
        ++degree[i];
        ++degree[j];
      }
    }
  }
  if (static_cast<int>(edges.size()) != r - 1) return std::nullopt;  // not a tree

  std::vector<int> branch, leaves;
  for (int i = 0; i < r; ++i) {
    if (degree[i] >= 4) return std::nullopt;
    if (degree[i] == 3) branch.push_back(i);
    if (degree[i] == 1) leaves.push_back(i);
  }
  if (branch.size() > 1) return std::nullopt;

  std::vector<Edge> heavy;
  for (const auto& e : edges)
    if (e.m >= 4) heavy.push_back(e);
  if (heavy.size() > 1) return std::nullopt;

  if (branch.empty()) {
    // A path diagram.
    if (heavy.empty()) return TypeId{'A', r, 0};
    const Edge& e = heavy[0];
    bool at_end = degree[e.u] == 1 || degree[e.v] == 1;
    if (e.m == 4) {
      if (at_end) return TypeId{'B', r, 0};
      if (r == 4) return TypeId{'F', 4, 0};
      return std::nullopt;
    }
    if (e.m == 5 && at_end && (r == 3 || r == 4)) return TypeId{'H', r, 0};
    return std::nullopt;
  }

  // One branch node: legs must be (1,1,k) for D, or (1,2,{2,3,4}) for E.
  if (!heavy.empty()) return std::nullopt;
  int center = branch[0];
  std::vector<std::vector<int>> adj(r);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> legs;
  for (int first : adj[center]) {
    int len = 1;
    int prev = center, cur = first;
    while (true) {
      int next = -1;
      for (int nb : adj[cur])
        if (nb != prev) next = nb;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs.size() != 3) return std::nullopt;
  if (legs[0] == 1 && legs[1] == 1) return TypeId{'D', r, 0};
  if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4)
    return TypeId{'E', r, 0};
  return std::nullopt;
}

namespace {

mpz_class factorial(int n) {
  mpz_class out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

mpz_class finite_type_order(const TypeId& t) {
  switch (t.family) {
    case 'A':
      return factorial(t.rank + 1);
    case 'B': {
      mpz_class out = factorial(t.rank);
      mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), t.rank);
      return out;
    }
    case 'D': {
      mpz_class out = factorial(t.rank);
      mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), t.rank - 1);
      return out;
    }
    case 'E':
      if (t.rank == 6) return mpz_class(51840);
      if (t.rank == 7) return mpz_class(2903040);
      return mpz_class(696729600);
    case 'F':
      return mpz_class(1152);
    case 'H':
      return t.rank == 3 ? mpz_class(120) : mpz_class(14400);
    case 'I':
      return mpz_class(2u * t.dihedral);
    default:
      throw std::logic_error("unknown finite type");
  }
}

// Positive definiteness of the Gram matrix B_ij = -cos(pi/m_ij) via exact
// Gaussian pivots.
bool gram_positive_definite(const CoxeterDiagram& d) {
  int n = d.rank();
  unsigned long long level = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      unsigned m = d.bond(i, j);
      if (m >= 3 && m != kInf) {
        level = std::lcm<unsigned long long>(level, m);
        if (level > 600)
          throw std::invalid_argument("bond orders too large for exact arithmetic");
      }
    }
  auto field = RealCyclotomicField::get(static_cast<unsigned>(level));
  std::vector<AlgebraicScalar> g(static_cast<size_t>(n) * n, AlgebraicScalar(0));
  mpq_class minus_half(-1, 2);
  for (int i = 0; i < n; ++i) {
    g[i * n + i] = AlgebraicScalar(1);
    for (int j = i + 1; j < n; ++j) {
      unsigned m = d.bond(i, j);
      AlgebraicScalar v(0);
      if (m == kInf) {
        v = AlgebraicScalar(-1);
      } else if (m == 2) {
        v = AlgebraicScalar(0);
      } else {
        v = AlgebraicScalar(minus_half) * AlgebraicScalar::two_cos_pi_over(m, field);
      }
      g[i * n + j] = v;
      g[j * n + i] = v;
    }
  }
  for (int k = 0; k < n; ++k) {
    AlgebraicScalar pivot = g[k * n + k];
    if (pivot.sign() <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      if (g[i * n + k].is_zero()) continue;
      AlgebraicScalar factor = g[i * n + k] / pivot;
      for (int j = k; j < n; ++j) g[i * n + j] -= factor * g[k * n + j];
    }
  }
  return true;
}

}  // namespace

GroupOrder group_order(const CoxeterDiagram& d) {
  if (!gram_positive_definite(d)) return GroupOrder{false, mpz_class(0)};
  mpz_class order = 1;
  for (const auto& comp : d.components()) {
    auto type = recognize_finite_component(d, comp);
    if (!type)
      throw std::logic_error("positive definite diagram failed type recognition");
    order *= finite_type_order(*type);
  }
  return GroupOrder{true, order};
}

}  // namespace twotrans
