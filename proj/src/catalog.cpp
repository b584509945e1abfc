#include "twotrans/catalog.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "twotrans/rep.hpp"

namespace twotrans {

// ---------------------------------------------------------------------------
// Quaternions and probes
// ---------------------------------------------------------------------------

Quat operator*(const Quat& a, const Quat& b) {
  return Quat{a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
              a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
              a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
              a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quat operator-(const Quat& a, const Quat& b) {
  return Quat{a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

double Quat::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quat spiral_element(double a, double t) {
  double r = std::exp(t);
  return Quat{r * std::cos(t * a), r * std::sin(t * a), 0, 0};
}

namespace {

struct Sampler {
  std::mt19937_64 gen;
  explicit Sampler(uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    // fixed mapping of raw 64-bit draws, identical across platforms
    double f = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return lo + f * (hi - lo);
  }
};

int active_components(const std::string& kind) {
  if (kind == "real") return 1;
  if (kind == "complex") return 2;
  if (kind == "quaternion" || kind == "spiral") return 4;
  throw std::invalid_argument("unknown probe kind: " + kind);
}

}  // namespace

bool spiral_subgroup_law(double a, int samples, double tol, uint64_t seed) {
  Sampler rng(seed);
  for (int i = 0; i < samples; ++i) {
    double s = rng.uniform(-5, 5), t = rng.uniform(-5, 5);
    Quat lhs = spiral_element(a, s + t);
    Quat rhs = spiral_element(a, s) * spiral_element(a, t);
    if ((lhs - rhs).norm() > tol) return false;
  }
  return true;
}

ProbeResult sharply_transitive_probe(const std::string& kind, double a,
                                     int samples, double tol, uint64_t seed) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  int comps = active_components(kind);
  double a_eff = kind == "spiral" ? a : 0.0;
  Sampler rng(seed);
  ProbeResult out;
  out.samples = samples;
  out.pass = true;
  for (int i = 0; i < samples; ++i) {
    Quat v{};
    do {
      v.w = rng.uniform(-2, 2);
      if (comps >= 2) v.x = rng.uniform(-2, 2);
      if (comps >= 4) {
        v.y = rng.uniform(-2, 2);
        v.z = rng.uniform(-2, 2);
      }
    } while (v.norm() < 0.2);

    double r = v.norm();
    double t = std::log(r);
    // unit part h = v e^{-i a t} / |v|; then h e^{t(1+ia)} recovers v
    auto solve = [&](double tt) {
      Quat twist{std::cos(-a_eff * tt), std::sin(-a_eff * tt), 0, 0};
      Quat h = v * twist;
      h.w /= r;
      h.x /= r;
      h.y /= r;
      h.z /= r;
      return h * spiral_element(a_eff, tt);
    };
    double err = (solve(t) - v).norm();
    out.max_error = std::max(out.max_error, err);
    if (err > tol) out.pass = false;
    // a perturbed exponent cannot reproduce the target: |e^{t'}| != |v|
    double err_perturbed = (solve(t + 0.1) - v).norm();
    if (err_perturbed <= tol) out.pass = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Catalog data
// ---------------------------------------------------------------------------

const std::vector<std::string>& Catalog::table_ids() {
  static const std::vector<std::string> ids = {
      "trs-sphere",     "compact-class-a", "compact-class-b",
      "trs-proj",       "trs-lin-grp",     "sh2trs",
      "moufang-normalizer", "iso-links"};
  return ids;
}

std::string Catalog::normalize_table_id(const std::string& raw) {
  auto squash = [](const std::string& s) {
    std::string out;
    for (char c : s)
      if (std::isalnum(static_cast<unsigned char>(c)))
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  std::string key = squash(raw);
  for (const auto& id : table_ids())
    if (squash(id) == key) return id;
  throw std::invalid_argument("unknown table id: " + raw);
}

Catalog Catalog::load(const std::string& data_dir) {
  Catalog cat;
  for (const auto& id : table_ids()) {
    std::string file = id;
    for (auto& c : file)
      if (c == '-') c = '_';
    std::string path = data_dir + "/" + file + ".json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog document: " + path);
    nlohmann::json doc;
    in >> doc;
    if (doc.value("schema_version", 0) != 1)
      throw std::runtime_error("unsupported schema version in " + path);
    cat.tables_.emplace(id, std::move(doc));
  }
  return cat;
}

const nlohmann::json& Catalog::table(const std::string& id) const {
  return tables_.at(normalize_table_id(id));
}

namespace {

long long eval_poly(const nlohmann::json& poly, long long x) {
  long long acc = 0, power = 1;
  for (const auto& c : poly.at("num")) {
    acc += c.get<long long>() * power;
    power *= x;
  }
  long long den = poly.value("den", 1);
  if (acc % den != 0) throw std::logic_error("polynomial evaluation not integral");
  return acc / den;
}

bool poly_is_constant(const nlohmann::json& poly) {
  const auto& num = poly.at("num");
  for (size_t i = 1; i < num.size(); ++i)
    if (num[i].get<long long>() != 0) return false;
  return true;
}

long long poly_constant(const nlohmann::json& poly) { return eval_poly(poly, 0); }

// Splits a classical group name "Family(k)" on its last parenthesis; the
// names may contain multi-byte separator characters, so never index by byte
// offsets from the front.
bool split_group_name(const std::string& name, std::string& head, long long& k) {
  size_t open = name.rfind('(');
  if (open == std::string::npos || name.back() != ')') return false;
  head = name.substr(0, open);
  try {
    size_t pos = 0;
    std::string arg = name.substr(open + 1, name.size() - open - 2);
    k = std::stoll(arg, &pos);
    if (pos != arg.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

// Dimensions of the named compact groups in the inclusion diagram.
long long compact_group_dim(const std::string& name) {
  if (name == "G2") return 14;
  std::string head;
  long long k = 0;
  if (!split_group_name(name, head, k))
    throw std::invalid_argument("unknown group name: " + name);
  if (head == "SO" || head == "Spin") return k * (k - 1) / 2;
  if (head == "SU") return k * k - 1;
  if (head == "Sp") return k * (2 * k + 1);
  if (head == "U") return k * k;
  if (head == "U(1)·Sp") return 1 + k * (2 * k + 1);
  throw std::invalid_argument("unknown group name: " + name);
}

// Adjoint dimension cross-check when the name denotes a simple group with an
// implemented root datum; returns -1 when no clean match exists.
long long rep_engine_dim(const std::string& name) {
  auto simple = [&](SimpleType t, int r) -> long long {
    const RootDatum& rd = RootDatum::create(t, r);
    return static_cast<long long>(weyl_dim(rd, rd.adjoint_weight()));
  };
  if (name == "G2") return simple(SimpleType::G, 2);
  std::string head;
  long long k = 0;
  if (!split_group_name(name, head, k)) return -1;
  if (head == "SO" || head == "Spin") {
    if (k == 3) return simple(SimpleType::A, 1);
    if (k == 6) return simple(SimpleType::A, 3);
    if (k >= 5 && k % 2 == 1) return simple(SimpleType::B, static_cast<int>(k / 2));
    if (k >= 8 && k % 2 == 0) return simple(SimpleType::D, static_cast<int>(k / 2));
    return -1;
  }
  if (head == "SU") {
    return k >= 2 ? simple(SimpleType::A, static_cast<int>(k - 1)) : -1;
  }
  if (head == "Sp") {
    if (k == 1) return simple(SimpleType::A, 1);
    return simple(SimpleType::C, static_cast<int>(k));
  }
  return -1;
}

SimpleType type_from_letter(const std::string& s) {
  if (s.size() != 1 || s[0] < 'A' || s[0] > 'G')
    throw std::invalid_argument("bad simple type letter: " + s);
  return static_cast<SimpleType>(s[0]);
}

}  // namespace

std::vector<Catalog::Hit> Catalog::lookup(const Query& q) const {
  std::vector<Hit> out;
  std::optional<std::string> table_id;
  if (q.table) table_id = normalize_table_id(*q.table);

  auto match_row = [&](const nlohmann::json& row) {
    if (q.m) {
      if (!row.contains("m")) return false;
      if (!poly_is_constant(row.at("m"))) return false;
      if (poly_constant(row.at("m")) != *q.m) return false;
    }
    if (q.space_kind) {
      if (row.value("space_kind", "") != *q.space_kind) return false;
    }
    if (q.space) {
      if (row.value("space", "") != *q.space) return false;
    }
    if (q.flag) {
      if (!row.contains("flags")) return false;
      bool found = false;
      for (const auto& f : row.at("flags"))
        if (f.get<std::string>() == *q.flag) found = true;
      if (!found) return false;
    }
    return true;
  };

  for (const auto& [id, doc] : tables_) {
    if (table_id && id != *table_id) continue;
    if (id == "iso-links") continue;
    if (doc.contains("rows")) {
      for (const auto& row : doc.at("rows"))
        if (match_row(row)) out.push_back(Hit{id, row});
    } else if (doc.contains("sections")) {
      for (const auto& [section, rows] : doc.at("sections").items()) {
        for (const auto& row : rows) {
          if (match_row(row)) {
            nlohmann::json annotated = row;
            annotated["section"] = section;
            out.push_back(Hit{id, std::move(annotated)});
          }
        }
      }
    }
  }
  return out;
}

CheckReport Catalog::verify() const {
  CheckReport report;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    report.items.push_back(CheckItem{name, pass, detail});
  };

  // Row counts pinned at data-entry review.
  const std::vector<std::pair<std::string, size_t>> expected_counts = {
      {"trs-sphere", 9},          {"compact-class-a", 4},
      {"compact-class-b", 5},     {"trs-proj", 16},
      {"sh2trs", 4},              {"moufang-normalizer", 4},
  };
  for (const auto& [id, count] : expected_counts) {
    size_t have = tables_.at(id).at("rows").size();
    add("row-count:" + id, have == count,
        std::to_string(have) + " rows, expected " + std::to_string(count));
  }
  {
    const auto& sections = tables_.at("trs-lin-grp").at("sections");
    bool ok = sections.at("a").size() == 7 && sections.at("b").size() == 7 &&
              sections.at("c").size() == 3;
    add("row-count:trs-lin-grp", ok, "sections a/b/c = 7/7/3");
  }
  {
    size_t links = tables_.at("iso-links").at("links").size();
    add("row-count:iso-links", links == 4, std::to_string(links) + " links");
  }

  // Orbit-dimension arithmetic for the sphere table, with group dimensions
  // recomputed from adjoint modules of the weight-lattice engine.
  for (const auto& row : tables_.at("trs-sphere").at("rows")) {
    std::string group = row.at("group").get<std::string>();
    std::vector<long long> values;
    if (row.contains("param")) {
      for (const auto& v : row.at("param").at("check_values"))
        values.push_back(v.get<long long>());
    } else {
      values.push_back(0);  // constant polynomials ignore the argument
    }
    bool arith_ok = true;
    std::string detail;
    for (long long n : values) {
      long long m = eval_poly(row.at("m"), n);
      long long gd = eval_poly(row.at("group_dim"), n);
      long long sd = eval_poly(row.at("stabilizer").at("dim"), n);
      if (gd - sd != m - 1) {
        arith_ok = false;
        detail = "dim mismatch at n=" + std::to_string(n);
      } else if (detail.empty()) {
        detail = std::to_string(gd) + " - " + std::to_string(sd) + " = " +
                 std::to_string(m - 1) + " = m - 1";
      }
    }
    add("sphere-orbit-dimension:" + group, arith_ok, detail);

    if (row.contains("rep_checks")) {
      bool rep_ok = true;
      std::string rep_detail;
      for (const auto& rc : row.at("rep_checks")) {
        const RootDatum& rd = RootDatum::create(
            type_from_letter(rc.at("type").get<std::string>()), rc.at("rank").get<int>());
        long long adjoint =
            static_cast<long long>(weyl_dim(rd, rd.adjoint_weight()));
        long long offset = rc.value("offset", 0);
        long long n = rc.value("n", 0);
        long long expected = eval_poly(row.at("group_dim"), n);
        if (adjoint + offset != expected) {
          rep_ok = false;
          rep_detail = "adjoint of " + rd.name() + " = " + std::to_string(adjoint);
        }
      }
      if (rep_detail.empty()) rep_detail = "adjoint dimensions agree";
      add("sphere-group-dimension-recomputed:" + group, rep_ok, rep_detail);
    }
    if (row.contains("stabilizer_rep")) {
      const auto& sr = row.at("stabilizer_rep");
      const RootDatum& rd = RootDatum::create(
          type_from_letter(sr.at("type").get<std::string>()), sr.at("rank").get<int>());
      long long adjoint = static_cast<long long>(weyl_dim(rd, rd.adjoint_weight()));
      long long sd = poly_constant(row.at("stabilizer").at("dim"));
      add("sphere-stabilizer-dimension-recomputed:" + group, adjoint == sd,
          row.at("stabilizer").at("name").get<std::string>() + " dim " +
              std::to_string(adjoint));
    }
  }

  // Inclusion diagram: strict dimension growth along every edge, names
  // cross-checked against the weight-lattice engine where they are simple.
  {
    bool ok = true;
    bool rep_ok = true;
    std::string detail;
    for (const auto& edge : tables_.at("trs-sphere").at("inclusions")) {
      std::string sub = edge.at("sub").get<std::string>();
      std::string sup = edge.at("sup").get<std::string>();
      long long ds = compact_group_dim(sub), dS = compact_group_dim(sup);
      if (ds >= dS) {
        ok = false;
        detail = sub + " !< " + sup;
      }
      for (const auto& name : {sub, sup}) {
        long long rep = rep_engine_dim(name);
        if (rep >= 0 && rep != compact_group_dim(name)) rep_ok = false;
      }
    }
    if (detail.empty())
      detail = std::to_string(tables_.at("trs-sphere").at("inclusions").size()) +
               " edges dimension-monotone";
    add("sphere-inclusion-chains", ok, detail);
    add("sphere-inclusion-rep-crosscheck", rep_ok, "simple factors recomputed");
  }

  // Projective rows: the real rank equals the rank of the projective space.
  for (const auto& row : tables_.at("compact-class-b").at("rows")) {
    std::vector<long long> values{2, 3, 4, 5};
    if (row.contains("param")) {
      values.clear();
      for (const auto& v : row.at("param").at("check_values"))
        values.push_back(v.get<long long>());
    } else {
      values = {0};
    }
    bool ok = true;
    for (long long k : values)
      if (eval_poly(row.at("real_rank"), k) != eval_poly(row.at("space_rank"), k))
        ok = false;
    add("projective-rank:" + row.at("group").get<std::string>() + "/" +
            row.value("condition", "all"),
        ok, "real rank = projective rank");
  }

  // Exceptional isomorphism links: both endpoints exist and agree in
  // dimension.
  {
    auto resolve = [&](const nlohmann::json& ref) -> std::pair<bool, long long> {
      const auto& doc = tables_.at(ref.at("table").get<std::string>());
      for (const auto& row : doc.at("rows")) {
        if (row.at("group").get<std::string>() == ref.at("family").get<std::string>()) {
          return {true, eval_poly(row.at("group_dim"), ref.at("param").get<long long>())};
        }
      }
      return {false, -1};
    };
    for (const auto& link : tables_.at("iso-links").at("links")) {
      auto [lok, ldim] = resolve(link.at("left"));
      auto [rok, rdim] = resolve(link.at("right"));
      std::string name = link.at("left").at("family").get<std::string>() + "@" +
                         std::to_string(link.at("left").at("param").get<long long>()) +
                         " = " +
                         link.at("right").at("family").get<std::string>() + "@" +
                         std::to_string(link.at("right").at("param").get<long long>());
      add("iso-link:" + name, lok && rok && ldim == rdim,
          "dim " + std::to_string(ldim) + " / " + std::to_string(rdim));
    }
  }

  // Sharply-transitive rows live in the advertised dimensions.
  {
    bool ok = true;
    for (const auto& row : tables_.at("sh2trs").at("rows")) {
      long long m = poly_constant(row.at("m"));
      if (m != 1 && m != 2 && m != 4) ok = false;
      active_components(row.at("probe_kind").get<std::string>());
    }
    add("sharply-transitive-dimensions", ok, "m in {1, 2, 4}");
  }

  return report;
}

}  // namespace twotrans
