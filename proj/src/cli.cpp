#include "twotrans/cli.hpp"

#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "twotrans/building.hpp"
#include "twotrans/catalog.hpp"
#include "twotrans/coset.hpp"
#include "twotrans/coxeter.hpp"
#include "twotrans/rep.hpp"

namespace twotrans {

namespace {

using nlohmann::json;

json word_json(const Word& w) {
  json arr = json::array();
  for (int letter : w) arr.push_back(letter + 1);
  return arr;
}

json report_json(const CheckReport& report) {
  json checks = json::array();
  for (const auto& item : report.items)
    checks.push_back({{"name", item.name}, {"pass", item.pass}, {"detail", item.detail}});
  return checks;
}

// Emits a document in the requested format. For "jsonl", the array under
// `line_key` is written one element per line; other formats print a single
// document.
void emit(std::ostream& out, const std::string& format, const json& doc,
          const std::string& line_key) {
  if (format == "json") {
    out << doc.dump(2) << "\n";
  } else if (format == "jsonl") {
    if (!line_key.empty() && doc.contains(line_key) && doc.at(line_key).is_array()) {
      for (const auto& row : doc.at(line_key)) out << row.dump() << "\n";
    } else {
      out << doc.dump() << "\n";
    }
  }
}

struct GlobalOptions {
  std::string format = "text";
  std::string data_dir;
  uint64_t seed = 20240101;
};

int run_classify(const GlobalOptions& g, std::ostream& out, int max_rank,
                 int max_dihedral, bool all_rows) {
  auto make_row = [](const ClassifyRow& r) {
    json row{{"diagram", r.diagram},
             {"node", r.node + 1},
             {"class_count", r.class_count},
             {"two_transitive", r.two_transitive}};
    if (r.degenerate) row["degenerate"] = true;
    return row;
  };
  json doc{{"command", "classify"},
           {"max_rank", max_rank},
           {"max_dihedral", max_dihedral}};
  std::vector<ClassifyRow> rows =
      all_rows ? classify_all_rows(max_rank, max_dihedral)
               : classify(max_rank, max_dihedral);
  json main_rows = json::array();
  json degenerate = json::array();
  for (const auto& r : rows) {
    if (r.degenerate && !all_rows)
      degenerate.push_back(make_row(r));
    else
      main_rows.push_back(make_row(r));
  }
  doc["rows"] = main_rows;
  if (!all_rows) doc["degenerate"] = degenerate;

  if (g.format == "text") {
    out << (all_rows ? "all (diagram, node) pairs:" : "two-transitive pairs:")
        << "\n";
    for (const auto& r : rows) {
      out << "  " << r.diagram << "  node " << (r.node + 1) << "  classes "
          << r.class_count << (r.two_transitive ? "  two-transitive" : "")
          << (r.degenerate ? "  (degenerate rank-1 action)" : "") << "\n";
    }
  } else {
    emit(out, g.format, doc, "rows");
  }
  return 0;
}

int run_double_cosets(const GlobalOptions& g, std::ostream& out,
                      const std::string& type, int node_1based) {
  CoxeterDiagram d = CoxeterDiagram::parse(type);
  if (node_1based < 1 || node_1based > d.rank())
    throw std::domain_error("node out of range 1.." + std::to_string(d.rank()));
  WeightOrbit orbit(d, node_1based - 1);
  auto decomp = double_cosets(orbit);
  json classes = json::array();
  for (const auto& c : decomp.classes) {
    classes.push_back({{"size", c.size},
                       {"min_length", c.min_length},
                       {"representative", word_json(c.representative)}});
  }
  json doc{{"command", "double-cosets"},
           {"diagram", d.display_name()},
           {"node", node_1based},
           {"orbit_size", orbit.size()},
           {"class_count", decomp.classes.size()},
           {"classes", classes}};
  if (g.format == "text") {
    out << d.display_name() << " node " << node_1based << ": orbit "
        << orbit.size() << " points, " << decomp.classes.size()
        << " double cosets\n";
    for (const auto& c : decomp.classes) {
      out << "  size " << std::setw(6) << c.size << "  min length "
          << c.min_length << "  rep " << word_json(c.representative).dump()
          << "\n";
    }
  } else {
    emit(out, g.format, doc, "classes");
  }
  return 0;
}

// Structural facts that hold for every instance: panel thickness and the
// cell-count identity against the length generating function.
CheckReport building_basic_report(const Building& b) {
  CheckReport report;
  {
    bool ok = true;
    for (int type = 1; type <= b.rank(); ++type)
      for (const auto& panel : b.panel_members(type))
        if (static_cast<int>(panel.size()) != b.q() + 1) ok = false;
    report.items.push_back(
        {"panel-thickness", ok, "every panel has q+1 = " +
                                     std::to_string(b.q() + 1) + " chambers"});
  }
  {
    long long nf = factorial_ll(b.dim());
    long long expected = 0;
    for (long long i = 0; i < nf; ++i) {
      SymPerm w = perm_from_index(static_cast<int>(i), b.dim());
      long long cell = 1;
      for (int e = 0; e < perm_inversions(w); ++e) cell *= b.q();
      expected += cell;
    }
    bool ok = expected == b.chamber_count();
    report.items.push_back(
        {"chamber-count-vs-length-generating-function", ok,
         "sum q^l(w) = " + std::to_string(expected)});
  }
  return report;
}

int run_building(const GlobalOptions& g, std::ostream& out, int rank, int q,
                 const std::string& check, bool serial) {
  Building b(rank, q);
  CheckReport report = building_basic_report(b);
  if (check == "points" || check == "all") {
    auto r = check_two_transitive_points(b, !serial);
    report.items.insert(report.items.end(), r.items.begin(), r.items.end());
  }
  if (check == "axioms" || check == "all") {
    auto r = projective_axioms_report(b);
    report.items.insert(report.items.end(), r.items.begin(), r.items.end());
  }
  json doc{{"command", "building"},
           {"instance", "A" + std::to_string(rank) + " over F" + std::to_string(q)},
           {"rank", rank},
           {"q", q},
           {"chamber_count", b.chamber_count()},
           {"checks", report_json(report)},
           {"pass", report.all_pass()}};
  if (g.format == "text") {
    out << doc.at("instance").get<std::string>() << ": "
        << b.chamber_count() << " chambers\n";
    for (const auto& item : report.items) {
      out << "  [" << (item.pass ? "pass" : "FAIL") << "] " << item.name;
      if (!item.detail.empty()) out << "  (" << item.detail << ")";
      out << "\n";
    }
  } else {
    emit(out, g.format, doc, "checks");
  }
  return report.all_pass() ? 0 : 1;
}

json irrep_sum_json(const IrrepSum& sum) {
  json comps = json::array();
  for (const auto& c : sum.components) {
    comps.push_back({{"weight", weight_to_string(c.weight)},
                     {"multiplicity", c.multiplicity},
                     {"dimension", c.dimension}});
  }
  return json{{"components", comps}, {"total_dimension", sum.total_dimension}};
}

int run_decompose(const GlobalOptions& g, std::ostream& out,
                  const std::string& type, const std::string& op,
                  const std::string& weight_text,
                  const std::string& weight2_text) {
  const RootDatum& rd = RootDatum::parse(type);
  Weight lambda = parse_weight(weight_text, rd.rank());
  if (!rd.is_dominant(lambda))
    throw std::domain_error("weight is not dominant: " + weight_text);

  json doc{{"command", "decompose"},
           {"type", rd.name()},
           {"op", op},
           {"weight", weight_to_string(lambda)}};
  std::ostringstream text;

  if (op == "dim") {
    auto d = weyl_dim(rd, lambda);
    doc["dimension"] = d;
    text << "dim R(" << weight_to_string(lambda) << ") = " << d << "\n";
  } else if (op == "dual") {
    Weight dual = dual_weight(rd, lambda);
    doc["dual"] = weight_to_string(dual);
    text << "dual weight: " << weight_to_string(dual) << "\n";
  } else if (op == "realtype") {
    RealType t = real_type(rd, lambda);
    doc["real_type"] = to_string(t);
    text << "real type: " << to_string(t) << "\n";
  } else {
    IrrepSum sum;
    if (op == "sym2") {
      sum = sym2_decompose(rd, lambda);
    } else if (op == "alt2") {
      sum = alt2_decompose(rd, lambda);
    } else if (op == "tensor") {
      if (weight2_text.empty())
        throw std::domain_error("tensor requires --weight2");
      Weight mu = parse_weight(weight2_text, rd.rank());
      if (!rd.is_dominant(mu))
        throw std::domain_error("weight is not dominant: " + weight2_text);
      doc["weight2"] = weight_to_string(mu);
      sum = tensor_decompose(rd, lambda, mu);
    } else {
      throw std::domain_error("unknown op: " + op);
    }
    doc["result"] = irrep_sum_json(sum);
    for (const auto& c : sum.components) {
      text << "R(" << weight_to_string(c.weight) << ")";
      if (c.multiplicity > 1) text << "^" << c.multiplicity;
      text << "  dim " << c.dimension << "\n";
    }
    text << "total dimension " << sum.total_dimension << "\n";
  }

  if (g.format == "text") {
    out << text.str();
  } else {
    emit(out, g.format, doc, "");
  }
  return 0;
}

int run_catalog_lookup(const GlobalOptions& g, std::ostream& out,
                       const Catalog& catalog, const Catalog::Query& query) {
  auto hits = catalog.lookup(query);
  json rows = json::array();
  for (const auto& hit : hits) {
    json row = hit.row;
    row["table"] = hit.table;
    rows.push_back(std::move(row));
  }
  json doc{{"command", "catalog-lookup"}, {"matches", rows}};
  if (g.format == "text") {
    for (const auto& hit : hits) {
      out << hit.table << ": " << hit.row.value("group", hit.row.value("commutator", "?"));
      if (hit.row.contains("space")) out << "  on " << hit.row.at("space").get<std::string>();
      if (hit.row.contains("quotient"))
        out << "  quotient " << hit.row.at("quotient").get<std::string>();
      out << "\n";
    }
    out << hits.size() << " match(es)\n";
  } else {
    emit(out, g.format, doc, "matches");
  }
  return 0;
}

int run_catalog_verify(const GlobalOptions& g, std::ostream& out,
                       const Catalog& catalog) {
  CheckReport report = catalog.verify();
  json doc{{"command", "catalog-verify"},
           {"checks", report_json(report)},
           {"failures", report.failure_count()}};
  if (g.format == "text") {
    for (const auto& item : report.items) {
      out << "[" << (item.pass ? "pass" : "FAIL") << "] " << item.name;
      if (!item.detail.empty()) out << "  (" << item.detail << ")";
      out << "\n";
    }
    out << report.failure_count() << " failure(s)\n";
  } else {
    emit(out, g.format, doc, "checks");
  }
  return report.all_pass() ? 0 : 1;
}

int run_catalog_probe(const GlobalOptions& g, std::ostream& out,
                      const Catalog& catalog, int samples, double tol,
                      const std::string& spiral_a_list) {
  std::vector<double> spiral_as;
  {
    std::stringstream ss(spiral_a_list);
    std::string item;
    while (std::getline(ss, item, ',')) spiral_as.push_back(std::stod(item));
  }
  json entries = json::array();
  bool all_pass = true;
  for (const auto& row : catalog.table("sh2trs").at("rows")) {
    std::string kind = row.at("probe_kind").get<std::string>();
    std::vector<double> as = kind == "spiral" ? spiral_as : std::vector<double>{0.0};
    for (double a : as) {
      ProbeResult r = sharply_transitive_probe(kind, a, samples, tol, g.seed);
      bool law = spiral_subgroup_law(a, samples, tol, g.seed + 1);
      all_pass = all_pass && r.pass && law;
      json e{{"group", row.at("group")},
             {"kind", kind},
             {"samples", r.samples},
             {"pass", r.pass},
             {"subgroup_law_pass", law}};
      if (kind == "spiral") e["a"] = a;
      entries.push_back(std::move(e));
    }
  }
  json doc{{"command", "catalog-probe"},
           {"samples", samples},
           {"seed", g.seed},
           {"entries", entries},
           {"pass", all_pass}};
  if (g.format == "text") {
    for (const auto& e : entries) {
      out << (e.at("pass").get<bool>() && e.at("subgroup_law_pass").get<bool>()
                  ? "[pass] "
                  : "[FAIL] ")
          << e.at("group").get<std::string>();
      if (e.contains("a")) out << " (a = " << e.at("a").get<double>() << ")";
      out << "\n";
    }
  } else {
    emit(out, g.format, doc, "entries");
  }
  return all_pass ? 0 : 1;
}

}  // namespace

std::string default_data_dir() {
#ifdef TWOTRANS_DATA_DIR
  return TWOTRANS_DATA_DIR;
#else
  return "data";
#endif
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact computations behind the classification of two-transitive group actions"};
  app.require_subcommand(1);

  GlobalOptions g;
  g.data_dir = default_data_dir();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json", "jsonl"}));
  app.add_option("--seed", g.seed, "seed for randomized probes");
  app.add_option("--data-dir", g.data_dir, "directory with the table documents");

  std::function<int()> action;

  // classify
  {
    auto* cmd = app.add_subcommand(
        "classify", "sweep finite diagrams for two-transitive coset actions");
    auto max_rank = std::make_shared<int>(4);
    auto max_dihedral = std::make_shared<int>(12);
    auto all_rows = std::make_shared<bool>(false);
    cmd->add_option("--max-rank", *max_rank, "largest rank to sweep")->required();
    cmd->add_option("--max-dihedral", *max_dihedral, "largest dihedral bond order");
    cmd->add_flag("--all", *all_rows, "report every pair, not only the passing ones");
    cmd->callback([&, max_rank, max_dihedral, all_rows]() {
      action = [&, max_rank, max_dihedral, all_rows]() {
        return run_classify(g, out, *max_rank, *max_dihedral, *all_rows);
      };
    });
  }

  // double-cosets
  {
    auto* cmd = app.add_subcommand("double-cosets",
                                   "parabolic double cosets of a weight orbit");
    auto type = std::make_shared<std::string>();
    auto node = std::make_shared<int>(1);
    cmd->add_option("--type", *type, "diagram name or JSON document")->required();
    cmd->add_option("--node", *node, "distinguished node (1-based)")->required();
    cmd->callback([&, type, node]() {
      action = [&, type, node]() { return run_double_cosets(g, out, *type, *node); };
    });
  }

  // building
  {
    auto* cmd = app.add_subcommand("building", "flag building checks over F_q");
    auto rank = std::make_shared<int>(2);
    auto q = std::make_shared<int>(2);
    auto check = std::make_shared<std::string>("all");
    auto serial = std::make_shared<bool>(false);
    cmd->add_option("--rank", *rank, "building rank")->required();
    cmd->add_option("--q", *q, "field size (prime)")->required();
    cmd->add_option("--check", *check, "points | axioms | all")
        ->check(CLI::IsMember({"points", "axioms", "all"}));
    cmd->add_flag("--serial", *serial, "use the serial reference kernels");
    cmd->callback([&, rank, q, check, serial]() {
      action = [&, rank, q, check, serial]() {
        return run_building(g, out, *rank, *q, *check, *serial);
      };
    });
  }

  // decompose
  {
    auto* cmd = app.add_subcommand("decompose", "weight-lattice computations");
    auto type = std::make_shared<std::string>();
    auto op = std::make_shared<std::string>();
    auto weight = std::make_shared<std::string>();
    auto weight2 = std::make_shared<std::string>();
    cmd->add_option("--type", *type, "simple type, e.g. B4")->required();
    cmd->add_option("--op", *op, "sym2 | alt2 | tensor | dim | dual | realtype")
        ->required()
        ->check(CLI::IsMember({"sym2", "alt2", "tensor", "dim", "dual", "realtype"}));
    cmd->add_option("--weight", *weight, "fundamental-weight coordinates, e.g. 0,0,0,1")
        ->required();
    cmd->add_option("--weight2", *weight2, "second weight (tensor)");
    cmd->callback([&, type, op, weight, weight2]() {
      action = [&, type, op, weight, weight2]() {
        return run_decompose(g, out, *type, *op, *weight, *weight2);
      };
    });
  }

  // catalog
  {
    auto* cmd = app.add_subcommand("catalog", "classification table data");
    cmd->require_subcommand(1);

    auto* lookup = cmd->add_subcommand("lookup", "filter table rows");
    auto table = std::make_shared<std::string>();
    auto m = std::make_shared<long long>(-1);
    auto kind = std::make_shared<std::string>();
    auto flag = std::make_shared<std::string>();
    auto space = std::make_shared<std::string>();
    lookup->add_option("--table", *table, "table id");
    lookup->add_option("--m", *m, "ambient dimension (matches concrete rows)");
    lookup->add_option("--kind", *kind, "sphere | projective | vector");
    lookup->add_option("--flag", *flag, "required flag");
    lookup->add_option("--space", *space, "exact space descriptor, e.g. S^15");
    lookup->callback([&, table, m, kind, flag, space]() {
      action = [&, table, m, kind, flag, space]() {
        Catalog catalog = Catalog::load(g.data_dir);
        Catalog::Query query;
        if (!table->empty()) query.table = *table;
        if (*m >= 0) query.m = *m;
        if (!kind->empty()) query.space_kind = *kind;
        if (!flag->empty()) query.flag = *flag;
        if (!space->empty()) query.space = *space;
        return run_catalog_lookup(g, out, catalog, query);
      };
    });

    auto* verify = cmd->add_subcommand("verify", "run every stored invariant");
    verify->callback([&]() {
      action = [&]() {
        Catalog catalog = Catalog::load(g.data_dir);
        return run_catalog_verify(g, out, catalog);
      };
    });

    auto* probe = cmd->add_subcommand("probe", "sharply-transitive regularity probes");
    auto samples = std::make_shared<int>(1000);
    auto tol = std::make_shared<double>(1e-9);
    auto spiral_a = std::make_shared<std::string>("-2,0,1,3.5");
    probe->add_option("--samples", *samples, "random targets per entry");
    probe->add_option("--tol", *tol, "tolerance");
    probe->add_option("--spiral-a", *spiral_a, "comma-separated spiral parameters");
    probe->callback([&, samples, tol, spiral_a]() {
      action = [&, samples, tol, spiral_a]() {
        Catalog catalog = Catalog::load(g.data_dir);
        return run_catalog_probe(g, out, catalog, *samples, *tol, *spiral_a);
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace twotrans
