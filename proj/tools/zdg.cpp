#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "zdg/catalog.hpp"
#include "zdg/classify.hpp"
#include "zdg/errors.hpp"
#include "zdg/genus.hpp"
#include "zdg/graph.hpp"
#include "zdg/ideal.hpp"
#include "zdg/ring.hpp"
#include "zdg/ring_json.hpp"

namespace {

using namespace zdg;
using json = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct Global {
  std::string format = "table";
  long budget = 100'000'000;
  std::string output;
  bool timing = false;
};

RingTable load_ring(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return build_ring(spec_from_json(ss.str()));
  }
  const RingSpec spec = spec_from_name(arg);
  RingTable t = build_ring(spec);
  if (auto e = catalog_lookup(arg)) return t.renamed(e->name);
  return t;
}

IdealSet select_ideal(const RingTable& t, const std::string& sel) {
  if (sel.empty()) return zero_ideal(t);
  if (sel[0] == '#') {
    const auto ideals = enumerate_ideals(t);
    std::size_t pos = 0;
    int k = -1;
    try {
      k = std::stoi(sel.substr(1), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos + 1 != sel.size() || k < 0 || k >= static_cast<int>(ideals.size())) {
      throw InvalidSpec("ideal index '" + sel + "' out of range 0.." + std::to_string(ideals.size() - 1));
    }
    return ideals[static_cast<std::size_t>(k)];
  }
  if (sel.rfind("gen:", 0) == 0) {
    std::vector<RingElem> gens;
    // Product labels such as "(1,0)" contain commas of their own.
    std::vector<std::string> items(1);
    int depth = 0;
    for (char c : sel.substr(4)) {
      depth += c == '(' ? 1 : c == ')' ? -1 : 0;
      if (c == ',' && depth == 0) {
        items.emplace_back();
      } else {
        items.back().push_back(c);
      }
    }
    for (const auto& item : items) {
      if (auto e = t.find_label(item)) {
        gens.push_back(*e);
      } else {
        gens.push_back(parse_element(t, item));
      }
    }
    if (gens.empty()) throw InvalidSpec("ideal selector needs at least one generator");
    return generated_ideal(t, gens);
  }
  throw InvalidSpec("ideal selector must be '#k' or 'gen:a,b,...'");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : "inf"; }

json opt_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

// ---------------------------------------------------------------------------

int cmd_ring(const Global& g, const std::string& arg, std::ostream& out) {
  const RingTable t = load_ring(arg);
  const auto u = units(t);
  const auto z = zero_divisors(t);
  const auto loc = is_local(t);
  if (g.format == "json") {
    json j;
    j["name"] = t.name();
    j["order"] = t.order();
    j["units"] = u.size();
    j["zero_divisors"] = z.size();
    j["local"] = loc.local;
    j["maximal_ideals"] = loc.maximal_ideals.size();
    j["labels"] = t.labels();
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "ring            " << t.name() << "\n";
  out << "order           " << t.order() << "\n";
  out << "units           " << u.size() << "\n";
  out << "zero-divisors   " << z.size() + 1 << " (" << z.size() << " nonzero)\n";
  out << "local           " << yes_no(loc.local) << "\n";
  out << "maximal ideals  " << loc.maximal_ideals.size() << "\n";
  out << "elements        ";
  for (int i = 0; i < t.order(); ++i) out << (i ? " " : "") << t.label(i);
  out << "\n";
  return 0;
}

int cmd_ideals(const Global& g, const std::string& arg, std::ostream& out) {
  const RingTable t = load_ring(arg);
  const auto ideals = enumerate_ideals(t);
  json rows = json::array();
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    const IdealSet& i = ideals[k];
    json r;
    r["index"] = k;
    r["ideal"] = i.is_whole() ? std::string("R") : describe_ideal(i);
    r["size"] = i.size();
    r["prime"] = !i.is_whole() && is_prime(i);
    r["radical"] = !i.is_whole() && is_radical(i);
    r["maximal"] = !i.is_whole() && is_maximal(i);
    rows.push_back(r);
  }
  if (g.format == "json") {
    out << rows.dump(2) << "\n";
  } else if (g.format == "csv") {
    out << "index,ideal,size,prime,radical,maximal\n";
    for (const auto& r : rows) {
      out << r["index"] << ",\"" << r["ideal"].get<std::string>() << "\"," << r["size"] << "," << r["prime"] << ","
          << r["radical"] << "," << r["maximal"] << "\n";
    }
  } else {
    out << pad("#", 5) << pad("ideal", 24) << pad("size", 6) << pad("prime", 7) << pad("radical", 9) << "maximal\n";
    for (const auto& r : rows) {
      out << pad("#" + std::to_string(r["index"].get<int>()), 5) << pad(r["ideal"].get<std::string>(), 24)
          << pad(std::to_string(r["size"].get<int>()), 6) << pad(yes_no(r["prime"]), 7) << pad(yes_no(r["radical"]), 9)
          << yes_no(r["maximal"]) << "\n";
    }
  }
  return 0;
}

json facts_json(const GraphFacts& f) {
  json j;
  j["vertices"] = f.order;
  j["edges"] = f.edges;
  j["diameter"] = opt_json(f.diameter);
  j["girth"] = opt_json(f.girth);
  j["clique"] = f.clique;
  j["shape"] = f.shape;
  return j;
}

void print_facts(const GraphFacts& f, std::ostream& out) {
  out << "vertices  " << f.order << "\n";
  out << "edges     " << f.edges << "\n";
  out << "diameter  " << (f.diameter ? std::to_string(*f.diameter) : "undefined") << "\n";
  out << "girth     " << opt_int(f.girth) << "\n";
  out << "clique    " << f.clique << "\n";
  out << "shape     " << f.shape << "\n";
}

struct GraphInput {
  SimpleGraph graph;
  std::string ring;
  std::string ideal;
};

GraphInput ideal_graph_input(const std::string& ring, const std::string& sel) {
  const RingTable t = load_ring(ring);
  const IdealSet i = select_ideal(t, sel);
  if (i.is_whole()) throw WholeRingIdeal("the selected ideal is the whole ring");
  if (!i.is_zero() && is_prime(i)) std::cerr << "warning: prime ideal selected; its graph has no vertices\n";
  return {ideal_zero_divisor_graph(i).graph, t.name(), describe_ideal(i)};
}

int cmd_graph(const Global& g, const std::string& ring, const std::string& sel, std::ostream& out) {
  const GraphInput in = ideal_graph_input(ring, sel);
  const GraphFacts f = graph_facts(in.graph);
  if (g.format == "dot") {
    out << export_dot(in.graph);
  } else if (g.format == "json") {
    json j;
    j["ring"] = in.ring;
    j["ideal"] = in.ideal;
    j["summary"] = facts_json(f);
    j["graph"] = json::parse(export_json(in.graph));
    out << j.dump(2) << "\n";
  } else {
    out << "ring      " << in.ring << "\n";
    out << "ideal     " << in.ideal << "\n";
    print_facts(f, out);
  }
  return 0;
}

int cmd_genus(const Global& g, const GraphInput& in, const std::string& cert_path, std::ostream& out) {
  GenusOptions opts;
  opts.budget = g.budget;
  const GenusBounds b = exact_genus(in.graph, opts);
  std::string prov;
  for (const auto& p : b.lower_provenance) prov += (prov.empty() ? "" : ";") + p;
  if (!cert_path.empty() && b.exact() && b.certificate) {
    std::ofstream c(cert_path);
    c << certificate_to_json(*b.certificate, in.graph, 2) << "\n";
  }
  if (g.format == "json") {
    json j;
    j["ring"] = in.ring;
    j["ideal"] = in.ideal;
    j["summary"] = facts_json(graph_facts(in.graph));
    j["lower"] = b.lower;
    j["upper"] = opt_json(b.upper);
    j["exact"] = b.exact();
    j["provenance"] = prov;
    j["nodes"] = b.nodes;
    j["budget_exhausted"] = b.budget_exhausted;
    if (b.certificate) j["certificate"] = json::parse(certificate_to_json(*b.certificate, in.graph));
    out << j.dump(2) << "\n";
  } else {
    out << "ring      " << in.ring << "\n";
    out << "ideal     " << in.ideal << "\n";
    out << "vertices  " << in.graph.order() << "\n";
    out << "edges     " << in.graph.edge_count() << "\n";
    if (b.exact()) {
      out << "genus     " << b.lower << "\n";
    } else {
      out << "genus     " << b.lower << ".." << (b.upper ? std::to_string(*b.upper) : "?") << "\n";
    }
    out << "lower     " << (prov.empty() ? "-" : prov) << "\n";
    out << "nodes     " << b.nodes << "\n";
    if (b.budget_exhausted) out << "budget    exhausted\n";
  }
  return b.budget_exhausted && !b.exact() ? kExitInconclusive : 0;
}

int cmd_verify(const Global& g, const std::string& which, std::ostream& out) {
  std::vector<TheoremId> ids;
  if (which == "all") {
    ids = all_theorems();
  } else if (auto id = theorem_from_name(which)) {
    ids.push_back(*id);
  } else {
    std::string known;
    for (auto t : all_theorems()) known += " " + theorem_name(t);
    throw InvalidSpec("unknown theorem '" + which + "'; known:" + known);
  }
  VerifyOptions opts;
  opts.budget = g.budget;
  bool disagree = false, inconclusive = false;
  for (TheoremId id : ids) {
    const auto reports = verify(id, opts);
    int ok = 0, bad = 0, open = 0;
    for (const auto& r : reports) {
      if (r.inconclusive()) {
        ++open;
      } else if (r.agreement()) {
        ++ok;
      } else {
        ++bad;
      }
    }
    disagree = disagree || bad > 0;
    inconclusive = inconclusive || open > 0;
    if (g.format == "json") {
      for (const auto& r : reports) out << report_to_json(r) << "\n";
    } else {
      out << reports_table(reports);
      out << theorem_name(id) << ": " << reports.size() << " instances, " << ok << " agree, " << bad << " disagree, "
          << open << " inconclusive -> " << (bad ? "FAIL" : open ? "INCONCLUSIVE" : "pass") << "\n\n";
    }
  }
  if (disagree) return kExitFail;
  return inconclusive ? kExitInconclusive : 0;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

constexpr const char* kAtlasHeader =
    "# zdg-atlas v1\n"
    "ring,order,ideal_index,ideal,ideal_size,prime,radical,quotient,vertices,edges,connected,diameter,girth,"
    "clique,planar,genus_lower,genus_upper,genus_provenance\n";

int cmd_atlas(const Global& g, int max_order, const std::string& group, std::ostream& out) {
  out << kAtlasHeader;
  GenusOptions opts;
  opts.budget = g.budget;
  bool exhausted = false;
  const auto& cat = catalog();
  const auto& rings = catalog_rings();
  for (std::size_t r = 0; r < cat.size(); ++r) {
    if (rings[r].order() > max_order) continue;
    if (!group.empty() && group_name(cat[r].group) != group) continue;
    const auto ideals = enumerate_ideals(rings[r]);
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      const IdealSet& i = ideals[k];
      if (i.is_zero() || i.is_whole()) continue;
      const SimpleGraph gr = ideal_zero_divisor_graph(i).graph;
      const GraphFacts f = graph_facts(gr);
      const GenusBounds b = exact_genus(gr, opts);
      exhausted = exhausted || (b.budget_exhausted && !b.exact());
      std::string prov;
      for (const auto& p : b.lower_provenance) prov += (prov.empty() ? "" : ";") + p;
      out << csv_field(cat[r].name) << ',' << rings[r].order() << ',' << k << ',' << csv_field(describe_ideal(i)) << ','
          << i.size() << ',' << is_prime(i) << ',' << is_radical(i) << ','
          << csv_field(identify_ring(quotient(i).table)) << ',' << f.order << ',' << f.edges << ','
          << is_connected(gr) << ',' << (f.diameter ? std::to_string(*f.diameter) : "") << ','
          << (f.girth ? std::to_string(*f.girth) : "") << ',' << f.clique << ',' << is_planar(gr) << ',' << b.lower
          << ',' << (b.upper ? std::to_string(*b.upper) : "") << ',' << csv_field(prov) << '\n';
    }
  }
  return exhausted ? kExitInconclusive : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideal-based zero-divisor graphs of finite commutative rings and their genus"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "dot", "csv"}))
      ->capture_default_str();
  app.add_option("--budget", g.budget, "Node budget of the embedding search")
      ->check(CLI::Range(10'000L, 1'000'000'000'000L))
      ->capture_default_str();
  app.add_option("-o,--output", g.output, "Write to this file instead of stdout");
  app.add_flag("--timing", g.timing, "Report elapsed time on stderr");

  std::string ring, ideal, which = "all", cert, quotient_name, graph_file, group;
  int ideal_size = 0, max_order = 64;

  auto* ring_cmd = app.add_subcommand("ring", "Summarize a ring");
  ring_cmd->add_option("ring", ring, "Catalog name, Z_n, F_q, product, or ring spec JSON file")->required();

  auto* ideals_cmd = app.add_subcommand("ideals", "List all ideals");
  ideals_cmd->add_option("ring", ring)->required();

  auto* graph_cmd = app.add_subcommand("graph", "Ideal-based zero-divisor graph");
  graph_cmd->add_option("ring", ring)->required();
  graph_cmd->add_option("-i,--ideal", ideal, "'#k' or 'gen:a,b'; zero ideal when omitted");

  auto* genus_cmd = app.add_subcommand("genus", "Genus bounds of an ideal-based graph");
  genus_cmd->add_option("ring", ring);
  genus_cmd->add_option("-i,--ideal", ideal, "'#k' or 'gen:a,b'; zero ideal when omitted");
  auto* q_opt = genus_cmd->add_option("--quotient", quotient_name, "Use T x Z_k with the ideal 0 x Z_k");
  genus_cmd->add_option("--ideal-size", ideal_size, "k for --quotient")->needs(q_opt);
  genus_cmd->add_option("--graph-file", graph_file, "Graph JSON document instead of a ring");
  genus_cmd->add_option("--certificate", cert, "Write the embedding certificate here when the genus is exact");

  auto* verify_cmd = app.add_subcommand("verify", "Check a classification result over its instances");
  verify_cmd->add_option("theorem", which, "Result id or 'all'")->capture_default_str();

  auto* atlas_cmd = app.add_subcommand("atlas", "CSV sweep over catalog rings and their ideals");
  atlas_cmd->add_option("--max-order", max_order)->capture_default_str();
  atlas_cmd->add_option("--group", group, "Restrict to one catalog group");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  std::ofstream file;
  if (!g.output.empty()) {
    file.open(g.output);
    if (!file) {
      std::cerr << "error: cannot write " << g.output << "\n";
      return kExitUsage;
    }
  }
  std::ostream& out = g.output.empty() ? std::cout : file;
  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (*ring_cmd) {
      code = cmd_ring(g, ring, out);
    } else if (*ideals_cmd) {
      code = cmd_ideals(g, ring, out);
    } else if (*graph_cmd) {
      code = cmd_graph(g, ring, ideal, out);
    } else if (*genus_cmd) {
      GraphInput in;
      const int sources = !ring.empty() + !quotient_name.empty() + !graph_file.empty();
      if (sources != 1) throw InvalidSpec("genus needs exactly one of RING, --quotient or --graph-file");
      if (!quotient_name.empty()) {
        if (ideal_size < 2) throw InvalidSpec("--quotient needs --ideal-size >= 2");
        const Instance inst = synthesized_instance(load_ring(quotient_name), ideal_size);
        in = {ideal_zero_divisor_graph(inst.ideal).graph, inst.ring.name(), "0×Z_" + std::to_string(ideal_size)};
      } else if (!graph_file.empty()) {
        std::ifstream f(graph_file);
        if (!f) throw InvalidSpec("cannot read " + graph_file);
        std::stringstream ss;
        ss << f.rdbuf();
        in = {graph_from_json(ss.str()), "-", "-"};
      } else {
        in = ideal_graph_input(ring, ideal);
      }
      code = cmd_genus(g, in, cert, out);
    } else if (*verify_cmd) {
      code = cmd_verify(g, which, out);
    } else if (*atlas_cmd) {
      code = cmd_atlas(g, max_order, group, out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  if (g.timing) {
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "elapsed " << s << " s\n";
  }
  return code;
}
