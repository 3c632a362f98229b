// ecm: command-line front end for poset Cohen–Macaulay analysis.
//
// Exit codes: 0 success, 1 an asserted property is false, 2 malformed input.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ecm/catalog.hpp"
#include "ecm/cm.hpp"
#include "ecm/homology.hpp"
#include "ecm/io.hpp"
#include "ecm/lattice.hpp"
#include "ecm/search.hpp"
#include "ecm/shelling.hpp"

namespace {

using ecm::io::json;

constexpr int kExitFalse = 1;
constexpr int kExitMalformed = 2;

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw ecm::Error(ecm::ErrorCode::BadInput, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ecm::Error(ecm::ErrorCode::BadInput, "cannot write '" + path + "'");
  out << text;
}

ecm::FieldSpec parse_field(const std::string& s) {
  if (s == "q" || s == "Q") return ecm::FieldSpec::rationals();
  try {
    return ecm::FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(s)));
  } catch (const std::logic_error&) {
    throw ecm::Error(ecm::ErrorCode::BadParams, "field must be q or a prime, got '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string witness_text(const ecm::Witness& w, int depth = 1) {
  std::string s = std::string(2 * depth, ' ') + ecm::to_string(w.kind) + " [";
  for (std::size_t i = 0; i < w.elements.size(); ++i) s += (i ? ", " : "") + w.elements[i];
  s += "]";
  if (w.betti_index) s += " b~" + std::to_string(*w.betti_index);
  if (!w.detail.empty()) s += ": " + w.detail;
  s += "\n";
  for (const auto& c : w.cause) s += witness_text(c, depth + 1);
  return s;
}

struct Common {
  std::string input;
  std::string field = "q";
  bool as_json = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("file", c.input, "poset document (default: stdin)");
  cmd->add_option("--field", c.field, "coefficient field: q, 2 or a prime")->capture_default_str();
  cmd->add_flag("--json", c.as_json, "emit the machine-readable report");
}

/// Evaluates one --props token.
ecm::CmVerdict check_property(const std::string& prop, const ecm::Poset& p, ecm::CmAnalyzer& an) {
  auto value_of = [&](const std::string& key) { return prop.substr(key.size()); };
  if (prop == "cm") return an.is_cm(p);
  if (prop == "2cm") return an.is_k_cm(p, 2);
  if (prop == "gorenstein") return an.is_gorenstein_star(p);
  if (prop.rfind("kcm=", 0) == 0) return an.is_k_cm(p, std::stoi(value_of("kcm=")));
  if (prop == "edgewise=strong") return an.is_edgewise_k_cm(p, ecm::EdgewiseLevel::strong());
  if (prop.rfind("edgewise=", 0) == 0) {
    return an.is_edgewise_k_cm(p, ecm::EdgewiseLevel::of(std::stoi(value_of("edgewise="))));
  }
  throw ecm::Error(ecm::ErrorCode::BadParams, "unknown property '" + prop + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen–Macaulay analysis of finite posets"};
  app.require_subcommand(1);

  // gen
  std::string family, gen_out, facets_spec;
  std::vector<int> gen_params;
  auto* gen = app.add_subcommand("gen", "generate a catalog poset");
  gen->add_option("family", family, "family name")->required();
  gen->add_option("params", gen_params, "integer parameters");
  gen->add_option("-o,--output", gen_out, "output file (default: stdout)");
  gen->add_option("--facets", facets_spec,
                  "face_lattice/complex_face_lattice only: facets as vertex lists, e.g. \"a b c;a b d\"");
  bool gen_proper = false;
  gen->add_flag("--proper", gen_proper, "emit the proper part of the generated (bounded) poset");

  // check
  Common chk;
  std::string props = "cm", route_name = "interval";
  bool assert_props = false, timing = false;
  auto* check = app.add_subcommand("check", "check properties");
  add_common(check, chk);
  check->add_option("--props", props, "comma list: cm,2cm,kcm=K,gorenstein,edgewise=K|strong")->capture_default_str();
  check->add_option("--route", route_name, "CM route: link, interval or both")->capture_default_str();
  check->add_flag("--assert", assert_props, "exit 1 if any property is false");
  check->add_flag("--timing", timing, "include wall times in the report");

  Common conn;
  auto* connectivity = app.add_subcommand("connectivity", "edgewise CM connectivity (0 = not CM)");
  add_common(connectivity, conn);

  Common hom;
  std::vector<std::string> open_interval;
  auto* homology = app.add_subcommand("homology", "reduced Betti numbers of the order complex");
  add_common(homology, hom);
  homology->add_option("--open-interval", open_interval, "endpoints a b in P-hat (0^ and 1^ allowed)")
      ->expected(2);

  Common shl;
  bool edgewise_shell = false;
  std::uint64_t budget = ecm::kDefaultShellingBudget;
  auto* shelling = app.add_subcommand("shelling", "search for a shelling of the order complex");
  add_common(shelling, shl);
  shelling->add_flag("--edgewise", edgewise_shell, "check every closed interval is shellable after removal");
  shelling->add_option("--budget", budget, "backtracking node budget")->capture_default_str();

  Common dot;
  std::string dot_out;
  auto* export_dot = app.add_subcommand("export-dot", "write the Hasse diagram as DOT");
  add_common(export_dot, dot);
  export_dot->add_option("-o,--output", dot_out, "output file (default: stdout)");

  std::string question = "mobius_nowhere_zero", search_out = "findings", search_field = "q";
  int trials = 100, max_elements = 8;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::vector<std::string> families;
  auto* search = app.add_subcommand("search", "randomised sweep for the open questions");
  search->add_option("--question", question, "geometric_strongECM or mobius_nowhere_zero")->capture_default_str();
  search->add_option("--trials", trials, "number of random trials")->capture_default_str();
  search->add_option("--max-elements", max_elements, "largest random poset")->capture_default_str();
  search->add_option("--seed", seed, "64-bit seed")->required();
  search->add_option("--family", families, "lattice families for geometric_strongECM (name or name:p1,p2)");
  search->add_option("--field", search_field, "coefficient field")->capture_default_str();
  search->add_option("--threads", threads, "worker threads (0 = all cores)");
  search->add_option("-o,--out", search_out, "findings directory")->capture_default_str();

  std::string cert_path;
  auto* replay = app.add_subcommand("replay", "replay a certificate written by search");
  replay->add_option("certificate", cert_path, "certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitMalformed;
  }

  try {
    if (*gen) {
      ecm::Poset p;
      std::string name = family;
      if (family == "face_lattice" || family == "complex_face_lattice") {
        std::vector<std::string> names;
        std::vector<ecm::Mask> facets;
        for (const auto& f : split(facets_spec, ';')) {
          ecm::Mask m = 0;
          for (const auto& v : split(f, ' ')) {
            auto it = std::find(names.begin(), names.end(), v);
            if (it == names.end()) {
              names.push_back(v);
              it = names.end() - 1;
            }
            m |= ecm::bit(static_cast<int>(it - names.begin()));
          }
          facets.push_back(m);
        }
        if (facets.empty()) throw ecm::Error(ecm::ErrorCode::BadParams, family + " needs --facets");
        p = family == "face_lattice" ? ecm::catalog::face_lattice(names, facets)
                                     : ecm::catalog::complex_face_lattice(names, facets);
      } else {
        p = ecm::catalog::generate(family, gen_params);
      }
      for (int v : gen_params) name += " " + std::to_string(v);
      if (gen_proper) {
        p = ecm::proper_part(p);
        name = "proper " + name;
      }
      write_out(gen_out, ecm::io::poset_to_json(p, name).dump(2) + "\n");
      return 0;
    }

    if (*check) {
      auto doc = ecm::io::parse_poset(read_all(chk.input));
      ecm::CmRoute route = route_name == "link"   ? ecm::CmRoute::link_condition
                           : route_name == "both" ? ecm::CmRoute::both
                           : route_name == "interval"
                               ? ecm::CmRoute::interval_condition
                               : throw ecm::Error(ecm::ErrorCode::BadParams, "unknown route '" + route_name + "'");
      ecm::CmAnalyzer an(parse_field(chk.field), route);
      json results = json::array();
      std::string text = "poset " + doc.name + " (" + std::to_string(doc.poset.size()) + " elements), field " +
                         an.field().name() + "\n";
      bool all_hold = true;
      for (const auto& prop : split(props, ',')) {
        auto t0 = std::chrono::steady_clock::now();
        ecm::CmVerdict v = check_property(prop, doc.poset, an);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all_hold = all_hold && v.holds;
        json r = ecm::io::verdict_to_json(v);
        if (timing) r["wall_seconds"] = secs;
        results.push_back(r);
        text += "  " + v.property + ": " + (v.holds ? "holds" : "fails") + "\n";
        if (v.witness) text += witness_text(*v.witness, 2);
      }
      if (chk.as_json) {
        json report{{"fingerprint", ecm::io::fingerprint(doc.poset)},
                    {"name", doc.name},
                    {"field", an.field().name()},
                    {"results", results}};
        std::cout << report.dump(2) << "\n";
      } else {
        std::cout << text;
      }
      return assert_props && !all_hold ? kExitFalse : 0;
    }

    if (*connectivity) {
      auto doc = ecm::io::parse_poset(read_all(conn.input));
      ecm::FieldSpec field = parse_field(conn.field);
      int k = ecm::edgewise_cm_connectivity(doc.poset, field);
      if (conn.as_json) {
        std::cout << json{{"fingerprint", ecm::io::fingerprint(doc.poset)}, {"field", field.name()}, {"connectivity", k}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << k << "\n";
      }
      return 0;
    }

    if (*homology) {
      auto doc = ecm::io::parse_poset(read_all(hom.input));
      ecm::FieldSpec field = parse_field(hom.field);
      ecm::SimplicialComplex c;
      if (open_interval.empty()) {
        c = ecm::order_complex(doc.poset);
      } else {
        ecm::Poset hat = ecm::add_bounds(doc.poset);
        ecm::Interval iv{hat.index_of(open_interval[0]), hat.index_of(open_interval[1]), ecm::IntervalKind::open};
        c = ecm::order_complex(ecm::interval(hat, iv));
      }
      ecm::BettiVector b = ecm::reduced_betti(c, field);
      if (hom.as_json) {
        std::cout << json{{"field", field.name()}, {"dim", c.dim()}, {"reduced_betti", b.values}}.dump(2) << "\n";
      } else {
        for (int i = -1; i <= b.top_dim(); ++i) std::cout << "b~" << i << " = " << b.at(i) << "\n";
      }
      return 0;
    }

    if (*shelling) {
      auto doc = ecm::io::parse_poset(read_all(shl.input));
      if (edgewise_shell) {
        ecm::CmVerdict v = ecm::is_edgewise_strongly_shellable(doc.poset, budget);
        if (shl.as_json) {
          std::cout << ecm::io::verdict_to_json(v).dump(2) << "\n";
        } else {
          std::cout << v.property << ": " << (v.holds ? "holds" : "fails") << "\n";
          if (v.witness) std::cout << witness_text(*v.witness);
        }
        return 0;
      }
      ecm::SimplicialComplex c = ecm::order_complex(doc.poset);
      ecm::ShellingResult r = ecm::is_shellable(c, budget);
      json order = json::array();
      if (r.order)
        for (std::size_t i : *r.order) order.push_back(c.face_name(c.facets()[i]));
      if (shl.as_json) {
        std::cout << json{{"shellable", r.shellable}, {"order", order}, {"nodes", r.nodes}}.dump(2) << "\n";
      } else {
        std::cout << (r.shellable ? "shellable" : "not shellable") << "\n";
        for (const auto& f : order) std::cout << "  " << f.get<std::string>() << "\n";
      }
      return 0;
    }

    if (*export_dot) {
      auto doc = ecm::io::parse_poset(read_all(dot.input));
      write_out(dot_out, ecm::io::to_dot(doc.poset, doc.name));
      return 0;
    }

    if (*search) {
      ecm::search::Options opt;
      opt.question = ecm::search::parse_question(question);
      opt.trials = trials;
      opt.max_elements = max_elements;
      opt.seed = seed;
      opt.field = parse_field(search_field);
      opt.families = families;
      opt.threads = threads;
      opt.argv.assign(argv, argv + argc);
      ecm::search::Summary s = ecm::search::run(opt);
      ecm::search::write(s, search_out);
      std::cout << s.manifest["conclusion"].get<std::string>() << "\n";
      return 0;
    }

    if (*replay) {
      json cert;
      try {
        cert = json::parse(read_all(cert_path));
      } catch (const json::parse_error& e) {
        throw ecm::Error(ecm::ErrorCode::BadInput, e.what());
      }
      bool reproduced = ecm::search::replay_certificate(cert);
      std::cout << (reproduced ? "reproduced" : "not reproduced") << "\n";
      return reproduced ? 0 : kExitFalse;
    }
  } catch (const ecm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return 0;
}
