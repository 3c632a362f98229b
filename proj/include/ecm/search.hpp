#pragma once

#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ecm/catalog.hpp"
#include "ecm/cm.hpp"
#include "ecm/io.hpp"
#include "ecm/lattice.hpp"
#include "ecm/random.hpp"

namespace ecm::search {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Question { geometric_strong_ecm, mobius_nowhere_zero };

inline const char* to_string(Question q) {
  return q == Question::geometric_strong_ecm ? "geometric_strongECM" : "mobius_nowhere_zero";
}

inline Question parse_question(const std::string& s) {
  if (s == "geometric_strongECM") return Question::geometric_strong_ecm;
  if (s == "mobius_nowhere_zero") return Question::mobius_nowhere_zero;
  throw Error(ErrorCode::BadParams, "unknown question '" + s + "'");
}

struct Options {
  Question question = Question::mobius_nowhere_zero;
  int trials = 100;
  int max_elements = 8;
  std::uint64_t seed = 0;
  FieldSpec field = FieldSpec::rationals();
  /// Lattice families for geometric_strongECM, as "name" or "name:p1,p2".
  std::vector<std::string> families;
  std::vector<std::string> argv;
  unsigned threads = 0;
};

struct Summary {
  io::json manifest;
  std::vector<io::json> certificates;
  int violations() const { return static_cast<int>(certificates.size()); }
};

inline std::vector<std::string> default_geometric_families() {
  return {"boolean:2",          "boolean:3",          "boolean:4",          "partition:3",
          "partition:4",        "uniform_matroid:2,3", "uniform_matroid:2,4", "uniform_matroid:2,5",
          "uniform_matroid:3,4", "uniform_matroid:3,5"};
}

inline std::pair<std::string, std::vector<int>> parse_family(const std::string& spec) {
  auto colon = spec.find(':');
  std::pair<std::string, std::vector<int>> out{spec.substr(0, colon), {}};
  if (colon == std::string::npos) return out;
  std::stringstream ss(spec.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.second.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParams, "bad family parameter '" + item + "' in '" + spec + "'");
    }
  }
  return out;
}

/// Runs f(i) for i in [0, count) on a small pool; results land by index.
template <typename F>
void parallel_for(int count, unsigned threads, F&& f) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(count, 1)));
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

inline std::string certificate_name(std::size_t i) {
  std::string n = std::to_string(i);
  return "certificate_" + std::string(n.size() < 4 ? 4 - n.size() : 0, '0') + n + ".json";
}

namespace detail {

struct MobiusTrial {
  GradedSample sample;
  bool edgewise2 = false;
  std::optional<bool> nowhere_zero;
  std::optional<std::pair<std::string, std::string>> zero_pair;
};

inline MobiusTrial mobius_trial(std::uint64_t seed, int index, int max_elements, CmAnalyzer& an) {
  CounterRng rng(seed, static_cast<std::uint64_t>(index));
  // Dense covers make edgewise 2-CM samples far more common.
  const double p = 0.6 + 0.35 * rng.unit();
  MobiusTrial t{random_graded_poset(rng, max_elements, p), false, std::nullopt, std::nullopt};
  t.edgewise2 = an.is_edgewise_k_cm(t.sample.poset, EdgewiseLevel::of(2)).holds;
  if (t.edgewise2) {
    Poset hat = add_bounds(t.sample.poset);
    MobiusResult mu = mobius_function(hat);
    t.nowhere_zero = mu.nowhere_zero;
    if (mu.zero_at) t.zero_pair = std::make_pair(hat.label(mu.zero_at->first), hat.label(mu.zero_at->second));
  }
  return t;
}

inline FieldSpec parse_field_name(const std::string& name) {
  if (name == "Q") return FieldSpec::rationals();
  if (name.rfind("GF(", 0) == 0 && name.back() == ')') {
    return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(name.substr(3, name.size() - 4))));
  }
  throw Error(ErrorCode::BadInput, "unknown field '" + name + "'");
}

}  // namespace detail

/// Randomised / catalog sweep for the two open questions. Absence of
/// violations is only reported as "none found", never as a proof.
inline Summary run(const Options& opt) {
  Summary s;
  CmAnalyzer an(opt.field);
  io::json records = io::json::array();
  io::json counts;

  if (opt.question == Question::mobius_nowhere_zero) {
    if (opt.max_elements < 2 || opt.max_elements > 12) {
      throw Error(ErrorCode::BadParams, "mobius_nowhere_zero needs 2 <= max_elements <= 12");
    }
    std::vector<detail::MobiusTrial> trials(static_cast<std::size_t>(std::max(opt.trials, 0)));
    parallel_for(opt.trials, opt.threads,
                 [&](int i) { trials[i] = detail::mobius_trial(opt.seed, i, opt.max_elements, an); });
    int filtered = 0;
    for (int i = 0; i < opt.trials; ++i) {
      const auto& t = trials[i];
      io::json r{{"trial", i},
                 {"fingerprint", io::fingerprint(t.sample.poset)},
                 {"level_sizes", t.sample.level_sizes},
                 {"cover_probability", t.sample.cover_probability},
                 {"attempts", t.sample.attempts},
                 {"edgewise_2cm", t.edgewise2}};
      r["mobius_nowhere_zero"] = t.nowhere_zero ? io::json(*t.nowhere_zero) : io::json(nullptr);
      records.push_back(r);
      if (t.edgewise2) ++filtered;
      if (t.nowhere_zero && !*t.nowhere_zero) {
        io::json cert{{"question", to_string(opt.question)},
                      {"seed", opt.seed},
                      {"trial", i},
                      {"max_elements", opt.max_elements},
                      {"field", opt.field.name()},
                      {"poset", io::poset_to_json(t.sample.poset, "trial_" + std::to_string(i))},
                      {"edgewise_2cm", true},
                      {"mobius_zero_pair", {t.zero_pair->first, t.zero_pair->second}}};
        s.certificates.push_back(std::move(cert));
      }
    }
    counts = {{"trials", opt.trials}, {"edgewise_2cm", filtered}, {"violations", s.violations()}};
  } else {
    std::vector<std::string> fams = opt.families.empty() ? default_geometric_families() : opt.families;
    std::vector<io::json> results(fams.size());
    std::vector<std::optional<io::json>> certs(fams.size());
    parallel_for(static_cast<int>(fams.size()), opt.threads, [&](int i) {
      auto [name, params] = parse_family(fams[i]);
      Poset lattice = catalog::generate(name, params);
      LatticeClasses cls = lattice_classes(lattice);
      Poset proper = proper_part(lattice);
      CmVerdict v = an.is_edgewise_k_cm(proper, EdgewiseLevel::strong());
      results[i] = io::json{{"family", fams[i]}, {"fingerprint", io::fingerprint(lattice)},
                            {"geometric", cls.geometric}, {"strong_ecm", v.holds}};
      if (!v.holds) {
        certs[i] = io::json{{"question", to_string(opt.question)},
                            {"family", fams[i]},
                            {"field", opt.field.name()},
                            {"geometric", cls.geometric},
                            {"poset", io::poset_to_json(proper, "proper " + fams[i])},
                            {"property", v.property},
                            {"witness", io::witness_to_json(*v.witness)}};
      }
    });
    int geometric = 0;
    for (std::size_t i = 0; i < fams.size(); ++i) {
      records.push_back(results[i]);
      if (results[i]["geometric"].get<bool>()) ++geometric;
      if (certs[i]) s.certificates.push_back(std::move(*certs[i]));
    }
    counts = {{"lattices", fams.size()}, {"geometric", geometric}, {"violations", s.violations()}};
  }

  const int checked = opt.question == Question::mobius_nowhere_zero ? opt.trials : static_cast<int>(records.size());
  s.manifest = io::json{{"tool", "ecm"},
                        {"version", kToolVersion},
                        {"argv", opt.argv},
                        {"question", to_string(opt.question)},
                        {"seed", opt.seed},
                        {"trials", opt.trials},
                        {"max_elements", opt.max_elements},
                        {"field", opt.field.name()},
                        {"counts", counts}};
  s.manifest["conclusion"] = s.certificates.empty()
                                 ? "no counterexample found in " + std::to_string(checked) + " trials"
                                 : std::to_string(s.violations()) + " violation(s) recorded";
  io::json names = io::json::array();
  for (std::size_t i = 0; i < s.certificates.size(); ++i) names.push_back(certificate_name(i));
  s.manifest["certificates"] = names;
  s.manifest["records"] = records;
  return s;
}

inline void write(const Summary& s, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "manifest.json") << s.manifest.dump(2) << "\n";
  for (std::size_t i = 0; i < s.certificates.size(); ++i)
    std::ofstream(dir / certificate_name(i)) << s.certificates[i].dump(2) << "\n";
}

/// Re-derives a certificate's verdict from the stored poset alone.
inline bool replay_certificate(const io::json& cert) {
  Poset p = io::poset_from_json(cert.at("poset")).poset;
  FieldSpec field = detail::parse_field_name(cert.at("field").get<std::string>());
  const Question q = parse_question(cert.at("question").get<std::string>());
  if (q == Question::mobius_nowhere_zero) {
    if (!CmAnalyzer(field).is_edgewise_k_cm(p, EdgewiseLevel::of(2)).holds) return false;
    Poset hat = add_bounds(p);
    auto pair = cert.at("mobius_zero_pair").get<std::vector<std::string>>();
    MobiusResult mu = mobius_function(hat);
    return pair.size() == 2 && mu.table.at(hat.index_of(pair[0]), hat.index_of(pair[1])) == 0;
  }
  Witness w = io::witness_from_json(cert.at("witness"));
  return replay_witness(p, w, field);
}

}  // namespace ecm::search
