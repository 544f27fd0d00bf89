#include <json.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

using Json = nlohmann::json;

struct Run {
  int code = 0;
  std::string output;
  Json report;
};

/// Every command is run once per thread count; criteria read the first run.
class Runner {
 public:
  const Run& get(const std::string& command) {
    auto it = runs_.find(command);
    if (it != runs_.end()) return it->second.front();
    std::vector<Run> runs;
    for (const char* threads : {"1", "4", "8"}) {
      std::vector<std::string> args{"--json", "--seed", "2024", "--threads", threads};
      std::istringstream words(command);
      std::string w;
      while (words >> w) args.push_back(w);
      std::ostringstream out, err;
      Run r;
      r.code = qstar::cli::run(args, out, err);
      r.output = out.str();
      try {
        r.report = Json::parse(r.output);
      } catch (const Json::exception&) {
        std::cerr << command << ": " << err.str();
      }
      runs.push_back(std::move(r));
    }
    return runs_.emplace(command, std::move(runs)).first->second.front();
  }

  /// Commands whose output differs between thread counts.
  std::vector<std::string> nondeterministic() const {
    std::vector<std::string> out;
    for (const auto& [command, runs] : runs_) {
      for (const auto& r : runs) {
        if (r.output != runs.front().output || r.code != runs.front().code) {
          out.push_back(command);
          break;
        }
      }
    }
    return out;
  }

  std::size_t size() const { return runs_.size(); }

 private:
  std::map<std::string, std::vector<Run>> runs_;
};

bool passed(const Run& r) { return r.code == 0 && r.report.value("passed", false); }

long binomial(int n, int k) {
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

struct Criterion {
  int number;
  std::string title;
  std::function<bool(Runner&, std::string&)> check;
};

}  // namespace

int main() {
  Runner runner;
  std::vector<Criterion> criteria;

  criteria.push_back({1, "initial ideal of J_n equals the Stanley-Reisner ideal, n = 5..8", [](Runner& r, std::string& note) {
                        bool ok = true;
                        for (int n = 5; n <= 8; ++n) {
                          const auto& run = r.get("groebner verify --n " + std::to_string(n));
                          const bool good = passed(run) && run.report["gb_holds"] == true && run.report["match"] == true;
                          if (!good) note += " n=" + std::to_string(n) + " failed;";
                          ok = ok && good;
                        }
                        for (int n = 5; n <= 6; ++n) {
                          const auto& run = r.get("groebner verify --complete-crosscheck --n " + std::to_string(n));
                          const bool good = passed(run) && run.report.value("completion_adds_nothing", false);
                          if (!good) note += " completion n=" + std::to_string(n) + " failed;";
                          ok = ok && good;
                        }
                        return ok;
                      }});

  criteria.push_back({2, "circular order picks x[i,k]x[j,l] for every Pfaffian, n = 4..10", [](Runner& r, std::string& note) {
                        bool ok = true;
                        std::size_t total = 0;
                        for (int n = 4; n <= 10; ++n) {
                          const auto& run = r.get("groebner circular --n " + std::to_string(n));
                          ok = ok && passed(run) && run.report["failures"] == 0 &&
                               run.report["quadruples"] == binomial(n, 4);
                          total += run.report.value("quadruples", std::size_t{0});
                        }
                        note = " " + std::to_string(total) + " quadruples";
                        return ok;
                      }});

  criteria.push_back({3, "degree formula = facet count = Hilbert degree, n = 5..9", [](Runner& r, std::string& note) {
                        const std::map<int, std::string> expected{{5, "12"}, {6, "33"}, {7, "98"}, {8, "306"}, {9, "990"}};
                        bool ok = true;
                        for (const auto& [n, value] : expected) {
                          const auto& run = r.get("degree --n " + std::to_string(n));
                          const bool good = passed(run) && run.report["formula_value"] == value &&
                                            std::to_string(run.report["facet_count"].get<long>()) == value &&
                                            run.report["standard_monomial_degree"] == value;
                          note += " " + value + (good ? "" : "(FAIL)");
                          ok = ok && good;
                        }
                        return ok;
                      }});

  criteria.push_back({4, "R_ijk, Euler and R^r syzygies vanish and lie in the trace module", [](Runner& r, std::string& note) {
                        bool ok = true;
                        for (int n = 5; n <= 7; ++n) {
                          const auto& run = r.get("syzygy verify --n " + std::to_string(n));
                          if (run.code == 2) return false;
                          std::map<std::string, Json> fam;
                          for (const auto& f : run.report["families"]) fam[f["family"]] = f;
                          bool good = fam["R_ijk"]["count"] == binomial(n, 3) && fam["euler"]["count"] == 1 &&
                                      fam["R^r"]["count"] == 5 * binomial(n, 5);
                          for (auto& [name, f] : fam) {
                            good = good && f["all_vanish"] == true;
                            if (n <= 6) good = good && f["all_members"] == true;
                          }
                          if (n <= 6) good = good && passed(run);
                          if (!good) note += " n=" + std::to_string(n) + " failed;";
                          ok = ok && good;
                        }
                        return ok;
                      }});

  criteria.push_back({5, "T1 slices: n = 5 degree (-2,1) is the alternating y class; n = 6 (3,3) and n = 7 (2,2) windows vanish (partial)",
                      [](Runner& r, std::string& note) {
                        const auto& five = r.get("t1 slice --n 5 --delta -2,1");
                        const bool a = passed(five) && five.report["t1_dim"] == 1 &&
                                       five.report["known_class"]["basis_proportional"] == true &&
                                       five.report["known_class"]["in_derivation_image"] == false;
                        auto zero_window = [&](const std::string& command) {
                          const auto& w = r.get(command);
                          bool good = passed(w) && w.report["total_t1_dim"] == 0 &&
                                      w.report.value("scope", "").rfind("partial", 0) == 0 && !w.report["slices"].empty();
                          for (const auto& s : w.report["slices"]) good = good && s["t1_dim"] == 0;
                          return good;
                        };
                        const bool b = zero_window("t1 window --n 6 --max 3,3");
                        const bool c = zero_window("t1 window --n 7 --max 2,2");
                        note = std::string(" n5 ") + (a ? "ok" : "FAIL") + ", n6 " + (b ? "ok" : "FAIL") + ", n7 " +
                               (c ? "ok" : "FAIL");
                        return a && b && c;
                      }});

  criteria.push_back({6, "normal-form lemma: 200 seeded trials at n = 6, 7, 8 and the worked example", [](Runner& r, std::string& note) {
                        bool ok = true;
                        for (int n = 6; n <= 8; ++n) {
                          const auto& run = r.get("lemma normalform --trials 200 --n " + std::to_string(n));
                          const bool good = passed(run) && run.report["failures"] == 0 && run.report["trials"] == 200 &&
                                            run.report["targeted"]["failures"] == 0 &&
                                            run.report["targeted"]["nontrivial"] == 200;
                          note += " n=" + std::to_string(n) + ": " + std::to_string(run.report.value("nontrivial", 0)) +
                                  "+" + std::to_string(run.report["targeted"].value("nontrivial", 0)) + " nontrivial";
                          ok = ok && good;
                          if (n == 6) ok = ok && run.report["worked_example"]["matches"] == true;
                        }
                        return ok;
                      }});

  criteria.push_back({7, "13-point lift: 33 unimodular lower facets, K_6 * Delta_0, reflexive projection", [](Runner& r, std::string&) {
                        const auto& run = r.get("hull example-6-7");
                        return passed(run) && run.report["lower_facet_count"] == 33 &&
                               run.report["triangulation"]["unimodular"] == true &&
                               run.report["isomorphic_to_k6_join_point"] == true && run.report["witness"].size() == 13 &&
                               run.report["projection"]["reflexive"] == true;
                      }});

  criteria.push_back({8, "J_n vanishes at 100 random bundle points, n = 4..7", [](Runner& r, std::string&) {
                        bool ok = true;
                        for (int n = 4; n <= 7; ++n) {
                          const auto& run = r.get("ideal vanish --trials 100 --n " + std::to_string(n));
                          ok = ok && passed(run) && run.report["failures"] == 0 && run.report["evaluations"] > 0;
                        }
                        return ok;
                      }});

  criteria.push_back({9, "byte-identical JSON for 1, 4 and 8 threads", [](Runner& r, std::string& note) {
                        for (const char* extra : {"complex build kn --n 6", "complex build assoc --n 7", "ideal emit jn --n 6",
                                                  "ideal emit i2n --n 6", "syzygy export --n 6", "t1 slice --n 6 --delta -1,1",
                                                  "hull example-6-7"}) {
                          r.get(extra);
                        }
                        const auto bad = r.nondeterministic();
                        note = " " + std::to_string(r.size()) + " commands";
                        for (const auto& c : bad) note += "; differs: " + c;
                        return bad.empty();
                      }});

  int failures = 0;
  for (const auto& c : criteria) {
    std::string note;
    const bool ok = c.check(runner, note);
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << (note.empty() ? "" : " (" + note.substr(1) + ")") << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
