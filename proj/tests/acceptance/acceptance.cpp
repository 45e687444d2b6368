// Acceptance checks. One line per criterion: "criterion N: PASS|FAIL ...".
// Usage: dmt_acceptance [--criterion N]   (all criteria when omitted)

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dmt/cancel.hpp"
#include "dmt/corpus.hpp"
#include "dmt/homology.hpp"
#include "dmt/io.hpp"
#include "dmt/morse.hpp"
#include "dmt/trajectory.hpp"
#include "oracles.hpp"

using namespace dmt;
using io::Json;

namespace {

using Clock = std::chrono::steady_clock;

// Budgets in seconds. Integer results are compared exactly; there is no numeric tolerance.
constexpr double kFixtureBudget = 1.0;
constexpr double kMatchingComplexBudget = 60.0;
constexpr double kCorpusBudget = 300.0;

constexpr std::size_t kCorpusSize = 200;
const CorpusParams kCorpus{kCorpusSize, 3, 12, 1};

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

IntegerMatrix load_matrix(const std::string& name) {
  return io::matrix_from_json(io::read_json_file(oracle::fixture(name)));
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

/// Entry-by-entry comparison; lists every differing row.
std::string diff(const IntegerMatrix& got, const IntegerMatrix& want) {
  if (got.row_labels() != want.row_labels() || got.col_labels() != want.col_labels()) {
    return "axes differ (" + std::to_string(got.num_rows()) + "x" + std::to_string(got.num_cols()) + " vs " +
           std::to_string(want.num_rows()) + "x" + std::to_string(want.num_cols()) + ")";
  }
  std::string out;
  std::size_t entries = 0;
  for (std::size_t i = 0; i < got.num_rows(); ++i) {
    std::string g, w;
    bool differs = false;
    for (std::size_t j = 0; j < got.num_cols(); ++j) {
      differs = differs || got.at(i, j) != want.at(i, j);
      entries += got.at(i, j) != want.at(i, j);
      g += (j ? "," : "") + got.at(i, j).get_str();
      w += (j ? "," : "") + want.at(i, j).get_str();
    }
    if (differs) out += "; row " + got.row_labels()[i] + " computed (" + g + ") reference (" + w + ")";
  }
  if (entries == 0) return "";
  return std::to_string(entries) + " entr" + (entries == 1 ? "y" : "ies") + " differ" + out;
}

Outcome fixture_stage(const std::vector<std::string>& pivots, const std::string& printed_name,
                      std::size_t rows, std::size_t cols) {
  const auto t0 = Clock::now();
  std::vector<std::string> args{"fixture-update", oracle::fixture("m7_boundary_v_transposed.json")};
  args.insert(args.end(), pivots.begin(), pivots.end());
  const auto r = run_cli(args);
  const double secs = seconds_since(t0);
  if (r.code != 0) return {false, "fixture-update exited " + std::to_string(r.code) + ": " + r.err};
  const auto got = io::matrix_from_json(Json::parse(r.out));
  const auto printed = load_matrix(printed_name);
  const std::string d = diff(got, printed);
  std::ostringstream detail;
  detail << got.num_rows() << "x" << got.num_cols() << " (expected " << rows << "x" << cols << "), "
         << secs << " s";
  if (!d.empty()) detail << "; " << d;
  return {d.empty() && got.num_rows() == rows && got.num_cols() == cols && secs < kFixtureBudget, detail.str()};
}

Outcome criterion1() { return fixture_stage({"sigma_3", "eta_8"}, "m7_boundary_w1_reference.json", 23, 3); }

Outcome criterion2() {
  return fixture_stage({"sigma_3", "eta_8", "sigma_4", "eta_18"}, "m7_boundary_w2_reference.json", 22, 2);
}

std::string torsion_text(const std::vector<Integer>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i].get_str();
  return s + "]";
}

Outcome criterion3() {
  const auto v = load_matrix("m7_boundary_v.json");
  const auto w1 = update_boundary_k(v, "sigma_3", "eta_8").matrix;
  const auto w2 = update_boundary_k(w1, "sigma_4", "eta_18").matrix;
  const IntegerMatrix d1(std::vector<std::string>{}, w2.row_labels());
  const auto h1 = homology_of_pair(w2, d1);
  bool pass = h1 == HomologyGroup{0, {3}};
  std::string detail = "H_1 = " + h1.to_string();
  for (const auto& [name, m] : {std::pair<std::string, const IntegerMatrix*>{"V", &v}, {"W1", &w1}, {"W2", &w2}}) {
    const auto t = homology_of_pair(*m, IntegerMatrix(std::vector<std::string>{}, m->row_labels())).torsion;
    pass = pass && t == std::vector<Integer>{3};
    detail += ", " + name + " torsion " + torsion_text(t);
  }
  // Reference intermediate matrices, for the record.
  for (const auto& name : {"m7_boundary_w1_reference.json", "m7_boundary_w2_reference.json"}) {
    const auto printed = load_matrix(name).transpose();
    detail += std::string(", reference ") + name + " torsion " +
              torsion_text(homology_of_pair(printed, IntegerMatrix({}, printed.row_labels())).torsion);
  }
  return {pass, detail};
}

Outcome criterion4() {
  const auto t0 = Clock::now();
  const auto k7 = matching_complex(7);
  const auto h1 = simplicial_homology(k7, 1);
  const double secs = seconds_since(t0);
  bool has3 = false;
  for (const auto& t : h1.torsion) has3 = has3 || t % 3 == 0;
  std::ostringstream detail;
  detail << "f-vector (";
  for (std::size_t i = 0; i < k7.f_vector().size(); ++i) detail << (i ? "," : "") << k7.f_vector()[i];
  detail << "), H_1 = " << h1.to_string() << ", " << secs << " s";
  return {has3 && secs < kMatchingComplexBudget, detail.str()};
}

/// Per-instance results shared by the corpus criteria.
struct InstanceReport {
  std::size_t pairs = 0;
  std::size_t oracle_mismatches = 0;
  std::size_t chain_failures = 0;
  std::size_t identity_checks = 0;
  std::size_t identity_failures = 0;
  std::size_t transpose_failures = 0;
  std::size_t homology_failures = 0;
  bool gradient = true;
  std::string first_problem;
};

InstanceReport check_instance(const CorpusInstance& inst) {
  InstanceReport r;
  const Matching v(inst.complex, inst.field);
  r.gradient = v.is_gradient() && oracle::acyclic_by_kahn(inst.complex, inst.field);
  if (!r.gradient) return r;
  auto note = [&](const std::string& what) {
    if (r.first_problem.empty()) r.first_problem = "instance " + std::to_string(inst.id) + ": " + what;
  };

  const auto data = morse_complex(v, Execution::serial);
  if (!verify_chain_law(data).empty()) {
    ++r.chain_failures;
    note("chain law fails before cancelling");
  }
  for (int q = 0; q <= data.top(); ++q) {
    if (data.coboundary[q] != data.boundary[q].transpose()) {
      ++r.transpose_failures;
      note("coboundary is not the transpose in dimension " + std::to_string(q));
    }
  }
  for (int q = 0; q <= inst.complex.dim(); ++q) {
    if (morse_homology(v, q) != simplicial_homology(inst.complex, q)) {
      ++r.homology_failures;
      note("Morse homology differs in dimension " + std::to_string(q));
    }
  }

  for (int k = 1; k <= inst.complex.dim(); ++k) {
    for (const auto& pair : find_cancellable_pairs(v, k)) {
      ++r.pairs;
      const Matching w(inst.complex, cancel_pair(v, pair));
      const auto fast = fast_cancel(data, pair.sigma0.label(), pair.tau0.label(), k);
      const auto slow = morse_complex(w, Execution::serial);
      for (int q = k - 1; q <= k + 1; ++q) {
        if (fast.boundary[q] != slow.boundary[q] || fast.coboundary[q] != slow.coboundary[q]) {
          ++r.oracle_mismatches;
          note("fast update differs in dimension " + std::to_string(q) + " for (" + pair.sigma0.label() + ", " +
               pair.tau0.label() + ")");
        }
      }
      if (fast != slow) {
        ++r.oracle_mismatches;
        note("Morse data differ outside the updated dimensions");
      }
      if (!verify_chain_law(fast).empty() || !verify_chain_law(slow).empty()) {
        ++r.chain_failures;
        note("chain law fails after cancelling (" + pair.sigma0.label() + ", " + pair.tau0.label() + ")");
      }
      for (int q = 0; q <= slow.top(); ++q) {
        if (slow.coboundary[q] != slow.boundary[q].transpose()) ++r.transpose_failures;
      }
      for (const auto& sj : critical_simplices(w, k)) {
        ++r.identity_checks;
        const auto lhs = trajectory_aggregate(w, sj, pair.sigma0).weight_sum;
        const Integer rhs = -pair.weight * trajectory_aggregate(v, sj, pair.tau0).weight_sum;
        if (lhs != rhs) {
          ++r.identity_failures;
          note("W-sum " + sj.label() + " -> " + pair.sigma0.label() + " is " + lhs.get_str() + ", expected " +
               rhs.get_str());
        }
      }
    }
  }
  return r;
}

struct CorpusSummary {
  std::vector<InstanceReport> reports;
  double seconds = 0;
};

const CorpusSummary& corpus_summary() {
  static const CorpusSummary summary = [] {
    CorpusSummary s;
    const auto t0 = Clock::now();
    s.reports.resize(kCorpus.count);
    const long n = static_cast<long>(kCorpus.count);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      s.reports[i] = check_instance(generate_instance(kCorpus, static_cast<std::size_t>(i)));
    }
    s.seconds = seconds_since(t0);
    return s;
  }();
  return summary;
}

template <class F>
Outcome corpus_criterion(F&& failures_of, const std::string& what) {
  const auto& s = corpus_summary();
  std::size_t failures = 0, pairs = 0;
  std::string first;
  for (const auto& r : s.reports) {
    const std::size_t f = failures_of(r);
    failures += f;
    pairs += r.pairs;
    if (f && first.empty()) first = r.first_problem;
  }
  std::ostringstream detail;
  detail << s.reports.size() << " instances, " << pairs << " cancellable pairs, " << failures << " " << what
         << ", " << s.seconds << " s";
  if (!first.empty()) detail << "; first: " << first;
  return {failures == 0 && s.reports.size() >= kCorpusSize && s.seconds < kCorpusBudget, detail.str()};
}

Outcome criterion5() {
  return corpus_criterion([](const InstanceReport& r) { return r.oracle_mismatches + !r.gradient; },
                          "fast/oracle mismatches");
}

Outcome criterion6() {
  return corpus_criterion([](const InstanceReport& r) { return r.chain_failures + !r.gradient; },
                          "chain-law failures");
}

Outcome criterion7() {
  std::size_t checks = 0;
  for (const auto& r : corpus_summary().reports) checks += r.identity_checks;
  auto o = corpus_criterion([](const InstanceReport& r) { return r.identity_failures + !r.gradient; },
                            "identity failures");
  o.detail = std::to_string(checks) + " identity checks, " + o.detail;
  return o;
}

Outcome criterion8() {
  return corpus_criterion(
      [](const InstanceReport& r) { return r.transpose_failures + r.homology_failures + !r.gradient; },
      "transpose or homology mismatches");
}

Outcome criterion9() {
  const auto r = run_cli({"check", "--complex", oracle::fixture("triangle_boundary.json"), "--matching",
                          oracle::fixture("triangle_cycle_matching.json")});
  const auto pos = r.err.find("closed trajectory: ");
  const bool rejected = r.code == 1 && pos != std::string::npos;
  std::string witness = rejected ? r.err.substr(pos + 19) : "";
  while (!witness.empty() && witness.back() == '\n') witness.pop_back();
  if (rejected) std::cout << "  witness: " << witness << "\n";

  std::size_t passed = 0;
  const auto corpus = generate_corpus(kCorpus);
  for (const auto& inst : corpus) {
    passed += is_gradient(inst.complex, inst.field).gradient && oracle::acyclic_by_kahn(inst.complex, inst.field);
  }
  std::ostringstream detail;
  detail << "3-cycle " << (rejected ? "rejected" : "NOT rejected") << " (exit " << r.code << "); " << passed << "/"
         << corpus.size() << " greedy matchings gradient";
  return {rejected && passed == corpus.size(), detail.str()};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list = {
      {"first cancellation reproduces the reference 23x3 matrix", criterion1},
      {"second cancellation reproduces the reference 22x2 matrix", criterion2},
      {"reproduced matrices give H_1 = Z_3 at every stage", criterion3},
      {"matching complex of K_7 has 3-torsion in H_1", criterion4},
      {"fast updates equal re-enumeration on the corpus", criterion5},
      {"chain laws before and after cancelling", criterion6},
      {"W-trajectories into sigma0 match -w(P0) times V-trajectories into tau0", criterion7},
      {"coboundary transpose duality and Morse = simplicial homology", criterion8},
      {"cyclic matching rejected with witness; greedy matchings gradient", criterion9},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: dmt_acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria().size())) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  bool all = true;
  for (std::size_t n = 1; n <= criteria().size(); ++n) {
    if (only && static_cast<int>(n) != only) continue;
    Outcome o;
    try {
      o = criteria()[n - 1].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria()[n - 1].first << "  ["
              << o.detail << "]" << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
