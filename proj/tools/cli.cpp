#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "dmt/cancel.hpp"
#include "dmt/corpus.hpp"
#include "dmt/error.hpp"
#include "dmt/homology.hpp"
#include "dmt/io.hpp"
#include "dmt/morse.hpp"
#include "dmt/trajectory.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dmt::cli {

namespace {

using io::Json;

/// Thrown when a command finishes with a domain failure whose report has
/// already been written.
struct DomainExit {};

struct Options {
  std::string complex_path;
  std::string matching_path;
  std::optional<int> dim;
  std::string pair;
  bool auto_cancel = false;
  bool fast = false;
  bool oracle = false;
  bool both = false;
  bool trace = false;
  std::uint64_t seed = 1;
  std::size_t count = 200;
  int max_dim = 3;
  int max_vertices = 12;
  int workers = 0;
  std::optional<int> matching_complex_n;
  std::string out_path;
  std::string matrix_path;
  std::vector<std::string> pivots;
  std::vector<std::string> pivot_json;
};

void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out_path.empty()) {
    out << text;
  } else {
    io::write_text_file(opt.out_path, text);
  }
}

void emit_json(const Options& opt, std::ostream& out, const Json& j) { emit(opt, out, j.dump(2) + "\n"); }

SimplicialComplex load_complex(const Options& opt) {
  if (opt.matching_complex_n) return matching_complex(*opt.matching_complex_n);
  if (opt.complex_path.empty()) throw ParseError("--complex is required");
  return io::complex_from_json(io::read_json_file(opt.complex_path));
}

DiscreteVectorField load_field(const Options& opt) {
  if (opt.matching_path.empty()) return {};
  return io::field_from_json(io::read_json_file(opt.matching_path));
}

Json read_inline_or_file(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("bad inline JSON: ") + e.what());
    }
  }
  return io::read_json_file(text);
}

Json critical_counts(const Matching& m) {
  Json counts = Json::array();
  for (int q = 0; q <= m.complex().dim(); ++q) counts.push_back(m.critical_indices(q).size());
  return counts;
}

Json morse_json(const MorseComplexData& data, std::optional<int> only) {
  Json dims = Json::array();
  for (int q = 0; q <= data.top(); ++q) {
    if (only && *only != q) continue;
    dims.push_back({{"q", q},
                    {"boundary", io::matrix_to_json(data.boundary[q])},
                    {"coboundary", io::matrix_to_json(data.coboundary[q])},
                    {"transpose_ok", data.coboundary[q] == data.boundary[q].transpose()}});
  }
  return dims;
}

void require_gradient(const Matching& m, std::ostream& err) {
  if (!m.is_gradient()) {
    err << "not a gradient vector field; closed trajectory: " << m.closed_trajectory()->to_string()
        << "\n";
    throw DomainExit{};
  }
}

int cmd_check(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto complex = load_complex(opt);
  const auto field = load_field(opt);
  Json report;
  const auto validation = validate_dvf(complex, field);
  report["valid"] = validation.ok();
  Json violations = Json::array();
  for (const auto& v : validation.violations) violations.push_back(v.message);
  report["violations"] = violations;
  if (!validation.ok()) {
    report["gradient"] = false;
    emit_json(opt, out, report);
    for (const auto& v : validation.violations) err << "violation: " << v.message << "\n";
    return domain_failure;
  }
  Matching m(complex, field);
  report["gradient"] = m.is_gradient();
  report["critical"] = critical_counts(m);
  if (!m.is_gradient()) {
    report["witness"] = io::trajectory_to_json(*m.closed_trajectory());
    emit_json(opt, out, report);
    err << "closed trajectory: " << m.closed_trajectory()->to_string() << "\n";
    return domain_failure;
  }
  emit_json(opt, out, report);
  return ok;
}

int cmd_morse(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto complex = load_complex(opt);
  Matching m(complex, load_field(opt));
  require_gradient(m, err);
  Json result;
  result["critical"] = critical_counts(m);
  if (opt.dim && (*opt.dim < 0 || *opt.dim > complex.dim() + 1)) {
    const int q = *opt.dim;
    result["dims"] = Json::array({{{"q", q},
                                   {"boundary", io::matrix_to_json(morse_boundary_matrix(m, q))},
                                   {"coboundary", io::matrix_to_json(morse_coboundary_matrix(m, q))},
                                   {"transpose_ok", true}}});
  } else {
    const auto data = morse_complex(m);
    result["dims"] = morse_json(data, opt.dim);
    if (!verify_chain_law(data).empty()) {
      emit_json(opt, out, result);
      err << "chain law violated\n";
      return domain_failure;
    }
  }
  emit_json(opt, out, result);
  return ok;
}

int cmd_cancel(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto complex = load_complex(opt);
  DiscreteVectorField field = load_field(opt);
  const bool use_fast = opt.fast || opt.both || !opt.oracle;
  if (!opt.auto_cancel && opt.pair.empty()) throw ParseError("cancel needs --pair or --auto");

  std::optional<MorseComplexData> fast_data;
  {
    Matching m(complex, field);
    require_gradient(m, err);
    if (use_fast) fast_data = morse_complex(m);
  }

  Json cancelled = Json::array();
  auto cancel_one = [&](const Matching& m, const CancellablePair& pair) {
    field = cancel_pair(m, pair);
    cancelled.push_back({{"sigma0", pair.sigma0.vertices()},
                         {"tau0", pair.tau0.vertices()},
                         {"trajectory", io::trajectory_to_json(pair.trajectory)}});
    if (use_fast) {
      fast_data = fast_cancel(*fast_data, pair.sigma0.label(), pair.tau0.label(), pair.k());
    }
    if (opt.both) {
      Matching w(complex, field);
      if (morse_complex(w) != *fast_data) {
        err << "fast update disagrees with re-enumeration after cancelling ("
            << pair.sigma0.label() << ", " << pair.tau0.label() << ")\n";
        throw DomainExit{};
      }
    }
  };

  if (opt.auto_cancel) {
    for (bool progress = true; progress;) {
      progress = false;
      Matching m(complex, field);
      for (int k = 1; k <= complex.dim() && !progress; ++k) {
        auto pairs = find_cancellable_pairs(m, k);
        if (pairs.empty()) continue;
        cancel_one(m, pairs.front());
        progress = true;
      }
    }
  } else {
    const auto spec = io::simplex_pair_from_json(read_inline_or_file(opt.pair));
    Matching m(complex, field);
    cancel_one(m, make_cancellable_pair(m, spec.sigma0, spec.tau0));
  }

  Matching result_field(complex, field);
  Json result;
  result["matching"] = io::field_to_json(field);
  result["cancelled"] = cancelled;
  result["critical"] = critical_counts(result_field);
  result["morse"] = morse_json(use_fast ? *fast_data : morse_complex(result_field), opt.dim);
  emit_json(opt, out, result);
  return ok;
}

int cmd_fixture_update(const Options& opt, std::ostream& out, std::ostream& err) {
  IntegerMatrix m = io::matrix_from_json(io::read_json_file(opt.matrix_path));
  std::vector<io::LabelPairSpec> pivots;
  if (opt.pivots.size() % 2 != 0) throw ParseError("pivots come in (row0, col0) pairs");
  for (std::size_t i = 0; i < opt.pivots.size(); i += 2) {
    pivots.push_back({opt.pivots[i], opt.pivots[i + 1]});
  }
  for (const auto& text : opt.pivot_json) {
    pivots.push_back(io::label_pair_from_json(read_inline_or_file(text)));
  }
  if (pivots.empty()) throw ParseError("fixture-update needs at least one pivot");

  Json steps = Json::array();
  for (const auto& p : pivots) {
    MatrixUpdate update;
    if (m.find_row(p.row0) && m.find_col(p.col0)) {
      update = update_boundary_k(m, p.row0, p.col0);
    } else if (m.find_col(p.row0) && m.find_row(p.col0)) {
      // Transposed (coboundary) layout: k-cells index the rows.
      update = update_coboundary_k(m, p.col0, p.row0);
    } else {
      err << "pivot (" << p.row0 << ", " << p.col0 << ") does not index the matrix\n";
      throw DomainExit{};
    }
    Json ops = Json::array();
    std::istringstream lines(update.trace.to_string());
    for (std::string line; std::getline(lines, line);) ops.push_back(line);
    steps.push_back({{"row0", p.row0}, {"col0", p.col0}, {"trace", ops}});
    m = std::move(update.matrix);
  }
  if (opt.trace) {
    emit_json(opt, out, {{"matrix", io::matrix_to_json(m)}, {"steps", steps}});
  } else {
    emit_json(opt, out, io::matrix_to_json(m));
  }
  return ok;
}

int cmd_homology(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto complex = load_complex(opt);
  Json result;
  Json simplicial = Json::array();
  std::vector<HomologyGroup> groups;
  for (int q = 0; q <= complex.dim(); ++q) {
    groups.push_back(simplicial_homology(complex, q));
    simplicial.push_back(io::homology_to_json(q, groups.back()));
  }
  result["simplicial"] = simplicial;
  bool mismatch = false;
  if (!opt.matching_path.empty()) {
    Matching m(complex, load_field(opt));
    require_gradient(m, err);
    Json morse = Json::array();
    for (int q = 0; q <= complex.dim(); ++q) {
      const auto h = morse_homology(m, q);
      morse.push_back(io::homology_to_json(q, h));
      if (h != groups[q]) {
        err << "Morse homology " << h.to_string() << " != simplicial " << groups[q].to_string()
            << " in dimension " << q << "\n";
        mismatch = true;
      }
    }
    result["morse"] = morse;
  }
  emit_json(opt, out, result);
  return mismatch ? domain_failure : ok;
}

CorpusParams corpus_params(const Options& opt) {
  return {opt.count, opt.max_dim, opt.max_vertices, opt.seed};
}

void set_workers(int workers) {
#ifdef _OPENMP
  if (workers > 0) omp_set_num_threads(workers);
#else
  (void)workers;
#endif
}

int cmd_gen(const Options& opt, std::ostream& out, std::ostream&) {
  if (opt.matching_complex_n) {
    emit_json(opt, out, io::complex_to_json(matching_complex(*opt.matching_complex_n)));
    return ok;
  }
  Json instances = Json::array();
  for (const auto& inst : generate_corpus(corpus_params(opt))) {
    Json j = io::complex_to_json(inst.complex);
    j["id"] = inst.id;
    j["pairs"] = io::field_to_json(inst.field)["pairs"];
    instances.push_back(std::move(j));
  }
  emit_json(opt, out, {{"seed", opt.seed}, {"instances", instances}});
  return ok;
}

struct BenchRow {
  std::size_t instance;
  int k;
  std::size_t n_crit_k;
  std::size_t n_crit_km1;
  std::string traj_count;
  long long fast_ns;
  long long oracle_ns;
  bool equal;
};

std::vector<BenchRow> bench_instance(const CorpusInstance& inst) {
  using Clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  Matching v(inst.complex, inst.field);
  const auto data = morse_complex(v, Execution::serial);
  for (int k = 1; k <= inst.complex.dim(); ++k) {
    const auto crit_k = v.critical_indices(k);
    const auto crit_km1 = v.critical_indices(k - 1);
    Integer paths = 0;
    for (std::size_t s : crit_k) {
      const auto sums = trajectory_sums(v, k, s);
      for (std::size_t t : crit_km1) paths += sums.lower(t).path_count;
    }
    for (const auto& pair : find_cancellable_pairs(v, k)) {
      const auto t0 = Clock::now();
      const auto fast = fast_cancel(data, pair.sigma0.label(), pair.tau0.label(), k);
      const auto t1 = Clock::now();
      Matching w(inst.complex, cancel_pair(v, pair));
      const auto oracle = morse_complex(w, Execution::serial);
      const auto t2 = Clock::now();
      rows.push_back({inst.id, k, crit_k.size(), crit_km1.size(), paths.get_str(),
                      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count(),
                      std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count(),
                      fast == oracle});
    }
  }
  return rows;
}

int cmd_bench(const Options& opt, std::ostream& out, std::ostream& err) {
  set_workers(opt.workers);
  const auto params = corpus_params(opt);
  std::vector<std::vector<BenchRow>> per_instance(params.count);
  const auto n = static_cast<long>(params.count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    per_instance[i] = bench_instance(generate_instance(params, static_cast<std::size_t>(i)));
  }
  std::ostringstream csv;
  csv << "instance_id,dim_k,n_crit_k,n_crit_km1,traj_count,fast_ns,oracle_ns,equal\n";
  for (const auto& rows : per_instance) {
    for (const auto& r : rows) {
      if (!r.equal) {
        err << "fast update disagrees with re-enumeration on instance " << r.instance
            << " (k=" << r.k << ")\n";
        throw DomainExit{};
      }
      csv << r.instance << ',' << r.k << ',' << r.n_crit_k << ',' << r.n_crit_km1 << ','
          << r.traj_count << ',' << r.fast_ns << ',' << r.oracle_ns << ",1\n";
    }
  }
  emit(opt, out, csv.str());
  return ok;
}

void add_input_options(CLI::App* cmd, Options& opt, bool matching) {
  cmd->add_option("--complex", opt.complex_path, "complex JSON file {\"facets\": [...]}");
  cmd->add_option("--matching-complex", opt.matching_complex_n,
                  "use the matching complex of K_n instead of --complex");
  if (matching) cmd->add_option("--matching", opt.matching_path, "matching JSON file {\"pairs\": [...]}");
  cmd->add_option("--out", opt.out_path, "write the result here instead of stdout");
}

void add_corpus_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--seed", opt.seed, "corpus seed");
  cmd->add_option("--count", opt.count, "number of instances");
  cmd->add_option("--max-dim", opt.max_dim, "largest facet dimension");
  cmd->add_option("--max-vertices", opt.max_vertices, "largest vertex count");
  cmd->add_option("--workers", opt.workers, "OpenMP worker threads (0 = runtime default)");
  cmd->add_option("--out", opt.out_path, "write the result here instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete Morse theory on simplicial complexes", "dmt"};
  app.require_subcommand(1);
  Options opt;

  auto* check = app.add_subcommand("check", "validate a matching and test acyclicity");
  add_input_options(check, opt, true);

  auto* morse = app.add_subcommand("morse", "Morse boundary and coboundary matrices");
  add_input_options(morse, opt, true);
  morse->add_option("--dim", opt.dim, "only this dimension");

  auto* cancel = app.add_subcommand("cancel", "cancel critical pairs and update the matrices");
  add_input_options(cancel, opt, true);
  cancel->add_option("--dim", opt.dim, "only report this dimension");
  cancel->add_option("--pair", opt.pair, "pair JSON {\"sigma0\": [...], \"tau0\": [...]} or a file");
  cancel->add_flag("--auto", opt.auto_cancel, "cancel greedily until no cancellable pair remains");
  auto* fast = cancel->add_flag("--fast", opt.fast, "update matrices in closed form (default)");
  auto* oracle = cancel->add_flag("--oracle", opt.oracle, "recompute matrices by re-enumeration");
  auto* both = cancel->add_flag("--both", opt.both, "do both and fail on any difference");
  fast->excludes(oracle)->excludes(both);
  oracle->excludes(both);

  auto* fixture = app.add_subcommand("fixture-update", "apply cancellation updates to a labeled matrix");
  fixture->add_option("matrix", opt.matrix_path, "matrix JSON file")->required();
  fixture->add_option("pivots", opt.pivots, "row0 col0 [row1 col1 ...]");
  fixture->add_option("--pair", opt.pivot_json, "pivot JSON {\"row0\": ..., \"col0\": ...} or a file");
  fixture->add_flag("--trace", opt.trace, "include the row-operation trace");
  fixture->add_option("--out", opt.out_path, "write the result here instead of stdout");

  auto* homology = app.add_subcommand("homology", "simplicial and Morse homology");
  add_input_options(homology, opt, true);

  auto* gen = app.add_subcommand("gen", "generate a seeded corpus or a matching complex");
  add_corpus_options(gen, opt);
  gen->add_option("--matching-complex", opt.matching_complex_n, "emit the matching complex of K_n");

  auto* bench = app.add_subcommand("bench", "time closed-form updates against re-enumeration");
  add_corpus_options(bench, opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_failure;
  }

  try {
    if (check->parsed()) return cmd_check(opt, out, err);
    if (morse->parsed()) return cmd_morse(opt, out, err);
    if (cancel->parsed()) return cmd_cancel(opt, out, err);
    if (fixture->parsed()) return cmd_fixture_update(opt, out, err);
    if (homology->parsed()) return cmd_homology(opt, out, err);
    if (gen->parsed()) return cmd_gen(opt, out, err);
    if (bench->parsed()) return cmd_bench(opt, out, err);
  } catch (const DomainExit&) {
    return domain_failure;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return input_failure;
  } catch (const MalformedFacet& e) {
    err << "error: " << e.what() << "\n";
    return input_failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return domain_failure;
  }
  return input_failure;
}

}  // namespace dmt::cli
