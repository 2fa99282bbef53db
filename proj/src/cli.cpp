#include "spinnet/cli.hpp"

#include <atomic>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "spinnet/bell.hpp"
#include "spinnet/catalog.hpp"
#include "spinnet/graph.hpp"
#include "spinnet/heisenberg.hpp"
#include "spinnet/io.hpp"
#include "spinnet/scheme.hpp"
#include "spinnet/spectral.hpp"

namespace spinnet {
namespace cli {

namespace {

struct Options {
  std::string catalog;
  std::string edges;
  std::string coeffs;
  int origin = 0;
  int stratum = -1;  // -1 means the last stratum
  double xi0 = 0.0;
  std::string windings_csv;
  double tstar = 1.0;
  double tmax = -1.0;
  bool tmax_set = false;  // defaults to tstar when the flag is absent
  int samples = 101;
  std::string out_path;
  double tol = 1e-8;
  int jobs = 1;
  std::string catalog_action;
  std::string catalog_name;
};

struct Input {
  std::string name;
  std::optional<Graph> graph;
  std::optional<SzegoJacobi> coeffs;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::Limit:
      return 2;
    case ErrorKind::Disconnected:
    case ErrorKind::NotIsg:
    case ErrorKind::NotScheme:
      return 3;
    case ErrorKind::Infeasible:
      return 4;
    case ErrorKind::Numeric:
      return 5;
  }
  return 1;
}

Input load_input(const Options& o) {
  const int given = !o.catalog.empty() + !o.edges.empty() + !o.coeffs.empty();
  if (given != 1)
    throw Error(ErrorKind::InvalidInput,
                "give exactly one of --catalog, --edges, --coeffs");
  Input in;
  if (!o.catalog.empty()) {
    in.name = o.catalog;
    auto resolved = catalog::resolve(o.catalog);
    if (std::holds_alternative<Graph>(resolved))
      in.graph = std::get<Graph>(std::move(resolved));
    else
      in.coeffs = std::get<SzegoJacobi>(std::move(resolved));
  } else if (!o.edges.empty()) {
    in.name = o.edges;
    in.graph = read_edge_list_file(o.edges);
  } else {
    in.name = o.coeffs;
    in.coeffs = read_coefficients_file(o.coeffs);
  }
  return in;
}

const Graph& require_graph(const Input& in, const char* op) {
  if (!in.graph)
    throw Error(ErrorKind::InvalidInput,
                std::string(op) + " needs a graph input; coefficient files only "
                                  "describe the spectral side");
  return *in.graph;
}

std::vector<int> parse_windings(const std::string& csv) {
  std::vector<int> out;
  if (csv.empty()) return out;
  std::istringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad winding entry '" + item + "'");
    }
  }
  return out;
}

int with_output(const Options& o, std::ostream& fallback,
                const std::function<void(std::ostream&)>& body) {
  if (o.out_path.empty()) {
    body(fallback);
    return 0;
  }
  std::ofstream f(o.out_path);
  if (!f)
    throw Error(ErrorKind::InvalidInput, "cannot open output file '" + o.out_path + "'");
  body(f);
  return 0;
}

void emit_vector(JsonWriter& w, const Eigen::VectorXd& v) {
  w.begin_array();
  for (int i = 0; i < v.size(); ++i) w.value(v[i]);
  w.end_array();
}

void emit_coefficients(JsonWriter& w, const SzegoJacobi& c) {
  w.begin_object();
  w.key("omega").begin_array();
  for (double v : c.omega) w.value(v);
  w.end_array();
  w.key("alpha").begin_array();
  for (double v : c.alpha) w.value(v);
  w.end_array();
  w.end_object();
}

// Coefficients for any input kind; graphs go through extraction.
SzegoJacobi input_coefficients(const Input& in, int origin) {
  if (in.coeffs) return *in.coeffs;
  return szego_jacobi(*in.graph, origin);
}

struct DesignContext {
  SzegoJacobi c;
  SpectralData sd;
  BellDesign design;
  std::optional<Stratification> strat;  // graphs only
};

DesignContext make_design(const Input& in, const Options& o) {
  DesignContext ctx;
  ctx.c = input_coefficients(in, o.origin);
  if (in.graph) ctx.strat = stratify(*in.graph, o.origin);
  ctx.sd = spectral_data(ctx.c);

  const int d = ctx.c.d();
  const int stratum = o.stratum < 0 ? d : o.stratum;
  if (stratum < 1 || stratum > d)
    throw Error(ErrorKind::InvalidInput,
                "target stratum must lie in [1, " + std::to_string(d) + "]");

  const auto rows = scan_feasible_rows(ctx.sd.pmat, o.tol);
  const FeasibleRow* hit = nullptr;
  std::string feasible_list;
  for (const auto& r : rows) {
    if (!feasible_list.empty()) feasible_list += ", ";
    feasible_list += std::to_string(r.stratum);
    if (r.stratum == stratum) hit = &r;
  }
  if (!hit)
    throw InfeasibleRow(
        "stratum " + std::to_string(stratum) +
        " fails the two-value condition (row values must take exactly two "
        "values with product -1); feasible strata: " +
        (feasible_list.empty() ? "none" : feasible_list));

  ctx.design =
      design_couplings(ctx.sd, *hit, o.xi0, parse_windings(o.windings_csv), o.tstar);
  return ctx;
}

void cmd_analyze(const Input& in, const Options& o, std::ostream& os) {
  JsonWriter w(os);
  w.begin_object();
  w.key("input").value(in.name);

  std::optional<SzegoJacobi> c;
  if (in.graph) {
    const Graph& g = *in.graph;
    w.key("origin").value(o.origin);
    const IsgVerdict verdict = isg_check(g, o.origin);
    w.key("isg").value(verdict.is_isg);
    if (!verdict.is_isg) {
      w.key("witness").begin_array();
      w.value(verdict.witness->first).value(verdict.witness->second);
      w.end_array();
      w.end_object();
      w.finish();
      return;
    }
    const Stratification strat = stratify(g, o.origin);
    w.key("antipodal").value(is_antipodal(strat));
    c = szego_jacobi(g, o.origin);
    w.key("reflective").value(is_reflective(*c));

    const SpectralData sd = spectral_data(*c);
    w.key("coefficients");
    emit_coefficients(w, *c);
    w.key("eigenvalues");
    emit_vector(w, sd.eigenvalues);
    w.key("weights");
    emit_vector(w, sd.weights);
    w.key("pmat").begin_array();
    for (int i = 0; i < sd.pmat.rows(); ++i) emit_vector(w, sd.pmat.row(i));
    w.end_array();

    const auto rows = scan_feasible_rows(sd.pmat, o.tol);
    w.key("feasible_strata").begin_array();
    for (const auto& r : rows) w.value(r.stratum);
    w.end_array();
    w.key("bounds").begin_object();
    for (const auto& r : rows)
      w.key(std::to_string(r.stratum))
          .value(entanglement_bound(strat.sizes[r.stratum]));
    w.end_object();
  } else {
    w.key("origin").null_value();
    w.key("isg").null_value();
    w.key("antipodal").null_value();
    c = *in.coeffs;
    w.key("reflective").value(is_reflective(*c));

    const SpectralData sd = spectral_data(*c);
    w.key("coefficients");
    emit_coefficients(w, *c);
    w.key("eigenvalues");
    emit_vector(w, sd.eigenvalues);
    w.key("weights");
    emit_vector(w, sd.weights);
    w.key("pmat").begin_array();
    for (int i = 0; i < sd.pmat.rows(); ++i) emit_vector(w, sd.pmat.row(i));
    w.end_array();

    const auto rows = scan_feasible_rows(sd.pmat, o.tol);
    w.key("feasible_strata").begin_array();
    for (const auto& r : rows) w.value(r.stratum);
    w.end_array();
    w.key("bounds").null_value();  // stratum sizes need a graph
  }
  w.end_object();
  w.finish();
}

void cmd_design(const Input& in, const Options& o, std::ostream& os) {
  const DesignContext ctx = make_design(in, o);
  JsonWriter w(os);
  w.begin_object();
  w.key("stratum").value(ctx.design.stratum);
  w.key("xi_delta").value(ctx.design.xi_delta);
  w.key("tau");
  emit_vector(w, ctx.design.tau);
  w.key("couplings");
  emit_vector(w, ctx.design.couplings);
  w.key("tstar").value(ctx.design.tstar);
  w.end_object();
  w.finish();
}

void cmd_evolve(const Input& in, const Options& o, std::ostream& os) {
  if (o.tmax_set && !(o.tmax > 0.0))
    throw Error(ErrorKind::InvalidInput, "--tmax must be positive");
  const DesignContext ctx = make_design(in, o);
  const double tmax = o.tmax_set ? o.tmax : ctx.design.tstar;
  std::optional<int> stratum_size;
  if (ctx.strat) stratum_size = ctx.strat->sizes[ctx.design.stratum];
  const AmplitudeTrajectory tr =
      sample_trajectory(ctx.sd, ctx.design, tmax, o.samples, stratum_size);

  const int m = static_cast<int>(ctx.sd.eigenvalues.size());
  os << "t";
  for (int i = 0; i < m; ++i) os << ",re_gamma_" << i << ",im_gamma_" << i;
  os << ",concurrence_0" << ctx.design.stratum << "\n";
  for (int s = 0; s < tr.times.size(); ++s) {
    os << format_number(tr.times[s]);
    for (int i = 0; i < m; ++i)
      os << ',' << format_number(tr.gamma[s][i].real()) << ','
         << format_number(tr.gamma[s][i].imag());
    os << ',' << format_number(tr.concurrence[s]) << "\n";
  }
}

void cmd_verify_scheme(const Input& in, const Options& o, std::ostream& os) {
  const Graph& g = require_graph(in, "scheme verification");
  const SchemeVerdict verdict = analyze_scheme(g);

  JsonWriter w(os);
  w.begin_object();
  w.key("input").value(in.name);
  w.key("is_scheme").value(verdict.is_scheme);
  if (!verdict.is_scheme) {
    const SchemeWitness& wit = *verdict.witness;
    w.key("witness").begin_object();
    w.key("pair_a").begin_array().value(wit.x).value(wit.y).end_array();
    w.key("pair_b").begin_array().value(wit.x2).value(wit.y2).end_array();
    w.key("distances").begin_array().value(wit.i).value(wit.j).end_array();
    w.key("counts").begin_array().value(wit.count_xy).value(wit.count_x2y2).end_array();
    w.end_object();
    w.end_object();
    w.finish();
    return;
  }

  const IntersectionNumbers& table = *verdict.table;
  w.key("d").value(table.d);
  w.key("intersection_numbers").begin_array();
  for (int k = 0; k <= table.d; ++k) {
    w.begin_array();
    for (int i = 0; i <= table.d; ++i) {
      w.begin_array();
      for (int j = 0; j <= table.d; ++j) w.value(table.p[k][i][j]);
      w.end_array();
    }
    w.end_array();
  }
  w.end_array();
  w.key("bose_mesner_residual").value(bose_mesner_residual(distance_matrices(g), table));
  w.key("szego_jacobi");
  emit_coefficients(w, scheme_szego_jacobi(table));
  w.end_object();
  w.finish();
  (void)o;
}

void cmd_heisenberg_check(const Input& in, const Options& o, std::ostream& os) {
  const Graph& g = require_graph(in, "the exchange-model check");
  const DesignContext ctx = make_design(in, o);

  const auto fits = sector_restriction_check(g);
  const Eigen::MatrixXd hfull =
      heisenberg_hamiltonian(g, ctx.design.couplings, ctx.design.tstar);
  const double mag = magnetization_commutator_residual(hfull, g.n);

  std::optional<double> deviation;
  if (g.n <= 12)
    deviation = full_vs_sector_evolution(g, ctx.design.couplings, ctx.design.tstar,
                                         ctx.design.tstar, o.origin);

  JsonWriter w(os);
  w.begin_object();
  w.key("input").value(in.name);
  w.key("n").value(g.n);
  w.key("per_class").begin_array();
  for (const auto& fit : fits) {
    w.begin_object();
    w.key("i").value(fit.cls);
    w.key("a").value(fit.slope);
    w.key("b").value(fit.shift);
    w.key("residual").value(fit.residual);
    w.end_object();
  }
  w.end_array();
  w.key("magnetization_residual").value(mag);
  if (deviation)
    w.key("evolution_deviation").value(*deviation);
  else
    w.key("evolution_deviation").null_value();
  w.end_object();
  w.finish();
}

std::string summarize_entry(const catalog::Entry& e) {
  auto resolved = catalog::resolve(e.name);
  SzegoJacobi c;
  const char* kind;
  if (std::holds_alternative<Graph>(resolved)) {
    c = szego_jacobi(std::get<Graph>(resolved), 0);
    kind = "graph";
  } else {
    c = std::get<SzegoJacobi>(std::move(resolved));
    kind = "coefficients";
  }
  std::string line = e.name;
  line += "  ";
  line += kind;
  line += "  d=" + std::to_string(c.d());
  line += "  omega=[";
  for (std::size_t i = 0; i < c.omega.size(); ++i)
    line += (i ? "," : "") + format_number(c.omega[i]);
  line += "]  alpha=[";
  for (std::size_t i = 0; i < c.alpha.size(); ++i)
    line += (i ? "," : "") + format_number(c.alpha[i]);
  line += "]";
  if (!e.note.empty()) line += "  # " + e.note;
  return line;
}

void cmd_catalog(const Options& o, std::ostream& os) {
  if (o.catalog_action == "list") {
    const auto all = catalog::entries();
    std::vector<std::string> lines(all.size());
    const int jobs = std::max(1, o.jobs);
    if (jobs == 1) {
      for (std::size_t i = 0; i < all.size(); ++i) lines[i] = summarize_entry(all[i]);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      const std::size_t workers =
          std::min<std::size_t>(jobs, all.size() ? all.size() : 1);
      for (std::size_t wk = 0; wk < workers; ++wk)
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < all.size(); i = next++)
            lines[i] = summarize_entry(all[i]);
        });
      for (auto& th : pool) th.join();
    }
    for (const auto& line : lines) os << line << "\n";
    return;
  }
  if (o.catalog_action == "emit") {
    if (o.catalog_name.empty())
      throw Error(ErrorKind::InvalidInput, "catalog emit needs an entry name");
    auto resolved = catalog::resolve(o.catalog_name);
    if (std::holds_alternative<Graph>(resolved))
      write_edge_list(os, std::get<Graph>(resolved));
    else
      write_coefficients(os, std::get<SzegoJacobi>(resolved));
    return;
  }
  throw Error(ErrorKind::InvalidInput,
              "catalog action must be 'list' or 'emit', got '" + o.catalog_action + "'");
}

void add_input_flags(CLI::App* sub, Options& o) {
  sub->add_option("--catalog", o.catalog, "catalog entry, e.g. cycle:6 or wells");
  sub->add_option("--edges", o.edges, "edge list file");
  sub->add_option("--coeffs", o.coeffs, "coefficient JSON file");
  sub->add_option("--origin", o.origin, "reference vertex for graph inputs");
  sub->add_option("--out", o.out_path, "write the report to this file");
  sub->add_option("--tol", o.tol, "feasibility clustering tolerance");
}

void add_design_flags(CLI::App* sub, Options& o) {
  sub->add_option("--stratum", o.stratum, "target stratum (default: the last)");
  sub->add_option("--xi0", o.xi0, "reference phase");
  sub->add_option("--windings", o.windings_csv,
                  "comma-separated integer turns, one per support point");
  sub->add_option("--tstar", o.tstar, "readout time");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bell pair engineering on stratified spin networks"};
  app.require_subcommand(1);

  CLI::App* analyze = app.add_subcommand(
      "analyze", "stratification, spectral data and feasible strata");
  add_input_flags(analyze, o);

  CLI::App* design =
      app.add_subcommand("design", "synthesize couplings for a Bell pair");
  add_input_flags(design, o);
  add_design_flags(design, o);

  CLI::App* evolve =
      app.add_subcommand("evolve", "sample the excitation trajectory as CSV");
  add_input_flags(evolve, o);
  add_design_flags(evolve, o);
  CLI::Option* tmax_opt =
      evolve->add_option("--tmax", o.tmax, "time horizon (default: tstar)");
  evolve->add_option("--samples", o.samples, "number of samples (>= 2)");

  CLI::App* scheme = app.add_subcommand(
      "verify-scheme", "distance-class product structure of a graph");
  add_input_flags(scheme, o);

  CLI::App* heis = app.add_subcommand(
      "heisenberg-check", "exchange realization against sector dynamics");
  add_input_flags(heis, o);
  add_design_flags(heis, o);

  CLI::App* cat = app.add_subcommand("catalog", "list or emit built-in networks");
  cat->add_option("action", o.catalog_action, "'list' or 'emit'")->required();
  cat->add_option("name", o.catalog_name, "entry to emit");
  cat->add_option("--out", o.out_path, "write to this file");
  cat->add_option("--jobs", o.jobs, "parallel workers for the listing");

  std::vector<std::string> argv_store = {"spinnet"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  o.tmax_set = tmax_opt->count() > 0;

  try {
    if (app.got_subcommand(analyze)) {
      const Input in = load_input(o);
      return with_output(o, out, [&](std::ostream& os) { cmd_analyze(in, o, os); });
    }
    if (app.got_subcommand(design)) {
      const Input in = load_input(o);
      return with_output(o, out, [&](std::ostream& os) { cmd_design(in, o, os); });
    }
    if (app.got_subcommand(evolve)) {
      const Input in = load_input(o);
      return with_output(o, out, [&](std::ostream& os) { cmd_evolve(in, o, os); });
    }
    if (app.got_subcommand(scheme)) {
      const Input in = load_input(o);
      return with_output(o, out,
                         [&](std::ostream& os) { cmd_verify_scheme(in, o, os); });
    }
    if (app.got_subcommand(heis)) {
      const Input in = load_input(o);
      return with_output(o, out,
                         [&](std::ostream& os) { cmd_heisenberg_check(in, o, os); });
    }
    if (app.got_subcommand(cat))
      return with_output(o, out, [&](std::ostream& os) { cmd_catalog(o, os); });
    throw Error(ErrorKind::InvalidInput, "no subcommand given");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cli
}  // namespace spinnet
