#include "dirichlet_rkhs/cli.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "dirichlet_rkhs/diagnostics.h"
#include "dirichlet_rkhs/embeddings.h"
#include "dirichlet_rkhs/errors.h"
#include "dirichlet_rkhs/gram.h"
#include "dirichlet_rkhs/interpolation.h"
#include "dirichlet_rkhs/json_io.h"
#include "dirichlet_rkhs/kernels.h"
#include "dirichlet_rkhs/parallel.h"
#include "dirichlet_rkhs/zeta.h"

namespace dirichlet_rkhs::cli {

namespace {

constexpr const char* kSubcommands[] = {"kernel", "gram",        "diagnose",  "interpolate",
                                       "blaschke", "asymptotics", "embedding", "probe"};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "json";
  double tol = 1e-10;
  long max_terms = 1000000;
  std::string space;
  std::optional<double> alpha;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void add_common(CLI::App* sub, Common& c, bool with_space, const std::string& default_space = "h") {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--tol", c.tol, "Absolute tolerance of series evaluation")->capture_default_str();
  sub->add_option("--max-terms", c.max_terms, "Cap on summation terms")->capture_default_str();
  if (with_space) {
    c.space = default_space;
    sub->add_option("--space", c.space, "Space tag")
        ->check(CLI::IsMember({"h", "h_alpha", "h2", "d_alpha"}))
        ->capture_default_str();
    sub->add_option("--alpha", c.alpha, "Weight parameter of h_alpha and d_alpha");
  }
}

EvalConfig config_of(const Common& c) {
  try {
    return EvalConfig(c.tol, c.max_terms, 8);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--tol/--max-terms: ") + e.what());
  }
}

SpaceId space_of(const Common& c) {
  try {
    return SpaceId::parse(c.space, c.alpha);
  } catch (const Error& e) {
    throw UsageError(std::string("--space/--alpha: ") + e.what());
  }
}

Complex complex_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_complex(text);
  } catch (const DomainError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string num(double x) { return format_number(x); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void emit(const Common& c, const Json& json, const Table& table, std::ostream& out) {
  if (c.format == "csv") {
    for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << table.header[i];
    out << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
      out << "\n";
    }
  } else {
    out << dump_json(json);
  }
}

PointSequence load_points(const std::string& path) { return points_from_json(read_json_file(path)); }

// kernel ---------------------------------------------------------------

struct KernelArgs {
  Common common;
  std::string w, s;
};

void run_kernel(const KernelArgs& a, std::ostream& out) {
  const SpaceId space = space_of(a.common);
  const EvalConfig cfg = config_of(a.common);
  const Complex wz = complex_flag("--w", a.w);
  const Complex sz = complex_flag("--s", a.s);
  const HalfPlanePoint w(wz.real(), wz.imag());
  const HalfPlanePoint s(sz.real(), sz.imag());
  const Complex value = kernel_value(space, w, s, cfg);
  Json json;
  json["space"] = space_to_json(space);
  json["w"] = complex_to_json(wz);
  json["s"] = complex_to_json(sz);
  json["value"] = complex_to_json(value);
  Table table{{"w_re", "w_im", "s_re", "s_im", "value_re", "value_im"}, {}};
  table.rows.push_back({num(wz.real()), num(wz.imag()), num(sz.real()), num(sz.imag()), num(value.real()),
                        num(value.imag())});
  emit(a.common, json, table, out);
}

// gram -----------------------------------------------------------------

struct PointsArgs {
  Common common;
  std::string points;
};

void run_gram(const PointsArgs& a, std::ostream& out) {
  const SpaceId space = space_of(a.common);
  const EvalConfig cfg = config_of(a.common);
  const PointSequence seq = load_points(a.points);
  const GramMatrix g = gram_matrix(space, seq, cfg);
  const Eigen::VectorXd eig = eigenvalues(g);
  Json matrix = Json::array();
  Table table{{"row", "col", "re", "im"}, {}};
  for (std::size_t i = 0; i < g.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.size(); ++j) {
      row.push_back(complex_to_json(g(i, j)));
      table.rows.push_back({std::to_string(i), std::to_string(j), num(g(i, j).real()), num(g(i, j).imag())});
    }
    matrix.push_back(row);
  }
  Json json;
  json["space"] = space_to_json(space);
  json["points"] = points_to_json(seq);
  json["matrix"] = matrix;
  json["eigenvalues"] = std::vector<double>(eig.data(), eig.data() + eig.size());
  json["lambda_min"] = eig.size() ? eig(0) : 0.0;
  json["boas"] = eig.size() ? std::sqrt(std::max(0.0, eig(0))) : 0.0;
  emit(a.common, json, table, out);
}

// diagnose -------------------------------------------------------------

struct DiagnoseArgs {
  Common common;
  std::string points;
  double delta_min = 0.1;
  double carleson_max = 10.0;
  std::optional<double> split;
  bool equivalence = false;
};

void run_diagnose(const DiagnoseArgs& a, std::ostream& out) {
  const SpaceId space = space_of(a.common);
  const EvalConfig cfg = config_of(a.common);
  if (!(a.delta_min > 0.0)) throw UsageError("--delta-min must be positive");
  if (!(a.carleson_max > 0.0)) throw UsageError("--carleson-max must be positive");
  if (a.split && !(*a.split > 0.0 && *a.split < 1.0)) throw UsageError("--split must lie in (0, 1)");
  const PointSequence seq = load_points(a.points);
  ShapiroShieldsResult ss = shapiro_shields_test(seq, a.delta_min, a.carleson_max, cfg);
  SequenceReport& report = ss.report;
  if (!(space == SpaceId::hardy_half_plane()) && !seq.empty()) {
    report.boas.insert(report.boas.begin(), {space.label(), boas_bound(space, seq, cfg)});
  }
  Json json;
  json["space"] = space_to_json(space);
  json["n"] = seq.size();
  const Json report_json = report_to_json(report);
  for (const auto& [key, value] : report_json.items()) json[key] = value;
  json["thresholds"] = {{"delta_min", a.delta_min}, {"carleson_max", a.carleson_max}};

  Table table{{"key", "value"}, {}};
  table.rows.push_back({"n", std::to_string(seq.size())});
  table.rows.push_back({"separation", num(report.separation)});
  table.rows.push_back({"carleson", num(report.carleson)});
  table.rows.push_back({"blaschke_sum", num(report.blaschke_sum)});
  for (const auto& b : report.boas) table.rows.push_back({"boas:" + b.space, num(b.boas)});
  table.rows.push_back({"verdict_h2", report.verdict_h2 ? "true" : "false"});

  if (a.split) {
    const auto parts = gershgorin_split_indices(space, seq, *a.split, cfg);
    Json jparts = Json::array();
    for (std::size_t k = 0; k < parts.size(); ++k) {
      std::vector<HalfPlanePoint> pts;
      for (std::size_t i : parts[k]) pts.push_back(seq[i]);
      const double m = boas_bound(space, PointSequence(pts), cfg);
      jparts.push_back({{"indices", parts[k]}, {"boas", m}});
      table.rows.push_back({"split_part:" + std::to_string(k), num(m)});
    }
    json["split"] = {{"m_target", *a.split}, {"parts", jparts}};
  }
  if (a.equivalence) {
    const EquivalenceReport eq = space_equivalence_report(seq, a.common.alpha, cfg);
    json["equivalence"] = equivalence_to_json(eq);
    table.rows.push_back({"equivalence_ratio", num(eq.ratio)});
  }
  emit(a.common, json, table, out);
}

// interpolate ----------------------------------------------------------

struct InterpolateArgs {
  Common common;
  std::string points, targets;
  std::string method = "min-norm";
};

void run_interpolate(const InterpolateArgs& a, std::ostream& out) {
  const SpaceId space = space_of(a.common);
  const EvalConfig cfg = config_of(a.common);
  if (a.method == "blaschke" && !(space == SpaceId::hardy_dirichlet())) {
    throw UsageError("--method blaschke requires --space h");
  }
  const PointSequence seq = load_points(a.points);
  const ComplexVector targets = complex_vector_from_json(read_json_file(a.targets));
  const Interpolant f = a.method == "blaschke" ? finite_interpolant(seq, targets, cfg)
                                               : min_norm_interpolant(space, seq, targets, cfg);
  Table table{{"index", "sigma", "t", "target_re", "target_im", "coefficient_re", "coefficient_im", "residual"}, {}};
  for (std::size_t i = 0; i < seq.size(); ++i) {
    table.rows.push_back({std::to_string(i), num(seq[i].sigma()), num(seq[i].t()), num(targets[i].real()),
                          num(targets[i].imag()), num(f.coefficients()[i].real()), num(f.coefficients()[i].imag()),
                          num(f.node_residuals()[i])});
  }
  emit(a.common, interpolant_to_json(f), table, out);
}

// blaschke -------------------------------------------------------------

struct BlaschkeArgs {
  Common common;
  std::string points;
  std::vector<std::string> at;
};

void run_blaschke(const BlaschkeArgs& a, std::ostream& out) {
  config_of(a.common);
  const PointSequence seq = load_points(a.points);
  std::vector<Complex> at;
  for (const auto& text : a.at) at.push_back(complex_flag("--at", text));
  const DirichletBlaschke b = make_blaschke(seq);
  Json json;
  json["nodes"] = points_to_json(seq);
  json["primes"] = b.primes();
  Json derivs = Json::array();
  for (std::size_t j = 0; j < seq.size(); ++j) derivs.push_back(complex_to_json(b.derivative_at_node(j)));
  json["node_derivatives"] = derivs;
  Json values = Json::array();
  Table table{{"s_re", "s_im", "value_re", "value_im"}, {}};
  for (const auto& s : at) {
    const Complex v = b(s);
    values.push_back({{"s", complex_to_json(s)}, {"value", complex_to_json(v)}});
    table.rows.push_back({num(s.real()), num(s.imag()), num(v.real()), num(v.imag())});
  }
  json["values"] = values;
  emit(a.common, json, table, out);
}

// asymptotics ----------------------------------------------------------

struct AsymptoticsArgs {
  Common common;
  double alpha = 0.0;
  int kmin = 1;
  int kmax = 5;
};

void run_asymptotics(const AsymptoticsArgs& a, std::ostream& out) {
  const EvalConfig cfg = config_of(a.common);
  if (a.alpha > 1.0) throw UsageError("--alpha must be at most 1");
  if (a.kmin < 0 || a.kmax < a.kmin || a.kmax > 12) throw UsageError("--kmin/--kmax must satisfy 0 <= kmin <= kmax <= 12");
  const WeightedZetaParams p(a.alpha);
  Json rows = Json::array();
  Table table{{"k", "alpha", "z", "remainder_re", "remainder_im", "remainder_abs"}, {}};
  for (int k = a.kmin; k <= a.kmax; ++k) {
    const Complex z(1.0 + std::pow(10.0, -k), 0.0);
    const Complex r = eval_weighted_remainder(p, z, cfg);
    const Complex sing = weighted_singular_part(p, z);
    rows.push_back({{"k", k},
                    {"z", complex_to_json(z)},
                    {"singular_part", complex_to_json(sing)},
                    {"remainder", complex_to_json(r)},
                    {"remainder_abs", std::abs(r)}});
    table.rows.push_back({std::to_string(k), num(a.alpha), num(z.real()), num(r.real()), num(r.imag()),
                          num(std::abs(r))});
  }
  Json json;
  json["alpha"] = a.alpha;
  json["rows"] = rows;
  emit(a.common, json, table, out);
}

// embedding ------------------------------------------------------------

struct EmbeddingArgs {
  Common common;
  std::string polynomial;
  std::size_t corpus = 0;
  std::size_t max_degree = 100;
  std::uint64_t seed = 1;
  std::vector<double> theta{0.0};
  std::optional<double> alpha;
};

void run_embedding(const EmbeddingArgs& a, std::ostream& out) {
  config_of(a.common);
  if (a.polynomial.empty() == (a.corpus == 0)) throw UsageError("exactly one of --polynomial and --corpus is required");
  if (a.corpus > 0 && a.max_degree == 0) throw UsageError("--max-degree must be at least 1");
  if (a.alpha && (*a.alpha == 0.0 || *a.alpha > 1.0)) throw UsageError("--alpha must be nonzero and at most 1");
  std::vector<DirichletPolynomial> polys;
  if (!a.polynomial.empty()) {
    polys.emplace_back(complex_vector_from_json(read_json_file(a.polynomial)));
  } else {
    polys = random_polynomial_corpus(a.corpus, a.max_degree, a.seed, a.alpha && *a.alpha < 0.0);
  }
  const std::size_t nt = a.theta.size();
  std::vector<double> ratios(polys.size() * nt);
  parallel_for(ratios.size(), [&](std::size_t idx) {
    const auto& f = polys[idx / nt];
    const double theta = a.theta[idx % nt];
    ratios[idx] = (a.alpha ? halfstrip_embedding_ratio(f, theta, *a.alpha) : line_embedding_ratio(f, theta)).ratio;
  });
  Json rows = Json::array();
  Table table{{"theta", "alpha", "degree", "ratio"}, {}};
  std::vector<double> max_ratio(nt, 0.0);
  for (std::size_t idx = 0; idx < ratios.size(); ++idx) {
    const auto& f = polys[idx / nt];
    const double theta = a.theta[idx % nt];
    max_ratio[idx % nt] = std::max(max_ratio[idx % nt], ratios[idx]);
    rows.push_back({{"index", idx / nt},
                    {"theta", theta},
                    {"alpha", a.alpha ? Json(*a.alpha) : Json(nullptr)},
                    {"degree", f.degree()},
                    {"ratio", ratios[idx]}});
    table.rows.push_back({num(theta), a.alpha ? num(*a.alpha) : "", std::to_string(f.degree()), num(ratios[idx])});
  }
  Json summary = Json::array();
  for (std::size_t k = 0; k < nt; ++k) summary.push_back({{"theta", a.theta[k]}, {"max_ratio", max_ratio[k]}});
  Json json;
  json["rows"] = rows;
  json["summary"] = summary;
  emit(a.common, json, table, out);
}

// probe ----------------------------------------------------------------

struct ProbeArgs {
  Common common;
  std::string s;
  double t_max = 1e4;
  double target = 0.9;
};

void run_probe(const ProbeArgs& a, std::ostream& out) {
  const SpaceId space = space_of(a.common);
  const EvalConfig cfg = config_of(a.common);
  if (!space.is_dirichlet_series_space()) throw UsageError("--space must be h or h_alpha");
  if (!(a.t_max > 1.0 && a.t_max <= 1e5)) throw UsageError("--t-max must lie in (1, 1e5]");
  if (!(a.target > 0.0 && a.target <= 1.0)) throw UsageError("--target must lie in (0, 1]");
  const Complex sz = complex_flag("--s", a.s);
  const HalfPlanePoint s(sz.real(), sz.imag());
  const auto hit = almost_periodicity_probe(space, s, a.t_max, a.target, cfg);
  Json json;
  json["space"] = space_to_json(space);
  json["s"] = complex_to_json(sz);
  json["t_max"] = a.t_max;
  json["target"] = a.target;
  json["found"] = hit.has_value();
  Table table{{"found", "tau", "correlation", "pseudohyperbolic_distance"}, {}};
  if (hit) {
    const double rho = pseudohyperbolic_distance(s, HalfPlanePoint(s.sigma(), s.t() + hit->tau));
    json["tau"] = hit->tau;
    json["correlation"] = hit->correlation;
    json["pseudohyperbolic_distance"] = rho;
    table.rows.push_back({"true", num(hit->tau), num(hit->correlation), num(rho)});
  } else {
    json["tau"] = nullptr;
    table.rows.push_back({"false", "", "", ""});
  }
  emit(a.common, json, table, out);
}

void write_error(std::ostream& err, const std::string& name, const std::string& message) {
  Json e;
  e["error"] = name;
  e["message"] = message;
  err << dump_json(e);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reproducing-kernel computations for Hilbert spaces of Dirichlet series", "dirichlet_rkhs"};
  app.require_subcommand(1);
  app.fallthrough(false);

  KernelArgs kernel;
  auto* k = app.add_subcommand("kernel", "Evaluate the reproducing kernel k_w(s)");
  add_common(k, kernel.common, true);
  k->add_option("--w", kernel.w, "Kernel point as re,im")->required();
  k->add_option("--s", kernel.s, "Evaluation point as re,im")->required();
  k->footer("CSV columns: w_re,w_im,s_re,s_im,value_re,value_im");

  PointsArgs gram;
  auto* g = app.add_subcommand("gram", "Normalized Gram matrix and its spectrum");
  add_common(g, gram.common, true);
  g->add_option("--points", gram.points, "JSON file of [sigma, t] pairs")->required();
  g->footer("CSV columns: row,col,re,im (one row per matrix entry)");

  DiagnoseArgs diag;
  auto* d = app.add_subcommand("diagnose", "Separation, Carleson, Blaschke and Boas diagnostics");
  add_common(d, diag.common, true);
  d->add_option("--points", diag.points, "JSON file of [sigma, t] pairs")->required();
  d->add_option("--delta-min", diag.delta_min, "Separation threshold")->capture_default_str();
  d->add_option("--carleson-max", diag.carleson_max, "Carleson intensity threshold")->capture_default_str();
  d->add_option("--split", diag.split, "Gershgorin split with this target Boas bound");
  d->add_flag("--equivalence", diag.equivalence, "Compare Boas bounds of the Dirichlet and half-plane spaces");
  d->footer("CSV columns: key,value");

  InterpolateArgs interp;
  auto* i = app.add_subcommand("interpolate", "Construct an interpolant");
  add_common(i, interp.common, true);
  i->add_option("--points", interp.points, "JSON file of [sigma, t] pairs")->required();
  i->add_option("--targets", interp.targets, "JSON file of [re, im] targets")->required();
  i->add_option("--method", interp.method, "min-norm or blaschke")
      ->check(CLI::IsMember({"min-norm", "blaschke"}))
      ->capture_default_str();
  i->footer("CSV columns: index,sigma,t,target_re,target_im,coefficient_re,coefficient_im,residual");

  BlaschkeArgs blaschke;
  auto* b = app.add_subcommand("blaschke", "Finite Blaschke-type product vanishing at the points");
  add_common(b, blaschke.common, false);
  b->add_option("--points", blaschke.points, "JSON file of [sigma, t] pairs")->required();
  b->add_option("--at", blaschke.at, "Evaluation point as re,im (repeatable)");
  b->footer("CSV columns: s_re,s_im,value_re,value_im");

  AsymptoticsArgs asym;
  auto* as = app.add_subcommand("asymptotics", "Remainder of the weighted zeta after its singular part");
  add_common(as, asym.common, false);
  as->add_option("--alpha", asym.alpha, "Weight parameter (at most 1)")->required();
  as->add_option("--kmin", asym.kmin, "First k of z = 1 + 10^-k")->capture_default_str();
  as->add_option("--kmax", asym.kmax, "Last k of z = 1 + 10^-k")->capture_default_str();
  as->footer("CSV columns: k,alpha,z,remainder_re,remainder_im,remainder_abs");

  EmbeddingArgs emb;
  auto* e = app.add_subcommand("embedding", "Line or half-strip embedding ratios of Dirichlet polynomials");
  add_common(e, emb.common, false);
  e->add_option("--polynomial", emb.polynomial, "JSON file of coefficients [re, im], a_1 first");
  e->add_option("--corpus", emb.corpus, "Size of a random corpus");
  e->add_option("--max-degree", emb.max_degree, "Maximal degree of the corpus")->capture_default_str();
  e->add_option("--seed", emb.seed, "Seed of the corpus")->capture_default_str();
  e->add_option("--theta", emb.theta, "Window offsets (repeatable)")->capture_default_str();
  e->add_option("--alpha", emb.alpha, "Half-strip weight; omit for the critical line");
  e->footer("CSV columns: theta,alpha,degree,ratio (alpha empty for the line)");

  ProbeArgs probe;
  auto* p = app.add_subcommand("probe", "Search vertical translates with high kernel correlation");
  add_common(p, probe.common, true);
  p->add_option("--s", probe.s, "Base point as re,im")->required();
  p->add_option("--t-max", probe.t_max, "Largest translation")->capture_default_str();
  p->add_option("--target", probe.target, "Correlation to reach")->capture_default_str();
  p->footer("CSV columns: found,tau,correlation,pseudohyperbolic_distance");

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-' &&
      std::none_of(std::begin(kSubcommands), std::end(kSubcommands),
                   [&](const char* name) { return args.front() == name; })) {
    write_error(err, "UsageError", "unknown subcommand '" + args.front() + "'");
    return 2;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& ex) {
    write_error(err, "UsageError", ex.what());
    return 2;
  }

  try {
    if (k->parsed()) run_kernel(kernel, out);
    else if (g->parsed()) run_gram(gram, out);
    else if (d->parsed()) run_diagnose(diag, out);
    else if (i->parsed()) run_interpolate(interp, out);
    else if (b->parsed()) run_blaschke(blaschke, out);
    else if (as->parsed()) run_asymptotics(asym, out);
    else if (e->parsed()) run_embedding(emb, out);
    else if (p->parsed()) run_probe(probe, out);
  } catch (const UsageError& ex) {
    write_error(err, "UsageError", ex.what());
    return 2;
  } catch (const Error& ex) {
    write_error(err, ex.name(), ex.what());
    return 1;
  } catch (const std::exception& ex) {
    write_error(err, "Error", ex.what());
    return 1;
  }
  return 0;
}

}  // namespace dirichlet_rkhs::cli
