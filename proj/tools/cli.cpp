#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rdw/ball.hpp"
#include "rdw/centroid.hpp"
#include "rdw/error.hpp"
#include "rdw/fnspec.hpp"
#include "rdw/median.hpp"
#include "rdw/opnorm.hpp"
#include "rdw/rd.hpp"

namespace rdw::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kCapVariable = "RD_WORKBENCH_CAP";

std::string number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError(what + " must be a nonnegative integer, got '" + text + "'");
  }
  return value;
}

std::pair<std::size_t, std::size_t> parse_pair(const std::string& text, char sep,
                                               const std::string& what) {
  const auto at = text.find(sep);
  if (at == std::string::npos) {
    throw UsageError(what + " must look like A" + std::string(1, sep) + "B, got '" + text + "'");
  }
  return {parse_size(text.substr(0, at), what), parse_size(text.substr(at + 1), what)};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file << content;
  if (!file) throw UsageError("failed writing '" + path + "'");
}

json generator_names(const Group& group) {
  json names = json::array();
  for (const auto& s : group.generators()) names.push_back(s.name);
  return names;
}

class Session {
 public:
  explicit Session(std::vector<std::string> args)
      : args_(std::move(args)), started_(std::chrono::steady_clock::now()), started_at_(utc_now()) {}

  std::optional<std::size_t> cap_flag;

  std::size_t cap() const {
    if (cap_flag) return *cap_flag;
    if (const char* env = std::getenv(kCapVariable); env != nullptr && *env != '\0') {
      return parse_size(env, kCapVariable);
    }
    return kDefaultElementCap;
  }

  json manifest(const std::string& group, json seeds = json::object()) const {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
    json m;
    m["tool"] = "rdw";
    m["version"] = kVersion;
    m["command_line"] = args_;
    m["group"] = group;
    m["seeds"] = std::move(seeds);
    m["cap"] = cap();
    m["started_at"] = started_at_;
    m["duration_seconds"] = seconds;
    return m;
  }

  // {"schema", "manifest", "result"}: the manifest is the only block that
  // varies between identical invocations.
  std::string document(const std::string& schema, const std::string& group, json result,
                       json seeds = json::object()) const {
    json doc;
    doc["schema"] = schema;
    doc["manifest"] = manifest(group, std::move(seeds));
    doc["result"] = std::move(result);
    return doc.dump(2) + "\n";
  }

 private:
  std::vector<std::string> args_;
  std::chrono::steady_clock::time_point started_;
  std::string started_at_;
};

// ---- subcommands --------------------------------------------------------

struct GrowthArgs {
  std::string group;
  std::size_t radius = 0;
  std::string out;
};

int cmd_growth(const Session& s, const GrowthArgs& a, std::ostream& out) {
  const auto group = make_group(a.group);
  const auto ball = enumerate_ball(group, a.radius, s.cap());
  const auto gamma = growth_function(ball);
  std::string csv = "group,radius,count\n";
  for (std::size_t r = 0; r < gamma.size(); ++r) {
    csv += csv_field(group->name()) + "," + std::to_string(r) + "," + std::to_string(gamma[r]) + "\n";
  }
  if (a.out.empty()) {
    out << csv;
    return kOk;
  }
  json result;
  result["group"] = group->name();
  result["generators"] = generator_names(*group);
  result["radius"] = a.radius;
  result["csv"] = a.out;
  result["columns"] = {"group", "radius", "count"};
  write_file(a.out, csv);
  const auto sidecar = s.document("rdw/growth", group->name(), result);
  write_file(a.out + ".json", sidecar);
  out << sidecar;
  return kOk;
}

struct OpnormArgs {
  std::string group, fn;
  std::size_t radius = 0;
  std::size_t iters = kDefaultIterations;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 0;
  bool no_radial = false;
  bool dense = false;
  std::size_t return_prob = 0;
};

int cmd_opnorm(const Session& s, const OpnormArgs& a, std::ostream& out) {
  const auto group = make_group(a.group);
  const auto f = parse_function(group, a.fn, s.cap());
  OpNormOptions options;
  options.iters = a.iters;
  options.tol = a.tol;
  options.seed = a.seed;
  options.cap = s.cap();
  options.allow_radial = !a.no_radial;
  const auto est = truncated_opnorm(f, a.radius, options);
  json result;
  result["group"] = group->name();
  result["generators"] = generator_names(*group);
  result["fn"] = a.fn;
  const auto nr = norms(f);
  result["l1"] = nr.l1;
  result["l2"] = nr.l2;
  result["support_radius"] = nr.support_radius;
  result["lower"] = est.lower;
  result["upper"] = est.upper;
  result["truncation_radius"] = est.truncation_radius;
  result["iterations"] = est.iterations;
  result["converged"] = est.converged;
  result["used_fallback"] = est.used_fallback;
  result["radial_reduction"] = est.radial;
  result["iteration_trace"] = est.iteration_trace;
  if (a.dense) {
    const auto ball = enumerate_ball(group, a.radius, s.cap());
    result["dense_lower"] = dense_compressed_norm(f, ball, a.radius);
  }
  if (a.return_prob > 0) {
    const auto seq = return_prob_norm(f, a.return_prob, s.cap());
    result["return_prob"] = seq;
    result["return_prob_limit"] = extrapolate_return_limit(seq);
  }
  out << s.document("rdw/opnorm", group->name(), result, {{"fallback", a.seed}});
  return kOk;
}

struct RdArgs {
  std::string group, family = "balls", window, bound = "lower", out;
  std::size_t rmax = 0;
  std::uint64_t seed = 0;
  double truncation_factor = 2.0;
  std::size_t iters = kDefaultIterations;
  double tol = kDefaultTolerance;
};

int cmd_rd_degree(const Session& s, const RdArgs& a, std::ostream& out) {
  const auto group = make_group(a.group);
  const auto family = parse_profile_family(a.family);
  const auto [lo, hi] = a.window.empty() ? std::pair<std::size_t, std::size_t>{0, a.rmax}
                                         : parse_pair(a.window, ':', "--window");
  if (a.bound != "lower" && a.bound != "upper") {
    throw UsageError("--bound must be lower or upper, got '" + a.bound + "'");
  }
  RdProfileOptions options;
  options.truncation_factor = a.truncation_factor;
  options.opnorm.iters = a.iters;
  options.opnorm.tol = a.tol;
  options.opnorm.cap = s.cap();
  const auto profile = rd_profile(group, family, a.rmax, a.seed, options);
  const auto fit =
      fit_rd_degree(profile, lo, hi, a.bound == "lower" ? RatioBound::Lower : RatioBound::Upper);

  std::string csv = "group,family,r,l2,op_lower,op_upper\n";
  json points = json::array();
  for (const auto& p : profile.points) {
    csv += csv_field(group->name()) + "," + a.family + "," + std::to_string(p.r) + "," +
           number(p.l2) + "," + number(p.op_lower) + "," + number(p.op_upper) + "\n";
    points.push_back({{"r", p.r},
                      {"l2", p.l2},
                      {"op_lower", p.op_lower},
                      {"op_upper", p.op_upper},
                      {"truncation_radius", p.truncation_radius}});
  }
  json result;
  result["group"] = group->name();
  result["generators"] = generator_names(*group);
  result["family"] = a.family;
  result["rmax"] = a.rmax;
  result["window"] = {lo, hi};
  result["bound"] = a.bound;
  result["truncation_factor"] = a.truncation_factor;
  result["slope"] = fit.slope;
  result["s_hat"] = fit.s_hat;
  result["r2"] = fit.r2;
  result["rms_residual"] = fit.rms;
  result["fit_points"] = fit.points;
  result["columns"] = {"group", "family", "r", "l2", "op_lower", "op_upper"};
  result["points"] = std::move(points);
  if (!a.out.empty()) {
    result["csv"] = a.out;
    write_file(a.out, csv);
  }
  const auto doc = s.document("rdw/rdprofile", group->name(), result, {{"family", a.seed}});
  if (!a.out.empty()) write_file(a.out + ".json", doc);
  out << doc;
  return kOk;
}

struct KestenArgs {
  std::string group, fn;
  std::size_t radius = 0;
  std::size_t iters = kDefaultIterations;
  double tol = kDefaultTolerance;
};

int cmd_kesten(const Session& s, const KestenArgs& a, std::ostream& out) {
  const auto group = make_group(a.group);
  const auto f = parse_function(group, a.fn, s.cap());
  OpNormOptions options;
  options.iters = a.iters;
  options.tol = a.tol;
  options.cap = s.cap();
  const auto gap = kesten_gap(f, a.radius, options);
  json result;
  result["group"] = group->name();
  result["generators"] = generator_names(*group);
  result["fn"] = a.fn;
  result["radius"] = a.radius;
  result["l1"] = gap.l1;
  result["op_lower"] = gap.op_lower;
  result["gap"] = gap.gap;
  out << s.document("rdw/kesten", group->name(), result);
  return kOk;
}

json labels(const FiniteGraph& g, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

int cmd_median_check(const Session& s, const std::string& spec, std::ostream& out,
                     std::ostream& err) {
  const auto graph = load_graph(spec);
  const auto report = is_median(graph);
  json result;
  result["graph"] = spec;
  result["vertices"] = graph.size();
  result["edges"] = graph.edge_count();
  result["is_median"] = report.is_median;
  if (report.violating_triple) {
    const auto& t = *report.violating_triple;
    result["violating_triple"] = labels(graph, {t[0], t[1], t[2]});
    result["intersection"] = labels(graph, report.intersection);
    result["reason"] = report.reason;
  }
  out << s.document("rdw/median-check", "", result);
  if (!report.is_median) {
    err << "error:check: not a median graph: " << report.reason << "\n";
    return kCheck;
  }
  return kOk;
}

int cmd_hyperplanes(const Session& s, const std::string& spec, const std::string& pair,
                    std::ostream& out, std::ostream& err) {
  const auto graph = load_graph(spec);
  const auto walls = hyperplanes(graph);
  json result;
  result["graph"] = spec;
  result["vertices"] = graph.size();
  result["count"] = walls.size();
  json list = json::array();
  for (const auto& h : walls) {
    json edges = json::array();
    for (auto e : h.edges) {
      const auto [u, v] = graph.edges()[e];
      edges.push_back({graph.label(u), graph.label(v)});
    }
    const auto ones = static_cast<std::size_t>(std::count(h.side.begin(), h.side.end(), 1));
    list.push_back({{"id", h.id}, {"edges", edges}, {"halfspace_sizes", {h.side.size() - ones, ones}}});
  }
  result["hyperplanes"] = std::move(list);
  bool ok = true;
  if (!pair.empty()) {
    const auto [u, v] = parse_pair(pair, ',', "--pair");
    if (u >= graph.size() || v >= graph.size()) {
      throw UsageError("--pair vertex out of range for a graph with " +
                       std::to_string(graph.size()) + " vertices");
    }
    const auto U = static_cast<Vertex>(u), V = static_cast<Vertex>(v);
    const auto wd = wall_distance_check(graph, walls, U, V);
    const auto poset = hyperplane_poset(graph, walls, U, V);
    const auto cover = chain_cover(poset);
    json chains = json::array();
    for (const auto& c : cover.chains) {
      json ids = json::array();
      for (auto i : c) ids.push_back(poset.ground[i].id);
      chains.push_back(ids);
    }
    const auto growth = interval_growth_check(graph, U, V, wd.d);
    json growth_rows = json::array();
    for (const auto& p : growth) {
      growth_rows.push_back({{"r", p.r}, {"count", p.count}, {"bound", p.bound}, {"holds", p.holds}});
      ok = ok && p.holds;
    }
    result["pair"] = {{"u", graph.label(U)},
                      {"v", graph.label(V)},
                      {"d", wd.d},
                      {"separating", wd.separating},
                      {"equal", wd.equal},
                      {"interval_size", poset.interval.size()},
                      {"width", cover.width},
                      {"chains", chains},
                      {"interval_growth", growth_rows}};
    ok = ok && wd.equal;
  }
  out << s.document("rdw/hyperplanes", "", result);
  if (!ok) {
    err << "error:check: wall count or interval growth bound failed for pair " << pair << "\n";
    return kCheck;
  }
  return kOk;
}

struct CentroidArgs {
  std::string group, strategy = "median", out;
  std::size_t rmax = 0, hradius = 0, sample = 0;
  std::uint64_t seed = 0;
};

int cmd_centroid(const Session& s, const CentroidArgs& a, std::ostream& out) {
  const auto group = make_group(a.group);
  const auto strategy = parse_centroid_strategy(a.strategy);
  const auto report =
      verify_centroid_conditions({group}, strategy, a.rmax, a.hradius, a.sample, a.seed, s.cap());
  std::string csv = "r,cond1_max,cond2_max,cond3_max\n";
  for (std::size_t i = 0; i < report.r_values.size(); ++i) {
    csv += std::to_string(report.r_values[i]) + "," + std::to_string(report.cond1_max[i]) + "," +
           std::to_string(report.cond2_max[i]) + "," + std::to_string(report.cond3_max[i]) + "\n";
  }
  if (a.out.empty()) {
    out << csv;
    return kOk;
  }
  json result;
  result["group"] = group->name();
  result["generators"] = generator_names(*group);
  result["strategy"] = a.strategy;
  result["rmax"] = a.rmax;
  result["sampling"] = {{"h_radius", report.sampling.h_radius},
                        {"sample_size", report.sampling.sample_size},
                        {"population", report.sampling.population},
                        {"exhaustive", report.sampling.exhaustive},
                        {"seed", report.sampling.seed}};
  if (report.fit) {
    const auto& fit = *report.fit;
    result["fitted_degrees"] = fit.degrees;
    result["fit_r2"] = {fit.fits[0].r2, fit.fits[1].r2, fit.fits[2].r2};
    result["deg_rd_bound"] = fit.deg_rd_bound;
  } else {
    result["fitted_degrees"] = nullptr;
    result["fit_r2"] = nullptr;
    result["deg_rd_bound"] = nullptr;
  }
  result["csv"] = a.out;
  result["columns"] = {"r", "cond1_max", "cond2_max", "cond3_max"};
  write_file(a.out, csv);
  const auto doc = s.document("rdw/centroid", group->name(), result, {{"sample", a.seed}});
  write_file(a.out + ".json", doc);
  out << doc;
  return kOk;
}

struct DecayArgs {
  std::string group, xi, eta;
  double s = 2.0;
  std::size_t radius = 0;
};

int cmd_coeff_decay(const Session& s, const DecayArgs& a, std::ostream& out) {
  const auto group = make_group(a.group);
  const auto xi = parse_function(group, a.xi, s.cap());
  const auto eta = parse_function(group, a.eta, s.cap());
  json result;
  result["group"] = group->name();
  result["generators"] = generator_names(*group);
  result["xi"] = a.xi;
  result["eta"] = a.eta;
  result["s"] = a.s;
  result["radius"] = a.radius;
  result["value"] = coeff_decay_sum(xi, eta, a.s, a.radius);
  result["xi_l2"] = norms(xi).l2;
  result["eta_l2"] = norms(eta).l2;
  out << s.document("rdw/coeff-decay", group->name(), result);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session session(args);
  CLI::App app{"Rapid-decay workbench: growth, operator norms, median geometry, centroids",
               "rdw"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::size_t cap_value = 0;
  auto* cap_opt = app.add_option("--cap", cap_value,
                                 "Element cap for ball enumeration (overrides RD_WORKBENCH_CAP)");

  GrowthArgs growth;
  auto* g = app.add_subcommand("growth", "Growth function gamma(0..R) as CSV");
  g->add_option("--group", growth.group, "Group spec")->required();
  g->add_option("--radius", growth.radius, "Radius R")->required();
  g->add_option("--out", growth.out, "CSV path; a JSON sidecar goes to <path>.json");

  OpnormArgs opnorm;
  auto* o = app.add_subcommand("opnorm", "Truncated operator-norm bounds for one function");
  o->add_option("--group", opnorm.group)->required();
  o->add_option("--fn", opnorm.fn, "ball:R | sphere:R | gen-sum | delta:<word> | random:R,seed")
      ->required();
  o->add_option("--radius", opnorm.radius, "Truncation radius")->required();
  o->add_option("--iters", opnorm.iters, "Maximum operator applications");
  o->add_option("--tol", opnorm.tol, "Stop when successive trace entries differ by less");
  o->add_option("--seed", opnorm.seed, "Seed for the fallback start vector");
  o->add_flag("--no-radial", opnorm.no_radial, "Disable the free-group radial reduction");
  o->add_flag("--dense", opnorm.dense, "Also report the dense top singular value");
  o->add_option("--return-prob", opnorm.return_prob,
                "Also report n <= N return-probability estimates and their limit");

  RdArgs rd;
  auto* d = app.add_subcommand("rd-degree", "RD profile and log-log degree fit");
  d->add_option("--group", rd.group)->required();
  d->add_option("--family", rd.family, "balls | spheres | random");
  d->add_option("--rmax", rd.rmax)->required();
  d->add_option("--window", rd.window, "Fit window A:B (default 0:rmax)");
  d->add_option("--seed", rd.seed);
  d->add_option("--truncation-factor", rd.truncation_factor,
                "Compress f_r to B(ceil(factor * r))");
  d->add_option("--bound", rd.bound, "Which operator-norm bound enters the ratio: lower | upper");
  d->add_option("--iters", rd.iters);
  d->add_option("--tol", rd.tol);
  d->add_option("--out", rd.out, "rdprofile CSV path; a JSON sidecar goes to <path>.json");

  KestenArgs kesten;
  auto* k = app.add_subcommand("kesten", "Gap ||f||_1 - op_lower for nonnegative f");
  k->add_option("--group", kesten.group)->required();
  k->add_option("--fn", kesten.fn)->required();
  k->add_option("--radius", kesten.radius)->required();
  k->add_option("--iters", kesten.iters);
  k->add_option("--tol", kesten.tol);

  std::string median_graph;
  auto* m = app.add_subcommand("median-check", "Exhaustive median-graph test");
  m->add_option("--graph", median_graph, "File or grid:WxH | cube:d | cycle:n | k23 | ...")
      ->required();

  std::string hp_graph, hp_pair;
  auto* h = app.add_subcommand("hyperplanes", "Hyperplanes, wall distance and chain cover");
  h->add_option("--graph", hp_graph)->required();
  h->add_option("--pair", hp_pair, "u,v vertex indices");

  CentroidArgs centroid;
  auto* c = app.add_subcommand("centroid-verify", "Centroid conditions as CSV");
  c->add_option("--group", centroid.group)->required();
  c->add_option("--strategy", centroid.strategy, "median | gromov");
  c->add_option("--rmax", centroid.rmax)->required();
  c->add_option("--hradius", centroid.hradius)->required();
  c->add_option("--sample", centroid.sample, "Number of h (0 = all of B(hradius))");
  c->add_option("--seed", centroid.seed);
  c->add_option("--out", centroid.out, "CSV path; a JSON sidecar goes to <path>.json");

  DecayArgs decay;
  auto* x = app.add_subcommand("coeff-decay", "Weighted matrix-coefficient sum");
  x->add_option("--group", decay.group)->required();
  x->add_option("--xi", decay.xi)->required();
  x->add_option("--eta", decay.eta)->required();
  x->add_option("--s", decay.s);
  x->add_option("--radius", decay.radius)->required();

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend());
    if (!rest.empty()) rest.pop_back();  // program name
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    std::replace(what.begin(), what.end(), '\n', ' ');
    err << "error:usage: " << what << "\n";
    return kUsage;
  }
  if (*cap_opt) session.cap_flag = cap_value;

  try {
    if (*g) return cmd_growth(session, growth, out);
    if (*o) return cmd_opnorm(session, opnorm, out);
    if (*d) return cmd_rd_degree(session, rd, out);
    if (*k) return cmd_kesten(session, kesten, out);
    if (*m) return cmd_median_check(session, median_graph, out, err);
    if (*h) return cmd_hyperplanes(session, hp_graph, hp_pair, out, err);
    if (*c) return cmd_centroid(session, centroid, out);
    if (*x) return cmd_coeff_decay(session, decay, out);
  } catch (const CapacityError& e) {
    err << "error:" << e.kind() << ": " << e.what() << "\n";
    return kCapacity;
  } catch (const CheckFailure& e) {
    err << "error:" << e.kind() << ": " << e.what() << "\n";
    return kCheck;
  } catch (const UsageError& e) {
    err << "error:" << e.kind() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::bad_alloc&) {
    err << "error:capacity: out of memory\n";
    return kCapacity;
  } catch (const std::exception& e) {
    err << "error:internal: " << e.what() << "\n";
    return kInternal;
  }
  err << "error:usage: no subcommand\n";
  return kUsage;
}

}  // namespace rdw::cli
