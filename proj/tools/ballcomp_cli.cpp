// Command-line surface over the library: seeded experiment runners whose
// reports embed the full run configuration, so a seed reproduces a report
// byte for byte.  Exit codes: 0 pass, 1 violation, 2 usage.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ballcomp/diagnostics.hpp"
#include "ballcomp/fields.hpp"
#include "ballcomp/json_io.hpp"
#include "ballcomp/sampling.hpp"
#include "ballcomp/symbolic.hpp"
#include "ballcomp/version.hpp"

namespace {

using namespace ballcomp;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  int n = 3;
  std::uint64_t seed = 0;
  std::string fspec = "p=1";
  std::string out;
  std::string format = "json";
};

std::string check_fspec(const std::string& s) {
  if (s == "f1" || s == "f2") return {};
  if (s.rfind("p=", 0) == 0) {
    try {
      size_t used = 0;
      const int p = std::stoi(s.substr(2), &used);
      if (used == s.size() - 2 && p >= 1) return {};
    } catch (const std::exception&) {
    }
  }
  return "expected p=<positive integer>, f1, or f2 (got '" + s + "')";
}

ReparamMap make_fspec(const std::string& s) {
  if (s == "f1") return ReparamMap::flat_f1();
  if (s == "f2") return ReparamMap::flat_f2();
  return ReparamMap::monomial(std::stoi(s.substr(2)));
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_f = true) {
  cmd->add_option("--n", o.n, "Ball dimension")
      ->default_val(3)
      ->check(CLI::Range(2, 16));
  cmd->add_option("--seed", o.seed, "Seed for every random draw")
      ->default_val(0);
  if (with_f)
    cmd->add_option("--f", o.fspec,
                    "Boundary reparametrization: p=<int>, f1, or f2")
        ->default_val("p=1")
        ->check(CLI::Validator(check_fspec, "FSPEC"));
  cmd->add_option("--out", o.out, "Write the report to this path");
  cmd->add_option("--format", o.format, "Report format for --out")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "csv"}));
}

OrderedJson run_config(const std::string& command, const CommonOpts& o,
                       const OrderedJson& tolerances) {
  OrderedJson c;
  c["command"] = command;
  c["n"] = o.n;
  c["seed"] = o.seed;
  c["f"] = o.fspec;
  c["tolerances"] = tolerances;
  c["out"] = o.out;
  c["format"] = o.format;
  return c;
}

OrderedJson report_shell(const std::string& command, const CommonOpts& o,
                         const OrderedJson& tolerances) {
  OrderedJson r;
  r["version"] = kVersion;
  r["config"] = run_config(command, o, tolerances);
  return r;
}

// Writes the report file when --out was given; stdout keeps the summary
// lines only.
int emit(const CommonOpts& o, const OrderedJson& report,
         const std::string& csv) {
  if (o.out.empty()) return kExitPass;
  const std::string body =
      o.format == "csv" ? csv : report.dump(2) + "\n";
  std::ofstream f(o.out, std::ios::binary);
  if (!f) {
    std::fprintf(stderr, "error: cannot open '%s' for writing\n",
                 o.out.c_str());
    return kExitViolation;
  }
  f << body;
  return kExitPass;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// check-action

int cmd_check_action(const CommonOpts& o, int samples, double tol_action,
                     double tol_boundary) {
  const ReparamMap f = make_fspec(o.fspec);
  Rng rng(o.seed);

  struct Suite {
    std::string name;
    CompactifiedAction action;
  };
  const std::vector<Suite> suites = {
      {"proj", CompactifiedAction::proj()},
      {"conf", CompactifiedAction::conf()},
      {"reparam(" + f.name() + ")", CompactifiedAction::reparam(f)},
  };

  OrderedJson tol;
  tol["action"] = tol_action;
  tol["boundary"] = tol_boundary;
  OrderedJson report = report_shell("check-action", o, tol);
  report["samples_per_kind"] = samples;

  std::ostringstream csv;
  csv << "kind,sample,composition_error,identity_error,boundary_error\n";

  bool pass = true;
  OrderedJson actions = OrderedJson::array();
  for (const Suite& s : suites) {
    const ActionAxiomsReport r = action_axioms(rng, s.action, o.n, samples);
    const bool ok = r.max_composition < tol_action &&
                    r.max_identity < tol_action &&
                    r.max_boundary < tol_boundary;
    pass = pass && ok;
    OrderedJson j;
    j["kind"] = s.name;
    j["samples"] = r.samples;
    j["boundary_samples"] = r.boundary_samples;
    j["resampled"] = r.resampled;
    j["max_composition"] = r.max_composition;
    j["max_identity"] = r.max_identity;
    j["max_boundary"] = r.max_boundary;
    j["pass"] = ok;
    actions.push_back(j);
    std::printf("%-14s composition %.3e  identity %.3e  boundary %.3e  %s\n",
                s.name.c_str(), r.max_composition, r.max_identity,
                r.max_boundary, ok ? "ok" : "VIOLATION");
    std::size_t bi = 0;
    for (std::size_t i = 0; i < r.composition_errors.size(); ++i) {
      csv << s.name << ',' << i << ',' << format_double(r.composition_errors[i])
          << ',' << format_double(r.identity_errors[i]) << ',';
      if (i % 10 == 0 && bi < r.boundary_errors.size())
        csv << format_double(r.boundary_errors[bi++]);
      csv << '\n';
    }
  }
  report["actions"] = actions;

  // The action suite above is exact-tolerance-level for any homeomorphism f;
  // what separates the family is whether the boundary vector fields extend
  // smoothly, i.e. whether f/f' keeps its derivatives bounded at 0.
  const SmoothnessReport sm =
      classify_smoothness([&](double y) { return f.f_over_fprime(y); });
  OrderedJson bf;
  bf["suite"] = "boundary-field";
  bf["flagged"] = !sm.smooth;
  bf["report"] = smoothness_to_json(sm);
  report["boundary_field"] = bf;
  if (!sm.smooth)
    std::printf(
        "boundary-field suite flagged: f/f' of %s blows up at order %d "
        "(informational; the C0 action suite above is unaffected)\n",
        f.name().c_str(), sm.order);

  report["pass"] = pass;
  const int rc = emit(o, report, csv.str());
  if (rc != kExitPass) return rc;
  return pass ? kExitPass : kExitViolation;
}

// ---------------------------------------------------------------------------
// smoothness

int cmd_smoothness(const CommonOpts& o) {
  const ReparamMap f = make_fspec(o.fspec);
  const SmoothnessReport sm =
      classify_smoothness([&](double y) { return f.f_over_fprime(y); });
  const FlatnessReport fl = flatness_order(f);

  OrderedJson report = report_shell("smoothness", o, OrderedJson::object());
  report["smoothness"] = smoothness_to_json(sm);
  report["flatness"] = flatness_to_json(fl);

  std::ostringstream csv;
  csv << "table,order,level,abscissa,estimate,noise_floor,status\n";
  for (const OrderTrail& t : sm.evidence) {
    for (std::size_t j = 0; j < t.estimates.size(); ++j)
      csv << "smoothness," << t.order << ',' << j + 1 << ','
          << format_double(std::pow(10.0, -(double)(j + 1))) << ','
          << format_double(t.estimates[j]) << ','
          << format_double(t.noise_floor[j]) << ',' << t.status << '\n';
  }
  for (std::size_t k = 0; k < fl.estimates.size(); ++k)
    for (std::size_t j = 0; j < fl.estimates[k].size(); ++j)
      csv << "flatness," << k + 1 << ',' << j << ','
          << format_double(0.5 * std::pow(2.0, -(double)j)) << ','
          << format_double(fl.estimates[k][j]) << ",,\n";

  if (sm.smooth)
    std::printf("smoothness %s: f/f' smooth up to order %d\n",
                f.name().c_str(), sm.order);
  else
    std::printf("smoothness %s: f/f' diverges at order %d\n", f.name().c_str(),
                sm.order);
  if (fl.flat)
    std::printf("flatness %s: flat up to order %d\n", f.name().c_str(),
                fl.orders_checked);
  else
    std::printf("flatness %s: non-flat at order %d\n", f.name().c_str(),
                fl.order);
  return emit(o, report, csv.str());
}

// ---------------------------------------------------------------------------
// holder

int cmd_holder(const CommonOpts& o, const std::string& from,
               const std::string& to, int pairs) {
  Rng rng(o.seed);
  const bool identity_map = from == to;
  const auto raw = sphere_anchored_pairs(rng, o.n, pairs);

  std::vector<HolderSample> samples;
  samples.reserve(raw.size());
  for (const auto& [u, v] : raw) {
    HolderSample s;
    s.sep = (u - v).norm();
    if (identity_map) {
      s.image_sep = s.sep;
    } else {
      // The nontrivial direction of the proj/conf boundary conjugacy: the
      // conformal model read as a function of the projective one, whose
      // normal modulus is a square root.
      const ModelPoint a = klein_to_poincare(ModelPoint::klein(u));
      const ModelPoint b = klein_to_poincare(ModelPoint::klein(v));
      s.image_sep = (a.coords() - b.coords()).norm();
    }
    samples.push_back(s);
  }

  HolderReport r;
  try {
    r = holder_exponent(samples);
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "holder: %s\n", ex.what());
    return kExitViolation;
  }

  OrderedJson report = report_shell("holder", o, OrderedJson::object());
  report["config"]["from"] = from;
  report["config"]["to"] = to;
  report["config"]["pairs"] = pairs;
  report["holder"] = holder_to_json(r);

  std::ostringstream csv;
  csv << "sep,image_sep\n";
  for (const HolderSample& s : samples)
    csv << format_double(s.sep) << ',' << format_double(s.image_sep) << '\n';

  std::printf("holder %s->%s: slope %.4f  residual %.4f  decades %.2f\n",
              from.c_str(), to.c_str(), r.slope, r.residual, r.decades);
  return emit(o, report, csv.str());
}

// ---------------------------------------------------------------------------
// geodesic

int cmd_geodesic(const CommonOpts& o, int random_count, double tol_cauchy,
                 double tol_distinct) {
  const ReparamMap f = make_fspec(o.fspec);
  Rng rng(o.seed);

  OrderedJson tol;
  tol["cauchy"] = tol_cauchy;
  tol["distinct"] = tol_distinct;
  OrderedJson report = report_shell("geodesic", o, tol);
  report["config"]["random"] = random_count;

  std::ostringstream csv;
  csv << "index,start_converged,start_infinity,start_max_step,"
         "finish_converged,finish_infinity,finish_max_step,distinct\n";

  OrderedJson rows = OrderedJson::array();
  int bad = 0;
  for (int i = 0; i < random_count; ++i) {
    Vec a, b;
    do {
      a = rng.unit_vector(o.n);
      b = rng.unit_vector(o.n);
      // Redraw chords that are nearly degenerate or graze the chart's
      // missed point, where no finite-precision trail can settle.
    } while (a.dot(b) > 0.99 || std::abs(1.0 - a[o.n - 1]) < 1e-5 ||
             std::abs(1.0 - b[o.n - 1]) < 1e-5);
    const Geodesic L(a, b);
    const EndpointsReport r = endpoints_under(f, L);
    bool distinct_ok = r.start.infinity != r.finish.infinity;
    if (!r.start.infinity && !r.finish.infinity)
      distinct_ok = (r.start.limit.u - r.finish.limit.u).norm() > tol_distinct;
    const bool ok = r.start.converged && r.finish.converged && distinct_ok &&
                    r.start.max_step < tol_cauchy &&
                    r.finish.max_step < tol_cauchy;
    if (!ok) ++bad;

    OrderedJson row;
    row["a"] = std::vector<double>(a.data(), a.data() + a.size());
    row["b"] = std::vector<double>(b.data(), b.data() + b.size());
    row["endpoints"] = endpoints_to_json(r);
    row["distinct"] = distinct_ok;
    row["pass"] = ok;
    rows.push_back(row);
    csv << i << ',' << r.start.converged << ',' << r.start.infinity << ','
        << format_double(r.start.max_step) << ',' << r.finish.converged << ','
        << r.finish.infinity << ',' << format_double(r.finish.max_step) << ','
        << distinct_ok << '\n';
  }
  report["geodesics"] = rows;
  report["failed"] = bad;
  report["pass"] = bad == 0;

  std::printf("geodesic %s: %d/%d chords with convergent, distinct endpoint "
              "pairs\n",
              f.name().c_str(), random_count - bad, random_count);
  const int rc = emit(o, report, csv.str());
  if (rc != kExitPass) return rc;
  return bad == 0 ? kExitPass : kExitViolation;
}

// ---------------------------------------------------------------------------
// pullback

bool parse_generator(const std::string& s, int n, GeneratorTag& tag) {
  if (s == "H") {
    tag = GeneratorTag::boost();
    return true;
  }
  if (s.size() >= 2 && (s[0] == 'X' || s[0] == 'Y')) {
    try {
      size_t used = 0;
      const int i = std::stoi(s.substr(1), &used);
      if (used != s.size() - 1 || i < 1 || i > n - 1) return false;
      tag = s[0] == 'X' ? GeneratorTag::para_inf(i) : GeneratorTag::para_zero(i);
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }
  if (s.size() == 3 && s[0] == 'R') {
    const int j = s[1] - '0';
    const int k = s[2] - '0';
    if (j >= 1 && j < k && k <= n - 1) {
      tag = GeneratorTag::rotation(j, k);
      return true;
    }
  }
  return false;
}

int cmd_pullback(const CommonOpts& o, const std::string& gen_name,
                 double tol_field) {
  GeneratorTag tag;
  if (!parse_generator(gen_name, o.n, tag)) {
    std::fprintf(stderr,
                 "error: --gen expects H, X<i>, Y<i>, or R<j><k> valid for "
                 "--n %d (got '%s')\n",
                 o.n, gen_name.c_str());
    return kExitUsage;
  }
  const ReparamMap f = make_fspec(o.fspec);
  const AlgebraElement x = generator(tag, o.n);

  // Fixed interior probe grid plus one boundary probe.
  std::vector<Vec> probes;
  for (double y : {1e-3, 0.1, 0.5, 1.0, 2.0}) {
    for (int k = 0; k < 2; ++k) {
      Vec q(o.n);
      for (int i = 0; i < o.n - 1; ++i)
        q[i] = (k == 0 ? 0.3 : -0.6) + 0.17 * i;
      q[o.n - 1] = y;
      probes.push_back(q);
    }
  }

  OrderedJson tol;
  tol["field"] = tol_field;
  OrderedJson report = report_shell("pullback", o, tol);
  report["config"]["gen"] = gen_name;

  std::ostringstream csv;
  csv << "probe,component,closed,numeric,error\n";

  double worst = 0.0;
  OrderedJson rows = OrderedJson::array();
  for (std::size_t pi = 0; pi < probes.size(); ++pi) {
    const Vec& q = probes[pi];
    const auto closed = pullback_field(f, x, q);
    OrderedJson row;
    row["point"] = std::vector<double>(q.data(), q.data() + q.size());
    if (!closed) {
      row["value"] = "undefined";
      rows.push_back(row);
      continue;
    }
    row["closed"] =
        std::vector<double>(closed->data(), closed->data() + closed->size());
    // Independent oracle: the projective field at the reparametrized point,
    // with the height slot divided by f'.  Skipped where f' underflows (the
    // flat maps vanish to the last denormal well inside the chart), since
    // there the quotient is no longer computable in doubles even though the
    // closed form is.
    const double fp = f.fprime(q[o.n - 1]);
    if (fp > 1e-250) {
      Vec up = q;
      up[o.n - 1] = f.f(q[o.n - 1]);
      Vec numeric = proj_field_numeric(x, up);
      numeric[o.n - 1] /= fp;
      const double err =
          (*closed - numeric).lpNorm<Eigen::Infinity>() /
          std::max(1.0, closed->lpNorm<Eigen::Infinity>());
      worst = std::max(worst, err);
      row["numeric"] = std::vector<double>(numeric.data(),
                                           numeric.data() + numeric.size());
      row["error"] = err;
      for (int c = 0; c < o.n; ++c)
        csv << pi << ',' << c << ',' << format_double((*closed)[c]) << ','
            << format_double(numeric[c]) << ',' << format_double(err) << '\n';
    } else {
      row["numeric"] = "skipped: f' underflows here";
    }
    rows.push_back(row);
  }

  // Boundary behaviour: the closed form extends iff f/f' does.
  Vec q0 = probes[0];
  q0[o.n - 1] = 0.0;
  const auto at_boundary = pullback_field(f, x, q0);
  report["extends_at_boundary"] = static_cast<bool>(at_boundary);
  if (at_boundary)
    report["boundary_value"] = std::vector<double>(
        at_boundary->data(), at_boundary->data() + at_boundary->size());

  report["probes"] = rows;
  report["max_error"] = worst;
  const bool pass = worst < tol_field;
  report["pass"] = pass;

  std::printf("pullback %s under %s: max closed-vs-numeric error %.3e at %zu "
              "probes%s\n",
              gen_name.c_str(), f.name().c_str(), worst, probes.size(),
              at_boundary ? "" : " (no boundary extension)");
  const int rc = emit(o, report, csv.str());
  if (rc != kExitPass) return rc;
  return pass ? kExitPass : kExitViolation;
}

// ---------------------------------------------------------------------------
// symbolic

// Monomial shape without its coefficient, for messages: "x1^2 y^-1 d/dy".
std::string term_shape(const PolyTerm& t, int n) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.a.size(); ++i) {
    if (t.a[i] == 0) continue;
    os << 'x' << i + 1;
    if (t.a[i] > 1) os << '^' << t.a[i];
    os << ' ';
  }
  if (t.b != 0) {
    os << 'y';
    if (t.b != 1) os << '^' << t.b.str();
    os << ' ';
  }
  if (t.component == n)
    os << "d/dy";
  else
    os << "d/dx" << t.component;
  return os.str();
}

int cmd_symbolic(const CommonOpts& o, std::string field_text,
                 const std::string& field_file, int p) {
  if (!field_file.empty()) {
    std::ifstream in(field_file, std::ios::binary);
    if (!in) {
      std::fprintf(stderr, "error: cannot read '%s'\n", field_file.c_str());
      return kExitUsage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    field_text = buf.str();
  }
  if (field_text.empty()) {
    std::fprintf(stderr, "error: provide --field or --field-file\n");
    return kExitUsage;
  }

  PolyVectorField x(o.n);
  PolyVectorField pulled(o.n);
  try {
    x = parse_field(field_text, o.n);
    pulled = pullback_monomial(x, p);
  } catch (const FieldParseError& e) {
    std::fprintf(stderr, "parse error at byte %zu: expected %s\n", e.position(),
                 e.expected().c_str());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }

  std::printf("input: %s\n", print_field(x).c_str());
  std::printf("pullback p=%d: %s\n", p, print_field(pulled).c_str());
  std::printf("boundary-tangent input: %s\n",
              is_boundary_tangent(x) ? "yes" : "no");
  std::string verdict = "analytic";
  if (!is_analytic(pulled)) {
    for (const PolyTerm& t : pulled.terms()) {
      const bool integral = denominator(t.b) == 1;
      if (t.b < 0 || !integral) {
        verdict = "non-analytic: term " + term_shape(t, o.n);
        break;
      }
    }
  }
  std::printf("%s\n", verdict.c_str());

  CommonOpts oc = o;
  oc.fspec = "p=" + std::to_string(p);
  OrderedJson report = report_shell("symbolic", oc, OrderedJson::object());
  report["config"]["field"] = field_text;
  report["config"]["p"] = p;
  report["input"] = poly_field_to_json(x);
  report["pullback"] = poly_field_to_json(pulled);
  report["boundary_tangent"] = is_boundary_tangent(x);
  report["analytic"] = is_analytic(pulled);
  report["verdict"] = verdict;

  std::ostringstream csv;
  csv << "component,coeff,a,b\n";
  for (const PolyTerm& t : pulled.terms()) {
    csv << t.component << ',' << t.coeff.str() << ',';
    for (std::size_t i = 0; i < t.a.size(); ++i)
      csv << (i ? " " : "") << t.a[i];
    csv << ',' << t.b.str() << '\n';
  }
  return emit(oc, report, csv.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compactified hyperbolic actions: models, fields, diagnostics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  CommonOpts ca, sm, ho, ge, pu, sy;

  CLI::App* c_ca = app.add_subcommand(
      "check-action",
      "Action axioms (composition, identity, boundary) for proj, conf, and "
      "the configured reparametrized family");
  add_common(c_ca, ca);
  int ca_samples = 250;
  double ca_tol_action = 1e-9, ca_tol_boundary = 1e-10;
  c_ca->add_option("--samples", ca_samples, "Triples per action kind")
      ->default_val(250)
      ->check(CLI::PositiveNumber);
  c_ca->add_option("--tol.action", ca_tol_action,
                   "Composition/identity tolerance")
      ->default_val(1e-9);
  c_ca->add_option("--tol.boundary", ca_tol_boundary,
                   "Boundary preservation tolerance")
      ->default_val(1e-10);

  CLI::App* c_sm = app.add_subcommand(
      "smoothness",
      "Derivative cascade of f/f' at the boundary plus the flatness order of "
      "f");
  add_common(c_sm, sm);

  CLI::App* c_ho = app.add_subcommand(
      "holder", "Exponent of the proj/conf boundary conjugacy by log-log fit");
  add_common(c_ho, ho, /*with_f=*/false);
  std::string ho_from = "conf", ho_to = "proj";
  int ho_pairs = 200;
  c_ho->add_option("--from", ho_from, "Source compactification")
      ->required()
      ->check(CLI::IsMember({"proj", "conf"}));
  c_ho->add_option("--to", ho_to, "Target compactification")
      ->required()
      ->check(CLI::IsMember({"proj", "conf"}));
  c_ho->add_option("--pairs", ho_pairs, "Anchored sample pairs")
      ->default_val(200)
      ->check(CLI::PositiveNumber);

  CLI::App* c_ge = app.add_subcommand(
      "geodesic",
      "Endpoint limits of reparametrized chords with convergence evidence");
  add_common(c_ge, ge);
  int ge_random = 100;
  double ge_tol_cauchy = 1e-6, ge_tol_distinct = 1e-6;
  c_ge->add_option("--random", ge_random, "Number of random chords")
      ->default_val(100)
      ->check(CLI::PositiveNumber);
  c_ge->add_option("--tol.cauchy", ge_tol_cauchy,
                   "Endpoint Cauchy tolerance")
      ->default_val(1e-6);
  c_ge->add_option("--tol.distinct", ge_tol_distinct,
                   "Endpoint distinctness tolerance")
      ->default_val(1e-6);

  CLI::App* c_pu = app.add_subcommand(
      "pullback",
      "Closed-form pulled-back generator fields against the numeric oracle");
  add_common(c_pu, pu);
  std::string pu_gen = "H";
  double pu_tol_field = 1e-7;
  c_pu->add_option("--gen", pu_gen, "Generator: H, X<i>, Y<i>, R<j><k>")
      ->default_val("H");
  c_pu->add_option("--tol.field", pu_tol_field,
                   "Closed-vs-numeric tolerance")
      ->default_val(1e-7);

  CLI::App* c_sy = app.add_subcommand(
      "symbolic",
      "Exact monomial pullback of a polynomial field and its analyticity "
      "verdict");
  add_common(c_sy, sy, /*with_f=*/false);
  std::string sy_field, sy_file;
  int sy_p = 2;
  c_sy->add_option("--field", sy_field, "Field expression (see grammar doc)");
  c_sy->add_option("--field-file", sy_file, "Read the expression from a file");
  c_sy->add_option("--p", sy_p, "Monomial degree of the reparametrization")
      ->default_val(2)
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_ca->parsed())
      return cmd_check_action(ca, ca_samples, ca_tol_action, ca_tol_boundary);
    if (c_sm->parsed()) return cmd_smoothness(sm);
    if (c_ho->parsed()) return cmd_holder(ho, ho_from, ho_to, ho_pairs);
    if (c_ge->parsed())
      return cmd_geodesic(ge, ge_random, ge_tol_cauchy, ge_tol_distinct);
    if (c_pu->parsed()) return cmd_pullback(pu, pu_gen, pu_tol_field);
    if (c_sy->parsed()) return cmd_symbolic(sy, sy_field, sy_file, sy_p);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitViolation;
  }
  return kExitUsage;
}
