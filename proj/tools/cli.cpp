#include "cli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "binomoment/binomial.hpp"
#include "binomoment/classify.hpp"
#include "binomoment/closedform.hpp"
#include "binomoment/errors.hpp"
#include "binomoment/freeconv.hpp"
#include "binomoment/generating.hpp"
#include "binomoment/json_io.hpp"
#include "binomoment/mellin.hpp"
#include "binomoment/slater.hpp"
#include "binomoment/verify.hpp"
#include "figures_json.hpp"

namespace binomoment::cli {

using nlohmann::json;

namespace {

constexpr const char* kNumberHelp =
    "Numbers accept \"k/l\" and plain decimals; decimals with at most six fractional digits are taken "
    "as exact rationals, longer ones (or exponent notation) as double precision floats.";

// p must be rational for every density-level command.
Rational parse_p(const std::string& text) {
  const Scalar s = Scalar::parse(text);
  if (s.is_exact()) return s.exact();
  if (auto q = Rational::reconstruct(s.to_double())) return *q;
  throw DomainError("p must be rational, got " + text);
}

std::string join(const std::vector<Scalar>& values) {
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += ' ';
    line += values[i].str();
  }
  return line;
}

// V_{p,r} itself, including parameters outside the positive definite region.
std::function<double(double, double)> raw_density(const Params& params) {
  params.require_p_above_one();
  if (auto id = closed_form_for(params)) {
    return [id = *id](double x, double gap) { return eval_closed(id, x, gap); };
  }
  auto expansion = std::make_shared<const SlaterExpansion>(build_slater(params));
  return [expansion](double x, double gap) { return eval_V(*expansion, x, gap); };
}

struct DensityView {
  double lower = 0.0;
  double upper = 0.0;
  double atom = 0.0;
  std::function<double(double)> at;
};

DensityView density_view(const Params& params, bool raney) {
  DensityView view;
  if (raney) {
    auto w = std::make_shared<const RaneyDensity>(params);
    view.upper = w->upper();
    view.at = [w](double x) { return (*w)(x); };
    return view;
  }
  if (classify_binomial(Scalar(params.p), params.r).positive_definite) {
    const MeasureModel m = measure_model(params);
    view.lower = m.lower;
    view.upper = m.upper;
    view.atom = m.atom_at_zero;
    view.at = [density = m.density, lo = m.lower, hi = m.upper](double x) { return density(x, x - lo, hi - x); };
    return view;
  }
  auto f = raw_density(params);
  view.upper = c_of_p(Scalar(params.p)).to_double();
  view.at = [f, hi = view.upper](double x) { return f(x, hi - x); };
  return view;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(Scalar::parse(item).to_double());
  if (parts.size() != 3 || parts[2] < 1 || parts[2] != std::floor(parts[2])) {
    throw DomainError("--grid expects a,b,count with count >= 1");
  }
  const long count = static_cast<long>(parts[2]);
  std::vector<double> xs;
  for (long i = 0; i < count; ++i) {
    xs.push_back(count == 1 ? parts[0] : parts[0] + (parts[1] - parts[0]) * static_cast<double>(i) / (count - 1));
  }
  return xs;
}

void emit_raster(std::ostream& out, const json& raster) {
  const Rational p_min = Rational::parse(raster.at("p_min").get<std::string>());
  const Rational p_max = Rational::parse(raster.at("p_max").get<std::string>());
  const Rational r_min = Rational::parse(raster.at("r_min").get<std::string>());
  const Rational r_max = Rational::parse(raster.at("r_max").get<std::string>());
  const Rational step = Rational::parse(raster.at("step").get<std::string>());
  if (step.sign() <= 0) throw DomainError("figure raster step must be positive");
  out << "p,r,positive_definite,branch,elementary\n";
  for (Rational p = p_min; p <= p_max; p += step) {
    for (Rational r = r_min; r <= r_max; r += step) {
      const RegionVerdict v = classify_binomial(Scalar(p), Scalar(r));
      const bool elementary = v.positive_definite && p > Rational(1) && closed_form_for(Params(p, Scalar(r))).has_value();
      out << format_double(p.to_double()) << ',' << format_double(r.to_double()) << ','
          << (v.positive_definite ? 1 : 0) << ',' << to_string(v.branch) << ',' << (elementary ? 1 : 0) << '\n';
    }
  }
}

void emit_curves(std::ostream& out, const json& figure, long points) {
  out << "p,r,x,V,has_negative_part\n";
  for (const auto& entry : figure.at("params")) {
    const Params params(parse_p(entry.at(0).get<std::string>()), Scalar::parse(entry.at(1).get<std::string>()));
    const auto f = raw_density(params);
    const Scalar c = c_of_p(Scalar(params.p));
    const double upper = c.to_double();
    std::vector<double> xs, values;
    for (long i = 1; i <= points; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(points + 1);
      const double x = upper * t;
      xs.push_back(x);
      values.push_back(f(x, upper * (1.0 - t)));
    }
    const bool negative = std::any_of(values.begin(), values.end(), [](double v) { return v < 0.0; });
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out << params.p.str() << ',' << params.r.str() << ',' << format_double(xs[i]) << ',' << format_double(values[i])
          << ',' << (negative ? 1 : 0) << '\n';
    }
  }
}

struct Options {
  std::string p, r;
  long n = 10;
  bool raney = false;
  bool json = false;
  std::string scale;
  int order = kDefaultSeriesOrder;
  std::string kind = "binomial";
  std::optional<double> x;
  std::string grid;
  std::string family = "binomial";
  long count = 1000;
  std::uint64_t seed = 1;
  bool binary = false;
  bool all = false;
  std::string id;
  int conv_moments = 12;
  long nmax = 10;
  double rel_tol = 1e-7;
  int figure = 0;
  std::string out_path;
  std::string params_path;
};

int cmd_moments(const Options& o, std::ostream& out) {
  const Scalar p = Scalar::parse(o.p), r = Scalar::parse(o.r);
  std::vector<Scalar> m = o.raney ? raney_moments(p, r, o.n) : binomial_moments(p, r, o.n);
  if (!o.scale.empty()) {
    const Scalar c = Scalar::parse(o.scale);
    Scalar factor(1);
    for (auto& v : m) {
      v = v * factor;
      factor = factor * c;
    }
  }
  if (o.json) {
    out << moments_to_json(m).dump() << '\n';
  } else {
    out << join(m) << '\n';
  }
  return kOk;
}

int cmd_series(const Options& o, std::ostream& out) {
  const Scalar p = Scalar::parse(o.p);
  const Scalar r = o.r.empty() ? Scalar(0) : Scalar::parse(o.r);
  GenFunKind kind = GenFunKind::BinomialD;
  if (o.kind == "fuss") kind = GenFunKind::FussB;
  if (o.kind == "raney") kind = GenFunKind::RaneyPower;
  const TruncatedSeries s = generating_function(kind, p, r, o.order);
  if (o.json) {
    out << to_json(s).dump() << '\n';
  } else {
    out << join(std::vector<Scalar>(s.coeffs().begin(), s.coeffs().end())) << '\n';
  }
  return kOk;
}

int cmd_density(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.x.has_value() == !o.grid.empty()) {
    err << "density: give exactly one of --x or --grid\n";
    return kUsage;
  }
  const Params params(parse_p(o.p), Scalar::parse(o.r));
  const DensityView view = density_view(params, o.raney);
  const std::vector<double> xs = o.x ? std::vector<double>{*o.x} : parse_grid(o.grid);
  std::vector<double> values(xs.size());
  std::transform(xs.begin(), xs.end(), values.begin(), view.at);
  if (o.json) {
    out << json{{"p", params.p.str()}, {"r", params.r.str()}, {"atom_at_zero", view.atom},
                {"support", {view.lower, view.upper}}, {"x", xs}, {"density", values}}
               .dump()
        << '\n';
    return kOk;
  }
  for (std::size_t i = 0; i < xs.size(); ++i) out << format_double(xs[i]) << ' ' << format_double(values[i]) << '\n';
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Scalar p = Scalar::parse(o.p), r = Scalar::parse(o.r);
  const RegionVerdict v = o.family == "raney" ? classify_raney(p, r) : classify_binomial(p, r);
  if (o.json) {
    out << json{{"family", o.family}, {"positive_definite", v.positive_definite}, {"branch", to_string(v.branch)}}.dump()
        << '\n';
  } else {
    out << (v.positive_definite ? "positive definite (" : "NOT positive definite (") << to_string(v.branch) << ")\n";
  }
  return kOk;
}

int cmd_factorize(const Options& o, std::ostream& out) {
  const MellinFactorization f = factorize(Params(parse_p(o.p), Scalar::parse(o.r)));
  if (o.json) {
    out << to_json(f).dump() << '\n';
    return kOk;
  }
  for (const auto& b : f.factors) {
    if (b.is_point_mass()) {
      out << "delta_1\n";
    } else {
      out << "b(" << format_double(b.u + b.v) << ", " << format_double(b.u) << ", " << b.l << ")\n";
    }
  }
  out << "dilation " << format_double(f.dilation) << '\n';
  return kOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
  if (o.count < 1) throw DomainError("sample: --count must be at least 1");
  const MellinFactorization f = factorize(Params(parse_p(o.p), Scalar::parse(o.r)));
  const std::vector<double> xs = sample(f, static_cast<std::size_t>(o.count), o.seed);
  if (o.binary) {
    // Little-endian hosts only; the byte order is the documented format.
    static_assert(std::endian::native == std::endian::little);
    out.write(reinterpret_cast<const char*>(xs.data()), static_cast<std::streamsize>(xs.size() * sizeof(double)));
    return kOk;
  }
  for (double x : xs) out << format_double(x) << '\n';
  return kOk;
}

int cmd_conv_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.all == !o.id.empty()) {
    err << "conv-verify: give exactly one of --all or --id\n";
    return kUsage;
  }
  const std::vector<IdentityCheck> checks =
      o.all ? run_identity_suite(o.conv_moments) : std::vector<IdentityCheck>{run_identity(o.id, o.conv_moments)};
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
  if (o.json) {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back(to_json(c));
    out << json{{"pass", ok}, {"checks", arr}}.dump() << '\n';
  } else {
    for (const auto& c : checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.id << (c.exact ? " [exact] " : " [float] ") << c.statement;
      if (!c.exact) out << " max_error=" << format_double(c.max_error);
      out << '\n';
    }
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const CertifyReport report = certify_measure(Params(parse_p(o.p), Scalar::parse(o.r)), o.nmax, o.rel_tol);
  if (o.json) {
    out << to_json(report).dump() << '\n';
  } else {
    out << report.model << " atom=" << format_double(report.atom) << '\n';
    for (const auto& m : report.moments) {
      out << m.n << ' ' << format_double(m.expected) << ' ' << format_double(m.computed) << ' '
          << format_double(m.error) << (m.passed ? " ok" : " FAIL") << '\n';
    }
    out << (report.passed ? "PASS" : "FAIL") << '\n';
  }
  return report.passed ? kOk : kVerificationFailed;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const Params params(parse_p(o.p), Scalar::parse(o.r));
  const std::optional<Witness> w = search_negativity_witness(params);
  if (!w) {
    out << (o.json ? json{{"found", false}}.dump() : std::string("inconclusive: no witness within the search budget"))
        << '\n';
    return kInconclusive;
  }
  if (o.json) {
    json j = to_json(*w);
    j["found"] = true;
    out << j.dump() << '\n';
  } else {
    out << to_string(w->kind) << " location=" << format_double(w->location) << " index=" << w->index
        << " value=" << format_double(w->value) << '\n';
  }
  return kOk;
}

int cmd_figure(const Options& o, std::ostream& out) {
  json config = default_figure_config();
  if (!o.params_path.empty()) {
    std::ifstream in(o.params_path);
    if (!in) throw std::runtime_error("cannot read " + o.params_path);
    config = json::parse(in);
  }
  if (o.out_path.empty() || o.out_path == "-") {
    emit_figure_data(o.figure, out, config);
    return kOk;
  }
  std::ofstream file(o.out_path);
  if (!file) throw std::runtime_error("cannot write " + o.out_path);
  emit_figure_data(o.figure, file, config);
  if (!file) throw std::runtime_error("write failed for " + o.out_path);
  return kOk;
}

}  // namespace

const json& default_figure_config() {
  static const json config = json::parse(kDefaultFiguresJson);
  return config;
}

void emit_figure_data(int id, std::ostream& out, const json& config) {
  if (id == 1) {
    emit_raster(out, config.at("raster"));
    return;
  }
  const std::string key = std::to_string(id);
  if (!config.at("figures").contains(key)) throw DomainError("unknown figure id " + key);
  emit_curves(out, config.at("figures").at(key), config.value("points", 400L));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binomial and Raney moment sequences: moments, densities, sampling and verification"};
  app.footer(std::string(kNumberHelp) + "\nExit codes: 0 ok, 1 domain or region error, 2 verification failure, "
                                        "3 inconclusive witness search, 64 usage error.");
  app.require_subcommand(1);
  Options o;

  auto add_pr = [&o](CLI::App* sub, bool r_required = true) {
    sub->add_option("--p", o.p, "Parameter p")->required();
    auto* r = sub->add_option("--r", o.r, "Parameter r");
    if (r_required) r->required();
  };

  auto* moments = app.add_subcommand("moments", "Print s_0 .. s_n of the binomial (or Raney) sequence");
  add_pr(moments);
  moments->add_option("--n", o.n, "Last index")->required()->check(CLI::NonNegativeNumber);
  moments->add_flag("--raney", o.raney, "Raney numbers binom(np+r,n) r/(np+r) instead");
  moments->add_option("--scale", o.scale, "Multiply s_n by scale^n");
  moments->add_flag("--json", o.json);

  auto* series = app.add_subcommand("series", "Print the coefficients of a generating function");
  add_pr(series, false);
  series->add_option("--order", o.order, "Truncation order N")->check(CLI::NonNegativeNumber);
  series->add_option("--kind", o.kind, "binomial (D_{p,r}), fuss (B_p) or raney (B_p^r)")
      ->check(CLI::IsMember({"binomial", "fuss", "raney"}));
  series->add_flag("--json", o.json);

  auto* density = app.add_subcommand("density", "Evaluate the density of nu(p,r) (or mu(p,r) with --raney)");
  add_pr(density);
  density->add_option("--x", o.x, "Single point");
  density->add_option("--grid", o.grid, "a,b,count equally spaced points including both ends");
  density->add_flag("--raney", o.raney);
  density->add_flag("--json", o.json);

  auto* classify = app.add_subcommand("classify", "Decide positive definiteness of the sequence");
  add_pr(classify);
  classify->add_option("--family", o.family)->check(CLI::IsMember({"binomial", "raney"}));
  classify->add_flag("--json", o.json);

  auto* fact = app.add_subcommand("factorize", "Mellin product of modified beta laws for nu(p,r)");
  add_pr(fact);
  fact->add_flag("--json", o.json);

  auto* samp = app.add_subcommand("sample", "Draw from nu(p,r) through its Mellin factorization");
  add_pr(samp);
  samp->add_option("--count", o.count)->required();
  samp->add_option("--seed", o.seed)->required();
  samp->add_flag("--binary", o.binary, "Raw little-endian float64 instead of decimal lines");

  auto* conv = app.add_subcommand("conv-verify", "Check the free, Boolean and monotonic convolution identities");
  conv->add_flag("--all", o.all);
  conv->add_option("--id", o.id)->check(CLI::IsMember(identity_ids()));
  conv->add_option("--moments", o.conv_moments, "Number of moments compared")->check(CLI::PositiveNumber);
  conv->add_flag("--json", o.json);

  auto* cert = app.add_subcommand("certify", "Compare density moments with the binomial sequence");
  add_pr(cert);
  cert->add_option("--nmax", o.nmax)->check(CLI::NonNegativeNumber);
  cert->add_option("--tol", o.rel_tol, "Relative tolerance")->check(CLI::PositiveNumber);
  cert->add_flag("--json", o.json);

  auto* wit = app.add_subcommand("witness", "Search for a certificate that the sequence is not positive definite");
  add_pr(wit);
  wit->add_flag("--json", o.json);

  auto* fig = app.add_subcommand("figure", "Write figure data as CSV");
  fig->add_option("--id", o.figure)->required()->check(CLI::Range(1, 6));
  fig->add_option("--out", o.out_path, "Output path, - for standard output");
  fig->add_option("--params", o.params_path, "JSON file replacing the bundled figure configuration");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (moments->parsed()) return cmd_moments(o, out);
    if (series->parsed()) return cmd_series(o, out);
    if (density->parsed()) return cmd_density(o, out, err);
    if (classify->parsed()) return cmd_classify(o, out);
    if (fact->parsed()) return cmd_factorize(o, out);
    if (samp->parsed()) return cmd_sample(o, out);
    if (conv->parsed()) return cmd_conv_verify(o, out, err);
    if (cert->parsed()) return cmd_certify(o, out);
    if (wit->parsed()) return cmd_witness(o, out);
    if (fig->parsed()) return cmd_figure(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  err << app.help();
  return kUsage;
}

}  // namespace binomoment::cli
