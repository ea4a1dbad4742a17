#include "agp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "agp/analysis.hpp"
#include "agp/catalog.hpp"
#include "agp/engines.hpp"
#include "agp/periodic.hpp"
#include "agp/progressions.hpp"
#include "agp/sampling.hpp"

namespace agp::cli {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rat parse_flag(const std::string& flag, const std::string& text) {
  try {
    return Rat::parse(text);
  } catch (const Error& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

std::string float_str(double v) {
  std::ostringstream os;
  os << std::setprecision(16) << v;
  return os.str();
}

enum class Format { text, json };

void add_format(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}}));
}

// Parameters given either as --a/--d/--r/--x0 or as a catalog --name.
struct ParamFlags {
  std::string a, d, r, x0 = "1", name;

  void attach(CLI::App* cmd) {
    cmd->add_option("--a", a, "first coefficient a (rational)");
    cmd->add_option("--d", d, "common difference d (rational)");
    cmd->add_option("--r", r, "common ratio r (rational)");
    cmd->add_option("--x0", x0, "initial datum x0 (rational, default 1)");
    cmd->add_option("--name", name, "catalog entry instead of explicit parameters");
  }

  AgpParams resolve() const {
    if (!name.empty()) {
      if (!a.empty() || !d.empty() || !r.empty()) {
        throw UsageError("--name excludes --a/--d/--r");
      }
      try {
        return catalog::catalog_get(name).params;
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
    }
    if (a.empty() || d.empty() || r.empty()) {
      throw UsageError("need --a, --d and --r (or --name)");
    }
    return {parse_flag("a", a), parse_flag("d", d), parse_flag("r", r), parse_flag("x0", x0)};
  }
};

json params_json(const AgpParams& p) {
  return {{"a", p.a.to_string()}, {"d", p.d.to_string()}, {"r", p.r.to_string()},
          {"x0", p.x0.to_string()}};
}

std::string params_text(const AgpParams& p) {
  return "(a, d, r, x0) = (" + p.a.to_string() + ", " + p.d.to_string() + ", " +
         p.r.to_string() + ", " + p.x0.to_string() + ")";
}

json terms_json(const TermVector& terms) {
  json out = json::array();
  for (std::size_t k = 0; k < terms.size(); ++k) {
    out.push_back({{"n", k}, {"value", terms[k].to_string()}});
  }
  return out;
}

void print_terms(std::ostream& out, const TermVector& terms) {
  for (std::size_t k = 0; k < terms.size(); ++k) {
    out << "x_" << k << " = " << terms[k] << '\n';
  }
}

// ---------------------------------------------------------------- compute

struct ComputeOptions {
  ParamFlags params;
  std::size_t n = 10;
  std::string engine = "all";
  Format format = Format::text;
};

int cmd_compute(const ComputeOptions& o, std::ostream& out) {
  const AgpParams p = o.params.resolve();
  const bool all = o.engine == "all";
  std::optional<Engine> engine;
  if (!all) {
    try {
      engine = parse_engine(o.engine);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }

  if (!all) {
    const TermVector terms = evaluate(*engine, p, o.n);
    if (o.format == Format::json) {
      out << json{{"engine", to_string(*engine)}, {"params", params_json(p)},
                  {"terms", terms_json(terms)}}.dump(2)
          << '\n';
    } else {
      out << "# engine " << to_string(*engine) << ", " << params_text(p) << '\n';
      print_terms(out, terms);
    }
    return kOk;
  }

  const EngineReport report = cross_check(p, o.n);
  const TermVector& terms = report.runs.front().terms;
  if (o.format == Format::json) {
    json j{{"engine", "all"},
           {"params", params_json(p)},
           {"terms", terms_json(terms)},
           {"agreement", report.agreement}};
    if (report.first_divergence) {
      j["first_divergence"] = *report.first_divergence;
      j["divergent_engine"] = to_string(*report.divergent_engine);
    }
    out << j.dump(2) << '\n';
  } else {
    out << "# engine all, " << params_text(p) << '\n';
    print_terms(out, terms);
    if (report.agreement) {
      out << "agreement: conv, linear, binet, matrix, genfunc agree exactly on x_0..x_" << o.n
          << '\n';
    } else {
      out << "DISAGREEMENT: " << to_string(*report.divergent_engine)
          << " first diverges at position " << *report.first_divergence << '\n';
    }
  }
  return report.agreement ? kOk : kInternalError;
}

// ---------------------------------------------------------------- reduce

struct ReduceOptions {
  ParamFlags params;
  Format format = Format::text;
};

int cmd_reduce(const ReduceOptions& o, std::ostream& out) {
  const AgpParams p = o.params.resolve();
  const SecondOrder s = reduce(p);
  const EigenStructure e = eigenvalues(s);
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"P", s.P.to_string()},
      {"Q", s.Q.to_string()},
      {"B", s.B.to_string()},
      {"x1", s.x1.to_string()},
      {"x2", s.x2.to_string()},
      {"delta", e.delta.to_string()},
      {"lambda1", e.lambda1.to_string()},
      {"lambda2", e.lambda2.to_string()},
      {"lambda1_simplified", e.lambda1.to_pretty_string()},
      {"lambda2_simplified", e.lambda2.to_pretty_string()},
      {"class", std::string(to_string(e.root_class))},
  };
  if (o.format == Format::json) {
    json j = json::object();
    for (const auto& [k, v] : rows) j[k] = v;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [k, v] : rows) out << k << " = " << v << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- identify

struct IdentifyOptions {
  std::string P, Q, x1, x2, r;
  Format format = Format::text;
};

int cmd_identify(const IdentifyOptions& o, std::ostream& out) {
  const Rat P = parse_flag("P", o.P);
  const Rat Q = parse_flag("Q", o.Q);
  const Rat x1 = parse_flag("x1", o.x1);
  const Rat x2 = parse_flag("x2", o.x2);
  const Rat r = parse_flag("r", o.r);
  const AgpParams p = identify(P, Q, x1, x2, r);
  if (o.format == Format::json) {
    out << params_json(p).dump(2) << '\n';
  } else {
    out << "a=" << p.a << " d=" << p.d << " x0=" << p.x0 << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- sum

struct SumOptions {
  std::string kind;
  std::string a, d = "0", r = "1";
  std::uint64_t n = 10;
  Format format = Format::text;
};

int cmd_sum(const SumOptions& o, std::ostream& out) {
  using namespace progressions;
  const Rat a = parse_flag("a", o.a);
  const Rat d = parse_flag("d", o.d);
  const Rat r = parse_flag("r", o.r);

  std::vector<Rat> terms;
  Rat direct;
  Rat closed;
  std::optional<Rat> limit;
  std::string direct_label = "direct_sum";

  const auto accumulate = [&] {
    for (const Rat& t : terms) direct += t;
  };
  if (o.kind == "arithmetic" || o.kind == "geometric") {
    if (o.n == 0) throw UsageError("--n must be >= 1 for this kind");
    const bool arith = o.kind == "arithmetic";
    Rat t = a;
    for (std::uint64_t i = 1; i <= o.n; ++i) {
      terms.push_back(t);
      t = arith ? t + d : t * r;
    }
    accumulate();
    closed = arith ? arith_sum(a, d, o.n) : geo_sum(a, r, o.n);
    if (!arith && abs(r) < Rat(1)) limit = geo_limit(a, r);
  } else if (o.kind == "agp") {
    for (std::uint64_t k = 0; k <= o.n; ++k) terms.push_back(agp_term(a, d, r, k));
    accumulate();
    closed = agp_sum(a, d, r, o.n);
    if (abs(r) < Rat(1)) limit = agp_sum_limit(a, d, r);
  } else if (o.kind == "gap") {
    if (o.n == 0) throw UsageError("--n must be >= 1 for this kind");
    for (std::uint64_t k = 0; k < o.n; ++k) terms.push_back(gap_term(a, r, d, k));
    accumulate();
    closed = gap_sum(a, r, d, o.n);
  } else if (o.kind == "rec1" || o.kind == "rec2") {
    const bool first = o.kind == "rec1";
    Rat t = a;
    terms.push_back(t);
    for (std::uint64_t i = 1; i <= o.n; ++i) {
      t = first ? t * r + d : (t + d) * r;
      terms.push_back(t);
    }
    direct = terms.back();
    direct_label = "iterated_term";
    closed = first ? rec1_term(a, r, d, o.n) : rec2_term(a, r, d, o.n);
  } else {
    throw UsageError("--kind must be arithmetic|geometric|agp|gap|rec1|rec2");
  }

  const bool ok = direct == closed;
  if (o.format == Format::json) {
    json j{{"kind", o.kind}, {direct_label, direct.to_string()},
           {"closed_form", closed.to_string()}, {"agreement", ok}};
    json t = json::array();
    for (const Rat& x : terms) t.push_back(x.to_string());
    j["terms"] = t;
    if (limit) j["limit"] = limit->to_string();
    out << j.dump(2) << '\n';
  } else {
    out << "kind = " << o.kind << '\n' << "terms =";
    for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? ", " : " ") << terms[i];
    out << '\n'
        << direct_label << " = " << direct << '\n'
        << "closed_form = " << closed << '\n';
    if (limit) out << "limit = " << *limit << '\n';
    out << "status = " << (ok ? "ok" : "MISMATCH") << '\n';
  }
  return ok ? kOk : kInternalError;
}

// ---------------------------------------------------------------- catalog

struct CatalogOptions {
  std::string name;
  std::size_t count = 10;
  Format format = Format::text;
};

int cmd_catalog(const CatalogOptions& o, std::ostream& out) {
  if (o.name.empty()) {
    if (o.format == Format::json) {
      json list = json::array();
      for (const auto& e : catalog::entries()) {
        json j = params_json(e.params);
        j["name"] = e.name;
        j["index_map"] = e.index_map;
        j["description"] = e.description;
        list.push_back(j);
      }
      out << list.dump(2) << '\n';
    } else {
      for (const auto& e : catalog::entries()) {
        out << std::left << std::setw(16) << e.name << params_text(e.params) << "   "
            << e.index_map << '\n';
      }
    }
    return kOk;
  }

  const catalog::CatalogEntry& entry = catalog::catalog_get(o.name);
  const TermVector x = eval_convolution(entry.params, o.count);
  const std::vector<Rat> classical = catalog::classical_values(o.name, o.count);
  bool ok = true;
  json rows = json::array();
  for (std::size_t n = 1; n <= o.count; ++n) {
    const bool match = x[n] == classical[n - 1];
    ok = ok && match;
    rows.push_back({{"n", n}, {"value", x[n].to_string()},
                    {"classical", classical[n - 1].to_string()}, {"match", match}});
  }
  if (o.format == Format::json) {
    json j = params_json(entry.params);
    j["name"] = entry.name;
    j["index_map"] = entry.index_map;
    j["terms"] = rows;
    j["agreement"] = ok;
    out << j.dump(2) << '\n';
  } else {
    out << "# " << entry.name << ": " << entry.description << '\n'
        << "# " << params_text(entry.params) << ", " << entry.index_map << '\n';
    for (const auto& row : rows) {
      out << "x_" << row["n"].get<std::size_t>() << " = " << row["value"].get<std::string>()
          << "   classical " << row["classical"].get<std::string>()
          << (row["match"].get<bool>() ? "" : "   MISMATCH") << '\n';
    }
  }
  return ok ? kOk : kInternalError;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::size_t n = 60;
  std::size_t cases = 200;
  std::uint64_t seed = 1;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  bool all_ok = true;
  const auto line = [&](bool ok, const std::string& what) {
    all_ok = all_ok && ok;
    out << (ok ? "PASS " : "FAIL ") << what << '\n';
  };

  for (const auto& e : catalog::entries()) {
    const EngineReport report = cross_check(e.params, o.n);
    const std::vector<Rat> classical = catalog::classical_values(e.name, o.n);
    bool classical_ok = true;
    for (std::size_t k = 1; k <= o.n; ++k) {
      classical_ok = classical_ok && report.runs.front().terms[k] == classical[k - 1];
    }
    line(report.agreement && classical_ok,
         "catalog " + e.name + ": five engines and classical oracle, n = " +
             std::to_string(o.n));
  }

  sampling::Rng rng(o.seed);
  std::vector<AgpParams> samples;
  samples.reserve(o.cases);
  for (std::size_t i = 0; i < o.cases; ++i) samples.push_back(sampling::stratified_params(rng, i));

  std::vector<char> agree(samples.size(), 0);
  const auto count = static_cast<long>(samples.size());
#pragma omp parallel for schedule(dynamic, 1) default(none) shared(samples, agree, count, o)
  for (long i = 0; i < count; ++i) {
    try {
      agree[i] = cross_check(samples[i], o.n).agreement ? 1 : 0;
    } catch (...) {
      agree[i] = 0;
    }
  }
  const auto agreeing = std::count(agree.begin(), agree.end(), 1);
  line(agreeing == count, "random cross-check: " + std::to_string(agreeing) + "/" +
                              std::to_string(count) + " parameter sets, n = " +
                              std::to_string(o.n));

  std::size_t identity_ok = 0;
  std::size_t round_trip_ok = 0;
  std::size_t round_trip_total = 0;
  for (const AgpParams& p : samples) {
    const SecondOrder s = reduce(p);
    if (discriminant(s) == p.a * p.a + Rat(4) * p.d * p.r) ++identity_ok;
    if (p.r.is_zero() || (p.a.is_zero() && p.d.is_zero())) continue;
    ++round_trip_total;
    try {
      if (identify(s.P, s.Q, s.x1, s.x2, p.r) == p) ++round_trip_ok;
    } catch (const Error&) {
    }
  }
  line(identity_ok == samples.size(), "discriminant identity P^2 + 4Q = a^2 + 4dr on " +
                                          std::to_string(samples.size()) + " sets");
  line(round_trip_ok == round_trip_total,
       "identify(reduce(p)) round-trip on " + std::to_string(round_trip_total) + " sets");

  out << (all_ok ? "verify: all checks passed" : "verify: FAILURES detected") << '\n';
  return all_ok ? kOk : kInternalError;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOptions {
  ParamFlags params;
  std::uint64_t rho = 1;
  std::size_t n = 80;
  double tol = 1e-12;
  Format format = Format::text;
};

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out) {
  const AgpParams p = o.params.resolve();
  const Quad limit = ratio_limit(p, o.rho);
  const double limit_float = limit.to_double();
  const double empirical = empirical_ratio(p, o.rho, o.n);
  const double diff = std::abs(empirical - limit_float);
  const bool within = diff < o.tol;
  if (o.format == Format::json) {
    out << json{{"rho", o.rho},
                {"n", o.n},
                {"limit_exact", limit.to_string()},
                {"limit_simplified", limit.to_pretty_string()},
                {"limit_float", limit_float},
                {"empirical_float", empirical},
                {"abs_difference_float", diff},
                {"tol", o.tol},
                {"within_tol", within}}
               .dump(2)
        << '\n';
  } else {
    out << "limit of x_(n+" << o.rho << ")/x_n (exact) = " << limit.to_string() << "  ["
        << limit.to_pretty_string() << "]\n"
        << "limit (float) = " << float_str(limit_float) << '\n'
        << "empirical x_" << o.n + o.rho << "/x_" << o.n << " (float) = " << float_str(empirical)
        << '\n'
        << "abs difference (float) = " << float_str(diff) << '\n'
        << "within tol " << o.tol << " = " << (within ? "yes" : "no") << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- errata

int cmd_errata(Format format, std::ostream& out) {
  const std::vector<ErratumFinding> findings = erratum_report();
  if (format == Format::json) {
    json list = json::array();
    for (const auto& f : findings) {
      list.push_back({{"check", f.check},
                      {"claim_location", f.claim_location},
                      {"printed_form", f.printed_form},
                      {"derived_form", f.derived_form},
                      {"witness", f.witness},
                      {"printed_value", f.printed_value},
                      {"derived_value", f.derived_value},
                      {"oracle_value", f.oracle_value},
                      {"verdict", to_string(f.verdict)}});
    }
    out << list.dump(2) << '\n';
    return kOk;
  }
  for (const auto& f : findings) {
    out << '[' << to_string(f.verdict) << "] " << f.claim_location << " (" << f.check << ")\n"
        << "  printed: " << f.printed_form << "  ->  " << f.printed_value << '\n'
        << "  derived: " << f.derived_form << "  ->  " << f.derived_value << '\n'
        << "  oracle:  " << f.oracle_value << '\n'
        << "  witness: " << f.witness << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- periodic

struct PeriodicOptions {
  std::string banks;
  std::string config;
  std::string x0;
  std::size_t n = 20;
  double tol = 1e-9;
  Format format = Format::text;
};

int cmd_periodic(const PeriodicOptions& o, std::ostream& out) {
  PeriodicParams p;
  try {
    if (!o.config.empty()) {
      std::ifstream in(o.config);
      if (!in) throw UsageError("cannot read --config " + o.config);
      std::stringstream buffer;
      buffer << in.rdbuf();
      p = parse_periodic_config(buffer.str());
    } else if (!o.banks.empty()) {
      p.banks = parse_banks(o.banks);
      p.x0 = Rat(1);
    } else {
      throw UsageError("need --banks or --config");
    }
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (!o.x0.empty()) p.x0 = parse_flag("x0", o.x0);

  const TermVector terms = eval_periodic(p, o.n);
  std::optional<GrowthDiagnostic> growth;
  std::string growth_note;
  if (o.n >= 2 * p.banks.size()) {
    try {
      growth = empirical_growth(p, o.n, o.tol);
    } catch (const Error& e) {
      growth_note = e.what();
    }
  } else {
    growth_note = "n < 2m: no growth diagnostic";
  }

  if (o.format == Format::json) {
    json j{{"m", p.banks.size()},
           {"x0", p.x0.to_string()},
           {"terms", terms_json(terms)},
           {"nonvanishing_condition", p.satisfies_nonvanishing()}};
    if (growth) {
      j["growth"] = {{"step_ratios_float", growth->step_ratios},
                     {"period_ratio_float", growth->period_ratio},
                     {"previous_period_ratio_float", growth->previous_period_ratio},
                     {"tol", o.tol},
                     {"stabilized", growth->stabilized}};
    } else {
      j["growth_note"] = growth_note;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "# m = " << p.banks.size() << " banks, x0 = " << p.x0
        << (p.satisfies_nonvanishing() ? "" : " (nonvanishing condition not met)") << '\n';
    print_terms(out, terms);
    if (growth) {
      out << "step ratios (float) =";
      for (double v : growth->step_ratios) out << ' ' << float_str(v);
      out << '\n'
          << "period ratio x_n/x_(n-m) (float) = " << float_str(growth->period_ratio) << '\n'
          << "previous period ratio (float) = " << float_str(growth->previous_period_ratio)
          << '\n'
          << "stabilized within " << o.tol << " = " << (growth->stabilized ? "yes" : "no")
          << '\n';
    } else {
      out << "growth: " << growth_note << '\n';
    }
  }
  return growth || growth_note.rfind("n < 2m", 0) == 0 ? kOk : kDomainError;
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
  std::string sizes = "100,200,400,800";
  std::string engines = "conv,conv_omp,linear,binet,matrix,genfunc";
  std::string name = "even-fibonacci";
  std::size_t reps = 3;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  std::vector<std::size_t> sizes;
  for (const std::string& s : split_list(o.sizes)) {
    try {
      sizes.push_back(std::stoul(s));
    } catch (const std::exception&) {
      throw UsageError("--sizes: '" + s + "' is not a size");
    }
  }
  std::sort(sizes.begin(), sizes.end());
  const std::vector<std::string> engines = split_list(o.engines);
  for (const std::string& e : engines) {
    if (e != "conv_omp") {
      try {
        (void)parse_engine(e);
      } catch (const Error& err) {
        throw UsageError(err.what());
      }
    }
  }
  AgpParams p;
  try {
    p = catalog::catalog_get(o.name).params;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const std::size_t reps = std::max<std::size_t>(o.reps, 1);

  out << "engine,n,wall_seconds\n";
  for (const std::string& e : engines) {
    for (std::size_t n : sizes) {
      double best = 0;
      for (std::size_t rep = 0; rep < reps; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        const TermVector terms =
            e == "conv_omp" ? eval_convolution_omp(p, n) : evaluate(parse_engine(e), p, n);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (terms.size() != n + 1) return kInternalError;
        best = rep == 0 ? elapsed.count() : std::min(best, elapsed.count());
      }
      out << e << ',' << n << ',' << std::setprecision(9) << best << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact evaluation of full-history recurrences with arithmetic-geometric "
               "coefficients",
               "agp"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "evaluate x_0..x_n with one or all engines");
  compute.params.attach(c);
  c->add_option("--n", compute.n, "last index")->required();
  c->add_option("--engine", compute.engine, "conv|linear|binet|matrix|genfunc|all");
  add_format(c, compute.format);

  ReduceOptions reduce_opts;
  auto* rd = app.add_subcommand("reduce", "second-order reduction and eigenstructure");
  reduce_opts.params.attach(rd);
  add_format(rd, reduce_opts.format);

  IdentifyOptions ident;
  auto* id = app.add_subcommand("identify", "recover (a, d, x0) from a second-order system");
  id->add_option("--P", ident.P)->required();
  id->add_option("--Q", ident.Q)->required();
  id->add_option("--x1", ident.x1)->required();
  id->add_option("--x2", ident.x2)->required();
  id->add_option("--r", ident.r)->required();
  add_format(id, ident.format);

  SumOptions sum;
  auto* sm = app.add_subcommand("sum", "progression terms and closed-form sums");
  sm->add_option("--kind", sum.kind, "arithmetic|geometric|agp|gap|rec1|rec2")->required();
  sm->add_option("--a", sum.a)->required();
  sm->add_option("--d", sum.d);
  sm->add_option("--r", sum.r);
  sm->add_option("--n", sum.n);
  add_format(sm, sum.format);

  CatalogOptions cat;
  auto* ct = app.add_subcommand("catalog", "list named sequences or expand one");
  ct->add_option("--name", cat.name);
  ct->add_option("--count", cat.count);
  add_format(ct, cat.format);

  VerifyOptions ver;
  auto* vf = app.add_subcommand("verify", "cross-check engines and identities");
  vf->add_option("--n", ver.n);
  vf->add_option("--cases", ver.cases);
  vf->add_option("--seed", ver.seed);

  AnalyzeOptions an;
  auto* az = app.add_subcommand("analyze", "ratio limits and empirical ratios");
  an.params.attach(az);
  az->add_option("--rho", an.rho)->check(CLI::PositiveNumber);
  az->add_option("--n", an.n)->check(CLI::PositiveNumber);
  az->add_option("--tol", an.tol);
  add_format(az, an.format);

  Format errata_format = Format::text;
  auto* er = app.add_subcommand("errata", "check printed formulas against the oracle");
  add_format(er, errata_format);

  PeriodicOptions per;
  auto* pd = app.add_subcommand("periodic", "rotating coefficient banks");
  pd->add_option("--banks", per.banks, "\"a,d,r;a,d,r;...\"");
  pd->add_option("--config", per.config, "file with one 'a d r' bank per line");
  pd->add_option("--x0", per.x0);
  pd->add_option("--n", per.n);
  pd->add_option("--tol", per.tol);
  add_format(pd, per.format);

  BenchOptions bench;
  auto* bn = app.add_subcommand("bench", "time each engine over a grid of n; CSV");
  bn->add_option("--sizes", bench.sizes);
  bn->add_option("--engines", bench.engines);
  bn->add_option("--name", bench.name);
  bn->add_option("--reps", bench.reps);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out);
    if (rd->parsed()) return cmd_reduce(reduce_opts, out);
    if (id->parsed()) return cmd_identify(ident, out);
    if (sm->parsed()) return cmd_sum(sum, out);
    if (ct->parsed()) return cmd_catalog(cat, out);
    if (vf->parsed()) return cmd_verify(ver, out);
    if (az->parsed()) return cmd_analyze(an, out);
    if (er->parsed()) return cmd_errata(errata_format, out);
    if (pd->parsed()) return cmd_periodic(per, out);
    if (bn->parsed()) return cmd_bench(bench, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    if (e.kind() == ErrorKind::internal_consistency) return kInternalError;
    if (e.kind() == ErrorKind::parse) return kUsageError;
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace agp::cli
