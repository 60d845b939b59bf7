#include "quotcoh/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <sstream>

#include "quotcoh/poincare.hpp"
#include "quotcoh/quot_pullback.hpp"
#include "quotcoh/restriction.hpp"
#include "quotcoh/verify.hpp"

namespace quotcoh {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError(flag + ": expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

struct Options {
  std::string genus = "0";
  int factors = -1;
  std::string rank = "0";
  std::string degrees;
  std::uint64_t seed = 0;
  std::string format = "text";
  int max_co = -1;
  int max_degree = -1;
  int max_t = -1;

  std::string v, w, u, a, method = "recursion", suite = "all", kind, text;
  bool equivariant = false;
  bool genus_given = false;
  int n = -1, r = -1, length = -1;

  std::vector<int> genera() const {
    auto g = parse_int_list(genus, "--genus");
    if (g.empty()) throw UsageError("--genus: empty list");
    for (int x : g)
      if (x < 0) throw UsageError("--genus: genus must be non-negative");
    return g;
  }
  int single_genus() const {
    auto g = genera();
    if (g.size() != 1) throw UsageError("--genus: this command takes a single genus");
    return g.front();
  }
  int parsed_rank() const {
    if (rank == "inf") return kUnboundedRank;
    auto r = parse_int_list(rank, "--rank");
    if (r.size() != 1 || r.front() < 0) throw UsageError("--rank: expected a non-negative integer or 'inf'");
    return r.front();
  }
  std::vector<long> parsed_degrees() const {
    auto d = parse_int_list(degrees, "--degrees");
    return {d.begin(), d.end()};
  }
  ContextPtr context(int n_factors) const {
    if (factors >= 0 && factors != n_factors)
      throw UsageError("--factors " + std::to_string(factors) + " does not match a weight vector of length " +
                       std::to_string(n_factors));
    return make_context(single_genus(), n_factors, parsed_rank(), parsed_degrees());
  }
};

WeightVector weights_flag(const std::string& text, const std::string& flag) {
  if (text.empty()) throw UsageError(flag + " is required");
  auto v = parse_int_list(text, flag);
  for (int x : v)
    if (x < 0) throw UsageError(flag + ": entries must be non-negative");
  return v;
}

json context_json(const RingContext& ctx) {
  json out{{"genus", ctx.genus}, {"factors", ctx.factors}};
  out["rank"] = ctx.unbounded() ? json("inf") : json(ctx.rank);
  if (!ctx.degrees.empty()) out["degrees"] = ctx.degrees;
  return out;
}

void emit(std::ostream& out, const Options& o, const json& payload, const std::string& text) {
  if (o.format == "json") {
    out << payload.dump(2) << "\n";
  } else {
    out << text;
  }
}

int cmd_xi(const Options& o, std::ostream& out) {
  const WeightVector v = weights_flag(o.v, "--v");
  auto ctx = o.context(static_cast<int>(v.size()));
  XiEngine engine(ctx);
  RingElement x = o.equivariant ? engine.xi_equivariant(v) : engine.xi(v);
  json payload{{"command", "xi"}, {"v", to_string(v)}, {"equivariant", o.equivariant}, {"context", context_json(*ctx)},
               {"result", format(x)}};
  emit(out, o, payload, format(x) + "\n");
  return kExitSuccess;
}

int cmd_psi(const Options& o, std::ostream& out) {
  const WeightVector u = weights_flag(o.u, "--u");
  if (!is_decreasing(u)) throw UsageError("--u must be decreasing");
  auto ctx = o.context(static_cast<int>(u.size()));
  QuotPullback pullback(std::make_shared<XiEngine>(ctx));
  const RingElement a = o.a.empty() ? RingElement::one(ctx) : parse(ctx, o.a);
  json payload{{"command", "psi"}, {"u", to_string(u)}, {"a", format(a)}, {"context", context_json(*ctx)}};
  std::ostringstream text;
  const bool averaged = !pullback.stabilizer_invariant(u, a);
  payload["averaged"] = averaged;
  if (averaged) text << "note: a is not St(u)-invariant; using its St(u)-average\n";
  int code = kExitSuccess;
  if (o.method == "recursion") {
    RingElement x = pullback.psi(u, a);
    payload["result"] = format(x);
    text << format(x) << "\n";
  } else if (o.method == "combinatorial") {
    RingElement x = pullback.psi_combinatorial(u, a);
    payload["result"] = format(x);
    text << format(x) << "\n";
  } else {
    RingElement x = pullback.psi(u, a);
    RingElement y = pullback.psi_combinatorial(u, a);
    const bool agree = x == y;
    payload["recursion"] = format(x);
    payload["combinatorial"] = format(y);
    payload["agree"] = agree;
    text << "recursion:     " << format(x) << "\n"
         << "combinatorial: " << format(y) << "\n"
         << "agree: " << (agree ? "true" : "false") << "\n";
    if (!agree) code = kExitIdentityFailure;
  }
  emit(out, o, payload, text.str());
  return code;
}

int cmd_restrict(const Options& o, std::ostream& out) {
  const WeightVector v = weights_flag(o.v, "--v");
  const WeightVector w = weights_flag(o.w, "--w");
  if (w.size() != v.size()) throw UsageError("--v and --w must have the same length");
  auto ctx = o.context(static_cast<int>(v.size()));
  if (!ctx->equivariant()) throw UsageError("restrict needs --rank >= 1");
  XiEngine engine(ctx);
  const RingElement image = restrict(engine.xi_equivariant(v), w);
  const RingElement top = top_term(image);
  const auto degree = t_degree(image);
  json payload{{"command", "restrict"}, {"v", to_string(v)}, {"w", to_string(w)}, {"context", context_json(*ctx)},
               {"result", format(image)}, {"top_term", format(top)}};
  payload["t_degree"] = degree ? json(*degree) : json(nullptr);
  std::ostringstream text;
  text << "restriction: " << format(image) << "\n"
       << "top term:    " << format(top) << "\n"
       << "t-degree:    " << (degree ? std::to_string(*degree) : "-inf") << "\n";
  emit(out, o, payload, text.str());
  return kExitSuccess;
}

std::string poly_text(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    std::string c = p[k].get_str();
    if (!out.empty()) {
      if (p[k] < 0) {
        out += " - ";
        c = c.substr(1);
      } else {
        out += " + ";
      }
    }
    if (k == 0) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += k == 1 ? "t" : "t^" + std::to_string(k);
    }
  }
  return out;
}

int cmd_poincare(const Options& o, std::ostream& out) {
  const int g = o.single_genus();
  Poly p;
  json params{{"genus", g}};
  if (o.kind == "sym") {
    if (o.length < 0) throw UsageError("poincare sym needs --length");
    p = sym_prod_poincare(g, o.length);
    params["length"] = o.length;
  } else if (o.kind == "quot") {
    if (o.length < 0) throw UsageError("poincare quot needs --length");
    int r = o.r;
    if (r < 0) r = o.parsed_rank();
    if (r == 0) throw UsageError("poincare quot needs --r (or --rank) >= 1 or inf");
    p = quot_poincare(g, r, o.length, o.max_t);
    params["r"] = r == kUnboundedRank ? json("inf") : json(r);
    params["length"] = o.length;
  } else if (o.kind == "filt") {
    int r = o.r >= 0 ? o.r : o.parsed_rank();
    if (r < 1) throw UsageError("poincare filt needs a finite --r >= 1");
    if (o.n < 0) throw UsageError("poincare filt needs --n");
    p = truncate(filt_poincare(g, r, o.n), o.max_t);
    params["r"] = r;
    params["n"] = o.n;
  } else if (o.kind == "limit") {
    if (o.max_t < 0) throw UsageError("poincare limit needs --max-t");
    p = infinite_quot_product(g, o.max_t);
  } else {
    throw UsageError("poincare: expected one of sym, quot, filt, limit");
  }
  if (o.max_t >= 0) params["max_t"] = o.max_t;
  json coefficients = json::array();
  for (const auto& c : p) coefficients.push_back(c.get_str());
  json payload{{"command", "poincare"}, {"kind", o.kind}, {"parameters", params}, {"coefficients", coefficients}};
  std::ostringstream text;
  if (o.format == "table") {
    text << "degree\tcoefficient\n";
    for (std::size_t k = 0; k < p.size(); ++k) text << k << "\t" << p[k].get_str() << "\n";
  } else {
    text << poly_text(p) << "\n";
  }
  emit(out, o, payload, text.str());
  return kExitSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions v;
  if (o.genus_given) v.genera = o.genera();
  if (o.n >= 0) v.n = o.n;
  if (o.rank != "0") {
    const int r = o.parsed_rank();
    if (r < 1) throw UsageError("verify: --rank must be a finite positive integer");
    v.rank = r;
  }
  if (o.r >= 1) v.rank = o.r;
  if (o.max_co >= 0) v.max_co = o.max_co;
  if (o.max_degree >= 0) v.max_degree = o.max_degree;
  if (o.max_t >= 0) v.max_t = o.max_t;
  v.seed = o.seed;
  if (o.suite != "all" &&
      std::find(suite_names().begin(), suite_names().end(), o.suite) == suite_names().end())
    throw UsageError("unknown suite '" + o.suite + "'");
  SuiteReport report = run_suite(o.suite, v);
  emit(out, o, report.to_json(), report.to_text());
  return report.ok() ? kExitSuccess : kExitIdentityFailure;
}

int cmd_parse(const Options& o, std::ostream& out) {
  if (o.factors < 0) throw UsageError("parse needs --factors");
  auto ctx = o.context(o.factors);
  RingElement x = parse(ctx, o.text);
  json payload{{"command", "parse"}, {"context", context_json(*ctx)}, {"result", format(x)}};
  auto degree = cohomological_degree(x);
  payload["degree"] = degree ? json(*degree) : json(nullptr);
  emit(out, o, payload, format(x) + "\n");
  return kExitSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cohomology of quot and filt schemes on a curve: fixed-point classes, pullbacks, series."};
  app.name("quotcoh");
  app.require_subcommand(1);
  app.fallthrough();
  auto* genus = app.add_option("--genus", o.genus, "Genus of the curve (comma-separated list for verify)");
  app.add_option("--factors", o.factors, "Number of curve factors");
  app.add_option("--rank", o.rank, "Equivariant rank: integer or 'inf'");
  app.add_option("--degrees", o.degrees, "Degrees of the line bundles L_0, L_1, ...");
  app.add_option("--seed", o.seed, "Seed for randomized cases");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "table"}));
  app.add_option("--max-co", o.max_co, "Bound on co(v)");
  app.add_option("--max-degree", o.max_degree, "Bound on cohomological degree");
  app.add_option("--max-t", o.max_t, "Truncation degree in t");

  auto* xi = app.add_subcommand("xi", "Fixed-point class xi(v)");
  xi->add_option("--v", o.v, "Weight vector")->required();
  xi->add_flag("--equivariant", o.equivariant, "Equivariant class (needs --rank)");

  auto* psi = app.add_subcommand("psi", "Pullback of xi^Q(u; a) to the complete filt scheme");
  psi->add_option("--u", o.u, "Decreasing weight vector")->required();
  psi->add_option("--a", o.a, "Class a in the element grammar (default: the unit)");
  psi->add_option("--method", o.method, "recursion, combinatorial or both")
      ->check(CLI::IsMember({"recursion", "combinatorial", "both"}));

  auto* res = app.add_subcommand("restrict", "Restriction of xi(v) to the fixed component F(w)");
  res->add_option("--v", o.v, "Weight vector of the class")->required();
  res->add_option("--w", o.w, "Weight vector of the fixed component")->required();

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomials");
  poincare->add_option("kind", o.kind, "sym, quot, filt or limit")->required();
  poincare->add_option("--r", o.r, "Rank");
  poincare->add_option("--length", o.length, "Length l (or m for sym)");
  poincare->add_option("--n", o.n, "Number of factors (filt)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "Suite name or 'all'");
  verify->add_option("--n", o.n, "Restrict to this number of factors");
  verify->add_option("--r", o.r, "Restrict to this rank");

  auto* parse_cmd = app.add_subcommand("parse", "Parse and print an element in canonical form");
  parse_cmd->add_option("text", o.text, "Element text")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }
  o.genus_given = genus->count() > 0;

  try {
    if (app.got_subcommand(xi)) return cmd_xi(o, out);
    if (app.got_subcommand(psi)) return cmd_psi(o, out);
    if (app.got_subcommand(res)) return cmd_restrict(o, out);
    if (app.got_subcommand(poincare)) return cmd_poincare(o, out);
    if (app.got_subcommand(verify)) return cmd_verify(o, out);
    if (app.got_subcommand(parse_cmd)) return cmd_parse(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace quotcoh
