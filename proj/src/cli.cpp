#include "secant/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

#include "secant/acceptance.hpp"
#include "secant/complex.hpp"
#include "secant/counting.hpp"
#include "secant/errors.hpp"
#include "secant/groebner.hpp"
#include "secant/shelling.hpp"
#include "secant/tensor.hpp"

namespace secant::cli {

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kReportSchema = 1;

using json = nlohmann::json;

struct Options {
  int a = 0;
  int b = 0;
  int t = 0;
  int len = 0;
  int grid = 0;
  std::size_t index = 0;
  std::string method;
  std::string field = "q";
  std::uint64_t seed = 1;
  std::size_t budget = 0;
  std::string format = "json";
  unsigned jobs = 1;
  std::string input;
  bool certify_only = false;
  bool timing = false;
  bool report = false;
  bool no_stretch = false;
  bool dense = false;
  int rank = 0;

  CLI::Option* t_opt = nullptr;
  CLI::Option* a_opt = nullptr;
  CLI::Option* b_opt = nullptr;
  CLI::Option* len_opt = nullptr;
  CLI::Option* budget_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

// Claim assertion failed after a successful computation.
struct ClaimFailed {
  json result;
  std::string message;
};

json big(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json big_list(const std::vector<BigInt>& v) {
  auto out = json::array();
  for (const auto& x : v) out.push_back(big(x));
  return out;
}

json point_json(const GridPoint& p) { return json::array({p.row, p.col}); }

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(what + " is not valid JSON: " + e.what());
  }
}

class Command {
 public:
  Command(std::string name, Options& o, std::ostream& out) : name_(std::move(name)), o_(o), out_(out) {}

  SegreParams params(bool need_t) const {
    if (!o_.a_opt->count() || !o_.b_opt->count()) throw ValidationError("--a and --b are required");
    SegreParams p{o_.a, o_.b, std::nullopt};
    if (o_.t_opt->count()) p.t = o_.t;
    else if (need_t) throw ValidationError("--t is required");
    p.validate();
    return p;
  }

  json params_json() const {
    json p = json::object();
    if (o_.a_opt->count()) p["a"] = o_.a;
    if (o_.b_opt->count()) p["b"] = o_.b;
    if (o_.t_opt->count()) p["t"] = o_.t;
    if (!o_.method.empty()) p["method"] = o_.method;
    if (o_.seed_opt->count()) p["seed"] = o_.seed;
    if (o_.budget_opt->count()) p["budget"] = o_.budget;
    return p;
  }

  json& counters() { return counters_; }

  void require_format(std::initializer_list<const char*> allowed) const {
    for (const char* f : allowed)
      if (o_.format == f) return;
    throw ValidationError("--format " + o_.format + " is not available for " + name_);
  }

  // Prints a JSON result (wrapped in a report when requested) or the text form.
  void emit(const json& result, const std::string& text = {}) {
    if (o_.format == "text" && !text.empty()) {
      out_ << text;
      if (text.back() != '\n') out_ << '\n';
      return;
    }
    json body = result;
    if (o_.report) {
      body = json::object();
      body["schema"] = kReportSchema;
      body["version"] = kVersion;
      body["command"] = name_;
      body["params"] = params_json();
      body["results"] = result;
      body["counters"] = counters_;
    }
    if (o_.timing) body["seconds"] = elapsed();
    out_ << body.dump() << '\n';
  }

  double elapsed() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::string name_;
  Options& o_;
  std::ostream& out_;
  json counters_ = json::object();
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string label(const SegreParams& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + (p.t ? "," + std::to_string(*p.t) : "") + ")";
}

void cmd_degree(Command& c, const Options& o, std::ostream& out) {
  c.require_format({"json", "csv", "text"});
  const std::string method = o.method.empty() ? "formula" : o.method;
  if (method != "formula" && method != "brute")
    throw ValidationError("--method for degree is formula or brute, got '" + method + "'");
  auto compute = [&](const SegreParams& p) {
    p.require_secant_regime();
    return method == "brute" ? brute_force_degree(p, o.jobs) : degree(p);
  };

  std::vector<SegreParams> rows;
  if (o.grid) {
    for (int a = 2; a <= o.grid; ++a)
      for (int b = a; b <= o.grid; ++b)
        for (int t = 1; t < a; ++t) rows.push_back({a, b, t});
  } else {
    const auto p = c.params(false);
    if (p.t) rows.push_back(p);
    else
      for (int t = 1; t < p.a; ++t) rows.push_back({p.a, p.b, t});
  }

  if (o.format == "csv") {
    out << "a,b,t,degree\n";
    for (const auto& p : rows) out << p.a << ',' << p.b << ',' << *p.t << ',' << compute(p).get_str() << '\n';
    return;
  }
  if (rows.size() == 1 && !o.grid) {
    const auto d = compute(rows[0]);
    c.emit({{"degree", big(d)}}, d.get_str());
    return;
  }
  json table = json::array();
  std::ostringstream text;
  for (const auto& p : rows) {
    const auto d = compute(p);
    table.push_back({{"a", p.a}, {"b", p.b}, {"t", *p.t}, {"degree", big(d)}});
    text << label(p) << ' ' << d.get_str() << '\n';
  }
  c.emit({{"degrees", table}}, text.str());
}

void cmd_facets(Command& c, const Options& o, std::ostream& out) {
  c.require_format({"json", "text"});
  const auto p = c.params(true);
  p.require_secant_regime();
  const std::size_t cap = o.budget ? o.budget : ShellingOptions{}.max_facets;
  const BigInt total = degree(p);
  if (total > static_cast<unsigned long>(cap))
    throw BudgetExceededError(label(p) + " has " + total.get_str() + " facets, above the budget of " +
                              std::to_string(cap));
  bool first = true;
  enumerate_facets(p, [&](const Facet& f) {
    if (o.format == "text") {
      if (!first) out << '\n';
      out << render_p_prime(f, p);
    } else {
      out << facet_to_json(f).dump() << '\n';
    }
    first = false;
  });
}

HVectorOptions h_options(const Options& o) {
  HVectorOptions opt;
  opt.shelling.jobs = o.jobs;
  if (o.budget) {
    opt.shelling.max_facets = o.budget;
    opt.monomial.max_memo_entries = o.budget;
    opt.max_f_vector_states = o.budget;
  }
  return opt;
}

void cmd_hvector(Command& c, const Options& o) {
  c.require_format({"json", "text"});
  const auto p = c.params(true);
  p.require_secant_regime();
  const HMethod method = parse_h_method(o.method.empty() ? "monomial" : o.method);
  const auto h = h_vector(p, method, h_options(o));
  std::ostringstream text;
  for (std::size_t i = 0; i < h.size(); ++i) text << (i ? " " : "") << h[i].get_str();
  c.emit({{"h", big_list(h)}}, text.str());
}

void cmd_regularity(Command& c, const Options& o) {
  c.require_format({"json", "text"});
  const auto p = c.params(true);
  p.require_secant_regime();
  const HMethod method = parse_h_method(o.method.empty() ? "monomial" : o.method);
  const auto h = h_vector(p, method, h_options(o));
  const int reg = regularity(h);
  const int bound = p.a * *p.t;
  const bool sharp = p.b >= 2 * *p.t;
  json result = {{"regularity", reg}, {"bound", bound}, {"sharp_expected", sharp}};
  const bool ok = reg <= bound && (!sharp || reg == bound);
  result["claim_holds"] = ok;
  if (!ok) throw ClaimFailed{result, "regularity " + std::to_string(reg) + " violates the bound " + std::to_string(bound)};
  c.emit(result, std::to_string(reg));
}

void cmd_shelling_certify(Command& c, const Options& o) {
  c.require_format({"json", "text"});
  const auto p = c.params(true);
  p.require_secant_regime();
  ShellingOptions so;
  so.certify = false;
  so.jobs = o.jobs;
  if (o.budget) so.max_facets = o.budget;
  const auto order = shelling_order(p, so);
  const auto cert = certify_shelling(order, o.jobs);
  c.counters()["facets"] = order.size();
  json result = {{"instance", label(p)}, {"facets", order.size()}, {"certified", cert.ok}};
  if (!cert.ok) {
    result["witness"] = {cert.witness->first, cert.witness->second};
    throw ClaimFailed{result, "shelling condition fails at facet " + std::to_string(cert.witness->first)};
  }
  c.emit(result, "certified " + std::to_string(order.size()) + " facets");
}

void cmd_groebner_check(Command& c, const Options& o) {
  c.require_format({"json", "text"});
  const auto p = c.params(true);
  p.require_secant_regime();
  const Ring ring = build_ring(p, Field::parse(o.field));
  GroebnerBudget budget;
  if (o.budget) budget.max_spairs = o.budget;
  const int s = *p.t + 1;
  const auto minors = all_unfolding_minors(ring, s);
  const auto check = is_groebner(minors, ring.field(), budget);
  c.counters()["generators"] = minors.size();
  c.counters()["spairs_skipped"] = check.spairs_skipped;

  json result = {{"claim", std::to_string(s) + "-minors of both unfoldings form a Groebner basis"},
                 {"instance", label(p)},
                 {"field", ring.field().name()},
                 {"generators", minors.size()},
                 {"verdict", check.ok ? "pass" : "fail"},
                 {"spairs_checked", check.spairs_checked}};
  if (!check.ok) {
    result["failing_pair"] = {check.failing_pair->first, check.failing_pair->second};
    result["remainder"] = ring.to_string(check.failing_remainder);
    throw ClaimFailed{result, "S-pair has a nonzero remainder"};
  }
  if (!o.certify_only) {
    const auto ini = initial_ideal(GroebnerBasis::certify(minors, ring.field(), budget));
    const bool same = ini == chain_ideal(ring, s);
    result["initial_ideal_generators"] = ini.generators().size();
    result["initial_ideal_is_chain_ideal"] = same;
    result["claim"] = result["claim"].get<std::string>() + " whose initial ideal is the " + std::to_string(s) +
                      "-chain ideal";
    if (!same) {
      result["verdict"] = "fail";
      throw ClaimFailed{result, "initial ideal differs from the chain ideal"};
    }
  }
  c.emit(result, "pass: " + std::to_string(check.spairs_checked) + " S-pairs reduced to 0");
}

void cmd_chains(Command& c, const Options& o) {
  c.require_format({"json", "text"});
  const auto p = c.params(false);
  int len = 0;
  if (o.len_opt->count()) len = o.len;
  else if (p.t) len = *p.t + 1;
  else throw ValidationError("chains needs --len or --t");
  if (len < 1) throw ValidationError("chain length must be positive");
  const Poset poset(p);
  const auto chains = poset.enumerate_chains(len);
  auto list = json::array();
  std::ostringstream text;
  for (const auto& ch : chains) {
    auto pts = json::array();
    for (std::size_t i = 0; i < ch.size(); ++i) {
      pts.push_back(point_json(ch[i]));
      text << (i ? " " : "") << '(' << ch[i].row << ',' << ch[i].col << ')';
    }
    text << '\n';
    list.push_back(std::move(pts));
  }
  c.emit({{"len", len}, {"count", chains.size()}, {"chains", list}}, chains.empty() ? "no chains\n" : text.str());
}

void cmd_membership(Command& c, const Options& o) {
  c.require_format({"json", "text"});
  if (!o.t_opt->count()) throw ValidationError("--t is required");
  Tensor3 x;
  if (!o.input.empty()) {
    x = tensor_from_json(parse_json(read_input(o.input), "tensor input"));
  } else {
    const auto p = c.params(false);
    x = o.dense ? random_dense_tensor(p.a, p.b, o.seed) : random_rank_tensor(p.a, p.b, o.rank ? o.rank : o.t, o.seed);
  }
  const auto m = membership(x, o.t);
  json result = {{"member", m.member}, {"rank2", m.rank2}, {"rank3", m.rank3}};
  if (m.witness) {
    auto one_based = [](const std::vector<int>& v) {
      auto out = json::array();
      for (int i : v) out.push_back(i + 1);
      return out;
    };
    result["witness_minor"] = {{"unfolding", m.witness->unfolding},
                               {"rows", one_based(m.witness->rows)},
                               {"cols", one_based(m.witness->cols)},
                               {"value", m.witness->value.get_str()},
                               {"verified", verify_witness(x, *m.witness)}};
  }
  std::string text = m.member ? "member" : "not a member";
  text += " (rank2=" + std::to_string(m.rank2) + ", rank3=" + std::to_string(m.rank3) + ")";
  c.emit(result, text);
}

void cmd_render(Command& c, const Options& o, std::ostream& out) {
  c.require_format({"json", "text"});
  Facet facet;
  SegreParams p;
  if (!o.input.empty()) {
    p = c.params(true);
    facet = facet_from_json(parse_json(read_input(o.input), "facet input"), p);
  } else {
    p = c.params(true);
    p.require_secant_regime();
    const std::size_t cap = o.budget ? o.budget : ShellingOptions{}.max_facets;
    std::size_t seen = 0;
    bool found = false;
    // Enumeration cannot stop early, so keep the wanted facet and count on.
    enumerate_facets(p, [&](const Facet& f) {
      if (seen == o.index) {
        facet = f;
        found = true;
      }
      if (++seen > cap && !found)
        throw BudgetExceededError("facet " + std::to_string(o.index) + " lies beyond the budget of " +
                                  std::to_string(cap));
    });
    if (!found) throw ValidationError("facet index " + std::to_string(o.index) + " out of range (" +
                                      std::to_string(seen) + " facets)");
  }
  const auto grid = render_p_prime(facet, p);
  if (o.format == "json") c.emit({{"grid", grid}, {"facet", facet_to_json(facet)}});
  else out << grid;
}

int cmd_repro(Command& c, const Options& o, std::ostream& out) {
  c.require_format({"json", "text"});
  AcceptanceOptions opt;
  opt.jobs = o.jobs;
  opt.include_stretch = !o.no_stretch;
  if (o.seed_opt->count()) opt.seed = o.seed;
  int failed = 0;
  json rows = json::array();
  for (const auto& id : criterion_ids()) {
    const auto r = run_criterion(id, opt);
    if (!r.passed && !r.skipped) ++failed;
    const char* verdict = r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL";
    if (o.format == "json") {
      json row = {{"id", r.id}, {"title", r.title}, {"verdict", verdict}, {"detail", r.detail}};
      if (o.timing) row["seconds"] = r.seconds;
      rows.push_back(std::move(row));
    } else {
      out << r.id << std::string(r.id.size() < 5 ? 5 - r.id.size() : 0, ' ') << ' ' << verdict << "  " << r.title
          << "  " << r.detail;
      if (o.timing) out << "  [" << r.seconds << " s]";
      out << '\n';
    }
  }
  if (o.format == "json") c.emit({{"criteria", rows}, {"failed", failed}});
  else out << failed << " failed\n";
  return failed ? kClaimFailed : kOk;
}

void add_params(CLI::App* sub, Options& o) {
  o.a_opt = sub->add_option("--a", o.a, "rows of each slice");
  o.b_opt = sub->add_option("--b", o.b, "columns of each slice");
  o.t_opt = sub->add_option("--t", o.t, "secant index");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  o.budget_opt = sub->add_option("--budget", o.budget, "resource cap (facets, S-pairs or memo entries)");
  o.seed_opt = sub->add_option("--seed", o.seed, "random seed");
  sub->add_flag("--timing", o.timing, "add wall time to the output");
  sub->add_flag("--report", o.report, "wrap results in a versioned run report");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secant varieties of Segre varieties of shape (2,a,b)", "secant"};
  app.require_subcommand(1);

  struct Entry {
    CLI::App* app;
    std::string name;
  };
  std::vector<Entry> subs;
  auto make = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    subs.push_back({sub, name});
    return sub;
  };

  auto* degree_cmd = make("degree", "degree of the secant variety");
  auto* facets_cmd = make("facets", "facets of the initial complex as JSON lines");
  auto* hvector_cmd = make("hvector", "h-vector (Hilbert numerator)");
  auto* reg_cmd = make("regularity", "top nonzero h-index against the bound at");
  auto* shell_cmd = make("shelling-certify", "build and certify the shelling order");
  auto* gb_cmd = make("groebner-check", "certify the (t+1)-minors as a Groebner basis");
  auto* chains_cmd = make("chains", "chains of the poset P");
  auto* member_cmd = make("membership", "test a tensor against the rank conditions");
  auto* render_cmd = make("render", "draw a facet on P'");
  auto* repro_cmd = make("repro", "run every acceptance criterion");

  // One Options per subcommand; only the parsed one is used.
  std::vector<Options> per(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    add_params(subs[i].app, per[i]);
    add_common(subs[i].app, per[i]);
  }
  auto index_of = [&](CLI::App* s) {
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (subs[i].app == s) return i;
    return std::size_t{0};
  };
  auto& od = per[index_of(degree_cmd)];
  degree_cmd->add_option("--method", od.method, "formula or brute");
  degree_cmd->add_option("--grid", od.grid, "table over 2 <= a <= b <= N, t < a")->check(CLI::Range(2, 9));
  auto& oh = per[index_of(hvector_cmd)];
  hvector_cmd->add_option("--method", oh.method, "shelling, f-vector or monomial");
  auto& orr = per[index_of(reg_cmd)];
  reg_cmd->add_option("--method", orr.method, "shelling, f-vector or monomial");
  auto& og = per[index_of(gb_cmd)];
  gb_cmd->add_option("--field", og.field, "q, f2, f3 or f<p>");
  gb_cmd->add_flag("--certify-only", og.certify_only, "skip the initial ideal comparison");
  auto& oc = per[index_of(chains_cmd)];
  oc.len_opt = chains_cmd->add_option("--len", oc.len, "number of elements per chain");
  auto& om = per[index_of(member_cmd)];
  member_cmd->add_option("--input", om.input, "tensor JSON file, - for stdin");
  member_cmd->add_option("--rank", om.rank, "terms of the random sample (default t)");
  member_cmd->add_flag("--dense", om.dense, "sample independent entries instead");
  auto& ore = per[index_of(render_cmd)];
  render_cmd->add_option("--input", ore.input, "facet JSON file, - for stdin");
  render_cmd->add_option("--index", ore.index, "facet position in enumeration order");
  auto& orp = per[index_of(repro_cmd)];
  orp.format = "text";
  repro_cmd->add_flag("--no-stretch", orp.no_stretch, "skip AC13");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  std::size_t which = 0;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i].app->parsed()) which = i;
  Options& opt = per[which];
  Command cmd(subs[which].name, opt, out);
  const auto* chosen = subs[which].app;

  try {
    if (chosen == degree_cmd) cmd_degree(cmd, opt, out);
    else if (chosen == facets_cmd) cmd_facets(cmd, opt, out);
    else if (chosen == hvector_cmd) cmd_hvector(cmd, opt);
    else if (chosen == reg_cmd) cmd_regularity(cmd, opt);
    else if (chosen == shell_cmd) cmd_shelling_certify(cmd, opt);
    else if (chosen == gb_cmd) cmd_groebner_check(cmd, opt);
    else if (chosen == chains_cmd) cmd_chains(cmd, opt);
    else if (chosen == member_cmd) cmd_membership(cmd, opt);
    else if (chosen == render_cmd) cmd_render(cmd, opt, out);
    else if (chosen == repro_cmd) return cmd_repro(cmd, opt, out);
    return kOk;
  } catch (const ClaimFailed& f) {
    cmd.emit(f.result);
    err << "claim failed: " << f.message << '\n';
    return kClaimFailed;
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const UnsupportedRegimeError& e) {
    err << "unsupported parameters: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace secant::cli
