#include "conescope_app/runner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "conescope/cone_geometry.hpp"
#include "conescope/descriptors.hpp"
#include "conescope/dot_export.hpp"
#include "conescope/errors.hpp"
#include "conescope/regular_cone.hpp"

namespace conescope::app {

namespace {

struct Context {
  const ExperimentConfig& config;
  const RunOptions& options;
  GroupModel model;
  std::optional<Order> order;
  std::optional<ConeDfa> dfa;
  Json inputs;

  int width() const { return options.width.value_or(config.width.value_or(1)); }
  int radius() const { return options.radius.value_or(config.radius.value_or(4)); }
  int max_length() const { return options.max_length.value_or(config.max_length.value_or(4 * radius())); }

  const Order& require_order() const {
    if (!order) throw UsageError("command " + options.command + " needs an \"order\" in the config");
    return *order;
  }
  const ConeDfa& require_dfa() const {
    if (!dfa) throw UsageError("command " + options.command + " needs an \"automaton\" in the config");
    return *dfa;
  }
  Element word(const std::optional<std::string>& w, const char* key) const {
    if (!w) throw UsageError(std::string("command ") + options.command + " needs \"" + key + "\" in the config");
    return model.parse(*w);
  }
};

struct Outcome {
  Outcome(std::string v, int code) : verdict(std::move(v)), exit_code(code) {}

  std::string verdict;
  int exit_code = kPass;
  Json result = Json::object();
  std::vector<std::string> lines;
  std::map<std::string, std::string> extra_files;
};

Json words(const std::vector<Element>& v) {
  Json out = Json::array();
  for (const Element& g : v) out.push_back(to_string(g));
  return out;
}

std::string join(const std::vector<Element>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + to_string(v[i]);
  return out;
}

template <typename T>
std::string join_numbers(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + needle.size())) ++n;
  return n;
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

Outcome run_axioms(Context& ctx) {
  const int radius = ctx.radius();
  ctx.inputs["R"] = radius;
  const AxiomReport r = verify_order_axioms(ctx.require_order(), radius, ctx.options.traversal);
  Outcome out{pass_fail(r.passed()), r.passed() ? kPass : kFail};
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back({{"kind", to_string(v.kind)}, {"elements", words(v.elements)}});
  out.result = {{"elements_checked", r.elements_checked},
                {"products_checked", r.products_checked},
                {"violations", violations}};
  out.lines.push_back("elements checked: " + std::to_string(r.elements_checked));
  out.lines.push_back("products checked: " + std::to_string(r.products_checked));
  for (const auto& v : r.violations) out.lines.push_back("violation " + to_string(v.kind) + ": " + join(v.elements));
  return out;
}

Outcome run_ray(Context& ctx) {
  const int radius = ctx.radius();
  ctx.inputs["N"] = radius;
  const RayReport r = verify_maxima_ray(ctx.require_order(), radius, ctx.options.traversal);
  Outcome out{pass_fail(r.passed()), r.passed() ? kPass : kFail};
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"counterexamples", c.counterexamples}});
  }
  out.result = {{"maxima", words(r.maxima)}, {"checks", checks}};
  for (std::size_t n = 0; n < r.maxima.size(); ++n) {
    out.lines.push_back("g" + std::to_string(n) + " = " + to_string(r.maxima[n]));
  }
  for (const auto& c : r.checks) {
    out.lines.push_back("check " + c.name + ": " + pass_fail(c.passed));
    for (const auto& e : c.counterexamples) out.lines.push_back("  " + e);
  }
  return out;
}

Outcome run_components(Context& ctx) {
  const int width = ctx.width();
  const int radius = ctx.radius();
  ctx.inputs["r"] = width;
  ctx.inputs["R"] = radius;
  ctx.inputs["collar"] = ctx.config.collar;
  const ComponentReport r = r_components(ctx.require_order(), width, radius, ctx.options.traversal, ctx.config.collar);
  Outcome out{std::to_string(r.count()) + " component" + (r.count() == 1 ? "" : "s"), kPass};
  Json classes = Json::array();
  for (const auto& c : r.components) {
    classes.push_back({{"representative", to_string(c.front())}, {"size", c.size()}, {"members", words(c)}});
  }
  out.result = {{"positives", r.positives}, {"count", r.count()}, {"components", classes}};
  out.lines.push_back("positives: " + std::to_string(r.positives));
  for (const auto& c : r.components) {
    out.lines.push_back("component " + to_string(c.front()) + ": " + std::to_string(c.size()) + " elements");
  }
  return out;
}

int separation_exit(SeparationVerdict v) {
  switch (v) {
    case SeparationVerdict::CertifiedTree:
    case SeparationVerdict::CertifiedExhaustive:
      return kPass;
    case SeparationVerdict::NotSeparating:
      return kFail;
    case SeparationVerdict::Evidence:
      return kUnknown;
  }
  return kUnknown;
}

Outcome run_swamp(Context& ctx) {
  const int width = ctx.width();
  SwampCertificate cert;
  std::string source;
  if (ctx.config.certificate) {
    cert = certificate_from_json(*ctx.config.certificate, ctx.model);
    source = "given";
  } else {
    const Order& order = ctx.require_order();
    if (ctx.model.kind() == ModelKind::Free) {
      cert = tree_swamp_certificate(order, width, ctx.config.search_radius);
      source = "tree";
    } else if (order.kind() == Order::Kind::LexPair) {
      cert = product_cylinder_certificate(order, width, ctx.radius(), ctx.config.search_radius);
      source = "cylinder";
    } else {
      throw UsageError("swamp construction needs a free group or a lex pair with a free leading factor; "
                       "supply a \"certificate\" otherwise");
    }
  }
  const int radius = ctx.options.radius.value_or(ctx.config.radius.value_or(width + 8));
  ctx.inputs["r"] = cert.width;
  ctx.inputs["R"] = radius;
  if (ctx.config.search_radius) ctx.inputs["search_radius"] = *ctx.config.search_radius;

  const SeparationResult sep = verify_separation(cert, ctx.model, radius, ctx.options.traversal);
  cert.verdict = sep.verdict;
  Outcome out{to_string(sep.verdict), separation_exit(sep.verdict)};
  const Json cert_json = certificate_to_json(cert);
  out.result = {{"construction", source},
                {"swamp_size", cert.swamp.size()},
                {"explored", sep.explored},
                {"path", words(sep.path)},
                {"certificate", cert_json}};
  out.extra_files["certificate.json"] = cert_json.dump(2) + "\n";
  out.lines.push_back("construction: " + source);
  out.lines.push_back("center: " + to_string(cert.center));
  out.lines.push_back("|S| = " + std::to_string(cert.swamp.size()));
  out.lines.push_back("witnesses: " + to_string(cert.witnesses[0]) + ", " + to_string(cert.witnesses[1]));
  out.lines.push_back("explored: " + std::to_string(sep.explored));
  if (!sep.path.empty()) out.lines.push_back("avoiding path: " + join(sep.path));
  return out;
}

Outcome run_survey(Context& ctx) {
  const int width = ctx.width();
  std::vector<int> radii = ctx.config.radii.value_or(std::vector<int>{ctx.radius()});
  if (ctx.options.radius) radii = {*ctx.options.radius};
  ctx.inputs["r"] = width;
  ctx.inputs["R_list"] = radii;
  const SurveyReport s = connectivity_survey(ctx.require_order(), width, radii, ctx.options.traversal);
  int code = kUnknown;
  if (s.verdict == SurveyVerdict::PrietoConsistent || s.verdict == SurveyVerdict::HuchaCertified) code = kPass;
  if (s.verdict == SurveyVerdict::NoPositives) code = kFail;
  Outcome out{to_string(s.verdict), code};
  out.result = {{"counts", s.counts},
                {"confined_counts", s.confined_counts},
                {"stable", s.stable},
                {"summary", s.summary}};
  if (s.separation) out.result["separation"] = to_string(*s.separation);
  if (s.certificate) out.result["certificate"] = certificate_to_json(*s.certificate);
  out.lines.push_back("counts: " + join_numbers(s.counts) + " (confined to the ball: " +
                      join_numbers(s.confined_counts) + ")");
  out.lines.push_back(s.summary);
  if (s.separation) out.lines.push_back("separation: " + to_string(*s.separation));
  return out;
}

Outcome run_cofinal_path(Context& ctx) {
  const Order& order = ctx.require_order();
  const Element g = ctx.word(ctx.config.g, "g");
  const Element h = ctx.word(ctx.config.h, "h");
  ctx.inputs["g"] = to_string(g);
  ctx.inputs["h"] = to_string(h);
  RPath path;
  std::string construction;
  if (order.cofinal_central()) {
    path = cofinal_positive_path(order, g, h);
    construction = "cofinal";
  } else if (order.kind() == Order::Kind::LexPair) {
    const int width = ctx.width();
    ctx.inputs["r"] = width;
    ctx.inputs["R"] = ctx.radius();
    path = product_positive_path(order, g, h, width, ctx.radius());
    construction = "product";
  } else {
    throw NoDeclaredCofinalCenter();
  }
  const bool ok = path.points.front() == g && path.points.back() == h && is_r_path(ctx.model, path) &&
                  is_positive_path(order, path);
  Outcome out{pass_fail(ok), ok ? kPass : kFail};
  out.result = {{"construction", construction}, {"width", path.width}, {"length", path.points.size()},
                {"path", words(path.points)}};
  out.lines.push_back("construction: " + construction);
  out.lines.push_back("width: " + std::to_string(path.width) + ", points: " + std::to_string(path.points.size()));
  out.lines.push_back("path: " + join(path.points));
  return out;
}

Outcome run_dfa_verify(Context& ctx) {
  const int radius = ctx.radius();
  const int max_length = ctx.max_length();
  ctx.inputs["R"] = radius;
  ctx.inputs["L_max"] = max_length;
  const ConeDfaReport r = verify_cone_dfa(ctx.require_dfa(), ctx.model, radius, max_length);
  int code = r.verdict == ConeVerdict::Pass ? kPass : r.verdict == ConeVerdict::Fail ? kFail : kUnknown;
  Outcome out{to_string(r.verdict), code};
  Json witnesses = Json::object();
  for (const auto& [g, w] : r.witnesses) witnesses[to_string(g)] = format_word(w);
  Json counterexamples = Json::array();
  for (const auto& c : r.counterexamples) {
    counterexamples.push_back({{"kind", to_string(c.kind)}, {"elements", words(c.elements)}});
  }
  out.result = {{"membership", r.exact ? "exact" : "bounded"},
                {"in_set", words(r.in_set)},
                {"witnesses", witnesses},
                {"unknown", words(r.unknown)},
                {"counterexamples", counterexamples}};
  out.lines.push_back(std::string("membership: ") + (r.exact ? "exact" : "bounded"));
  out.lines.push_back("IN-set size: " + std::to_string(r.in_set.size()));
  if (!r.unknown.empty()) out.lines.push_back("unknown: " + join(r.unknown));
  for (const auto& c : r.counterexamples) out.lines.push_back("counterexample " + to_string(c.kind) + ": " + join(c.elements));

  if (ctx.order) {
    const Ball b = ball(ctx.model, radius);
    std::vector<Element> expected;
    for (const Element& g : b.members()) {
      if (ctx.order->sign(g) == Sign::Positive) expected.push_back(g);
    }
    const bool agrees = expected == r.in_set;
    out.result["agrees_with_order"] = agrees;
    out.lines.push_back(std::string("IN-set equals the order's positives: ") + (agrees ? "yes" : "no"));
    if (!agrees && out.exit_code == kPass) {
      out.verdict = "FAIL";
      out.exit_code = kFail;
    }
  }
  return out;
}

Outcome run_dfa_path(Context& ctx) {
  const ConeDfa& d = ctx.require_dfa();
  const int limit = connectivity_radius(d);
  std::vector<Word> targets;
  if (ctx.config.word) {
    targets.push_back(parse_word(*ctx.config.word));
    ctx.inputs["word"] = *ctx.config.word;
  } else {
    const int max_length = ctx.options.max_length.value_or(ctx.config.max_length.value_or(8));
    ctx.inputs["L_max"] = max_length;
    targets = language_sample(d, ctx.model, max_length).words;
  }
  Json paths = Json::array();
  std::size_t max_gap = 0;
  bool ok = true;
  for (const Word& w : targets) {
    const Interpolation ip = regular_interpolation(d, ctx.model, w);
    std::size_t gap = 0;
    for (std::size_t i = 1; i < ip.path.points.size(); ++i) {
      gap = std::max(gap, ctx.model.distance(ip.path.points[i - 1], ip.path.points[i]));
    }
    for (const auto& witness : ip.witnesses) ok = ok && (!witness || dfa_run(d, *witness).accepted);
    max_gap = std::max(max_gap, gap);
    if (targets.size() == 1) {
      Json ws = Json::array();
      for (const auto& witness : ip.witnesses) ws.push_back(witness ? format_word(*witness) : "1");
      paths.push_back({{"word", format_word(w)}, {"path", words(ip.path.points)}, {"witnesses", ws}, {"max_gap", gap}});
    }
  }
  ok = ok && max_gap <= static_cast<std::size_t>(limit);
  Outcome out{pass_fail(ok), ok ? kPass : kFail};
  out.result = {{"connectivity_radius", limit}, {"words", targets.size()}, {"max_gap", max_gap}};
  if (!paths.empty()) out.result["paths"] = paths;
  out.lines.push_back("connectivity radius 2|S|+1 = " + std::to_string(limit));
  out.lines.push_back("words interpolated: " + std::to_string(targets.size()));
  out.lines.push_back("largest gap: " + std::to_string(max_gap));
  if (targets.size() == 1) out.lines.push_back("path: " + paths[0]["path"].dump());
  return out;
}

Outcome run_dfa_qg(Context& ctx) {
  const int max_length = ctx.options.max_length.value_or(ctx.config.max_length.value_or(8));
  ctx.inputs["lambda"] = ctx.config.lambda;
  ctx.inputs["c"] = ctx.config.c;
  ctx.inputs["L_max"] = max_length;
  const QuasigeodesicResult r =
      quasigeodesic_check(ctx.require_dfa(), ctx.model, ctx.config.lambda, ctx.config.c, max_length);
  Outcome out{pass_fail(r.passed), r.passed ? kPass : kFail};
  out.result = {{"words_checked", r.words_checked}};
  out.lines.push_back("words checked: " + std::to_string(r.words_checked));
  if (r.word) {
    out.result["violation"] = {{"word", format_word(*r.word)}, {"i", r.i}, {"j", r.j}, {"distance", r.distance}};
    out.lines.push_back("first violation: " + format_word(*r.word) + " at i=" + std::to_string(r.i) +
                        ", j=" + std::to_string(r.j) + ", distance " + std::to_string(r.distance));
  }
  return out;
}

Outcome run_export_dot(Context& ctx) {
  const int radius = ctx.radius();
  const int width = ctx.width();
  ctx.inputs["R"] = radius;
  ctx.inputs["r"] = width;
  const std::string dot = export_dot(ctx.require_order(), radius, width, ctx.options.traversal);
  const std::size_t nodes = count_occurrences(dot, "[label=");
  const std::size_t edges = count_occurrences(dot, " -- ");
  Outcome out{"written", kPass};
  out.result = {{"file", "ball.dot"}, {"nodes", nodes}, {"edges", edges}};
  out.extra_files["ball.dot"] = dot;
  out.lines.push_back("nodes: " + std::to_string(nodes) + ", edges: " + std::to_string(edges));
  return out;
}

using Handler = std::function<Outcome(Context&)>;

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table = {
      {"axioms", run_axioms},           {"ray", run_ray},
      {"components", run_components},   {"swamp", run_swamp},
      {"survey", run_survey},           {"cofinal-path", run_cofinal_path},
      {"dfa-verify", run_dfa_verify},   {"dfa-path", run_dfa_path},
      {"dfa-qg", run_dfa_qg},           {"export-dot", run_export_dot},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, handler] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

RunResult execute(const ExperimentConfig& config, const RunOptions& options) {
  const auto& table = handlers();
  auto it = std::find_if(table.begin(), table.end(), [&](const auto& p) { return p.first == options.command; });
  if (it == table.end()) throw UsageError("unknown command \"" + options.command + "\"");

  const auto start = std::chrono::steady_clock::now();
  Context ctx{config, options, model_from_json(config.group), std::nullopt, std::nullopt, Json::object()};
  ctx.inputs["config"] = config.name;
  ctx.inputs["group"] = model_to_json(ctx.model);
  if (config.order) {
    ctx.order = order_from_json(*config.order, ctx.model);
    ctx.inputs["order"] = order_to_json(*ctx.order);
  }
  if (config.automaton) {
    ctx.dfa = dfa_from_json(*config.automaton);
    if (ctx.dfa->generator_count() != ctx.model.generator_count()) {
      throw UsageError("automaton alphabet does not match the group's generators");
    }
    ctx.inputs["automaton_states"] = ctx.dfa->state_count();
  }

  Outcome out = it->second(ctx);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Json report;
  report["tool"] = "conescope";
  report["version"] = kToolVersion;
  report["command"] = options.command;
  report["inputs"] = ctx.inputs;
  report["verdict"] = out.verdict;
  report["exit_code"] = out.exit_code;
  report["result"] = out.result;
  if (options.timings) report["timings"] = {{"seconds", seconds}};

  std::ostringstream text;
  text << "conescope " << kToolVersion << "\n";
  text << "command: " << options.command << "\n";
  text << "group: " << ctx.model.name() << "\n";
  if (ctx.order) text << "order: " << ctx.order->name() << "\n";
  if (ctx.dfa) text << "automaton: " << ctx.dfa->state_count() << " states\n";
  text << "verdict: " << out.verdict << "\n";
  for (const auto& line : out.lines) text << line << "\n";
  if (options.timings) text << "time: " << seconds << " s\n";

  RunResult result;
  result.exit_code = out.exit_code;
  result.verdict = out.verdict;
  result.files[options.command + ".json"] = report.dump(2) + "\n";
  result.files[options.command + ".txt"] = text.str();
  for (auto& [name, content] : out.extra_files) result.files[name] = std::move(content);
  return result;
}

}  // namespace conescope::app
