#include "gitfan/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "gitfan/error.hpp"
#include "gitfan/fixtures.hpp"
#include "gitfan/json_io.hpp"
#include "gitfan/quotient.hpp"
#include "gitfan/res2.hpp"
#include "gitfan/svg.hpp"

namespace gitfan::cli {

namespace {

using json_io::json;

std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("file_not_found", "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("invalid_json", path + ": " + e.what());
  }
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("invalid_json", e.what());
  }
}

Point2 parse_point(const std::string& text) {
  const auto parts = split(text);
  if (parts.size() != 2) {
    throw InputError("invalid_point", "expected b,c but got '" + text + "'");
  }
  return {ratlin::parse_rational(parts[0]), ratlin::parse_rational(parts[1])};
}

struct Options {
  std::string weights_file;
  std::string basis_file;
  std::string b, c, alpha;
  std::string side_a, side_b;
  std::string support;
  std::string bound = "1000000";
  bool svg = false;
  std::string highlight;
  std::vector<std::string> highlight_points;
  std::string curve;
  std::string w12;
};

struct Instance {
  WeightSystem w;
  bool builtin;
};

Instance load_weights(const Options& o) {
  std::string path = o.weights_file;
  if (path.empty()) {
    if (const char* env = std::getenv("GITFAN_WEIGHTS"); env && *env) path = env;
  }
  if (path.empty()) return {res2::weights(), true};
  return {json_io::weights_from_json(read_json_file(path)), false};
}

IntMatrix load_basis(const Options& o, const Instance& inst) {
  if (!o.basis_file.empty()) return json_io::matrix_from_json(read_json_file(o.basis_file));
  if (inst.builtin) return res2::kernel_matrix();
  return ratlin::kernel_lattice_basis(inst.w.matrix());
}

Character character(const Options& o) {
  if (!o.alpha.empty()) {
    if (!o.b.empty() || !o.c.empty()) {
      throw InputError("conflicting_character", "give either --alpha or --b/--c, not both");
    }
    const auto parts = split(o.alpha);
    if (parts.size() != 3) throw InputError("invalid_character", "--alpha needs three integers");
    return Character(ratlin::parse_integer(parts[0]), ratlin::parse_integer(parts[1]),
                     ratlin::parse_integer(parts[2]));
  }
  if (o.b.empty() || o.c.empty()) {
    throw InputError("missing_character", "a character needs --b and --c (or --alpha)");
  }
  return Character::from_point(ratlin::parse_rational(o.b), ratlin::parse_rational(o.c));
}

Character side(const std::string& text, const char* flag) {
  if (text.empty()) throw InputError("missing_side", std::string(flag) + " is required");
  const Point2 p = parse_point(text);
  return Character::from_point(p.x, p.y);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// --- commands --------------------------------------------------------------

int cmd_kernel(const Options& o, std::ostream& out) {
  const auto inst = load_weights(o);
  const auto K = ratlin::kernel_lattice_basis(inst.w.matrix());
  json j = {{"labels", inst.w.labels()}, {"kernel", json_io::to_json(K)}};
  if (!o.basis_file.empty() || inst.builtin) {
    const auto B = load_basis(o, inst);
    const bool same_cols = B.cols() == K.cols();
    j["basis"] = json_io::to_json(B);
    j["lattice_equal"] = same_cols && ratlin::lattices_equal(K, B);
    j["annihilated"] = same_cols && (inst.w.matrix() * B.transpose()).is_zero();
  }
  emit(out, j);
  return ok;
}

int cmd_supports(const Options& o, std::ostream& out) {
  const auto inst = load_weights(o);
  const auto chi = character(o);
  const auto sets = minimal_support_sets(inst.w, chi);
  emit(out, {{"character", json_io::to_json(chi)},
             {"count", sets.size()},
             {"supports", json_io::supports_to_json(inst.w, sets)}});
  return ok;
}

int cmd_chamber_at(const Options& o, std::ostream& out) {
  const auto inst = load_weights(o);
  emit(out, json_io::to_json(inst.w, chamber_of(inst.w, character(o))));
  return ok;
}

std::vector<Point2> polygon_at(const std::vector<Chamber>& chambers, const WeightSystem& w,
                               const Point2& p) {
  const Chamber at = chamber_of(w, Character::from_point(p.x, p.y));
  if (at.dimension != 2) {
    throw InputError("invalid_highlight", "point " + ratlin::to_string(p.x) + "," +
                                              ratlin::to_string(p.y) +
                                              " is not inside a two-dimensional chamber");
  }
  for (const auto& ch : chambers)
    if (ch.fingerprint == at.fingerprint) return ch.polygon;
  throw InputError("invalid_highlight", "no enumerated chamber matches the point");
}

int cmd_chambers(const Options& o, std::ostream& out) {
  const auto inst = load_weights(o);
  const auto chambers = enumerate_chambers(inst.w);
  std::vector<svg::Highlight> highlights;
  std::vector<Point2> marks;
  if (!o.highlight.empty()) {
    for (const auto& name : split(o.highlight)) {
      Point2 p;
      if (name == "red") p = res2::red_character().point();
      else if (name == "blue") p = res2::blue_character().point();
      else throw InputError("invalid_highlight", "unknown highlight '" + name + "'");
      highlights.push_back({name, polygon_at(chambers, inst.w, p)});
    }
  }
  for (const auto& text : o.highlight_points) {
    const Point2 p = parse_point(text);
    highlights.push_back({"point", polygon_at(chambers, inst.w, p)});
    marks.push_back(p);
  }
  if (o.svg) {
    out << svg::chamber_svg(inst.w, highlights, marks);
    return ok;
  }
  json list = json::array();
  for (const auto& ch : chambers) list.push_back(json_io::to_json(inst.w, ch));
  json lines = json::array();
  for (const auto& [a, b] : configuration_lines(inst.w))
    lines.push_back(json::array({json::array({json_io::to_json(a.x), json_io::to_json(a.y)}),
                                 json::array({json_io::to_json(b.x), json_io::to_json(b.y)})}));
  emit(out, {{"count", chambers.size()}, {"lines", lines}, {"chambers", list}});
  return ok;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const auto inst = load_weights(o);
  const auto chi = character(o);
  if (o.support.empty()) throw InputError("missing_support", "--support is required");
  const auto I = support_from_labels(inst.w, split(o.support));
  const auto m = certify_support(inst.w, chi, I, ratlin::parse_integer(o.bound));
  json j = json_io::to_json(inst.w, m);
  j["support"] = I.labels(inst.w);
  j["character"] = json_io::to_json(chi);
  j["verified"] = verify_monomial(inst.w, chi, m);
  emit(out, j);
  return ok;
}

int cmd_fan(const Options& o, std::ostream& out) {
  const auto inst = load_weights(o);
  const auto fan = quotient_fan(inst.w, load_basis(o, inst), character(o));
  emit(out, json_io::to_json(fan, polycone::fan_check(fan)));
  return ok;
}

int cmd_unstable(const Options& o, std::ostream& out) {
  const auto inst = load_weights(o);
  emit(out, json_io::to_json(inst.w, unstable_locus(inst.w, character(o))));
  return ok;
}

int cmd_wallcross(const Options& o, std::ostream& out) {
  const auto inst = load_weights(o);
  const auto wc = wall_crossing(inst.w, load_basis(o, inst), character(o),
                                side(o.side_a, "--side-a"), side(o.side_b, "--side-b"));
  emit(out, json_io::to_json(inst.w, wc));
  return ok;
}

res2::BranchCurve curve_arg(const Options& o) {
  if (o.curve.empty()) throw InputError("missing_curve", "--curve is required");
  const std::string& text = o.curve;
  const bool inline_json = text.find('{') != std::string::npos;
  return json_io::curve_from_json(inline_json ? parse_json_text(text) : read_json_file(text));
}

int cmd_normalize(const Options& o, std::ostream& out) {
  const auto c = curve_arg(o);
  const auto e = res2::eliminate_a21(c);
  const auto n = res2::scale_normalize(e);
  json j = {{"input", json_io::to_json(c)},
            {"allowability_necessary", res2::allowability_necessary(c)},
            {"eliminated", json_io::to_json(e)},
            {"normalized", json_io::to_json(n.curve)},
            {"extension_required", n.extension_required},
            {"radicand", json_io::to_json(n.radicand)},
            {"witness", n.witness ? json_io::to_json(*n.witness) : json(nullptr)}};
  emit(out, j);
  return ok;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  if (!o.w12.empty()) {
    if (!o.curve.empty()) throw InputError("conflicting_input", "give --curve or --w12, not both");
    const Rational w12 = ratlin::parse_rational(o.w12);
    const auto J = res2::j_invariant(w12);
    json j = {{"w12", json_io::to_json(w12)}, {"J", json_io::j_to_json(J)}};
    if (!J) j["double_fiber"] = "type I_n";
    emit(out, j);
    return ok;
  }
  const auto n = res2::scale_normalize(res2::eliminate_a21(curve_arg(o)));
  const auto w = res2::w_invariants(n);
  const Rational w12 = *w.w.at("12");
  const auto J = res2::j_invariant(w12);
  json j = {{"w12", json_io::to_json(w12)},
            {"J", json_io::j_to_json(J)},
            {"extension_required", n.extension_required}};
  if (!J) j["double_fiber"] = "type I_n";
  j.update(json_io::to_json(w));
  emit(out, j);
  return ok;
}

int cmd_charts(const Options&, std::ostream& out) {
  json gens = json::array();
  for (const auto& g : res2::monoid_generators()) {
    json entry = {{"generator", g.name}, {"degree", g.degree}};
    if (g.degree > 0) {
      const auto row = res2::chart_row(g);
      entry["twelve_inequality"] = row.twelve;
      entry["thirteen_inequality"] = row.thirteen;
      entry["nonnegative"] = row.positive;
    }
    gens.push_back(std::move(entry));
  }
  json minimal = json::array();
  for (const auto& [label, cone] : res2::minimal_chart_cones()) {
    json entry = {{"label", "C" + label}};
    entry.update(json_io::to_json(cone));
    minimal.push_back(std::move(entry));
  }
  emit(out, {{"coordinates", res2::kernel_coordinates()},
             {"generators", gens},
             {"minimal_cones", minimal}});
  return ok;
}

int cmd_verify(const Options&, std::ostream& out) {
  json rows = json::array();
  bool all_pass = true;
  for (const auto& f : fixtures::all()) {
    fixtures::Outcome r;
    try {
      r = f.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && r.pass;
    rows.push_back({{"fixture", f.name}, {"checks", f.what}, {"pass", r.pass}, {"detail", r.detail}});
  }
  emit(out, {{"pass", all_pass}, {"fixtures", rows}});
  return all_pass ? ok : fixture_failure;
}

void error_report(std::ostream& out, const std::string& code, const std::string& message) {
  emit(out, {{"error", {{"code", code}, {"message", message}}}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Options o;
  CLI::App app{"Exact toric GIT quotients, chambers and wall crossings", "gitfan"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--weights", o.weights_file, "weight-system JSON file (default: GITFAN_WEIGHTS or the built-in instance)");
  app.add_option("--basis", o.basis_file, "kernel basis matrix JSON file");

  auto add_character = [&](CLI::App* sub) {
    sub->add_option("--b", o.b, "b = alpha2/alpha1 as p/q");
    sub->add_option("--c", o.c, "c = alpha3/alpha1 as p/q");
    sub->add_option("--alpha", o.alpha, "integral character a1,a2,a3 with a1 > 0");
  };

  std::map<std::string, int (*)(const Options&, std::ostream&)> handlers;
  auto command = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    handlers[name] = fn;
    return app.add_subcommand(name, help);
  };

  command("kernel", "kernel lattice basis of the weight matrix", cmd_kernel);
  add_character(command("chamber-at", "chamber containing a character", cmd_chamber_at));
  auto* chambers = command("chambers", "all two-dimensional chambers", cmd_chambers);
  chambers->add_flag("--svg", o.svg, "emit an SVG drawing instead of JSON");
  chambers->add_option("--highlight", o.highlight, "comma-separated: red, blue");
  chambers->add_option("--highlight-point", o.highlight_points, "b,c inside a chamber to fill");
  add_character(command("supports", "minimal support sets at a character", cmd_supports));
  auto* certify = command("certify", "invariant monomial with a given support", cmd_certify);
  add_character(certify);
  certify->add_option("--support", o.support, "comma-separated labels");
  certify->add_option("--bound", o.bound, "largest admissible degree");
  add_character(command("fan", "quotient fan at a character", cmd_fan));
  add_character(command("unstable", "unstable locus at a character", cmd_unstable));
  auto* wall = command("wallcross", "wall relation and flip data", cmd_wallcross);
  add_character(wall);
  wall->add_option("--side-a", o.side_a, "b,c on one side of the wall");
  wall->add_option("--side-b", o.side_b, "b,c on the other side");
  command("normalize", "clear a21 and scale a20 = a04 = 1", cmd_normalize)
      ->add_option("--curve", o.curve, "curve JSON text or file");
  auto* inv = command("invariants", "w-invariants and the J-invariant", cmd_invariants);
  inv->add_option("--curve", o.curve, "curve JSON text or file");
  inv->add_option("--w12", o.w12, "w12 as p/q");
  command("charts", "monoid generators and chart cones", cmd_charts);
  command("verify-paper", "run every reference fixture", cmd_verify);

  std::vector<std::string> argv_store{"gitfan"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    error_report(out, "usage_error", e.what());
    return usage;
  }

  try {
    for (const auto* sub : app.get_subcommands()) return handlers.at(sub->get_name())(o, out);
    error_report(out, "usage_error", "no command given");
    return usage;
  } catch (const InputError& e) {
    error_report(out, e.code(), e.what());
    return validation;
  }
}

}  // namespace gitfan::cli
