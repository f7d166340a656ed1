#include "monoidgeom/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "monoidgeom/json_io.hpp"

namespace monoidgeom::cli {

namespace {

using json_io::json;
using namespace json_io;

struct Options {
  std::vector<std::string> inputs;
  std::optional<std::size_t> bound, order, prime;
  std::optional<long> radius;
  std::optional<std::string> face, element, ideal, functional, x, y;
  bool strict = false;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail("malformed JSON in " + path + ": " + e.what());
  }
}

json parse_flag(const std::string& name, const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    fail("--" + name + " is not valid JSON: " + text);
  }
}

const std::string& input(const Options& o, std::size_t i, const char* what) {
  if (o.inputs.size() <= i) fail(std::string("missing input: ") + what);
  return o.inputs[i];
}

AffineMonoid load_monoid(const Options& o, std::size_t i = 0) {
  return monoid_from_json(read_json_file(input(o, i, "monoid JSON file")));
}

Presentation load_presentation(const Options& o, std::size_t i = 0) {
  return presentation_from_json(read_json_file(input(o, i, "presentation JSON file")));
}

template <class T>
const T& need(const std::optional<T>& v, const char* flag) {
  if (!v) fail(std::string("missing --") + flag);
  return *v;
}

GroupElement element_flag(const AffineMonoid& m, const Options& o) {
  return element_from_json(m.ambient(), parse_flag("element", need(o.element, "element")));
}

MonoidIdeal ideal_flag(const AffineMonoid& m, const Options& o) {
  json j = parse_flag("ideal", need(o.ideal, "ideal"));
  if (!j.is_array()) fail("--ideal must be an array of elements");
  std::vector<GroupElement> gens;
  for (const auto& g : j) gens.push_back(element_from_json(m.ambient(), g));
  return MonoidIdeal(m, gens);
}

Vector functional_flag(const Options& o) {
  return vector_from_json(parse_flag("functional", need(o.functional, "functional")));
}

Face face_flag(const AffineMonoid& m, const Options& o) {
  std::string s = need(o.face, "face");
  std::vector<bool> mask(m.num_generators(), false);
  for (char& c : s)
    if (c == '{' || c == '}' || c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream in(s);
  long i;
  while (in >> i) {
    if (i < 0 || static_cast<std::size_t>(i) >= mask.size()) fail("--face index out of range");
    mask[i] = true;
  }
  if (!in.eof()) fail("--face must list generator indices, e.g. 0,2");
  return face_from_mask(m, mask);
}

const PrimeIdeal& prime_flag(const SpecPoset& s, const Options& o) {
  std::size_t i = need(o.prime, "prime");
  if (i >= s.size()) fail("--prime index out of range");
  return s.primes[i];
}

json elements_json(const std::vector<GroupElement>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(element_to_json(x));
  return a;
}

json indices_json(const Face& f) {
  json a = json::array();
  for (auto i : f.indices()) a.push_back(i);
  return a;
}

json verdict_json(Verdict v) { return std::string(to_string(v)); }

json hom_json(const MonoidHom& h) {
  return json{{"source", monoid_to_json(h.source)}, {"target", monoid_to_json(h.target)}, {"images", elements_json(h.images)}};
}

std::vector<FreeElement> words_from_json(const json& j) {
  if (!j.is_array()) fail("expected an array of words");
  std::vector<FreeElement> out;
  for (const auto& w : j) out.push_back(word_from_json(w));
  return out;
}

json witness_json(const CongruenceWitness& w) {
  json steps = json::array();
  for (const auto& s : w.steps)
    steps.push_back(json{{"relation", s.relation},
                         {"direction", s.forward ? "forward" : "backward"},
                         {"translation", word_to_json(s.translation)},
                         {"result", word_to_json(s.result)}});
  return json{{"start", word_to_json(w.start)}, {"steps", steps}};
}

json spec_json(const SpecPoset& s) {
  json primes = json::array();
  for (std::size_t i = 0; i < s.size(); ++i)
    primes.push_back(json{{"index", i}, {"face", indices_json(s.primes[i].face)}, {"height", s.heights[i]}});
  json edges = json::array();
  for (auto [i, j] : s.hasse_edges()) edges.push_back(json::array({i, j}));
  json out{{"primes", primes}, {"hasse", edges}, {"dim", s.length()}};
  out["generic"] = s.generic ? json(*s.generic) : json(nullptr);
  out["closed"] = s.closed ? json(*s.closed) : json(nullptr);
  return out;
}

json series_json(const TruncatedSeries& s) {
  json j = algebra_to_json(s.terms);
  j["order"] = s.order;
  return j;
}

// Each command writes its result and returns an exit code; Unknown verdicts
// are reported through `unknown`.
struct Result {
  Result() = default;
  Result(json v, bool u = false) : value(std::move(v)), unknown(u) {}
  json value;
  bool unknown = false;
  std::optional<std::string> text;  // raw output such as DOT
};

using Handler = std::function<Result(const Options&)>;

std::map<std::string, Handler> commands() {
  std::map<std::string, Handler> c;

  // monoid ------------------------------------------------------------------
  c["monoid info"] = [](const Options& o) {
    AffineMonoid m = load_monoid(o);
    const AbelianGroup& gp = m.gp().group();
    json j{{"fine", is_fine(m)},
           {"sharp", is_sharp(m)},
           {"dull", is_dull(m)},
           {"saturated", is_saturated(m)},
           {"toric", is_toric(m)},
           {"dim", m.dimension()},
           {"gp", group_to_json(gp)},
           {"units", elements_json(units(m).generators)},
           {"facets", json::array()}};
    for (const auto& h : m.facets()) j["facets"].push_back(vector_to_json(h));
    j["faces"] = faces(m).size();
    return Result{j};
  };
  c["monoid saturate"] = [](const Options& o) { return Result{monoid_to_json(saturate(load_monoid(o)))}; };
  c["monoid sharpen"] = [](const Options& o) {
    Sharpening s = sharpen(load_monoid(o));
    return Result{json{{"monoid", monoid_to_json(s.monoid)}, {"projection", elements_json(s.projection.images)}}};
  };
  c["monoid units"] = [](const Options& o) {
    UnitGroup u = units(load_monoid(o));
    return Result{json{{"group", group_to_json(u.group)}, {"generators", elements_json(u.generators)}}};
  };
  c["monoid irreducibles"] = [](const Options& o) {
    return Result{json{{"irreducibles", elements_json(irreducibles(load_monoid(o)))}}};
  };
  c["monoid contains"] = [](const Options& o) {
    AffineMonoid m = load_monoid(o);
    GroupElement x = element_flag(m, o);
    json j{{"member", m.contains(x)}};
    if (auto d = m.decompose_mod_units(x)) j["decomposition"] = vector_to_json(*d);
    return Result{j};
  };
  c["monoid embed"] = [](const Options& o) { return Result{hom_json(embed_sharp(load_monoid(o)))}; };
  c["monoid classify"] = [](const Options& o) {
    DimOneClassification d = classify_dim1(load_monoid(o));
    return Result{json{{"units", group_to_json(d.gamma.group)},
                       {"unit_generators", elements_json(d.gamma.generators)},
                       {"q", element_to_json(d.q)}}};
  };
  c["monoid valuative"] = [](const Options& o) { return Result{json{{"valuative", is_valuative(load_monoid(o))}}}; };
  c["monoid dominate"] = [](const Options& o) {
    ValuativeDomination v = dominating_valuative(load_monoid(o));
    return Result{json{{"functional", vector_to_json(v.functional)}, {"monoid", monoid_to_json(v.monoid)}}};
  };
  c["monoid exact"] = [](const Options& o) {
    json j = read_json_file(input(o, 0, "homomorphism JSON file"));
    if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("images"))
      fail("homomorphism needs \"source\", \"target\" and \"images\"");
    AffineMonoid s = monoid_from_json(j.at("source")), t = monoid_from_json(j.at("target"));
    std::vector<GroupElement> images;
    if (!j.at("images").is_array()) fail("\"images\" must be an array");
    for (const auto& x : j.at("images")) images.push_back(element_from_json(t.ambient(), x));
    MonoidHom h(s, t, images);
    ExactnessResult r = is_exact_hom(h, o.bound.value_or(6));
    json out{{"exact", verdict_json(r.verdict)}, {"local", is_local_hom(h)}};
    if (r.witness) out["witness"] = element_to_json(*r.witness);
    return Result{out, r.verdict == Verdict::Unknown};
  };

  // pres --------------------------------------------------------------------
  c["pres groupify"] = [](const Options& o) {
    Groupification g = groupify(load_presentation(o));
    return Result{json{{"group", group_to_json(g.group())}, {"images", elements_json(g.images)}}};
  };
  c["pres integralize"] = [](const Options& o) { return Result{monoid_to_json(integralize(load_presentation(o)))}; };
  c["pres integral"] = [](const Options& o) {
    IntegralityResult r = is_integral(load_presentation(o), o.bound.value_or(default_word_bound));
    json out{{"integral", verdict_json(r.verdict)}};
    if (r.m) out["m"] = word_to_json(*r.m);
    if (r.n) out["n"] = word_to_json(*r.n);
    if (r.p) out["p"] = word_to_json(*r.p);
    return Result{out, r.verdict == Verdict::Unknown};
  };
  c["pres equal"] = [](const Options& o) {
    Presentation p = load_presentation(o);
    FreeElement x = word_from_json(parse_flag("x", need(o.x, "x")));
    FreeElement y = word_from_json(parse_flag("y", need(o.y, "y")));
    WordResult r = words_equal(p, x, y, o.bound.value_or(default_word_bound));
    json out{{"verdict", std::string(to_string(r.verdict))}, {"reason", r.reason}};
    if (r.witness) out["witness"] = witness_json(*r.witness);
    return Result{out, r.verdict == WordVerdict::Unknown};
  };
  c["pres coequalizer"] = [](const Options& o) {
    json j = read_json_file(input(o, 0, "coequalizer JSON file"));
    if (!j.is_object() || !j.contains("target") || !j.contains("theta1") || !j.contains("theta2"))
      fail("coequalizer needs \"target\", \"theta1\" and \"theta2\"");
    return Result{presentation_to_json(coequalizer(presentation_from_json(j.at("target")),
                                                   words_from_json(j.at("theta1")),
                                                   words_from_json(j.at("theta2"))))};
  };
  c["pres pushout"] = [](const Options& o) {
    json j = read_json_file(input(o, 0, "pushout JSON file"));
    for (const char* k : {"q1", "u1", "q2", "u2"})
      if (!j.is_object() || !j.contains(k)) fail(std::string("pushout needs \"") + k + "\"");
    return Result{presentation_to_json(pushout(presentation_from_json(j.at("q1")), words_from_json(j.at("u1")),
                                               presentation_from_json(j.at("q2")), words_from_json(j.at("u2"))))};
  };
  c["pres tautological"] = [](const Options& o) {
    return Result{presentation_to_json(tautological_presentation(load_monoid(o)))};
  };

  // spec --------------------------------------------------------------------
  c["spec primes"] = [](const Options& o) { return Result{spec_json(spec(load_monoid(o)))}; };
  c["spec faces"] = [](const Options& o) {
    json a = json::array();
    for (const auto& f : faces(load_monoid(o)))
      a.push_back(json{{"face", indices_json(f)}, {"dim", f.dimension()}, {"functional", vector_to_json(f.functional)}});
    return Result{json{{"faces", a}}};
  };
  c["spec dot"] = [](const Options& o) {
    Result r;
    r.text = to_dot(spec(load_monoid(o)));
    return r;
  };
  c["spec faces-dot"] = [](const Options& o) {
    Result r;
    r.text = faces_to_dot(faces(load_monoid(o)));
    return r;
  };
  c["spec height"] = [](const Options& o) {
    SpecPoset s = spec(load_monoid(o));
    return Result{json{{"height", prime_flag(s, o).height()}}};
  };
  c["spec radical"] = [](const Options& o) {
    AffineMonoid m = load_monoid(o);
    MonoidIdeal k = ideal_flag(m, o);
    SpecPoset s = spec(m);
    json z = json::array();
    for (auto i : zero_locus(s, k)) z.push_back(i);
    return Result{json{{"radical", elements_json(radical_generators(k))},
                       {"is_radical", is_radical(k)},
                       {"minimal_generators", elements_json(minimal_ideal_generators(k))},
                       {"zero_locus", z}}};
  };
  c["spec primary"] = [](const Options& o) {
    AffineMonoid m = load_monoid(o);
    PrimaryResult r = is_primary(ideal_flag(m, o), o.bound.value_or(6));
    json out{{"primary", verdict_json(r.verdict)}};
    if (r.a) out["a"] = element_to_json(*r.a);
    if (r.x) out["x"] = element_to_json(*r.x);
    return Result{out, r.verdict == Verdict::Unknown};
  };
  c["spec localize"] = [](const Options& o) {
    AffineMonoid m = load_monoid(o);
    Localization l = localize(m, face_flag(m, o));
    return Result{json{{"monoid", monoid_to_json(l.monoid)}, {"lambda", elements_json(l.lambda.images)}}};
  };
  c["spec idealized"] = [](const Options& o) {
    AffineMonoid m = load_monoid(o);
    return Result{spec_json(spec_idealized(ideal_flag(m, o)))};
  };

  // dual --------------------------------------------------------------------
  c["dual dual"] = [](const Options& o) { return Result{monoid_to_json(dual(load_monoid(o)))}; };
  c["dual double"] = [](const Options& o) {
    DoubleDual d = double_dual_iso(load_monoid(o));
    json fwd = json::array();
    for (const auto& f : d.forward) fwd.push_back(f ? json(*f) : json(nullptr));
    return Result{json{{"isomorphism", d.isomorphism},
                       {"sharp_saturation", monoid_to_json(d.sharp_saturation)},
                       {"double_dual", monoid_to_json(d.double_dual)},
                       {"irreducibles", elements_json(d.irreducibles)},
                       {"forward", fwd}}};
  };
  c["dual perp"] = [](const Options& o) {
    AffineMonoid m = load_monoid(o);
    Face f = face_flag(m, o);
    Face p = face_perp(f);
    Face back = perp_of_dual_face(m, p);
    return Result{json{{"perp", indices_json(p)}, {"perp_perp", indices_json(back)}, {"dual", monoid_to_json(p.monoid)}}};
  };
  c["dual valuations"] = [](const Options& o) {
    AffineMonoid m = load_monoid(o);
    json a = json::array();
    for (const auto& v : height1_valuations(m))
      a.push_back(json{{"face", indices_json(v.prime.face)}, {"functional", vector_to_json(v.functional)}});
    return Result{json{{"valuations", a}}};
  };
  c["dual vector"] = [](const Options& o) {
    AffineMonoid m = load_monoid(o);
    return Result{json{{"values", vector_to_json(valuation_vector(m, element_flag(m, o)).values)}}};
  };
  c["dual check"] = [](const Options& o) {
    ValuationCheck r = saturation_by_valuations_check(load_monoid(o), o.radius.value_or(4));
    json out{{"holds", r.holds}, {"checked", r.checked}};
    if (r.counterexample) out["counterexample"] = element_to_json(*r.counterexample);
    return Result{out};
  };
  c["dual ball"] = [](const Options& o) {
    AffineMonoid m = load_monoid(o);
    Vector h = functional_flag(o);
    Integer r = o.radius.value_or(8);
    BallConstants k = ball_constants(m, h);
    return Result{json{{"count", integer_to_json(count_ball(m, h, r))},
                       {"radius", integer_to_json(r)},
                       {"d", k.d},
                       {"c", rational_to_json(k.lower)},
                       {"C", rational_to_json(k.upper)},
                       {"lower_from", integer_to_json(k.lower_from)}}};
  };

  // algebra -----------------------------------------------------------------
  auto load_element = [](const AffineMonoid& m, const Options& o, std::size_t i) {
    return algebra_from_json(m, read_json_file(input(o, i, "element JSON file")));
  };
  c["algebra add"] = [load_element](const Options& o) {
    AffineMonoid m = load_monoid(o);
    return Result{algebra_to_json(add(load_element(m, o, 1), load_element(m, o, 2)).terms())};
  };
  c["algebra mul"] = [load_element](const Options& o) {
    AffineMonoid m = load_monoid(o);
    return Result{algebra_to_json(mul(load_element(m, o, 1), load_element(m, o, 2)).terms())};
  };
  c["algebra eval"] = [load_element](const Options& o) {
    AffineMonoid m = load_monoid(o);
    AlgebraElement f = load_element(m, o, 1);
    return Result{json{{"counit", rational_to_json(counit(f))}, {"vertex", rational_to_json(vertex_eval(f))}}};
  };
  c["algebra support"] = [load_element](const Options& o) {
    AffineMonoid m = load_monoid(o);
    AlgebraElement f = load_element(m, o, 1);
    json out{{"support", elements_json(support(f))}, {"ideal", elements_json(support_ideal(f).gens)}};
    auto p = is_principal_support(f);
    out["principal"] = p ? element_to_json(*p) : json(nullptr);
    return Result{out};
  };
  c["algebra vp"] = [load_element](const Options& o) {
    AffineMonoid m = load_monoid(o);
    SpecPoset s = spec(m);
    return Result{json{{"vp", integer_to_json(vp_element(m, prime_flag(s, o), load_element(m, o, 1)))}}};
  };
  c["algebra quotient"] = [load_element](const Options& o) {
    AffineMonoid m = load_monoid(o);
    MonoidIdeal k = ideal_flag(m, o);
    QuotientElement q = quotient_project(load_element(m, o, 1), k);
    return Result{json{{"element", algebra_to_json(q.base.terms())}, {"reduced", is_reduced_quotient(m, k)}}};
  };
  c["algebra components"] = [](const Options& o) {
    AffineMonoid m = load_monoid(o);
    json a = json::array();
    for (const auto& p : hypersurface_components(m, element_flag(m, o))) a.push_back(indices_json(p.face));
    return Result{json{{"components", a}}};
  };

  // series ------------------------------------------------------------------
  c["series truncate"] = [](const Options& o) {
    return Result{json{{"basis", elements_json(series_truncate(load_monoid(o), need(o.order, "order")))}}};
  };
  c["series mul"] = [load_element](const Options& o) {
    AffineMonoid m = load_monoid(o);
    std::size_t n = need(o.order, "order");
    return Result{series_json(series_mul(to_series(load_element(m, o, 1), n), to_series(load_element(m, o, 2), n)))};
  };
  c["series cofinality"] = [](const Options& o) {
    Cofinality k = cofinality_check(load_monoid(o), functional_flag(o), need(o.order, "order"));
    return Result{json{{"m1", k.m1}, {"m2", integer_to_json(k.m2)}}};
  };

  // rees --------------------------------------------------------------------
  c["rees build"] = [](const Options& o) {
    AffineMonoid m = load_monoid(o);
    return Result{monoid_to_json(rees(m, ideal_flag(m, o)))};
  };
  c["rees member"] = [](const Options& o) {
    AffineMonoid m = load_monoid(o);
    MonoidIdeal k = ideal_flag(m, o);
    AffineMonoid b = rees(m, k);
    json j = parse_flag("element", need(o.element, "element"));
    GroupElement x = element_from_json(b.ambient(), j);
    return Result{json{{"member", b.contains(x)}}};
  };
  return c;
}

const char* usage =
    "usage: monoidgeom <noun> <verb> [inputs...] [options]\n"
    "\n"
    "nouns and verbs:\n"
    "  monoid  info saturate sharpen units irreducibles contains embed classify\n"
    "          valuative dominate exact\n"
    "  pres    groupify integralize integral equal coequalizer pushout tautological\n"
    "  spec    primes faces dot faces-dot height radical primary localize idealized\n"
    "  dual    dual double perp valuations vector check ball\n"
    "  algebra add mul eval support vp quotient components\n"
    "  series  truncate mul cofinality\n"
    "  rees    build member\n"
    "\n"
    "options: --bound N --order N --face I,J --prime I --ideal JSON --element JSON\n"
    "         --functional JSON --x WORD --y WORD --radius R --strict\n"
    "exit codes: 0 ok, 2 invalid input or failed precondition, 3 unknown under --strict\n"
    "MONOIDGEOM_STRICT=1 has the same effect as --strict.\n";

int emit_error(std::ostream& out, const std::string& code, const std::string& message) {
  out << json{{"error", {{"code", code}, {"message", message}}}}.dump() << "\n";
  return exit_invalid;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    out << usage;
    return args.empty() ? exit_invalid : exit_ok;
  }
  if (args.size() < 2) return emit_error(out, "Usage", "expected <noun> <verb>");
  static const auto table = commands();
  auto it = table.find(args[0] + " " + args[1]);
  if (it == table.end()) return emit_error(out, "Usage", "unknown command: " + args[0] + " " + args[1]);

  Options o;
  CLI::App app{"monoidgeom " + args[0] + " " + args[1]};
  app.add_option("inputs", o.inputs);
  app.add_option("--bound", o.bound);
  app.add_option("--order", o.order);
  app.add_option("--prime", o.prime);
  app.add_option("--radius", o.radius);
  app.add_option("--face", o.face);
  app.add_option("--element", o.element);
  app.add_option("--ideal", o.ideal);
  app.add_option("--functional", o.functional);
  app.add_option("--x", o.x);
  app.add_option("--y", o.y);
  app.add_flag("--strict", o.strict);
  std::vector<std::string> rest(args.rbegin(), args.rend() - 2);
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    return emit_error(out, "Usage", e.what());
  }
  if (const char* env = std::getenv("MONOIDGEOM_STRICT"); env && std::string(env) == "1") o.strict = true;

  try {
    Result r = it->second(o);
    if (r.text)
      out << *r.text;
    else
      out << r.value.dump() << "\n";
    return r.unknown && o.strict ? exit_unknown : exit_ok;
  } catch (const MonoidError& e) {
    return emit_error(out, std::string(to_string(e.code())), e.what());
  } catch (const json::exception& e) {
    return emit_error(out, "Validation", e.what());
  }
}

}  // namespace monoidgeom::cli
