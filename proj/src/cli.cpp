#include "vss/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "vss/derham.hpp"
#include "vss/graded_hom.hpp"
#include "vss/json_io.hpp"
#include "vss/points.hpp"
#include "vss/semigroup.hpp"
#include "vss/text.hpp"

namespace vss::cli {

namespace {

// A kernel error raised while reading the command's inputs.
struct InputError {
  Error error;
};

template <class F>
auto read_input(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError{e};
  }
}

[[noreturn]] void usage(const std::string& what) { throw InputError{Error(ErrorKind::UsageError, what)}; }

struct Options {
  bool json = false;
  Rank q = 0;
  std::optional<Rank> target;
  std::optional<Rank> range;
  std::string dims;
  std::string ranks;
  std::vector<std::string> maps;
  std::vector<std::string> points;
  std::string gens;
  std::string lambda;
  std::string kind;
  unsigned max_weight = 5;
  unsigned max_degree = 3;
  std::vector<std::string> payload;
};

struct Output {
  std::string text;
  json data;
};

SuperDomainSpec domain_of(const Options& o) {
  return read_input([&] {
    const auto comma = o.dims.find(',');
    if (comma == std::string::npos) usage("--dims expects M,N");
    try {
      std::size_t used_m = 0;
      std::size_t used_n = 0;
      const std::string m = o.dims.substr(0, comma);
      const std::string n = o.dims.substr(comma + 1);
      const unsigned long mv = std::stoul(m, &used_m);
      const unsigned long nv = std::stoul(n, &used_n);
      if (used_m != m.size() || used_n != n.size() || m.empty() || n.empty() || m[0] == '-' ||
          n[0] == '-' || mv > 32 || nv > 32)
        usage("--dims expects M,N with small natural numbers");
      return SuperDomainSpec{static_cast<unsigned>(mv), static_cast<unsigned>(nv)};
    } catch (const std::logic_error&) {
      usage("--dims expects M,N");
    }
  });
}

std::vector<Rank> ranks_of(const Options& o) {
  return read_input([&] {
    std::vector<Rank> out;
    std::stringstream ss(o.ranks);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(item, &used);
        if (used != item.size() || item.empty() || item[0] == '-' || v > kMaxRank)
          usage("--ranks expects a comma-separated list of ranks");
        out.push_back(static_cast<Rank>(v));
      } catch (const std::logic_error&) {
        usage("--ranks expects a comma-separated list of ranks");
      }
    }
    return out;
  });
}

const std::string& single_payload(const Options& o, const char* what) {
  if (o.payload.size() != 1) usage(std::string("expected exactly one ") + what);
  return o.payload.front();
}

GrassmannElement element_arg(const Options& o) {
  const std::string& text = single_payload(o, "element");
  return read_input([&] { return parse_element(text, o.q); });
}

std::string beta_text(Monomial beta) {
  std::string out = "{";
  const auto idx = beta.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + std::to_string(idx[i]);
  return out + "}";
}

json subalgebra_json(const SubalgebraBasis& A) {
  json even = json::array();
  json odd = json::array();
  for (const auto& b : A.even()) even.push_back(to_json(b));
  for (const auto& b : A.odd()) odd.push_back(to_json(b));
  return {{"rank", A.rank()}, {"dimension", A.dimension()}, {"even", even}, {"odd", odd}};
}

// ---------------------------------------------------------------------------

Output cmd_mul(const Options& o) {
  if (o.payload.empty()) usage("mul expects at least one element");
  std::vector<GrassmannElement> factors = read_input([&] {
    std::vector<GrassmannElement> v;
    for (const auto& text : o.payload) v.push_back(parse_element(text, o.q));
    return v;
  });
  GrassmannElement product = GrassmannElement::constant(o.q, Scalar(1));
  for (const auto& f : factors) product = mul(product, f);
  return {to_string(product), to_json(product)};
}

Output cmd_body(const Options& o) {
  const Scalar b = body(element_arg(o));
  return {b.to_string(), {{"body", b.to_string()}}};
}

Output cmd_invert(const Options& o) {
  const GrassmannElement inv = invert(element_arg(o));
  return {to_string(inv), to_json(inv)};
}

Output cmd_hom_apply(const Options& o) {
  if (o.maps.size() != 1) usage("hom-apply expects one --map");
  const GrassmannElement a = element_arg(o);
  const GradedHom phi = read_input([&] {
    const Rank target = o.target ? *o.target : std::max(o.q, parse_endo(o.maps[0]).range());
    return parse_hom(o.maps[0], o.q, target);
  });
  const GrassmannElement image = apply_hom(phi, a);
  return {to_string(image), to_json(image)};
}

Output cmd_hom_compose(const Options& o) {
  const std::vector<Rank> ranks = ranks_of(o);
  if (o.maps.size() != 2 || ranks.size() != 3)
    usage("hom-compose expects --ranks Q0,Q1,Q2 and two --map (first f, then g)");
  const auto [f, g] = read_input([&] {
    return std::pair{parse_hom(o.maps[0], ranks[0], ranks[1]), parse_hom(o.maps[1], ranks[1], ranks[2])};
  });
  const GradedHom gf = compose_hom(g, f);
  return {to_string(gf), to_json(gf)};
}

Output cmd_lemma1(const Options& o) {
  const auto gens = read_input([&] { return parse_element_list(o.gens, o.q); });
  const SubalgebraBasis A = subalgebra_closure(o.q, gens);
  const OddLineHom h = lemma1_epi(A);
  const HomReport report = verify_hom(h, A.all());
  std::string text;
  text += "subalgebra dim " + std::to_string(A.dimension()) + " (even " +
          std::to_string(A.even().size()) + ", odd " + std::to_string(A.odd().size()) + ")\n";
  text += "m = " + std::to_string(h.order()) + "\n";
  text += "beta = " + beta_text(h.beta()) + "\n";
  text += "h(a) = a[{}] + a[" + beta_text(h.beta()) + "]*zeta\n";
  text += std::string("verified: ") + (report.empty() && report.surjective() ? "yes" : "no");
  json beta = h.beta().indices();
  return {text,
          {{"m", h.order()}, {"beta", beta}, {"subalgebra", subalgebra_json(A)}, {"report", to_json(report)}}};
}

Output cmd_jfamily(const Options& o) {
  const auto [gens, lambda] = read_input([&] {
    if (o.lambda.empty()) usage("jfamily expects --lambda");
    return std::pair{parse_element_list(o.gens, o.q), Scalar::parse(o.lambda)};
  });
  const SubalgebraBasis A = subalgebra_closure(o.q, gens);
  const OddLineHom h = lemma1_epi(A);
  const JLambdaMap j = j_family(h, A, lambda);
  std::vector<GrassmannElement> inputs;
  if (o.payload.empty()) {
    inputs = A.all();
  } else {
    inputs.push_back(element_arg(o));
    if (!A.contains(inputs.front()))
      fail(ErrorKind::DomainMismatch, "element " + to_string(inputs.front()) + " is not in the subalgebra");
  }
  std::string text;
  json images = json::array();
  for (const auto& a : inputs) {
    const GrassmannElement image = j(a);
    if (!text.empty()) text += "\n";
    text += to_string(a) + " -> " + to_string(image, "zeta");
    images.push_back({{"input", to_json(a)}, {"output", to_json(image)}});
  }
  return {text, {{"lambda", lambda.to_string()}, {"beta", h.beta().indices()}, {"images", images}}};
}

Output cmd_point_eval(const Options& o) {
  const SuperDomainSpec domain = domain_of(o);
  if (o.points.size() != 1) usage("point-eval expects one --point");
  const std::string& text = single_payload(o, "superfunction");
  const auto [f, kappa] = read_input([&] {
    return std::pair{parse_superfunction(text, domain), parse_point(o.points[0], domain, o.q)};
  });
  const GrassmannElement value = eval_superfunction(f, kappa);
  return {to_string(value), to_json(value)};
}

Output cmd_point_map(const Options& o) {
  const SuperDomainSpec domain = domain_of(o);
  if (o.points.size() != 1 || o.maps.size() != 1) usage("point-map expects one --point and one --map");
  const auto [kappa, phi] = read_input([&] {
    const Rank target = o.target ? *o.target : std::max(o.q, parse_endo(o.maps[0]).range());
    return std::pair{parse_point(o.points[0], domain, o.q), parse_hom(o.maps[0], o.q, target)};
  });
  const QPoint image = induced_point_map(phi, kappa);
  return {to_string(image), to_json(image)};
}

Output cmd_eact(const Options& o) {
  const SuperDomainSpec domain = domain_of(o);
  if (o.points.size() != 1 || o.maps.size() != 1) usage("eact expects one --point and one --map");
  const auto [kappa, g] = read_input([&] {
    return std::pair{parse_point(o.points[0], domain), parse_endo(o.maps[0])};
  });
  const PtInftyClass start = normalize_class(kappa, domain);
  const PtInftyClass result = o.range ? act_at_range(g, start, *o.range) : act(g, start);
  return {to_string(result), to_json(result)};
}

Output cmd_class_eq(const Options& o) {
  const SuperDomainSpec domain = domain_of(o);
  if (o.points.size() != 2) usage("class-eq expects two --point");
  const auto [a, b] = read_input([&] {
    return std::pair{parse_point(o.points[0], domain), parse_point(o.points[1], domain)};
  });
  const bool equal = classes_equal(normalize_class(a, domain), normalize_class(b, domain));
  return {equal ? "true" : "false", {{"equal", equal}}};
}

Output cmd_derham_d(const Options& o) {
  const SuperDomainSpec domain = domain_of(o);
  const std::string& text = single_payload(o, "form");
  const SuperForm form = read_input([&] { return parse_form(text, domain); });
  const SuperForm result = d(form);
  return {to_string(result), to_json(result)};
}

Output cmd_derham_antider(const Options& o) {
  const SuperDomainSpec domain = domain_of(o);
  const std::string& text = single_payload(o, "form");
  const SuperForm form = read_input([&] { return parse_form(text, domain); });
  const SuperForm result = antiderivative(form);
  return {to_string(result), to_json(result)};
}

Output cmd_derham_cohomology(const Options& o) {
  const SuperDomainSpec domain = domain_of(o);
  const auto dims = cohomology_dims(domain.even_dim, domain.odd_dim, o.max_degree, o.max_weight);
  const auto cross = cohomology_dims_homotopy(domain.even_dim, domain.odd_dim, o.max_degree, o.max_weight);
  if (dims != cross)
    fail(ErrorKind::VerificationFailed, "elimination and Euler homotopy disagree");
  std::string text;
  for (std::size_t p = 0; p < dims.size(); ++p)
    text += (p ? "\n" : "") + std::string("H^") + std::to_string(p) + " = " + std::to_string(dims[p]);
  return {text,
          {{"dims", {domain.even_dim, domain.odd_dim}},
           {"max_degree", o.max_degree},
           {"max_weight", o.max_weight},
           {"betti", dims}}};
}

Output cmd_parse_check(const Options& o) {
  const std::string& text = single_payload(o, "expression");
  const std::string& kind = o.kind;
  if (kind == "element") {
    const auto v = read_input([&] { return parse_element(text, o.q); });
    return {to_string(v), to_json(v)};
  }
  if (kind == "superfunction") {
    const SuperDomainSpec domain = domain_of(o);
    const auto v = read_input([&] { return parse_superfunction(text, domain); });
    return {to_string(v), to_json(v)};
  }
  if (kind == "form") {
    const SuperDomainSpec domain = domain_of(o);
    const auto v = read_input([&] { return parse_form(text, domain); });
    return {to_string(v), to_json(v)};
  }
  if (kind == "hom") {
    const auto v = read_input([&] {
      const Rank target = o.target ? *o.target : std::max(o.q, parse_endo(text).range());
      return parse_hom(text, o.q, target);
    });
    return {to_string(v), to_json(v)};
  }
  if (kind == "endo") {
    const auto v = read_input([&] { return parse_endo(text); });
    return {to_string(v), to_json(v)};
  }
  if (kind == "point") {
    const SuperDomainSpec domain = domain_of(o);
    const auto v = read_input([&] { return parse_point(text, domain, o.q); });
    return {to_string(v), to_json(v)};
  }
  usage("unknown --kind '" + kind + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computer algebra for Grassmann algebras, superpoints and super de Rham complexes"};
  app.name(args.empty() ? "vss" : args.front());
  app.require_subcommand(1, 1);

  using Handler = std::function<Output(const Options&)>;
  std::map<std::string, Handler> handlers;

  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", o.json, "Emit JSON instead of canonical text");
    handlers[name] = std::move(h);
    return sub;
  };
  auto rank_opt = [&](CLI::App* sub) { sub->add_option("-q,--rank", o.q, "Grassmann rank")->required(); };
  auto dims_opt = [&](CLI::App* sub) { sub->add_option("--dims", o.dims, "Superdomain dimensions M,N")->required(); };
  auto payload = [&](CLI::App* sub, const char* name) { sub->add_option(name, o.payload, "Expression(s)"); };

  {
    auto* s = add("mul", "Multiply Grassmann elements left to right", cmd_mul);
    rank_opt(s);
    payload(s, "elements");
  }
  {
    auto* s = add("body", "Constant term of an element", cmd_body);
    rank_opt(s);
    payload(s, "element");
  }
  {
    auto* s = add("invert", "Inverse of an element with nonzero body", cmd_invert);
    rank_opt(s);
    payload(s, "element");
  }
  {
    auto* s = add("hom-apply", "Apply a substitution homomorphism", cmd_hom_apply);
    rank_opt(s);
    s->add_option("--target", o.target, "Target rank");
    s->add_option("--map", o.maps, "Images, e.g. \"xi1=xi1+xi2; xi2=0\"")->allow_extra_args(false);
    payload(s, "element");
  }
  {
    auto* s = add("hom-compose", "Compose two homomorphisms (g after f)", cmd_hom_compose);
    s->add_option("--ranks", o.ranks, "Ranks Q0,Q1,Q2 of f: Q0->Q1 and g: Q1->Q2")->required();
    s->add_option("--map", o.maps, "f, then g")->allow_extra_args(false);
  }
  {
    auto* s = add("lemma1", "Surjection of a subalgebra onto the rank-1 algebra", cmd_lemma1);
    rank_opt(s);
    s->add_option("--gens", o.gens, "Generators \"e1; e2; ...\"")->required();
  }
  {
    auto* s = add("jfamily", "Members j_lambda of the one-parameter family of homomorphisms", cmd_jfamily);
    rank_opt(s);
    s->add_option("--gens", o.gens, "Generators \"e1; e2; ...\"")->required();
    s->add_option("--lambda", o.lambda, "Rational parameter P/Q")->required();
    payload(s, "element");
  }
  {
    auto* s = add("point-eval", "Evaluate a superfunction at a q-point", cmd_point_eval);
    dims_opt(s);
    rank_opt(s);
    s->add_option("--point", o.points, "Coordinates \"x1=...; th1=...\"")->allow_extra_args(false);
    payload(s, "superfunction");
  }
  {
    auto* s = add("point-map", "Push a q-point through a Grassmann homomorphism", cmd_point_map);
    dims_opt(s);
    rank_opt(s);
    s->add_option("--target", o.target, "Target rank");
    s->add_option("--point", o.points, "Coordinates \"x1=...; th1=...\"")->allow_extra_args(false);
    s->add_option("--map", o.maps, "Images \"xi1=...; ...\"")->allow_extra_args(false);
  }
  {
    auto* s = add("eact", "Act by a finite-range endomorphism on the direct limit", cmd_eact);
    dims_opt(s);
    s->add_option("--point", o.points, "Representative \"x1=...; th1=...\"")->allow_extra_args(false);
    s->add_option("--map", o.maps, "Endomorphism \"xi1=...; ...\"")->allow_extra_args(false);
    s->add_option("--range", o.range, "Rank to compute the action at");
  }
  {
    auto* s = add("class-eq", "Compare two points of the direct limit", cmd_class_eq);
    dims_opt(s);
    s->add_option("--point", o.points, "Representatives (twice)")->allow_extra_args(false);
  }
  {
    auto* s = add("derham-d", "Exterior differential of a form", cmd_derham_d);
    dims_opt(s);
    payload(s, "form");
  }
  {
    auto* s = add("derham-antider", "Primitive of a closed form", cmd_derham_antider);
    dims_opt(s);
    payload(s, "form");
  }
  {
    auto* s = add("derham-cohomology", "Cohomology dimensions of the truncated complex", cmd_derham_cohomology);
    dims_opt(s);
    s->add_option("--max-degree", o.max_degree, "Largest form degree P");
    s->add_option("--max-weight", o.max_weight, "Largest weight W");
  }
  {
    auto* s = add("parse-check", "Parse and print a value canonically", cmd_parse_check);
    s->add_option("--kind", o.kind, "element|superfunction|form|hom|endo|point")->required();
    s->add_option("-q,--rank", o.q, "Grassmann rank");
    s->add_option("--dims", o.dims, "Superdomain dimensions M,N");
    s->add_option("--target", o.target, "Target rank (hom)");
    payload(s, "text");
  }

  if (args.size() > 1 && !args[1].empty() && args[1].front() != '-' && !handlers.contains(args[1])) {
    err << "error: UsageError: unknown verb '" << args[1] << "'\n";
    return kUsageError;
  }

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: UsageError: " << e.what() << "\n";
    return kUsageError;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    const Output result = handlers.at(verb)(o);
    out << (o.json ? result.data.dump() : result.text) << "\n";
    return kSuccess;
  } catch (const InputError& e) {
    err << "error: " << e.error.name() << ": " << e.error.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace vss::cli
