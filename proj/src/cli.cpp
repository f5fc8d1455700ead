#include "nlie/cli.hpp"

#include <filesystem>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlie/algebra_io.hpp"
#include "nlie/catalog.hpp"
#include "nlie/conjugacy.hpp"
#include "nlie/engel.hpp"
#include "nlie/error.hpp"
#include "nlie/latticescan.hpp"
#include "nlie/repmod.hpp"
#include "nlie/series.hpp"

namespace nlie {

namespace {

using nlohmann::ordered_json;

constexpr const char* kSchema = "nlie.report/1";

struct Context {
  std::uint64_t seed = 1;
  std::uint64_t budget_points = LatticeBudget{}.max_points;
  std::string format = "text";
  bool no_validate = false;
  std::size_t jobs = 1;

  LatticeBudget budget() const {
    LatticeBudget b;
    b.max_points = budget_points;
    return b;
  }
};

// Thrown when a loaded algebra fails the Jacobi identity; maps to exit 1.
class ValidationFailure : public std::runtime_error {
 public:
  explicit ValidationFailure(const std::string& what) : std::runtime_error(what) {}
};

NLieAlgebra load_input(const Context& ctx, const std::string& path) {
  try {
    return load_algebra_file(path, !ctx.no_validate);
  } catch (const std::invalid_argument& e) {
    if (std::string(e.what()).find("Jacobi") != std::string::npos)
      throw ValidationFailure(e.what());
    throw;
  }
}

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

// "e3" is the third basis vector; "0,0,1" is a coordinate vector; rows are
// separated by ';'.
Subspace parse_subspace(const NLieAlgebra& alg, const std::string& spec) {
  std::vector<Vec> rows;
  for (const std::string& token : split_on(spec, ';')) {
    if (token.empty()) continue;
    if (token.front() == 'e' && token.find(',') == std::string::npos) {
      std::size_t i = std::stoul(token.substr(1));
      if (i == 0 || i > alg.dim()) throw std::invalid_argument("basis index out of range: " + token);
      rows.push_back(alg.basis_element(i - 1));
    } else {
      std::vector<std::string> coords = split_on(token, ',');
      if (coords.size() != alg.dim())
        throw std::invalid_argument("coordinate vector of wrong length: " + token);
      Vec v;
      for (const auto& c : coords) v.push_back(Scalar::parse(alg.field(), c));
      rows.push_back(std::move(v));
    }
  }
  return Subspace::span_rows(alg.field(), alg.dim(), rows);
}

std::vector<std::size_t> parse_indices(const NLieAlgebra& alg, const std::string& spec) {
  std::vector<std::size_t> out;
  for (const std::string& token : split_on(spec, ',')) {
    if (token.empty()) continue;
    std::size_t i = std::stoul(token);
    if (i == 0 || i > alg.dim()) throw std::invalid_argument("basis index out of range: " + token);
    out.push_back(i - 1);
  }
  return out;
}

std::string subspace_text(const Subspace& s) {
  std::ostringstream os;
  os << "dim " << s.dim() << " of " << s.ambient();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    os << "\n  [";
    for (std::size_t j = 0; j < s.ambient(); ++j) {
      if (j) os << ", ";
      os << s.basis().at(i, j).str();
    }
    os << "]";
  }
  return os.str();
}

void emit(const Context& ctx, std::ostream& out, const std::string& command,
          const ordered_json& result, const std::string& text) {
  if (ctx.format == "json") {
    ordered_json envelope;
    envelope["schema"] = kSchema;
    envelope["command"] = command;
    envelope["seed"] = ctx.seed;
    envelope["result"] = result;
    out << envelope.dump(2) << "\n";
  } else {
    out << text << "\n";
  }
}

ordered_json series_json(const SeriesReport& report) {
  ordered_json j;
  auto dims = ordered_json::array();
  for (const auto& t : report.terms) dims.push_back(t.dim());
  j["term_dims"] = dims;
  j["terminated_at_zero"] = report.terminated_at_zero;
  auto terms = ordered_json::array();
  for (const auto& t : report.terms) terms.push_back(subspace_to_json(t));
  j["terms"] = terms;
  return j;
}

int cmd_validate(const Context& ctx, std::ostream& out, const std::string& path) {
  NLieAlgebra alg = load_algebra_file(path, false);
  JacobiReport report = validate_jacobi(alg);
  ordered_json result;
  result["ok"] = report.ok;
  result["violations"] = report.violations.size();
  std::ostringstream text;
  if (report.ok) {
    text << "ok: algebra satisfies the Jacobi identity";
  } else {
    const auto& v = report.violations.front();
    auto tup = [](const std::vector<std::size_t>& t) {
      std::string s = "(";
      for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? "," : "") + std::to_string(t[i] + 1);
      return s + ")";
    };
    text << report.violations.size() << " violations; first at x=" << tup(v.x_tuple)
         << " y=" << tup(v.y_tuple);
    ordered_json first;
    first["x"] = v.x_tuple;
    first["y"] = v.y_tuple;
    first["defect"] = vec_to_json(v.defect);
    result["first_violation"] = first;
  }
  emit(ctx, out, "validate", result, text.str());
  return report.ok ? 0 : 1;
}

int cmd_info(const Context& ctx, std::ostream& out, const std::string& path) {
  NLieAlgebra alg = load_input(ctx, path);
  SeriesReport derived = derived_series(alg);
  SeriesReport lower = lower_central_series(alg);
  Subspace z = center(alg);
  ordered_json result;
  result["field"] = field_to_json(alg.field());
  result["n"] = alg.arity();
  result["dim"] = alg.dim();
  result["basis"] = alg.basis_names();
  result["bracket_entries"] = alg.table().size();
  result["abelian"] = is_abelian(alg);
  result["soluble"] = derived.terminated_at_zero;
  result["nilpotent"] = lower.terminated_at_zero;
  result["derived_series"] = series_json(derived)["term_dims"];
  result["lower_central_series"] = series_json(lower)["term_dims"];
  result["center_dim"] = z.dim();
  std::ostringstream text;
  text << "field " << alg.field().str() << ", arity " << alg.arity() << ", dim " << alg.dim()
       << "\nabelian: " << (is_abelian(alg) ? "yes" : "no")
       << ", soluble: " << (derived.terminated_at_zero ? "yes" : "no")
       << ", nilpotent: " << (lower.terminated_at_zero ? "yes" : "no") << "\nderived dims:";
  for (const auto& t : derived.terms) text << " " << t.dim();
  text << "\nlower central dims:";
  for (const auto& t : lower.terms) text << " " << t.dim();
  text << "\ncenter dim: " << z.dim();
  emit(ctx, out, "info", result, text.str());
  return 0;
}

int cmd_series(const Context& ctx, std::ostream& out, const std::string& path,
               const std::string& ideal_spec, std::size_t k) {
  NLieAlgebra alg = load_input(ctx, path);
  ordered_json result;
  std::ostringstream text;
  result["derived"] = series_json(derived_series(alg));
  result["lower_central"] = series_json(lower_central_series(alg));
  text << "derived dims:";
  for (const auto& t : derived_series(alg).terms) text << " " << t.dim();
  text << "\nlower central dims:";
  for (const auto& t : lower_central_series(alg).terms) text << " " << t.dim();
  if (!ideal_spec.empty()) {
    Subspace ideal = parse_subspace(alg, ideal_spec);
    if (!is_ideal(alg, ideal)) throw std::invalid_argument("--ideal is not an ideal");
    result["k"] = k;
    result["k_soluble_embedded"] = series_json(k_soluble_embedded_series(alg, ideal, k));
    result["k_nilpotent_embedded"] = series_json(k_nilpotent_series(alg, ideal, k));
    text << "\nk-soluble embedded dims (k=" << k << "):";
    for (const auto& t : k_soluble_embedded_series(alg, ideal, k).terms) text << " " << t.dim();
    text << "\nk-nilpotent embedded dims (k=" << k << "):";
    for (const auto& t : k_nilpotent_series(alg, ideal, k).terms) text << " " << t.dim();
  }
  emit(ctx, out, "series", result, text.str());
  return 0;
}

int cmd_engel(const Context& ctx, std::ostream& out, const std::string& path,
              const std::string& string_spec) {
  NLieAlgebra alg = load_input(ctx, path);
  std::vector<std::size_t> idx = parse_indices(alg, string_spec);
  if (idx.size() + 1 != alg.arity())
    throw std::invalid_argument("--string needs n-1 basis indices");
  std::vector<Vec> string_args;
  for (std::size_t i : idx) string_args.push_back(alg.basis_element(i));
  DerivationMatrix d = inner_derivation(alg, string_args);
  Subspace e = engel_set(alg, d.matrix);
  EngelWitness w{d, e};
  bool certified = is_engel_subalgebra(alg, w);
  ordered_json result;
  result["engel_set"] = subspace_to_json(e);
  result["certified"] = certified;
  std::ostringstream text;
  text << "Engel set: " << subspace_text(e) << "\ncertified Engel subalgebra: "
       << (certified ? "yes" : "no");
  emit(ctx, out, "engel", result, text.str());
  return certified ? 0 : 1;
}

int cmd_cartan(const Context& ctx, std::ostream& out, const std::string& path) {
  NLieAlgebra alg = load_input(ctx, path);
  Subspace s = cartan_subalgebra(alg, ctx.seed);
  ordered_json result;
  result["cartan"] = subspace_to_json(s);
  result["is_cartan"] = true;
  emit(ctx, out, "cartan", result, "Cartan subalgebra: " + subspace_text(s));
  return 0;
}

int cmd_frattini(const Context& ctx, std::ostream& out, const std::string& path) {
  NLieAlgebra alg = load_input(ctx, path);
  Subspace phi = frattini(alg, ctx.budget());
  ordered_json result;
  result["frattini"] = subspace_to_json(phi);
  emit(ctx, out, "frattini", result, "Frattini subalgebra: " + subspace_text(phi));
  return 0;
}

int cmd_split(const Context& ctx, std::ostream& out, const std::string& path,
              const std::string& ideal_spec) {
  NLieAlgebra alg = load_input(ctx, path);
  Subspace a = parse_subspace(alg, ideal_spec);
  try {
    PrimitiveSplit split = primitive_split(alg, a, ctx.seed, ctx.budget());
    ordered_json result;
    result["complement"] = subspace_to_json(split.complement);
    result["complement_dim"] = split.complement.dim();
    emit(ctx, out, "split", result, "complement: " + subspace_text(split.complement));
    return 0;
  } catch (const std::invalid_argument& e) {
    // the ideal fails a mathematical precondition of the theorem
    ordered_json result;
    result["error"] = e.what();
    emit(ctx, out, "split", result, std::string("not applicable: ") + e.what());
    return 1;
  }
}

int cmd_conjugate(const Context& ctx, std::ostream& out, const std::string& path,
                  const std::string& ideal_spec) {
  NLieAlgebra alg = load_input(ctx, path);
  Subspace a = parse_subspace(alg, ideal_spec);
  PrimitiveSplit split = primitive_split(alg, a, ctx.seed, ctx.budget());
  if (!split.witness) throw std::invalid_argument("degenerate split (L = A): nothing to conjugate");
  std::mt19937_64 rng(ctx.seed);
  Vec beta_a = vec_zero(alg.field(), alg.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    vec_add_scaled(beta_a, random_element(alg.field(), 1, rng)[0], a.row(i));
  std::vector<Vec> beta_x;
  for (std::size_t i = 0; i + 2 < alg.arity(); ++i)
    beta_x.push_back(random_element(alg.field(), alg.dim(), rng));
  AlgebraAutomorphism beta = a_inner_automorphism(alg, a, beta_a, beta_x);
  Subspace v = apply_to_subspace(beta.matrix, split.complement);
  AlgebraAutomorphism alpha =
      conjugate_complements(alg, a, split.complement, v, *split.witness);
  bool ok = apply_to_subspace(alpha.matrix, split.complement) == v;
  ordered_json result;
  result["complement"] = subspace_to_json(split.complement);
  result["image_complement"] = subspace_to_json(v);
  result["alpha_maps_U_to_V"] = ok;
  std::ostringstream text;
  text << "U: " << subspace_text(split.complement) << "\nV = beta(U): " << subspace_text(v)
       << "\nalpha(U) = V: " << (ok ? "yes" : "no");
  emit(ctx, out, "conjugate", result, text.str());
  return ok ? 0 : 1;
}

int cmd_theorems(const Context& ctx, std::ostream& out, const std::string& path) {
  NLieAlgebra alg = load_input(ctx, path);
  TheoremSuiteReport report = theorem_suite(alg, ctx.budget(), ctx.seed, {}, ctx.jobs);
  ordered_json result;
  result["checks"] = report.to_json();
  result["all_passed"] = report.all_passed();
  std::ostringstream text;
  for (const auto& c : report.checks) {
    text << (c.passed ? "[pass] " : "[FAIL] ") << c.id;
    if (!c.applicable) text << " (not applicable)";
    text << " instances=" << c.instances << "\n";
  }
  text << (report.all_passed() ? "all checks passed" : "counterexample found");
  emit(ctx, out, "theorems", result, text.str());
  return report.all_passed() ? 0 : 1;
}

int cmd_catalog(const Context& ctx, std::ostream& out, const std::string& name,
                const std::string& params_spec, const std::string& output) {
  std::map<std::string, std::string> params;
  for (const std::string& kv : split_on(params_spec, ',')) {
    if (kv.empty()) continue;
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad parameter: " + kv);
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  NLieAlgebra alg = catalog(name, params);
  std::string serialized = serialize_algebra(alg);
  if (!output.empty()) {
    save_algebra_file(alg, output);
    ordered_json result;
    result["written"] = output;
    result["dim"] = alg.dim();
    emit(ctx, out, "catalog", result, "wrote " + output);
  } else {
    out << serialized;
  }
  return 0;
}

int cmd_corpus(const Context& ctx, std::ostream& out, const std::string& field_spec,
               std::size_t count, std::size_t max_dim, const std::string& arities_spec,
               const std::string& outdir) {
  FieldSpec f = FieldSpec::rationals();
  if (field_spec != "Q") {
    auto parts = split_on(field_spec, ':');
    if (parts.size() != 2 || parts[0] != "GF")
      throw std::invalid_argument("--field must be Q or GF:p");
    f = FieldSpec::gf(static_cast<std::uint32_t>(std::stoul(parts[1])));
  }
  CorpusLimits limits;
  limits.max_members = count;
  limits.max_dim = max_dim;
  if (!arities_spec.empty()) {
    limits.arities.clear();
    for (const auto& tok : split_on(arities_spec, ','))
      if (!tok.empty()) limits.arities.push_back(std::stoul(tok));
  }
  std::vector<NLieAlgebra> members = corpus(ctx.seed, f, limits);
  ordered_json listing = ordered_json::array();
  for (std::size_t i = 0; i < members.size(); ++i) {
    ordered_json entry;
    entry["index"] = i;
    entry["n"] = members[i].arity();
    entry["dim"] = members[i].dim();
    if (!outdir.empty()) {
      std::ostringstream name;
      name << outdir << "/corpus_" << std::setw(3) << std::setfill('0') << i << ".json";
      save_algebra_file(members[i], name.str());
      entry["file"] = name.str();
    }
    listing.push_back(entry);
  }
  ordered_json result;
  result["members"] = listing;
  result["count"] = members.size();
  std::ostringstream text;
  text << members.size() << " corpus members";
  if (!outdir.empty()) text << " written to " << outdir;
  emit(ctx, out, "corpus", result, text.str());
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations with finite-dimensional n-Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Context ctx;
  app.add_option("--seed", ctx.seed, "seed for all randomised scans");
  app.add_option("--budget", ctx.budget_points, "enumeration budget (cap on p^dim)");
  app.add_option("--format", ctx.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-validate", ctx.no_validate, "skip Jacobi validation on load");
  app.add_option("--jobs", ctx.jobs, "parallel workers for independent suite checks");

  std::string path, ideal_spec, string_spec, name, params_spec, output, outdir;
  std::string field_spec = "GF:5", arities_spec;
  std::size_t k = 2, count = 40, max_dim = 5;

  CLI::App* validate = app.add_subcommand("validate", "check the Jacobi identity");
  validate->add_option("file", path)->required();

  CLI::App* info = app.add_subcommand("info", "structural summary");
  info->add_option("file", path)->required();

  CLI::App* series = app.add_subcommand("series", "derived and lower central series");
  series->add_option("file", path)->required();
  series->add_option("--ideal", ideal_spec, "ideal for the embedded series (e3 or coords;coords)");
  series->add_option("--k", k, "embedding parameter");

  CLI::App* engel = app.add_subcommand("engel", "Engel subalgebra of a basis string");
  engel->add_option("file", path)->required();
  engel->add_option("--string", string_spec, "n-1 basis indices, e.g. 1,2")->required();

  CLI::App* cartan = app.add_subcommand("cartan", "Cartan subalgebra by minimal Engel descent");
  cartan->add_option("file", path)->required();

  CLI::App* frattini = app.add_subcommand("frattini", "intersection of maximal subalgebras");
  frattini->add_option("file", path)->required();

  CLI::App* split = app.add_subcommand("split", "complement to a minimal abelian embedded ideal");
  split->add_option("file", path)->required();
  split->add_option("--ideal", ideal_spec)->required();

  CLI::App* conj = app.add_subcommand("conjugate", "conjugate two complements by an A-inner map");
  conj->add_option("file", path)->required();
  conj->add_option("--ideal", ideal_spec)->required();

  CLI::App* theorems = app.add_subcommand("theorems", "machine-check the theorem suite");
  theorems->add_option("file", path)->required();
  std::string suite = "all";
  theorems->add_option("--suite", suite, "which checks to run (all)");

  CLI::App* cat = app.add_subcommand("catalog", "emit a catalog algebra");
  cat->add_option("--name", name, "abelian | heis | aff | cross")->required();
  cat->add_option("--params", params_spec, "n=3,d=2,field=GF,p=5");
  cat->add_option("-o,--output", output, "output file (stdout if omitted)");

  CLI::App* corp = app.add_subcommand("corpus", "generate the validated corpus");
  corp->add_option("--field", field_spec, "Q or GF:p");
  corp->add_option("--count", count, "member cap");
  corp->add_option("--max-dim", max_dim, "dimension cap");
  corp->add_option("--arities", arities_spec, "comma-separated arities");
  corp->add_option("-o,--outdir", outdir, "directory for member files");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate) return cmd_validate(ctx, out, path);
    if (*info) return cmd_info(ctx, out, path);
    if (*series) return cmd_series(ctx, out, path, ideal_spec, k);
    if (*engel) return cmd_engel(ctx, out, path, string_spec);
    if (*cartan) return cmd_cartan(ctx, out, path);
    if (*frattini) return cmd_frattini(ctx, out, path);
    if (*split) return cmd_split(ctx, out, path, ideal_spec);
    if (*conj) return cmd_conjugate(ctx, out, path, ideal_spec);
    if (*theorems) return cmd_theorems(ctx, out, path);
    if (*cat) return cmd_catalog(ctx, out, name, params_spec, output);
    if (*corp) return cmd_corpus(ctx, out, field_spec, count, max_dim, arities_spec, outdir);
  } catch (const ValidationFailure& e) {
    err << "validation failure: " << e.what() << "\n";
    return 1;
  } catch (const SearchExhaustedError& e) {
    err << "search exhausted: " << e.what() << "\n";
    return 1;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace nlie
