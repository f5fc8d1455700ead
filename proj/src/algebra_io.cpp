#include "nlie/algebra_io.hpp"

#include <fstream>
#include <sstream>

namespace nlie {

using nlohmann::ordered_json;

ordered_json field_to_json(const FieldSpec& f) {
  ordered_json j;
  if (f.is_finite()) {
    j["kind"] = "GF";
    j["p"] = f.prime();
  } else {
    j["kind"] = "Q";
  }
  return j;
}

ordered_json vec_to_json(const Vec& v) {
  auto arr = ordered_json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

ordered_json subspace_to_json(const Subspace& s) {
  ordered_json j;
  j["ambient"] = s.ambient();
  j["dim"] = s.dim();
  auto rows = ordered_json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(vec_to_json(s.row(i)));
  j["basis"] = rows;
  return j;
}

std::string serialize_algebra(const NLieAlgebra& alg) {
  ordered_json j;
  j["field"] = field_to_json(alg.field());
  j["n"] = alg.arity();
  j["dim"] = alg.dim();
  j["basis"] = alg.basis_names();
  auto brackets = ordered_json::array();
  for (const auto& [key, value] : alg.table()) {
    ordered_json entry;
    auto args = ordered_json::array();
    for (std::size_t i : key_tuple(key, alg.arity())) args.push_back(i + 1);
    entry["args"] = args;
    ordered_json coords;
    for (std::size_t i = 0; i < value.size(); ++i)
      if (!value[i].is_zero()) coords[std::to_string(i + 1)] = value[i].str();
    entry["value"] = coords;
    brackets.push_back(entry);
  }
  j["brackets"] = brackets;
  return j.dump(2) + "\n";
}

namespace {

NLieAlgebra parse_algebra_json(const std::string& text, bool validate);

}  // namespace

NLieAlgebra parse_algebra(const std::string& text, bool validate) {
  try {
    return parse_algebra_json(text, validate);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed algebra file: ") + e.what());
  }
}

namespace {

NLieAlgebra parse_algebra_json(const std::string& text, bool validate) {
  ordered_json j = ordered_json::parse(text);
  FieldSpec f = FieldSpec::rationals();
  const auto& jf = j.at("field");
  std::string kind = jf.at("kind").get<std::string>();
  if (kind == "GF")
    f = FieldSpec::gf(jf.at("p").get<std::uint32_t>());
  else if (kind != "Q")
    throw std::invalid_argument("unknown field kind: " + kind);
  std::size_t n = j.at("n").get<std::size_t>();
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<std::string> names;
  if (j.contains("basis")) names = j.at("basis").get<std::vector<std::string>>();
  NLieAlgebra alg(f, n, dim, std::move(names));
  if (j.contains("brackets")) {
    for (const auto& entry : j.at("brackets")) {
      std::vector<std::size_t> args;
      for (const auto& a : entry.at("args")) {
        std::size_t i = a.get<std::size_t>();
        if (i == 0) throw std::invalid_argument("bracket args are 1-based");
        args.push_back(i - 1);
      }
      Vec value = vec_zero(f, dim);
      for (const auto& [pos, scalar] : entry.at("value").items()) {
        std::size_t i = std::stoul(pos);
        if (i == 0 || i > dim) throw std::invalid_argument("bracket value index out of range");
        value[i - 1] = Scalar::parse(f, scalar.get<std::string>());
      }
      alg.set_bracket(args, std::move(value));
    }
  }
  if (validate) {
    JacobiReport report = validate_jacobi(alg, true);
    if (!report.ok) {
      std::ostringstream msg;
      msg << "algebra fails the Jacobi identity at x=(";
      for (std::size_t i : report.violations.front().x_tuple) msg << " " << i + 1;
      msg << " ), y=(";
      for (std::size_t i : report.violations.front().y_tuple) msg << " " << i + 1;
      msg << " )";
      throw std::invalid_argument(msg.str());
    }
  }
  return alg;
}

}  // namespace

NLieAlgebra load_algebra_file(const std::string& path, bool validate) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str(), validate);
}

void save_algebra_file(const NLieAlgebra& alg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << serialize_algebra(alg);
}

}  // namespace nlie
