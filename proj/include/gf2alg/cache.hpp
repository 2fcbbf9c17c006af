#ifndef GF2ALG_CACHE_HPP
#define GF2ALG_CACHE_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gf2alg/grassmann.hpp"
#include "gf2alg/text.hpp"
#include "gf2alg/version.hpp"

namespace gf2alg {

// Basis files are byte-exact reproducible: keys sorted, two-space indent,
// polynomials in canonical text form, trailing newline.
inline std::string serialize_basis(const GroebnerBasis& basis, IdealSpec spec) {
  nlohmann::json j;  // nlohmann::json keeps keys sorted
  j["k"] = spec.k;
  j["n"] = spec.n;
  nlohmann::json order = nlohmann::json::array();
  for (int v : basis.order().precedence()) order.push_back("w" + std::to_string(v));
  j["order"] = order;
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : basis.generators()) gens.push_back(format_polynomial(g));
  j["generators"] = gens;
  nlohmann::json lms = nlohmann::json::array();
  for (const auto& m : basis.leading_monomials()) lms.push_back(format_monomial(m));
  j["lm"] = lms;
  j["reduced"] = basis.reduced();
  return j.dump(2) + "\n";
}

inline GroebnerBasis parse_basis(const std::string& text, IdealSpec expected) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("k").get<int>() != expected.k || j.at("n").get<int>() != expected.n)
    throw DomainError("basis file is for different (n, k)");
  std::vector<int> prec;
  for (const auto& o : j.at("order")) {
    std::string s = o.get<std::string>();
    if (s.size() < 2 || s[0] != 'w') throw DomainError("bad order entry in basis file");
    prec.push_back(std::stoi(s.substr(1)));
  }
  MonomialOrder ord = MonomialOrder::lex(prec);
  VariableSet vars(expected.k);
  std::vector<PolynomialF2> gens;
  for (const auto& g : j.at("generators"))
    gens.push_back(parse_polynomial(g.get<std::string>(), vars, ord));
  GroebnerBasis basis(std::move(gens), j.at("reduced").get<bool>());
  std::vector<std::string> lm_in;
  for (const auto& m : j.at("lm")) lm_in.push_back(m.get<std::string>());
  std::vector<std::string> lm_have;
  for (const auto& m : basis.leading_monomials()) lm_have.push_back(format_monomial(m));
  if (lm_in != lm_have) throw DomainError("basis file leading monomials are inconsistent");
  return basis;
}

inline std::string cache_file_name(IdealSpec spec, const MonomialOrder& order) {
  std::string ord;
  for (int v : order.precedence()) ord += "w" + std::to_string(v);
  return "gb-n" + std::to_string(spec.n) + "-k" + std::to_string(spec.k) + "-" + ord + "-v" +
         std::to_string(kCacheFormatVersion) + ".json";
}

// Loads a cached reduced basis if present, else computes one with buchberger
// and writes it. The cache key includes the format version, so stale files
// from other versions are simply never consulted.
inline GroebnerBasis load_or_compute_basis(IdealSpec spec, const MonomialOrder& order,
                                           const std::filesystem::path& cache_dir) {
  namespace fs = std::filesystem;
  fs::path file = cache_dir / cache_file_name(spec, order);
  if (!cache_dir.empty() && fs::exists(file)) {
    std::ifstream in(file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_basis(buf.str(), spec);
  }
  GroebnerBasis basis = buchberger(ideal_generators(spec), order);
  if (!cache_dir.empty()) {
    fs::create_directories(cache_dir);
    std::ofstream out(file, std::ios::binary);
    out << serialize_basis(basis, spec);
  }
  return basis;
}

}  // namespace gf2alg

#endif
