#include "qha/localisation/proj_map.hpp"

#include <fstream>
#include <sstream>

#include "qha/error.hpp"

namespace qha {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<int> parse_summands(const std::string& text, int vertices, int line) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  std::vector<int> out;
  if (s == "0") return out;
  std::istringstream in(s);
  for (std::string tok; std::getline(in, tok, '+');) {
    if (tok.size() < 2 || tok[0] != 'P') fail(line, "expected a summand P<k>, got '" + tok + "'");
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(line, "bad summand '" + tok + "'");
    }
    if (k < 1 || k > vertices) throw ValidationError("UnknownVertex", "no vertex " + std::to_string(k));
    out.push_back(k - 1);
  }
  if (out.empty()) fail(line, "empty summand list (write 0 for the zero module)");
  return out;
}

std::string summand_str(const std::vector<int>& s) {
  if (s.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "+P" : "P") + std::to_string(s[k] + 1);
  return out;
}

}  // namespace

void ProjMap::validate(const PathAlgebra& alg) const {
  const int n = alg.vertex_count();
  for (int v : source)
    if (v < 0 || v >= n) throw ValidationError("InvalidSigma", "map '" + name + "': vertex out of range");
  for (int v : target)
    if (v < 0 || v >= n) throw ValidationError("InvalidSigma", "map '" + name + "': vertex out of range");
  if (entries.size() != target.size())
    throw ValidationError("InvalidSigma", "map '" + name + "': entry matrix has the wrong number of rows");
  for (std::size_t t = 0; t < entries.size(); ++t) {
    if (entries[t].size() != source.size())
      throw ValidationError("InvalidSigma", "map '" + name + "': entry matrix has the wrong number of columns");
    for (std::size_t s = 0; s < source.size(); ++s)
      for (const auto& [p, c] : entries[t][s])
        if (p.source != target[t] || p.target != source[s])
          throw ValidationError("InvalidSigma", "map '" + name + "': entry (" + std::to_string(t + 1) + "," +
                                                    std::to_string(s + 1) + ") contains " +
                                                    path_name(alg.quiver(), p) + ", which does not run P" +
                                                    std::to_string(target[t] + 1) + " → P" +
                                                    std::to_string(source[s] + 1));
  }
}

ProjMap right_multiplication(const AlgebraPtr& alg, const LinComb& x, int j, int i, std::string name) {
  ProjMap out{std::move(name), {j}, {i}, {{alg->normal_form(x)}}};
  out.validate(*alg);
  return out;
}

ProjMapModules to_module_map(const ProjMap& sigma, const AlgebraPtr& alg) {
  sigma.validate(*alg);
  ProjectiveSum src = projective_sum(alg, sigma.source);
  ProjectiveSum tgt = projective_sum(alg, sigma.target);
  std::vector<Vec> images;
  for (std::size_t s = 0; s < sigma.source.size(); ++s) {
    const int j = sigma.source[s];
    Vec img(tgt.rep().total_dim());
    for (std::size_t t = 0; t < sigma.target.size(); ++t) {
      const int i = sigma.target[t];
      if (sigma.entries[t][s].empty()) continue;
      Vec coords = alg->coordinates(sigma.entries[t][s]);
      const auto& words = alg->words_between(i, j);
      Vec at_j(words.size());
      for (std::size_t r = 0; r < words.size(); ++r) at_j[r] = coords[words[r]];
      const ModuleMap& inj = tgt.parts.injections[t];
      img = vec_add(alg->field(), img, inj.apply(inj.source.embed(at_j, j)));
    }
    images.push_back(std::move(img));
  }
  ModuleMap map = map_from_projective_sum(src, tgt.rep(), images);
  return {std::move(src), std::move(tgt), std::move(map)};
}

ProjMap from_module_map(const ProjectiveSum& source, const ProjectiveSum& target, const ModuleMap& h,
                        std::string name) {
  const AlgebraPtr& alg = h.source.algebra();
  ProjMap out{std::move(name), source.summands, target.summands, {}};
  out.entries.assign(target.summands.size(), std::vector<LinComb>(source.summands.size()));
  for (std::size_t s = 0; s < source.summands.size(); ++s) {
    const int j = source.summands[s];
    Vec y = h.apply(source.generator(s));
    for (std::size_t t = 0; t < target.summands.size(); ++t) {
      const int i = target.summands[t];
      const ModuleMap& proj = target.parts.projections[t];
      Vec at_j = proj.target.component(proj.apply(y), j);
      const auto& words = alg->words_between(i, j);
      LinComb x;
      for (std::size_t r = 0; r < words.size(); ++r)
        if (!at_j[r].is_zero()) x[alg->basis()[words[r]]] = at_j[r];
      out.entries[t][s] = std::move(x);
    }
  }
  return out;
}

std::vector<ProjMap> parse_sigma(const std::string& text, const AlgebraPtr& alg) {
  std::vector<ProjMap> out;
  std::istringstream in(text);
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::string line = trim(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "map") {
      std::string rest = line.substr(3);
      const auto colon = rest.find(':');
      const auto arrow = rest.find("->");
      if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
        fail(n, "expected 'map <name> : <summands> -> <summands>'");
      std::string name = trim(rest.substr(0, colon));
      if (name.empty() || name.find(' ') != std::string::npos) fail(n, "bad map name '" + name + "'");
      ProjMap m{name, parse_summands(rest.substr(colon + 1, arrow - colon - 1), alg->vertex_count(), n),
                parse_summands(rest.substr(arrow + 2), alg->vertex_count(), n),
                {}};
      m.entries.assign(m.target.size(), std::vector<LinComb>(m.source.size()));
      out.push_back(std::move(m));
    } else if (head == "entry") {
      if (out.empty()) fail(n, "'entry' before any 'map'");
      long long t = 0, s = 0;
      if (!(ls >> t >> s)) fail(n, "expected 'entry <row> <column> <lincomb>'");
      std::string body;
      std::getline(ls, body);
      ProjMap& m = out.back();
      if (t < 1 || s < 1 || static_cast<std::size_t>(t) > m.target.size() ||
          static_cast<std::size_t>(s) > m.source.size())
        fail(n, "entry position out of range");
      body = trim(body);
      if (body.empty()) fail(n, "missing entry value");
      LinComb x = parse_lincomb(alg->quiver(), alg->field(), body);
      m.entries[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(s - 1)] = alg->normal_form(x);
    } else {
      fail(n, "unknown directive '" + head + "'");
    }
  }
  for (const auto& m : out) m.validate(*alg);
  return out;
}

std::vector<ProjMap> load_sigma(const std::filesystem::path& file, const AlgebraPtr& alg) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open '" + file.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_sigma(ss.str(), alg);
}

std::string serialize_sigma(const std::vector<ProjMap>& maps, const PathAlgebra& alg) {
  std::ostringstream os;
  for (const auto& m : maps) {
    os << "map " << (m.name.empty() ? "sigma" : m.name) << " : " << summand_str(m.source) << " -> "
       << summand_str(m.target) << '\n';
    for (std::size_t t = 0; t < m.entries.size(); ++t)
      for (std::size_t s = 0; s < m.entries[t].size(); ++s)
        if (!m.entries[t][s].empty())
          os << "entry " << t + 1 << ' ' << s + 1 << ' ' << lincomb_str(alg.quiver(), m.entries[t][s]) << '\n';
  }
  return os.str();
}

ProjMap sigma_for_module(const Representation& u, std::string name) {
  ResolutionReport r = resolve(u, 2);
  if (r.capped())
    throw HypothesisError("ProjectiveDimensionTooLarge", "module '" + name + "' has projective dimension at least 2");
  if (r.terms.size() == 1) {
    ProjMap out{std::move(name), {}, r.terms[0].summands, {}};
    out.entries.assign(out.target.size(), {});
    return out;
  }
  return from_module_map(r.terms[1], r.terms[0], r.differentials[1], std::move(name));
}

}  // namespace qha
