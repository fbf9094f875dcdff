#include "qha/modcat/module_file.hpp"

#include <fstream>
#include <sstream>

#include "qha/error.hpp"

namespace qha {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    Line l{n, {}};
    for (std::string t; ls >> t;) l.tokens.push_back(t);
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

NamedModule parse_module(const std::string& text, const AlgebraPtr& alg) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "module" || lines[0].tokens.size() != 4 || lines[0].tokens[2] != "over")
    throw ParseError("module file must start with 'module <name> over <algebra>'");
  NamedModule out;
  out.name = lines[0].tokens[1];
  const std::string& over = lines[0].tokens[3];
  const std::string& base = alg->presentation().name;
  if (over == base + "^op") {
    out.right = true;
  } else if (over != base) {
    throw ValidationError("AlgebraMismatch", "module '" + out.name + "' is over '" + over + "', not '" + base + "'");
  }
  AlgebraPtr over_alg = out.right ? alg->opposite() : alg;
  const Quiver& q = over_alg->quiver();
  const Field& f = over_alg->field();

  std::size_t k = 1;
  if (k >= lines.size() || lines[k].tokens[0] != "dims") throw ParseError("missing 'dims' line");
  std::vector<std::size_t> dims;
  for (std::size_t t = 1; t < lines[k].tokens.size(); ++t) {
    try {
      long long d = std::stoll(lines[k].tokens[t]);
      if (d < 0) throw std::invalid_argument("negative");
      dims.push_back(static_cast<std::size_t>(d));
    } catch (const std::exception&) {
      fail(lines[k].number, "bad dimension '" + lines[k].tokens[t] + "'");
    }
  }
  if (dims.size() != static_cast<std::size_t>(q.vertex_count))
    fail(lines[k].number, "expected " + std::to_string(q.vertex_count) + " dimensions");
  ++k;

  std::vector<Mat> arrows;
  std::vector<bool> seen(q.arrows.size(), false);
  for (const auto& a : q.arrows)
    arrows.emplace_back(f, dims[static_cast<std::size_t>(a.target)], dims[static_cast<std::size_t>(a.source)]);
  while (k < lines.size()) {
    const Line& head = lines[k++];
    if (head.tokens[0] != "arrow" || head.tokens.size() != 2) fail(head.number, "expected 'arrow <name>'");
    auto idx = q.arrow_index(head.tokens[1]);
    if (!idx) throw ValidationError("UnknownArrow", "unknown arrow '" + head.tokens[1] + "'");
    const auto a = static_cast<std::size_t>(*idx);
    if (seen[a]) fail(head.number, "arrow '" + head.tokens[1] + "' given twice");
    seen[a] = true;
    Mat& m = arrows[a];
    if (m.rows() == 0 || m.cols() == 0) continue;
    for (std::size_t r = 0; r < m.rows(); ++r, ++k) {
      if (k >= lines.size()) fail(head.number, "matrix of '" + head.tokens[1] + "' is missing rows");
      const Line& row = lines[k];
      if (row.tokens.size() != m.cols())
        fail(row.number, "expected " + std::to_string(m.cols()) + " entries in a row of '" + head.tokens[1] + "'");
      for (std::size_t c = 0; c < m.cols(); ++c) {
        try {
          m(r, c) = f.from(Rational::parse(row.tokens[c]));
        } catch (const ParseError&) {
          fail(row.number, "bad entry '" + row.tokens[c] + "'");
        }
      }
    }
  }
  out.rep = Representation(over_alg, std::move(dims), std::move(arrows));
  return out;
}

NamedModule load_module(const std::filesystem::path& file, const AlgebraPtr& alg) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open '" + file.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_module(ss.str(), alg);
}

std::string serialize_module(const NamedModule& m, const std::string& algebra_name) {
  std::ostringstream os;
  os << "module " << m.name << " over " << algebra_name << (m.right ? "^op" : "") << "\ndims";
  for (auto d : m.rep.dims()) os << ' ' << d;
  os << '\n';
  const Quiver& q = m.rep.algebra()->quiver();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const Mat& mat = m.rep.arrow(a);
    if (mat.is_zero()) continue;
    os << "arrow " << q.arrows[a].name << '\n';
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      for (std::size_t c = 0; c < mat.cols(); ++c) os << (c ? " " : "") << mat(r, c).str();
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace qha
