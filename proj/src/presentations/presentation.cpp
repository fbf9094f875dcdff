#include "qha/presentations/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qha/error.hpp"

namespace qha {

namespace {

std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  return line;
}

long long parse_int(const std::string& tok, int lineno) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(lineno) + ": expected an integer, got '" + tok + "'");
  }
}

[[noreturn]] void bad_line(int lineno, const std::string& what) {
  throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Presentation parse_presentation(const std::string& text, const std::string& default_name) {
  Presentation p;
  p.name = default_name;
  bool have_field = false, have_vertices = false;
  std::vector<std::pair<int, std::string>> relation_lines;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ls(strip_comment(raw));
    std::string key;
    if (!(ls >> key)) continue;
    std::vector<std::string> toks;
    if (key != "relation")
      for (std::string t; ls >> t;) toks.push_back(t);

    if (key == "field") {
      if (toks.empty()) bad_line(lineno, "field needs a value");
      if (toks[0] == "Q" && toks.size() == 1) {
        p.field = Field::rationals();
      } else if (toks[0] == "F" && toks.size() == 2) {
        p.field = Field::prime(static_cast<std::uint64_t>(parse_int(toks[1], lineno)));
      } else if (toks[0].size() > 1 && toks[0][0] == 'F' && toks.size() == 1) {
        p.field = Field::prime(static_cast<std::uint64_t>(parse_int(toks[0].substr(1), lineno)));
      } else {
        bad_line(lineno, "field must be 'Q' or 'F <p>'");
      }
      have_field = true;
    } else if (key == "vertices") {
      if (toks.size() != 1) bad_line(lineno, "vertices takes one integer");
      p.quiver.vertex_count = static_cast<int>(parse_int(toks[0], lineno));
      if (p.quiver.vertex_count <= 0) throw ValidationError("InvalidQuiver", "vertex count must be positive");
      have_vertices = true;
    } else if (key == "arrow") {
      if (!have_vertices) bad_line(lineno, "arrow before vertices");
      if (toks.size() != 3) bad_line(lineno, "arrow takes a name, a source and a target");
      p.quiver.arrows.push_back(Arrow{toks[0], static_cast<int>(parse_int(toks[1], lineno)) - 1,
                                      static_cast<int>(parse_int(toks[2], lineno)) - 1});
    } else if (key == "relation") {
      std::string rest;
      std::getline(ls, rest);
      relation_lines.emplace_back(lineno, rest);
    } else if (key == "degree-cap") {
      if (toks.size() != 1) bad_line(lineno, "degree-cap takes one integer");
      p.degree_cap = static_cast<int>(parse_int(toks[0], lineno));
      if (p.degree_cap < 2) throw ValidationError("InvalidCap", "degree-cap must be at least 2");
    } else if (key == "name") {
      if (toks.size() != 1) bad_line(lineno, "name takes one identifier");
      p.name = toks[0];
    } else {
      bad_line(lineno, "unknown directive '" + key + "'");
    }
  }
  if (!have_vertices) throw ParseError("missing 'vertices' line");
  (void)have_field;  // Q is the default
  p.quiver.validate();
  for (const auto& a : p.quiver.arrows) {
    bool ok = !a.name.empty() && std::isalpha(static_cast<unsigned char>(a.name[0]));
    for (char c : a.name) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) throw ParseError("invalid arrow name '" + a.name + "'");
  }
  for (const auto& [ln, body] : relation_lines) {
    try {
      p.relations.push_back(parse_lincomb(p.quiver, p.field, body));
    } catch (const ParseError& e) {
      bad_line(ln, e.what());
    }
  }
  return p;
}

Presentation load_presentation(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open '" + file.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str(), file.stem().string());
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "name " << p.name << '\n';
  os << "field " << (p.field.is_rationals() ? std::string("Q") : "F " + std::to_string(p.field.characteristic()))
     << '\n';
  os << "vertices " << p.quiver.vertex_count << '\n';
  for (const auto& a : p.quiver.arrows) os << "arrow " << a.name << ' ' << a.source + 1 << ' ' << a.target + 1 << '\n';
  for (const auto& r : p.relations) os << "relation " << lincomb_str(p.quiver, r) << '\n';
  os << "degree-cap " << p.degree_cap << '\n';
  return os.str();
}

Presentation opposite(const Presentation& p) {
  Presentation q = p;
  q.name = p.name + "^op";
  q.quiver = p.quiver.opposite();
  q.relations.clear();
  for (const auto& r : p.relations) {
    LinComb out;
    for (const auto& [path, c] : r) {
      Path rev{path.target, path.source, path.letters};
      std::reverse(rev.letters.begin(), rev.letters.end());
      out.emplace(std::move(rev), c);
    }
    q.relations.push_back(std::move(out));
  }
  return q;
}

}  // namespace qha
