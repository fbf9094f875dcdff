#include "qha/presentations/quiver.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qha/error.hpp"

namespace qha {

void Quiver::validate() const {
  if (vertex_count <= 0) throw ValidationError("InvalidQuiver", "a quiver needs at least one vertex");
  std::set<std::string> names;
  for (const auto& a : arrows) {
    if (!names.insert(a.name).second) throw ValidationError("InvalidQuiver", "duplicate arrow name '" + a.name + "'");
    if (a.source < 0 || a.source >= vertex_count || a.target < 0 || a.target >= vertex_count)
      throw ValidationError("InvalidQuiver", "arrow '" + a.name + "' has an endpoint outside the vertex range");
  }
}

std::optional<int> Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

Quiver Quiver::opposite() const {
  Quiver q = *this;
  for (auto& a : q.arrows) std::swap(a.source, a.target);
  return q;
}

Path Path::arrow(const Quiver& q, int index) {
  const Arrow& a = q.arrows.at(static_cast<std::size_t>(index));
  return {a.source, a.target, {index}};
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
  if (auto c = a.letters <=> b.letters; c != 0) return c;
  if (auto c = a.source <=> b.source; c != 0) return c;
  return a.target <=> b.target;
}

std::optional<Path> concatenate(const Path& x, const Path& y) {
  if (x.source != y.target) return std::nullopt;
  Path p{y.source, x.target, x.letters};
  p.letters.insert(p.letters.end(), y.letters.begin(), y.letters.end());
  return p;
}

std::string path_name(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e" + std::to_string(p.source + 1);
  std::string s;
  for (std::size_t i = 0; i < p.letters.size(); ++i) {
    if (i) s += '*';
    s += q.arrows[static_cast<std::size_t>(p.letters[i])].name;
  }
  return s;
}

void lincomb_add(const Field& f, LinComb& into, const Path& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.try_emplace(p, c);
  if (!inserted) {
    it->second = f.add(it->second, c);
    if (it->second.is_zero()) into.erase(it);
  }
}

std::string lincomb_str(const Quiver& q, const LinComb& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    const auto& [p, c] = *it;
    std::string cs = c.str();
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs.erase(0, 1);
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << '-';
    if (cs != "1") os << cs << '*';
    os << path_name(q, p);
    first = false;
  }
  return os.str();
}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::optional<int> trivial_vertex(const Quiver& q, const std::string& tok) {
  if (tok.size() < 2 || tok[0] != 'e') return std::nullopt;
  for (std::size_t i = 1; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return std::nullopt;
  int v = std::stoi(tok.substr(1)) - 1;
  if (v < 0 || v >= q.vertex_count) throw ValidationError("UnknownVertex", "trivial path '" + tok + "' out of range");
  return v;
}

Path parse_term_path(const Quiver& q, const std::vector<std::string>& factors) {
  std::optional<Path> acc;
  for (const auto& tok : factors) {
    Path step;
    if (auto idx = q.arrow_index(tok)) {
      step = Path::arrow(q, *idx);
    } else if (auto v = trivial_vertex(q, tok)) {
      step = Path::trivial(*v);
    } else {
      if (!is_identifier(tok)) throw ParseError("malformed factor '" + tok + "'");
      throw ValidationError("UnknownArrow", "unknown arrow '" + tok + "'");
    }
    if (!acc) {
      acc = step;
      continue;
    }
    auto joined = concatenate(*acc, step);
    if (!joined)
      throw ValidationError("NotAPath", "factors '" + path_name(q, *acc) + "' and '" + tok + "' do not compose");
    acc = std::move(*joined);
  }
  if (!acc) throw ParseError("empty term");
  return *acc;
}

}  // namespace

LinComb parse_lincomb(const Quiver& q, const Field& f, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty linear combination");
  if (s == "0") return {};

  LinComb out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected '+' or '-' in '" + text + "'");
    }
    std::size_t end = s.find_first_of("+-", pos);
    std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end;
    if (term.empty()) throw ParseError("empty term in '" + text + "'");

    std::vector<std::string> factors;
    std::stringstream ss(term);
    for (std::string tok; std::getline(ss, tok, '*');) factors.push_back(tok);
    Rational coeff = 1;
    if (!factors.empty() && (std::isdigit(static_cast<unsigned char>(factors[0][0])))) {
      try {
        coeff = Rational::parse(factors[0]);
      } catch (const std::invalid_argument&) {
        throw ParseError("malformed coefficient '" + factors[0] + "' in '" + text + "'");
      }
      factors.erase(factors.begin());
    }
    if (factors.empty()) throw ParseError("term '" + term + "' has no path");
    Path p = parse_term_path(q, factors);
    lincomb_add(f, out, p, f.from(sign < 0 ? -coeff : coeff));
  }
  return out;
}

}  // namespace qha
