#include "sphsys/textio.hpp"

#include <cctype>
#include <sstream>

namespace sphsys {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_spaces(std::string s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

int parse_root_name(const std::string& tok, int rank) {
  if (tok.size() < 2 || tok[0] != 'a') throw std::invalid_argument("expected a simple root name, got '" + tok + "'");
  for (std::size_t i = 1; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) throw std::invalid_argument("bad root name '" + tok + "'");
  int k = std::stoi(tok.substr(1));
  if (k < 1 || k > rank) throw std::invalid_argument("unknown root " + tok);
  return k - 1;
}

RootSet parse_root_list(const std::string& text, int rank) {
  std::string s = strip_spaces(text);
  RootSet out;
  if (s == "-" || s.empty()) return out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    int r = parse_root_name(item, rank);
    if (out.contains(r)) throw std::invalid_argument("root " + item + " listed twice");
    out.insert(r);
  }
  return out;
}

struct Line {
  int number;
  int indent;  // column of the first token, 1-based
  std::string keyword;
  std::string rest;
  int rest_column;
};

}  // namespace

LatticeVector parse_combination(const std::string& text, int rank) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty combination");
  LatticeVector v(rank);
  std::string term;
  std::istringstream in(s);
  while (std::getline(in, term, '+')) {
    if (term.empty()) throw std::invalid_argument("empty term in '" + text + "'");
    std::size_t i = 0;
    int k = 1;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
      k = std::stoi(term.substr(0, i));
      if (i < term.size() && term[i] == '*') ++i;
    }
    if (k <= 0) throw std::invalid_argument("nonpositive coefficient in '" + term + "'");
    v[parse_root_name(term.substr(i), rank)] += k;
  }
  return v;
}

std::vector<SphericalSystem> parse_systems(const std::string& text) {
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (std::size_t h = raw.find('#'); h != std::string::npos) raw.erase(h);
      std::size_t b = raw.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      std::size_t e = raw.find_first_of(" \t\r", b);
      Line l;
      l.number = number;
      l.indent = static_cast<int>(b) + 1;
      l.keyword = raw.substr(b, e == std::string::npos ? std::string::npos : e - b);
      std::size_t r = e == std::string::npos ? std::string::npos : raw.find_first_not_of(" \t\r", e);
      l.rest = r == std::string::npos ? "" : trim(raw.substr(r));
      l.rest_column = r == std::string::npos ? static_cast<int>(raw.size()) + 1 : static_cast<int>(r) + 1;
      lines.push_back(std::move(l));
    }
  }

  std::vector<SphericalSystem> out;
  std::size_t i = 0;
  while (i < lines.size()) {
    const Line& head = lines[i];
    if (head.keyword != "system" || !head.rest.empty())
      throw ParseError(head.number, head.indent, "expected 'system', got '" + head.keyword + "'");
    ++i;
    bool have_roots = false, have_sp = false, have_sigma = false, closed = false;
    RootSystem rs;
    RootSet sp;
    std::vector<LatticeVector> sigma;
    struct PendingColor {
      const Line* line;
      AColor color;
    };
    std::vector<PendingColor> colors;
    int block_end = head.number;
    for (; i < lines.size(); ++i) {
      const Line& l = lines[i];
      block_end = l.number;
      auto fail = [&](const std::string& msg) -> ParseError { return ParseError(l.number, l.rest_column, msg); };
      if (l.keyword == "end") {
        if (!l.rest.empty()) throw fail("unexpected text after 'end'");
        closed = true;
        ++i;
        break;
      }
      if (l.keyword == "roots") {
        if (have_roots) throw fail("duplicate 'roots' line");
        try {
          rs = RootSystem::parse(l.rest);
        } catch (const std::exception& e) {
          throw fail(e.what());
        }
        have_roots = true;
        continue;
      }
      if (l.keyword != "sp" && l.keyword != "sigma" && l.keyword != "apair")
        throw ParseError(l.number, l.indent, "unknown keyword '" + l.keyword + "'");
      if (!have_roots) throw ParseError(l.number, l.indent, "'" + l.keyword + "' before 'roots'");
      try {
        if (l.keyword == "sp") {
          if (have_sp) throw std::invalid_argument("duplicate 'sp' line");
          sp = parse_root_list(l.rest, rs.rank());
          have_sp = true;
        } else if (l.keyword == "sigma") {
          if (have_sigma) throw std::invalid_argument("duplicate 'sigma' line");
          std::string s = strip_spaces(l.rest);
          if (s != "-" && !s.empty()) {
            std::string item;
            std::istringstream in(s);
            while (std::getline(in, item, ',')) sigma.push_back(parse_combination(item, rs.rank()));
          }
          have_sigma = true;
        } else {
          std::istringstream in(l.rest);
          std::string name, moved;
          if (!(in >> name >> moved)) throw std::invalid_argument("expected 'apair <name> <roots> <values>'");
          AColor c;
          c.name = name;
          c.moved_by = parse_root_list(moved, rs.rank());
          std::string tok;
          while (in >> tok) {
            std::size_t used = 0;
            int v = 0;
            try {
              v = std::stoi(tok, &used);
            } catch (const std::exception&) {
              used = 0;
            }
            if (used != tok.size()) throw std::invalid_argument("expected an integer, got '" + tok + "'");
            c.row.push_back(v);
          }
          colors.push_back({&l, std::move(c)});
        }
      } catch (const std::invalid_argument& e) {
        throw fail(e.what());
      }
    }
    if (!closed) throw ParseError(block_end, 1, "missing 'end'");
    if (!have_roots) throw ParseError(head.number, 1, "block without 'roots'");

    RootSet simple;
    for (const LatticeVector& g : sigma)
      if (int a = g.as_simple_root(); a >= 0) simple.insert(a);
    std::vector<AColor> apart;
    for (auto& pc : colors) {
      const Line& l = *pc.line;
      if (pc.color.row.size() != sigma.size())
        throw ParseError(l.number, l.rest_column,
                         "row of '" + pc.color.name + "' has " + std::to_string(pc.color.row.size()) +
                             " values, expected " + std::to_string(sigma.size()));
      if (pc.color.moved_by.empty() || !pc.color.moved_by.subset_of(simple))
        throw ParseError(l.number, l.rest_column,
                         "A-color '" + pc.color.name + "' must be moved by simple roots in S cap Sigma");
      apart.push_back(std::move(pc.color));
    }
    try {
      out.emplace_back(rs, sp, std::move(sigma), std::move(apart));
    } catch (const std::invalid_argument& e) {
      throw ParseError(head.number, 1, e.what());
    }
  }
  return out;
}

SphericalSystem parse_system(const std::string& text) {
  std::vector<SphericalSystem> all = parse_systems(text);
  if (all.size() != 1) throw ParseError(1, 1, "expected exactly one system block, found " + std::to_string(all.size()));
  return all.front();
}

std::string print_system(const SphericalSystem& sys) {
  std::ostringstream out;
  out << "system\n";
  out << "  roots " << sys.root_system().name() << "\n";
  out << "  sp " << format_root_set(sys.sp()) << "\n";
  out << "  sigma ";
  if (sys.sigma().empty()) out << "-";
  for (std::size_t i = 0; i < sys.sigma().size(); ++i) out << (i ? ", " : "") << format_vector(sys.sigma()[i]);
  out << "\n";
  for (const AColor& c : sys.apart()) {
    out << "  apair " << c.name << " " << format_root_set(c.moved_by);
    for (int v : c.row) out << " " << v;
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

}  // namespace sphsys
