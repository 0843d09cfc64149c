#include <cctype>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "qutrit/nmrsim.hpp"

namespace qutrit {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::string upper(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

double parse_number(const Token& t, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(t.text, &used);
    if (used == t.text.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("expected a number, got '" + t.text + "'", line, t.column);
}

int parse_level(const Token& t, std::size_t line) {
  if (t.text == "1" || t.text == "2" || t.text == "3") return t.text[0] - '0';
  throw ParseError("expected a level 1, 2 or 3, got '" + t.text + "'", line, t.column);
}

Axis parse_axis(const Token& t, std::size_t line) {
  const std::string a = upper(t.text);
  if (a == "X") return Axis::X;
  if (a == "Y") return Axis::Y;
  if (a == "Z") return Axis::Z;
  throw ParseError("expected an axis x, y or z, got '" + t.text + "'", line, t.column);
}

void expect_count(const std::vector<Token>& toks, std::size_t n, std::size_t line,
                  const std::string& usage) {
  if (toks.size() == n) return;
  const std::size_t col =
      toks.size() > n ? toks[n].column : toks.back().column + toks.back().text.size();
  throw ParseError("expected '" + usage + "'", line, col);
}

char axis_char(Axis a) { return a == Axis::X ? 'x' : a == Axis::Y ? 'y' : 'z'; }

std::string num(double v) {
  char buf[40];
  // 15 digits absorb the degree/radian round trip, so 180 stays "180".
  std::snprintf(buf, sizeof buf, "%.15g", v);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

}  // namespace

PulseSequence parse_sequence(std::istream& in) {
  PulseSequence seq;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string kw = upper(toks[0].text);
    if (kw == "TR") {
      expect_count(toks, 5, lineno, "TR r s axis angle_deg");
      const int r = parse_level(toks[1], lineno);
      const int s = parse_level(toks[2], lineno);
      const Axis ax = parse_axis(toks[3], lineno);
      const double ang = radians(parse_number(toks[4], lineno));
      try {
        seq.events.push_back(transition(r, s, ax, ang));
      } catch (const InvalidTransition& e) {
        throw ParseError(e.what(), lineno, toks[1].column);
      }
    } else if (kw == "NS") {
      expect_count(toks, 3, lineno, "NS axis angle_deg");
      seq.events.push_back(NonselectivePulse{parse_axis(toks[1], lineno),
                                             radians(parse_number(toks[2], lineno))});
    } else if (kw == "ZC") {
      expect_count(toks, 4, lineno, "ZC a1 a2 a3");
      ZCascade z{};
      for (int k = 0; k < 3; ++k) z.angles[k] = radians(parse_number(toks[k + 1], lineno));
      seq.events.push_back(z);
    } else if (kw == "CRUSH") {
      expect_count(toks, 1, lineno, "CRUSH");
      seq.events.push_back(Crush{});
    } else {
      throw ParseError("unknown event '" + toks[0].text + "'", lineno, toks[0].column);
    }
  }
  return seq;
}

PulseSequence parse_sequence(const std::string& text) {
  std::istringstream in(text);
  return parse_sequence(in);
}

void write_sequence(std::ostream& out, const PulseSequence& seq) {
  for (const auto& ev : seq.events) {
    if (const auto* t = std::get_if<TransitionPulse>(&ev)) {
      out << "TR " << t->levels.r << ' ' << t->levels.s << ' ' << axis_char(t->axis) << ' '
          << num(degrees(t->angle)) << '\n';
    } else if (const auto* n = std::get_if<NonselectivePulse>(&ev)) {
      out << "NS " << axis_char(n->axis) << ' ' << num(degrees(n->angle)) << '\n';
    } else if (const auto* z = std::get_if<ZCascade>(&ev)) {
      out << "ZC " << num(degrees(z->angles[0])) << ' ' << num(degrees(z->angles[1])) << ' '
          << num(degrees(z->angles[2])) << '\n';
    } else {
      out << "CRUSH\n";
    }
  }
}

std::string format_sequence(const PulseSequence& seq) {
  std::ostringstream out;
  write_sequence(out, seq);
  return out.str();
}

}  // namespace qutrit
