#include "detrs/text_io.hpp"

#include <charconv>
#include <sstream>

namespace detrs {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::ParseError, what); }

u64 parse_u64(std::string_view s, const char* what) {
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    bad(std::string("malformed ") + what + " '" + std::string(s) + "'");
  return v;
}

int parse_int(std::string_view s, const char* what) {
  u64 v = parse_u64(s, what);
  if (v > 1'000'000'000) bad(std::string(what) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

std::string trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string_view::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

FieldPtr parse_field(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::string tok;
  std::optional<u64> p;
  unsigned r = 1;
  std::vector<u64> mod;
  Field::Options opt;
  while (in >> tok) {
    if (tok == "trusted") {
      opt.trusted_prime = true;
    } else if (tok.rfind("p=", 0) == 0) {
      p = parse_u64(std::string_view(tok).substr(2), "characteristic");
    } else if (tok.rfind("r=", 0) == 0) {
      r = static_cast<unsigned>(parse_int(std::string_view(tok).substr(2), "extension degree"));
    } else if (tok.rfind("mod=", 0) == 0) {
      for (const std::string& c : split_on(std::string_view(tok).substr(4), ','))
        mod.push_back(parse_u64(c, "modulus coefficient"));
    } else {
      bad("unknown field token '" + tok + "'");
    }
  }
  if (!p) bad("field needs p=<prime>");
  return Field::make(*p, r, std::move(mod), opt);
}

std::string format_field(const Field& f) {
  std::string s = "p=" + std::to_string(f.p());
  if (f.r() > 1) {
    s += " r=" + std::to_string(f.r()) + " mod=";
    for (std::size_t i = 0; i < f.modulus().size(); ++i) s += (i ? "," : "") + std::to_string(f.modulus()[i]);
  }
  if (f.trusted_prime()) s += " trusted";
  return s;
}

Fe parse_fe(const Field& f, std::string_view s) {
  std::string t = trim(s);
  if (f.r() == 1) {
    u64 v = parse_u64(t, "field element");
    if (v >= f.p()) bad("field element " + t + " is not below p");
    return Fe{v};
  }
  std::vector<std::string> parts = split_on(t, ':');
  if (parts.size() > f.r()) bad("too many coordinates in '" + t + "'");
  std::vector<u64> c;
  for (const std::string& x : parts) {
    u64 v = parse_u64(x, "coordinate");
    if (v >= f.p()) bad("coordinate " + x + " is not below p");
    c.push_back(v);
  }
  c.resize(f.r(), 0);
  return f.from_coords(c);
}

std::string format_fe(const Field& f, Fe a) {
  if (f.r() == 1) return std::to_string(a.v);
  std::vector<u64> c = f.coords(a);
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ":" : "") + std::to_string(c[i]);
  return s;
}

UniPoly parse_unipoly(const FieldPtr& f, std::string_view s) {
  std::vector<Fe> c;
  for (const std::string& x : split_on(s, ',')) c.push_back(parse_fe(*f, x));
  return UniPoly(f, std::move(c));
}

std::string format_unipoly(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + format_fe(p.field(), p.coeff(i));
  return s;
}

BiPoly parse_bipoly(const FieldPtr& f, std::string_view s) {
  std::vector<UniPoly> slices;
  for (const std::string& x : split_on(s, ';')) slices.push_back(parse_unipoly(f, x));
  return BiPoly::from_slices(f, slices);
}

std::string format_bipoly(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int b = 0; b < p.ny(); ++b) s += (b ? ";" : "") + format_unipoly(p.slice(b));
  return s;
}

Instance parse_instance(std::string_view text) {
  Instance inst;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_k = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      inst.comments.push_back(trim(std::string_view(t).substr(1)));
      continue;
    }
    std::size_t sp = t.find_first_of(" \t");
    std::string key = t.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : trim(std::string_view(t).substr(sp));
    auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
    if (key == "field") {
      if (inst.field) bad("duplicate field directive" + where());
      inst.field = parse_field(rest);
    } else if (key == "k") {
      inst.k = parse_int(rest, "k");
      have_k = true;
    } else if (key == "point") {
      if (!inst.field) bad("point before field" + where());
      std::istringstream ps(rest);
      std::string a, b, extra;
      if (!(ps >> a >> b) || (ps >> extra)) bad("point needs two values" + where());
      inst.points.push_back({parse_fe(*inst.field, a), parse_fe(*inst.field, b)});
    } else {
      bad("unknown directive '" + key + "'" + where());
    }
  }
  if (!inst.field) bad("missing field directive");
  if (!have_k) bad("missing k directive");
  return inst;
}

std::string format_instance(const Instance& inst) {
  std::string s;
  for (const std::string& c : inst.comments) s += "# " + c + "\n";
  s += "field " + format_field(*inst.field) + "\n";
  s += "k " + std::to_string(inst.k) + "\n";
  for (const Point& p : inst.points)
    s += "point " + format_fe(*inst.field, p.x) + " " + format_fe(*inst.field, p.y) + "\n";
  return s;
}

}  // namespace detrs
