#include "nilform/io.hpp"

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nilform {

namespace {

using json = nlohmann::json;

constexpr int kRankLimit = 512;

long long int_entry(const json& e, const std::string& where) {
  if (!e.is_number_integer())
    throw MalformedDocument(where +
                            ": entry is not an integer in the 64-bit "
                            "interchange range");
  if (e.is_number_unsigned() &&
      e.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
    throw MalformedDocument(where + ": entry exceeds the 64-bit interchange range");
  return e.get<long long>();
}

int rank_field(const json& j, const char* name) {
  const json& e = j.at(name);
  if (!e.is_number_integer())
    throw MalformedDocument(std::string(name) + ": must be an integer");
  long long v = int_entry(e, name);
  if (v < 0) throw DimensionMismatch(std::string(name) + ": must be nonnegative");
  if (v > kRankLimit)
    throw DimensionMismatch(std::string(name) + ": exceeds the supported rank " +
                            std::to_string(kRankLimit));
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

Int parse_int(const std::string& text, const std::string& where) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw MalformedDocument(where + ": \"" + text + "\" is not an integer");
  }
}

std::vector<Int> parse_int_list(const std::string& text, int expected,
                                const std::string& where) {
  std::vector<Int> out;
  if (expected == 0) {
    if (!text.empty())
      throw DimensionMismatch(where + ": expected no coordinates, got \"" + text + "\"");
    return out;
  }
  std::vector<std::string> parts = split(text, ',');
  if (static_cast<int>(parts.size()) != expected)
    throw DimensionMismatch(where + ": expected " + std::to_string(expected) +
                            " coordinates, got " + std::to_string(parts.size()));
  out.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    out.push_back(parse_int(parts[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

SkewTriple parse_triple(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedDocument(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw MalformedDocument("document must be a JSON object");
  if (j.size() != 3 || !j.contains("m") || !j.contains("n") || !j.contains("forms"))
    throw MalformedDocument(
        "document must have exactly the keys \"forms\", \"m\", \"n\"");

  const int m = rank_field(j, "m");
  const int n = rank_field(j, "n");

  const json& forms = j.at("forms");
  if (!forms.is_array())
    throw MalformedDocument("forms: must be an array of matrices");
  if (static_cast<int>(forms.size()) != m)
    throw DimensionMismatch("forms: expected " + std::to_string(m) +
                            " matrices, got " + std::to_string(forms.size()));

  std::vector<SkewIntMatrix> out;
  out.reserve(forms.size());
  for (int k = 0; k < m; ++k) {
    const json& fk = forms.at(static_cast<std::size_t>(k));
    const std::string fkw = "forms[" + std::to_string(k) + "]";
    if (!fk.is_array() || static_cast<int>(fk.size()) != n)
      throw DimensionMismatch(fkw + ": expected " + std::to_string(n) + " rows");
    IntMatrix mat(n, n);
    for (int i = 0; i < n; ++i) {
      const json& row = fk.at(static_cast<std::size_t>(i));
      const std::string rw = fkw + "[" + std::to_string(i) + "]";
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw DimensionMismatch(rw + ": expected " + std::to_string(n) + " entries");
      for (int jj = 0; jj < n; ++jj)
        mat(i, jj) = Int(static_cast<long>(
            int_entry(row.at(static_cast<std::size_t>(jj)),
                      rw + "[" + std::to_string(jj) + "]")));
    }
    try {
      out.emplace_back(std::move(mat));
    } catch (const NotSkew&) {
      throw NotSkew(fkw + ": matrix is not skew-symmetric");
    }
  }
  return SkewTriple(m, n, std::move(out));
}

std::string emit_triple(const SkewTriple& t) {
  t.validate();
  const Int lo(std::numeric_limits<long>::min());
  const Int hi(std::numeric_limits<long>::max());
  for (const SkewIntMatrix& f : t.forms)
    for (int i = 0; i < t.n; ++i)
      for (int j = 0; j < t.n; ++j)
        if (f(i, j) < lo || f(i, j) > hi)
          throw DomainError("form entry exceeds the 64-bit interchange range");

  std::ostringstream s;
  s << "{\"forms\":[";
  for (int k = 0; k < t.m; ++k) {
    if (k > 0) s << ',';
    s << t.forms[k].matrix().to_string();
  }
  s << "],\"m\":" << t.m << ",\"n\":" << t.n << '}';
  return s.str();
}

GroupElement parse_element(const std::string& text, const SkewTriple& t) {
  std::vector<std::string> halves = split(text, ';');
  if (halves.size() != 2)
    throw MalformedDocument("element must be \"a1,...;b1,...\" with one semicolon");
  GroupElement x;
  x.a = parse_int_list(halves[0], t.m, "central part");
  x.b = parse_int_list(halves[1], t.n, "base part");
  return x;
}

std::string emit_element(const GroupElement& x) {
  std::ostringstream s;
  for (std::size_t i = 0; i < x.a.size(); ++i) {
    if (i > 0) s << ',';
    s << x.a[i];
  }
  s << ';';
  for (std::size_t i = 0; i < x.b.size(); ++i) {
    if (i > 0) s << ',';
    s << x.b[i];
  }
  return s.str();
}

Rat parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    Int p = parse_int(text, "rational");
    return Rat(p);
  }
  Int p = parse_int(text.substr(0, slash), "numerator");
  Int q = parse_int(text.substr(slash + 1), "denominator");
  if (q == 0) throw MalformedDocument("rational has denominator zero");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string emit_rational(const Rat& q) {
  std::ostringstream s;
  if (q.get_den() == 1)
    s << q.get_num();
  else
    s << q.get_num() << '/' << q.get_den();
  return s.str();
}

std::vector<Rat> parse_rational_list(const std::string& text) {
  std::vector<Rat> out;
  if (text.empty()) return out;
  for (const std::string& part : split(text, ',')) out.push_back(parse_rational(part));
  return out;
}

std::vector<Int> parse_int_vector(const std::string& text, int expected) {
  return parse_int_list(text, expected, "vector");
}

}  // namespace nilform
