#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"
#include "latfano/io.hpp"

namespace latfano {
namespace {

struct Tok {
  std::string text;
  int line;
};

std::vector<Tok> lex(const std::string& text) {
  std::vector<Tok> ts;
  int line = 1;
  size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      ++i;
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else {
      size_t j = i;
      while (j < text.size() && text[j] != '#' &&
             !std::isspace(static_cast<unsigned char>(text[j])))
        ++j;
      ts.push_back({text.substr(i, j - i), line});
      i = j;
    }
  }
  return ts;
}

class Reader {
 public:
  explicit Reader(const std::string& text) : ts_(lex(text)) {
    if (!ts_.empty()) end_line_ = ts_.back().line;
  }

  bool done() const { return pos_ == ts_.size(); }
  int last_line() const { return last_line_; }

  const Tok& take(const std::string& what) {
    if (done())
      throw ParseError(end_line_, "unexpected end of input, expected " + what);
    last_line_ = ts_[pos_].line;
    return ts_[pos_++];
  }

  long long integer(const std::string& what) {
    const Tok& t = take(what);
    char* end = nullptr;
    errno = 0;
    long long v = std::strtoll(t.text.c_str(), &end, 10);
    if (errno != 0 || end == t.text.c_str() || *end != '\0')
      throw ParseError(t.line, "expected integer " + what + ", got '" +
                                   t.text + "'");
    return v;
  }

  long long bounded(const std::string& what, long long lo, long long hi) {
    long long v = integer(what);
    if (v < lo || v > hi)
      throw ParseError(last_line_, what + " out of range: " +
                                       std::to_string(v));
    return v;
  }

  void keyword(const std::string& kw) {
    const Tok& t = take("'" + kw + "'");
    if (t.text != kw)
      throw ParseError(t.line, "expected '" + kw + "', got '" + t.text + "'");
  }

  void expect_end() {
    if (!done())
      throw ParseError(ts_[pos_].line, "trailing input: '" + ts_[pos_].text + "'");
  }

 private:
  std::vector<Tok> ts_;
  size_t pos_ = 0;
  int last_line_ = 1;
  int end_line_ = 1;
};

Vec read_vec(Reader& r, int d, const std::string& what) {
  std::vector<Int> xs;
  for (int k = 0; k < d; ++k) xs.push_back(Int(r.integer(what)));
  return Vec(xs);
}

}  // namespace

Polytope parse_polytope(const std::string& text) {
  Reader r(text);
  const long long v = r.bounded("vertex count", 1, 1000000);
  const long long d = r.bounded("dimension", 2, 3);
  std::vector<Vec> pts;
  pts.reserve(static_cast<size_t>(v));
  for (long long i = 0; i < v; ++i)
    pts.push_back(read_vec(r, static_cast<int>(d), "coordinate"));
  r.expect_end();
  return hull(pts);
}

std::string format_polytope(const Polytope& P) {
  std::string out = std::to_string(P.vertices().size()) + " " +
                    std::to_string(P.ambient_dim()) + "\n";
  for (const Vec& v : P.vertices()) {
    for (int k = 0; k < P.ambient_dim(); ++k) {
      if (k) out += " ";
      out += to_string(v[k]);
    }
    out += "\n";
  }
  return out;
}

std::pair<Fan, std::optional<TDivisor>> parse_fan(const std::string& text) {
  Reader r(text);
  r.keyword("rays");
  const long long s = r.bounded("ray count", 1, 100000);
  const long long d = r.bounded("dimension", 2, 3);
  std::vector<Vec> rays;
  rays.reserve(static_cast<size_t>(s));
  for (long long i = 0; i < s; ++i)
    rays.push_back(read_vec(r, static_cast<int>(d), "ray coordinate"));
  r.keyword("cones");
  const long long t = r.bounded("cone count", 1, 100000);
  std::vector<std::vector<int>> cones;
  cones.reserve(static_cast<size_t>(t));
  for (long long i = 0; i < t; ++i) {
    std::vector<int> c;
    for (long long k = 0; k < d; ++k)
      c.push_back(
          static_cast<int>(r.bounded("cone ray index", 0, s - 1)));
    cones.push_back(std::move(c));
  }
  if (r.done()) return {make_fan(rays, cones), std::nullopt};
  r.keyword("divisor");
  std::vector<Int> coeffs;
  for (long long i = 0; i < s; ++i)
    coeffs.push_back(Int(r.integer("divisor coefficient")));
  r.expect_end();
  auto [F, D] = make_fan(rays, cones, coeffs);
  return {std::move(F), std::move(D)};
}

std::string format_fan(const Fan& F, const TDivisor* D) {
  std::string out = "rays " + std::to_string(F.rays().size()) + " " +
                    std::to_string(F.dim()) + "\n";
  for (const Vec& v : F.rays()) {
    for (int k = 0; k < F.dim(); ++k) {
      if (k) out += " ";
      out += to_string(v[k]);
    }
    out += "\n";
  }
  out += "cones " + std::to_string(F.max_cones().size()) + "\n";
  for (const Cone& c : F.max_cones()) {
    for (size_t k = 0; k < c.ray_indices.size(); ++k) {
      if (k) out += " ";
      out += std::to_string(c.ray_indices[k]);
    }
    out += "\n";
  }
  if (D) {
    out += "divisor\n";
    for (size_t i = 0; i < D->coeffs.size(); ++i) {
      if (i) out += " ";
      out += to_string(D->coeffs[i]);
    }
    out += "\n";
  }
  return out;
}

std::vector<Polytope> parse_ks_blocks(const std::string& text) {
  Reader r(text);
  std::vector<Polytope> out;
  while (!r.done()) {
    const long long rows = r.bounded("row count", 1, 10000);
    const long long cols = r.bounded("column count", 1, 10000);
    const int header_line = r.last_line();
    std::vector<std::vector<long long>> m(
        static_cast<size_t>(rows), std::vector<long long>(static_cast<size_t>(cols)));
    for (long long i = 0; i < rows; ++i)
      for (long long j = 0; j < cols; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            r.integer("matrix entry");
    const bool by_columns = rows <= cols;
    const long long dim = by_columns ? rows : cols;
    if (dim != 2 && dim != 3)
      throw ParseError(header_line,
                       "block dimension must be 2 or 3, got " +
                           std::to_string(dim));
    std::vector<Vec> pts;
    const long long npts = by_columns ? cols : rows;
    for (long long p = 0; p < npts; ++p) {
      std::vector<Int> xs;
      for (long long k = 0; k < dim; ++k)
        xs.push_back(Int(by_columns ? m[static_cast<size_t>(k)][static_cast<size_t>(p)]
                                    : m[static_cast<size_t>(p)][static_cast<size_t>(k)]));
      pts.push_back(Vec(xs));
    }
    out.push_back(hull(pts));
  }
  return out;
}

static nlohmann::ordered_json report_json(const CheckReport& r, bool stable) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["holds"] = r.holds;
  if (r.level)
    j["level"] = *r.level;
  else
    j["level"] = nullptr;
  nlohmann::ordered_json gap = nlohmann::ordered_json::array();
  for (const Vec& g : r.gap_points) {
    nlohmann::ordered_json pt = nlohmann::ordered_json::array();
    for (int k = 0; k < g.dim(); ++k) pt.push_back(g[k].value());
    gap.push_back(std::move(pt));
  }
  j["gap"] = std::move(gap);
  j["lhs_count"] = r.lhs_count;
  j["rhs_count"] = r.rhs_count;
  j["elapsed_ms"] = stable ? 0 : r.elapsed_ms;
  return j;
}

std::string to_json(const CheckReport& r, bool stable) {
  return report_json(r, stable).dump();
}

std::string to_json_lines(const SuiteResult& s, bool stable) {
  std::string out;
  for (const CheckReport& r : s.items) out += to_json(r, stable) + "\n";
  nlohmann::ordered_json j;
  j["suite"] = s.suite;
  j["seed"] = s.seed;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  out += j.dump() + "\n";
  return out;
}

}  // namespace latfano
