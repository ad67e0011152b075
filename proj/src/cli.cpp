#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "latfano/cli.hpp"
#include "latfano/fixtures.hpp"
#include "latfano/io.hpp"
#include "latfano/rng.hpp"
#include "latfano/suites.hpp"

namespace latfano {
namespace {

using ojson = nlohmann::ordered_json;

struct Common {
  std::string format = "text";
  std::string out_path;
  bool stable = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  sub->add_option("-o,--output", c.out_path, "write output to FILE");
  sub->add_flag("--stable", c.stable,
                "zero elapsed_ms so outputs are byte-comparable");
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Polytope load_polytope(const std::string& arg) {
  if (arg.rfind("builtin:", 0) == 0) return builtin(arg.substr(8)).polytope;
  return parse_polytope(slurp(arg));
}

void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f)
    throw std::invalid_argument("cannot open output file: " + c.out_path);
  f << text;
}

ojson vec_json(const Vec& v) {
  ojson a = ojson::array();
  for (int k = 0; k < v.dim(); ++k) a.push_back(v[k].value());
  return a;
}

ojson vertices_json(const Polytope& P) {
  ojson a = ojson::array();
  for (const Vec& v : P.vertices()) a.push_back(vec_json(v));
  return a;
}

std::string report_text(const CheckReport& r, bool stable) {
  std::string s = "check: " + r.check + "\n";
  s += std::string("holds: ") + (r.holds ? "true" : "false") + "\n";
  if (r.level) s += "level: " + std::to_string(*r.level) + "\n";
  if (!r.gap_points.empty()) {
    s += "gap:";
    for (const Vec& g : r.gap_points) s += " " + to_string(g);
    s += "\n";
  }
  s += "lhs_count: " + std::to_string(r.lhs_count) + "\n";
  s += "rhs_count: " + std::to_string(r.rhs_count) + "\n";
  s += "elapsed_ms: " + std::to_string(stable ? 0 : r.elapsed_ms) + "\n";
  return s;
}

int emit_report(const CheckReport& r, const Common& c, std::ostream& out) {
  emit(c, out,
       c.format == "json" ? to_json(r, c.stable) + "\n"
                          : report_text(r, c.stable));
  return r.holds ? 0 : 1;
}

std::string suite_text(const SuiteResult& s) {
  std::string t;
  for (size_t i = 0; i < s.items.size(); ++i) {
    const CheckReport& r = s.items[i];
    t += "[" + std::to_string(i) + "] check=" + r.check +
         " holds=" + (r.holds ? "true" : "false");
    if (r.level) t += " level=" + std::to_string(*r.level);
    t += " lhs=" + std::to_string(r.lhs_count) +
         " rhs=" + std::to_string(r.rhs_count) + "\n";
  }
  t += "suite=" + s.suite + " seed=" + std::to_string(s.seed) +
       " passed=" + std::to_string(s.passed) +
       " failed=" + std::to_string(s.failed) + "\n";
  return t;
}

int emit_suite(const SuiteResult& s, const Common& c, std::ostream& out) {
  emit(c, out, c.format == "json" ? to_json_lines(s, c.stable) : suite_text(s));
  return s.failed == 0 ? 0 : 1;
}

const char* reflexive_slug(NotReflexiveReason r) {
  switch (r) {
    case NotReflexiveReason::not_full_dimensional:
      return ":not-full-dimensional";
    case NotReflexiveReason::origin_not_interior:
      return ":origin-not-interior";
    case NotReflexiveReason::facet_offset_not_one:
      return ":facet-offset-not-one";
    case NotReflexiveReason::none:
      break;
  }
  return "";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact lattice-polytope and toric-divisor toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  struct {
    std::string input, ks;
    Common c;
  } idp;
  auto* s_idp = app.add_subcommand(
      "check-idp", "integer decomposition property of a full-dim polytope");
  s_idp->add_option("input", idp.input, "polytope file or builtin:NAME");
  s_idp->add_option("--ks", idp.ks,
                    "batch mode: file of concatenated vertex-matrix blocks");
  add_common(s_idp, idp.c);
  s_idp->callback([&] {
    if (!idp.ks.empty()) {
      std::vector<Polytope> blocks = parse_ks_blocks(slurp(idp.ks));
      SuiteResult s;
      s.suite = "ks-idp";
      s.seed = 0;
      for (const Polytope& P : blocks) {
        try {
          s.items.push_back(check_idp(P));
        } catch (const std::exception&) {
          CheckReport r;
          r.check = "idp:error";
          r.holds = false;
          s.items.push_back(r);
        }
      }
      for (const CheckReport& r : s.items) {
        if (r.holds)
          ++s.passed;
        else
          ++s.failed;
      }
      rc = emit_suite(s, idp.c, out);
      return;
    }
    if (idp.input.empty())
      throw std::invalid_argument("check-idp: give a polytope or --ks FILE");
    rc = emit_report(check_idp(load_polytope(idp.input)), idp.c, out);
  });

  struct {
    std::string a, b;
    Common c;
  } sum;
  auto* s_sum = app.add_subcommand(
      "check-sum", "lattice-point sum identity P+Q on one pair");
  s_sum->add_option("P", sum.a)->required();
  s_sum->add_option("Q", sum.b)->required();
  add_common(s_sum, sum.c);
  s_sum->callback([&] {
    rc = emit_report(
        check_sum_equality(load_polytope(sum.a), load_polytope(sum.b)), sum.c,
        out);
  });

  struct {
    std::string a, b;
    long long k = 1;
    Common c;
  } mink;
  auto* s_mink = app.add_subcommand(
      "check-mink", "pair identity (R+kQ)+Q = R+(k+1)Q at level k");
  s_mink->add_option("R", mink.a)->required();
  s_mink->add_option("Q", mink.b)->required();
  s_mink->add_option("--k", mink.k, "level (default 1)")
      ->check(CLI::PositiveNumber);
  add_common(s_mink, mink.c);
  s_mink->callback([&] {
    rc = emit_report(check_pair_identity(load_polytope(mink.a),
                                         load_polytope(mink.b), Int(mink.k)),
                     mink.c, out);
  });

  struct {
    std::string a, b;
    Common c;
  } fano;
  auto* s_fano = app.add_subcommand(
      "fano-mink", "Minkowski property of a reflexive R against Q");
  s_fano->add_option("R", fano.a)->required();
  s_fano->add_option("Q", fano.b)->required();
  add_common(s_fano, fano.c);
  s_fano->callback([&] {
    rc = emit_report(
        check_fano_minkowski(load_polytope(fano.a), load_polytope(fano.b)),
        fano.c, out);
  });

  struct {
    std::string input;
    Common c;
  } refl;
  auto* s_refl = app.add_subcommand("reflexive", "is the polytope reflexive?");
  s_refl->add_option("input", refl.input)->required();
  add_common(s_refl, refl.c);
  s_refl->callback([&] {
    ReflexivityResult res = is_reflexive(load_polytope(refl.input));
    CheckReport r;
    r.check = std::string("reflexive") + reflexive_slug(res.reason);
    r.holds = res.reflexive;
    rc = emit_report(r, refl.c, out);
  });

  struct {
    std::string input;
    Common c;
  } pol;
  auto* s_pol = app.add_subcommand(
      "polar", "polar dual; fails when a dual vertex is not integral");
  s_pol->add_option("input", pol.input)->required();
  add_common(s_pol, pol.c);
  s_pol->callback([&] {
    PolarDualResult res = polar_dual(load_polytope(pol.input));
    if (res.is_lattice()) {
      if (pol.c.format == "json") {
        ojson j;
        j["lattice"] = true;
        j["vertices"] = vertices_json(*res.dual);
        j["witness"] = nullptr;
        emit(pol.c, out, j.dump() + "\n");
      } else {
        emit(pol.c, out, format_polytope(*res.dual));
      }
      rc = 0;
    } else {
      if (pol.c.format == "json") {
        ojson j;
        j["lattice"] = false;
        j["vertices"] = nullptr;
        ojson w = ojson::array();
        for (int k = 0; k < res.witness->dim; ++k)
          w.push_back(to_string((*res.witness)[k]));
        j["witness"] = std::move(w);
        emit(pol.c, out, j.dump() + "\n");
      } else {
        emit(pol.c, out,
             "non-lattice dual vertex: " + to_string(*res.witness) + "\n");
      }
      rc = 1;
    }
  });

  struct {
    std::string input;
    Common c;
  } dec;
  auto* s_dec = app.add_subcommand(
      "decompose", "split into empty simplices with width-1 certificates");
  s_dec->add_option("input", dec.input)->required();
  add_common(s_dec, dec.c);
  s_dec->callback([&] {
    Decomposition d = decompose_empty_simplices(load_polytope(dec.input));
    if (dec.c.format == "json") {
      ojson pieces = ojson::array();
      for (size_t i = 0; i < d.pieces.size(); ++i) {
        ojson p;
        p["vertices"] = vertices_json(d.pieces[i]);
        ojson cert;
        cert["direction"] = vec_json(d.certificates[i].direction);
        cert["base"] = d.certificates[i].base.value();
        p["certificate"] = std::move(cert);
        pieces.push_back(std::move(p));
      }
      ojson j;
      j["pieces"] = std::move(pieces);
      emit(dec.c, out, j.dump() + "\n");
    } else {
      std::string t = "pieces: " + std::to_string(d.pieces.size()) + "\n";
      for (size_t i = 0; i < d.pieces.size(); ++i) {
        t += format_polytope(d.pieces[i]);
        t += "certificate " + to_string(d.certificates[i].direction) +
             " base " + to_string(d.certificates[i].base) + "\n";
      }
      emit(dec.c, out, t);
    }
    rc = 0;
  });

  struct {
    std::string input;
    long long bound = 0;
    bool has_bound = false;
    Common c;
  } wid;
  auto* s_wid =
      app.add_subcommand("width", "search for a lattice-width-1 certificate");
  s_wid->add_option("input", wid.input)->required();
  auto* bopt = s_wid->add_option("--bound", wid.bound,
                                 "coordinate bound for the direction search")
                   ->check(CLI::PositiveNumber);
  add_common(s_wid, wid.c);
  s_wid->callback([&] {
    wid.has_bound = bopt->count() > 0;
    Polytope P = load_polytope(wid.input);
    std::optional<WidthCertificate> cert =
        wid.has_bound ? width_certificate(P, Int(wid.bound))
                      : width_certificate(P);
    if (wid.c.format == "json") {
      ojson j;
      j["found"] = cert.has_value();
      if (cert) {
        j["direction"] = vec_json(cert->direction);
        j["base"] = cert->base.value();
      } else {
        j["direction"] = nullptr;
        j["base"] = nullptr;
      }
      emit(wid.c, out, j.dump() + "\n");
    } else {
      emit(wid.c, out,
           cert ? "direction " + to_string(cert->direction) + " base " +
                      to_string(cert->base) + "\n"
                : std::string("no width-1 certificate within the bound\n"));
    }
    rc = cert ? 0 : 1;
  });

  struct {
    std::string fan;
    Common c;
  } nef;
  auto* s_nef = app.add_subcommand(
      "nef", "is the divisor in the fan file nef? (smooth fans)");
  s_nef->add_option("fan", nef.fan, "fan file with a divisor block")
      ->required();
  add_common(s_nef, nef.c);
  s_nef->callback([&] {
    auto [F, D] = parse_fan(slurp(nef.fan));
    if (!D)
      throw std::invalid_argument("nef: the fan file carries no divisor");
    const bool v = is_nef(F, *D);
    if (nef.c.format == "json") {
      ojson j;
      j["nef"] = v;
      emit(nef.c, out, j.dump() + "\n");
    } else {
      emit(nef.c, out, std::string("nef: ") + (v ? "true" : "false") + "\n");
    }
    rc = v ? 0 : 1;
  });

  struct {
    std::string fan;
    Common c;
  } fx;
  auto* s_fx = app.add_subcommand(
      "fixed", "fixed components of the divisor in the fan file");
  s_fx->add_option("fan", fx.fan, "fan file with a divisor block")->required();
  add_common(s_fx, fx.c);
  s_fx->callback([&] {
    auto [F, D] = parse_fan(slurp(fx.fan));
    if (!D)
      throw std::invalid_argument("fixed: the fan file carries no divisor");
    std::vector<Int> cs = fixed_components(F, *D);
    if (fx.c.format == "json") {
      ojson rays = ojson::array();
      for (const Vec& r : F.rays()) rays.push_back(vec_json(r));
      ojson fixed = ojson::array();
      for (Int c : cs) fixed.push_back(c.value());
      ojson j;
      j["rays"] = std::move(rays);
      j["fixed"] = std::move(fixed);
      emit(fx.c, out, j.dump() + "\n");
    } else {
      std::string t = "fixed components\n";
      for (size_t i = 0; i < cs.size(); ++i)
        t += to_string(F.rays()[i]) + " " + to_string(cs[i]) + "\n";
      emit(fx.c, out, t);
    }
    rc = 0;
  });

  struct {
    std::string input;
    Common c;
  } adj;
  auto* s_adj = app.add_subcommand(
      "adjoint", "hull of the interior lattice points, if any");
  s_adj->add_option("input", adj.input)->required();
  add_common(s_adj, adj.c);
  s_adj->callback([&] {
    std::optional<Polytope> A = adjoint_polytope(load_polytope(adj.input));
    if (adj.c.format == "json") {
      ojson j;
      j["adjoint"] = A ? vertices_json(*A) : ojson(nullptr);
      emit(adj.c, out, j.dump() + "\n");
    } else {
      emit(adj.c, out,
           A ? format_polytope(*A) : std::string("no interior lattice points\n"));
    }
    rc = A ? 0 : 1;
  });

  struct {
    std::string name;
    Common c;
  } blt;
  auto* s_blt = app.add_subcommand("builtin", "print a named fixture");
  s_blt->add_option("name", blt.name)->required();
  add_common(s_blt, blt.c);
  s_blt->callback([&] {
    Fixture f = builtin(blt.name);
    if (blt.c.format == "json") {
      ojson j;
      j["name"] = f.name;
      j["notes"] = f.notes;
      j["vertices"] = vertices_json(f.polytope);
      emit(blt.c, out, j.dump() + "\n");
    } else {
      emit(blt.c, out, "# " + f.name + ": " + f.notes + "\n" +
                           format_polytope(f.polytope));
    }
    rc = 0;
  });

  struct {
    int dim = 3;
    std::uint64_t seed = 0;
    long long box = 3;
    int npoints = 6;
    bool reflexive_polygons = false;
    Common c;
  } gen;
  auto* s_gen =
      app.add_subcommand("gen", "seeded random polytopes and catalogs");
  s_gen->add_option("--dim", gen.dim, "ambient dimension (2 or 3)")
      ->check(CLI::IsMember({2, 3}));
  s_gen->add_option("--seed", gen.seed, "PRNG seed (default 0)");
  s_gen->add_option("--box", gen.box, "coordinate box [0,box]^dim")
      ->check(CLI::PositiveNumber);
  s_gen->add_option("--points", gen.npoints, "points drawn before hulling")
      ->check(CLI::PositiveNumber);
  s_gen->add_flag("--reflexive-polygons", gen.reflexive_polygons,
                  "emit the 16 reflexive polygons instead");
  add_common(s_gen, gen.c);
  s_gen->callback([&] {
    std::vector<Polytope> ps;
    if (gen.reflexive_polygons)
      ps = gen_reflexive_polygons();
    else
      ps.push_back(gen_random_polytope(gen.dim, gen.seed, gen.box, gen.npoints));
    if (gen.c.format == "json") {
      ojson arr = ojson::array();
      for (const Polytope& P : ps) arr.push_back(vertices_json(P));
      ojson j;
      j["polytopes"] = std::move(arr);
      emit(gen.c, out, j.dump() + "\n");
    } else {
      std::string t;
      for (size_t i = 0; i < ps.size(); ++i) {
        if (i) t += "\n";
        t += format_polytope(ps[i]);
      }
      emit(gen.c, out, t);
    }
    rc = 0;
  });

  struct {
    std::string name;
    std::uint64_t seed = 0;
    int n = 20;
    Common c;
  } ste;
  auto* s_ste = app.add_subcommand("suite", "run a seeded property suite");
  s_ste->add_option("name", ste.name,
                    "idp-polygons | fano-minkowski | pair-identity-k2 | "
                    "surface-mult | surface-bpf | decompose-width")
      ->required();
  s_ste->add_option("--seed", ste.seed, "suite seed (default 0)");
  s_ste->add_option("-n,--items", ste.n, "instance count (default 20)")
      ->check(CLI::NonNegativeNumber);
  add_common(s_ste, ste.c);
  s_ste->callback(
      [&] { rc = emit_suite(run_suite(ste.name, ste.seed, ste.n), ste.c, out); });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    for (const CLI::App* sub : app.get_subcommands())
      if (sub->parsed()) {
        out << sub->help();
        return 0;
      }
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace latfano
