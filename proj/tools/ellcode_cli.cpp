// ellcode: build and check Riemann-Roch bases, elliptic AG codes and
// Schur-square distinguisher bounds from JSON descriptions.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "ellcode/distinguisher.hpp"
#include "ellcode/error.hpp"
#include "ellcode/families.hpp"
#include "ellcode/json_io.hpp"
#include "ellcode/kernels.hpp"

#ifndef ELLCODE_VERSION
#define ELLCODE_VERSION "unknown"
#endif

using namespace ellcode;
using io::Json;

namespace {

constexpr const char* kModule = "cli";

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::ValidationError, kModule, what); }

struct Options {
  std::string curve, divisor, family, sigma, support, g, g_orbits, code, out, format = "json";
  std::string construction = "auto", method = "auto";
  unsigned ell = 0;
  unsigned subfield_degree = 1;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::uint64_t q = 0;
  unsigned m = 0;
  std::uint64_t length = 0;
  std::int64_t k_offset = 0, s_from = 0, s_to = 0;
  bool list_points = false, distance = false;
  std::string bound;
};

// 64-bit FNV-1a over the canonical dump of each input; enough to tell runs apart.
std::string fingerprint(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) h = (h ^ c) * 0x100000001b3ull;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class Job {
 public:
  Job(std::string command, const Options& o) : command_(std::move(command)), o_(o) {}

  Json input(const std::string& name, const std::string& arg) {
    Json j = io::load_json(arg);
    inputs_[name] = fingerprint(j.dump());
    return j;
  }

  /// Writes `text` atomically: a sibling temporary, then rename.
  void write(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw Error(ErrorKind::IoError, kModule, "cannot write " + tmp);
      out << text;
      if (!out.flush()) throw Error(ErrorKind::IoError, kModule, "short write to " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error(ErrorKind::IoError, kModule, "cannot rename " + tmp + ": " + ec.message());
    artifacts_.push_back(path);
  }

  /// Main artifact to --out (or stdout), then the provenance record next to it.
  void emit(const std::string& text) {
    if (o_.out.empty()) {
      std::cout << text;
      return;
    }
    write(o_.out, text);
    finish();
  }
  void emit(const Json& j) { emit(j.dump(2) + "\n"); }

  void finish() {
    if (o_.out.empty()) return;
    Json inputs = Json::object();
    for (const auto& [k, v] : inputs_) inputs[k] = v;
    const Json record{{"tool", "ellcode"}, {"version", ELLCODE_VERSION}, {"command", command_},
                      {"seed", o_.seed},   {"inputs", inputs},          {"artifacts", artifacts_}};
    write(o_.out + ".provenance.json", record.dump(2) + "\n");
  }

  const Options& opts() const { return o_; }

 private:
  std::string command_;
  Options o_;
  std::map<std::string, std::string> inputs_;
  std::vector<std::string> artifacts_;
};

std::uint64_t isqrt(std::uint64_t v) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

Curve need_curve(Job& job) {
  if (job.opts().curve.empty()) invalid("--curve is required");
  return io::curve_from_json(job.input("curve", job.opts().curve));
}

Divisor need_divisor(Job& job, const Curve& E) {
  if (job.opts().divisor.empty()) invalid("--divisor is required");
  return io::divisor_from_json(E, job.input("divisor", job.opts().divisor));
}

Automorphism need_sigma(Job& job, const Curve& E) {
  if (!job.opts().sigma.empty()) return io::automorphism_from_json(E, job.input("sigma", job.opts().sigma));
  if (job.opts().ell == 0) invalid("either --sigma or --ell is required");
  for (const auto& a : list_automorphisms(E))
    if (a.order() == job.opts().ell) return a;
  throw Error(ErrorKind::UnsupportedOrder, kModule,
              "the curve has no automorphism of order " + std::to_string(job.opts().ell));
}

/// Splits a sigma-invariant divisor into k P_inf or orbit representatives minus c P_inf.
QcDivisor to_qc_divisor(const Automorphism& sigma, const Divisor& G) {
  const int at_inf = G.multiplicity(Point::infinity());
  QcDivisor out;
  std::set<Point> seen;
  for (const auto& [P, mult] : G.terms()) {
    if (P.at_infinity || seen.count(P)) continue;
    for (const auto& Q : orbit(sigma, P)) {
      if (G.multiplicity(Q) != mult)
        throw Error(ErrorKind::NotInvariant, kModule, "divisor is not constant on the orbit of a support point");
      seen.insert(Q);
    }
    out.reps.push_back(P);
    out.mults.push_back(mult);
  }
  if (out.reps.empty()) {
    if (at_inf < 1) invalid("an orbit divisor needs k P_inf with k >= 1 or affine orbits");
    return QcDivisor::at_infinity(at_inf);
  }
  if (at_inf > 0) invalid("orbit divisors take only a non-positive multiple of P_inf");
  out.c = -at_inf;
  return out;
}

/// A QC divisor is either a full divisor list or {"orbits": [{point, mult}], "c": int}
/// naming one representative per orbit.
QcDivisor need_qc_divisor(Job& job, const Curve& E, const Automorphism& sigma) {
  if (job.opts().divisor.empty()) invalid("--divisor is required");
  const Json j = job.input("divisor", job.opts().divisor);
  if (j.is_array()) return to_qc_divisor(sigma, io::divisor_from_json(E, j));
  if (!j.is_object() || !j.contains("orbits")) throw Error(ErrorKind::ParseError, kModule, "QC divisor needs \"orbits\"");
  std::vector<Point> reps;
  std::vector<int> mults;
  for (const auto& t : j.at("orbits")) {
    reps.push_back(io::point_from_json(E, t.at("point")));
    mults.push_back(t.at("mult").get<int>());
  }
  return QcDivisor::orbits(std::move(reps), std::move(mults), j.value("c", 0));
}

std::vector<Point> affine_points_outside(const Curve& E, const Divisor& G) {
  std::vector<Point> out;
  for (const auto& P : E.points())
    if (!P.at_infinity && G.multiplicity(P) == 0) out.push_back(P);
  return out;
}

std::vector<Point> support_or_default(Job& job, const Curve& E, std::vector<Point> fallback) {
  if (job.opts().support.empty()) return fallback;
  return io::points_from_json(E, job.input("support", job.opts().support));
}

Json points_json(const Curve& E, const std::vector<Point>& pts) {
  Json out = Json::array();
  for (const auto& P : pts) out.push_back(io::to_json(E, P));
  return out;
}

RRBasis build_basis(Job& job, const Curve& E, const Divisor& G) {
  if (G.degree() < 1) invalid("deg(G) must be at least 1, got " + std::to_string(G.degree()));
  const auto& o = job.opts();
  std::string how = o.construction;
  const int at_inf = G.multiplicity(Point::infinity());
  std::vector<Point> affine;
  for (const auto& P : G.support())
    if (!P.at_infinity) affine.push_back(P);
  if (how == "auto") {
    if (!o.sigma.empty() || o.ell != 0)
      how = "qc-orbit";
    else if (affine.empty())
      how = "infinity";
    else if (at_inf == 0 && affine.size() == 1)
      how = "one-point";
    else
      how = "multipoint";
  }
  if (how == "infinity") {
    if (!affine.empty()) invalid("the infinity construction needs G = k P_inf");
    return basis_at_infinity(E, at_inf);
  }
  if (how == "one-point") {
    if (affine.size() != 1 || at_inf != 0) invalid("the one-point construction needs G = k P for one affine P");
    OnePointMethod method = E.field().characteristic() == 3 ? OnePointMethod::solve : OnePointMethod::taylor;
    if (o.method == "taylor") method = OnePointMethod::taylor;
    if (o.method == "solve") method = OnePointMethod::solve;
    return one_point_basis(E, affine[0], G.multiplicity(affine[0]), method);
  }
  if (how == "multipoint") {
    if (at_inf != 0) throw Error(ErrorKind::UnsupportedPlace, kModule, "multipoint divisors are affine; drop the P_inf term");
    return multipoint_basis(G);
  }
  if (how == "qc-orbit") {
    const auto sigma = need_sigma(job, E);
    return qc_divisor_basis(sigma, to_qc_divisor(sigma, G));
  }
  invalid("unknown construction " + how);
}

// ---------------------------------------------------------------- commands

void curve_info(Job& job) {
  const Curve E = need_curve(job);
  const Field& F = E.field();
  const std::uint64_t q = F.order(), count = E.point_count(), w = isqrt(4 * q);
  Json orders = Json::array();
  for (const auto& a : list_automorphisms(E)) orders.push_back(a.order());
  Json out{{"curve", io::to_json(E)},
           {"discriminant", io::to_json(F, E.discriminant())},
           {"j_invariant", io::to_json(F, E.j_invariant())},
           {"point_count", count},
           {"hasse", Json{{"q", q}, {"low", q + 1 - w}, {"high", q + 1 + w}, {"holds", count + w >= q + 1 && count <= q + 1 + w}}},
           {"automorphism_orders", orders}};
  if (job.opts().list_points) out["points"] = points_json(E, E.points());
  job.emit(out);
}

void rr_basis(Job& job) {
  const Curve E = need_curve(job);
  const Divisor G = need_divisor(job, E);
  const RRBasis B = build_basis(job, E, G);
  const auto report = verify_basis(B);
  Json out = io::to_json(B);
  out["verification"] = Json{{"members_ok", report.members_ok}, {"independent", report.independent},
                             {"dimension_ok", report.dimension_ok}, {"rank", report.rank},
                             {"evaluation_points", report.evaluation_points}};
  if (!report.ok()) throw Error(ErrorKind::ValidationError, "rr_basis", "basis failed verification");
  job.emit(out);
}

struct Built {
  std::string family;
  LinearCode code;
  Matrix parity;
  Json extra = Json::object();
};

Built build_code(Job& job, const std::string& family) {
  const auto& o = job.opts();
  const Curve E = need_curve(job);
  if (family == "onepoint" || family == "multipoint") {
    const Divisor G = need_divisor(job, E);
    const RRBasis B = build_basis(job, E, G);
    const auto D = support_or_default(job, E, affine_points_outside(E, G));
    auto C = evaluation_code(B, D);
    C.set_provenance(family);
    Json extra{{"support", points_json(E, D)}, {"basis", io::to_json(B)}, {"designed_distance", static_cast<long long>(D.size()) - G.degree()}};
    return {family, C, C.parity_check(), extra};
  }
  if (family == "qc-ssde") {
    const auto sigma = need_sigma(job, E);
    const QcDivisor G = need_qc_divisor(job, E, sigma);
    QcSsde r = [&] {
      if (!o.support.empty()) return qc_ssde(sigma, G, io::points_from_json(E, job.input("support", o.support)), o.subfield_degree);
      if (o.n == 0) invalid("qc-ssde needs --n or --support (orbit representatives)");
      return qc_ssde_sampled(sigma, G, o.n, o.seed, o.subfield_degree);
    }();
    r.code.set_provenance(family);
    Json extra{{"ell", sigma.order()}, {"support", points_json(E, r.support)}, {"grouping", r.grouping},
               {"basis", io::to_json(r.basis)}, {"evaluation_dimension", r.evaluation.dimension()}};
    return {family, r.code, r.parity_check, extra};
  }
  if (family == "goppa-like") {
    const Divisor Gp = need_divisor(job, E);
    if (o.g.empty()) invalid("goppa-like needs --g");
    const CurveFunction g = io::function_from_json(E, job.input("g", o.g));
    std::vector<Point> fallback;
    for (const auto& P : affine_points_outside(E, Gp))
      if (g.valuation(P) == 0) fallback.push_back(P);
    const auto D = support_or_default(job, E, fallback);
    auto r = goppa_like(D, Gp, g, o.subfield_degree);
    r.code.set_provenance(family);
    Json extra{{"support", points_json(E, D)}, {"basis", io::to_json(r.basis)}, {"g", io::to_json(g)},
               {"evaluation_dimension", r.evaluation.dimension()}};
    return {family, r.code, r.code.parity_check(), extra};
  }
  if (family == "qc-goppa-like") {
    const auto sigma = need_sigma(job, E);
    const QcDivisor Gp = need_qc_divisor(job, E, sigma);
    if (o.g_orbits.empty()) invalid("qc-goppa-like needs --g-orbits ([{point, mult}] with the exponents t*)");
    const Json gj = job.input("g_orbits", o.g_orbits);
    if (!gj.is_array()) throw Error(ErrorKind::ParseError, kModule, "--g-orbits must be a list");
    std::vector<Point> g_reps;
    std::vector<int> t_star;
    std::vector<Fe> avoid_x;
    for (const auto& t : gj) {
      g_reps.push_back(io::point_from_json(E, t.at("point")));
      t_star.push_back(t.at("mult").get<int>());
      for (const auto& Q : orbit(sigma, g_reps.back())) avoid_x.push_back(Q.x);
    }
    std::vector<Point> d_reps;
    if (!o.support.empty()) {
      d_reps = io::points_from_json(E, job.input("support", o.support));
    } else {
      if (o.n == 0 || o.n % sigma.order()) invalid("qc-goppa-like needs --n divisible by ell, or --support");
      std::vector<Point> avoid;
      for (const auto& P : Gp.reps)
        for (const auto& Q : orbit(sigma, P)) avoid.push_back(Q);
      d_reps = sample_orbit_representatives(sigma, o.n / sigma.order(), avoid, avoid_x, o.seed);
    }
    auto r = qc_goppa_like(sigma, Gp, g_reps, t_star, d_reps, o.subfield_degree);
    r.goppa.code.set_provenance(family);
    Json extra{{"ell", sigma.order()}, {"support", points_json(E, r.support)}, {"grouping", r.grouping},
               {"basis", io::to_json(r.goppa.basis)}, {"g", io::to_json(r.goppa.g)},
               {"evaluation_dimension", r.goppa.evaluation.dimension()}};
    return {family, r.goppa.code, r.goppa.code.parity_check(), extra};
  }
  invalid("unknown family \"" + family + "\" (onepoint, multipoint, qc-ssde, goppa-like, qc-goppa-like)");
}

void emit_code(Job& job, const Built& b, bool parity_only) {
  const auto& o = job.opts();
  if (o.format == "csv") {
    if (o.out.empty()) {
      std::cout << io::to_csv(parity_only ? b.parity : b.code.generator());
      return;
    }
    if (!parity_only) job.write(o.out + ".generator.csv", io::to_csv(b.code.generator()));
    job.write(o.out + ".parity.csv", io::to_csv(b.parity));
    job.finish();
    return;
  }
  Json out{{"family", b.family}, {"n", b.code.length()}, {"k", b.code.dimension()}};
  if (!parity_only) out["code"] = io::to_json(b.code);
  out["parity_check"] = io::to_json(b.parity);
  for (const auto& [k, v] : b.extra.items()) out[k] = v;
  job.emit(out);
}

void code_build(Job& job) {
  if (job.opts().family.empty()) invalid("--family is required");
  emit_code(job, build_code(job, job.opts().family), false);
}

void ssde_build(Job& job) { emit_code(job, build_code(job, "qc-ssde"), true); }

void code_verify(Job& job) {
  const auto& o = job.opts();
  if (o.code.empty()) invalid("--code is required");
  const Json art = job.input("code", o.code);
  const Json& cj = art.contains("code") ? art.at("code") : art;
  const LinearCode C = io::code_from_json(cj);
  Json checks = Json::object();
  bool ok = true;
  auto check = [&](const std::string& name, bool v) {
    checks[name] = v;
    ok = ok && v;
  };
  if (cj.contains("k")) check("rank_matches", cj.at("k").get<std::size_t>() == C.dimension());
  if (art.contains("parity_check")) {
    const Matrix H = io::matrix_from_json(art.at("parity_check"));
    const bool shape = H.cols() == C.length() && H.field() == C.field();
    check("parity_shape", shape);
    if (shape) {
      check("parity_annihilates", C.generator().multiply(H.transpose()).is_zero());
      check("parity_rank", kernels::rref(H).rank() == C.length() - C.dimension());
    }
  }
  const std::size_t ell = o.ell ? o.ell : (art.contains("ell") ? art.at("ell").get<std::size_t>() : 0);
  if (ell) {
    check("quasi_cyclic", is_quasi_cyclic(C, ell));
    std::vector<std::vector<std::size_t>> grouping = art.contains("grouping")
                                                         ? art.at("grouping").get<std::vector<std::vector<std::size_t>>>()
                                                         : consecutive_grouping(C.length(), ell);
    check("block_circulant", block_circulant_form(C, ell, grouping).ok);
  }
  Json out{{"n", C.length()}, {"k", C.dimension()}, {"field", io::to_json(C.field())}};
  if (o.distance) {
    const auto d = min_distance_exhaustive(C);
    out["min_distance"] = d;
    if (art.contains("designed_distance")) check("designed_distance", static_cast<long long>(d) >= art.at("designed_distance").get<long long>());
  }
  out["checks"] = checks;
  out["ok"] = ok;
  job.emit(out);
  if (!ok) throw Error(ErrorKind::ValidationError, "codes", "verification failed: " + checks.dump());
}

void distinguish_bound(Job& job) {
  const auto& o = job.opts();
  if (o.q < 2 || o.m < 1 || o.length < 1) invalid("--q, --m and --n are required");
  const std::int64_t from = o.s_from ? o.s_from : static_cast<std::int64_t>(o.q) + 1;
  std::int64_t to = o.s_to;
  if (!to) to = std::max<std::int64_t>(largest_distinguishable_s(o.q, o.m, o.length, o.k_offset), from) + 2;
  const auto rows = bound_sweep(o.q, o.m, o.length, from, to, o.k_offset);
  if (o.format == "csv") {
    std::ostringstream csv;
    csv << "s_inf,bound,n,verdict\n";
    for (const auto& r : rows)
      csv << r.s_inf << ',' << r.bound << ',' << o.length << ',' << (r.distinguishable ? "distinguishable" : "indistinguishable")
          << '\n';
    job.emit(csv.str());
    return;
  }
  Json list = Json::array();
  for (const auto& r : rows)
    list.push_back(Json{{"s_inf", r.s_inf}, {"bound", r.bound.str()}, {"distinguishable", r.distinguishable}});
  job.emit(Json{{"q", o.q}, {"m", o.m}, {"n", o.length}, {"k_offset", o.k_offset},
                {"largest_distinguishable_s", largest_distinguishable_s(o.q, o.m, o.length, o.k_offset)},
                {"rows", list}});
}

void distinguish_square(Job& job) {
  const auto& o = job.opts();
  SquareReport r;
  Json params = Json::object();
  if (!o.g.empty()) {
    const Curve E = need_curve(job);
    const Divisor Gp = need_divisor(job, E);
    const CurveFunction g = io::function_from_json(E, job.input("g", o.g));
    std::vector<Point> fallback;
    for (const auto& P : affine_points_outside(E, Gp))
      if (g.valuation(P) == 0) fallback.push_back(P);
    const auto gl = goppa_like(support_or_default(job, E, fallback), Gp, g, o.subfield_degree);
    const auto p = goppa_bound_params(gl);
    params = Json{{"q", p.q}, {"m", p.m}, {"k", p.k}, {"s", p.s}, {"e", exponent_e(p)}};
    r = goppa_square_report(gl);
  } else {
    if (o.code.empty()) invalid("either --code or --curve/--divisor/--g is required");
    const Json art = job.input("code", o.code);
    std::optional<BigInt> bound;
    if (!o.bound.empty()) bound = BigInt(o.bound);
    r = empirical_square_report(io::code_from_json(art.contains("code") ? art.at("code") : art), bound);
  }
  Json out{{"n", r.n}, {"k", r.k}, {"empirical", r.empirical}, {"generic", r.generic}, {"verdict", to_string(r.verdict)}};
  if (r.bound) {
    out["bound"] = r.bound->str();
    out["within_bound"] = r.within_bound;
  }
  if (!params.empty()) out["params"] = params;
  job.emit(out);
}

int report(const Error& e) {
  const Json j{{"error", to_string(e.kind())}, {"module", e.module()}, {"message", e.detail()}};
  std::cerr << j.dump() << "\n";
  switch (e.kind()) {
    case ErrorKind::ParseError: return 3;
    case ErrorKind::IoError: return 4;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riemann-Roch bases, elliptic AG codes and Schur-square bounds"};
  app.set_version_flag("--version", ELLCODE_VERSION);
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--out", o.out, "Output path (stdout when omitted)");
    s->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--seed", o.seed, "Seed for point sampling");
  };
  auto curve_opt = [&](CLI::App* s) { s->add_option("--curve", o.curve, "Curve JSON (file or inline)"); };
  auto divisor_opt = [&](CLI::App* s) { s->add_option("--divisor", o.divisor, "Divisor JSON"); };
  auto sigma_opts = [&](CLI::App* s) {
    s->add_option("--sigma", o.sigma, "Automorphism JSON");
    s->add_option("--ell", o.ell, "Use the first automorphism of this order");
  };

  std::map<CLI::App*, void (*)(Job&)> handlers;
  auto sub = [&](const char* name, const char* help, void (*fn)(Job&)) {
    auto* s = app.add_subcommand(name, help);
    common(s);
    handlers[s] = fn;
    return s;
  };

  auto* info = sub("curve-info", "Discriminant, j-invariant, point count, Hasse window", curve_info);
  curve_opt(info);
  info->add_flag("--list-points", o.list_points, "Include the rational points");

  auto* basis = sub("rr-basis", "Basis of L(G) with membership and rank checks", rr_basis);
  curve_opt(basis);
  divisor_opt(basis);
  sigma_opts(basis);
  basis->add_option("--construction", o.construction)
      ->check(CLI::IsMember({"auto", "infinity", "one-point", "multipoint", "qc-orbit"}));
  basis->add_option("--method", o.method, "One-point method")->check(CLI::IsMember({"auto", "taylor", "solve"}));

  auto code_opts = [&](CLI::App* s) {
    curve_opt(s);
    divisor_opt(s);
    sigma_opts(s);
    s->add_option("--support", o.support, "Evaluation points, or orbit representatives for QC families");
    s->add_option("--n", o.n, "Sampled code length for QC families");
    s->add_option("--subfield-degree", o.subfield_degree, "Restrict to GF(p^d)");
    s->add_option("--g", o.g, "Goppa function JSON");
    s->add_option("--g-orbits", o.g_orbits, "QC Goppa orbits [{point, mult}]");
  };
  auto* build = sub("code-build", "Build a code and its parity-check matrix", code_build);
  code_opts(build);
  build->add_option("--family", o.family)
      ->check(CLI::IsMember({"onepoint", "multipoint", "qc-ssde", "goppa-like", "qc-goppa-like"}));
  auto* ssde = sub("ssde-build", "Parity-check matrix of a QC-SSDE code", ssde_build);
  code_opts(ssde);

  auto* verify = sub("code-verify", "Check a built code artifact", code_verify);
  verify->add_option("--code", o.code, "Code JSON or code-build artifact");
  verify->add_option("--ell", o.ell, "Check quasi-cyclicity at this order");
  verify->add_flag("--distance", o.distance, "Exhaustive minimum distance");

  auto* bound = sub("distinguish-bound", "Sweep the one-point Schur-square bound over s_inf", distinguish_bound);
  bound->add_option("--q", o.q)->required();
  bound->add_option("--m", o.m)->required();
  bound->add_option("--n", o.length)->required();
  bound->add_option("--k-offset", o.k_offset, "k = s_inf + offset");
  bound->add_option("--s-from", o.s_from);
  bound->add_option("--s-to", o.s_to);

  auto* square = sub("distinguish-square", "Empirical Schur-square dimension against the bound", distinguish_square);
  square->add_option("--code", o.code);
  square->add_option("--bound", o.bound, "Bound to compare against");
  code_opts(square);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  for (auto& [s, fn] : handlers) {
    if (!s->parsed()) continue;
    Job job(s->get_name(), o);
    try {
      fn(job);
      return 0;
    } catch (const Error& e) {
      return report(e);
    } catch (const nlohmann::json::exception& e) {
      return report(Error(ErrorKind::ParseError, "json_io", e.what()));
    } catch (const std::exception& e) {
      return report(Error(ErrorKind::ValidationError, kModule, e.what()));
    }
  }
  return 1;
}
