#include "hopf/codec.hpp"

#include <cmath>

#include "hopf/error.hpp"

namespace hopf::codec {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < INT32_MIN || v > INT32_MAX) fail(path, "integer out of range");
  return static_cast<int>(v);
}

double as_real(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::vector<int> int_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::complex<double>> complex_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<std::complex<double>> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(decode_complex(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

json complex_array(const std::vector<std::complex<double>>& v) {
  json a = json::array();
  for (auto z : v) a.push_back(encode(z));
  return a;
}

// Wraps a constructor that validates its input, reporting failures at path.
template <class F>
auto guarded(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

}  // namespace

json encode(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::complex<double> decode_complex(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  return {as_real(field(j, "re", path), path + ".re"), as_real(field(j, "im", path), path + ".im")};
}

json encode(const Factor& f) { return {{"exp", f.exponents}, {"scalar", encode(f.scalar)}}; }

Factor decode_factor(const json& j, const std::string& path) {
  auto exps = int_list(field(j, "exp", path), path + ".exp");
  std::complex<double> s{1.0, 0.0};
  if (j.contains("scalar")) s = decode_complex(j["scalar"], path + ".scalar");
  return guarded(path, [&] { return Factor(std::move(exps), s); });
}

json encode(const HopfManifold& X) {
  json mu = json::array();
  for (auto z : X.mu()) mu.push_back(encode(z));
  json out{{"n", X.n()}, {"mu", mu}, {"kind", to_string(X.kind())}};
  if (auto r = X.resonance()) out["resonance"] = {{"p", r->p}, {"q", r->q}};
  return out;
}

HopfManifold decode_manifold(const json& j, const Config& cfg, const std::string& path) {
  auto mu = complex_list(field(j, "mu", path), path + ".mu");
  if (j.contains("n") && as_int(j["n"], path + ".n") != static_cast<int>(mu.size()))
    fail(path + ".n", "does not match the length of mu");
  HopfManifold X = guarded(path, [&] { return HopfManifold(std::move(mu), cfg); });
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) fail(path + ".kind", "expected a string");
    if (j["kind"].get<std::string>() != to_string(X.kind()))
      fail(path + ".kind", std::string("recorded kind disagrees with classification '") +
                               to_string(X.kind()) + "'");
  }
  return X;
}

json encode(const P1Point& p) { return {{"u", encode(p.u())}, {"v", encode(p.v())}}; }

P1Point decode_p1(const json& j, const std::string& path) {
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "infinity"))
    return P1Point::infinity();
  if (j.is_number() || (j.is_object() && j.contains("re"))) return P1Point::affine(decode_complex(j, path));
  const auto u = decode_complex(field(j, "u", path), path + ".u");
  const auto v = decode_complex(field(j, "v", path), path + ".v");
  return guarded(path, [&] { return P1Point(u, v); });
}

json encode(const JumpRecord& r) {
  json out{{"curve", r.curve}, {"heights", r.heights}};
  if (r.fibre) out["fibre"] = encode(*r.fibre);
  return out;
}

JumpRecord decode_jump(const json& j, const std::string& path) {
  JumpRecord r;
  r.curve = as_int(field(j, "curve", path), path + ".curve");
  r.heights = int_list(field(j, "heights", path), path + ".heights");
  if (j.contains("fibre")) r.fibre = decode_p1(j["fibre"], path + ".fibre");
  return r;
}

json encode(const FiltrableRank2& E) {
  json jumps = json::array();
  for (const auto& r : E.jumps) jumps.push_back(encode(r));
  return {{"det", encode(E.det)},   {"c2", E.c2},         {"sub", encode(E.sub)},
          {"jumps", jumps},         {"z_on_curve", E.z_on_curve}};
}

FiltrableRank2 decode_bundle(const json& j, const HopfManifold& X, const std::string& path) {
  FiltrableRank2 E{X, decode_factor(field(j, "det", path), path + ".det"),
                   as_int(field(j, "c2", path), path + ".c2"),
                   decode_factor(field(j, "sub", path), path + ".sub"),
                   {},
                   {}};
  const auto& jumps = field(j, "jumps", path);
  if (!jumps.is_array()) fail(path + ".jumps", "expected an array");
  for (std::size_t i = 0; i < jumps.size(); ++i)
    E.jumps.push_back(decode_jump(jumps[i], path + ".jumps[" + std::to_string(i) + "]"));
  E.z_on_curve = int_list(field(j, "z_on_curve", path), path + ".z_on_curve");
  guarded(path, [&] {
    E.validate();
    return 0;
  });
  return E;
}

json encode(const GraphData& g) {
  json verticals = json::array();
  for (const auto& v : g.verticals)
    verticals.push_back({{"x", encode(v.x)}, {"multiplicity", v.multiplicity}});
  return {{"verticals", verticals}, {"num", complex_array(g.num)}, {"den", complex_array(g.den)},
          {"degree", g.degree},     {"c2", g.c2()}};
}

GraphData decode_graph(const json& j, const std::string& path) {
  std::vector<VerticalComponent> verticals;
  if (j.contains("verticals")) {
    const auto& vs = j["verticals"];
    if (!vs.is_array()) fail(path + ".verticals", "expected an array");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const std::string p = path + ".verticals[" + std::to_string(i) + "]";
      verticals.push_back({decode_p1(field(vs[i], "x", p), p + ".x"),
                           as_int(field(vs[i], "multiplicity", p), p + ".multiplicity")});
    }
  }
  auto num = complex_list(field(j, "num", path), path + ".num");
  auto den = complex_list(field(j, "den", path), path + ".den");
  return guarded(path, [&] { return GraphData::make(std::move(verticals), num, den); });
}

json encode(const Annulus& a) {
  return {{"r_lo", a.r_lo}, {"r_hi", a.r_hi}, {"empty", a.empty()}};
}

json encode(const StabilityVerdict& v) {
  json w{{"half_det_degree", v.half_det_degree + 0.0}, {"domain", encode(v.domain)}};
  if (v.k) w["k"] = *v.k;
  if (v.destabilizer) {
    w["destabilizer"] = encode(*v.destabilizer);
    w["destabilizer_degree"] = v.destabilizer_degree + 0.0;
  }
  return {{"stable", v.stable()},
          {"status", to_string(v.status)},
          {"branch", v.branch},
          {"boundary", v.boundary},
          {"witness", w}};
}

json encode(const Parametrization& p) {
  return {{"base", p.base},
          {"annulus_dim", p.annulus_dim},
          {"picard_degree", p.picard_degree},
          {"picard_dim", p.picard_dim},
          {"projection_space_dim", p.projection_space_dim},
          {"dim", p.dimension()},
          {"note", p.note}};
}

json encode(const ModuliDescriptor& m) {
  json out{{"c2", m.c2}, {"dim", m.dim}, {"nonempty", m.nonempty},
           {"parametrization", encode(m.parametrization)}};
  out["delta"] = m.delta ? encode(*m.delta) : json(nullptr);
  return out;
}

json encode(const C2OneParameters& c) {
  json out{{"domain", encode(c.domain)}, {"parametrization", encode(c.parametrization)}};
  out["exceptional"] = c.exceptional ? json(*c.exceptional) : json(nullptr);
  return out;
}

json encode(const CoverDescriptor& c) {
  json res{{"type", result_name(c.result)}};
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, DisconnectedCopies>) {
          res["count"] = r.count;
          if (r.base)
            res["base"] = {{"mu1", encode(r.base->mu1)}, {"mu2", encode(r.base->mu2)}};
          else
            res["base"] = "X";
        } else if constexpr (std::is_same_v<T, UnramifiedHopf>) {
          res["mu1"] = encode(r.mu1);
          res["mu2"] = encode(r.mu2);
        } else if constexpr (std::is_same_v<T, RamifiedHopf>) {
          res["mu1"] = encode(r.mu1);
          res["mu2"] = encode(r.mu2);
          res["map_exponents"] = r.map_exponents;
        } else {
          res["d"] = r.d;
          res["beta"] = encode(r.beta);
          res["mu"] = encode(r.mu);
        }
      },
      c.result);
  json out{{"r", c.r}, {"branch", to_string(c.branch)}, {"branch_bundle", encode(c.branch_bundle)},
           {"result", res}};
  out["k"] = c.k ? json(*c.k) : json(nullptr);
  return out;
}

json encode(const GroupDescriptor& g) {
  return {{"free_rank", g.free_rank}, {"torsion", g.torsion}, {"text", to_string(g)}};
}

json encode(const HomologyTable& h) {
  json out = json::array();
  for (const auto& g : h.H) out.push_back(encode(g));
  return {{"H", out}};
}

json encode(const Pushforward& p) {
  json s = json::array();
  for (const auto& f : p.summands) s.push_back(encode(f));
  return {{"rank", p.rank}, {"c2", p.c2}, {"filtrable", p.filtrable}, {"summands", s}};
}

json encode(const RuledClass& c) { return {{"s", c.s}, {"f", c.f}}; }

json encode(const SpectralCover& s) {
  json verticals = json::array();
  for (const auto& v : s.vertical)
    verticals.push_back({{"x", encode(v.x)}, {"multiplicity", v.multiplicity}});
  json bis;
  if (const auto* r = std::get_if<ReducibleBisection>(&s.bisection))
    bis = {{"type", "reducible"}, {"lambda1", encode(r->lambda1)}, {"lambda2", encode(r->lambda2)}};
  else
    bis = {{"type", "irreducible"}, {"graph", encode(std::get<IrreducibleBisection>(s.bisection).graph)}};
  return {{"vertical", verticals},
          {"bisection", bis},
          {"class", encode(s.klass)},
          {"self_intersection", intersect(s.klass, s.klass)},
          {"c2", s.c2()},
          {"q", encode(s.q)},
          {"delta_t", encode(s.delta_t)}};
}

json encode(const LeafLabel& l) {
  json out{{"rank", l.rank}, {"dim", l.dim}, {"parametrization", l.parametrization}};
  out["C1"] = l.c1 ? encode(*l.c1) : json(nullptr);
  out["C2"] = l.c2 ? encode(*l.c2) : json(nullptr);
  return out;
}

json encode(const SplittingType& st) {
  return {{"type", splitting_name(st)}, {"h0_ad", h0_ad(st)}, {"regular", is_regular(st)}};
}

json encode(const HigherExtensionType& t) {
  json out{{"type", higher_type_name(t)}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        out["a"] = encode(v.a);
        if constexpr (std::is_same_v<T, Decomposable>) {
          out["b"] = encode(v.b);
        } else if constexpr (std::is_same_v<T, LineExtension>) {
          out["m"] = v.m;
        } else {
          out["m"] = v.m;
          out["component"] = {{"i", v.component.i},
                              {"j", v.component.j},
                              {"k_i", v.component.k_i},
                              {"k_j", v.component.k_j}};
        }
      },
      t);
  return out;
}

json encode(const HigherSpectral& h) {
  return {{"n", h.n},
          {"r", h.r},
          {"lambdas", complex_array(h.lambdas)},
          {"vertical_multiplicity", h.vertical_multiplicity},
          {"cn", h.cn},
          {"filtrable", h.filtrable},
          {"verdict", to_string(h.verdict)}};
}

json encode(const EllipticPic& p) {
  return {{"d", p.d}, {"class", encode(p.cls)}, {"q", encode(p.q)}};
}

json encode(const CohomologyVector& h) { return {{"h", h.h}}; }

json meta(const Config& cfg) {
  json out{{"tol", cfg.tol},
           {"exp_bound", cfg.exp_bound},
           {"det_convention", cfg.det_convention == DetConvention::Theorem ? "theorem" : "lemma"}};
  if (cfg.classical_base_dim) out["classical_base_dim"] = *cfg.classical_base_dim;
  return out;
}

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

}  // namespace hopf::codec
