#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "acceptance.hpp"
#include "hopf/codec.hpp"
#include "hopf/covers.hpp"
#include "hopf/error.hpp"
#include "hopf/picard.hpp"
#include "hopf/rank2.hpp"
#include "hopf/relations.hpp"
#include "hopf/spectral.hpp"
#include "hopf/stability.hpp"

namespace hopf::cli {

namespace {

using codec::json;
using cplx = std::complex<double>;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

double parse_real(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(what + ": '" + s + "' is not a number");
  }
}

// "re" or "re,im".
cplx parse_complex(const std::string& s, const std::string& what) {
  const auto parts = split(s, ',');
  if (parts.size() == 1) return {parse_real(parts[0], what), 0.0};
  if (parts.size() == 2) return {parse_real(parts[0], what), parse_real(parts[1], what)};
  throw ParseError(what + ": expected 're' or 're,im', got '" + s + "'");
}

std::vector<int> parse_ints(const std::string& s, const std::string& what) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (const auto& p : split(s, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(p, &used);
      if (used != p.size()) throw std::invalid_argument(p);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(what + ": '" + p + "' is not an integer");
    }
  }
  return out;
}

P1Point parse_p1(const std::string& s, const std::string& what) {
  if (s == "inf" || s == "infinity") return P1Point::infinity();
  return P1Point::affine(parse_complex(s, what));
}

json read_json_file(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return codec::parse_text(buf.str(), "<stdin>");
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return codec::parse_text(buf.str(), path);
}

struct FactorArgs {
  std::string exp;
  std::string scalar = "1";
};

void add_factor(CLI::App* app, const std::string& scalar_flag, const std::string& exp_flag,
                FactorArgs& f, const std::string& what) {
  app->add_option(scalar_flag, f.scalar, "scalar of " + what + " as re[,im]")->capture_default_str();
  app->add_option(exp_flag, f.exp, "exponents of " + what + " as e1,...,en (default 0)");
}

struct Context {
  Config cfg;
  std::vector<std::string> mu = {"0.31,0", "0.47,0"};
  std::string json_path;
  json doc = json::object();
  bool have_doc = false;

  HopfManifold manifold() const {
    if (have_doc && doc.contains("manifold")) return codec::decode_manifold(doc["manifold"], cfg, "$.manifold");
    std::vector<cplx> v;
    for (std::size_t i = 0; i < mu.size(); ++i)
      v.push_back(parse_complex(mu[i], "--mu[" + std::to_string(i) + "]"));
    return HopfManifold(v, cfg);
  }

  Factor factor(const std::string& key, const FactorArgs& a, int n) const {
    if (have_doc && doc.contains(key)) return codec::decode_factor(doc[key], "$." + key);
    auto e = parse_ints(a.exp, key + " exponents");
    if (e.empty()) e.assign(static_cast<std::size_t>(n), 0);
    if (static_cast<int>(e.size()) != n)
      throw DomainError(key + " needs " + std::to_string(n) + " exponents");
    return Factor(e, parse_complex(a.scalar, key));
  }

  FiltrableRank2 bundle(const std::string& path) const {
    json j;
    std::string where = "$";
    if (!path.empty()) {
      j = read_json_file(path);
    } else if (have_doc && doc.contains("bundle")) {
      j = doc["bundle"];
      where = "$.bundle";
    } else {
      throw PreconditionError("no bundle given (use --bundle or a 'bundle' key in --json)");
    }
    const HopfManifold X = j.is_object() && j.contains("manifold")
                               ? codec::decode_manifold(j["manifold"], cfg, where + ".manifold")
                               : manifold();
    return codec::decode_bundle(j, X, where);
  }

  GraphData graph(const std::string& path) const {
    if (!path.empty()) return codec::decode_graph(read_json_file(path));
    if (have_doc && doc.contains("graph")) return codec::decode_graph(doc["graph"], "$.graph");
    throw PreconditionError("no graph given (use --graph or a 'graph' key in --json)");
  }
};

json error_json(const Error& e) { return {{"error", {{"kind", e.kind()}, {"message", e.what()}}}}; }

SplittingType splitting_arg(const std::string& s) {
  try {
    return splitting_from_string(s);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad splitting type '" + s + "'");
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  std::string det_conv = "theorem";
  int base_dim = 0;
  std::function<json()> action;

  CLI::App app{"Holomorphic bundles on diagonal Hopf manifolds", "hopf"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--tol", ctx.cfg.tol, "numerical tolerance")->capture_default_str();
  app.add_option("--exp-bound", ctx.cfg.exp_bound, "exponent bound of relation searches")->capture_default_str();
  app.add_option("--det-convention", det_conv, "determinant convention of modifications")
      ->check(CLI::IsMember({"theorem", "lemma"}))
      ->capture_default_str();
  auto* base_opt = app.add_option("--classical-base-dim", base_dim, "projective base dimension on classical manifolds");
  app.add_option("--json", ctx.json_path, "JSON input document (file or - for stdin)");
  app.add_option("--mu", ctx.mu, "diagonal entries as re[,im]")->expected(2, 64)->capture_default_str();

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* s = parent->add_subcommand(name, help);
    return s;
  };
  auto on = [&](CLI::App* s, std::function<json()> f) { s->callback([&action, f] { action = f; }); };

  // manifold
  auto* manifold = app.add_subcommand("manifold", "classify diagonal Hopf manifolds");
  manifold->require_subcommand(1);
  on(leaf(manifold, "classify", "kind and resonance"), [&] { return codec::encode(ctx.manifold()); });
  on(leaf(manifold, "canonical", "canonical divisor and bundle"), [&] {
    const auto X = ctx.manifold();
    const auto K = canonical_divisor(X);
    return json{{"divisor", K.coeffs}, {"line_bundle", codec::encode(divisor_to_line_bundle(X, K))}};
  });

  // pic
  auto* pic = app.add_subcommand("pic", "line bundles");
  pic->require_subcommand(1);
  FactorArgs pic_a;
  int pic_curve = 1;
  std::string pic_sign = "any";
  auto pic_factor = [&] {
    const auto X = ctx.manifold();
    return LineBundle(ctx.factor("factor", pic_a, X.n()), X);
  };
  auto* cohom = leaf(pic, "cohom", "cohomology dimensions");
  add_factor(cohom, "--scalar", "--exp", pic_a, "the factor");
  on(cohom, [&] {
    const auto L = pic_factor();
    return json{{"h", cohomology_dims(L, ctx.cfg).h}, {"factor", codec::encode(L.a)}};
  });
  auto* pdeg = leaf(pic, "degree", "Gauduchon degree");
  add_factor(pdeg, "--scalar", "--exp", pic_a, "the factor");
  on(pdeg, [&] {
    const auto L = pic_factor();
    return json{{"degree", degree(L)}, {"factor", codec::encode(L.a)}};
  });
  auto* restrict_ = leaf(pic, "restrict", "restriction to T_i");
  add_factor(restrict_, "--scalar", "--exp", pic_a, "the factor");
  restrict_->add_option("--curve", pic_curve)->capture_default_str();
  on(restrict_, [&] {
    const auto c = restrict_to_curve(pic_factor(), pic_curve);
    return json{{"curve", c.curve}, {"class", codec::encode(c.residual)}, {"q", codec::encode(c.q)},
                {"trivial", c.trivial(ctx.cfg.tol)}};
  });
  auto* detect = leaf(pic, "detect", "monomial relation a = mu^m");
  add_factor(detect, "--scalar", "--exp", pic_a, "the factor");
  detect->add_option("--sign", pic_sign)->check(CLI::IsMember({"any", "nonneg", "neg", "nonpos"}))->capture_default_str();
  on(detect, [&] {
    const auto L = pic_factor();
    const SignConstraint s = pic_sign == "nonneg" ? SignConstraint::NonNegative
                             : pic_sign == "neg"  ? SignConstraint::Negative
                             : pic_sign == "nonpos" ? SignConstraint::NonPositive
                                                    : SignConstraint::Any;
    const auto m = detect_monomial(L.a, L.X, s, ctx.cfg);
    return json{{"exponents", m ? json(*m) : json(nullptr)}, {"sign", to_string(s)}};
  });

  // rank2
  auto* rank2 = app.add_subcommand("rank2", "rank-2 bundles");
  rank2->require_subcommand(1);
  std::string bundle_path;
  FactorArgs r_l, r_lp, r_twist;
  int z1 = 0, z2 = 0, z_off = 0, r_curve = 1, r_height = 1;
  std::string r_class = "1", r_fibre, r_m, r_n_str;
  std::vector<std::string> r_components;
  bool r_split = false;
  auto* serre = leaf(rank2, "serre", "extension of L' (x) I_Z by L");
  add_factor(serre, "--l", "--l-exp", r_l, "L");
  add_factor(serre, "--lp", "--lp-exp", r_lp, "L'");
  serre->add_option("--z1", z1, "points of Z on T_1");
  serre->add_option("--z2", z2, "points of Z on T_2");
  serre->add_option("--off", z_off, "points of Z off T_1 and T_2");
  on(serre, [&] {
    const auto X = ctx.manifold();
    PointSet Z{{z1, z2}, {}, z_off};
    json j = codec::encode(serre_extension(X, ctx.factor("l", r_l, 2), ctx.factor("lp", r_lp, 2), Z));
    j["manifold"] = codec::encode(X);
    return j;
  });
  auto jump_opts = [&](CLI::App* s) {
    s->add_option("--bundle", bundle_path, "bundle JSON file");
    s->add_option("--curve", r_curve, "1, 2, or 0 for another classical fibre")->capture_default_str();
    s->add_option("--lambda-class", r_class, "class of lambda in C*/q")->capture_default_str();
    s->add_option("--fibre", r_fibre, "base point of a classical fibre (re[,im] or inf)");
  };
  auto fibre_arg = [&]() -> std::optional<P1Point> {
    if (r_fibre.empty()) return std::nullopt;
    return parse_p1(r_fibre, "--fibre");
  };
  auto with_manifold = [&](const FiltrableRank2& E) {
    json j = codec::encode(E);
    j["manifold"] = codec::encode(E.X);
    return j;
  };
  auto curve_q = [&](const FiltrableRank2& E) { return r_curve == 0 ? E.X.mu(1) : E.X.mu(r_curve); };
  auto* modify = leaf(rank2, "modify", "allowable elementary modification");
  jump_opts(modify);
  on(modify, [&] {
    const auto E = ctx.bundle(bundle_path);
    int h = 0;
    for (const auto& j : E.jumps)
      if (j.curve == r_curve && (r_curve != 0 || (fibre_arg() && j.fibre->approx_equal(*fibre_arg())))) {
        h = j.height();
        break;
      }
    const EllipticPic lambda(-h, parse_complex(r_class, "--lambda-class"), curve_q(E));
    return with_manifold(elementary_modification(E, r_curve, lambda, ctx.cfg.det_convention, fibre_arg()));
  });
  auto* addj = leaf(rank2, "add-jump", "inverse modification creating a jump");
  jump_opts(addj);
  addj->add_option("--height", r_height)->capture_default_str();
  on(addj, [&] {
    const auto E = ctx.bundle(bundle_path);
    const EllipticPic lambda(r_height, parse_complex(r_class, "--lambda-class"), curve_q(E));
    return with_manifold(add_jump(E, r_curve, lambda, ctx.cfg.det_convention, fibre_arg()));
  });
  auto* remove = leaf(rank2, "remove", "remove every jump");
  remove->add_option("--bundle", bundle_path, "bundle JSON file");
  on(remove, [&] { return with_manifold(remove_all_jumps(ctx.bundle(bundle_path), ctx.cfg.det_convention)); });
  auto* ext = leaf(rank2, "extension", "extensions of L_b by L_a with c2 = 0");
  FactorArgs r_a, r_b;
  add_factor(ext, "--a", "--a-exp", r_a, "a");
  add_factor(ext, "--b", "--b-exp", r_b, "b");
  on(ext, [&] {
    const auto X = ctx.manifold();
    const auto c = classify_extension_c2zero(ctx.factor("a", r_a, X.n()), ctx.factor("b", r_b, X.n()), X, ctx.cfg);
    return json{{"class", to_string(c.cls)}, {"m", c.m ? json(*c.m) : json(nullptr)}};
  });
  auto higher_opts = [&](CLI::App* s) {
    add_factor(s, "--twist", "--twist-exp", r_twist, "the twist");
    s->add_option("--m", r_m, "exponents m_1,...,m_n");
    s->add_option("--component", r_components, "codimension-2 component i,j,k_i,k_j (repeatable)");
    s->add_flag("--split", r_split, "split extension");
  };
  auto higher_type = [&](const HopfManifold& X) {
    auto m = parse_ints(r_m, "--m");
    if (m.empty()) m.assign(static_cast<std::size_t>(X.n()), 0);
    HigherDescriptor d{ctx.factor("twist", r_twist, X.n()), Factor::monomial(m), r_split, {}};
    for (const auto& c : r_components) {
      const auto v = parse_ints(c, "--component");
      if (v.size() != 4) throw ParseError("--component expects i,j,k_i,k_j");
      d.z.push_back({v[0], v[1], v[2], v[3]});
    }
    return classify_rank2_higher(d, X, ctx.cfg);
  };
  auto* higher = leaf(rank2, "higher", "classification on generic manifolds, n >= 3");
  higher_opts(higher);
  on(higher, [&] { return codec::encode(higher_type(ctx.manifold())); });
  auto* filt = leaf(rank2, "filtrability", "filtrability of rank-2 bundles");
  int f_n = 2, f_c2 = 0;
  bool f_torsion = true;
  filt->add_option("--n", f_n)->capture_default_str();
  filt->add_option("--c2", f_c2)->capture_default_str();
  filt->add_option("--c1-torsion", f_torsion, "whether c1 is torsion (true/false)")->capture_default_str();
  on(filt, [&] { return json{{"verdict", to_string(filtrability_verdict(f_n, f_torsion, f_c2))}}; });

  // stab
  auto* stab = app.add_subcommand("stab", "stability");
  stab->require_subcommand(1);
  bool audit = false;
  auto* check = leaf(stab, "check", "stability of a filtrable bundle on a surface");
  check->add_option("--bundle", bundle_path, "bundle JSON file");
  check->add_flag("--audit", audit, "verify that the sub line bundle has maximal degree");
  on(check, [&] {
    const auto E = ctx.bundle(bundle_path);
    return codec::encode(audit ? is_stable_filtrable_surface_audited(E, ctx.cfg)
                               : is_stable_filtrable_surface(E, ctx.cfg));
  });
  FactorArgs s_delta, s_a;
  int l1 = 0, l2 = 0, l_total = -1, s_c2 = 1, mass = 1, charge = 1;
  auto* domain = leaf(stab, "domain", "the annulus D_{l1,l2} (or D_l)");
  add_factor(domain, "--delta", "--delta-exp", s_delta, "delta");
  domain->add_option("--l1", l1)->capture_default_str();
  domain->add_option("--l2", l2)->capture_default_str();
  domain->add_option("--l", l_total, "total length on a classical surface");
  on(domain, [&] {
    const auto X = ctx.manifold();
    const auto delta = ctx.factor("delta", s_delta, X.n());
    if (l_total >= 0) {
      const int l[] = {l_total};
      return codec::encode(d_domain(delta, l, X));
    }
    const int l[] = {l1, l2};
    return codec::encode(d_domain(delta, l, X));
  });
  auto* mod = leaf(stab, "moduli", "M_{delta,c2}");
  mod->add_option("--c2", s_c2)->capture_default_str();
  on(mod, [&] { return codec::encode(moduli_dimension(std::nullopt, s_c2)); });
  auto* mono = leaf(stab, "monopole", "monopoles of mass m and charge k");
  mono->add_option("--mass", mass)->capture_default_str();
  mono->add_option("--charge", charge)->capture_default_str();
  on(mono, [&] { return codec::encode(monopole_parameters(mass, charge)); });
  auto* c2one = leaf(stab, "c2one", "stable filtrable bundles with c2 = 1");
  add_factor(c2one, "--a", "--a-exp", s_a, "a");
  add_factor(c2one, "--delta", "--delta-exp", s_delta, "delta");
  on(c2one, [&] {
    const auto X = ctx.manifold();
    return codec::encode(c2one_parameters(ctx.factor("a", s_a, X.n()), ctx.factor("delta", s_delta, X.n()), X, ctx.cfg));
  });
  auto* shigher = leaf(stab, "higher", "stability on generic manifolds, n >= 3");
  higher_opts(shigher);
  on(shigher, [&] {
    const auto X = ctx.manifold();
    const auto t = higher_type(X);
    json j = codec::encode(is_stable_higher(t, X, ctx.cfg));
    j["type"] = codec::encode(t);
    return j;
  });

  // cover
  auto* cover = app.add_subcommand("cover", "cyclic covers");
  cover->require_subcommand(1);
  int c_r = 2, c_k = -1, c_d = -2;
  std::string c_branch = "0", c_beta = "proof";
  FactorArgs c_m;
  auto cover_opts = [&](CLI::App* s) {
    s->add_option("--r", c_r)->capture_default_str();
    s->add_option("--branch", c_branch)->check(CLI::IsMember({"0", "t1", "t2", "t1t2"}))->capture_default_str();
    s->add_option("--k", c_k, "order of the line bundle for an empty branch");
    s->add_option("--beta", c_beta)->check(CLI::IsMember({"proof", "statement"}))->capture_default_str();
  };
  auto cover_of = [&] {
    return classify_cyclic_cover(ctx.manifold(), c_r, branch_from_string(c_branch),
                                 c_k >= 0 ? std::optional<int>(c_k) : std::nullopt,
                                 c_beta == "proof" ? BetaConvention::Proof : BetaConvention::Statement);
  };
  auto* classify = leaf(cover, "classify", "classify an r-cyclic cover");
  cover_opts(classify);
  on(classify, [&] { return codec::encode(cover_of()); });
  auto* homol = leaf(cover, "homology", "integral cohomology of Theta*_d / (beta, mu)");
  homol->add_option("--d", c_d)->capture_default_str();
  on(homol, [&] { return codec::encode(nonprimary_homology(c_d)); });
  auto* push = leaf(cover, "pushforward", "pushforward of a line bundle on the cover");
  cover_opts(push);
  add_factor(push, "--m", "--m-exp", c_m, "M");
  on(push, [&] {
    const auto c = cover_of();
    return json{{"cover", codec::encode(c)}, {"pushforward", codec::encode(pushforward_rank2(c, ctx.factor("m", c_m, 2)))}};
  });

  // spec
  auto* spec = app.add_subcommand("spec", "spectral covers on classical surfaces");
  spec->require_subcommand(1);
  std::string graph_path, x1 = "inf", x2 = "0", st1 = "regular", st2 = "regular";
  int p_c2 = 1, g_k = 0;
  std::vector<std::string> lambdas;
  auto* scover = leaf(spec, "cover", "spectral cover of a filtrable bundle");
  scover->add_option("--bundle", bundle_path, "bundle JSON file");
  on(scover, [&] { return codec::encode(spectral_of_filtrable(ctx.bundle(bundle_path), ctx.cfg)); });
  auto* sgraph = leaf(spec, "graph", "graph of the spectral cover");
  sgraph->add_option("--bundle", bundle_path, "bundle JSON file");
  on(sgraph, [&] {
    const auto S = spectral_of_filtrable(ctx.bundle(bundle_path), ctx.cfg);
    const auto G = graph_of_spectral(S);
    json j = codec::encode(G);
    j["linear_system_dim"] = graph_linear_system_dim(G.c2());
    return j;
  });
  auto* cas = leaf(spec, "casimir", "Casimir values F(x1), F(x2)");
  cas->add_option("--graph", graph_path, "graph JSON file");
  cas->add_option("--x1", x1)->capture_default_str();
  cas->add_option("--x2", x2)->capture_default_str();
  on(cas, [&] {
    const auto [c1, c2] = casimirs(ctx.graph(graph_path), parse_p1(x1, "--x1"), parse_p1(x2, "--x2"), ctx.cfg.tol);
    return json{{"C1", codec::encode(c1)}, {"C2", codec::encode(c2)}, {"equal", c1.approx_equal(c2, ctx.cfg.tol)}};
  });
  auto* poi = leaf(spec, "poisson", "rank of the Poisson structure");
  poi->add_option("--c2", p_c2)->capture_default_str();
  poi->add_option("--st1", st1, "splitting on T_1: regular, nonregular, atiyah, jump:h")->capture_default_str();
  poi->add_option("--st2", st2, "splitting on T_2")->capture_default_str();
  on(poi, [&] {
    const auto a = splitting_arg(st1), b = splitting_arg(st2);
    return json{{"rank", poisson_rank(p_c2, a, b)}, {"st1", codec::encode(a)}, {"st2", codec::encode(b)}};
  });
  auto* genus = leaf(spec, "genus", "genus of a smooth irreducible bisection");
  genus->add_option("--c2", p_c2)->capture_default_str();
  genus->add_option("--k", g_k)->capture_default_str();
  on(genus, [&] { return json{{"genus", bisection_genus(p_c2, g_k)}}; });
  auto* sleaf = leaf(spec, "leaf", "symplectic leaf through a bundle (c2 = 1) or a graph");
  sleaf->add_option("--bundle", bundle_path, "bundle JSON file");
  sleaf->add_option("--graph", graph_path, "graph JSON file");
  on(sleaf, [&] {
    if (!graph_path.empty() || (bundle_path.empty() && ctx.have_doc && ctx.doc.contains("graph")))
      return codec::encode(leaf_of_graph(ctx.graph(graph_path), ctx.cfg.tol));
    return codec::encode(leaf_of_bundle(ctx.bundle(bundle_path), ctx.cfg));
  });
  auto* shi = leaf(spec, "higher", "spectral cover on classical manifolds, n >= 3");
  shi->add_option("--lambda", lambdas, "spectral values re[,im] (one per rank)")->required();
  on(shi, [&] {
    std::vector<cplx> ls;
    for (const auto& s : lambdas) ls.push_back(parse_complex(s, "--lambda"));
    return codec::encode(higher_spectral(ctx.manifold(), ls, ctx.cfg));
  });

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  bool selftest_run = false;
  selftest->callback([&] { selftest_run = true; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  if (!action && !selftest_run) {
    err << app.help();
    return 2;
  }

  json result;
  try {
    ctx.cfg.det_convention = det_conv == "lemma" ? DetConvention::Lemma : DetConvention::Theorem;
    if (base_opt->count()) ctx.cfg.classical_base_dim = base_dim;
    ctx.cfg.validate();
    if (!ctx.json_path.empty()) {
      ctx.doc = read_json_file(ctx.json_path);
      if (!ctx.doc.is_object()) throw ParseError(ctx.json_path + ": $: expected an object");
      ctx.have_doc = true;
    }
    if (selftest_run) {
      const auto report = acceptance::run(err);
      json criteria = json::array();
      for (const auto& r : report.results)
        criteria.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}});
      result = {{"passed", report.passed()}, {"failed", report.failed()},
                {"total_seconds", report.total_seconds}, {"criteria", criteria}};
      result["meta"] = codec::meta(ctx.cfg);
      out << result.dump(2) << "\n";
      return report.ok() ? 0 : 1;
    }
    result = action();
  } catch (const Error& e) {
    json j = error_json(e);
    j["meta"] = codec::meta(ctx.cfg);
    out << j.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    json j{{"error", {{"kind", "internal"}, {"message", e.what()}}}};
    j["meta"] = codec::meta(ctx.cfg);
    out << j.dump(2) << "\n";
    return 1;
  }
  result["meta"] = codec::meta(ctx.cfg);
  out << result.dump(2) << "\n";
  return 0;
}

}  // namespace hopf::cli
