#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "hopf/codec.hpp"
#include "hopf/covers.hpp"
#include "hopf/error.hpp"
#include "hopf/picard.hpp"
#include "hopf/relations.hpp"
#include "hopf/spectral.hpp"
#include "hopf/stability.hpp"

namespace py = pybind11;
using namespace hopf;
using cplx = std::complex<double>;

namespace {

Config make_config(double tol, int exp_bound, const std::string& det_convention) {
  Config cfg;
  cfg.tol = tol;
  cfg.exp_bound = exp_bound;
  if (det_convention == "lemma")
    cfg.det_convention = DetConvention::Lemma;
  else if (det_convention != "theorem")
    throw DomainError("det_convention must be 'theorem' or 'lemma'");
  cfg.validate();
  return cfg;
}

SignConstraint sign_from(const std::string& s) {
  if (s == "any") return SignConstraint::Any;
  if (s == "nonneg") return SignConstraint::NonNegative;
  if (s == "neg") return SignConstraint::Negative;
  if (s == "nonpos") return SignConstraint::NonPositive;
  throw DomainError("sign must be any, nonneg, neg or nonpos");
}

std::string dump(const codec::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_hopf, m) {
  m.doc() = "Holomorphic bundles on diagonal Hopf manifolds";

  // Exception hierarchy mirrors hopf::Error; kind() names the subclass.
  static py::exception<Error> base(m, "HopfError");
  static py::exception<DomainError> domain(m, "DomainError", base.ptr());
  static py::exception<UnsupportedKind> unsupported(m, "UnsupportedKind", base.ptr());
  static py::exception<PreconditionError> precondition(m, "PreconditionError", base.ptr());
  static py::exception<InvariantViolation> invariant(m, "InvariantViolation", base.ptr());
  static py::exception<ClassificationError> classification(m, "ClassificationError", base.ptr());
  static py::exception<ModelInconsistency> inconsistency(m, "ModelInconsistency", base.ptr());
  static py::exception<ParseError> parse(m, "ParseError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::set_error(domain, e.what());
    } catch (const UnsupportedKind& e) {
      py::set_error(unsupported, e.what());
    } catch (const PreconditionError& e) {
      py::set_error(precondition, e.what());
    } catch (const InvariantViolation& e) {
      py::set_error(invariant, e.what());
    } catch (const ClassificationError& e) {
      py::set_error(classification, e.what());
    } catch (const ModelInconsistency& e) {
      py::set_error(inconsistency, e.what());
    } catch (const ParseError& e) {
      py::set_error(parse, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  py::class_<Config>(m, "Config")
      .def(py::init(&make_config), py::arg("tol") = 1e-9, py::arg("exp_bound") = 32,
           py::arg("det_convention") = "theorem")
      .def_readonly("tol", &Config::tol)
      .def_readonly("exp_bound", &Config::exp_bound);

  py::class_<Factor>(m, "Factor")
      .def(py::init<std::vector<int>, cplx>(), py::arg("exponents"), py::arg("scalar") = cplx{1.0, 0.0})
      .def_readonly("exponents", &Factor::exponents)
      .def_readonly("scalar", &Factor::scalar)
      .def_property_readonly("n", &Factor::n)
      .def("value", [](const Factor& f, const HopfManifold& X) { return f.value(X.mu()); })
      .def("__mul__", [](const Factor& a, const Factor& b) { return a * b; })
      .def("__truediv__", [](const Factor& a, const Factor& b) { return a / b; })
      .def("__pow__", [](const Factor& a, int k) { return pow(a, k); })
      .def("__eq__", [](const Factor& a, const Factor& b) { return a == b; })
      .def("__repr__", [](const Factor& f) { return "Factor(" + dump(codec::encode(f)) + ")"; });

  py::class_<HopfManifold>(m, "HopfManifold")
      .def(py::init<std::vector<cplx>, int, double>(), py::arg("mu"), py::arg("exp_bound") = 32,
           py::arg("tol") = 1e-9)
      .def_property_readonly("n", &HopfManifold::n)
      .def_property_readonly("mu", [](const HopfManifold& X) { return std::vector<cplx>(X.mu().begin(), X.mu().end()); })
      .def_property_readonly("kind", [](const HopfManifold& X) { return std::string(to_string(X.kind())); })
      .def_property_readonly("resonance",
                             [](const HopfManifold& X) -> py::object {
                               if (auto r = X.resonance()) return py::make_tuple(r->p, r->q);
                               return py::none();
                             })
      .def("is_generic", &HopfManifold::is_generic)
      .def("is_classical", &HopfManifold::is_classical)
      .def("to_json", [](const HopfManifold& X) { return dump(codec::encode(X)); })
      .def("__repr__", [](const HopfManifold& X) { return "HopfManifold(" + dump(codec::encode(X)) + ")"; });

  m.def("degree", [](const Factor& a, const HopfManifold& X) { return degree(a, X); });
  m.def(
      "cohomology",
      [](const Factor& a, const HopfManifold& X, const Config& cfg) { return cohomology_dims(LineBundle(a, X), cfg).h; },
      py::arg("a"), py::arg("X"), py::arg("cfg") = Config{});
  m.def(
      "detect_monomial",
      [](const Factor& a, const HopfManifold& X, const std::string& sign, const Config& cfg) {
        return detect_monomial(a, X, sign_from(sign), cfg);
      },
      py::arg("a"), py::arg("X"), py::arg("sign") = "any", py::arg("cfg") = Config{});
  m.def("d_domain", [](const Factor& delta, const std::vector<int>& lengths, const HopfManifold& X) {
    const auto D = d_domain(delta, lengths, X);
    return std::make_pair(D.r_lo, D.r_hi);
  });

  // JSON-in, JSON-out entry points; the Python layer converts to dicts.
  m.def(
      "_stability",
      [](const std::string& bundle, const HopfManifold& X, bool audit, const Config& cfg) {
        const auto E = codec::decode_bundle(codec::parse_text(bundle, "bundle"), X);
        return dump(codec::encode(audit ? is_stable_filtrable_surface_audited(E, cfg)
                                        : is_stable_filtrable_surface(E, cfg)));
      },
      py::arg("bundle"), py::arg("X"), py::arg("audit") = false, py::arg("cfg") = Config{});
  m.def(
      "_serre",
      [](const HopfManifold& X, const Factor& L, const Factor& Lp, std::vector<int> on_curve, int off) {
        return dump(codec::encode(serre_extension(X, L, Lp, PointSet{std::move(on_curve), {}, off})));
      },
      py::arg("X"), py::arg("L"), py::arg("Lprime"), py::arg("on_curve") = std::vector<int>{}, py::arg("off") = 0);
  m.def("_moduli", [](int c2) { return dump(codec::encode(moduli_dimension(std::nullopt, c2))); });
  m.def("_monopole", [](int mass, int charge) { return dump(codec::encode(monopole_parameters(mass, charge))); });
  m.def(
      "_cover",
      [](const HopfManifold& X, int r, const std::string& branch, std::optional<int> k, const std::string& beta) {
        const auto conv = beta == "statement" ? BetaConvention::Statement : BetaConvention::Proof;
        return dump(codec::encode(classify_cyclic_cover(X, r, branch_from_string(branch), k, conv)));
      },
      py::arg("X"), py::arg("r"), py::arg("branch"), py::arg("k") = py::none(), py::arg("beta") = "proof");
  m.def("_homology", [](int d) { return dump(codec::encode(nonprimary_homology(d))); });

  m.def("poisson_rank", [](int c2, const std::string& st1, const std::string& st2) {
    return poisson_rank(c2, splitting_from_string(st1), splitting_from_string(st2));
  });
  m.def("bisection_genus", &bisection_genus);
  m.def("filtrability", [](int n, bool c1_torsion, int c2) {
    return std::string(to_string(filtrability_verdict(n, c1_torsion, c2)));
  });

  m.def("_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::dispatch(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
