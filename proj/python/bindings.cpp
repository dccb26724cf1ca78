// Python access to the determinant, asymptotic and fluid routines. Every
// high-precision number crosses the boundary as a decimal string.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hdet/cli.hpp"
#include "hdet/coulomb.hpp"
#include "hdet/errors.hpp"
#include "hdet/hankel.hpp"
#include "hdet/jacobi.hpp"
#include "hdet/linstat.hpp"
#include "hdet/perturbation.hpp"
#include "hdet/specfun.hpp"

namespace py = pybind11;
using namespace hdet;

namespace {

std::string str(const BigReal& x, Precision p) { return x.to_string(p.digits()); }

PerturbationFn checked_h(const std::string& source) {
  return validate_positive(parse_h(source), kDefaultPositivitySamples, Precision(64));
}

HankelResult::Method method_of(const std::string& name) {
  if (name == "ldl") return HankelResult::Method::ldl;
  if (name == "recurrence") return HankelResult::Method::recurrence;
  if (name == "rational") return HankelResult::Method::rational;
  throw DomainError("method must be ldl, recurrence or rational");
}

EndpointForm form_of(const std::string& name) {
  if (name == "consistent") return EndpointForm::consistent;
  if (name == "printed") return EndpointForm::printed;
  throw DomainError("form must be consistent or printed");
}

int digits_or_policy(int digits, unsigned n) { return digits > 0 ? digits : policy_digits(n); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hankel determinants of perturbed Jacobi weights";

  static py::exception<Error> base(m, "HdetError", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "HParseError", base.ptr());
  static py::exception<PositivityError> positivity_error(m, "HPositivityError", base.ptr());
  static py::exception<PrecisionError> precision_error(m, "PrecisionError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const PositivityError& e) {
      positivity_error(e.what());
    } catch (const PrecisionError& e) {
      precision_error(e.what());
    } catch (const Error& e) {
      base(e.what());
    } catch (const cli::UsageError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.attr("__version__") = HDET_VERSION;

  m.def("policy_digits", &policy_digits, py::arg("n"));

  m.def(
      "log_barnes_g",
      [](const std::string& z, int digits) {
        const Precision p(digits);
        return str(log_barnes_g(BigReal(parse_rational(z), p), p), p);
      },
      py::arg("z"), py::arg("digits") = 64, "ln G(z) for a rational z given as text.");

  m.def(
      "logdet_exact",
      [](unsigned n, const std::string& alpha, const std::string& beta, int digits) {
        const Precision p(digits);
        return str(jacobi_logdet_exact(n, JacobiParams::parse(alpha, beta), p), p);
      },
      py::arg("n"), py::arg("alpha") = "0", py::arg("beta") = "0", py::arg("digits") = 64,
      "ln D_n of the pure Jacobi weight from the Barnes G closed form.");

  m.def(
      "logdet_asym",
      [](unsigned n, const std::string& alpha, const std::string& beta, int digits) {
        const Precision p(digits);
        return str(jacobi_logdet_asym(n, JacobiParams::parse(alpha, beta), p), p);
      },
      py::arg("n"), py::arg("alpha") = "0", py::arg("beta") = "0", py::arg("digits") = 64);

  m.def(
      "perturbed_logdet",
      [](unsigned n, const std::string& alpha, const std::string& beta, const std::string& h, int digits,
         const std::string& method, unsigned quad_order) {
        const Precision p(digits_or_policy(digits, n));
        const HankelResult r =
            perturbed_logdet(n, JacobiParams::parse(alpha, beta), checked_h(h), p, method_of(method), quad_order);
        py::dict out;
        out["n"] = n;
        out["method"] = to_string(r.method);
        out["digits"] = p.digits();
        out["log_det"] = str(r.log_det, p);
        out["error_bound"] = r.error_bound.to_string(6);
        out["min_pivot"] = r.min_pivot.to_string(6);
        out["exact"] = r.exact ? py::object(py::str(r.exact->get_str())) : py::object(py::none());
        return out;
      },
      py::arg("n"), py::arg("alpha") = "0", py::arg("beta") = "0", py::arg("h") = "1", py::arg("digits") = 0,
      py::arg("method") = "ldl", py::arg("quad_order") = 0,
      "ln D_n[w h]; digits 0 uses the precision policy for n.");

  m.def(
      "heine_average",
      [](unsigned n, const std::string& alpha, const std::string& beta, const std::string& h, int digits) {
        const Precision p(digits);
        return str(heine_average_small_n(n, JacobiParams::parse(alpha, beta), checked_h(h), p), p);
      },
      py::arg("n"), py::arg("alpha") = "0", py::arg("beta") = "0", py::arg("h") = "1", py::arg("digits") = 40,
      "<prod h(x_j)> over the Jacobi ensemble for n <= 3 by tensor quadrature.");

  m.def(
      "prediction",
      [](unsigned n, const std::string& alpha, const std::string& beta, const std::string& h, int digits,
         unsigned cheb_m) {
        const Precision p(digits_or_policy(digits, n));
        const auto ap = assemble_prediction(n, JacobiParams::parse(alpha, beta), checked_h(h), p, cheb_m);
        py::dict out;
        out["log_leading"] = str(ap.log_leading, p);
        out["log_mean"] = str(ap.log_mean, p);
        out["pv_part"] = str(ap.log_C.pv_part, p);
        out["boundary_part"] = str(ap.log_C.boundary_part, p);
        out["pure_constant_part"] = str(ap.log_C.pure_constant_part, p);
        out["endpoint_correction"] = str(ap.endpoint_correction, p);
        out["total"] = str(ap.total(), p);
        out["cheb_degree"] = ap.cheb_degree;
        return out;
      },
      py::arg("n"), py::arg("alpha") = "0", py::arg("beta") = "0", py::arg("h") = "1", py::arg("digits") = 0,
      py::arg("cheb_m") = 0, "Large-n prediction for ln D_n[w h] and its parts.");

  m.def(
      "support_endpoints",
      [](unsigned n, const std::string& alpha, const std::string& beta, int digits, const std::string& form) {
        const Precision p(digits);
        const auto si = support_endpoints(n, JacobiParams::parse(alpha, beta), p, form_of(form));
        return py::make_tuple(str(si.a, p), str(si.b, p));
      },
      py::arg("n"), py::arg("alpha") = "0", py::arg("beta") = "0", py::arg("digits") = 40,
      py::arg("form") = "consistent");

  m.def(
      "density",
      [](const std::string& x, unsigned n, const std::string& alpha, const std::string& beta, int digits) {
        const Precision p(digits);
        const auto si = support_endpoints(n, JacobiParams::parse(alpha, beta), p);
        return str(equilibrium_density(BigReal::parse(x, p), si, p), p);
      },
      py::arg("x"), py::arg("n"), py::arg("alpha") = "0", py::arg("beta") = "0", py::arg("digits") = 40);

  m.def(
      "density_mass",
      [](unsigned n, const std::string& alpha, const std::string& beta, int digits) {
        const Precision p(digits);
        return str(density_mass(support_endpoints(n, JacobiParams::parse(alpha, beta), p), p), p);
      },
      py::arg("n"), py::arg("alpha") = "0", py::arg("beta") = "0", py::arg("digits") = 40);

  m.def(
      "fluid_recurrence",
      [](unsigned n, const std::string& alpha, const std::string& beta, int digits, const std::string& form) {
        const Precision p(digits);
        const JacobiParams jp = JacobiParams::parse(alpha, beta);
        const auto fr = fluid_recurrence(n, jp, p, form_of(form));
        py::dict out;
        out["alpha_tilde"] = str(fr.alpha_tilde, p);
        out["beta_tilde"] = str(fr.beta_tilde, p);
        out["alpha_n"] = jacobi_alpha_n(n, jp).get_str();
        out["beta_n"] = jacobi_beta_n(n, jp).get_str();
        return out;
      },
      py::arg("n"), py::arg("alpha") = "0", py::arg("beta") = "0", py::arg("digits") = 40,
      py::arg("form") = "consistent");

  m.def(
      "parse_h", [](const std::string& source) { return parse_h(source).ast().to_prefix(); }, py::arg("source"),
      "Prefix form of a perturbation expression; raises HParseError.");

  m.def(
      "run_json",
      [](const std::string& command, const std::string& n, const std::string& alpha, const std::string& beta,
         const std::string& h, int digits, unsigned jobs) {
        cli::Options opt;
        opt.command = command;
        opt.n = cli::parse_n_list(n);
        opt.alpha = alpha;
        opt.beta = beta;
        opt.h = h;
        if (digits > 0) opt.digits = digits;
        opt.jobs = jobs;
        cli::RunReport r;
        {
          py::gil_scoped_release release;
          r = cli::run(opt);
        }
        return r.to_json().dump();
      },
      py::arg("command"), py::arg("n"), py::arg("alpha") = "0", py::arg("beta") = "0", py::arg("h") = "1",
      py::arg("digits") = 0, py::arg("jobs") = 0, "The report of an hdet subcommand as a JSON string.");
}
