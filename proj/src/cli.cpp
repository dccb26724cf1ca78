#include "hdet/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "hdet/coulomb.hpp"
#include "hdet/errors.hpp"
#include "hdet/hankel.hpp"
#include "hdet/jacobi.hpp"
#include "hdet/linstat.hpp"
#include "hdet/perturbation.hpp"

#ifndef HDET_VERSION
#define HDET_VERSION "unknown"
#endif

namespace hdet::cli {

namespace {

using json = nlohmann::ordered_json;

std::string dec(const BigReal& x, int digits) { return x.to_string(digits); }

unsigned parse_unsigned(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("--n: expected a positive integer, got '" + s + "'");
  unsigned long v = std::stoul(s);
  if (v == 0 || v > 100000) throw UsageError("--n: value out of range: " + s);
  return static_cast<unsigned>(v);
}

struct Outcome {
  Row row;
  int code = ok;
};

// Runs f over the n values on a small worker pool; rows come back in the
// order of ns.
template <class F>
std::vector<Outcome> sweep(const std::vector<unsigned>& ns, unsigned jobs, F f) {
  std::vector<Outcome> out(ns.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < ns.size(); i = next++) {
      try {
        out[i] = f(ns[i]);
      } catch (const std::exception& e) {
        out[i].row = Row{{"n", ns[i]}, {"error", e.what()}};
        out[i].code = exit_code_for(e);
      }
    }
  };
  unsigned threads = jobs > 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(ns.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

JacobiParams params_of(const Options& opt) { return JacobiParams::parse(opt.alpha, opt.beta); }

int digits_for(const Options& opt, unsigned n, RunReport& report) {
  const int policy = policy_digits(n);
  if (!opt.digits) return policy;
  if (*opt.digits < Precision::kMinDigits)
    throw UsageError("--digits must be at least " + std::to_string(Precision::kMinDigits));
  if (*opt.digits < policy)
    report.warnings.push_back("--digits " + std::to_string(*opt.digits) + " is below the policy value " +
                              std::to_string(policy) + " for n = " + std::to_string(n));
  return *opt.digits;
}

PerturbationFn validated_h(const Options& opt) {
  return validate_positive(parse_h(opt.h), kDefaultPositivitySamples, Precision(64));
}

RunReport start(const Options& opt, const char* name) {
  RunReport r;
  r.command = name;
  r.argv = opt.argv;
  r.parameters = json{{"n", opt.n}, {"alpha", opt.alpha}, {"beta", opt.beta}};
  if (opt.digits) r.parameters["digits"] = *opt.digits;
  else r.parameters["digits"] = "auto";
  if (opt.n.empty()) throw UsageError("--n is required");
  return r;
}

void finish(RunReport& r, std::vector<Outcome> outcomes) {
  for (auto& o : outcomes) {
    r.exit_code = std::max(r.exit_code, o.code);
    r.rows.push_back(std::move(o.row));
  }
}

// Precomputes per-n digits so warnings are emitted deterministically, in n
// order, before the concurrent sweep.
std::vector<int> plan_digits(const Options& opt, RunReport& r) {
  std::vector<int> d;
  for (unsigned n : opt.n) d.push_back(digits_for(opt, n, r));
  return d;
}

std::size_t index_of(const std::vector<unsigned>& ns, unsigned n) {
  return static_cast<std::size_t>(std::find(ns.begin(), ns.end(), n) - ns.begin());
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const PositivityError*>(&e)) return h_invalid;
  if (dynamic_cast<const PrecisionError*>(&e) || dynamic_cast<const ConvergenceError*>(&e)) return numeric;
  if (dynamic_cast<const UsageError*>(&e) || dynamic_cast<const DomainError*>(&e) ||
      dynamic_cast<const ValidityError*>(&e))
    return usage;
  return numeric;
}

std::vector<unsigned> parse_n_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw UsageError("--n: empty entry in '" + text + "'");
    const auto c1 = item.find(':');
    if (c1 == std::string::npos) {
      out.push_back(parse_unsigned(item));
      continue;
    }
    const auto c2 = item.find(':', c1 + 1);
    const unsigned a = parse_unsigned(item.substr(0, c1));
    const unsigned b = parse_unsigned(item.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1));
    const unsigned step = c2 == std::string::npos ? 1 : parse_unsigned(item.substr(c2 + 1));
    if (b < a) throw UsageError("--n: empty range '" + item + "'");
    for (unsigned v = a; v <= b; v += step) out.push_back(v);
  }
  if (out.empty()) throw UsageError("--n: no values given");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

nlohmann::ordered_json RunReport::to_json() const {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "hdet";
  j["version"] = HDET_VERSION;
  j["command"] = command;
  j["argv"] = argv;
  j["parameters"] = parameters;
  j["rows"] = rows;
  j["warnings"] = warnings;
  j["exit_code"] = exit_code;
  j["error"] = error ? json(*error) : json(nullptr);
  j["timing"] = json{{"elapsed_seconds", elapsed_seconds}};
  return j;
}

std::string RunReport::to_csv() const {
  std::vector<std::string> columns;
  for (const auto& row : rows)
    for (const auto& item : row.items())
      if (std::find(columns.begin(), columns.end(), item.key()) == columns.end()) columns.push_back(item.key());
  const auto field = [](const json& v) -> std::string {
    if (v.is_null()) return "";
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
      std::string q = "\"";
      for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
      return q + "\"";
    }
    return s;
  };
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) os << ",";
      auto it = row.find(columns[i]);
      if (it != row.end()) os << field(*it);
    }
    os << "\n";
  }
  return os.str();
}

RunReport cmd_exact(const Options& opt) {
  RunReport r = start(opt, "exact");
  const JacobiParams jp = params_of(opt);
  const std::vector<int> digits = plan_digits(opt, r);
  r.parameters["asymptotic_valid"] = jp.asymptotic_valid();
  finish(r, sweep(opt.n, opt.jobs, [&](unsigned n) {
    const int d = digits[index_of(opt.n, n)];
    const Precision p(d);
    const BigReal barnes = jacobi_logdet_exact(n, jp, p);
    BigReal norms(p);
    for (unsigned j = 0; j < n; ++j) norms += jacobi_log_hn(j, jp, p);
    const HankelResult ldl = perturbed_logdet(n, jp, PerturbationFn::one(), p);
    Row row{{"n", n}, {"digits", d}};
    row["logdet_barnes"] = dec(barnes, d);
    row["logdet_norms"] = dec(norms, d);
    row["logdet_ldl"] = dec(ldl.log_det, d);
    row["diff_barnes_norms"] = dec(barnes - norms, 6);
    row["diff_barnes_ldl"] = dec(barnes - ldl.log_det, 6);
    row["diff_norms_ldl"] = dec(norms - ldl.log_det, 6);
    row["ldl_error_bound"] = dec(ldl.error_bound, 6);
    row["asymptotic_valid"] = jp.asymptotic_valid();
    row["logdet_asym"] = jp.asymptotic_valid() ? json(dec(jacobi_logdet_asym(n, jp, p), d)) : json(nullptr);
    return Outcome{row, ok};
  }));
  return r;
}

RunReport cmd_compare(const Options& opt) {
  RunReport r = start(opt, "compare");
  const JacobiParams jp = params_of(opt);
  const PerturbationFn h = validated_h(opt);
  const std::vector<int> digits = plan_digits(opt, r);
  r.parameters["h"] = h.source();
  r.parameters["h_min_sampled"] = h.certificate()->min_value;
  r.parameters["quad_order"] = opt.quad_order ? json(*opt.quad_order) : json("n+32");
  r.parameters["cheb_m"] = opt.cheb_m ? json(*opt.cheb_m) : json("auto");
  r.parameters["asymptotic_valid"] = jp.asymptotic_valid();
  if (!jp.asymptotic_valid()) r.warnings.push_back("alpha or beta below -1/2: prediction columns are empty");
  if (opt.heine && opt.n.back() > 3) r.warnings.push_back("--heine applies to n <= 3 only");

  finish(r, sweep(opt.n, opt.jobs, [&](unsigned n) {
    const int d = digits[index_of(opt.n, n)];
    const Precision p(d);
    const Precision q = working_precision(n, p);
    const unsigned m = opt.quad_order.value_or(default_quad_order(n));
    const MomentSequence ms = h.is_identity() ? pure_moment_sequence(2 * n, jp, q)
                                              : perturbed_moment_sequence(2 * n, jp, h, m, q);
    const HankelResult ldl = hankel_logdet_ldl(ms, n, p);
    const HankelResult rec = hankel_logdet_recurrence(ms, n, jp, p);
    const BigReal pure = jacobi_logdet_exact(n, jp, p);
    const BigReal ratio = ldl.log_det - pure;
    const ChebExpansion ce = cheb_expand_log(h, p.plus(4), opt.cheb_m.value_or(0));
    const BigReal mean = mean_term(ce, n, jp, MeanForm::limit, p);

    Row row{{"n", n}, {"digits", d}, {"quad_order", m}, {"cheb_m", ce.degree()}};
    row["logdet_ldl"] = dec(ldl.log_det, d);
    row["logdet_recurrence"] = dec(rec.log_det, d);
    row["diff_methods"] = dec(ldl.log_det - rec.log_det, 6);
    row["error_bound"] = dec(ldl.error_bound, 6);
    row["logdet_pure"] = dec(pure, d);
    row["log_ratio"] = dec(ratio, d);
    row["mean_term"] = dec(mean, d);
    row["pv_estimate"] = dec(ratio - mean, d);
    if (jp.asymptotic_valid()) {
      const AsymptoticPrediction ap = assemble_prediction(n, jp, h, ce, p);
      row["prediction"] = dec(ap.total(), d);
      row["difference"] = dec(ldl.log_det - ap.total(), d);
      row["log_leading"] = dec(ap.log_leading, d);
      row["log_mean"] = dec(ap.log_mean, d);
      row["pv_part"] = dec(ap.log_C.pv_part, d);
      row["boundary_part"] = dec(ap.log_C.boundary_part, d);
      row["pure_constant_part"] = dec(ap.log_C.pure_constant_part, d);
      row["endpoint_correction"] = dec(ap.endpoint_correction, d);
      row["difference_corrected"] = dec(ldl.log_det - ap.corrected_total(), d);
    } else {
      for (const char* k : {"prediction", "difference", "log_leading", "log_mean", "pv_part", "boundary_part",
                            "pure_constant_part", "endpoint_correction", "difference_corrected"})
        row[k] = nullptr;
    }
    if (opt.heine) {
      if (n <= 3) {
        const BigReal avg = heine_average_small_n(n, jp, h, p);
        const BigReal det_ratio = exp(ratio);
        row["heine_average"] = dec(avg, d);
        row["determinant_ratio"] = dec(det_ratio, d);
        row["heine_difference"] = dec(avg - det_ratio, 6);
      } else {
        row["heine_average"] = nullptr;
        row["determinant_ratio"] = nullptr;
        row["heine_difference"] = nullptr;
      }
    }
    return Outcome{row, ok};
  }));
  return r;
}

RunReport cmd_fluid(const Options& opt) {
  RunReport r = start(opt, "fluid");
  const JacobiParams jp = params_of(opt);
  const std::vector<int> digits = plan_digits(opt, r);
  finish(r, sweep(opt.n, opt.jobs, [&](unsigned n) {
    const int d = digits[index_of(opt.n, n)];
    const Precision p(d);
    const SupportInterval si = support_endpoints(n, jp, p);
    const SupportInterval sp = support_endpoints(n, jp, p, EndpointForm::printed);
    const FluidRecurrence fr = fluid_recurrence(n, jp, p);
    const BigReal an(jacobi_alpha_n(n, jp), p), bn(jacobi_beta_n(n, jp), p);
    const long nn = n;
    Row row{{"n", n}, {"digits", d}};
    row["a_n"] = dec(si.a, d);
    row["b_n"] = dec(si.b, d);
    row["a_n_printed"] = dec(sp.a, d);
    row["b_n_printed"] = dec(sp.b, d);
    row["alpha_n"] = dec(an, d);
    row["beta_n"] = dec(bn, d);
    row["alpha_tilde"] = dec(fr.alpha_tilde, d);
    row["beta_tilde"] = dec(fr.beta_tilde, d);
    row["R_n"] = dec(fr.R, d);
    row["r_n"] = dec(fr.r, d);
    row["n3_alpha_dev"] = dec((fr.alpha_tilde - an) * (nn * nn * nn), d);
    row["n2_beta_dev"] = dec((fr.beta_tilde - bn) * (nn * nn), d);
    row["n2_one_plus_a"] = dec((si.a + 1L) * (nn * nn), d);
    row["n2_one_minus_b"] = dec((1L - si.b) * (nn * nn), d);
    row["n2_one_plus_a_printed"] = dec((sp.a + 1L) * (nn * nn), d);
    row["n2_one_minus_b_printed"] = dec((1L - sp.b) * (nn * nn), d);
    return Outcome{row, ok};
  }));
  return r;
}

RunReport cmd_density(const Options& opt) {
  RunReport r = start(opt, "density");
  const JacobiParams jp = params_of(opt);
  const PerturbationFn h = validated_h(opt);
  const std::vector<int> digits = plan_digits(opt, r);
  r.parameters["h"] = h.source();
  finish(r, sweep(opt.n, opt.jobs, [&](unsigned n) {
    const int d = digits[index_of(opt.n, n)];
    const Precision p(d);
    const SupportInterval si = support_endpoints(n, jp, p);
    const BigReal mass = density_mass(si, p);
    const BigReal centre = si.centre();
    const BigReal level(mpq_class(n) + jp.sum() / 2, p);
    const ChebExpansion ce = cheb_expand_log(h, p.plus(4), opt.cheb_m.value_or(0));
    const BigReal finite = mean_term(ce, n, jp, MeanForm::finite, p);
    const BigReal limit = mean_term(ce, n, jp, MeanForm::limit, p);
    Row row{{"n", n}, {"digits", d}};
    row["a_n"] = dec(si.a, d);
    row["b_n"] = dec(si.b, d);
    row["mass"] = dec(mass, d);
    row["mass_minus_n"] = dec(mass - static_cast<long>(n), 6);
    row["centre"] = dec(centre, d);
    row["sigma_at_centre"] = dec(equilibrium_density(centre, si, p), d);
    row["sigma_limit_at_centre"] = dec(level / (BigReal::pi(p) * sqrt(1L - centre * centre)), d);
    row["mean_finite"] = dec(finite, d);
    row["mean_limit"] = dec(limit, d);
    row["mean_difference"] = dec(finite - limit, 6);
    return Outcome{row, ok};
  }));
  return r;
}

RunReport cmd_heine(const Options& opt) {
  RunReport r = start(opt, "heine");
  const JacobiParams jp = params_of(opt);
  const PerturbationFn h = validated_h(opt);
  const std::vector<int> digits = plan_digits(opt, r);
  r.parameters["h"] = h.source();
  finish(r, sweep(opt.n, opt.jobs, [&](unsigned n) {
    if (n > 3) throw DomainError("heine: the n-fold quadrature is limited to n <= 3");
    const int d = digits[index_of(opt.n, n)];
    const Precision p(d);
    const BigReal avg = heine_average_small_n(n, jp, h, p, opt.quad_order.value_or(0));
    const BigReal ratio = exp(perturbed_logdet(n, jp, h, p).log_det - jacobi_logdet_exact(n, jp, p));
    Row row{{"n", n}, {"digits", d}};
    row["heine_average"] = dec(avg, d);
    row["determinant_ratio"] = dec(ratio, d);
    row["difference"] = dec(avg - ratio, 6);
    return Outcome{row, ok};
  }));
  return r;
}

RunReport run(const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport r;
  try {
    if (opt.command == "exact") r = cmd_exact(opt);
    else if (opt.command == "compare") r = cmd_compare(opt);
    else if (opt.command == "fluid") r = cmd_fluid(opt);
    else if (opt.command == "density") r = cmd_density(opt);
    else if (opt.command == "heine") r = cmd_heine(opt);
    else throw UsageError("unknown command '" + opt.command + "'");
  } catch (const std::exception& e) {
    r = RunReport{};
    r.command = opt.command;
    r.argv = opt.argv;
    r.parameters = json{{"n", opt.n}, {"alpha", opt.alpha}, {"beta", opt.beta}, {"h", opt.h}};
    r.error = e.what();
    r.exit_code = exit_code_for(e);
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace hdet::cli
