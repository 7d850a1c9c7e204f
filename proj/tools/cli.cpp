#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "dunkl/errors.hpp"
#include "dunkl/kernel.hpp"
#include "dunkl/parallel.hpp"
#include "dunkl/parameter.hpp"
#include "dunkl/polyalg.hpp"
#include "dunkl/recurrence.hpp"
#include "dunkl/sampling.hpp"
#include "dunkl/series.hpp"

namespace dunkl::cli {

namespace {

std::vector<double> parse_numbers(const std::string& text, const char* what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string item = text.substr(pos, end - pos);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    double v = 0.0;
    const char* first = item.data();
    const char* last = first + item.size();
    if (!item.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (item.empty() || ec != std::errc() || ptr != last || !std::isfinite(v))
      throw DomainError(std::string("cannot parse ") + what + " from '" + text + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

using Cell = std::variant<long long, double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_cell(const Cell& c) {
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::get<std::string>(c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  if (const auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? nlohmann::ordered_json(*d) : nullptr;
  if (const auto* b = std::get_if<bool>(&c)) return *b;
  return std::get<std::string>(c);
}

nlohmann::ordered_json job_meta(const JobSpec& job, const std::string& method, bool with_instance) {
  nlohmann::ordered_json meta;
  if (with_instance) {
    meta["n"] = job.n;
    meta["k"] = {{"re", job.k.real()}, {"im", job.k.imag()}};
    meta["x"] = {job.x.c0.real(), job.x.c1.real()};
    meta["y"] = {{"re", {job.y.c0.real(), job.y.c1.real()}}, {"im", {job.y.c0.imag(), job.y.c1.imag()}}};
  }
  meta["method"] = method;
  meta["tol"] = job.tol;
  meta["seed"] = job.seed;
  return meta;
}

void emit(std::ostream& out, const JobSpec& job, const nlohmann::ordered_json& meta, const Table& table) {
  if (job.format == Format::csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << '\n';
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["meta"] = meta;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r;
    for (std::size_t i = 0; i < row.size(); ++i) r[table.columns[i]] = json_cell(row[i]);
    doc["rows"].push_back(r);
  }
  out << doc.dump(2) << '\n';
}

void require_method(const std::string& method, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (method == a) return;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw DomainError("unknown method '" + method + "' (expected one of: " + list + ")");
}

double rel_diff(cplx a, cplx b, double floor = 0.0) {
  const double scale = std::max({std::abs(a), std::abs(b), floor});
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// ---------------------------------------------------------------- em / phi / kernel

std::vector<cplx> em_values(const JobSpec& job, const std::string& method) {
  const DihedralGroup group(job.n);
  const ParameterK param(job.n, job.k);
  if (job.m_max < 0) throw DomainError("m-max must be nonnegative");
  if (method == "recurrence") return em_sequence(group, param, job.x, job.y, job.m_max);
  if (method == "oracle") return oracle_em_sequence(group, param, job.x, job.y, job.m_max);
  const OrbitPairings orbit = orbit_pairings(group, job.x, job.y);
  if (method == "genseries") {
    param.require_series();
    const SeriesData series = a_coeffs(param, orbit, std::max(job.m_max, 1));
    std::vector<cplx> out;
    for (int m = 0; m <= job.m_max; ++m) out.push_back(em_genseries(param, orbit, orbit.xy(), series, m));
    return out;
  }
  if (!is_sigma_invariant(orbit)) throw DomainError("closed forms need x or y to be invariant under sigma");
  return em_closed_sigma_sequence(param, orbit, job.m_max);
}

int cmd_em(const JobSpec& job, std::ostream& out) {
  const std::string method = job.method.empty() ? "recurrence" : job.method;
  require_method(method, {"recurrence", "genseries", "oracle", "sigma-closed"});
  const std::vector<cplx> values = em_values(job, method);
  Table t{{"m", "re", "im"}, {}};
  for (std::size_t m = 0; m < values.size(); ++m)
    t.rows.push_back({static_cast<long long>(m), values[m].real(), values[m].imag()});
  emit(out, job, job_meta(job, method, true), t);
  return kOk;
}

int cmd_phi(const JobSpec& job, std::ostream& out) {
  const std::string method = job.method.empty() ? "series" : job.method;
  require_method(method, {"series", "sigma-closed"});
  if (job.order < 0) throw DomainError("order must be nonnegative");
  const DihedralGroup group(job.n);
  const ParameterK param(job.n, job.k);
  param.require_series();
  const OrbitPairings orbit = orbit_pairings(group, job.x, job.y);
  std::vector<cplx> phi;
  if (method == "series") {
    phi = a_coeffs(param, orbit, job.order).phi;
  } else {
    if (!is_sigma_invariant(orbit)) throw DomainError("closed forms need x or y to be invariant under sigma");
    phi = phi_sigma_coefficients(param, orbit, job.order);
  }
  Table t{{"p", "re", "im"}, {}};
  for (std::size_t p = 0; p < phi.size(); ++p) t.rows.push_back({static_cast<long long>(p), phi[p].real(), phi[p].imag()});
  emit(out, job, job_meta(job, method, true), t);
  return kOk;
}

KernelResult kernel_value(const JobSpec& job, const std::string& method) {
  const DihedralGroup group(job.n);
  const ParameterK param(job.n, job.k);
  if (method == "integral") return ek_integral(group, param, job.x, job.y, job.tol);
  if (method == "sigma-closed") return ek_sigma_closed(group, param, job.x, job.y, job.tol);
  return ek_series(group, param, job.x, job.y, job.tol);
}

int cmd_kernel(const JobSpec& job, std::ostream& out) {
  const std::string method = job.method.empty() ? "series" : job.method;
  require_method(method, {"series", "integral", "sigma-closed"});
  const KernelResult r = kernel_value(job, method);
  Table t{{"value_re", "value_im", "method", "terms_used", "nodes_used", "tail_estimate"}, {}};
  t.rows.push_back({r.value.real(), r.value.imag(), std::string(to_string(r.method)),
                    static_cast<long long>(r.terms_used), static_cast<long long>(r.nodes_used), r.tail_estimate});
  emit(out, job, job_meta(job, method, true), t);
  return kOk;
}

// ---------------------------------------------------------------- bounds

int cmd_bounds(const JobSpec& job, std::ostream& out, std::ostream& err) {
  if (job.nu < 0) throw DomainError("nu must be a nonnegative integer");
  const DihedralGroup group(job.n);
  const ParameterK param(job.n, job.k);
  const EmBoundReport em = check_em_bound(group, param, job.x, job.y, job.m_max, job.nu);
  std::vector<std::pair<PlanePoint, PlanePoint>> grid;
  for (int i = 0; i <= 12; ++i) grid.emplace_back((0.25 * i) * job.x, job.y);
  const EkBoundReport ek = check_ek_bound(group, param, grid, job.nu);

  Table t{{"check", "ratio", "limit", "argmax", "holds"}, {}};
  t.rows.push_back({std::string("em_bound"), em.max_ratio, 1.0, static_cast<long long>(em.argmax), em.holds()});
  t.rows.push_back({std::string("ek_bound"), ek.sup_ratio, ek.constant,
                    static_cast<long long>(std::max_element(ek.ratios.begin(), ek.ratios.end()) - ek.ratios.begin()),
                    ek.holds()});
  nlohmann::ordered_json meta = job_meta(job, "bounds", true);
  meta["nu"] = job.nu;
  meta["m_max"] = job.m_max;
  emit(out, job, meta, t);
  if (!em.holds()) err << "bounds: component bound ratio " << format_double(em.max_ratio) << " exceeds 1 at m = " << em.argmax << '\n';
  if (!ek.holds()) err << "bounds: kernel ratio " << format_double(ek.sup_ratio) << " exceeds the constant " << format_double(ek.constant) << '\n';
  return em.holds() && ek.holds() ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- crosscheck

constexpr int kOracleMaxDegree = 20;
constexpr int kScalarStepMaxDegree = 9;

enum Pair { kRecGen, kRecOracle, kRecScalar, kRecSigma, kSeriesIntegral, kSeriesSigma, kPairCount };

const char* pair_name(int p) {
  static const char* names[kPairCount] = {"recurrence-genseries", "recurrence-oracle",  "recurrence-scalar",
                                          "recurrence-sigma_closed", "series-integral", "series-sigma_closed"};
  return names[p];
}

struct ValueRow {
  std::string method;
  std::string quantity;
  cplx value;
};

struct InstanceReport {
  std::array<double, kPairCount> rel{};
  std::array<bool, kPairCount> used{};
  std::vector<ValueRow> values;
};

void record(InstanceReport& r, int pair, double d) {
  r.used[pair] = true;
  r.rel[pair] = std::max(r.rel[pair], d);
}

InstanceReport check_instance(const Instance& in, int m_max, bool keep_values) {
  const DihedralGroup group(in.n);
  const ParameterK param(in.n, in.k);
  const OrbitPairings orbit = orbit_pairings(group, in.x, in.y);
  InstanceReport r;
  auto keep = [&](const char* method, const std::vector<cplx>& seq) {
    if (!keep_values) return;
    for (std::size_t m = 0; m < seq.size(); ++m) r.values.push_back({method, "E_" + std::to_string(m), seq[m]});
  };

  const std::vector<cplx> rec = em_sequence(group, param, in.x, in.y, m_max);
  keep("recurrence", rec);
  // natural size a^m / |(1+gamma)_m| of E_m, so that vanishing components are compared against it
  std::vector<double> size(rec.size(), 1.0);
  for (std::size_t m = 1; m < size.size(); ++m)
    size[m] = size[m - 1] * orbit.a_bound / std::abs(static_cast<double>(m) + param.gamma());
  if (!param.is_zero()) {
    const SeriesData series = a_coeffs(param, orbit, std::max(m_max, 1));
    std::vector<cplx> gen;
    for (int m = 0; m <= m_max; ++m) gen.push_back(em_genseries(param, orbit, orbit.xy(), series, m));
    keep("genseries", gen);
    for (int m = 0; m <= m_max; ++m) record(r, kRecGen, rel_diff(rec[m], gen[m], size[m]));
  }
  const std::vector<cplx> oracle = oracle_em_sequence(group, param, in.x, in.y, std::min(m_max, kOracleMaxDegree));
  keep("oracle", oracle);
  for (std::size_t m = 0; m < oracle.size(); ++m) record(r, kRecOracle, rel_diff(rec[m], oracle[m], size[m]));
  // the scalar relation rebuilds E_{m+1} from degree-m components at the orbit points
  std::vector<cplx> scalar{rec[0]};
  for (int m = 0; m < std::min(m_max, kScalarStepMaxDegree); ++m) scalar.push_back(em_scalar_step(group, param, in.x, in.y, m));
  keep("scalar-step", scalar);
  for (std::size_t m = 1; m < scalar.size(); ++m) record(r, kRecScalar, rel_diff(rec[m], scalar[m], size[m]));
  const bool sigma = is_sigma_invariant(orbit);
  if (sigma) {
    const std::vector<cplx> closed = em_closed_sigma_sequence(param, orbit, m_max);
    keep("sigma-closed", closed);
    for (int m = 0; m <= m_max; ++m) record(r, kRecSigma, rel_diff(rec[m], closed[m], size[m]));
  }

  const cplx series = ek_series(group, param, in.x, in.y, 1e-14).value;
  if (keep_values) r.values.push_back({"series", "E_k", series});
  if (param.gamma().real() > 0.0) {
    const cplx integral = ek_integral(group, param, in.x, in.y, 1e-11).value;
    if (keep_values) r.values.push_back({"integral", "E_k", integral});
    record(r, kSeriesIntegral, rel_diff(series, integral));
  }
  if (sigma) {
    const cplx closed = ek_sigma_closed(group, param, in.x, in.y, 1e-14).value;
    if (keep_values) r.values.push_back({"sigma-closed", "E_k", closed});
    record(r, kSeriesSigma, rel_diff(series, closed));
  }
  return r;
}

struct PairSummary {
  long long compared = 0;
  double max_rel = 0.0;
  long long worst = -1;
};

int report_pairs(const std::array<PairSummary, kPairCount>& pairs, double tol, std::ostream& err) {
  int code = kOk;
  for (int p = 0; p < kPairCount; ++p) {
    if (pairs[p].compared > 0 && !(pairs[p].max_rel <= tol)) {
      err << "crosscheck: " << pair_name(p) << " max relative discrepancy " << format_double(pairs[p].max_rel)
          << " exceeds tol " << format_double(tol) << " (sample " << pairs[p].worst << ")\n";
      code = kCheckFailed;
    }
  }
  return code;
}

int cmd_crosscheck(const JobSpec& job, std::ostream& out, std::ostream& err) {
  if (job.m_max < 0) throw DomainError("m-max must be nonnegative");
  if (job.m_max > kMaxUnscaledDegree)
    throw RangeError("crosscheck compares components up to degree " + std::to_string(kMaxUnscaledDegree));
  if (job.has_instance) {
    const Instance in{job.n, job.k, job.x, job.y};
    const InstanceReport r = check_instance(in, job.m_max, true);
    Table t{{"method", "quantity", "re", "im"}, {}};
    for (const ValueRow& v : r.values) t.rows.push_back({v.method, v.quantity, v.value.real(), v.value.imag()});
    emit(out, job, job_meta(job, "crosscheck", true), t);
    std::array<PairSummary, kPairCount> pairs{};
    for (int p = 0; p < kPairCount; ++p)
      if (r.used[p]) pairs[p] = {1, r.rel[p], 0};
    return report_pairs(pairs, job.tol, err);
  }

  if (job.samples < 1) throw DomainError("samples must be positive");
  InstanceSampler sampler(job.seed);
  std::vector<Instance> instances;
  for (int i = 0; i < job.samples; ++i) instances.push_back(sampler.next());
  const std::vector<InstanceReport> reports = parallel_map<InstanceReport>(
      instances.size(), [&](std::size_t i) { return check_instance(instances[i], job.m_max, false); });

  std::array<PairSummary, kPairCount> pairs{};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    for (int p = 0; p < kPairCount; ++p) {
      if (!reports[i].used[p]) continue;
      ++pairs[p].compared;
      if (pairs[p].worst < 0 || reports[i].rel[p] > pairs[p].max_rel) {
        pairs[p].max_rel = reports[i].rel[p];
        pairs[p].worst = static_cast<long long>(i);
      }
    }
  }
  Table t{{"pair", "compared", "max_rel", "worst_sample"}, {}};
  for (int p = 0; p < kPairCount; ++p)
    t.rows.push_back({std::string(pair_name(p)), pairs[p].compared, pairs[p].max_rel, pairs[p].worst});
  nlohmann::ordered_json meta = job_meta(job, "crosscheck", false);
  meta["samples"] = job.samples;
  meta["m_max"] = job.m_max;
  emit(out, job, meta, t);
  return report_pairs(pairs, job.tol, err);
}

// ---------------------------------------------------------------- parsing

struct RawOptions {
  std::string k, x, y, format = "csv";
  CLI::Option* n_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* x_opt = nullptr;
  CLI::Option* y_opt = nullptr;
};

void add_common(CLI::App* sub, JobSpec& job, RawOptions& raw) {
  raw.n_opt = sub->add_option("--n", job.n, "dihedral order n >= 2");
  raw.k_opt = sub->add_option("--k", raw.k, "multiplicity k as re or re,im");
  raw.x_opt = sub->add_option("--x", raw.x, "real point a,b");
  raw.y_opt = sub->add_option("--y", raw.y, "point a,b or a,b,c,d meaning (a+ic, b+id)");
  sub->add_option("--format", raw.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

void finish(JobSpec& job, const RawOptions& raw) {
  if (!raw.k.empty()) job.k = parse_complex(raw.k);
  if (!raw.x.empty()) job.x = parse_real_point(raw.x);
  if (!raw.y.empty()) job.y = parse_point(raw.y);
  job.format = raw.format == "json" ? Format::json : Format::csv;
  job.has_instance = raw.n_opt->count() && raw.k_opt->count() && raw.x_opt->count() && raw.y_opt->count();
}

}  // namespace

cplx parse_complex(const std::string& text) {
  const std::vector<double> v = parse_numbers(text, "a complex number");
  if (v.size() == 1) return {v[0], 0.0};
  if (v.size() == 2) return {v[0], v[1]};
  throw DomainError("a complex number is 're' or 're,im', got '" + text + "'");
}

PlanePoint parse_real_point(const std::string& text) {
  const std::vector<double> v = parse_numbers(text, "a real point");
  if (v.size() != 2) throw DomainError("a real point is 'a,b', got '" + text + "'");
  return {v[0], v[1]};
}

PlanePoint parse_point(const std::string& text) {
  const std::vector<double> v = parse_numbers(text, "a point");
  if (v.size() == 2) return {v[0], v[1]};
  if (v.size() == 4) return {cplx(v[0], v[2]), cplx(v[1], v[3])};
  throw DomainError("a point is 'a,b' or 'a,b,c,d', got '" + text + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dunkl kernel of the dihedral groups: components, kernel values and checks", "dunkl"};
  app.require_subcommand(1);

  JobSpec em_job, kernel_job, phi_job, bounds_job, cross_job;
  RawOptions em_raw, kernel_raw, phi_raw, bounds_raw, cross_raw;

  CLI::App* em = app.add_subcommand("em", "homogeneous components E_0..E_m");
  add_common(em, em_job, em_raw);
  em->add_option("--m-max", em_job.m_max, "largest degree");
  em->add_option("--method", em_job.method, "recurrence | genseries | oracle | sigma-closed");

  CLI::App* kernel = app.add_subcommand("kernel", "value of E_k(x, y)");
  add_common(kernel, kernel_job, kernel_raw);
  kernel->add_option("--tol", kernel_job.tol, "target accuracy");
  kernel->add_option("--method", kernel_job.method, "series | integral | sigma-closed");

  CLI::App* phi = app.add_subcommand("phi", "Taylor coefficients of the generating function");
  add_common(phi, phi_job, phi_raw);
  phi->add_option("--order", phi_job.order, "truncation order");
  phi->add_option("--method", phi_job.method, "series | sigma-closed");

  bounds_job.m_max = 60;
  CLI::App* bounds = app.add_subcommand("bounds", "growth bounds for E_m and E_k");
  add_common(bounds, bounds_job, bounds_raw);
  bounds->add_option("--m-max", bounds_job.m_max, "largest degree for the component bound");
  bounds->add_option("--nu", bounds_job.nu, "integer nu with Re(gamma) > -nu");

  cross_job.tol = 1e-8;
  cross_job.m_max = 30;
  CLI::App* cross = app.add_subcommand("crosscheck", "compare all applicable methods");
  add_common(cross, cross_job, cross_raw);
  cross->add_option("--m-max", cross_job.m_max, "largest degree compared");
  cross->add_option("--tol", cross_job.tol, "largest accepted relative discrepancy");
  cross->add_option("--seed", cross_job.seed, "seed of the instance generator");
  cross->add_option("--samples", cross_job.samples, "number of random instances");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (em->parsed()) {
      finish(em_job, em_raw);
      return cmd_em(em_job, out);
    }
    if (kernel->parsed()) {
      finish(kernel_job, kernel_raw);
      return cmd_kernel(kernel_job, out);
    }
    if (phi->parsed()) {
      finish(phi_job, phi_raw);
      return cmd_phi(phi_job, out);
    }
    if (bounds->parsed()) {
      finish(bounds_job, bounds_raw);
      return cmd_bounds(bounds_job, out, err);
    }
    finish(cross_job, cross_raw);
    if (!cross_job.has_instance && (cross_raw.n_opt->count() || cross_raw.k_opt->count() ||
                                    cross_raw.x_opt->count() || cross_raw.y_opt->count()))
      throw DomainError("a single-instance crosscheck needs all of --n, --k, --x and --y");
    return cmd_crosscheck(cross_job, out, err);
  } catch (const Error& e) {
    err << "error[" << to_string(e.kind()) << "]: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::domain:
      case ErrorKind::range:
        return kUsage;
      case ErrorKind::convergence:
        return kNoConvergence;
      case ErrorKind::consistency:
        return kCheckFailed;
    }
  }
  return kCheckFailed;
}

}  // namespace dunkl::cli
